"""Exact rational homology, orientability, manifold evidence, isomorphism.

All rank computations run over the integers with fraction-free elimination
(rows are rescaled and re-normalised by their gcd), so no floating point is
involved anywhere.  Boundary matrices are tiny but the covers of the larger
bundle triangulations reach a thousand faces per dimension, hence the sparse
row representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

import numpy as np

from .complexes import (
    Complex,
    PseudomanifoldReport,
    f_vector,
    is_pseudomanifold,
    link,
)
from .errors import NotPseudomanifold


# ---------------------------------------------------------------------------
# boundary matrices and Betti numbers
# ---------------------------------------------------------------------------

def faces_of_dimension(c: Complex, d: int) -> list[tuple[int, ...]]:
    """Sorted list of d-faces (vertex tuples of length d+1)."""
    return sorted(f for f in c.faces() if len(f) == d + 1)


def boundary_matrix(c: Complex, d: int) -> np.ndarray:
    """Matrix of the boundary operator from d-faces to (d-1)-faces.

    Rows are indexed by the sorted list of (d-1)-faces, columns by the
    sorted list of d-faces; signs follow the sorted-vertex orientation, so
    column F has entry (-1)^i in the row of F with its i-th vertex removed.
    For d = 0 the operator is zero (unreduced chain complex) and the matrix
    has zero rows.
    """
    if not 0 <= d <= c.n - 1:
        raise ValueError(f"d must be between 0 and {c.n - 1}")
    cols = faces_of_dimension(c, d)
    if d == 0:
        return np.zeros((0, len(cols)), dtype=np.int64)
    rows = faces_of_dimension(c, d - 1)
    row_index = {f: i for i, f in enumerate(rows)}
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, F in enumerate(cols):
        for i in range(len(F)):
            sub = F[:i] + F[i + 1 :]
            mat[row_index[sub], j] = (-1) ** i
    return mat


def _sparse_boundary(c: Complex, d: int) -> list[dict[int, int]]:
    """Columns of the d-th boundary matrix as sparse {row: value} dicts."""
    rows = faces_of_dimension(c, d - 1)
    row_index = {f: i for i, f in enumerate(rows)}
    out = []
    for F in faces_of_dimension(c, d):
        col = {}
        for i in range(len(F)):
            sub = F[:i] + F[i + 1 :]
            col[row_index[sub]] = (-1) ** i
        out.append(col)
    return out


def _normalise(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def exact_rank(sparse_rows: list[dict[int, int]]) -> int:
    """Rank over the rationals of an integer matrix given as sparse rows.

    Integer-preserving elimination: pivots of absolute value one are used
    directly; otherwise the target row is scaled by the pivot before
    subtraction and re-normalised by its gcd.  Exact for any input.
    """
    rows = {i: _normalise(dict(r)) for i, r in enumerate(sparse_rows) if r}
    col_rows: dict[int, set[int]] = {}
    for i, r in rows.items():
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    rank = 0
    while rows:
        # cheapest column, then the best pivot inside it
        col = min(col_rows, key=lambda c: (len(col_rows[c]), c))
        pivot_id = min(
            col_rows[col],
            key=lambda i: (abs(rows[i][col]) != 1, len(rows[i]), i),
        )
        pivot = rows.pop(pivot_id)
        p = pivot[col]
        for c in pivot:
            col_rows[c].discard(pivot_id)
            if not col_rows[c]:
                del col_rows[c]
        for i in list(col_rows.get(col, ())):
            row = rows[i]
            v = row[col]
            if v % p == 0:
                q = v // p
                new = {}
                for cc, pv in pivot.items():
                    nv = row.get(cc, 0) - q * pv
                    if nv:
                        new[cc] = nv
                for cc, rv in row.items():
                    if cc not in pivot:
                        new[cc] = rv
            else:
                new = {}
                for cc in set(row) | set(pivot):
                    nv = p * row.get(cc, 0) - v * pivot.get(cc, 0)
                    if nv:
                        new[cc] = nv
                new = _normalise(new)
            for cc in row:
                if cc not in new:
                    col_rows[cc].discard(i)
                    if not col_rows[cc]:
                        del col_rows[cc]
            for cc in new:
                if cc not in row:
                    col_rows.setdefault(cc, set()).add(i)
            if new:
                rows[i] = new
            else:
                del rows[i]
        rank += 1
    return rank


def betti_numbers(c: Complex) -> tuple[int, ...]:
    """Rational Betti numbers (beta_0, ..., beta_{n-1}), unreduced."""
    n = c.n
    counts = [len(faces_of_dimension(c, d)) for d in range(n)]
    ranks = [0] * (n + 1)  # rank of boundary_d; d = 0 and d = n are zero maps
    for d in range(1, n):
        ranks[d] = exact_rank(_sparse_boundary(c, d))
    return tuple(counts[d] - ranks[d] - ranks[d + 1] for d in range(n))


# ---------------------------------------------------------------------------
# orientability
# ---------------------------------------------------------------------------

def facet_adjacency_signs(c: Complex):
    """Ridge adjacencies (i, j, tau, ridge) with the relative orientation sign.

    tau = +1 when facets i and j can keep the same sign in a consistent
    orientation (their sorted-order orientations induce opposite signs on
    the shared ridge), -1 when one must flip.  Raises NotPseudomanifold if
    some ridge does not lie in exactly two facets.
    """
    ridge_map: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for idx, F in enumerate(c.facets):
        for pos in range(len(F)):
            ridge = F[:pos] + F[pos + 1 :]
            ridge_map.setdefault(ridge, []).append((idx, pos))
    out = []
    for ridge, incident in ridge_map.items():
        if len(incident) != 2:
            raise NotPseudomanifold(f"ridge {ridge} lies in {len(incident)} facets")
        (i, pi), (j, pj) = incident
        tau = -1 if (pi + pj) % 2 == 0 else 1
        out.append((i, j, tau, ridge))
    return out


def orientability(c: Complex) -> bool:
    """True iff a consistent +-1 assignment to facets exists over all ridges."""
    pm = is_pseudomanifold(c)
    if not pm.ok:
        raise NotPseudomanifold(pm.detail)
    adjacency: dict[int, list[tuple[int, int]]] = {i: [] for i in range(len(c.facets))}
    for i, j, tau, _ in facet_adjacency_signs(c):
        adjacency[i].append((j, tau))
        adjacency[j].append((i, tau))
    sign = {0: 1}
    stack = [0]
    while stack:
        i = stack.pop()
        for j, tau in adjacency[i]:
            want = sign[i] * tau
            if j in sign:
                if sign[j] != want:
                    return False
            else:
                sign[j] = want
                stack.append(j)
    return True


# ---------------------------------------------------------------------------
# closed-manifold evidence
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinkCheck:
    vertex: int
    betti: tuple[int, ...]
    orientable: bool
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class ManifoldEvidence:
    """Evidence (not proof) that a complex triangulates a closed manifold."""

    pseudomanifold: PseudomanifoldReport
    link_checks: tuple[LinkCheck, ...]

    @property
    def ok(self) -> bool:
        return self.pseudomanifold.ok and all(lc.ok for lc in self.link_checks)


def _sphere_betti(dim: int) -> tuple[int, ...]:
    # unreduced Betti vector of a (dim)-sphere, dim >= 1
    b = [0] * (dim + 1)
    b[0] = 1
    b[dim] += 1
    return tuple(b)


def manifold_evidence(c: Complex) -> ManifoldEvidence:
    """Pseudomanifold checks plus, per vertex, sphere homology of its link.

    Vertex links get their Betti vector compared against the sphere of
    dimension n-2 and an orientability check.  Passing is evidence of
    manifoldness only; full sphere recognition is out of reach.
    """
    pm = is_pseudomanifold(c)
    expected = _sphere_betti(c.n - 2)
    checks = []
    for v in sorted(c.vertices):
        lk = link(c, (v,))
        betti = betti_numbers(lk)
        try:
            ori = orientability(lk)
            detail = ""
        except NotPseudomanifold as exc:
            ori = False
            detail = str(exc)
        ok = betti == expected and ori
        if not ok and not detail:
            detail = f"link Betti {betti} vs sphere {expected}" if betti != expected else "link nonorientable"
        checks.append(LinkCheck(v, betti, ori, ok, detail))
    return ManifoldEvidence(pm, tuple(checks))


# ---------------------------------------------------------------------------
# combinatorial isomorphism
# ---------------------------------------------------------------------------

@dataclass
class IsoWitness:
    """Vertex bijection carrying the source facet list onto the target's."""

    mapping: dict[int, int]


def _vertex_signatures(c: Complex) -> dict[int, tuple]:
    sig = {}
    adj = c.adjacency()
    for v in sorted(c.vertices):
        lk = link(c, (v,))
        sig[v] = (len(adj[v]), len(lk.facets), tuple(f_vector(lk)))
    return sig


def are_isomorphic(a: Complex, b: Complex) -> IsoWitness | None:
    """Search for a facet-preserving vertex bijection.

    Backtracking over vertices with invariant pruning (degree, star size,
    link f-vector) plus partial-facet consistency: the image of any mapped
    part of a facet must be a face of the target.  Candidate order is
    deterministic, so witnesses are reproducible.
    """
    if a.n != b.n or a.num_vertices != b.num_vertices or len(a.facets) != len(b.facets):
        return None
    sig_a = _vertex_signatures(a)
    sig_b = _vertex_signatures(b)
    if sorted(sig_a.values()) != sorted(sig_b.values()):
        return None
    by_sig: dict[tuple, list[int]] = {}
    for v, s in sig_b.items():
        by_sig.setdefault(s, []).append(v)
    for vs in by_sig.values():
        vs.sort()

    adj_a = a.adjacency()
    adj_b = b.adjacency()
    b_faces = {frozenset(f) for f in b.faces()}
    b_facets = {frozenset(f) for f in b.facets}
    star_a: dict[int, list[tuple[int, ...]]] = {v: [] for v in a.vertices}
    for F in a.facets:
        for v in F:
            star_a[v].append(F)

    # order: rarest signature first, then stay connected to what is mapped
    sig_count = {s: len(vs) for s, vs in by_sig.items()}
    remaining = set(a.vertices)
    order = []
    first = min(remaining, key=lambda v: (sig_count[sig_a[v]], v))
    order.append(first)
    remaining.discard(first)
    chosen = {first}
    while remaining:
        nxt = min(
            remaining,
            key=lambda v: (-len(adj_a[v] & chosen), sig_count[sig_a[v]], v),
        )
        order.append(nxt)
        remaining.discard(nxt)
        chosen.add(nxt)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def consistent(v: int, w: int) -> bool:
        for u, x in mapping.items():
            if (u in adj_a[v]) != (w in adj_b[x]):
                return False
        for F in star_a[v]:
            img = {mapping[u] for u in F if u in mapping}
            img.add(w)
            if len(img) == len(F):
                if frozenset(img) not in b_facets:
                    return False
            elif frozenset(img) not in b_faces:
                return False
        return True

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in by_sig.get(sig_a[v], ()):
            if w in used or not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if extend(k + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    if not extend(0):
        return None
    image = {tuple(sorted(mapping[v] for v in F)) for F in a.facets}
    assert image == set(b.facets), "isomorphism witness failed verification"
    return IsoWitness(dict(mapping))
