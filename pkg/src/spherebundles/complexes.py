"""Immutable pure simplicial complexes and their face-count arithmetic.

A complex is stored as a lexicographically sorted, duplicate-free tuple of
facets, each facet a sorted tuple of positive integer vertex labels.  Labels
are *not* required to be contiguous, which lets quotient and identification
maps compose without relabelling.  Every operation here is a pure function;
complexes are safe to share read-only between concurrent tasks.

Face enumeration works by expanding all subsets of each facet into a
deduplicating set.  That is quadratic-exponential in principle but complexes
at the scale handled here (facet size <= 9, a few hundred facets) stay tiny.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import (
    Disconnected,
    EmptyInput,
    LengthMismatch,
    MixedCardinality,
    NonPositiveLabel,
    NotAFace,
)


class Complex:
    """Pure (n-1)-dimensional simplicial complex with integer vertex labels.

    ``n`` is the facet cardinality, so the complex has dimension ``n - 1``.
    Duplicate facets in the input are merged silently: quotient
    constructions naturally produce coincident facets that must collapse to
    one.  Instances are immutable; derived data (faces, adjacency) is cached
    lazily.
    """

    __slots__ = ("_facets", "_n", "_vertices", "_faces", "_adjacency")

    def __init__(self, facets):
        canon = sorted({tuple(sorted(f)) for f in facets})
        widths = {len(f) for f in canon}
        if len(widths) > 1:
            raise MixedCardinality(f"facet sizes {sorted(widths)} are mixed")
        for f in canon:
            if len(set(f)) != len(f):
                raise ValueError(f"facet {f} repeats a vertex")
            for v in f:
                if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                    raise NonPositiveLabel(f"vertex label {v!r} is not a positive integer")
        self._facets = tuple(canon)
        self._n = len(canon[0]) if canon else 0
        self._vertices = frozenset(v for f in canon for v in f)
        self._faces = None
        self._adjacency = None

    @property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        return self._facets

    @property
    def n(self) -> int:
        """Facet cardinality (dimension + 1)."""
        return self._n

    @property
    def dim(self) -> int:
        return self._n - 1

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def is_empty(self) -> bool:
        return not self._facets

    def faces(self) -> frozenset[tuple[int, ...]]:
        """All nonempty faces, as sorted tuples (the empty face is implicit)."""
        if self._faces is None:
            out = set()
            for f in self._facets:
                for k in range(1, len(f) + 1):
                    out.update(combinations(f, k))
            self._faces = frozenset(out)
        return self._faces

    def has_face(self, face) -> bool:
        t = tuple(sorted(face))
        return bool(t) and t in self.faces()

    def edges(self) -> set[tuple[int, int]]:
        return {f for f in self.faces() if len(f) == 2}

    def adjacency(self) -> dict[int, set[int]]:
        if self._adjacency is None:
            adj: dict[int, set[int]] = {v: set() for v in self._vertices}
            for f in self._facets:
                for a, b in combinations(f, 2):
                    adj[a].add(b)
                    adj[b].add(a)
            self._adjacency = adj
        return self._adjacency

    def relabeled(self, mapping: dict[int, int]) -> "Complex":
        """Apply a vertex relabelling (identity outside ``mapping``)."""
        return Complex([tuple(mapping.get(v, v) for v in f) for f in self._facets])

    def __eq__(self, other):
        return isinstance(other, Complex) and self._facets == other._facets

    def __hash__(self):
        return hash(self._facets)

    def __repr__(self):
        return f"Complex(n={self._n}, vertices={self.num_vertices}, facets={len(self._facets)})"


@dataclass(frozen=True)
class FVector:
    """Face counts (f_{-1}, f_0, ..., f_{n-1}) with the conventional f_{-1} = 1."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries or self.entries[0] != 1:
            raise ValueError("f-vector must start with f_{-1} = 1")

    def f(self, i: int) -> int:
        """f_i, for i from -1 to n-1."""
        return self.entries[i + 1]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


@dataclass(frozen=True)
class HVector:
    """Entries h_0..h_n of the h-vector; h_0 = 1, later entries may be negative."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries or self.entries[0] != 1:
            raise ValueError("h-vector must start with h_0 = 1")

    def h(self, i: int) -> int:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


@dataclass(frozen=True)
class GVector:
    """Successive differences g_i = h_i - h_{i-1} for i <= floor(n/2); g_0 = 1."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries or self.entries[0] != 1:
            raise ValueError("g-vector must start with g_0 = 1")

    def g(self, i: int) -> int:
        return self.entries[i]

    @property
    def g2(self) -> int:
        return self.entries[2]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


def from_facets(facet_list) -> Complex:
    """Build a canonical complex from an iterable of vertex sets.

    Facets are sorted and deduplicated.  Raises EmptyInput, MixedCardinality
    or NonPositiveLabel on malformed input.
    """
    facet_list = list(facet_list)
    if not facet_list:
        raise EmptyInput("no facets given")
    return Complex(facet_list)


def f_vector(c: Complex) -> FVector:
    """Count faces per dimension by subset enumeration with deduplication."""
    counts = [0] * c.n
    for face in c.faces():
        counts[len(face) - 1] += 1
    return FVector((1, *counts))


def h_from_f(f: FVector, n: int) -> HVector:
    """Alternating-sum transform: h_i = sum_j (-1)^(i-j) C(n-j, n-i) f_{j-1}."""
    if len(f) != n + 1:
        raise LengthMismatch(f"f-vector has {len(f)} entries, expected {n + 1}")
    ent = tuple(
        sum((-1) ** (i - j) * comb(n - j, n - i) * f[j] for j in range(i + 1))
        for i in range(n + 1)
    )
    return HVector(ent)


def f_from_h(h: HVector, n: int) -> FVector:
    """Inverse transform: f_{i-1} = sum_j C(n-j, n-i) h_j (nonnegative weights)."""
    if len(h) != n + 1:
        raise LengthMismatch(f"h-vector has {len(h)} entries, expected {n + 1}")
    ent = tuple(
        sum(comb(n - j, n - i) * h[j] for j in range(i + 1)) for i in range(n + 1)
    )
    return FVector(ent)


def g_vector(h: HVector) -> GVector:
    """g_i = h_i - h_{i-1} for i up to floor(n/2), where n = len(h) - 1."""
    n = len(h) - 1
    ent = [1]
    for i in range(1, n // 2 + 1):
        ent.append(h[i] - h[i - 1])
    return GVector(tuple(ent))


def euler_characteristic(c: Complex) -> int:
    f = f_vector(c)
    return sum((-1) ** i * f.f(i) for i in range(c.n))


def sphere_euler_characteristic(n: int) -> int:
    """Euler characteristic of S^(n-1): 0 for n even... 1 + (-1)^(n-1)."""
    return 1 + (-1) ** (n - 1)


def klee_residual(c: Complex) -> list[int]:
    """Residuals of the closed-manifold linear relations on the h-vector.

    Returns r_i = h_{n-i} - h_i - (-1)^i C(n,i) (chi - chi(S^{n-1})) for
    i = 0..n.  All entries vanish exactly when the relations hold; for a
    complex that is not a closed manifold some entry is generically nonzero.
    """
    n = c.n
    h = h_from_f(f_vector(c), n)
    defect = euler_characteristic(c) - sphere_euler_characteristic(n)
    return [h[n - i] - h[i] - (-1) ** i * comb(n, i) * defect for i in range(n + 1)]


def link(c: Complex, face) -> Complex:
    """Link of ``face``: all faces G disjoint from it with G + face a face of c.

    The link of a facet is the empty complex (no facets).
    """
    t = tuple(sorted(face))
    if not c.has_face(t):
        raise NotAFace(f"{t} is not a face")
    fs = set(t)
    out = []
    for F in c.facets:
        if fs.issubset(F):
            rest = tuple(v for v in F if v not in fs)
            if rest:
                out.append(rest)
    return Complex(out)


def star_facets(c: Complex, face) -> tuple[tuple[int, ...], ...]:
    """Facets containing ``face``."""
    fs = set(face)
    return tuple(F for F in c.facets if fs.issubset(F))


def induced_subcomplex(c: Complex, vertex_set) -> list[tuple[int, ...]]:
    """All faces of c contained in ``vertex_set``, sorted lexicographically."""
    s = set(vertex_set)
    if not s.issubset(c.vertices):
        raise NotAFace(f"{sorted(s - c.vertices)} are not vertices")
    out = set()
    for F in c.facets:
        inter = tuple(v for v in F if v in s)
        for k in range(1, len(inter) + 1):
            out.update(combinations(inter, k))
    return sorted(out, key=lambda f: (len(f), f))


def graph_distance(c: Complex, u: int, v: int) -> int:
    """BFS distance between two vertices in the 1-skeleton."""
    if u not in c.vertices:
        raise NotAFace(f"{u} is not a vertex")
    if v not in c.vertices:
        raise NotAFace(f"{v} is not a vertex")
    if u == v:
        return 0
    adj = c.adjacency()
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == v:
                    return dist[y]
                queue.append(y)
    raise Disconnected(f"no edge path from {u} to {v}")


@dataclass(frozen=True)
class PseudomanifoldReport:
    """Outcome of the pseudomanifold checks, with the first counterexample."""

    pure: bool
    ridges_ok: bool
    connected: bool
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.pure and self.ridges_ok and self.connected


def is_pseudomanifold(c: Complex) -> PseudomanifoldReport:
    """Check purity, ridge valence two, and facet-adjacency connectivity."""
    if c.is_empty:
        return PseudomanifoldReport(False, False, False, "empty complex")
    # purity holds by construction (uniform facet cardinality); every vertex
    # lies in a facet by construction as well
    ridge_to_facets: dict[tuple[int, ...], list[int]] = {}
    for idx, F in enumerate(c.facets):
        for ridge in combinations(F, c.n - 1):
            ridge_to_facets.setdefault(ridge, []).append(idx)
    for ridge, incident in ridge_to_facets.items():
        if len(incident) != 2:
            return PseudomanifoldReport(
                True, False, False,
                f"ridge {ridge} lies in {len(incident)} facets",
            )
    # facet-adjacency connectivity via BFS over shared ridges
    seen = {0}
    queue = deque([0])
    neighbors: dict[int, set[int]] = {i: set() for i in range(len(c.facets))}
    for a, b in ridge_to_facets.values():
        neighbors[a].add(b)
        neighbors[b].add(a)
    while queue:
        i = queue.popleft()
        for j in neighbors[i]:
            if j not in seen:
                seen.add(j)
                queue.append(j)
    if len(seen) != len(c.facets):
        return PseudomanifoldReport(
            True, True, False,
            f"facet-adjacency graph has >= 2 components ({len(seen)} of {len(c.facets)} reachable)",
        )
    return PseudomanifoldReport(True, True, True)
