"""Handle addition on stacked spheres and the bundle triangulations it yields.

Identifying two facets of a triangulated sphere (via a vertex pairing) and
removing the identified facet produces a triangulation of a sphere bundle
over the circle, provided every matched vertex pair is at edge-path distance
at least three.  Applied to a stacked sphere the result is an *identified
stacked sphere* (ISS); with the minimum vertex count 2n+1 it is a *minimal*
one (MISS), combinatorially the Kuehnel complex.  Which of the two bundles
appears is always computed from the quotient, never inferred from the
pairing's parity.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from math import comb

from .complexes import Complex, graph_distance, is_pseudomanifold
from .errors import (
    AlreadyOrientable,
    DistanceViolation,
    InfeasibleVertexCount,
    NonSimplicialQuotient,
    NotAFacet,
    NotPseudomanifold,
    NotTwoStacks,
    PairingNotOnTops,
)
from .stacked import (
    SubdivisionStep,
    SubdivisionTrace,
    build_delta,
    stack_decomposition,
    subdivide_facet,
)
from . import verify


class BundleType(Enum):
    ORIENTABLE = "orientable"
    NONORIENTABLE = "nonorientable"

    @property
    def orientable(self) -> bool:
        return self is BundleType.ORIENTABLE


class CrossPairDistanceWarning(UserWarning):
    """A non-matched pair of identified-facet vertices sits at distance < 3.

    The construction only requires matched pairs to be far apart; short
    cross distances are legal but worth surfacing in reports.
    """


@dataclass(frozen=True)
class Pairing:
    """Ordered vertex pairs (u_i, w_i) between the two facets to identify."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        us = [u for u, _ in self.pairs]
        ws = [w for _, w in self.pairs]
        if len(set(us)) != len(us) or len(set(ws)) != len(ws):
            raise ValueError("pairing must be a bijection between two facets")

    @property
    def source_facet(self) -> tuple[int, ...]:
        return tuple(sorted(u for u, _ in self.pairs))

    @property
    def target_facet(self) -> tuple[int, ...]:
        return tuple(sorted(w for _, w in self.pairs))

    def substituted(self, old_pair, new_pair) -> "Pairing":
        return Pairing(tuple(new_pair if p == old_pair else p for p in self.pairs))


def cross_pair_flags(sphere: Complex, pairing: Pairing) -> list[str]:
    """Cross distances d(u_i, w_j), i != j, that fall below three."""
    flags = []
    for i, (u, _) in enumerate(pairing.pairs):
        for j, (_, w) in enumerate(pairing.pairs):
            if i != j and graph_distance(sphere, u, w) < 3:
                flags.append(f"cross pair ({u}, {w}) at distance {graph_distance(sphere, u, w)}")
    return flags


def handle_addition(sphere: Complex, pairing: Pairing) -> Complex:
    """Identify two facets of a sphere along ``pairing`` and drop the result facet.

    Each w_i is relabelled to u_i, coincident faces merge, and the single
    identified facet is removed.  Requires matched-pair distances >= 3 and a
    quotient map that is injective on faces apart from the intended merges;
    the result must come out a pseudomanifold.  Expected count changes
    (vertices -n, facets -2, edges -C(n,2)) are verified on every call.
    """
    n = sphere.n
    F1 = pairing.source_facet
    F2 = pairing.target_facet
    if F1 not in sphere.facets:
        raise NotAFacet(f"{F1} is not a facet of the sphere")
    if F2 not in sphere.facets:
        raise NotAFacet(f"{F2} is not a facet of the sphere")
    if len(pairing.pairs) != n:
        raise NotAFacet(f"pairing has {len(pairing.pairs)} pairs, facets have {n} vertices")
    for u, w in pairing.pairs:
        d = graph_distance(sphere, u, w)
        if d < 3:
            raise DistanceViolation(f"identified pair ({u}, {w}) at distance {d}")
    for flag in cross_pair_flags(sphere, pairing):
        warnings.warn(flag, CrossPairDistanceWarning, stacklevel=2)

    relabel = {w: u for u, w in pairing.pairs}
    image_of: dict[tuple[int, ...], tuple[int, ...]] = {}
    for face in sphere.faces():
        img = tuple(sorted(relabel.get(v, v) for v in face))
        if len(set(img)) != len(face):
            raise NonSimplicialQuotient(f"face {face} degenerates to {img}")
        image_of[face] = img
    preimages: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for face, img in image_of.items():
        preimages.setdefault(img, []).append(face)
    f1set, f2set = set(F1), set(F2)
    for img, pres in preimages.items():
        if len(pres) == 1:
            continue
        if len(pres) == 2:
            a, b = pres
            if (set(a) <= f1set and set(b) <= f2set) or (
                set(a) <= f2set and set(b) <= f1set
            ):
                continue  # the intended identification of matching subfaces
        raise NonSimplicialQuotient(f"faces {pres} all map to {img}")

    new_facets = {image_of[F] for F in sphere.facets}
    new_facets.discard(F1)  # the identified facet is removed from the quotient
    result = Complex(new_facets)

    if result.num_vertices != sphere.num_vertices - n:
        raise NonSimplicialQuotient("vertex count did not drop by n")
    if len(result.facets) != len(sphere.facets) - 2:
        raise NonSimplicialQuotient("facet count did not drop by 2")
    if len(result.edges()) != len(sphere.edges()) - comb(n, 2):
        raise NonSimplicialQuotient("edge count did not drop by C(n, 2)")
    pm = is_pseudomanifold(result)
    if not pm.ok:
        raise NonSimplicialQuotient(f"quotient is not a pseudomanifold: {pm.detail}")
    return result


def kuhnel_complex(n: int) -> Complex:
    """Kuehnel's cyclic triangulation on 2n+1 vertices (Csaszar torus at n=3).

    Facets are the n-subsets of the cyclic translates of {1, ..., n+1}
    modulo 2n+1, excluding the cyclically consecutive ones.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    m = 2 * n + 1

    def is_consecutive(subset: frozenset[int]) -> bool:
        for a in subset:
            if all(((a - 1 + t) % m) + 1 in subset for t in range(n)):
                return True
        return False

    facets = set()
    for t in range(m):
        window = [((t + j) % m) + 1 for j in range(n + 1)]
        for drop in window:
            cand = frozenset(v for v in window if v != drop)
            if not is_consecutive(cand):
                facets.add(tuple(sorted(cand)))
    return Complex(facets)


def standard_pairing(n: int, f0: int) -> Pairing:
    """Pairs (i, f0+i) identifying {1..n} with {f0+1..f0+n} in order."""
    return Pairing(tuple((i, f0 + i) for i in range(1, n + 1)))


def swapped_pairing(n: int, f0: int) -> Pairing:
    """The standard pairing with the last two partners exchanged."""
    pairs = [(i, f0 + i) for i in range(1, n - 1)]
    pairs.append((n - 1, f0 + n))
    pairs.append((n, f0 + n - 1))
    return Pairing(tuple(pairs))


VARIANTS = ("standard", "swapped")


def build_iss_variant(n: int, f0: int, variant: str) -> Complex:
    """Identified stacked sphere on f0 vertices from one explicit pairing.

    Takes the scheduled stacked sphere with f0+n vertices and applies the
    standard or swapped facet identification.  The result has n*f0 edges.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if f0 < 2 * n + 1:
        raise InfeasibleVertexCount(f"need f0 >= {2 * n + 1}, got {f0}")
    if variant == "swapped" and f0 < 2 * n + 2:
        raise InfeasibleVertexCount(f"swapped pairing needs f0 >= {2 * n + 2}, got {f0}")
    sphere, _ = build_delta(n, f0)
    pairing = standard_pairing(n, f0) if variant == "standard" else swapped_pairing(n, f0)
    return handle_addition(sphere, pairing)


def build_iss(n: int, f0: int, bundle: BundleType) -> Complex:
    """Identified stacked sphere on f0 vertices with the requested bundle type.

    Tries the standard pairing, then the swapped one, and keeps whichever
    quotient's computed orientability matches the request; raises
    InfeasibleVertexCount when neither does (e.g. the nonorientable bundle
    at the odd-n minimum f0 = 2n+1).
    """
    if f0 < 2 * n + 1:
        raise InfeasibleVertexCount(f"need f0 >= {2 * n + 1}, got {f0}")
    for variant in VARIANTS:
        if variant == "swapped" and f0 < 2 * n + 2:
            continue
        c = build_iss_variant(n, f0, variant)
        if verify.orientability(c) == bundle.orientable:
            return c
    raise InfeasibleVertexCount(
        f"no pairing on f0 = {f0} yields the {bundle.value} bundle (n = {n})"
    )


def build_miss(n: int) -> Complex:
    """Minimal identified stacked sphere: 2n+1 vertices, the Kuehnel complex."""
    sphere, _ = build_delta(n, 2 * n + 1)
    return handle_addition(sphere, standard_pairing(n, 2 * n + 1))


def two_stack_reduction(
    sphere: Complex, trace: SubdivisionTrace, pairing: Pairing
) -> tuple[Complex, SubdivisionTrace, Pairing]:
    """Trade a two-stack construction for a one-stack one with the same quotient.

    Undoes the last subdivision of the stack holding the pairing's source
    facet, then re-subdivides the partner facet, reusing the removed top
    vertex's label so the pairing update is a pure substitution.  The
    quotients before and after are combinatorially isomorphic and all
    matched distances stay >= 3.
    """
    decomp = stack_decomposition(trace)
    if len(decomp) != 2:
        raise NotTwoStacks(f"trace has {len(decomp)} stacks, need exactly 2")
    F1, F2 = pairing.source_facet, pairing.target_facet

    def owner(facet):
        for idx, st in enumerate(decomp.stacks):
            if facet in st.top_facets:
                return idx
        return None

    own1, own2 = owner(F1), owner(F2)
    if own1 is None or own2 is None or own1 == own2:
        raise PairingNotOnTops(
            "pairing must identify one facet from the top of each stack"
        )

    # undo the leaf subdivision of the stack holding the source facet
    undo_stack = decomp.stacks[own1]
    leaf_index = undo_stack.step_indices[-1]
    leaf = trace.steps[leaf_index]
    top_vertex = leaf.new_vertex
    restored = leaf.facet
    u_star = next(v for v in restored if v not in F1)

    reduced_facets = set(sphere.facets) - set(undo_stack.top_facets)
    reduced_facets.add(restored)
    reduced = Complex(reduced_facets)
    # re-subdivide the partner facet, reusing the freed label
    new_sphere = subdivide_facet(reduced, F2, top_vertex)

    new_steps = tuple(
        s for t, s in enumerate(trace.steps) if t != leaf_index
    ) + (SubdivisionStep(F2, top_vertex),)
    new_trace = SubdivisionTrace(trace.base, new_steps)

    # the undone top vertex sits on the source side of its pair; its partner
    # slot is taken over by the re-subdivision vertex (same label)
    old_pair = next(p for p in pairing.pairs if p[0] == top_vertex)
    new_pairing = pairing.substituted(old_pair, (u_star, top_vertex))

    for u, w in new_pairing.pairs:
        d = graph_distance(new_sphere, u, w)
        if d < 3:
            raise DistanceViolation(f"reduced pairing ({u}, {w}) at distance {d}")
    return new_sphere, new_trace, new_pairing


def orientation_double_cover(c: Complex) -> Complex:
    """Orientation double cover of a nonorientable pseudomanifold.

    Two copies of every facet are glued along every ridge, staying on the
    same sheet when the adjacency is orientation-preserving and swapping
    sheets otherwise.  Face counts double and the cover is orientable.
    Copies of vertex v are labelled v and v + max_label.
    """
    pm = is_pseudomanifold(c)
    if not pm.ok:
        raise NotPseudomanifold(pm.detail)
    if verify.orientability(c):
        raise AlreadyOrientable("complex is already orientable")

    parent: dict[tuple[int, int, int], tuple[int, int, int]] = {}

    def find(x):
        root = x
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for i, j, tau, ridge in verify.facet_adjacency_signs(c):
        for s in (0, 1):
            s2 = s if tau == 1 else 1 - s
            for v in ridge:
                union((v, i, s), (v, j, s2))

    shift = max(c.vertices)
    label: dict[tuple[int, int, int], int] = {}
    for v in sorted(c.vertices):
        roots = sorted(
            {find((v, i, s)) for i, F in enumerate(c.facets) if v in F for s in (0, 1)}
        )
        for which, root in enumerate(roots):
            label[root] = v + which * shift

    cover_facets = []
    for i, F in enumerate(c.facets):
        for s in (0, 1):
            cover_facets.append(tuple(sorted(label[find((v, i, s))] for v in F)))
    return Complex(cover_facets)
