"""Bistellar edge insertion and the full edge-filling schedule.

The only move used here replaces the ball made of the two facets {a} + B
(a in A) by the join of the edge A with the boundary of B, where |A| = 2 and
|B| = n - 1.  It keeps the vertex set and homeomorphism type and adds exactly
the edge A.  Replaying the scheduled sequence of such moves on a freshly
identified stacked sphere realises every edge count between n*f0 and the
complete graph.  Execution is self-verifying: flippability is re-checked
before every scheduled move instead of trusting the inductive argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .complexes import Complex
from .errors import NotFlippable, ScheduleInvalid, TargetOutOfRange
from .handles import BundleType


@dataclass(frozen=True)
class MoveSpec:
    """A bistellar move given by the edge-to-be A (|A| = 2) and B (|B| = n-1)."""

    a: tuple[int, int]
    b: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.a)) != 2:
            raise ValueError("A must contain two distinct vertices")
        if set(self.a) & set(self.b):
            raise ValueError("A and B must be disjoint")
        object.__setattr__(self, "a", tuple(sorted(self.a)))
        object.__setattr__(self, "b", tuple(sorted(set(self.b))))

    def to_text(self) -> str:
        return f"A: {' '.join(map(str, self.a))} | B: {' '.join(map(str, self.b))}"


@dataclass(frozen=True)
class FillSchedule:
    """Ordered moves adding one edge each; prefix t yields f1 = n*f0 + t."""

    variant: str
    moves: tuple[MoveSpec, ...]
    groups: tuple[int, ...]  # cyclic-gap group index per move

    def __len__(self):
        return len(self.moves)

    def to_text(self) -> str:
        return "\n".join(mv.to_text() for mv in self.moves) + ("\n" if self.moves else "")


def is_flippable(c: Complex, mv: MoveSpec) -> bool:
    """True iff the induced subcomplex on A + B is exactly the suspension of B.

    Equivalently: both facets {a} + B exist, and A is a non-edge (every
    subset of A + B missing one A-vertex then lies in one of the two cone
    facets, and no face contains both A-vertices).
    """
    if len(mv.b) != c.n - 1:
        return False
    if not set(mv.a) | set(mv.b) <= c.vertices:
        return False
    a1, a2 = mv.a
    if mv.a in c.faces():
        return False
    cone1 = tuple(sorted((a1,) + mv.b))
    cone2 = tuple(sorted((a2,) + mv.b))
    return cone1 in c.facets and cone2 in c.facets


def apply_move(c: Complex, mv: MoveSpec) -> Complex:
    """Replace the two cone facets {a} + B by the n-1 facets A + (B - {b})."""
    if not is_flippable(c, mv):
        raise NotFlippable(mv.to_text())
    a1, a2 = mv.a
    gone = {tuple(sorted((a1,) + mv.b)), tuple(sorted((a2,) + mv.b))}
    out = [F for F in c.facets if F not in gone]
    for b in mv.b:
        out.append(tuple(sorted(set(mv.a) | (set(mv.b) - {b}))))
    result = Complex(out)
    # the move must add exactly the edge A and keep the vertex set
    assert result.vertices == c.vertices
    assert len(result.edges()) == len(c.edges()) + 1
    return result


def _norm(x: int, f0: int) -> int:
    return (x - 1) % f0 + 1


def build_fill_schedule(c: Complex, n: int, f0: int, variant: str) -> FillSchedule:
    """Edge-filling schedule for an identified stacked sphere on f0 vertices.

    Non-edges {i, j} (cyclic distance > n) are grouped by increasing gap
    j - i = n + g; within a group i runs upward from 1.  The move for {i, j}
    uses B = {i+1, i+2} plus the n-3 vertices preceding j.  Moves whose pair
    is already an edge of the input are skipped, which handles the swapped
    identification; if {n-1, f0-1} is a non-edge (again the swapped case) an
    exceptional final move with B = {f0, 1, 3, ..., n-2, n} is appended.
    """
    if variant not in ("standard", "swapped"):
        raise ValueError("variant must be 'standard' or 'swapped'")
    if n < 4:
        # at n = 3 this move type can delete a vertex, so surfaces are out
        raise ValueError("edge filling needs n >= 4")
    edges = c.edges()
    moves = []
    groups = []
    for g in range(1, f0 - 2 * n):
        for i in range(1, f0 - n - g + 1):
            j = i + n + g
            a = tuple(sorted((_norm(i, f0), _norm(j, f0))))
            if a in edges:
                continue
            b = [_norm(i + 1, f0), _norm(i + 2, f0)]
            b += [_norm(j - n + 3 + t, f0) for t in range(n - 3)]
            moves.append(MoveSpec(a, tuple(b)))
            groups.append(g)
    leftover = tuple(sorted((n - 1, f0 - 1)))
    if leftover not in edges:
        b = [f0, 1] + list(range(3, n - 1)) + [n]
        moves.append(MoveSpec(leftover, tuple(b)))
        groups.append(f0 - 2 * n - 1)
    expected = comb(f0, 2) - len(edges)
    if len(moves) != expected:
        raise ScheduleInvalid(
            f"schedule has {len(moves)} moves but {expected} edges are missing"
        )
    return FillSchedule(variant, tuple(moves), tuple(groups))


def fill_to(c: Complex, schedule: FillSchedule, target_f1: int) -> Complex:
    """Replay the schedule prefix that brings the edge count to ``target_f1``."""
    f0 = c.num_vertices
    f1 = len(c.edges())
    if not f1 <= target_f1 <= comb(f0, 2):
        raise TargetOutOfRange(
            f"target f1 = {target_f1} outside [{f1}, {comb(f0, 2)}]"
        )
    steps = target_f1 - f1
    if steps > len(schedule.moves):
        raise TargetOutOfRange(
            f"schedule provides {len(schedule.moves)} moves, {steps} needed"
        )
    for idx in range(steps):
        mv = schedule.moves[idx]
        if not is_flippable(c, mv):
            raise ScheduleInvalid(f"move {idx} not flippable: {mv.to_text()}")
        c = apply_move(c, mv)
    return c


def feasible_region(k: int, f0: int, bundle: BundleType) -> tuple[int, int] | None:
    """Edge-count interval [(k+2) f0, C(f0, 2)] for S^k-bundles over S^1.

    The vertex minimum is 2k+5 when (k odd, orientable) or (k even,
    nonorientable), and 2k+6 otherwise; below it the answer is None.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    low = 2 * k + 5 if (k % 2 == 1) == bundle.orientable else 2 * k + 6
    if f0 < low:
        return None
    return ((k + 2) * f0, comb(f0, 2))
