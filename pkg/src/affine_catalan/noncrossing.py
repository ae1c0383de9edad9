"""Noncrossing partitions of the affine symmetric group.

An element lies below the Coxeter element in absolute order exactly when its
disjoint cycles are *elementary divisors* (one prescribed cycle per orbit)
whose orbits pairwise avoid the two interleaving patterns.  That membership
test is implemented directly; a breadth-first oracle over length-bounded
reflection products double-checks it through the defining length identity.

The bridge to arc diagrams: chains become finite divisors (up-part ascending,
then down-part descending) and the loop becomes the pseudo-cyclic divisor.
Composing with the cover-reflection arcs of a sortable order gives the
generalized bijection from sortable orders to noncrossing partitions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .core import (
    AffinePermutation,
    CoxeterElement,
    Reflection,
    ShiftedCycle,
    cycle_decomposition,
    cycles_as_perm,
    identity,
    residue,
)
from .arcs import Arc, ChainOrLoop, CyclicArcDiagram, build_diagram, chains_and_loops
from .tito import NotSortableTito, Tito, is_c_sortable_tito, maximal_descending_chains

class SpanTooWide(ValueError):
    """An elementary divisor part must fit inside one period."""


class EmptySide(ValueError):
    """A pseudo-cyclic divisor needs points on both sides."""


class NotNoncrossing(ValueError):
    pass


class BoundTooSmall(ValueError):
    """The oracle's reflection pool cannot reach the requested inputs."""


def elementary_divisor(
    c: CoxeterElement,
    left: Iterable[int],
    right: Iterable[int],
    pseudo: bool = False,
) -> list[ShiftedCycle]:
    """The unique noncrossing cycle with the given orbit.

    ``left`` and ``right`` are the orbit points in the up and down parts of
    the partition; each must span less than one period.  The finite divisor
    runs through the up part ascending then the down part descending; the
    pseudo one splits into two shifted cycles.

    >>> from .core import coxeter_from_partition
    >>> c = coxeter_from_partition(4, {1, 2, 3})
    >>> [str(x) for x in elementary_divisor(c, [3], [0], pseudo=True)]
    ['(3)[+1]', '(0)[-1]']
    """
    ls = sorted(left)
    rs = sorted(right)
    for v in ls:
        if not c.in_L(v):
            raise ValueError(f"{v} is not in the up part of {c}")
    for v in rs:
        if not c.in_R(v):
            raise ValueError(f"{v} is not in the down part of {c}")
    if ls and ls[-1] - ls[0] >= c.n:
        raise SpanTooWide(f"up part {ls} spans a full period")
    if rs and rs[-1] - rs[0] >= c.n:
        raise SpanTooWide(f"down part {rs} spans a full period")
    if pseudo:
        if not ls or not rs:
            raise EmptySide("a pseudo-cyclic divisor needs both parts")
        return [
            ShiftedCycle(c.n, tuple(ls), 1),
            ShiftedCycle(c.n, tuple(reversed(rs)), -1),
        ]
    if not ls and not rs:
        raise ValueError("empty orbit")
    return [ShiftedCycle(c.n, tuple(ls) + tuple(reversed(rs)), 0)]


def _same_action(n: int, first: Sequence[ShiftedCycle], second: Sequence[ShiftedCycle], points: Iterable[int]) -> bool:
    for x in points:
        u = x
        for cyc in reversed(first):
            u = cyc(u)
        v = x
        for cyc in reversed(second):
            v = cyc(v)
        if u != v:
            return False
    return True


def _orbit_models(x: AffinePermutation) -> tuple[list[frozenset[int]], Optional[frozenset[int]]]:
    """Finite orbits (one representative each) and the closed orbit's residues."""
    finite: list[frozenset[int]] = []
    closed: Optional[frozenset[int]] = None
    shifted_residues: set[int] = set()
    for cyc in cycle_decomposition(x):
        if cyc.shift == 0:
            finite.append(frozenset(cyc.entries))
        else:
            shifted_residues.update(cyc.residues())
    if shifted_residues:
        closed = frozenset(shifted_residues)
    return finite, closed


def _orbit_pair_noncrossing(
    c: CoxeterElement,
    u_pts: Sequence[int],
    v_pts: Sequence[int],
    u_low: bool,
    u_high: bool,
    v_low: bool,
    v_high: bool,
) -> bool:
    """Check the two interleaving conditions for one ordered pair of orbits.

    ``*_low`` and ``*_high`` say the orbit extends unboundedly below or above
    the materialized points (translation-closed orbits do both).
    """

    def has_below(pts: Sequence[int], unbounded: bool, x: int) -> bool:
        return unbounded or (bool(pts) and pts[0] < x)

    def has_above(pts: Sequence[int], unbounded: bool, x: int) -> bool:
        return unbounded or (bool(pts) and pts[-1] > x)

    # pattern i < j < k < l with i,k in U and j,l in V: forbidden when j,k on one side
    for j in v_pts:
        for k in u_pts:
            if k <= j:
                continue
            if c.in_L(j) == c.in_L(k):
                if has_below(u_pts, u_low, j) and has_above(v_pts, v_high, k):
                    return False
    # pattern i < j < k < l with i,l in U and j,k in V: forbidden when j,k split
    for j, k in itertools.combinations(v_pts, 2):
        if c.in_L(j) != c.in_L(k):
            if has_below(u_pts, u_low, j) and has_above(u_pts, u_high, k):
                return False
    return True


def _cross_any(
    c: CoxeterElement,
    models: list[tuple[tuple[int, ...], bool]],
) -> bool:
    """Pairwise interleaving over materialized orbits; ``True`` when some pair crosses.

    Each model is (sorted points, translation_closed).
    """
    for (u_pts, u_closed), (v_pts, v_closed) in itertools.combinations(models, 2):
        if not _orbit_pair_noncrossing(c, u_pts, v_pts, u_closed, u_closed, v_closed, v_closed):
            return True
        if not _orbit_pair_noncrossing(c, v_pts, u_pts, v_closed, v_closed, u_closed, u_closed):
            return True
    return False


def _materialized_orbits(
    c: CoxeterElement, finite: list[frozenset[int]], closed: Optional[frozenset[int]]
) -> list[tuple[tuple[int, ...], bool]]:
    n = c.n
    if not finite and closed is None:
        return []
    lo = min((min(o) for o in finite), default=1)
    hi = max((max(o) for o in finite), default=n)
    span = max((max(o) - min(o) for o in finite), default=0)
    reach = span // n + 2
    models: list[tuple[tuple[int, ...], bool]] = []
    for orbit in finite:
        for k in range(-reach, reach + 1):
            models.append((tuple(sorted(v + k * n for v in orbit)), False))
    if closed is not None:
        pts = sorted(
            r + k * n
            for r in closed
            for k in range((lo - 2 * n) // n, (hi + 2 * n) // n + 1)
        )
        models.append((tuple(pts), True))
    return models


def is_c_noncrossing(x: AffinePermutation, c: CoxeterElement) -> bool:
    """Membership below ``c`` in absolute order, by the divisor characterization.

    >>> from .core import coxeter_from_partition, identity
    >>> is_c_noncrossing(identity(4), coxeter_from_partition(4, {1, 2}))
    True
    """
    n = x.n
    cycles = cycle_decomposition(x)
    shifted = [cyc for cyc in cycles if cyc.shift != 0]
    finite = [cyc for cyc in cycles if cyc.shift == 0]
    if len(shifted) not in (0, 2):
        return False
    if shifted:
        if sorted(cyc.shift for cyc in shifted) != [-1, 1]:
            return False
        pos = next(cyc for cyc in shifted if cyc.shift == 1)
        neg = next(cyc for cyc in shifted if cyc.shift == -1)
        if not all(c.in_L(v) for v in pos.entries):
            return False
        if not all(c.in_R(v) for v in neg.entries):
            return False
        left = sorted(residue(v, n) for v in pos.entries)
        right = sorted(residue(v, n) for v in neg.entries)
        try:
            divisor = elementary_divisor(c, left, right, pseudo=True)
        except (SpanTooWide, EmptySide):
            return False
        probe = [v for cyc in shifted for v in cyc.entries]
        if not _same_action(n, shifted, divisor, probe):
            return False
    for cyc in finite:
        pts = set(cyc.entries)
        left = sorted(v for v in pts if c.in_L(v))
        right = sorted(v for v in pts if c.in_R(v))
        try:
            divisor = elementary_divisor(c, left, right, pseudo=False)
        except SpanTooWide:
            return False
        if not _same_action(n, [cyc], divisor, cyc.entries):
            return False
    finite_orbits, closed = _orbit_models(x)
    models = _materialized_orbits(c, finite_orbits, closed)
    return not _cross_any(c, models)


@dataclass(frozen=True)
class NoncrossingPartition:
    """A certified noncrossing partition: permutation plus cycle decomposition."""

    c: CoxeterElement
    perm: AffinePermutation
    cycles: tuple[ShiftedCycle, ...]

    @staticmethod
    def from_perm(perm: AffinePermutation, c: CoxeterElement) -> "NoncrossingPartition":
        if not is_c_noncrossing(perm, c):
            raise NotNoncrossing(f"{perm} is not noncrossing for {c}")
        return NoncrossingPartition(c, perm, tuple(cycle_decomposition(perm)))

    @property
    def n(self) -> int:
        return self.c.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NoncrossingPartition):
            return NotImplemented
        return self.c == other.c and self.perm == other.perm

    def __hash__(self) -> int:
        return hash((self.c, self.perm))

    def __str__(self) -> str:
        from .core import format_cycles

        return format_cycles(self.cycles)


@dataclass(frozen=True)
class CurvedPolygonModel:
    """A block of the annulus model: one orbit, embedded or annular."""

    n: int
    orbit: frozenset[int]
    kind: str  # "embedded" | "annular"

    def __post_init__(self) -> None:
        if self.kind not in ("embedded", "annular"):
            raise ValueError(f"unknown block kind {self.kind!r}")


def polygons_cross(c: CoxeterElement, first: CurvedPolygonModel, second: CurvedPolygonModel) -> bool:
    """Whether two blocks of a marked annulus must intersect.

    Every orbit of one block is paired against every orbit of the other
    (translates of embedded blocks count as separate orbits).
    """
    if first == second:
        raise ValueError("need two distinct blocks")
    n = c.n
    finite = [m.orbit for m in (first, second) if m.kind == "embedded"]
    lo = min((min(o) for o in finite), default=1)
    hi = max((max(o) for o in finite), default=n)
    span = max((max(o) - min(o) for o in finite), default=0)
    reach = span // n + 2

    def models(block: CurvedPolygonModel) -> list[tuple[tuple[int, ...], bool]]:
        if block.kind == "embedded":
            return [
                (tuple(sorted(v + k * n for v in block.orbit)), False)
                for k in range(-reach, reach + 1)
            ]
        reps = sorted({residue(v, n) for v in block.orbit})
        pts = sorted(
            r + k * n for r in reps for k in range((lo - 2 * n) // n, (hi + 2 * n) // n + 1)
        )
        return [(tuple(pts), True)]

    for u_pts, u_closed in models(first):
        for v_pts, v_closed in models(second):
            if not _orbit_pair_noncrossing(c, u_pts, v_pts, u_closed, u_closed, v_closed, v_closed):
                return True
            if not _orbit_pair_noncrossing(c, v_pts, u_pts, v_closed, v_closed, u_closed, u_closed):
                return True
    return False


def _chain_factor(c: CoxeterElement, piece: ChainOrLoop) -> list[ShiftedCycle]:
    if piece.kind == "loop":
        left = sorted({residue(v, c.n) for v in piece.support if c.in_L(v)})
        right = sorted({residue(v, c.n) for v in piece.support if c.in_R(v)})
        return elementary_divisor(c, left, right, pseudo=True)
    pts = piece.support
    left = sorted(v for v in pts if c.in_L(v))
    right = sorted(v for v in pts if c.in_R(v))
    if len(pts) == 1:
        return []  # singleton: identity factor
    return elementary_divisor(c, left, right, pseudo=False)


def nc_of_diagram(d: CyclicArcDiagram) -> NoncrossingPartition:
    """Chains become finite divisors, the loop the pseudo-cyclic one.

    >>> from .core import coxeter_from_partition
    >>> from .arcs import build_diagram
    >>> c = coxeter_from_partition(10, {1, 4, 6, 8})
    >>> d = build_diagram(10, c, [(1, 6), (6, 8), (7, 15), (9, 12), (12, 13)])
    >>> str(nc_of_diagram(d))  # cycles re-anchored at their least residues
    '(1,6,8)(2,-1,3)(5,-3)'
    """
    factors: list[ShiftedCycle] = []
    for piece in chains_and_loops(d):
        factors.extend(_chain_factor(d.c, piece))
    perm = cycles_as_perm(factors, d.n)
    return NoncrossingPartition.from_perm(perm, d.c)


def diagram_of_nc(x: NoncrossingPartition) -> CyclicArcDiagram:
    """Arcs between consecutive orbit points; inverse of :func:`nc_of_diagram`."""
    n = x.n
    arcs: set[Arc] = set()
    for cyc in x.cycles:
        if cyc.shift != 0:
            continue
        pts = sorted(cyc.entries)
        for u, v in zip(pts, pts[1:]):
            arcs.add(Arc.normalized(n, u, v))
    shifted = [cyc for cyc in x.cycles if cyc.shift != 0]
    if shifted:
        res = sorted({residue(v, n) for cyc in shifted for v in cyc.entries})
        for u, v in zip(res, res[1:]):
            arcs.add(Arc.normalized(n, u, v))
        arcs.add(Arc.normalized(n, res[-1], res[0] + n))
    return build_diagram(n, x.c, arcs)


def _pool_need(w: AffinePermutation) -> int:
    """Reflection shift needed to move any point as far as ``w`` does."""
    n = w.n
    return max((abs(w(k) - k) + n - 1) // n for k in range(1, n + 1))


@lru_cache(maxsize=None)
def _reflection_ball(n: int, shift_bound: int, depth: int) -> dict[AffinePermutation, int]:
    """Distance from the identity in reflection generators with bounded shift."""
    pool = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            for p in range(1 if i > j else 0, shift_bound + 1):
                pool.append(Reflection.from_codec(n, i, j, p).as_perm())
    dist = {identity(n): 0}
    frontier = [identity(n)]
    for level in range(1, depth + 1):
        nxt = []
        for w in frontier:
            for t in pool:
                u = w * t
                if u not in dist:
                    dist[u] = level
                    nxt.append(u)
        frontier = nxt
    return dist


def absolute_leq_oracle(
    x: AffinePermutation, c: CoxeterElement, shift_bound: int = 3
) -> bool:
    """Test ``x <= c`` through the length identity, lengths found by search.

    Exact for inputs whose minimal reflection factorizations stay within the
    shift bound; the precondition that the bound covers both inputs is
    enforced rather than silently truncated.
    """
    n = x.n
    if shift_bound < 1:
        raise BoundTooSmall("shift bound must allow at least the simple reflections")
    y = x.inverse() * c.perm
    # grow the pool so that single reflections as long as any input displacement
    # stay reachable in one step; the requested bound is the floor
    bound = max(shift_bound, _pool_need(x), _pool_need(y), _pool_need(c.perm))
    dist = _reflection_ball(n, bound, n)
    lc = dist.get(c.perm)
    if lc is None:
        raise BoundTooSmall(f"{c} not reached at depth {n} with shift bound {bound}")
    lx = dist.get(x)
    ly = dist.get(y)
    if lx is None or ly is None:
        return False
    return lx + ly == lc


def absolute_length(x: AffinePermutation, shift_bound: int = 3, depth: Optional[int] = None) -> Optional[int]:
    """Reflection length within the bounded search, ``None`` when out of reach."""
    return _reflection_ball(x.n, shift_bound, x.n if depth is None else depth).get(x)


def nc_tilde(t: Tito, c: CoxeterElement) -> NoncrossingPartition:
    """The generalized bijection: divisors of the descending chains, in block order.

    Singleton chains contribute identity factors; a wrapping chain (first and
    last entries congruent) contributes the pseudo-cyclic divisor on its
    residues.  Agrees with composing the cover-arc map with the chain reading.

    >>> from .core import coxeter_from_partition
    >>> from .tito import parse_tito
    >>> c = coxeter_from_partition(4, {1, 2, 3})
    >>> str(nc_tilde(parse_tito("[1,2]~[3,0]", 4), c))
    '(3)[+1](4)[-1]'
    """
    ok, witness = is_c_sortable_tito(t, c)
    if not ok:
        raise NotSortableTito(f"{t} is not sortable for {c} (witness {witness})")
    n = t.n
    factors: list[ShiftedCycle] = []
    for chain in maximal_descending_chains(t):
        if len(chain) == 1:
            continue
        wraps = (chain[0] - chain[-1]) % n == 0
        if wraps:
            body = chain[:-1]
            left = sorted({residue(v, n) for v in body if c.in_L(v)})
            right = sorted({residue(v, n) for v in body if c.in_R(v)})
            factors.extend(elementary_divisor(c, left, right, pseudo=True))
        else:
            left = sorted(v for v in chain if c.in_L(v))
            right = sorted(v for v in chain if c.in_R(v))
            factors.extend(elementary_divisor(c, left, right, pseudo=False))
    perm = cycles_as_perm(factors, n)
    return NoncrossingPartition.from_perm(perm, c)
