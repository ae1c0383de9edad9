"""Cyclic arc diagrams: validation, chains and loops, and the inverse map.

Arcs record cover reflections: the arc ``p -> q`` stands for the class of all
translates of the pair by multiples of ``n``.  In a diagram attached to a
Coxeter element the side each arc passes an intermediate point on is forced by
the point's residue, so arcs are stored by endpoints alone.

The walk ``c_sequence`` climbs from a point to the top of its chain, jumps to
the closest covering arc, and repeats; it is either finite or ultimately
periodic modulo ``n``.  Its period singles out a transversal of the chain
classes (the ``a``-numbering), and reading those chains off in the order
produced by ``select_order`` rebuilds the unique translation-invariant total
order whose covers are the arcs (``tito_c``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .core import CoxeterElement, residue
from .tito import Block, NotSortableTito, Tito, cover_reflections_tito, is_c_sortable_tito

RIGHT = "→"
UP = "↑"
DOWN = "↓"


class CrossingArcs(ValueError):
    """Two arcs (or translates) are incompatible; carries the witness pair."""

    def __init__(self, first: tuple[int, int], second: tuple[int, int]):
        super().__init__(f"arcs {first[0]}->{first[1]} and {second[0]}->{second[1]} are incompatible")
        self.witness = (first, second)


class ImaginaryLoop(ValueError):
    """A loop must visit both parts of the partition."""


class FiniteSequence(ValueError):
    pass


class NoUnhiddenElement(ValueError):
    """Every candidate is hidden; the input cannot be a valid diagram."""


@dataclass(frozen=True, order=True)
class Arc:
    """Translation class of an arc, anchored at an initial point in ``1..n``."""

    n: int
    p: int
    q: int

    def __post_init__(self) -> None:
        if not (1 <= self.p <= self.n):
            raise ValueError(f"arc anchor {self.p} outside 1..{self.n}")
        if self.q <= self.p or (self.q - self.p) % self.n == 0:
            raise ValueError(f"({self.p}, {self.q}) is not an arc")

    @staticmethod
    def normalized(n: int, p: int, q: int) -> "Arc":
        if q < p:
            p, q = q, p
        shift = p - residue(p, n)
        return Arc(n, p - shift, q - shift)

    def span(self) -> int:
        return self.q - self.p

    def __str__(self) -> str:
        return f"{self.p}->{self.q}"


@dataclass(frozen=True)
class ChainOrLoop:
    """Concrete chain (finite ascending support) or loop (one period of it).

    For a loop, ``close`` is the point following the last support entry, a
    translate of the first one; chains have ``close = None``.
    """

    n: int
    kind: str  # "chain" | "loop"
    support: tuple[int, ...]
    close: Optional[int] = None

    def residues(self) -> frozenset[int]:
        return frozenset(residue(v, self.n) for v in self.support)

    def arcs(self) -> list[tuple[int, int]]:
        pts = list(self.support) + ([self.close] if self.close is not None else [])
        return list(zip(pts, pts[1:]))

    def translate(self, k: int) -> "ChainOrLoop":
        step = k * self.n
        return ChainOrLoop(
            self.n,
            self.kind,
            tuple(v + step for v in self.support),
            None if self.close is None else self.close + step,
        )

    def class_key(self) -> tuple:
        shift = (self.support[0] - residue(self.support[0], self.n)) // self.n
        anchored = self.translate(-shift)
        return (anchored.kind, anchored.support)

    def __str__(self) -> str:
        body = RIGHT.join(str(v) for v in self.support)
        return f"({body}...)" if self.kind == "loop" else body


@dataclass(frozen=True)
class CyclicArcDiagram:
    c: CoxeterElement
    arcs: frozenset[Arc]

    @property
    def n(self) -> int:
        return self.c.n

    def arcs_sorted(self) -> list[Arc]:
        return sorted(self.arcs)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.arcs_sorted()) if self.arcs else "(empty)"


def _pair_cross(c: CoxeterElement, first: tuple[int, int], second: tuple[int, int]) -> bool:
    """Crossing test for two concrete arcs with all sides forced by residues."""
    (p, q), (s, t) = first, second
    if s < p:
        (p, q), (s, t) = (s, t), (p, q)
    if p == s:
        return False
    if p < s < q < t:
        return c.in_L(s) == c.in_L(q)
    if p < s < t < q:
        return c.in_L(s) != c.in_L(t)
    return False


def arcs_cross(c: CoxeterElement, a1: Arc, a2: Arc) -> bool:
    """Whether any translates of the two classes intersect.

    >>> from .core import coxeter_from_partition
    >>> c = coxeter_from_partition(4, {1, 2, 3})
    >>> arcs_cross(c, Arc(4, 1, 3), Arc(4, 2, 8))
    True
    """
    n = a1.n
    reach = (a1.span() + a2.span()) // n + 1
    for k in range(-reach, reach + 1):
        if a1 == a2 and k == 0:
            continue
        if _pair_cross(c, (a1.p, a1.q), (a2.p + k * n, a2.q + k * n)):
            return True
    return False


def build_diagram(n: int, c: CoxeterElement, arcs: Iterable[Arc | tuple[int, int]]) -> CyclicArcDiagram:
    """Validate pairwise compatibility and the real-loop condition.

    Besides being pairwise noncrossing (over all translates), arcs may not
    share an initial point or a final point, and every loop must visit both
    parts of the partition.
    """
    normalized = frozenset(
        a if isinstance(a, Arc) else Arc.normalized(n, a[0], a[1]) for a in arcs
    )
    by_initial: dict[int, Arc] = {}
    by_final: dict[int, Arc] = {}
    for a in sorted(normalized):
        rp, rq = residue(a.p, n), residue(a.q, n)
        if rp in by_initial:
            raise CrossingArcs((by_initial[rp].p, by_initial[rp].q), (a.p, a.q))
        if rq in by_final:
            raise CrossingArcs((by_final[rq].p, by_final[rq].q), (a.p, a.q))
        by_initial[rp] = a
        by_final[rq] = a
    pairs = itertools.combinations_with_replacement(sorted(normalized), 2)
    for a1, a2 in pairs:
        if arcs_cross(c, a1, a2):
            raise CrossingArcs((a1.p, a1.q), (a2.p, a2.q))
    diagram = CyclicArcDiagram(c, normalized)
    for piece in chains_and_loops(diagram):
        if piece.kind == "loop":
            res = piece.residues()
            if not (res & c.Lc) or not (res & c.Rc):
                raise ImaginaryLoop(f"loop on residues {sorted(res)}")
    return diagram


def _initial_map(d: CyclicArcDiagram) -> dict[int, Arc]:
    return {residue(a.p, d.n): a for a in d.arcs}


def _final_map(d: CyclicArcDiagram) -> dict[int, Arc]:
    return {residue(a.q, d.n): a for a in d.arcs}


@lru_cache(maxsize=None)
def chains_and_loops(d: CyclicArcDiagram) -> tuple[ChainOrLoop, ...]:
    """One representative per chain or loop class; supports partition ``Z``.

    >>> from .core import coxeter_from_partition
    >>> c = coxeter_from_partition(10, {1, 4, 6, 8})
    >>> arcs = [(1, 6), (6, 8), (7, 15), (9, 12), (12, 13)]
    >>> d = build_diagram(10, c, arcs)
    >>> [str(x) for x in chains_and_loops(d)]
    ['1→6→8', '4', '7→15', '9→12→13', '10']
    """
    n = d.n
    init = _initial_map(d)
    fin = _final_map(d)
    out: list[ChainOrLoop] = []
    seen: set[int] = set()  # initial residues consumed by a traversal
    for a in d.arcs_sorted():
        if residue(a.p, n) in fin:
            continue  # has a predecessor, not a chain head
        support = [a.p]
        x = a.p
        while True:
            cls = init.get(residue(x, n))
            if cls is None:
                break
            seen.add(residue(x, n))
            x = cls.q + (x - cls.p)
            support.append(x)
        out.append(ChainOrLoop(n, "chain", tuple(support)))
    # remaining arcs belong to loops
    for a in d.arcs_sorted():
        if residue(a.p, n) in seen:
            continue
        support = [a.p]
        seen.add(residue(a.p, n))
        x = a.p
        while True:
            cls = init[residue(x, n)]
            x = cls.q + (x - cls.p)
            if residue(x, n) == residue(a.p, n):
                break
            support.append(x)
            seen.add(residue(x, n))
        out.append(ChainOrLoop(n, "loop", tuple(support), close=x))
    covered = {r for piece in out for r in piece.residues()}
    for r in range(1, n + 1):
        if r not in covered:
            out.append(ChainOrLoop(n, "chain", (r,)))
    return tuple(sorted(out, key=lambda g: (residue(g.support[0], n), g.support)))


@lru_cache(maxsize=None)
def _class_of_residue(d: CyclicArcDiagram) -> dict[int, ChainOrLoop]:
    table: dict[int, ChainOrLoop] = {}
    for piece in chains_and_loops(d):
        for r in piece.residues():
            table[r] = piece
    return table


def chain_through(d: CyclicArcDiagram, x: int) -> ChainOrLoop:
    """The concrete chain containing ``x`` (loops are returned as their class)."""
    piece = _class_of_residue(d)[residue(x, d.n)]
    if piece.kind == "loop":
        return piece
    r = residue(x, d.n)
    member = next(v for v in piece.support if residue(v, d.n) == r)
    return piece.translate((x - member) // d.n)


def covering_arcs(d: CyclicArcDiagram, a: int) -> list[tuple[int, int]]:
    """All concrete arcs ``p -> q`` with ``p < a < q``."""
    n = d.n
    out = []
    for arc in d.arcs:
        # translates with p + kn < a < q + kn
        k_min = (a - arc.q) // n + 1
        k_max = (a - arc.p - 1) // n
        for k in range(k_min, k_max + 1):
            p, q = arc.p + k * n, arc.q + k * n
            if p < a < q:
                out.append((p, q))
    return sorted(out)


def neighbor_arc(d: CyclicArcDiagram, a: int) -> Optional[tuple[int, int]]:
    """The closest covering arc of ``a`` (side-aware selection).

    Among covering arcs whose initial point sits on the same side as ``a``,
    the one starting last; if there are none, the overall earliest-starting
    covering arc.

    >>> from .core import coxeter_from_partition
    >>> c = coxeter_from_partition(10, {1, 4, 6, 8})
    >>> d = build_diagram(10, c, [(1, 6), (6, 8), (7, 15), (9, 12), (12, 13)])
    >>> neighbor_arc(d, 8), neighbor_arc(d, 2)
    ((7, 15), (-3, 5))
    """
    cov = covering_arcs(d, a)
    if not cov:
        return None
    side = d.c.in_L(a)
    same = [pq for pq in cov if d.c.in_L(pq[0]) == side]
    if same:
        return max(same)
    return min(cov)


def neighbor_arc_dual(d: CyclicArcDiagram, a: int) -> Optional[tuple[int, int]]:
    """Mirror formulation selecting on final points; agrees with the primal."""
    cov = covering_arcs(d, a)
    if not cov:
        return None
    side = d.c.in_L(a)
    same = [pq for pq in cov if d.c.in_L(pq[1]) == side]
    key = lambda pq: pq[1]
    if same:
        return min(same, key=key)
    return max(cov, key=key)


@dataclass(frozen=True)
class CSequence:
    """The climb-and-jump walk from ``a``: integers joined by arrows.

    ``tokens`` holds a long enough prefix; when the walk is infinite,
    ``period_start``/``period_len`` delimit one periodic factor inside it.
    """

    n: int
    anchor: int
    tokens: tuple
    finite: bool
    period_start: Optional[int] = None
    period_len: Optional[int] = None

    @property
    def prefix(self) -> tuple:
        return self.tokens if self.finite else self.tokens[: self.period_start]

    @property
    def period(self) -> Optional[tuple]:
        """One periodic factor with integers reduced modulo ``n``."""
        if self.finite:
            return None
        factor = self.tokens[self.period_start : self.period_start + self.period_len]
        return tuple(residue(t, self.n) if isinstance(t, int) else t for t in factor)

    def period_class(self) -> Optional[frozenset]:
        """Rotation-invariant fingerprint of the period."""
        if self.finite:
            return None
        p = self.period
        rotations = {tuple(p[i:] + p[:i]) for i in range(len(p))}
        return frozenset(rotations)

    def __str__(self) -> str:
        text = " ".join(str(t) for t in self.tokens)
        return text if self.finite else text + " …"


def _walk_tokens(d: CyclicArcDiagram, a: int) -> Iterator:
    init = _initial_map(d)
    n = d.n
    x = a
    while True:
        while True:
            yield x
            cls = init.get(residue(x, n))
            if cls is None:
                break
            yield RIGHT
            x = cls.q + (x - cls.p)
        arc = neighbor_arc(d, x)
        if arc is None:
            return
        yield DOWN if d.c.in_L(x) else UP
        x = arc[1]


def c_sequence(d: CyclicArcDiagram, a: int) -> CSequence:
    """Walk from ``a``; detect the period at the first repeated residue.

    >>> from .core import coxeter_from_partition
    >>> c = coxeter_from_partition(10, {1, 4, 6, 8})
    >>> d = build_diagram(10, c, [(1, 6), (6, 8), (7, 15), (9, 12), (12, 13)])
    >>> print(c_sequence(d, 2))
    2 → 3 ↑ 5 ↑ 6 → 8 ↓ 15 ↑ 16 → 18 ↓ 25 ↑ 26 → 28 ↓ 35 …
    """
    gen = _walk_tokens(d, a)
    tokens: list = []
    first_pos: dict[int, int] = {}
    period_start: Optional[int] = None
    period_len: Optional[int] = None
    budget = 12 * d.n + 24
    for tok in gen:
        tokens.append(tok)
        if isinstance(tok, int):
            r = residue(tok, d.n)
            if r in first_pos and period_start is None:
                period_start = first_pos[r]
                period_len = len(tokens) - 1 - period_start
            first_pos.setdefault(r, len(tokens) - 1)
        if period_start is not None and len(tokens) >= period_start + 3 * period_len + 1:
            return CSequence(d.n, a, tuple(tokens), False, period_start, period_len)
        if len(tokens) > budget:
            raise AssertionError("walk exceeded budget without periodicity")
    return CSequence(d.n, a, tuple(tokens), True)


def _tau_factor(cs: CSequence) -> tuple:
    """The first factor that is a periodic factor and starts preferentially.

    Preference order for the leading token: a down arrow when the period has
    one, else an up arrow, else a plain chain step.
    """
    assert not cs.finite
    period = cs.tokens[cs.period_start : cs.period_start + cs.period_len]
    if DOWN in period:
        pref = DOWN
    elif UP in period:
        pref = UP
    else:
        pref = RIGHT
    length = cs.period_len

    def matches(i: int) -> bool:
        limit = len(cs.tokens) - length
        j = i
        while j < limit:
            t1, t2 = cs.tokens[j], cs.tokens[j + length]
            if isinstance(t1, int) != isinstance(t2, int):
                return False
            if isinstance(t1, int):
                if (t1 - t2) % cs.n != 0:
                    return False
            elif t1 != t2:
                return False
            j += 1
        return True

    for i in range(len(cs.tokens) - length):
        if cs.tokens[i] == pref and matches(i):
            return cs.tokens[i : i + length]
    raise AssertionError("no periodic factor found")


@dataclass(frozen=True)
class Numbering:
    """A transversal of the chain and loop classes, with its part split."""

    chains: tuple[ChainOrLoop, ...]
    case: str  # "finite" | "down" | "up"
    parts: Optional[tuple[tuple[ChainOrLoop, ...], tuple[ChainOrLoop, ...], tuple[ChainOrLoop, ...]]] = None


def _translate_into(piece: ChainOrLoop, lo: int, hi: int, open_lo: bool) -> ChainOrLoop:
    """The unique translate with support inside ``(lo, hi]`` or ``(lo, hi)``."""
    n = piece.n
    top = max(piece.support)
    k = (hi - top) // n if not open_lo else (hi - 1 - top) // n
    moved = piece.translate(k)
    assert min(moved.support) > lo, f"{piece} does not fit in ({lo}, {hi}{']' if not open_lo else ')'}"
    return moved


def a_numbering(d: CyclicArcDiagram, a: int) -> Numbering:
    """The canonical transversal anchored at ``a``.

    Finite walk: every class translated into the window ending at the walk's
    last point.  Periodic with a down arrow: the factor's chains stay put and
    the rest are packed against their extremes by part.  Otherwise the L and R
    parts are renumbered recursively through the restricted diagrams.
    """
    cs = c_sequence(d, a)
    classes = chains_and_loops(d)
    if cs.finite:
        b = cs.tokens[-1]
        assert isinstance(b, int)
        moved = tuple(_translate_into(g, b - d.n, b, open_lo=False) for g in classes)
        return Numbering(moved, "finite")

    tau = _tau_factor(cs)
    m_pieces: list[ChainOrLoop] = []
    m_keys: set = set()
    for tok in tau:
        if not isinstance(tok, int):
            continue
        piece = chain_through(d, tok)
        if piece.class_key() not in m_keys:
            m_keys.add(piece.class_key())
            m_pieces.append(piece)
        else:
            assert piece in m_pieces, "period visits two translates of one chain"
    others = [g for g in classes if g.class_key() not in m_keys]

    if DOWN in tau:
        top = max(max(g.support) for g in m_pieces)
        bottom = min(min(g.support) for g in m_pieces)
        left, right = [], []
        for g in others:
            if g.residues() <= d.c.Lc:
                left.append(_translate_into(g, top - d.n, top, open_lo=True))
            else:
                assert g.residues() <= d.c.Rc
                right.append(_translate_into(g, bottom, bottom + d.n, open_lo=True))
        chains = tuple(left) + tuple(m_pieces) + tuple(right)
        return Numbering(chains, "down", (tuple(left), tuple(m_pieces), tuple(right)))

    kept_l = [g for g in others if g.residues() <= d.c.Lc]
    kept_r = [g for g in others if g.residues() <= d.c.Rc]
    assert len(kept_l) + len(kept_r) == len(others)

    def renumber(kept: list[ChainOrLoop]) -> tuple[ChainOrLoop, ...]:
        sub_arcs = frozenset(
            Arc.normalized(d.n, p, q) for g in kept for (p, q) in g.arcs()
        )
        sub = CyclicArcDiagram(d.c, sub_arcs)
        sub_cs = c_sequence(sub, a)
        assert sub_cs.finite, "restricted diagram walk must terminate"
        b = sub_cs.tokens[-1]
        return tuple(_translate_into(g, b - d.n, b, open_lo=False) for g in kept)

    left = renumber(kept_l)
    right = renumber(kept_r)
    chains = left + tuple(m_pieces) + right
    return Numbering(chains, "up", (left, tuple(m_pieces), right))


def hides(c: CoxeterElement, g1: ChainOrLoop, g2: ChainOrLoop) -> bool:
    """Precedence between two numbered chains or loops.

    A loop hides every all-R chain and is hidden by every all-L chain; a chain
    hides another when its minimum pokes into the other's span from the left
    side, or the other's minimum pokes into its span from the right side.
    """
    if g1 == g2:
        return False
    if g1.kind == "loop":
        return g2.kind == "chain" and g2.residues() <= c.Rc
    if g2.kind == "loop":
        return g1.residues() <= c.Lc
    min1, max1 = g1.support[0], g1.support[-1]
    min2, max2 = g2.support[0], g2.support[-1]
    if min1 < min2 < max1 and c.in_R(min2):
        return True
    if min2 < min1 < max2 and c.in_L(min1):
        return True
    return False


def select_order(c: CoxeterElement, pieces: Iterable[ChainOrLoop]) -> list[ChainOrLoop]:
    """Repeatedly pick the unhidden element with the smallest maximum.

    Loops count as unbounded, so a loop is picked only once nothing hides it
    and no finite chain is available first.
    """
    remaining = list(pieces)
    out: list[ChainOrLoop] = []
    while remaining:
        unhidden = [
            g
            for g in remaining
            if not any(hides(c, h, g) for h in remaining if h is not g)
        ]
        if not unhidden:
            raise NoUnhiddenElement(f"no unhidden chain among {[str(g) for g in remaining]}")
        pick = min(
            unhidden,
            key=lambda g: (1, 0) if g.kind == "loop" else (0, g.support[-1]),
        )
        out.append(pick)
        remaining.remove(pick)
    return out


def _window_of(pieces: list[ChainOrLoop], n: int) -> tuple[int, ...]:
    window: list[int] = []
    for g in pieces:
        if g.kind == "loop":
            reps = sorted((residue(v, n) for v in g.support), reverse=True)
            window.extend(reps)
        else:
            window.extend(reversed(g.support))
    return tuple(window)


def tito_c(d: CyclicArcDiagram, a: int = 1) -> Tito:
    """The unique sortable order whose covers are the arcs of ``d``.

    Anchor-independent as a canonical order; different anchors typically give
    different window presentations.

    >>> from .core import coxeter_from_partition
    >>> c = coxeter_from_partition(10, {1, 4, 6, 8})
    >>> d = build_diagram(10, c, [(1, 6), (6, 8), (7, 15), (9, 12), (12, 13)])
    >>> str(tito_c(d, 2))
    '[1,5,-3,3,2,-1,0,14,18,16]'
    """
    num = a_numbering(d, a)
    n = d.n
    if num.case in ("finite", "down"):
        ordered = select_order(d.c, num.chains)
        return Tito(n, (Block("waxing", _window_of(ordered, n)),))
    left, middle, right = num.parts
    blocks: list[Block] = []
    if left:
        blocks.append(Block("waxing", _window_of(select_order(d.c, left), n)))
    blocks.append(Block("waning", _window_of(select_order(d.c, middle), n)))
    if right:
        blocks.append(Block("waxing", _window_of(select_order(d.c, right), n)))
    return Tito(n, tuple(blocks))


def ncad_c(t: Tito, c: CoxeterElement) -> CyclicArcDiagram:
    """Arcs of the cover reflections of a sortable order.

    >>> from .core import coxeter_from_partition
    >>> from .tito import parse_tito
    >>> c = coxeter_from_partition(3, {1, 2})
    >>> str(ncad_c(parse_tito("[-3,4,2]", 3), c))
    '2->4,3->5'
    """
    ok, witness = is_c_sortable_tito(t, c)
    if not ok:
        raise NotSortableTito(f"{t} is not sortable for {c} (witness {witness})")
    covers = cover_reflections_tito(t)
    return build_diagram(t.n, c, [Arc(t.n, r.a, r.b) for r in covers])


def collapse_period(d: CyclicArcDiagram, a: int) -> CyclicArcDiagram:
    """Replace everything met by the period with a single loop on its support."""
    cs = c_sequence(d, a)
    if cs.finite:
        raise FiniteSequence(f"walk from {a} terminates; nothing to collapse")
    period_res = {residue(t, d.n) for t in cs.period if isinstance(t, int)}
    doomed = [g for g in chains_and_loops(d) if g.residues() & period_res]
    doomed_res = sorted({r for g in doomed for r in g.residues()})
    removed = {
        Arc.normalized(d.n, p, q) for g in doomed for (p, q) in g.arcs()
    }
    kept = [a for a in d.arcs if a not in removed]
    loop_arcs = [
        (doomed_res[i], doomed_res[i + 1]) for i in range(len(doomed_res) - 1)
    ]
    loop_arcs.append((doomed_res[-1], doomed_res[0] + d.n))
    return build_diagram(d.n, d.c, kept + [Arc.normalized(d.n, p, q) for p, q in loop_arcs])


def enumerate_diagrams(
    c: CoxeterElement, max_span: Optional[int] = None, max_arcs: int = 4
) -> Iterator[CyclicArcDiagram]:
    """All diagrams with bounded arc spans and count, the empty one included."""
    n = c.n
    span = 2 * n if max_span is None else max_span
    pool = [
        Arc(n, p, q)
        for p in range(1, n + 1)
        for q in range(p + 1, p + span + 1)
        if (q - p) % n != 0
    ]
    pool.sort()

    def compatible(chosen: list[Arc], cand: Arc) -> bool:
        for a in chosen:
            if residue(a.p, n) == residue(cand.p, n) or residue(a.q, n) == residue(cand.q, n):
                return False
            if arcs_cross(c, a, cand):
                return False
        return not arcs_cross(c, cand, cand)

    def emit(chosen: list[Arc]) -> Optional[CyclicArcDiagram]:
        diagram = CyclicArcDiagram(c, frozenset(chosen))
        for piece in chains_and_loops(diagram):
            if piece.kind == "loop":
                res = piece.residues()
                if not (res & c.Lc) or not (res & c.Rc):
                    return None
        return diagram

    def extend(chosen: list[Arc], start: int) -> Iterator[CyclicArcDiagram]:
        made = emit(chosen)
        if made is not None:
            yield made
        if len(chosen) == max_arcs:
            return
        for idx in range(start, len(pool)):
            cand = pool[idx]
            if compatible(chosen, cand):
                chosen.append(cand)
                yield from extend(chosen, idx + 1)
                chosen.pop()

    yield from extend([], 0)
