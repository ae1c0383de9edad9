"""Translation-invariant total orders on the integers.

A ``Tito`` is a finite list of blocks whose residues partition ``1..n``.  A
waxing block with window ``[w_1..w_m]`` orders its elements as ``..., w_1 - n,
..., w_m - n, w_1, ..., w_m, w_1 + n, ...``; a waning block runs through its
copies downward instead.  Blocks are separated by infinite gaps, so the block
list order is part of the total order.

These orders stand in for biclosed sets of reflections: the inversions of the
order are the reflections ``(i, j)`` with ``j`` before ``i``, and the finite
ones are exactly inversion sets of affine permutations (single waxing block).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .core import (
    AffinePermutation,
    CoxeterElement,
    ParseError,
    Reflection,
    residue,
)


class ResidueCover(ValueError):
    """Block residues fail to partition ``1..n``."""


class NotRealOrder(ValueError):
    """A single-entry waning window forces the cover ``x + n`` before ``x``."""


class NotSortableTito(ValueError):
    pass


@dataclass(frozen=True)
class Block:
    kind: str  # "waxing" | "waning"
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in ("waxing", "waning"):
            raise ValueError(f"unknown block kind {self.kind!r}")
        if not self.window:
            raise ResidueCover("empty block window")

    def __str__(self) -> str:
        body = "[" + ",".join(str(v) for v in self.window) + "]"
        return ("~" if self.kind == "waning" else "") + body


@dataclass(frozen=True, eq=False)
class Tito:
    """A real translation-invariant total order, as an ordered list of blocks.

    Equality and hashing go through the canonical form, so two window
    presentations of the same order compare equal.
    """

    n: int
    blocks: tuple[Block, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            for v in block.window:
                r = residue(v, self.n)
                if r in seen:
                    raise ResidueCover(f"residue {r} appears twice")
                seen.add(r)
            if block.kind == "waning" and len(block.window) == 1:
                raise NotRealOrder(f"waning block {block} is not a real order")
        if seen != set(range(1, self.n + 1)):
            raise ResidueCover(
                f"blocks cover residues {sorted(seen)}, expected 1..{self.n}"
            )

    @cached_property
    def _locator(self) -> dict[int, tuple[int, int]]:
        """residue -> (block index, window slot)."""
        table: dict[int, tuple[int, int]] = {}
        for b_idx, block in enumerate(self.blocks):
            for slot, v in enumerate(block.window):
                table[residue(v, self.n)] = (b_idx, slot)
        return table

    def position(self, x: int) -> tuple[int, int]:
        """Lexicographic position (block index, offset) of ``x`` in the order."""
        b_idx, slot = self._locator[residue(x, self.n)]
        block = self.blocks[b_idx]
        base = block.window[slot]
        d = (x - base) // self.n
        m = len(block.window)
        offset = slot + d * m if block.kind == "waxing" else slot - d * m
        return (b_idx, offset)

    def value_at(self, b_idx: int, offset: int) -> int:
        """Inverse of :meth:`position` within block ``b_idx``."""
        block = self.blocks[b_idx]
        m = len(block.window)
        slot = offset % m
        if block.kind == "waxing":
            d = (offset - slot) // m
        else:
            d = (slot - offset) // m
        return block.window[slot] + d * self.n

    def compare(self, x: int, y: int) -> int:
        """-1, 0 or 1 as ``x`` comes before, equals, or comes after ``y``.

        >>> parse_tito("[1,2]~[3,0]", 4).compare(7, 4)
        -1
        """
        if x == y:
            return 0
        px, py = self.position(x), self.position(y)
        return -1 if px < py else 1

    def precedes(self, x: int, y: int) -> bool:
        return self.compare(x, y) < 0

    def canonical(self) -> "Tito":
        """Slide each window so it starts at the least residue, inside ``1..n``."""
        new_blocks = []
        for block in self.blocks:
            window = block.window
            m = len(window)
            least = min(residue(v, self.n) for v in window)
            k = next(i for i, v in enumerate(window) if residue(v, self.n) == least)
            step = self.n if block.kind == "waxing" else -self.n
            slid = window[k:] + tuple(v + step for v in window[:k])
            shift = (slid[0] - residue(slid[0], self.n))
            new_blocks.append(Block(block.kind, tuple(v - shift for v in slid)))
        return Tito(self.n, tuple(new_blocks))

    def _key(self) -> tuple:
        c = self.canonical()
        return (c.n, tuple((b.kind, b.window) for b in c.blocks))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tito):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __str__(self) -> str:
        return format_tito(self)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "blocks": [{"kind": b.kind, "window": list(b.window)} for b in self.blocks],
        }

    @staticmethod
    def from_json(data: dict) -> "Tito":
        return Tito(
            int(data["n"]),
            tuple(Block(b["kind"], tuple(int(v) for v in b["window"])) for b in data["blocks"]),
        )


_BLOCK_RE = re.compile(r"(~?)\s*\[\s*([-\d,\s]+?)\s*\]")


def parse_tito(text: str, n: int) -> Tito:
    """Parse juxtaposed blocks: waxing ``[a,b,...]``, waning ``~[a,b,...]``."""
    blocks = []
    pos = 0
    stripped = text.strip()
    while pos < len(stripped):
        m = _BLOCK_RE.match(stripped, pos)
        if m is None:
            raise ParseError(f"bad block syntax at {stripped[pos:]!r}")
        try:
            window = tuple(int(part.strip()) for part in m.group(2).split(","))
        except ValueError as exc:
            raise ParseError(f"bad integer in block {m.group(0)!r}") from exc
        blocks.append(Block("waning" if m.group(1) else "waxing", window))
        pos = m.end()
        while pos < len(stripped) and stripped[pos].isspace():
            pos += 1
    if not blocks:
        raise ParseError(f"no blocks in {text!r}")
    return Tito(n, tuple(blocks))


def format_tito(t: Tito) -> str:
    """Canonical textual form; ``parse_tito(format_tito(t)) == t``."""
    return "".join(str(b) for b in t.canonical().blocks)


def tito_of_affine_perm(w: AffinePermutation) -> Tito:
    """The order given by the one-line notation of ``w`` (one waxing block)."""
    return Tito(w.n, (Block("waxing", w.window),))


def affine_perm_of_tito(t: Tito) -> Optional[AffinePermutation]:
    """Recover the permutation when the order is a single waxing block.

    The stored window may be slid or translated; the unique presentation whose
    entries sum to ``n(n+1)/2`` is the permutation window.  Returns ``None``
    for orders with several blocks or a waning block.
    """
    if len(t.blocks) != 1 or t.blocks[0].kind != "waxing":
        return None
    n = t.n
    window = t.blocks[0].window
    target = n * (n + 1) // 2
    deficit = target - sum(window)
    assert deficit % n == 0
    k = (deficit // n) % n
    slid = window[k:] + tuple(v + n for v in window[:k])
    shift = (target - sum(slid)) // (n * n)
    return AffinePermutation(n, tuple(v + shift * n for v in slid))


def _adjacent_pairs(block: Block, n: int) -> list[tuple[int, int]]:
    """One period of consecutive pairs, wraparound included."""
    w = block.window
    pairs = [(w[s], w[s + 1]) for s in range(len(w) - 1)]
    wrap = w[0] + n if block.kind == "waxing" else w[0] - n
    pairs.append((w[-1], wrap))
    return pairs


def cover_reflections_tito(t: Tito) -> frozenset[Reflection]:
    """Descents of adjacent positions, as reflection classes.

    >>> sorted(map(str, cover_reflections_tito(parse_tito("[-3,4,2]", 3))))
    ['(2,4)', '(3,5)']
    """
    out: set[Reflection] = set()
    for block in t.blocks:
        for x, y in _adjacent_pairs(block, t.n):
            if x > y:
                out.add(Reflection.from_pair(t.n, y, x))
    return frozenset(out)


def inversion_contains(t: Tito, r: Reflection) -> bool:
    """Membership of a reflection in the (possibly infinite) inversion set."""
    return t.precedes(r.b, r.a)


def shape(t: Tito) -> tuple[tuple[str, frozenset[int]], ...]:
    return tuple(
        (b.kind, frozenset(residue(v, t.n) for v in b.window)) for b in t.blocks
    )


def maximal_descending_chains(t: Tito) -> list[tuple[int, ...]]:
    """One representative per class of maximal descending chains.

    A fully descending waning block yields a single wrapping chain whose first
    and last entries agree modulo ``n``; all other chains are the maximal
    descent runs of the windows.

    >>> maximal_descending_chains(parse_tito("[1,2]~[3,0]", 4))
    [(1,), (2,), (3, 0, -1)]
    """
    chains: list[tuple[int, ...]] = []
    for b_idx, block in enumerate(t.blocks):
        w = block.window
        m = len(w)
        base = t.position(w[0])[1]
        pairs = _adjacent_pairs(block, t.n)
        ascents = [s for s, (x, y) in enumerate(pairs) if x < y]
        if not ascents:
            # fully descending, only possible in a waning block: one wrapping
            # chain per class, starting at the largest window value
            top = t.position(max(w))[1]
            chains.append(tuple(t.value_at(b_idx, top + step) for step in range(m + 1)))
            continue
        # walk one period starting at the run containing the window head
        start = base + ascents[-1] + 1 - m
        run = [t.value_at(b_idx, start)]
        for step in range(1, m):
            v = t.value_at(b_idx, start + step)
            if v < run[-1]:
                run.append(v)
            else:
                chains.append(tuple(run))
                run = [v]
        chains.append(tuple(run))
    return chains


def is_c_sortable_tito(
    t: Tito, c: CoxeterElement
) -> tuple[bool, Optional[tuple[str, int, int, int]]]:
    """Shape test plus pattern avoidance around every cover.

    The witness, when present, is a forbidden pattern ``("kij", k, i, j)`` or
    ``("jki", j, k, i)`` read off the order.  Shape failures carry no witness.
    """
    n = t.n
    kinds = [b.kind for b in t.blocks]
    sh = shape(t)
    if kinds == ["waxing"]:
        pass
    else:
        waning_positions = [i for i, k in enumerate(kinds) if k == "waning"]
        if len(waning_positions) != 1 or len(kinds) > 3:
            return False, None
        mid = waning_positions[0]
        if any(k != "waxing" for i, k in enumerate(kinds) if i != mid):
            return False, None
        if mid > 1 or len(kinds) - mid > 2:
            return False, None
        m_res = sh[mid][1]
        if not (m_res & c.Lc) or not (m_res & c.Rc):
            return False, None
        for i, (_, res_set) in enumerate(sh):
            if i < mid and not res_set <= c.Lc:
                return False, None
            if i > mid and not res_set <= c.Rc:
                return False, None

    for block in t.blocks:
        for k_val, i_val in _adjacent_pairs(block, n):
            if k_val < i_val:
                continue
            for j in range(i_val + 1, k_val):
                if c.in_L(j):
                    if t.precedes(k_val, j):
                        return False, ("kij", k_val, i_val, j)
                else:
                    if t.precedes(j, i_val):
                        return False, ("jki", j, k_val, i_val)
    return True, None
