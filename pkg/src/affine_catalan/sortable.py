"""Sortability tests and the map from sortable elements to noncrossing partitions.

Three independent routes decide whether an affine permutation ``w`` is
``c``-sortable:

* the defining one: compute the sorting word of ``w`` along the infinite
  repetition of a fixed reduced word of ``c`` and check that the letters used
  in each copy nest into those of the previous copy,
* the window-pattern criterion: scan the descents ``(k, i)`` of the one-line
  notation and look for a value ``j`` between them sitting on the wrong side,
* the inversion-condition scan: a finite list of membership conditions on the
  inversion set.

All three are proved equivalent; the test suite exercises the equivalence on
bounded corpora.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    AffinePermutation,
    CoxeterElement,
    Reflection,
    cover_reflections,
    inversion_set,
    residue,
    simple_reflection,
)


class NotSortable(ValueError):
    pass


@dataclass(frozen=True)
class SortingWord:
    """The greedy subword of ``c^infinity`` spelling ``w``.

    ``letters`` are generator indices; ``slot_mask`` marks which slots of the
    repeated word of ``c`` were used (length is a multiple of ``n``).
    """

    n: int
    c_word: tuple[int, ...]
    letters: tuple[int, ...]
    slot_mask: tuple[int, ...]

    def copies(self) -> list[tuple[int, ...]]:
        n = self.n
        return [self.slot_mask[i : i + n] for i in range(0, len(self.slot_mask), n)]

    def is_sortable(self) -> bool:
        copies = self.copies()
        for prev, cur in zip(copies, copies[1:]):
            if any(c > p for p, c in zip(prev, cur)):
                return False
        return True


class _Peeler:
    """Position table of the remaining left quotient, updated in O(1) per letter."""

    def __init__(self, w: AffinePermutation):
        self.n = w.n
        inv = w.inverse()
        self.pos = [0] + [inv(v) for v in range(1, w.n + 1)]  # pos[v] = u^{-1}(v)
        self.remaining = w.length()

    def descent(self, i: int) -> bool:
        """Whether ``s_i`` is a left descent of the remaining element."""
        n = self.n
        if i == 0:
            return self.pos[n] > self.pos[1] + n
        return self.pos[i] > self.pos[i + 1]

    def take(self, i: int) -> None:
        n = self.n
        if i == 0:
            self.pos[n], self.pos[1] = self.pos[1] + n, self.pos[n] - n
        else:
            self.pos[i], self.pos[i + 1] = self.pos[i + 1], self.pos[i]
        self.remaining -= 1


def c_sorting_word(w: AffinePermutation, c: CoxeterElement) -> SortingWord:
    """Greedy scan of ``c^infinity``: take a letter whenever it shortens.

    >>> from .core import parse_window, coxeter_from_partition
    >>> w = parse_window("[4,2,0]", 3)
    >>> sw = c_sorting_word(w, coxeter_from_partition(3, {1, 2}))
    >>> sw.letters, sw.slot_mask
    ((0, 1, 2, 1), (1, 1, 1, 0, 1, 0))
    """
    word = c.reduced_word()
    peeler = _Peeler(w)
    letters: list[int] = []
    mask: list[int] = []
    while peeler.remaining:
        for i in word:
            if peeler.remaining and peeler.descent(i):
                peeler.take(i)
                letters.append(i)
                mask.append(1)
            else:
                mask.append(0)
    if len(mask) % w.n:
        mask.extend([0] * (w.n - len(mask) % w.n))
    return SortingWord(w.n, word, tuple(letters), tuple(mask))


def is_c_sortable_def(w: AffinePermutation, c: CoxeterElement) -> bool:
    """Definitional test, with an early exit at the first un-nested copy."""
    word = c.reduced_word()
    peeler = _Peeler(w)
    prev: Optional[list[bool]] = None
    while peeler.remaining:
        current = []
        for slot, i in enumerate(word):
            if peeler.remaining and peeler.descent(i):
                peeler.take(i)
                current.append(True)
            else:
                current.append(False)
        if prev is not None and any(c and not p for p, c in zip(prev, current)):
            return False
        prev = current
    return True


Witness = tuple[str, int, int, int]


def is_c_sortable_pattern(
    w: AffinePermutation, c: CoxeterElement
) -> tuple[bool, Optional[Witness]]:
    """Window-pattern criterion; the witness is the first forbidden pattern found.

    Scans the consecutive descents ``(k, i) = (w(u), w(u+1))`` for ``u`` in the
    window.  A value ``j`` strictly between ``i`` and ``k`` is forbidden when it
    lies in the L part but appears after ``i``, or in the R part but appears
    before ``k``.  Witnesses are reported as ``("kij", k, i, j)`` or
    ``("jki", j, k, i)``.
    """
    n = w.n
    inv = w.inverse()
    pos = [0] + [inv(v) for v in range(1, n + 1)]

    def position(v: int) -> int:
        r = residue(v, n)
        return pos[r] + (v - r)

    for u in range(1, n + 1):
        k_val, i_val = w(u), w(u + 1)
        if k_val < i_val:
            continue
        for j in range(i_val + 1, k_val):
            if c.in_L(j):
                if position(j) > u + 1:
                    return False, ("kij", k_val, i_val, j)
            else:
                if position(j) < u:
                    return False, ("jki", j, k_val, i_val)
    return True, None


ConditionTag = tuple[str, tuple[int, ...]]


def forbidden_inversion_witness(
    w: AffinePermutation, c: CoxeterElement
) -> Optional[ConditionTag]:
    """First satisfied inversion condition, or ``None`` when ``w`` is sortable.

    Conditions 1a/1b/1c test short reflections over residue pairs; 2a/2b test
    rank-two triples, with shifts bounded by the largest shift present in the
    inversion set (a larger one cannot meet a finite set of inversions).
    """
    n = w.n
    inv = inversion_set(w)
    if not inv:
        return None
    max_shift = max(t.shift() for t in inv)

    def has(i: int, j: int, p: int) -> bool:
        return Reflection.from_codec(n, i, j, p) in inv

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            same = c.in_L(i) == c.in_L(j)
            if same:
                if has(i, j, 1) or has(j, i, 2):
                    return ("1a", (i, j))
            elif c.in_L(i):
                if has(i, j, 1):
                    return ("1b", (i, j))
            else:
                if has(j, i, 2):
                    return ("1c", (i, j))

    bound = max_shift + 1
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if j == i:
                continue
            for k in range(1, n + 1):
                if k in (i, j):
                    continue
                for p in range(1 if i > j else 0, bound + 1):
                    for q in range(1 if j > k else 0, bound + 1 - p):
                        in_ij = has(i, j, p)
                        in_ik = has(i, k, p + q)
                        in_jk = has(j, k, q)
                        if c.in_L(j):
                            if in_ik and in_jk and not in_ij:
                                return ("2a", (i, j, k, p, q))
                        else:
                            if in_ij and in_ik and not in_jk:
                                return ("2b", (i, j, k, p, q))
    return None


def reflection_order(w: AffinePermutation, c: CoxeterElement) -> list[Reflection]:
    """Inversions of ``w`` listed by sorting-word prefixes ``w_1..w_i..w_1``."""
    from .core import identity

    n = w.n
    ordered: list[Reflection] = []
    prefix = identity(n)
    for i in c_sorting_word(w, c).letters:
        s = simple_reflection(n, i)
        ordered.append(Reflection.from_pair(n, prefix(s.a), prefix(s.b)))
        prefix = prefix * s.as_perm()
    return ordered


def reading_nc(w: AffinePermutation, c: CoxeterElement):
    """The sorting-word map: multiply the cover reflections in reflection order.

    Returns the image as a certified noncrossing partition.
    """
    from .core import identity
    from .noncrossing import NoncrossingPartition

    if not is_c_sortable_def(w, c):
        raise NotSortable(f"{w} is not sortable for {c}")
    covers = cover_reflections(w)
    factors = [t for t in reflection_order(w, c) if t in covers]
    assert len(factors) == len(covers)
    product = identity(w.n)
    for t in factors:
        product = product * t.as_perm()
    return NoncrossingPartition.from_perm(product, c)
