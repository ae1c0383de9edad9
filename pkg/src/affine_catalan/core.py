"""The affine symmetric group: windows, reflections, cycles, Coxeter elements.

An affine permutation of period ``n`` is a bijection ``w`` of the integers
with ``w(k + n) = w(k) + n`` and ``w(1) + ... + w(n) = 1 + ... + n``.  It is
stored by its *window* ``[w(1), ..., w(n)]``.

Conventions used throughout the package:

* residues live in ``1..n``; the residue of ``k`` is ``((k - 1) % n) + 1``,
* a reflection is kept in the normal form ``(a, b)`` with ``a`` in ``1..n``,
  ``a < b`` and ``b - a`` not a multiple of ``n``,
* products read left to right but act as functions applied right to left:
  ``(u * v)(k) = u(v(k))``,
* the simple generators are ``s_i = (i, i+1)`` for ``1 <= i <= n - 1`` and
  ``s_0 = (n, n+1)``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence


class ParseError(ValueError):
    """Malformed textual input."""


class InvalidPermutation(ValueError):
    """Window fails the affine permutation invariants."""


class SizeMismatch(ValueError):
    """Operands live in affine symmetric groups of different periods."""


class EmptyPart(ValueError):
    """A Coxeter element needs both parts of its partition nonempty."""


def residue(k: int, n: int) -> int:
    """Residue of ``k`` in ``1..n`` (so ``residue(0, n) == n``)."""
    return (k - 1) % n + 1


@dataclass(frozen=True, order=True)
class AffinePermutation:
    """An affine permutation given by its window ``[w(1), ..., w(n)]``."""

    n: int
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InvalidPermutation(f"period must be at least 2, got {self.n}")
        if len(self.window) != self.n:
            raise InvalidPermutation(
                f"window of length {len(self.window)} for period {self.n}"
            )
        if len({v % self.n for v in self.window}) != self.n:
            raise InvalidPermutation(f"window {list(self.window)} repeats a residue")
        expected = self.n * (self.n + 1) // 2
        if sum(self.window) != expected:
            raise InvalidPermutation(
                f"window {list(self.window)} sums to {sum(self.window)}, expected {expected}"
            )

    def __call__(self, k: int) -> int:
        q, r = divmod(k - 1, self.n)
        return self.window[r] + self.n * q

    def position_of(self, v: int) -> int:
        """The unique ``k`` with ``w(k) == v``, i.e. the inverse applied to ``v``."""
        return self.inverse()(v)

    def inverse(self) -> "AffinePermutation":
        inv = [0] * self.n
        for pos, v in enumerate(self.window, start=1):
            r = residue(v, self.n)
            inv[r - 1] = pos - (v - r)
        return AffinePermutation(self.n, tuple(inv))

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        return compose(self, other)

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def length(self) -> int:
        """Coxeter length, counted as the number of inversions."""
        return len(inversion_set(self))

    def __str__(self) -> str:
        return format_window(self)


def identity(n: int) -> AffinePermutation:
    return AffinePermutation(n, tuple(range(1, n + 1)))


def parse_window(text: str, n: int) -> AffinePermutation:
    """Parse ``[v1,...,vn]`` into an affine permutation.

    >>> parse_window("[1,2,3]", 3).is_identity()
    True
    """
    stripped = text.strip()
    if not (stripped.startswith("[") and stripped.endswith("]")):
        raise ParseError(f"expected [v1,...,vn], got {text!r}")
    body = stripped[1:-1].strip()
    if not body:
        raise ParseError("empty window")
    try:
        values = tuple(int(part.strip()) for part in body.split(","))
    except ValueError as exc:
        raise ParseError(f"bad integer in window {text!r}") from exc
    if len(values) != n:
        raise InvalidPermutation(f"window {text!r} has {len(values)} entries, expected {n}")
    return AffinePermutation(n, values)


def format_window(w: AffinePermutation) -> str:
    return "[" + ",".join(str(v) for v in w.window) + "]"


def compose(u: AffinePermutation, v: AffinePermutation) -> AffinePermutation:
    """The product ``u v`` acting as ``k -> u(v(k))``."""
    if u.n != v.n:
        raise SizeMismatch(f"periods differ: {u.n} vs {v.n}")
    return AffinePermutation(u.n, tuple(u(v(k)) for k in range(1, u.n + 1)))


@dataclass(frozen=True, order=True)
class Reflection:
    """Affine transposition in normal form: swaps ``a + kn`` with ``b + kn``."""

    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if not (1 <= self.a <= self.n):
            raise InvalidPermutation(f"first entry {self.a} not in 1..{self.n}")
        if self.a >= self.b:
            raise InvalidPermutation(f"need a < b, got ({self.a}, {self.b})")
        if (self.b - self.a) % self.n == 0:
            raise InvalidPermutation(f"({self.a}, {self.b}) fixes a residue class")

    @staticmethod
    def from_pair(n: int, x: int, y: int) -> "Reflection":
        """Normal form of the transposition swapping the classes of ``x`` and ``y``."""
        if x == y or (x - y) % n == 0:
            raise InvalidPermutation(f"({x}, {y}) is not a transposition mod {n}")
        lo, hi = (x, y) if x < y else (y, x)
        shift = lo - residue(lo, n)
        return Reflection(n, lo - shift, hi - shift)

    @staticmethod
    def from_codec(n: int, i: int, j: int, p: int) -> "Reflection":
        """The transposition ``(i, j)_p``, i.e. swapping ``i`` with ``j + p n``."""
        return Reflection.from_pair(n, i, j + p * n)

    def codec(self) -> tuple[int, int, int]:
        """The unique ``(i, j)_p`` form with ``p >= (i > j)``: swap of ``i`` and ``j + pn``."""
        i = residue(self.a, self.n)
        j = residue(self.b, self.n)
        return (i, j, (self.b - j) // self.n)

    def shift(self) -> int:
        """The ``p`` of the normalized ``(i, j)_p`` form."""
        return self.codec()[2]

    def as_perm(self) -> AffinePermutation:
        window = list(range(1, self.n + 1))
        ra, rb = residue(self.a, self.n), residue(self.b, self.n)
        window[ra - 1] = self.b + (ra - self.a)
        window[rb - 1] = self.a + (rb - self.b)
        return AffinePermutation(self.n, tuple(window))

    def __call__(self, k: int) -> int:
        r = residue(k, self.n)
        if r == residue(self.a, self.n):
            return self.b + (k - self.a)
        if r == residue(self.b, self.n):
            return self.a + (k - self.b)
        return k

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


def simple_reflection(n: int, i: int) -> Reflection:
    """``s_i``: ``(i, i+1)`` for ``1 <= i < n`` and ``(n, n+1)`` for ``i = 0``."""
    if not 0 <= i <= n - 1:
        raise InvalidPermutation(f"generator index {i} not in 0..{n - 1}")
    if i == 0:
        return Reflection(n, n, n + 1)
    return Reflection(n, i, i + 1)


def simple_generators(n: int) -> list[Reflection]:
    return [simple_reflection(n, i) for i in range(n)]


@dataclass(frozen=True)
class ShiftedCycle:
    """Cycle with shift: ``entries[i] -> entries[i+1]`` and last ``-> first + shift*n``."""

    n: int
    entries: tuple[int, ...]
    shift: int = 0

    def __post_init__(self) -> None:
        if not self.entries:
            raise InvalidPermutation("empty cycle")
        if len({e % self.n for e in self.entries}) != len(self.entries):
            raise InvalidPermutation(f"cycle entries {list(self.entries)} repeat a residue")

    def __call__(self, k: int) -> int:
        """Apply the cycle to ``k``; fixes anything outside the entry classes.

        A cycle with nonzero shift is not on its own an affine permutation
        (its window sum is off by ``shift * n``); only products whose shifts
        cancel are.  Application is still well defined pointwise.
        """
        m = len(self.entries)
        for idx, e in enumerate(self.entries):
            if (k - e) % self.n == 0:
                target = self.entries[idx + 1] if idx + 1 < m else self.entries[0] + self.shift * self.n
                return target + (k - e)
        return k

    def residues(self) -> frozenset[int]:
        return frozenset(residue(e, self.n) for e in self.entries)

    def __str__(self) -> str:
        body = "(" + ",".join(str(e) for e in self.entries) + ")"
        if self.shift > 0:
            return body + f"[+{self.shift}]"
        if self.shift < 0:
            return body + f"[{self.shift}]"
        return body


_CYCLE_RE = re.compile(r"\(\s*([-\d,\s]+?)\s*\)\s*(\[\s*([+-]?\d+)\s*\])?")


def parse_cycles(text: str, n: int) -> list[ShiftedCycle]:
    """Parse a juxtaposed product like ``(1,2)[+1](3)[-1]``."""
    cycles: list[ShiftedCycle] = []
    pos = 0
    stripped = text.strip()
    while pos < len(stripped):
        m = _CYCLE_RE.match(stripped, pos)
        if m is None:
            raise ParseError(f"bad cycle syntax at {stripped[pos:]!r}")
        try:
            entries = tuple(int(part.strip()) for part in m.group(1).split(","))
        except ValueError as exc:
            raise ParseError(f"bad integer in cycle {m.group(0)!r}") from exc
        shift = int(m.group(3)) if m.group(3) is not None else 0
        cycles.append(ShiftedCycle(n, entries, shift))
        pos = m.end()
        while pos < len(stripped) and stripped[pos].isspace():
            pos += 1
    if not cycles:
        raise ParseError(f"no cycles in {text!r}")
    return cycles


def format_cycles(cycles: Sequence[ShiftedCycle]) -> str:
    return "".join(str(c) for c in cycles) if cycles else "()"


def cycles_as_perm(cycles: Sequence[ShiftedCycle], n: int) -> AffinePermutation:
    """Product of cycles as an affine permutation (shifts must cancel)."""
    window = []
    for k in range(1, n + 1):
        v = k
        for c in reversed(cycles):
            v = c(v)
        window.append(v)
    return AffinePermutation(n, tuple(window))


def cycle_decomposition(w: AffinePermutation) -> list[ShiftedCycle]:
    """Disjoint cycles covering the non-fixed orbits of ``w``.

    Shifts sum to zero and the product of the cycles reconstructs ``w``.

    >>> [str(c) for c in cycle_decomposition(parse_window("[2,4,0]", 3))]
    ['(1,2)[+1]', '(3)[-1]']
    """
    n = w.n
    seen: set[int] = set()
    cycles: list[ShiftedCycle] = []
    for r in range(1, n + 1):
        if r in seen:
            continue
        entries = [r]
        x = w(r)
        while residue(x, n) != r:
            entries.append(x)
            x = w(x)
        shift, rem = divmod(x - r, n)
        assert rem == 0
        seen.update(residue(e, n) for e in entries)
        if len(entries) == 1 and shift == 0:
            continue
        cycles.append(ShiftedCycle(n, tuple(entries), shift))
    return cycles


@dataclass(frozen=True)
class CoxeterElement:
    """Coxeter element of the affine symmetric group, encoded by its partition.

    ``Lc`` holds the residues ``i`` with ``c(i) > i``; the complement ``Rc``
    holds those moved down.  Both must be nonempty.
    """

    n: int
    Lc: frozenset[int]

    def __post_init__(self) -> None:
        if not all(1 <= i <= self.n for i in self.Lc):
            raise EmptyPart(f"L part {sorted(self.Lc)} not inside 1..{self.n}")
        if not self.Lc or len(self.Lc) == self.n:
            raise EmptyPart("both parts of the partition must be nonempty")

    @property
    def Rc(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.Lc

    def in_L(self, k: int) -> bool:
        """Whether ``k`` lies in the translation closure of the L part."""
        return residue(k, self.n) in self.Lc

    def in_R(self, k: int) -> bool:
        return residue(k, self.n) not in self.Lc

    @property
    def perm(self) -> AffinePermutation:
        return _coxeter_perm(self.n, tuple(sorted(self.Lc)))

    def cycles(self) -> tuple[ShiftedCycle, ShiftedCycle]:
        ups = tuple(sorted(self.Lc))
        downs = tuple(sorted(self.Rc, reverse=True))
        return (ShiftedCycle(self.n, ups, 1), ShiftedCycle(self.n, downs, -1))

    def reduced_word(self) -> tuple[int, ...]:
        """A fixed reduced word (each generator once), by greedy descent peeling.

        At each step the smallest generator index that is a left descent of the
        remainder is taken, which pins one word per element for reproducibility.
        """
        return _coxeter_word(self.n, tuple(sorted(self.Lc)))

    def __str__(self) -> str:
        return f"L={{{','.join(map(str, sorted(self.Lc)))}}}|R={{{','.join(map(str, sorted(self.Rc)))}}}"


@lru_cache(maxsize=None)
def _coxeter_perm(n: int, lc: tuple[int, ...]) -> AffinePermutation:
    c = CoxeterElement(n, frozenset(lc))
    return cycles_as_perm(list(c.cycles()), n)


@lru_cache(maxsize=None)
def _coxeter_word(n: int, lc: tuple[int, ...]) -> tuple[int, ...]:
    w = _coxeter_perm(n, lc)
    word: list[int] = []
    inv = w.inverse()
    while not w.is_identity():
        for i in range(n):
            s = simple_reflection(n, i)
            if inv(s.a) > inv(s.b):
                word.append(i)
                w = s.as_perm() * w
                inv = w.inverse()
                break
        else:
            raise AssertionError("nonidentity element without a left descent")
    return tuple(word)


def coxeter_from_partition(n: int, Lc: Iterable[int]) -> CoxeterElement:
    return CoxeterElement(n, frozenset(Lc))


def all_coxeter_elements(n: int) -> list[CoxeterElement]:
    out = []
    for k in range(1, n):
        for sub in itertools.combinations(range(1, n + 1), k):
            out.append(CoxeterElement(n, frozenset(sub)))
    return out


def is_coxeter(w: AffinePermutation) -> Optional[CoxeterElement]:
    """The partition of ``w`` when it is a Coxeter element, else ``None``."""
    lc = frozenset(r for r in range(1, w.n + 1) if w(r) > r)
    if not lc or len(lc) == w.n:
        return None
    candidate = CoxeterElement(w.n, lc)
    return candidate if candidate.perm == w else None


def inversion_set(w: AffinePermutation) -> frozenset[Reflection]:
    """All reflections ``(a, b)`` with ``a < b`` but ``b`` before ``a`` in ``w``.

    The set is finite and its size is the Coxeter length of ``w``.
    """
    n = w.n
    inv = w.inverse()
    positions = {v: inv(v) for v in range(1, n + 1)}
    max_pos = max(positions.values())
    min_pos = min(positions.values())
    out: set[Reflection] = set()
    for a in range(1, n + 1):
        pa = positions[a]
        limit = (pa - min_pos) // n + 2
        for k in range(limit + 1):
            for r in range(1, n + 1):
                b = r + k * n
                if b <= a or (b - a) % n == 0:
                    continue
                if positions[r] + k * n < pa:
                    out.add(Reflection(n, a, b))
    # sanity: nothing near the bound should be missing
    assert all(inv(t.b) < inv(t.a) for t in out)
    return frozenset(out)


def cover_reflections(w: AffinePermutation) -> frozenset[Reflection]:
    """Reflections realized by descents ``w(u) > w(u+1)`` of the one-line notation."""
    n = w.n
    out: set[Reflection] = set()
    for u in range(1, n + 1):
        x, y = w(u), w(u + 1)
        if x > y:
            out.add(Reflection.from_pair(n, y, x))
    return frozenset(out)


def weak_order_ball(n: int, max_length: int) -> dict[AffinePermutation, int]:
    """All elements of length at most ``max_length``, found by breadth-first search."""
    ball = {identity(n): 0}
    frontier = [identity(n)]
    for length in range(1, max_length + 1):
        nxt = []
        for w in frontier:
            for i in range(n):
                s = simple_reflection(n, i)
                if w(s.a) < w(s.b):
                    u = w * s.as_perm()
                    if u not in ball:
                        ball[u] = length
                        nxt.append(u)
        frontier = nxt
    return ball
