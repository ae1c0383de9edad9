"""Root coordinates, the skew-symmetrized Euler form, and alignment.

Roots are integer vectors over the simple roots ``alpha_0 .. alpha_{n-1}``;
the null root ``delta`` is their sum.  A reflection ``(i, j)_p`` (swap of
``i`` and ``j + pn``) has root ``p*delta + beta`` or ``p*delta - beta`` where
``beta`` is the interval sum between the two residues.

The bilinear form ``omega_c`` orients pairs of reflections; its sign on the
canonical generators of a rank-two subgroup drives the alignment test, which
characterizes sortability.  The symmetric Cartan matrix of the cyclic diagram
is fixed (entries 2, -1, 0), which the form's sign does not depend on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .core import (
    AffinePermutation,
    CoxeterElement,
    Reflection,
    inversion_set,
    residue,
    simple_generators,
)


class UnsupportedRank(ValueError):
    """The +-1 adjacency table needs n >= 3 (n = 2 is the infinite dihedral case)."""


class NotAPositiveRoot(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


class CommutingPair(ValueError):
    """The two reflections generate a reducible (commuting) subgroup."""


@dataclass(frozen=True)
class Root:
    """Integer coordinates over ``alpha_0 .. alpha_{n-1}``."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.n:
            raise NotAPositiveRoot(f"{len(self.coeffs)} coordinates for rank {self.n}")

    def __add__(self, other: "Root") -> "Root":
        return Root(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Root") -> "Root":
        return Root(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coeffs) and any(c > 0 for c in self.coeffs)

    def __str__(self) -> str:
        terms = []
        for idx, coeff in enumerate(self.coeffs):
            if coeff:
                terms.append(f"{coeff:+d}*a{idx}")
        return " ".join(terms) if terms else "0"


def delta(n: int) -> Root:
    return Root(n, (1,) * n)


def root_of_reflection(t: Reflection) -> Root:
    """The positive root of an affine transposition.

    >>> root_of_reflection(Reflection(6, 3, 13)).coeffs
    (2, 1, 1, 2, 2, 2)
    """
    n = t.n
    a0 = t.a % n
    shift = t.a - a0
    b1 = t.b - shift
    j0 = b1 % n
    p = (b1 - j0) // n
    coeffs = [p] * n
    if a0 < j0:
        for idx in range(a0, j0):
            coeffs[idx] += 1
    else:
        for idx in range(j0, a0):
            coeffs[idx] -= 1
    root = Root(n, tuple(coeffs))
    assert root.is_positive()
    return root


def reflection_of_root(r: Root) -> Reflection:
    """Inverse of :func:`root_of_reflection`."""
    n = r.n
    if any(c < 0 for c in r.coeffs):
        raise NotAPositiveRoot(f"negative coordinate in {r}")
    low = min(r.coeffs)
    marks = [c - low for c in r.coeffs]
    if set(marks) != {0, 1}:
        raise NotAPositiveRoot(f"{r} is not a real root")
    ones = [idx for idx, m in enumerate(marks) if m == 1]
    runs_break = [idx for idx in ones if (idx - 1) % n not in ones]
    if len(runs_break) != 1:
        raise NotAPositiveRoot(f"support of {r} is not a cyclic interval")
    start = runs_break[0]
    end = start + len(ones)  # exclusive, may exceed n when the support wraps
    if end <= n:
        # low*delta + (alpha_start + ... + alpha_{end-1})
        return Reflection.from_pair(n, start, end + low * n)
    # wrapping support: (low+1)*delta - (alpha_{end mod n} + ... + alpha_{start-1})
    lo, hi = end % n, start
    return Reflection.from_pair(n, hi, lo + (low + 1) * n)


def omega_matrix(c: CoxeterElement) -> tuple[tuple[int, ...], ...]:
    """Values of the form on pairs of simple roots, indexed ``0..n-1``."""
    n = c.n
    if n < 3:
        raise UnsupportedRank(
            "the adjacency table needs n >= 3; rank-two pairs use omega_A1_pair"
        )
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        sign = -1 if c.in_R(i if i >= 1 else n) else 1
        m[(i - 1) % n][i] = sign
        m[i][(i - 1) % n] = -sign
    return tuple(tuple(row) for row in m)


def omega_c(c: CoxeterElement, x: Root, y: Root) -> int:
    """Bilinear expansion of the skew form; exact integer."""
    m = omega_matrix(c)
    n = c.n
    total = 0
    for i in range(n):
        xi = x.coeffs[i]
        if xi:
            left = (i - 1) % n
            right = (i + 1) % n
            total += xi * (m[i][right] * y.coeffs[right] + m[i][left] * y.coeffs[left])
    return total


def omega_reflections(c: CoxeterElement, t1: Reflection, t2: Reflection) -> int:
    return omega_c(c, root_of_reflection(t1), root_of_reflection(t2))


def omega_shared_index(c: CoxeterElement, i: int, j: int, k: int, p: int, q: int) -> int:
    """Closed form of the form on ``(i,j)_p`` and ``(j,k)_q`` sharing ``j``.

    ``i, j, k`` are distinct residues in ``1..n``; ``p >= (i > j)`` and
    ``q >= (j > k)``.  The value is always odd.
    """
    n = c.n
    if len({i % n, j % n, k % n}) != 3:
        raise PreconditionViolated(f"residues {i}, {j}, {k} are not distinct mod {n}")
    if not all(1 <= v <= n for v in (i, j, k)):
        raise PreconditionViolated(f"residues {i}, {j}, {k} not all in 1..{n}")
    if p < (1 if i > j else 0) or q < (1 if j > k else 0):
        raise PreconditionViolated(f"shifts p={p}, q={q} too small for ({i},{j},{k})")

    order = sorted((i, j, k))
    mid = order[1]
    # parity of the permutation sending (i, j, k) to increasing order
    seq = (i, j, k)
    inversions = sum(
        1 for a, b in itertools.combinations(range(3), 2) if seq[a] > seq[b]
    )
    eps = -1 if inversions % 2 else 1

    def in_r(v: int) -> int:
        return 1 if c.in_R(v) else 0

    value = eps * (-1) ** in_r(mid) - 2 * p * (in_r(j) - in_r(k)) + 2 * q * (in_r(i) - in_r(j))
    assert value % 2 != 0
    return value


def omega_A1_pair(c: CoxeterElement, i: int, j: int) -> int:
    """The form on the canonical generators ``(i,j)_0`` and ``(j,i)_1``, ``i < j``.

    Lies in ``{-2, 0, 2}``; zero exactly when ``i`` and ``j`` sit in the same
    part of the partition.
    """
    if not 1 <= i < j <= c.n or (j - i) % c.n == 0:
        raise PreconditionViolated(f"({i}, {j}) is not an ordered residue pair")
    return 2 * ((1 if c.in_R(i) else 0) - (1 if c.in_R(j) else 0))


@dataclass(frozen=True)
class ParabolicDescriptor:
    """A noncommutative generalized rank-two subgroup: finite A2 or infinite A1~."""

    n: int
    kind: str  # "A2" | "A1~"
    canonical_generators: tuple[Reflection, Reflection]
    # A2 only: the middle reflection (product of the generators either way round)
    middle: Optional[Reflection] = None

    def reflections(self, max_shift: int = 3) -> list[Reflection]:
        """All member reflections, the infinite family truncated at ``max_shift``."""
        if self.kind == "A2":
            u1, u3 = self.canonical_generators
            assert self.middle is not None
            return [u1, self.middle, u3]
        r1, r2 = sorted(self.residue_pair())
        out = [Reflection.from_codec(self.n, r1, r2, p) for p in range(max_shift + 1)]
        out += [Reflection.from_codec(self.n, r2, r1, p) for p in range(1, max_shift + 1)]
        return out

    def residue_pair(self) -> frozenset[int]:
        t = self.canonical_generators[0]
        return frozenset({residue(t.a, self.n), residue(t.b, self.n)})

    def contains(self, t: Reflection) -> bool:
        if self.kind == "A2":
            u1, u3 = self.canonical_generators
            return t in (u1, self.middle, u3)
        return frozenset({residue(t.a, self.n), residue(t.b, self.n)}) == self.residue_pair()


def _shared_residues(n: int, t1: Reflection, t2: Reflection) -> frozenset[int]:
    r1 = {residue(t1.a, n), residue(t1.b, n)}
    r2 = {residue(t2.a, n), residue(t2.b, n)}
    return frozenset(r1 & r2)


def rank2_parabolic(t1: Reflection, t2: Reflection) -> ParabolicDescriptor:
    """The generalized rank-two parabolic subgroup containing two reflections.

    Raises :class:`CommutingPair` when the reflections commute (no shared
    residue class), since that subgroup carries no alignment constraint.
    """
    n = t1.n
    if t1 == t2:
        raise PreconditionViolated("need two distinct reflections")
    shared = _shared_residues(n, t1, t2)
    if not shared:
        raise CommutingPair(f"{t1} and {t2} commute")
    if len(shared) == 2:
        r1, r2 = sorted(shared)
        gens = (
            Reflection.from_codec(n, r1, r2, 0),
            Reflection.from_codec(n, r2, r1, 1),
        )
        return ParabolicDescriptor(n, "A1~", gens)
    # A2: conjugation yields the third reflection; the middle root is the sum
    t3 = Reflection.from_pair(n, t1(t2.a), t1(t2.b))
    triple = [t1, t2, t3]
    roots = [root_of_reflection(t) for t in triple]
    middle_idx = None
    for idx in range(3):
        others = [roots[m] for m in range(3) if m != idx]
        if roots[idx] == others[0] + others[1]:
            middle_idx = idx
    if middle_idx is None:
        raise PreconditionViolated(f"{t1}, {t2} do not span an A2 root subsystem")
    outer = [triple[m] for m in range(3) if m != middle_idx]
    s = next(iter(_shared_residues(n, outer[0], outer[1])))
    first = [t for t in outer if residue(t.b, n) == s]
    last = [t for t in outer if residue(t.a, n) == s]
    assert len(first) == 1 and len(last) == 1
    return ParabolicDescriptor(n, "A2", (first[0], last[0]), middle=triple[middle_idx])


def oriented_sequence(
    c: CoxeterElement, parab: ParabolicDescriptor
) -> tuple[int, tuple[Reflection, ...]]:
    """Orientation sign and, for A2, the reflection sequence in increasing order.

    For the infinite kind only the sign and the two generators matter; the
    returned tuple then lists the generators with the positive end first.
    """
    u1, u3 = parab.canonical_generators
    if parab.kind == "A2":
        (i, j, p) = u1.codec()
        (j2, k, q) = u3.codec()
        assert j == j2
        sign = 1 if omega_shared_index(c, i, j, k, p, q) > 0 else -1
        assert parab.middle is not None
        seq = (u1, parab.middle, u3) if sign > 0 else (u3, parab.middle, u1)
        return sign, seq
    r1, r2 = sorted(parab.residue_pair())
    value = omega_A1_pair(c, r1, r2)
    if value == 0:
        return 0, (u1, u3)
    return (1, (u1, u3)) if value > 0 else (-1, (u3, u1))


def _aligned_a1(
    c: CoxeterElement, inv: frozenset[Reflection], r1: int, r2: int
) -> bool:
    n = c.n
    members = [
        t for t in inv
        if frozenset({residue(t.a, n), residue(t.b, n)}) == frozenset({r1, r2})
    ]
    value = omega_A1_pair(c, r1, r2)
    if value == 0:
        return len(members) <= 1
    if not members:
        return True
    # positive end u_1 is (r1,r2)_0 when the form is positive, (r2,r1)_1 otherwise
    if value > 0:
        head_first, head_other = r1, r2
        tail = Reflection.from_codec(n, r2, r1, 1)
    else:
        head_first, head_other = r2, r1
        tail = Reflection.from_codec(n, r1, r2, 0)
    if len(members) == 1 and members[0] == tail:
        return True
    indices = []
    for t in members:
        i, j, p = t.codec()
        if i != head_first or j != head_other:
            return False
        indices.append(p)
    offset = 1 if head_first > head_other else 0
    return sorted(indices) == list(range(offset, offset + len(indices)))


def _aligned_a2(
    c: CoxeterElement, inv: frozenset[Reflection], parab: ParabolicDescriptor
) -> bool:
    _, seq = oriented_sequence(c, parab)
    mask = tuple(t in inv for t in seq)
    return mask in {
        (False, False, False),
        (True, False, False),
        (True, True, False),
        (True, True, True),
        (False, False, True),
    }


def is_c_aligned(w: AffinePermutation, c: CoxeterElement) -> bool:
    """Alignment of the inversion set with the form on every rank-two subgroup.

    Equivalent to sortability; checked against the sorting-word definition in
    the test suite.  Only subgroups generated by pairs of inversions (or an
    inversion and a simple generator) can fail, so those are the ones scanned.
    """
    n = w.n
    inv = inversion_set(w)
    pool = list(inv) + [s for s in simple_generators(n) if s not in inv]
    seen_a1: set[frozenset[int]] = set()
    seen_a2: set[frozenset[Reflection]] = set()
    for t1, t2 in itertools.combinations(pool, 2):
        if t1 not in inv and t2 not in inv:
            continue
        shared = _shared_residues(n, t1, t2)
        if not shared:
            continue
        if len(shared) == 2:
            key1 = frozenset({residue(t1.a, n), residue(t1.b, n)})
            if key1 in seen_a1:
                continue
            seen_a1.add(key1)
            r1, r2 = sorted(key1)
            if not _aligned_a1(c, inv, r1, r2):
                return False
        else:
            parab = rank2_parabolic(t1, t2)
            key2 = frozenset(parab.reflections())
            if key2 in seen_a2:
                continue
            seen_a2.add(key2)
            if not _aligned_a2(c, inv, parab):
                return False
    return True
