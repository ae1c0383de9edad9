"""Desk-scale verification suites behind the ``verify`` command.

Each criterion is a function returning (ok, detail); ``run_all`` times them
and reports one line per criterion.  ``level="quick"`` trims corpus bounds to
stay interactive, ``level="full"`` runs the complete bounded enumerations.
"""

from __future__ import annotations

import itertools
import os
import random
import time
from typing import Callable

from . import (
    CurvedPolygonModel,
    Reflection,
    all_coxeter_elements,
    c_sequence,
    collapse_period,
    coxeter_from_partition,
    cycles_as_perm,
    enumerate_diagrams,
    forbidden_inversion_witness,
    identity,
    is_c_aligned,
    is_c_noncrossing,
    is_c_sortable_def,
    is_c_sortable_pattern,
    is_c_sortable_tito,
    nc_tilde,
    ncad_c,
    omega_A1_pair,
    omega_reflections,
    omega_shared_index,
    parse_cycles,
    parse_tito,
    parse_window,
    polygons_cross,
    reading_nc,
    tito_c,
    tito_of_affine_perm,
    weak_order_ball,
)
from .core import AffinePermutation
from .noncrossing import absolute_leq_oracle


# sign of the shared-index form, by membership of (i, j, k) in the up part
# (True = up/L) and by the relative order of the three residues
_ORDERS = ("ijk", "ikj", "kij", "kji", "jki", "jik")
EXPECTED_SIGNS: dict[tuple[bool, bool, bool], tuple[int, ...]] = {
    (True, True, True): (1, -1, 1, -1, 1, -1),
    (True, True, False): (1, 1, 1, 1, 1, 1),
    (True, False, True): (-1, -1, -1, -1, -1, -1),
    (True, False, False): (-1, -1, -1, -1, -1, -1),
    (False, True, True): (1, 1, 1, 1, 1, 1),
    (False, True, False): (1, 1, 1, 1, 1, 1),
    (False, False, True): (-1, -1, -1, -1, -1, -1),
    (False, False, False): (-1, 1, -1, 1, -1, 1),
}


def _seed() -> int:
    return int(os.environ.get("ACK_SEED", "20240901"))


def criterion_1(level: str) -> tuple[bool, str]:
    """Golden values of the skew form."""
    c6 = coxeter_from_partition(6, {1, 2, 4})
    v6 = omega_reflections(c6, Reflection(6, 3, 13), Reflection(6, 2, 11))
    c14 = coxeter_from_partition(14, {1, 4, 6, 7, 8, 13, 14})
    triple = (
        omega_shared_index(c14, 3, 11, 6, 12, 31),
        omega_shared_index(c14, 2, 1, 14, 16, 0),
        omega_shared_index(c14, 14, 5, 13, 18, 21),
    )
    pairs = (
        omega_A1_pair(c14, 4, 14),
        omega_A1_pair(c14, 4, 10),
        omega_A1_pair(c14, 11, 14),
    )
    ok = v6 == 6 and triple == (-25, 1, -77) and pairs == (0, -2, 2)
    return ok, f"n=6 value {v6}; shared-index triple {triple}; rank-two pairs {pairs}"


def criterion_2(level: str) -> tuple[bool, str]:
    """Sign-table sweep for the shared-index form; every value odd."""
    ns = (4, 5) if level == "quick" else (4, 5, 6, 7, 8)
    shift_max = 2 if level == "quick" else 5
    checked = 0
    for n in ns:
        for row, signs in EXPECTED_SIGNS.items():
            for order, expected in zip(_ORDERS, signs):
                # realize the order on the values 1 < 2 < 3 and build a
                # partition putting each one on the prescribed side
                value_of = {letter: order.index(letter) + 1 for letter in "ijk"}
                i, j, k = value_of["i"], value_of["j"], value_of["k"]
                lc = {value_of[letter] for letter, up in zip("ijk", row) if up}
                c = coxeter_from_partition(n, lc or {4})
                for p in range(1 if i > j else 0, shift_max + 1):
                    for q in range(1 if j > k else 0, shift_max + 1):
                        value = omega_shared_index(c, i, j, k, p, q)
                        checked += 1
                        if value % 2 == 0:
                            return False, f"even value {value} at {(n, row, order, p, q)}"
                        if (1 if value > 0 else -1) != expected:
                            return False, f"sign mismatch at {(n, row, order, p, q)}: {value}"
    return True, f"{checked} signed values match the table"


def _corpus(level: str) -> list[tuple[int, int]]:
    return [(3, 6)] if level == "quick" else [(3, 8), (4, 8)]


def criterion_3(level: str) -> tuple[bool, str]:
    """Equivalence of the four sortability routes on bounded corpora."""
    checked = 0
    for n, max_len in _corpus(level):
        ball = weak_order_ball(n, max_len)
        for c in all_coxeter_elements(n):
            for w in ball:
                a = is_c_sortable_def(w, c)
                b = is_c_sortable_pattern(w, c)[0]
                d = forbidden_inversion_witness(w, c) is None
                e = is_c_aligned(w, c)
                checked += 1
                if not (a == b == d == e):
                    return False, f"routes disagree on {w} with {c}: {(a, b, d, e)}"
    return True, f"{checked} (element, Coxeter) pairs agree on all four routes"


GOLDEN_TITOS = [
    ("[9,6]~[18,11,5,10,4][3,2,7]", True),
    ("[14,11,9,15,16,3,12,8,7,10]", True),
    ("[5,4,6,1]~[17,10,9][3,2,8]", True),
    ("[19,16]~[5,11,18,10,4][3,2,7]", False),
    ("[5,4,6,1]~[7,0,-1][3,8,2]", False),
]


def criterion_4(level: str) -> tuple[bool, str]:
    """Golden sortability classifications."""
    c = coxeter_from_partition(10, {1, 4, 6, 9})
    s1 = parse_window("[0,1,4,3,9,6,5,8,7,12]", 10)
    s2 = parse_window("[-2,0,3,4,5,9,6,11,7,12]", 10)
    ok1, witness = is_c_sortable_pattern(s1, c)
    ok2, _ = is_c_sortable_pattern(s2, c)
    if ok1 or witness is None or not ok2:
        return False, f"window goldens failed: {ok1}, {witness}, {ok2}"
    c_blocks = coxeter_from_partition(10, {1, 4, 5, 6, 9})
    for text, expected in GOLDEN_TITOS:
        got, _ = is_c_sortable_tito(parse_tito(text, 10), c_blocks)
        if got != expected:
            return False, f"{text} classified {got}, expected {expected}"
    return True, f"witness {witness}; five block-order goldens match"


def _example_diagrams():
    c = coxeter_from_partition(10, {1, 4, 6, 8})
    from .arcs import build_diagram

    a = build_diagram(10, c, [(1, 6), (6, 8), (7, 15), (9, 12), (12, 13)])
    b = build_diagram(10, c, [(1, 10), (8, 12), (12, 13), (4, 6), (5, 7)])
    return c, a, b


def criterion_5(level: str) -> tuple[bool, str]:
    """Exact inverse-map windows at prescribed anchors."""
    _, a, b = _example_diagrams()
    t_a = tito_c(a, 2)
    w_a = [blk.window for blk in t_a.blocks]
    if w_a != [(14, 18, 16, 11, 15, 7, 13, 12, 9, 10)]:
        return False, f"window at anchor 2 is {w_a}"
    t4 = tito_c(b, 4)
    w4 = [blk.window for blk in t4.blocks]
    if w4 != [(6, 4), (20, 11, 13, 12, 8), (-3, -5, -1)]:
        return False, f"anchor-4 windows {w4}"
    tm1 = tito_c(b, -1)
    wm1 = [blk.window for blk in tm1.blocks]
    if wm1 != [(-4, -6), (3, 2, -2, 0, -9), (-3, -5, -1)]:
        return False, f"anchor--1 windows {wm1}"
    if t4 != tm1:
        return False, "anchor 4 and anchor -1 orders differ"
    return True, "three golden windows and their canonical equality"


def _enumeration(level: str):
    if level == "quick":
        ns, max_arcs = (3,), 3
    else:
        ns, max_arcs = (3, 4), 4
    for n in ns:
        for c in all_coxeter_elements(n):
            for d in enumerate_diagrams(c, max_span=2 * n, max_arcs=max_arcs):
                yield c, d


def criterion_6(level: str) -> tuple[bool, str]:
    """Both round trips plus anchor independence over the enumeration."""
    count = 0
    for c, d in _enumeration(level):
        n = c.n
        t = tito_c(d, 1)
        if ncad_c(t, c) != d:
            return False, f"cover arcs of tito_c({d}) differ"
        if tito_c(ncad_c(t, c), 1) != t:
            return False, f"order round trip failed on {d}"
        anchors = range(1, (n if level == "quick" else 3 * n) + 1)
        for a in anchors:
            if tito_c(d, a) != t:
                return False, f"anchor {a} changes tito_c on {d}"
        count += 1
    # round trip 2 on orders coming from sortable permutations
    checked_orders = 0
    for n, max_len in _corpus(level):
        ball = weak_order_ball(n, min(max_len, 6) if level == "quick" else max_len)
        for c in all_coxeter_elements(n):
            for w in ball:
                if not is_c_sortable_pattern(w, c)[0]:
                    continue
                t = tito_of_affine_perm(w)
                if tito_c(ncad_c(t, c), 1) != t:
                    return False, f"permutation order round trip failed on {w}, {c}"
                checked_orders += 1
    return True, f"{count} diagrams and {checked_orders} sortable orders round-trip"


def criterion_7(level: str) -> tuple[bool, str]:
    """The generalized map restricts to the sorting-word map."""
    c3 = coxeter_from_partition(3, {1, 2})
    w = parse_window("[4,2,0]", 3)
    golden = reading_nc(w, c3)
    s = [Reflection(3, 3, 4), Reflection(3, 1, 2), Reflection(3, 2, 3)]
    expected = s[0].as_perm() * s[1].as_perm() * s[2].as_perm() * s[0].as_perm()
    if golden.perm != expected:
        return False, f"first golden image is {golden.perm}"
    c4 = coxeter_from_partition(4, {1, 2, 3})
    direct = nc_tilde(parse_tito("[1,2]~[3,0]", 4), c4)
    if direct.perm != parse_window("[1,2,7,0]", 4):
        return False, f"second golden image is {direct.perm}"
    checked = 0
    for n, max_len in _corpus(level):
        ball = weak_order_ball(n, max_len)
        for c in all_coxeter_elements(n):
            for v in ball:
                if not is_c_sortable_def(v, c):
                    continue
                if nc_tilde(tito_of_affine_perm(v), c) != reading_nc(v, c):
                    return False, f"maps differ on {v} with {c}"
                checked += 1
    return True, f"two goldens plus {checked} sortable elements agree"


def criterion_8(level: str) -> tuple[bool, str]:
    """Membership test against the length-identity oracle, plus the annulus golden."""
    n = 3
    pool = [
        Reflection.from_codec(n, i, j, p)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
        for p in range(1 if i > j else 0, 3)
    ]
    elements = {identity(n)}
    frontier = {identity(n)}
    rounds = 2 if level == "quick" else 3
    for _ in range(rounds):
        frontier = {w * t.as_perm() for w in frontier for t in pool}
        elements |= frontier
    checked = 0
    for c in all_coxeter_elements(n):
        for x in elements:
            if is_c_noncrossing(x, c) != absolute_leq_oracle(x, c, 3):
                return False, f"oracle disagrees on {x} with {c}"
            checked += 1
    c10 = coxeter_from_partition(10, {2, 4, 6, 8, 9, 10})
    sigma = cycles_as_perm(parse_cycles("(-1,2)(1,-3,-5)(4,8)[+1](3)[-1]", 10), 10)
    if not is_c_noncrossing(sigma, c10):
        return False, "annulus example rejected"
    blocks = [
        CurvedPolygonModel(10, frozenset({6}), "embedded"),
        CurvedPolygonModel(10, frozenset({10}), "embedded"),
        CurvedPolygonModel(10, frozenset({-1, 2}), "embedded"),
        CurvedPolygonModel(10, frozenset({-5, -3, 1}), "embedded"),
        CurvedPolygonModel(10, frozenset({4, 8, 3}), "annular"),
    ]
    for p, q in itertools.combinations(blocks, 2):
        if polygons_cross(c10, p, q):
            return False, f"annulus blocks {sorted(p.orbit)} and {sorted(q.orbit)} cross"
    return True, f"{checked} elements agree with the oracle; annulus golden accepted"


def criterion_9(level: str) -> tuple[bool, str]:
    """Coxeter-element count and the embedded finite-group Catalan count."""
    tops = (2, 3, 4, 5, 6) if level == "quick" else (2, 3, 4, 5, 6, 7, 8)
    for n in tops:
        count = len({c.perm for c in all_coxeter_elements(n)})
        if count != 2**n - 2:
            return False, f"{count} Coxeter elements at n={n}"
    n = 4
    finite_perms = [
        AffinePermutation(n, perm) for perm in itertools.permutations(range(1, n + 1))
    ]
    for interior_l in ({}, {2}, {3}, {2, 3}):
        c_hat = coxeter_from_partition(n, set(interior_l) | {1})
        count = sum(1 for w in finite_perms if is_c_sortable_pattern(w, c_hat)[0])
        if count != 14:
            return False, f"embedded sortable count {count} for L={sorted(interior_l)}"
    return True, "2^n - 2 Coxeter elements; Catalan(4) = 14 embedded sortables"


def criterion_10(level: str) -> tuple[bool, str]:
    """Period independence of the walk, and validity of the collapse."""
    infinite = 0
    for c, d in _enumeration(level):
        n = c.n
        cs1 = c_sequence(d, 1)
        if cs1.finite:
            for a in range(2, (n if level == "quick" else 2 * n) + 1):
                if not c_sequence(d, a).finite:
                    return False, f"finiteness depends on the anchor for {d}"
            continue
        infinite += 1
        base = cs1.period_class()
        for a in range(2, (n if level == "quick" else 2 * n) + 1):
            cs = c_sequence(d, a)
            if cs.finite or cs.period_class() != base:
                return False, f"period differs between anchors 1 and {a} on {d}"
        collapsed = collapse_period(d, 1)  # raises if the result is invalid
        if collapse_period(collapsed, 1) != collapsed:
            return False, f"collapse not idempotent on {d}"
    return True, f"{infinite} diagrams with periodic walks collapse consistently"


def random_affine_permutation(n: int, rng: random.Random, spread: int = 4) -> AffinePermutation:
    residues = list(range(1, n + 1))
    rng.shuffle(residues)
    offsets = [rng.randint(-spread, spread) for _ in range(n)]
    total = sum(offsets)
    idx = 0
    while total != 0:
        step = -1 if total > 0 else 1
        cand = offsets[idx % n] + step
        if abs(cand) <= spread:
            offsets[idx % n] = cand
            total += step
        idx += 1
    return AffinePermutation(n, tuple(r + n * k for r, k in zip(residues, offsets)))


def criterion_11(level: str) -> tuple[bool, str]:
    """Relative throughput of the window scan against the sorting-word oracle."""
    return bench_report(1000 if level == "quick" else 10_000)


def bench_report(count: int, n: int = 10) -> tuple[bool, str]:
    rng = random.Random(_seed())
    c = coxeter_from_partition(n, {1, 4, 6, 9} if n == 10 else {1})
    samples = [random_affine_permutation(n, rng) for _ in range(count)]
    t0 = time.perf_counter()
    pattern_results = [is_c_sortable_pattern(w, c)[0] for w in samples]
    t_pattern = time.perf_counter() - t0
    t0 = time.perf_counter()
    def_results = [is_c_sortable_def(w, c) for w in samples]
    t_def = time.perf_counter() - t0
    if pattern_results != def_results:
        return False, "criteria disagree on the random corpus"
    detail = (
        f"{count} elements: window scan {1e6 * t_pattern / count:.1f} us/elt, "
        f"sorting word {1e6 * t_def / count:.1f} us/elt "
        f"(x{t_def / max(t_pattern, 1e-9):.1f})"
    )
    return t_pattern < t_def, detail


CRITERIA: list[tuple[str, Callable[[str], tuple[bool, str]]]] = [
    ("golden form values", criterion_1),
    ("sign-table sweep", criterion_2),
    ("sortability route equivalence", criterion_3),
    ("golden classifications", criterion_4),
    ("inverse-map windows", criterion_5),
    ("round trips and anchors", criterion_6),
    ("map restriction", criterion_7),
    ("membership oracle", criterion_8),
    ("counting", criterion_9),
    ("period theory", criterion_10),
    ("benchmark", criterion_11),
]


def run_all(level: str = "quick", out=print) -> bool:
    all_ok = True
    for idx, (name, fn) in enumerate(CRITERIA, start=1):
        start = time.perf_counter()
        try:
            ok, detail = fn(level)
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"error: {exc!r}"
        elapsed = time.perf_counter() - start
        all_ok &= ok
        out(f"criterion {idx:2d} [{name}]: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s) {detail}")
    return all_ok
