import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affine_catalan import (
    Reflection,
    affine_perm_of_tito,
    all_coxeter_elements,
    cover_reflections,
    cover_reflections_tito,
    coxeter_from_partition,
    format_tito,
    inversion_contains,
    inversion_set,
    is_c_sortable_pattern,
    is_c_sortable_tito,
    maximal_descending_chains,
    parse_tito,
    parse_window,
    shape,
    tito_of_affine_perm,
    weak_order_ball,
)
from affine_catalan.core import ParseError
from affine_catalan.tito import Block, NotRealOrder, ResidueCover, Tito

C_BLOCKS = coxeter_from_partition(10, {1, 4, 5, 6, 9})


def tito_strategy(max_n=5):
    @st.composite
    def build(draw):
        n = draw(st.integers(2, max_n))
        residues = list(draw(st.permutations(list(range(1, n + 1)))))
        cut = draw(st.integers(0, n))
        offsets = draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n))
        values = [r + n * k for r, k in zip(residues, offsets)]
        blocks = []
        if cut >= 2:
            blocks.append(Block("waning", tuple(values[:cut])))
        elif cut == 1:
            blocks.append(Block("waxing", tuple(values[:1])))
        if cut < n:
            blocks.append(Block("waxing", tuple(values[cut:])))
        return Tito(n, tuple(blocks))

    return build()


class TestParsing:
    def test_single_block(self):
        t = parse_tito("[1,2,3]", 3)
        assert shape(t) == (("waxing", frozenset({1, 2, 3})),)

    def test_three_blocks(self):
        t = parse_tito("[9,6]~[18,11,5,10,4][3,2,7]", 10)
        kinds = [b.kind for b in t.blocks]
        assert kinds == ["waxing", "waning", "waxing"]

    def test_residue_cover_enforced(self):
        with pytest.raises(ResidueCover):
            parse_tito("[1,1]", 2)
        with pytest.raises(ResidueCover):
            parse_tito("[1,2]", 3)

    def test_short_waning_rejected(self):
        with pytest.raises(NotRealOrder):
            parse_tito("~[1][2]", 2)

    def test_bad_syntax(self):
        with pytest.raises(ParseError):
            parse_tito("[1,2", 2)

    @settings(max_examples=80, deadline=None)
    @given(tito_strategy())
    def test_format_parse_round_trip(self, t):
        assert parse_tito(format_tito(t), t.n) == t

    def test_json_round_trip(self):
        t = parse_tito("[9,6]~[18,11,5,10,4][3,2,7]", 10)
        assert Tito.from_json(t.to_json()) == t


class TestCompare:
    def test_waxing_copies_ascend(self):
        t = parse_tito("[1,2,3]", 3)
        assert t.compare(1, 4) < 0

    def test_waning_copies_descend(self):
        t = parse_tito("[1,2]~[3,0]", 4)
        assert t.compare(7, 4) < 0
        assert t.compare(2, 3) < 0

    def test_two_block_one_line(self):
        # crosscheck a window against its displayed one-line fragment
        t = parse_tito("~[5,-6][-4,7]", 4)
        expected = [-2, 5, -6, 1]
        for x, y in zip(expected, expected[1:]):
            assert t.compare(x, y) < 0
        assert t.compare(3, -4) < 0 and t.compare(-4, 7) < 0 and t.compare(7, 0) < 0

    @settings(max_examples=60, deadline=None)
    @given(tito_strategy(), st.integers(-8, 8), st.integers(-8, 8), st.integers(-8, 8))
    def test_total_order(self, t, x, y, z):
        assert t.compare(x, x) == 0
        assert t.compare(x, y) == -t.compare(y, x)
        assert t.compare(x, y) == t.compare(x + t.n, y + t.n)
        if t.compare(x, y) < 0 and t.compare(y, z) < 0:
            assert t.compare(x, z) < 0


class TestPermutationBridge:
    def test_identity(self):
        t = tito_of_affine_perm(parse_window("[1,2,3]", 3))
        assert affine_perm_of_tito(t).is_identity()

    def test_round_trip_on_ball(self):
        for w in weak_order_ball(3, 6):
            assert affine_perm_of_tito(tito_of_affine_perm(w)) == w

    def test_multi_block_is_not_a_permutation(self):
        assert affine_perm_of_tito(parse_tito("[1,2]~[3,0]", 4)) is None

    def test_covers_match(self):
        for w in weak_order_ball(4, 6):
            assert cover_reflections_tito(tito_of_affine_perm(w)) == cover_reflections(w)

    def test_inversions_match(self):
        for w in weak_order_ball(3, 6):
            t = tito_of_affine_perm(w)
            inv = inversion_set(w)
            for a in range(1, 4):
                for b in range(a + 1, a + 10):
                    if (b - a) % 3 == 0:
                        continue
                    r = Reflection.from_pair(3, a, b)
                    assert inversion_contains(t, r) == (r in inv)


class TestChains:
    def test_identity_singletons(self):
        assert maximal_descending_chains(parse_tito("[1,2,3]", 3)) == [(1,), (2,), (3,)]

    def test_wrapping_chain(self):
        chains = maximal_descending_chains(parse_tito("[1,2]~[3,0]", 4))
        assert chains == [(1,), (2,), (3, 0, -1)]

    def test_window_scan(self):
        chains = maximal_descending_chains(parse_tito("[14,18,16,11,15,7,13,12,9,10]", 10))
        assert chains == [(14,), (18, 16, 11), (15, 7), (13, 12, 9), (10,)]

    def test_orbits_partition_residues(self):
        t = parse_tito("[9,6]~[18,11,5,10,4][3,2,7]", 10)
        seen = []
        for chain in maximal_descending_chains(t):
            wraps = len(chain) > 1 and (chain[0] - chain[-1]) % 10 == 0
            body = chain[:-1] if wraps else chain
            seen.extend(v % 10 for v in body)
        assert sorted(seen) == sorted(range(10))

    def test_cover_scan_example(self):
        got = cover_reflections_tito(parse_tito("[-3,4,2]", 3))
        assert got == {Reflection(3, 2, 4), Reflection(3, 3, 5)}


class TestSortability:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("[9,6]~[18,11,5,10,4][3,2,7]", True),
            ("[14,11,9,15,16,3,12,8,7,10]", True),
            ("[5,4,6,1]~[17,10,9][3,2,8]", True),
            ("[19,16]~[5,11,18,10,4][3,2,7]", False),
            ("[5,4,6,1]~[7,0,-1][3,8,2]", False),
        ],
    )
    def test_golden_classifications(self, text, expected):
        ok, witness = is_c_sortable_tito(parse_tito(text, 10), C_BLOCKS)
        assert ok == expected
        if not expected:
            assert witness is not None

    def test_witness_class_of_first_counterexample(self):
        _, witness = is_c_sortable_tito(parse_tito("[19,16]~[5,11,18,10,4][3,2,7]", 10), C_BLOCKS)
        kind, k, i, j = witness
        assert kind == "kij"
        assert (k % 10, i % 10, j % 10) == (4, 5, 1)  # the 14 > 5 > 11 pattern class

    def test_identity_sortable(self):
        for c in all_coxeter_elements(4):
            assert is_c_sortable_tito(parse_tito("[1,2,3,4]", 4), c)[0]

    def test_two_waxing_blocks_rejected(self):
        c = coxeter_from_partition(3, {1, 2})
        assert not is_c_sortable_tito(parse_tito("[1,2][3]", 3), c)[0]

    def test_waning_block_must_meet_both_parts(self):
        c = coxeter_from_partition(4, {1, 2, 3})
        # the waning block lives entirely in the up part
        assert not is_c_sortable_tito(parse_tito("~[2,1][3,4]", 4), c)[0]

    def test_agrees_with_window_criterion(self):
        for n in (3, 4):
            for c in all_coxeter_elements(n):
                for w in weak_order_ball(n, 6):
                    expected = is_c_sortable_pattern(w, c)[0]
                    got, _ = is_c_sortable_tito(tito_of_affine_perm(w), c)
                    assert got == expected

    def test_covers_characterize_sortable_orders(self):
        seen = {}
        for text, expected in [
            ("[9,6]~[18,11,5,10,4][3,2,7]", True),
            ("[14,11,9,15,16,3,12,8,7,10]", True),
            ("[5,4,6,1]~[17,10,9][3,2,8]", True),
        ]:
            t = parse_tito(text, 10)
            key = cover_reflections_tito(t)
            assert key not in seen
            seen[key] = t
