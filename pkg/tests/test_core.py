import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affine_catalan import (
    AffinePermutation,
    Reflection,
    all_coxeter_elements,
    compose,
    cover_reflections,
    coxeter_from_partition,
    cycle_decomposition,
    cycles_as_perm,
    format_cycles,
    identity,
    inversion_set,
    is_coxeter,
    parse_cycles,
    parse_window,
    simple_reflection,
    weak_order_ball,
)
from affine_catalan.core import EmptyPart, InvalidPermutation, ParseError, SizeMismatch


def perm_strategy(max_n=5, spread=3):
    @st.composite
    def build(draw):
        n = draw(st.integers(2, max_n))
        residues = draw(st.permutations(list(range(1, n + 1))))
        offsets = draw(
            st.lists(st.integers(-spread, spread), min_size=n, max_size=n).filter(
                lambda ks: sum(ks) == 0
            )
        )
        return AffinePermutation(n, tuple(r + n * k for r, k in zip(residues, offsets)))

    return build()


class TestWindows:
    def test_parse_identity(self):
        assert parse_window("[1,2,3]", 3).is_identity()

    def test_parse_long_window(self):
        w = parse_window("[0,1,4,3,9,6,5,8,7,12]", 10)
        assert sum(w.window) == 55

    def test_duplicate_residue_rejected(self):
        with pytest.raises(InvalidPermutation):
            parse_window("[1,1,4]", 3)

    def test_wrong_sum_rejected(self):
        with pytest.raises(InvalidPermutation):
            parse_window("[1,2,6]", 3)

    def test_malformed_text(self):
        with pytest.raises(ParseError):
            parse_window("1,2,3", 3)

    def test_equivariance(self):
        w = parse_window("[4,2,0]", 3)
        for k in range(-7, 8):
            assert w(k + 3) == w(k) + 3


class TestProducts:
    def test_compose_pointwise(self):
        u = parse_window("[2,1,3]", 3)
        v = parse_window("[1,3,2]", 3)
        assert compose(u, v) == parse_window("[2,3,1]", 3)

    def test_word_convention(self):
        s = [simple_reflection(3, i).as_perm() for i in range(3)]
        assert s[0] * s[1] * s[2] == parse_window("[2,4,0]", 3)

    def test_identity_neutral(self):
        w = parse_window("[4,2,0]", 3)
        assert compose(identity(3), w) == w

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            compose(identity(3), identity(4))

    def test_inverse_golden(self):
        assert parse_window("[2,3,1]", 3).inverse() == parse_window("[3,1,2]", 3)

    def test_reflection_involution(self):
        t = Reflection(4, 2, 7).as_perm()
        assert t.inverse() == t

    @settings(max_examples=60, deadline=None)
    @given(perm_strategy())
    def test_inverse_property(self, w):
        assert compose(w, w.inverse()).is_identity()
        assert w.inverse().inverse() == w

    @settings(max_examples=40, deadline=None)
    @given(perm_strategy(max_n=4, spread=2))
    def test_compose_matches_application(self, w):
        u = w * w
        for k in range(-3, 8):
            assert u(k) == w(w(k))


class TestReflections:
    def test_normal_form(self):
        assert Reflection.from_pair(3, 0, 2) == Reflection(3, 3, 5)
        assert Reflection.from_pair(3, 4, 2) == Reflection(3, 2, 4)
        assert Reflection.from_pair(3, -1, 1) == Reflection(3, 2, 4)

    def test_codec_round_trip(self):
        for n in (2, 3, 5):
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if i == j:
                        continue
                    for p in range(1 if i > j else 0, 4):
                        t = Reflection.from_codec(n, i, j, p)
                        assert Reflection.from_codec(n, *t.codec()) == t

    def test_same_residue_rejected(self):
        with pytest.raises(InvalidPermutation):
            Reflection(3, 1, 4)


class TestInversions:
    def test_identity_empty(self):
        assert inversion_set(identity(4)) == frozenset()

    def test_s0_inversions(self):
        assert inversion_set(parse_window("[0,2,4]", 3)) == {Reflection(3, 3, 4)}

    def test_single_simple(self):
        assert inversion_set(parse_window("[2,1,3,4]", 4)) == {Reflection(4, 1, 2)}

    def test_length_matches_bfs(self):
        for n in (2, 3, 4):
            for w, length in weak_order_ball(n, 5).items():
                assert len(inversion_set(w)) == length

    def test_covers_inside_inversions(self):
        for w in weak_order_ball(3, 6):
            assert cover_reflections(w) <= inversion_set(w)

    def test_cover_scan_running_example(self):
        w = parse_window("[0,1,4,3,9,6,5,8,7,12]", 10)
        got = {(t.a, t.b) for t in cover_reflections(w)}
        # descents (4,3), (9,6), (6,5), (8,7) plus the wraparound (12,10)
        assert got == {(3, 4), (6, 9), (5, 6), (7, 8), (10, 12)}

    def test_cover_s0(self):
        assert cover_reflections(parse_window("[0,2,4]", 3)) == {Reflection(3, 3, 4)}


class TestCycles:
    def test_identity_empty(self):
        assert cycle_decomposition(identity(5)) == []

    def test_coxeter_cycles(self):
        cycles = cycle_decomposition(parse_window("[2,4,0]", 3))
        assert format_cycles(cycles) == "(1,2)[+1](3)[-1]"

    def test_pseudo_singletons(self):
        cycles = cycle_decomposition(parse_window("[1,2,7,0]", 4))
        assert format_cycles(cycles) == "(3)[+1](4)[-1]"

    def test_shifts_cancel_and_rebuild(self):
        for w in weak_order_ball(4, 5):
            cycles = cycle_decomposition(w)
            assert sum(c.shift for c in cycles) == 0
            assert cycles_as_perm(cycles, 4) == w

    def test_parse_format_round_trip(self):
        text = "(1,2)[+1](3)[-1]"
        assert format_cycles(parse_cycles(text, 3)) == text
        assert cycles_as_perm(parse_cycles(text, 3), 3) == parse_window("[2,4,0]", 3)


class TestCoxeterElements:
    def test_partition_to_window(self):
        assert coxeter_from_partition(3, {1, 2}).perm == parse_window("[2,4,0]", 3)

    def test_larger_partition(self):
        c = coxeter_from_partition(10, {1, 4, 6, 8})
        up, down = c.cycles()
        assert up.entries == (1, 4, 6, 8) and up.shift == 1
        assert down.entries == (10, 9, 7, 5, 3, 2) and down.shift == -1

    def test_membership_rule(self):
        c = coxeter_from_partition(10, {1, 4, 6, 8})
        for i in range(-10, 21):
            assert c.in_L(i) == (c.perm(i) > i)

    def test_count(self):
        for n in (2, 3, 4, 5, 6):
            perms = {c.perm for c in all_coxeter_elements(n)}
            assert len(perms) == 2**n - 2

    def test_is_coxeter_round_trip(self):
        for c in all_coxeter_elements(4):
            found = is_coxeter(c.perm)
            assert found is not None and found.Lc == c.Lc

    def test_is_coxeter_rejects(self):
        assert is_coxeter(identity(3)) is None
        assert is_coxeter(simple_reflection(3, 1).as_perm()) is None

    def test_empty_part_rejected(self):
        with pytest.raises(EmptyPart):
            coxeter_from_partition(3, set())
        with pytest.raises(EmptyPart):
            coxeter_from_partition(3, {1, 2, 3})

    def test_reduced_word_multiplies_back(self):
        for c in all_coxeter_elements(4):
            word = c.reduced_word()
            assert sorted(word) == [0, 1, 2, 3]
            prod = identity(4)
            for i in word:
                prod = prod * simple_reflection(4, i).as_perm()
            assert prod == c.perm
