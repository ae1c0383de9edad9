import pytest

from affine_catalan import (
    all_coxeter_elements,
    c_sorting_word,
    cover_reflections,
    coxeter_from_partition,
    forbidden_inversion_witness,
    identity,
    is_c_noncrossing,
    is_c_sortable_def,
    is_c_sortable_pattern,
    parse_window,
    reading_nc,
    simple_reflection,
    weak_order_ball,
)
from affine_catalan.sortable import NotSortable, reflection_order

C3 = coxeter_from_partition(3, {1, 2})
C10 = coxeter_from_partition(10, {1, 4, 6, 9})
SIGMA1 = parse_window("[0,1,4,3,9,6,5,8,7,12]", 10)
SIGMA2 = parse_window("[-2,0,3,4,5,9,6,11,7,12]", 10)


def word_perm(n, letters):
    out = identity(n)
    for i in letters:
        out = out * simple_reflection(n, i).as_perm()
    return out


class TestSortingWord:
    def test_coxeter_element_itself(self):
        sw = c_sorting_word(C3.perm, C3)
        assert sw.letters == (0, 1, 2)
        assert sw.slot_mask == (1, 1, 1)

    def test_four_letter_example(self):
        w = word_perm(3, [0, 1, 2, 1])
        sw = c_sorting_word(w, C3)
        assert sw.letters == (0, 1, 2, 1)
        assert sw.slot_mask == (1, 1, 1, 0, 1, 0)
        assert sw.is_sortable()

    def test_single_letter(self):
        sw = c_sorting_word(simple_reflection(3, 1).as_perm(), C3)
        assert sw.letters == (1,)
        assert sw.slot_mask == (0, 1, 0)

    def test_word_is_reduced(self):
        for w, length in weak_order_ball(3, 7).items():
            sw = c_sorting_word(w, C3)
            assert len(sw.letters) == length
            assert word_perm(3, sw.letters) == w

    def test_def_matches_mask(self):
        for c in all_coxeter_elements(3):
            for w in weak_order_ball(3, 7):
                assert is_c_sortable_def(w, c) == c_sorting_word(w, c).is_sortable()


class TestPatternCriterion:
    def test_identity(self):
        assert is_c_sortable_pattern(identity(10), C10) == (True, None)

    def test_sigma1_witness(self):
        ok, witness = is_c_sortable_pattern(SIGMA1, C10)
        assert not ok
        assert witness == ("kij", 12, 10, 11)

    def test_sigma2(self):
        assert is_c_sortable_pattern(SIGMA2, C10)[0]

    def test_sigma_def_agrees(self):
        assert not is_c_sortable_def(SIGMA1, C10)
        assert is_c_sortable_def(SIGMA2, C10)


class TestInversionConditions:
    def test_identity(self):
        assert forbidden_inversion_witness(identity(10), C10) is None

    def test_sigma1(self):
        assert forbidden_inversion_witness(SIGMA1, C10) is not None

    def test_sigma2(self):
        assert forbidden_inversion_witness(SIGMA2, C10) is None


class TestTripleEquivalence:
    @pytest.mark.parametrize("n", [2, 3])
    def test_small_rank(self, n):
        for c in all_coxeter_elements(n):
            for w in weak_order_ball(n, 6):
                a = is_c_sortable_def(w, c)
                assert is_c_sortable_pattern(w, c)[0] == a
                assert (forbidden_inversion_witness(w, c) is None) == a


class TestReadingMap:
    def test_identity(self):
        assert reading_nc(identity(3), C3).perm.is_identity()

    def test_figure_golden(self):
        w = word_perm(3, [0, 1, 2, 1])
        assert reading_nc(w, C3).perm == word_perm(3, [0, 1, 2, 0])

    def test_coxeter_image_is_cover_product(self):
        # the image of c is the ordered product of its covers (fewer factors
        # than the length of c, so generally not c itself)
        for c in all_coxeter_elements(3):
            image = reading_nc(c.perm, c)
            covers = cover_reflections(c.perm)
            assert is_c_noncrossing(image.perm, c)
            prod = identity(3)
            for t in reflection_order(c.perm, c):
                if t in covers:
                    prod = prod * t.as_perm()
            assert image.perm == prod

    def test_rejects_unsortable(self):
        with pytest.raises(NotSortable):
            reading_nc(SIGMA1, C10)

    def test_reflection_order_is_inversion_set(self):
        from affine_catalan import inversion_set

        for w in weak_order_ball(3, 6):
            order = reflection_order(w, C3)
            assert len(order) == len(set(order))
            assert set(order) == inversion_set(w)

    def test_images_are_noncrossing(self):
        for c in all_coxeter_elements(3):
            for w in weak_order_ball(3, 6):
                if is_c_sortable_def(w, c):
                    assert is_c_noncrossing(reading_nc(w, c).perm, c)

    @pytest.mark.parametrize("n", [3, 4])
    def test_covers_injective_on_sortables(self, n):
        for c in all_coxeter_elements(n):
            seen = {}
            for w in weak_order_ball(n, 8):
                if not is_c_sortable_def(w, c):
                    continue
                key = cover_reflections(w)
                assert key not in seen, (w, seen[key])
                seen[key] = w
