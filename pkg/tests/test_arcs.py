import pytest

from affine_catalan import (
    Arc,
    a_numbering,
    arcs_cross,
    build_diagram,
    c_sequence,
    chains_and_loops,
    collapse_period,
    covering_arcs,
    coxeter_from_partition,
    enumerate_diagrams,
    hides,
    ncad_c,
    neighbor_arc,
    neighbor_arc_dual,
    parse_tito,
    select_order,
    tito_c,
    tito_of_affine_perm,
    weak_order_ball,
)
from affine_catalan.arcs import CrossingArcs, FiniteSequence, ImaginaryLoop
from affine_catalan.sortable import is_c_sortable_pattern
from affine_catalan.tito import NotSortableTito

C10 = coxeter_from_partition(10, {1, 4, 6, 8})


def diagram_a():
    return build_diagram(10, C10, [(1, 6), (6, 8), (7, 15), (9, 12), (12, 13)])


def diagram_b():
    return build_diagram(10, C10, [(1, 10), (8, 12), (12, 13), (4, 6), (5, 7)])


class TestCrossing:
    def test_translate_of_short_arc(self):
        c = coxeter_from_partition(4, {1, 2, 3})
        assert not arcs_cross(c, Arc(4, 1, 3), Arc(4, 1, 3))

    def test_nested_same_side(self):
        c = coxeter_from_partition(4, {1, 2, 3})
        assert arcs_cross(c, Arc(4, 1, 3), Arc(4, 2, 8))

    def test_chain_link_is_free(self):
        assert not arcs_cross(C10, Arc(10, 1, 6), Arc(10, 6, 8))

    def test_build_rejects_crossing(self):
        c = coxeter_from_partition(4, {1, 2, 3})
        with pytest.raises(CrossingArcs):
            build_diagram(4, c, [(1, 3), (2, 8)])

    def test_build_rejects_shared_initial(self):
        with pytest.raises(CrossingArcs):
            build_diagram(4, coxeter_from_partition(4, {1, 2}), [(1, 2), (1, 3)])

    def test_build_rejects_shared_final(self):
        with pytest.raises(CrossingArcs):
            build_diagram(4, coxeter_from_partition(4, {1, 2}), [(1, 3), (2, 3)])

    def test_build_rejects_imaginary_loop(self):
        # loop through residues 1, 2 with both in the up part
        c = coxeter_from_partition(4, {1, 2})
        with pytest.raises(ImaginaryLoop):
            build_diagram(4, c, [(1, 2), (2, 5)])

    def test_real_loop_accepted(self):
        c = coxeter_from_partition(4, {1, 3})
        d = build_diagram(4, c, [(1, 2), (2, 5)])
        kinds = {g.kind for g in chains_and_loops(d)}
        assert "loop" in kinds


class TestChainsAndLoops:
    def test_running_example(self):
        assert [str(g) for g in chains_and_loops(diagram_a())] == [
            "1→6→8",
            "4",
            "7→15",
            "9→12→13",
            "10",
        ]

    def test_empty_diagram_singletons(self):
        d = build_diagram(4, coxeter_from_partition(4, {1}), [])
        assert [g.support for g in chains_and_loops(d)] == [(1,), (2,), (3,), (4,)]

    def test_supports_partition_residues(self):
        for c, d in [(C10, diagram_a()), (C10, diagram_b())]:
            residues = sorted(
                r for g in chains_and_loops(d) for r in g.residues()
            )
            assert residues == list(range(1, 11))


class TestNeighborArcs:
    def test_golden_neighbors(self):
        d = diagram_a()
        assert neighbor_arc(d, 8) == (7, 15)
        assert neighbor_arc(d, 2) == (-3, 5)
        assert neighbor_arc(d, 4) == (1, 6)

    def test_no_covering_arcs(self):
        d = build_diagram(4, coxeter_from_partition(4, {1}), [(1, 2)])
        assert neighbor_arc(d, 3) is None
        assert covering_arcs(d, 3) == []

    def test_dual_agrees(self):
        for d in (diagram_a(), diagram_b()):
            for a in range(-5, 26):
                assert neighbor_arc(d, a) == neighbor_arc_dual(d, a)


class TestWalk:
    def test_golden_sequences(self):
        d = diagram_a()
        cs2 = c_sequence(d, 2)
        assert str(cs2).startswith("2 → 3 ↑ 5 ↑ 6 → 8 ↓ 15 ↑ 16 → 18 ↓ 25")
        assert cs2.period == (5, "↑", 6, "→", 8, "↓")
        cs7 = c_sequence(d, 7)
        assert str(cs7).startswith("7 → 15 ↑ 16 → 18 ↓ 25")
        assert cs7.period_class() == cs2.period_class()

    def test_translation_equivariance(self):
        d = diagram_a()
        t0 = c_sequence(d, 2).tokens
        t1 = c_sequence(d, 12).tokens
        compare = min(len(t0), len(t1))
        for a, b in zip(t0[:compare], t1[:compare]):
            if isinstance(a, int):
                assert b == a + 10
            else:
                assert b == a

    def test_finite_walk(self):
        d = build_diagram(4, coxeter_from_partition(4, {1}), [(1, 2)])
        cs = c_sequence(d, 1)
        assert cs.finite
        assert cs.tokens == (1, "→", 2)

    def test_empty_diagram(self):
        d = build_diagram(3, coxeter_from_partition(3, {1}), [])
        assert c_sequence(d, 1).tokens == (1,)

    def test_period_same_for_all_anchors(self):
        d = diagram_b()
        base = c_sequence(d, 1).period_class()
        for a in range(2, 21):
            assert c_sequence(d, a).period_class() == base

    def test_mixed_chains_meet_the_period(self):
        for c in (coxeter_from_partition(4, {1, 3}), coxeter_from_partition(4, {1})):
            for d in enumerate_diagrams(c, max_span=8, max_arcs=3):
                cs = c_sequence(d, 1)
                if cs.finite:
                    continue
                period_res = {t % 4 or 4 for t in cs.period if isinstance(t, int)}
                for g in chains_and_loops(d):
                    res = g.residues()
                    if res & c.Lc and res & c.Rc:
                        assert res & period_res


class TestNumbering:
    def test_down_case_golden(self):
        num = a_numbering(diagram_a(), 2)
        assert num.case == "down"
        assert sorted(str(g) for g in num.chains) == sorted(
            ["14", "11→16→18", "7→15", "9→12→13", "10"]
        )

    def test_up_case_golden(self):
        num = a_numbering(diagram_b(), 4)
        assert num.case == "up"
        left, middle, right = num.parts
        assert [str(g) for g in left] == ["4→6"]
        assert sorted(str(g) for g in middle) == ["11→20", "8→12→13"]
        assert sorted(str(g) for g in right) == sorted(["-5→-3", "-1"])

    def test_finite_case_windows(self):
        d = build_diagram(3, coxeter_from_partition(3, {1}), [])
        for a in (1, 5, -2):
            num = a_numbering(d, a)
            assert num.case == "finite"
            values = sorted(v for g in num.chains for v in g.support)
            assert values == list(range(a - 2, a + 1))

    def test_transversal_property(self):
        for d in (diagram_a(), diagram_b()):
            for a in range(1, 11):
                num = a_numbering(d, a)
                residues = sorted(r for g in num.chains for r in g.residues())
                assert residues == list(range(1, 11))


class TestSelect:
    def test_hides_goldens(self):
        num = a_numbering(diagram_b(), 4)
        by_name = {str(g): g for g in num.chains}
        assert hides(C10, by_name["11→20"], by_name["8→12→13"])
        assert not hides(C10, by_name["8→12→13"], by_name["11→20"])
        assert not any(
            hides(C10, by_name["4→6"], g) for g in num.chains if str(g) != "4→6"
        )

    def test_select_golden(self):
        num = a_numbering(diagram_a(), 2)
        ordered = [str(g) for g in select_order(C10, num.chains)]
        assert ordered == ["14", "11→16→18", "7→15", "9→12→13", "10"]


class TestInverseMap:
    def test_window_goldens(self):
        assert [b.window for b in tito_c(diagram_a(), 2).blocks] == [
            (14, 18, 16, 11, 15, 7, 13, 12, 9, 10)
        ]
        assert [b.window for b in tito_c(diagram_b(), 4).blocks] == [
            (6, 4),
            (20, 11, 13, 12, 8),
            (-3, -5, -1),
        ]
        assert [b.window for b in tito_c(diagram_b(), -1).blocks] == [
            (-4, -6),
            (3, 2, -2, 0, -9),
            (-3, -5, -1),
        ]

    def test_anchor_independent(self):
        for d in (diagram_a(), diagram_b()):
            base = tito_c(d, 1)
            for a in range(1, 31):
                assert tito_c(d, a) == base

    def test_ncad_golden(self):
        c = coxeter_from_partition(3, {1, 2})
        d = ncad_c(parse_tito("[-3,4,2]", 3), c)
        assert {(a.p, a.q) for a in d.arcs} == {(2, 4), (3, 5)}

    def test_ncad_rejects_unsortable(self):
        c = coxeter_from_partition(10, {1, 4, 5, 6, 9})
        with pytest.raises(NotSortableTito):
            ncad_c(parse_tito("[19,16]~[5,11,18,10,4][3,2,7]", 10), c)

    def test_round_trips_bounded(self):
        for n in (3, 4):
            for c in [coxeter_from_partition(n, {1}), coxeter_from_partition(n, set(range(1, n)))]:
                for d in enumerate_diagrams(c, max_span=2 * n, max_arcs=3):
                    t = tito_c(d, 1)
                    assert ncad_c(t, c) == d
                    assert tito_c(ncad_c(t, c), 1) == t

    def test_permutation_orders_round_trip(self):
        c = coxeter_from_partition(3, {1, 2})
        for w in weak_order_ball(3, 7):
            if not is_c_sortable_pattern(w, c)[0]:
                continue
            t = tito_of_affine_perm(w)
            assert tito_c(ncad_c(t, c), 1) == t


class TestCollapse:
    def test_golden_collapse(self):
        collapsed = collapse_period(diagram_a(), 2)
        loops = [g for g in chains_and_loops(collapsed) if g.kind == "loop"]
        assert len(loops) == 1
        assert loops[0].residues() == frozenset({1, 5, 6, 7, 8})
        chains = sorted(str(g) for g in chains_and_loops(collapsed) if g.kind == "chain")
        assert chains == ["10", "4", "9→12→13"]

    def test_collapse_validates(self):
        for c, d in [(C10, diagram_a()), (C10, diagram_b())]:
            collapsed = collapse_period(d, 1)
            # rebuilding from scratch revalidates all pairwise conditions
            build_diagram(10, c, [(a.p, a.q) for a in collapsed.arcs])

    def test_finite_walk_rejected(self):
        d = build_diagram(4, coxeter_from_partition(4, {1}), [(1, 2)])
        with pytest.raises(FiniteSequence):
            collapse_period(d, 1)

    def test_loop_only_diagram_unchanged(self):
        c = coxeter_from_partition(4, {1, 3})
        d = build_diagram(4, c, [(1, 2), (2, 5)])
        assert collapse_period(d, 1) == d
