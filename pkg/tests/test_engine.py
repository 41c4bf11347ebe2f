import copy
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from majcolor.engine import (STRATEGIES, assert_star_preserved, build_majority4_instance,
                             build_twothirds3_instance, check_feasibility, color_with_ranks)
from majcolor.exceptions import InfeasibleInstanceError, RankOverflowError
from majcolor.generators import gen_random_digraph, gen_random_lists
from majcolor.graph import Digraph
from majcolor.instance import RankedInstance
from majcolor.oracle import RankConstraint, exhaustive_list_coloring
from majcolor.verify import verify_majority_fraction, verify_rank_coloring

from strategies import digraphs, feasible_instances

CYCLE3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])


def same_color_out(D, coloring, v):
    return sum(coloring[w] == coloring[v] for w in D.out_adj[v])


class TestFeasibility:
    def test_isolated_vertex_zero_ranks(self):
        inst = RankedInstance(Digraph(1), [(0, 1, 2, 3)], [(0, 0, 0, 0)])
        assert check_feasibility(inst, 2).feasible

    def test_equality_boundary(self):
        D = Digraph(4, [(0, 1), (0, 2), (0, 3)])
        inst = build_majority4_instance(D, [(0, 1, 2, 3)] * 4)
        assert inst.ranks[0] == (Fraction(3, 2),) * 4
        assert check_feasibility(inst, 2).feasible

    def test_rank_sum_too_small(self):
        inst = RankedInstance(Digraph(3, [(0, 1), (0, 2)]), [(0, 1), (0,), (0,)], [(1, 1), (0,), (0,)])
        report = check_feasibility(inst, 2)
        assert not report.feasible
        assert report.violations == [(0, "rank sum", Fraction(2), 4)]

    def test_list_longer_than_t_squared(self):
        inst = RankedInstance(Digraph(1), [(0, 1, 2, 3, 4)], [(0,) * 5])
        assert [x[1] for x in check_feasibility(inst, 2).violations] == ["list size"]
        assert check_feasibility(inst, 3).feasible


class TestBuilders:
    def test_majority4_isolated(self):
        inst = build_majority4_instance(Digraph(1), [(0, 1, 2, 3)])
        assert inst.ranks == ((0, 0, 0, 0),)

    def test_majority4_outdegree_five(self):
        D = Digraph(6, [(0, w) for w in range(1, 6)])
        inst = build_majority4_instance(D, [(0, 1, 2, 3)] * 6)
        assert inst.ranks[0] == (Fraction(5, 2),) * 4

    def test_majority4_wrong_size(self):
        with pytest.raises(ValueError):
            build_majority4_instance(Digraph(1), [(0, 1, 2)])

    def test_twothirds3_ranks(self):
        D = Digraph(4, [(0, 1), (0, 2), (0, 3)])
        inst = build_twothirds3_instance(D, [(0, 1, 2), (3, 4, 5), (0, 2, 4), (1, 2, 3)], Fraction(1, 4))
        assert inst.lists[0] == (0, 1, 2, 6)
        assert inst.ranks[0] == (Fraction(9, 4),) * 3 + (Fraction(-3, 4),)
        assert inst.ranks[1] == (Fraction(1, 4),) * 3 + (Fraction(-3, 4),)
        assert check_feasibility(inst, 2).feasible

    @pytest.mark.parametrize("eps", [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(-1, 5)])
    def test_twothirds3_epsilon_range(self, eps):
        with pytest.raises(ValueError):
            build_twothirds3_instance(Digraph(1), [(0, 1, 2)], eps)

    @given(digraphs(), st.data())
    def test_builders_meet_condition_with_equality(self, D, data):
        lists4 = [tuple(data.draw(st.permutations(range(6)))[:4]) for _ in range(D.n)]
        lists3 = [x[:3] for x in lists4]
        for inst in (build_majority4_instance(D, lists4), build_twothirds3_instance(D, lists3)):
            assert check_feasibility(inst, 2).feasible
            for v in range(D.n):
                assert sum(inst.ranks[v]) == 2 * D.out_degree(v)


class TestColoring:
    def test_single_vertex_takes_lowest_color(self):
        inst = RankedInstance(Digraph(1), [(3, 1, 2, 0)], [(0, 0, 0, 0)])
        coloring, _ = color_with_ranks(inst)
        assert coloring == [0]

    def test_three_cycle_is_proper(self):
        inst = build_majority4_instance(CYCLE3, [(0, 1, 2, 3)] * 3)
        coloring, _ = color_with_ranks(inst)
        assert all(coloring[u] != coloring[v] for u, v in CYCLE3.edges)

    def test_seeded_six_vertex_instance(self):
        D = gen_random_digraph(6, 0.4, seed=42)
        lists = gen_random_lists(6, 6, 4, seed=42)
        inst = build_majority4_instance(D, lists)
        coloring, _ = color_with_ranks(inst)
        assert verify_rank_coloring(inst, coloring).ok
        assert verify_majority_fraction(D, coloring, 1, 2).ok
        assert exhaustive_list_coloring(D, lists, RankConstraint.from_instance(inst)) is not None

    def test_infeasible_raises(self):
        inst = RankedInstance(Digraph(2, [(0, 1)]), [(0,), (0,)], [(1,), (0,)])
        with pytest.raises(InfeasibleInstanceError) as info:
            color_with_ranks(inst)
        assert info.value.report.violations[0][0] == 0

    def test_overflow_detected(self):
        big = Fraction(2**62, 3)
        inst = RankedInstance(Digraph(2, [(0, 1)]), [(0, 1), (0,)], [(big, Fraction(1, 2**62)), (0,)])
        with pytest.raises(RankOverflowError):
            color_with_ranks(inst)

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            color_with_ranks(build_majority4_instance(Digraph(1), [(0, 1, 2, 3)]), strategy="random")

    def test_extension_uses_decremented_ranks(self):
        # Eliminating 1 before 0 charges 0's ranks for 1's top colors.
        D = Digraph(2, [(0, 1)])
        inst = build_majority4_instance(D, [(0, 1, 2, 3)] * 2)
        coloring, trace = color_with_ranks(inst, strategy="descending", trace=True)
        first, second = trace.steps
        assert (first.vertex, first.top) == (1, (0, 1))
        assert second.vertex == 0 and second.top == (2, 3)
        assert second.top_ranks == (Fraction(1, 2), Fraction(1, 2))
        assert coloring == [2, 0]

    def test_fictitious_color_never_used(self):
        D = gen_random_digraph(40, 0.3, seed=5)
        lists = gen_random_lists(40, 5, 3, seed=6)
        inst = build_twothirds3_instance(D, lists)
        coloring, _ = color_with_ranks(inst)
        assert 5 not in coloring
        assert verify_majority_fraction(D, coloring, 2, 3).ok

    def test_input_not_mutated(self):
        inst = build_majority4_instance(CYCLE3, [(0, 1, 2, 3)] * 3)
        before = copy.deepcopy(inst)
        color_with_ranks(inst, trace=True)
        assert inst == before

    def test_max_out_degree_strategy_order(self):
        D = Digraph(4, [(2, 0), (2, 1), (2, 3), (1, 0)])
        inst = build_majority4_instance(D, [(0, 1, 2, 3)] * 4)
        _, trace = color_with_ranks(inst, strategy="max-out-degree", trace=True)
        assert [s.vertex for s in trace.steps] == [2, 1, 0, 3]

    def test_trace_lines(self):
        inst = build_majority4_instance(Digraph(2, [(0, 1)]), [(0, 1, 2, 3), (4, 5, 6, 7)])
        coloring, trace = color_with_ranks(inst, trace=True)
        assert trace.lines() == ["elim 0 top 0 1", "elim 1 top 4 5", "ext 1 color 4", "ext 0 color 0"]
        assert coloring == [0, 4]


@settings(max_examples=300, deadline=None)
@given(feasible_instances(), st.sampled_from(STRATEGIES))
def test_soundness_against_original_ranks(inst, strategy):
    coloring, trace = color_with_ranks(inst, strategy=strategy, trace=True)
    D = inst.graph
    for v in range(D.n):
        assert coloring[v] in inst.lists[v]
        assert same_color_out(D, coloring, v) <= inst.rank(v, coloring[v])
    assert sorted(s.vertex for s in trace.steps) == list(range(D.n))
    assert assert_star_preserved(trace)


@settings(max_examples=150, deadline=None)
@given(st.data(), st.sampled_from([1, 3]))
def test_soundness_other_t(data, t):
    inst = data.draw(feasible_instances(t=t, max_n=6))
    coloring, trace = color_with_ranks(inst, t=t, trace=True)
    assert verify_rank_coloring(inst, coloring).ok
    assert assert_star_preserved(trace)


@settings(max_examples=100, deadline=None)
@given(feasible_instances(), st.sampled_from(STRATEGIES))
def test_deterministic(inst, strategy):
    a = color_with_ranks(inst, strategy=strategy, trace=True)
    b = color_with_ranks(inst, strategy=strategy, trace=True)
    assert a[0] == b[0] and a[1].lines() == b[1].lines()


class TestStarPreserved:
    def test_empty_digraph(self):
        _, trace = color_with_ranks(RankedInstance(Digraph(0), [], []), trace=True)
        assert trace.steps == [] and assert_star_preserved(trace)

    def test_two_vertex_boundary(self):
        inst = build_majority4_instance(Digraph(2, [(0, 1)]), [(0, 1, 2, 3)] * 2)
        _, trace = color_with_ranks(inst, strategy="descending", trace=True)
        assert trace.steps[0].deltas == {0: (Fraction(2), 2)}
        assert trace.steps[0].snapshot == {0: (Fraction(0), 0)}
        assert assert_star_preserved(trace)

    def test_detects_broken_trace(self):
        inst = build_majority4_instance(Digraph(2, [(0, 1)]), [(0, 1, 2, 3)] * 2)
        _, trace = color_with_ranks(inst, strategy="descending", trace=True)
        trace.steps[0].snapshot[0] = (Fraction(-1), 0)
        assert not assert_star_preserved(trace)

    def test_needs_trace(self):
        with pytest.raises(ValueError):
            assert_star_preserved(None)
