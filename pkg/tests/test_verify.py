from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from majcolor.engine import build_majority4_instance
from majcolor.graph import Digraph, UndirectedGraph
from majcolor.instance import RankedInstance
from majcolor.verify import verify_majority_fraction, verify_rank_coloring, verify_undirected_fraction

from strategies import digraphs

CYCLE3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])


def test_empty_rank_instance():
    assert verify_rank_coloring(RankedInstance(Digraph(0), [], []), []).ok


def test_color_outside_list():
    inst = RankedInstance(Digraph(1), [(0, 1)], [(0, 0)])
    report = verify_rank_coloring(inst, [2])
    assert not report.ok and report.violations[0].bound == "not in list"


def test_rank_bound_exact():
    inst = RankedInstance(Digraph(3, [(0, 1), (0, 2)]), [(0,), (0,), (0,)],
                          [(Fraction(3, 2),), (0,), (0,)])
    report = verify_rank_coloring(inst, [0, 0, 0])
    assert [x.vertex for x in report.violations] == [0]
    assert report.violations[0].observed == 2


def test_wrong_length_coloring():
    assert not verify_majority_fraction(CYCLE3, [0, 1], 1, 2).ok


def test_cycle_proper():
    assert verify_majority_fraction(CYCLE3, [0, 1, 2], 1, 2).ok


def test_cycle_improper():
    report = verify_majority_fraction(CYCLE3, [0, 0, 1], 1, 2)
    assert [x.vertex for x in report.violations] == [0]


@given(digraphs(), st.data())
def test_fraction_one_always_ok(D, data):
    coloring = data.draw(st.lists(st.integers(0, 2), min_size=D.n, max_size=D.n))
    assert verify_majority_fraction(D, coloring, 1, 1).ok


def test_bad_fraction():
    with pytest.raises(ValueError):
        verify_majority_fraction(CYCLE3, [0, 1, 2], 3, 2)


def test_undirected():
    G = UndirectedGraph(2, [(0, 1)])
    assert verify_undirected_fraction(G, [0, 1], 2).ok
    assert [x.vertex for x in verify_undirected_fraction(G, [0, 0], 2).violations] == [0, 1]


@given(digraphs(), st.data())
def test_half_fraction_matches_majority4_ranks(D, data):
    coloring = data.draw(st.lists(st.integers(0, 5), min_size=D.n, max_size=D.n))
    lists = []
    for c in coloring:
        others = [x for x in range(6) if x != c][:3]
        lists.append((c, *others))
    inst = build_majority4_instance(D, lists)
    assert verify_majority_fraction(D, coloring, 1, 2).ok == verify_rank_coloring(inst, coloring).ok
