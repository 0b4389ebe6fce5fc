import random
from fractions import Fraction
from itertools import permutations
from math import factorial, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _strategies import nested_pairs as nested
from _strategies import nontrivial_partitions
from slodowy.chambers import (
    Chamber,
    Wall,
    distinct_arrangements,
    enumerate_chambers,
    flag_types,
    flop_graph,
    level_coordinates,
    locate,
    node_label,
    slice_chambers,
    weyl_reflect,
)
from slodowy.errors import DegenerateAmbient, DimensionMismatch
from slodowy.partitions import Partition, all_partitions, count_resolutions, dual
from slodowy.slices import count_slice_resolutions, decompose_quiver, make_slice_pair

P = Partition
STAIRCASE_FLAG_TYPES = {(3, 2, 1), (2, 3, 1), (2, 1, 3), (1, 2, 3), (1, 3, 2), (3, 1, 2)}


def test_staircase_chambers_labels():
    chambers = enumerate_chambers(P([3, 2, 1]))
    assert len(chambers) == 6
    assert {c.flag_type for c in chambers} == STAIRCASE_FLAG_TYPES


def test_staircase_chambers_regions():
    d = P([3, 2, 1])
    # one interior point per region: level coordinates (z1, z2, 0) ordered as listed
    regions = {
        (1, 1): (3, 2, 1),  # z1 > z2 > z3
        (-1, 3): (2, 3, 1),  # z2 > z1 > z3
        (-3, 1): (2, 1, 3),  # z2 > z3 > z1
        (-1, -1): (1, 2, 3),  # z3 > z2 > z1
        (1, -3): (1, 3, 2),  # z3 > z1 > z2
        (3, -1): (3, 1, 2),  # z1 > z3 > z2
    }
    for chi, label in regions.items():
        hit = locate(chi, d)
        assert isinstance(hit, Chamber) and hit.flag_type == label


def test_small_examples():
    two = enumerate_chambers(P([2]))
    assert len(two) == 2 and {c.flag_type for c in two} == {(1, 1)}
    three_two = enumerate_chambers(P([3, 2]))
    assert len(three_two) == 6 and len({c.flag_type for c in three_two}) == 3
    with pytest.raises(DegenerateAmbient):
        enumerate_chambers(P([1, 1]))


def test_locate_walls_and_errors():
    d = P([3, 2, 1])
    wall = locate((0, 0), d)
    assert isinstance(wall, Wall) and wall.ties == ((1, 2), (1, 3), (2, 3))
    assert isinstance(locate((1, -1), d), Wall)
    assert isinstance(locate((Fraction(1, 2), 0), d), Wall)
    with pytest.raises(DimensionMismatch):
        locate((1, 1, 1), d)


def test_fundamental_chamber_has_flag_type_a():
    for n in range(2, 9):
        for d in all_partitions(n):
            if not d.is_trivial():
                m = len(dual(d))
                assert locate((1,) * (m - 1), d).flag_type == tuple(dual(d))


def test_level_coordinates():
    assert level_coordinates((-1, 3)) == (2, 3, 0)


chis = st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=6), min_size=1, max_size=6)


@given(chis, st.fractions(min_value=Fraction(1, 7), max_value=50, max_denominator=7))
def test_locate_is_scale_invariant(chi, t):
    d = P([len(chi) + 1])
    a = locate(chi, d)
    b = locate([t * c for c in chi], d)
    assert type(a) is type(b)
    if isinstance(a, Chamber):
        assert a == b


@given(chis, st.data())
def test_weyl_reflection_permutes_level_coordinates(chi, data):
    i = data.draw(st.integers(1, len(chi)))
    z = list(level_coordinates(chi))
    z2 = level_coordinates(weyl_reflect(chi, i))
    z[i - 1], z[i] = z[i], z[i - 1]
    # equal up to the common shift that keeps the last coordinate zero
    shift = z[-1]
    assert tuple(x - shift for x in z) == z2
    assert weyl_reflect(weyl_reflect(chi, i), i) == tuple(Fraction(c) for c in chi)


def test_weyl_reflection_moves_between_adjacent_chambers():
    d = P([3, 2, 1])
    assert locate(weyl_reflect((1, 1), 1), d).flag_type == (2, 3, 1)
    assert locate(weyl_reflect((1, 1), 2), d).flag_type == (3, 1, 2)


def test_flop_graph_examples():
    hexagon = flop_graph(P([3, 2, 1]))
    assert len(hexagon.nodes) == 6 and len(hexagon.edges) == 6
    assert all(hexagon.degree(n) == 2 for n in hexagon.nodes) and hexagon.is_connected()

    single = flop_graph(P([2]))
    assert single.nodes == ((1, 1),) and single.edges == ()

    path = flop_graph(P([3, 2]))
    assert set(path.nodes) == {(2, 2, 1), (2, 1, 2), (1, 2, 2)}
    assert {frozenset(e) for e in path.edges} == {
        frozenset({(2, 2, 1), (2, 1, 2)}),
        frozenset({(2, 1, 2), (1, 2, 2)}),
    }


def test_flop_graphs_exhaustive():
    for n in range(2, 11):
        for d in all_partitions(n):
            if d.is_trivial():
                continue
            g = flop_graph(d)
            m = len(dual(d))
            assert len(g.nodes) == count_resolutions(d)
            assert g.is_connected()
            assert all(g.degree(node) <= m - 1 for node in g.nodes)


def test_chamber_to_label_fibres():
    """Every label is hit by exactly prod(mult!) of the m! chambers."""
    for n in range(2, 9):
        for d in all_partitions(n):
            if d.is_trivial() or len(dual(d)) > 6:
                continue
            a = dual(d)
            counts = {}
            for c in enumerate_chambers(d):
                counts[c.flag_type] = counts.get(c.flag_type, 0) + 1
            fibre = prod(factorial(a.count(x)) for x in set(a))
            assert set(counts.values()) == {fibre}
            assert len(counts) * fibre == factorial(len(a))


@given(st.lists(st.integers(1, 4), min_size=1, max_size=7))
def test_distinct_arrangements(items):
    got = distinct_arrangements(items)
    assert sorted(set(permutations(items)), reverse=True) == got


def test_flag_types_sorted():
    assert flag_types(P([3, 2, 1]))[0] == (3, 2, 1)


def test_slice_chambers_examples():
    sc = slice_chambers(make_slice_pair(P([4, 4, 4, 2, 2, 1, 1]), P([5, 4, 3, 3, 2, 1])))
    assert len(sc.graph.nodes) == 12
    assert [len(c) for c in sc.chambers] == [6, 2]
    assert len(slice_chambers(make_slice_pair(P([5, 3, 3, 2]), P([5, 4, 3, 1]))).graph.nodes) == 3
    point = slice_chambers(make_slice_pair(P([2, 1]), P([2, 1])))
    assert point.graph.nodes == ((),) and point.factors == ()


@given(nested(max_n=10))
def test_product_structure(p):
    sp = make_slice_pair(*p)
    sc = slice_chambers(sp)
    factors = decompose_quiver(sp) if not sp.is_point() else []
    graphs = [flop_graph(f.d) for f in factors]
    sizes = [len(g.nodes) for g in graphs]
    total = prod(sizes)
    assert len(sc.graph.nodes) == total == count_slice_resolutions(sp)
    assert len(sc.graph.edges) == sum(len(g.edges) * total // s for g, s in zip(graphs, sizes))
    assert sc.graph.is_connected()


def test_dot_and_json():
    g = flop_graph(P([3, 2]))
    dot = g.to_dot()
    assert dot.startswith("graph flops {") and '"2,2,1" -- "2,1,2";' in dot
    assert g.to_json()["nodes"] == ["2,2,1", "2,1,2", "1,2,2"]
    assert node_label(((3, 2, 1), (2, 1))) == "3,2,1|2,1"
    assert Chamber((2, 1, 3), (2, 3, 1)).to_json() == {"perm": [2, 1, 3], "flag_type": [2, 3, 1]}


@given(nontrivial_partitions(max_n=9), st.integers(0, 2**32))
def test_random_generic_points_land_in_labelled_chambers(d, seed):
    rng = random.Random(seed)
    m = len(dual(d))
    chi = [Fraction(rng.randint(-50, 50), rng.randint(1, 7)) for _ in range(m - 1)]
    hit = locate(chi, d)
    if isinstance(hit, Chamber):
        assert sorted(hit.flag_type, reverse=True) == list(dual(d))
        assert hit.flag_type in flag_types(d)
