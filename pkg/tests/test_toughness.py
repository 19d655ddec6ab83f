from fractions import Fraction
from itertools import combinations

import pytest

from conftest import random_connected_graph
from src.errors import DisconnectedGraphError, InvalidParameterError, SizeGuardError
from src.graph_core import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    components,
    cycle_graph,
    delete_vertices,
    disjoint_union,
    join,
    k_copies,
    matching_graph,
)
from src.toughness import (
    ToughnessValue,
    find_toughness_violation,
    is_t_tough,
    parse_fraction,
    toughness,
    toughness_with_witness,
    vertex_connectivity,
)


def brute_force_toughness(g: Graph) -> Fraction:
    best = None
    for size in range(1, g.n - 1):
        for removed in combinations(range(g.n), size):
            pieces = components(delete_vertices(g, removed)[0])
            if pieces >= 2:
                ratio = Fraction(size, pieces)
                best = ratio if best is None or ratio < best else best
    return best


@pytest.mark.parametrize("a", range(1, 7))
@pytest.mark.parametrize("b", range(1, 7))
def test_complete_bipartite_toughness(a, b):
    if a > b or (a, b) == (1, 1):
        pytest.skip("K_{a,b} with a <= b, not complete")
    assert toughness(complete_bipartite_graph(a, b)) == ToughnessValue.finite(a, b)


def test_complete_graphs_are_infinitely_tough():
    assert toughness(complete_graph(7)).is_infinite
    assert toughness(complete_graph(1)).is_infinite
    assert toughness(complete_graph(2)).is_infinite
    assert str(toughness(complete_graph(7))) == "inf"
    assert toughness(complete_graph(7)) > 100


def test_adjacent_pair_construction():
    g = join(complete_graph(1), disjoint_union(complete_graph(4), complete_graph(2)))
    value, witness = toughness_with_witness(g)
    assert value == Fraction(1, 2)
    assert str(value) == "1/2"
    assert witness == (0,)


def test_witness_attains_the_ratio(rng):
    for _ in range(30):
        g = random_connected_graph(rng, rng.randint(4, 9), p=0.4)
        if g.is_complete():
            continue
        value, witness = toughness_with_witness(g)
        pieces = components(delete_vertices(g, witness)[0])
        assert Fraction(len(witness), pieces) == value.value
        assert value.value == brute_force_toughness(g)


def test_t_tough():
    octahedron = matching_graph(3).complement()
    assert is_t_tough(octahedron, 2)
    assert not is_t_tough(octahedron, Fraction(5, 2))
    assert is_t_tough(cycle_graph(5), 1)
    inner = disjoint_union(k_copies(2, complete_graph(2)), complete_graph(1))
    assert not is_t_tough(join(complete_graph(2), inner), 1)
    violation = find_toughness_violation(join(complete_graph(2), inner), 1)
    assert violation == (0, 1)


def test_t_tough_agrees_with_toughness(rng):
    for _ in range(30):
        g = random_connected_graph(rng, rng.randint(4, 9), p=0.5)
        value = toughness(g)
        for t in (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)):
            assert is_t_tough(g, t) is (value >= t)


@pytest.mark.parametrize("g, expected", [
    (complete_graph(5), 4),
    (cycle_graph(6), 2),
    (complete_bipartite_graph(2, 3), 2),
])
def test_vertex_connectivity(g, expected):
    assert vertex_connectivity(g) == expected


def test_vertex_connectivity_has_no_size_guard():
    assert vertex_connectivity(cycle_graph(25)) == 2
    assert vertex_connectivity(join(complete_graph(20), k_copies(3, complete_graph(2)))) == 20
    with pytest.raises(DisconnectedGraphError):
        vertex_connectivity(k_copies(2, complete_graph(3)))


def test_disconnected_rejected():
    with pytest.raises(DisconnectedGraphError):
        toughness(k_copies(2, complete_graph(3)))
    with pytest.raises(DisconnectedGraphError):
        is_t_tough(k_copies(2, complete_graph(3)), 1)


def test_size_guard():
    with pytest.raises(SizeGuardError) as info:
        toughness(cycle_graph(30))
    assert "allow_large" in str(info.value)
    # universal vertices are never enumerated, so this stays cheap above the guard
    big = join(complete_graph(20), k_copies(3, complete_graph(2)))
    assert toughness(big, allow_large=True) == Fraction(20, 3)


def test_parse_fraction():
    assert parse_fraction("5/2") == Fraction(5, 2)
    assert parse_fraction("2") == 2
    assert parse_fraction("2.5") == Fraction(5, 2)
    with pytest.raises(InvalidParameterError):
        parse_fraction("two")
    with pytest.raises(InvalidParameterError):
        parse_fraction("-1")


def test_adding_an_edge_never_lowers_toughness(rng):
    for _ in range(40):
        g = random_connected_graph(rng, rng.randint(4, 9), p=0.4)
        missing = g.non_edges()
        if not missing:
            continue
        u, v = rng.choice(missing)
        assert toughness(g) <= toughness(g.add_edge(u, v))
