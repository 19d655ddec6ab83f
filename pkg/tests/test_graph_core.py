import networkx as nx
import pytest

from conftest import random_graph
from src.errors import EdgeListParseError, Graph6ParseError, InvalidParameterError
from src.graph_core import (
    DegreeSequence,
    Graph,
    GraphKind,
    complete_bipartite_graph,
    complete_graph,
    components,
    cycle_graph,
    degree_sequence,
    delete_vertices,
    disjoint_union,
    empty_graph,
    graph6_decode,
    graph6_encode,
    is_bipartite,
    is_isomorphic_to_S,
    join,
    k_copies,
    make_S,
    matching_graph,
    read_edgelist,
    standard_graph,
    star_graph,
    write_edgelist,
)


def degrees_of(g):
    return list(degree_sequence(g))


def test_complete_graph():
    k4 = complete_graph(4)
    assert k4.m == 6
    assert degrees_of(k4) == [3, 3, 3, 3]
    assert k4.is_complete()


def test_cycle_is_two_regular():
    c5 = cycle_graph(5)
    assert c5.m == 5
    assert set(c5.degrees()) == {2}


def test_complete_bipartite():
    k23 = complete_bipartite_graph(2, 3)
    assert k23.m == 6
    assert is_bipartite(k23)
    assert degrees_of(k23) == [2, 2, 2, 3, 3]


@pytest.mark.parametrize("builder, args", [
    (cycle_graph, (2,)),
    (complete_graph, (0,)),
    (complete_bipartite_graph, (0, 3)),
    (star_graph, (1,)),
])
def test_invalid_parameters_rejected(builder, args):
    with pytest.raises(InvalidParameterError):
        builder(*args)


def test_standard_graph_dispatch():
    assert standard_graph(GraphKind.CYCLE, 6) == cycle_graph(6)
    assert standard_graph("matching", 3) == matching_graph(3)
    with pytest.raises(InvalidParameterError):
        standard_graph(GraphKind.COMPLETE_BIPARTITE, 3)


def test_join_examples():
    g = join(complete_graph(1), disjoint_union(complete_graph(4), complete_graph(2)))
    assert (g.n, g.m) == (7, 13)
    assert degree_sequence(g).counts() == [(2, 2), (4, 4), (6, 1)]

    h = join(complete_graph(3), k_copies(3, complete_graph(2)))
    assert (h.n, h.m) == (9, 24)
    assert degrees_of(h) == [4, 4, 4, 4, 4, 4, 8, 8, 8]


def test_join_with_empty_graph_is_identity():
    c5 = cycle_graph(5)
    assert join(empty_graph(0), c5) == c5


def test_copies_and_unions():
    three = k_copies(3, complete_graph(2))
    assert (three.n, three.m) == (6, 3)
    assert set(three.degrees()) == {1}
    inner = disjoint_union(k_copies(2, complete_graph(2)), complete_graph(1))
    assert (inner.n, inner.m) == (5, 2)
    assert k_copies(1, cycle_graph(5)) == cycle_graph(5)
    assert k_copies(0, cycle_graph(5)).n == 0


@pytest.mark.parametrize("g, expected", [
    (cycle_graph(4), True),
    (cycle_graph(5), False),
    (complete_bipartite_graph(2, 3), True),
])
def test_is_bipartite(g, expected):
    assert is_bipartite(g) is expected


def test_empty_degree_sequence():
    assert degrees_of(empty_graph(4)) == [0, 0, 0, 0]


def test_components_and_deletion():
    assert components(k_copies(3, complete_graph(2))) == 3
    assert components(complete_graph(7)) == 1
    g = join(complete_graph(1), disjoint_union(complete_graph(4), complete_graph(2)))
    rest, label = delete_vertices(g, [0])
    assert components(rest) == 2
    assert label[1] == 0
    with pytest.raises(InvalidParameterError):
        delete_vertices(g, [7])


def test_components_agree_with_networkx(rng):
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 12), p=0.2)
        reference = nx.Graph()
        reference.add_nodes_from(range(g.n))
        reference.add_edges_from(g.edges())
        assert components(g) == nx.number_connected_components(reference)


def test_edge_edits_return_new_graphs():
    c4 = cycle_graph(4)
    diagonal = c4.add_edge(0, 2)
    assert diagonal.m == 5 and c4.m == 4
    assert diagonal.remove_edge(0, 2) == c4
    with pytest.raises(InvalidParameterError):
        c4.remove_edge(0, 2)
    assert c4.complement().edges() == [(0, 2), (1, 3)]


# ============ graph6 ============

def test_graph6_known_strings():
    assert graph6_decode("A_") == complete_graph(2)
    assert graph6_decode("Bw") == complete_graph(3)
    assert graph6_encode(cycle_graph(5)) == "Dhc"
    assert graph6_decode(">>graph6<<Bw\n") == complete_graph(3)


def test_graph6_matches_networkx(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 20))
        reference = nx.Graph()
        reference.add_nodes_from(range(g.n))
        reference.add_edges_from(g.edges())
        expected = nx.to_graph6_bytes(reference, header=False).decode("ascii").strip()
        assert graph6_encode(g) == expected
        decoded = nx.from_graph6_bytes(expected.encode("ascii"))
        assert sorted(tuple(sorted(e)) for e in decoded.edges()) == g.edges()
        assert graph6_decode(expected) == g


@pytest.mark.parametrize("text, offset", [
    ("B", 1),
    ("A_x", 2),
    ("B!", 1),
    ("", 0),
])
def test_graph6_errors_carry_offset(text, offset):
    with pytest.raises(Graph6ParseError) as info:
        graph6_decode(text, line=4)
    assert info.value.offset == offset
    assert info.value.line == 4


# ============ Edge lists ============

def test_edgelist_round_trip_of_catalog_graph():
    g = join(complete_graph(3), k_copies(3, complete_graph(2)))
    text = write_edgelist(g)
    assert text.splitlines()[0] == "9 24"
    assert read_edgelist(text) == g


@pytest.mark.parametrize("text", [
    "",
    "3 1\n0 0\n",
    "3 1\n0 3\n",
    "3 2\n0 1\n1 0\n",
    "3 2\n0 1\n",
    "three 1\n0 1\n",
])
def test_edgelist_errors(text):
    with pytest.raises(EdgeListParseError):
        read_edgelist(text)


# ============ Degree sequences and S_n ============

def test_degree_sequence_notation():
    seq = DegreeSequence.parse("8^11,14^1,16^5")
    assert seq.n == 17
    assert seq.notation() == "(8^11, 14^1, 16^5)"
    assert DegreeSequence.parse("2,2,2").degrees == (2, 2, 2)
    with pytest.raises(InvalidParameterError):
        DegreeSequence.parse("2,x")
    with pytest.raises(InvalidParameterError):
        DegreeSequence([3, 1, 1])


def test_make_S():
    s8 = make_S(8)
    assert degree_sequence(s8).counts() == [(2, 4), (4, 4)]
    assert s8.m == 12
    assert degree_sequence(make_S(12)).counts() == [(2, 6), (6, 6)]
    with pytest.raises(InvalidParameterError):
        make_S(10)


def test_is_isomorphic_to_S():
    for n in (4, 8, 12, 16):
        assert is_isomorphic_to_S(make_S(n))
    assert is_isomorphic_to_S(cycle_graph(4))
    assert not is_isomorphic_to_S(cycle_graph(8))
    relabeled = Graph(8, [(7 - u, 7 - v) for u, v in make_S(8).edges()])
    assert is_isomorphic_to_S(relabeled)
