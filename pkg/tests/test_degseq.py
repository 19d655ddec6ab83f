import pytest

from conftest import random_graph
from src.degseq import (
    degree_sum_bound,
    degree_sum_bound_chain,
    edge_switch_samples,
    enumerate_realizations,
    is_graphical,
    iter_realizations,
    m90_sequences,
    m91_sequences,
    predicate_P,
    realize,
)
from src.errors import InvalidParameterError, NotGraphicalError, SizeGuardError
from src.graph_core import DegreeSequence, complete_graph, cycle_graph, degree_sequence, star_graph


def seq(text: str) -> DegreeSequence:
    return DegreeSequence.parse(text)


@pytest.mark.parametrize("text, expected", [
    ("3^5,5^1,6^1", True),
    ("1,1,1", False),
    ("8^11,14^1,16^5", True),
    ("3,3,1,1", False),
    ("0", True),
])
def test_is_graphical(text, expected):
    assert is_graphical(seq(text)) is expected


def test_realize_triangle():
    assert realize(seq("2,2,2")) == complete_graph(3)


@pytest.mark.parametrize("text", ["4^4,11^10,15^2", "8^11,14^1,16^5", "3^5,5^1,6^1", "9^12,18^7"])
def test_realize_matches_sequence(text):
    s = seq(text)
    g = realize(s)
    assert g.n == s.n
    assert g.degrees() == list(s.degrees)


def test_realize_round_trips_random_sequences(rng):
    for _ in range(60):
        s = degree_sequence(random_graph(rng, rng.randint(1, 10), p=rng.random()))
        assert is_graphical(s)
        assert degree_sequence(realize(s)) == s


def test_realize_rejects_non_graphical():
    with pytest.raises(NotGraphicalError):
        realize(seq("1,1,1"))


def test_enumerate_realizations():
    assert enumerate_realizations(seq("2,2,2"), limit=10) == [complete_graph(3)]
    figure = seq("3^5,5^1,6^1")
    found = enumerate_realizations(figure, limit=10**6)
    assert found
    assert len(set(found)) == len(found)
    assert all(degree_sequence(g) == figure for g in found)
    assert enumerate_realizations(seq("1,1,1"), limit=10) == []
    assert len(enumerate_realizations(figure, limit=3)) == 3


def test_enumeration_guard():
    with pytest.raises(SizeGuardError):
        list(iter_realizations(seq("2^11")))


def test_enumeration_counts_labeled_cycles():
    # labeled 2-regular graphs on 5 vertices are exactly the 12 Hamilton cycles of K_5
    assert len(enumerate_realizations(seq("2^5"), limit=100)) == 12


def test_edge_switches_preserve_degrees():
    base = realize(seq("8^11,14^1,16^5"))
    samples = edge_switch_samples(base, 5, seed=7)
    assert len(samples) == 5
    for g in samples:
        assert g.degrees() == base.degrees()
    assert edge_switch_samples(base, 5, seed=7) == samples
    assert any(g != base for g in samples)


def test_predicate_P():
    assert predicate_P(degree_sequence(complete_graph(7)), 1) == (True, None)
    assert predicate_P(degree_sequence(star_graph(7)), 1) == (False, 2)
    assert predicate_P(degree_sequence(cycle_graph(7)), 1) == (False, 2)
    with pytest.raises(InvalidParameterError):
        predicate_P(degree_sequence(cycle_graph(7)), 0)


def test_predicate_P_survives_raising_degrees(rng):
    for _ in range(200):
        n = rng.randint(2, 12)
        t = rng.randint(1, 3)
        low = DegreeSequence(rng.randint(0, n - 1) for _ in range(n))
        raised = list(low.degrees)
        for i in rng.sample(range(n), rng.randint(1, n)):
            raised[i] = rng.randint(raised[i], n - 1)
        if predicate_P(low, t)[0]:
            assert predicate_P(DegreeSequence(raised), t)[0], (low, raised)


@pytest.mark.parametrize("n, k, t, expected", [
    (9, 4, 1, 48),
    (7, 3, 1, 27),
    (29, 14, 3, 560),
])
def test_degree_sum_bound(n, k, t, expected):
    assert degree_sum_bound(n, k, t) == expected


def test_degree_sum_bound_forms_agree():
    for t in (1, 2, 3):
        for n in range(2 * t + 1, 101):
            for k in range(t, (n + 1) // 2):
                if 2 * k < n:
                    assert degree_sum_bound(n, k, t) == degree_sum_bound_chain(n, k, t)


def test_degree_sum_bound_range():
    with pytest.raises(InvalidParameterError):
        degree_sum_bound(8, 4, 1)


def test_m90_sequences():
    rows = m90_sequences()
    assert len(rows) == 15
    assert rows[0] == DegreeSequence.from_counts([(5, 1), (8, 10), (15, 1), (16, 5)])
    for row in rows:
        assert row.n == 17
        assert row.total == 180
        assert is_graphical(row)


def test_m91_sequences():
    rows = m91_sequences()
    assert len(rows) == 5
    assert all(row.n == 17 and row.total == 182 and is_graphical(row) for row in rows)
