from fractions import Fraction

import pytest

from src import config
from src.catalog import (
    _bool_fact,
    _check_fact,
    build,
    check_entry,
    entry_ids,
    get_entry,
    list_entries,
)
from src.errors import InvalidParameterError
from src.graph_core import cycle_graph, degree_sequence, is_bipartite
from src.probe import GraphProbe
from src.schemas import FactVerdict
from src.spectral import edge_threshold
from src.toughness import is_t_tough, toughness


def verdicts(report):
    return {fact.name: fact.verdict for fact in report.facts}


@pytest.mark.parametrize("entry_id", entry_ids())
def test_built_degree_sequence_matches_entry(entry_id):
    entry = get_entry(entry_id)
    g = build(entry_id)
    assert degree_sequence(g) == entry.sequence(entry.default_n)


def test_registry_contents():
    ids = entry_ids()
    assert len([i for i in ids if i.startswith("2.2.3-")]) == 15
    for expected in ("1.1.1-adjacent", "1.1.1-nonadjacent", "1.1.2", "1.2", "1.2-drawn", "2.1.1",
                     "2.2.1", "2.2.2", "2.2.2-drawn", "3.1.1", "3.1.2", "S"):
        assert expected in ids
    summaries = {s.id: s for s in list_entries()}
    assert summaries["S"].parameterized and summaries["S"].n_floor == 4
    assert not summaries["2.2.1"].parameterized


def test_adjacent_pair_examples():
    g = build("1.1.1-adjacent", 7)
    assert degree_sequence(g).counts() == [(2, 2), (4, 4), (6, 1)]
    assert g.m == 13
    for n in range(7, 11):
        assert toughness(build("1.1.1-adjacent", n)) == Fraction(1, 2)


def test_nonadjacent_pair_meets_edge_threshold():
    for n in range(7, 13):
        g = build("1.1.1-nonadjacent", n)
        assert g.m == edge_threshold(n, 1)
        assert not g.has_edge(1, 2)
        assert g.has_edge(1, n - 2) and g.has_edge(2, n - 1)


def test_p_join_k6():
    g = build("2.2.1")
    assert degree_sequence(g).counts() == [(8, 11), (16, 6)]
    assert g.m == 92
    assert is_t_tough(g, 2)
    split = build("2.2.1", cycles=[5, 6])
    assert degree_sequence(split) == degree_sequence(g)
    assert split != g


def test_p_plus_k1_join_k6():
    g = build("2.2.2")
    assert degree_sequence(g).counts() == [(6, 1), (8, 10), (16, 6)]
    assert g.m == 91


def test_S_entry():
    assert degree_sequence(build("S", 12)).counts() == [(2, 6), (6, 6)]
    assert is_bipartite(build("S", 4))


@pytest.mark.parametrize("entry_id, n, cycles", [
    ("no-such-entry", None, None),
    ("1.1.1-adjacent", 6, None),
    ("S", 10, None),
    ("1.1.2", 10, None),
    ("1.1.2", None, [3, 3]),
    ("2.2.1", None, [5, 5]),
    ("2.2.1", None, [2, 9]),
])
def test_build_rejects(entry_id, n, cycles):
    with pytest.raises(InvalidParameterError):
        build(entry_id, n, cycles)


def test_check_adjacent_pair():
    report = check_entry("1.1.1-adjacent", 7)
    assert verdicts(report)["toughness_at_most"] is FactVerdict.VERIFIED
    facts = {f.name: f for f in report.facts}
    assert facts["toughness_at_most"].observed == "1/2"
    assert not report.refuted


def test_check_k3_join_matching():
    report = check_entry("1.1.2")
    assert verdicts(report)["hamiltonian"] is FactVerdict.VERIFIED
    assert verdicts(report)["pancyclic"] is FactVerdict.VERIFIED
    assert report.degree_sequence == "(4^6, 8^3)"


def test_check_S():
    report = check_entry("S", 12)
    assert all(f.verdict is FactVerdict.VERIFIED for f in report.facts)
    observed = {f.name: f.observed for f in report.facts}
    assert observed == {
        "degree_sequence": "(2^6, 6^6)", "hamiltonian": "true", "pancyclic": "false", "bipartite": "false",
    }


def test_check_drawn_graph_covers_every_realization():
    report = check_entry("1.2-drawn")
    assert verdicts(report)["pancyclic_every_realization"] is FactVerdict.VERIFIED
    assert not report.refuted


def test_check_p_join_k6():
    report = check_entry("2.2.1")
    assert all(f.verdict is FactVerdict.VERIFIED for f in report.facts), report.facts


def test_guarded_facts_are_skipped(monkeypatch):
    monkeypatch.setattr(config, "TOUGHNESS_MAX_N", 5)
    report = check_entry("1.2")
    v = verdicts(report)
    assert v["degree_sequence"] is FactVerdict.VERIFIED
    assert v["toughness_at_most"] is FactVerdict.SKIPPED
    skipped = next(f for f in report.facts if f.name == "toughness_at_most")
    assert "exceeds the guard" in skipped.reason


def test_conditional_claims_hold_vacuously_without_the_premise():
    fact = _bool_fact("pancyclic", "for 2-tough G, G is pancyclic", True, premise_t=2)
    result = _check_fact(GraphProbe(cycle_graph(7)), fact)
    assert result.verdict is FactVerdict.VERIFIED
    assert result.observed == "false"
    assert "vacuously" in result.reason


def test_refuted_claims_are_findings():
    fact = _bool_fact("pancyclic", "G is pancyclic", True)
    result = _check_fact(GraphProbe(cycle_graph(7)), fact)
    assert result.verdict is FactVerdict.REFUTED
