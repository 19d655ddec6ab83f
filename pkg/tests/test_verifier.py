import pytest

from src.catalog import build
from src.degseq import m90_sequences, realize
from src.errors import DisconnectedGraphError, InvalidParameterError, SizeGuardError, ToughCyclesError
from src.graph_core import DegreeSequence, complete_graph, cycle_graph, graph6_encode, k_copies, make_S
from src.probe import GraphProbe
from src.schemas import PropositionId, PropositionStatus, ScanCounts, TheoremId, TheoremVerdict
from src.verifier import (
    check_supporting_prop,
    check_theorem,
    classify,
    evaluate_theorem,
    exhaustive_sweep,
    proposition_sweep,
    scan_graph6,
    verify_degree_family,
)

K7 = graph6_encode(complete_graph(7))


def by_theorem(report):
    return {check.theorem: check for check in report.theorems}


# ============ Single graph ============

def test_classify_complete_graph():
    report = classify(complete_graph(7), 1)
    assert report.toughness == "inf"
    assert report.m == 21 and report.kappa == 6 and report.delta == 6
    assert report.pancyclic and report.hamiltonian and not report.bipartite
    assert report.cycle_spectrum == [3, 4, 5, 6, 7]
    assert report.predicate_p_holds
    checks = by_theorem(report)
    assert checks[TheoremId.EDGES_2_1].verdict is TheoremVerdict.CONFIRMED
    assert checks[TheoremId.RHO_2_2].verdict is TheoremVerdict.CONFIRMED
    assert checks[TheoremId.Q_2_3_PRINTED].verdict is TheoremVerdict.HYPOTHESIS_FAILS
    assert checks[TheoremId.Q_2_3_CORRECTED].verdict is TheoremVerdict.CONFIRMED
    assert checks[TheoremId.HAM_RHO_2_6].reason == "out of stated range"


def test_classify_cycle():
    report = classify(cycle_graph(7), 1)
    edges = by_theorem(report)[TheoremId.EDGES_2_1]
    assert edges.verdict is TheoremVerdict.HYPOTHESIS_FAILS
    assert edges.hypothesis == {"edges": False}
    assert report.toughness == "1"
    assert not report.predicate_p_holds and report.predicate_p_witness == 2


def test_classify_nonadjacent_pair_construction():
    report = classify(build("1.1.1-nonadjacent", 7), 1)
    edges = by_theorem(report)[TheoremId.EDGES_2_1]
    assert edges.verdict is TheoremVerdict.CONFIRMED
    assert edges.hypothesis == {"edges": True, "t_tough": True}
    assert report.pancyclic


def test_classification_invariants(rng):
    from conftest import random_connected_graph

    for _ in range(20):
        report = classify(random_connected_graph(rng, rng.randint(3, 8)), 1)
        if report.pancyclic:
            assert report.hamiltonian
        if report.bipartite:
            assert not report.pancyclic
        for check in report.theorems:
            if check.verdict is TheoremVerdict.COUNTEREXAMPLE:
                assert check.conclusion is False


def test_classify_rejects_bad_input():
    with pytest.raises(DisconnectedGraphError):
        classify(k_copies(2, complete_graph(3)), 1)
    with pytest.raises(InvalidParameterError):
        classify(complete_graph(7), 4)


@pytest.mark.parametrize("g, t, which, expected", [
    (complete_graph(16), 2, TheoremId.EDGES_2_1, TheoremVerdict.CONFIRMED),
    (complete_graph(8), 1, TheoremId.HAM_RHO_2_6, TheoremVerdict.CONFIRMED),
    (cycle_graph(5), 1, TheoremId.EDGES_2_1, TheoremVerdict.HYPOTHESIS_FAILS),
    (k_copies(2, complete_graph(4)), 1, TheoremId.EDGES_2_1, TheoremVerdict.HYPOTHESIS_FAILS),
])
def test_check_theorem(g, t, which, expected):
    assert check_theorem(g, t, which) is expected


def test_p_join_k6_confirms_edge_theorem():
    check = evaluate_theorem(GraphProbe(build("2.2.1")), 2, "edges_2_1")
    assert check.verdict is TheoremVerdict.CONFIRMED
    assert check.threshold == 90 and check.observed == 92


def test_printed_q_hypothesis_never_holds():
    check = evaluate_theorem(GraphProbe(build("2.2.1")), 2, TheoremId.Q_2_3_PRINTED)
    assert check.verdict is TheoremVerdict.HYPOTHESIS_FAILS
    assert check.hypothesis == {"spectral": False}
    assert "edge bound" in check.reason


def test_estimate_within_tolerance_is_boundary():
    # with tol = 2 the certified rho(K_7) = 6 cannot be separated from sqrt(20)
    check = evaluate_theorem(GraphProbe(complete_graph(7), tol=2.0), 1, TheoremId.RHO_2_2)
    assert check.verdict is TheoremVerdict.BOUNDARY
    assert check.hypothesis["spectral"] is None
    edges = evaluate_theorem(GraphProbe(complete_graph(7), tol=2.0), 1, TheoremId.EDGES_2_1)
    assert edges.verdict is TheoremVerdict.CONFIRMED


def test_out_of_range_and_disconnected_reasons():
    assert evaluate_theorem(GraphProbe(cycle_graph(5)), 1, "edges_2_1").reason == "out of stated range"
    disconnected = evaluate_theorem(GraphProbe(k_copies(2, complete_graph(4))), 1, "rho_2_2")
    assert disconnected.reason == "not connected"


# ============ Sweeps ============

@pytest.mark.parametrize("n, connected", [(3, 4), (4, 38), (5, 728)])
def test_sweep_below_floor(n, connected):
    report = exhaustive_sweep(n, 1, TheoremId.EDGES_2_1)
    assert report.counts.examined == 2 ** (n * (n - 1) // 2)
    assert report.counts.connected == connected
    assert report.counts.hypothesis_met == 0
    assert report.first_counterexample_graph6 is None
    assert report.params == {"n": n, "t": 1, "theorem": "edges_2_1", "tol": 1e-9}


def test_sweep_is_independent_of_workers():
    single = exhaustive_sweep(5, 1, "rho_2_2", workers=1)
    pooled = exhaustive_sweep(5, 1, "rho_2_2", workers=3)
    assert single.document() == pooled.document()


def test_sweep_guard():
    with pytest.raises(SizeGuardError):
        exhaustive_sweep(8, 1, "edges_2_1")
    with pytest.raises(ToughCyclesError):
        exhaustive_sweep(0, 1, "edges_2_1")


@pytest.mark.slow
@pytest.mark.parametrize("which", [TheoremId.EDGES_2_1, TheoremId.RHO_2_2])
def test_sweep_order_seven(which):
    report = exhaustive_sweep(7, 1, which, workers=4)
    assert report.counts.examined == 2 ** 21
    assert report.counts.hypothesis_met > 0
    assert report.counts.counterexamples == 0


def test_counts_must_balance():
    with pytest.raises(ValueError):
        ScanCounts(examined=3, connected=3, hypothesis_met=2, confirmed=1, counterexamples=0)


# ============ graph6 streams ============

def test_empty_stream():
    report = scan_graph6([], 1, "edges_2_1")
    assert report.counts == ScanCounts()
    assert report.diagnostics == []


def test_malformed_line_is_a_diagnostic():
    report = scan_graph6(["B!\n", K7 + "\n"], 1, "edges_2_1")
    assert len(report.diagnostics) == 1
    assert report.diagnostics[0].line == 1
    assert report.diagnostics[0].offset == 1
    assert report.counts.examined == 1
    assert report.counts.confirmed == 1


def test_skip_resumes_after_lines():
    lines = ["B!", "", K7]
    report = scan_graph6(lines, 1, "edges_2_1", skip=1)
    assert report.diagnostics == []
    assert report.counts.examined == 1
    assert report.params["skip"] == 1
    assert scan_graph6(lines, 1, "rho_2_2", skip=1, seed=3).params["seed"] == 3
    with pytest.raises(ToughCyclesError):
        scan_graph6(lines, 1, "edges_2_1", skip=-1)


def test_oversized_graphs_are_reported_not_checked():
    report = scan_graph6([K7, graph6_encode(cycle_graph(4))], 1, "edges_2_1", max_n=5)
    assert report.counts.examined == 1
    assert "exceeds the limit" in report.diagnostics[0].message


def test_scan_of_m90_realizations():
    lines = [graph6_encode(realize(seq)) for seq in m90_sequences()]
    report = scan_graph6(lines, 2, TheoremId.EDGES_2_1)
    assert report.counts.examined == 15
    assert report.counts.counterexamples == 0
    assert report.counts.confirmed == report.counts.hypothesis_met


def test_scan_is_independent_of_workers(rng):
    from conftest import random_graph

    lines = [graph6_encode(random_graph(rng, 7, p=0.7)) for _ in range(60)] + ["junk!"]
    single = scan_graph6(lines, 1, "edges_2_1", workers=1, batch_size=16)
    pooled = scan_graph6(lines, 1, "edges_2_1", workers=3, batch_size=16)
    assert single.document() == pooled.document()
    assert single.counts.hypothesis_met > 0


def test_scan_progress_callback():
    seen = []
    scan_graph6([K7] * 5, 1, "edges_2_1", batch_size=2, on_progress=lambda lines, counts: seen.append(lines))
    assert seen == [2, 4, 5]


# ============ Supporting propositions ============

@pytest.mark.parametrize("g, prop, t, expected", [
    (complete_graph(7), PropositionId.P2_9, None, PropositionStatus.HOLDS),
    (cycle_graph(6), PropositionId.P2_3, 1, PropositionStatus.HOLDS),
    (make_S(12), PropositionId.P2_10, None, PropositionStatus.HOLDS),
    (cycle_graph(7), PropositionId.P2_7, 1, PropositionStatus.NOT_APPLICABLE),
    (cycle_graph(7), PropositionId.P2_9, None, PropositionStatus.NOT_APPLICABLE),
    (complete_graph(5), PropositionId.P2_1, None, PropositionStatus.NOT_APPLICABLE),
    (cycle_graph(6), PropositionId.P2_2, None, PropositionStatus.HOLDS),
    (k_copies(2, complete_graph(3)), PropositionId.P2_2, None, PropositionStatus.NOT_APPLICABLE),
])
def test_check_supporting_prop(g, prop, t, expected):
    assert check_supporting_prop(g, prop, t).status is expected


@pytest.mark.parametrize("prop, t", [
    (PropositionId.P2_1, None),
    (PropositionId.P2_2, None),
    (PropositionId.P2_3, None),
    (PropositionId.P2_4, None),
    (PropositionId.P2_7, 1),
    (PropositionId.P2_7, 2),
    (PropositionId.P2_8, 1),
    (PropositionId.P2_8, 2),
    (PropositionId.P2_9, None),
    (PropositionId.P2_10, None),
])
def test_propositions_hold_on_small_graphs(prop, t):
    report = proposition_sweep(5, prop, t)
    assert report.counts.examined == 1024
    assert report.counts.violated == 0
    assert report.first_violation_graph6 is None


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7])
@pytest.mark.parametrize("prop, t", [
    (PropositionId.P2_7, 1),
    (PropositionId.P2_7, 2),
    (PropositionId.P2_8, 1),
    (PropositionId.P2_8, 2),
])
def test_propositions_hold_exhaustively(n, prop, t):
    report = proposition_sweep(n, prop, t, workers=4)
    assert report.counts.applicable > 0
    assert report.counts.violated == 0


# ============ Degree-sequence families ============

def test_family_sampling_is_seeded():
    seq = DegreeSequence.parse("8^11,14^1,16^5")
    first = verify_degree_family(seq, t=2, samples=3, seed=11)
    again = verify_degree_family(seq, t=2, samples=3, seed=11)
    assert first == again
    assert first.examined == 4
    assert first.k == 16
    assert first.violations == 0


def test_family_sampling_rejects_negative_samples():
    with pytest.raises(ToughCyclesError):
        verify_degree_family(DegreeSequence.parse("2,2,2"), samples=-1)
