"""
ToughCycles - Theorem verification pipelines

Hypotheses are evaluated cheapest first: order floor, edge count (or the
edge bound on the spectral radius), t-toughness, then the spectral estimate.
The conclusion is only computed for graphs meeting the hypothesis.

Sweeps and scans fan out over a process pool and merge in input order, so a
report never depends on the worker count.
"""
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations, islice
from typing import Callable, Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from . import config
from .closure import bondy_chvatal_closure
from .cycles import is_hamiltonian, is_pancyclic
from .degseq import edge_switch_samples, predicate_P, realize
from .errors import DisconnectedGraphError, Graph6ParseError, SizeGuardError, ToughCyclesError
from .graph_core import DegreeSequence, Graph, graph6_decode, graph6_encode, is_isomorphic_to_S, iter_bits
from .probe import GraphProbe
from .schemas import (
    ClassificationReport,
    Diagnostic,
    FamilyReport,
    PropositionCounts,
    PropositionId,
    PropositionReport,
    PropositionStatus,
    PropositionSweepReport,
    ScanCounts,
    ScanReport,
    SpectralEstimateModel,
    TheoremCheck,
    TheoremId,
    TheoremVerdict,
)
from .spectral import (
    QMode,
    SpectralEstimate,
    edge_threshold,
    hamiltonicity_rho_threshold,
    in_hamiltonicity_range,
    in_theorem_range,
    q_edge_bound,
    q_threshold,
    rho_edge_bound,
    rho_threshold,
)
from .toughness import vertex_connectivity

logger = logging.getLogger("toughcycles.verifier")

SPECTRAL_THEOREMS = (
    TheoremId.RHO_2_2, TheoremId.Q_2_3_PRINTED, TheoremId.Q_2_3_CORRECTED, TheoremId.HAM_RHO_2_6,
)

ProgressCallback = Callable[[int, Dict[str, int]], None]


# ============ Single graph ============

def estimate_model(est: SpectralEstimate) -> SpectralEstimateModel:
    return SpectralEstimateModel(
        value=est.value, tolerance=est.tolerance, lower=est.lower, upper=est.upper, iterations=est.iterations
    )


def _spectral_setup(which: TheoremId, n: int, m: int, t: int) -> Tuple[float, float]:
    """(threshold, edge bound) for a spectral theorem."""
    if which is TheoremId.RHO_2_2:
        return rho_threshold(n, t), rho_edge_bound(n, m)
    if which is TheoremId.HAM_RHO_2_6:
        return hamiltonicity_rho_threshold(n, t), rho_edge_bound(n, m)
    mode = QMode.PRINTED if which is TheoremId.Q_2_3_PRINTED else QMode.CORRECTED
    return q_threshold(n, t, mode), q_edge_bound(n, m)


def evaluate_theorem(probe: GraphProbe, t: int, which: Union[TheoremId, str]) -> TheoremCheck:
    """Hypothesis flags, conclusion and verdict of one theorem on one graph."""
    which = TheoremId(which)
    n, m = probe.n, probe.m
    hamiltonicity = which is TheoremId.HAM_RHO_2_6
    in_range = in_hamiltonicity_range(n, t) if hamiltonicity else in_theorem_range(n, t)
    hypothesis: Dict[str, Optional[bool]] = {}

    def result(verdict: TheoremVerdict, **kwargs) -> TheoremCheck:
        return TheoremCheck(theorem=which, t=t, verdict=verdict, in_range=in_range, hypothesis=hypothesis, **kwargs)

    if not probe.connected:
        return result(TheoremVerdict.HYPOTHESIS_FAILS, reason="not connected")
    if not in_range:
        return result(TheoremVerdict.HYPOTHESIS_FAILS, reason="out of stated range")

    if which is TheoremId.EDGES_2_1:
        threshold = float(edge_threshold(n, t))
        hypothesis["edges"] = m >= threshold
        if not hypothesis["edges"]:
            return result(TheoremVerdict.HYPOTHESIS_FAILS, threshold=threshold, observed=float(m),
                          reason=f"m={m} below {int(threshold)}")
    else:
        threshold, bound = _spectral_setup(which, n, m, t)
        if bound < threshold - probe.tol:
            hypothesis["spectral"] = False
            return result(TheoremVerdict.HYPOTHESIS_FAILS, threshold=threshold,
                          reason=f"edge bound {bound:.6g} below threshold {threshold:.6g}")

    hypothesis["t_tough"] = probe.is_t_tough(t)
    if not hypothesis["t_tough"]:
        return result(TheoremVerdict.HYPOTHESIS_FAILS, threshold=threshold, reason=f"not {t}-tough")

    observed: Optional[float] = float(m) if which is TheoremId.EDGES_2_1 else None
    if which in SPECTRAL_THEOREMS:
        use_q = which in (TheoremId.Q_2_3_PRINTED, TheoremId.Q_2_3_CORRECTED)
        estimate = probe.q if use_q else probe.rho
        observed = estimate.value
        if abs(estimate.value - threshold) <= estimate.tolerance:
            hypothesis["spectral"] = None
            return result(TheoremVerdict.BOUNDARY, threshold=threshold, observed=observed,
                          reason="estimate within tolerance of the threshold")
        hypothesis["spectral"] = estimate.value > threshold
        if not hypothesis["spectral"]:
            return result(TheoremVerdict.HYPOTHESIS_FAILS, threshold=threshold, observed=observed,
                          reason="spectral radius below threshold")

    conclusion = probe.hamiltonian if hamiltonicity else (probe.bipartite or probe.pancyclic)
    verdict = TheoremVerdict.CONFIRMED if conclusion else TheoremVerdict.COUNTEREXAMPLE
    return result(verdict, conclusion=conclusion, threshold=threshold, observed=observed)


def check_theorem(
    g: Graph, t: int, which: Union[TheoremId, str], tol: float = config.DEFAULT_TOL, allow_large: bool = False
) -> TheoremVerdict:
    return evaluate_theorem(GraphProbe(g, tol, allow_large), t, which).verdict


def classify(g: Graph, t: int = 1, tol: float = config.DEFAULT_TOL, allow_large: bool = False) -> ClassificationReport:
    """Every measurement the toolkit has, plus all five theorem verdicts."""
    if not g.is_connected():
        raise DisconnectedGraphError("classify")
    in_theorem_range(g.n, t)  # validates t
    probe = GraphProbe(g, tol, allow_large)
    value, witness = probe.toughness_with_witness
    holds, violated_at = predicate_P(probe.degree_sequence, t)
    spectrum = probe.spectrum if g.n >= 3 else None
    report = ClassificationReport(
        graph6=graph6_encode(g) if g.n <= 62 else None,
        n=g.n,
        m=g.m,
        t=t,
        toughness=str(value),
        toughness_witness=list(witness) if witness is not None else None,
        delta=g.min_degree() if g.n else 0,
        kappa=vertex_connectivity(g),
        rho=estimate_model(probe.rho),
        q=estimate_model(probe.q),
        bipartite=probe.bipartite,
        hamiltonian=probe.hamiltonian if g.n >= 3 else None,
        pancyclic=probe.pancyclic if g.n >= 3 else None,
        cycle_spectrum=spectrum.as_list() if spectrum is not None else None,
        predicate_p_holds=holds,
        predicate_p_witness=violated_at,
        theorems=[evaluate_theorem(probe, t, which) for which in TheoremId],
    )
    logger.debug(f"classified n={g.n} m={g.m}: toughness {value}")
    return report


# ============ Tallies ============

def _tally(counts: Counter, verdict: TheoremVerdict) -> None:
    if verdict is TheoremVerdict.BOUNDARY:
        counts["boundary"] += 1
    elif verdict is TheoremVerdict.CONFIRMED:
        counts["hypothesis_met"] += 1
        counts["confirmed"] += 1
    elif verdict is TheoremVerdict.COUNTEREXAMPLE:
        counts["hypothesis_met"] += 1
        counts["counterexamples"] += 1


def _scan_counts(counts: Counter) -> ScanCounts:
    return ScanCounts(**{k: counts.get(k, 0) for k in ScanCounts.model_fields})


def _run_ordered(fn: Callable, tasks: Sequence, workers: int) -> List:
    if workers <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def _chunks(total: int, pieces: int) -> List[Tuple[int, int]]:
    pieces = max(1, min(pieces, total))
    step = -(-total // pieces)
    return [(start, min(start + step, total)) for start in range(0, total, step)]


# ============ Exhaustive sweep ============

def _graph_from_mask(n: int, pairs: Sequence[Tuple[int, int]], mask: int) -> Graph:
    rows = [0] * n
    for k in iter_bits(mask):
        u, v = pairs[k]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph.from_rows(rows)


def _require_sweep_size(n: int, operation: str) -> None:
    if n > config.SWEEP_MAX_N:
        raise SizeGuardError(
            operation, n, config.SWEEP_MAX_N, "feed a generator's graph6 stream to scan_graph6 instead"
        )
    if n < 1:
        raise ToughCyclesError(f"{operation} needs n >= 1, got {n}")


def _sweep_range(task: Tuple[int, int, str, float, int, int]) -> Tuple[Dict[str, int], Optional[int]]:
    n, t, which, tol, start, stop = task
    pairs = list(combinations(range(n), 2))
    counts: Counter = Counter()
    first: Optional[int] = None
    for mask in range(start, stop):
        counts["examined"] += 1
        probe = GraphProbe(_graph_from_mask(n, pairs, mask), tol)
        if not probe.connected:
            continue
        counts["connected"] += 1
        verdict = evaluate_theorem(probe, t, which).verdict
        _tally(counts, verdict)
        if verdict is TheoremVerdict.COUNTEREXAMPLE and first is None:
            first = mask
    return dict(counts), first


def exhaustive_sweep(
    n: int,
    t: int,
    which: Union[TheoremId, str],
    workers: int = config.DEFAULT_WORKERS,
    tol: float = config.DEFAULT_TOL,
) -> ScanReport:
    """All 2^C(n,2) labeled graphs on n vertices; the first counterexample is the smallest edge mask."""
    which = TheoremId(which)
    _require_sweep_size(n, "exhaustive_sweep")
    in_theorem_range(n, t)  # validates t
    total = 1 << (n * (n - 1) // 2)
    logger.info(f"sweep started: n={n}, t={t}, theorem={which.value}, {total} labeled graphs, workers={workers}")
    tasks = [(n, t, which.value, tol, a, b) for a, b in _chunks(total, max(1, workers) * 8)]
    counts: Counter = Counter()
    first: Optional[int] = None
    for part, part_first in _run_ordered(_sweep_range, tasks, workers):
        counts.update(part)
        if part_first is not None and first is None:
            first = part_first
    report = ScanReport(
        kind="sweep",
        params={"n": n, "t": t, "theorem": which.value, "tol": tol},
        counts=_scan_counts(counts),
    )
    if first is not None:
        pairs = list(combinations(range(n), 2))
        report.first_counterexample_graph6 = graph6_encode(_graph_from_mask(n, pairs, first))
        logger.warning(f"sweep counterexample: {report.first_counterexample_graph6}")
    logger.info(f"sweep finished: {report.counts.model_dump()}")
    return report


# ============ graph6 streams ============

class _LineOutcome(NamedTuple):
    line: int
    parsed: bool
    connected: bool
    verdict: Optional[str]
    message: Optional[str] = None
    offset: Optional[int] = None
    graph6: Optional[str] = None


def _scan_line(task: Tuple[int, str, int, str, float, Optional[int], int]) -> _LineOutcome:
    line, text, t, which, tol, max_n, seed = task
    try:
        g = graph6_decode(text, line=line)
    except Graph6ParseError as exc:
        return _LineOutcome(line, False, False, None, exc.reason, exc.offset)
    if max_n is not None and g.n > max_n:
        return _LineOutcome(line, False, False, None, f"n={g.n} exceeds the limit {max_n}")
    probe = GraphProbe(g, tol, seed=seed)
    if not probe.connected:
        return _LineOutcome(line, True, False, None)
    try:
        verdict = evaluate_theorem(probe, t, which).verdict
    except ToughCyclesError as exc:
        return _LineOutcome(line, True, True, None, str(exc))
    return _LineOutcome(line, True, True, verdict.value, graph6=text)


def _numbered(lines: Iterable[str], skip: int) -> Iterator[Tuple[int, str]]:
    for number, raw in enumerate(lines, start=1):
        if number <= skip:
            continue
        text = raw.strip()
        if text:
            yield number, text


def scan_graph6(
    lines: Iterable[str],
    t: int,
    which: Union[TheoremId, str],
    workers: int = config.DEFAULT_WORKERS,
    skip: int = 0,
    tol: float = config.DEFAULT_TOL,
    batch_size: int = 2048,
    on_progress: Optional[ProgressCallback] = None,
    max_n: Optional[int] = None,
    seed: int = config.DEFAULT_SEED,
) -> ScanReport:
    """Check one theorem on every graph of a graph6 stream.

    Malformed or unsupported lines become diagnostics and the scan goes on.
    ``skip`` resumes after that many input lines; graphs above ``max_n``
    vertices are reported instead of checked. ``seed`` drives the power
    iteration restarts.
    """
    which = TheoremId(which)
    if skip < 0:
        raise ToughCyclesError(f"skip must be >= 0, got {skip}")
    in_theorem_range(0, t)  # validates t
    report = ScanReport(
        kind="scan", params={"t": t, "theorem": which.value, "tol": tol, "skip": skip, "seed": seed}
    )
    counts: Counter = Counter()
    numbered = _numbered(lines, skip)
    seen = 0
    next_progress = config.SCAN_PROGRESS_EVERY
    logger.info(f"scan started: t={t}, theorem={which.value}, skip={skip}, workers={workers}")
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while True:
            batch = [(line, text, t, which.value, tol, max_n, seed) for line, text in islice(numbered, batch_size)]
            if not batch:
                break
            outcomes = pool.map(_scan_line, batch, chunksize=64) if pool else map(_scan_line, batch)
            for outcome in outcomes:
                seen += 1
                if outcome.message is not None:
                    report.diagnostics.append(
                        Diagnostic(line=outcome.line, offset=outcome.offset, message=outcome.message)
                    )
                    logger.warning(f"line {outcome.line}: {outcome.message}")
                if not outcome.parsed:
                    continue
                counts["examined"] += 1
                if outcome.connected:
                    counts["connected"] += 1
                if outcome.verdict is None:
                    continue
                verdict = TheoremVerdict(outcome.verdict)
                _tally(counts, verdict)
                if verdict is TheoremVerdict.COUNTEREXAMPLE and report.first_counterexample_line is None:
                    report.first_counterexample_line = outcome.line
                    report.first_counterexample_graph6 = outcome.graph6
                    logger.warning(f"counterexample at line {outcome.line}: {outcome.graph6}")
            if seen >= next_progress:
                logger.info(f"scan progress: {seen} graphs, {dict(counts)}")
                next_progress += config.SCAN_PROGRESS_EVERY
            if on_progress is not None:
                on_progress(seen, dict(counts))
    finally:
        if pool is not None:
            pool.shutdown()
    report.counts = _scan_counts(counts)
    logger.info(f"scan finished: {report.counts.model_dump()}, {len(report.diagnostics)} diagnostics")
    return report


# ============ Supporting propositions ============

def _status(holds: bool, detail: Optional[str] = None) -> Tuple[PropositionStatus, Optional[str]]:
    return (PropositionStatus.HOLDS if holds else PropositionStatus.VIOLATED), detail


_NA = PropositionStatus.NOT_APPLICABLE


def _evaluate_prop(
    probe: GraphProbe, prop: PropositionId, t: Optional[Fraction]
) -> Tuple[PropositionStatus, Optional[str]]:
    g = probe.graph
    n = g.n
    if n < 3 or not probe.connected:
        return _NA, "needs a connected graph on at least 3 vertices"
    degrees = g.degrees()

    if prop is PropositionId.P2_1:
        if g.is_complete():
            return _NA, "no non-edges"
        base = probe.toughness
        for u, v in g.non_edges():
            denser = GraphProbe(g.add_edge(u, v), probe.tol, probe.allow_large).toughness
            if denser < base:
                return _status(False, f"adding {u}-{v} lowers toughness from {base} to {denser}")
        return _status(True)

    if prop is PropositionId.P2_2:
        if g.is_complete():
            return _NA, "complete graph"
        kappa = vertex_connectivity(g)
        return _status(probe.toughness <= Fraction(kappa, 2), f"toughness {probe.toughness}, kappa {kappa}")

    if prop is PropositionId.P2_3:
        if g.is_complete():
            return _NA, "complete graph"
        level = t if t is not None else probe.toughness.value
        if not probe.is_t_tough(level):
            return _NA, f"not {level}-tough"
        return _status(2 * level <= min(degrees), f"delta {min(degrees)}, 2t = {2 * level}")

    if prop is PropositionId.P2_4:
        if g.is_complete():
            return _NA, "complete graph"
        if not probe.is_t_tough(2):
            return _NA, "not 2-tough"
        for u, v in g.non_edges():
            if degrees[u] + degrees[v] >= n - 1 and is_hamiltonian(g.add_edge(u, v)) != probe.hamiltonian:
                return _status(False, f"adding {u}-{v} changes Hamiltonicity")
        return _status(True)

    if prop in (PropositionId.P2_7, PropositionId.P2_8):
        level = t if t is not None else Fraction(1)
        if level.denominator != 1 or level < 1:
            return _NA, "P(t) needs a positive integer t"
        if not probe.is_t_tough(level):
            return _NA, f"not {level}-tough"
        p_holds, _ = predicate_P(probe.degree_sequence, int(level))
        if not p_holds:
            return _NA, f"P({level}) fails"
        if prop is PropositionId.P2_7:
            return _status(probe.hamiltonian)
        if not probe.hamiltonian:
            return _NA, "not Hamiltonian"
        return _status(probe.pancyclic or probe.bipartite)

    if not probe.hamiltonian:
        return _NA, "not Hamiltonian"
    if prop is PropositionId.P2_9:
        heavy = sum(1 for d in degrees if 2 * d > n)
        if 3 * heavy <= n:
            return _NA, f"only {heavy} vertices of degree above n/2"
        return _status(probe.pancyclic)

    heavy = sum(1 for d in degrees if 2 * d >= n)
    if 2 * heavy < n:
        return _NA, f"only {heavy} vertices of degree at least n/2"
    if probe.pancyclic or probe.bipartite:
        return _status(True)
    return _status(is_isomorphic_to_S(g), "not pancyclic, not bipartite; checked against S_n")


def check_supporting_prop(
    g: Graph,
    prop: Union[PropositionId, str],
    t: Optional[Union[int, Fraction]] = None,
    allow_large: bool = False,
) -> PropositionReport:
    """Evaluate a supporting proposition: NotApplicable when its premise fails on G."""
    prop = PropositionId(prop)
    level = Fraction(t) if t is not None else None
    status, detail = _evaluate_prop(GraphProbe(g, allow_large=allow_large), prop, level)
    if status is PropositionStatus.VIOLATED:
        logger.warning(f"{prop.value} violated: {detail}")
    return PropositionReport(proposition=prop, status=status, detail=detail)


def _prop_range(task: Tuple[int, str, Optional[int], int, int]) -> Tuple[Dict[str, int], Optional[int]]:
    n, prop, t, start, stop = task
    pairs = list(combinations(range(n), 2))
    level = Fraction(t) if t is not None else None
    counts: Counter = Counter()
    first: Optional[int] = None
    for mask in range(start, stop):
        counts["examined"] += 1
        probe = GraphProbe(_graph_from_mask(n, pairs, mask))
        if not probe.connected:
            continue
        counts["connected"] += 1
        status, _ = _evaluate_prop(probe, PropositionId(prop), level)
        if status is _NA:
            continue
        counts["applicable"] += 1
        if status is PropositionStatus.HOLDS:
            counts["holds"] += 1
        else:
            counts["violated"] += 1
            if first is None:
                first = mask
    return dict(counts), first


def proposition_sweep(
    n: int,
    prop: Union[PropositionId, str],
    t: Optional[int] = None,
    workers: int = config.DEFAULT_WORKERS,
) -> PropositionSweepReport:
    prop = PropositionId(prop)
    _require_sweep_size(n, "proposition_sweep")
    total = 1 << (n * (n - 1) // 2)
    tasks = [(n, prop.value, t, a, b) for a, b in _chunks(total, max(1, workers) * 8)]
    counts: Counter = Counter()
    first: Optional[int] = None
    for part, part_first in _run_ordered(_prop_range, tasks, workers):
        counts.update(part)
        if part_first is not None and first is None:
            first = part_first
    report = PropositionSweepReport(
        proposition=prop, n=n, t=t,
        counts=PropositionCounts(**{k: counts.get(k, 0) for k in PropositionCounts.model_fields}),
    )
    if first is not None:
        report.first_violation_graph6 = graph6_encode(_graph_from_mask(n, list(combinations(range(n), 2)), first))
    logger.info(f"{prop.value} sweep at n={n}: {report.counts.model_dump()}")
    return report


# ============ Degree-sequence families ============

def verify_degree_family(
    seq: DegreeSequence,
    t: int = 2,
    k: Optional[int] = None,
    samples: int = config.DEFAULT_SAMPLES,
    seed: int = config.DEFAULT_SEED,
    allow_large: bool = False,
) -> FamilyReport:
    """Sample realizations of ``seq``: the canonical one plus ``samples`` edge-switch perturbations.

    A sample violates the claim when it is t-tough but its k-closure is not
    complete or it is not pancyclic.
    """
    if samples < 0:
        raise ToughCyclesError(f"samples must be >= 0, got {samples}")
    base = realize(seq)
    k = seq.n - 1 if k is None else k
    report = FamilyReport(degree_sequence=seq.notation(), t=t, k=k, samples=samples, seed=seed)
    for g in [base] + edge_switch_samples(base, samples, seed):
        probe = GraphProbe(g, allow_large=allow_large)
        report.examined += 1
        if not probe.connected or not probe.is_t_tough(t):
            continue
        report.t_tough += 1
        complete = bondy_chvatal_closure(g, k).is_complete
        pancyclic = is_pancyclic(g)
        report.closure_complete += complete
        report.pancyclic += pancyclic
        if not (complete and pancyclic):
            report.violations += 1
            if report.first_violation_graph6 is None:
                report.first_violation_graph6 = graph6_encode(g)
                logger.warning(f"family {seq.notation()}: violation {report.first_violation_graph6}")
    logger.info(
        f"family {seq.notation()}: {report.examined} sampled, {report.t_tough} {t}-tough, "
        f"{report.violations} violations"
    )
    return report
