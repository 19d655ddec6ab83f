"""
ToughCycles - Catalog of extremal constructions

Every witness graph from the case analysis of the edge-count theorem, with the
facts claimed about it. Ids follow the case numbering (t.case.subcase); graphs
only known through their degree sequence are built with ``realize``.

check_entry never raises on a wrong claim: a refuted fact is a finding.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .degseq import is_graphical, iter_realizations, m90_sequences, realize
from .errors import InvalidParameterError, ToughCyclesError
from .graph_core import (
    DegreeSequence,
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    graph6_encode,
    join,
    k_copies,
    make_S,
)
from .cycles import is_pancyclic
from .probe import GraphProbe
from .schemas import CatalogEntrySummary, EntryReport, FactResult, FactVerdict
from .spectral import edge_threshold

logger = logging.getLogger("toughcycles.catalog")

Check = Callable[[GraphProbe], Tuple[bool, str]]


@dataclass(frozen=True)
class ExpectedFact:
    name: str
    claim: str
    expected: str
    check: Check
    # claim made only for t-tough graphs
    premise_t: Optional[Fraction] = None


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    title: str
    builder: Callable[[int, Optional[Sequence[int]]], Graph]
    sequence: Callable[[int], DegreeSequence]
    facts: Callable[[int], List[ExpectedFact]]
    default_n: int
    n_floor: Optional[int] = None
    n_step: int = 1
    takes_cycles: bool = False
    tags: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def parameterized(self) -> bool:
        return self.n_floor is not None

    def resolve_n(self, n: Optional[int]) -> int:
        if n is None:
            return self.default_n
        if not self.parameterized:
            if n != self.default_n:
                raise InvalidParameterError(f"catalog entry {self.id!r} has fixed order {self.default_n}, got n={n}")
            return n
        if n < self.n_floor:
            raise InvalidParameterError(f"catalog entry {self.id!r} needs n >= {self.n_floor}, got n={n}")
        if n % self.n_step:
            raise InvalidParameterError(f"catalog entry {self.id!r} needs n divisible by {self.n_step}, got n={n}")
        return n


# ============ Fact checks ============

def _sequence_fact(seq: DegreeSequence) -> ExpectedFact:
    def check(p: GraphProbe) -> Tuple[bool, str]:
        return p.degree_sequence == seq, p.degree_sequence.notation()
    return ExpectedFact("degree_sequence", f"degree sequence is {seq.notation()}", seq.notation(), check)


def _edges_fact(m: int, claim: str) -> ExpectedFact:
    def check(p: GraphProbe) -> Tuple[bool, str]:
        return p.m == m, str(p.m)
    return ExpectedFact("edges", claim, str(m), check)


def _graphical_fact(seq: DegreeSequence) -> ExpectedFact:
    def check(p: GraphProbe) -> Tuple[bool, str]:
        ok = is_graphical(seq)
        return ok, "graphical" if ok else "not graphical"
    return ExpectedFact("graphical", f"{seq.notation()} is graphical", "graphical", check)


def _toughness_at_most(bound: Fraction) -> ExpectedFact:
    def check(p: GraphProbe) -> Tuple[bool, str]:
        return p.toughness <= bound, str(p.toughness)
    return ExpectedFact("toughness_at_most", f"tau(G) <= {bound}", f"<= {bound}", check)


def _t_tough(t: int) -> ExpectedFact:
    def check(p: GraphProbe) -> Tuple[bool, str]:
        return p.toughness >= t, str(p.toughness)
    return ExpectedFact("t_tough", f"G is {t}-tough", f">= {t}", check)


def _bool_fact(name: str, claim: str, expected: bool, premise_t: Optional[int] = None) -> ExpectedFact:
    def check(p: GraphProbe) -> Tuple[bool, str]:
        observed = getattr(p, name)
        return observed == expected, str(observed).lower()
    premise = Fraction(premise_t) if premise_t is not None else None
    return ExpectedFact(name, claim, str(expected).lower(), check, premise)


def _closure_fact(k: int, premise_t: Optional[int] = None) -> ExpectedFact:
    def check(p: GraphProbe) -> Tuple[bool, str]:
        result = p.closure(k)
        missing = p.n * (p.n - 1) // 2 - result.graph.m
        return result.is_complete, "complete" if result.is_complete else f"{missing} pairs missing"
    prefix = f"for {premise_t}-tough G, " if premise_t is not None else ""
    premise = Fraction(premise_t) if premise_t is not None else None
    return ExpectedFact(f"closure_{k}", f"{prefix}the {k}-closure is complete", "complete", check, premise)


def _all_realizations_pancyclic(seq: DegreeSequence) -> ExpectedFact:
    def check(p: GraphProbe) -> Tuple[bool, str]:
        total = 0
        failing = 0
        for g in iter_realizations(seq):
            total += 1
            if not is_pancyclic(g):
                failing += 1
        return failing == 0, f"{total - failing}/{total} labeled realizations pancyclic"
    return ExpectedFact(
        "pancyclic_every_realization", f"every graph with degree sequence {seq.notation()} is pancyclic",
        "all pancyclic", check,
    )


def _threshold_claim(n: int, t: int) -> str:
    return f"m equals the edge threshold C(n-2t, 2) + 3t^2 for n={n}, t={t}"


# ============ Builders ============

def _two_factor(order: int, cycles: Optional[Sequence[int]]) -> Graph:
    """A 2-regular graph on ``order`` vertices; one Hamilton cycle unless a partition is given."""
    parts = tuple(cycles) if cycles else (order,)
    if sum(parts) != order or any(p < 3 for p in parts):
        raise InvalidParameterError(f"cycle partition {parts} must split {order} into parts >= 3")
    result = Graph(0)
    for p in parts:
        result = disjoint_union(result, cycle_graph(p))
    return result


def _counts(*pairs: Tuple[int, int]) -> DegreeSequence:
    return DegreeSequence.from_counts(pairs)


def _adjacent_pair(n: int, cycles=None) -> Graph:
    return join(complete_graph(1), disjoint_union(complete_graph(n - 3), complete_graph(2)))


def _nonadjacent_pair(n: int, cycles=None) -> Graph:
    # apex 0, clique 1..n-3, w = n-2, z = n-1; u = 1, v = 2
    inner = disjoint_union(complete_graph(n - 3), Graph(2))
    inner = inner.remove_edge(0, 1).add_edge(0, n - 3).add_edge(1, n - 2)
    return join(complete_graph(1), inner)


def _p_join_k6(cycles=None) -> Graph:
    return join(_two_factor(11, cycles), complete_graph(6))


def _minus_edge(edge: Tuple[int, int]) -> Callable[[int, Optional[Sequence[int]]], Graph]:
    def build(n: int, cycles=None) -> Graph:
        return _p_join_k6(cycles).remove_edge(*edge)
    return build


def _realized(seq: DegreeSequence) -> Callable[[int, Optional[Sequence[int]]], Graph]:
    def build(n: int, cycles=None) -> Graph:
        return realize(seq)
    return build


def _family_2_1_1(n: int) -> DegreeSequence:
    return _counts((4, 4), (n - 5, n - 6), (n - 1, 2))


def _family_3_1_1(n: int) -> DegreeSequence:
    return _counts((6, 6), (n - 7, n - 9), (n - 1, 3))


def _fixed(seq: DegreeSequence) -> Callable[[int], DegreeSequence]:
    return lambda n: seq


# ============ Registry ============

_ENTRIES: Dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry) -> None:
    _ENTRIES[entry.id] = entry


def _m_two_tough_claims(seq: DegreeSequence, m: int, k: int, t: int) -> Callable[[int], List[ExpectedFact]]:
    def facts(n: int) -> List[ExpectedFact]:
        return [
            _sequence_fact(seq),
            _edges_fact(m, f"m = {m}"),
            _closure_fact(k, premise_t=t),
            _bool_fact("pancyclic", f"for {t}-tough G, G is pancyclic", True, premise_t=t),
        ]
    return facts


_register(CatalogEntry(
    id="1.1.1-adjacent",
    title="K_1 v (K_{n-3} + K_2): the two degree-2 vertices adjacent",
    builder=_adjacent_pair,
    sequence=lambda n: _counts((2, 2), (n - 3, n - 3), (n - 1, 1)),
    facts=lambda n: [
        _sequence_fact(_counts((2, 2), (n - 3, n - 3), (n - 1, 1))),
        _edges_fact(edge_threshold(n, 1), _threshold_claim(n, 1)),
        _toughness_at_most(Fraction(1, 2)),
    ],
    default_n=7,
    n_floor=7,
))

_register(CatalogEntry(
    id="1.1.1-nonadjacent",
    title="K_1 v (K_{n-3} - uv + uw + vz): the two degree-2 vertices non-adjacent",
    builder=_nonadjacent_pair,
    sequence=lambda n: _counts((2, 2), (n - 3, n - 3), (n - 1, 1)),
    facts=lambda n: [
        _sequence_fact(_counts((2, 2), (n - 3, n - 3), (n - 1, 1))),
        _edges_fact(edge_threshold(n, 1), _threshold_claim(n, 1)),
        _bool_fact("hamiltonian", "G is Hamiltonian", True),
        _bool_fact("pancyclic", "G is pancyclic", True),
    ],
    default_n=7,
    n_floor=7,
))

_register(CatalogEntry(
    id="1.1.2",
    title="K_3 v 3K_2",
    builder=lambda n, cycles=None: join(complete_graph(3), k_copies(3, complete_graph(2))),
    sequence=_fixed(_counts((4, 6), (8, 3))),
    facts=lambda n: [
        _sequence_fact(_counts((4, 6), (8, 3))),
        _edges_fact(24, _threshold_claim(9, 1)),
        _bool_fact("hamiltonian", "G is Hamiltonian", True),
        _bool_fact("pancyclic", "G is pancyclic", True),
    ],
    default_n=9,
))

_register(CatalogEntry(
    id="1.2",
    title="K_2 v (2K_2 + K_1)",
    builder=lambda n, cycles=None: join(
        complete_graph(2), disjoint_union(k_copies(2, complete_graph(2)), complete_graph(1))
    ),
    sequence=_fixed(_counts((2, 1), (3, 4), (6, 2))),
    facts=lambda n: [
        _sequence_fact(_counts((2, 1), (3, 4), (6, 2))),
        _edges_fact(13, "m = 13"),
        _toughness_at_most(Fraction(2, 3)),
    ],
    default_n=7,
))

_DRAWN_SEVEN = _counts((3, 5), (5, 1), (6, 1))
_register(CatalogEntry(
    id="1.2-drawn",
    title="the drawn graph with degree sequence (3^5, 5^1, 6^1), canonical realization",
    builder=_realized(_DRAWN_SEVEN),
    sequence=_fixed(_DRAWN_SEVEN),
    facts=lambda n: [
        _sequence_fact(_DRAWN_SEVEN),
        _edges_fact(13, "m = 13"),
        _bool_fact("pancyclic", "G is pancyclic", True),
        _all_realizations_pancyclic(_DRAWN_SEVEN),
    ],
    default_n=7,
))

_register(CatalogEntry(
    id="2.1.1",
    title="(4^4, (n-5)^{n-6}, (n-1)^2), canonical realization",
    builder=lambda n, cycles=None: realize(_family_2_1_1(n)),
    sequence=_family_2_1_1,
    facts=lambda n: [
        _sequence_fact(_family_2_1_1(n)),
        _edges_fact(edge_threshold(n, 2), _threshold_claim(n, 2)),
        _closure_fact(n - 1),
        _bool_fact("pancyclic", "G is pancyclic", True),
    ],
    default_n=16,
    n_floor=16,
))

_N19 = _counts((9, 12), (18, 7))
_register(CatalogEntry(
    id="2.1.2-n19",
    title="(9^12, 18^7), canonical realization",
    builder=_realized(_N19),
    sequence=_fixed(_N19),
    facts=_m_two_tough_claims(_N19, 117, 18, 2),
    default_n=19,
))

_N16 = _counts((7, 7), (8, 4), (15, 5))
_register(CatalogEntry(
    id="2.1.2-n16",
    title="(7^7, 8^4, 15^5), canonical realization",
    builder=_realized(_N16),
    sequence=_fixed(_N16),
    facts=_m_two_tough_claims(_N16, 156, 15, 2),
    default_n=16,
))

_register(CatalogEntry(
    id="2.2.1",
    title="P v K_6 with P a 2-factor of order 11",
    builder=lambda n, cycles=None: _p_join_k6(cycles),
    sequence=_fixed(_counts((8, 11), (16, 6))),
    facts=lambda n: [
        _sequence_fact(_counts((8, 11), (16, 6))),
        _edges_fact(92, "m = 92"),
        _t_tough(2),
        _closure_fact(16),
        _bool_fact("hamiltonian", "G is Hamiltonian", True),
        _bool_fact("pancyclic", "G is pancyclic", True),
    ],
    default_n=17,
    takes_cycles=True,
))

_register(CatalogEntry(
    id="2.2.2",
    title="(P + K_1) v K_6 with P a 2-factor of order 10",
    builder=lambda n, cycles=None: join(disjoint_union(_two_factor(10, cycles), complete_graph(1)), complete_graph(6)),
    sequence=_fixed(_counts((6, 1), (8, 10), (16, 6))),
    facts=_m_two_tough_claims(_counts((6, 1), (8, 10), (16, 6)), 91, 16, 2),
    default_n=17,
    takes_cycles=True,
))

# P v K_6 has the cycle on 0..10 and the clique on 11..16
for _suffix, _edge, _seq in (
    ("clique-edge", (11, 12), _counts((8, 11), (15, 2), (16, 4))),
    ("cycle-edge", (0, 1), _counts((7, 2), (8, 9), (16, 6))),
    ("cross-edge", (0, 11), _counts((7, 1), (8, 10), (15, 1), (16, 5))),
):
    _register(CatalogEntry(
        id=f"2.2.2-minus-{_suffix}",
        title=f"P v K_6 minus one {_suffix.replace('-', ' ')}",
        builder=_minus_edge(_edge),
        sequence=_fixed(_seq),
        facts=_m_two_tough_claims(_seq, 91, 16, 2),
        default_n=17,
        takes_cycles=True,
    ))

_DRAWN_SEVENTEEN = _counts((8, 11), (14, 1), (16, 5))
_register(CatalogEntry(
    id="2.2.2-drawn",
    title="the drawn graph with degree sequence (8^11, 14^1, 16^5), canonical realization",
    builder=_realized(_DRAWN_SEVENTEEN),
    sequence=_fixed(_DRAWN_SEVENTEEN),
    facts=_m_two_tough_claims(_DRAWN_SEVENTEEN, 91, 16, 2),
    default_n=17,
))

for _index, _seq in enumerate(m90_sequences(), start=1):
    def _m90_facts(n: int, seq: DegreeSequence = _seq) -> List[ExpectedFact]:
        return [_graphical_fact(seq)] + _m_two_tough_claims(seq, 90, 16, 2)(n)

    _register(CatalogEntry(
        id=f"2.2.3-{_index:02d}",
        title=f"{_seq.notation()} with 90 edges, canonical realization",
        builder=_realized(_seq),
        sequence=_fixed(_seq),
        facts=_m90_facts,
        default_n=17,
        tags=("m90",),
    ))

_register(CatalogEntry(
    id="3.1.1",
    title="(6^6, (n-7)^{n-9}, (n-1)^3), canonical realization",
    builder=lambda n, cycles=None: realize(_family_3_1_1(n)),
    sequence=_family_3_1_1,
    facts=lambda n: [
        _sequence_fact(_family_3_1_1(n)),
        _edges_fact(edge_threshold(n, 3), _threshold_claim(n, 3)),
        _closure_fact(n - 2),
        _bool_fact("pancyclic", "G is pancyclic", True),
    ],
    default_n=28,
    n_floor=28,
))

_N29 = _counts((14, 18), (28, 11))
_register(CatalogEntry(
    id="3.1.2",
    title="(14^18, 28^11), canonical realization",
    builder=_realized(_N29),
    sequence=_fixed(_N29),
    facts=_m_two_tough_claims(_N29, 280, 27, 3),
    default_n=29,
))

_register(CatalogEntry(
    id="S",
    title="S_n: clique K_{n/2} and a perfect matching on n/2 vertices joined by a perfect matching",
    builder=lambda n, cycles=None: make_S(n),
    sequence=lambda n: _counts((2, n // 2), (n // 2, n // 2)),
    facts=lambda n: [
        _sequence_fact(_counts((2, n // 2), (n // 2, n // 2))),
        _bool_fact("hamiltonian", "S_n is Hamiltonian", True),
        _bool_fact("pancyclic", "S_n is not pancyclic", False),
        _bool_fact("bipartite", "S_n is bipartite only for n = 4", n == 4),
    ],
    default_n=12,
    n_floor=4,
    n_step=4,
))


# ============ Public API ============

def get_entry(entry_id: str) -> CatalogEntry:
    entry = _ENTRIES.get(entry_id)
    if entry is None:
        raise InvalidParameterError(f"unknown catalog id {entry_id!r}; known ids: {', '.join(_ENTRIES)}")
    return entry


def entry_ids() -> List[str]:
    return list(_ENTRIES)


def list_entries() -> List[CatalogEntrySummary]:
    return [
        CatalogEntrySummary(
            id=e.id, title=e.title, parameterized=e.parameterized, n_floor=e.n_floor, default_n=e.default_n,
        )
        for e in _ENTRIES.values()
    ]


def build(entry_id: str, n: Optional[int] = None, cycles: Optional[Sequence[int]] = None) -> Graph:
    """Construct a catalog graph; ``cycles`` splits the 2-factor of the P v K_6 entries."""
    entry = get_entry(entry_id)
    n = entry.resolve_n(n)
    if cycles is not None and not entry.takes_cycles:
        raise InvalidParameterError(f"catalog entry {entry_id!r} has no 2-factor to partition")
    return entry.builder(n, cycles)


def _check_fact(probe: GraphProbe, fact: ExpectedFact) -> FactResult:
    base = dict(name=fact.name, claim=fact.claim, expected=fact.expected)
    try:
        holds, observed = fact.check(probe)
        if holds:
            return FactResult(**base, observed=observed, verdict=FactVerdict.VERIFIED)
        if fact.premise_t is not None and not probe.is_t_tough(fact.premise_t):
            return FactResult(
                **base, observed=observed, verdict=FactVerdict.VERIFIED,
                reason=f"holds vacuously: G is not {fact.premise_t}-tough",
            )
        return FactResult(**base, observed=observed, verdict=FactVerdict.REFUTED)
    except ToughCyclesError as exc:
        return FactResult(**base, verdict=FactVerdict.SKIPPED, reason=str(exc))


def check_entry(entry_id: str, n: Optional[int] = None, cycles: Optional[Sequence[int]] = None) -> EntryReport:
    entry = get_entry(entry_id)
    n = entry.resolve_n(n)
    g = build(entry_id, n, cycles)
    probe = GraphProbe(g)
    results = [_check_fact(probe, fact) for fact in entry.facts(n)]
    for result in results:
        if result.verdict == FactVerdict.REFUTED:
            logger.warning(f"catalog {entry_id} (n={n}): refuted '{result.claim}', observed {result.observed}")
        elif result.verdict == FactVerdict.SKIPPED:
            logger.info(f"catalog {entry_id} (n={n}): skipped '{result.claim}': {result.reason}")
    return EntryReport(
        id=entry.id,
        title=entry.title,
        n=g.n,
        m=g.m,
        graph6=graph6_encode(g) if g.n <= 62 else None,
        degree_sequence=entry.sequence(n).notation(),
        facts=results,
    )
