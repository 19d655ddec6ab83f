"""
ToughCycles - Pydantic Schemas
"""
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from .config import __version__


# ============ Verdicts ============

class TheoremId(str, Enum):
    EDGES_2_1 = "edges_2_1"
    RHO_2_2 = "rho_2_2"
    Q_2_3_PRINTED = "q_2_3_printed"
    Q_2_3_CORRECTED = "q_2_3_corrected"
    HAM_RHO_2_6 = "ham_rho_2_6"


class TheoremVerdict(str, Enum):
    HYPOTHESIS_FAILS = "HypothesisFails"
    CONFIRMED = "Confirmed"
    COUNTEREXAMPLE = "Counterexample"
    BOUNDARY = "Boundary"


class FactVerdict(str, Enum):
    VERIFIED = "Verified"
    REFUTED = "Refuted"
    SKIPPED = "Skipped"


class PropositionId(str, Enum):
    P2_1 = "P2_1"
    P2_2 = "P2_2"
    P2_3 = "P2_3"
    P2_4 = "P2_4"
    P2_7 = "P2_7"
    P2_8 = "P2_8"
    P2_9 = "P2_9"
    P2_10 = "P2_10"


class PropositionStatus(str, Enum):
    HOLDS = "Holds"
    NOT_APPLICABLE = "NotApplicable"
    VIOLATED = "Violated"


# ============ Graph measurements ============

class SpectralEstimateModel(BaseModel):
    value: float
    tolerance: float = Field(..., gt=0)
    lower: float
    upper: float
    iterations: int


class TheoremCheck(BaseModel):
    theorem: TheoremId
    t: int
    verdict: TheoremVerdict
    in_range: bool
    hypothesis: Dict[str, Optional[bool]] = Field(default_factory=dict)
    conclusion: Optional[bool] = None
    threshold: Optional[float] = None
    observed: Optional[float] = None
    reason: Optional[str] = None


class ClassificationReport(BaseModel):
    graph6: Optional[str] = None
    n: int
    m: int
    t: int
    toughness: Optional[str] = None
    toughness_witness: Optional[List[int]] = None
    delta: int
    kappa: Optional[int] = None
    rho: Optional[SpectralEstimateModel] = None
    q: Optional[SpectralEstimateModel] = None
    bipartite: bool
    hamiltonian: Optional[bool] = None
    pancyclic: Optional[bool] = None
    cycle_spectrum: Optional[List[int]] = None
    predicate_p_holds: bool
    predicate_p_witness: Optional[int] = None
    theorems: List[TheoremCheck] = Field(default_factory=list)


# ============ Catalog ============

class FactResult(BaseModel):
    name: str
    claim: str
    expected: str
    observed: Optional[str] = None
    verdict: FactVerdict
    reason: Optional[str] = None


class EntryReport(BaseModel):
    id: str
    title: str
    n: int
    m: int
    graph6: Optional[str] = None
    degree_sequence: str
    facts: List[FactResult]

    @property
    def refuted(self) -> List[FactResult]:
        return [f for f in self.facts if f.verdict == FactVerdict.REFUTED]


class CatalogEntrySummary(BaseModel):
    id: str
    title: str
    parameterized: bool
    n_floor: Optional[int] = None
    default_n: int


# ============ Scans ============

class ScanCounts(BaseModel):
    examined: int = 0
    connected: int = 0
    hypothesis_met: int = 0
    confirmed: int = 0
    counterexamples: int = 0
    boundary: int = 0

    @model_validator(mode="after")
    def check_consistency(self) -> "ScanCounts":
        if self.confirmed + self.counterexamples != self.hypothesis_met:
            raise ValueError("confirmed + counterexamples must equal hypothesis_met")
        return self


class Diagnostic(BaseModel):
    line: Optional[int] = None
    offset: Optional[int] = None
    message: str


class ScanReport(BaseModel):
    tool_version: str = __version__
    kind: str  # "sweep" or "scan"
    params: Dict[str, Any] = Field(default_factory=dict)
    counts: ScanCounts = Field(default_factory=ScanCounts)
    first_counterexample_graph6: Optional[str] = None
    first_counterexample_line: Optional[int] = None
    diagnostics: List[Diagnostic] = Field(default_factory=list)

    def document(self) -> Dict[str, Any]:
        """The JSON report document."""
        return self.model_dump(mode="json")


class PropositionCounts(BaseModel):
    examined: int = 0
    connected: int = 0
    applicable: int = 0
    holds: int = 0
    violated: int = 0


class PropositionSweepReport(BaseModel):
    tool_version: str = __version__
    proposition: PropositionId
    n: int
    t: Optional[int] = None
    counts: PropositionCounts
    first_violation_graph6: Optional[str] = None


class PropositionReport(BaseModel):
    proposition: PropositionId
    status: PropositionStatus
    detail: Optional[str] = None


class FamilyReport(BaseModel):
    tool_version: str = __version__
    degree_sequence: str
    t: int
    k: int
    samples: int
    seed: int
    examined: int = 0
    t_tough: int = 0
    closure_complete: int = 0
    pancyclic: int = 0
    violations: int = 0
    first_violation_graph6: Optional[str] = None
    note: str = "canonical realization plus seeded degree-preserving edge switches; a sample, not a proof"


class ScanCreated(BaseModel):
    id: int
    report: ScanReport


class StoredScan(BaseModel):
    id: int
    kind: str
    theorem: Optional[str]
    t: Optional[int]
    counts: ScanCounts
    first_counterexample_graph6: Optional[str]
    created_at: datetime


# ============ API requests ============

class GraphPayload(BaseModel):
    """Exactly one graph source: graph6, an edge list, a catalog id, or a degree sequence."""

    graph6: Optional[str] = Field(None, max_length=400)
    n: Optional[int] = Field(None, ge=0, le=62)
    edges: Optional[List[Tuple[int, int]]] = None
    catalog_id: Optional[str] = Field(None, max_length=64)
    catalog_n: Optional[int] = Field(None, ge=1, le=62)
    degrees: Optional[str] = Field(None, max_length=400)

    @field_validator("graph6")
    @classmethod
    def check_graph6(cls, v: Optional[str]) -> Optional[str]:
        if v is None:
            return v
        v = v.strip()
        if not v:
            raise ValueError("graph6 must not be empty")
        return v

    @model_validator(mode="after")
    def check_single_source(self) -> "GraphPayload":
        sources = [self.graph6 is not None, self.edges is not None, self.catalog_id is not None, self.degrees is not None]
        if sum(sources) != 1:
            raise ValueError("give exactly one of graph6, edges (with n), catalog_id, degrees")
        if self.edges is not None and self.n is None:
            raise ValueError("edges need n")
        return self


class ClassifyRequest(BaseModel):
    graph: GraphPayload
    t: int = Field(1, ge=1, le=3)
    tol: float = Field(1e-9, gt=0, le=1e-3)


class GraphRequest(BaseModel):
    graph: GraphPayload


class ToughnessRequest(BaseModel):
    graph: GraphPayload
    t: Optional[str] = Field(None, max_length=32, description="threshold as p/q or an integer")


class PropositionRequest(BaseModel):
    graph: GraphPayload
    proposition: PropositionId
    t: Optional[int] = Field(None, ge=1, le=10)


class ClosureRequest(BaseModel):
    graph: GraphPayload
    k: int = Field(..., ge=0)
    certify_t: Optional[int] = Field(None, ge=1, le=3)


class VerifyRequest(BaseModel):
    graph: GraphPayload
    t: int = Field(1, ge=1, le=3)
    theorem: TheoremId = TheoremId.EDGES_2_1
    tol: float = Field(1e-9, gt=0, le=1e-3)


class ToughnessResponse(BaseModel):
    n: int
    m: int
    toughness: str
    witness: Optional[List[int]] = None
    t: Optional[str] = None
    is_t_tough: Optional[bool] = None
    violation: Optional[List[int]] = None
    kappa: int


class ClosureResponse(BaseModel):
    n: int
    k: int
    added_edges: List[Tuple[int, int]]
    is_complete: bool
    graph6: str
    certificate: Optional[str] = None
    certificate_rule: Optional[str] = None


class SpectrumResponse(BaseModel):
    n: int
    m: int
    rho: SpectralEstimateModel
    q: SpectralEstimateModel
    rho_edge_bound: float
    q_edge_bound: float


class CyclesResponse(BaseModel):
    n: int
    cycle_spectrum: List[int]
    missing: List[int]
    bipartite: bool
    hamiltonian: bool
    pancyclic: bool
