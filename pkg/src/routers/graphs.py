"""
ToughCycles - Graph measurement routes
"""
from fastapi import APIRouter

from ..closure import bondy_chvatal_closure, hamiltonicity_via_closure
from ..cycles import cycle_spectrum
from ..graph_core import graph6_encode, is_bipartite
from ..helpers import graph_from_payload
from ..schemas import (
    ClassificationReport,
    ClassifyRequest,
    ClosureRequest,
    ClosureResponse,
    CyclesResponse,
    GraphRequest,
    PropositionReport,
    PropositionRequest,
    SpectrumResponse,
    ToughnessRequest,
    ToughnessResponse,
)
from ..spectral import adjacency_spectral_radius, q_edge_bound, rho_edge_bound, signless_laplacian_radius
from ..toughness import find_toughness_violation, parse_fraction, toughness_with_witness, vertex_connectivity
from ..verifier import check_supporting_prop, classify, estimate_model

router = APIRouter(prefix="/api/v1/graphs", tags=["graphs"])


@router.post("/classify", response_model=ClassificationReport)
def classify_graph(data: ClassifyRequest):
    """Full classification: toughness, connectivity, spectra, cycles and theorem verdicts"""
    return classify(graph_from_payload(data.graph), data.t, data.tol)


@router.post("/toughness", response_model=ToughnessResponse)
def graph_toughness(data: ToughnessRequest):
    g = graph_from_payload(data.graph)
    value, witness = toughness_with_witness(g)
    response = ToughnessResponse(
        n=g.n,
        m=g.m,
        toughness=str(value),
        witness=list(witness) if witness is not None else None,
        kappa=vertex_connectivity(g),
    )
    if data.t is not None:
        t = parse_fraction(data.t)
        violation = find_toughness_violation(g, t)
        response.t = str(t)
        response.is_t_tough = violation is None
        response.violation = list(violation) if violation is not None else None
    return response


@router.post("/closure", response_model=ClosureResponse)
def graph_closure(data: ClosureRequest):
    """k-closure; with certify_t, also the closure-based Hamiltonicity certificate"""
    g = graph_from_payload(data.graph)
    result = bondy_chvatal_closure(g, data.k)
    response = ClosureResponse(
        n=g.n,
        k=data.k,
        added_edges=list(result.added_edges),
        is_complete=result.is_complete,
        graph6=graph6_encode(result.graph),
    )
    if data.certify_t is not None:
        certificate = hamiltonicity_via_closure(g, data.certify_t)
        response.certificate = certificate.verdict.value
        response.certificate_rule = certificate.rule
    return response


@router.post("/spectrum", response_model=SpectrumResponse)
def graph_spectrum(data: GraphRequest):
    g = graph_from_payload(data.graph)
    return SpectrumResponse(
        n=g.n,
        m=g.m,
        rho=estimate_model(adjacency_spectral_radius(g)),
        q=estimate_model(signless_laplacian_radius(g)),
        rho_edge_bound=rho_edge_bound(g.n, g.m),
        q_edge_bound=q_edge_bound(g.n, g.m),
    )


@router.post("/cycles", response_model=CyclesResponse)
def graph_cycles(data: GraphRequest):
    g = graph_from_payload(data.graph)
    spectrum = cycle_spectrum(g)
    return CyclesResponse(
        n=g.n,
        cycle_spectrum=spectrum.as_list(),
        missing=spectrum.missing(),
        bipartite=is_bipartite(g),
        hamiltonian=g.n >= 3 and g.n in spectrum,
        pancyclic=g.n >= 3 and not spectrum.missing(),
    )


@router.post("/propositions", response_model=PropositionReport)
def graph_proposition(data: PropositionRequest):
    return check_supporting_prop(graph_from_payload(data.graph), data.proposition, data.t)
