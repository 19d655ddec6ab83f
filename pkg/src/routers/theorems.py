"""
ToughCycles - Theorem verification and threshold routes
"""
from fastapi import APIRouter, Query
from fastapi.responses import PlainTextResponse

from ..helpers import graph_from_payload
from ..probe import GraphProbe
from ..schemas import TheoremCheck, VerifyRequest
from ..spectral import threshold_rows, thresholds_csv
from ..verifier import evaluate_theorem

router = APIRouter(prefix="/api/v1", tags=["theorems"])


@router.post("/theorems/verify", response_model=TheoremCheck)
def verify_theorem(data: VerifyRequest):
    """Evaluate one theorem's hypothesis and conclusion on one graph"""
    g = graph_from_payload(data.graph)
    return evaluate_theorem(GraphProbe(g, data.tol), data.t, data.theorem)


@router.get("/thresholds")
def get_thresholds(
    t: int = Query(1, ge=1, le=3),
    n_min: int = Query(7, ge=1, le=1000),
    n_max: int = Query(40, ge=1, le=1000),
    format: str = Query("json", pattern="^(json|csv)$"),
):
    """Edge, rho and q thresholds per order n (rows start at the theorem's floor)"""
    rows = threshold_rows(t, n_min, n_max)
    if format == "csv":
        return PlainTextResponse(thresholds_csv(rows), media_type="text/csv")
    return rows
