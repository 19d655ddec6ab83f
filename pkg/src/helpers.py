"""
ToughCycles - Shared Helpers
"""
import json
from typing import Union

from fastapi import HTTPException
from slowapi import Limiter
from slowapi.util import get_remote_address
from sqlalchemy.orm import Session

from . import config
from .catalog import build
from .config import __version__
from .degseq import realize
from .graph_core import DegreeSequence, Graph, graph6_decode
from .models import ScanRecord
from .schemas import EntryReport, FactVerdict, FamilyReport, GraphPayload, ScanCounts, ScanReport, StoredScan

limiter = Limiter(key_func=get_remote_address, default_limits=["120/minute"])

ArchivedReport = Union[ScanReport, FamilyReport, EntryReport]


def graph_from_payload(payload: GraphPayload) -> Graph:
    """Resolve the one graph source of a request; ToughCyclesError bubbles up as a 400."""
    if payload.graph6 is not None:
        g = graph6_decode(payload.graph6)
    elif payload.edges is not None:
        g = Graph(payload.n, payload.edges)
    elif payload.catalog_id is not None:
        g = build(payload.catalog_id, payload.catalog_n)
    else:
        g = realize(DegreeSequence.parse(payload.degrees))
    require_api_size(g)
    return g


def require_api_size(g: Graph) -> None:
    if g.n > config.API_MAX_N:
        raise HTTPException(
            status_code=413,
            detail=f"graph has {g.n} vertices; this service accepts at most {config.API_MAX_N} (use the CLI)",
        )


def _archive_fields(report: ArchivedReport) -> dict:
    if isinstance(report, ScanReport):
        return dict(
            kind=report.kind,
            theorem=report.params.get("theorem"),
            t=report.params.get("t"),
            params_json=json.dumps(report.params),
            first_counterexample_graph6=report.first_counterexample_graph6,
            **report.counts.model_dump(),
        )
    if isinstance(report, FamilyReport):
        return dict(
            kind="family",
            theorem=report.degree_sequence,
            t=report.t,
            params_json=json.dumps({"k": report.k, "samples": report.samples, "seed": report.seed}),
            examined=report.examined,
            connected=report.examined,
            hypothesis_met=report.t_tough,
            confirmed=report.t_tough - report.violations,
            counterexamples=report.violations,
            first_counterexample_graph6=report.first_violation_graph6,
        )
    verified = sum(1 for f in report.facts if f.verdict == FactVerdict.VERIFIED)
    refuted = sum(1 for f in report.facts if f.verdict == FactVerdict.REFUTED)
    return dict(
        kind="catalog",
        theorem=report.id,
        params_json=json.dumps({"n": report.n}),
        examined=len(report.facts),
        connected=len(report.facts),
        hypothesis_met=verified + refuted,
        confirmed=verified,
        counterexamples=refuted,
        first_counterexample_graph6=report.graph6 if refuted else None,
    )


def save_report(db: Session, report: ArchivedReport) -> ScanRecord:
    record = ScanRecord(
        report_json=report.model_dump_json(),
        tool_version=__version__,
        **_archive_fields(report),
    )
    db.add(record)
    db.commit()
    db.refresh(record)
    return record


def stored_scan(record: ScanRecord) -> StoredScan:
    return StoredScan(
        id=record.id,
        kind=record.kind,
        theorem=record.theorem,
        t=record.t,
        counts=ScanCounts(
            examined=record.examined or 0,
            connected=record.connected or 0,
            hypothesis_met=record.hypothesis_met or 0,
            confirmed=record.confirmed or 0,
            counterexamples=record.counterexamples or 0,
            boundary=record.boundary or 0,
        ),
        first_counterexample_graph6=record.first_counterexample_graph6,
        created_at=record.created_at,
    )
