"""
ToughCycles - Scan archive routes
"""
import asyncio
import json
import uuid
from typing import Coroutine, List, Optional, Set

from anyio import from_thread
from fastapi import APIRouter, Depends, File, Form, HTTPException, Query, Request, UploadFile
from fastapi.concurrency import run_in_threadpool
from sqlalchemy import desc
from sqlalchemy.orm import Session

from .. import config
from ..database import get_db
from ..helpers import limiter, save_report, stored_scan
from ..models import ScanRecord
from ..schemas import ScanCreated, StoredScan, TheoremId
from ..verifier import scan_graph6
from ..websocket import broadcast_scan_finished, broadcast_scan_progress, broadcast_scan_started

router = APIRouter(prefix="/api/v1/scans", tags=["scans"])

MAX_UPLOAD_BYTES = 2 * 1024 * 1024

# event loop only keeps weak references to tasks
_pending_broadcasts: Set[asyncio.Task] = set()


def spawn_broadcast(coro: Coroutine) -> asyncio.Task:
    task = asyncio.create_task(coro)
    _pending_broadcasts.add(task)
    task.add_done_callback(_pending_broadcasts.discard)
    return task


@router.post("", response_model=ScanCreated)
@limiter.limit("10/minute")
async def create_scan(
    request: Request,
    file: UploadFile = File(...),
    t: int = Form(1, ge=1, le=3),
    theorem: TheoremId = Form(TheoremId.EDGES_2_1),
    skip: int = Form(0, ge=0),
    db: Session = Depends(get_db),
):
    """Scan an uploaded graph6 file against one theorem and archive the report"""
    content = await file.read(MAX_UPLOAD_BYTES + 1)
    if len(content) > MAX_UPLOAD_BYTES:
        raise HTTPException(status_code=413, detail=f"upload exceeds {MAX_UPLOAD_BYTES} bytes")
    try:
        lines = content.decode("ascii").splitlines()
    except UnicodeDecodeError:
        raise HTTPException(status_code=400, detail="graph6 input must be ASCII")

    scan_key = uuid.uuid4().hex[:12]
    spawn_broadcast(broadcast_scan_started(scan_key, {"t": t, "theorem": theorem.value, "skip": skip}))

    def progress(seen: int, counts: dict) -> None:
        from_thread.run(broadcast_scan_progress, scan_key, seen, counts)

    report = await run_in_threadpool(
        scan_graph6, lines, t, theorem, config.DEFAULT_WORKERS, skip,
        on_progress=progress, max_n=config.API_MAX_N,
    )
    record = save_report(db, report)
    spawn_broadcast(broadcast_scan_finished(scan_key, record.id, report.counts.model_dump()))
    return ScanCreated(id=record.id, report=report)


@router.get("", response_model=List[StoredScan])
def list_scans(
    kind: Optional[str] = Query(None, pattern="^(sweep|scan|family|catalog)$"),
    limit: int = Query(25, ge=1, le=100),
    db: Session = Depends(get_db),
):
    query = db.query(ScanRecord)
    if kind:
        query = query.filter(ScanRecord.kind == kind)
    records = query.order_by(desc(ScanRecord.created_at), desc(ScanRecord.id)).limit(limit).all()
    return [stored_scan(r) for r in records]


@router.get("/{scan_id}")
def get_scan(scan_id: int, db: Session = Depends(get_db)):
    """The archived report document"""
    record = db.query(ScanRecord).filter(ScanRecord.id == scan_id).first()
    if not record:
        raise HTTPException(status_code=404, detail="Scan not found")
    return {"id": record.id, "kind": record.kind, "created_at": record.created_at, "report": json.loads(record.report_json or "{}")}
