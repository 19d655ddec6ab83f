"""
ToughCycles - Catalog routes
"""
from typing import List, Optional

from fastapi import APIRouter, Query
from fastapi.responses import PlainTextResponse

from ..catalog import build, check_entry, list_entries
from ..graph_core import graph6_encode
from ..helpers import require_api_size
from ..schemas import CatalogEntrySummary, EntryReport

router = APIRouter(prefix="/api/v1/catalog", tags=["catalog"])


@router.get("", response_model=List[CatalogEntrySummary])
def get_catalog():
    return list_entries()


@router.get("/{entry_id}", response_model=EntryReport)
def get_catalog_entry(entry_id: str, n: Optional[int] = Query(None, ge=1, le=62)):
    """Build the entry and check every claimed fact"""
    require_api_size(build(entry_id, n))
    return check_entry(entry_id, n)


@router.get("/{entry_id}/graph6", response_class=PlainTextResponse)
def get_catalog_graph6(entry_id: str, n: Optional[int] = Query(None, ge=1, le=62)):
    return graph6_encode(build(entry_id, n)) + "\n"
