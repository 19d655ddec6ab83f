"""
ToughCycles - Report archive

Sweep, scan, family and catalog reports are archived through one engine built
from ``config.ARCHIVE_URL``. Every entry point (API lifespan, ``--store`` on the
CLI, the seeding script) goes through ``prepare_archive`` first so tables and
migrations are in place before the first write.
"""
import logging
from contextlib import contextmanager
from typing import Iterator, Optional

from sqlalchemy import create_engine
from sqlalchemy.engine import Engine
from sqlalchemy.orm import Session, sessionmaker

from . import config
from .migrations import ensure_schema
from .models import Base

logger = logging.getLogger("toughcycles.archive")


def make_engine(url: str) -> Engine:
    connect_args = {"check_same_thread": False} if url.startswith("sqlite") else {}
    return create_engine(url, connect_args=connect_args)


engine = make_engine(config.ARCHIVE_URL)
SessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=engine)


def prepare_archive(bind: Optional[Engine] = None) -> Engine:
    """Create missing tables, then bring older archives up to the current schema."""
    bind = bind or engine
    Base.metadata.create_all(bind=bind)
    ensure_schema(bind)
    logger.debug(f"archive ready at {bind.url.render_as_string(hide_password=True)}")
    return bind


@contextmanager
def archive_session() -> Iterator[Session]:
    db = SessionLocal()
    try:
        yield db
    finally:
        db.close()


def get_db() -> Iterator[Session]:
    with archive_session() as db:
        yield db
