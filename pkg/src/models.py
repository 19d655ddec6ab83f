"""
ToughCycles - Database Models
"""
from datetime import datetime

from sqlalchemy import Column, DateTime, Index, Integer, String, Text
from sqlalchemy.ext.declarative import declarative_base

Base = declarative_base()


class ScanRecord(Base):
    """A finished sweep, scan, family sample or catalog check"""
    __tablename__ = "scan_reports"

    id = Column(Integer, primary_key=True)
    kind = Column(String(20), nullable=False)  # sweep, scan, family, catalog
    theorem = Column(String(40), nullable=True)  # theorem selector or catalog id
    t = Column(Integer, nullable=True)
    params_json = Column(Text, nullable=True)

    # Counts (denormalized from report_json for listing)
    examined = Column(Integer, default=0)
    connected = Column(Integer, default=0)
    hypothesis_met = Column(Integer, default=0)
    confirmed = Column(Integer, default=0)
    counterexamples = Column(Integer, default=0)
    boundary = Column(Integer, default=0)

    first_counterexample_graph6 = Column(Text, nullable=True)
    report_json = Column(Text, nullable=True)
    tool_version = Column(String(20), nullable=True)

    created_at = Column(DateTime, default=datetime.utcnow)

    __table_args__ = (
        Index("ix_scan_reports_kind_created", "kind", "created_at"),
    )
