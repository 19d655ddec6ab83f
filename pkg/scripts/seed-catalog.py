#!/usr/bin/env python3
"""
Warm-start the ToughCycles report archive with one check of every catalog entry.

Each entry is checked at its default order and archived as a "catalog" report,
so a fresh deployment's GET /api/v1/scans already lists the construction facts.

Usage:
    # From the project root:
    DATABASE_URL=sqlite:///./toughcycles.db python scripts/seed-catalog.py
"""
import os
import sys

# Allow running from project root or scripts/ dir
sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from src.catalog import check_entry, entry_ids
from src.database import SessionLocal, prepare_archive
from src.helpers import save_report
from src.models import ScanRecord

prepare_archive()
db = SessionLocal()

# ---------------------------------------------------------------------------
# Guard: don't double-seed
# ---------------------------------------------------------------------------
if db.query(ScanRecord).filter(ScanRecord.kind == "catalog").count() > 0:
    print("Archive already has catalog reports, skipping seed to avoid duplicates.")
    db.close()
    sys.exit(0)

summary_rows = []
for entry_id in entry_ids():
    report = check_entry(entry_id)
    record = save_report(db, report)
    verdicts = [f.verdict.value for f in report.facts]
    summary_rows.append((entry_id, report.n, record.id, verdicts.count("Verified"),
                         verdicts.count("Refuted"), verdicts.count("Skipped")))
    print(f"  {entry_id:<28} n={report.n:<3} archived as #{record.id}")

db.close()

# ---------------------------------------------------------------------------
# Print summary
# ---------------------------------------------------------------------------
print("\nSeed complete.\n")
print(f"{'Entry':<28} {'n':>3} {'#':>5} {'ok':>4} {'bad':>4} {'skip':>5}")
print("-" * 54)
for entry_id, n, record_id, ok, bad, skipped in summary_rows:
    print(f"{entry_id:<28} {n:>3} {record_id:>5} {ok:>4} {bad:>4} {skipped:>5}")

refuted = sum(row[4] for row in summary_rows)
if refuted:
    print(f"\n{refuted} catalog facts were refuted; see the archived reports.")
    sys.exit(1)
