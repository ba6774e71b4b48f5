"""Line-oriented scan reports.

One JSON object per line, self-contained, append-safe, no timestamps, so
rerunning a scan with the same spec reproduces the file byte for byte.
Exact bound values are serialized as Fraction strings ("120/49", "5").
A final line {"summary": {...}} aggregates extremal ratios per family.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, TextIO


@dataclass
class ScanRecord:
    graph_id: str
    family: str
    n: int
    check: str
    kind: str  # "theorem" | "conjecture" | "info"
    holds: bool | None  # None = inconclusive (solver budget exhausted)
    bound: str = ""  # exact rational as text, "" when not applicable
    gamma: int | None = None
    rho: int | None = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "ScanRecord":
        obj = json.loads(line)
        return cls(**obj)


def bound_str(value: Fraction | int) -> str:
    return str(Fraction(value))


def summarize(records: Iterable[ScanRecord]) -> dict:
    """Per-family aggregates: counts, worst gamma/rho ratio, failures."""
    fams: dict[str, dict] = {}
    for r in records:
        s = fams.setdefault(
            r.family,
            {
                "records": 0,
                "violations": 0,
                "theorem_failures": 0,
                "inconclusive": 0,
                "max_gamma_over_rho": None,
            },
        )
        s["records"] += 1
        if r.holds is None:
            s["inconclusive"] += 1
        elif not r.holds:
            if r.kind == "theorem":
                s["theorem_failures"] += 1
            else:
                s["violations"] += 1
        if r.gamma is not None and r.rho:
            ratio = Fraction(r.gamma, r.rho)
            prev = s["max_gamma_over_rho"]
            if prev is None or ratio > Fraction(prev):
                s["max_gamma_over_rho"] = str(ratio)
    return {"families": fams}


def write_report(records: Iterable[ScanRecord], sink: TextIO, summary: bool = True) -> None:
    records = list(records)
    for r in records:
        sink.write(r.to_json() + "\n")
    if summary:
        sink.write(json.dumps({"summary": summarize(records)}, sort_keys=True) + "\n")


def read_report(lines: Iterable[str]) -> tuple[list[ScanRecord], dict | None]:
    records: list[ScanRecord] = []
    summary: dict | None = None
    for ln in lines:
        ln = ln.strip()
        if not ln:
            continue
        obj = json.loads(ln)
        if "summary" in obj and "graph_id" not in obj:
            summary = obj["summary"]
        else:
            records.append(ScanRecord(**obj))
    return records, summary
