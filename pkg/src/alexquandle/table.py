"""Example datasets (JSON lines) and their verification report."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Union

from .braid import BraidWord, format_braid, parse_braid
from .coloring import (
    Coloring,
    Verdict,
    classify,
    coloring_space_summary,
    construct_coloring,
    kernel_basis_zero_delta,
    proportional_mod,
    verify_coloring,
)
from .errors import AlexQuandleError, DatasetError
from .laurent import LaurentPoly, format_poly, lp_normalize, parse_poly
from .quotient import QuotientCtx

__all__ = ["ExampleRecord", "RowReport", "load_records", "builtin_records", "verify_record", "run_table"]

_KNOWN_FIELDS = {"name", "braid", "strands", "delta", "factors", "coloring", "mirror", "note"}


@dataclass(frozen=True)
class ExampleRecord:
    name: str
    braid: BraidWord
    delta: Optional[LaurentPoly] = None
    factors: tuple[LaurentPoly, ...] = ()
    expected_coloring: Optional[tuple[LaurentPoly, ...]] = None
    note: str = ""


def _parse_record(obj: dict, where: str, mirror: bool) -> ExampleRecord:
    if not isinstance(obj, dict):
        raise DatasetError(f"{where}: expected a JSON object")
    unknown = set(obj) - _KNOWN_FIELDS
    if unknown:
        raise DatasetError(f"{where}: unknown fields {sorted(unknown)}")
    for key in ("name", "braid"):
        if key not in obj:
            raise DatasetError(f"{where}: missing field {key!r}")
    try:
        w = parse_braid(obj["braid"], obj.get("strands"))
        if mirror or obj.get("mirror", False):
            w = w.mirror()
        delta = parse_poly(obj["delta"]) if obj.get("delta") is not None else None
        factors = tuple(parse_poly(s) for s in obj.get("factors", []))
        coloring = None
        if obj.get("coloring") is not None:
            coloring = tuple(parse_poly(s) for s in obj["coloring"])
    except AlexQuandleError as exc:
        raise DatasetError(f"{where}: {exc}") from exc
    if coloring is not None and len(coloring) != w.strands:
        raise DatasetError(f"{where}: coloring has {len(coloring)} entries for {w.strands} strands")
    return ExampleRecord(str(obj["name"]), w, delta, factors, coloring, str(obj.get("note", "")))


def load_records(source: Union[str, Path, Iterable[str]], mirror: bool = False) -> list[ExampleRecord]:
    """Read JSON-lines records from a path or an iterable of lines.

    ``mirror`` flips every generator sign, for tables drawn with the opposite
    crossing convention.
    """
    if isinstance(source, (str, Path)):
        path = Path(source)
        try:
            lines = path.read_text().splitlines()
        except OSError as exc:
            raise DatasetError(f"cannot read {path}: {exc}") from exc
        label = str(path)
    else:
        lines = list(source)
        label = "<input>"
    records = []
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DatasetError(f"{label}:{lineno}: invalid JSON ({exc.msg})") from exc
        records.append(_parse_record(obj, f"{label}:{lineno}", mirror))
    return records


def builtin_records() -> list[ExampleRecord]:
    text = resources.files("alexquandle").joinpath("data/examples.jsonl").read_text()
    return load_records(text.splitlines())


@dataclass
class RowReport:
    name: str
    braid: str
    strands: int
    delta: str
    verdict: str
    checks: dict[str, bool] = field(default_factory=dict)
    messages: list[str] = field(default_factory=list)
    coloring: Optional[list[str]] = None

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def as_json(self) -> dict:
        return {
            "name": self.name,
            "braid": self.braid,
            "strands": self.strands,
            "delta": self.delta,
            "verdict": self.verdict,
            "passed": self.passed,
            "checks": self.checks,
            "messages": self.messages,
            "coloring": self.coloring,
        }


def verify_record(rec: ExampleRecord) -> RowReport:
    w = rec.braid
    cl = classify(w)
    rep = RowReport(rec.name, format_braid(w), w.strands, format_poly(cl.delta), str(cl.verdict))
    if rec.note:
        rep.messages.append(rec.note)
    if rec.delta is not None:
        ok = lp_normalize(rec.delta) == cl.delta
        rep.checks["delta"] = ok
        if not ok:
            rep.messages.append(f"delta mismatch: expected {format_poly(rec.delta)}, computed {rep.delta}")

    if cl.verdict is Verdict.ZERO_DELTA:
        basis = kernel_basis_zero_delta(w)
        rep.checks["kernel_rank"] = len(basis) >= 2
        rep.coloring = [format_poly(x) for x in basis[1]]
        if rec.expected_coloring is not None:
            c = Coloring(rec.expected_coloring)
            ok = verify_coloring(w, c) and not c.is_trivial()
            rep.checks["expected_coloring"] = ok
            if not ok:
                rep.messages.append("verification failed for the listed coloring over Lambda")
        return rep

    if cl.verdict is Verdict.UNIT_DELTA:
        rep.messages.append("trivial only")
        if rec.expected_coloring is not None:
            rep.checks["expected_coloring"] = False
            rep.messages.append("verification failed: a unit Alexander polynomial admits only trivial colorings")
        return rep

    ctx = QuotientCtx(cl.delta)
    ours = construct_coloring(w, cl.delta)
    rep.coloring = [format_poly(x) for x in ours.values]
    rep.checks["constructed"] = verify_coloring(w, ours) and not ours.is_trivial()
    if rec.expected_coloring is not None:
        c = Coloring(rec.expected_coloring, ctx)
        ok = verify_coloring(w, c) and not c.is_trivial()
        rep.checks["expected_coloring"] = ok
        if not ok:
            rep.messages.append("verification failed for the listed coloring")
        summary = coloring_space_summary(w, cl.delta)
        if ok and summary.generated_by_one:
            span_ok = proportional_mod(ctx, ours.values, rec.expected_coloring)
            rep.checks["span"] = span_ok
            if not span_ok:
                rep.messages.append("constructed coloring is not in the span of the listed one and (1,...,1)")
    for f in rec.factors:
        key = f"factor {format_poly(f)}"
        try:
            fc = construct_coloring(w, f)
            rep.checks[key] = verify_coloring(w, fc) and not fc.is_trivial()
        except AlexQuandleError as exc:
            rep.checks[key] = False
            rep.messages.append(f"{key}: {type(exc).__name__}: {exc}")
    return rep


def run_table(records: Iterable[ExampleRecord]) -> list[RowReport]:
    out = []
    for rec in records:
        try:
            out.append(verify_record(rec))
        except AlexQuandleError as exc:
            w = rec.braid
            rep = RowReport(rec.name, format_braid(w), w.strands, "?", "error")
            rep.checks["computed"] = False
            rep.messages.append(f"{type(exc).__name__}: {exc}")
            out.append(rep)
    return out
