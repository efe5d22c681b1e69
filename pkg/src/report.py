"""Text, CSV and JSON rendering of verdicts, scans and series."""

import csv
import io
import json

from src.arith.padic import INF, PAdicNumber
from src.arith.quadext import QuadExtElement
from src.arith.series import PAdicSeries
from src.checker.results import Verdict
from src.checker.scan import ScanResult
from src.iwasawa.invariants import InvariantReport


def format_padic(c: PAdicNumber) -> str:
    """Balanced residue with its modulus, e.g. "-120 mod 7^4"."""
    prec = c.precision_absolute
    if prec == INF:
        return str(c.lift())
    if prec <= 0:
        return f"O({c.p}^{prec})"
    if c.valuation < 0 and not c.is_zero():
        return f"{c.lift()} mod {c.p}^{prec}"
    return f"{c.balanced()} mod {c.p}^{prec}"


def format_coefficient(c) -> str:
    if isinstance(c, QuadExtElement):
        return f"({format_padic(c.a)}) + ({format_padic(c.b)})*alpha"
    return format_padic(c)


def render_series(series: PAdicSeries, length: int | None = None) -> str:
    """One line per coefficient: "T^k: value mod p^prec"."""
    coefficients = series.coefficients if length is None else series.coefficients[:length]
    return "\n".join(f"T^{k}: {format_coefficient(c)}" for k, c in enumerate(coefficients))


def render_invariants(report: InvariantReport) -> str:
    status = "reliable" if report.reliable else "unreliable"
    return (
        f"mu = {report.mu_display}, lambda = {report.lambda_display}, "
        f"ord_T >= {report.ord_T_lower} ({status}: {report.reason})"
    )


def render_verdict_text(verdict: Verdict) -> str:
    lines = [f"({verdict.curve}, Q(sqrt(-{verdict.d})), p = {verdict.p}) [{verdict.mode}]: {verdict.conclusion}"]
    for condition in verdict.conditions:
        line = f"  {condition.id:<8} {condition.status}"
        if condition.reason:
            line += f" ({condition.reason})"
        lines.append(line)
    lines.extend(f"  - {step}" for step in verdict.narrative)
    if verdict.supplementary:
        extra = ", ".join(f"{key} = {value}" for key, value in verdict.supplementary.items())
        lines.append(f"  supplementary: {extra}")
    lines.append(f"  caveats: {', '.join(verdict.caveats)}")
    return "\n".join(lines)


def render_verdict_json(verdict: Verdict) -> str:
    return json.dumps(verdict.to_dict(), indent=2)


def render_verdict(verdict: Verdict, fmt: str = "text") -> str:
    if fmt == "json":
        return render_verdict_json(verdict)
    return render_verdict_text(verdict)


def render_scan(result: ScanResult, fmt: str = "table") -> str:
    """Verified pairs as a table (rows = p), CSV (p,d,conclusion) or JSON (table and log)."""
    if fmt == "json":
        return json.dumps(result.to_dict(), indent=2)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["p", "d", "conclusion"])
        for cell in result.cells:
            if cell.verified:
                writer.writerow([cell.p, cell.d, str(cell.verdict.conclusion)])
        return buffer.getvalue().rstrip("\n")
    header = f"{result.curve} [{result.mode}] d < {result.d_max}, p < {result.p_max}"
    rows = [f"p = {p}: {', '.join(str(d) for d in ds)}" for p, ds in result.table().items()]
    return "\n".join([header, *rows]) if rows else f"{header}\n(no verified pairs)"
