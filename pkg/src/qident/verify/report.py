"""CSV and markdown renderings of a :class:`Report`."""
from __future__ import annotations

import csv
import io
import math

from .model import Report, fmt_number

CSV_COLUMNS = ["case_id", "point_index", "params", "lhs_re", "lhs_im", "rhs_re", "rhs_im",
               "abs_err", "rel_err", "pass"]


def _fmt_float(x: float) -> str:
    return repr(float(x))


def format_params(params: dict) -> str:
    parts = []
    for key, value in params.items():
        if isinstance(value, tuple):
            value = "[" + " ".join(fmt_number(v) for v in value) + "]"
        else:
            value = fmt_number(value)
        parts.append(f"{key}={value}")
    return ";".join(parts)


def emit_csv(report: Report) -> bytes:
    """One row per grid point. No timestamp, so equal runs give equal bytes."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in report.results:
        writer.writerow([r.case_id, r.point_index, format_params(r.params),
                         _fmt_float(r.lhs.real), _fmt_float(r.lhs.imag),
                         _fmt_float(r.rhs.real), _fmt_float(r.rhs.imag),
                         _fmt_float(r.abs_err), _fmt_float(r.rel_err),
                         "true" if r.passed else "false"])
    return buf.getvalue().encode("utf-8")


def _sci(x: float) -> str:
    return "nan" if math.isnan(x) else f"{x:.2e}"


def emit_markdown(report: Report) -> bytes:
    lines = [f"# {report.suite} verification report", "",
             f"Generated {report.timestamp}.", "",
             "| id | category | description | passed | degraded | worst abs | worst rel | status |",
             "|---|---|---|---|---|---|---|---|"]
    for s in report.summaries:
        status = "PASS" if s.ok else "FAIL"
        lines.append(f"| {s.case_id} | {s.category} | {s.description} | {s.passed}/{s.total} | "
                     f"{s.degraded} | {_sci(s.worst_abs)} | {_sci(s.worst_rel)} | {status} |")
    noted = [s for s in report.summaries if s.notes]
    if noted:
        lines += ["", "## Notes", ""]
        for s in noted:
            lines += [f"- {s.case_id}: {note}" for note in s.notes]
    errors = [r for r in report.results if r.error]
    if errors:
        lines += ["", "## Evaluation errors", ""]
        lines += [f"- {r.case_id}[{r.point_index}] {format_params(r.params)}: {r.error}" for r in errors]
    total = sum(s.total for s in report.summaries)
    passed = sum(s.passed for s in report.summaries)
    lines += ["", f"Overall: {passed}/{total} points pass; "
              f"{sum(s.ok for s in report.summaries)}/{len(report.summaries)} cases pass.", ""]
    return "\n".join(lines).encode("utf-8")


def emit_report(report: Report, fmt: str = "csv") -> bytes:
    if fmt == "csv":
        return emit_csv(report)
    if fmt == "markdown":
        return emit_markdown(report)
    raise ValueError(f"unknown format {fmt!r}")
