"""Report documents and their JSON / CSV / text serializations.

The JSON schema is stable::

    {"meta": {"seed", "version", "started_at", "config_hash", ...},
     "results": [{"id", "params", "lhs": {"re", "im", "err"}, "rhs": {...},
                  "abs_err", "rel_err", "pass", "status", "evals", "ms", "note"}],
     "summary": {"pass", "fail", "audit", "control"}}

``lhs``/``rhs`` are ``null`` when an evaluator raised (the reason is in
``note``); complex parameters are written as ``[re, im]``.  Serialization
is canonical (sorted keys, fixed separators, exact float repr), so
``to_json(from_json(s)) == s``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

from ..numkernel import ApproxComplex, CheckResult

__all__ = ["ReportDocument", "summarize", "result_to_dict", "result_from_dict", "render", "FORMATS"]

FORMATS = ("json", "csv", "text")


def _num(x):
    """JSON-safe float (non-finite values become strings)."""
    if x is None:
        return None
    x = float(x)
    if math.isfinite(x):
        return x
    return "NaN" if math.isnan(x) else ("Infinity" if x > 0 else "-Infinity")


def _unnum(x):
    if x is None:
        return None
    return float(x)


def _param(v):
    if isinstance(v, complex):
        return [_num(v.real), _num(v.imag)]
    if isinstance(v, float):
        return _num(v)
    if isinstance(v, (list, tuple)):
        return [_param(u) for u in v]
    if isinstance(v, dict):
        return {str(k): _param(u) for k, u in v.items()}
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    return str(v)


def _side(a: ApproxComplex | None):
    if a is None:
        return None
    return {"re": _num(a.value.real), "im": _num(a.value.imag), "err": _num(a.err)}


def _unside(d):
    if d is None:
        return None
    return ApproxComplex(complex(float(d["re"]), float(d["im"])), float(d["err"]))


def result_to_dict(r: CheckResult) -> dict:
    """Schema dict of one result."""
    return {
        "id": r.id,
        "params": {k: _param(v) for k, v in r.params.items()},
        "lhs": _side(r.lhs),
        "rhs": _side(r.rhs),
        "abs_err": _num(r.abs_err),
        "rel_err": _num(r.rel_err),
        "pass": bool(r.passed),
        "status": r.status,
        "evals": int(r.evals),
        "ms": _num(r.ms),
        "note": r.note,
    }


def result_from_dict(d: dict) -> CheckResult:
    return CheckResult(
        lhs=_unside(d["lhs"]),
        rhs=_unside(d["rhs"]),
        abs_err=_unnum(d["abs_err"]),
        rel_err=_unnum(d["rel_err"]),
        passed=bool(d["pass"]),
        params=dict(d["params"]),
        evals=int(d["evals"]),
        id=d["id"],
        status=d["status"],
        ms=_unnum(d["ms"]),
        note=d.get("note", ""),
    )


def outcome(r: CheckResult) -> str:
    """Summary bucket of one result.

    ``pass``; ``audit`` for a failing audit identity; ``control`` for a
    negative control that failed as it must; ``fail`` otherwise
    (including a control that unexpectedly passed).
    """
    if r.status == "control":
        return "fail" if r.passed else "control"
    if r.passed:
        return "pass"
    return "audit" if r.status == "audit" else "fail"


def summarize(results) -> dict:
    s = {"pass": 0, "fail": 0, "audit": 0, "control": 0}
    for r in results:
        s[outcome(r)] += 1
    return s


@dataclass
class ReportDocument:
    """Run metadata, ordered results and summary counts."""

    meta: dict = field(default_factory=dict)
    results: list = field(default_factory=list)

    @property
    def summary(self) -> dict:
        return summarize(self.results)

    @property
    def exit_code(self) -> int:
        """0 iff no result lands in the ``fail`` bucket."""
        return 0 if self.summary["fail"] == 0 else 1

    def to_dict(self) -> dict:
        return {
            "meta": {k: _param(v) for k, v in self.meta.items()},
            "results": [result_to_dict(r) for r in self.results],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, allow_nan=False) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "ReportDocument":
        for key in ("meta", "results"):
            if key not in d:
                raise ValueError(f"report is missing {key!r}")
        return cls(dict(d["meta"]), [result_from_dict(r) for r in d["results"]])

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))

    def __eq__(self, other):
        if not isinstance(other, ReportDocument):
            return NotImplemented
        return self.to_dict() == other.to_dict()


_CSV_FIELDS = [
    "id", "status", "pass", "params", "lhs_re", "lhs_im", "lhs_err", "rhs_re", "rhs_im", "rhs_err",
    "abs_err", "rel_err", "evals", "ms", "note",
]


def _csv(doc: ReportDocument) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(_CSV_FIELDS)
    for r in doc.results:
        d = result_to_dict(r)
        row = [d["id"], d["status"], d["pass"], json.dumps(d["params"], sort_keys=True)]
        for side in ("lhs", "rhs"):
            s = d[side] or {}
            row += [s.get("re", ""), s.get("im", ""), s.get("err", "")]
        row += [d["abs_err"], d["rel_err"], d["evals"], "" if d["ms"] is None else d["ms"], d["note"]]
        w.writerow(["" if v is None else v for v in row])
    return buf.getvalue()


def _fmt_side(a: ApproxComplex | None) -> str:
    if a is None:
        return "-"
    v = a.value
    return f"{v.real:.12g}" if v.imag == 0 else f"{v.real:.10g}{v.imag:+.10g}j"


def _text(doc: ReportDocument) -> str:
    head = ["id", "status", "result", "abs_err", "rel_err", "lhs", "rhs", "params"]
    rows = []
    for r in doc.results:
        params = ",".join(f"{k}={_short(v)}" for k, v in r.params.items())
        rows.append([r.id, r.status, outcome(r).upper(), f"{r.abs_err:.2e}", f"{r.rel_err:.2e}", _fmt_side(r.lhs), _fmt_side(r.rhs), params])
    widths = [max([len(h)] + [len(row[i]) for row in rows]) for i, h in enumerate(head)]
    line = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    out = [line(head), line(["-" * w for w in widths])]
    out += [line(row) for row in rows]
    s = doc.summary
    out.append("")
    out.append(f"pass {s['pass']}  fail {s['fail']}  audit {s['audit']}  control {s['control']}")
    notes = [(r.id, r.note) for r in doc.results if r.note and outcome(r) != "pass"]
    for id_, note in notes:
        out.append(f"  {id_}: {note}")
    return "\n".join(out) + "\n"


def _short(v) -> str:
    if isinstance(v, float):
        return f"{v:.6g}"
    if isinstance(v, complex):
        return f"{v.real:.4g}{v.imag:+.4g}j"
    if isinstance(v, list):
        return "[" + ",".join(_short(u) for u in v) + "]"
    return str(v)


def render(doc: ReportDocument, fmt: str = "json") -> str:
    """Serialize ``doc`` as ``json``, ``csv`` or ``text``."""
    if fmt == "json":
        return doc.to_json()
    if fmt == "csv":
        return _csv(doc)
    if fmt == "text":
        return _text(doc)
    raise ValueError(f"format must be one of {', '.join(FORMATS)}")
