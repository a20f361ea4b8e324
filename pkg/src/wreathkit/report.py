"""Deterministic report rendering for check outcomes.

JSON reports are canonical (sorted keys, fixed indentation) so rerunning the
same command yields byte-identical stdout.  Text reports print each axiom in
the notation of the law it came from, with the first few residual coordinates
spelled out.
"""

from __future__ import annotations

import json

from .exactlin import AxiomReport, CheckOutcome, Residual

SCHEMA_VERSION = 1
_TEXT_RESIDUAL_CAP = 5


def residual_to_dict(r: Residual) -> dict:
    return {"row": r.row, "col": r.col, "lhs": str(r.lhs), "rhs": str(r.rhs),
            "delta": str(r.delta)}


def axiom_to_dict(a: AxiomReport) -> dict:
    return {"name": a.name, "lhs": a.lhs, "rhs": a.rhs, "passed": a.passed,
            "residuals": [residual_to_dict(r) for r in a.residuals]}


def outcome_to_dict(o: CheckOutcome) -> dict:
    return {"law": o.law, "verdict": "PASS" if o.passed else "FAIL",
            "checks": [axiom_to_dict(a) for a in o.axioms]}


def check_report(o: CheckOutcome) -> dict:
    return {"schema_version": SCHEMA_VERSION, **outcome_to_dict(o)}


def multi_report(outcomes: dict[str, CheckOutcome]) -> dict:
    all_pass = all(o.passed for o in outcomes.values())
    return {
        "schema_version": SCHEMA_VERSION,
        "verdict": "PASS" if all_pass else "FAIL",
        "laws": {law: outcome_to_dict(o) for law, o in outcomes.items()},
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2,
                      separators=(",", ": ")) + "\n"


def render_axiom_text(a: AxiomReport) -> str:
    if a.passed:
        return f"  PASS {a.name}: {a.lhs} = {a.rhs}"
    shown = ", ".join(
        f"({r.row}, {r.col}): {r.lhs} vs {r.rhs}"
        for r in a.residuals[:_TEXT_RESIDUAL_CAP])
    more = ("" if len(a.residuals) <= _TEXT_RESIDUAL_CAP
            else f", and {len(a.residuals) - _TEXT_RESIDUAL_CAP} more")
    return (f"  FAIL {a.name}: {a.lhs} ≠ {a.rhs} "
            f"[{len(a.residuals)} residuals: {shown}{more}]")


def render_outcome_text(o: CheckOutcome) -> str:
    lines = [f"law {o.law}: {'PASS' if o.passed else 'FAIL'}"]
    lines += [render_axiom_text(a) for a in o.axioms]
    return "\n".join(lines) + "\n"


def render_multi_text(outcomes: dict[str, CheckOutcome]) -> str:
    parts = [render_outcome_text(o) for o in outcomes.values()]
    all_pass = all(o.passed for o in outcomes.values())
    parts.append(f"overall: {'PASS' if all_pass else 'FAIL'}\n")
    return "".join(parts)
