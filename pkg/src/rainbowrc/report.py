"""Machine-readable report records and their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

SCHEMA_VERSION = "1.0"


@dataclass
class Report:
    command: str
    inputs: dict
    result: dict
    timing: dict | None = None
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "timing": self.timing,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        return cls(
            command=d["command"],
            inputs=d["inputs"],
            result=d["result"],
            timing=d.get("timing"),
            schema_version=d["schema_version"],
        )

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))


def load_schema() -> dict:
    return json.loads(resources.files("rainbowrc").joinpath("report.schema.json").read_text())


def prob(x) -> dict:
    """A probability as a float plus its exact rational form when known."""
    if isinstance(x, Fraction):
        return {"value": float(x), "exact": f"{x.numerator}/{x.denominator}"}
    return {"value": float(x), "exact": None}


def coloring_dict(c) -> dict:
    return {"k": c.k, "colors": list(c.colors)}


def witness_list(w) -> list:
    return [{"pair": list(p), "path": list(path)} for p, path in sorted(w.pairs.items())]


def verification_result(ver, k) -> dict:
    return {
        "kind": "verification",
        "k": k,
        "rainbow_connected": ver.connected,
        "failing_pair": list(ver.failing_pair) if ver.failing_pair else None,
        "witness": witness_list(ver.witness) if ver.witness is not None else None,
    }


def las_vegas_result(r) -> dict:
    return {
        "kind": "las_vegas",
        "success": r.success,
        "iterations": r.iterations,
        "failures": r.failures,
        "failing_pairs": r.failing_pairs,
        "coloring": coloring_dict(r.coloring) if r.coloring is not None else None,
        "witness": witness_list(r.witness) if r.witness is not None else None,
    }


def rc_result(r) -> dict:
    return {
        "kind": "rc",
        "outcome": "exact",
        "rc": r.rc,
        "lower_bound_used": r.lower_bound_used,
        "certificate": coloring_dict(r.certificate),
        "search_stats": r.search_stats,
    }


def check_dict(chk) -> dict:
    return {
        "theorem_id": chk.theorem_id,
        "k": chk.k,
        "status": chk.status,
        "satisfied": chk.satisfied,
        "measured": chk.measured,
        "threshold": chk.threshold,
        "implied_bound": chk.implied_bound,
        "log_base": chk.log_base,
        "near_threshold": chk.near_threshold,
        "notes": list(chk.notes),
        "diagnostics": chk.diagnostics,
    }


def bound_dict(b) -> dict:
    return {
        "theorem_id": b.theorem_id,
        "k": b.k,
        "n": b.n,
        "per_path_failure": prob(b.per_path_failure),
        "path_count": b.path_count,
        "per_pair_failure": prob(b.per_pair_failure),
        "pair_population": b.pair_population,
        "union_failure": prob(b.union_failure),
        "success_lower_bound": prob(b.success_lower_bound),
    }
