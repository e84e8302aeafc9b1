"""Deterministic JSON for reports: rationals become "p/q" strings, never floats."""

from __future__ import annotations

import dataclasses
import enum
import json
from fractions import Fraction
from typing import Any

from .exactnum import Enclosure

__all__ = ["to_jsonable", "dumps", "parse_rational"]

# derived properties worth emitting alongside the stored fields
_EXTRA = {
    "BoundCertificate": ("r",),
    "ConstraintCheck": ("satisfied",),
    "DimCountReport": ("both_pass",),
    "FeasibilityVerdict": ("feasible",),
    "InductionReport": ("all_infeasible",),
    "KInterval": ("integer_range", "is_empty"),
}


def _rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return _rational(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, Enclosure):
        return {"lower": _rational(obj.lower), "upper": _rational(obj.upper)}
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        out = {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        for name in _EXTRA.get(type(obj).__name__, ()):
            value = getattr(obj, name)
            out[name] = to_jsonable(value() if callable(value) else value)
        out.setdefault("type", type(obj).__name__)
        return out
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, float):
        raise TypeError("floats are not serialized; use Fraction")
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2) + "\n"


def parse_rational(text: str) -> Fraction:
    """Parse "p", "p/q" or a finite decimal exactly."""
    return Fraction(text.strip())
