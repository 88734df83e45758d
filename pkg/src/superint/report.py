"""Verification records shared by every checker."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from .algebra import ParamScalar, as_scalar, frac_equal
from .partitions import Partition

__all__ = ["Report", "scalar_json", "simple_ratio"]


def scalar_json(x: Optional[ParamScalar]) -> Optional[Dict[str, str]]:
    if x is None:
        return None
    num, den = as_scalar(x).expanded()
    return {"num": num, "den": den}


def simple_ratio(lhs: ParamScalar, rhs: ParamScalar) -> Optional[ParamScalar]:
    """``lhs/rhs`` when it is a plausible convention factor, else None.

    Accepted: constants, and quotients whose numerator and denominator are
    products of at most two distinct irreducible factors (e.g. ``-u^2/(u-1)^2``).
    """
    if rhs.is_zero() or lhs.is_zero():
        return None
    ratio = lhs / rhs
    if ratio.is_constant():
        return ratio
    for part in (ratio.num, ratio.den):
        if not part.is_real():
            return None
        if part.is_constant():
            continue
        if len(part.re.factor()[1]) > 2:
            return None
    return ratio


@dataclass
class Report:
    identity: str
    model: str
    R: Optional[Partition]
    N: Optional[int]
    lhs: Optional[ParamScalar]
    rhs: Optional[ParamScalar]
    Q: Optional[Partition] = None
    equal: Optional[bool] = None
    discrepancy: Optional[ParamScalar] = None
    notes: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.equal is None and self.lhs is not None and self.rhs is not None:
            self.equal = frac_equal(self.lhs, self.rhs)
        if self.equal is False and self.discrepancy is None and self.lhs is not None and self.rhs is not None:
            self.discrepancy = simple_ratio(as_scalar(self.lhs), as_scalar(self.rhs))
        if self.discrepancy is not None:
            # the stored factor must reconcile the two sides exactly
            assert frac_equal(self.lhs, self.discrepancy * self.rhs)

    @property
    def passed(self) -> bool:
        return bool(self.equal)

    def key(self):
        return (self.identity, self.model, self.R or Partition(), self.Q or Partition(), self.N or 0)

    def to_json(self) -> Dict[str, Any]:
        out = {
            "id": self.identity,
            "model": self.model,
            "R": list(self.R) if self.R is not None else None,
            "Q": list(self.Q) if self.Q is not None else None,
            "N": self.N,
            "lhs": scalar_json(self.lhs),
            "rhs": scalar_json(self.rhs),
            "equal": self.equal,
            "discrepancy": scalar_json(self.discrepancy),
        }
        if self.notes:
            out["notes"] = {k: _jsonable(v) for k, v in sorted(self.notes.items())}
        return out


def _jsonable(v):
    if isinstance(v, ParamScalar):
        return scalar_json(v)
    if isinstance(v, Partition):
        return list(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v
