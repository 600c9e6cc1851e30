"""Verification reports shared by the identity and combinatorics verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .laurent import BivarLaurent, UnivarLaurentT

__all__ = ["VerificationReport"]


def _encode(value: Any):
    """JSON-encode polynomials and exact rationals canonically."""
    if isinstance(value, BivarLaurent):
        return value.to_quadruples()
    if isinstance(value, UnivarLaurentT):
        # promoted to the quadruple form at z-power 0
        return value.to_bivar().to_quadruples()
    if isinstance(value, Fraction):
        return [value.numerator, value.denominator]
    if isinstance(value, dict):
        return {str(k): _encode(v) for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _render(value: Any) -> str:
    if isinstance(value, (BivarLaurent, UnivarLaurentT, Fraction)):
        return str(value)
    return repr(value)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one exact identity check.

    `lhs`, `rhs` and `residual` are polynomials or exact rationals with
    ``residual == lhs - rhs``; `passed` holds exactly when the residual is
    zero.  `context` carries the link description and parameters.
    """

    identity: str
    passed: bool
    lhs: Any
    rhs: Any
    residual: Any
    context: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "pass": self.passed,
            "lhs": _encode(self.lhs),
            "rhs": _encode(self.rhs),
            "residual": _encode(self.residual),
            "context": _encode(self.context),
        }

    def summary(self) -> str:
        label = self.context.get("label")
        head = f"{self.identity}" + (f" [{label}]" if label else "")
        extra = ""
        if not self.passed:
            extra = f"  lhs={_render(self.lhs)}  rhs={_render(self.rhs)}"
        return f"{head}: {'PASS' if self.passed else 'FAIL'}{extra}"
