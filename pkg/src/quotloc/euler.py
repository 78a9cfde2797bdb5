"""Equivariant Euler class of the normal bundle to a distinguished component.

Each normal direction contributes a linear factor ``-w*a + y_i - y_j``; the
class is their product and its inverse is expanded as a truncated series in
the root differences.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .errors import InvariantError, UsageError
from .partitions import FixedComponent, as_seq
from .symalg import AlphaSeries, MPoly, series_mul


@dataclass(frozen=True, order=True)
class EulerFactor:
    w: int
    i: int
    j: int

    def linear_part(self, n: int) -> MPoly:
        """``y_i - y_j`` (zero when i == j)."""
        if self.i == self.j:
            return MPoly(n + 1)
        return MPoly.y(self.i, n) - MPoly.y(self.j, n)

    def to_plain(self) -> str:
        return "(" + _linear_text(self, "a", lambda k: f"y{k}") + ")"

    def to_latex(self) -> str:
        return "(" + _linear_text(self, r"\alpha", lambda k: f"y_{{{k}}}") + ")"


def _linear_text(f: EulerFactor, a: str, y) -> str:
    c = -f.w
    head = {1: a, -1: "-" + a}.get(c, f"{c}{a}")
    if f.i == f.j:
        return head
    return f"{head}+{y(f.i)}-{y(f.j)}"


def _factor_sort_key(f: EulerFactor):
    return (-f.w, f.i, f.j)


def euler_factors(alpha: Sequence[int], n: int) -> List[EulerFactor]:
    """Normal-bundle factors of F_{alpha; 0}, ordered by descending weight."""
    alpha = as_seq(alpha)
    r = len(alpha)
    if not 1 <= r <= n:
        raise UsageError(f"need 1 <= r <= n, got r={r}, n={n}")
    out = []
    for j in range(1, r + 1):
        aj = alpha[j - 1]
        for i in range(1, r + 1):
            ai = alpha[i - 1]
            out.extend(EulerFactor(w, i, j) for w in range(aj - ai + 1, aj + 1) if w != 0)
        for t in range(1, n - r + 1):
            out.extend(EulerFactor(w, r + t, j) for w in range(1, aj + 1))
    return sorted(out, key=_factor_sort_key)


def component_euler_factors(c: FixedComponent) -> List[EulerFactor]:
    if not c.is_distinguished:
        raise UsageError(f"{c.label()} is not distinguished (beta must be 0)")
    return euler_factors(c.alpha, c.n)


def _factor_series(f: EulerFactor, n: int) -> AlphaSeries:
    nvars = n + 1
    return AlphaSeries(nvars, {1: MPoly.const(-f.w, nvars), 0: f.linear_part(n)})


def euler_class(factors: Sequence[EulerFactor], n: int) -> AlphaSeries:
    """Expanded product of the linear factors."""
    out = AlphaSeries.one(n + 1)
    for f in factors:
        out = series_mul(out, _factor_series(f, n))
    return out


def _inverse_factor(f: EulerFactor, n: int, cap: int) -> AlphaSeries:
    # 1/(-w a + L) = sum_m (-1)^m L^m / (-w a)^(m+1)
    if f.w == 0:
        raise InvariantError(f"zero weight in Euler factor {f}; cannot invert")
    nvars = n + 1
    lin = f.linear_part(n)
    coeffs = {}
    power = MPoly.const(1, nvars)
    for m in range(cap + 1):
        if power.is_zero():
            break
        c = Fraction((-1) ** m, (-f.w) ** (m + 1))
        coeffs[-(m + 1)] = power.scale(c)
        power = power.mul(lin)
    return AlphaSeries(nvars, coeffs)


def inverse_series(factors: Sequence[EulerFactor], n: int, ydeg_cap: int) -> AlphaSeries:
    """``1 / prod(factors)`` expanded in ``1/a``, truncated at y-degree ``ydeg_cap``."""
    if ydeg_cap < 0:
        raise UsageError("ydeg_cap must be non-negative")
    out = AlphaSeries.one(n + 1)
    for f in factors:
        out = series_mul(out, _inverse_factor(f, n, ydeg_cap), ydeg_cap)
    return out


def render_factors(factors: Sequence[EulerFactor], fmt: str = "plain") -> str:
    if not factors:
        return "1"
    if fmt == "latex":
        return "".join(f.to_latex() for f in factors)
    return "".join(f.to_plain() for f in factors)

