"""Localization integrals over the distinguished components of Quot schemes.

For a distinguished component E of dimension D the integrand is
``exp(kappa * z) / e(normal bundle)``, with ``kappa = -(y1 + ... + yr)``.
Only the y-degree-D part survives integration, so both the exponential and
the inverse Euler class are truncated at D.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple

from .errors import UsageError
from .euler import component_euler_factors, inverse_series
from .flagint import FlagIntegrator, FlagType
from .partitions import FixedComponent, distinguished_components
from .symalg import AlphaSeries, MPoly, series_mul


def hyperplane_class(r: int, n: int) -> MPoly:
    """kappa = -(y_1 + ... + y_r) in the ring on y1..yn, z."""
    if not 1 <= r <= n:
        raise UsageError(f"need 1 <= r <= n, got n={n}, r={r}")
    out = MPoly(n + 1)
    for i in range(1, r + 1):
        out = out - MPoly.y(i, n)
    return out


def exp_series(kappa: MPoly, n: int, top: int) -> AlphaSeries:
    """sum_{j<=top} kappa^j z^j / j!, as an a^0 series."""
    z = MPoly.z(n)
    total = MPoly(n + 1)
    term = MPoly.const(1, n + 1)
    for j in range(top + 1):
        total = total + term.scale(Fraction(1, factorial(j)))
        term = term.mul(kappa).mul(z)
    return AlphaSeries(n + 1, {0: total})


@dataclass(frozen=True)
class ComponentIntegral:
    component: FixedComponent
    value: AlphaSeries

    @property
    def dim(self) -> int:
        return self.component.dimension

    @property
    def codim(self) -> int:
        return self.component.codimension

    def to_json(self) -> dict:
        return {
            "alpha": list(self.component.alpha),
            "dim": self.dim,
            "codim": self.codim,
            "integral": self.value.to_json(),
        }


def component_integrand(c: FixedComponent) -> AlphaSeries:
    """Top-y-degree part of exp(kappa z) / e(nu) before integration."""
    factors = component_euler_factors(c)
    dim = c.dimension
    inv = inverse_series(factors, c.n, dim)
    integrand = series_mul(inv, exp_series(hyperplane_class(c.r, c.n), c.n, dim), dim)
    return integrand.map_coeffs(lambda p: p.homogeneous_part(dim, nlead=c.n))


def component_integral(alpha: Sequence[int], n: int, r: Optional[int] = None,
                       integrator: Optional[FlagIntegrator] = None) -> ComponentIntegral:
    alpha = tuple(alpha)
    if r is not None and r != len(alpha):
        raise UsageError(f"r={r} does not match len(alpha)={len(alpha)}")
    c = FixedComponent.distinguished(alpha, n)
    integrator = integrator or FlagIntegrator()
    ft = FlagType(n, c.flag_blocks)
    value = integrator.integrate_poly(ft, component_integrand(c))
    return ComponentIntegral(c, value)


def component_integrals(n: int, r: int, d: int, integrator: Optional[FlagIntegrator] = None,
                        workers: int = 1) -> List[ComponentIntegral]:
    integrator = integrator or FlagIntegrator()
    comps = distinguished_components(n, r, d)

    def one(c: FixedComponent) -> ComponentIntegral:
        return component_integral(c.alpha, n, r, integrator)

    if workers > 1 and len(comps) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, comps))
    return [one(c) for c in comps]


def degree_total(n: int, r: int, d: int, integrator: Optional[FlagIntegrator] = None,
                 workers: int = 1) -> AlphaSeries:
    total = AlphaSeries(n + 1)
    for ci in component_integrals(n, r, d, integrator, workers):
        total = total + ci.value
    return total


def duality_check(n: int, r: int, d: int, integrator: Optional[FlagIntegrator] = None) -> bool:
    """Gr_r(C^n) and Gr_{n-r}(C^n) must give the same degree-d total."""
    if not 1 <= r < n:
        raise UsageError(f"need 1 <= r < n, got n={n}, r={r}")
    return degree_total(n, r, d, integrator) == degree_total(n, n - r, d, integrator)


def euler_series_table(n: int, r: int, d_max: int, integrator: Optional[FlagIntegrator] = None,
                       workers: int = 1) -> List[Tuple[int, AlphaSeries]]:
    if d_max < 0:
        raise UsageError(f"d_max must be non-negative, got {d_max}")
    integrator = integrator or FlagIntegrator()
    return [(d, degree_total(n, r, d, integrator, workers)) for d in range(d_max + 1)]
