"""Exact integrals of Chern-root polynomials over partial flag manifolds.

A top-degree class on ``Fl(blocks)`` is integrated by summing over the torus
fixed points.  A fixed point is a coset of the Young subgroup: an assignment
of the generic values ``lam`` to the roots, taken up to permutations inside a
block.  At that point ``y_i`` evaluates to its assigned value and the tangent
weights are ``lam[sigma(j)] - lam[sigma(i)]`` for roots ``i`` in an earlier
block than ``j``.  Non-symmetric monomials are averaged over the block
permutations first, so the functional is defined on every monomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial, prod
import threading
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import UsageError
from .symalg import AlphaSeries, MPoly


def _doubling_tuple(first: int, second: int, length: int) -> Tuple[int, ...]:
    vals = [first, second]
    while len(vals) < length:
        vals.append(2 * vals[-1] + 1)
    return tuple(vals[:length])


def default_lambda(n: int) -> Tuple[int, ...]:
    """0, 1, 3, 7, 15, ..."""
    return _doubling_tuple(0, 1, max(n, 2))[:n]


def secondary_lambda(n: int) -> Tuple[int, ...]:
    """1, 2, 5, 11, 23, ... (used for independence checks)."""
    return _doubling_tuple(1, 2, max(n, 2))[:n]


def check_lambda(lam: Sequence, n: int) -> Tuple[Fraction, ...]:
    lam = tuple(Fraction(x) for x in lam)
    if len(lam) < n:
        raise UsageError(f"need at least {n} integration values, got {len(lam)}")
    lam = lam[:n]
    if len(set(lam)) != n:
        raise UsageError(f"integration values {tuple(str(x) for x in lam)} are not distinct")
    return lam


@dataclass(frozen=True)
class FlagType:
    n: int
    blocks: Tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(int(b) for b in self.blocks if b != 0)
        if any(b < 0 for b in blocks):
            raise UsageError(f"negative block size in {self.blocks}")
        if sum(blocks) != self.n:
            raise UsageError(f"blocks {self.blocks} do not sum to n={self.n}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def dimension(self) -> int:
        return sum(a * b for a, b in combinations(self.blocks, 2))

    def block_of(self) -> Tuple[int, ...]:
        """Block index of every root 1..n (0-based list)."""
        out = []
        for idx, m in enumerate(self.blocks):
            out.extend([idx] * m)
        return tuple(out)


def cosets(ft: FlagType) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Fixed points as tuples of value-index sets, one set per block."""
    def rec(remaining: Tuple[int, ...], blocks: Tuple[int, ...]):
        if not blocks:
            yield ()
            return
        for chosen in combinations(remaining, blocks[0]):
            rest = tuple(x for x in remaining if x not in chosen)
            for tail in rec(rest, blocks[1:]):
                yield (chosen,) + tail
    yield from rec(tuple(range(ft.n)), ft.blocks)


def coset_sum(ft: FlagType, exponents: Sequence[int], lam: Sequence) -> Fraction:
    """Raw fixed-point sum (no degree shortcut)."""
    lam = check_lambda(lam, ft.n)
    exponents = tuple(exponents)
    if len(exponents) != ft.n:
        raise UsageError(f"monomial has {len(exponents)} exponents, flag has n={ft.n}")
    starts = []
    pos = 0
    for m in ft.blocks:
        starts.append(pos)
        pos += m
    total = Fraction(0)
    for point in cosets(ft):
        denom = Fraction(1)
        for a in range(len(point)):
            for b in range(a + 1, len(point)):
                for u in point[a]:
                    for v in point[b]:
                        denom *= lam[v] - lam[u]
        numer = Fraction(1)
        for idx, values in enumerate(point):
            exps = exponents[starts[idx]:starts[idx] + len(values)]
            if not any(exps):
                continue
            acc = sum(prod(lam[v] ** e for v, e in zip(perm, exps)) for perm in permutations(values))
            numer *= acc / factorial(len(values))
        total += numer / denom
    return total


class FlagIntegrator:
    """Integration functional for one tuple of generic values, with a memo table."""

    def __init__(self, lam: Optional[Sequence] = None):
        self.lam = None if lam is None else tuple(Fraction(x) for x in lam)
        self._memo: Dict[Tuple[FlagType, Tuple[int, ...]], Fraction] = {}
        self._lock = threading.Lock()

    def values_for(self, n: int) -> Tuple[Fraction, ...]:
        if self.lam is None:
            return tuple(Fraction(x) for x in default_lambda(n))
        return check_lambda(self.lam, n)

    def integrate_monomial(self, ft: FlagType, exponents: Sequence[int]) -> Fraction:
        exponents = tuple(exponents)
        if len(exponents) != ft.n:
            raise UsageError(f"monomial has {len(exponents)} exponents, flag has n={ft.n}")
        if sum(exponents) != ft.dimension:
            return Fraction(0)
        key = (ft, exponents)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        value = coset_sum(ft, exponents, self.values_for(ft.n))
        with self._lock:
            self._memo.setdefault(key, value)
        return value

    def integrate_poly(self, ft: FlagType, f) -> AlphaSeries | MPoly:
        """Integrate the y-part of every term; a- and z-exponents pass through."""
        if isinstance(f, MPoly):
            return self._integrate_mpoly(ft, f)
        return f.map_coeffs(lambda p: self._integrate_mpoly(ft, p))

    def _integrate_mpoly(self, ft: FlagType, p: MPoly) -> MPoly:
        ny = p.nvars - 1
        if ny < ft.n:
            raise UsageError(f"polynomial has {ny} roots, flag needs {ft.n}")
        out: Dict[Tuple[int, ...], Fraction] = {}
        for exp, c in p.terms.items():
            yexp = exp[:ny]
            if any(yexp[ft.n:]):
                raise UsageError(f"monomial uses roots beyond y{ft.n}")
            v = self.integrate_monomial(ft, yexp[:ft.n])
            if v:
                key = (0,) * ny + (exp[-1],)
                out[key] = out.get(key, Fraction(0)) + c * v
        return MPoly(p.nvars, out)


_default = FlagIntegrator()


def integrate_monomial(ft: FlagType, exponents: Sequence[int], lam: Optional[Sequence] = None) -> Fraction:
    if lam is None:
        return _default.integrate_monomial(ft, exponents)
    return FlagIntegrator(lam).integrate_monomial(ft, exponents)


def integrate_poly(ft: FlagType, f, lam: Optional[Sequence] = None):
    integrator = _default if lam is None else FlagIntegrator(lam)
    return integrator.integrate_poly(ft, f)


# Fl(3) values used to pin the sign convention above.
FL3_TABLE = {
    (3, 0, 0): Fraction(0),
    (0, 3, 0): Fraction(0),
    (2, 1, 0): Fraction(-1),
    (1, 2, 0): Fraction(1),
}


def monomials_of_degree(nvars: int, degree: int) -> List[Tuple[int, ...]]:
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out
