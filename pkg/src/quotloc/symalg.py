"""Exact sparse polynomials in y1..yn, z and Laurent series in a.

An :class:`MPoly` is a dict from exponent tuples to :class:`fractions.Fraction`
coefficients.  By convention a polynomial on ``n + 1`` variables has the
Chern roots ``y1..yn`` in the first ``n`` slots and the formal variable ``z``
(zeta) in the last one.  :class:`AlphaSeries` maps an integer exponent of the
equivariant parameter ``a`` (alpha) to an :class:`MPoly`; negative exponents
are allowed.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple
import re

from .errors import UsageError

Rat = Fraction
Exp = Tuple[int, ...]


def as_rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def _render_rat_plain(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _render_rat_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


class MPoly:
    """Sparse multivariate polynomial with exact rational coefficients.

    ``nvars`` is the number of variables; the last one is ``z``.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exp, object]] = None):
        if nvars < 1:
            raise UsageError("an MPoly needs at least the z variable")
        self.nvars = nvars
        clean: Dict[Exp, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise UsageError(f"exponent {exp} does not have {nvars} entries")
            if any(e < 0 for e in exp):
                raise UsageError(f"negative exponent in {exp}")
            c = as_rat(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean

    # construction helpers

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls(nvars)

    @classmethod
    def const(cls, c, nvars: int) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, index: int, nvars: int, coeff=1) -> "MPoly":
        """The monomial ``coeff * x_index`` (0-based index)."""
        if not 0 <= index < nvars:
            raise UsageError(f"variable index {index} out of range")
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, {tuple(exp): coeff})

    @classmethod
    def y(cls, i: int, n: int) -> "MPoly":
        """Chern root ``y_i`` (1-based) in the ring on y1..yn, z."""
        if not 1 <= i <= n:
            raise UsageError(f"root index {i} outside 1..{n}")
        return cls.var(i - 1, n + 1)

    @classmethod
    def z(cls, n: int) -> "MPoly":
        return cls.var(n, n + 1)

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, nlead: Optional[int] = None) -> int:
        """Total degree in the first ``nlead`` variables (all by default); -1 for 0."""
        k = self.nvars if nlead is None else nlead
        return max((sum(e[:k]) for e in self.terms), default=-1)

    def coeff(self, exp: Exp) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # arithmetic

    def _check(self, other: "MPoly") -> None:
        if not isinstance(other, MPoly):
            raise UsageError(f"cannot combine MPoly with {type(other).__name__}")
        if other.nvars != self.nvars:
            raise UsageError(f"arity mismatch: {self.nvars} vs {other.nvars} variables")

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other, self.nvars)
        self._check(other)
        return other

    def add(self, other: "MPoly") -> "MPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, Fraction(0)) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MPoly._raw(self.nvars, out)

    def scale(self, c) -> "MPoly":
        c = as_rat(c)
        if not c:
            return MPoly(self.nvars)
        return MPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def mul(self, other: "MPoly", cap: Optional[int] = None, nlead: Optional[int] = None) -> "MPoly":
        """Exact product; with ``cap``, drop terms whose degree in the first
        ``nlead`` variables (all by default) exceeds ``cap``."""
        other = self._coerce(other)
        k = self.nvars if nlead is None else nlead
        out: Dict[Exp, Fraction] = {}
        b_items = [(e, sum(e[:k]), c) for e, c in other.terms.items()]
        for ea, ca in self.terms.items():
            da = sum(ea[:k])
            if cap is not None and da > cap:
                continue
            for eb, db, cb in b_items:
                if cap is not None and da + db > cap:
                    continue
                exp = tuple(x + y for x, y in zip(ea, eb))
                out[exp] = out.get(exp, Fraction(0)) + ca * cb
        return MPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    def truncate(self, cap: int, nlead: Optional[int] = None) -> "MPoly":
        k = self.nvars if nlead is None else nlead
        return MPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e[:k]) <= cap})

    def homogeneous_part(self, degree: int, nlead: Optional[int] = None) -> "MPoly":
        k = self.nvars if nlead is None else nlead
        return MPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e[:k]) == degree})

    def pow(self, m: int, cap: Optional[int] = None, nlead: Optional[int] = None) -> "MPoly":
        out = MPoly.const(1, self.nvars)
        for _ in range(m):
            out = out.mul(self, cap=cap, nlead=nlead)
        return out

    def substitute_perm(self, perm: Mapping[int, int]) -> "MPoly":
        """Rename variables: slot ``i`` goes to slot ``perm[i]`` (0-based)."""
        out = {}
        for exp, c in self.terms.items():
            new = list(exp)
            for src, dst in perm.items():
                new[dst] = exp[src]
            out[tuple(new)] = c
        return MPoly._raw(self.nvars, out)

    __add__ = add

    def __radd__(self, other):
        return self.add(other)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self.add(self._coerce(other).scale(-1))

    def __rsub__(self, other):
        return self._coerce(other).add(self.scale(-1))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return self.mul(other)

    def __rmul__(self, other):
        return self.__mul__(other)

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Exp, Fraction]) -> "MPoly":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    # printing

    def sorted_terms(self):
        """Terms in graded-lex order over (z, y1, ..., yn)."""
        def key(item):
            exp = item[0]
            reordered = (exp[-1],) + exp[:-1]
            return (sum(exp), tuple(-x for x in reordered))
        return sorted(self.terms.items(), key=key)

    def __repr__(self):
        return f"MPoly({self.to_plain()})"

    def to_plain(self) -> str:
        return _join_plain([(c, monomial_plain(e)) for e, c in self.sorted_terms()])

    def to_latex(self) -> str:
        return _join_latex([(c, monomial_latex(e)) for e, c in self.sorted_terms()])


def _var_names(nvars: int):
    return [f"y{i + 1}" for i in range(nvars - 1)] + ["z"]


def _var_order(nvars: int):
    # z first, then y1..yn
    return [nvars - 1] + list(range(nvars - 1))


def monomial_plain(exp: Exp) -> str:
    names = _var_names(len(exp))
    parts = []
    for k in _var_order(len(exp)):
        e = exp[k]
        if e == 1:
            parts.append(names[k])
        elif e > 1:
            parts.append(f"{names[k]}^{e}")
    return "*".join(parts)


def monomial_latex(exp: Exp) -> str:
    nv = len(exp)
    names = [f"y_{{{i + 1}}}" for i in range(nv - 1)] + [r"\zeta"]
    parts = []
    for k in _var_order(nv):
        e = exp[k]
        if e == 1:
            parts.append(names[k])
        elif e > 1:
            parts.append(f"{names[k]}^{{{e}}}")
    return "".join(parts)


def _join_plain(items) -> str:
    """items: (coefficient, monomial text) pairs; monomial text may be ''."""
    if not items:
        return "0"
    out = []
    for idx, (c, mono) in enumerate(items):
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{_render_rat_plain(mag)}*{mono}"
        else:
            body = _render_rat_plain(mag)
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def _join_latex(items) -> str:
    if not items:
        return "0"
    out = []
    for idx, (c, mono) in enumerate(items):
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else _render_rat_latex(mag) + mono
        else:
            body = _render_rat_latex(mag)
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_MONO_RE = re.compile(r"^(y(\d+)|z)(\^(\d+))?$")


def parse_monomial(text: str, nvars: int) -> Exp:
    """Inverse of :func:`monomial_plain` (``"1"`` is the constant monomial)."""
    exp = [0] * nvars
    text = text.strip()
    if text in ("", "1"):
        return tuple(exp)
    for factor in text.split("*"):
        m = _MONO_RE.match(factor.strip())
        if not m:
            raise UsageError(f"cannot parse monomial factor {factor!r}")
        slot = nvars - 1 if m.group(1) == "z" else int(m.group(2)) - 1
        if not 0 <= slot < nvars:
            raise UsageError(f"variable {m.group(1)} outside the ring")
        exp[slot] += int(m.group(4) or 1)
    return tuple(exp)


class AlphaSeries:
    """Finite Laurent series in ``a`` with :class:`MPoly` coefficients."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: Optional[Mapping[int, MPoly]] = None):
        self.nvars = nvars
        clean: Dict[int, MPoly] = {}
        for k, p in (coeffs or {}).items():
            if p.nvars != nvars:
                raise UsageError(f"arity mismatch: {p.nvars} vs {nvars} variables")
            if k in clean:
                p = clean[k].add(p)
            if p.is_zero():
                clean.pop(k, None)
            else:
                clean[int(k)] = p
        self.coeffs = clean

    @property
    def n(self) -> int:
        """Number of Chern roots."""
        return self.nvars - 1

    @classmethod
    def one(cls, nvars: int) -> "AlphaSeries":
        return cls(nvars, {0: MPoly.const(1, nvars)})

    @classmethod
    def monomial(cls, a_exp: int, poly: MPoly) -> "AlphaSeries":
        return cls(poly.nvars, {a_exp: poly})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlphaSeries):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def add(self, other: "AlphaSeries") -> "AlphaSeries":
        if other.nvars != self.nvars:
            raise UsageError(f"arity mismatch: {self.nvars} vs {other.nvars} variables")
        out = dict(self.coeffs)
        for k, p in other.coeffs.items():
            q = out[k].add(p) if k in out else p
            if q.is_zero():
                out.pop(k, None)
            else:
                out[k] = q
        return AlphaSeries(self.nvars, out)

    __add__ = add

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self.add(-other)

    def scale(self, c) -> "AlphaSeries":
        return AlphaSeries(self.nvars, {k: p.scale(c) for k, p in self.coeffs.items()})

    def mul(self, other: "AlphaSeries", ydeg_cap: Optional[int] = None) -> "AlphaSeries":
        return series_mul(self, other, ydeg_cap)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return self.mul(other)

    def map_coeffs(self, fn) -> "AlphaSeries":
        return AlphaSeries(self.nvars, {k: fn(p) for k, p in self.coeffs.items()})

    def terms(self):
        """(a-exponent, exponent tuple, coefficient) in rendering order."""
        for k in sorted(self.coeffs):
            for exp, c in self.coeffs[k].sorted_terms():
                yield k, exp, c

    def coefficient(self, a_exp: int, exp: Exp) -> Fraction:
        p = self.coeffs.get(a_exp)
        return p.coeff(exp) if p is not None else Fraction(0)

    def __repr__(self):
        return f"AlphaSeries({self.to_plain()})"

    def to_plain(self) -> str:
        items = []
        for k, exp, c in self.terms():
            parts = []
            if k == 1:
                parts.append("a")
            elif k != 0:
                parts.append(f"a^{k}")
            mono = monomial_plain(exp)
            if mono:
                parts.append(mono)
            items.append((c, "*".join(parts)))
        return _join_plain(items)

    def to_latex(self) -> str:
        items = []
        for k, exp, c in self.terms():
            head = ""
            if k == 1:
                head = r"\alpha"
            elif k != 0:
                head = rf"\alpha^{{{k}}}"
            items.append((c, head + monomial_latex(exp)))
        return _join_latex(items)

    def to_json(self) -> dict:
        """``{"-11": {"1": "-103/1296"}, "-10": {"z": "-23/108"}}``-style mapping."""
        out = {}
        for k in sorted(self.coeffs):
            out[str(k)] = {
                (monomial_plain(exp) or "1"): _render_rat_plain(c)
                for exp, c in self.coeffs[k].sorted_terms()
            }
        return out

    @classmethod
    def from_json(cls, data: Mapping[str, Mapping[str, str]], n: int) -> "AlphaSeries":
        nvars = n + 1
        coeffs = {}
        for k, terms in data.items():
            coeffs[int(k)] = MPoly(nvars, {parse_monomial(m, nvars): as_rat(c) for m, c in terms.items()})
        return cls(nvars, coeffs)


def poly_add(a: MPoly, b: MPoly) -> MPoly:
    return a.add(b)


def poly_mul(a: MPoly, b: MPoly, cap: Optional[int] = None) -> MPoly:
    return a.mul(b, cap=cap)


def series_mul(a: AlphaSeries, b: AlphaSeries, ydeg_cap: Optional[int] = None) -> AlphaSeries:
    """Convolve over a-exponents; ``ydeg_cap`` bounds the y-degree (z is free)."""
    if a.nvars != b.nvars:
        raise UsageError(f"arity mismatch: {a.nvars} vs {b.nvars} variables")
    if ydeg_cap is not None and ydeg_cap < 0:
        raise UsageError("ydeg_cap must be non-negative")
    ny = a.nvars - 1
    out: Dict[int, MPoly] = {}
    for ka, pa in a.coeffs.items():
        for kb, pb in b.coeffs.items():
            prod = pa.mul(pb, cap=ydeg_cap, nlead=ny)
            if prod.is_zero():
                continue
            k = ka + kb
            out[k] = out[k].add(prod) if k in out else prod
    return AlphaSeries(a.nvars, out)


def series_product(factors: Iterable[AlphaSeries], nvars: int, ydeg_cap: Optional[int] = None) -> AlphaSeries:
    out = AlphaSeries.one(nvars)
    for f in factors:
        out = series_mul(out, f, ydeg_cap)
    return out
