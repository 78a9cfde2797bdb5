"""S^1-weights of the Quot-scheme tangent space at a fixed point.

The tangent weights split into three pieces: ``wt1`` (torsion at 0, from
alpha), ``wt2`` (torsion at infinity, from beta) and ``wt3`` (the free part,
``n - r`` copies of one interval system).
"""
from __future__ import annotations

from collections import Counter
from typing import Dict, Iterable, Mapping, Optional, Sequence

from .errors import UsageError
from .partitions import FixedComponent, PartitionSeq, as_seq, component_dimension, conjugate, quot_dim, runs


class WeightMultiset(Mapping[int, int]):
    """Finite multiset of integer weights (weight -> positive multiplicity)."""

    __slots__ = ("_m",)

    def __init__(self, entries: Optional[Mapping[int, int] | Iterable[int]] = None):
        counts = Counter()
        if isinstance(entries, Mapping):
            for w, m in entries.items():
                if m < 0:
                    raise UsageError(f"negative multiplicity {m} for weight {w}")
                counts[int(w)] += m
        elif entries is not None:
            counts.update(int(w) for w in entries)
        self._m: Dict[int, int] = {w: m for w, m in sorted(counts.items()) if m > 0}

    def __getitem__(self, w: int) -> int:
        return self._m[w]

    def __iter__(self):
        return iter(self._m)

    def __len__(self):
        return len(self._m)

    def multiplicity(self, w: int) -> int:
        return self._m.get(w, 0)

    @property
    def cardinality(self) -> int:
        return sum(self._m.values())

    def union(self, *others: "WeightMultiset") -> "WeightMultiset":
        c = Counter(self._m)
        for o in others:
            c.update(dict(o.items()))
        return WeightMultiset(c)

    __or__ = union

    def scaled(self, k: int) -> "WeightMultiset":
        """Each multiplicity times ``k``."""
        return WeightMultiset({w: m * k for w, m in self._m.items()})

    def negated(self) -> "WeightMultiset":
        return WeightMultiset({-w: m for w, m in self._m.items()})

    def nonzero_part(self) -> "WeightMultiset":
        return WeightMultiset({w: m for w, m in self._m.items() if w != 0})

    def __eq__(self, other):
        if isinstance(other, WeightMultiset):
            return self._m == other._m
        if isinstance(other, Mapping):
            return self._m == WeightMultiset(other)._m
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._m.items()))

    def __repr__(self):
        return f"WeightMultiset({self._m})"

    def to_json(self) -> Dict[str, int]:
        return {str(w): m for w, m in self._m.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "WeightMultiset":
        return cls({int(w): int(m) for w, m in data.items()})


def wt1(alpha: Sequence[int]) -> WeightMultiset:
    """Union over all (i, j) of the integers in (alpha_j - alpha_i, alpha_j]."""
    alpha = as_seq(alpha)
    c = Counter()
    for ai in alpha:
        for aj in alpha:
            c.update(range(aj - ai + 1, aj + 1))
    return WeightMultiset(c)


def wt2(beta: Sequence[int]) -> WeightMultiset:
    """Union over all (i, j) of the integers in [-beta_j, beta_i - beta_j)."""
    beta = as_seq(beta)
    c = Counter()
    for bi in beta:
        for bj in beta:
            c.update(range(-bj, bi - bj))
    return WeightMultiset(c)


def wt3(alpha: Sequence[int], beta: Sequence[int], n: int, r: Optional[int] = None,
        matching: Optional[Sequence[int]] = None) -> WeightMultiset:
    """``n - r`` copies of the union of [-beta_{i'}, alpha_i] over i.

    ``matching`` is a permutation (0-based) sending i to i'; the result does
    not depend on it.
    """
    alpha = as_seq(alpha)
    beta = as_seq(beta)
    if r is None:
        r = len(alpha)
    if len(alpha) != r or len(beta) != r:
        raise UsageError(f"alpha and beta must both have length r={r}")
    if not 1 <= r <= n:
        raise UsageError(f"need 1 <= r <= n, got n={n}, r={r}")
    if matching is None:
        matching = range(r)
    if sorted(matching) != list(range(r)):
        raise UsageError(f"matching {list(matching)} is not a permutation of 0..{r - 1}")
    c = Counter()
    for i, ip in enumerate(matching):
        c.update(range(-beta[ip], alpha[i] + 1))
    return WeightMultiset(c).scaled(n - r)


def weight_subsystems(c: FixedComponent) -> Dict[str, WeightMultiset]:
    return {
        "wt1": wt1(c.alpha),
        "wt2": wt2(c.beta),
        "wt3": wt3(c.alpha, c.beta, c.n, c.r),
    }


def full_weight_system(c: FixedComponent) -> WeightMultiset:
    parts = weight_subsystems(c)
    return parts["wt1"] | parts["wt2"] | parts["wt3"]


def normal_weights(c: FixedComponent) -> WeightMultiset:
    return full_weight_system(c).nonzero_part()


def wt1_via_generating_function(alpha: Sequence[int]) -> Dict[int, int]:
    """Nonzero part of ``wt1`` by the shifted-conjugate-monomial substitution.

    The monomial attached to the partition has exponent ``c_k`` on ``q_{-k}``,
    where ``c`` is the conjugate partition (``c_k`` = number of parts >= k).
    Each part ``v`` contributes a copy of that monomial with every index
    shifted by ``v + 1``; the product, with ``q_0`` set to 1, has the weight
    multiplicities as exponents.
    """
    alpha = as_seq(alpha)
    cols = conjugate(alpha)
    # cols is ascending; the k-th largest column length sits at q_{-k}
    base = {-(k + 1): e for k, e in enumerate(reversed(cols)) if e}
    q = Counter()
    for v, mult in runs(alpha):
        shift = v + 1
        for idx, e in base.items():
            q[idx + shift] += e * mult
    q.pop(0, None)
    return {w: m for w, m in sorted(q.items()) if m}


def zero_multiplicity_check(c: FixedComponent) -> bool:
    return full_weight_system(c).multiplicity(0) == component_dimension(c)


def cardinality_check(c: FixedComponent) -> bool:
    return full_weight_system(c).cardinality == quot_dim(c.n, c.r, c.d)


def weights_to_json(c: FixedComponent) -> dict:
    return {k: v.to_json() for k, v in weight_subsystems(c).items()}
