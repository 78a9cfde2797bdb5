"""Partition sequences, admissible pairs and S^1-fixed components of Quot schemes.

Sequences are kept weakly *increasing* (``alpha_1 <= ... <= alpha_r``), which
is the order the weight-interval formulas are written in.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .errors import UsageError

PartitionSeq = Tuple[int, ...]
RunEncoding = List[Tuple[int, int]]


def as_seq(parts: Sequence[int]) -> PartitionSeq:
    seq = tuple(int(p) for p in parts)
    if any(p < 0 for p in seq):
        raise UsageError(f"sequence {seq} has negative entries")
    if any(a > b for a, b in zip(seq, seq[1:])):
        raise UsageError(f"sequence {seq} is not weakly increasing")
    return seq


def _check_nrd(n: int, r: int, d: int = 0) -> None:
    if not 1 <= r <= n:
        raise UsageError(f"need 1 <= r <= n, got n={n}, r={r}")
    if d < 0:
        raise UsageError(f"degree must be non-negative, got d={d}")


def hilbert_poly(n: int, r: int, d: int) -> Tuple[int, int]:
    """(slope, constant) of the Hilbert polynomial ``(n-r) t + d + (n-r)``."""
    _check_nrd(n, r, d)
    return n - r, d + n - r


def quot_dim(n: int, r: int, d: int) -> int:
    _check_nrd(n, r, d)
    return d * n + (n - r) * r


def grassmannian_dim(n: int, r: int) -> int:
    return (n - r) * r


def runs(seq: Sequence[int]) -> RunEncoding:
    """Run-length encoding ``[(value, multiplicity), ...]``."""
    out: RunEncoding = []
    for v in seq:
        if out and out[-1][0] == v:
            out[-1] = (v, out[-1][1] + 1)
        else:
            out.append((v, 1))
    return out


def conjugate(seq: Sequence[int], length: Optional[int] = None) -> PartitionSeq:
    """Conjugate partition (column lengths of the Young diagram), ascending.

    The result is zero-padded on the left to ``length``; by default to the
    larger of ``len(seq)`` and the largest part.
    """
    seq = as_seq(seq)
    top = seq[-1] if seq else 0
    cols = [sum(1 for p in seq if p >= k) for k in range(1, top + 1)]
    cols.reverse()
    if length is None:
        length = max(len(seq), top)
    if length < len(cols):
        raise UsageError(f"conjugate of {seq} has {len(cols)} nonzero parts, more than length {length}")
    return (0,) * (length - len(cols)) + tuple(cols)


def partitions_at_most(k: int, r: int, max_part: Optional[int] = None) -> List[PartitionSeq]:
    """Partitions of ``k`` into at most ``r`` parts as ascending length-``r`` tuples."""
    if max_part is None:
        max_part = k
    if r == 0:
        return [()] if k == 0 else []
    out = []
    # choose the largest (last) part first
    for last in range(min(k, max_part), -1, -1):
        if last * r < k:
            break
        for head in partitions_at_most(k - last, r - 1, last):
            out.append(head + (last,))
    return sorted(out)


def admissible_pairs(r: int, d: int) -> List[Tuple[PartitionSeq, PartitionSeq]]:
    """All (alpha; beta) of ascending length-r sequences with total sum d."""
    if r < 1 or d < 0:
        raise UsageError(f"need r >= 1 and d >= 0, got r={r}, d={d}")
    pairs = []
    for k in range(d + 1):
        for a in partitions_at_most(k, r):
            for b in partitions_at_most(d - k, r):
                pairs.append((a, b))
    return sorted(pairs)


def _cross_sum(mults: Sequence[int]) -> int:
    return sum(a * b for a, b in combinations(mults, 2))


@dataclass(frozen=True)
class FixedComponent:
    """The fixed component F_{alpha; beta} in Quot of degree sum(alpha)+sum(beta)."""

    alpha: PartitionSeq
    beta: PartitionSeq
    n: int
    r: int = field(init=False)

    def __post_init__(self):
        alpha = as_seq(self.alpha)
        beta = as_seq(self.beta)
        if len(alpha) != len(beta) or not alpha:
            raise UsageError(f"alpha {alpha} and beta {beta} must be non-empty of equal length")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "r", len(alpha))
        _check_nrd(self.n, self.r)

    @classmethod
    def distinguished(cls, alpha: Sequence[int], n: int) -> "FixedComponent":
        return cls(tuple(alpha), (0,) * len(alpha), n)

    @property
    def d(self) -> int:
        return sum(self.alpha) + sum(self.beta)

    @property
    def is_distinguished(self) -> bool:
        return not any(self.beta)

    @property
    def alpha_runs(self) -> RunEncoding:
        return runs(self.alpha)

    @property
    def beta_runs(self) -> RunEncoding:
        return runs(self.beta)

    @property
    def dimension(self) -> int:
        return component_dimension(self)

    @property
    def codimension(self) -> int:
        return quot_dim(self.n, self.r, self.d) - self.dimension

    @property
    def flag_blocks(self) -> Tuple[int, ...]:
        """Block sizes (m_1, ..., m_k, n - r) of the alpha-side flag; a zero last block is dropped."""
        blocks = [m for _, m in self.alpha_runs]
        if self.n > self.r:
            blocks.append(self.n - self.r)
        return tuple(blocks)

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "n": self.n,
            "r": self.r,
            "dim": self.dimension,
            "flag_blocks": list(self.flag_blocks),
        }

    @classmethod
    def from_json(cls, data: dict) -> "FixedComponent":
        comp = cls(tuple(data["alpha"]), tuple(data["beta"]), int(data["n"]))
        if "r" in data and data["r"] != comp.r:
            raise UsageError(f"r={data['r']} does not match len(alpha)={comp.r}")
        return comp

    def label(self) -> str:
        a = ",".join(map(str, self.alpha))
        b = ",".join(map(str, self.beta))
        return f"F_{{{a};{b}}}"


def component_dimension(c: FixedComponent) -> int:
    m = [mult for _, mult in runs(c.alpha)]
    nb = [mult for _, mult in runs(c.beta)]
    return grassmannian_dim(c.n, c.r) + _cross_sum(m) + _cross_sum(nb)


def fixed_components(n: int, r: int, d: int) -> List[FixedComponent]:
    _check_nrd(n, r, d)
    return [FixedComponent(a, b, n) for a, b in admissible_pairs(r, d)]


def distinguished_components(n: int, r: int, d: int) -> List[FixedComponent]:
    """Components with beta = 0: one per partition of d into at most r parts."""
    _check_nrd(n, r, d)
    return [FixedComponent.distinguished(a, n) for a in partitions_at_most(d, r)]
