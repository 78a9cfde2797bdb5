"""Young-diagram block forms of the weight spaces on a distinguished component.

For a distinguished component F_{alpha; 0} every S^1-weight space of the
tangent space is a set of cells in the ``n x r`` matrix whose rows are
indexed by Chern roots 1..n (rows 1..r torsion, rows r+1..n free) and whose
columns are indexed by roots 1..r.  Rows ``i`` with ``alpha_i = 0`` never
carry a cell, which is why the rendered grid starts at row ``m_0 + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import UsageError
from .partitions import as_seq, runs

Cell = Tuple[int, int]


@dataclass(frozen=True)
class BlockForm:
    w: int
    cells: Tuple[Cell, ...]

    def to_json(self) -> dict:
        return {"w": self.w, "cells": [list(c) for c in self.cells]}

    @classmethod
    def from_json(cls, data: dict) -> "BlockForm":
        return cls(int(data["w"]), tuple(sorted((int(i), int(j)) for i, j in data["cells"])))


@dataclass(frozen=True, order=True)
class P0Weight:
    """Weight ``w`` carried by the root difference ``y_i - y_j``."""

    w: int
    i: int
    j: int


def _distinguished_alpha(alpha: Sequence[int], n: int) -> Tuple[int, ...]:
    alpha = as_seq(alpha)
    if not 1 <= len(alpha) <= n:
        raise UsageError(f"need 1 <= r <= n, got r={len(alpha)}, n={n}")
    return alpha


def weight_range(alpha: Sequence[int]) -> range:
    """Weights carried by some form, from -max(alpha_r - alpha_1 - 1, 0) to alpha_r."""
    alpha = as_seq(alpha)
    low = -max(alpha[-1] - alpha[0] - 1, 0)
    return range(low, alpha[-1] + 1)


def cell_in_form(alpha: Sequence[int], n: int, w: int, i: int, j: int) -> bool:
    r = len(alpha)
    if i <= r:
        return alpha[j - 1] - alpha[i - 1] < w <= alpha[j - 1]
    return 0 <= w <= alpha[j - 1]


def block_forms(alpha: Sequence[int], n: int) -> List[BlockForm]:
    """One :class:`BlockForm` per weight in :func:`weight_range`, highest weight first."""
    alpha = _distinguished_alpha(alpha, n)
    r = len(alpha)
    forms = []
    for w in reversed(weight_range(alpha)):
        cells = tuple(
            (i, j)
            for i in range(1, n + 1)
            for j in range(1, r + 1)
            if cell_in_form(alpha, n, w, i, j)
        )
        forms.append(BlockForm(w, cells))
    return forms


def p0_weight_system(alpha: Sequence[int], n: int) -> List[P0Weight]:
    return [P0Weight(f.w, i, j) for f in block_forms(alpha, n) for i, j in f.cells]


def render_ascii(forms: Sequence[BlockForm], alpha: Sequence[int], n: int) -> str:
    """Text grids, one per form: ``#`` marks a cell, ``|`` and ``-`` separate
    the run blocks of alpha, and ``=`` separates torsion rows from free rows."""
    alpha = _distinguished_alpha(alpha, n)
    r = len(alpha)
    m0 = alpha.count(0)
    # run boundaries: last index of every run
    ends = set()
    pos = 0
    for _, m in runs(alpha):
        pos += m
        ends.add(pos)
    rows = list(range(m0 + 1, n + 1))
    width = len(str(n))
    blocks = []
    for form in forms:
        present = set(form.cells)
        lines = [f"w = {form.w}"]
        header = " " * (width + 2)
        for j in range(1, r + 1):
            header += str(j).rjust(width)
            if j < r:
                header += " | " if j in ends else " "
        lines.append(header.rstrip())
        grid_width = len(header) - (width + 2)
        for i in rows:
            line = f"{str(i).rjust(width)}  "
            for j in range(1, r + 1):
                line += ("#" if (i, j) in present else ".").rjust(width)
                if j < r:
                    line += " | " if j in ends else " "
            lines.append(line)
            if i == r and r < n:
                lines.append(" " * (width + 2) + "=" * grid_width)
            elif i in ends and i < n:
                lines.append(" " * (width + 2) + "-" * grid_width)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks)
