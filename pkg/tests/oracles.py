"""Independent reference computations used only by the tests."""
from fractions import Fraction
from itertools import product
from math import factorial

import sympy as sp


def brute_sequences(r, total):
    """All weakly increasing length-r tuples of non-negative ints summing to total."""
    return [s for s in product(range(total + 1), repeat=r)
            if sum(s) == total and all(a <= b for a, b in zip(s, s[1:]))]


def brute_pairs(r, d):
    out = []
    for k in range(d + 1):
        for a in brute_sequences(r, k):
            for b in brute_sequences(r, d - k):
                out.append((a, b))
    return sorted(out)


def count_partitions_at_most(k, r):
    """p_{<=r}(k) by the standard recurrence p(k, r) = p(k, r-1) + p(k-r, r)."""
    table = [[0] * (r + 1) for _ in range(k + 1)]
    for j in range(r + 1):
        table[0][j] = 1
    for i in range(1, k + 1):
        for j in range(1, r + 1):
            table[i][j] = table[i][j - 1] + (table[i - j][j] if i >= j else 0)
    return table[k][r]


def lattice_count(intervals):
    """Multiplicity map from a list of closed integer intervals (lo, hi)."""
    out = {}
    for lo, hi in intervals:
        for x in range(lo, hi + 1):
            out[x] = out.get(x, 0) + 1
    return out


def wt3_closed_form(alpha, beta, n):
    """Run-based multiplicity formula for the free weight system."""
    r = len(alpha)
    a_runs, b_runs = _runs(alpha), _runs(beta)
    a_vals = [v for v, _ in a_runs]
    b_vals = [v for v, _ in b_runs]
    out = {}
    for mu in range(-beta[-1], alpha[-1] + 1):
        b1 = b_vals[0]
        a1 = a_vals[0]
        if -b1 <= mu <= a1:
            m = r
        elif mu > a1:
            j = next(k for k in range(len(a_vals)) if a_vals[k - 1] < mu <= a_vals[k])
            m = sum(mult for _, mult in a_runs[j:])
        else:
            j = next(k for k in range(len(b_vals)) if -b_vals[k] <= mu < -b_vals[k - 1])
            m = sum(mult for _, mult in b_runs[j:])
        out[mu] = m * (n - r)
    return {k: v for k, v in out.items() if v}


def _runs(seq):
    out = []
    for v in seq:
        if out and out[-1][0] == v:
            out[-1] = (v, out[-1][1] + 1)
        else:
            out.append((v, 1))
    return out


def full_flag_integral(exponents):
    """Integral over Fl(n) of y^e via the top divided difference in x = -y."""
    n = len(exponents)
    xs = sp.symbols(f"x1:{n + 1}")
    f = sp.Integer((-1) ** sum(exponents))
    for x, e in zip(xs, exponents):
        f *= x ** e
    return Fraction(str(_top_divided_difference(sp.expand(f), xs)))


def _top_divided_difference(f, xs):
    n = len(xs)
    # reduced word of the longest element: s1 (s2 s1) (s3 s2 s1) ...
    word = [i for k in range(1, n) for i in range(k, 0, -1)]
    for i in reversed(word):
        a, b = xs[i - 1], xs[i]
        swapped = f.subs({a: b, b: a}, simultaneous=True)
        f = sp.cancel((f - swapped) / (a - b))
        f = sp.expand(f)
    return sp.nsimplify(f)


def partial_flag_integral(blocks, exponents):
    """Push a block-symmetrized monomial through Fl(n) -> Fl(blocks).

    Integral over Fl(blocks) of f equals (1/prod m!) times the integral over
    Fl(n) of f * prod over blocks of Vandermonde(x within block).
    """
    n = sum(blocks)
    xs = sp.symbols(f"x1:{n + 1}")
    f = sp.Integer(1)
    for x, e in zip(xs, exponents):
        f *= (-x) ** e
    weight = sp.Integer(1)
    pos = 0
    norm = 1
    for m in blocks:
        idx = list(range(pos, pos + m))
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                weight *= xs[idx[a]] - xs[idx[b]]
        norm *= factorial(m)
        pos += m
    val = _top_divided_difference(sp.expand(f * weight), xs)
    return Fraction(str(val)) / norm
