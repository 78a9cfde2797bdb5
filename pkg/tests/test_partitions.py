import pytest
from hypothesis import given, strategies as st

from quotloc.errors import UsageError
from quotloc.partitions import (
    FixedComponent,
    admissible_pairs,
    component_dimension,
    conjugate,
    distinguished_components,
    hilbert_poly,
    partitions_at_most,
    quot_dim,
    runs,
)

from oracles import brute_pairs, count_partitions_at_most


@pytest.mark.parametrize("n,r,d,want", [(3, 2, 3, (1, 4)), (3, 1, 3, (2, 5)), (4, 4, 0, (0, 0))])
def test_hilbert_poly(n, r, d, want):
    assert hilbert_poly(n, r, d) == want


@pytest.mark.parametrize("n,r,d,want", [(3, 2, 3, 11), (3, 1, 3, 11), (5, 2, 0, 6)])
def test_quot_dim(n, r, d, want):
    assert quot_dim(n, r, d) == want


@pytest.mark.parametrize("n,r,d", [(3, 4, 1), (3, 1, -1), (3, 0, 1)])
def test_bad_nrd(n, r, d):
    with pytest.raises(UsageError):
        hilbert_poly(n, r, d)
    with pytest.raises(UsageError):
        quot_dim(n, r, d)


def test_runs():
    assert runs((0, 0, 1, 2, 2)) == [(0, 2), (1, 1), (2, 2)]
    assert runs((3,)) == [(3, 1)]
    assert runs((0, 0, 0, 0, 1, 2, 2, 2, 5, 5)) == [(0, 4), (1, 1), (2, 3), (5, 2)]


def test_conjugate_r10_d17():
    assert conjugate((0, 0, 0, 0, 1, 2, 2, 2, 5, 5)) == (0, 0, 0, 0, 0, 2, 2, 2, 5, 6)


def test_conjugate_small():
    assert conjugate((0, 0, 0)) == (0, 0, 0)
    assert conjugate((1, 1, 1)) == (0, 0, 3)
    with pytest.raises(UsageError):
        conjugate((1, 1, 1), length=0)


@given(st.integers(0, 12).flatmap(lambda k: st.sampled_from(partitions_at_most(k, 12))))
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam, 12), 12) == lam


def test_admissible_pairs_examples():
    pairs = admissible_pairs(2, 3)
    assert len(pairs) == 8
    assert ((0, 3), (0, 0)) in pairs and ((1, 2), (0, 0)) in pairs
    assert admissible_pairs(1, 0) == [((0,), (0,))]
    assert admissible_pairs(2, 1) == [((0, 0), (0, 1)), ((0, 1), (0, 0))]


@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("d", [0, 1, 2, 3, 4, 5])
def test_admissible_pairs_brute_force(r, d):
    pairs = admissible_pairs(r, d)
    assert pairs == brute_pairs(r, d)
    want = sum(count_partitions_at_most(k, r) * count_partitions_at_most(d - k, r) for k in range(d + 1))
    assert len(pairs) == want


def test_distinguished_components_examples():
    assert [c.alpha for c in distinguished_components(3, 2, 3)] == [(0, 3), (1, 2)]
    assert [c.alpha for c in distinguished_components(3, 1, 3)] == [(3,)]
    assert [c.alpha for c in distinguished_components(4, 3, 0)] == [(0, 0, 0)]


@pytest.mark.parametrize("n,r,d", [(3, 2, 3), (4, 2, 4), (5, 3, 3)])
def test_distinguished_is_beta_zero_subset(n, r, d):
    got = [(c.alpha, c.beta) for c in distinguished_components(n, r, d)]
    assert got == [(a, b) for a, b in admissible_pairs(r, d) if not any(b)]


def test_component_dimension_examples():
    assert component_dimension(FixedComponent((0, 3), (0, 0), 3)) == 3
    assert component_dimension(FixedComponent((3,), (0,), 3)) == 2
    assert component_dimension(FixedComponent((0, 0), (0, 0), 5)) == 6


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_dimension_at_least_grassmannian(n):
    for r in range(1, n + 1):
        for d in range(4):
            for a, b in admissible_pairs(r, d):
                c = FixedComponent(a, b, n)
                g = (n - r) * r
                constant = len(set(a)) == 1 and len(set(b)) == 1
                assert c.dimension >= g
                assert (c.dimension == g) == constant


def test_component_json():
    c = FixedComponent((0, 3), (0, 0), 3)
    assert c.to_json() == {"alpha": [0, 3], "beta": [0, 0], "n": 3, "r": 2, "dim": 3, "flag_blocks": [1, 1, 1]}
    assert FixedComponent.from_json(c.to_json()) == c


def test_flag_blocks_r_equals_n():
    assert FixedComponent((0, 0, 1), (0, 0, 0), 3).flag_blocks == (2, 1)


def test_component_rejects_bad_input():
    with pytest.raises(UsageError):
        FixedComponent((2, 1), (0, 0), 3)
    with pytest.raises(UsageError):
        FixedComponent((0, 1), (0,), 3)
    with pytest.raises(UsageError):
        FixedComponent((0, 1, 1, 1), (0, 0, 0, 0), 3)
