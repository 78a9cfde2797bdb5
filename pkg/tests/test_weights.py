import itertools

import pytest
from hypothesis import given, settings, strategies as st

from quotloc.partitions import FixedComponent, admissible_pairs, partitions_at_most, quot_dim
from quotloc.weights import (
    WeightMultiset,
    full_weight_system,
    weights_to_json,
    wt1,
    wt1_via_generating_function,
    wt2,
    wt3,
    zero_multiplicity_check,
)

from oracles import brute_pairs, lattice_count, wt3_closed_form

R10_D17_WT1 = {-4: 8, -3: 10, -2: 16, -1: 28, 1: 25, 2: 22, 3: 4, 4: 10, 5: 12}
R10_D17_ALPHA = (0, 0, 0, 0, 1, 2, 2, 2, 5, 5)


def brute_wt1(alpha):
    # half-open (a_j - a_i, a_j] as closed [a_j - a_i + 1, a_j]
    return lattice_count([(aj - ai + 1, aj) for ai in alpha for aj in alpha])


def brute_wt2(beta):
    return lattice_count([(-bj, bi - bj - 1) for bi in beta for bj in beta])


def test_wt1_examples():
    assert wt1((0, 3)) == {-2: 1, -1: 1, 0: 1, 1: 1, 2: 1, 3: 1}
    assert wt1((0, 0, 0)) == {}
    assert wt1(R10_D17_ALPHA).nonzero_part() == R10_D17_WT1


def test_wt2_examples():
    assert wt2((0, 0)) == {}
    assert wt2((1, 2)) == brute_wt2((1, 2)) == {-2: 2, -1: 3, 0: 1}


def test_wt3_examples():
    assert wt3((3,), (0,), 3, 1) == {0: 2, 1: 2, 2: 2, 3: 2}
    assert wt3((0, 3), (0, 0), 3, 2) == {0: 2, 1: 1, 2: 1, 3: 1}
    assert wt3((0, 0), (0, 0), 5, 2) == {0: 6}
    assert wt3((0, 0, 0), (0, 0, 0), 3, 3) == {}


def test_full_weight_system_examples():
    w = full_weight_system(FixedComponent((0, 3), (0, 0), 3))
    assert (w.cardinality, w.multiplicity(0)) == (11, 3)
    w = full_weight_system(FixedComponent((3,), (0,), 3))
    assert (w.cardinality, w.multiplicity(0)) == (11, 2)
    assert full_weight_system(FixedComponent((0, 0), (0, 0), 4)) == {0: 4}


def test_generating_function_r10_d17():
    assert wt1_via_generating_function(R10_D17_ALPHA) == R10_D17_WT1
    assert wt1_via_generating_function((0, 0, 0)) == {}
    assert wt1_via_generating_function((1, 2)) == {1: 3, 2: 2}


def _partitions_upto(boxes, r):
    for k in range(boxes + 1):
        yield from partitions_at_most(k, r)


@pytest.mark.parametrize("alpha", list(_partitions_upto(9, 4)) + [R10_D17_ALPHA])
def test_wt1_matches_brute_force(alpha):
    assert wt1(alpha) == brute_wt1(alpha)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 17).flatmap(lambda k: st.sampled_from(partitions_at_most(k, 10)) if k else st.just((0,) * 10)))
def test_generating_function_equals_interval_rule(alpha):
    assert wt1_via_generating_function(alpha) == dict(wt1(alpha).nonzero_part())


@pytest.mark.parametrize("beta", list(_partitions_upto(10, 4)))
def test_wt2_is_reflected_wt1(beta):
    assert wt2(beta) == wt1(beta).negated()
    assert wt2(beta) == brute_wt2(beta)


@pytest.mark.parametrize("r,d", [(1, 3), (2, 3), (3, 3), (3, 4)])
def test_wt3_closed_form_and_matching(r, d):
    for n in (r, r + 1, r + 2):
        for a, b in admissible_pairs(r, d):
            want = wt3_closed_form(a, b, n)
            for perm in itertools.permutations(range(r)):
                assert wt3(a, b, n, r, matching=perm) == want


def _sweep():
    for n in range(2, 6):
        for r in range(1, n):
            for d in range(5):
                for a, b in admissible_pairs(r, d):
                    yield FixedComponent(a, b, n)


def test_zero_multiplicity_examples():
    assert zero_multiplicity_check(FixedComponent((0, 3), (0, 0), 3))
    assert zero_multiplicity_check(FixedComponent((0, 0, 0), (0, 0, 0), 5))


def test_sweep_zero_multiplicity_cardinality_and_normal_count():
    comps = list(_sweep())
    assert len(comps) == sum(len(brute_pairs(r, d)) for n in range(2, 6) for r in range(1, n) for d in range(5))
    for c in comps:
        w = full_weight_system(c)
        assert w.cardinality == c.d * c.n + (c.n - c.r) * c.r
        assert w.multiplicity(0) == c.dimension
        assert w.cardinality - w.multiplicity(0) == quot_dim(c.n, c.r, c.d) - c.dimension


def test_json():
    c = FixedComponent((0, 3), (0, 0), 3)
    data = weights_to_json(c)
    assert data["wt1"] == {"-2": 1, "-1": 1, "0": 1, "1": 1, "2": 1, "3": 1}
    assert data["wt2"] == {}
    assert list(data["wt3"]) == ["0", "1", "2", "3"]
    assert WeightMultiset.from_json(data["wt3"]) == wt3((0, 3), (0, 0), 3)


def test_json_keys_sorted_numerically():
    keys = list(wt1((0, 3, 12)).to_json())
    assert keys == sorted(keys, key=int)
