"""Weights, dominance order, and integer-span membership."""

import itertools

import pytest

from satkit.rootdata import (
    GroupSpec,
    check_weight,
    dominance_leq,
    dominant_representative,
    dual_weight,
    in_integer_span,
    is_dominant,
    two_rho_pairing,
)


def test_check_weight_rejects_non_ints():
    with pytest.raises(ValueError):
        check_weight((1.0, 0))
    with pytest.raises(ValueError):
        check_weight(())


def test_dominance_examples():
    assert dominance_leq((1, 1, 0), (2, 0, 0))
    assert not dominance_leq((2, 0, 0), (1, 1, 0))
    assert dominance_leq((2, 1, 0), (2, 1, 0))
    # different totals never compare
    assert not dominance_leq((1, 0), (2, 0))
    assert not dominance_leq((2, 0), (1, 0))


def test_dominance_is_prefix_sum_order():
    doms = [w for w in itertools.product(range(4), repeat=3) if is_dominant(w)]
    for a in doms:
        for b in doms:
            if sum(a) != sum(b):
                continue
            expected = all(
                sum(a[: i + 1]) <= sum(b[: i + 1]) for i in range(3)
            )
            assert dominance_leq(a, b) == expected


def test_dominance_requires_dominant_arguments():
    with pytest.raises(ValueError):
        dominance_leq((0, 1), (1, 0))


def test_two_rho_pairing_values():
    assert two_rho_pairing((1, 0)) == 1
    assert two_rho_pairing((1, 1)) == 0
    assert two_rho_pairing((1, 0, 0)) == 2
    assert two_rho_pairing((2, 1, 0)) == 4


def test_dual_weight_reverses_and_negates():
    assert dual_weight((2, 1, 0)) == (0, -1, -2)
    for w in itertools.product(range(-2, 3), repeat=3):
        if is_dominant(w):
            assert is_dominant(dual_weight(w))
            assert dual_weight(dual_weight(w)) == w


def test_dominant_representative():
    assert dominant_representative((0, 2, -1)) == (2, 0, -1)
    assert dominant_representative((1, 1)) == (1, 1)


def test_in_integer_span():
    gens = ((1, 1, 1),)
    assert in_integer_span((2, 2, 2), gens)
    assert not in_integer_span((1, 1, 0), gens)
    # rational but non-integer combinations are rejected
    assert not in_integer_span((1, 1, 1), ((2, 2, 2),))
    assert in_integer_span((0, 0, 0), gens)


def test_in_integer_span_two_generators():
    gens = ((1, 1, 1, 0), (0, 0, 0, 1))
    assert in_integer_span((3, 3, 3, -2), gens)
    assert not in_integer_span((3, 3, 2, 0), gens)


def test_in_integer_span_rejects_dependent_generators():
    with pytest.raises(ValueError):
        in_integer_span((1, 1), ((1, 0), (2, 0)))


def test_group_spec_validates():
    GroupSpec(3, ((1, 1, 1),))
    with pytest.raises(ValueError):
        GroupSpec(3, ((1, 1),))  # rank mismatch
    with pytest.raises(ValueError):
        GroupSpec(2, ((1, 0), (2, 0)))  # dependent center generators
