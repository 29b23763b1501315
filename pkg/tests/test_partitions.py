from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given, strategies as st

from taukit.partitions import (
    cells,
    conjugate,
    contents,
    enumerate_up_to,
    frobenius,
    from_frobenius,
    hook_data,
    hook_lengths,
    n_statistic,
    partitions_of,
    skew_cells,
)


def naive_partitions(n):
    """Independent enumeration: weakly decreasing tuples summing to n."""
    def rec(remaining, bound):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    return set(rec(n, n))


partition_strategy = st.integers(0, 8).flatmap(
    lambda n: st.sampled_from(sorted(naive_partitions(n))) if n else st.just(())
)


# -- enumeration -----------------------------------------------------------------


def test_enumerate_zero():
    assert enumerate_up_to(0) == [()]


def test_weight_five_has_seven_partitions():
    fives = list(partitions_of(5))
    assert len(fives) == 7
    assert set(fives) == naive_partitions(5)


def test_enumerate_up_to_three():
    got = enumerate_up_to(3)
    assert len(got) == 7  # 1 + 1 + 2 + 3
    assert got == [(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]


def test_enumeration_order_reverse_lex_within_grade():
    grade5 = list(partitions_of(5))
    assert grade5 == sorted(grade5, reverse=True)


@given(st.integers(0, 9))
def test_enumeration_matches_naive(n):
    assert set(partitions_of(n)) == naive_partitions(n)


# -- conjugation ----------------------------------------------------------------


def test_conjugate_examples():
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((3,)) == (1, 1, 1)
    assert conjugate(()) == ()


def test_conjugate_involution_exhaustive():
    for lam in enumerate_up_to(8):
        assert conjugate(conjugate(lam)) == lam


@given(partition_strategy)
def test_conjugate_weight_and_length(lam):
    conj = conjugate(lam)
    assert sum(conj) == sum(lam)
    if lam:
        assert len(lam) == conj[0]


# -- hooks ----------------------------------------------------------------------


def brute_hooks(lam):
    """Arm + leg + 1 per cell, counted directly from the diagram."""
    cellset = set(cells(lam))
    out = []
    for (i, j) in cells(lam):
        arm = sum(1 for jj in range(j + 1, lam[i - 1] + 1))
        leg = sum(1 for ii in range(i + 1, len(lam) + 1) if (ii, j) in cellset)
        out.append(arm + leg + 1)
    return tuple(out)


def test_hook_data_two_one():
    hd = hook_data((2, 1))
    assert sorted(hd.hooks) == [1, 1, 3]
    assert hd.product == 3
    assert hd.n_stat == 1


def test_hook_data_q():
    q = F(1, 2)
    hd = hook_data((2, 1), q)
    assert hd.q_product == (1 - q**3) * (1 - q) ** 2


def test_hook_data_empty():
    hd = hook_data((), F(1, 3))
    assert hd.product == 1 and hd.q_product == 1 and hd.n_stat == 0


def test_hooks_match_brute_force():
    for lam in enumerate_up_to(8):
        assert hook_lengths(lam) == brute_hooks(lam)


def test_hook_multiset_conjugation_invariant():
    for lam in enumerate_up_to(8):
        assert sorted(hook_lengths(lam)) == sorted(hook_lengths(conjugate(lam)))


def test_n_statistic_binomial_formula():
    for lam in enumerate_up_to(8):
        conj = conjugate(lam)
        assert n_statistic(lam) == sum(comb(col, 2) for col in conj)


def test_cells_count_is_weight():
    for lam in enumerate_up_to(8):
        assert len(cells(lam)) == sum(lam)
        assert len(contents(lam)) == sum(lam)


# -- Frobenius coordinates ----------------------------------------------------------


def test_frobenius_examples():
    assert frobenius((2, 1)) == ((1,), (1,))
    assert frobenius((1,)) == ((0,), (0,))
    assert frobenius(()) == ((), ())


def test_frobenius_round_trip_exhaustive():
    for lam in enumerate_up_to(8):
        arms, legs = frobenius(lam)
        assert all(a > b for a, b in zip(arms, arms[1:]))
        assert all(a > b for a, b in zip(legs, legs[1:]))
        assert from_frobenius(arms, legs) == lam


# -- skew shapes -----------------------------------------------------------------------


def brute_skew_cells(outer, inner):
    return sorted(set(cells(outer)) - set(cells(inner)))


def test_skew_cells_examples():
    assert skew_cells((2, 1), (1,)) == [(1, 2), (2, 1)]
    assert skew_cells((2, 1), (2, 1)) == []
    assert skew_cells((3, 2), (1, 1)) == [(1, 2), (1, 3), (2, 2)]


def test_skew_cells_match_brute_force():
    for outer in enumerate_up_to(6):
        for inner in enumerate_up_to(4):
            contained = set(cells(inner)) <= set(cells(outer))
            if not contained:
                with pytest.raises(ValueError):
                    skew_cells(outer, inner)
                continue
            assert skew_cells(outer, inner) == brute_skew_cells(outer, inner)


def test_skew_rejects_non_contained():
    with pytest.raises(ValueError):
        skew_cells((2,), (1, 1))
    with pytest.raises(ValueError):
        skew_cells((2, 1), (3,))


def test_skew_shape_bundle():
    from taukit.partitions import SkewShape

    shape = SkewShape((3, 2), (1, 1))
    assert shape.cells() == [(1, 2), (1, 3), (2, 2)]
    assert shape.weight() == 3
    with pytest.raises(ValueError):
        SkewShape((1,), (2,))
