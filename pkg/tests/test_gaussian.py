from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pgx.gaussian import elementary_abelian_delta_bound, gauss_binomial
from pgx.group_core import GroupError

primes = st.sampled_from([2, 3, 5])


def _count_subspaces(n: int, m: int, p: int) -> int:
    """Count m-dimensional subspaces of F_p^n by counting ordered bases."""
    if not 0 <= m <= n:
        return 0
    num = den = 1
    for i in range(m):
        num *= p**n - p**i
        den *= p**m - p**i
    return num // den


@pytest.mark.parametrize(
    "n, m, p, value",
    [(3, 1, 2, 7), (5, 2, 2, 155), (4, 1, 3, 40), (4, 3, 3, 40), (0, 0, 7, 1), (3, 4, 2, 0), (3, -1, 2, 0)],
)
def test_values(n, m, p, value):
    assert gauss_binomial(n, m, p) == value


def test_delta_bound():
    assert elementary_abelian_delta_bound(3, 2) == 8
    assert elementary_abelian_delta_bound(3, 3) == 14
    assert elementary_abelian_delta_bound(1, 5) == 0


def test_rejects_non_prime():
    with pytest.raises(GroupError):
        gauss_binomial(3, 1, 4)


@given(st.integers(0, 11), st.integers(0, 12), primes)
def test_pascal_recurrence(n, m, p):
    if m > n + 1:
        return
    assert gauss_binomial(n + 1, m, p) == gauss_binomial(n, m, p) + p ** (n - m + 1) * gauss_binomial(n, m - 1, p)


@given(st.integers(0, 12), st.integers(0, 12), primes)
def test_symmetry(n, m, p):
    if m > n:
        return
    assert gauss_binomial(n, m, p) == gauss_binomial(n, n - m, p)


@given(st.integers(0, 20), st.integers(0, 20), primes)
def test_matches_basis_count(n, m, p):
    assert gauss_binomial(n, m, p) == _count_subspaces(n, m, p)


def test_large_values_stay_exact():
    v = gauss_binomial(60, 30, 5)
    assert v == _count_subspaces(60, 30, 5) and v > 2**1000
