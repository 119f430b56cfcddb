"""Gaussian binomial coefficients [n, m]_p as exact integers."""

from __future__ import annotations

from .group_core import GroupError, is_prime


def gauss_binomial(n: int, m: int, p: int) -> int:
    """Number of subgroups of order p^m in C_p^n.

    0 outside 0 <= m <= n, 1 at m = 0.  The product formula is divided out
    one factor at a time and every division must be exact.
    """
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")
    if m < 0 or m > n:
        return 0
    value = 1
    for i in range(m):
        value *= p ** (n - i) - 1
    for i in range(1, m + 1):
        value, rem = divmod(value, p**i - 1)
        if rem:
            raise ArithmeticError(f"[{n},{m}]_{p}: inexact division by {p**i - 1}")
    return value


def elementary_abelian_delta_bound(n: int, p: int) -> int:
    """Sum of [n, k]_p over 2 <= k <= n: the non-cyclic subgroups of C_p^n."""
    return sum(gauss_binomial(n, k, p) for k in range(2, n + 1))
