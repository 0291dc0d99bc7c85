"""Gaussian (x-)binomial coefficients and x-shifted binomials over Q(q)."""

from __future__ import annotations

import functools
from typing import List

from .exactq import ONE, ZERO, RatQ


@functools.lru_cache(maxsize=None)
def x_binomial(n: int, k: int, x: RatQ) -> RatQ:
    """Gaussian binomial ``(n k)_x``; zero outside 0 <= k <= n.

    Uses the telescoping product prod_{j=1..k} (x^(n-k+j) - 1) / (x^j - 1).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if k < 0 or k > n:
        return ZERO
    k = min(k, n - k)
    out = ONE
    for j in range(1, k + 1):
        out = out * (x ** (n - k + j) - ONE) / (x ** j - ONE)
    return out


def shifted_binomial_row(nu: int, x: RatQ) -> List[RatQ]:
    """Coefficients of t^0..t^nu in prod_{j=0}^{nu-1} (1 + x^j t)."""
    row = [ONE]
    xj = ONE
    for _ in range(nu):
        nxt = row + [ZERO]
        for l in range(len(row)):
            nxt[l + 1] = nxt[l + 1] + xj * row[l]
        row = nxt
        xj = xj * x
    return row


@functools.lru_cache(maxsize=None)
def _shifted_row_cached(nu: int, x: RatQ) -> tuple:
    return tuple(shifted_binomial_row(nu, x))


def x_shifted_binomial(nu: int, l: int, x: RatQ) -> RatQ:
    """x-shifted binomial ``[nu l]_x``: coefficient of t^l in prod_{j<nu} (1 + x^j t)."""
    if nu < 0:
        raise ValueError("nu must be non-negative")
    if l < 0 or l > nu:
        return ZERO
    return _shifted_row_cached(nu, x)[l]
