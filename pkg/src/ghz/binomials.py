"""Generalized binomial coefficients with a Lucas fast path mod p."""

from __future__ import annotations

import math

from .fields import PrimeField


def binom_general(n: int, j: int) -> int:
    """n(n-1)...(n-j+1)/j! as an exact integer; n may be negative."""
    if j < 0:
        raise ValueError("lower index must be nonnegative")
    if n >= 0:
        return math.comb(n, j)
    # (-1)^j * C(j - n - 1, j)
    return (-1) ** j * math.comb(j - n - 1, j)


def lucas_binom(n: int, j: int, p: int) -> int:
    """C(n, j) mod p for n, j >= 0 via digit products in base p."""
    if n < 0 or j < 0:
        raise ValueError("Lucas path needs nonnegative arguments")
    r = 1
    while j:
        nd, jd = n % p, j % p
        if jd > nd:
            return 0
        r = r * (math.comb(nd, jd) % p) % p
        n //= p
        j //= p
    return r


def binom_in_field(n: int, j: int, field):
    """binom_general(n, j) reduced into the given field."""
    if isinstance(field, PrimeField) and n >= 0:
        return lucas_binom(n, j, field.p)
    return field.from_int(binom_general(n, j))
