"""Binomial coefficients mod p through base-p digit products.

The block-entry formulas feed this with indices that can fall outside the
classical range; any such binomial is 0 by convention (the corresponding
basis cocycle does not exist), which turns the entry formulas into single
total expressions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .fields import is_prime


def padic_digits(value, p):
    """Base-p digits of value >= 0, least significant first ([] for 0)."""
    if value < 0:
        raise ValueError("digits are defined for non-negative integers")
    digits = []
    while value:
        value, d = divmod(value, p)
        digits.append(d)
    return digits


@dataclass(frozen=True)
class PadicDigits:
    """A non-negative integer together with its base-p expansion."""

    value: int
    base: int
    digits: tuple

    @classmethod
    def of(cls, value, p):
        if not is_prime(p):
            raise ValueError(f"base {p} is not prime")
        return cls(value, p, tuple(padic_digits(value, p)))

    def __post_init__(self):
        assert all(0 <= d < self.base for d in self.digits)
        assert sum(d * self.base ** i for i, d in enumerate(self.digits)) == self.value


@lru_cache(maxsize=None)
def _digit_binom_table(p):
    # Pascal's triangle for single digits, i.e. binom(i, j) mod p for i, j < p.
    return tuple(tuple(comb(i, j) % p for j in range(p)) for i in range(p))


def binom_mod_p(n, m, p):
    """binom(n, m) mod p, taken as 0 whenever m < 0, n < 0 or m > n.

    For in-range arguments this is the digit product
    prod_i binom(n_i, m_i) mod p over the base-p expansions.
    """
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if m < 0 or n < 0 or m > n:
        return 0
    table = _digit_binom_table(p)
    result = 1
    while m:
        n, nd = divmod(n, p)
        m, md = divmod(m, p)
        result = result * table[nd][md] % p
        if result == 0:
            return 0
    return result
