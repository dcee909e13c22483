"""Prime characteristic and prime-power parameters.

Every scalar in the engine lives in F_p; the prime power q = p**r only
ever enters through index arithmetic (classes mod q-1), never through
field extensions.
"""

from __future__ import annotations

from dataclasses import dataclass


def is_prime(n):
    """Trial-division primality test; inputs here are desk-scale."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """Arithmetic mod a prime p, residues normalized to [0, p)."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, self.p - 2, self.p)

    def sign(self, exponent):
        """(-1)**exponent as a residue; equal to 1 when p = 2."""
        return 1 if exponent % 2 == 0 else self.p - 1


@dataclass(frozen=True)
class PrimePower:
    """q = p**r with the decomposition cached.

    q >= 2 always; matrix entries stay in F_p regardless of r.
    """

    p: int
    r: int
    q: int = 0

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"base {self.p} is not prime")
        if self.r < 1:
            raise ValueError("exponent must be positive")
        expected = self.p ** self.r
        if self.q == 0:
            object.__setattr__(self, "q", expected)
        elif self.q != expected:
            raise ValueError(f"q={self.q} is not {self.p}**{self.r}")

    @classmethod
    def from_q(cls, q):
        """Factor q as p**r, rejecting non prime powers."""
        if not isinstance(q, int) or q < 2:
            raise ValueError(f"q must be an integer >= 2, got {q!r}")
        p = 2
        while q % p != 0:
            p += 1
            if p * p > q:
                p = q
                break
        r = 0
        rest = q
        while rest % p == 0:
            rest //= p
            r += 1
        if rest != 1:
            raise ValueError(f"{q} is not a prime power")
        return cls(p, r)

    @property
    def field(self):
        return PrimeField(self.p)
