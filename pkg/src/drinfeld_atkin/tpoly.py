"""Exact polynomials in t over F_p, and the fraction field F_p(t).

TPoly keeps an ascending coefficient tuple with no trailing zeros (the
zero polynomial is the empty tuple), so structural equality is semantic
equality. RatFunc keeps a monic denominator and a gcd-reduced fraction
for the same reason. Both are immutable values.
"""

from __future__ import annotations

import numpy as np

# Above this many coefficients, multiplication goes through numpy.
_NUMPY_MUL_THRESHOLD = 96


class TPoly:
    """A polynomial in t over F_p."""

    __slots__ = ("p", "c")

    def __init__(self, p, coeffs, _trusted=False):
        if _trusted:
            self.p = p
            self.c = coeffs
            return
        c = [int(a) % p for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.p = p
        self.c = tuple(c)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, p):
        return cls(p, (), _trusted=True)

    @classmethod
    def one(cls, p):
        return cls(p, (1,), _trusted=True)

    @classmethod
    def const(cls, p, a):
        a %= p
        return cls(p, (a,) if a else (), _trusted=True)

    @classmethod
    def t_power(cls, p, e, scalar=1):
        """scalar * t**e."""
        scalar %= p
        if scalar == 0:
            return cls.zero(p)
        if e < 0:
            raise ValueError("negative t exponent; use RatFunc")
        return cls(p, (0,) * e + (scalar,), _trusted=True)

    # -- basic queries ------------------------------------------------------

    @property
    def degree(self):
        """Degree in t; -1 for the zero polynomial."""
        return len(self.c) - 1

    @property
    def is_zero(self):
        return not self.c

    @property
    def is_one(self):
        return self.c == (1,)

    def leading(self):
        return self.c[-1] if self.c else 0

    def valuation(self):
        """t-adic valuation; None for the zero polynomial."""
        for i, a in enumerate(self.c):
            if a:
                return i
        return None

    def coeff(self, i):
        return self.c[i] if 0 <= i < len(self.c) else 0

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.p != other.p:
            raise ValueError("mismatched characteristic")

    def __add__(self, other):
        self._check(other)
        p = self.p
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, x in enumerate(b):
            c[i] = (c[i] + x) % p
        while c and c[-1] == 0:
            c.pop()
        return TPoly(p, tuple(c), _trusted=True)

    def __neg__(self):
        p = self.p
        return TPoly(p, tuple((p - a) % p for a in self.c), _trusted=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        p = self.p
        a, b = self.c, other.c
        if not a or not b:
            return TPoly.zero(p)
        if len(a) == 1:
            return other.scale(a[0])
        if len(b) == 1:
            return self.scale(b[0])
        if len(a) + len(b) > _NUMPY_MUL_THRESHOLD:
            c = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64)) % p
            return TPoly(p, tuple(int(x) for x in c), _trusted=True)
        c = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    c[i + j] += x * y
        return TPoly(p, tuple(x % p for x in c), _trusted=True)

    def scale(self, scalar):
        p = self.p
        scalar %= p
        if scalar == 0:
            return TPoly.zero(p)
        if scalar == 1:
            return self
        return TPoly(p, tuple(a * scalar % p for a in self.c), _trusted=True)

    def shift(self, e):
        """Multiply by t**e, e >= 0."""
        if self.is_zero:
            return self
        return TPoly(self.p, (0,) * e + self.c, _trusted=True)

    def __pow__(self, e):
        result = TPoly.one(self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.p
        rem = list(self.c)
        q = [0] * max(len(rem) - len(other.c) + 1, 0)
        inv_lead = pow(other.leading(), p - 2, p)
        d = other.degree
        for i in range(len(rem) - 1, d - 1, -1):
            coef = rem[i] % p
            if coef == 0:
                continue
            factor = coef * inv_lead % p
            q[i - d] = factor
            for j, y in enumerate(other.c):
                rem[i - d + j] = (rem[i - d + j] - factor * y) % p
        return TPoly(p, tuple(q)), TPoly(p, tuple(rem))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero:
            return self
        return self.scale(pow(self.leading(), self.p - 2, self.p))

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, TPoly) and self.p == other.p and self.c == other.c

    def __hash__(self):
        return hash((self.p, self.c))

    def __bool__(self):
        return bool(self.c)

    def __repr__(self):
        return f"TPoly(p={self.p}, {format_tpoly(self)})"


def tpoly_gcd(a, b):
    """Monic gcd in F_p[t]; gcd(f, 0) is the monic normalization of f."""
    a._check(b)
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def format_tpoly(poly, balanced=False):
    """Render ascending-coefficient data as a human-readable sum.

    With balanced=True residues above p/2 print as negative integers, which
    matches the usual way these matrices are displayed in odd characteristic.
    """
    if poly.is_zero:
        return "0"
    p = poly.p
    terms = []
    for e in range(poly.degree, -1, -1):
        a = poly.coeff(e)
        if not a:
            continue
        if balanced and p > 2 and a > p // 2:
            a -= p
        if e == 0:
            body = str(abs(a))
        else:
            mag = abs(a)
            head = "" if mag == 1 else f"{mag}*"
            body = f"{head}t^{e}" if e > 1 else f"{head}t"
        terms.append((a < 0, body))
    out = []
    for i, (neg, body) in enumerate(terms):
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


class RatFunc:
    """A reduced fraction of TPoly values with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _trusted=False):
        if den is None:
            den = TPoly.one(num.p)
        if _trusted:
            self.num = num
            self.den = den
            return
        num._check(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num = num
            self.den = TPoly.one(num.p)
            return
        g = tpoly_gcd(num, den)
        if g.degree > 0:
            num //= g
            den //= g
        inv_lead = pow(den.leading(), den.p - 2, den.p)
        self.num = num.scale(inv_lead)
        self.den = den.scale(inv_lead)

    @classmethod
    def zero(cls, p):
        return cls(TPoly.zero(p), TPoly.one(p), _trusted=True)

    @classmethod
    def one(cls, p):
        return cls(TPoly.one(p), TPoly.one(p), _trusted=True)

    @classmethod
    def t_power(cls, p, e, scalar=1):
        """scalar * t**e with e of either sign."""
        if e >= 0:
            return cls(TPoly.t_power(p, e, scalar), TPoly.one(p), _trusted=True)
        return cls(TPoly.const(p, scalar), TPoly.t_power(p, -e), _trusted=True)

    @property
    def p(self):
        return self.num.p

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_one(self):
        return self.num.is_one and self.den.is_one

    def __add__(self, other):
        other = _coerce(other, self.p)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _trusted=True)

    def __sub__(self, other):
        return self + (-_coerce(other, self.p))

    def __mul__(self, other):
        other = _coerce(other, self.p)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other, self.p)
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def scale(self, scalar):
        num = self.num.scale(scalar)
        if num.is_zero:
            return RatFunc.zero(self.p)
        return RatFunc(num, self.den, _trusted=True)

    def valuation(self):
        """t-adic valuation; None for zero."""
        if self.is_zero:
            return None
        return self.num.valuation() - self.den.valuation()

    def as_tpoly(self):
        """The underlying TPoly when the denominator is trivial, else None."""
        return self.num if self.den.is_one else None

    def __eq__(self, other):
        if isinstance(other, TPoly):
            other = RatFunc(other)
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        if self.den.is_one:
            return f"RatFunc({format_tpoly(self.num)})"
        return f"RatFunc(({format_tpoly(self.num)}) / ({format_tpoly(self.den)}))"


def _coerce(value, p):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, TPoly):
        return RatFunc(value)
    raise TypeError(f"cannot coerce {value!r} into F_p(t)")
