"""Polynomials in the eigenvalue variable X over F_p[t] or F_p(t).

Coefficients are TPoly (ring form) or RatFunc (field form); a given XPoly
uses one kind throughout. Characteristic and minimal polynomials live
here, along with the separability test that decides diagonalizability
over the algebraically closed coefficient completion.
"""

from __future__ import annotations

from .tpoly import RatFunc, TPoly, format_tpoly


class XPoly:
    """Polynomial in X with TPoly or RatFunc coefficients, ascending order."""

    __slots__ = ("p", "c")

    def __init__(self, p, coeffs, _trusted=False):
        if _trusted:
            self.p = p
            self.c = coeffs
            return
        c = list(coeffs)
        while c and c[-1].is_zero:
            c.pop()
        self.p = p
        self.c = tuple(c)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, p):
        return cls(p, (), _trusted=True)

    @classmethod
    def one(cls, p):
        return cls(p, (TPoly.one(p),), _trusted=True)

    @classmethod
    def x(cls, p):
        return cls(p, (TPoly.zero(p), TPoly.one(p)), _trusted=True)

    @classmethod
    def from_tpoly(cls, poly):
        return cls(poly.p, (poly,))

    @classmethod
    def x_minus(cls, root):
        """X - root for a TPoly root."""
        return cls(root.p, (-root, TPoly.one(root.p)))

    # -- queries -------------------------------------------------------------

    @property
    def degree(self):
        return len(self.c) - 1

    @property
    def is_zero(self):
        return not self.c

    def leading(self):
        if not self.c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.c[-1]

    def coeff(self, i):
        if 0 <= i < len(self.c):
            return self.c[i]
        return self._zero_coeff()

    def _zero_coeff(self):
        if self.c and isinstance(self.c[0], RatFunc):
            return RatFunc.zero(self.p)
        return TPoly.zero(self.p)

    def x_valuation(self):
        """Order of vanishing at X = 0; None for the zero polynomial."""
        for i, a in enumerate(self.c):
            if not a.is_zero:
                return i
        return None

    def strip_x(self, m):
        """Divide by X**m (requires the low coefficients to vanish)."""
        assert all(a.is_zero for a in self.c[:m])
        return XPoly(self.p, self.c[m:], _trusted=True)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.p != other.p:
            raise ValueError("mismatched characteristic")

    def __add__(self, other):
        self._check(other)
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, x in enumerate(b):
            c[i] = c[i] + x
        return XPoly(self.p, c)

    def __neg__(self):
        return XPoly(self.p, tuple(-a for a in self.c), _trusted=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        if self.is_zero or other.is_zero:
            return XPoly.zero(self.p)
        zero = self._zero_coeff() if not other.c else None
        c = [None] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if x.is_zero:
                continue
            for j, y in enumerate(other.c):
                if y.is_zero:
                    continue
                term = x * y
                c[i + j] = term if c[i + j] is None else c[i + j] + term
        filler = self._zero_coeff()
        c = [filler if v is None else v for v in c]
        return XPoly(self.p, c)

    def scale(self, coeff):
        if coeff.is_zero:
            return XPoly.zero(self.p)
        return XPoly(self.p, tuple(a * coeff for a in self.c), _trusted=True)

    def shift_x(self, e):
        """Multiply by X**e."""
        if self.is_zero:
            return self
        return XPoly(self.p, (self._zero_coeff(),) * e + self.c, _trusted=True)

    def __pow__(self, e):
        result = XPoly.one(self.p)
        if self.c and isinstance(self.c[0], RatFunc):
            result = result.to_field()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self):
        """Formal derivative in X (coefficients multiplied mod p)."""
        if self.degree <= 0:
            return XPoly.zero(self.p)
        c = [self.c[i].scale(i % self.p) for i in range(1, len(self.c))]
        return XPoly(self.p, c)

    def evaluate(self, value):
        """Horner evaluation; value and coefficients must share a ring."""
        if self.is_zero:
            return value.scale(0) if hasattr(value, "scale") else value * 0
        acc = self.c[-1]
        for a in reversed(self.c[:-1]):
            acc = acc * value + a
        return acc

    # -- ring/field conversions ----------------------------------------------

    def to_field(self):
        """Coefficients as RatFunc."""
        return XPoly(self.p, tuple(
            a if isinstance(a, RatFunc) else RatFunc(a) for a in self.c), _trusted=True)

    def to_ring(self):
        """Coefficients as TPoly; fails if any denominator is non-trivial."""
        out = []
        for a in self.c:
            if isinstance(a, RatFunc):
                poly = a.as_tpoly()
                if poly is None:
                    raise ValueError("coefficient has a non-trivial denominator")
                out.append(poly)
            else:
                out.append(a)
        return XPoly(self.p, tuple(out), _trusted=True)

    def monic(self):
        """Monic normalization over the fraction field."""
        if self.is_zero:
            raise ValueError("zero polynomial cannot be made monic")
        f = self.to_field()
        return f.scale(f.leading().inverse())

    def divmod_field(self, other):
        """Quotient and remainder over F_p(t)."""
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        a = self.to_field()
        b = other.to_field()
        q = XPoly.zero(self.p).to_field()
        inv_lead = b.leading().inverse()
        while not a.is_zero and a.degree >= b.degree:
            factor = a.leading() * inv_lead
            shift = a.degree - b.degree
            term = XPoly(self.p, (factor,), _trusted=True).shift_x(shift)
            q = q + term
            a = a - term * b
        return q, a

    def divides(self, other):
        """True if self divides other over F_p(t)."""
        if self.is_zero:
            return other.is_zero
        return other.divmod_field(self)[1].is_zero

    def __eq__(self, other):
        return isinstance(other, XPoly) and self.p == other.p and self.c == other.c

    def __hash__(self):
        return hash((self.p, self.c))

    def __bool__(self):
        return bool(self.c)

    def __repr__(self):
        return f"XPoly({format_xpoly(self)})"


def xpoly_gcd(f, g):
    """Monic gcd over F_p(t); gcd(f, 0) is the monic form of f."""
    f = f.to_field()
    g = g.to_field()
    while not g.is_zero:
        f, g = g, f.divmod_field(g)[1]
    if f.is_zero:
        return f
    return f.monic()


def xpoly_lcm(f, g):
    if f.is_zero or g.is_zero:
        return XPoly.zero(f.p)
    d = xpoly_gcd(f, g)
    q, r = (f * g).divmod_field(d)
    assert r.is_zero
    return q.monic()


def is_separable_squarefree(f):
    """True iff f has no repeated roots over the algebraic closure.

    Equivalent test: the formal X-derivative is nonzero and gcd(f, f') is
    a unit. In characteristic p a vanishing derivative signals p-th power
    structure or inseparability; both give repeated roots.
    """
    if f.is_zero:
        raise ValueError("zero polynomial")
    fp = f.derivative()
    if fp.is_zero:
        return f.degree == 0
    return xpoly_gcd(f, fp).degree == 0


def _pth_root(f):
    """g with g**p = f, or None. Needs every t-exponent divisible by p too."""
    p = f.p
    coeffs = []
    for i, a in enumerate(f.c):
        if i % p != 0:
            if not a.is_zero:
                return None
            continue
        coeffs.append(a)
    roots = []
    for a in coeffs:
        if isinstance(a, RatFunc):
            num = _tpoly_pth_root(a.num)
            den = _tpoly_pth_root(a.den)
            if num is None or den is None:
                return None
            roots.append(RatFunc(num, den))
        else:
            r = _tpoly_pth_root(a)
            if r is None:
                return None
            roots.append(r)
    return XPoly(p, roots)


def _tpoly_pth_root(poly):
    # a**p = a in F_p, so a p-th power is exactly a polynomial in t**p.
    p = poly.p
    out = []
    for i in range(0, poly.degree + 1):
        a = poly.coeff(i)
        if i % p:
            if a:
                return None
        else:
            out.append(a)
    return TPoly(p, out)


def has_inseparable_factor(f):
    """True iff some irreducible factor of f is inseparable.

    Inseparable factors divide gcd(f, f'); when f' = 0 either f is a p-th
    power (recurse on the root: same factors) or, by the logarithmic
    derivative argument, an inseparable factor must be present.
    """
    if f.is_zero:
        raise ValueError("zero polynomial")
    if f.degree <= 0:
        return False
    fp = f.derivative()
    if fp.is_zero:
        g = _pth_root(f)
        if g is None:
            return True
        return has_inseparable_factor(g)
    d = xpoly_gcd(f, fp)
    if d.degree == 0:
        return False
    return has_inseparable_factor(d)


def format_xpoly(f, balanced=False, var="X"):
    """Readable rendering, highest X power first."""
    if f.is_zero:
        return "0"
    parts = []
    for e in range(f.degree, -1, -1):
        a = f.coeff(e)
        if a.is_zero:
            continue
        if isinstance(a, RatFunc):
            if a.den.is_one:
                text = format_tpoly(a.num, balanced=balanced)
            else:
                text = (f"({format_tpoly(a.num, balanced=balanced)})/"
                        f"({format_tpoly(a.den, balanced=balanced)})")
            single = a.den.is_one and len(a.num.c) - a.num.c.count(0) == 1
        else:
            text = format_tpoly(a, balanced=balanced)
            single = len(a.c) - a.c.count(0) == 1
        if e == 0:
            body = text if single else f"({text})"
        else:
            xpart = f"{var}^{e}" if e > 1 else var
            if text == "1":
                body = xpart
            elif text == "-1":
                body = f"-{xpart}"
            elif single:
                body = f"{text}*{xpart}"
            else:
                body = f"({text})*{xpart}"
        parts.append(body)
    out = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out
