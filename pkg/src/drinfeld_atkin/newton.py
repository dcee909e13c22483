"""t-adic Newton polygons: valuations of polynomial roots with multiplicity.

The zero eigenvalue has no finite valuation; its X-multiplicity is kept in
a separate infinite bucket and never mixed into slope counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .tpoly import RatFunc, TPoly, tpoly_gcd
from .xpoly import XPoly


@dataclass(frozen=True)
class NewtonSlope:
    """One slope of the polygon: valuation, number of roots carrying it."""

    slope: Fraction | None
    multiplicity: int
    is_infinite: bool = False

    def __post_init__(self):
        assert self.multiplicity > 0
        assert (self.slope is None) == self.is_infinite


def _clear_denominators(f):
    """Scale an XPoly with RatFunc coefficients into F_p[t][X].

    Multiplying by a common denominator shifts all coefficient valuations
    equally, which leaves every polygon slope unchanged.
    """
    p = f.p
    den = TPoly.one(p)
    for a in f.c:
        if isinstance(a, RatFunc) and not a.den.is_one:
            den = den * (a.den // tpoly_gcd(den, a.den))
    out = []
    for a in f.c:
        if isinstance(a, RatFunc):
            v = a * RatFunc(den)
            poly = v.as_tpoly()
            assert poly is not None
            out.append(poly)
        else:
            out.append(a * den)
    return XPoly(p, out)


def newton_slopes(f):
    """Slopes of the t-adic Newton polygon of f, multiplicities summing to deg f.

    The X-multiplicity m at 0 is reported as one infinite slope; for the
    cofactor, the lower convex hull of (i, v_t(c_i)) is walked and each
    segment contributes its horizontal length at valuation -slope.
    """
    if f.is_zero:
        raise ValueError("newton_slopes of the zero polynomial")
    if any(isinstance(a, RatFunc) for a in f.c):
        f = _clear_denominators(f)
    out = []
    m = f.x_valuation()
    if m > 0:
        out.append(NewtonSlope(None, m, is_infinite=True))
        f = f.strip_x(m)
    if f.degree == 0:
        return out
    points = [(i, a.valuation()) for i, a in enumerate(f.c) if not a.is_zero]
    hull = lower_hull(points)
    finite = []
    for (i1, v1), (i2, v2) in zip(hull, hull[1:]):
        alpha = Fraction(v1 - v2, i2 - i1)
        finite.append(NewtonSlope(alpha, i2 - i1))
    finite.sort(key=lambda s: s.slope)
    total = m + sum(s.multiplicity for s in finite)
    assert total == m + f.degree
    return finite + out


def lower_hull(points):
    """Vertices of the lower convex hull of integer points sorted by x."""
    hull = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            x3, y3 = pt
            # pop if the middle point is on or above the chord
            if (x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def slopes_as_dict(slopes):
    """{Fraction: multiplicity} for finite slopes plus the None key for X=0."""
    out = {}
    for s in slopes:
        key = None if s.is_infinite else s.slope
        out[key] = out.get(key, 0) + s.multiplicity
    return out
