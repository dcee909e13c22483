"""Dense exact linear algebra over F_p[t] and F_p(t).

char_poly is the division-free principal-minor recurrence, so every
intermediate stays in F_p[t]; the naive cofactor determinant doubles as
an independent oracle on small matrices. Minimal polynomials come from
per-vector Krylov relations over the fraction field, and kernels from
plain Gaussian elimination with exact rational-function arithmetic.
"""

from __future__ import annotations

from .tpoly import RatFunc, TPoly
from .xpoly import XPoly, xpoly_lcm


class TMatrix:
    """Immutable dense matrix over F_p[t]."""

    __slots__ = ("p", "nrows", "ncols", "rows")

    def __init__(self, p, rows):
        rows = tuple(tuple(r) for r in rows)
        self.p = p
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0
        if any(len(r) != self.ncols for r in rows):
            raise ValueError("ragged rows")
        for r in rows:
            for x in r:
                if not isinstance(x, TPoly) or x.p != p:
                    raise ValueError("entries must be TPoly over the same field")
        self.rows = rows

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, p, nrows, ncols=None):
        ncols = nrows if ncols is None else ncols
        z = TPoly.zero(p)
        return cls(p, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, p, n):
        z, o = TPoly.zero(p), TPoly.one(p)
        return cls(p, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def block_diag(cls, p, blocks):
        n = sum(b.nrows for b in blocks)
        z = TPoly.zero(p)
        rows = [[z] * n for _ in range(n)]
        off = 0
        for b in blocks:
            assert b.nrows == b.ncols
            for i in range(b.nrows):
                for j in range(b.ncols):
                    rows[off + i][off + j] = b.rows[i][j]
            off += b.nrows
        return cls(p, rows)

    # -- queries / algebra -----------------------------------------------------

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def entry(self, i, j):
        return self.rows[i][j]

    def submatrix(self, row_idx, col_idx):
        return TMatrix(self.p, [[self.rows[i][j] for j in col_idx] for i in row_idx])

    def __eq__(self, other):
        return (isinstance(other, TMatrix) and self.p == other.p
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.p, self.rows))

    def __add__(self, other):
        assert self.nrows == other.nrows and self.ncols == other.ncols
        return TMatrix(self.p, [[a + b for a, b in zip(ra, rb)]
                                for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        assert self.nrows == other.nrows and self.ncols == other.ncols
        return TMatrix(self.p, [[a - b for a, b in zip(ra, rb)]
                                for ra, rb in zip(self.rows, other.rows)])

    def __mul__(self, other):
        assert self.ncols == other.nrows
        z = TPoly.zero(self.p)
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = z
                for l in range(self.ncols):
                    a = self.rows[i][l]
                    b = other.rows[l][j]
                    if not (a.is_zero or b.is_zero):
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return TMatrix(self.p, out)

    def scale(self, poly):
        return TMatrix(self.p, [[x * poly for x in r] for r in self.rows])

    def apply(self, vec):
        """Matrix times coordinate vector (list of TPoly/RatFunc)."""
        out = []
        for row in self.rows:
            acc = None
            for a, v in zip(row, vec):
                if a.is_zero:
                    continue
                term = v * a if isinstance(v, RatFunc) else a * v
                acc = term if acc is None else acc + term
            if acc is None:
                acc = vec[0].scale(0) if vec else TPoly.zero(self.p)
            out.append(acc)
        return out


def char_poly(m):
    """det(M - X*Id) as an XPoly over F_p[t], leading coefficient (-1)^n.

    Division-free recurrence on leading principal minors: with
    A_r = [[B, S], [R, a]] and q(X) = det(X*Id - B),

        det(X*Id - A_r) = (X - a) q(X) - sum_m X^m sum_{i>m} q_i sigma_{i-1-m}

    where sigma_l = R B^l S, so coefficients never leave F_p[t].
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    p = m.p
    n = m.nrows
    zero = TPoly.zero(p)
    q = [TPoly.one(p)]
    for r in range(1, n + 1):
        a = m.rows[r - 1][r - 1]
        # sigma_l = R B^l S for l = 0 .. r-2
        sigma = []
        if r >= 2:
            R = m.rows[r - 1][: r - 1]
            u = [m.rows[i][r - 1] for i in range(r - 1)]
            for _ in range(r - 1):
                acc = zero
                for x, y in zip(R, u):
                    if not (x.is_zero or y.is_zero):
                        acc = acc + x * y
                sigma.append(acc)
                nxt = []
                for i in range(r - 1):
                    s = zero
                    row = m.rows[i]
                    for l in range(r - 1):
                        x = row[l]
                        y = u[l]
                        if not (x.is_zero or y.is_zero):
                            s = s + x * y
                    nxt.append(s)
                u = nxt
        new = [zero] * (r + 1)
        # (X - a) * q
        for i, qi in enumerate(q):
            new[i + 1] = new[i + 1] + qi
            if not (a.is_zero or qi.is_zero):
                new[i] = new[i] - a * qi
        # - sum over X^m
        for mm in range(r - 1):
            acc = zero
            for i in range(mm + 1, r):
                qi = q[i]
                s = sigma[i - 1 - mm]
                if not (qi.is_zero or s.is_zero):
                    acc = acc + qi * s
            new[mm] = new[mm] - acc
        q = new
    if n % 2:
        q = [-c for c in q]
    return XPoly(p, q)


def det_cofactor(rows):
    """Cofactor-expansion determinant over any commutative ring elements."""
    n = len(rows)
    assert all(len(r) == n for r in rows)
    if n == 0:
        raise ValueError("empty determinant")
    if n == 1:
        return rows[0][0]
    first = rows[0]
    minor_rows = rows[1:]
    total = None
    for j in range(n):
        a = first[j]
        if hasattr(a, "is_zero") and a.is_zero:
            continue
        sub = [[row[l] for l in range(n) if l != j] for row in minor_rows]
        term = a * det_cofactor(sub)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        z = first[0]
        return z - z
    return total


def char_poly_naive(m):
    """det(M - X*Id) by cofactor expansion; the small-matrix oracle."""
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    p = m.p
    x = XPoly.x(p)
    rows = []
    for i in range(m.nrows):
        row = []
        for j in range(m.ncols):
            f = XPoly.from_tpoly(m.rows[i][j])
            if i == j:
                f = f - x
            row.append(f)
        rows.append(row)
    return det_cofactor(rows)


def evaluate_at_matrix(f, m):
    """f(M) for an XPoly with TPoly coefficients."""
    assert m.is_square
    p = m.p
    acc = TMatrix.zero(p, m.nrows)
    ident = TMatrix.identity(p, m.nrows)
    for c in reversed(f.c):
        acc = acc * m + ident.scale(c)
    return acc


# -- field linear algebra (RatFunc coordinates) --------------------------------


def field_matrix(m):
    """TMatrix to nested RatFunc lists."""
    return [[RatFunc(x) for x in row] for row in m.rows]


def mat_mul_field(a, b):
    p = a[0][0].p
    out = []
    for i in range(len(a)):
        row = []
        for j in range(len(b[0])):
            acc = RatFunc.zero(p)
            for l in range(len(b)):
                x = a[i][l]
                y = b[l][j]
                if not (x.is_zero or y.is_zero):
                    acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def mat_scale_field(a, c):
    return [[x * c for x in row] for row in a]


def mat_add_field(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def identity_field(p, n):
    return [[RatFunc.one(p) if i == j else RatFunc.zero(p) for j in range(n)]
            for i in range(n)]


def rref(rows):
    """Reduced row echelon form in place; returns pivot column list."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(rows)):
            if not rows[i][c].is_zero:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def kernel_basis(rows):
    """Basis of the right kernel of a RatFunc matrix."""
    if not rows:
        return []
    p = rows[0][0].p
    ncols = len(rows[0])
    work = [list(r) for r in rows]
    pivots = rref(work)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [RatFunc.zero(p)] * ncols
        vec[fc] = RatFunc.one(p)
        for r, pc in enumerate(pivots):
            # row r reads: x_pc + sum_{c>pc} a_c x_c = 0
            vec[pc] = -work[r][fc]
        basis.append(vec)
    return basis


def solve_in_span(basis, target):
    """Coefficients expressing target in the span of basis vectors, or None."""
    if not basis:
        return [] if all(x.is_zero for x in target) else None
    p = basis[0][0].p
    n = len(target)
    k = len(basis)
    rows = [[basis[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    pivots = rref(rows)
    if k in pivots:
        return None
    coeffs = [RatFunc.zero(p)] * k
    for r, pc in enumerate(pivots):
        coeffs[pc] = rows[r][k]
    # consistency: rows beyond the pivots must be zero
    for r in range(len(pivots), n):
        if not rows[r][k].is_zero:
            return None
    return coeffs


def rank(rows):
    work = [list(r) for r in rows]
    return len(rref(work))


def min_poly(m):
    """Least-degree monic annihilator of M, with coefficients in F_p[t].

    Per-vector minimal polynomials from Krylov relations over F_p(t),
    combined by lcm; the result divides char_poly and is integral by the
    Gauss lemma, so the TPoly form always exists.
    """
    if not m.is_square:
        raise ValueError("minimal polynomial of a non-square matrix")
    p = m.p
    n = m.nrows
    result = XPoly.one(p).to_field()
    for start in range(n):
        e = [RatFunc.one(p) if i == start else RatFunc.zero(p) for i in range(n)]
        if not _acts_as_zero(result, m, e):
            local = _vector_min_poly(m, e)
            result = xpoly_lcm(result, local).to_field()
            if result.degree == n:
                break
    return result.monic().to_ring()


def _acts_as_zero(f, m, vec):
    acc = [v.scale(0) for v in vec]
    power = list(vec)
    for c in f.c:
        if not c.is_zero:
            acc = [a + c * v for a, v in zip(acc, power)]
        power = m.apply(power)
    return all(a.is_zero for a in acc)


def _vector_min_poly(m, vec):
    p = m.p
    n = len(vec)
    # Echelon of Krylov vectors, remembering the combination that built each row.
    echelon = []  # (pivot index, reduced vector, combo over X powers)
    v = list(vec)
    power = 0
    while True:
        combo = [RatFunc.zero(p)] * (power + 1)
        combo[power] = RatFunc.one(p)
        red = list(v)
        for piv, row, row_combo in echelon:
            if not red[piv].is_zero:
                f = red[piv]
                red = [x - f * y for x, y in zip(red, row)]
                for i, c in enumerate(row_combo):
                    combo[i] = combo[i] - f * c
        piv = next((i for i, x in enumerate(red) if not x.is_zero), None)
        if piv is None:
            return XPoly(p, combo).monic()
        inv = red[piv].inverse()
        red = [x * inv for x in red]
        combo = [c * inv for c in combo]
        combo += [RatFunc.zero(p)] * (power + 1 - len(combo))
        echelon.append((piv, red, combo))
        v = m.apply(v)
        power += 1
        assert power <= n, "Krylov chain exceeded the dimension"
