"""The Atkin U_t operator on the harmonic-cocycle basis of weight-k cusp
forms for Gamma_1(t).

The basis cocycles chi_0 .. chi_{k-2} split into classes C_j by index
mod q-1; each class is U_t-stable, so the full operator is block diagonal.
Entries are signed binomial coefficients mod p, and column b of the class
block carries the power t^(index_b + 1). Everything is built from two
equivalent entry formulas: a general one taking the weight k explicitly,
and the specialized one for blocks with k = 2j + 2 + (n-1)(q-1) (the
Gamma_0(t)-invariant situation); a test suite cross-checks the two.

Normalization: the operator is rescaled by t^(k-m) so the type m never
appears in the matrices. It only selects Gamma_0 classes and shifts the
reported slopes on request.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binomial import binom_mod_p
from .fields import PrimePower
from .linalg import TMatrix
from .tpoly import TPoly


@dataclass(frozen=True)
class WeightInstance:
    """One (q, k, m) configuration; m may stay unset until it matters."""

    q: PrimePower
    k: int
    m: int | None = None

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("weight must be at least 2")

    @property
    def dim_cusp(self):
        """dim of the weight-k cusp forms for Gamma_1(t)."""
        return self.k - 1

    @property
    def dim_double_cusp(self):
        return self.k - 3 if self.k > 2 else 0


@dataclass(frozen=True)
class BlockDescriptor:
    """One class C_j inside a weight-k instance."""

    j: int
    size: int
    member_indices: tuple
    is_gamma0: bool
    double_cusp_range: tuple

    def positions_in_double_cusp(self):
        """Positions (within the block) of members surviving in S^2."""
        keep = set(self.double_cusp_range)
        return tuple(i for i, member in enumerate(self.member_indices) if member in keep)


def class_size(j, k, q):
    """|C_j|: the largest n >= 0 with j + (n-1)(q-1) <= k-2."""
    q = _coerce_q(q)
    if not 0 <= j <= q.q - 2:
        raise ValueError(f"class representative {j} outside [0, {q.q - 2}]")
    if k < 2:
        raise ValueError("weight must be at least 2")
    if j > k - 2:
        return 0
    return (k - 2 - j) // (q.q - 1) + 1


def gamma0_classes(k, q, m=None):
    """Classes C_j descending to Gamma_0(t), i.e. k = 2j + 2 mod q-1.

    For even q the solution is unique; for odd q there are two (or none,
    when k is odd). Supplying the type m keeps only j = m - 1 mod q-1 and
    yields [] when k != 2m mod q-1 (no nonzero forms of that type).
    """
    q = _coerce_q(q)
    if k < 2:
        raise ValueError("weight must be at least 2")
    modulus = q.q - 1
    if modulus == 1:
        solutions = [0]
    elif q.p == 2:
        # q-1 odd, 2 invertible
        inv2 = pow(2, -1, modulus)
        solutions = [((k - 2) * inv2) % modulus]
    else:
        if (k - 2) % 2 != 0:
            solutions = []
        else:
            half = modulus // 2
            j0 = ((k - 2) // 2) % half
            solutions = sorted({j0, j0 + half})
    if m is not None:
        if (k - 2 * m) % modulus != 0:
            return []
        solutions = [j for j in solutions if (j - (m - 1)) % modulus == 0]
    return solutions


def entry_coeff(a, b, j, k, q):
    """F_p coefficient at row a, column b of the C_j block for weight k.

    Row a means the coefficient of chi_{j+(a-1)(q-1)} in the image of
    chi_{j+(b-1)(q-1)}; the t power on the column is not included. The
    diagonal is -(-1)^(i_a+1) C(k-2-i_a, i_a); off the diagonal it is
    -[C(k-2-i_a, (b-a)(q-1)) + (-1)^(i_b+1) C(k-2-i_a, i_b)], where
    i_x = j + (x-1)(q-1) and out-of-range binomials vanish.
    """
    q = _coerce_q(q)
    p = q.p
    field = q.field
    i_a = j + (a - 1) * (q.q - 1)
    i_b = j + (b - 1) * (q.q - 1)
    top = k - 2 - i_a
    assert top >= 0, "row member outside the basis range"
    if a == b:
        sign = field.sign(i_a + 1)
        return field.neg(field.mul(sign, binom_mod_p(top, i_a, p)))
    first = binom_mod_p(top, (b - a) * (q.q - 1), p)
    second = field.mul(field.sign(i_b + 1), binom_mod_p(top, i_b, p))
    return field.neg(field.add(first, second))


def block_coeff(a, b, j, n, q):
    """Entry of the coefficient block M(j, n, q), weight k = 2j+2+(n-1)(q-1).

    Diagonal: (-1)^(j+2) C(j+(n-a)(q-1), j+(a-1)(q-1)); otherwise
    -[C(j+(n-a)(q-1), j+(n-b)(q-1)) + (-1)^(j+1) C(j+(n-a)(q-1), j+(b-1)(q-1))].
    """
    q = _coerce_q(q)
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"entry ({a}, {b}) outside a {n}x{n} block")
    if not 0 <= j <= q.q - 2:
        raise ValueError(f"class representative {j} outside [0, {q.q - 2}]")
    p = q.p
    field = q.field
    top = j + (n - a) * (q.q - 1)
    if a == b:
        return field.mul(field.sign(j + 2), binom_mod_p(top, j + (a - 1) * (q.q - 1), p))
    first = binom_mod_p(top, j + (n - b) * (q.q - 1), p)
    second = field.mul(field.sign(j + 1), binom_mod_p(top, j + (b - 1) * (q.q - 1), p))
    return field.neg(field.add(first, second))


def column_exponents(j, n, q):
    """t exponents carried by the block columns: j+1+(b-1)(q-1)."""
    q = _coerce_q(q)
    return [j + 1 + (b - 1) * (q.q - 1) for b in range(1, n + 1)]


def block_matrix(j, n, q, with_t=True):
    """M(j, n, q, t) (or the coefficient matrix M(j, n, q) when with_t=False)."""
    q = _coerce_q(q)
    if n < 1:
        raise ValueError("block size must be at least 1")
    p = q.p
    exps = column_exponents(j, n, q)
    rows = []
    for a in range(1, n + 1):
        row = []
        for b in range(1, n + 1):
            c = block_coeff(a, b, j, n, q)
            row.append(TPoly.t_power(p, exps[b - 1], c) if with_t else TPoly.const(p, c))
        rows.append(row)
    return TMatrix(p, rows)


def make_descriptor(j, k, q):
    """BlockDescriptor of C_j inside weight k."""
    q = _coerce_q(q)
    n = class_size(j, k, q)
    members = tuple(j + h * (q.q - 1) for h in range(n))
    is_g0 = (k - 2 * j - 2) % (q.q - 1) == 0
    dc = tuple(i for i in members if 1 <= i <= k - 3)
    return BlockDescriptor(j, n, members, is_g0, dc)


def block_matrix_for_weight(j, k, q, with_t=True):
    """The C_j block inside weight k, using the general entry formula."""
    q = _coerce_q(q)
    p = q.p
    desc = make_descriptor(j, k, q)
    n = desc.size
    rows = []
    for a in range(1, n + 1):
        row = []
        for b in range(1, n + 1):
            c = entry_coeff(a, b, j, k, q)
            member_b = desc.member_indices[b - 1]
            row.append(TPoly.t_power(p, member_b + 1, c) if with_t else TPoly.const(p, c))
        rows.append(row)
    return TMatrix(p, rows), desc


def full_ut_matrix(inst):
    """The (k-1) x (k-1) matrix of U_t in the class-ordered basis.

    Basis order is C_0, C_1, ..., C_{q-2} with members ascending, so the
    matrix is block diagonal with the class blocks on the diagonal.
    Returns (matrix, descriptors) with descriptors in the same order.
    """
    q = inst.q
    k = inst.k
    blocks = []
    descriptors = []
    for j in range(q.q - 1):
        mat, desc = block_matrix_for_weight(j, k, q)
        descriptors.append(desc)
        if desc.size:
            blocks.append(mat)
    full = TMatrix.block_diag(q.p, blocks) if blocks else TMatrix.zero(q.p, 0)
    assert full.nrows == k - 1
    return full, descriptors


def double_cusp_restriction(desc, mat):
    """Restrict a class block to the members surviving in double cusp forms."""
    keep = desc.positions_in_double_cusp()
    return mat.submatrix(keep, keep)


def _coerce_q(q):
    return q if isinstance(q, PrimePower) else PrimePower.from_q(q)
