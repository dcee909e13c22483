"""Spectral analysis of U_t: slopes, diagonalizability, Fricke and trace
maps, and the new/old decomposition of the Gamma_0(t)-invariant blocks.

Slope conventions: the builders normalize U_t by t^(k-m), so newform
eigenvalues square to t^k and their slope is k/2. denormalize_slopes
shifts every finite slope by m-k to recover the typed convention.

The old part is reached through the quotient by the newform space
Ker(Tr) n Ker(Tr'), not through level-one forms directly; the nonzero
eigenvalues on that quotient are the level-one Hecke eigenvalues. If the
newform space ever met the old part nontrivially the quotient could
misattribute multiplicities; dimension bookkeeping in the reports guards
that assumption.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .hecke import (WeightInstance, block_matrix_for_weight, full_ut_matrix,
                    gamma0_classes, make_descriptor)
from .linalg import (TMatrix, char_poly, det_cofactor, field_matrix,
                     identity_field, kernel_basis, mat_add_field,
                     mat_mul_field, mat_scale_field, min_poly, rref,
                     solve_in_span)
from .newton import NewtonSlope, newton_slopes
from .tpoly import RatFunc, TPoly
from .xpoly import XPoly, has_inseparable_factor, is_separable_squarefree, xpoly_lcm

SEPARABLE = "separable-minpoly"
INSEPARABLE = "inseparable-eigenvalue"
REPEATED = "repeated-root-minpoly"

NEW_OLD_CAVEAT = ("old multiplicities are read off the quotient by the newform "
                  "space; they would be misattributed if newforms ever met the "
                  "old part nontrivially")


@dataclass
class DiagVerdict:
    diagonalizable: bool
    reason: str
    min_poly: XPoly


@dataclass
class BlockSpectrum:
    descriptor: object
    char: XPoly
    slopes: list
    verdict: DiagVerdict


@dataclass
class SpectralReport:
    instance: WeightInstance
    per_block: list
    gamma0_verdict: DiagVerdict | None
    slope_convention: str = "normalized"


@dataclass(frozen=True)
class CocycleVector:
    """Coordinates with respect to the basis cocycles chi_0 .. chi_{k-2}."""

    instance: WeightInstance
    coords: tuple

    def __post_init__(self):
        assert len(self.coords) == self.instance.k - 1


@dataclass
class NewOldSplit:
    instance: WeightInstance
    descriptor: object
    fricke: list
    trace: list
    twisted_trace: list
    new_space: list  # CocycleVector
    old_quotient_char_poly: XPoly
    dim_ker_trace: int
    dim_ker_twisted: int
    caveat: str = NEW_OLD_CAVEAT

    @property
    def new_dim(self):
        return len(self.new_space)

    @property
    def old_dim(self):
        return self.descriptor.size - self.new_dim


def verdict_from_min_poly(mp):
    """Diagonalizable over the closed completion iff mp is separable squarefree."""
    if is_separable_squarefree(mp):
        return DiagVerdict(True, SEPARABLE, mp)
    reason = INSEPARABLE if has_inseparable_factor(mp) else REPEATED
    return DiagVerdict(False, reason, mp)


def analyze(inst):
    """Per-block characteristic polynomials, slopes and verdicts for one weight."""
    q = inst.q
    per_block = []
    gamma0_min = None
    selected = set(gamma0_classes(inst.k, q, inst.m))
    for j in range(q.q - 1):
        mat, desc = block_matrix_for_weight(j, inst.k, q)
        if desc.size == 0:
            continue
        cp = char_poly(mat)
        slopes = newton_slopes(cp)
        mp = min_poly(mat)
        verdict = verdict_from_min_poly(mp)
        per_block.append(BlockSpectrum(desc, cp, slopes, verdict))
        if j in selected:
            gamma0_min = mp if gamma0_min is None else xpoly_lcm(gamma0_min, mp).to_ring()
    gamma0_verdict = None
    if gamma0_min is not None:
        gamma0_verdict = verdict_from_min_poly(gamma0_min)
    elif selected:
        # selected classes exist but are empty: nothing to diagonalize
        gamma0_verdict = DiagVerdict(True, SEPARABLE, XPoly.one(q.p))
    total = sum(b.char.degree for b in per_block)
    assert total == inst.k - 1
    return SpectralReport(inst, per_block, gamma0_verdict)


def denormalize_slopes(report):
    """Shift every finite slope by m - k (typed convention); not idempotent."""
    if report.slope_convention != "normalized":
        raise ValueError("slopes are already in the typed convention")
    inst = report.instance
    if inst.m is None:
        raise ValueError("the typed convention needs the type m")
    shift = Fraction(inst.m - inst.k)
    out_blocks = []
    for b in report.per_block:
        shifted = [s if s.is_infinite else NewtonSlope(s.slope + shift, s.multiplicity)
                   for s in b.slopes]
        out_blocks.append(BlockSpectrum(b.descriptor, b.char, shifted, b.verdict))
    return SpectralReport(inst, out_blocks, report.gamma0_verdict, "typed")


# -- Fricke involution and trace maps -----------------------------------------


def ut_matrix_natural(inst):
    """U_t on the basis in natural index order chi_0, ..., chi_{k-2}."""
    q = inst.q
    p = q.p
    k = inst.k
    z = TPoly.zero(p)
    rows = [[z] * (k - 1) for _ in range(k - 1)]
    for j in range(q.q - 1):
        mat, desc = block_matrix_for_weight(j, k, q)
        for a, ia in enumerate(desc.member_indices):
            for b, ib in enumerate(desc.member_indices):
                rows[ia][ib] = mat.rows[a][b]
    return TMatrix(p, rows)


def fricke_matrix(inst):
    """Matrix over F_p(t) sending chi_i to (-1)^m t^(i+1+m-k) chi_(k-2-i)."""
    k, m = inst.k, _require_m(inst)
    p = inst.q.p
    sign = inst.q.field.sign(m)
    rows = [[RatFunc.zero(p)] * (k - 1) for _ in range(k - 1)]
    for i in range(k - 1):
        rows[k - 2 - i][i] = RatFunc.t_power(p, i + 1 + m - k, sign)
    return rows


def fricke_matrix_cleared(inst):
    """Integral form: (TMatrix F, e) with the true Fricke matrix t^-e F, e = k-m-1."""
    k, m = inst.k, _require_m(inst)
    p = inst.q.p
    sign = inst.q.field.sign(m)
    z = TPoly.zero(p)
    rows = [[z] * (k - 1) for _ in range(k - 1)]
    for i in range(k - 1):
        rows[k - 2 - i][i] = TPoly.t_power(p, i, sign)
    return TMatrix(p, rows), k - m - 1


def trace_matrices(inst):
    """(Tr, Tr') on the cocycle basis: Tr = Id + t^-m U Fr, Tr' = Fr + t^(m-k) U."""
    k, m = inst.k, _require_m(inst)
    p = inst.q.p
    u = field_matrix(ut_matrix_natural(inst))
    fr = fricke_matrix(inst)
    tr = mat_add_field(identity_field(p, k - 1),
                       mat_scale_field(mat_mul_field(u, fr), RatFunc.t_power(p, -m)))
    tr2 = mat_add_field(fr, mat_scale_field(u, RatFunc.t_power(p, m - k)))
    return tr, tr2


def _require_m(inst):
    if inst.m is None:
        raise ValueError("this computation needs the type m")
    return inst.m


def _restrict(rows, positions):
    return [[rows[i][j] for j in positions] for i in positions]


def new_old_split(inst):
    """Newforms as Ker(Tr) n Ker(Tr') inside the Gamma_0 class of type m,
    plus the characteristic polynomial of U_t on the quotient (the old part).
    """
    q = inst.q
    k, m = inst.k, _require_m(inst)
    p = q.p
    classes = gamma0_classes(k, q, m)
    if not classes:
        raise ValueError(f"no Gamma_0(t) forms: k != 2m mod q-1 for k={k}, m={m}")
    j = classes[0]
    desc = make_descriptor(j, k, q)
    if desc.size == 0:
        raise ValueError(f"the Gamma_0 class C_{j} is empty at weight {k}")
    positions = list(desc.member_indices)

    u_full = field_matrix(ut_matrix_natural(inst))
    fr_full = fricke_matrix(inst)
    tr_full, tr2_full = trace_matrices(inst)

    u = _restrict(u_full, positions)
    tr = _restrict(tr_full, positions)
    tr2 = _restrict(tr2_full, positions)

    dim_ker_tr = len(kernel_basis(tr))
    dim_ker_tr2 = len(kernel_basis(tr2))
    new_block = kernel_basis(tr + tr2)
    assert dim_ker_tr >= len(new_block) and dim_ker_tr2 >= len(new_block)

    # U_t-stability of the newform space, and the squared action t^k Id on it
    tk = RatFunc.t_power(p, k)
    for v in new_block:
        uv = _apply_field(u, v)
        if solve_in_span(new_block, uv) is None:
            raise RuntimeError("newform space is not U_t-stable: entry formula bug")
        uuv = _apply_field(u, uv)
        assert all((x - tk * y).is_zero for x, y in zip(uuv, v)), \
            "U_t^2 != t^k on the newform space"

    quotient = _quotient_matrix(u, new_block, p)
    old_char = _char_poly_field(quotient, p)

    new_vectors = []
    for v in new_block:
        coords = [RatFunc.zero(p)] * (k - 1)
        for pos, value in zip(positions, v):
            coords[pos] = value
        new_vectors.append(CocycleVector(inst, tuple(coords)))

    return NewOldSplit(inst, desc, fr_full, tr_full, tr2_full, new_vectors,
                       old_char, dim_ker_tr, dim_ker_tr2)


def _apply_field(rows, vec):
    p = vec[0].p
    out = []
    for row in rows:
        acc = RatFunc.zero(p)
        for a, v in zip(row, vec):
            if not (a.is_zero or v.is_zero):
                acc = acc + a * v
        out.append(acc)
    return out


def _quotient_matrix(u, new_basis, p):
    """Matrix of U_t on (block space / span(new_basis)) in complement coordinates."""
    n = len(u)
    nu = len(new_basis)
    if nu == n:
        return []
    work = [list(v) for v in new_basis]
    pivots = rref(work)
    pivot_set = set(pivots)
    complement = [c for c in range(n) if c not in pivot_set]
    # columns: new basis vectors then complement unit vectors
    cols = [list(v) for v in new_basis]
    for c in complement:
        e = [RatFunc.zero(p)] * n
        e[c] = RatFunc.one(p)
        cols.append(e)
    out = [[None] * len(complement) for _ in range(len(complement))]
    for idx, c in enumerate(complement):
        e = [RatFunc.zero(p)] * n
        e[c] = RatFunc.one(p)
        image = _apply_field(u, e)
        coeffs = solve_in_span(cols, image)
        assert coeffs is not None, "block coordinates failed to span"
        for r in range(len(complement)):
            out[r][idx] = coeffs[nu + r]
    return out


def _char_poly_field(rows, p):
    """det(Q - X Id) for a small matrix over F_p(t), via cofactor expansion."""
    n = len(rows)
    if n == 0:
        return XPoly.one(p)
    x = XPoly.x(p).to_field()
    cells = []
    for i in range(n):
        row = []
        for jj in range(n):
            f = XPoly(p, (rows[i][jj],))
            if i == jj:
                f = f - x
            row.append(f)
        cells.append(row)
    f = det_cofactor(cells)
    try:
        return f.to_ring()
    except ValueError:
        return f


@dataclass
class OldEigenReport:
    zero_multiplicity: int
    factors: list  # (XPoly factor over F_p[t] or F_p(t), multiplicity)
    unfactored: XPoly | None

    def eigenvalues(self):
        """(eigenvalue, multiplicity) for the linear factors X - lambda."""
        out = []
        for f, mult in self.factors:
            if f.degree == 1:
                lead = f.coeff(1)
                root = -(f.coeff(0) * lead.inverse() if isinstance(lead, RatFunc)
                         else f.coeff(0))
                out.append((root, mult))
        return out


def old_eigen_extract(split_or_inst):
    """Nonzero eigenvalue factors of the old quotient.

    Strips the X^s factor, then peels linear factors: directly in degree
    one, otherwise by trying monomial roots c t^a suggested by the Newton
    polygon. Whatever resists (needing a genuine factorization) is
    returned unfactored.
    """
    split = split_or_inst
    if isinstance(split_or_inst, WeightInstance):
        split = new_old_split(split_or_inst)
    f = split.old_quotient_char_poly
    p = f.p
    if f.is_zero:
        raise ValueError("zero characteristic polynomial")
    s = f.x_valuation()
    g = f.strip_x(s)
    if g.degree == 0:
        return OldEigenReport(s, [], None)
    g = g.monic()
    factors = []
    while g.degree >= 1:
        if g.degree == 1:
            factors.append(g.to_field().monic())
            g = XPoly.one(p).to_field()
            break
        root = _find_monomial_root(g)
        if root is None:
            break
        lin = (XPoly.x(p) - XPoly.from_tpoly(root)).to_field()
        quo, rem = g.divmod_field(lin)
        assert rem.is_zero
        factors.append(lin)
        g = quo
    merged = []
    for f0 in factors:
        for i, (f1, mult) in enumerate(merged):
            if f0 == f1:
                merged[i] = (f1, mult + 1)
                break
        else:
            merged.append((f0, 1))
    leftovers = None if g.degree == 0 else g
    return OldEigenReport(s, merged, leftovers)


def _find_monomial_root(g):
    p = g.p
    for slope in newton_slopes(g):
        if slope.is_infinite or slope.slope.denominator != 1:
            continue
        e = int(slope.slope)
        if e < 0:
            continue
        for c in range(1, p):
            cand = TPoly.t_power(p, e, c)
            value = g.evaluate(RatFunc(cand))
            if value.is_zero:
                return cand
    return None
