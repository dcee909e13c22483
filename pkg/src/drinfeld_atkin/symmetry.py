"""Structural validators for the class blocks M(j, n, q).

verify_symmetries checks the proved entry relations (column mirror, the
diagonal/antidiagonal link, the central column for odd n, constant
antidiagonal tail, vanishing below the antidiagonal); a failure would mean
the entry formulas are wrong, so the suite treats any failure as a bug.

check_theorem_shape classifies a block against the closed forms that hold
in the antidiagonal range n <= j+1, the j = 0 range n <= q+2, and the
n = j+2 pattern for even j >= 2; anything else reports its deviation set
from the nearest template.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .binomial import binom_mod_p
from .fields import PrimePower
from .hecke import block_coeff, _coerce_q


@dataclass
class SymmetryReport:
    block: tuple  # (j, n, q)
    checks: dict = field(default_factory=dict)  # id -> (passed, counterexample)

    @property
    def all_pass(self):
        return all(ok for ok, _ in self.checks.values())


def verify_symmetries(j, n, q):
    """Run the five entry symmetries on M(j, n, q)."""
    q = _coerce_q(q)
    p = q.p
    fld = q.field
    m = [[block_coeff(a, b, j, n, q) for b in range(1, n + 1)] for a in range(1, n + 1)]

    def entry(a, b):
        return m[a - 1][b - 1]

    report = SymmetryReport((j, n, q.q))
    sign_j1 = fld.sign(j + 1)
    sign_j2 = fld.sign(j + 2)

    # 1. column mirror: m[a][n+1-b] = (-1)^(j+1) m[a][b] off diagonal and antidiagonal
    ok, bad = True, None
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a == b or a == n + 1 - b:
                continue
            if entry(a, n + 1 - b) != fld.mul(sign_j1, entry(a, b)):
                ok, bad = False, (a, b)
                break
        if not ok:
            break
    report.checks["cols"] = (ok, bad)

    # 2. antidiagonal vs diagonal: m[a][n+1-a] = (-1)^(j+1) (m[a][a] - 1)
    ok, bad = True, None
    for a in range(1, n + 1):
        if a == n + 1 - a:
            continue
        if entry(a, n + 1 - a) != fld.mul(sign_j1, fld.sub(entry(a, a), 1)):
            ok, bad = False, (a, n + 1 - a)
            break
    report.checks["diag-antidiag"] = (ok, bad)

    # 3. central column for odd n
    ok, bad = True, None
    if n % 2 == 1:
        c = (n + 1) // 2
        if entry(c, c) != sign_j2:
            ok, bad = False, (c, c)
        else:
            factor = fld.add(1, sign_j1)
            for a in range(1, n + 1):
                if a == c:
                    continue
                expected = fld.neg(fld.mul(
                    binom_mod_p(j + (n - a) * (q.q - 1), j + ((n - 1) // 2) * (q.q - 1), p),
                    factor))
                if a >= (n + 3) // 2 and expected != 0:
                    ok, bad = False, (a, c)
                    break
                if entry(a, c) != expected:
                    ok, bad = False, (a, c)
                    break
    report.checks["central-col"] = (ok, bad)

    # 4 & 5. constant antidiagonal tail: m[a][n+1-a] = (-1)^(j+2)
    ok, bad = True, None
    start = n // 2 + 1 if n % 2 == 0 else (n + 3) // 2
    for a in range(start, n + 1):
        if entry(a, n + 1 - a) != sign_j2:
            ok, bad = False, (a, n + 1 - a)
            break
    report.checks["antidiag-lower"] = (ok, bad)

    # 6 & 7. zeros below the antidiagonal in the stated row range
    ok, bad = True, None
    for a in range(start, n):
        for b in range(1, n + 1):
            if b > n + 1 - a and entry(a, b) != 0 and b <= n // 2:
                ok, bad = False, (a, b)
                break
        if not ok:
            break
    report.checks["below-antidiag"] = (ok, bad)
    return report


@dataclass
class ShapeReport:
    block: tuple  # (j, n, q)
    kind: str  # antidiagonal | j0 | j-plus-2 | unclassified
    matches: bool
    deviations: list  # (a, b, observed, predicted)


def _antidiagonal_template(j, n, fld):
    s = fld.sign(j + 2)
    return [[s if b == n + 1 - a else 0 for b in range(1, n + 1)] for a in range(1, n + 1)]


def _j0_template(n, fld):
    minus_one = fld.neg(1)
    rows = []
    for a in range(1, n + 1):
        row = []
        for b in range(1, n + 1):
            if b == 1:
                row.append(1)
            elif b == n:
                row.append(minus_one if 2 <= a <= n - 1 else 0)
            else:
                row.append(1 if b == n + 1 - a else 0)
        rows.append(row)
    return rows


def _j2_template(j, n, fld):
    """Template for even j, n = j+2; None marks unconstrained first-row cells."""
    rows = []
    for a in range(1, n + 1):
        row = []
        for b in range(1, n + 1):
            if a == 1:
                if b == 1:
                    row.append(1)
                elif b == n:
                    row.append(0)
                else:
                    row.append(None)
            elif b == 1:
                row.append(1 if a == n else 0)
            elif b == n:
                row.append(0)
            else:
                row.append(1 if b == n + 1 - a else 0)
        rows.append(row)
    return rows


def check_theorem_shape(j, n, q):
    """Classify M(j, n, q) against the proved closed forms, cell by cell."""
    q = _coerce_q(q)
    fld = q.field
    m = [[block_coeff(a, b, j, n, q) for b in range(1, n + 1)] for a in range(1, n + 1)]

    if n <= j + 1:
        kind = "antidiagonal"
        template = _antidiagonal_template(j, n, fld)
    elif j == 0 and 2 <= n <= q.q + 2:
        kind = "j0"
        template = _j0_template(n, fld)
    elif j >= 2 and j % 2 == 0 and n == j + 2:
        kind = "j-plus-2"
        template = _j2_template(j, n, fld)
    elif j == 0:
        kind = "unclassified"
        template = _j0_template(n, fld)
    else:
        kind = "unclassified"
        template = _antidiagonal_template(j, n, fld)

    deviations = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            want = template[a - 1][b - 1]
            if want is None:
                continue
            got = m[a - 1][b - 1]
            if got != want:
                deviations.append((a, b, got, want))
    if kind == "j-plus-2":
        # first row is pinned only through the column mirror
        sign_j1 = fld.sign(j + 1)
        for b in range(2, n):
            want = fld.mul(sign_j1, m[0][b - 1])
            got = m[0][n - b]
            if got != want:
                deviations.append((1, n + 1 - b, got, want))
    matches = not deviations and kind != "unclassified"
    return ShapeReport((j, n, q.q), kind, matches, deviations)
