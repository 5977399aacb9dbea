"""Exact feasibility of strict homogeneous integer systems.

Decides whether an open cone {z in R^m : row . z > 0 for every row} is
nonempty. Scaling reduces this to feasibility of {A z >= 1}, which a
phase-1 simplex answers exactly; the tableau is kept in fraction-free
integer form (two-term Edmonds pivoting) so no rational gcd work happens
during pivots.

Neither outcome is taken on trust. A feasible verdict carries a rational
witness that is re-checked against every row; an infeasible verdict
carries a Farkas vector y >= 0 with y'A = 0 and sum(y) > 0, also
re-checked. A certificate that fails its check raises instead of
returning a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: tuple[Fraction, ...] | None        # z with every row . z >= 1
    certificate: tuple[Fraction, ...] | None    # Farkas y proving emptiness

    def __bool__(self) -> bool:
        return self.feasible


def _verify_witness(rows, z) -> bool:
    return all(sum(c * x for c, x in zip(row, z)) >= 1 for row in rows)


def _verify_certificate(rows, y) -> bool:
    if any(v < 0 for v in y) or sum(y) <= 0:
        return False
    m = len(rows[0])
    return all(sum(y[i] * rows[i][j] for i in range(len(rows))) == 0 for j in range(m))


def strict_cone_feasibility(rows) -> FeasibilityResult:
    """Decide {z : row . z > 0 for all rows} != {} with verified certificates.

    rows: integer coefficient tuples, all the same length m >= 1. The empty
    system is trivially feasible.
    """
    rows = [tuple(r) for r in rows]
    if not rows:
        return FeasibilityResult(True, None, None)
    n = len(rows)
    m = len(rows[0])
    if any(len(r) != m for r in rows):
        raise ValueError("rows must all have the same length")

    # columns: u(m) | w(m) | surplus(n) | artificial(n) | rhs, with z = u - w
    width = 2 * m + 2 * n
    tab: list[list[int]] = []
    for i, row in enumerate(rows):
        r = [0] * (width + 1)
        for j, c in enumerate(row):
            r[j] = c
            r[m + j] = -c
        r[2 * m + i] = -1
        r[2 * m + n + i] = 1
        r[width] = 1
        tab.append(r)
    basis = [2 * m + n + i for i in range(n)]
    # phase-1 objective (maximize -sum of artificials), expressed over the
    # starting basis: entering columns are those with positive coefficient
    obj = [0] * (width + 1)
    for r in tab:
        for j in range(width + 1):
            obj[j] += r[j]
    div = 1  # common denominator of the integer tableau

    while True:
        col = next((j for j in range(2 * m + n) if obj[j] > 0), None)
        if col is None:
            break
        piv = None
        for i in range(n):
            t = tab[i][col]
            if t > 0:
                if piv is None:
                    piv = i
                else:
                    lhs = tab[i][width] * tab[piv][col]
                    rhs = tab[piv][width] * t
                    if lhs < rhs or (lhs == rhs and basis[i] < basis[piv]):
                        piv = i
        if piv is None:
            raise AssertionError("phase-1 objective cannot be unbounded")
        pivot_val = tab[piv][col]
        pivot_row = tab[piv]
        for i in range(n):
            if i == piv:
                continue
            row_i = tab[i]
            factor = row_i[col]
            if factor:
                tab[i] = [
                    (a * pivot_val - factor * b) // div
                    for a, b in zip(row_i, pivot_row)
                ]
            else:
                tab[i] = [a * pivot_val // div for a in row_i]
        factor = obj[col]
        obj = [
            (a * pivot_val - factor * b) // div for a, b in zip(obj, pivot_row)
        ]
        basis[piv] = col
        div = pivot_val

    if obj[width] == 0:
        values = [Fraction(0)] * width
        for i, b in enumerate(basis):
            values[b] = Fraction(tab[i][width], div)
        z = tuple(values[j] - values[m + j] for j in range(m))
        if not _verify_witness(rows, z):
            raise AssertionError("simplex produced an invalid witness")
        return FeasibilityResult(True, z, None)

    # Farkas vector from the surplus-column reduced costs; the sign
    # convention is fixed by verification.
    for sign in (1, -1):
        y = tuple(Fraction(sign * obj[2 * m + i], div) for i in range(n))
        if _verify_certificate(rows, y):
            return FeasibilityResult(False, None, y)
    raise AssertionError("simplex produced an invalid infeasibility certificate")
