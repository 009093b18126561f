"""Exact linear programming over the rationals.

Two independent engines:

* a two-phase simplex with Bland's rule (dense tableau, ``Fraction``
  arithmetic, no floating point), solving
  max/min c.x subject to A x = b, x >= 0;
* Fourier-Motzkin elimination for feasibility of inequality systems,
  used as a cross-check oracle on the simplex verdicts.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Row = tuple[Fraction, ...]


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None
    solution: tuple[Fraction, ...] | None


def _pivot(tab: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    piv = tab[r][c]
    tab[r] = [v / piv for v in tab[r]]
    for i, row in enumerate(tab):
        if i != r and row[c] != 0:
            f = row[c]
            tab[i] = [v - f * w for v, w in zip(row, tab[r])]
    basis[r] = c


def _bland_min(tab: list[list[Fraction]], basis: list[int], ncols: int) -> str:
    """Minimize the objective in the last tableau row; Bland's anti-cycling rule."""
    m = len(tab) - 1
    while True:
        obj = tab[m]
        enter = next((j for j in range(ncols) if obj[j] < 0), None)
        if enter is None:
            return "optimal"
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return "unbounded"
        _pivot(tab, basis, best[1], enter)


def simplex_solve(
    a_eq: Sequence[Sequence[Fraction]],
    b_eq: Sequence[Fraction],
    objective: Sequence[Fraction] | None = None,
    maximize: bool = True,
) -> LPResult:
    """Solve max (or min) objective . x subject to a_eq x = b_eq, x >= 0."""
    m = len(a_eq)
    n = len(a_eq[0]) if m else (len(objective) if objective else 0)
    rows = [[Fraction(v) for v in row] for row in a_eq]
    rhs = [Fraction(v) for v in b_eq]
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]

    # phase 1: artificials must vanish
    width = n + m + 1
    tab: list[list[Fraction]] = []
    for i in range(m):
        row = rows[i] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]]
        tab.append(row)
    # cost row: sum of artificials, expressed through the artificial basis
    cost = [Fraction(0)] * width
    for j in range(n):
        cost[j] = -sum(tab[i][j] for i in range(m))
    cost[-1] = -sum(tab[i][-1] for i in range(m))
    tab.append(cost)
    basis = [n + i for i in range(m)]
    _bland_min(tab, basis, n)  # artificial columns never re-enter
    if tab[m][-1] < 0:
        return LPResult("infeasible", None, None)
    # drive leftover artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= n:
            enter = next((j for j in range(n) if tab[i][j] != 0), None)
            if enter is not None:
                _pivot(tab, basis, i, enter)

    if objective is None:
        sol = _extract(tab, basis, n, m)
        return LPResult("optimal", Fraction(0), sol)

    # phase 2 on the original columns
    sign = Fraction(-1 if maximize else 1)
    obj = [sign * Fraction(c) for c in objective] + [Fraction(0)] * (m + 1)
    # express the objective through the current basis
    for i in range(m):
        if basis[i] < n and obj[basis[i]] != 0:
            f = obj[basis[i]]
            obj = [v - f * w for v, w in zip(obj, tab[i])]
    tab[m] = obj
    status = _bland_min(tab, basis, n)
    if status == "unbounded":
        return LPResult("unbounded", None, None)
    sol = _extract(tab, basis, n, m)
    value = sum((Fraction(c) * x for c, x in zip(objective, sol)), Fraction(0))
    return LPResult("optimal", value, sol)


def _extract(tab, basis, n, m) -> tuple[Fraction, ...]:
    sol = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            sol[basis[i]] = tab[i][-1]
    return tuple(sol)


def simplex_feasible(
    a_eq: Sequence[Sequence[Fraction]], b_eq: Sequence[Fraction]
) -> tuple[Fraction, ...] | None:
    """A nonnegative solution of a_eq x = b_eq, or None."""
    res = simplex_solve(a_eq, b_eq, objective=None)
    return res.solution if res.status == "optimal" else None


# ---------------------------------------------------------------------------
# Fourier-Motzkin elimination

IntRow = tuple[tuple[int, ...], int]


def _norm_int_row(coeffs: tuple[int, ...], const: int) -> IntRow:
    """Divide a row by the gcd of its entries (primitive representative)."""
    g = gcd(*(abs(v) for v in coeffs), abs(const))
    if g > 1:
        coeffs = tuple(v // g for v in coeffs)
        const //= g
    return coeffs, const


def _to_int_row(coeffs: Sequence[Fraction], const: Fraction) -> IntRow:
    denom = lcm(*(c.denominator for c in coeffs), const.denominator)
    return _norm_int_row(
        tuple(int(c * denom) for c in coeffs), int(const * denom)
    )


def _prune(rows: list[IntRow]) -> list[IntRow] | None:
    """Deduplicate, keep the tightest constant per direction, detect falsehood."""
    best: dict[tuple[int, ...], int] = {}
    for coeffs, const in rows:
        if not any(coeffs):
            if const < 0:
                return None
            continue
        prev = best.get(coeffs)
        if prev is None or const < prev:
            best[coeffs] = const
    return list(best.items())


def fm_feasible(ineqs: list[tuple[Sequence[Fraction], Fraction]], nvars: int) -> bool:
    """Feasibility of { x : sum coeffs.x <= const } by variable elimination.

    Variables are unrestricted; encode x_i >= 0 as an explicit row.  Each
    round eliminates the variable minimizing the positive*negative row
    product; rows are kept as primitive integer vectors and pruned to curb
    growth.
    """
    rows = [
        _to_int_row(tuple(Fraction(c) for c in coeffs), Fraction(const))
        for coeffs, const in ineqs
    ]
    pruned = _prune(rows)
    if pruned is None:
        return False
    rows = pruned
    remaining = set(range(nvars))
    while remaining:
        counts = {}
        for var in remaining:
            pos = sum(1 for c, _ in rows if c[var] > 0)
            neg = sum(1 for c, _ in rows if c[var] < 0)
            counts[var] = (pos * neg, pos + neg)
        var = min(remaining, key=lambda v: (counts[v], v))
        pos_rows = [r for r in rows if r[0][var] > 0]
        neg_rows = [r for r in rows if r[0][var] < 0]
        new_rows = [r for r in rows if r[0][var] == 0]
        for pc, pconst in pos_rows:
            a = pc[var]
            for nc, nconst in neg_rows:
                b = -nc[var]
                coeffs = tuple(b * x + a * y for x, y in zip(pc, nc))
                new_rows.append(_norm_int_row(coeffs, b * pconst + a * nconst))
        pruned = _prune(new_rows)
        if pruned is None:
            return False
        rows = pruned
        remaining.discard(var)
    return True


def eq_system_to_ineqs(
    a_eq: Sequence[Sequence[Fraction]], b_eq: Sequence[Fraction]
) -> tuple[list[tuple[Row, Fraction]], int]:
    """Encode {A x = b, x >= 0} as a pure inequality system for fm_feasible."""
    n = len(a_eq[0]) if a_eq else 0
    ineqs: list[tuple[Row, Fraction]] = []
    for row, c in zip(a_eq, b_eq):
        r = tuple(Fraction(v) for v in row)
        ineqs.append((r, Fraction(c)))
        ineqs.append((tuple(-v for v in r), -Fraction(c)))
    for i in range(n):
        unit = tuple(Fraction(-int(i == j)) for j in range(n))
        ineqs.append((unit, Fraction(0)))
    return ineqs, n


def fm_feasible_eq(
    a_eq: Sequence[Sequence[Fraction]], b_eq: Sequence[Fraction]
) -> bool:
    """Feasibility of {A x = b, x >= 0} decided by Fourier-Motzkin.

    The equalities are first removed by exact Gaussian substitution (each
    pivot variable is expressed through the nonbasic ones), which preserves
    the solution set and leaves a pure inequality system -- the
    nonnegativity of every variable -- for the elimination proper.
    """
    m = len(a_eq)
    n = len(a_eq[0]) if m else 0
    mat = [
        [Fraction(v) for v in row] + [Fraction(c)] for row, c in zip(a_eq, b_eq)
    ]
    pivots: list[tuple[int, int]] = []
    free_rows = set(range(m))
    free_cols = set(range(n))
    while free_rows and free_cols:
        # Markowitz-style pivot: minimize fill to keep substitutions sparse
        best = None
        for i in free_rows:
            row_nnz = sum(1 for c in free_cols if mat[i][c] != 0)
            if row_nnz == 0:
                continue
            for c in free_cols:
                if mat[i][c] != 0:
                    col_nnz = sum(1 for k in free_rows if mat[k][c] != 0)
                    key = ((row_nnz - 1) * (col_nnz - 1), c, i)
                    if best is None or key < best[0]:
                        best = (key, i, c)
        if best is None:
            break
        _, r, c = best
        piv = mat[r][c]
        mat[r] = [v / piv for v in mat[r]]
        for i in range(m):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        pivots.append((r, c))
        free_rows.discard(r)
        free_cols.discard(c)
    for i in free_rows:
        if mat[i][-1] != 0:
            return False  # 0 = nonzero: inconsistent equalities
    basic = {c for _, c in pivots}
    nonbasic = [c for c in range(n) if c not in basic]
    k = len(nonbasic)
    ineqs: list[tuple[Row, Fraction]] = []
    for row, col in pivots:
        # x_col = rhs - sum coeffs * z >= 0
        coeffs = tuple(mat[row][j] for j in nonbasic)
        ineqs.append((coeffs, mat[row][-1]))
    for i in range(k):
        unit = tuple(Fraction(-int(i == j)) for j in range(k))
        ineqs.append((unit, Fraction(0)))
    return fm_feasible(ineqs, k)
