"""Exact UL factorization over Q, corner minors, and unipotent class splits.

A square rational matrix g lies in the big cell exactly when every
bottom-right corner minor is nonzero; there it factors uniquely as
g = u_plus * p_minus with u_plus upper unitriangular and p_minus lower
triangular.  The factorization is computed with exact rational elimination,
so "equal" always means equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactmat import (as_matrix, determinant, identity, log_abs, log_sup_norm,
                       multiply, sup_norm)
from .rootsys import ClassOrdering, sl_block_positions


class NotInBigCell(ValueError):
    pass


@dataclass(frozen=True)
class BigCellFactorization:
    u_plus: tuple   # upper unitriangular, rational
    p_minus: tuple  # lower triangular, nonzero diagonal, rational


@dataclass(frozen=True)
class UnipotentClassSplit:
    left_part: tuple
    mid_part: tuple
    right_part: tuple


@dataclass(frozen=True)
class BoundReport:
    minors: tuple
    minor_product: int
    denominators: tuple  # distinct factor-entry denominators, ascending
    denominators_divide: bool
    log_norm_input: float
    log_norm_p_minus: float
    norm_constant: int
    norm_bound_ok: bool

    @property
    def all_ok(self) -> bool:
        return self.denominators_divide and self.norm_bound_ok


def corner_minors(g) -> tuple:
    """Determinants of the bottom-right j x j submatrices, j = 1..n-1."""
    g = as_matrix(g)
    n = len(g)
    out = []
    for j in range(1, n):
        sub = tuple(row[n - j:] for row in g[n - j:])
        out.append(determinant(sub))
    return tuple(out)


def in_big_cell(g) -> bool:
    """True iff every corner minor is nonzero; raises on singular input."""
    g = as_matrix(g)
    if determinant(g) == 0:
        raise ValueError("matrix is singular")
    return all(m != 0 for m in corner_minors(g))


def ul_factorize(g) -> BigCellFactorization:
    """Exact g = u_plus * p_minus, or NotInBigCell when a corner minor vanishes."""
    g = as_matrix(g)
    n = len(g)
    m = [[Fraction(e) for e in row] for row in g]
    u = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    # Clear above-diagonal entries column by column from the right; the j-th
    # pivot is the ratio of consecutive corner minors, so a zero pivot is
    # exactly a vanishing minor.
    for j in range(n - 1, 0, -1):
        if m[j][j] == 0:
            raise NotInBigCell(f"corner minor of size {n - j} vanishes")
        for i in range(j):
            f = m[i][j] / m[j][j]
            if f:
                for c in range(n):
                    m[i][c] -= f * m[j][c]
                    u[c][j] += f * u[c][i]
    if m[0][0] == 0:
        raise ValueError("matrix is singular")
    u_plus = tuple(tuple(row) for row in u)
    p_minus = tuple(tuple(row) for row in m)
    assert multiply(u_plus, p_minus) == tuple(
        tuple(Fraction(e) for e in row) for row in g)
    return BigCellFactorization(u_plus, p_minus)


def denominator_and_norm_check(gamma) -> BoundReport:
    """Verify the two exact bounds tying a factorization to its corner minors:
    denominators divide (prod of minors)^n and log|p_minus| <= n^2 * log-norm."""
    gamma = as_matrix(gamma)
    n = len(gamma)
    if any(not isinstance(e, int) for row in gamma for e in row):
        raise ValueError("expected an integer matrix")
    minors = corner_minors(gamma)
    if any(m == 0 for m in minors):
        raise NotInBigCell("input is outside the big cell")
    fac = ul_factorize(gamma)
    product = 1
    for m in minors:
        product *= m
    power = abs(product) ** n
    denominators = tuple(sorted({
        Fraction(e).denominator
        for mat in (fac.u_plus, fac.p_minus) for row in mat for e in row}))
    denominators_divide = all(power % q == 0 for q in denominators)
    log_in = max(0.0, log_sup_norm(gamma))
    log_p = log_abs(sup_norm(fac.p_minus))
    bound = (n * n) * max(1.0, log_in)
    return BoundReport(minors, product, denominators, denominators_divide,
                       log_in, log_p, n * n, log_p <= bound)


# --- unipotent class splits ---------------------------------------------------


def _check_unitriangular(u) -> tuple:
    u = as_matrix(u)
    n = len(u)
    for i in range(n):
        if u[i][i] != 1 or any(u[i][j] != 0 for j in range(i)):
            raise ValueError("matrix is not upper unitriangular")
    return u


def _elem(n: int, a: int, b: int, c) -> tuple:
    rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rows[a][b] = Fraction(c)
    return tuple(tuple(r) for r in rows)


def _peel(rows, positions, n):
    """Extract the left factor supported on `positions` (0-based, by height);
    closedness of the position set keeps the factor inside its support."""
    acc = identity(n)
    acc = tuple(tuple(Fraction(e) for e in row) for row in acc)
    for a, b in sorted(positions, key=lambda p: p[1] - p[0]):
        c = rows[a][b]
        if c:
            for col in range(n):
                rows[a][col] -= c * rows[b][col]
            acc = multiply(acc, _elem(n, a, b, c))
    return acc


def unipotent_class_split(u, ordering: ClassOrdering, i: int) -> UnipotentClassSplit:
    """Split an upper unitriangular matrix as left * mid * right along the
    i-th clockwise class (1-based) of a standard A_{n-1} ordering."""
    u = _check_unitriangular(u)
    n = len(u)
    positions = sl_block_positions(ordering)
    k = len(positions)
    if not 1 <= i <= k:
        raise ValueError(f"class index {i} out of range 1..{k}")
    if k != n * (n - 1) // 2 or any(b > n for _, b in positions):
        raise ValueError("ordering does not match the matrix dimension")
    pos0 = [(a - 1, b - 1) for a, b in positions]
    rows = [[Fraction(e) for e in row] for row in u]
    left = _peel(rows, pos0[: i - 1], n)
    mid = _peel(rows, pos0[i - 1: i], n)
    right = tuple(tuple(row) for row in rows)
    _check_support(left, set(pos0[: i - 1]))
    _check_support(mid, set(pos0[i - 1: i]))
    _check_support(right, set(pos0[i:]))
    assert multiply(multiply(left, mid), right) == tuple(
        tuple(Fraction(e) for e in row) for row in u)
    return UnipotentClassSplit(left, mid, right)


def _check_support(mat, allowed) -> None:
    n = len(mat)
    for r in range(n):
        for c in range(n):
            if r == c:
                continue
            if mat[r][c] != 0 and (r, c) not in allowed:
                raise AssertionError("split factor leaks outside its class support")


def factorization_to_json(fac: BigCellFactorization) -> dict:
    def enc(mat):
        return [[str(Fraction(e)) for e in row] for row in mat]

    return {
        "n": len(fac.u_plus),
        "u_plus": enc(fac.u_plus),
        "p_minus": enc(fac.p_minus),
    }


def bound_report_to_json(rep: BoundReport) -> dict:
    return {
        "minors": [str(m) for m in rep.minors],
        "minor_product": str(rep.minor_product),
        "denominators": [str(q) for q in rep.denominators],
        "denominators_divide": rep.denominators_divide,
        "log_norm_input": rep.log_norm_input,
        "log_norm_p_minus": rep.log_norm_p_minus,
        "norm_constant": rep.norm_constant,
        "norm_bound_ok": rep.norm_bound_ok,
    }
