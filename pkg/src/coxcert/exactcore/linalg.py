"""Small exact linear-algebra kit over Fraction, QuadElem, or Poly entries.

Matrices are immutable tuples of row tuples.  Everything here is decided by
exact arithmetic: determinants come from fraction-free Bareiss elimination
(whose divisions are exact over any integral domain, so polynomial matrices
work too), characteristic polynomials from the Faddeev-LeVerrier recursion
(divisions by 1..n, exact in characteristic zero), and inertia signatures
from Sturm counts on the characteristic polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import MixedRadicands
from .poly import Poly, count_roots_above, squarefree_decomposition
from .quadratic import QuadElem

Matrix = tuple

def mat(rows) -> Matrix:
    return tuple(tuple(row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    inner = len(b)
    if any(len(row) != inner for row in a):
        raise ValueError("matrix shape mismatch")
    bt = tuple(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = row[0] * col[0]
            for k in range(1, inner):
                acc = acc + row[k] * col[k]
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def mat_vec(a: Matrix, v) -> tuple:
    out = []
    for row in a:
        acc = row[0] * v[0]
        for k in range(1, len(v)):
            acc = acc + row[k] * v[k]
        out.append(acc)
    return tuple(out)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_eq(a: Matrix, b: Matrix) -> bool:
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        if len(ra) != len(rb):
            return False
        for x, y in zip(ra, rb):
            if not (x == y):
                return False
    return True


def is_symmetric(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def trace(a: Matrix):
    acc = a[0][0]
    for i in range(1, len(a)):
        acc = acc + a[i][i]
    return acc


def try_int_matrix(a: Matrix):
    """Integer copy when every entry is an integral rational, else None."""
    out = []
    for row in a:
        out_row = []
        for x in row:
            if isinstance(x, int):
                out_row.append(x)
            elif isinstance(x, Fraction) and x.denominator == 1:
                out_row.append(x.numerator)
            else:
                return None
        out.append(tuple(out_row))
    return tuple(out)


def _check_single_radicand(a: Matrix) -> None:
    radicands = {x.m for row in a for x in row if isinstance(x, QuadElem)}
    if len(radicands) > 1:
        raise MixedRadicands(f"matrix mixes radicands {sorted(radicands)}")


def bareiss_det(a: Matrix):
    """Exact determinant by fraction-free elimination (any entry type)."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    _check_single_radicand(a)
    if n == 1:
        return a[0][0]
    rows = [list(row) for row in a]
    zero = a[0][0] * 0
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if not (rows[r][k] == 0):
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (pivot * rows[i][j] - rows[i][k] * rows[k][j]) / prev
            rows[i][k] = zero
        prev = pivot
    det = rows[n - 1][n - 1]
    return -det if sign < 0 else det


def leading_principal_minors(a: Matrix) -> list:
    """Determinants of the top-left k-by-k blocks, k = 1..n."""
    n = len(a)
    return [bareiss_det(tuple(row[:k] for row in a[:k])) for k in range(1, n + 1)]


def char_poly(a: Matrix) -> Poly:
    """det(x*I - a) via Faddeev-LeVerrier; coefficients share a's entry type."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("characteristic polynomial needs a square matrix")
    _check_single_radicand(a)
    desc = [1]
    mk = a
    ck = -trace(mk)
    desc.append(ck)
    for k in range(2, n + 1):
        shifted = tuple(
            tuple(mk[i][j] + ck if i == j else mk[i][j] for j in range(n)) for i in range(n)
        )
        mk = mat_mul(a, shifted)
        ck = -trace(mk) / k
        desc.append(ck)
    return Poly(tuple(reversed(desc)))


@dataclass(frozen=True)
class Signature:
    """Inertia triple: positive, negative, and zero eigenvalue counts."""

    p: int
    q: int
    z: int = 0

    @property
    def n(self) -> int:
        return self.p + self.q + self.z

    def __iter__(self):
        return iter((self.p, self.q, self.z))

    def __str__(self):
        return f"({self.p}, {self.q}, {self.z})"


def signature_of(a: Matrix) -> Signature:
    """Exact inertia of a symmetric matrix via Sturm counts.

    Eigenvalues of a symmetric matrix are real, so p = number of roots of
    the characteristic polynomial in (0, inf) counted with multiplicity,
    z = multiplicity of the root 0, q = n - p - z.
    """
    if not is_symmetric(a):
        raise ValueError("signature needs a symmetric matrix")
    n = len(a)
    cp = char_poly(a)
    coeffs = cp.coeffs
    z = 0
    while coeffs[z] == 0:
        z += 1
    reduced = Poly(coeffs[z:])
    positive = 0
    if reduced.degree > 0:
        for factor, mult in squarefree_decomposition(reduced):
            positive += mult * count_roots_above(factor, Fraction(0))
    return Signature(positive, n - positive - z, z)


# -- row reduction ------------------------------------------------------------


def rref(rows: list) -> tuple[list, list[int]]:
    """Reduced row echelon form with exact division; returns (rows, pivot cols).

    Pivot selection is the first nonzero entry top-down, so the output is
    deterministic for a given input ordering.
    """
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(work)):
            if not (work[r][col] == 0):
                pivot_row = r
                break
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        lead = work[rank][col]
        if not (lead == 1):
            inv_row = [x / lead for x in work[rank]]
            work[rank] = inv_row
        for r in range(len(work)):
            if r != rank and not (work[r][col] == 0):
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(work):
            break
    return work[:rank], pivots


def matrix_rank(rows: list) -> int:
    return len(rref(rows)[1])


def nullspace(rows: list, ncols: int) -> list[tuple]:
    """Basis of the right kernel, one vector per free column (ascending)."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, pcol in zip(reduced, pivots):
            coeff = row[free]
            if not (coeff == 0):
                vec[pcol] = -coeff
        basis.append(tuple(vec))
    return basis
