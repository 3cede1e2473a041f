"""Infinitesimal certificates: planar generators and bracket closure.

For a nondegenerate symmetric M, the matrices A with A^T M + M A = 0 form
the Lie algebra of the orthogonal group of M (dimension n(n-1)/2).  For a
vertex pair (i, j), E_ij denotes the M-orthogonal complement of the
coordinate plane: all v with (Mv)_i = (Mv)_j = 0.  The one-parameter
rotation fixing E_ij pointwise has a single generator X_ij up to scale;
planar_generator computes it by solving the defining linear system exactly
and certifies that the solution space is one-dimensional.

bracket_closure_density starts from the X_ij of the edges, repeatedly
adjoins commutators [A, B] = AB - BA, and certifies that the span reaches
the full n(n-1)/2 dimension and contains every X_ij.  That is the exact,
finite computation backing Zariski density of the reflection group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd as int_gcd

from .diagram import CoxeterDiagram, is_connected
from .errors import (
    DegenerateForm,
    NotAnEdge,
    NotConnected,
    SameVertex,
    UnexpectedDimension,
    VerificationFailed,
)
from .exactcore import (
    Matrix,
    QuadElem,
    bareiss_det,
    mat_mul,
    mat_vec,
    nullspace,
    quad_sign,
    rref,
    transpose,
    try_int_matrix,
)
from .gram import evaluate_pencil, gram_pencil


def _lcm(a: int, b: int) -> int:
    return a // int_gcd(a, b) * b


def _check_pair(n: int, i: int, j: int) -> None:
    from .errors import IndexOutOfRange

    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"pair ({i}, {j}) outside 1..{n}")
    if i == j:
        raise SameVertex(f"need two distinct vertices, got {i} twice")


def orthocomplement_basis(m: Matrix, i: int, j: int) -> list:
    """Basis of E_ij = {v : (Mv)_i = (Mv)_j = 0}, n-2 vectors for nondegenerate M."""
    n = len(m)
    _check_pair(n, i, j)
    return nullspace([list(m[i - 1]), list(m[j - 1])], n)


def _entry_fractions(x) -> tuple:
    if isinstance(x, QuadElem):
        return (x.a, x.b)
    return (Fraction(x),)


def _normalize_primitive(a: Matrix) -> Matrix:
    """Scale by a positive rational to primitive integer coordinates, then
    fix the sign so the first nonzero entry (row-major) is positive."""
    fracs = [f for row in a for x in row for f in _entry_fractions(x)]
    denom = reduce(_lcm, (f.denominator for f in fracs), 1)
    numer = reduce(int_gcd, (abs(f.numerator) for f in fracs), 0)
    if numer == 0:
        raise UnexpectedDimension("cannot normalize the zero matrix")
    scale = Fraction(denom, numer)
    scaled = tuple(tuple(x * scale for x in row) for row in a)
    for row in scaled:
        for x in row:
            s = quad_sign(x)
            if s > 0:
                return scaled
            if s < 0:
                return tuple(tuple(-y for y in r) for r in scaled)
    raise UnexpectedDimension("cannot normalize the zero matrix")


def planar_generator(m: Matrix, i: int, j: int) -> Matrix:
    """The generator X_ij: solves {A^T M + M A = 0, A v = 0 for v in E_ij}.

    The second constraint says every row of A is Euclidean-orthogonal to
    E_ij, i.e. lies in the 2-dimensional kernel of the E-basis matrix; the
    rows are re-expressed in that kernel basis and the form-compatibility
    equations are solved on the reduced unknowns.  The solution space must
    be exactly one-dimensional (UnexpectedDimension otherwise); the result
    is normalized to primitive integer coordinates with positive leading
    entry, making it independent of every basis choice along the way.
    """
    n = len(m)
    _check_pair(n, i, j)
    if bareiss_det(m) == 0:
        raise DegenerateForm("the symmetric form is singular")
    e_basis = orthocomplement_basis(m, i, j)
    if len(e_basis) != n - 2:
        raise UnexpectedDimension(f"E_{i}{j} has dimension {len(e_basis)}, expected {n - 2}")
    kernel = nullspace([list(v) for v in e_basis], n)
    if len(kernel) != 2:
        raise UnexpectedDimension(f"row space for X_{i}{j} has dimension {len(kernel)}, expected 2")
    u1, u2 = kernel
    # Unknowns: rows A[k] = x_k u1 + y_k u2.  Equations: (A^T M + M A)_{rs} = 0.
    equations = []
    for r in range(n):
        for s in range(r, n):
            # Column order: x_1..x_n then y_1..y_n.
            row = []
            for basis_vec in (u1, u2):
                for k in range(n):
                    row.append(basis_vec[r] * m[k][s] + m[r][k] * basis_vec[s])
            equations.append(row)
    solutions = nullspace(equations, 2 * n)
    if len(solutions) != 1:
        raise UnexpectedDimension(
            f"solution space for X_{i}{j} has dimension {len(solutions)}, expected 1"
        )
    sol = solutions[0]
    a_rows = []
    for k in range(n):
        xk, yk = sol[k], sol[n + k]
        a_rows.append(tuple(xk * u1[c] + yk * u2[c] for c in range(n)))
    a_mat = _normalize_primitive(tuple(a_rows))
    _verify_planar(m, a_mat, e_basis)
    return a_mat


def _verify_planar(m: Matrix, a: Matrix, e_basis) -> None:
    lhs = _form_bracket(m, a)
    if any(not (x == 0) for row in lhs for x in row):
        raise VerificationFailed("X does not satisfy A^T M + M A = 0")
    for v in e_basis:
        if any(not (x == 0) for x in mat_vec(a, v)):
            raise VerificationFailed("X does not annihilate E_ij")


def _form_bracket(m: Matrix, a: Matrix) -> Matrix:
    at_m = mat_mul(transpose(a), m)
    m_a = mat_mul(m, a)
    return tuple(tuple(x + y for x, y in zip(r1, r2)) for r1, r2 in zip(at_m, m_a))


@dataclass(frozen=True)
class BasisReport:
    """Rank of the flattened X_ij family against the full dimension."""

    rank: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.rank == self.expected


def full_basis_check(m: Matrix) -> BasisReport:
    """Do the X_ij over ALL pairs span the whole Lie algebra?"""
    n = len(m)
    rows = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            x = planar_generator(m, i, j)
            rows.append([entry for row in x for entry in row])
    _reduced, pivots = rref(rows)
    return BasisReport(len(pivots), n * (n - 1) // 2)


# -- bracket closure -----------------------------------------------------------


class _Echelon:
    """Incremental echelon over Fraction vectors; tracks span dimension."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list = []  # (pivot index, normalized row), pivot-sorted

    def _residual(self, vec: list) -> list:
        v = list(vec)
        for pivot, row in self.rows:
            c = v[pivot]
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        return v

    def contains(self, vec) -> bool:
        return not any(self._residual(list(vec)))

    def insert(self, vec) -> bool:
        """Add vec to the span; True when the dimension grew."""
        v = self._residual([Fraction(x) if isinstance(x, int) else x for x in vec])
        for pivot, x in enumerate(v):
            if x:
                lead = x
                row = [y / lead for y in v]
                self.rows.append((pivot, row))
                self.rows.sort(key=lambda pr: pr[0])
                return True
        return False

    @property
    def dimension(self) -> int:
        return len(self.rows)


def _flatten(a: Matrix) -> list:
    return [entry for row in a for entry in row]


def _bracket(a: Matrix, b: Matrix) -> Matrix:
    ab = mat_mul(a, b)
    ba = mat_mul(b, a)
    return tuple(tuple(x - y for x, y in zip(r1, r2)) for r1, r2 in zip(ab, ba))


@dataclass(frozen=True)
class DensityCertificate:
    """Exact record of the bracket-closure computation at one point t."""

    t: object
    generators: dict
    seed_pairs: tuple
    dimension_trace: tuple
    final_dimension: int
    full_dimension: int
    verdict: bool


def bracket_closure_density(g: CoxeterDiagram, t) -> DensityCertificate:
    """Certify the edge X_ij bracket-generate the full orthogonal Lie algebra.

    Seeds are the planar generators of the edges (sorted); each round
    brackets all pairs of the current basis and adjoins what falls outside
    the span.  The verdict also demands that every X_ij (all vertex pairs)
    lies in the final span.  Everything is exact linear algebra over Q (or
    Q(sqrt m) for quadratic t).
    """
    if not is_connected(g):
        raise NotConnected("density certification needs a connected diagram")
    if isinstance(t, int):
        t = Fraction(t)
    m = evaluate_pencil(gram_pencil(g), t)
    if bareiss_det(m) == 0:
        raise DegenerateForm(f"the form is singular at t = {t}")
    n = g.n
    full_dim = n * (n - 1) // 2
    generators = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            x = planar_generator(m, i, j)
            as_int = try_int_matrix(x)
            generators[(i, j)] = x if as_int is None else as_int
    seed_pairs = tuple(g.sorted_edges())
    echelon = _Echelon(n * n)
    mats = []
    for pair in seed_pairs:
        x = generators[pair]
        echelon.insert(_flatten(x))
        mats.append(x)
    trace = [echelon.dimension]
    for _round in range(full_dim + 1):
        if echelon.dimension == full_dim:
            break
        snapshot = len(mats)
        added = False
        for a in range(snapshot):
            for b in range(a + 1, snapshot):
                c = _bracket(mats[a], mats[b])
                if echelon.insert(_flatten(c)):
                    mats.append(c)
                    added = True
        if not added:
            break
        trace.append(echelon.dimension)
    contained = all(echelon.contains(_flatten(x)) for x in generators.values())
    verdict = echelon.dimension == full_dim and contained
    return DensityCertificate(
        t=t,
        generators=generators,
        seed_pairs=seed_pairs,
        dimension_trace=tuple(trace),
        final_dimension=echelon.dimension,
        full_dimension=full_dim,
        verdict=verdict,
    )


@dataclass(frozen=True)
class PlaneReport:
    """The rank-2 behavior of one edge product R_i R_j."""

    block: tuple
    block_trace: object
    trace_matches: bool
    fixes_complement: bool
    classification: str


def hyperbolic_plane_check(gs, i: int, j: int) -> PlaneReport:
    """R_i R_j fixes E_ij pointwise and acts on the (e_i, e_j) plane with
    trace 4t^2 - 2: hyperbolic for trace > 2, parabolic at t = 1 (trace 2)."""
    g = gs.diagram
    _check_pair(g.n, i, j)
    if not g.adjacent(i, j):
        raise NotAnEdge(f"({i}, {j}) is not an edge")
    product = mat_mul(gs.matrices[i - 1], gs.matrices[j - 1])
    e_basis = orthocomplement_basis(gs.form, i, j)
    fixes = all(
        all(x == y for x, y in zip(mat_vec(product, v), v)) for v in e_basis
    )
    bi, bj = i - 1, j - 1
    block = (
        (product[bi][bi], product[bi][bj]),
        (product[bj][bi], product[bj][bj]),
    )
    block_trace = product[bi][bi] + product[bj][bj]
    t = gs.t if not isinstance(gs.t, int) else Fraction(gs.t)
    expected = 4 * t * t - 2
    trace_matches = block_trace == expected
    s = quad_sign(block_trace - 2)
    classification = "hyperbolic" if s > 0 else ("parabolic" if s == 0 else "elliptic")
    return PlaneReport(block, block_trace, trace_matches, fixes, classification)
