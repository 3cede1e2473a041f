"""Symmetric matrix pencil of a diagram and its two certified thresholds.

For a diagram g the pencil M_d has ones on the diagonal, -d at every edge,
and 0 at every non-edge, so M_0 = I.  Two exact thresholds control the whole
construction:

* epsilon: a rational 0 < epsilon < 1 such that M_d is positive-definite for
  every d in [-epsilon, epsilon].  It is taken just below rho, the smallest
  absolute value of a real root of any leading principal minor of M_d
  (by Sylvester's criterion all minors are +1 at d = 0 and stay positive
  until the first root).
* D: the smallest integer >= 1 strictly greater than every real root of
  det(M_d).  For d >= D the determinant no longer vanishes and the inertia
  of M_d is constant ("stable signature").

Minor polynomials come from fraction-free elimination over Q[d]; root
locations from Sturm counts and bisection.  The final positive-definiteness
and no-root checks are re-verified exactly before anything is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .diagram import CoxeterDiagram
from .errors import DegenerateAtD, VerificationFailed
from .exactcore import (
    Interval,
    Poly,
    QuadElem,
    Signature,
    cauchy_root_bound,
    count_roots_above,
    isolate_real_roots,
    leading_principal_minors,
    poly_gcd,
    quad_sign,
    refine_root_interval,
    signature_of,
    sturm_root_count,
    squarefree_part,
)

# epsilon when the cap at 1 binds (pencils whose minors have no root in (0, 1)).
_EPSILON_CAP = Fraction(1023, 1024)


@dataclass(frozen=True)
class GramPencil:
    """The pencil M_d with entries in Q[d]."""

    diagram: CoxeterDiagram
    entries: tuple

    @property
    def n(self) -> int:
        return self.diagram.n


@lru_cache(maxsize=256)
def gram_pencil(g: CoxeterDiagram) -> GramPencil:
    one = Poly((Fraction(1),))
    minus_d = Poly((Fraction(0), Fraction(-1)))
    zero = Poly()
    rows = []
    for i in g.vertices:
        row = []
        for j in g.vertices:
            if i == j:
                row.append(one)
            elif g.adjacent(i, j):
                row.append(minus_d)
            else:
                row.append(zero)
        rows.append(tuple(row))
    return GramPencil(g, tuple(rows))


def evaluate_pencil(pencil: GramPencil, t):
    """M_t as an exact matrix; t may be int, Fraction, or QuadElem."""
    if isinstance(t, int):
        t = Fraction(t)
    if isinstance(t, Fraction):
        return tuple(tuple(Fraction(e(t)) for e in row) for row in pencil.entries)
    if isinstance(t, QuadElem):
        return tuple(tuple(_eval_quad(e, t) for e in row) for row in pencil.entries)
    raise TypeError(f"evaluation point must be exact, got {type(t).__name__}")


def _eval_quad(e: Poly, t: QuadElem) -> QuadElem:
    value = e(t)
    if isinstance(value, QuadElem):
        return value
    return QuadElem(value, 0, t.m)


@lru_cache(maxsize=256)
def _minor_polynomials_cached(pencil: GramPencil) -> tuple[Poly, ...]:
    minors = leading_principal_minors(pencil.entries)
    for k, p in enumerate(minors, start=1):
        if not (p(Fraction(0)) == 1):
            raise VerificationFailed(f"minor {k} has constant term {p(Fraction(0))}, expected 1")
    return tuple(minors)


def minor_polynomials(pencil: GramPencil) -> list[Poly]:
    """Leading principal minors of M_d as polynomials in d (k = 1..n).

    Every minor has constant term 1 because M_0 = I.
    """
    return list(_minor_polynomials_cached(pencil))


def _smallest_abs_root(p: Poly) -> tuple[Poly, Interval] | None:
    """Isolate min |root| of p as the smallest positive root of p(d)p(-d).

    Returns (squarefree even polynomial, isolating interval) or None when p
    has no real roots.
    """
    if p.degree < 1:
        return None
    mirrored = Poly(tuple(c if i % 2 == 0 else -c for i, c in enumerate(p.coeffs)))
    even = squarefree_part(p * mirrored)
    roots = isolate_real_roots(even)
    if not roots:
        return None
    positive: list[Interval] = []
    for iv, _mult in roots:
        # even(0) = p(0)^2 != 0 here, so any interval straddling 0 can be
        # shrunk off it.
        while iv.lo < 0 < iv.hi:
            iv = refine_root_interval(even, iv, iv.width / 4)
        if iv.lo >= 0 and iv.hi > 0:
            while iv.lo == 0:
                iv = refine_root_interval(even, iv, iv.width / 4)
            positive.append(iv)
    if not positive:
        return None
    positive.sort(key=lambda iv: iv.lo)
    return even, positive[0]


def _gcd_root_in_overlap(common: Poly, lo: Fraction, hi: Fraction) -> bool:
    """Does the (squarefree) gcd vanish somewhere on the closed [lo, hi]?"""
    if common.degree < 1:
        return False
    if common(lo) == 0 or common(hi) == 0:
        return True
    return lo < hi and sturm_root_count(common, Interval(lo, hi)) > 0


def _minimum_of_algebraics(candidates: list[tuple[Poly, Interval]]) -> tuple[Poly, Interval]:
    """The minimum among isolated positive algebraics, with its polynomial.

    Refines until one candidate's interval lies strictly below all others.
    Equal values isolated by different polynomials are recognized exactly:
    two squarefree polynomials share a root iff their gcd vanishes there.
    """
    items = list(candidates)
    for _ in range(256):
        items.sort(key=lambda it: it[1].lo)
        best_poly, best_iv = items[0]
        keep = [(best_poly, best_iv)]
        for f, iv in items[1:]:
            if iv.lo > best_iv.hi:
                continue  # strictly above the best candidate's root
            common = poly_gcd(best_poly, f)
            lo, hi = max(best_iv.lo, iv.lo), min(best_iv.hi, iv.hi)
            if lo <= hi and _gcd_root_in_overlap(common, lo, hi):
                continue  # same algebraic number; best already covers it
            keep.append((f, iv))
        if len(keep) == 1:
            return best_poly, best_iv
        items = [(f, refine_root_interval(f, iv, iv.width / 16)) for f, iv in keep]
    raise VerificationFailed("could not separate candidate minima")


def epsilon_threshold(pencil: GramPencil) -> tuple[Fraction, Interval | None]:
    """(epsilon, rho interval): exact PD radius under-approximation.

    rho is the smallest absolute value of any real root of any leading
    principal minor; its isolating interval is refined until the width drops
    below rho_lower/1024.  epsilon is the interval's lower endpoint, capped
    below 1.  Before returning, positive-definiteness of M at +-epsilon and
    emptiness of the minors' root set on (-epsilon, epsilon) are re-verified
    exactly (VerificationFailed on any failure, which would indicate a bug).
    """
    minors = minor_polynomials(pencil)
    candidates = []
    for p in minors:
        found = _smallest_abs_root(p)
        if found is not None:
            candidates.append(found)
    if not candidates:
        rho_interval = None
        epsilon = _EPSILON_CAP
    else:
        even, rho_interval = _minimum_of_algebraics(candidates)
        while rho_interval.lo <= 0 or rho_interval.width >= rho_interval.lo / 1024:
            rho_interval = refine_root_interval(even, rho_interval, rho_interval.width / 4)
        epsilon = rho_interval.lo if rho_interval.lo < 1 else _EPSILON_CAP
    _verify_epsilon(minors, epsilon, rho_interval)
    return epsilon, rho_interval


def _verify_epsilon(minors: list[Poly], epsilon: Fraction, rho_interval: Interval | None) -> None:
    if not (0 < epsilon < 1):
        raise VerificationFailed(f"epsilon {epsilon} outside (0, 1)")
    for k, p in enumerate(minors, start=1):
        for point in (epsilon, -epsilon):
            if quad_sign(p(point)) <= 0:
                raise VerificationFailed(f"minor {k} not positive at d = {point}")
        if p.degree > 0 and sturm_root_count(p, Interval(-epsilon, epsilon)) != 0:
            raise VerificationFailed(f"minor {k} vanishes inside [-{epsilon}, {epsilon}]")
    if rho_interval is not None and epsilon == rho_interval.lo:
        if not (epsilon >= rho_interval.lo / 2):
            raise VerificationFailed("epsilon fell below half the rho lower bound")


def d_threshold(pencil: GramPencil) -> tuple[int, Interval | None]:
    """(D, largest-root interval): stable integer evaluation point.

    D = max(1, smallest integer strictly greater than every real root of
    det M_d).  Certified by a Sturm count of zero on (L, infinity) for a
    rational L strictly between the largest root and D.
    """
    det = minor_polynomials(pencil)[-1]
    if det.degree < 1:
        return 1, None
    roots = isolate_real_roots(det)
    limit = int(cauchy_root_bound(det)) + 2
    chosen = None
    for candidate in range(1, limit + 1):
        point = Fraction(candidate)
        if det(point) == 0:
            continue
        if count_roots_above(det, point) == 0:
            chosen = candidate
            break
    if chosen is None:
        raise VerificationFailed("no valid integer below the root bound")
    if not roots:
        return chosen, None
    largest = roots[-1][0]
    while largest.hi >= chosen:
        largest = refine_root_interval(det, largest, largest.width / 4)
    if count_roots_above(det, largest.hi) != 0:
        raise VerificationFailed("roots remain above the refined largest-root interval")
    return chosen, largest


def stable_signature(pencil: GramPencil, d_value: int | None = None) -> Signature:
    """Exact inertia of M_D (constant for all d >= D).

    Raises DegenerateAtD if the pencil is singular at D, which d_threshold
    rules out.
    """
    if d_value is None:
        d_value = d_threshold(pencil)[0]
    sig = signature_of(evaluate_pencil(pencil, Fraction(d_value)))
    if sig.z != 0:
        raise DegenerateAtD(f"pencil singular at d = {d_value}")
    return sig


@dataclass(frozen=True)
class ThresholdReport:
    """Everything cmd_analyze prints: both thresholds plus the stable inertia."""

    epsilon: Fraction
    rho_interval: Interval | None
    d_value: int
    largest_root_interval: Interval | None
    signature: Signature


def threshold_report(pencil: GramPencil) -> ThresholdReport:
    epsilon, rho_interval = epsilon_threshold(pencil)
    d_value, largest = d_threshold(pencil)
    sig = stable_signature(pencil, d_value)
    return ThresholdReport(epsilon, rho_interval, d_value, largest, sig)
