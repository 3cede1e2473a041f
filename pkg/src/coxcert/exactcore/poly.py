"""Dense univariate polynomials over an exact field, with real-root tools.

Coefficients may be Fraction or QuadElem (any exact type supporting field
operations and an exact sign via quad_sign).  On top of the arithmetic this
module provides Sturm sequences, distinct-root counting over intervals and
half-lines, squarefree (Yun) decomposition, bisection-based real-root
isolation with multiplicities, and interval refinement to arbitrary width.
Root isolation keeps every root strictly interior to its interval and every
interval endpoint off the root set, which downstream threshold code relies
on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd as int_gcd

from ..errors import EndpointIsRoot, ZeroPolynomial
from .quadratic import QuadElem, quad_sign

Rat = Fraction


def _lcm(a: int, b: int) -> int:
    return a // int_gcd(a, b) * b


class Poly:
    """Polynomial as an ascending coefficient tuple (zero poly is empty)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def constant(c) -> "Poly":
        return Poly((c,))

    @staticmethod
    def x() -> "Poly":
        return Poly((Fraction(0), Fraction(1)))

    # -- structure ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, QuadElem)):
            if other == 0:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return "Poly(" + " + ".join(terms) + ")"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, QuadElem)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, QuadElem)):
            other = Poly((other,))
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadElem)):
            return Poly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                prod = a * b
                out[i + j] = prod if out[i + j] is None else out[i + j] + prod
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Poly((Fraction(1),))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        if isinstance(other, (int, Fraction, QuadElem)):
            other = Poly((other,))
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lead = other.coeffs[-1]
        if len(rem) <= dd:
            return Poly(), self
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c / lead
            quot[i - dd] = q
            for j, oc in enumerate(other.coeffs):
                rem[i - dd + j] = rem[i - dd + j] - q * oc
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        """Exact division; raises if the remainder is nonzero."""
        if isinstance(other, (int, Fraction)):
            inv = Fraction(1) / Fraction(other)
            return Poly(tuple(c * inv for c in self.coeffs))
        if isinstance(other, QuadElem):
            inv = other.inverse()
            return Poly(tuple(c * inv for c in self.coeffs))
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    # -- calculus and evaluation ---------------------------------------------

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    # -- normal forms ---------------------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return self / lead

    def primitive(self) -> "Poly":
        """Rescale by a positive rational so coefficients are small integers.

        Preserves the sign pattern and root set exactly; used to keep Sturm
        remainder chains from ballooning.  QuadElem coefficients are rescaled
        through their rational coordinates.
        """
        if not self.coeffs:
            return self
        fracs: list[Fraction] = []
        for c in self.coeffs:
            if isinstance(c, QuadElem):
                fracs.append(c.a)
                fracs.append(c.b)
            else:
                fracs.append(Fraction(c))
        denom = reduce(_lcm, (f.denominator for f in fracs), 1)
        numer = reduce(int_gcd, (abs(f.numerator) for f in fracs), 0)
        if numer == 0:
            return self
        scale = Fraction(denom, numer)
        if scale == 1:
            return self
        return Poly(tuple(c * scale for c in self.coeffs))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd via the Euclidean algorithm with primitive rescaling."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, (a % b).primitive()
    if a.is_zero():
        return a
    return a.monic()


def squarefree_part(p: Poly) -> Poly:
    """p divided by gcd(p, p'), monic."""
    if p.is_zero():
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    if p.degree == 0:
        return Poly((Fraction(1),))
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.monic()
    return (p / g).monic()


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic pairwise-coprime factors with multiplicities.

    The product of factor**multiplicity equals p up to a constant.
    """
    if p.is_zero():
        raise ZeroPolynomial("decomposition of the zero polynomial")
    if p.degree == 0:
        return []
    f = p.monic()
    df = f.derivative()
    a = poly_gcd(f, df)
    if a.degree == 0:
        return [(f, 1)]
    b = f / a
    c = df / a
    d = c - b.derivative()
    out: list[tuple[Poly, int]] = []
    i = 1
    while b.degree > 0:
        ai = poly_gcd(b, d)
        if ai.degree > 0:
            out.append((ai, i))
        b = b / ai
        c = d / ai
        d = c - b.derivative()
        i += 1
    return out


# -- intervals ----------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    """Closed rational interval [lo, hi]."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return quad_sign(x - self.lo) >= 0 and quad_sign(self.hi - x) >= 0

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


# -- Sturm machinery ------------------------------------------------------------


def sturm_sequence(f: Poly) -> list[Poly]:
    """Sturm chain of a squarefree polynomial (primitive-rescaled)."""
    seq = [f.primitive()]
    d = f.derivative()
    if not d.is_zero():
        seq.append(d.primitive())
        while True:
            r = seq[-2] % seq[-1]
            if r.is_zero():
                break
            seq.append((-r).primitive())
    return seq


def _variations(signs: list[int]) -> int:
    out = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            out += 1
        prev = s
    return out


def _signs_at(seq: list[Poly], x) -> list[int]:
    return [quad_sign(p(x)) for p in seq]


def _signs_at_inf(seq: list[Poly], direction: int) -> list[int]:
    out = []
    for p in seq:
        s = quad_sign(p.leading)
        if direction < 0 and p.degree % 2 == 1:
            s = -s
        out.append(s)
    return out


def _count_on(seq: list[Poly], lo, hi) -> int:
    """Distinct roots on (lo, hi); None endpoints mean the infinities."""
    va = _variations(_signs_at(seq, lo) if lo is not None else _signs_at_inf(seq, -1))
    vb = _variations(_signs_at(seq, hi) if hi is not None else _signs_at_inf(seq, +1))
    return va - vb


def sturm_root_count(p: Poly, interval: Interval | None = None) -> int:
    """Count distinct real roots of p, on the whole line or inside an interval.

    Endpoints must not be roots (EndpointIsRoot otherwise); the count is of
    roots strictly between them.  Multiplicities are ignored: counting runs
    on the squarefree part.
    """
    if p.is_zero():
        raise ZeroPolynomial("root count of the zero polynomial")
    if p.degree == 0:
        return 0
    sf = squarefree_part(p)
    if interval is not None:
        if sf(interval.lo) == 0:
            raise EndpointIsRoot(f"left endpoint {interval.lo} is a root")
        if sf(interval.hi) == 0:
            raise EndpointIsRoot(f"right endpoint {interval.hi} is a root")
    seq = sturm_sequence(sf)
    if interval is None:
        return _count_on(seq, None, None)
    return _count_on(seq, interval.lo, interval.hi)


def count_roots_above(p: Poly, a: Fraction) -> int:
    """Distinct real roots of p on the open half-line (a, +infinity)."""
    if p.is_zero():
        raise ZeroPolynomial("root count of the zero polynomial")
    if p.degree == 0:
        return 0
    sf = squarefree_part(p)
    if sf(a) == 0:
        raise EndpointIsRoot(f"endpoint {a} is a root")
    return _count_on(sturm_sequence(sf), a, None)


# -- root isolation ----------------------------------------------------------


def cauchy_root_bound(p: Poly) -> Fraction:
    """B with every real root of p strictly inside (-B, B)."""
    if p.is_zero():
        raise ZeroPolynomial("root bound of the zero polynomial")
    lead = abs(Fraction(p.coeffs[-1]))
    if p.degree == 0:
        return Fraction(1)
    biggest = max(abs(Fraction(c)) for c in p.coeffs[:-1])
    return Fraction(1) + biggest / lead


def _nonroot_point(sf: Poly, lo: Fraction, hi: Fraction) -> Fraction:
    """A point near the middle of (lo, hi) that is not a root of sf."""
    width = hi - lo
    point = lo + width / 2
    step = width / 4
    while sf(point) == 0:
        point = point + step
        step = step / 2
    return point


def isolate_real_roots(p: Poly) -> list[tuple[Interval, int]]:
    """Isolating intervals for all real roots, ascending, with multiplicities.

    Intervals are pairwise disjoint, endpoints are never roots, and each
    contains exactly one distinct root of p strictly inside.  Coefficients
    must be rational (isolation is only ever needed over Q here).
    """
    if p.is_zero():
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    normalized = []
    for c in p.coeffs:
        if isinstance(c, QuadElem):
            if not c.is_rational():
                raise TypeError("root isolation expects rational coefficients")
            normalized.append(c.as_fraction())
        else:
            normalized.append(Fraction(c))
    p = Poly(normalized)
    if p.degree == 0:
        return []
    decomp = squarefree_decomposition(p)
    sf = squarefree_part(p)
    seq = sturm_sequence(sf)
    bound = cauchy_root_bound(sf)
    total = _count_on(seq, -bound, bound)
    intervals: list[Interval] = []
    stack = [(-bound, bound, total)]
    while stack:
        lo, hi, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            intervals.append(Interval(lo, hi))
            continue
        mid = _nonroot_point(sf, lo, hi)
        left = _count_on(seq, lo, mid)
        # Right side first so the stack pops left-to-right.
        stack.append((mid, hi, count - left))
        stack.append((lo, mid, left))
    intervals.sort(key=lambda iv: iv.lo)
    out: list[tuple[Interval, int]] = []
    for iv in intervals:
        mult = 0
        for factor, k in decomp:
            if factor.degree > 0 and _count_on(sturm_sequence(factor), iv.lo, iv.hi) == 1:
                mult = k
                break
        if mult == 0:
            raise ZeroPolynomial("internal: isolated interval matched no factor")
        out.append((iv, mult))
    return out


def refine_root_interval(p: Poly, interval: Interval, max_width: Fraction) -> Interval:
    """Shrink an isolating interval below max_width, root kept strictly inside.

    The interval must isolate exactly one root of p with non-root endpoints
    (as produced by isolate_real_roots).  If bisection lands on the root
    exactly, a tight interval straddling it is returned instead of a point.
    """
    max_width = Fraction(max_width)
    if max_width <= 0:
        raise ValueError("max_width must be positive")
    sf = squarefree_part(p)
    lo, hi = interval.lo, interval.hi
    s_lo = quad_sign(sf(lo))
    s_hi = quad_sign(sf(hi))
    if s_lo == 0 or s_hi == 0:
        raise EndpointIsRoot("refinement endpoints must not be roots")
    if s_lo == s_hi:
        raise ValueError("interval does not isolate a sign change of the squarefree part")
    while hi - lo > max_width:
        mid = (lo + hi) / 2
        s_mid = quad_sign(sf(mid))
        if s_mid == 0:
            # Rational root hit dead on; return a snug interval around it.
            radius = min(max_width / 2, (mid - lo) / 2, (hi - mid) / 2)
            return Interval(mid - radius, mid + radius)
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return Interval(lo, hi)
