"""Closed-form spectral checks for the cycle-complement family.

For the diagram on n vertices whose free pairs are exactly the consecutive
pairs of an n-cycle, the pencil matrix is circulant:

    M_d = (1 + d) I + d (J + J^{n-1}) - d (J^0 + J^1 + ... + J^{n-1})

with J the cyclic shift.  Its eigenvalues are therefore explicit:

    1 - d (n - 3)                   once (frequency 0),
    1 + d (1 + 2 cos(2 pi k / n))   for k = 1..n-1 (k and n-k agree).

verify_cycle_example certifies three things for one n: the circulant
identity as an exact polynomial-matrix identity, the stable signature
(2 floor(n/3), n - 2 floor(n/3), 0), and the numerical spectrum at the
first integer past the threshold against the closed form.  Only the last
comparison uses floats, with the exact roots refined far below the
comparison tolerance first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .diagram import cycle_complement
from .exactcore import (
    Poly,
    Signature,
    char_poly,
    isolate_real_roots,
    refine_root_interval,
    squarefree_part,
)
from .gram import d_threshold, evaluate_pencil, gram_pencil, stable_signature

SPECTRUM_TOLERANCE = 1e-9
_REFINE_WIDTH = Fraction(1, 10**12)


@dataclass(frozen=True)
class SpectrumPrediction:
    """Closed-form eigenvalues of the cycle-complement pencil at one point."""

    n: int
    t: Fraction
    special: Fraction  # the frequency-0 eigenvalue, always rational
    family: tuple  # (k, multiplicity, float value) for k = 1..floor(n/2)


def predicted_spectrum(n: int, t) -> SpectrumPrediction:
    t = Fraction(t)
    special = 1 - t * (n - 3)
    family = []
    for k in range(1, n // 2 + 1):
        mult = 1 if 2 * k == n else 2
        value = float(1 + t) + float(2 * t) * math.cos(2.0 * math.pi * k / n)
        family.append((k, mult, value))
    return SpectrumPrediction(n=n, t=t, special=special, family=tuple(family))


def circulant_identity_ok(n: int) -> bool:
    """Check M_d == (1+d) I + d (J + J^{n-1}) - d * (all-ones), exactly in Q[d]."""
    pencil = gram_pencil(cycle_complement(n))
    d = Poly((Fraction(0), Fraction(1)))
    one = Poly((Fraction(1),))
    zero = Poly(())
    for i in range(n):
        for j in range(n):
            shift = 1 if (i - j) % n in (1, n - 1) else 0
            rhs = -d + (one if shift else zero) * d
            if i == j:
                rhs = rhs + one + d
            if pencil.entries[i][j] != rhs:
                return False
    return True


@dataclass(frozen=True)
class CycleReport:
    """Everything verified for one member of the cycle-complement family."""

    n: int
    d_value: int
    t_checked: Fraction
    identity_ok: bool
    signature: Signature
    expected_signature: Signature
    signature_ok: bool
    special_eigenvalue: Fraction
    special_is_root: bool
    matched_pairs: tuple  # (predicted float, observed float, multiplicity)
    max_deviation: float
    spectrum_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.identity_ok
            and self.signature_ok
            and self.special_is_root
            and self.spectrum_ok
        )


def _predicted_multiset(pred: SpectrumPrediction) -> list:
    values = [(float(pred.special), 1)]
    for _k, mult, value in pred.family:
        values.append((value, mult))
    values.sort()
    return values


def _observed_multiset(mat) -> list:
    cp = char_poly(mat)
    sf = squarefree_part(cp)
    out = []
    for interval, mult in isolate_real_roots(cp):
        tight = refine_root_interval(sf, interval, _REFINE_WIDTH)
        out.append((float(tight.mid), mult))
    out.sort()
    return out


def verify_cycle_example(n: int) -> CycleReport:
    """Run the full battery for cycle_complement(n); see the module docstring."""
    g = cycle_complement(n)
    pencil = gram_pencil(g)
    d_value, _interval = d_threshold(pencil)
    t = Fraction(d_value + 1)

    identity_ok = circulant_identity_ok(n)

    signature = stable_signature(pencil)
    third = 2 * (n // 3)
    expected = Signature(third, n - third, 0)
    signature_ok = signature == expected

    prediction = predicted_spectrum(n, t)
    mat = evaluate_pencil(pencil, t)
    cp = char_poly(mat)
    special_is_root = cp(prediction.special) == 0

    predicted = _predicted_multiset(prediction)
    observed = _observed_multiset(mat)
    pairs = []
    max_dev = 0.0
    spectrum_ok = len(predicted) == len(observed)
    if spectrum_ok:
        for (pv, pm), (ov, om) in zip(predicted, observed):
            dev = abs(pv - ov)
            max_dev = max(max_dev, dev)
            pairs.append((pv, ov, pm))
            if pm != om or dev > SPECTRUM_TOLERANCE:
                spectrum_ok = False

    return CycleReport(
        n=n,
        d_value=d_value,
        t_checked=t,
        identity_ok=identity_ok,
        signature=signature,
        expected_signature=expected,
        signature_ok=signature_ok,
        special_eigenvalue=prediction.special,
        special_is_root=special_is_root,
        matched_pairs=tuple(pairs),
        max_deviation=max_dev,
        spectrum_ok=spectrum_ok,
    )
