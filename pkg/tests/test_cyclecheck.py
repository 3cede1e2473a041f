"""Closed-form spectrum checks for the cycle-complement family."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from coxcert import (
    SPECTRUM_TOLERANCE,
    circulant_identity_ok,
    cycle_complement,
    predicted_spectrum,
    verify_cycle_example,
)

F = Fraction


def test_predicted_spectrum_n6_t1():
    pred = predicted_spectrum(6, 1)
    assert pred.special == F(-2)
    # 1 + t + 2 t cos(2 pi k / 6) for k = 1, 2, 3
    values = {k: (mult, value) for k, mult, value in pred.family}
    assert values[1][0] == 2 and abs(values[1][1] - 3.0) < 1e-12
    assert values[2][0] == 2 and abs(values[2][1] - 1.0) < 1e-12
    assert values[3][0] == 1 and abs(values[3][1] - 0.0) < 1e-12


def test_predicted_spectrum_n5_t2_golden_ratio():
    pred = predicted_spectrum(5, 2)
    assert pred.special == F(-3)
    phi = (1.0 + math.sqrt(5.0)) / 2.0
    values = {k: value for k, _mult, value in pred.family}
    assert abs(values[1] - (1.0 + 2.0 * phi)) < 1e-12
    assert abs(values[2] - (2.0 - math.sqrt(5.0))) < 1e-12


def test_predicted_multiplicities_sum_to_n():
    for n in range(5, 13):
        pred = predicted_spectrum(n, 1)
        assert 1 + sum(mult for _k, mult, _v in pred.family) == n


def test_predicted_eigenvalue_sum_is_trace():
    # the pencil has unit diagonal, so the eigenvalues sum to n at every t
    for n in (5, 6, 7, 9):
        for t in (F(1), F(3, 2), F(4)):
            pred = predicted_spectrum(n, t)
            total = float(pred.special) + sum(m * v for _k, m, v in pred.family)
            assert abs(total - n) < 1e-9


def test_circulant_identity():
    for n in range(5, 9):
        assert circulant_identity_ok(n)


def test_verify_cycle_n5_pinned():
    rep = verify_cycle_example(5)
    assert rep.d_value == 2
    assert rep.t_checked == F(3)
    assert rep.identity_ok
    assert (rep.signature.p, rep.signature.q, rep.signature.z) == (2, 3, 0)
    assert rep.signature_ok
    assert rep.special_eigenvalue == F(-5)
    assert rep.special_is_root
    assert rep.spectrum_ok
    assert rep.max_deviation <= SPECTRUM_TOLERANCE
    assert rep.ok


def test_verify_cycle_small_range():
    for n in (6, 7):
        rep = verify_cycle_example(n)
        assert rep.ok, (n, rep)
        assert len(rep.matched_pairs) == 1 + n // 2
        third = 2 * (n // 3)
        assert rep.expected_signature.p == third
        assert rep.expected_signature.q == n - third


def test_cycle_complement_guard():
    with pytest.raises(Exception):
        cycle_complement(4)
