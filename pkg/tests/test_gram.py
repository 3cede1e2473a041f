"""Pencil construction, epsilon/D thresholds, stable signatures.

The pinned rho values have independent closed forms: the triangle's minors
are 1, 1-d^2, (1-2d)(1+d)^2 so rho = 1/2; the path P3 gives 1-2d^2 so
rho = 1/sqrt 2; the star K13 gives 1-3d^2 so rho = 1/sqrt 3.  All membership
checks below compare squares, never floats.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from coxcert import (
    CoxeterDiagram,
    Poly,
    QuadElem,
    Signature,
    cycle_complement,
    d_threshold,
    epsilon_threshold,
    evaluate_pencil,
    gram_pencil,
    minor_polynomials,
    stable_signature,
    threshold_report,
)
from coxcert.errors import DegenerateAtD

F = Fraction

K3 = CoxeterDiagram(3, frozenset({(1, 2), (1, 3), (2, 3)}))
P3 = CoxeterDiagram(3, frozenset({(1, 2), (2, 3)}))
K13 = CoxeterDiagram(4, frozenset({(1, 2), (1, 3), (1, 4)}))


def test_pencil_entries():
    pencil = gram_pencil(P3)
    d = Poly((0, 1))
    one = Poly((1,))
    assert pencil.entries[0][0] == one
    assert pencil.entries[0][1] == -d  # edge (1,2)
    assert pencil.entries[0][2] == Poly(())  # commuting pair
    assert pencil.entries[1][2] == -d


def test_evaluate_pencil_types():
    pencil = gram_pencil(K3)
    m_int = evaluate_pencil(pencil, 2)
    assert m_int[0][1] == F(-2)
    m_frac = evaluate_pencil(pencil, F(1, 2))
    assert m_frac[0][1] == F(-1, 2)
    alpha = QuadElem(1, 1, 2)
    m_quad = evaluate_pencil(pencil, alpha)
    assert m_quad[0][1] == -alpha
    assert m_quad[0][0] == 1


def test_minor_polynomials_pinned():
    assert minor_polynomials(gram_pencil(K3)) == [
        Poly((1,)),
        Poly((1, 0, -1)),
        Poly((1, 0, -3, -2)),
    ]
    assert minor_polynomials(gram_pencil(P3)) == [
        Poly((1,)),
        Poly((1, 0, -1)),
        Poly((1, 0, -2)),
    ]
    # K13 determinant: 1 - 3 d^2
    assert minor_polynomials(gram_pencil(K13))[3] == Poly((1, 0, -3))


def test_epsilon_thresholds_pinned():
    eps3, rho3 = epsilon_threshold(gram_pencil(K3))
    assert F(1, 4) <= eps3 < F(1, 2)
    assert rho3.lo <= F(1, 2) <= rho3.hi  # rho(K3) = 1/2 exactly

    eps_p, rho_p = epsilon_threshold(gram_pencil(P3))
    assert eps_p ** 2 < F(1, 2)  # eps < 1/sqrt2
    assert rho_p.lo ** 2 <= F(1, 2) <= rho_p.hi ** 2

    eps_s, rho_s = epsilon_threshold(gram_pencil(K13))
    assert eps_s ** 2 < F(1, 3)
    assert rho_s.lo ** 2 <= F(1, 3) <= rho_s.hi ** 2


def test_epsilon_certified_properties():
    for g in (K3, P3, K13, cycle_complement(5), cycle_complement(6)):
        pencil = gram_pencil(g)
        eps, rho = epsilon_threshold(pencil)
        assert 0 < eps < 1
        assert rho.width < rho.lo / 1024
        # every leading principal minor is strictly positive at both ends
        for p in minor_polynomials(pencil):
            assert p(eps) > 0
            assert p(-eps) > 0


def test_d_thresholds_pinned():
    assert d_threshold(gram_pencil(K3))[0] == 1
    assert d_threshold(gram_pencil(P3))[0] == 1
    D5, largest = d_threshold(gram_pencil(cycle_complement(5)))
    assert D5 == 2
    # the largest root is the golden ratio: a root of d^2 - d - 1
    phi_poly = Poly((-1, -1, 1))
    assert phi_poly(largest.lo) * phi_poly(largest.hi) < 0
    assert largest.hi < 2


def test_stable_signatures_pinned():
    assert stable_signature(gram_pencil(K3)) == Signature(2, 1, 0)
    assert stable_signature(gram_pencil(cycle_complement(5))) == Signature(2, 3, 0)
    assert stable_signature(gram_pencil(cycle_complement(6))) == Signature(4, 2, 0)


def test_stable_signature_rejects_degenerate_point():
    # det of the K3 pencil vanishes at d = 1/2
    with pytest.raises(DegenerateAtD):
        stable_signature(gram_pencil(K3), F(1, 2))


def test_signature_constant_beyond_d():
    for g in (K3, P3, K13, cycle_complement(5)):
        pencil = gram_pencil(g)
        D, _ = d_threshold(pencil)
        base = stable_signature(pencil)
        for t in (F(D), F(D) + F(1, 3), F(2 * D), F(10 * D)):
            assert stable_signature(pencil, t) == base


def test_shared_root_across_minors():
    # two disjoint edges: minors 1, 1, 1-d^2, (1-d^2)^2 all share the root 1,
    # exercising the exact tie-breaking in the minimum-of-algebraics step
    g = CoxeterDiagram(4, frozenset({(1, 2), (3, 4)}))
    eps, rho = epsilon_threshold(gram_pencil(g))
    assert rho.lo <= 1 <= rho.hi
    assert eps < 1


def test_edgeless_pencil_has_no_roots():
    g = CoxeterDiagram(3, frozenset())
    eps, rho = epsilon_threshold(gram_pencil(g))
    assert rho is None
    assert eps == F(1023, 1024)
    D, largest = d_threshold(gram_pencil(g))
    assert D == 1 and largest is None


def test_threshold_report_bundles_everything():
    rep = threshold_report(gram_pencil(K3))
    assert rep.epsilon == epsilon_threshold(gram_pencil(K3))[0]
    assert rep.d_value == 1
    assert rep.signature == Signature(2, 1, 0)


def test_positive_definite_inside_epsilon_band():
    # sample points strictly inside (-eps, eps): all minors positive
    pencil = gram_pencil(cycle_complement(5))
    eps, _ = epsilon_threshold(pencil)
    for t in (F(0), eps / 2, -eps / 2, eps * F(99, 100)):
        minors = [p(t) for p in minor_polynomials(pencil)]
        assert all(v > 0 for v in minors)
