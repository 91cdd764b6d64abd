import math
from fractions import Fraction

import numpy as np
import pytest

from intertwine.errors import ParityError, RangeError
from intertwine.exact import PiLaurent, VarPoly
from intertwine.harmonics import (
    LieGen,
    SU2Point,
    W_INV_POINT,
    gram_matrix,
    haar_integrate_su2,
    harmonic_so2,
    harmonic_su2,
    lie_act_su2,
    norm_su2_closed,
    norm_su2_closed_exact,
    normalized_harmonic_su2,
    su2_from_integers,
)
from intertwine.numerics import quad_halfline


def conj_poly(poly: VarPoly) -> VarPoly:
    return VarPoly(4, {(c, d, a, b): coeff.conjugate() for (a, b, c, d), coeff in poly.terms.items()})


def test_lowest_weight_vectors():
    assert harmonic_su2(0, 0, 0).poly == VarPoly.monomial(4, (0, 0, 0, 0))
    assert harmonic_su2(0, 2, 0).poly == VarPoly.monomial(4, (1, 0, 0, 1))
    # raising once from (0,2,0), divided by n - k = 2, reproduces k = 1
    raised = lie_act_su2(LieGen.XPLUS, harmonic_su2(0, 2, 0)).scale(PiLaurent.rational(Fraction(1, 2)))
    assert raised == harmonic_su2(0, 2, 1).poly


def test_index_validation():
    with pytest.raises(ParityError):
        harmonic_su2(1, 2, 0)
    with pytest.raises(RangeError):
        harmonic_su2(4, 2, 0)
    with pytest.raises(RangeError):
        harmonic_su2(0, 2, 3)


def test_ladder_exact_through_six():
    for n0 in range(-6, 7):
        for n in range(abs(n0), 7):
            if (n - n0) % 2:
                continue
            for k in range(n):
                lhs = lie_act_su2(LieGen.XPLUS, harmonic_su2(n0, n, k))
                assert lhs == harmonic_su2(n0, n, k + 1).poly.scale(n - k)
            # top of the ladder annihilates
            assert lie_act_su2(LieGen.XPLUS, harmonic_su2(n0, n, n)).is_zero()
            # lowest vector is killed by the lowering operator
            assert lie_act_su2(LieGen.XMINUS, harmonic_su2(n0, n, 0)).is_zero()


def test_weight_eigenvalues_exact():
    for (n0, n, k) in ((0, 2, 1), (2, 4, 0), (-1, 3, 2), (1, 5, 4)):
        h = harmonic_su2(n0, n, k)
        assert lie_act_su2(LieGen.LH, h) == h.poly.scale(PiLaurent.rational(0, -n0))
        assert lie_act_su2(LieGen.RH, h) == h.poly.scale(PiLaurent.rational(0, n - 2 * k))


def test_closed_norms():
    assert norm_su2_closed_exact(0, 0, 0) == 1
    assert norm_su2_closed_exact(0, 2, 1) == Fraction(1, 12)
    assert norm_su2_closed_exact(2, 2, 0) == Fraction(1, 3)


def test_norm_quadrature_oracle():
    for (n0, n, k) in ((2, 2, 0), (0, 2, 1), (1, 3, 1), (-2, 4, 2)):
        h = harmonic_su2(n0, n, k)
        quad = haar_integrate_su2(h.poly * conj_poly(h.poly)).real
        assert abs(quad - norm_su2_closed(n0, n, k)) < 1e-6


def test_gram_identity_through_four():
    harms = []
    for n in range(5):
        for n0 in range(-n, n + 1, 2):
            for k in range(n + 1):
                harms.append(normalized_harmonic_su2(n0, n, k))
    G = gram_matrix(harms, n_theta=24, n_phi=24)
    assert abs(G - np.eye(len(harms))).max() < 1e-6


def test_haar_basic_values():
    assert abs(haar_integrate_su2(VarPoly.monomial(4, (0, 0, 0, 0))) - 1.0) < 1e-10
    assert abs(haar_integrate_su2(VarPoly.monomial(4, (1, 0, 1, 0))) - 0.5) < 1e-10
    assert abs(haar_integrate_su2(VarPoly.monomial(4, (1, 0, 0, 1)))) < 1e-12


def test_haar_accepts_callable():
    val = haar_integrate_su2(lambda pt: abs(pt.z1) ** 2, start=8)
    assert abs(val - 0.5) < 1e-8


def test_measure_calibration():
    # product of the radial Gaussian moment and the polar constant: the
    # plane measure is twice Lebesgue per complex coordinate
    radial = quad_halfline(lambda r: math.exp(-r * r) * r**3).real
    total = 8 * math.pi**2 * radial
    assert abs(total - 4 * math.pi**2) < 1e-8


def test_su2_point_validation():
    with pytest.raises(ValueError):
        SU2Point(1.0 + 0j, 0.5 + 0j)
    pt = su2_from_integers(2, 1, 1, 1)
    assert abs(abs(pt.z1) ** 2 + abs(pt.z2) ** 2 - 1) < 1e-15


def test_quaternion_product_and_weyl():
    pt = su2_from_integers(1, 2, 3, 1)
    w_inv_pt = W_INV_POINT.mul(pt)
    assert abs(w_inv_pt.z1 - (-pt.z2.conjugate())) < 1e-15
    assert abs(w_inv_pt.z2 - pt.z1.conjugate()) < 1e-15


def test_so2_characters():
    assert harmonic_so2(0).poly == VarPoly.monomial(2, (0, 0))
    assert harmonic_so2(3).poly == VarPoly.monomial(2, (3, 0))
    assert harmonic_so2(-2).poly == VarPoly.monomial(2, (0, 2))
    # unit norm and orthogonality on the circle, trapezoid is exact here
    thetas = np.linspace(0, 2 * math.pi, 64, endpoint=False)
    zs = np.exp(1j * thetas)
    e3 = zs**3
    em2 = np.conj(zs) ** 2
    assert abs(np.mean(np.abs(e3) ** 2) - 1.0) < 1e-14
    assert abs(np.mean(e3 * np.conj(em2))) < 1e-14


def test_haar_moment_via_polar_identity():
    # |z1|^2 against the Gaussian-moment oracle: the plane integral of
    # exp(-r^2) |z1|^2 computed once with the polar constant 8 pi^2 and once
    # as a product of one-coordinate moments (plane measure twice Lebesgue)
    radial = quad_halfline(lambda r: math.exp(-r * r) * r**5).real
    haar_val = haar_integrate_su2(VarPoly.monomial(4, (1, 0, 1, 0))).real
    polar = 8 * math.pi**2 * radial * haar_val
    product = (2 * math.pi) * (2 * math.pi)  # moment factor times plain Gaussian mass
    assert abs(polar - product) < 1e-8 * product
    assert abs(haar_val - 0.5) < 1e-10
