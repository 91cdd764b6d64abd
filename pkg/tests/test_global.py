import cmath
import math
import random
from fractions import Fraction

import numpy as np
import pytest

from intertwine.arch import ArchParams, Place, mu_arch, mu_arch_logderiv
from intertwine.errors import PoleError, RangeError
from intertwine.globalq import (
    GlobalKType,
    GlobalSpectralPoint,
    completed_zeta,
    height_bound_check,
    height_wn,
    laplace_eigenvalue,
    maass_selberg,
    maass_selberg_onaxis,
    mu_global,
    mu_global_factor,
    residue_at_one,
    residue_at_zero,
    residue_constant,
    riemann_zeta,
    sobolev_term_decay_slope,
    sobolev_weight_sum,
)


def test_zeta_reference_values():
    assert abs(riemann_zeta(2.0) - math.pi**2 / 6) < 1e-12
    assert abs(riemann_zeta(4.0) - math.pi**4 / 90) < 1e-12
    assert abs(riemann_zeta(-1.0) + Fraction(1, 12)) < 1e-10
    assert abs(riemann_zeta(0.0) + 0.5) < 1e-11


def test_completed_zeta_value_and_poles():
    assert abs(completed_zeta(2.0) - math.pi / 6) < 1e-12
    with pytest.raises(PoleError):
        completed_zeta(0.0)
    with pytest.raises(PoleError):
        completed_zeta(1.0)


def test_functional_equation_grid():
    rng = random.Random(0)
    worst = 0.0
    for t in np.linspace(0.1, 50.0, 41):
        z = complex(rng.uniform(0.05, 0.95), t)
        worst = max(worst, abs(completed_zeta(z) - completed_zeta(1 - z)))
    assert worst < 1e-9


def test_functional_equation_near_denominator_zeros():
    # the alternating-series denominator vanishes on these lines; the
    # fallback route must keep full accuracy there
    for k in (1, 2, 3):
        z = complex(1.0, 2 * math.pi * k / math.log(2))
        assert abs(completed_zeta(z) - completed_zeta(1 - z)) < 1e-9
        assert abs(completed_zeta(z + 0.01) - completed_zeta(1 - z - 0.01)) < 1e-9


def test_schwarz_reflection():
    for y in np.linspace(0.1, 20, 40):
        lhs = completed_zeta(1 - 2j * y)
        rhs = completed_zeta(1 + 2j * y).conjugate()
        assert abs(lhs - rhs) < 1e-10 * max(1.0, abs(lhs))


def test_global_factor_modulus_grid():
    for y in np.linspace(0.1, 20, 100):
        assert abs(abs(mu_global_factor(y)) - 1.0) < 1e-8


def test_global_factor_center_limit():
    assert mu_global_factor(0.0) == -1.0 + 0j
    # continuity: small y stays near the limit
    assert abs(mu_global_factor(1e-4) + 1.0) < 1e-2


def test_residues():
    assert abs(residue_at_one() - 1.0) < 1e-8
    assert abs(residue_at_zero() - 1.0) < 1e-7
    assert abs(residue_constant() - 3 / math.pi) < 1e-6


def test_mu_global_product():
    pt = GlobalSpectralPoint(1.0)
    # trivial type: the bare completed-zeta ratio
    assert abs(mu_global(pt, GlobalKType()) - mu_global_factor(1.0)) < 1e-14
    # real-place weight only
    kt = GlobalKType(real_weight=2)
    expected = mu_global_factor(1.0) * mu_arch(ArchParams(Place.REAL, 1j, 0.0, 0), 2).value
    assert abs(mu_global(pt, kt) - expected) < 1e-12
    # mixed data stays unitary
    rng = random.Random(3)
    for _ in range(50):
        kt = GlobalKType(
            real_weight=2 * rng.randint(0, 3),
            finite_weights=tuple((p, rng.randint(0, 2)) for p in rng.sample((3, 5, 7, 11), 2)),
        )
        val = mu_global(GlobalSpectralPoint(rng.uniform(0.1, 5.0)), kt)
        assert abs(abs(val) - 1.0) < 1e-8


def test_ktype_validation():
    with pytest.raises(RangeError):
        GlobalKType(real_weight=1)
    with pytest.raises(RangeError):
        GlobalKType(finite_weights=((5, -1),))


def test_laplace_values():
    assert laplace_eigenvalue(Place.REAL, 0, 0, 0) == 0.25
    assert laplace_eigenvalue(Place.COMPLEX, 0, 0, 2, 0) == 4.25
    assert laplace_eigenvalue(Place.REAL, 1, 0, 1) == 1.75
    for n in range(0, 20, 2):
        lo = laplace_eigenvalue(Place.COMPLEX, 0.3, 0.1, n, 0)
        hi = laplace_eigenvalue(Place.COMPLEX, 0.3, 0.1, n + 2, 0)
        assert 0 < lo < hi


def test_maass_selberg_positive_and_scaling():
    # a unitary scalar model off the axis gives a positive value
    s = complex(0.1, 0.6)
    m = mu_arch(ArchParams(Place.COMPLEX, s, 0.0, 0), 4).value
    val = maass_selberg(s, 2.0, 1.0, abs(m), m.conjugate())
    assert val > 0
    # doubling the height adds 2 log 2 in the axis limit with flat phase
    v1 = maass_selberg_onaxis(0.3, 2.0, cmath.exp(0.4j), 0.0)
    v2 = maass_selberg_onaxis(0.3, 4.0, cmath.exp(0.4j), 0.0)
    assert abs((v2 - v1) - 2 * math.log(2)) < 1e-12


def test_maass_selberg_limit_consistency():
    for (y, c) in ((0.7, 2.0), (1.5, 3.0)):
        pa = ArchParams(Place.COMPLEX, 1j * y, 0.0, 0)
        m_iy = mu_arch(pa, 4).value
        m_prime = m_iy * mu_arch_logderiv(pa, 4)
        target = maass_selberg_onaxis(y, c, m_iy, m_prime)
        sigmas = (1e-2, 1e-3, 1e-4)
        vals = []
        for sig in sigmas:
            m = mu_arch(ArchParams(Place.COMPLEX, complex(sig, y), 0.0, 0), 4).value
            vals.append(maass_selberg(complex(sig, y), c, 1.0, abs(m), m.conjugate()))
        mat = np.array([[1.0, s, s * s] for s in sigmas])
        extrap = float(np.linalg.solve(mat, np.array(vals))[0])
        assert abs(extrap - target) < 1e-6


def test_maass_selberg_selfdual_branch():
    y0, c0 = 0.5, 2.0
    m0 = mu_global_factor(y0)
    h = 1e-5
    m0p = (mu_global_factor(y0 + h) - mu_global_factor(y0 - h)) / (2 * h) * (-1j)
    onax = maass_selberg_onaxis(y0, c0, m0, m0p, is_selfdual=True)
    sigmas = (1e-2, 1e-3, 1e-4)
    vals = []
    for sig in sigmas:
        s = complex(sig, y0)
        m = completed_zeta(1 - 2 * s) / completed_zeta(1 + 2 * s)
        vals.append(maass_selberg(s, c0, 1.0, abs(m), m.conjugate(), 0.0, True))
    mat = np.array([[1.0, sg, sg * sg] for sg in sigmas])
    extrap = float(np.linalg.solve(mat, np.array(vals))[0])
    assert abs(extrap - onax) < 1e-5


def test_maass_selberg_selfdual_center_limit():
    # at the center the model value is -1 and the capped form stays finite,
    # bounded by 2 log c plus the derivative size
    h = 1e-5
    m0p = (mu_global_factor(2 * h) - mu_global_factor(h)) / h * (-1j)
    val = maass_selberg_onaxis(0.0, 2.0, -1.0 + 0j, m0p, is_selfdual=True)
    assert math.isfinite(val)
    assert abs(val) <= 2 * math.log(2.0) + abs(m0p) + abs(m0p.real) + 1e-9


def test_maass_selberg_guards():
    with pytest.raises(ValueError):
        maass_selberg(0.6j, 2.0, 1.0, 1.0, 1.0)
    with pytest.raises(ZeroDivisionError):
        maass_selberg(complex(0.1, 0.0), 2.0, 1.0, 1.0, 1.0, 0.0, True)
    with pytest.raises(ValueError):
        maass_selberg_onaxis(0.5, 2.0, 2.0 + 0j, 0.0)


def test_heights():
    assert height_wn(Place.REAL, 0.0) == 1.0
    assert height_wn(Place.REAL, 2.0) == 0.25
    assert height_wn(Place.REAL, 0.5) == 1.0
    assert abs(height_wn(Place.COMPLEX, 2.0 + 0j) - 2.0**-4) < 1e-15
    assert height_wn(5, Fraction(1, 5)) == 5.0**-2
    assert height_wn(5, Fraction(1)) == 1.0
    assert height_wn(5, Fraction(0)) == 1.0
    rng = random.Random(1)
    assert height_bound_check(Place.REAL, [rng.uniform(-9, 9) for _ in range(100)])
    assert height_bound_check(Place.COMPLEX, [complex(rng.uniform(-4, 4), rng.uniform(-4, 4)) for _ in range(100)])
    assert height_bound_check(7, [Fraction(rng.randint(-300, 300), rng.choice((1, 7, 49))) for _ in range(100)])


def test_sobolev_sums():
    s1 = sobolev_weight_sum(3, 50.0, 20)
    s2 = sobolev_weight_sum(3, 100.0, 40)
    s3 = sobolev_weight_sum(3, 200.0, 80)
    assert abs(s3 - s2) < 0.01 * abs(s2)
    assert abs(s3 - s2) < abs(s2 - s1)
    # termwise domination in the exponent
    assert sobolev_weight_sum(3, 50.0, 20) < sobolev_weight_sum(2, 50.0, 20)
    with pytest.raises(RangeError):
        sobolev_weight_sum(1, 10.0, 4)


def test_sobolev_slope():
    slope = sobolev_term_decay_slope(3)
    assert abs(slope - (4 - 12)) < 0.25
    slope2 = sobolev_term_decay_slope(2)
    assert abs(slope2 - (4 - 8)) < 0.25
