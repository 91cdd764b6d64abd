import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intertwine.classical import (
    PolyGaussian1D,
    decay_check,
    dirac_family,
    ft_1d,
    integrate,
    l2_norm_sq,
    mollify_deficit,
    point_mollification,
)
from intertwine.errors import GridTooCoarse
from intertwine.exact import PiLaurent


def indicator(xs):
    xs = np.asarray(xs, dtype=float)
    return ((xs >= -1.0) & (xs <= 1.0)).astype(float)


def bump(xs):
    return np.exp(-np.asarray(xs, dtype=float) ** 2)


rational = st.fractions(min_value=Fraction(-5), max_value=Fraction(5), max_denominator=6)
width = st.fractions(min_value=Fraction(1, 6), max_value=Fraction(6), max_denominator=6)


def test_selfdual_gaussian():
    g = PolyGaussian1D({0: 1}, 1)
    assert ft_1d(g) == g


def test_dirac_family_transform():
    # the width-eps family maps to the width-(1/eps) Gaussian with unit coefficient
    v = dirac_family(Fraction(1, 2))
    assert ft_1d(v) == PolyGaussian1D({0: 1}, Fraction(1, 4))
    assert ft_1d(dirac_family(1)) == PolyGaussian1D({0: 1}, 1)


@pytest.mark.parametrize("eps", [Fraction(1), Fraction(1, 2), Fraction(1, 10)])
def test_dirac_unit_mass(eps):
    assert abs(integrate(dirac_family(eps)) - 1.0) < 1e-10


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(st.integers(min_value=0, max_value=4), rational, min_size=1, max_size=4), width)
def test_involution_exact(coeffs, q):
    coeffs = {n: PiLaurent.rational(c) for n, c in coeffs.items()}
    f = PolyGaussian1D(coeffs, q)
    assert ft_1d(ft_1d(f)) == f.reflected()


@settings(max_examples=15, deadline=None)
@given(st.dictionaries(st.integers(min_value=0, max_value=3), rational, min_size=1, max_size=3), width)
def test_plancherel(coeffs, q):
    coeffs = {n: PiLaurent.rational(c) for n, c in coeffs.items()}
    f = PolyGaussian1D(coeffs, q)
    lhs = l2_norm_sq(f)
    rhs = l2_norm_sq(ft_1d(f))
    assert abs(lhs - rhs) <= 1e-10 * max(1.0, lhs)


def test_width_must_be_positive():
    with pytest.raises(ValueError):
        PolyGaussian1D({0: 1}, 0)
    with pytest.raises(ValueError):
        dirac_family(Fraction(-1, 2))


def test_mollify_deficit_decreasing_for_indicator():
    deficits = [mollify_deficit(indicator, e, 2.0) for e in (0.4, 0.2, 0.1)]
    assert deficits[0] > deficits[1] > deficits[2]


def test_mollify_smooth_bump_small():
    val = mollify_deficit(bump, 0.1, 1.0)
    l1 = float(np.trapezoid(bump(np.linspace(-4, 4, 8193)), np.linspace(-4, 4, 8193)))
    assert val < 0.05 * l1


def test_mollify_zero_function():
    assert mollify_deficit(lambda xs: 0.0 * np.asarray(xs), 0.2, 2.0) == 0.0


def test_mollify_grid_guard():
    with pytest.raises(GridTooCoarse):
        mollify_deficit(indicator, 0.1, 2.0, spacing=0.05)


def test_pointwise_inversion_probe():
    probes = [abs(point_mollification(bump, 0.3, e) - bump(np.array([0.3]))[0]) for e in (0.4, 0.2, 0.1, 0.05)]
    assert all(a > b for a, b in zip(probes, probes[1:]))


def test_decay_check_l1_bound():
    sup0 = decay_check(bump, 0)
    xs = np.linspace(-6, 6, 4097)
    l1 = float(np.trapezoid(bump(xs), xs))
    assert sup0 <= l1 + 1e-6


def test_decay_check_smoothness_gain():
    # the weighted sup at n = 2 is controlled by the second-derivative mass
    sup2 = decay_check(bump, 2)
    xs = np.linspace(-6, 6, 8193)
    h = xs[1] - xs[0]
    vals = bump(xs)
    second = np.gradient(np.gradient(vals, h), h)
    l1_second = float(np.trapezoid(np.abs(second), xs))
    assert sup2 <= l1_second / (2 * math.pi) ** 2 + 1e-3


def test_decay_check_zero():
    assert decay_check(lambda xs: 0.0 * np.asarray(xs), 2) == 0.0


def test_evaluation_matches_symbolic():
    rng = random.Random(0)
    f = PolyGaussian1D({0: PiLaurent.rational(2), 3: PiLaurent.rational(Fraction(-1, 3))}, Fraction(2, 3))
    g = ft_1d(f)
    # numeric transform at a sample point as an independent check
    xs = np.linspace(-9, 9, 36001)
    fx = f.eval_array(xs)
    for xi in (0.0, 0.35, -1.2):
        direct = np.trapezoid(fx * np.exp(-2j * math.pi * xs * xi), xs)
        assert abs(direct - g(xi)) < 1e-8


def test_decay_check_accepts_symbolic_input():
    f = PolyGaussian1D({0: PiLaurent.rational(1), 2: PiLaurent.rational(Fraction(1, 2))}, 1)
    val0 = decay_check(f, 0)
    val3 = decay_check(f, 3)
    assert 0 < val0 < 10
    assert val3 < 10  # rapidly decreasing transform keeps every weighted sup finite
