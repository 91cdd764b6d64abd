"""Acceptance criteria, one test per criterion, each printing a verdict line.

Every tolerance is pinned here to its contractual value; sample counts match
the stated sizes.  Run with -s (or read the captured output) to see the
per-criterion lines.
"""

import math
import random
import time
from fractions import Fraction

import numpy as np

from intertwine.arch import (
    ArchParams,
    Place,
    mu_arch,
    mu_arch_derivative,
    mu_arch_derivative_bound,
    mu_arch_oracle,
)
from intertwine.classical import PolyGaussian1D, ft_1d, l2_norm_sq, mollify_deficit
from intertwine.exact import PiLaurent
from intertwine.globalq import (
    height_wn,
    maass_selberg,
    maass_selberg_onaxis,
    mu_global_factor,
    residue_at_one,
    residue_constant,
    sobolev_weight_sum,
)
from intertwine.harmonics import (
    LieGen,
    gram_matrix,
    haar_integrate_su2,
    harmonic_su2,
    lie_act_su2,
    norm_su2_closed,
    normalized_harmonic_su2,
)
from intertwine.exact import VarPoly
from intertwine.numerics import GammaKind, bessel_k, bessel_k_alt, kernel_ka, kernel_ka_quad
from intertwine.padic import (
    AddChar,
    CharAtom,
    FiniteParams,
    MultChar,
    SimpleFunction,
    TailAtom,
    classical_vector,
    fourier_atom,
    fourier_bruteforce,
    g_normalized,
    level_membership,
    mu_finite,
    mu_finite_derivative,
    mu_finite_derivative_bound,
    mu_finite_oracle,
    unit_additive_integral,
)
from intertwine.arch import mu_arch_logderiv


def _verdict(number: int, ok: bool, detail: str):
    status = "PASS" if ok else "FAIL"
    print(f"[criterion {number:2d}] {status}: {detail}")
    assert ok, f"criterion {number} failed: {detail}"


def _finite_shapes(p: int, s, mu, psi_c=0):
    tr = MultChar.trivial(p)
    chi1 = MultChar(p, 1, 1)
    chi1b = MultChar(p, 1, 2) if p > 3 else chi1
    chi2 = MultChar(p, 2, 1)
    psi = AddChar(p, psi_c)
    return [
        FiniteParams(p, s, mu, chi1, chi1b, psi),
        FiniteParams(p, s, mu, chi1, tr, psi),
        FiniteParams(p, s, mu, tr, chi2, psi),
        FiniteParams(p, s, mu, tr, tr, psi),
    ]


def test_criterion_01_axis_unitarity():
    start = time.perf_counter()
    rng = random.Random(101)
    worst = 0.0
    for _ in range(200):
        y, mu = rng.uniform(-5, 5), rng.uniform(-2, 2)
        n0 = rng.randint(-3, 3)
        n = abs(n0) + 2 * rng.randint(0, 4)
        worst = max(worst, abs(abs(mu_arch(ArchParams(Place.COMPLEX, 1j * y, mu, n0), n).value) - 1))
    for _ in range(200):
        y, mu = rng.uniform(-5, 5), rng.uniform(-2, 2)
        n0 = rng.randint(0, 1)
        n = (n0 + 2 * rng.randint(0, 4)) * rng.choice((1, -1)) or n0
        worst = max(worst, abs(abs(mu_arch(ArchParams(Place.REAL, 1j * y, mu, n0), n).value) - 1))
    count = 0
    while count < 200:
        p = rng.choice((3, 5, 7))
        for prm in _finite_shapes(p, 1j * rng.uniform(-5, 5), rng.uniform(-2, 2), rng.choice((0, 1))):
            n = prm.conductor + rng.randint(0, 3)
            worst = max(worst, abs(abs(mu_finite(prm, n)) - 1))
            count += 1
    elapsed = time.perf_counter() - start
    _verdict(1, worst < 1e-12 and elapsed < 10.0,
             f"axis unitarity deviation {worst:.2e} (tol 1e-12), {elapsed:.1f}s (< 10s)")


def test_criterion_02_closed_vs_oracle():
    start = time.perf_counter()
    worst_arch = 0.0
    s_values = (0.3, 0.25, 0.2 + 0.1j, 0.15 - 0.1j, 0.35 + 0.05j)
    for n0 in range(-2, 3):
        for n in range(abs(n0), 7):
            if (n - n0) % 2:
                continue
            for s in s_values:
                pa = ArchParams(Place.COMPLEX, s, 0.4, n0)
                worst_arch = max(worst_arch, abs(mu_arch(pa, n).value - mu_arch_oracle(pa, n)))
    for n0 in (0, 1):
        for n in (n0, n0 + 2, -(n0 + 2), n0 + 4):
            for s in s_values:
                pr = ArchParams(Place.REAL, s, -0.2, n0)
                worst_arch = max(worst_arch, abs(mu_arch(pr, n).value - mu_arch_oracle(pr, n)))
    worst_fin = 0.0
    for p in (3, 5, 7):
        for prm in _finite_shapes(p, 0.25 + 0.1j, 0.3, 0) + _finite_shapes(p, 0.2, -0.4, 1):
            for n in range(prm.conductor, prm.conductor + 4):
                worst_fin = max(worst_fin, abs(mu_finite(prm, n) - mu_finite_oracle(prm, n)))
    elapsed = time.perf_counter() - start
    _verdict(2, worst_arch < 1e-8 and worst_fin < 1e-10 and elapsed < 120.0,
             f"arch dev {worst_arch:.2e} (tol 1e-8), finite dev {worst_fin:.2e} (tol 1e-10), {elapsed:.0f}s (< 120s)")


def test_criterion_03_harmonic_orthonormality():
    harms = []
    for n in range(5):
        for n0 in range(-n, n + 1, 2):
            for k in range(n + 1):
                harms.append(normalized_harmonic_su2(n0, n, k))
    G = gram_matrix(harms, n_theta=24, n_phi=24)
    gram_dev = float(abs(G - np.eye(len(harms))).max())

    norm_dev = 0.0
    for (n0, n, k) in ((0, 2, 1), (2, 2, 0), (1, 3, 1), (-2, 4, 2), (0, 4, 0)):
        h = harmonic_su2(n0, n, k)
        conj = VarPoly(4, {(c, d, a, b): coeff.conjugate() for (a, b, c, d), coeff in h.poly.terms.items()})
        quad = haar_integrate_su2(h.poly * conj).real
        norm_dev = max(norm_dev, abs(quad - norm_su2_closed(n0, n, k)))

    ladder_ok = True
    for n0 in range(-6, 7):
        for n in range(abs(n0), 7):
            if (n - n0) % 2:
                continue
            for k in range(n):
                lhs = lie_act_su2(LieGen.XPLUS, harmonic_su2(n0, n, k))
                if not (lhs == harmonic_su2(n0, n, k + 1).poly.scale(n - k)):
                    ladder_ok = False
    _verdict(3, gram_dev < 1e-6 and norm_dev < 1e-6 and ladder_ok,
             f"gram dev {gram_dev:.2e}, norm dev {norm_dev:.2e} (tol 1e-6), ladder exact: {ladder_ok}")


def test_criterion_04_gauss_sums():
    worst_mod, worst_conj = 0.0, 0.0
    for p in (3, 5, 7):
        psi = AddChar(p, 0)
        for m in (1, 2, 3):
            for chi in MultChar.all_primitive(p, m):
                g = g_normalized(chi, psi)
                worst_mod = max(worst_mod, abs(abs(g) - 1.0))
                worst_conj = max(worst_conj, abs(g_normalized(chi.inverse(), psi) - chi.at_minus_one() * g.conjugate()))
    support_ok = True
    chi = MultChar(5, 2, 3)
    psi = AddChar(5, 1)
    for n in range(-6, 1):
        val = abs(unit_additive_integral(chi, psi, n))
        if n == -3:
            support_ok = support_ok and val > 1e-3
        else:
            support_ok = support_ok and val < 1e-13
    _verdict(4, worst_mod < 1e-12 and worst_conj < 1e-12 and support_ok,
             f"|g| dev {worst_mod:.2e}, conjugation dev {worst_conj:.2e} (tol 1e-12), support window exact: {support_ok}")


def test_criterion_05_padic_fourier():
    worst = 0.0
    for p in (3, 5, 7):
        for psi_c in (0, 1):
            psi = AddChar(p, psi_c)
            chi = MultChar(p, 1, 1)
            f = SimpleFunction(
                p,
                [
                    (1.5 - 0.5j, CharAtom(chi, 1)),
                    (2.0, TailAtom(-1)),
                    (1j, CharAtom(MultChar.trivial(p), 0)),
                ],
            )
            fa = fourier_atom(f, psi)
            for v in range(-6, 7):
                for u in (1, 2, p + 2):
                    x = Fraction(u) * Fraction(p) ** v
                    worst = max(worst, abs(fourier_bruteforce(f, psi, x) - fa.evaluate(x)))
            worst = max(worst, abs(fourier_bruteforce(f, psi, Fraction(0)) - fa.evaluate(Fraction(0))))
    double_dev = 0.0
    for p in (3, 5, 7):
        psi = AddChar(p, 1)
        chi = MultChar(p, 1, 1)
        f = SimpleFunction(p, [(2.0 - 1j, CharAtom(chi, -2)), (0.5, TailAtom(1)), (1.0, CharAtom(MultChar.trivial(p), 0))])
        ff = fourier_atom(fourier_atom(f, psi), psi)
        neg = f.negate_argument()
        keys = set(ff.terms) | set(neg.terms)
        double_dev = max(double_dev, max(abs(ff.terms.get(k, 0) - neg.terms.get(k, 0)) for k in keys))
    _verdict(5, worst < 1e-14 and double_dev < 1e-13,
             f"pointwise dev {worst:.2e} (tol 1e-14), double-transform dev {double_dev:.2e} (atom level)")


def test_criterion_06_classical_vectors():
    worst = 0.0
    member_ok = True
    for p in (3, 5):
        for prm in _finite_shapes(p, 0.2, 0.0, 0):
            c = prm.conductor
            for n in range(c, c + 4):
                v = classical_vector(prm, n)
                worst = max(worst, abs(v.inner(v, prm.psi) - 1.0))
            for n in (c, c + 1):
                v = classical_vector(prm, n)
                member_ok = member_ok and level_membership(v, prm, n)
                if n >= 1:
                    member_ok = member_ok and not level_membership(v, prm, n - 1)
    _verdict(6, worst < 1e-12 and member_ok,
             f"norm dev {worst:.2e} (exact measures), level boundaries: {member_ok}")


def test_criterion_07_derivative_bounds():
    rng = random.Random(107)
    fd_dev, ok = 0.0, True
    for _ in range(100):
        y = rng.uniform(-3, 3)
        n0 = rng.randint(-3, 3)
        n = abs(n0) + 2 * rng.randint(0, 4)
        pa = ArchParams(Place.COMPLEX, 1j * y, 0.0, n0)
        exact, fd = mu_arch_derivative(pa, n)
        fd_dev = max(fd_dev, abs(exact - fd))
        ok = ok and abs(exact) <= mu_arch_derivative_bound(pa, n) + 1e-9
    for _ in range(100):
        y = rng.uniform(-3, 3)
        n0 = rng.randint(0, 1)
        n = (n0 + 2 * rng.randint(0, 4)) * rng.choice((1, -1)) or n0
        pr = ArchParams(Place.REAL, 1j * y, 0.0, n0)
        exact, fd = mu_arch_derivative(pr, n)
        fd_dev = max(fd_dev, abs(exact - fd))
        ok = ok and abs(exact) <= mu_arch_derivative_bound(pr, n) + 1e-9
    count = 0
    while count < 100:
        p = rng.choice((3, 5, 7))
        for prm in _finite_shapes(p, 1j * rng.uniform(-3, 3), rng.uniform(-1, 1), rng.choice((0, 1))):
            n = prm.conductor + rng.randint(0, 3)
            d = mu_finite_derivative(prm, n)
            ok = ok and abs(d) <= mu_finite_derivative_bound(prm, n) + 1e-9
            count += 1
    _verdict(7, ok and fd_dev < 1e-5,
             f"bounds hold: {ok}, exact-vs-FD dev {fd_dev:.2e} (tol 1e-5)")


def test_criterion_08_bessel_kernels():
    rng = random.Random(108)
    rep_dev, sym_dev = 0.0, 0.0
    for _ in range(20):
        nu = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        y = rng.uniform(0.3, 4.0)
        sym_dev = max(sym_dev, abs(bessel_k(nu, y) - bessel_k(-nu, y)))
        rep_dev = max(rep_dev, abs(bessel_k(nu, y) - bessel_k_alt(nu, y)))
    kern_dev = 0.0
    for kind in (GammaKind.COMPLEX, GammaKind.REAL):
        for a, w in ((1.0, 1.0 + 0j), (1.5, 1.0 + 2.0j), (1.25, 1.0 - 1.0j), (1.75, 1.0 + 0.4j)):
            kern_dev = max(kern_dev, abs(kernel_ka(kind, a, w) - kernel_ka_quad(kind, a, w)))
    scan_ok = True
    for y in (0.0, 0.5, 2.0, 3.5):
        w = 1 + 2j * y
        scan_ok = scan_ok and max(abs(kernel_ka(GammaKind.COMPLEX, a, w)) for a in (1.0, 1.25, 1.5, 1.75)) > 1e-8
        scan_ok = scan_ok and max(abs(kernel_ka(GammaKind.REAL, a, w)) for a in (1.0, 1.25, 1.5, 1.75)) > 1e-8
    _verdict(8, rep_dev < 1e-10 and sym_dev < 1e-12 and kern_dev < 1e-9 and scan_ok,
             f"dual-rep dev {rep_dev:.2e} (1e-10), symmetry dev {sym_dev:.2e} (1e-12), "
             f"kernel-vs-quad dev {kern_dev:.2e} (1e-9), nonvanishing scan: {scan_ok}")


def test_criterion_09_maass_selberg():
    worst = 0.0
    for (y, c) in ((0.7, 2.0), (1.5, 3.0), (0.4, 1.5)):
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
        worst = max(worst, abs(extrap - target))
    _verdict(9, worst < 1e-6, f"extrapolated off-axis vs on-axis dev {worst:.2e} (tol 1e-6)")


def test_criterion_10_global_layer():
    ratio_dev = max(abs(abs(mu_global_factor(y)) - 1.0) for y in np.linspace(0.1, 20, 100))
    res1 = residue_at_one()
    rc = residue_constant()
    rng = random.Random(110)
    heights_ok = (
        all(height_wn(Place.REAL, rng.uniform(-9, 9)) <= 1.0 for _ in range(100))
        and all(height_wn(Place.COMPLEX, complex(rng.uniform(-4, 4), rng.uniform(-4, 4))) <= 1.0 for _ in range(100))
        and all(height_wn(5, Fraction(rng.randint(-300, 300), rng.choice((1, 5, 25)))) <= 1.0 for _ in range(100))
    )
    s1 = sobolev_weight_sum(3, 50.0, 20)
    s2 = sobolev_weight_sum(3, 100.0, 40)
    s3 = sobolev_weight_sum(3, 200.0, 80)
    cauchy_ok = abs(s3 - s2) < 0.01 * abs(s2) and abs(s3 - s2) < abs(s2 - s1)
    ok = ratio_dev < 1e-8 and abs(res1 - 1.0) < 1e-8 and abs(rc - 3 / math.pi) < 1e-6 and heights_ok and cauchy_ok
    _verdict(10, ok,
             f"|Lambda ratio| dev {ratio_dev:.2e} (1e-8), residue {res1:.10f} (1 +- 1e-8), "
             f"edge constant {rc:.8f} (3/pi +- 1e-6), heights <= 1: {heights_ok}, weight sums Cauchy: {cauchy_ok}")


def test_criterion_11_classical_line():
    rng = random.Random(111)
    worst = 0.0
    for _ in range(6):
        coeffs = {n: PiLaurent.rational(Fraction(rng.randint(-5, 5), rng.randint(1, 4))) for n in range(rng.randint(1, 4))}
        q = Fraction(rng.randint(1, 8), rng.randint(1, 8))
        f = PolyGaussian1D(coeffs, q)
        lhs, rhs = l2_norm_sq(f), l2_norm_sq(ft_1d(f))
        worst = max(worst, abs(lhs - rhs) / max(1.0, lhs))
    ind = lambda xs: ((np.asarray(xs) >= -1.0) & (np.asarray(xs) <= 1.0)).astype(float)
    deficits = [mollify_deficit(ind, e, 2.0) for e in (0.4, 0.2, 0.1, 0.05)]
    dec = all(a > b for a, b in zip(deficits, deficits[1:]))
    _verdict(11, worst < 1e-10 and dec,
             f"Plancherel dev {worst:.2e} (tol 1e-10), deficits strictly decreasing: {dec} "
             f"({', '.join(f'{d:.4f}' for d in deficits)})")
