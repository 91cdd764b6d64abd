"""Verification suites: every closed form against its independent oracle.

Each suite returns a Report whose cases pair a closed-form value with an
independently computed one (quadrature, exact finite sum, finite difference,
or a structural identity).  The acceptance tests and the command line both
run these; sample counts default to the acceptance sizes.
"""

from __future__ import annotations

import math
import random
import time
from fractions import Fraction

import numpy as np

from . import classical as cl
from . import globalq as gl
from .arch import (
    ArchParams,
    Place,
    mu_arch,
    mu_arch_derivative,
    mu_arch_derivative_bound,
    mu_arch_logderiv,
    mu_arch_oracle,
    mu_arch_product,
)
from .exact import PiLaurent, VarPoly
from .harmonics import (
    LieGen,
    gram_matrix,
    haar_integrate_su2,
    harmonic_su2,
    lie_act_su2,
    norm_su2_closed,
    normalized_harmonic_su2,
)
from .numerics import (
    GammaKind,
    bessel_k,
    bessel_k_alt,
    gamma_factor,
    kernel_ka,
    kernel_ka_quad,
    quad_halfline,
    radial_gaussian_moment,
)
from .padic import (
    AddChar,
    FiniteParams,
    MultChar,
    classical_vector,
    fourier_atom,
    fourier_bruteforce,
    g_normalized,
    level_membership,
    mu_finite,
    mu_finite_derivative,
    mu_finite_derivative_bound,
    mu_finite_oracle,
    orbit_measures,
    unit_additive_integral,
    unramified_params,
)
from .reports import Case, Report, flag_case, scalar_case

SUITE_TOLERANCES = {
    "classical": 1e-10,
    "harmonics": 1e-6,
    "arch": 1e-8,
    "padic": 1e-10,
    "global": 1e-6,
}

SUITE_NAMES = ("classical", "harmonics", "arch", "padic", "global")


def run_suite(name: str, seed: int = 0, tol: float | None = None) -> Report:
    runners = {
        "classical": suite_classical,
        "harmonics": suite_harmonics,
        "arch": suite_arch,
        "padic": suite_padic,
        "global": suite_global,
    }
    if name not in runners:
        raise ValueError(f"unknown suite {name!r}")
    start = time.perf_counter()
    report = runners[name](seed=seed, tol=tol)
    report.wall_time_s = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------


def _random_poly_gaussian(rng: random.Random) -> cl.PolyGaussian1D:
    coeffs = {}
    for n in range(rng.randint(1, 4)):
        coeffs[n] = PiLaurent.rational(Fraction(rng.randint(-6, 6), rng.randint(1, 5)))
    q = Fraction(rng.randint(1, 9), rng.randint(1, 9))
    return cl.PolyGaussian1D(coeffs, q)


def suite_classical(seed: int = 0, tol: float | None = None) -> Report:
    tol = tol if tol is not None else SUITE_TOLERANCES["classical"]
    rng = random.Random(seed)
    cases: list[Case] = []

    # Plancherel on the span, quadrature on both sides
    for i in range(6):
        f = _random_poly_gaussian(rng)
        lhs = cl.l2_norm_sq(f)
        rhs = cl.l2_norm_sq(cl.ft_1d(f))
        cases.append(scalar_case(f"classical/plancherel/{i}", {"q": f.q}, lhs, rhs, tol))

    # exact involution, recorded as a flag
    for i in range(6):
        f = _random_poly_gaussian(rng)
        ok = cl.ft_1d(cl.ft_1d(f)) == f.reflected()
        cases.append(flag_case(f"classical/involution/{i}", {"q": f.q}, ok))

    # the mollifier family: unit mass and the transform image
    for eps in (Fraction(1), Fraction(1, 2), Fraction(1, 10)):
        v = cl.dirac_family(eps)
        cases.append(scalar_case(f"classical/dirac-mass/eps={eps}", {"eps": eps}, cl.integrate(v), 1.0, 1e-10))
        ok = cl.ft_1d(v) == cl.PolyGaussian1D({0: 1}, eps * eps)
        cases.append(flag_case(f"classical/dirac-hat/eps={eps}", {"eps": eps}, ok))

    # mollification deficits strictly decreasing for the indicator
    ind = lambda xs: ((np.asarray(xs) >= -1.0) & (np.asarray(xs) <= 1.0)).astype(float)
    deficits = [cl.mollify_deficit(ind, e, 2.0) for e in (0.4, 0.2, 0.1, 0.05)]
    dec = all(a > b for a, b in zip(deficits, deficits[1:]))
    cases.append(flag_case("classical/mollify-monotone", {"deficits": [round(d, 6) for d in deficits]}, dec))

    # pointwise inversion probe at a continuity point
    bump = lambda xs: np.exp(-np.asarray(xs, dtype=float) ** 2)
    probes = [abs(cl.point_mollification(bump, 0.3, e) - bump(np.array([0.3]))[0]) for e in (0.4, 0.2, 0.1, 0.05)]
    cases.append(flag_case("classical/pointwise-inversion", {"errs": [f"{p:.2e}" for p in probes]},
                           all(a > b for a, b in zip(probes, probes[1:]))))

    # decay of the discrete transform
    h0 = cl.decay_check(bump, 0)
    l1 = float(np.trapezoid(bump(np.linspace(-6, 6, 4097)), np.linspace(-6, 6, 4097)))
    cases.append(flag_case("classical/decay-l1", {"sup": f"{h0:.4f}", "l1": f"{l1:.4f}"}, h0 <= l1 + 1e-6))
    cases.append(flag_case("classical/decay-zero", {}, cl.decay_check(lambda xs: 0.0 * np.asarray(xs), 2) == 0.0))

    return Report("classical", seed, cases)


def suite_harmonics(seed: int = 0, tol: float | None = None) -> Report:
    tol = tol if tol is not None else SUITE_TOLERANCES["harmonics"]
    cases: list[Case] = []

    # Gram matrix of all normalized harmonics with n <= 4
    harms = []
    for n in range(5):
        for n0 in range(-n, n + 1, 2):
            for k in range(n + 1):
                harms.append(normalized_harmonic_su2(n0, n, k))
    G = gram_matrix(harms, n_theta=24, n_phi=24)
    dev = float(abs(G - np.eye(len(harms))).max())
    cases.append(scalar_case("harmonics/gram-identity", {"count": len(harms)}, dev, 0.0, tol))

    # closed norms against quadrature
    for (n0, n, k) in ((0, 2, 1), (2, 2, 0), (1, 3, 2), (-2, 4, 1), (0, 4, 4)):
        h = harmonic_su2(n0, n, k)
        conj_poly = VarPoly(4, {(c, d, a, b): coeff.conjugate() for (a, b, c, d), coeff in h.poly.terms.items()})
        quad = haar_integrate_su2(h.poly * conj_poly).real
        cases.append(
            scalar_case(f"harmonics/norm/{n0},{n},{k}", {"n0": n0, "n": n, "k": k}, norm_su2_closed(n0, n, k), quad, tol)
        )

    # exact ladder relation through n = 6
    ok = True
    for n0 in range(-6, 7):
        for n in range(abs(n0), 7):
            if (n - n0) % 2:
                continue
            for k in range(n):
                lhs = lie_act_su2(LieGen.XPLUS, harmonic_su2(n0, n, k))
                if not (lhs == harmonic_su2(n0, n, k + 1).poly.scale(n - k)):
                    ok = False
    cases.append(flag_case("harmonics/ladder-exact", {"n_max": 6}, ok))

    # weight identities
    ok = True
    for (n0, n, k) in ((1, 5, 2), (-3, 5, 0), (0, 6, 3)):
        h = harmonic_su2(n0, n, k)
        ok = ok and lie_act_su2(LieGen.LH, h) == h.poly.scale(PiLaurent.rational(0, -n0))
        ok = ok and lie_act_su2(LieGen.RH, h) == h.poly.scale(PiLaurent.rational(0, n - 2 * k))
        ok = ok and lie_act_su2(LieGen.XMINUS, harmonic_su2(n0, n, 0)).is_zero()
    cases.append(flag_case("harmonics/weights-exact", {}, ok))

    # measure calibration: 8 pi^2 int exp(-r^2) r^3 dr = 4 pi^2 over the sphere
    radial = quad_halfline(lambda r: math.exp(-r * r) * r**3).real
    total = 8 * math.pi**2 * radial * haar_integrate_su2(VarPoly.monomial(4, (0, 0, 0, 0))).real
    cases.append(scalar_case("harmonics/measure-constant", {}, total, 4 * math.pi**2, 1e-8 * 4 * math.pi**2))

    # simple Haar values
    cases.append(scalar_case("harmonics/haar-one", {}, haar_integrate_su2(VarPoly.monomial(4, (0, 0, 0, 0))), 1.0, 1e-10))
    cases.append(scalar_case("harmonics/haar-z1sq", {}, haar_integrate_su2(VarPoly.monomial(4, (1, 0, 1, 0))), 0.5, 1e-10))
    cases.append(scalar_case("harmonics/haar-phase", {}, haar_integrate_su2(VarPoly.monomial(4, (1, 0, 0, 1))), 0.0, 1e-12))

    return Report("harmonics", seed, cases)


def suite_arch(seed: int = 0, tol: float | None = None) -> Report:
    tol = tol if tol is not None else SUITE_TOLERANCES["arch"]
    rng = random.Random(seed)
    cases: list[Case] = []

    # gamma-factor calibrations against quadrature
    for z in (2.0, 4.0, 3.0 + 1.0j):
        cases.append(
            scalar_case(
                f"arch/gammaC-radial/{z}", {"z": z},
                gamma_factor(GammaKind.COMPLEX, z / 2), radial_gaussian_moment(GammaKind.COMPLEX, z), 1e-10,
            )
        )
        cases.append(
            scalar_case(
                f"arch/gammaR-radial/{z}", {"z": z},
                gamma_factor(GammaKind.REAL, z), radial_gaussian_moment(GammaKind.REAL, z), 1e-10,
            )
        )
    s0 = 1.3 + 0.7j
    cases.append(
        scalar_case(
            "arch/gammaC-recursion", {"s": s0},
            gamma_factor(GammaKind.COMPLEX, s0 + 1), s0 / (2 * math.pi) * gamma_factor(GammaKind.COMPLEX, s0), 1e-12,
        )
    )

    # Bessel symmetry and dual representation
    for i in range(20):
        nu = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        yv = rng.uniform(0.3, 4.0)
        cases.append(scalar_case(f"arch/bessel-sym/{i}", {"nu": nu, "y": yv}, bessel_k(nu, yv), bessel_k(-nu, yv), 1e-12))
        if i < 8:
            cases.append(scalar_case(f"arch/bessel-dualrep/{i}", {"nu": nu, "y": yv}, bessel_k(nu, yv), bessel_k_alt(nu, yv), 1e-10))

    # kernel identities and the nonvanishing scan
    for kind in (GammaKind.COMPLEX, GammaKind.REAL):
        for (a, w) in ((1.0, 1.0 + 0j), (1.5, 1.0 + 2.0j), (1.25, 1.0 - 1.0j)):
            cases.append(
                scalar_case(
                    f"arch/kernel-quad/{kind.value}/{a}/{w}", {"a": a, "w": w},
                    kernel_ka(kind, a, w), kernel_ka_quad(kind, a, w), 1e-9,
                )
            )
    # existence scan on moderate axis points; the kernel decays like
    # exp(-pi |y|) in the order, so large y needs rescaled thresholds
    for yv in (0.0, 0.5, 2.0, 3.5):
        best = max(abs(kernel_ka(GammaKind.COMPLEX, a, 1 + 2j * yv)) for a in (1.0, 1.25, 1.5, 1.75))
        cases.append(flag_case(f"arch/kernel-nonvanish/y={yv}", {"best": f"{best:.3e}"}, best > 1e-8))

    # unitarity on the axis
    for i in range(60):
        y = rng.uniform(-4, 4)
        mu = rng.uniform(-2, 2)
        n0 = rng.randint(-3, 3)
        n = abs(n0) + 2 * rng.randint(0, 4)
        pc = ArchParams(Place.COMPLEX, 1j * y, mu, n0)
        cases.append(scalar_case(f"arch/unitary-complex/{i}", {"y": y, "n0": n0, "n": n}, abs(mu_arch(pc, n).value), 1.0, 1e-12))
        n0r = rng.randint(0, 1)
        nr = (n0r + 2 * rng.randint(0, 4)) * rng.choice((1, -1))
        if abs(nr) < n0r:
            nr = n0r
        pr = ArchParams(Place.REAL, 1j * y, mu, n0r)
        cases.append(scalar_case(f"arch/unitary-real/{i}", {"y": y, "n0": n0r, "n": nr}, abs(mu_arch(pr, nr).value), 1.0, 1e-12))
        cases.append(
            scalar_case(f"arch/product-form/{i}", {"y": y, "n0": n0, "n": n}, mu_arch(pc, n).value, mu_arch_product(pc, n), 1e-12)
        )

    # closed form against the transform-pipeline oracle
    s_values = (0.3, 0.25, 0.2 + 0.1j, 0.15 - 0.1j, 0.35 + 0.05j)
    for n0 in range(-2, 3):
        for n in range(abs(n0), 7):
            if (n - n0) % 2:
                continue
            for j, s in enumerate(s_values):
                pa = ArchParams(Place.COMPLEX, s, 0.4, n0)
                cases.append(
                    scalar_case(
                        f"arch/oracle-complex/{n0}/{n}/{j}", {"n0": n0, "n": n, "s": s},
                        mu_arch(pa, n).value, mu_arch_oracle(pa, n), tol,
                    )
                )
    for n0 in (0, 1):
        for n in (n0, n0 + 2, -(n0 + 2), n0 + 4):
            for j, s in enumerate(s_values[:3]):
                pr = ArchParams(Place.REAL, s, -0.2, n0)
                cases.append(
                    scalar_case(
                        f"arch/oracle-real/{n0}/{n}/{j}", {"n0": n0, "n": n, "s": s},
                        mu_arch(pr, n).value, mu_arch_oracle(pr, n), tol,
                    )
                )

    # derivative: exact sum against finite differences, and the bounds
    for i in range(30):
        y = rng.uniform(-2, 2)
        n0 = rng.randint(-2, 2)
        n = abs(n0) + 2 * rng.randint(0, 3)
        pa = ArchParams(Place.COMPLEX, 1j * y, 0.0, n0)
        exact, fd = mu_arch_derivative(pa, n)
        cases.append(scalar_case(f"arch/deriv-fd-complex/{i}", {"y": y, "n0": n0, "n": n}, exact, fd, 1e-5))
        cases.append(flag_case(f"arch/deriv-bound-complex/{i}", {"y": y, "n0": n0, "n": n},
                               abs(exact) <= mu_arch_derivative_bound(pa, n) + 1e-9))
        n0r = rng.randint(0, 1)
        nr = (n0r + 2 * rng.randint(0, 3)) * rng.choice((1, -1))
        if abs(nr) < n0r:
            nr = n0r
        prr = ArchParams(Place.REAL, 1j * y, 0.0, n0r)
        exact_r, fd_r = mu_arch_derivative(prr, nr)
        cases.append(scalar_case(f"arch/deriv-fd-real/{i}", {"y": y, "n0": n0r, "n": nr}, exact_r, fd_r, 1e-5))
        cases.append(flag_case(f"arch/deriv-bound-real/{i}", {"y": y, "n0": n0r, "n": nr},
                               abs(exact_r) <= mu_arch_derivative_bound(prr, nr) + 1e-9))

    return Report("arch", seed, cases)


def _case_params(p: int, tag: str, s: complex, mu: float, psi_c: int) -> FiniteParams:
    tr = MultChar.trivial(p)
    chi1 = MultChar(p, 1, 1)
    chi1b = MultChar(p, 1, 2) if p > 3 else chi1
    chi2 = MultChar(p, 2, 1)
    psi = AddChar(p, psi_c)
    if tag == "both-ramified":
        return FiniteParams(p, s, mu, chi1, chi1b, psi)
    if tag == "both-ramified-trivial-twist":
        return FiniteParams(p, s, mu, chi1, chi1, psi)
    if tag == "first-ramified":
        return FiniteParams(p, s, mu, chi1, tr, psi)
    if tag == "second-ramified":
        return FiniteParams(p, s, mu, tr, chi2, psi)
    return FiniteParams(p, s, mu, tr, tr, psi)


_PADIC_TAGS = ("both-ramified", "both-ramified-trivial-twist", "first-ramified", "second-ramified", "unramified")


def suite_padic(seed: int = 0, tol: float | None = None) -> Report:
    tol = tol if tol is not None else SUITE_TOLERANCES["padic"]
    rng = random.Random(seed)
    cases: list[Case] = []

    # Gauss sums: modulus and conjugation across every character p^m <= 343
    for p in (3, 5, 7):
        psi = AddChar(p, 0)
        worst_mod, worst_conj = 0.0, 0.0
        count = 0
        for m in (1, 2, 3):
            for chi in MultChar.all_primitive(p, m):
                g = g_normalized(chi, psi)
                worst_mod = max(worst_mod, abs(abs(g) - 1.0))
                lhs = g_normalized(chi.inverse(), psi)
                worst_conj = max(worst_conj, abs(lhs - chi.at_minus_one() * g.conjugate()))
                count += 1
        cases.append(scalar_case(f"padic/gauss-modulus/p={p}", {"count": count}, worst_mod, 0.0, 1e-12))
        cases.append(scalar_case(f"padic/gauss-conj/p={p}", {"count": count}, worst_conj, 0.0, 1e-12))

    # support window of the unit integral
    chi = MultChar(5, 2, 3)
    psi = AddChar(5, 1)
    for n in range(-6, 0):
        val = abs(unit_additive_integral(chi, psi, n))
        expected = 0.0 if n != -3 else abs(unit_additive_integral(chi, psi, -3))
        cases.append(scalar_case(f"padic/gauss-support/n={n}", {"n": n}, val, expected, 1e-13))
    cases.append(flag_case("padic/gauss-support-nonzero", {}, abs(unit_additive_integral(chi, psi, -3)) > 1e-3))

    # atom transform against the brute-force sum, plus the double transform
    for p in (3, 5, 7):
        psi = AddChar(p, rng.choice((0, 1)))
        chi = MultChar(p, 1, 1)
        from .padic import CharAtom, SimpleFunction, TailAtom

        f = SimpleFunction(
            p,
            [
                (1.5 - 0.5j, CharAtom(chi, 1)),
                (2.0, TailAtom(-1)),
                (1j, CharAtom(MultChar.trivial(p), 0)),
            ],
        )
        fa = fourier_atom(f, psi)
        worst = 0.0
        for v in range(-6, 7):
            for u in (1, 2, p + 2):
                x = Fraction(u) * Fraction(p) ** v
                worst = max(worst, abs(fourier_bruteforce(f, psi, x) - fa.evaluate(x)))
        worst = max(worst, abs(fourier_bruteforce(f, psi, Fraction(0)) - fa.evaluate(Fraction(0))))
        cases.append(scalar_case(f"padic/fourier-pointwise/p={p}", {"psi_c": psi.c}, worst, 0.0, 1e-13))
        ff = fourier_atom(fa, psi)
        neg = f.negate_argument()
        keys = set(ff.terms) | set(neg.terms)
        dev = max(abs(ff.terms.get(k, 0) - neg.terms.get(k, 0)) for k in keys)
        cases.append(scalar_case(f"padic/fourier-double/p={p}", {"psi_c": psi.c}, dev, 0.0, 1e-13))

    # classical vectors: norms, cross-level Gram, membership, orbit additivity
    for p in (3, 5):
        for tag in _PADIC_TAGS:
            prm = _case_params(p, tag, 0.2, 0.0, 0)
            c = prm.conductor
            vecs = [classical_vector(prm, n) for n in range(c, c + 4)]
            gram_dev = 0.0
            for i, vi in enumerate(vecs):
                for j, vj in enumerate(vecs):
                    target = 1.0 if i == j else 0.0
                    gram_dev = max(gram_dev, abs(vi.inner(vj, prm.psi) - target))
            cases.append(scalar_case(f"padic/vector-gram/p={p}/{tag}", {"c": c}, gram_dev, 0.0, 1e-12))
            cases.append(
                flag_case(
                    f"padic/vector-level/p={p}/{tag}", {"c": c},
                    level_membership(vecs[1], prm, c + 1) and not level_membership(vecs[1], prm, c),
                )
            )
        oms = orbit_measures(unramified_params(p, 0.2, psi_c=1), 5)
        total = sum(oms)
        expected = (1 - Fraction(1, p * p)) / Fraction(p)
        cases.append(flag_case(f"padic/orbit-additivity/p={p}", {"total": total}, total == expected))

    # eigenvalues: axis unitarity, oracle agreement, derivative bounds
    for p in (3, 5, 7):
        for tag in _PADIC_TAGS:
            worst_u = 0.0
            for _ in range(14):
                prm = _case_params(p, tag, 1j * rng.uniform(-4, 4), rng.uniform(-2, 2), rng.choice((0, 1)))
                for n in range(prm.conductor, prm.conductor + 3):
                    worst_u = max(worst_u, abs(abs(mu_finite(prm, n)) - 1.0))
            cases.append(scalar_case(f"padic/unitary/p={p}/{tag}", {}, worst_u, 0.0, 1e-12))

            prm = _case_params(p, tag, 0.25 + 0.1j, 0.3, rng.choice((0, 1)))
            for n in range(prm.conductor, prm.conductor + 4):
                cases.append(
                    scalar_case(
                        f"padic/oracle/p={p}/{tag}/n={n}", {"psi_c": prm.psi.c},
                        mu_finite(prm, n), mu_finite_oracle(prm, n), tol,
                    )
                )

            prm = _case_params(p, tag, 1j * rng.uniform(-3, 3), rng.uniform(-1, 1), rng.choice((0, 1)))
            for n in range(prm.conductor, prm.conductor + 3):
                d = mu_finite_derivative(prm, n)
                cases.append(
                    flag_case(
                        f"padic/deriv-bound/p={p}/{tag}/n={n}", {"d": f"{abs(d):.3f}"},
                        abs(d) <= mu_finite_derivative_bound(prm, n) + 1e-9,
                    )
                )

    # identification normalization: vol(units) = C(psi)^(-1/2)
    from .padic import iota_normalization

    for psi_c in (0, 1, 2):
        prm = unramified_params(5, 0.2, psi_c=psi_c)
        v0 = classical_vector(prm, 0)
        lhs = iota_normalization(prm, v0)
        rhs = prm.psi.conductor_value ** (-0.5) * v0.evaluate(Fraction(0), Fraction(1))
        cases.append(scalar_case(f"padic/iota-measure/psi_c={psi_c}", {}, lhs, rhs, 1e-12))

    return Report("padic", seed, cases)


def suite_global(seed: int = 0, tol: float | None = None) -> Report:
    tol = tol if tol is not None else SUITE_TOLERANCES["global"]
    rng = random.Random(seed)
    cases: list[Case] = []

    # completed zeta: special value, functional equation, reflection
    cases.append(scalar_case("global/lambda-2", {}, gl.completed_zeta(2.0), math.pi / 6, 1e-12))
    worst = 0.0
    for t in np.linspace(0.1, 50, 41):
        z = complex(rng.uniform(0.1, 0.9), t)
        worst = max(worst, abs(gl.completed_zeta(z) - gl.completed_zeta(1 - z)))
    cases.append(scalar_case("global/functional-equation", {}, worst, 0.0, 1e-9))
    worst = max(
        abs(gl.completed_zeta(1 - 2j * y) - gl.completed_zeta(1 + 2j * y).conjugate())
        for y in np.linspace(0.1, 20, 50)
    )
    cases.append(scalar_case("global/schwarz-reflection", {}, worst, 0.0, 1e-9))

    # axis modulus of the global factor
    worst = max(abs(abs(gl.mu_global_factor(y)) - 1.0) for y in np.linspace(0.1, 20, 100))
    cases.append(scalar_case("global/mu-factor-modulus", {}, worst, 0.0, 1e-8))

    # residues and the edge constant
    cases.append(scalar_case("global/residue-at-1", {}, gl.residue_at_one(), 1.0, 1e-8))
    cases.append(scalar_case("global/residue-sym", {}, gl.residue_at_zero() + gl.residue_at_one(), 2.0, 1e-7))
    cases.append(scalar_case("global/residue-constant", {}, gl.residue_constant(), 3 / math.pi, 1e-6))

    # global eigenvalue modulus for random small data
    worst = 0.0
    for _ in range(50):
        kt = gl.GlobalKType(
            real_weight=2 * rng.randint(0, 3),
            finite_weights=tuple((p, rng.randint(0, 2)) for p in rng.sample((3, 5, 7, 11), 2)),
        )
        v = gl.mu_global(gl.GlobalSpectralPoint(rng.uniform(0.1, 5.0)), kt)
        worst = max(worst, abs(abs(v) - 1.0))
    cases.append(scalar_case("global/mu-global-modulus", {}, worst, 0.0, 1e-8))

    # Laplacian eigenvalues: displayed values, positivity, monotonicity
    cases.append(scalar_case("global/laplace-real-base", {}, gl.laplace_eigenvalue(Place.REAL, 0, 0, 0), 0.25, 1e-14))
    cases.append(scalar_case("global/laplace-complex", {}, gl.laplace_eigenvalue(Place.COMPLEX, 0, 0, 2, 0), 4.25, 1e-14))
    cases.append(scalar_case("global/laplace-real", {}, gl.laplace_eigenvalue(Place.REAL, 1, 0, 1), 1.75, 1e-14))
    mono = all(
        gl.laplace_eigenvalue(Place.COMPLEX, 0.3, 0.1, n + 2, 0) > gl.laplace_eigenvalue(Place.COMPLEX, 0.3, 0.1, n, 0) > 0
        for n in range(0, 20, 2)
    )
    cases.append(flag_case("global/laplace-monotone", {}, mono))

    # truncated-norm identity: off-axis extrapolation against the axis form
    for (y, c) in ((0.7, 2.0), (1.5, 3.0)):
        pa = ArchParams(Place.COMPLEX, 1j * y, 0.0, 0)
        m_iy = mu_arch(pa, 4).value
        m_prime = m_iy * mu_arch_logderiv(pa, 4)
        target = gl.maass_selberg_onaxis(y, c, m_iy, m_prime)
        sigmas = (1e-2, 1e-3, 1e-4)
        vals = []
        for sig in sigmas:
            m = mu_arch(ArchParams(Place.COMPLEX, complex(sig, y), 0.0, 0), 4).value
            vals.append(gl.maass_selberg(complex(sig, y), c, 1.0, abs(m), m.conjugate()))
        mat = np.array([[1.0, s, s * s] for s in sigmas])
        extrap = float(np.linalg.solve(mat, np.array(vals))[0])
        cases.append(scalar_case(f"global/ms-limit/y={y}", {"c": c}, extrap, target, 1e-6))

    # self-dual branch against the global scalar model
    y0, c0 = 0.5, 2.0
    m0 = gl.mu_global_factor(y0)
    h = 1e-5
    m0p = (gl.mu_global_factor(y0 + h) - gl.mu_global_factor(y0 - h)) / (2 * h) * (-1j)
    onax = gl.maass_selberg_onaxis(y0, c0, m0, m0p, is_selfdual=True)
    vals = []
    sigmas = (1e-2, 1e-3, 1e-4)
    for sig in sigmas:
        s = complex(sig, y0)
        m = gl.completed_zeta(1 - 2 * s) / gl.completed_zeta(1 + 2 * s)
        vals.append(gl.maass_selberg(s, c0, 1.0, abs(m), m.conjugate(), 0.0, True))
    mat = np.array([[1.0, sg, sg * sg] for sg in sigmas])
    extrap = float(np.linalg.solve(mat, np.array(vals))[0])
    cases.append(scalar_case("global/ms-selfdual-limit", {"y": y0}, extrap, onax, 1e-5))

    # heights at every place type
    ok = True
    for _ in range(100):
        ok = ok and gl.height_wn(Place.REAL, rng.uniform(-8, 8)) <= 1.0
        ok = ok and gl.height_wn(Place.COMPLEX, complex(rng.uniform(-4, 4), rng.uniform(-4, 4))) <= 1.0
        ok = ok and gl.height_wn(5, Fraction(rng.randint(-200, 200), rng.choice((1, 5, 25)))) <= 1.0
    cases.append(flag_case("global/height-bound", {"samples": 300}, ok))
    cases.append(scalar_case("global/height-real-2", {}, gl.height_wn(Place.REAL, 2.0), 0.25, 1e-12))
    cases.append(scalar_case("global/height-w", {}, gl.height_wn(Place.REAL, 0.0), 1.0, 1e-15))
    cases.append(scalar_case("global/height-p5", {}, gl.height_wn(5, Fraction(1, 5)), 5.0**-2, 1e-15))

    # spectral weight sums: Cauchy under doubling, termwise domination, slope
    s1 = gl.sobolev_weight_sum(3, 50.0, 20)
    s2 = gl.sobolev_weight_sum(3, 100.0, 40)
    s3 = gl.sobolev_weight_sum(3, 200.0, 80)
    cases.append(flag_case("global/sobolev-cauchy", {"s1": f"{s1:.6f}", "s2": f"{s2:.6f}", "s3": f"{s3:.6f}"},
                           abs(s3 - s2) < 0.01 * abs(s2) and abs(s3 - s2) < abs(s2 - s1)))
    cases.append(flag_case("global/sobolev-domination", {},
                           gl.sobolev_weight_sum(3, 50.0, 20) < gl.sobolev_weight_sum(2, 50.0, 20)))
    slope = gl.sobolev_term_decay_slope(3)
    cases.append(scalar_case("global/sobolev-slope", {"expected": 4 - 4 * 3}, slope, 4 - 4 * 3, 0.25))

    return Report("global", seed, cases)
