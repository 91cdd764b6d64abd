"""The one-dimensional reference theory on the Gaussian span.

Functions are finite sums  sum_n c_n x^n exp(-q pi x^2)  with q a positive
rational.  The Fourier transform with kernel exp(-2 pi i x xi) maps the span
to itself, sending the width parameter q to 1/q, and is implemented as a
symbolic recursion so that the double-transform identity

    ft(ft(f))(x) = f(-x)

holds at the level of exact coefficients.  The mollifier family and the
decay diagnostics at the bottom mirror, on a grid, the convergence facts
whose exact analogues drive the archimedean modules.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import GridTooCoarse
from .exact import ONE, PiLaurent, fraction_sqrt, scalar_to_complex
from .numerics import DEFAULT_QUAD, QuadratureSpec, quad_realline


class PolyGaussian1D:
    """Polynomial times Gaussian: sqrt(scale_sq) * sum_n c_n x^n exp(-q pi x^2).

    The Gaussian width is stored as the rational q (the function carries
    exp(-q pi x^2)); coefficients are exact PiLaurent scalars unless a float
    has been mixed in.  scale_sq records the square of a positive prefactor
    accumulated by transforms; it folds into the coefficients whenever it is
    a perfect rational square, which restores exact equality after a
    round trip.
    """

    __slots__ = ("coeffs", "q", "scale_sq")

    def __init__(self, coeffs: dict, q, scale_sq=1):
        q = Fraction(q)
        if q <= 0:
            raise ValueError("Gaussian width must be positive")
        self.q = q
        self.scale_sq = Fraction(scale_sq)
        clean = {}
        for n, c in coeffs.items():
            if isinstance(c, (int, Fraction)):
                c = PiLaurent.rational(c)
            if isinstance(c, PiLaurent):
                if not c.is_zero():
                    clean[int(n)] = c
            elif c != 0:
                clean[int(n)] = c
        self.coeffs = clean
        self._fold()

    def _fold(self):
        root = fraction_sqrt(self.scale_sq)
        if root is not None and root != 1:
            self.coeffs = {n: c * root for n, c in self.coeffs.items()}
            self.scale_sq = Fraction(1)

    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyGaussian1D):
            return NotImplemented
        if self.q != other.q or self.scale_sq != other.scale_sq:
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        for n in keys:
            a = self.coeffs.get(n)
            b = other.coeffs.get(n)
            if a is None or b is None or a != b:
                return False
        return True

    def __call__(self, x: float) -> complex:
        scale = math.sqrt(float(self.scale_sq))
        gauss = math.exp(-float(self.q) * math.pi * x * x)
        total = 0j
        for n, c in self.coeffs.items():
            total += scalar_to_complex(c) * x**n
        return scale * gauss * total

    def eval_array(self, xs: np.ndarray) -> np.ndarray:
        scale = math.sqrt(float(self.scale_sq))
        gauss = np.exp(-float(self.q) * math.pi * xs * xs)
        total = np.zeros_like(xs, dtype=complex)
        for n, c in self.coeffs.items():
            total += scalar_to_complex(c) * xs**n
        return scale * gauss * total

    def reflected(self) -> "PolyGaussian1D":
        """The function x -> f(-x)."""
        return PolyGaussian1D(
            {n: (c if n % 2 == 0 else -c) for n, c in self.coeffs.items()},
            self.q,
            self.scale_sq,
        )

    def __repr__(self):
        return f"PolyGaussian1D(coeffs={self.coeffs!r}, q={self.q}, scale_sq={self.scale_sq})"


def ft_1d(f: PolyGaussian1D) -> PolyGaussian1D:
    """Exact Fourier transform on the Gaussian span, kernel exp(-2 pi i x xi).

    The base Gaussian exp(-q pi x^2) maps to q**(-1/2) exp(-(pi/q) xi^2); a
    monomial factor x^n becomes (i/2pi)^n d^n/dxi^n on the transform.  The
    derivative calculus stays inside polynomial-times-Gaussian, so the whole
    map is a finite exact recursion.
    """
    qi = 1 / f.q

    def d_once(poly: dict) -> dict:
        # d/dxi acting on poly(xi) * exp(-qi pi xi^2)
        out: dict = {}
        pull = PiLaurent.pi_power(1, -2 * qi)
        for m, a in poly.items():
            if m >= 1:
                out[m - 1] = out.get(m - 1, PiLaurent()) + a * m
            out[m + 1] = out.get(m + 1, PiLaurent()) + a * pull
        return out

    result: dict = {}
    for n, c in f.coeffs.items():
        poly = {0: ONE}
        for _ in range(n):
            poly = d_once(poly)
        front = PiLaurent.i_power(n) * PiLaurent.pi_power(-n, Fraction(1, 2**n))
        for m, a in poly.items():
            term = c * front * a
            result[m] = result[m] + term if m in result else term
    return PolyGaussian1D(result, qi, f.scale_sq * qi)


def dirac_family(eps) -> PolyGaussian1D:
    """Normalized Gaussian of width eps: (1/eps) exp(-pi x^2 / eps^2).

    Integrates to 1 for every eps > 0 and approximates the Dirac measure as
    eps -> 0.  Pass eps as a Fraction (or an exactly representable float) to
    keep the transform identities exact.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    return PolyGaussian1D({0: PiLaurent.rational(1 / eps)}, 1 / eps**2)


def integrate(f: PolyGaussian1D, spec: QuadratureSpec = DEFAULT_QUAD) -> complex:
    return quad_realline(lambda x: f(x), spec)


def l2_norm_sq(f: PolyGaussian1D, spec: QuadratureSpec = DEFAULT_QUAD) -> float:
    return quad_realline(lambda x: abs(f(x)) ** 2, spec).real


def mollify_deficit(
    f: Callable[[np.ndarray], np.ndarray],
    eps: float,
    p: float,
    halfwidth: float = 4.0,
    spacing: float | None = None,
) -> float:
    """Discretized || f * v_eps - f ||_p on a uniform grid of [-halfwidth, halfwidth].

    f must be bounded with support inside the grid window.  The convolution
    kernel is the dirac_family Gaussian sampled on the same grid; spacing
    defaults to eps/8 and must not exceed eps/4.
    """
    eps = float(eps)
    if p < 1:
        raise ValueError("p must be >= 1")
    h = float(spacing) if spacing is not None else eps / 8.0
    if h > eps / 4.0 + 1e-15:
        raise GridTooCoarse(f"grid spacing {h} exceeds eps/4 = {eps / 4}")
    xs = np.arange(-halfwidth, halfwidth + 0.5 * h, h)
    fx = np.asarray(f(xs), dtype=float)
    # kernel radius: Gaussian tail below 1e-16 of its peak
    radius = int(math.ceil(4.0 * eps / h))
    offs = np.arange(-radius, radius + 1) * h
    kernel = (1.0 / eps) * np.exp(-math.pi * offs**2 / eps**2)
    shifted = np.array([f(xs - t) for t in offs], dtype=float)
    conv = h * kernel @ shifted
    return float((h * np.sum(np.abs(conv - fx) ** p)) ** (1.0 / p))


def point_mollification(f: Callable[[np.ndarray], np.ndarray], y: float, eps: float, halfwidth: float = 6.0) -> complex:
    """Grid value of int f(y + x) conj(v_eps(x)) dx, the pointwise inversion probe."""
    h = eps / 16.0
    xs = np.arange(-halfwidth, halfwidth + 0.5 * h, h)
    kernel = (1.0 / eps) * np.exp(-math.pi * xs**2 / eps**2)
    vals = np.asarray(f(y + xs), dtype=complex)
    return complex(h * np.sum(vals * kernel))


def decay_check(
    h: Callable[[np.ndarray], np.ndarray] | PolyGaussian1D,
    n: int,
    x_halfwidth: float = 6.0,
    xi_max: float = 8.0,
    grid: int = 2048,
) -> float:
    """sup over a xi grid of |xi|^n |h^(xi)| with a Riemann-sum transform.

    Finite for any bounded integrable sample; for smooth h the value reflects
    the integration-by-parts decay rate of the transform.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    fn = h.eval_array if isinstance(h, PolyGaussian1D) else h
    xs = np.linspace(-x_halfwidth, x_halfwidth, grid, endpoint=False)
    dx = xs[1] - xs[0]
    hx = np.asarray(fn(xs), dtype=complex)
    xis = np.linspace(-xi_max, xi_max, 257)
    phases = np.exp(-2j * math.pi * np.outer(xis, xs))
    hat = phases @ hx * dx
    return float(np.max(np.abs(xis) ** n * np.abs(hat)))
