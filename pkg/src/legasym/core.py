"""Shared complex scalar machinery for the expansion evaluators.

Complex log-gamma (Lanczos with reflection), gamma ratios with pole
policy, the expansion coefficients a_n(mu), the chi factor, the phase
constants of the hyperbolic-domain expansions and the linear phases of
the trigonometric-domain expansions.

Branch policy: on the half-strip Re xi > 0, |Im xi| < pi, sinh(xi) never
meets (-inf, 0], so principal-branch square roots and powers of sinh(xi)
coincide with the continuous choice; the same holds for coth(xi) on the
half-width strip.  No argument tracking is needed anywhere.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PoleError

Cx = complex

_POLE_TOL = 1e-8

# Lanczos, g = 607/128, 15 terms: ~15 significant digits on Re z >= 1/2.
_LANCZOS_G = 4.7421875
_LANCZOS_C = [
    0.99999999999999709182,
    57.156235665862923517, -59.597960355475491248, 14.136097974741747174,
    -0.49191381609762019978, 0.33994649984811888699e-4,
    0.46523628927048575665e-4, -0.98374475304879564677e-4,
    0.15808870322491248884e-3, -0.21026444172410488319e-3,
    0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4, -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
]

LN_PI = math.log(math.pi)
LN_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


def is_nonpositive_integer(z: Cx, tol: float = _POLE_TOL) -> bool:
    z = complex(z)
    if abs(z.imag) > tol:
        return False
    r = round(z.real)
    return r <= 0 and abs(z.real - r) <= tol


def _log_sin_pi(z: Cx) -> Cx:
    """log sin(pi z), overflow-safe for large |Im z| (branch mod 2 pi i)."""
    w = math.pi * z
    if abs(w.imag) < 8.0:
        return cmath.log(cmath.sin(w))
    if w.imag > 0.0:
        # sin w = (i/2) e^{-iw} (1 - e^{2iw})
        return -math.log(2.0) + 0.5j * math.pi - 1j * w \
            + cmath.log(1.0 - cmath.exp(2j * w))
    return -math.log(2.0) - 0.5j * math.pi + 1j * w \
        + cmath.log(1.0 - cmath.exp(-2j * w))


def log_gamma(z: Cx) -> Cx:
    """Principal-branch log Gamma on Re z >= 1/2; reflected elsewhere.

    Accurate to at least 13 significant digits for |z| <= 1e4.  For
    Re z < 1/2 the imaginary part may differ from the principal branch
    by a multiple of 2 pi i, which no magnitude or exp() consumer sees.

    Raises PoleError within 1e-8 of a nonpositive integer.
    """
    z = complex(z)
    if is_nonpositive_integer(z):
        raise PoleError(f"log_gamma pole at z={z}")
    if z.real < 0.5:
        return LN_PI - _log_sin_pi(z) - log_gamma(1.0 - z)
    t = z + (_LANCZOS_G - 0.5)
    s = _LANCZOS_C[0]
    for k in range(1, 15):
        s += _LANCZOS_C[k] / (z - 1.0 + k)
    return LN_SQRT_2PI + (z - 0.5) * cmath.log(t) - t + cmath.log(s)


def gamma_fn(z: Cx) -> Cx:
    """Gamma via exp(log_gamma); PoleError near nonpositive integers."""
    return cmath.exp(log_gamma(z))


def rgamma(z: Cx) -> Cx:
    """1/Gamma, entire: exactly 0.0 within 1e-8 of a nonpositive integer."""
    if is_nonpositive_integer(z):
        return 0.0
    return cmath.exp(-log_gamma(z))


def gamma_ratio(num: Cx, den: Cx, zero_at_pole: bool = False) -> Cx:
    """Gamma(num)/Gamma(den) through log space (no overflow for |.| <= 1e3).

    den at a pole always raises PoleError.  num at a pole raises unless
    the caller opted into the zero-at-pole convention, in which case the
    ratio is reported as exactly 0 (the 1/Gamma(num) = 0 reading used by
    prefactor formulas).
    """
    if is_nonpositive_integer(den):
        raise PoleError(f"gamma_ratio denominator pole at {den}")
    if is_nonpositive_integer(num):
        if zero_at_pole:
            return 0.0
        raise PoleError(f"gamma_ratio numerator pole at {num}")
    return cmath.exp(log_gamma(num) - log_gamma(den))


def abs_gamma_ratio(log_num_sum, log_den_sum) -> float:
    """|Gamma(..)..| / |Gamma(..)..| from pre-summed log-gamma values."""
    return math.exp((log_num_sum - log_den_sum).real)


# ---------------------------------------------------------------------------
# expansion coefficients a_n(mu)
# ---------------------------------------------------------------------------

def two_mu_odd_integer(mu: Cx) -> int | None:
    """Return the odd integer m with 2 mu = m exactly, else None."""
    mu = complex(mu)
    if mu.imag != 0.0:
        return None
    m2 = 2.0 * mu.real
    m = round(m2)
    if m2 == m and m % 2 != 0:
        return int(m)
    return None


def termination_index(mu: Cx) -> int | None:
    """First n with a_n(mu) = 0 when 2 mu is an odd integer, else None."""
    m = two_mu_odd_integer(mu)
    if m is None:
        return None
    return (abs(m) + 1) // 2


def coeff_a(n: int, mu: Cx) -> Cx:
    """a_n(mu) = (4 mu^2 - 1)(4 mu^2 - 9)...(4 mu^2 - (2n-1)^2) / (8^n n!).

    Product recurrence a_n = a_{n-1} (4 mu^2 - (2n-1)^2)/(8n); an exact
    zero factor makes every later coefficient exactly zero when 2 mu is
    an odd integer.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    mu = complex(mu)
    four_mu2 = 4.0 * mu * mu
    a = 1.0 + 0.0j
    for k in range(1, n + 1):
        a *= (four_mu2 - (2 * k - 1) ** 2) / (8.0 * k)
        if a == 0.0:
            return 0.0j
    return a


@dataclass(frozen=True)
class CoefficientTable:
    """a_0(mu) .. a_nmax(mu), immutable and shareable across threads."""

    mu: Cx
    values: tuple[Cx, ...]

    @staticmethod
    def build(mu: Cx, nmax: int) -> "CoefficientTable":
        mu = complex(mu)
        four_mu2 = 4.0 * mu * mu
        vals = [1.0 + 0.0j]
        a = 1.0 + 0.0j
        for k in range(1, nmax + 1):
            if a != 0.0:
                a *= (four_mu2 - (2 * k - 1) ** 2) / (8.0 * k)
            vals.append(a)
        return CoefficientTable(mu, tuple(vals))

    def __getitem__(self, n: int) -> Cx:
        return self.values[n]


def coeff_a_exact(n: int, mu_rational: Fraction) -> Fraction:
    """Exact rational a_n for real rational mu (test oracle helper)."""
    a = Fraction(1)
    four_mu2 = 4 * mu_rational * mu_rational
    for k in range(1, n + 1):
        a *= Fraction(four_mu2 - (2 * k - 1) ** 2, 8 * k)
    return a


# ---------------------------------------------------------------------------
# chi and the phase constants
# ---------------------------------------------------------------------------

def chi(p: float) -> float:
    """sqrt(pi) Gamma(p/2 + 1) / Gamma(p/2 + 1/2) for p > 0."""
    if p <= 0.0:
        raise DomainError("chi requires p > 0")
    return math.sqrt(math.pi) * math.exp(
        (log_gamma(p / 2.0 + 1.0) - log_gamma(p / 2.0 + 0.5)).real)


@dataclass(frozen=True)
class HyperbolicPoint:
    """A point xi of the half-strip Re xi > 0, |Im xi| < pi p."""

    xi: Cx
    p: float = 1.0

    def __post_init__(self):
        xi = complex(self.xi)
        if not (math.isfinite(xi.real) and math.isfinite(xi.imag)):
            raise DomainError("xi must be finite")
        if xi.real <= 0.0 or abs(xi.imag) >= math.pi * self.p:
            raise DomainError(
                f"xi={xi} outside the strip Re xi > 0, |Im xi| < pi*{self.p}")


@dataclass(frozen=True)
class TrigAngle:
    """An angle zeta with 0 < zeta < pi, strictly."""

    zeta: float

    def __post_init__(self):
        if not (0.0 < self.zeta < math.pi):
            raise DomainError(f"zeta={self.zeta} outside (0, pi)")


def phase_C(xi: Cx, mu: Cx) -> Cx:
    """sin(pi mu) on the positive real axis; +-i e^{-+ i pi mu} off it."""
    xi = complex(xi)
    if xi.imag == 0.0:
        if xi.real <= 0.0:
            raise DomainError("phase_C needs xi > 0 on the real axis")
        return cmath.sin(math.pi * mu)
    if 0.0 < xi.imag < math.pi:
        return 1j * cmath.exp(-1j * math.pi * mu)
    if -math.pi < xi.imag < 0.0:
        return -1j * cmath.exp(1j * math.pi * mu)
    raise DomainError("phase_C needs |Im xi| < pi")


def phase_K(xi: Cx, lam: Cx) -> Cx:
    """cos(pi lambda) on the positive real axis; e^{+- i pi lambda} off it."""
    xi = complex(xi)
    if xi.imag == 0.0:
        if xi.real <= 0.0:
            raise DomainError("phase_K needs xi > 0 on the real axis")
        return cmath.cos(math.pi * lam)
    if 0.0 < xi.imag <= math.pi:
        # Im xi = pi admitted only on the integer-degree extended domain;
        # the boundary value is the continuous limit from below.
        return cmath.exp(1j * math.pi * lam)
    if -math.pi < xi.imag < 0.0:
        return cmath.exp(-1j * math.pi * lam)
    raise DomainError("phase_K needs |Im xi| <= pi")


def phases_alpha_beta(mu: Cx, nu: Cx, n: int, zeta: float) -> tuple[Cx, Cx]:
    """Oscillation phases of the descending and ascending trig series."""
    half = 0.5 * math.pi
    alpha = (nu - n + 0.5) * zeta + (mu + n - 0.5) * half
    beta = (nu + n + 0.5) * zeta + (mu + n - 0.5) * half
    return alpha, beta


def phases_gamma_delta(lam: Cx, nu: Cx, n: int, zeta: float) -> tuple[Cx, Cx]:
    """Oscillation phases of the ultraspherical trig series."""
    half = 0.5 * math.pi
    gamma = (nu + lam - n) * zeta - (lam - n) * half
    delta = (nu + lam + n) * zeta - (lam - n) * half
    return gamma, delta


# ---------------------------------------------------------------------------
# the limiting-value rule for |cos(pi mu)/cos(pi Re mu)| * f(Re mu) factors
# ---------------------------------------------------------------------------

_NEAR = 1e-6


def limiting_cos_factor(mu: Cx, f) -> float:
    """|cos(pi mu)/cos(pi x)| * f(x) at x = Re mu, with the limiting rule.

    For real mu the ratio is exactly 1 (termination stays exact).  For
    complex mu with 2 Re mu within 1e-6 of an odd integer, the factor is
    evaluated at Re mu +- 1e-6 and the larger value is returned, a
    conservative stand-in for the removable limit.
    """
    mu = complex(mu)
    x = mu.real
    if mu.imag == 0.0:
        return abs(f(x))
    num = abs(cmath.cos(math.pi * mu))

    def at(xx: float) -> float:
        return num / abs(math.cos(math.pi * xx)) * abs(f(xx))

    dist_to_odd = abs(math.fmod(2.0 * x, 2.0) % 2.0 - 1.0)
    if dist_to_odd <= 2 * _NEAR:
        return max(at(x - _NEAR), at(x + _NEAR))
    return at(x)


def limiting_sin_factor(lam: Cx, f) -> float:
    """|sin(pi lambda)/sin(pi x)| * f(x), same rule keyed on integer x."""
    lam = complex(lam)
    x = lam.real
    if lam.imag == 0.0:
        return abs(f(x))
    num = abs(cmath.sin(math.pi * lam))

    def at(xx: float) -> float:
        return num / abs(math.sin(math.pi * xx)) * abs(f(xx))

    if abs(x - round(x)) <= 2 * _NEAR:
        return max(at(x - _NEAR), at(x + _NEAR))
    return at(x)
