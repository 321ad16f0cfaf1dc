"""Independent reference evaluation in double-double precision.

Everything here is summed from convergent series only: the Gauss series
(plus its Pfaff-transformed companion where the direct argument leaves
the convergence disk), the defining hypergeometric representations of
the Legendre and Ferrers functions, and the ascending series of the
modified Bessel functions.  No asymptotic expansion under test is ever
consulted, and no quadrature is used.

Values are returned as complex (binary64) with the quoted residual being
the summation tolerance tol; the _dd variants expose the full
double-double values for the self-consistency tests.
"""

from __future__ import annotations

import cmath
import math

from .dd import (CDD, DD, PI, cdd_exp, cdd_gamma, cdd_lgamma, cdd_log,
                 cdd_pow, cdd_sin, cdd_sqrt, dd_exp, dd_sqrt)
from .errors import ConvergenceError, PoleError
from .core import is_nonpositive_integer

MAX_TERMS = 100_000
DEFAULT_TOL = 1e-25

_lgamma_cache: dict[tuple[float, float, float, float], CDD] = {}


def _lgamma(z: CDD) -> CDD:
    key = (z.re.hi, z.re.lo, z.im.hi, z.im.lo)
    got = _lgamma_cache.get(key)
    if got is None:
        try:
            got = cdd_lgamma(z)
        except ZeroDivisionError as exc:
            raise PoleError(f"gamma pole at {z.to_complex()}") from exc
        if len(_lgamma_cache) > 4096:
            _lgamma_cache.clear()
        _lgamma_cache[key] = got
    return got


def _rgamma_dd(z: CDD) -> CDD:
    """1/Gamma in DD; exact zero at nonpositive integers."""
    zc = z.to_complex()
    if zc.imag == 0.0 and zc.real <= 0.0 and zc.real == round(zc.real):
        return CDD(0.0, 0.0)
    return cdd_exp(-_lgamma(z))


def _mag(z: CDD) -> float:
    return abs(z.re.hi) + abs(z.im.hi)


def _gauss_series_dd(a: CDD, b: CDD, c: CDD, z: CDD, tol: float) -> CDD:
    """Sum of the Gauss series at argument z, |z| bounded away from 1."""
    term = CDD(1.0, 0.0)
    total = CDD(1.0, 0.0)
    floor_hits = 0
    for n in range(MAX_TERMS):
        cn = c + n
        if _mag(cn) == 0.0:
            raise PoleError(f"series parameter pole: c = {c.to_complex()}, "
                            f"n = {n}")
        term = term * (a + n) * (b + n) * z / (cn * (n + 1))
        if _mag(term) == 0.0:
            return total  # terminating numerator parameter
        total = total + term
        if _mag(term) <= tol * max(_mag(total), 1e-290):
            floor_hits += 1
            if floor_hits >= 2:
                return total
        else:
            floor_hits = 0
    raise ConvergenceError(
        f"Gauss series needed more than {MAX_TERMS} terms at z={z.to_complex()}")


def _pochhammer_dd(x: CDD, n: int) -> CDD:
    p = CDD(1.0, 0.0)
    for k in range(n):
        p = p * (x + k)
    return p


def _gauss_reg_dd(a: CDD, b: CDD, c: CDD, z: CDD, tol: float) -> CDD:
    """Regularized Gauss function: the series divided by Gamma(c).

    c at a nonpositive integer -K is admitted: the first K+1 terms carry
    1/Gamma(nonpositive integer) = 0, and summation starts at n = K+1.
    """
    cc = c.to_complex()
    if cc.imag == 0.0 and cc.real <= 0.0 and cc.real == round(cc.real):
        k = int(-cc.real)
        start = _pochhammer_dd(a, k + 1) * _pochhammer_dd(b, k + 1)
        zp = CDD(1.0, 0.0)
        for _ in range(k + 1):
            zp = zp * z
        fact = 1.0
        for j in range(2, k + 2):
            fact *= j
        term = start * zp / fact
        total = term
        floor_hits = 0
        for n in range(k + 1, MAX_TERMS):
            term = term * (a + n) * (b + n) * z / ((c + n) * (n + 1))
            if _mag(term) == 0.0:
                return total
            total = total + term
            if _mag(term) <= tol * max(_mag(total), 1e-290):
                floor_hits += 1
                if floor_hits >= 2:
                    return total
            else:
                floor_hits = 0
        raise ConvergenceError("regularized Gauss series did not converge")
    if is_nonpositive_integer(cc):
        raise PoleError(f"c = {cc} too close to a nonpositive integer")
    return _gauss_series_dd(a, b, c, z, tol) * cdd_exp(-_lgamma(c))


def hyp2f1_dd(a: CDD, b: CDD, c: CDD, z: CDD, tol: float) -> CDD:
    """Gauss function with automatic Pfaff routing for 0.95 < |z|."""
    az = abs(z.to_complex())
    if az <= 0.95:
        return _gauss_series_dd(a, b, c, z, tol)
    zc = z.to_complex()
    w = zc / (zc - 1.0)
    if abs(w) <= 0.95:
        wdd = z / (z - 1.0)
        pref = cdd_pow(1.0 - z.to_complex(), -a)
        return pref * _gauss_series_dd(a, c - b, c, wdd, tol)
    raise ConvergenceError(f"no convergent route for 2F1 at z={zc}")


def oracle_2f1(a: complex, b: complex, c: complex, z: complex,
               tol: float = DEFAULT_TOL) -> complex:
    """Reference 2F1(a, b; c; z); residual quoted as tol (>= 1e-25)."""
    if is_nonpositive_integer(c):
        raise PoleError(f"c = {c} is a nonpositive integer")
    return hyp2f1_dd(CDD.from_complex(a), CDD.from_complex(b),
                     CDD.from_complex(c), CDD.from_complex(z), tol).to_complex()


# ---------------------------------------------------------------------------
# Legendre functions on the cut plane
# ---------------------------------------------------------------------------

def _cut_powers(z: CDD, expo: CDD) -> tuple[CDD, CDD]:
    """((z-1)^expo, (z+1)^expo), each principal: the cut-plane convention."""
    return cdd_pow(z - 1.0, expo), cdd_pow(z + 1.0, expo)


def acosh_strip(z: complex) -> complex:
    """Inverse of cosh from the cut plane onto Re xi > 0, |Im xi| < pi."""
    zc = complex(z)
    root = cmath.sqrt(zc - 1.0) * cmath.sqrt(zc + 1.0)
    return cmath.log(zc + root)


def _acosh_strip_dd(z: CDD) -> CDD:
    root = cdd_sqrt(z - 1.0) * cdd_sqrt(z + 1.0)
    return cdd_log(z + root)


def oracle_legendre_p_dd(z: CDD, mu: CDD, nu: CDD, tol: float) -> CDD:
    muc = mu.to_complex()
    if muc.imag == 0.0 and muc.real >= 1.0 and muc.real == round(muc.real):
        # 1 - mu is a nonpositive integer: reflect through the order
        # connection (the second-kind term carries sin(pi mu) = 0).
        m = int(muc.real)
        num = nu + (m + 1)
        den = nu - (m - 1)
        ratio = _rgamma_dd(den) * cdd_exp(_lgamma(num))
        return ratio * oracle_legendre_p_dd(z, CDD(-float(m), 0.0), nu, tol)
    if is_nonpositive_integer(1.0 - muc):
        raise PoleError(f"order mu = {muc} too close to a positive integer")
    half_mu = CDD(mu.re.scale2(-1), mu.im.scale2(-1))
    zm, zp = cdd_pow(z - 1.0, -half_mu), cdd_pow(z + 1.0, half_mu)
    pref = zm * zp
    w = (1.0 - z) / 2.0
    a, b, c = nu + 1.0, -nu, 1.0 - mu
    if abs(w.to_complex()) <= 0.95:
        return pref * _gauss_reg_dd(a, b, c, w, tol)
    w2 = (z - 1.0) / (z + 1.0)
    if abs(w2.to_complex()) <= 0.95:
        pf2 = cdd_pow((1.0 + z) / 2.0, -a)
        return pref * pf2 * _gauss_reg_dd(a, c - b, c, w2, tol)
    raise ConvergenceError(f"no convergent route for P at z={z.to_complex()}")


def oracle_legendre_p(z: complex, mu: complex, nu: complex,
                      tol: float = DEFAULT_TOL) -> complex:
    """Reference P_nu^mu(z) on the cut plane, defining representation."""
    return oracle_legendre_p_dd(CDD.from_complex(z), CDD.from_complex(mu),
                                CDD.from_complex(nu), tol).to_complex()


def oracle_legendre_q_dd(z: CDD, mu: CDD, nu: CDD, tol: float,
                         route: str = "auto") -> CDD:
    """Normalized second-kind value e^{-i pi mu} Q_nu^mu(z) in DD.

    route: "auto" picks the first convergent representation; "inverse-z2"
    and "descending" force the two representations for cross-checks.
    """
    numu1 = nu + mu + 1.0
    if is_nonpositive_integer(numu1.to_complex()):
        raise PoleError(f"nu+mu+1 = {numu1.to_complex()} at a gamma pole")
    zc = z.to_complex()
    inv_z2 = 1.0 / (zc * zc)
    if route in ("auto", "inverse-z2") and abs(inv_z2) <= 0.95:
        half_mu = CDD(mu.re.scale2(-1), mu.im.scale2(-1))
        zm, zp = _cut_powers(z, half_mu)
        g = cdd_exp(_lgamma(numu1))
        pref = cdd_sqrt(CDD(PI)) * g * zm * zp \
            * cdd_exp(-(nu + 1.0) * CDD(DD.from_decimal(
                "0.69314718055994530941723212145817656807550013436026"))) \
            * cdd_exp(-numu1 * cdd_log(z))
        f = _gauss_reg_dd((numu1 + 1.0) / 2.0, numu1 / 2.0, nu + 1.5,
                          1.0 / (z * z), tol)
        return pref * f
    if route == "inverse-z2":
        raise ConvergenceError("inverse-z2 route not convergent here")
    xi = _acosh_strip_dd(z)
    sh = cdd_sqrt(z - 1.0) * cdd_sqrt(z + 1.0)   # sinh xi on the strip
    pref = cdd_sqrt(CDD(PI) / (sh * 2.0)) \
        * cdd_exp(-(nu + 0.5) * xi) * cdd_exp(_lgamma(numu1))
    e2 = cdd_exp(xi * (-2.0))
    w2 = -1.0 / (cdd_exp(xi * 2.0) - 1.0)
    if route in ("auto", "descending") and abs(w2.to_complex()) <= 0.95:
        f = _gauss_reg_dd(mu + 0.5, 0.5 - mu, nu + 1.5, w2, tol)
        return pref * f
    if route == "descending":
        raise ConvergenceError("descending route not convergent here")
    if abs(e2.to_complex()) <= 0.985:
        pf2 = cdd_pow((cdd_exp(xi) / (sh * 2.0)).to_complex(), -(mu + 0.5))
        f = _gauss_reg_dd(mu + 0.5, numu1, nu + 1.5, e2, tol)
        return pref * pf2 * f
    raise ConvergenceError(f"no convergent route for Q at z={zc}")


def oracle_legendre_q(z: complex, mu: complex, nu: complex,
                      tol: float = DEFAULT_TOL) -> complex:
    """Reference normalized value e^{-i pi mu} Q_nu^mu(z)."""
    return oracle_legendre_q_dd(CDD.from_complex(z), CDD.from_complex(mu),
                                CDD.from_complex(nu), tol).to_complex()


def oracle_legendre_q_plain(z: complex, mu: complex, nu: complex,
                            tol: float = DEFAULT_TOL) -> complex:
    """Reference Q_nu^mu(z) itself."""
    return cmath.exp(1j * math.pi * mu) * oracle_legendre_q(z, mu, nu, tol)


# ---------------------------------------------------------------------------
# Ferrers functions on (-1, 1)
# ---------------------------------------------------------------------------

def _ferrers_p_dd(x: float, mu: CDD, nu: CDD, tol: float) -> CDD:
    muc = mu.to_complex()
    if muc.imag == 0.0 and muc.real >= 1.0 and muc.real == round(muc.real):
        m = int(muc.real)
        ratio = _rgamma_dd(nu - (m - 1)) * cdd_exp(_lgamma(nu + (m + 1)))
        sign = 1.0 if m % 2 == 0 else -1.0
        return ratio * _ferrers_p_dd(x, CDD(-float(m), 0.0), nu, tol) * sign
    if is_nonpositive_integer(1.0 - muc):
        raise PoleError(f"order mu = {muc} too close to a positive integer")
    xd = CDD(DD(x))
    half_mu = CDD(mu.re.scale2(-1), mu.im.scale2(-1))
    pref = cdd_pow((1.0 + xd) / (1.0 - xd), half_mu)
    w = (1.0 - xd) / 2.0
    return pref * _gauss_reg_dd(nu + 1.0, -nu, 1.0 - mu, w, tol)


def _ferrers_q_generic_dd(x: float, mu: CDD, nu: CDD, tol: float) -> CDD:
    """Second-kind Ferrers value for mu bounded away from the integers."""
    xd = CDD(DD(x))
    w = (1.0 - xd) / 2.0
    half_mu = CDD(mu.re.scale2(-1), mu.im.scale2(-1))
    a_term = cdd_pow((1.0 + xd) / (1.0 - xd), half_mu) \
        * _gauss_reg_dd(nu + 1.0, -nu, 1.0 - mu, w, tol)
    b_term = cdd_pow((1.0 - xd) / (1.0 + xd), half_mu) \
        * _gauss_reg_dd(nu + 1.0, -nu, 1.0 + mu, w, tol)
    g = cdd_exp(_lgamma(nu + mu + 1.0) - _lgamma(nu - mu + 1.0))
    spm = cdd_sin(CDD(PI) * mu)
    cpm = cdd_sin(CDD(PI) * (mu + 0.5))   # cos(pi mu)
    return (cpm * a_term - g * b_term) * CDD(PI) / (spm * 2.0)


def _ferrers_pair_direct(x: float, mu: CDD, nu: CDD, tol: float):
    p = _ferrers_p_dd(x, mu, nu, tol)
    muc = mu.to_complex()
    if muc.imag == 0.0 and abs(muc.real - round(muc.real)) < 1e-7:
        # removable sin(pi mu) singularity: average two nearby orders
        eps = 1e-6
        qp = _ferrers_q_generic_dd(x, mu + eps, nu, tol)
        qm = _ferrers_q_generic_dd(x, mu - eps, nu, tol)
        q = (qp + qm) / 2.0
    else:
        q = _ferrers_q_generic_dd(x, mu, nu, tol)
    return p, q


def oracle_ferrers_dd(x: float, mu: CDD, nu: CDD, tol: float):
    if not -1.0 < x < 1.0:
        raise ConvergenceError("Ferrers argument must lie in (-1, 1)")
    if x > -0.9:
        return _ferrers_pair_direct(x, mu, nu, tol)
    # negative-argument connection fills the remaining band
    p0, q0 = _ferrers_pair_direct(-x, mu, nu, tol)
    ang = CDD(PI) * (nu + mu)
    c, s = cdd_sin(ang + CDD(PI) / 2.0), cdd_sin(ang)
    p = c * p0 - s * q0 * (2.0 / math.pi)
    q = -(c * q0) - s * p0 * (math.pi / 2.0)
    return p, q


def oracle_ferrers(x: float, mu: complex, nu: complex,
                   tol: float = DEFAULT_TOL) -> tuple[complex, complex]:
    """Reference Ferrers pair (P, Q) at real x in (-1, 1)."""
    p, q = oracle_ferrers_dd(x, CDD.from_complex(mu), CDD.from_complex(nu),
                             tol)
    return p.to_complex(), q.to_complex()


# ---------------------------------------------------------------------------
# modified Bessel K via the Maclaurin series of I_{+-mu}
# ---------------------------------------------------------------------------

def _bessel_i_dd(w: CDD, mu: CDD, tol: float) -> CDD:
    pref = cdd_pow((w / 2.0).to_complex(), mu) * _rgamma_dd(mu + 1.0)
    q = (w * w) / 4.0
    term = CDD(1.0, 0.0)
    total = CDD(1.0, 0.0)
    for k in range(1, MAX_TERMS):
        term = term * q / ((mu + k) * k)
        total = total + term
        if _mag(term) <= tol * _mag(total):
            break
    else:
        raise ConvergenceError("Bessel I series did not converge")
    return pref * total


def _bessel_k_generic_dd(w: CDD, mu: CDD, tol: float) -> CDD:
    im = _bessel_i_dd(w, -mu, tol) - _bessel_i_dd(w, mu, tol)
    return im * CDD(PI) / (cdd_sin(CDD(PI) * mu) * 2.0)


def oracle_bessel_k_dd(w: CDD, mu: CDD, tol: float) -> CDD:
    if abs(w.to_complex()) > 30.0:
        raise ConvergenceError("Bessel K reference limited to |w| <= 30")
    muc = mu.to_complex()
    if muc.imag == 0.0 and abs(muc.real - round(muc.real)) < 1e-7:
        eps = 1e-6
        kp = _bessel_k_generic_dd(w, mu + eps, tol)
        km = _bessel_k_generic_dd(w, mu - eps, tol)
        return (kp + km) / 2.0
    return _bessel_k_generic_dd(w, mu, tol)


def oracle_bessel_k(w: complex, mu: complex,
                    tol: float = DEFAULT_TOL) -> complex:
    """Reference K_mu(w) for |w| <= 30 (Wronskian assembly of I_{+-mu})."""
    return oracle_bessel_k_dd(CDD.from_complex(w), CDD.from_complex(mu),
                              tol).to_complex()


def dd_relative_diff(a: CDD, b: CDD) -> float:
    """|a - b| / max(|a|, |b|) evaluated in DD (for 1e-20-level checks)."""
    num = (a - b).abs_dd()
    den = max(float(a.abs_dd()), float(b.abs_dd()))
    if den == 0.0:
        return float(num)
    return float(num) / den
