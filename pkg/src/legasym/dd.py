"""Double-double arithmetic: ~31 significant digits from pairs of binary64.

A value is stored as an unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
Products use Dekker splitting (no FMA on this interpreter), sums use
the error-free 2Sum transform.  Transcendentals are argument-reduced
Taylor series or Newton refinements of the double-precision seed, giving
relative errors of order 1e-31 per operation.

The complex layer (CDD) represents re/im as two DD values and supplies
exp, log, pow and a shifted Stirling log-gamma, which is everything the
convergent-series reference evaluator needs.
"""

from __future__ import annotations

import math
from fractions import Fraction

_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a: float, b: float):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a: float, b: float):
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _split(a: float):
    c = _SPLITTER * a
    big = c - a
    hi = c - big
    return hi, a - hi


def _two_prod(a: float, b: float):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


# ---------------------------------------------------------------------------
# raw (hi, lo) kernels; the DD class wraps these
# ---------------------------------------------------------------------------

def dd_add(xh, xl, yh, yl):
    s, e = _two_sum(xh, yh)
    t, f = _two_sum(xl, yl)
    e += t
    s, e = _quick_two_sum(s, e)
    e += f
    return _quick_two_sum(s, e)


def dd_mul(xh, xl, yh, yl):
    p, e = _two_prod(xh, yh)
    e += xh * yl + xl * yh
    return _quick_two_sum(p, e)


def dd_div(xh, xl, yh, yl):
    q1 = xh / yh
    rh, rl = dd_add(xh, xl, *dd_mul(q1, 0.0, -yh, -yl))
    q2 = rh / yh
    rh, rl = dd_add(rh, rl, *dd_mul(q2, 0.0, -yh, -yl))
    q3 = rh / yh
    s, e = _quick_two_sum(q1, q2)
    return dd_add(s, e, q3, 0.0)


class DD:
    """Immutable double-double scalar."""

    __slots__ = ("hi", "lo")

    def __init__(self, hi: float, lo: float = 0.0):
        self.hi = hi
        self.lo = lo

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_fraction(fr: Fraction) -> "DD":
        hi = float(fr)
        lo = float(fr - Fraction(hi)) if math.isfinite(hi) else 0.0
        return DD(hi, lo)

    @staticmethod
    def from_decimal(s: str) -> "DD":
        return DD.from_fraction(Fraction(s))

    # -- basic arithmetic ---------------------------------------------------

    def __repr__(self):
        return f"DD({self.hi!r}, {self.lo!r})"

    def __float__(self):
        return self.hi + self.lo

    def __neg__(self):
        return DD(-self.hi, -self.lo)

    def __abs__(self):
        return -self if self.hi < 0.0 else self

    def _coerce(other):
        if isinstance(other, DD):
            return other
        if isinstance(other, (int, float)):
            return DD(float(other))
        return None

    def __add__(self, other):
        o = DD._coerce(other)
        if o is None:
            return NotImplemented
        return DD(*dd_add(self.hi, self.lo, o.hi, o.lo))

    __radd__ = __add__

    def __sub__(self, other):
        o = DD._coerce(other)
        if o is None:
            return NotImplemented
        return DD(*dd_add(self.hi, self.lo, -o.hi, -o.lo))

    def __rsub__(self, other):
        o = DD._coerce(other)
        if o is None:
            return NotImplemented
        return DD(*dd_add(o.hi, o.lo, -self.hi, -self.lo))

    def __mul__(self, other):
        o = DD._coerce(other)
        if o is None:
            return NotImplemented
        return DD(*dd_mul(self.hi, self.lo, o.hi, o.lo))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = DD._coerce(other)
        if o is None:
            return NotImplemented
        return DD(*dd_div(self.hi, self.lo, o.hi, o.lo))

    def __rtruediv__(self, other):
        o = DD._coerce(other)
        if o is None:
            return NotImplemented
        return DD(*dd_div(o.hi, o.lo, self.hi, self.lo))

    def __lt__(self, other):
        o = DD._coerce(other)
        return self.hi < o.hi or (self.hi == o.hi and self.lo < o.lo)

    def __le__(self, other):
        o = DD._coerce(other)
        return self.hi < o.hi or (self.hi == o.hi and self.lo <= o.lo)

    def __gt__(self, other):
        return DD._coerce(other) < self

    def __ge__(self, other):
        return DD._coerce(other) <= self

    def __eq__(self, other):
        o = DD._coerce(other)
        return self.hi == o.hi and self.lo == o.lo

    def scale2(self, k: int) -> "DD":
        """Exact multiplication by 2**k."""
        return DD(math.ldexp(self.hi, k), math.ldexp(self.lo, k))


ZERO = DD(0.0)
ONE = DD(1.0)
PI = DD.from_decimal("3.14159265358979323846264338327950288419716939937511")
PI_HALF = PI.scale2(-1)
TWO_PI = PI.scale2(1)
LN2 = DD.from_decimal("0.69314718055994530941723212145817656807550013436026")
HALF_LN_2PI = DD.from_decimal("0.91893853320467274178032973640561763986139747363778")


def dd_sqrt(a: DD) -> DD:
    if a.hi == 0.0 and a.lo == 0.0:
        return ZERO
    if a.hi < 0.0:
        raise ValueError("dd_sqrt of negative value")
    y = math.sqrt(a.hi)
    # one Newton step: y + (a - y^2) / (2y), error O(1e-32)
    yd = DD(y)
    return yd + (a - yd * yd) / (2.0 * y)


def dd_exp(a: DD) -> DD:
    x = a.hi
    if x < -709.0:
        return ZERO
    if x > 709.0:
        raise OverflowError("dd_exp overflow")
    k = round(x / LN2.hi)
    r = a - LN2 * k
    # |r| <= ln2/2; Taylor to n where r^n/n! < 1e-34
    term = DD(1.0)
    total = DD(1.0)
    for n in range(1, 27):
        term = term * r / n
        total = total + term
        if abs(term.hi) < 1e-35:
            break
    return total.scale2(k)


def dd_log(a: DD) -> DD:
    if a.hi <= 0.0:
        raise ValueError("dd_log domain")
    t = DD(math.log(a.hi))
    # Newton on exp(t) = a, two steps from a 1e-16 seed
    for _ in range(2):
        t = t + a * dd_exp(-t) - 1.0
    return t


def _sin_taylor(r: DD) -> DD:
    r2 = r * r
    term = r
    total = r
    for n in range(1, 16):
        term = term * r2 / ((2 * n) * (2 * n + 1))
        term = -term
        total = total + term
        if abs(term.hi) < 1e-35:
            break
    return total


def _cos_taylor(r: DD) -> DD:
    r2 = r * r
    term = DD(1.0)
    total = DD(1.0)
    for n in range(1, 16):
        term = term * r2 / ((2 * n - 1) * (2 * n))
        term = -term
        total = total + term
        if abs(term.hi) < 1e-35:
            break
    return total


def dd_sincos(a: DD):
    """(sin a, cos a) with quadrant reduction; |a| should stay below ~1e12."""
    k = round((a.hi + a.lo) / PI_HALF.hi)
    r = a - PI_HALF * k
    s, c = _sin_taylor(r), _cos_taylor(r)
    q = k & 3
    if q == 0:
        return s, c
    if q == 1:
        return c, -s
    if q == 2:
        return -s, -c
    return -c, s


def dd_sin(a: DD) -> DD:
    return dd_sincos(a)[0]


def dd_cos(a: DD) -> DD:
    return dd_sincos(a)[1]


def dd_atan2(y: DD, x: DD) -> DD:
    if y.hi == 0.0 and y.lo == 0.0:
        if x.hi > 0.0:
            return ZERO
        return PI
    t = DD(math.atan2(y.hi, x.hi))
    # Newton on f(t) = sin(t) x - cos(t) y = 0; f' = cos(t) x + sin(t) y
    for _ in range(2):
        s, c = dd_sincos(t)
        num = s * x - c * y
        den = c * x + s * y
        t = t - num / den
    return t


def dd_hypot(x: DD, y: DD) -> DD:
    ax, ay = abs(x), abs(y)
    if ay.hi > ax.hi:
        ax, ay = ay, ax
    if ax.hi == 0.0:
        return ZERO
    # scale to avoid overflow of squares
    k = 0
    if ax.hi > 1e150 or ax.hi < 1e-150:
        k = -int(math.floor(math.log2(ax.hi)))
        ax, ay = ax.scale2(k), ay.scale2(k)
    return dd_sqrt(ax * ax + ay * ay).scale2(-k)


# ---------------------------------------------------------------------------
# complex double-double
# ---------------------------------------------------------------------------

class CDD:
    """Complex scalar with DD real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=ZERO):
        self.re = re if isinstance(re, DD) else DD(float(re))
        self.im = im if isinstance(im, DD) else DD(float(im))

    @staticmethod
    def from_complex(z: complex) -> "CDD":
        z = complex(z)
        return CDD(DD(z.real), DD(z.imag))

    def __repr__(self):
        return f"CDD({self.re!r}, {self.im!r})"

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def _coerce(other):
        if isinstance(other, CDD):
            return other
        if isinstance(other, DD):
            return CDD(other, ZERO)
        if isinstance(other, complex):
            return CDD.from_complex(other)
        return CDD(DD(float(other)), ZERO)

    def __neg__(self):
        return CDD(-self.re, -self.im)

    def conj(self):
        return CDD(self.re, -self.im)

    def __add__(self, other):
        o = CDD._coerce(other)
        return CDD(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = CDD._coerce(other)
        return CDD(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return CDD._coerce(other) - self

    def __mul__(self, other):
        o = CDD._coerce(other)
        return CDD(self.re * o.re - self.im * o.im,
                   self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = CDD._coerce(other)
        d = o.re * o.re + o.im * o.im
        return CDD((self.re * o.re + self.im * o.im) / d,
                   (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        return CDD._coerce(other) / self

    def abs_dd(self) -> DD:
        return dd_hypot(self.re, self.im)

    def is_zero(self) -> bool:
        return self.re.hi == 0.0 and self.re.lo == 0.0 \
            and self.im.hi == 0.0 and self.im.lo == 0.0


def cdd_exp(z: CDD) -> CDD:
    r = dd_exp(z.re)
    s, c = dd_sincos(z.im)
    return CDD(r * c, r * s)


def cdd_log(z: CDD) -> CDD:
    return CDD(dd_log(z.abs_dd()), dd_atan2(z.im, z.re))


def cdd_sqrt(z: CDD) -> CDD:
    if z.is_zero():
        return CDD(ZERO, ZERO)
    half = cdd_log(z)
    return cdd_exp(CDD(half.re.scale2(-1), half.im.scale2(-1)))


def cdd_pow(z: CDD, w) -> CDD:
    """Principal z**w."""
    w = CDD._coerce(w)
    if z.is_zero():
        return CDD(ZERO, ZERO)
    return cdd_exp(w * cdd_log(z))


def cdd_sin(z: CDD) -> CDD:
    s, c = dd_sincos(z.re)
    ep = dd_exp(z.im)
    em = 1.0 / ep if ep.hi != 0.0 else dd_exp(-z.im)
    ch = (ep + em).scale2(-1)
    sh = (ep - em).scale2(-1)
    return CDD(s * ch, c * sh)


def cdd_cos(z: CDD) -> CDD:
    s, c = dd_sincos(z.re)
    ep = dd_exp(z.im)
    em = 1.0 / ep if ep.hi != 0.0 else dd_exp(-z.im)
    ch = (ep + em).scale2(-1)
    sh = (ep - em).scale2(-1)
    return CDD(c * ch, -(s * sh))


# ---------------------------------------------------------------------------
# log-gamma: recurrence shift into Re w >= 25, then Stirling with Bernoulli
# tail.  For Re w >= 25 and 18 tail terms the truncation error is far below
# the 1e-31 arithmetic floor.
# ---------------------------------------------------------------------------

_BERNOULLI = [
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6),
    Fraction(-3617, 510), Fraction(43867, 798), Fraction(-174611, 330),
    Fraction(854513, 138), Fraction(-236364091, 2730), Fraction(8553103, 6),
    Fraction(-23749461029, 870), Fraction(8615841276005, 14322),
    Fraction(-7709321041217, 510), Fraction(2577687858367, 6),
    Fraction(-26315271553053477373, 1919190),
]

_STIRLING_COEFFS = [
    DD.from_fraction(b / ((2 * j + 1) * (2 * j + 2)))
    for j, b in enumerate(_BERNOULLI)
]

_SHIFT_RE = 25.0


def cdd_lgamma(z: CDD) -> CDD:
    """log Gamma, analytic on Re z > 0; via shift elsewhere (mod 2 pi i)."""
    zre = float(z.re)
    zim = float(z.im)
    if zre < -200.0:
        raise ValueError("cdd_lgamma argument too far left")
    if zim == 0.0 and zre <= 0.0 and abs(zre - round(zre)) < 1e-13:
        raise ZeroDivisionError("lgamma pole")
    acc = CDD(ZERO, ZERO)
    w = z
    while float(w.re) < _SHIFT_RE:
        acc = acc + cdd_log(w)
        w = w + 1.0
    lw = cdd_log(w)
    res = (w - 0.5) * lw - w + HALF_LN_2PI
    winv = 1.0 / w
    winv2 = winv * winv
    p = winv
    for c in _STIRLING_COEFFS:
        res = res + c * p
        p = p * winv2
    return res - acc


def cdd_gamma(z: CDD) -> CDD:
    return cdd_exp(cdd_lgamma(z))
