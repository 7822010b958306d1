"""Gamma-function kernel.

Double-precision routines are self-contained (Stirling series with upward
recurrence and reflection).  The ``*_ext`` variants evaluate the same
quantities in arbitrary precision and are backed by :mod:`mpmath`.

Notes
-----
``log_gamma`` returns the branch obtained by continuation from the positive
real axis when ``Re z >= 1/2`` and the reflection value built from principal
logarithms otherwise, so ``exp(log_gamma(z)) == Gamma(z)`` always holds.
"""
from __future__ import annotations

import cmath
import math
from numbers import Real

import mpmath

from .errors import DomainError, PoleError

__all__ = [
    "log_gamma",
    "recip_gamma",
    "recip_gamma_log",
    "digamma",
    "pochhammer",
    "sinpi",
    "extended_context",
    "log_gamma_ext",
    "recip_gamma_ext",
    "pochhammer_ext",
]

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_SQRT_2PI = math.sqrt(2.0 * math.pi)
_LOG_PI = math.log(math.pi)
# Stirling coefficients B_{2k} / (2k (2k-1)), k = 1..8
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)
# B_{2k} / (2k), k = 1..8, for the digamma asymptotic series
_DIGAMMA = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
)
_SHIFT_TO = 15.0


def sinpi(x: float) -> float:
    """Return ``sin(pi x)`` with exact argument reduction modulo 2."""
    r = x - 2.0 * round(x / 2.0)  # exact, r in [-1, 1]
    if r == 0.0 or abs(r) == 1.0:
        return 0.0
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    return math.sin(math.pi * r)


def _stirling_tail(z):
    """Sum of the Stirling correction terms for large ``|z|``."""
    zi = 1.0 / z
    zi2 = zi * zi
    acc = 0.0
    p = zi
    for c in _STIRLING:
        acc += c * p
        p *= zi2
    return acc


# Taylor coefficients of 1/Gamma(z) about z = 0 (Abramowitz & Stegun 6.1.34);
# entry k multiplies z**(k+1).
_RGAMMA_TAYLOR = (
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.782263439905071254e-12,
    -3.6968056186422057082e-12,
    5.100370287454475979e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15,
    -1.1812593016974587695e-16,
    1.1866922547516003326e-18,
    1.4123806553180317816e-18,
    -2.2987456844353702066e-19,
)
_GAMMA_MAX = 171.6


def _rgamma_near_one(x: float) -> float:
    """``1/Gamma(x)`` for ``x`` in ``[0.5, 1.5]``."""
    e = x - 1.0
    acc = 0.0
    for c in reversed(_RGAMMA_TAYLOR):
        acc = acc * e + c
    return acc


def _gamma_pos(x: float) -> float:
    """``Gamma(x)`` for ``0.5 <= x < 171.6``, accurate to a few ulp for moderate x."""
    if x < 1.5:
        return 1.0 / _rgamma_near_one(x)
    if x < _SHIFT_TO:
        prod = 1.0
        while x >= 1.5:
            x -= 1.0
            prod *= x
        return prod / _rgamma_near_one(x)
    # Stirling in product form keeps the relative error near one ulp
    half = x ** (0.5 * x - 0.25)
    return (_SQRT_2PI * half) * (half * math.exp(_stirling_tail(x) - x))


def _lgamma_pos(x: float) -> float:
    """``log Gamma(x)`` for real ``x > 0``."""
    if x < 0.5:
        return _lgamma_pos(x + 1.0) - math.log(x)
    if x < _GAMMA_MAX:
        return math.log(_gamma_pos(x))
    return (x - 0.5) * math.log(x) - x + _HALF_LOG_2PI + _stirling_tail(x)


def _lgamma_right(z: complex) -> complex:
    """``log Gamma(z)`` for ``Re z >= 1/2`` (continuation from the real axis)."""
    shift = 0j
    while z.real < _SHIFT_TO:
        shift += cmath.log(z)
        z += 1.0
    return (z - 0.5) * cmath.log(z) - z + _HALF_LOG_2PI + _stirling_tail(z) - shift


def _check_pole(x: float) -> None:
    if x <= 0.0 and abs(x - round(x)) < 1e-300:
        raise PoleError(f"Gamma has a pole at {x!r}")


def log_gamma(z: complex | float) -> complex:
    """Logarithm of the gamma function for complex argument.

    Parameters
    ----------
    z : complex
        Any finite complex number away from the poles ``0, -1, -2, ...``.

    Returns
    -------
    complex
        A logarithm of ``Gamma(z)``.  For ``z > 0`` this is real-valued
        ``log Gamma(z)``; for negative real ``z`` the imaginary part is
        ``pi`` whenever ``Gamma(z) < 0``.

    Raises
    ------
    PoleError
        If ``z`` is a non-positive integer.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("log_gamma needs a finite argument")
    if z.imag == 0.0:
        x = z.real
        _check_pole(x)
        if x > 0.0:
            return complex(_lgamma_pos(x), 0.0)
        s = sinpi(x)
        val = _LOG_PI - math.log(abs(s)) - _lgamma_pos(1.0 - x)
        # sign of Gamma(x) for x < 0 is the sign of sin(pi x)
        return complex(val, 0.0 if s > 0 else math.pi)
    if z.real >= 0.5:
        return _lgamma_right(z)
    return _LOG_PI - cmath.log(cmath.sin(math.pi * z)) - _lgamma_right(1.0 - z)


def recip_gamma_log(x: float) -> tuple[int, float]:
    """Sign and log-magnitude of ``1/Gamma(x)`` for real ``x``.

    Returns ``(0, -inf)`` at the poles of Gamma, where the reciprocal vanishes.
    Useful when ``1/Gamma`` would overflow.
    """
    if x > 0.5:
        return 1, -_lgamma_pos(x)
    if x == math.floor(x):
        return 0, -math.inf
    s = sinpi(x)
    return (1 if s > 0 else -1), math.log(abs(s)) + _lgamma_pos(1.0 - x) - _LOG_PI


def recip_gamma(x: float) -> float:
    """Reciprocal gamma function ``1/Gamma(x)`` for real ``x``.

    Uses the reflection formula ``sin(pi x) Gamma(1-x) / pi`` for ``x <= 1/2``
    and returns exactly ``0.0`` at ``x = 0, -1, -2, ...``.
    """
    if not isinstance(x, Real) or not math.isfinite(x):
        raise DomainError("recip_gamma needs a finite real argument")
    x = float(x)
    if x > 0.5:
        return 0.0 if x >= _GAMMA_MAX else 1.0 / _gamma_pos(x)
    if x == math.floor(x):
        return 0.0
    s = sinpi(x)
    if 1.0 - x < _GAMMA_MAX:
        return s * _gamma_pos(1.0 - x) / math.pi
    sign, lg = recip_gamma_log(x)
    if lg > 709.78:
        return math.copysign(math.inf, sign)
    return sign * math.exp(lg)


def digamma(x: float) -> float:
    """Digamma function ``psi(x)`` for real ``x > 0``.

    Upward recurrence to ``x >= 10`` followed by the asymptotic series.
    """
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"digamma is implemented for x > 0, got {x!r}")
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    xi2 = 1.0 / (x * x)
    p = xi2
    tail = 0.0
    for c in _DIGAMMA:
        tail += c * p
        p *= xi2
    return acc + math.log(x) - 0.5 / x - tail


def pochhammer(a: float, j: int) -> float:
    """Rising factorial ``(a)_j = a (a+1) ... (a+j-1)``, with ``(a)_0 = 1``."""
    if j < 0:
        raise DomainError("pochhammer needs j >= 0")
    out = 1.0
    for i in range(j):
        out *= a + i
    return out


# ----------------------------------------------------------------------------
# extended precision (mpmath backed)

def extended_context(digits: int) -> mpmath.ctx_mp.MPContext:
    """Fresh, private mpmath context with ``digits`` decimal digits.

    A private context keeps concurrent evaluations from sharing the global
    precision setting.
    """
    ctx = mpmath.MPContext()
    ctx.dps = int(digits)
    return ctx


def log_gamma_ext(z, ctx):
    """``log Gamma(z)`` in the precision of ``ctx``."""
    z = ctx.mpmathify(z)
    if ctx.im(z) == 0 and ctx.re(z) <= 0 and ctx.re(z) == ctx.floor(ctx.re(z)):
        raise PoleError(f"Gamma has a pole at {z}")
    return ctx.loggamma(z)


def recip_gamma_ext(x, ctx):
    """``1/Gamma(x)`` in the precision of ``ctx`` (exact zero at poles)."""
    return ctx.rgamma(ctx.mpmathify(x))


def pochhammer_ext(a, j: int, ctx):
    """``(a)_j`` in the precision of ``ctx``."""
    if j < 0:
        raise DomainError("pochhammer needs j >= 0")
    return ctx.rf(ctx.mpmathify(a), j)
