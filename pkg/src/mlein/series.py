"""Convergent power series for the Mittag-Leffler family.

All three integrals share the template

    value = z**p * sum_n (-1)**n z**(s n) / ((s n + d) Gamma(s n + c))

with ``(p, s, d, c)`` equal to ``(1, alpha, 1, alpha+beta)`` for Ein,
``(1, 2 alpha, 1, alpha+beta)`` for Sin and
``(1+alpha, 2 alpha, 1+alpha, 2 alpha+beta)`` for Cin.  The double precision
routines suffer the usual cancellation for large ``|z|``; ``oracle_eval``
repeats the computation in extended precision and is the reference used by
the test harness.
"""
from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass
from typing import Literal

from .errors import ConvergenceError, DomainError, PrecisionError
from .gamma import extended_context, recip_gamma, recip_gamma_log
from .gamma import log_gamma as _log_gamma


def _lgamma(x: float) -> float:
    return _log_gamma(x).real

__all__ = [
    "ExpansionParams",
    "TruncatedSum",
    "as_complex",
    "precision_digits",
    "mittag_leffler",
    "ein_series",
    "sin_series",
    "cin_series",
    "f_series",
    "oracle_eval",
]

FunctionId = Literal["ein", "sin", "cin", "f"]

MAX_TERMS = 10**6
POLE_SNAP = 1e-12
DEFAULT_DIGITS = 50
ORACLE_CORRECT_DIGITS = 25


@dataclass(frozen=True)
class ExpansionParams:
    """Parameters ``(alpha, beta, gamma)`` of an expansion.

    ``gamma`` defaults to 1, the value used by Ein and Sin.
    """

    alpha: float
    beta: float
    gamma: float = 1.0

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v!r}")
        if self.alpha <= 0:
            raise DomainError(f"alpha must be positive, got {self.alpha!r}")
        if self.gamma <= 0:
            raise DomainError(f"gamma must be positive, got {self.gamma!r}")


@dataclass(frozen=True)
class TruncatedSum:
    """A finite partial sum together with its truncation diagnostics.

    Attributes
    ----------
    value : complex
        The partial sum.
    terms_used : int
        Number of terms that entered the sum.
    omitted_magnitude : float
        Magnitude of the first term left out (0 if none was left out).
    """

    value: complex
    terms_used: int
    omitted_magnitude: float


def as_complex(z) -> complex:
    """Validate and normalise a complex argument.

    Finite values only.  A signed zero imaginary part is cleared, so points
    on the negative real axis get ``arg z = pi``.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"argument must be finite, got {z!r}")
    if z.imag == 0.0:
        z = complex(z.real, 0.0)
    return z


def precision_digits(override: int | None = None) -> int:
    """Working precision: explicit override, else ``MLEIN_PRECISION_DIGITS``, else 50."""
    if override is not None:
        digits = int(override)
    else:
        raw = os.environ.get("MLEIN_PRECISION_DIGITS", "").strip()
        try:
            digits = int(raw) if raw else DEFAULT_DIGITS
        except ValueError as exc:
            raise DomainError(f"MLEIN_PRECISION_DIGITS must be an integer, got {raw!r}") from exc
    if digits < DEFAULT_DIGITS:
        raise DomainError(f"working precision must be at least {DEFAULT_DIGITS} digits")
    return digits


def _series_layout(function_id: str, p: ExpansionParams):
    """Return ``(p, s, d, c, alternating)`` for the family template."""
    a, b, g = p.alpha, p.beta, p.gamma
    if function_id == "ein":
        return 1.0, a, 1.0, a + b, True
    if function_id == "sin":
        return 1.0, 2.0 * a, 1.0, a + b, True
    if function_id == "cin":
        return 1.0 + a, 2.0 * a, 1.0 + a, 2.0 * a + b, True
    if function_id == "f":
        return 0.0, None, g, a + b, False
    raise DomainError(f"unknown function id {function_id!r}")


def _rgamma_snapped(x: float) -> tuple[int, float]:
    n = round(x)
    if n <= 0 and abs(x - n) < POLE_SNAP:
        return 0, -math.inf
    return recip_gamma_log(x)


def _double_sum(log_step: complex, g_step: float, g_off: float, d_step: float,
                d_off: float, alternating: bool, rel_tol: float) -> TruncatedSum:
    """Sum ``sign**n exp(n log_step) / ((d_step n + d_off) Gamma(g_step n + g_off))``."""
    total = 0j
    small = 0
    # gamma arguments are positive from here on, so no more accidental zeros
    n_safe = 0 if g_off > 0.5 else math.ceil((0.5 - g_off) / g_step) + 1
    n = 0
    while n < MAX_TERMS:
        sign, lr = _rgamma_snapped(g_step * n + g_off)
        den = d_step * n + d_off
        if sign == 0 or den == 0.0:
            term = 0j
        else:
            e = n * log_step + lr
            if e.real > 709.0:
                raise ConvergenceError("series terms overflow in double precision")
            term = (sign / den) * cmath.exp(e)
            if alternating and n % 2:
                term = -term
        total += term
        n += 1
        if n > n_safe and abs(term) <= rel_tol * abs(total):
            small += 1
            if small == 3:
                break
        else:
            small = 0
    else:
        raise ConvergenceError(f"series did not converge within {MAX_TERMS} terms")
    sign, lr = _rgamma_snapped(g_step * n + g_off)
    nxt = 0.0 if sign == 0 else math.exp((n * log_step).real + lr) / abs(d_step * n + d_off)
    return TruncatedSum(total, n, nxt)


def _family_series(function_id: str, p: ExpansionParams, z, rel_tol: float) -> TruncatedSum:
    z = as_complex(z)
    pexp, s, d, c, alt = _series_layout(function_id, p)
    if z == 0:
        return TruncatedSum(0j, 1, 0.0)
    lz = cmath.log(z)
    inner = _double_sum(s * lz, s, c, s, d, alt, rel_tol)
    scale = cmath.exp(pexp * lz)
    return TruncatedSum(scale * inner.value, inner.terms_used, abs(scale) * inner.omitted_magnitude)


def mittag_leffler(alpha: float, beta: float, z, rel_tol: float = 1e-16) -> TruncatedSum:
    """Two-parameter Mittag-Leffler function ``sum z**n / Gamma(alpha n + beta)``."""
    ExpansionParams(alpha, beta)
    z = as_complex(z)
    if z == 0:
        return TruncatedSum(complex(recip_gamma(beta)), 1, 0.0)
    return _double_sum(cmath.log(z), alpha, beta, 0.0, 1.0, False, rel_tol)


def ein_series(p: ExpansionParams, z, rel_tol: float = 1e-16) -> TruncatedSum:
    """Ein_{alpha,beta}(z) by its power series in double precision."""
    return _family_series("ein", p, z, rel_tol)


def sin_series(p: ExpansionParams, z, rel_tol: float = 1e-16) -> TruncatedSum:
    """Sin_{alpha,beta}(z) by its power series in double precision."""
    return _family_series("sin", p, z, rel_tol)


def cin_series(p: ExpansionParams, z, rel_tol: float = 1e-16) -> TruncatedSum:
    """Cin_{alpha,beta}(z) by its power series in double precision."""
    return _family_series("cin", p, z, rel_tol)


def f_series(p: ExpansionParams, chi, rel_tol: float = 1e-16) -> TruncatedSum:
    """``F(chi) = sum chi**n / ((alpha n + gamma) Gamma(alpha n + alpha + beta))``."""
    chi = as_complex(chi)
    if chi == 0:
        return TruncatedSum(complex(recip_gamma(p.alpha + p.beta) / p.gamma), 1, 0.0)
    return _double_sum(cmath.log(chi), p.alpha, p.alpha + p.beta, p.alpha, p.gamma, False, rel_tol)


# ----------------------------------------------------------------------------
# extended precision oracle

def _pairwise(ctx, terms, lo: int, hi: int):
    if hi - lo <= 8:
        acc = ctx.mpc(0)
        for t in terms[lo:hi]:
            acc += t
        return acc
    mid = (lo + hi) // 2
    return _pairwise(ctx, terms, lo, mid) + _pairwise(ctx, terms, mid, hi)


def _log10_peak(step_re: float, g_step: float, c: float, d_step: float, d: float) -> float:
    """Estimate ``log10`` of the largest term magnitude, in double precision."""
    peak = -math.inf
    n = 0
    while n < MAX_TERMS:
        x = g_step * n + c
        if x > 0.5:
            lm = n * step_re - _lgamma(x) - math.log(abs(d_step * n + d) or 1.0)
            peak = max(peak, lm)
            if lm < peak - 120.0 and n * step_re < _lgamma(x):
                break
        n += 1
    return peak / math.log(10.0)


def oracle_eval(function_id: FunctionId, p: ExpansionParams, z, digits: int | None = None):
    """Reference value of Ein, Sin, Cin or F in extended precision.

    Parameters
    ----------
    function_id : {"ein", "sin", "cin", "f"}
        Which function to evaluate.  For ``"f"`` the argument is ``chi``.
    p : ExpansionParams
        The binary (double) parameters are used exactly.
    z : complex
        Argument.
    digits : int, optional
        Working precision in decimal digits.  Defaults to
        ``MLEIN_PRECISION_DIGITS`` or 50.

    Returns
    -------
    mpmath.mpc
        The value, accurate to at least 25 significant digits.

    Raises
    ------
    PrecisionError
        If cancellation leaves fewer than 25 digits, or the forward and
        pairwise summation orders disagree at that level.
    ConvergenceError
        If the series needs more than ``10**6`` terms.
    """
    dps = precision_digits(digits)
    z = as_complex(z)
    _, s_f, d_f, c_f, alt = _series_layout(function_id, p)
    if z != 0:
        lz_f = cmath.log(z)
        g_step_f = p.alpha if function_id == "f" else s_f
        step_re = lz_f.real if function_id == "f" else s_f * lz_f.real
        guard = max(0, math.ceil(_log10_peak(step_re, g_step_f, c_f, g_step_f, d_f)))
    else:
        guard = 0
    if guard > 10000:
        raise PrecisionError(f"estimated cancellation of {guard} digits is beyond the oracle budget")
    work = dps + 10 + guard
    ctx = extended_context(work)
    a = ctx.mpf(p.alpha)
    b = ctx.mpf(p.beta)
    g = ctx.mpf(p.gamma)
    if function_id == "f":
        pexp, s, d, c = ctx.zero, ctx.one, g, a + b
        g_step, d_step = a, a
    elif function_id == "ein":
        pexp, s, d, c = ctx.one, a, ctx.one, a + b
        g_step, d_step = s, s
    elif function_id == "sin":
        pexp, s, d, c = ctx.one, 2 * a, ctx.one, a + b
        g_step, d_step = s, s
    else:
        pexp, s, d, c = 1 + a, 2 * a, 1 + a, 2 * a + b
        g_step, d_step = s, s
    if z == 0:
        if function_id == "f":
            return ctx.mpc(ctx.rgamma(c) / d)
        return ctx.mpc(0)
    zm = ctx.mpc(z.real, z.imag)
    lz = ctx.log(zm)
    step = s * lz
    eps = ctx.mpf(10) ** (-(work - 5))
    terms = []
    total = ctx.mpc(0)
    biggest = ctx.zero
    small = 0
    n_safe = 0 if c > 0.5 else int(ctx.ceil((0.5 - c) / g_step)) + 1
    n = 0
    while True:
        if n >= MAX_TERMS:
            raise ConvergenceError(f"oracle series did not converge within {MAX_TERMS} terms")
        r = ctx.rgamma(g_step * n + c)
        if r == 0:
            t = ctx.mpc(0)
        else:
            t = ctx.exp(n * step) * r / (d_step * n + d)
            if alt and n % 2:
                t = -t
        terms.append(t)
        total += t
        at = abs(t)
        if at > biggest:
            biggest = at
        n += 1
        if n > n_safe and at <= eps * abs(total):
            small += 1
            if small == 3:
                break
        else:
            small = 0
    pair = _pairwise(ctx, terms, 0, len(terms))
    mag = abs(total)
    if mag == 0:
        raise PrecisionError("series sums to zero; relative accuracy undefined")
    lost = float(ctx.log10(biggest / mag)) if biggest > mag else 0.0
    if work - lost < dps:
        raise PrecisionError(
            f"cancellation of {lost:.1f} digits exceeds the {work}-digit budget"
        )
    if abs(pair - total) > ctx.mpf(10) ** (-ORACLE_CORRECT_DIGITS - 2) * mag:
        raise PrecisionError("forward and pairwise summation disagree")
    out = ctx.exp(pexp * lz) * total
    return out
