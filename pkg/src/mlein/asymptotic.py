"""Large-argument asymptotic expansions of Ein, Sin, Cin and F.

Everything is expressed through two building blocks acting on
``F(chi) = sum chi**n / ((alpha n + gamma) Gamma(alpha n + alpha + beta))``:

* the algebraic expansion ``H(u)``, a constant (or logarithmic) term plus
  inverse powers ``u**(-k-1)`` with coefficients
  ``(-1)**k / ((gamma - alpha (k+1)) Gamma(beta - alpha k))``;
* the exponential expansion ``E(chi)``, ``(1/alpha) X**(-alpha-beta)
  exp(X) sum_j (alpha+beta-gamma)_j X**(-j)`` with ``X = chi**(1/alpha)``.

Ein, Sin and Cin are ``z**p F(-z**a)`` for suitable ``(a, b, gamma, p)``.  The
wrappers work with ``log z`` directly so that every power ``z**q`` is
``exp(q log z)`` with the principal ``log z``; this keeps the logarithmic
term consistent in the degenerate case ``gamma/alpha = m``.

Both sums are truncated near their least term, see :func:`optimal_truncate`.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Literal, Sequence

from .errors import (
    DegenerateParameterError,
    DomainError,
    ExponentOverflowError,
    SectorError,
    UnsupportedRegimeError,
)
from .gamma import digamma, pochhammer, recip_gamma, recip_gamma_log
from .series import ExpansionParams, TruncatedSum, as_complex

__all__ = [
    "Regime",
    "SectorClass",
    "LogCaseTag",
    "WrightConstants",
    "AsymptoticResult",
    "classify_sector",
    "log_case_tag",
    "optimal_truncate",
    "algebraic_H",
    "exponential_E",
    "ein_asymptotic",
    "stokes_corrected_ein1",
    "sin_asymptotic",
    "cin_asymptotic",
    "f_chi_asymptotic",
    "ein2_cosine_form",
    "leading_asymptotic",
]

Regime = Literal["algebraic_only", "algebraic_plus_exponential", "alpha2", "sub_two_thirds"]
Branch = Literal["algebraic", "algebraic+exponential", "log-case", "alpha2", "stokes-corrected"]

H_MAX_TERMS = 200
E_MAX_TERMS = 100
LOG_CASE_TOL = 1e-10
NEAR_LOG_TOL = 1e-6
LOG_CASE_MAX_M = 200
ARG_TOL = 1e-12
POLE_SNAP = 1e-12
EXP_LIMIT = 700.0
MIN_MODULUS = 3.0


@dataclass(frozen=True)
class SectorClass:
    """Position of ``arg z`` relative to ``theta0 = pi (2 - alpha) / (2 alpha)``."""

    theta0: float
    regime: Regime


@dataclass(frozen=True)
class LogCaseTag:
    """Whether an expansion falls on the logarithmic branch, and its ``m``."""

    is_log_case: bool
    m: int | None = None


@dataclass(frozen=True)
class WrightConstants:
    """Wright-function constants of ``F`` for one ``(alpha, beta, gamma)``.

    ``E(chi) = a0 * X**theta_upper * exp(X) * sum_j c_j X**-j`` with
    ``X = (h kappa**kappa chi)**(1/kappa) = chi**(1/alpha)`` and
    ``c_j = (coeff_base)_j``.
    """

    kappa: float
    h: float
    theta_upper: float
    theta_prime: float
    a0: float
    coeff_base: float

    @classmethod
    def from_params(cls, p: ExpansionParams) -> "WrightConstants":
        a, b, g = p.alpha, p.beta, p.gamma
        theta = -a - b
        return cls(kappa=a, h=a ** (-a), theta_upper=theta, theta_prime=1.0 - theta,
                   a0=1.0 / a, coeff_base=a + b - g)

    def c(self, j: int) -> float:
        """Coefficient ``c_j = (alpha + beta - gamma)_j``."""
        return pochhammer(self.coeff_base, j)


@dataclass
class AsymptoticResult:
    """Asymptotic value with diagnostics.

    Attributes
    ----------
    value : complex
        The asymptotic approximation.
    branch : str
        One of ``algebraic``, ``algebraic+exponential``, ``log-case``,
        ``alpha2`` and ``stokes-corrected``.
    trunc_indices : list of int
        Truncation index of each sum, algebraic first.  The index is the
        position of the first omitted term in the full term sequence.
    omitted : list of float
        Magnitude of the first omitted term of each sum (0 if none).
    warnings : list of str
        Conditioning and truncation notes.
    log_case : bool
        True when the algebraic part used the logarithmic branch.
    """

    value: complex
    branch: Branch
    trunc_indices: list[int] = field(default_factory=list)
    omitted: list[float] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    log_case: bool = False

    def conjugate(self) -> "AsymptoticResult":
        return AsymptoticResult(self.value.conjugate(), self.branch, list(self.trunc_indices),
                                list(self.omitted), list(self.warnings), self.log_case)

    def negate(self) -> "AsymptoticResult":
        return AsymptoticResult(-self.value, self.branch, list(self.trunc_indices),
                                list(self.omitted), list(self.warnings), self.log_case)


# ----------------------------------------------------------------------------
# helpers

def _theta0(alpha: float) -> float:
    return math.pi * (2.0 - alpha) / (2.0 * alpha)


def classify_sector(alpha: float, arg_z: float) -> SectorClass:
    """Classify ``arg z`` (in ``[0, pi]``) for the Ein expansion with ``alpha``.

    The boundary ``arg z = theta0`` counts as inside the exponential sector.
    """
    if not 0 < alpha <= 2 + ARG_TOL:
        raise UnsupportedRegimeError(f"alpha must lie in (0, 2], got {alpha!r}")
    th0 = _theta0(alpha)
    if abs(alpha - 2.0) <= ARG_TOL:
        return SectorClass(0.0, "alpha2")
    if alpha < 2.0 / 3.0:
        return SectorClass(th0, "sub_two_thirds")
    if arg_z >= th0 - ARG_TOL:
        return SectorClass(th0, "algebraic_plus_exponential")
    return SectorClass(th0, "algebraic_only")


def _log_case_targets(function_id: str, m: int) -> float:
    if function_id == "ein":
        return 1.0 / m
    if function_id == "sin":
        return 1.0 / (2 * m)
    if function_id == "cin":
        return 1.0 / (2 * m - 1)
    raise DomainError(f"unknown function id {function_id!r}")


def log_case_tag(function_id: str, alpha: float, tol: float = LOG_CASE_TOL) -> LogCaseTag:
    """Detect the logarithmic case ``alpha = 1/m`` (Ein), ``1/(2m)`` (Sin), ``1/(2m-1)`` (Cin)."""
    best = _nearest_log_case(function_id, alpha)
    if best is not None and best[1] < tol:
        return LogCaseTag(True, best[0])
    return LogCaseTag(False, None)


def _nearest_log_case(function_id: str, alpha: float):
    inv = {"ein": 1.0 / alpha, "sin": 1.0 / (2 * alpha), "cin": (1.0 / alpha + 1.0) / 2.0}[function_id]
    m = round(inv)
    if m < 1 or m > LOG_CASE_MAX_M:
        return None
    return m, abs(alpha - _log_case_targets(function_id, m))


def _near_log_warning(function_id: str, alpha: float, tag: LogCaseTag) -> list[str]:
    if tag.is_log_case:
        return []
    best = _nearest_log_case(function_id, alpha)
    if best is not None and best[1] < NEAR_LOG_TOL:
        return [
            f"alpha is within {best[1]:.1e} of the logarithmic case m={best[0]}; "
            "the regular branch is ill-conditioned here"
        ]
    return []


def _digamma_any(x: float) -> float:
    """Digamma on the whole real line minus the poles, via reflection for ``x < 1/2``."""
    if x > 0.5:
        return digamma(x)
    if x == math.floor(x):
        raise DomainError(f"digamma has a pole at {x!r}")
    return digamma(1.0 - x) - math.pi / math.tan(math.pi * x)


def _rgamma_log_snapped(x: float) -> tuple[int, float]:
    n = round(x)
    if n <= 0 and abs(x - n) < POLE_SNAP:
        return 0, -math.inf
    return recip_gamma_log(x)


def _least_index(logmags: Sequence[float]) -> int | None:
    """Index of the least term, or ``None`` when every term vanishes.

    Zero terms (``-inf``) are skipped.  After any initial growth, the chosen
    term is the first whose magnitude is strictly below that of the next two
    non-zero terms.  If no such term exists the last non-zero term is returned.
    """
    nz = [i for i, v in enumerate(logmags) if v != -math.inf]
    if not nz:
        return None
    start = 0
    while start + 1 < len(nz) and logmags[nz[start + 1]] >= logmags[nz[start]]:
        start += 1
    if start + 1 == len(nz):
        # pure growth: the first term is the smallest
        start = 0
    for pos in range(start, len(nz)):
        i = nz[pos]
        ahead = nz[pos + 1:pos + 3]
        if all(logmags[i] < logmags[q] for q in ahead):
            return i
    return nz[-1]


def optimal_truncate(magnitudes: Sequence[float]) -> int:
    """Index of the least term of an asymptotic series.

    Parameters
    ----------
    magnitudes : sequence of float
        Non-negative term magnitudes.  Zeros mark absent terms and are
        ignored.

    Returns
    -------
    int
        Index of the least term.  The sum is taken over the terms strictly
        before it.  For a sequence that decreases and then increases this is
        the position of the minimum; a single out-of-pattern term is not
        mistaken for the minimum.
    """
    if len(magnitudes) == 0:
        raise DomainError("optimal_truncate needs at least one term")
    logs = []
    for m in magnitudes:
        if m < 0 or math.isnan(m):
            raise DomainError("magnitudes must be non-negative numbers")
        logs.append(math.log(m) if m > 0 else -math.inf)
    idx = _least_index(logs)
    return 0 if idx is None else idx


def _cut(logmags: list[float], shift: int) -> tuple[int, int]:
    """Number of leading terms to keep, and index of the first omitted term.

    The least term itself is left out unless it is the last non-zero term,
    in which case the whole list is summed.  ``shift`` moves the cut by that
    many non-zero terms.
    """
    nz = [i for i, v in enumerate(logmags) if v != -math.inf]
    if not nz:
        return len(logmags), len(logmags)
    least = _least_index(logmags)
    pos = nz.index(least)
    keep = len(nz) if pos == len(nz) - 1 else pos
    keep = min(max(keep + shift, 0), len(nz))
    if keep == len(nz):
        return len(logmags), len(logmags)
    return nz[keep], nz[keep]


# ----------------------------------------------------------------------------
# engines

def _algebraic_engine(alpha: float, beta: float, gamma: float, L: complex, P: complex,
                      m: int | None, max_terms: int, shift: int) -> tuple[TruncatedSum, int]:
    """``exp(P) * H(u)`` with ``log u = L``, and the index of the first omitted term.

    ``m`` selects the logarithmic branch (``gamma/alpha = m``).
    """
    base = alpha + beta - gamma
    if m is None:
        s = math.sin(gamma * math.pi / alpha)
        if abs(s) < 1e-12:
            raise DegenerateParameterError(
                "sin(gamma pi / alpha) vanishes but the regular branch was requested"
            )
        const = (math.pi / alpha) / s * recip_gamma(base) * cmath.exp(P - (gamma / alpha) * L)
    else:
        sign = -1.0 if (m - 1) % 2 else 1.0
        scale = cmath.exp(P - m * L)
        r = recip_gamma(base)
        if r == 0.0:
            # the limit of psi(x) / Gamma(x) at x = -n is (-1)**(n+1) n!
            n = -round(base)
            const = sign * scale * ((-1.0) ** n) * math.factorial(n)
        else:
            const = sign * scale * r * ((m / gamma) * L - _digamma_any(base))
    logmags: list[float] = []
    for k in range(max_terms):
        if m is not None and k == m - 1:
            logmags.append(-math.inf)
            continue
        sgn, lr = _rgamma_log_snapped(beta - alpha * k)
        den = gamma - alpha * (k + 1)
        if sgn == 0 or den == 0.0:
            logmags.append(-math.inf)
            continue
        logmags.append((P - (k + 1) * L).real + lr - math.log(abs(den)))
    stop, first_omitted = _cut(logmags, shift)
    total = const
    used = 1
    for k in range(stop):
        if logmags[k] == -math.inf:
            continue
        sgn, lr = _rgamma_log_snapped(beta - alpha * k)
        den = gamma - alpha * (k + 1)
        term = (sgn / den) * cmath.exp(P - (k + 1) * L + lr)
        total += -term if k % 2 else term
        used += 1
    omitted = math.exp(logmags[first_omitted]) if first_omitted < len(logmags) else 0.0
    return TruncatedSum(total, used, omitted), first_omitted


def _exponential_engine(alpha: float, beta: float, gamma: float, log_x: complex, P: complex,
                        max_terms: int, shift: int) -> tuple[TruncatedSum, int]:
    """``exp(P) * E`` with ``log X = log_x``, ``X = chi**(1/alpha)``, and the first omitted index."""
    xval = cmath.exp(log_x)
    if xval.real + P.real > EXP_LIMIT:
        raise ExponentOverflowError(
            f"exponential factor exp({xval.real + P.real:.1f}) exceeds double range"
        )
    wc = WrightConstants.from_params(ExpansionParams(alpha, beta, gamma))
    base = wc.coeff_base
    coeffs = []
    logmags: list[float] = []
    c = 1.0
    for j in range(max_terms):
        coeffs.append(c)
        logmags.append(math.log(abs(c)) - j * log_x.real if c != 0.0 else -math.inf)
        c *= base + j
    stop, first_omitted = _cut(logmags, shift)
    acc = 0j
    used = 0
    for j in range(stop):
        if coeffs[j] == 0.0:
            continue
        acc += coeffs[j] * cmath.exp(-j * log_x)
        used += 1
    pref = cmath.exp(P + wc.theta_upper * log_x + xval) * wc.a0
    omitted = abs(pref) * math.exp(logmags[first_omitted]) if first_omitted < len(logmags) else 0.0
    return TruncatedSum(pref * acc, used, omitted), first_omitted


def _family(a: float, b: float, g: float, lz: complex, m: int | None,
            exp_logs: Sequence[complex], shift: int) -> tuple[complex, list[int], list[float]]:
    """``z**g F(-z**a)`` from ``H`` plus the requested exponential sums."""
    h, k = _algebraic_engine(a, b, g, a * lz, g * lz, m, H_MAX_TERMS, shift)
    value = h.value
    idx = [k]
    om = [h.omitted_magnitude]
    for lx in exp_logs:
        e, j = _exponential_engine(a, b, g, lx, g * lz, E_MAX_TERMS, shift)
        value += e.value
        idx.append(j)
        om.append(e.omitted_magnitude)
    return value, idx, om


def _check_modulus(z: complex) -> None:
    if abs(z) < MIN_MODULUS:
        raise DomainError(f"asymptotic expansions need |z| >= {MIN_MODULUS}, got {abs(z):.3g}")


# ----------------------------------------------------------------------------
# public operations

def algebraic_H(p: ExpansionParams, z, max_terms: int = H_MAX_TERMS, shift: int = 0,
                m: int | None = None) -> TruncatedSum:
    """Algebraic expansion of ``z**gamma F(-z**alpha)``.

    For Ein (``gamma = 1``) this is ``H_{alpha,beta}(z)``.  The logarithmic
    branch is used when ``gamma/alpha`` is an integer ``m`` within 1e-10, or
    when ``m`` is given explicitly.
    """
    z = as_complex(z)
    if abs(z) <= 1.0:
        raise DomainError("the algebraic expansion needs |z| > 1")
    if m is None:
        ratio = p.gamma / p.alpha
        mm = round(ratio)
        if 1 <= mm <= LOG_CASE_MAX_M and abs(p.alpha - p.gamma / mm) < LOG_CASE_TOL:
            m = mm
    lz = cmath.log(z)
    return _algebraic_engine(p.alpha, p.beta, p.gamma, p.alpha * lz, p.gamma * lz, m,
                             max_terms, shift)[0]


def exponential_E(p: ExpansionParams, z, max_terms: int = E_MAX_TERMS, shift: int = 0,
                  sign: int = -1) -> TruncatedSum:
    """Exponential expansion ``E_{alpha,beta}`` at ``X = exp(sign i pi / alpha) z``.

    The result excludes the ``z**gamma`` prefactor.  ``sign = -1`` gives the
    sum present for ``theta0 <= arg z``; ``sign = +1`` is the companion used
    when ``alpha = 2``.
    """
    z = as_complex(z)
    lz = cmath.log(z)
    log_x = lz + sign * 1j * math.pi / p.alpha
    return _exponential_engine(p.alpha, p.beta, p.gamma, log_x, 0j, max_terms, shift)[0]


def _result(value, idx, om, warnings, log_case, has_exp, alpha2=False, stokes=False) -> AsymptoticResult:
    if stokes:
        branch = "stokes-corrected"
    elif alpha2:
        branch = "alpha2"
    elif has_exp:
        branch = "algebraic+exponential"
    elif log_case:
        branch = "log-case"
    else:
        branch = "algebraic"
    return AsymptoticResult(complex(value), branch, idx, om, warnings, log_case)


def ein_asymptotic(p: ExpansionParams, z, stokes: bool = False, shift: int = 0) -> AsymptoticResult:
    """Asymptotic approximation of ``Ein_{alpha,beta}(z)`` for large ``|z|``.

    Parameters
    ----------
    p : ExpansionParams
        ``0 < alpha <= 2``; ``gamma`` is ignored (Ein has ``gamma = 1``).
    z : complex
        ``|z| >= 3``.  Negative ``arg z`` is handled by conjugate symmetry and
        ``alpha = 2`` with ``arg z > pi/2`` by oddness.
    stokes : bool
        Also keep the exponentially small ``z E(z)`` contribution once ``arg z``
        has passed the Stokes line ``pi (1 - alpha)``.  On that line itself
        (``alpha = 1``, real ``z``) the half-weight form of
        :func:`stokes_corrected_ein1` is used.
    shift : int
        Move every truncation point by this many terms (diagnostic use).
    """
    z = as_complex(z)
    _check_modulus(z)
    a, b = p.alpha, p.beta
    if a > 2.0 + ARG_TOL:
        raise UnsupportedRegimeError("expansions are implemented for 0 < alpha <= 2")
    if z.imag < 0:
        return ein_asymptotic(p, z.conjugate(), stokes, shift).conjugate()
    alpha2 = abs(a - 2.0) <= ARG_TOL
    theta = cmath.phase(z)
    if alpha2 and theta > math.pi / 2 + ARG_TOL:
        return ein_asymptotic(p, as_complex(-z), stokes, shift).negate()
    if stokes and abs(a - 1.0) <= ARG_TOL and theta == 0.0:
        return stokes_corrected_ein1(b, z.real, shift)
    tag = log_case_tag("ein", a)
    warnings = _near_log_warning("ein", a, tag)
    lz = cmath.log(z)
    sec = classify_sector(a, theta)
    exp_logs = []
    used_stokes = False
    if alpha2:
        exp_logs = [lz - 1j * math.pi / 2, lz + 1j * math.pi / 2]
    elif sec.regime == "algebraic_plus_exponential":
        exp_logs = [lz - 1j * math.pi / a]
    elif stokes and theta > math.pi * (1.0 - a) - ARG_TOL:
        exp_logs = [lz - 1j * math.pi / a]
        used_stokes = True
    value, idx, om = _family(a, b, 1.0, lz, tag.m, exp_logs, shift)
    return _result(value, idx, om, warnings, tag.is_log_case, bool(exp_logs),
                   alpha2=alpha2, stokes=used_stokes)


def _trig_sum(base: float, phase0: float, x: float, fn, shift: int) -> tuple[float, int, float]:
    """``sum (base)_j x**-j fn(x - pi (phase0 + j) / 2)`` truncated at the least term."""
    coeffs = []
    logmags = []
    c = 1.0
    for j in range(E_MAX_TERMS):
        coeffs.append(c)
        logmags.append(math.log(abs(c)) - j * math.log(x) if c != 0.0 else -math.inf)
        c *= base + j
    stop, first = _cut(logmags, shift)
    acc = 0.0
    for j in range(stop):
        if coeffs[j] != 0.0:
            acc += coeffs[j] * x ** (-j) * fn(x - 0.5 * math.pi * (phase0 + j))
    omitted = math.exp(logmags[first]) if first < len(logmags) else 0.0
    return acc, first, omitted


def stokes_corrected_ein1(beta: float, x: float, shift: int = 0) -> AsymptoticResult:
    """``Ein_{1,beta}(x)`` on the Stokes line, with the half-weight exponential term.

    Returns ``H_{1,beta}(x) - cos(pi beta) x**-beta exp(-x) sum_j (-1)**j (beta)_j x**-j``.
    """
    x = float(x)
    if not math.isfinite(x) or x < MIN_MODULUS:
        raise DomainError(f"stokes_corrected_ein1 needs real x >= {MIN_MODULUS}")
    lz = complex(math.log(x))
    h, h_idx = _algebraic_engine(1.0, beta, 1.0, lz, lz, 1, H_MAX_TERMS, shift)
    coeffs = []
    logmags = []
    c = 1.0
    for j in range(E_MAX_TERMS):
        coeffs.append(c)
        logmags.append(math.log(abs(c)) - j * math.log(x) if c != 0.0 else -math.inf)
        c *= beta + j
    stop, first = _cut(logmags, shift)
    acc = 0.0
    for j in range(stop):
        if coeffs[j] != 0.0:
            acc += (-1) ** j * coeffs[j] * x ** (-j)
    pref = -math.cos(math.pi * beta) * math.exp(-x) * x ** (-beta)
    om = abs(pref) * math.exp(logmags[first]) if first < len(logmags) else 0.0
    return AsymptoticResult(h.value + pref * acc, "stokes-corrected", [h_idx, first],
                            [h.omitted_magnitude, om], [], True)


def _sector_check(alpha: float, z: complex, name: str) -> None:
    theta = abs(cmath.phase(z))
    if abs(alpha - 1.0) <= ARG_TOL:
        if z.imag != 0.0 or z.real <= 0:
            raise SectorError(f"{name} with alpha = 1 is available for real x > 0 only")
        return
    if alpha > 1.0:
        raise UnsupportedRegimeError(f"{name} expansions are implemented for 0 < alpha <= 1")
    limit = math.pi * (1.0 - alpha) / (2.0 * alpha)
    if theta >= limit:
        raise SectorError(f"{name} expansion needs |arg z| < {limit:.6g}, got {theta:.6g}")


def sin_asymptotic(p: ExpansionParams, z, shift: int = 0) -> AsymptoticResult:
    """Asymptotic approximation of ``Sin_{alpha,beta}(z)``.

    For ``0 < alpha < 1`` only the algebraic expansion of
    ``Ein_{2 alpha, beta - alpha}`` contributes inside
    ``|arg z| < pi (1 - alpha) / (2 alpha)``.  For ``alpha = 1`` and real
    ``x`` an oscillatory sine series is added.
    """
    z = as_complex(z)
    _check_modulus(z)
    a, b = p.alpha, p.beta
    _sector_check(a, z, "Sin")
    if z.imag < 0:
        return sin_asymptotic(p, z.conjugate(), shift).conjugate()
    tag = log_case_tag("sin", a)
    warnings = _near_log_warning("sin", a, tag)
    lz = cmath.log(z)
    if abs(a - 1.0) <= ARG_TOL:
        x = z.real
        h, hk = _algebraic_engine(2.0, b - 1.0, 1.0, 2.0 * lz, lz, None, H_MAX_TERMS, shift)
        osc, j, om = _trig_sum(b, b, x, math.sin, shift)
        value = h.value + x ** (-b) * osc
        return _result(value, [hk, j], [h.omitted_magnitude, x ** (-b) * om], warnings,
                       False, True, alpha2=True)
    value, idx, om = _family(2.0 * a, b - a, 1.0, lz, tag.m, [], shift)
    return _result(value, idx, om, warnings, tag.is_log_case, False)


def cin_asymptotic(p: ExpansionParams, z, shift: int = 0) -> AsymptoticResult:
    """Asymptotic approximation of ``Cin_{alpha,beta}(z)``.

    Uses the algebraic expansion with ``(2 alpha, beta, 1 + alpha)``; the
    logarithmic branch applies when ``alpha = 1/(2m - 1)``.  For ``alpha = 1``
    and real ``x`` an oscillatory cosine series is added.
    """
    z = as_complex(z)
    _check_modulus(z)
    a, b = p.alpha, p.beta
    _sector_check(a, z, "Cin")
    if z.imag < 0:
        return cin_asymptotic(p, z.conjugate(), shift).conjugate()
    tag = log_case_tag("cin", a)
    warnings = _near_log_warning("cin", a, tag)
    lz = cmath.log(z)
    if abs(a - 1.0) <= ARG_TOL:
        x = z.real
        h, hk = _algebraic_engine(2.0, b, 2.0, 2.0 * lz, 2.0 * lz, 1, H_MAX_TERMS, shift)
        osc, j, om = _trig_sum(b, b, x, math.cos, shift)
        value = h.value - x ** (-b) * osc
        return _result(value, [hk, j], [h.omitted_magnitude, x ** (-b) * om], warnings,
                       True, True, alpha2=True)
    value, idx, om = _family(2.0 * a, b, 1.0 + a, lz, tag.m, [], shift)
    return _result(value, idx, om, warnings, tag.is_log_case, False)


def ein2_cosine_form(beta: float, x: float, shift: int = 0) -> AsymptoticResult:
    """Real-variable form of ``Ein_{2,beta}(x)``: ``H`` plus a cosine series.

    ``H - x**(-1-beta) sum_j (1+beta)_j x**-j cos(x - pi (beta + j) / 2)``.
    Mathematically identical to the complex pair used by
    :func:`ein_asymptotic`; kept as an independent cross-check.
    """
    x = float(x)
    if not math.isfinite(x) or x < MIN_MODULUS:
        raise DomainError(f"ein2_cosine_form needs real x >= {MIN_MODULUS}")
    lz = complex(math.log(x))
    h, hk = _algebraic_engine(2.0, beta, 1.0, 2.0 * lz, lz, None, H_MAX_TERMS, shift)
    osc, j, om = _trig_sum(1.0 + beta, beta, x, math.cos, shift)
    scale = x ** (-1.0 - beta)
    return _result(h.value - scale * osc, [hk, j], [h.omitted_magnitude, scale * om], [],
                   False, True, alpha2=True)


def f_chi_asymptotic(p: ExpansionParams, chi, shift: int = 0) -> AsymptoticResult:
    """Asymptotic approximation of ``F(chi)`` for large ``|chi|``.

    The upper sign (``chi exp(-i pi)`` in ``H``) is used for ``arg chi >= 0``
    and the lower sign otherwise.  ``E(chi)`` is added when
    ``|arg chi| <= pi alpha / 2``; for ``alpha = 2`` both ``E(chi)`` and
    ``E(chi exp(-+ 2 pi i))`` are added.
    """
    chi = as_complex(chi)
    a, b, g = p.alpha, p.beta, p.gamma
    if a > 2.0 + ARG_TOL:
        raise UnsupportedRegimeError("expansions are implemented for 0 < alpha <= 2")
    if abs(chi) <= 1.0:
        raise DomainError("f_chi_asymptotic needs |chi| > 1")
    lc = cmath.log(chi)
    theta = lc.imag
    s = 1.0 if theta >= 0 else -1.0
    L = lc - s * 1j * math.pi
    ratio = g / a
    mm = round(ratio)
    m = mm if 1 <= mm <= LOG_CASE_MAX_M and abs(a - g / mm) < LOG_CASE_TOL else None
    warnings = []
    if m is None and 1 <= mm <= LOG_CASE_MAX_M and abs(a - g / mm) < NEAR_LOG_TOL:
        warnings.append("gamma/alpha is close to an integer; the regular branch is ill-conditioned")
    h, k = _algebraic_engine(a, b, g, L, 0j, m, H_MAX_TERMS, shift)
    value = h.value
    om = [h.omitted_magnitude]
    idx = [k]
    exp_logs = []
    alpha2 = abs(a - 2.0) <= ARG_TOL
    if alpha2:
        exp_logs = [lc / a, (lc - s * 2j * math.pi) / a]
    elif abs(theta) <= math.pi * a / 2 + ARG_TOL:
        exp_logs = [lc / a]
    for lx in exp_logs:
        e, j = _exponential_engine(a, b, g, lx, 0j, E_MAX_TERMS, shift)
        value += e.value
        idx.append(j)
        om.append(e.omitted_magnitude)
    return _result(value, idx, om, warnings, m is not None, bool(exp_logs), alpha2=alpha2)


def leading_asymptotic(function_id: str, p: ExpansionParams, x: float) -> float:
    """Leading-order algebraic approximation for real ``x > 1``.

    The constant (or logarithmic) term plus the first non-vanishing inverse
    power.  For ``Sin_{1,1}`` this is the constant ``pi/2`` and for
    ``Cin_{1,1}`` it is ``log x + gamma``.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 1.0:
        raise DomainError(f"leading_asymptotic needs real x > 1, got {x!r}")
    a, b = p.alpha, p.beta
    if function_id == "ein":
        fa, fb, fg = a, b, 1.0
    elif function_id == "sin":
        fa, fb, fg = 2.0 * a, b - a, 1.0
    elif function_id == "cin":
        fa, fb, fg = 2.0 * a, b, 1.0 + a
    else:
        raise DomainError(f"unknown function id {function_id!r}")
    tag = log_case_tag(function_id, a)
    lz = complex(math.log(x))
    for n in range(1, H_MAX_TERMS + 1):
        h, _ = _algebraic_engine(fa, fb, fg, fa * lz, fg * lz, tag.m, n, H_MAX_TERMS)
        if h.terms_used >= 2:
            break
    return h.value.real
