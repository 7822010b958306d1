"""Exponential integral ``E1(x)`` by continued fraction.

Used as an oracle for identities of the form ``Ein_{1,1}(x) = log x + gamma + E1(x)``;
it shares no code with the power-series routines.
"""
from __future__ import annotations

from .errors import ConvergenceError, DomainError
from .gamma import extended_context

__all__ = ["e1_continued_fraction"]


def e1_continued_fraction(x: float, digits: int = 50, max_iter: int = 100000):
    """``E1(x)`` for real ``x > 0`` in extended precision.

    Evaluates ``E1(x) = exp(-x) / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))`` with
    the modified Lentz algorithm.

    Parameters
    ----------
    x : float
        Positive argument.  Convergence is fast for ``x >= 1`` and slows
        down as ``x`` approaches 0.
    digits : int
        Decimal digits of working precision.
    max_iter : int
        Iteration budget.

    Returns
    -------
    mpmath.mpf
    """
    if not x > 0:
        raise DomainError(f"e1_continued_fraction needs x > 0, got {x!r}")
    ctx = extended_context(digits + 10)
    x = ctx.mpf(x)
    tiny = ctx.mpf(10) ** (-(digits + 40))
    eps = ctx.mpf(10) ** (-(digits + 5))
    b = x + 1
    c = 1 / tiny
    d = 1 / b
    h = d
    for i in range(1, max_iter):
        an = -ctx.mpf(i) * i
        b += 2
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1 / d
        delta = c * d
        h *= delta
        if abs(delta - 1) < eps:
            return h * ctx.exp(-x)
    raise ConvergenceError("E1 continued fraction did not converge")
