"""Acceptance criteria, one test per criterion.

Each check returns ``(passed, detail)``; a summary line per criterion is
printed at the end of the pytest run (see ``conftest.py``) and when this file
is executed as a script.
"""
from __future__ import annotations

import cmath
import math
import random
import time

import pytest

from mlein.asymptotic import (
    cin_asymptotic,
    ein_asymptotic,
    optimal_truncate,
    sin_asymptotic,
    stokes_corrected_ein1,
)
from mlein.expint import e1_continued_fraction
from mlein.gamma import digamma, extended_context, recip_gamma, sinpi
from mlein.harness import PUBLISHED_STOKES_T2, evaluate, evaluate_cell, identity_suite, table_cells
from mlein.series import ExpansionParams, mittag_leffler, oracle_eval

# pinned tolerances
IDENTITY_RUNTIME_S = 5.0
TABLE_RUNTIME_S = 60.0
FACTOR = 3.0
TINY_PUBLISHED = 1e-15
TINY_BOUND = 5e-15
SHIFTS = (0, -1, 1)
CONTINUITY_TOL = 1e-4
STOKES_TOL = 1e-12
DERIVATIVE_TOL = 1e-6
REFLECTION_TOL = 1e-10
REALNESS_TOL = 1e-13
N_RANDOM_SEQUENCES = 1000

RESULTS: dict[int, tuple[bool, str]] = {}


def _record(n: int, passed: bool, detail: str) -> None:
    RESULTS[n] = (passed, detail)


def _cell_ok(err: float, published: float) -> bool:
    if not math.isfinite(err):
        return False
    if published < TINY_PUBLISHED:
        return err <= TINY_BOUND
    return published / FACTOR <= err <= published * FACTOR


def _table_check(table_id: str) -> tuple[bool, str, float]:
    t0 = time.perf_counter()
    bad = []
    cells = table_cells(table_id)
    for cell in cells:
        errs = []
        for s in SHIFTS:
            r = evaluate_cell(cell, shift=s)
            errs.append(r.abs_rel_error if r.abs_rel_error is not None else math.nan)
            if _cell_ok(errs[-1], cell.published):
                break
        else:
            bad.append(f"{cell.label}: published {cell.published:.3e}, got {errs[0]:.3e}")
    dt = time.perf_counter() - t0
    ok = not bad and dt < TABLE_RUNTIME_S
    detail = f"{len(cells) - len(bad)}/{len(cells)} cells within tolerance, {dt:.1f} s"
    if bad:
        detail += "; outside: " + " | ".join(bad)
    return ok, detail, dt


def check_1_identities():
    t0 = time.perf_counter()
    res = identity_suite()
    dt = time.perf_counter() - t0
    ok = all(p for _, p, _ in res) and dt < IDENTITY_RUNTIME_S
    return ok, "; ".join(f"{n}: {d}" for n, _, d in res) + f"; {dt:.2f} s"


def check_2_table1():
    ok, detail, _ = _table_check("T1")
    return ok, detail


def check_3_table2():
    ok, detail, _ = _table_check("T2")
    p = ExpansionParams(1.0, 1.0 / 3.0)
    z = cmath.rect(20.0, math.pi / 4)
    err = evaluate("ein", p, z, "both", stokes=True).abs_rel_error
    stokes_ok = PUBLISHED_STOKES_T2 / FACTOR <= err <= PUBLISHED_STOKES_T2 * FACTOR
    return ok and stokes_ok, detail + f"; stokes cell {err:.3e} vs {PUBLISHED_STOKES_T2:.3e}"


def check_4_table3():
    ok, detail, _ = _table_check("T3")
    return ok, detail


def check_5_log_continuity():
    base = ein_asymptotic(ExpansionParams(0.5, 1.0), 20.0).value
    worst = 0.0
    for eps in (-1e-6, 1e-6):
        v = ein_asymptotic(ExpansionParams(0.5 + eps, 1.0), 20.0).value
        worst = max(worst, abs(v - base) / abs(base))
    return worst <= CONTINUITY_TOL, f"max rel diff {worst:.2e}"


def check_6_stokes():
    x = 10.0
    ctx = extended_context(60)
    # beta = 1: log x + gamma + exp(-x)/x sum (-1)^j j!/x^j, same number of terms
    r1 = stokes_corrected_ein1(1.0, x)
    j = r1.trunc_indices[1]
    s = sum(ctx.mpf((-1) ** k) * ctx.factorial(k) / ctx.mpf(x) ** k for k in range(j))
    ref1 = ctx.log(x) + ctx.euler + ctx.exp(-x) / x * s
    e1 = float(abs(ctx.mpf(r1.value.real) - ref1) / ref1)
    # beta = 2: log x - psi(2) + 1/x + E1(x) - exp(-x)/x with E1 from the continued fraction
    r2 = stokes_corrected_ein1(2.0, x)
    ref2 = ctx.log(x) - ctx.digamma(2) + 1 / ctx.mpf(x) + ctx.mpf(e1_continued_fraction(x)) - ctx.exp(-x) / x
    e2 = float(abs(ctx.mpf(r2.value.real) - ref2) / ref2)
    ok = e1 <= STOKES_TOL and e2 <= STOKES_TOL
    return ok, f"beta=1 vs truncated identity {e1:.2e}; beta=2 vs exact closed form {e2:.2e}"


def check_7_properties():
    notes = []
    ok = True
    # derivative: d/dx Ein_{a,b}(x) = (1/Gamma(b) - E_{a,b}(-x^a)) / x^a
    worst = 0.0
    for a in (0.5, 1.0, 1.5):
        for b in (0.5, 1.0, 4 / 3):
            for x in (0.7, 2.0, 4.0):
                p = ExpansionParams(a, b)
                h = x * 1e-7
                fd = (oracle_eval("ein", p, x + h) - oracle_eval("ein", p, x - h)).real / (2 * h)
                integrand = (recip_gamma(b) - mittag_leffler(a, b, -(x ** a)).value.real) / x ** a
                worst = max(worst, abs(float(fd) - integrand) / abs(integrand))
    ok &= worst <= DERIVATIVE_TOL
    notes.append(f"derivative {worst:.1e}")
    # conjugate symmetry of series and asymptotics
    sym = True
    for a, b in ((0.4, 1 / 3), (1.0, 1.0), (1.5, 1 / 3), (2.0, 4 / 3)):
        p = ExpansionParams(a, b)
        for th in (0.3, 1.2, 2.9):
            z = cmath.rect(20.0, th)
            sym &= ein_asymptotic(p, z.conjugate()).value == ein_asymptotic(p, z).value.conjugate()
            zs = cmath.rect(4.0, th)
            v = oracle_eval("ein", p, zs)
            w = oracle_eval("ein", p, zs.conjugate())
            sym &= abs(v.conjugate() - w) <= 1e-40 * abs(v)
    p = ExpansionParams(0.25, 4 / 3)
    z = cmath.rect(20.0, 0.8)
    sym &= sin_asymptotic(p, z.conjugate()).value == sin_asymptotic(p, z).value.conjugate()
    sym &= cin_asymptotic(p, z.conjugate()).value == cin_asymptotic(p, z).value.conjugate()
    ok &= sym
    notes.append(f"conjugate symmetry {'ok' if sym else 'broken'}")
    # optimal truncation against brute force on random valleys
    rng = random.Random(20240601)
    mismatches = 0
    for _ in range(N_RANDOM_SEQUENCES):
        n = rng.randint(1, 40)
        k = rng.randrange(n)
        seq = [0.0] * n
        seq[k] = rng.uniform(1e-6, 1.0)
        for i in range(k - 1, -1, -1):
            seq[i] = seq[i + 1] * (1.0 + rng.uniform(0.01, 5.0))
        for i in range(k + 1, n):
            seq[i] = seq[i - 1] * (1.0 + rng.uniform(0.01, 5.0))
        if optimal_truncate(seq) != min(range(n), key=seq.__getitem__):
            mismatches += 1
    ok &= mismatches == 0
    notes.append(f"optimal_truncate {N_RANDOM_SEQUENCES - mismatches}/{N_RANDOM_SEQUENCES}")
    # exact zeros of 1/Gamma
    zeros = all(recip_gamma(float(-n)) == 0.0 for n in range(0, 171))
    ok &= zeros
    notes.append(f"recip_gamma zeros {'exact' if zeros else 'inexact'}")
    # reflection Gamma(x) Gamma(1-x) = pi / sin(pi x)
    worst = 0.0
    for i in range(1, 400):
        x = -50.0 + i * 0.2501
        s = sinpi(x)
        if abs(s) < 1e-8:
            continue
        lhs = 1.0 / (recip_gamma(x) * recip_gamma(1.0 - x))
        worst = max(worst, abs(lhs - math.pi / s) / abs(math.pi / s))
    ok &= worst <= REFLECTION_TOL
    notes.append(f"reflection {worst:.1e}")
    # digamma sanity keeps the log branch honest
    ok &= abs(digamma(1.0) + 0.5772156649015329) < 1e-15
    return ok, "; ".join(notes)


def check_8_alpha2_realness():
    worst = 0.0
    for b in (1.0, 4 / 3):
        for x in (5.0, 10.0, 30.0):
            v = ein_asymptotic(ExpansionParams(2.0, b), x).value
            worst = max(worst, abs(v.imag) / abs(v))
    return worst <= REALNESS_TOL, f"max |Im|/|value| {worst:.1e}"


CHECKS = {
    1: ("identity suite", check_1_identities),
    2: ("Table 1 reproduction", check_2_table1),
    3: ("Table 2 reproduction and Stokes cell", check_3_table2),
    4: ("Table 3 reproduction", check_4_table3),
    5: ("log-branch continuity", check_5_log_continuity),
    6: ("Stokes-corrected alpha=1 form", check_6_stokes),
    7: ("property suite", check_7_properties),
    8: ("alpha=2 realness", check_8_alpha2_realness),
}


@pytest.mark.parametrize("n", sorted(CHECKS))
def test_criterion(n):
    name, fn = CHECKS[n]
    passed, detail = fn()
    _record(n, passed, f"{name}: {detail}")
    assert passed, detail


def summary_lines() -> list[str]:
    return [f"criterion {n}: {'PASS' if p else 'FAIL'}  {d}" for n, (p, d) in sorted(RESULTS.items())]


if __name__ == "__main__":
    for n in sorted(CHECKS):
        name, fn = CHECKS[n]
        passed, detail = fn()
        _record(n, passed, f"{name}: {detail}")
        print(summary_lines()[-1])
