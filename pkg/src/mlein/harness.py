"""Table reproduction, curve data and point evaluation with diagnostics."""
from __future__ import annotations

import cmath
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, Literal

from .asymptotic import (
    cin_asymptotic,
    ein_asymptotic,
    leading_asymptotic,
    sin_asymptotic,
)
from .errors import DomainError, MleinError
from .expint import e1_continued_fraction
from .gamma import extended_context
from .series import ExpansionParams, as_complex, oracle_eval, precision_digits

__all__ = [
    "EvalReport",
    "Cell",
    "TABLE_IDS",
    "PUBLISHED_VALUES",
    "parse_real",
    "evaluate",
    "table_cells",
    "evaluate_cell",
    "evaluate_table",
    "format_table",
    "write_table_csv",
    "curve_points",
    "write_curve_csv",
    "identity_suite",
]

Method = Literal["series", "asym", "both"]
TABLE_IDS = ("T1", "T2", "T3")

# Published relative errors, keyed by (block, row value) with columns in alpha order.
T1_ALPHAS = (0.25, 0.40, 0.50, 0.75, 1.00, 1.20, 1.40, 1.60, 1.80, 2.00)
T2_ALPHAS = (0.4, 0.5, 1.0, 1.5, 2.0)
T3_ALPHAS = ("1/4", "1/3", "1/2", "2/3", "1")
T2_THETAS = ("0", "1/4", "1/2", "3/4", "1")  # multiples of pi

PUBLISHED_VALUES: dict[str, dict[str, tuple[float, ...]]] = {
    "T1": {
        "5": (1.602e-4, 1.678e-5, 2.012e-4, 2.115e-4, 5.249e-4, 1.121e-3, 1.301e-4, 5.279e-3, 1.407e-2, 1.550e-3),
        "10": (5.733e-7, 1.735e-7, 4.413e-7, 2.339e-7, 1.442e-6, 4.345e-6, 3.168e-5, 2.103e-4, 1.536e-4, 2.849e-6),
        "20": (3.680e-11, 3.031e-11, 6.526e-12, 9.362e-12, 2.753e-11, 2.147e-10, 2.277e-8, 1.671e-6, 4.751e-5, 4.926e-10),
        "30": (1.808e-16, 9.384e-16, 1.543e-16, 1.337e-16, 7.595e-16, 4.388e-14, 2.363e-11, 2.125e-8, 6.216e-6, 1.613e-14),
    },
    "T2": {
        "0": (2.400e-8, 5.494e-10, 2.702e-10, 1.572e-6, 5.119e-10),
        "1/4": (2.553e-8, 1.820e-9, 1.142e-7, 1.202e-8, 8.204e-8),
        "1/2": (3.026e-8, 4.057e-9, 1.756e-10, 2.021e-8, 3.684e-7),
        "3/4": (3.897e-8, 8.028e-9, 1.423e-9, 2.320e-7, 8.204e-8),
        "1": (5.398e-8, 1.617e-8, 6.457e-9, 3.005e-3, 5.119e-10),
    },
    "T3-sin": {
        "10": (4.396e-7, 1.394e-8, 1.785e-6, 3.410e-6, 1.012e-5),
        "20": (3.213e-11, 1.171e-13, 3.920e-11, 2.076e-8, 3.094e-11),
        "25": (2.373e-13, 3.792e-14, 2.098e-13, 4.437e-10, 3.270e-12),
        "30": (1.879e-15, 5.065e-15, 1.172e-15, 8.197e-12, 8.010e-15),
    },
    "T3-cin": {
        "10": (9.237e-8, 3.787e-7, 6.608e-7, 2.270e-5, 7.756e-6),
        "20": (1.293e-12, 4.473e-12, 1.090e-11, 2.462e-10, 2.576e-10),
        "25": (8.066e-14, 2.334e-16, 5.326e-14, 6.881e-11, 1.437e-12),
        "30": (1.160e-16, 9.285e-17, 2.764e-16, 2.934e-12, 7.716e-15),
    },
}
# Stokes-inclusive value quoted for Table 2 at alpha = 1, theta = pi/4
PUBLISHED_STOKES_T2 = 6.935e-11


def parse_real(text: str) -> float:
    """Parse a decimal or a rational such as ``"4/3"``."""
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse {text!r} as a real number") from exc


@dataclass
class EvalReport:
    """Result of one evaluation.

    Complex values are stored as Python ``complex``; ``None`` marks a value
    that was not requested.  ``abs_rel_error`` is ``|asym - series| / |series|``
    when both are present.
    """

    series_value: complex | None
    asym_value: complex | None
    abs_rel_error: float | None
    branch: str | None
    trunc_indices: list[int] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        def cv(v):
            return None if v is None else {"re": v.real, "im": v.imag}

        d = asdict(self)
        d["series_value"] = cv(self.series_value)
        d["asym_value"] = cv(self.asym_value)
        return d


_ASYM = {"ein": ein_asymptotic, "sin": sin_asymptotic, "cin": cin_asymptotic}


def evaluate(function_id: str, p: ExpansionParams, z, method: Method = "both",
             stokes: bool = False, shift: int = 0, digits: int | None = None) -> EvalReport:
    """Evaluate Ein, Sin or Cin by series (oracle), asymptotics, or both."""
    if function_id not in _ASYM:
        raise DomainError(f"unknown function {function_id!r}; choose ein, sin or cin")
    if method not in ("series", "asym", "both"):
        raise DomainError(f"unknown method {method!r}")
    z = as_complex(z)
    series_mp = None
    series = None
    asym = None
    branch = None
    idx: list[int] = []
    warnings: list[str] = []
    if method in ("series", "both"):
        series_mp = oracle_eval(function_id, p, z, digits)
        series = complex(series_mp)
    if method in ("asym", "both"):
        if function_id == "ein":
            res = ein_asymptotic(p, z, stokes=stokes, shift=shift)
        else:
            if stokes:
                warnings.append("--stokes only affects Ein; ignored")
            res = _ASYM[function_id](p, z, shift=shift)
        asym = res.value
        branch = res.branch
        idx = list(res.trunc_indices)
        warnings.extend(res.warnings)
    err = None
    if series_mp is not None and asym is not None:
        mag = abs(series_mp)
        if mag > 0:
            ctx = series_mp.context
            err = float(abs(ctx.mpc(asym.real, asym.imag) - series_mp) / mag)
    return EvalReport(series, asym, err, branch, idx, warnings)


# ----------------------------------------------------------------------------
# tables

@dataclass(frozen=True)
class Cell:
    """One table entry: where to evaluate and what the publication reports."""

    table: str
    function: str
    alpha: float
    beta: float
    z: complex
    x_or_theta: float
    published: float
    label: str


def table_cells(table_id: str) -> list[Cell]:
    """All cells of a table, row by row."""
    cells = []
    if table_id == "T1":
        for row, vals in PUBLISHED_VALUES["T1"].items():
            x = float(row)
            for a, ref in zip(T1_ALPHAS, vals):
                cells.append(Cell("T1", "ein", a, 1.0, complex(x), x, ref, f"x={row} alpha={a}"))
    elif table_id == "T2":
        for row, vals in PUBLISHED_VALUES["T2"].items():
            th = float(Fraction(row)) * math.pi
            z = as_complex(cmath.rect(20.0, th)) if row not in ("0", "1") else complex(20.0 if row == "0" else -20.0)
            for a, ref in zip(T2_ALPHAS, vals):
                cells.append(Cell("T2", "ein", a, 1.0 / 3.0, z, th, ref, f"theta={row}pi alpha={a}"))
    elif table_id == "T3":
        for fn in ("sin", "cin"):
            for row, vals in PUBLISHED_VALUES[f"T3-{fn}"].items():
                x = float(row)
                for a, ref in zip(T3_ALPHAS, vals):
                    cells.append(Cell("T3", fn, parse_real(a), 4.0 / 3.0, complex(x), x, ref,
                                      f"{fn} x={row} alpha={a}"))
    else:
        raise DomainError(f"unknown table {table_id!r}; choose T1, T2 or T3")
    return cells


def evaluate_cell(cell: Cell, stokes: bool = False, shift: int = 0,
                  digits: int | None = None) -> EvalReport:
    """Evaluate one cell; failures become a NaN error with a warning."""
    try:
        return evaluate(cell.function, ExpansionParams(cell.alpha, cell.beta), cell.z,
                        "both", stokes=stokes, shift=shift, digits=digits)
    except MleinError as exc:
        return EvalReport(None, None, math.nan, None, [], [f"{type(exc).__name__}: {exc}"])


def _cell_job(args):
    cell, stokes, shift, digits = args
    return evaluate_cell(cell, stokes, shift, digits)


def evaluate_table(table_id: str, stokes: bool = False, shift: int = 0, jobs: int = 1,
                   digits: int | None = None) -> list[tuple[Cell, EvalReport]]:
    """Evaluate a whole table, optionally in ``jobs`` worker processes.

    Results come back in grid order regardless of ``jobs``.
    """
    cells = table_cells(table_id)
    digits = precision_digits(digits)
    work = [(c, stokes, shift, digits) for c in cells]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_cell_job, work))
    else:
        reports = [_cell_job(w) for w in work]
    return list(zip(cells, reports))


def _sci4(v: float | None) -> str:
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return "nan"
    return f"{v:.3e}"


def format_table(rows: list[tuple[Cell, EvalReport]]) -> str:
    """Human-readable grid: computed error, published error, and branch."""
    out = []
    width = max(len(c.label) for c, _ in rows)
    out.append(f"{'cell':<{width}}  {'rel_err':>10}  {'published':>10}  branch")
    for c, r in rows:
        out.append(f"{c.label:<{width}}  {_sci4(r.abs_rel_error):>10}  {_sci4(c.published):>10}  {r.branch or '-'}")
        for w in r.warnings:
            out.append(f"{'':<{width}}  warning: {w}")
    return "\n".join(out) + "\n"


def _g17(v: float) -> str:
    return "nan" if math.isnan(v) else f"{v:.16e}"


def write_table_csv(rows: Iterable[tuple[Cell, EvalReport]], path: str) -> None:
    """CSV with columns ``alpha,beta,x_or_theta,rel_err,branch``."""
    lines = ["alpha,beta,x_or_theta,rel_err,branch"]
    for c, r in rows:
        err = math.nan if r.abs_rel_error is None else r.abs_rel_error
        lines.append(",".join([_g17(c.alpha), _g17(c.beta), _g17(c.x_or_theta), _g17(err),
                               r.branch or ""]))
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


# ----------------------------------------------------------------------------
# curves

def curve_points(function_id: str, alpha: float, beta: float, x_min: float, x_max: float,
                 step: float, source: str = "series", digits: int | None = None) -> list[tuple[float, float]]:
    """Sample a real curve on ``x_min, x_min + step, ..., x_max``.

    ``source="series"`` uses the extended precision series, limited to
    ``0 <= x <= 50``; ``source="asym-leading"`` uses the leading algebraic
    terms and needs ``x > 1``.
    """
    if function_id not in _ASYM:
        raise DomainError(f"unknown function {function_id!r}")
    if not (step > 0 and x_max >= x_min):
        raise DomainError("need step > 0 and x_max >= x_min")
    p = ExpansionParams(alpha, beta)
    n = int(round((x_max - x_min) / step))
    xs = [x_min + i * step for i in range(n + 1)]
    if source == "series":
        if x_min < 0 or x_max > 50:
            raise DomainError("series curves are limited to 0 <= x <= 50")
        return [(x, float(oracle_eval(function_id, p, x, digits).real)) for x in xs]
    if source == "asym-leading":
        if x_min <= 1:
            raise DomainError("asym-leading curves need x > 1")
        return [(x, leading_asymptotic(function_id, p, x)) for x in xs]
    raise DomainError(f"unknown source {source!r}")


def curve_filename(function_id: str, alpha: float, source: str) -> str:
    """File name used for one (function, alpha, source) curve."""
    return f"{function_id}_alpha{alpha:.6g}_{source}.csv"


def write_curve_csv(points: list[tuple[float, float]], path: str) -> None:
    """CSV with columns ``x,value`` in fixed 17-digit scientific notation."""
    lines = ["x,value"] + [f"{_g17(x)},{_g17(v)}" for x, v in points]
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


# ----------------------------------------------------------------------------
# identity suite

def identity_suite(digits: int | None = None) -> list[tuple[str, bool, str]]:
    """Exact identities checked against independent routes.

    Returns ``(name, passed, detail)`` triples.
    """
    out = []
    dps = precision_digits(digits)
    ctx = extended_context(dps + 10)
    worst = 0.0
    for x in (1.0, 2.0, 5.0, 10.0, 20.0):
        lhs = ctx.mpf(oracle_eval("ein", ExpansionParams(1.0, 1.0), x, digits).real)
        rhs = ctx.log(x) + ctx.euler + ctx.mpf(e1_continued_fraction(x, dps))
        worst = max(worst, float(abs(lhs - rhs) / abs(rhs)))
    out.append(("Ein_{1,1}(x) = log x + gamma + E1(x)", worst <= 1e-12, f"max rel diff {worst:.2e}"))
    worst = 0.0
    for a in (0.25, 0.5, 0.75):
        for b in (0.5, 1.0, 4.0 / 3.0):
            for x in (1.0, 5.0, 10.0):
                s = oracle_eval("sin", ExpansionParams(a, b), x, digits)
                e = oracle_eval("ein", ExpansionParams(2.0 * a, b - a), x, digits)
                worst = max(worst, float(abs(s - e) / abs(e)))
    out.append(("Sin_{a,b}(x) = Ein_{2a,b-a}(x)", worst <= 1e-13, f"max rel diff {worst:.2e}"))
    worst = 0.0
    for b in (1.0, 4.0 / 3.0, 0.5):
        for x in (1.0, 5.0, 10.0):
            p = ExpansionParams(2.0, b)
            pos = oracle_eval("ein", p, x, digits)
            neg = oracle_eval("ein", p, -x, digits)
            worst = max(worst, float(abs(pos + neg) / abs(pos)))
    out.append(("Ein_{2,b}(-x) = -Ein_{2,b}(x)", worst <= 1e-13, f"max rel diff {worst:.2e}"))
    return out
