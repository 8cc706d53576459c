"""Command-line front end.

Subcommands: ``bounds`` (closed-form bound table), ``search`` (grid
extrema vs closed forms), ``witness`` (extremal series and attainment),
``verify`` (full report: closed form vs search vs witness), ``sweep``
(one bound tabulated over a parameter range) and ``series``
(coefficients of a generated map and its inverse).

Report-shaped output uses one fixed CSV schema::

    class,param1,param2,bound,branch,closed_form,searched,witness,gap,pass

with floats printed to 12 significant digits; JSON mirrors the same
fields.  Exit codes: 0 on success, 1 if any verification row failed,
2 on usage errors (including out-of-range parameters).
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .bounds import theorem_bounds
from .caratheodory import generator_series, p1, p2, p3, p4, pq, pt
from .classes import (
    Cgamma,
    ClassParams,
    F0,
    Gnu,
    build_function,
    class_label,
    param_values,
    witness,
)
from .search import (
    DEFAULT_REFINE_ROUNDS,
    GridSpec,
    SEARCH_TOL,
    brute_force_extremum,
    full_verify,
    witness_check,
)
from .series import revert

CSV_HEADER = "class,param1,param2,bound,branch,closed_form,searched,witness,gap,pass"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Validated run-wide settings shared by all subcommands."""

    command: str
    params: ClassParams
    grid: GridSpec
    order: int
    fmt: str
    output: str | None
    seed: int
    refine_rounds: int

    def __post_init__(self):
        if self.order < 3:
            raise UsageError(f"N out of range: expected N >= 3, got {self.order}")


# ----------------------------------------------------------------------
# parsing


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--class", dest="family", required=True, choices=("g", "f0", "c"))
    common.add_argument("--nu", type=str, default=None)
    common.add_argument("--lambda", dest="lam", type=str, default=None)
    common.add_argument("--gamma", type=str, default=None, help="angle in radians")
    common.add_argument("--gamma-deg", type=str, default=None, help="angle in degrees")
    common.add_argument("--alpha", type=str, default=None)
    common.add_argument("-N", "--order", type=int, default=8)
    common.add_argument("--format", dest="fmt", choices=("human", "csv", "json"), default="human")
    common.add_argument("--output", type=str, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--grid-c1", type=int, default=401)
    common.add_argument("--grid-radial", type=int, default=201)
    common.add_argument("--grid-angular", type=int, default=360)
    common.add_argument("--refine-rounds", type=int, default=DEFAULT_REFINE_ROUNDS)

    parser = argparse.ArgumentParser(
        prog="uil",
        description="Sharp successive-coefficient bounds for inverse functions, "
        "with brute-force verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("bounds", parents=[common], help="closed-form bound table")
    ps = sub.add_parser("search", parents=[common], help="grid extrema of a functional")
    ps.add_argument("--n", type=int, choices=(1, 2), default=2)
    pw = sub.add_parser("witness", parents=[common], help="witness series and attainment")
    pw.add_argument("--id", dest="wid", required=True)
    sub.add_parser("verify", parents=[common], help="closed form vs search vs witness")
    psw = sub.add_parser("sweep", parents=[common], help="bound table over a parameter range")
    psw.add_argument(
        "--bound",
        choices=("lower21", "upper21", "lower32", "upper32"),
        default="upper32",
    )
    psw.add_argument("--with-search", action="store_true")
    pse = sub.add_parser("series", parents=[common], help="map and inverse coefficients")
    pse.add_argument(
        "--generator",
        required=True,
        choices=("p1", "p2", "p3", "p4", "pt", "pq", "pq4"),
    )
    return parser


def _scalar(name: str, text: str | None) -> float | None:
    if text is None:
        return None
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"{name} must be a number, got {text!r}") from None


def _gamma_value(ns) -> float | None:
    if ns.gamma is not None and ns.gamma_deg is not None:
        raise UsageError("give either --gamma or --gamma-deg, not both")
    if ns.gamma_deg is not None:
        deg = _scalar("gamma-deg", ns.gamma_deg)
        return math.radians(deg)
    return _scalar("gamma", ns.gamma)


def _make_params(family: str, nu, lam, gamma, alpha) -> ClassParams:
    if family == "g":
        if nu is None:
            raise UsageError("class g needs --nu")
        return Gnu(nu)
    if family == "f0":
        if lam is None:
            raise UsageError("class f0 needs --lambda")
        return F0(lam)
    if gamma is None or alpha is None:
        raise UsageError("class c needs --gamma (or --gamma-deg) and --alpha")
    return Cgamma(gamma, alpha)


def _params_from(ns) -> ClassParams:
    return _make_params(
        ns.family,
        _scalar("nu", ns.nu),
        _scalar("lambda", ns.lam),
        _gamma_value(ns),
        _scalar("alpha", ns.alpha),
    )


def _parse_run(ns) -> RunConfig:
    if ns.command == "sweep":
        # replace the ranged parameter by its first value for the
        # run-level config; rows carry their own parameter points
        name, values = _parse_sweep_range(ns)
        spot = {
            "nu": _scalar("nu", ns.nu) if (ns.nu and ":" not in ns.nu) else None,
            "lambda": _scalar("lambda", ns.lam) if (ns.lam and ":" not in ns.lam) else None,
            "gamma": _gamma_value(ns) if (ns.gamma is None or ":" not in ns.gamma) else None,
            "alpha": _scalar("alpha", ns.alpha) if (ns.alpha and ":" not in ns.alpha) else None,
        }
        spot[name] = float(values[0])
        params = _make_params(ns.family, spot["nu"], spot["lambda"], spot["gamma"], spot["alpha"])
    else:
        params = _params_from(ns)
    return RunConfig(
        command=ns.command,
        params=params,
        grid=GridSpec(ns.grid_c1, ns.grid_radial, ns.grid_angular),
        order=ns.order,
        fmt=ns.fmt,
        output=ns.output,
        seed=ns.seed,
        refine_rounds=ns.refine_rounds,
    )


def _parse_sweep_range(ns) -> tuple[str, np.ndarray]:
    """Find the single ranged parameter 'start:stop:step' of a sweep."""
    ranged = []
    for name, text in (("nu", ns.nu), ("lambda", ns.lam), ("gamma", ns.gamma), ("alpha", ns.alpha)):
        if text is not None and ":" in text:
            ranged.append((name, text))
    if len(ranged) != 1:
        raise UsageError("sweep needs exactly one ranged parameter start:stop:step")
    name, text = ranged[0]
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"bad range {text!r}: expected start:stop:step")
    start, stop, step = (_scalar(name, p) for p in parts)
    if step <= 0 or stop < start:
        raise UsageError(f"bad range {text!r}: need stop >= start and step > 0")
    count = int(round((stop - start) / step)) + 1
    if abs(start + (count - 1) * step - stop) > 1e-9:
        raise UsageError(f"bad range {text!r}: step does not divide the span")
    return name, np.linspace(start, stop, count)


# ----------------------------------------------------------------------
# rendering


def _fnum(x) -> str:
    if x is None:
        return ""
    return f"{float(x):.12g}"


def _fcomplex(c: complex) -> str:
    if abs(c.imag) < 1e-14:
        return f"{c.real:.10g}"
    return f"{c:.10g}"


def _param_cols(params: ClassParams) -> tuple[str, str]:
    vals = param_values(params)
    return _fnum(vals[0]), _fnum(vals[1]) if len(vals) > 1 else ""


def _schema_row(params, bound, branch, closed, searched, wvalue, gap, passed, breakpoint=False):
    p1c, p2c = _param_cols(params)
    return {
        "class": class_label(params),
        "param1": p1c,
        "param2": p2c,
        "bound": bound,
        "branch": branch + ("+breakpoint" if breakpoint else ""),
        "closed_form": closed,
        "searched": searched,
        "witness": wvalue,
        "gap": gap,
        "pass": passed,
    }


def _verification_row(params, row):
    return _schema_row(
        params,
        row.bound,
        row.branch,
        row.closed_form,
        row.searched,
        row.witness_value,
        row.gap,
        row.passed,
        row.breakpoint,
    )


def _rows_to_csv(rows) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                (
                    r["class"],
                    r["param1"],
                    r["param2"],
                    r["bound"],
                    r["branch"],
                    _fnum(r["closed_form"]),
                    _fnum(r["searched"]),
                    _fnum(r["witness"]),
                    _fnum(r["gap"]),
                    "true" if r["pass"] else "false",
                )
            )
        )
    return "\n".join(lines) + "\n"


def _rows_to_json(cfg: RunConfig, rows, extra=None) -> str:
    payload = {
        "command": cfg.command,
        "class": class_label(cfg.params),
        "params": [float(v) for v in param_values(cfg.params)],
        "order": cfg.order,
        "seed": cfg.seed,
        "grid": [cfg.grid.c1, cfg.grid.radial, cfg.grid.angular],
        "rows": rows,
    }
    if extra:
        payload.update(extra)
    return json.dumps(payload, indent=2) + "\n"


def _rows_to_human(rows) -> str:
    out = []
    for r in rows:
        passfail = "pass" if r["pass"] else "FAIL"
        branch = f" [{r['branch']}]" if r["branch"] else ""
        bits = [f"{r['bound']:<8} closed={_fnum(r['closed_form'])}"]
        if r["searched"] is not None:
            bits.append(f"searched={_fnum(r['searched'])}")
        if r["witness"] is not None:
            bits.append(f"witness={_fnum(r['witness'])}")
        if r["gap"] is not None:
            bits.append(f"gap={_fnum(r['gap'])}")
        out.append("  " + "  ".join(bits) + f"{branch}  {passfail}")
    return "\n".join(out)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _header(cfg: RunConfig) -> str:
    names = {"g": ("nu",), "f0": ("lambda",), "c": ("gamma", "alpha")}[
        class_label(cfg.params)
    ]
    shown = ", ".join(
        f"{n}={_fnum(v)}" for n, v in zip(names, param_values(cfg.params))
    )
    return f"class {class_label(cfg.params)} ({shown})"


# ----------------------------------------------------------------------
# commands


def _witness_value(params, wid, order, n):
    _, finv = witness(params, wid, order)
    a2, a3 = finv[2], finv[3]
    return (abs(a2) - 1.0) if n == 1 else (abs(a3) - abs(a2))


def _cmd_bounds(cfg: RunConfig) -> tuple[list[dict], str, int]:
    report = theorem_bounds(cfg.params)
    rows = []
    human = [_header(cfg)]
    for name, closed, case, breakpoint, wids in report.bound_items():
        n = 1 if name.endswith("21") else 2
        wvalue = _witness_value(cfg.params, wids[0], cfg.order, n)
        gap = abs(wvalue - closed)
        rows.append(
            _schema_row(
                cfg.params, name, case, closed, None, wvalue, gap, gap <= 1e-9, breakpoint
            )
        )
        human.append(
            f"  {name:<8}= {_fnum(closed):<18} witnesses: {','.join(wids)}"
            + (f"  [{case}{'+breakpoint' if breakpoint else ''}]" if case else "")
        )
    return rows, "\n".join(human) + "\n", 0


def _cmd_search(cfg: RunConfig, n: int) -> tuple[list[dict], str, int]:
    result = brute_force_extremum(cfg.params, n, cfg.grid, cfg.refine_rounds)
    report = theorem_bounds(cfg.params)
    lo_name, up_name = ("lower21", "upper21") if n == 1 else ("lower32", "upper32")
    pairs = (
        (lo_name, getattr(report, lo_name), result.minimum),
        (up_name, getattr(report, up_name), result.maximum),
    )
    rows = []
    for name, closed, searched in pairs:
        gap = abs(searched - closed)
        case = getattr(report, f"{name}_case", "")
        breakpoint = getattr(report, f"{name}_breakpoint", False)
        exceeded = (
            searched < closed - 1e-9 if name.startswith("lower") else searched > closed + 1e-9
        )
        rows.append(
            _schema_row(
                cfg.params,
                name,
                case,
                closed,
                searched,
                None,
                gap,
                gap <= SEARCH_TOL and not exceeded,
                breakpoint,
            )
        )
    human = [
        _header(cfg) + f"  functional {result.functional}",
        f"  grid {cfg.grid.c1}x{cfg.grid.radial}x{cfg.grid.angular}, "
        f"{cfg.refine_rounds} refinement rounds",
        f"  min = {_fnum(result.minimum)} at c1={_fnum(result.argmin.c1)}, "
        f"zeta={result.argmin.zeta:.6g} (coarse ties {result.min_ties})",
        f"  max = {_fnum(result.maximum)} at c1={_fnum(result.argmax.c1)}, "
        f"zeta={result.argmax.zeta:.6g} (coarse ties {result.max_ties})",
        _rows_to_human(rows),
    ]
    code = 0 if all(r["pass"] for r in rows) else 1
    return rows, "\n".join(human) + "\n", code


def _cmd_witness(cfg: RunConfig, wid: str) -> tuple[list[dict], str, int]:
    f, finv = witness(cfg.params, wid, cfg.order)
    checks = witness_check(cfg.params, wid, cfg.order)
    rows = [_verification_row(cfg.params, row) for row in checks]
    human = [
        _header(cfg) + f"  witness {wid}",
        "  f     : " + ", ".join(_fcomplex(c) for c in f.coeffs[1:]),
        "  f^-1  : " + ", ".join(_fcomplex(c) for c in finv.coeffs[1:]),
        _rows_to_human(rows),
    ]
    code = 0 if all(r["pass"] for r in rows) else 1
    return rows, "\n".join(human) + "\n", code


def _cmd_verify(cfg: RunConfig) -> tuple[list[dict], str, int]:
    report = full_verify(cfg.params, cfg.grid, cfg.order, cfg.seed, cfg.refine_rounds)
    rows = [_verification_row(cfg.params, row) for row in report.rows]
    status = "PASS" if report.passed else "FAIL"
    human = [_header(cfg), _rows_to_human(rows), f"  overall: {status}"]
    return rows, "\n".join(human) + "\n", 0 if report.passed else 1


def _cmd_sweep(cfg: RunConfig, ns) -> tuple[list[dict], str, int]:
    name, values = _parse_sweep_range(ns)
    fixed = {
        "nu": _scalar("nu", ns.nu) if (ns.nu and ":" not in ns.nu) else None,
        "lambda": _scalar("lambda", ns.lam) if (ns.lam and ":" not in ns.lam) else None,
        "gamma": _gamma_value(ns) if (ns.gamma is None or ":" not in ns.gamma) else None,
        "alpha": _scalar("alpha", ns.alpha) if (ns.alpha and ":" not in ns.alpha) else None,
    }
    rows = []
    for value in values:
        spot = dict(fixed)
        spot[name] = float(value)
        params = _make_params(
            ns.family, spot["nu"], spot["lambda"], spot["gamma"], spot["alpha"]
        )
        report = theorem_bounds(params)
        closed = getattr(report, ns.bound)
        case = getattr(report, f"{ns.bound}_case", "")
        breakpoint = getattr(report, f"{ns.bound}_breakpoint", False)
        wids = getattr(report, f"w_{ns.bound}")
        n = 1 if ns.bound.endswith("21") else 2
        wvalue = _witness_value(params, wids[0], cfg.order, n)
        searched = None
        if ns.with_search:
            result = brute_force_extremum(params, n, cfg.grid, cfg.refine_rounds)
            searched = result.minimum if ns.bound.startswith("lower") else result.maximum
        gaps = [abs(wvalue - closed)]
        if searched is not None:
            gaps.append(abs(searched - closed))
        passed = abs(wvalue - closed) <= 1e-9 and (
            searched is None or abs(searched - closed) <= SEARCH_TOL
        )
        rows.append(
            _schema_row(
                params, ns.bound, case, closed, searched, wvalue, max(gaps), passed, breakpoint
            )
        )
    human = [f"sweep over {name}: {len(values)} points, bound {ns.bound}", _rows_to_human(rows)]
    code = 0 if all(r["pass"] for r in rows) else 1
    return rows, "\n".join(human) + "\n", code


_SERIES_GENERATORS = ("p1", "p2", "p3", "p4", "pt", "pq", "pq4")


def _series_generator(name: str, params: ClassParams):
    if name == "p1":
        return p1()
    if name == "p2":
        return p2()
    if name in ("p3", "p4"):
        if not isinstance(params, Gnu):
            raise UsageError(f"generator {name} needs --class g")
        if name == "p3":
            return p3(1.0 / math.sqrt(2.0 * (params.nu + 1.0)))
        return p4(3.0 / (4.0 * params.nu + 4.0))
    if name == "pt":
        if not isinstance(params, F0):
            raise UsageError("generator pt needs --class f0")
        return pt(1.0 / math.sqrt(4.0 * params.lam + 2.0))
    if not isinstance(params, Cgamma):
        raise UsageError(f"generator {name} needs --class c")
    tau = params.tau
    q2 = cmath.exp(1j * cmath.phase(tau)) if tau != 0 else 1.0 + 0.0j
    if name == "pq":
        return pq(1.0 / math.sqrt(abs(tau) + 1.0), q2)
    return pq(1.5 / (abs(tau) + 1.0), q2)


def _cmd_series(cfg: RunConfig, genname: str) -> tuple[None, str, int]:
    gen = _series_generator(genname, cfg.params)
    f = build_function(cfg.params, generator_series(gen, cfg.order + 1))
    finv = revert(f)
    if cfg.fmt == "json":
        payload = {
            "command": "series",
            "class": class_label(cfg.params),
            "params": [float(v) for v in param_values(cfg.params)],
            "generator": genname,
            "order": cfg.order,
            "f": [[c.real, c.imag] for c in f.coeffs],
            "inverse": [[c.real, c.imag] for c in finv.coeffs],
        }
        return None, json.dumps(payload, indent=2) + "\n", 0
    if cfg.fmt == "csv":
        lines = ["k,f_re,f_im,inv_re,inv_im"]
        for k in range(cfg.order + 1):
            lines.append(
                f"{k},{_fnum(f[k].real)},{_fnum(f[k].imag)},"
                f"{_fnum(finv[k].real)},{_fnum(finv[k].imag)}"
            )
        return None, "\n".join(lines) + "\n", 0
    human = [
        _header(cfg) + f"  generator {genname}, order {cfg.order}",
        "  f     : " + ", ".join(_fcomplex(c) for c in f.coeffs[1:]),
        "  f^-1  : " + ", ".join(_fcomplex(c) for c in finv.coeffs[1:]),
    ]
    return None, "\n".join(human) + "\n", 0


# ----------------------------------------------------------------------


def main(argv=None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = _parse_run(ns)
        if ns.command == "bounds":
            rows, human, code = _cmd_bounds(cfg)
        elif ns.command == "search":
            rows, human, code = _cmd_search(cfg, ns.n)
        elif ns.command == "witness":
            rows, human, code = _cmd_witness(cfg, ns.wid)
        elif ns.command == "verify":
            rows, human, code = _cmd_verify(cfg)
        elif ns.command == "sweep":
            rows, human, code = _cmd_sweep(cfg, ns)
        else:
            rows, human, code = _cmd_series(cfg, ns.generator)
    except (UsageError, ValueError) as exc:
        print(f"uil: {exc}", file=sys.stderr)
        return 2

    if rows is None or cfg.fmt == "human":
        _emit(human, cfg.output)
    elif cfg.fmt == "csv":
        _emit(_rows_to_csv(rows), cfg.output)
    else:
        _emit(_rows_to_json(cfg, rows), cfg.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
