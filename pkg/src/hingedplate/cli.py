"""Command-line front end.

Every subcommand writes one table to ``--out`` (stdout by default) as CSV
or JSON.  Field tables use the columns ``x,y,value,tail_bound``; for
``phi`` the ``x`` column holds the load ordinate ``w``.  CSV numbers are
printed with 17 significant digits, JSON keys are sorted and line endings
are always ``\\n``.

Exit status: 0 on success, 2 on invalid input, 3 when a tolerance would
need more modes than ``--mode-cap``, 4 when ``verify`` finds a failed
inequality.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from .core import PlateConfig, Point
from .errors import DomainError, ToleranceUnreachable
from .green import MODE_CAP, GridSpec, green_eval, green_grid
from .loads import BoxLoad, GridLoad, solve_box, solve_grid_load
from .modes import phi_m
from .verify import InequalityId, VerifyGrid, check_all, constants

EXIT_OK, EXIT_DOMAIN, EXIT_TOL, EXIT_VERIFY = 0, 2, 3, 4
FIELD_COLUMNS = ("x", "y", "value", "tail_bound")


@dataclass
class RunConfig:
    """Validated parameters of one CLI invocation."""

    command: str
    plate: PlateConfig
    tol: float = 1e-8
    mode_cap: int = MODE_CAP
    grid: tuple | None = None
    out: str | None = None
    fmt: str = "csv"
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if not (self.tol > 0) or not np.isfinite(self.tol):
            raise DomainError(f"--tol must be positive and finite, got {self.tol}")
        if self.mode_cap < 1:
            raise DomainError(f"--mode-cap must be at least 1, got {self.mode_cap}")
        if self.fmt not in ("csv", "json"):
            raise DomainError(f"unknown format {self.fmt!r}")


def _num(v):
    return format(float(v), ".17g")


def _pair(text):
    try:
        a, b = (float(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two numbers 'a,b', got {text!r}") from None
    return a, b


def _grid(text):
    parts = text.split(",")
    try:
        n = tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or NX,NY, got {text!r}") from None
    if len(n) == 1:
        n = n * 2
    if len(n) != 2:
        raise argparse.ArgumentTypeError(f"expected N or NX,NY, got {text!r}")
    return n


def render(rows, columns, fmt):
    """Serialise a list of dict rows as CSV (fixed columns) or JSON."""
    if fmt == "json":
        return json.dumps(rows, sort_keys=True, indent=1) + "\n"
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(columns)
    for r in rows:
        wr.writerow(["" if r.get(c) is None else
                     (_num(r[c]) if isinstance(r[c], (float, np.floating)) else r[c])
                     for c in columns])
    return buf.getvalue()


def _field_rows(x, y, value, tail):
    """Rows of a ``(ny, nx)`` field, y-major."""
    rows = []
    for j, yj in enumerate(y):
        for i, xi in enumerate(x):
            rows.append({"x": float(xi), "y": float(yj), "value": float(value[j, i]),
                         "tail_bound": float(tail[j, i])})
    return rows


def cmd_phi(rc: RunConfig):
    p, cfg = rc.params, rc.plate
    if rc.grid is not None:
        w = np.linspace(-cfg.ell, cfg.ell, rc.grid[0])
        y = np.linspace(-cfg.ell, cfg.ell, rc.grid[1])
    else:
        if p.get("y") is None or p.get("w") is None:
            raise DomainError("phi needs --y and --w or --grid")
        w, y = np.array([p["w"]]), np.array([p["y"]])
    v = phi_m(p["m"], y[:, None], w[None, :], cfg)
    return _field_rows(w, y, v, np.zeros_like(v)), FIELD_COLUMNS


def cmd_green(rc: RunConfig):
    p, cfg = rc.params, rc.plate
    load = Point(*p["load"])
    if rc.grid is not None:
        f = green_grid(load, GridSpec(*rc.grid), rc.tol, cfg, rc.mode_cap)
        return _field_rows(f.x, f.y, f.value, f.tail_bound), FIELD_COLUMNS
    if p.get("at") is None:
        raise DomainError("green needs --at x,y or --grid")
    r = green_eval(load, Point(*p["at"]), rc.tol, cfg, rc.mode_cap)
    return [{"x": p["at"][0], "y": p["at"][1], "value": r.value,
             "tail_bound": r.tail_bound}], FIELD_COLUMNS


def _targets(rc: RunConfig):
    if rc.grid is not None:
        g = GridSpec(*rc.grid)
        return [Point(float(x), float(y)) for y in g.y(rc.plate) for x in g.x()]
    if rc.params.get("at") is None:
        raise DomainError("solve needs --at x,y or --grid")
    return [Point(*rc.params["at"])]


def cmd_solve(rc: RunConfig):
    p, cfg = rc.params, rc.plate
    rows = []
    if p["load"] == "box":
        missing = [k for k in ("rho", "w", "alpha", "eta") if p.get(k) is None]
        if missing:
            raise DomainError("box load needs " + ", ".join("--" + k for k in missing))
        load = BoxLoad(p["rho"], p["w"], p["alpha"], p["eta"]).check(cfg)
        for q in _targets(rc):
            r = solve_box(load, q, rc.tol, cfg, rc.mode_cap)
            rows.append({"x": q.x, "y": q.y, "value": r.value, "tail_bound": r.tail_bound})
        return rows, FIELD_COLUMNS
    if p.get("load_file") is None:
        raise DomainError("grid load needs --load-file")
    f = GridLoad.from_csv(p["load_file"])
    for q in _targets(rc):
        r = solve_grid_load(f, q, rc.tol, cfg, rc.mode_cap)
        rows.append({"x": q.x, "y": q.y, "value": r.value, "tail_bound": r.tail_bound,
                     "error_estimate": r.error_estimate})
    return rows, FIELD_COLUMNS


def cmd_verify(rc: RunConfig):
    p = rc.params
    if p["all"]:
        ids = list(InequalityId)
    elif p["ids"]:
        ids = []
        for i in p["ids"]:
            try:
                ids.append(InequalityId(i))
            except ValueError:
                raise DomainError(f"unknown inequality id {i!r}") from None
    else:
        raise DomainError("verify needs --all or at least one --id")
    kw = {}
    if rc.grid is not None:
        kw = {"nk": rc.grid[0], "ns": rc.grid[1]}
    reports = check_all(VerifyGrid(**kw), rc.plate, ids)
    for r in reports:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.id.value} min_margin={r.min_margin:.3e}",
              file=sys.stderr)
    return [r.to_dict() for r in reports], None


def cmd_constants(rc: RunConfig):
    rows = [asdict(r) for r in constants(rc.params["n_max"])]
    return rows, ("N", "C", "x", "Cbar", "xbar")


COMMANDS = {"phi": cmd_phi, "green": cmd_green, "solve": cmd_solve,
            "verify": cmd_verify, "constants": cmd_constants}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ell", type=float, default=1.0, help="plate half-width")
    common.add_argument("--sigma", type=float, default=0.2, help="Poisson ratio")
    common.add_argument("--experimental-sigma", action="store_true",
                        help="admit sigma in (-1, 0)")
    common.add_argument("--tol", type=float, default=1e-8, help="truncation tolerance")
    common.add_argument("--mode-cap", type=int, default=MODE_CAP, help="largest number of modes")
    common.add_argument("--grid", type=_grid, help="N or NX,NY grid nodes")
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    ap = argparse.ArgumentParser(prog="hingedplate", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("phi", parents=[common], help="mode function phi_m(y, w)")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--y", type=float)
    sp.add_argument("--w", type=float)

    sp = sub.add_parser("green", parents=[common], help="Green function G(p, q)")
    sp.add_argument("--load", type=_pair, required=True, metavar="RHO,W", help="load point")
    sp.add_argument("--at", type=_pair, metavar="X,Y", help="field point")

    sp = sub.add_parser("solve", parents=[common], help="deflection under a load")
    sp.add_argument("--load", choices=("box", "grid"), required=True)
    for name in ("rho", "w", "alpha", "eta"):
        sp.add_argument("--" + name, type=float)
    sp.add_argument("--load-file", help="CSV with header x,y,value")
    sp.add_argument("--at", type=_pair, metavar="X,Y", help="field point")

    sp = sub.add_parser("verify", parents=[common], help="check inequalities (JSON output)")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--id", dest="ids", action="append", default=[],
                    help="inequality id, repeatable")

    sp = sub.add_parser("constants", parents=[common], help="table of C_N, x_N, Cbar_N")
    sp.add_argument("--n-max", type=int, default=40)
    return ap


def make_run_config(ns):
    common = {"command", "ell", "sigma", "experimental_sigma", "tol", "mode_cap", "grid",
              "out", "format"}
    plate = PlateConfig(ns.ell, ns.sigma, ns.experimental_sigma)
    params = {k: v for k, v in vars(ns).items() if k not in common}
    return RunConfig(ns.command, plate, ns.tol, ns.mode_cap, ns.grid, ns.out, ns.format, params)


def run(rc: RunConfig):
    """Execute a validated run and return ``(text, exit_code)``."""
    rows, columns = COMMANDS[rc.command](rc)
    if columns is None:  # verify always emits JSON
        text = json.dumps(rows, sort_keys=True, indent=1) + "\n"
        code = EXIT_OK if all(r["min_margin"] > 0 for r in rows) else EXIT_VERIFY
        return text, code
    return render(rows, columns, rc.fmt), EXIT_OK


def main(argv=None):
    ns = build_parser().parse_args(argv)
    try:
        rc = make_run_config(ns)
        text, code = run(rc)
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except ToleranceUnreachable as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_TOL
    if rc.out:
        with open(rc.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
