"""Command-line front end.

    stickybounds bounds   --geometry hyperbolic-disk
    stickybounds exact    --example euclidean --bc sticky --alpha-grid 0.2 0.99 80 --out results
    stickybounds steklov  --geometry hyperbolic-disk
    stickybounds lsi      --geometry euclidean-disk --out results
    stickybounds figure   --id 2 --out results --format csv+svg
    stickybounds table
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import figures
from .errors import StickyBoundsError
from .geometry import BUILTINS, DomainGeometry, builtin_geometry, load_geometry_file
from .logsobolev import (LsiInputs, lsi_inputs, lsi_interpolation_bound, lsi_no_interpolation_bound,
                         lsi_sticky_bound, trace_norm_bound)
from .poincare import adapted_constants, bounds_for, general_bounds, general_constants, hyperbolic_steklov_exact
from .spectra import LAMBDA_MAX, ODE_RTOL, alpha_grid, exact_poincare_curve, mode_eigenvalue, neumann_gap, Condition

COMMANDS = ("bounds", "exact", "steklov", "lsi", "figure", "table")


@dataclass(frozen=True)
class RunConfig:
    command: str
    geometry: str = "euclidean-disk"
    alpha_grid: Optional[tuple] = None
    constant_set: str = "both"
    output: Optional[str] = None
    format: str = "csv+svg"
    mode_max: int = 8
    lambda_max: float = LAMBDA_MAX
    tol: float = ODE_RTOL
    example: str = "euclidean"
    bc: str = "wentzell"
    fig_id: Optional[int] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.alpha_grid is not None:
            start, stop, count = self.alpha_grid
            if not (0 < start < stop < 1) or int(count) < 2:
                raise ValueError("--alpha-grid needs 0 < START < STOP < 1 and N >= 2")
        if self.constant_set not in ("general", "adapted", "both"):
            raise ValueError(f"unknown constant set {self.constant_set!r}")
        if self.format not in ("csv", "csv+svg"):
            raise ValueError(f"unknown format {self.format!r}")

    def alphas(self, default):
        if self.alpha_grid is None:
            return default
        start, stop, count = self.alpha_grid
        return alpha_grid(start, stop, int(count))


def resolve_geometry(spec: str) -> DomainGeometry:
    if spec in BUILTINS:
        return builtin_geometry(spec)
    if spec in ("euclidean", "hyperbolic"):
        return builtin_geometry(spec + "-disk")
    return load_geometry_file(spec)


def _kv(pairs) -> str:
    return "".join(f"{k} = {figures.fmt(v) if isinstance(v, float) else v}\n" for k, v in pairs)


def _emit(text: str, cfg: RunConfig, filename: str) -> None:
    sys.stdout.write(text)
    if cfg.output is not None:
        figures.write_atomic(Path(cfg.output) / filename, text)


def _bounds(cfg: RunConfig) -> None:
    g = resolve_geometry(cfg.geometry)
    pairs = [("geometry", g.name)]
    if cfg.constant_set in ("general", "both"):
        b = general_bounds(g)
        pairs += [("K1", b.K1), ("K2", b.K2), ("K_bb", b.K_bb), ("neg_laplace_bound", b.neg_laplace),
                  ("steklov_lower_bound", b.steklov_lb), ("trace_norm_bound", trace_norm_bound(g))]
    if cfg.constant_set in ("adapted", "both") and g.name in BUILTINS:
        ad = adapted_constants(g.name)
        pairs += [("K1_adapted", ad.K1), ("K2_adapted", ad.K2), ("K_bb_adapted", ad.K_bb)]
    _emit(_kv(pairs), cfg, f"bounds_{g.name}.txt")


def _exact(cfg: RunConfig) -> None:
    family = "sticky" if cfg.bc == "sticky" else "wentzell"
    al = cfg.alphas(figures.default_alphas("sticky" if family == "sticky" else "poincare"))
    c = exact_poincare_curve(cfg.example, family, al, mode_max=cfg.mode_max,
                             lambda_max=cfg.lambda_max, rtol=cfg.tol)
    name = c.label.split()[0]
    out = Path(cfg.output or ".") / f"exact_{name}_{family}.csv"
    figures.write_atomic(out, figures.csv_text(("alpha", "C_alpha"), zip(c.alphas, c.values)))
    print(out)


def _steklov(cfg: RunConfig) -> None:
    g = resolve_geometry(cfg.geometry)
    pairs = [("geometry", g.name), ("steklov_lower_bound", general_bounds(g).steklov_lb)]
    if g.name in BUILTINS:
        pairs.append(("steklov_first_shooting", mode_eigenvalue(g.name, Condition.steklov(), 1)))
    if g.name == "hyperbolic-disk":
        pairs.append(("steklov_first_closed_form", hyperbolic_steklov_exact()))
    _emit(_kv(pairs), cfg, f"steklov_{g.name}.txt")


def _lsi(cfg: RunConfig) -> None:
    g = resolve_geometry(cfg.geometry)
    if g.name in BUILTINS:
        inp = lsi_inputs(g.name)
    else:
        ge = general_constants(g)
        inp = LsiInputs(g.L_int, g.L_bnd, g.L_bb_known, g.C_int, g.C_bnd, ge.K1, ge.K2, ge.K_bb)
    al = cfg.alphas(figures.default_alphas("lsi"))
    rows = [(a, lsi_interpolation_bound(a, inp), lsi_no_interpolation_bound(a, inp),
             lsi_sticky_bound(a, inp.L_int, inp.L_bb, inp.C_int, inp.K_bb, inp.K1)) for a in al]
    out = Path(cfg.output or ".") / f"lsi_{g.name}.csv"
    figures.write_atomic(out, figures.csv_text(("alpha", "interp", "nointerp", "sticky"), rows))
    print(out)


def _figure(cfg: RunConfig) -> None:
    if cfg.fig_id not in figures.FIGURES:
        raise ValueError("figure needs --id between 1 and 6")
    kind = figures.FIGURES[cfg.fig_id][1]
    fd = figures.figure_data(cfg.fig_id, cfg.alphas(figures.default_alphas(kind)),
                             mode_max=cfg.mode_max, lambda_max=cfg.lambda_max, rtol=cfg.tol)
    for p in figures.write_figure(fd, cfg.output or ".", with_svg=cfg.format == "csv+svg"):
        print(p)


def table_rows() -> list:
    names = list(BUILTINS)
    rows = []

    def add(key, fn):
        rows.append((key, *[fn(n) for n in names]))

    gs = {n: builtin_geometry(n) for n in names}
    gb = {n: general_bounds(gs[n]) for n in names}
    ad = {n: adapted_constants(n) for n in names}
    add("C_int", lambda n: gs[n].C_int)
    add("C_bnd", lambda n: gs[n].C_bnd)
    add("neumann_gap", lambda n: neumann_gap(n)[0])
    add("neg_laplace_bound", lambda n: gb[n].neg_laplace)
    add("K1_general", lambda n: gb[n].K1)
    add("K_bb_general", lambda n: gb[n].K_bb)
    add("K1_adapted", lambda n: ad[n].K1)
    add("K_bb_adapted", lambda n: ad[n].K_bb)
    add("steklov_lb", lambda n: gb[n].steklov_lb)
    add("steklov_first", lambda n: mode_eigenvalue(n, Condition.steklov(), 1))
    add("trace_norm_bound", lambda n: trace_norm_bound(gs[n]))
    return [("quantity", *names)] + rows


def _table(cfg: RunConfig) -> None:
    rows = table_rows()
    lines = [",".join(rows[0])] + [",".join([r[0]] + [figures.fmt(v) for v in r[1:]]) for r in rows[1:]]
    _emit("\n".join(lines) + "\n", cfg, "table.csv")


HANDLERS = {"bounds": _bounds, "exact": _exact, "steklov": _steklov, "lsi": _lsi,
            "figure": _figure, "table": _table}


def run(cfg: RunConfig) -> int:
    HANDLERS[cfg.command](cfg)
    return 0


def _positive_float(s: str) -> float:
    v = float(s)
    if not (math.isfinite(v) and v > 0):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stickybounds",
                                description="Poincare and log-Sobolev bounds for sticky-reflecting diffusions.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--geometry", default="euclidean-disk",
                        help="builtin name (euclidean-disk, hyperbolic-disk) or path to a geometry file")
    common.add_argument("--alpha-grid", nargs=3, type=float, metavar=("START", "STOP", "N"))
    common.add_argument("--constants", choices=("general", "adapted", "both"), default="both")
    common.add_argument("--out", metavar="DIR")
    common.add_argument("--format", choices=("csv", "csv+svg"), default="csv+svg")
    common.add_argument("--mode-max", type=int, default=8)
    common.add_argument("--lambda-max", type=_positive_float, default=LAMBDA_MAX)
    common.add_argument("--tol", type=_positive_float, default=ODE_RTOL, help="relative ODE tolerance")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("bounds", parents=[common], help="K1, K2, K_bb, Steklov and trace-norm bounds")
    ex = sub.add_parser("exact", parents=[common], help="exact C_alpha curve as CSV")
    ex.add_argument("--example", default="euclidean",
                    choices=("euclidean", "hyperbolic", "euclidean-disk", "hyperbolic-disk"))
    ex.add_argument("--bc", choices=("wentzell", "sticky"), default="wentzell")
    sub.add_parser("steklov", parents=[common], help="Steklov lower bound and exact value")
    sub.add_parser("lsi", parents=[common], help="log-Sobolev bounds over an alpha grid")
    fig = sub.add_parser("figure", parents=[common], help="CSV (and SVG) for figure 1..6")
    fig.add_argument("--id", type=int, required=True, choices=range(1, 7), dest="fig_id")
    sub.add_parser("table", parents=[common], help="headline constants for both builtin disks")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command, geometry=ns.geometry,
        alpha_grid=tuple(ns.alpha_grid) if ns.alpha_grid else None,
        constant_set=ns.constants, output=ns.out, format=ns.format, mode_max=ns.mode_max,
        lambda_max=ns.lambda_max, tol=ns.tol, example=getattr(ns, "example", "euclidean"),
        bc=getattr(ns, "bc", "wentzell"), fig_id=getattr(ns, "fig_id", None),
    )


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return run(config_from_args(ns))
    except (StickyBoundsError, ValueError, OSError) as exc:
        print(f"stickybounds {ns.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
