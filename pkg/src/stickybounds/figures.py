"""Figure data (exact curves against bounds) plus CSV and SVG writers."""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence
from xml.sax.saxutils import escape

import numpy as np

from .errors import DomainError
from .geometry import builtin_geometry
from .logsobolev import lsi_inputs, lsi_interpolation_bound, lsi_no_interpolation_bound
from .poincare import adapted_constants, bounds_for, general_constants
from .spectra import LAMBDA_MAX, ODE_RTOL, alpha_grid, exact_poincare_curve

BLUE, YELLOW, GREEN, RED, PURPLE = "#1f77b4", "#e6b400", "#2ca02c", "#d62728", "#9467bd"

# id -> (example, kind)
FIGURES = {
    1: ("euclidean-disk", "poincare"),
    2: ("hyperbolic-disk", "poincare"),
    3: ("euclidean-disk", "sticky"),
    4: ("hyperbolic-disk", "sticky"),
    5: ("euclidean-disk", "lsi"),
    6: ("hyperbolic-disk", "lsi"),
}

COLUMNS = {
    "poincare": ("alpha", "exact", "interp_adapted", "nointerp_adapted", "interp_general", "nointerp_general"),
    "sticky": ("alpha", "exact", "bound_adapted", "bound_general"),
    "lsi": ("alpha", "lower_2Calpha", "interp", "nointerp"),
}

# column -> (legend text, colour); the first non-alpha column is the reference curve
LEGEND = {
    "poincare": {
        "exact": ("exact C_alpha", BLUE),
        "interp_adapted": ("interpolation, adapted", YELLOW),
        "nointerp_adapted": ("no interpolation, adapted", GREEN),
        "interp_general": ("interpolation, general", RED),
        "nointerp_general": ("no interpolation, general", PURPLE),
    },
    "sticky": {
        "exact": ("exact C_alpha (no boundary diffusion)", BLUE),
        "bound_adapted": ("bound, adapted", YELLOW),
        "bound_general": ("bound, general", GREEN),
    },
    "lsi": {
        "lower_2Calpha": ("lower bound 2 C_alpha", BLUE),
        "interp": ("interpolation", YELLOW),
        "nointerp": ("no interpolation", GREEN),
    },
}

TITLES = {
    "poincare": "Poincare constant, {name}",
    "sticky": "Poincare constant without boundary diffusion, {name}",
    "lsi": "Log-Sobolev constant, {name}",
}


def default_alphas(kind: str) -> np.ndarray:
    # C_alpha without boundary diffusion blows up as alpha -> 0
    if kind == "sticky":
        return alpha_grid(0.2, 0.99, 80)
    return alpha_grid(0.01, 0.99, 99)


@dataclass(frozen=True)
class FigureData:
    fig_id: int
    example: str
    kind: str
    columns: tuple
    rows: np.ndarray  # shape (n_alpha, len(columns))

    @property
    def reference(self) -> str:
        return self.columns[1]

    def column(self, name: str) -> np.ndarray:
        return self.rows[:, self.columns.index(name)]


def figure_data(fig_id: int, alphas: Sequence[float] | None = None, mode_max: int = 8,
                lambda_max: float = LAMBDA_MAX, rtol: float = ODE_RTOL) -> FigureData:
    if fig_id not in FIGURES:
        raise DomainError(f"figure id must be one of {sorted(FIGURES)}, got {fig_id}")
    example, kind = FIGURES[fig_id]
    al = default_alphas(kind) if alphas is None else np.asarray(alphas, dtype=float)
    family = "sticky" if kind == "sticky" else "wentzell"
    exact = np.array(exact_poincare_curve(example, family, al, mode_max=mode_max,
                                          lambda_max=lambda_max, rtol=rtol).values)

    if kind == "lsi":
        inp = lsi_inputs(example)
        cols = [2 * exact,
                [lsi_interpolation_bound(a, inp) for a in al],
                [lsi_no_interpolation_bound(a, inp) for a in al]]
    else:
        ad = adapted_constants(example)
        ge = general_constants(builtin_geometry(example))
        bad = [bounds_for(ad, a) for a in al]
        bge = [bounds_for(ge, a) for a in al]
        if kind == "poincare":
            cols = [exact, [b["interp"] for b in bad], [b["nointerp"] for b in bad],
                    [b["interp"] for b in bge], [b["nointerp"] for b in bge]]
        else:
            cols = [exact, [b["sticky"] for b in bad], [b["sticky"] for b in bge]]
    rows = np.column_stack([al] + [np.asarray(c, dtype=float) for c in cols])
    return FigureData(fig_id, example, kind, COLUMNS[kind], rows)


# -- writers ------------------------------------------------------------------------

def fmt(v: float) -> str:
    return f"{v:.12g}"


def csv_text(columns: Sequence[str], rows) -> str:
    lines = [",".join(columns)]
    for r in rows:
        lines.append(",".join(fmt(float(v)) for v in r))
    return "\n".join(lines) + "\n"


def write_atomic(path, text: str) -> Path:
    """Write via a temporary file in the same directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def _tick_label(v: float) -> str:
    return f"{v:.3g}"


def svg_text(x, series, title: str, xlabel: str = "alpha", ylabel: str = "") -> str:
    """Standalone line plot. ``series`` is a list of (label, colour, y-values)."""
    W, H = 800, 600
    left, right, top, bottom = 80, 30, 50, 150
    pw, ph = W - left - right, H - top - bottom
    x = np.asarray(x, dtype=float)
    ys = np.concatenate([np.asarray(s[2], dtype=float) for s in series])
    x0, x1 = float(x.min()), float(x.max())
    y0, y1 = float(ys.min()), float(ys.max())
    if y1 - y0 < 1e-12:
        y0, y1 = y0 - 0.5, y1 + 0.5
    pad = 0.05 * (y1 - y0)
    y0, y1 = y0 - pad, y1 + pad

    def px(v):
        return left + (v - x0) / (x1 - x0) * pw

    def py(v):
        return top + (y1 - v) / (y1 - y0) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {W} {H}" width="{W}" height="{H}">',
        f'<rect x="0" y="0" width="{W}" height="{H}" fill="white"/>',
        f'<text x="{W / 2}" y="28" text-anchor="middle" font-family="sans-serif" font-size="18">{escape(title)}</text>',
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    qs = (0.0, 0.25, 0.5, 0.75, 1.0)
    for v in np.unique(np.round(np.quantile(x, qs), 12)):
        X = px(v)
        out.append(f'<line x1="{X:.2f}" y1="{top + ph}" x2="{X:.2f}" y2="{top + ph + 6}" stroke="black"/>')
        out.append(f'<text x="{X:.2f}" y="{top + ph + 22}" text-anchor="middle" font-family="sans-serif" '
                   f'font-size="12">{_tick_label(v)}</text>')
    for v in np.unique(np.round(np.quantile(ys, qs), 12)):
        Y = py(v)
        out.append(f'<line x1="{left - 6}" y1="{Y:.2f}" x2="{left}" y2="{Y:.2f}" stroke="black"/>')
        out.append(f'<text x="{left - 10}" y="{Y + 4:.2f}" text-anchor="end" font-family="sans-serif" '
                   f'font-size="12">{_tick_label(v)}</text>')
    out.append(f'<text x="{left + pw / 2}" y="{top + ph + 45}" text-anchor="middle" font-family="sans-serif" '
               f'font-size="14">{escape(xlabel)}</text>')
    if ylabel:
        out.append(f'<text x="18" y="{top + ph / 2}" text-anchor="middle" font-family="sans-serif" font-size="14" '
                   f'transform="rotate(-90 18 {top + ph / 2})">{escape(ylabel)}</text>')
    for label, colour, y in series:
        pts = " ".join(f"{px(a):.2f},{py(b):.2f}" for a, b in zip(x, np.asarray(y, dtype=float)))
        out.append(f'<polyline fill="none" stroke="{colour}" stroke-width="2" points="{pts}"/>')
    ly = top + ph + 65
    for i, (label, colour, _) in enumerate(series):
        cx = left + (i % 2) * 340
        cy = ly + (i // 2) * 22
        out.append(f'<line x1="{cx}" y1="{cy}" x2="{cx + 30}" y2="{cy}" stroke="{colour}" stroke-width="3"/>')
        out.append(f'<text x="{cx + 38}" y="{cy + 4}" font-family="sans-serif" font-size="13">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def figure_svg(fd: FigureData) -> str:
    legend = LEGEND[fd.kind]
    series = [(legend[c][0], legend[c][1], fd.column(c)) for c in fd.columns[1:]]
    ylabel = "L_alpha" if fd.kind == "lsi" else "C_alpha"
    return svg_text(fd.column("alpha"), series, TITLES[fd.kind].format(name=fd.example), ylabel=ylabel)


def write_figure(fd: FigureData, out_dir, with_svg: bool = True) -> list:
    """Write figure_<id>.csv (and .svg); on failure nothing partial is left behind."""
    out_dir = Path(out_dir)
    stem = f"figure_{fd.fig_id}"
    written = []
    try:
        written.append(write_atomic(out_dir / f"{stem}.csv", csv_text(fd.columns, fd.rows)))
        if with_svg:
            written.append(write_atomic(out_dir / f"{stem}.svg", figure_svg(fd)))
    except BaseException:
        for p in written:
            p.unlink(missing_ok=True)
        raise
    return written
