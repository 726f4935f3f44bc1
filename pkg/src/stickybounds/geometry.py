"""Geometric and functional inputs of a manifold with boundary.

A :class:`DomainGeometry` collects everything the bound formulas consume:
dimension, volumes, curvature and second-fundamental-form bounds, the known
Poincaré / log-Sobolev constants, the level-set area profile of the distance
to the boundary, and optional Sobolev-Poincaré constants.

Geometries are read from a flat key-value text format::

    d = 2
    vol_interior = 3.141592653589793
    ...
    [sphere_area]
    0.0 = 0.0
    1.0 = 6.283185307179586
    [sobolev]
    2 = 1.0
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .comparison import ComparisonFn
from .errors import DomainError, InvariantViolation, MissingInput, ParseError, UnknownName

CONVENTIONS = ("paper", "distance-to-boundary")
CLOSED_FORMS = ("euclidean-disk", "hyperbolic-disk")
BUILTINS = CLOSED_FORMS


@dataclass(frozen=True)
class SphereArea:
    """Level-set area t -> A(t) = H_{d-1}({dist to boundary = t}).

    Either a closed form for one of the unit disks, or a table of samples
    interpolated linearly (which preserves monotonicity of the samples).
    """

    kind: str
    convention: str = "paper"
    ts: tuple = ()
    values: tuple = ()

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise InvariantViolation(f"profile_convention must be one of {CONVENTIONS}")
        if self.kind == "table":
            if len(self.ts) < 2 or len(self.ts) != len(self.values):
                raise InvariantViolation("sphere_area table needs at least two (t, A) samples")
            if any(b <= a for a, b in zip(self.ts, self.ts[1:])):
                raise InvariantViolation("sphere_area sample points must be strictly increasing")
            if self.ts[0] != 0.0:
                raise InvariantViolation("sphere_area table must start at t = 0")
            if any(v < 0 for v in self.values):
                raise InvariantViolation("sphere_area values must be nonnegative (A(t) >= 0)")
        elif self.kind not in CLOSED_FORMS:
            raise InvariantViolation(f"unknown sphere_area kind {self.kind!r}")

    @classmethod
    def table(cls, ts: Iterable[float], values: Iterable[float]) -> "SphereArea":
        return cls("table", "paper", tuple(float(t) for t in ts), tuple(float(v) for v in values))

    @property
    def reach(self) -> float:
        return self.ts[-1] if self.kind == "table" else 1.0

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        if np.any(t < 0) or np.any(t > self.reach * (1 + 1e-12)):
            raise DomainError(f"sphere_area evaluated outside [0, {self.reach}]")
        if self.kind == "table":
            v = np.interp(t, self.ts, self.values)
        else:
            # "paper": measured from the centre, matching the builtin constants;
            # the literal coarea reading measures from the boundary
            s = t if self.convention == "paper" else 1.0 - t
            v = 2 * np.pi * (s if self.kind == "euclidean-disk" else np.sinh(s))
        return float(v) if v.ndim == 0 else v


@dataclass(frozen=True)
class DomainGeometry:
    d: int
    vol_interior: float
    area_boundary: float
    k1: float
    k2: float
    gamma1: float
    gamma2: float
    C_int: float
    C_bnd: float
    sphere_area: SphereArea
    L_int: Optional[float] = None
    L_bnd: Optional[float] = None
    L_bb_known: Optional[float] = None
    sobolev: Optional[tuple] = None
    name: str = field(default="custom", compare=False)

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 2:
            raise InvariantViolation(f"dimension must be an integer >= 2, got {self.d}")
        if not (self.vol_interior > 0 and self.area_boundary > 0):
            raise InvariantViolation("volumes must be positive")
        if self.gamma1 > self.gamma2:
            raise InvariantViolation("need gamma1 <= gamma2")
        if self.k1 > self.k2:
            raise InvariantViolation("need k1 <= k2")
        if not self.k2 > -self.gamma2 ** 2:
            raise InvariantViolation(
                f"need k2 > -gamma2^2 (got k2={self.k2}, gamma2={self.gamma2}); "
                "no compact manifold with boundary has such bounds"
            )
        if not (self.C_int > 0 and self.C_bnd > 0):
            raise InvariantViolation("C_int and C_bnd must be positive")
        for key in ("L_int", "L_bnd", "L_bb_known"):
            v = getattr(self, key)
            if v is not None and not v > 0:
                raise InvariantViolation(f"{key} must be positive when given")
        if self.sobolev is not None:
            ps = [p for p, _ in self.sobolev]
            if ps != sorted(ps) or len(set(ps)) != len(ps):
                raise InvariantViolation("sobolev table must have strictly increasing p")
            if any(c <= 0 for _, c in self.sobolev):
                raise InvariantViolation("Sobolev constants must be positive")

    @property
    def ratio(self) -> float:
        """|Omega| / |boundary|."""
        return self.vol_interior / self.area_boundary

    @property
    def h1(self) -> ComparisonFn:
        return ComparisonFn(self.k1, self.gamma1)

    @property
    def h2(self) -> ComparisonFn:
        return ComparisonFn(self.k2, self.gamma2)

    @property
    def profile_convention(self) -> str:
        return self.sphere_area.convention

    def sobolev_constant(self, p: float) -> float:
        """C_{p,2} from the table, rounding p up to the next tabulated exponent.

        C_{p,2} is nondecreasing in p (Hölder on a probability space), so the
        right neighbour is a valid upper bound for untabulated exponents.
        """
        if not self.sobolev:
            raise MissingInput("no Sobolev-Poincaré constants supplied")
        for q, c in self.sobolev:
            if q >= p - 1e-12:
                return c
        raise MissingInput(f"Sobolev constant C_{{{p:g},2}} not covered by the table")


@dataclass(frozen=True)
class MixtureWeight:
    alpha: float

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha}")


def _alpha(alpha) -> float:
    return alpha.alpha if isinstance(alpha, MixtureWeight) else MixtureWeight(float(alpha)).alpha


def mixture_gamma(alpha, g: DomainGeometry) -> float:
    """Boundary stickiness gamma = alpha/(1-alpha) * |boundary|/|Omega|."""
    a = _alpha(alpha)
    return a / (1.0 - a) / g.ratio


def builtin_geometry(name: str, profile_convention: str = "paper") -> DomainGeometry:
    if name == "euclidean-disk":
        return DomainGeometry(
            d=2, vol_interior=math.pi, area_boundary=2 * math.pi,
            k1=0.0, k2=0.0, gamma1=1.0, gamma2=1.0,
            C_int=1 / 3.39, C_bnd=1.0, L_int=1.1799, L_bnd=2.0, L_bb_known=1.0,
            sphere_area=SphereArea("euclidean-disk", profile_convention),
            name=name,
        )
    if name == "hyperbolic-disk":
        ch, sh = math.cosh(1.0), math.sinh(1.0)
        coth1 = ch / sh
        return DomainGeometry(
            d=2, vol_interior=2 * math.pi * (ch - 1), area_boundary=2 * math.pi * sh,
            k1=-1.0, k2=-1.0, gamma1=coth1, gamma2=coth1,
            C_int=0.3377, C_bnd=sh ** 2, L_int=3.5088, L_bnd=2 * sh ** 2,
            L_bb_known=2 * (ch - 1),
            sphere_area=SphereArea("hyperbolic-disk", profile_convention),
            name=name,
        )
    raise UnknownName(f"unknown builtin geometry {name!r}; choose from {BUILTINS}")


# -- config file -------------------------------------------------------------

_REQUIRED = ("d", "vol_interior", "area_boundary", "k1", "k2", "gamma1", "gamma2", "C_int", "C_bnd")
_OPTIONAL = ("L_int", "L_bnd", "L_bb", "profile_convention")
_TOP = "geometry"


def _real(section: str, key: str, raw: str) -> float:
    try:
        v = float(raw)
    except ValueError:
        raise ParseError(f"[{section}] {key}: expected a real number, got {raw!r}") from None
    if not math.isfinite(v):
        raise ParseError(f"[{section}] {key}: value must be finite")
    return v


def load_geometry(text: str, name: str = "custom") -> DomainGeometry:
    """Parse the flat key-value geometry format."""
    cp = configparser.ConfigParser(
        delimiters=("=",), comment_prefixes=("#", ";"), inline_comment_prefixes=("#",),
        interpolation=None, empty_lines_in_values=False,
    )
    cp.optionxform = str
    try:
        cp.read_string(f"[{_TOP}]\n" + text)
    except configparser.Error as exc:
        # line numbers are off by one because of the injected header
        raise ParseError(f"malformed geometry config: {exc}") from None

    extra = set(cp.sections()) - {_TOP, "sphere_area", "sobolev"}
    if extra:
        raise ParseError(f"unknown section(s): {sorted(extra)}")
    top = cp[_TOP]
    unknown = set(top) - set(_REQUIRED) - set(_OPTIONAL)
    if unknown:
        raise ParseError(f"unknown key(s): {sorted(unknown)}")
    missing = [k for k in _REQUIRED if k not in top]
    if missing:
        raise ParseError(f"missing required key(s): {missing}")

    raw_d = top["d"].strip()
    if not raw_d.isdigit() or int(raw_d) < 2:
        raise ParseError(f"d: dimension must be an integer >= 2, got {raw_d!r}")
    vals = {k: _real(_TOP, k, top[k]) for k in _REQUIRED if k != "d"}
    opt = {k: _real(_TOP, k, top[k]) for k in ("L_int", "L_bnd", "L_bb") if k in top}
    convention = top.get("profile_convention", "paper").strip()
    if convention not in CONVENTIONS:
        raise ParseError(f"profile_convention: expected one of {CONVENTIONS}, got {convention!r}")

    if "sphere_area" not in cp:
        raise ParseError("missing [sphere_area] block")
    block = cp["sphere_area"]
    if "closed_form" in block:
        if len(block) != 1:
            raise ParseError("[sphere_area] closed_form cannot be mixed with samples")
        kind = block["closed_form"].strip()
        if kind not in CLOSED_FORMS:
            raise ParseError(f"[sphere_area] closed_form: expected one of {CLOSED_FORMS}")
        profile = SphereArea(kind, convention)
    else:
        pairs = sorted((_real("sphere_area", k, k), _real("sphere_area", k, v)) for k, v in block.items())
        try:
            profile = SphereArea("table", convention, tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))
        except InvariantViolation as exc:
            raise ParseError(f"[sphere_area] {exc}") from None

    sobolev = None
    if "sobolev" in cp:
        sobolev = tuple(sorted((_real("sobolev", k, k), _real("sobolev", k, v)) for k, v in cp["sobolev"].items()))

    return DomainGeometry(
        d=int(raw_d), sphere_area=profile, sobolev=sobolev or None,
        L_int=opt.get("L_int"), L_bnd=opt.get("L_bnd"), L_bb_known=opt.get("L_bb"),
        name=name, **vals,
    )


def load_geometry_file(path) -> DomainGeometry:
    with open(path, encoding="utf-8") as fh:
        return load_geometry(fh.read(), name=str(path))


def dump_geometry(g: DomainGeometry) -> str:
    """Serialise to the config format; ``load_geometry`` inverts it exactly."""
    lines = [f"d = {g.d}"]
    for key in _REQUIRED[1:]:
        lines.append(f"{key} = {getattr(g, key)!r}")
    for key, attr in (("L_int", "L_int"), ("L_bnd", "L_bnd"), ("L_bb", "L_bb_known")):
        v = getattr(g, attr)
        if v is not None:
            lines.append(f"{key} = {v!r}")
    lines.append(f"profile_convention = {g.sphere_area.convention}")
    lines.append("[sphere_area]")
    if g.sphere_area.kind == "table":
        lines += [f"{t!r} = {a!r}" for t, a in zip(g.sphere_area.ts, g.sphere_area.values)]
    else:
        lines.append(f"closed_form = {g.sphere_area.kind}")
    if g.sobolev:
        lines.append("[sobolev]")
        lines += [f"{p!r} = {c!r}" for p, c in g.sobolev]
    return "\n".join(lines) + "\n"
