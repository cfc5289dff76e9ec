"""Numerical wall-and-chamber computation in the (beta, alpha)-plane for a
fixed class: pairwise walls, the concurrency/parallelism structure,
candidate enumeration over integral classes, and plot-scene construction.

Walls are lines A*alpha + B*beta + C = 0 stored with a canonical integer
normalization.  Enumeration runs an integer scan (compiled extension when
available, pure Python otherwise) followed by an exact feasibility check of
each wall against the region, the U half-plane, and the Im Z window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import DomainError, InputError
from .numclass import NumClass
from .surd import Surd
from .tiltcalc import CurveCE, curve_CE, discriminant

from . import _wallscan_py as _pure_kernel

try:  # compiled fast path; optional by design
    from . import _wallscan as _compiled_kernel
    HAVE_COMPILED_KERNEL = True
except ImportError:  # pragma: no cover - depends on build environment
    _compiled_kernel = None
    HAVE_COMPILED_KERNEL = False

Q = Fraction
Exact = Union[Fraction, Surd]

# inputs below this magnitude cannot overflow the 64-bit compiled kernel
_COMPILED_INPUT_LIMIT = 1 << 15


@dataclass(frozen=True)
class Wall:
    """Line A*alpha + B*beta + C = 0, canonically normalized: integer
    coprime coefficients with the first nonzero one positive."""

    A: int
    B: int
    C: int

    def __post_init__(self):
        if (self.A, self.B, self.C) == (0, 0, 0):
            raise DomainError("degenerate wall (0, 0, 0)")

    @staticmethod
    def from_coefficients(A, B, C) -> "Wall":
        A, B, C = Fraction(A), Fraction(B), Fraction(C)
        if (A, B, C) == (0, 0, 0):
            raise DomainError("degenerate wall (0, 0, 0)")
        scale = math.lcm(A.denominator, B.denominator, C.denominator)
        a, b, c = int(A * scale), int(B * scale), int(C * scale)
        g = math.gcd(a, b, c)
        a, b, c = a // g, b // g, c // g
        first = a if a != 0 else (b if b != 0 else c)
        if first < 0:
            a, b, c = -a, -b, -c
        return Wall(a, b, c)

    def slope(self) -> Optional[Fraction]:
        """d alpha / d beta, None for a vertical wall (A = 0)."""
        if self.A == 0:
            return None
        return Fraction(-self.B, self.A)

    def alpha_at(self, beta) -> Fraction:
        if self.A == 0:
            raise DomainError("vertical wall has no alpha(beta)")
        b = Fraction(beta)
        return Fraction(-(self.B * b + self.C), self.A)

    def __str__(self) -> str:
        return f"{self.A}*alpha + {self.B}*beta + {self.C} = 0"


def wall_between(v: NumClass, w: NumClass) -> Optional[Wall]:
    """The locus nu(v) = nu(w): the line with A = w0 v1 - v0 w1,
    B = w2 v0 - v2 w0, C = v2 w1 - w2 v1; None for proportional
    truncations (A = B = C = 0)."""
    A = w.v0 * v.v1 - v.v0 * w.v1
    B = w.v2 * v.v0 - v.v2 * w.v0
    C = v.v2 * w.v1 - w.v2 * v.v1
    if A == 0 and B == 0 and C == 0:
        return None
    return Wall.from_coefficients(A, B, C)


def pi_point(v: NumClass) -> Optional[tuple[Fraction, Fraction]]:
    """Common point (v1/v0, v2/v0) of all walls of v; None in rank zero."""
    if v.v0 == 0:
        return None
    return (v.v1 / v.v0, v.v2 / v.v0)


def common_slope(v: NumClass) -> Optional[Fraction]:
    """Shared slope v2/v1 of the (mutually parallel) walls of a rank-zero
    class; None when v1 = 0."""
    if v.v0 != 0:
        raise DomainError("common_slope needs a rank-zero class")
    if v.v1 == 0:
        return None
    return v.v2 / v.v1


def passes_through(wall: Wall, q: tuple) -> bool:
    """Exact incidence of the point q = (beta, alpha) on the wall."""
    beta, alpha = Fraction(q[0]), Fraction(q[1])
    return wall.A * alpha + wall.B * beta + wall.C == 0


@dataclass(frozen=True)
class Region:
    """Rational box of parameters: beta in [beta_min, beta_max], alpha up
    to alpha_max, always intersected with the open half-plane U."""

    beta_min: Fraction
    beta_max: Fraction
    alpha_max: Fraction

    def __init__(self, beta_min, beta_max, alpha_max):
        object.__setattr__(self, "beta_min", Fraction(beta_min))
        object.__setattr__(self, "beta_max", Fraction(beta_max))
        object.__setattr__(self, "alpha_max", Fraction(alpha_max))
        if self.beta_min > self.beta_max:
            raise InputError("empty beta range")

    def to_json_dict(self) -> dict:
        return {"beta_min": str(self.beta_min), "beta_max": str(self.beta_max),
                "alpha_max": str(self.alpha_max)}


# --- exact 1-D feasibility over intervals with surd endpoints ----------------

class _Interval:
    """Mutable intersection accumulator for one real interval; endpoints
    are rational or surd, None meaning unbounded."""

    __slots__ = ("lo", "lo_strict", "hi", "hi_strict", "empty")

    def __init__(self):
        self.lo = None
        self.lo_strict = False
        self.hi = None
        self.hi_strict = False
        self.empty = False

    def add_lower(self, value: Exact, strict: bool):
        if self.lo is None or value > self.lo:
            self.lo, self.lo_strict = value, strict
        elif value == self.lo:
            self.lo_strict = self.lo_strict or strict

    def add_upper(self, value: Exact, strict: bool):
        if self.hi is None or value < self.hi:
            self.hi, self.hi_strict = value, strict
        elif value == self.hi:
            self.hi_strict = self.hi_strict or strict

    def add_linear_positive(self, c: Fraction, d: Fraction, strict: bool = True):
        """Constraint c*x + d > 0 (or >= 0)."""
        if c > 0:
            self.add_lower(-d / c, strict)
        elif c < 0:
            self.add_upper(-d / c, strict)
        elif (d <= 0 if strict else d < 0):
            self.empty = True

    def feasible(self) -> bool:
        if self.empty:
            return False
        if self.lo is None or self.hi is None:
            return True
        if self.lo < self.hi:
            return True
        if self.lo == self.hi:
            return not (self.lo_strict or self.hi_strict)
        return False


def _wall_feasible(wall: Wall, v: NumClass, w: NumClass, region: Region) -> bool:
    """Does the wall meet region /\\ U at a point with 0 < Im Z(w) < Im Z(v)?

    Exact: along the wall everything reduces to one variable (beta for
    non-vertical walls), with the U condition contributing a quadratic
    whose roots are kept as surds.
    """
    A, B, C = Fraction(wall.A), Fraction(wall.B), Fraction(wall.C)
    if A == 0:
        # vertical wall beta = -C/B; alpha is free up to alpha_max
        beta0 = -C / B
        if not (region.beta_min <= beta0 <= region.beta_max):
            return False
        if region.alpha_max <= beta0 * beta0 / 2:
            return False  # no alpha in U below the cap
        return (w.v1 - beta0 * w.v0 > 0
                and (v.v1 - w.v1) - beta0 * (v.v0 - w.v0) > 0)

    iv = _Interval()
    iv.add_lower(region.beta_min, strict=False)
    iv.add_upper(region.beta_max, strict=False)
    # U: with alpha = -(B beta + C)/A and A > 0, need A b^2 + 2B b + 2C < 0
    D2 = B * B - 2 * A * C
    if D2 <= 0:
        return False
    root = Surd.sqrt(D2)
    iv.add_lower((-B - root) / A, strict=True)
    iv.add_upper((-B + root) / A, strict=True)
    # alpha(beta) <= alpha_max  <=>  B beta + (C + A alpha_max) >= 0
    iv.add_linear_positive(B, C + A * region.alpha_max, strict=False)
    # Im window: 0 < Im Z(w) < Im Z(v), both linear in beta
    iv.add_linear_positive(-w.v0, w.v1)
    iv.add_linear_positive(-(v.v0 - w.v0), v.v1 - w.v1)
    return iv.feasible()


# --- candidate enumeration ---------------------------------------------------

def _witness_class(w0: int, w1: int, t: int) -> NumClass:
    """Integral class with rank w0, degree w1, 2*ch2 = t, built from line
    bundles: w = b*[O(2)] + c*[O(1)] + d*[O] with b = (t-w1)/2,
    c = 2*w1 - t, d the remainder; its ch3 is 4b/3 + c/6."""
    b = (t - w1) // 2
    c = 2 * w1 - t
    return NumClass(w0, w1, Fraction(t, 2), Fraction(4 * b, 3) + Fraction(c, 6))


def search_box(v: NumClass, disc_bound) -> dict:
    """The finite lattice box actually scanned, reported for
    reproducibility.  The rank bound is a heuristic: twice the rank of v
    and twice sqrt of the discriminant budget, with a floor of 8;
    completeness relative to all numerical walls is not claimed."""
    slack = Fraction(disc_bound)
    budget = discriminant(v) + slack
    root = math.isqrt(math.ceil(budget)) + 1 if budget > 0 else 0
    bound = max(2 * math.ceil(abs(v.v0)) + 2, 2 * root + 2, 8)
    return {"w0_min": -bound, "w0_max": bound,
            "disc_budget": str(budget),
            "note": "heuristic rank bound; numerical walls only"}


def _scaled_inputs(v: NumClass, region: Region, disc_bound: Fraction):
    R = math.lcm(v.v0.denominator, v.v1.denominator, (2 * v.v2).denominator)
    P0, P1, T2 = int(R * v.v0), int(R * v.v1), int(2 * R * v.v2)
    DS = (P1 * P1 - P0 * T2) + math.floor(R * R * disc_bound)
    bl, bh = region.beta_min, region.beta_max
    return (P0, P1, T2, R, DS,
            bl.numerator, bl.denominator, bh.numerator, bh.denominator)


def _select_kernel(args) -> tuple:
    """Compiled kernel when present and every input fits comfortably in
    64 bits, else the pure-Python reference."""
    if HAVE_COMPILED_KERNEL and all(abs(x) < _COMPILED_INPUT_LIMIT for x in args):
        return _compiled_kernel.scan_candidates, "compiled"
    return _pure_kernel.scan_candidates, "pure"


def enumerate_candidate_walls(v: NumClass, region: Region,
                              disc_bound) -> list[tuple[Wall, NumClass]]:
    """Deduplicated, canonically sorted numerical walls for v inside the
    region, each with one integral witness class w satisfying the
    discriminant filters and the Im Z window on the wall."""
    disc_bound = Fraction(disc_bound)
    if disc_bound < 0:
        raise InputError("disc_bound must be nonnegative")
    if discriminant(v) < 0:
        raise DomainError("class has negative discriminant; no walls")
    P0, P1, T2, R, DS, bln, bld, bhn, bhd = _scaled_inputs(v, region, disc_bound)
    box = search_box(v, disc_bound)
    w0_lo, w0_hi = box["w0_min"], box["w0_max"]
    args = (P0, P1, T2, R, DS, w0_lo, w0_hi, bln, bld, bhn, bhd)
    kernel, _ = _select_kernel(args)
    found: dict[tuple[int, int, int], tuple[Wall, NumClass]] = {}
    for w0, w1, t in kernel(*args):
        w = _witness_class(w0, w1, t)
        wall = wall_between(v, w)
        if wall is None:
            continue
        key = (wall.A, wall.B, wall.C)
        if key in found:
            continue
        if _wall_feasible(wall, v, w, region):
            found[key] = (wall, w)
    return [found[k] for k in sorted(found)]


# --- plot scene --------------------------------------------------------------

@dataclass(frozen=True)
class SceneDescription:
    """Serializable picture of the region: boundary parabola, the class's
    curve, wall lines clipped to the region, and labeled points."""

    region: Region
    curves: tuple[dict, ...]
    points: tuple[dict, ...]

    def to_json_dict(self) -> dict:
        return {
            "schema": "tiltwall/scene-v1",
            "region": self.region.to_json_dict(),
            "curves": list(self.curves),
            "points": list(self.points),
        }

    def to_svg(self, precision: int = 4, width: int = 480, height: int = 360) -> str:
        return _render_svg(self, precision, width, height)


def plot_scene(v: NumClass, region: Region,
               walls: Sequence[Wall] = ()) -> SceneDescription:
    curves: list[dict] = [{"kind": "boundary-parabola", "eq": "alpha = beta^2/2"}]
    ce = curve_CE(v)
    if ce.kind == "parabola":
        curves.append({"kind": "curve-CE", "shape": "parabola",
                       "lin": str(ce.lin), "const": str(ce.const)})
    elif ce.kind == "vertical" and region.beta_min <= ce.beta0 <= region.beta_max:
        curves.append({"kind": "curve-CE", "shape": "vertical",
                       "beta": str(ce.beta0)})
    for wall in walls:
        if _wall_in_box(wall, region):
            curves.append({"kind": "wall", "A": wall.A, "B": wall.B, "C": wall.C})
    points: list[dict] = []
    pi = pi_point(v)
    if pi is not None and (region.beta_min <= pi[0] <= region.beta_max
                           and pi[1] <= region.alpha_max):
        points.append({"label": "Pi", "beta": str(pi[0]), "alpha": str(pi[1])})
    return SceneDescription(region, tuple(curves), tuple(points))


def _wall_in_box(wall: Wall, region: Region) -> bool:
    """Does the wall line meet the drawing box [beta_min, beta_max] x
    (-inf, alpha_max]?"""
    if wall.A == 0:
        beta0 = Fraction(-wall.C, wall.B)
        return region.beta_min <= beta0 <= region.beta_max
    a1 = wall.alpha_at(region.beta_min)
    a2 = wall.alpha_at(region.beta_max)
    return min(a1, a2) <= region.alpha_max


def _render_svg(scene: SceneDescription, precision: int,
                width: int, height: int) -> str:
    """Write-only float rendering; every geometric decision has already
    been made exactly upstream."""
    reg = scene.region
    bmin, bmax = float(reg.beta_min), float(reg.beta_max)
    amax = float(reg.alpha_max)
    amin = 0.0 if amax > 0 else amax - 1.0
    if bmax == bmin:
        bmax = bmin + 1.0
    if amax == amin:
        amax = amin + 1.0
    pad = 20.0

    def fmt(x: float) -> str:
        return f"{x:.{precision}f}"

    def to_x(beta: float) -> float:
        return pad + (beta - bmin) / (bmax - bmin) * (width - 2 * pad)

    def to_y(alpha: float) -> float:
        return height - pad - (alpha - amin) / (amax - amin) * (height - 2 * pad)

    def polyline(fn, color: str) -> str:
        n = 64
        pts = []
        for i in range(n + 1):
            b = bmin + (bmax - bmin) * i / n
            a = fn(b)
            if amin - 1e9 < a < amax + 1e9:
                pts.append(f"{fmt(to_x(b))},{fmt(to_y(a))}")
        return (f'<polyline fill="none" stroke="{color}" stroke-width="1" '
                f'points="{" ".join(pts)}"/>')

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="{fmt(pad)}" y="{fmt(pad)}" width="{fmt(width - 2 * pad)}" '
        f'height="{fmt(height - 2 * pad)}" fill="white" stroke="black"/>',
    ]
    for cv in scene.curves:
        if cv["kind"] == "boundary-parabola":
            parts.append(polyline(lambda b: b * b / 2, "gray"))
        elif cv["kind"] == "curve-CE" and cv.get("shape") == "parabola":
            lin, const = float(Fraction(cv["lin"])), float(Fraction(cv["const"]))
            parts.append(polyline(lambda b, l=lin, c=const: b * b + l * b + c, "blue"))
        elif cv["kind"] == "curve-CE" and cv.get("shape") == "vertical":
            x = fmt(to_x(float(Fraction(cv["beta"]))))
            parts.append(f'<line x1="{x}" y1="{fmt(pad)}" x2="{x}" '
                         f'y2="{fmt(height - pad)}" stroke="blue"/>')
        elif cv["kind"] == "wall":
            A, B, C = cv["A"], cv["B"], cv["C"]
            if A == 0:
                x = fmt(to_x(-C / B))
                parts.append(f'<line x1="{x}" y1="{fmt(pad)}" x2="{x}" '
                             f'y2="{fmt(height - pad)}" stroke="red"/>')
            else:
                parts.append(polyline(lambda b, A=A, B=B, C=C: -(B * b + C) / A,
                                      "red"))
    for pt in scene.points:
        x = fmt(to_x(float(Fraction(pt["beta"]))))
        y = fmt(to_y(float(Fraction(pt["alpha"]))))
        parts.append(f'<circle cx="{x}" cy="{y}" r="3" fill="black"/>')
        parts.append(f'<text x="{x}" y="{y}" dx="5" dy="-5" '
                     f'font-size="10">{pt["label"]}</text>')
    parts.append("</svg>")
    return "\n".join(parts)
