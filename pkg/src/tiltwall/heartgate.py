"""Verifier for the explicit boundary stability-condition systems attached to
an exceptional collection on P^3: the geometric-region check for the quiver
heart, the four-part condition system for a collection with distinguished
last member, and the admissible interval of the extra charge parameter.

All verdicts carry exact rational (or surd) residuals, and the strict /
non-strict character of each inequality is preserved in the report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import DomainError, InputError
from .euler import chi_pair_p3
from .numclass import (NumClass, class_of_line_bundle, class_of_named,
                       is_integral_class, parse_rational, shift)
from .surd import Surd
from .tiltcalc import (ChargeValue, ParamPoint, Slope, alpha_E_beta,
                       central_charge_3, discriminant, mu12, slope_mu,
                       twisted_v)

Q = Fraction
Exact = Union[Fraction, Surd]


@dataclass(frozen=True)
class CollectionSpec:
    """Four numerical classes forming an exceptional-collection datum, with
    the last one distinguished."""

    names: tuple[str, str, str, str]
    classes: tuple[NumClass, NumClass, NumClass, NumClass]
    builtin: str = "custom"  # beilinson4 | omega | lines | custom

    def __post_init__(self):
        mus = [slope_mu(c) for c in self.classes]
        if any(m.is_infinite for m in mus):
            raise DomainError("collection members must have nonzero rank")
        if not all(a < b for a, b in zip(mus, mus[1:])):
            raise DomainError("collection slopes must strictly increase")
        for name, c in zip(self.names, self.classes):
            if not is_integral_class(c):
                raise DomainError(f"class of {name} is not integral")
            if chi_pair_p3(c, c) != 1:
                raise DomainError(f"class of {name} is not Euler-exceptional")

    @property
    def distinguished(self) -> NumClass:
        return self.classes[3]

    @staticmethod
    def builtin_by_name(name: str) -> "CollectionSpec":
        if name == "beilinson4":
            names = ("O(-1)", "T(-2)", "O", "O(1)")
        elif name == "omega":
            names = ("O(-1)", "Omega2(2)", "Omega(1)", "O")
        elif name == "lines":
            names = ("O(-3)", "O(-2)", "O(-1)", "O")
        else:
            raise InputError(f"unknown builtin collection {name!r}")
        return CollectionSpec(names, tuple(class_of_named(n) for n in names), name)

    @staticmethod
    def from_json_dict(data: dict) -> "CollectionSpec":
        try:
            names = tuple(str(n) for n in data["names"])
            rows = data["classes"]
        except (KeyError, TypeError) as exc:
            raise InputError("collection JSON needs 'names' and 'classes'") from exc
        if len(names) != 4 or len(rows) != 4:
            raise InputError("collection JSON needs exactly 4 names and 4 classes")
        classes = []
        for row in rows:
            if len(row) != 4:
                raise InputError("each class needs 4 components")
            classes.append(NumClass(*(parse_rational(str(c)) for c in row)))
        try:
            return CollectionSpec(names, tuple(classes))
        except DomainError as exc:
            raise InputError(f"invalid collection: {exc}") from exc

    @staticmethod
    def from_json_file(path: str) -> "CollectionSpec":
        with open(path, encoding="utf-8") as fh:
            return CollectionSpec.from_json_dict(json.load(fh))

    def to_json_dict(self) -> dict:
        return {
            "names": list(self.names),
            "classes": [[str(c) for c in cls.components()] for cls in self.classes],
        }


@dataclass(frozen=True)
class Condition:
    """One inequality verdict: exact residual, pass flag, strictness."""

    name: str
    passed: bool
    residual: Exact
    strict: bool = True

    def describe(self) -> str:
        op = ">" if self.strict else ">="
        return f"{self.name}: residual {self.residual} {op} 0 -> {'pass' if self.passed else 'FAIL'}"


@dataclass(frozen=True)
class CheckReport:
    conditions: tuple[Condition, ...]
    a_interval: Optional[tuple[Fraction, Fraction]] = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def to_json_dict(self) -> dict:
        d = {
            "passed": self.passed,
            "conditions": [
                {"name": c.name, "passed": c.passed, "residual": str(c.residual),
                 "strict": c.strict}
                for c in self.conditions
            ],
        }
        if self.a_interval is not None:
            d["a_interval"] = [str(self.a_interval[0]), str(self.a_interval[1])]
        if self.notes:
            d["notes"] = list(self.notes)
        return d


def _cond(name: str, residual: Exact, strict: bool = True) -> Condition:
    ok = residual > 0 if strict else residual >= 0
    return Condition(name, bool(ok), residual, strict)


def simples_classes(spec: CollectionSpec) -> tuple[NumClass, ...]:
    """Classes of the quiver-heart simples: sign (-1)^j on the class of the
    (3-j)-th collection member."""
    return tuple(shift(spec.classes[3 - j], j) for j in range(4))


def cone_check(charges: Sequence[ChargeValue], mode: str = "half-plane") -> bool:
    """Half-turn cone membership of a finite set of charges.

    "half-plane": is there a closed half-turn arc, starting strictly inside
    the upper half-plane, containing every nonzero charge?  Equivalently:
    is there a direction u = (x, 1) with cross(u, z) >= 0 for all z, where
    charges on the positive real axis are never admissible.  Decided by
    exact rational feasibility.

    "strict-left": every charge satisfies Re < 0, or Re = 0 and Im < 0.
    """
    nonzero = [z for z in charges if not z.is_zero()]
    if mode == "strict-left":
        return all(z.re < 0 or (z.re == 0 and z.im < 0) for z in nonzero)
    if mode != "half-plane":
        raise InputError(f"unknown cone mode {mode!r}")
    lower: Optional[Fraction] = None
    upper: Optional[Fraction] = None
    for z in nonzero:
        if z.im == 0:
            if z.re > 0:
                return False
            continue
        bound = z.re / z.im
        if z.im > 0:
            lower = bound if lower is None else max(lower, bound)
        else:
            upper = bound if upper is None else min(upper, bound)
    if lower is None or upper is None:
        return True
    return lower <= upper


def thm_region_check(p: ParamPoint) -> CheckReport:
    """Region and inequality system for the rank-four quiver heart: the
    fundamental strip, the small-width band, and the three slope
    inequalities of the four standard objects."""
    b, a = p.beta, p.alpha
    w2 = 2 * a - b * b
    conds = (
        _cond("beta >= -1/2", b + Q(1, 2), strict=False),
        _cond("beta <= 0", -b, strict=False),
        _cond("omega^2 > 0", w2),
        _cond("omega^2 < 1/4", Q(1, 4) - w2),
        _cond("1 - 2*alpha > 2*beta - 2*beta^2", 1 - 2 * a - 2 * b + 2 * b * b),
        _cond("3*alpha > 2*beta + 3*beta^2", 3 * a - 2 * b - 3 * b * b),
        _cond("-1 + 2*alpha < 2*beta + 2*beta^2", 2 * b + 2 * b * b + 1 - 2 * a),
    )
    return CheckReport(conds)


def _ratio_v3_v1(v: NumClass, beta: Fraction) -> Fraction:
    _, v1b, _, v3b = twisted_v(v, beta)
    if v1b == 0:
        raise DomainError("twisted degree vanishes; ratio undefined")
    return v3b / v1b


def general_condition_check(spec: CollectionSpec, beta, a0) -> CheckReport:
    """Evaluate the four-part boundary condition system at alpha taken on
    the distinguished class's parabola.

    Conditions: (1) the beta window against mu1 and the first member plus
    its slope inequality; (2) the three-case slot condition on the middle
    members; (3) the three twisted-degree inequalities; (4) strict-left
    cone membership of the four simples' charges at a0.  The gate
    a0 < v3^b(E)/v1^b(E) is reported alongside.
    """
    beta = Fraction(beta)
    a0 = Fraction(a0)
    E = spec.distinguished
    if E.v0 == 0:
        raise DomainError("distinguished class must have nonzero rank")
    if discriminant(E) < 0:
        raise DomainError("distinguished class must have nonnegative discriminant")
    F0, F1, F2, F3 = spec.classes
    mu = [slope_mu(c).value for c in spec.classes]
    mu1_E, _ = mu12(E)
    alpha = alpha_E_beta(E, beta)
    conds: list[Condition] = []
    notes: list[str] = []

    # (1)
    conds.append(_cond("(1) beta < mu1(E)", mu1_E - beta))
    conds.append(_cond("(1) beta > mu(F0)", beta - mu[0]))
    _, f0_v1b, _, _ = twisted_v(F0, beta)
    if f0_v1b == 0:
        conds.append(Condition("(1) F0 slope inequality", False, Q(0)))
    else:
        frac = (F0.v2 - alpha * F0.v0) / f0_v1b
        conds.append(_cond("(1) (v2(F0)-alpha*v0(F0))/v1^b(F0) < beta", beta - frac))

    # (2) three-case slot condition
    if mu[0] < beta < mu[1]:
        _, f1_v1b, _, _ = twisted_v(F1, beta)
        if f1_v1b == 0:
            conds.append(Condition("(2) F1 slope inequality", False, Q(0)))
        else:
            frac = (F1.v2 - alpha * F1.v0) / f1_v1b
            conds.append(_cond("(2) mu(F0)<beta<mu(F1) and F1 inequality", beta - frac))
    elif mu[1] <= beta <= mu[2]:
        conds.append(Condition("(2) mu(F1)<=beta<=mu(F2)", True, Q(0), strict=False))
    elif mu[2] < beta < mu[3]:
        _, f2_v1b, _, _ = twisted_v(F2, beta)
        if f2_v1b == 0:
            conds.append(Condition("(2) F2 slope inequality", False, Q(0)))
        else:
            frac = (F2.v2 - alpha * F2.v0) / f2_v1b
            conds.append(_cond("(2) mu(F2)<beta<mu(F3) and F2 inequality", frac - beta))
    else:
        conds.append(Condition("(2) beta outside (mu(F0), mu(F3))", False, Q(0)))

    # (3)
    try:
        t = _ratio_v3_v1(E, beta)
        for name, F, want_less in (("F0", F0, True), ("F1", F1, False), ("F2", F2, True)):
            _, v1b, _, v3b = twisted_v(F, beta)
            resid = t * v1b - v3b if want_less else v3b - t * v1b
            op = "<" if want_less else ">"
            conds.append(_cond(f"(3) v3^b({name}) {op} t*v1^b({name})", resid))
    except DomainError:
        conds.append(Condition("(3) ratio v3^b(E)/v1^b(E) undefined", False, Q(0)))
        t = None

    # (4) strict-left cone membership of the simples' charges at a0
    point = ParamPoint(beta, alpha)
    charges = [central_charge_3(s, point, a0) for s in simples_classes(spec)]
    ok4 = cone_check(charges, mode="strict-left")
    conds.append(Condition("(4) simples charges strictly left", ok4, Q(0)))

    if t is not None:
        conds.append(_cond("gate a0 < v3^b(E)/v1^b(E)", t - a0))
    if spec.builtin == "custom":
        notes.append("categorical exceptionality of a custom collection is not verified")
    return CheckReport(tuple(conds), notes=tuple(notes))


def admissible_a_interval(spec: CollectionSpec, beta) -> Optional[tuple[Fraction, Fraction]]:
    """Open interval of charge parameters a for which the condition system
    can be satisfied: upper bound from the distinguished class (and any
    simple with positive twisted degree), lower bound the largest of the
    per-simple linear bounds.  None when conditions (1)-(3) fail or the
    interval is empty."""
    beta = Fraction(beta)
    E = spec.distinguished
    if E.v0 == 0:
        raise DomainError("distinguished class must have nonzero rank")
    if discriminant(E) < 0:
        raise DomainError("distinguished class must have nonnegative discriminant")
    probe = general_condition_check(spec, beta, Fraction(0))
    static = [c for c in probe.conditions if c.name.startswith(("(1)", "(2)", "(3)"))]
    if not all(c.passed for c in static):
        return None

    alpha = alpha_E_beta(E, beta)
    omega_half = alpha - beta * beta / 2
    upper = _ratio_v3_v1(E, beta)
    lower: Optional[Fraction] = None
    for s in simples_classes(spec):
        v0b, v1b, v2b, v3b = twisted_v(s, beta)
        if v1b > 0:
            upper = min(upper, v3b / v1b)
        elif v1b < 0:
            bound = v3b / v1b
            lower = bound if lower is None else max(lower, bound)
        else:
            # a-independent: Re = -v3^b must be negative, or zero with Im < 0
            im = v2b - omega_half * v0b
            if not (-v3b < 0 or (v3b == 0 and im < 0)):
                return None
    if lower is None or lower >= upper:
        return None
    return lower, upper


def simplecase_z_oracle(beta, a) -> tuple[ChargeValue, ...]:
    """Closed forms of the four simples' charges for the standard
    cotangent-type collection at alpha = beta^2; an independent oracle for
    the central-charge path."""
    b = Fraction(beta)
    a = Fraction(a)
    z0 = ChargeValue(b ** 3 / 6 - a * b, 0)
    z1 = ChargeValue(
        -b ** 3 / 2 - b ** 2 / 2 + b / 2 - Q(1, 6) + a * (3 * b + 1),
        -b + Q(1, 2),
    )
    z2 = ChargeValue(b ** 3 / 2 + b ** 2 - Q(2, 3) - a * (3 * b + 2), 2 * b)
    z3 = ChargeValue(
        -b ** 3 / 6 - b ** 2 / 2 - b / 2 - Q(1, 6) + a * (b + 1),
        -b - Q(1, 2),
    )
    return (z0, z1, z2, z3)
