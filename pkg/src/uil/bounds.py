"""Closed-form sharp bounds for the successive inverse-coefficient gaps.

For every family the target quantity reduces to a scaled quadratic
functional of the generator coefficients,

    |A3| - |A2| = scale * ( |B2 c1^2 + B3 c2| - |B1 c1| ),

with family constants (B1, B2, B3) and a positive scale.  The maximum of
``Psi+ = |B2 c1^2 + B3 c2| - |B1 c1|`` and of ``Psi- = -Psi+`` over the
coefficient body has a piecewise closed form (three cases for Psi-,
evaluated in listed order with the first matching condition winning);
every published bound for the three families is that envelope times the
family scale.  |A2| - |A1| is monotone in c1 and needs no case split.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classes import (
    Cgamma,
    ClassParams,
    F0,
    Gnu,
    InverseCoeffs,
    class_label,
    coupling,
)

__all__ = [
    "BoundReport",
    "LemmaInput",
    "WitnessTarget",
    "lemma_input",
    "psi_minus_bound",
    "psi_plus",
    "psi_plus_bound",
    "scale32",
    "successive_diff",
    "theorem_bounds",
    "upper21",
    "witness_targets",
]

_BREAK_TOL = 1e-9


@dataclass(frozen=True)
class LemmaInput:
    """Constants (B1, B2, B3) of the quadratic coefficient functional."""

    b1: float
    b2: complex
    b3: float

    def __post_init__(self):
        if not self.b1 > 0.0:
            raise ValueError(f"b1 out of range: expected b1 > 0, got {self.b1}")

    @property
    def b4(self) -> float:
        return abs(4.0 * self.b2 + 2.0 * self.b3)


def lemma_input(params: ClassParams) -> LemmaInput:
    """Family constants so that |A3|-|A2| = scale32 * Psi+(c1, c2)."""
    if isinstance(params, Gnu):
        return LemmaInput(3.0, complex(params.nu), 1.0)
    if isinstance(params, F0):
        return LemmaInput(6.0, complex(4.0 * params.lam + 2.0), -2.0)
    if isinstance(params, Cgamma):
        return LemmaInput(3.0, 2.0 * (1.0 - params.alpha) * params.mu, -1.0)
    raise TypeError(f"not a class parameter set: {type(params).__name__}")


def scale32(params: ClassParams) -> float:
    """Positive scale in front of the quadratic functional."""
    if isinstance(params, Gnu):
        return params.nu / 12.0
    if isinstance(params, F0):
        return (2.0 * params.lam + 1.0) / 24.0
    if isinstance(params, Cgamma):
        return (1.0 - params.alpha) * math.cos(params.gamma) / 6.0
    raise TypeError(f"not a class parameter set: {type(params).__name__}")


def psi_plus(li: LemmaInput, c1, c2):
    """Psi+(c1, c2) = |B2 c1^2 + B3 c2| - |B1 c1| (array-friendly)."""
    c1 = np.asarray(c1, dtype=np.complex128)
    c2 = np.asarray(c2, dtype=np.complex128)
    return np.abs(li.b2 * c1 * c1 + li.b3 * c2) - np.abs(li.b1 * c1)


def psi_plus_bound(li: LemmaInput) -> tuple[float, str]:
    """Sharp maximum of Psi+ over the body, with the fired case label."""
    if abs(2.0 * li.b2 + li.b3) >= abs(li.b3) + li.b1:
        return li.b4 - 2.0 * li.b1, "case1"
    return 2.0 * abs(li.b3), "case2"


def psi_minus_bound(li: LemmaInput) -> tuple[float, str]:
    """Sharp maximum of Psi- = -Psi+ over the body, first matching case."""
    b4p = li.b4 + 2.0 * abs(li.b3)
    if li.b1 >= b4p:
        return 2.0 * li.b1 - li.b4, "case1"
    if li.b1 * li.b1 <= 2.0 * abs(li.b3) * b4p:
        return 2.0 * li.b1 * math.sqrt(2.0 * abs(li.b3) / b4p), "case2"
    return 2.0 * abs(li.b3) + li.b1 * li.b1 / b4p, "case3"


def _plus_at_boundary(li: LemmaInput) -> bool:
    lhs = abs(2.0 * li.b2 + li.b3)
    rhs = abs(li.b3) + li.b1
    return abs(lhs - rhs) <= _BREAK_TOL * max(1.0, rhs)


def _minus_boundaries(li: LemmaInput) -> tuple[tuple[str, str], ...]:
    """Case pairs whose switching condition is active (within tolerance)."""
    b4p = li.b4 + 2.0 * abs(li.b3)
    out = []
    if abs(li.b1 - b4p) <= _BREAK_TOL * max(1.0, b4p):
        out.append(("case1", "case3"))
    if abs(li.b1 * li.b1 - 2.0 * abs(li.b3) * b4p) <= _BREAK_TOL * max(
        1.0, li.b1 * li.b1
    ):
        out.append(("case2", "case3"))
    return tuple(out)


# ----------------------------------------------------------------------
# the |A2| - |A1| bound and the functional itself


def successive_diff(ic: InverseCoeffs, n: int) -> float:
    """|A_{n+1}| - |A_n| for n = 1 or 2."""
    if n == 1:
        return abs(ic.A2) - ic.A1
    if n == 2:
        return abs(ic.A3) - abs(ic.A2)
    raise ValueError(f"n must be 1 or 2, got {n}")


def upper21(params: ClassParams) -> float:
    """Sharp maximum of |A2| - |A1|: attained at c1 = 2, equals |kappa| - 1."""
    return abs(coupling(params)) - 1.0


# ----------------------------------------------------------------------
# assembled report

_LOWER32_WITNESS = {
    "g": {"case2": "g3", "case3": "g4"},
    "f0": {"case2": "f3"},
    "c": {"case1": "h1", "case2": "h3", "case3": "h4"},
}
_UPPER32_WITNESS = {
    "g": {"case1": "g2", "case2": "g2"},
    "f0": {"case1": "f1", "case2": "f2"},
    "c": {"case1": "h2", "case2": "h2"},
}
_FIRST_WITNESS = {"g": ("g2", "g1"), "f0": ("f2", "f1"), "c": ("h2", "h1")}


@dataclass(frozen=True)
class BoundReport:
    """All four sharp bounds at one parameter point.

    ``witnesses`` maps each bound name to the label(s) of the extremal
    maps attaining it; two labels appear at branch breakpoints.
    """

    params: ClassParams
    lower21: float
    upper21: float
    lower32: float
    upper32: float
    upper32_case: str
    lower32_case: str
    upper32_breakpoint: bool
    lower32_breakpoint: bool
    w_lower21: tuple[str, ...]
    w_upper21: tuple[str, ...]
    w_lower32: tuple[str, ...]
    w_upper32: tuple[str, ...]

    def __post_init__(self):
        if self.lower21 > self.upper21 or self.lower32 > self.upper32:
            raise ValueError("bound pairs must satisfy lower <= upper")

    def bound_items(self):
        """Yield (name, value, case, breakpoint, witnesses) rows."""
        yield "lower21", self.lower21, "", False, self.w_lower21
        yield "upper21", self.upper21, "", False, self.w_upper21
        yield "lower32", self.lower32, self.lower32_case, self.lower32_breakpoint, self.w_lower32
        yield "upper32", self.upper32, self.upper32_case, self.upper32_breakpoint, self.w_upper32


def theorem_bounds(params: ClassParams) -> BoundReport:
    """Evaluate all four sharp bounds with case labels and witnesses."""
    label = class_label(params)
    li = lemma_input(params)
    s = scale32(params)
    plus_value, plus_case = psi_plus_bound(li)
    minus_value, minus_case = psi_minus_bound(li)

    plus_break = _plus_at_boundary(li)
    minus_pairs = _minus_boundaries(li)
    minus_break = any(minus_case in pair for pair in minus_pairs)

    upper_map = _UPPER32_WITNESS[label]
    w_upper32 = [upper_map[plus_case]]
    if plus_break:
        other = upper_map["case2" if plus_case == "case1" else "case1"]
        if other not in w_upper32:
            w_upper32.append(other)

    lower_map = _LOWER32_WITNESS[label]
    w_lower32 = [lower_map[minus_case]]
    for pair in minus_pairs:
        if minus_case in pair:
            for case in pair:
                cand = lower_map.get(case)
                if cand is not None and cand not in w_lower32:
                    w_lower32.append(cand)

    w21_lower, w21_upper = _FIRST_WITNESS[label]
    return BoundReport(
        params=params,
        lower21=-1.0,
        upper21=upper21(params),
        lower32=-s * minus_value,
        upper32=s * plus_value,
        upper32_case=plus_case,
        lower32_case=minus_case,
        upper32_breakpoint=plus_break,
        lower32_breakpoint=minus_break,
        w_lower21=(w21_lower,),
        w_upper21=(w21_upper,),
        w_lower32=tuple(w_lower32),
        w_upper32=tuple(w_upper32),
    )


# ----------------------------------------------------------------------
# per-witness targets


@dataclass(frozen=True)
class WitnessTarget:
    """The bound value a given witness is designed to attain.

    ``active`` records whether that branch is the one currently governing
    the family bound (witnesses tied to the other branch still attain
    their own formula, just not the envelope).
    """

    witness: str
    bound: str
    branch: str
    value: float
    active: bool


def witness_targets(params: ClassParams) -> tuple[WitnessTarget, ...]:
    """Designated (witness, bound, value) rows for this parameter point."""
    tol = 1e-12
    if isinstance(params, Gnu):
        nu = params.nu
        return (
            WitnessTarget("g1", "upper21", "", 0.5 * (nu - 2.0), True),
            WitnessTarget("g2", "lower21", "", -1.0, True),
            WitnessTarget("g2", "upper32", "case2", nu / 6.0, True),
            WitnessTarget(
                "g3",
                "lower32",
                "case2",
                -nu / (2.0 * math.sqrt(2.0 * (nu + 1.0))),
                nu >= 0.125 - tol,
            ),
            WitnessTarget(
                "g4",
                "lower32",
                "case3",
                -nu * (8.0 * nu + 17.0) / (48.0 * (nu + 1.0)),
                nu <= 0.125 + tol,
            ),
        )
    if isinstance(params, F0):
        lam = params.lam
        return (
            WitnessTarget("f1", "upper21", "", 0.5 * (2.0 * lam - 1.0), True),
            WitnessTarget(
                "f1",
                "upper32",
                "case1",
                (2.0 * lam + 1.0) * (2.0 * lam - 1.0) / 3.0,
                lam >= 0.75 - tol,
            ),
            WitnessTarget("f2", "lower21", "", -1.0, True),
            WitnessTarget(
                "f2", "upper32", "case2", (2.0 * lam + 1.0) / 6.0, lam <= 0.75 + tol
            ),
            WitnessTarget(
                "f3",
                "lower32",
                "case2",
                -math.sqrt(2.0 * lam + 1.0) / (2.0 * math.sqrt(2.0)),
                True,
            ),
        )
    if isinstance(params, Cgamma):
        cg = (1.0 - params.alpha) * math.cos(params.gamma)
        t = abs(params.tau)
        return (
            WitnessTarget("h1", "upper21", "", cg - 1.0, True),
            WitnessTarget(
                "h1", "lower32", "case1", -cg * (3.0 - t) / 3.0, t <= 0.5 + tol
            ),
            WitnessTarget("h2", "lower21", "", -1.0, True),
            WitnessTarget("h2", "upper32", "case2", cg / 3.0, True),
            WitnessTarget(
                "h3",
                "lower32",
                "case2",
                -cg / math.sqrt(t + 1.0),
                t >= 1.25 - tol,
            ),
            WitnessTarget(
                "h4",
                "lower32",
                "case3",
                -cg * (13.0 + 4.0 * t) / (12.0 * (t + 1.0)),
                0.5 - tol <= t <= 1.25 + tol,
            ),
        )
    raise TypeError(f"not a class parameter set: {type(params).__name__}")
