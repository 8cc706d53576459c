"""Three families of normalized analytic maps driven by a generator.

Each family couples a generator p (p(0) = 1, Re p > 0 on the disk) to a
normalized map f(z) = z + a2 z^2 + a3 z^3 + ... through the differential
relation ``z f''(z)/f'(z) = kappa (p(z) - 1)`` with a family-specific
coupling kappa:

* :class:`Gnu`   -- Re(1 + z f''/f') < 1 + nu/2,   kappa = -nu/2;
* :class:`F0`    -- Re(1 + z f''/f') > 1/2 - lambda, kappa = 1/2 + lambda;
* :class:`Cgamma`-- Re(e^{-i gamma}(1 + z f''/f')) > alpha cos(gamma),
  kappa = (1 - alpha) mu with mu = e^{i gamma} cos(gamma).

Comparing coefficients gives the closed maps a2 = kappa c1 / 2 and
a3 = (kappa^2 c1^2 + kappa c2)/6, and the local inverse
F(w) = w + A2 w^2 + A3 w^3 + ... of f satisfies A2 = -a2 and
A3 = 2 a2^2 - a3.  Every map here is implemented twice over: in closed
form and through the series pipeline, so the two routes can be checked
against each other.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .caratheodory import generator_eval, generator_series, p1, p2, p3, p4, pq, pt
from .series import DEFAULT_ORDER, Series, exp_series, integrate, revert

__all__ = [
    "Cgamma",
    "ClassParams",
    "CoeffPair",
    "F0",
    "Gnu",
    "InverseCoeffs",
    "build_function",
    "class_label",
    "class_margin",
    "coefficient_functional",
    "coeffs_from_c",
    "coupling",
    "inverse_coeffs",
    "witness",
    "witness_generator",
    "witness_ids",
]


@dataclass(frozen=True)
class Gnu:
    """Locally univalent maps with Re(1 + z f''/f') < 1 + nu/2, 0 < nu <= 1."""

    nu: float

    def __post_init__(self):
        nu = float(self.nu)
        if not 0.0 < nu <= 1.0:
            raise ValueError(f"nu out of range: expected 0 < nu <= 1, got {nu}")
        object.__setattr__(self, "nu", nu)


@dataclass(frozen=True)
class F0:
    """Maps with Re(1 + z f''/f') > 1/2 - lambda, 1/2 <= lambda <= 1.

    lambda = 1/2 is the convex class.
    """

    lam: float

    def __post_init__(self):
        lam = float(self.lam)
        if not 0.5 <= lam <= 1.0:
            raise ValueError(
                f"lambda out of range: expected 0.5 <= lambda <= 1, got {lam}"
            )
        object.__setattr__(self, "lam", lam)


@dataclass(frozen=True)
class Cgamma:
    """gamma-convex maps of order alpha: Re(e^{-i gamma}(1 + z f''/f')) > alpha cos(gamma).

    Requires |gamma| < pi/2 and 0 <= alpha < 1.  The derived quantities
    mu = e^{i gamma} cos(gamma) and tau = 4 (1 - alpha) mu - 1 (always
    |tau| <= 3) drive the bounds for this family.
    """

    gamma: float
    alpha: float

    def __post_init__(self):
        gamma = float(self.gamma)
        alpha = float(self.alpha)
        if not -math.pi / 2 < gamma < math.pi / 2:
            raise ValueError(
                f"gamma out of range: expected -pi/2 < gamma < pi/2, got {gamma}"
            )
        if not 0.0 <= alpha < 1.0:
            raise ValueError(
                f"alpha out of range: expected 0 <= alpha < 1, got {alpha}"
            )
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "alpha", alpha)

    @property
    def mu(self) -> complex:
        return cmath.exp(1j * self.gamma) * math.cos(self.gamma)

    @property
    def tau(self) -> complex:
        return 4.0 * (1.0 - self.alpha) * self.mu - 1.0


ClassParams = Gnu | F0 | Cgamma


def coupling(params: ClassParams) -> complex:
    """The coupling kappa in z f''/f' = kappa (p - 1)."""
    if isinstance(params, Gnu):
        return complex(-0.5 * params.nu)
    if isinstance(params, F0):
        return complex(0.5 + params.lam)
    if isinstance(params, Cgamma):
        return (1.0 - params.alpha) * params.mu
    raise TypeError(f"not a class parameter set: {type(params).__name__}")


def class_label(params: ClassParams) -> str:
    """Short report label: 'g', 'f0' or 'c'."""
    if isinstance(params, Gnu):
        return "g"
    if isinstance(params, F0):
        return "f0"
    if isinstance(params, Cgamma):
        return "c"
    raise TypeError(f"not a class parameter set: {type(params).__name__}")


def param_values(params: ClassParams) -> tuple[float, ...]:
    """The raw class parameters, in report order."""
    if isinstance(params, Gnu):
        return (params.nu,)
    if isinstance(params, F0):
        return (params.lam,)
    return (params.gamma, params.alpha)


# ----------------------------------------------------------------------
# coefficient maps


@dataclass(frozen=True)
class CoeffPair:
    """First two nontrivial Taylor coefficients of a normalized map."""

    a2: complex
    a3: complex


@dataclass(frozen=True)
class InverseCoeffs:
    """Initial coefficients of the local inverse F(w) = A1 w + A2 w^2 + A3 w^3."""

    A1: float
    A2: complex
    A3: complex

    def __post_init__(self):
        if self.A1 != 1.0:
            raise ValueError("normalized inverses have A1 = 1")


def coeffs_from_c(params: ClassParams, c1: complex, c2: complex) -> CoeffPair:
    """Closed-form (a2, a3) from the generator coefficients (c1, c2)."""
    kappa = coupling(params)
    a2 = 0.5 * kappa * c1
    a3 = (kappa * kappa * c1 * c1 + kappa * c2) / 6.0
    return CoeffPair(a2, a3)


def inverse_coeffs(cp: CoeffPair) -> InverseCoeffs:
    """A2 = -a2 and A3 = 2 a2^2 - a3."""
    return InverseCoeffs(1.0, -cp.a2, 2.0 * cp.a2 * cp.a2 - cp.a3)


def coefficient_functional(params: ClassParams, c1, c2, n: int):
    """|A_{n+1}| - |A_n| for n = 1 or 2, directly from (c1, c2).

    Accepts scalars or broadcastable numpy arrays; this is the quantity
    the brute-force search extremizes over the coefficient body.
    """
    kappa = coupling(params)
    a2 = 0.5 * kappa * np.asarray(c1, dtype=np.complex128)
    if n == 1:
        return np.abs(a2) - 1.0
    if n == 2:
        a3 = (kappa * kappa * np.asarray(c1) ** 2 + kappa * np.asarray(c2)) / 6.0
        return np.abs(2.0 * a2 * a2 - a3) - np.abs(a2)
    raise ValueError(f"n must be 1 or 2, got {n}")


# ----------------------------------------------------------------------
# building maps from generators


def build_function(params: ClassParams, p: Series) -> Series:
    """Integrate the defining relation for generator series ``p``.

    With q := kappa (p - 1) one has (log f')' = q(z)/z, so
    f' = exp(int q/t dt) and f = int f'.  Each antiderivative keeps the
    truncation order, so the result has order ``p.order - 1``; request the
    generator one order higher than the map you need.
    """
    if abs(p[0] - 1.0) > 1e-12:
        raise ValueError("generator series must have constant term 1")
    if p.order < 2:
        raise ValueError("generator series must have order >= 2")
    q = (p - 1.0) * coupling(params)
    q_over_z = Series(q.coeffs[1:])
    fprime = exp_series(integrate(q_over_z))
    return integrate(fprime)


# ----------------------------------------------------------------------
# extremal witnesses

_WITNESS_IDS = {
    "g": ("g1", "g2", "g3", "g4"),
    "f0": ("f1", "f2", "f3"),
    "c": ("h1", "h2", "h3", "h4"),
}


def witness_ids(params: ClassParams) -> tuple[str, ...]:
    """Witness labels valid for this family."""
    return _WITNESS_IDS[class_label(params)]


def witness_generator(params: ClassParams, wid: str):
    """The generator whose built map is the named extremal witness.

    g1/f1/h1 use the extreme point p1, g2/f2/h2 the even combination p2;
    the remaining witnesses use the named rational generators with the
    family-specific parameter values.
    """
    label = class_label(params)
    if wid not in _WITNESS_IDS[label]:
        raise ValueError(f"witness {wid!r} is not defined for class {label!r}")
    if wid in ("g1", "f1", "h1"):
        return p1()
    if wid in ("g2", "f2", "h2"):
        return p2()
    if wid == "g3":
        return p3(1.0 / math.sqrt(2.0 * (params.nu + 1.0)))
    if wid == "g4":
        return p4(3.0 / (4.0 * params.nu + 4.0))
    if wid == "f3":
        return pt(1.0 / math.sqrt(4.0 * params.lam + 2.0))
    # h3/h4: boundary generators steered by tau
    tau = params.tau
    q2 = cmath.exp(1j * cmath.phase(tau)) if tau != 0 else 1.0 + 0.0j
    if wid == "h3":
        return pq(1.0 / math.sqrt(abs(tau) + 1.0), q2)
    return pq(1.5 / (abs(tau) + 1.0), q2)


def witness(
    params: ClassParams, wid: str, order: int = DEFAULT_ORDER
) -> tuple[Series, Series]:
    """The witness map and its compositional inverse, both to ``order``."""
    gen = witness_generator(params, wid)
    f = build_function(params, generator_series(gen, order + 1))
    return f, revert(f)


# ----------------------------------------------------------------------
# membership check


def class_margin(params: ClassParams, gen, radius: float = 0.95, n_points: int = 360):
    """Margin of the defining inequality on the circle |z| = radius.

    The built map satisfies 1 + z f''/f' = 1 + kappa (p - 1) identically,
    so the margin is evaluated through the exact generator values rather
    than a truncated jet (whose tail would swamp the inequality near the
    boundary).  All margins reduce to a positive multiple of Re p, so
    they must come out positive up to rounding.
    """
    z = radius * np.exp(2j * math.pi * np.arange(n_points) / n_points)
    w = 1.0 + coupling(params) * (generator_eval(gen, z) - 1.0)
    if isinstance(params, Gnu):
        return (1.0 + 0.5 * params.nu) - w.real
    if isinstance(params, F0):
        return w.real - (0.5 - params.lam)
    if isinstance(params, Cgamma):
        return (np.exp(-1j * params.gamma) * w).real - params.alpha * math.cos(
            params.gamma
        )
    raise TypeError(f"not a class parameter set: {type(params).__name__}")
