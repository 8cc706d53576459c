"""Generators with positive real part and their coefficient body.

A generator is an analytic function p on the unit disk with p(0) = 1 and
Re p > 0.  Two finite encodings are provided:

* :class:`HerglotzSpec` -- a convex combination of the extreme points
  (1 + e z)/(1 - e z) with |e| = 1, i.e. an atomic measure on the circle;
* :class:`RationalGenerator` -- the handful of named quadratic-rational
  generators used as extremal inputs by :mod:`uil.classes`.

The first two Taylor coefficients (c1, c2) of a generator range over a
body that, after rotating c1 onto [0, 2], is the chart
``c2 = c1^2/2 + (4 - c1^2) zeta / 2`` with zeta in the closed unit disk.
:class:`BodyPoint` carries that chart and :func:`realize_body_point`
produces an atomic measure hitting any chart point.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .series import Series

__all__ = [
    "BodyPoint",
    "DegenerateRealizationError",
    "HerglotzSpec",
    "RationalGenerator",
    "body_to_coeffs",
    "generator_eval",
    "generator_series",
    "herglotz_eval",
    "herglotz_series",
    "named_eval",
    "named_series",
    "p1",
    "p2",
    "p3",
    "p4",
    "pq",
    "pt",
    "realize_body_point",
    "sample_spec",
]

_ATOL = 1e-12


class DegenerateRealizationError(ValueError):
    """A coefficient pair could not be realized by a stable atomic measure."""


@dataclass(frozen=True)
class HerglotzSpec:
    """Finite atomic measure on the unit circle, as (weight, point) pairs.

    Generates p(z) = sum_k w_k (1 + e_k z)/(1 - e_k z), which is analytic
    on the disk with p(0) = 1 and Re p > 0; its coefficients are
    c_n = 2 sum_k w_k e_k^n, so |c_n| <= 2 automatically.
    """

    atoms: tuple[tuple[float, complex], ...]

    def __post_init__(self):
        atoms = tuple((float(w), complex(e)) for w, e in self.atoms)
        if not atoms:
            raise ValueError("a Herglotz spec needs at least one atom")
        weights = [w for w, _ in atoms]
        if min(weights) < 0.0:
            raise ValueError("atom weights must be nonnegative")
        if abs(sum(weights) - 1.0) > _ATOL:
            raise ValueError("atom weights must sum to 1")
        for _, e in atoms:
            if abs(abs(e) - 1.0) > _ATOL:
                raise ValueError("atom points must lie on the unit circle")
        object.__setattr__(self, "atoms", atoms)

    @property
    def weights(self) -> np.ndarray:
        return np.array([w for w, _ in self.atoms])

    @property
    def points(self) -> np.ndarray:
        return np.array([e for _, e in self.atoms], dtype=np.complex128)


def herglotz_series(spec: HerglotzSpec, order: int) -> Series:
    """Taylor coefficients of the generator of ``spec`` up to ``order``."""
    w = spec.weights
    e = spec.points
    c = np.empty(order + 1, dtype=np.complex128)
    c[0] = 1.0
    if order:
        powers = e[None, :] ** np.arange(1, order + 1)[:, None]
        c[1:] = 2.0 * (powers @ w)
    return Series(c)


def herglotz_eval(spec: HerglotzSpec, z):
    """Evaluate the generator of ``spec`` exactly at points ``z``."""
    z = np.asarray(z, dtype=np.complex128)
    out = np.zeros(z.shape, dtype=np.complex128)
    for w, e in spec.atoms:
        out += w * (1.0 + e * z) / (1.0 - e * z)
    return out if out.shape else complex(out[()])


def sample_spec(rng: np.random.Generator, n_atoms: int = 3) -> HerglotzSpec:
    """Random atomic generator: Dirichlet weights, uniform circle points."""
    w = rng.dirichlet(np.ones(n_atoms))
    ang = rng.uniform(0.0, 2.0 * math.pi, n_atoms)
    return HerglotzSpec(
        tuple((float(wi), cmath.exp(1j * a)) for wi, a in zip(w, ang))
    )


# ----------------------------------------------------------------------
# named rational generators


@dataclass(frozen=True)
class RationalGenerator:
    """Generator p = num/den with quadratic numerator and denominator."""

    id: str
    num: tuple[complex, complex, complex]
    den: tuple[complex, complex, complex]
    params: tuple[complex, ...] = field(default=())


def _check_unit(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 < value <= 1.0:
        raise ValueError(f"{name} out of range: expected 0 < {name} <= 1, got {value}")
    return value


def p1() -> RationalGenerator:
    """(1 + z)/(1 - z): the extreme point with c_n = 2 for all n."""
    return RationalGenerator("p1", (1, 1, 0), (1, -1, 0))


def p2() -> RationalGenerator:
    """(1 + z^2)/(1 - z^2): even extreme combination, c1 = 0, c2 = 2."""
    return RationalGenerator("p2", (1, 0, 1), (1, 0, -1))


def p3(s: float) -> RationalGenerator:
    """(1 - z^2)/(1 - 2 s z + z^2) with s in (0, 1]: c1 = 2s, c2 = 4s^2 - 2."""
    s = _check_unit("s", s)
    return RationalGenerator("p3", (1, 0, -1), (1, -2.0 * s, 1), (s,))


def p4(r: float) -> RationalGenerator:
    """Same rational family as p3 but tagged separately, parameter r."""
    r = _check_unit("r", r)
    return RationalGenerator("p4", (1, 0, -1), (1, -2.0 * r, 1), (r,))


def pt(t: float) -> RationalGenerator:
    """(1 + 2 t z + z^2)/(1 - z^2) with t in (0, 1]: c1 = 2t, c2 = 2."""
    t = _check_unit("t", t)
    return RationalGenerator("pt", (1, 2.0 * t, 1), (1, 0, -1), (t,))


def pq(q1: float, q2: complex) -> RationalGenerator:
    """Two-atom boundary generator with c1 = 2 q1 and zeta = q2.

    p = (1 + q1 (q2 + 1) z + q2 z^2) / (1 + q1 (q2 - 1) z - q2 z^2) for
    q1 in (0, 1] and |q2| = 1; its first coefficients are c1 = 2 q1 and
    c2 = 2 q1^2 + 2 (1 - q1^2) q2.
    """
    q1 = _check_unit("q1", q1)
    q2 = complex(q2)
    if abs(abs(q2) - 1.0) > _ATOL:
        raise ValueError(f"q2 out of range: expected |q2| = 1, got |q2| = {abs(q2)}")
    return RationalGenerator(
        "pq",
        (1, q1 * (q2 + 1.0), q2),
        (1, q1 * (q2 - 1.0), -q2),
        (q1, q2),
    )


def named_series(gen: RationalGenerator, order: int) -> Series:
    """Expand a named rational generator to the requested order."""
    num = Series(gen.num, order=order)
    den = Series(gen.den, order=order)
    return num / den


def named_eval(gen: RationalGenerator, z):
    """Evaluate a named rational generator exactly at points ``z``."""
    z = np.asarray(z, dtype=np.complex128)
    n0, n1, n2 = gen.num
    d0, d1, d2 = gen.den
    out = (n0 + z * (n1 + z * n2)) / (d0 + z * (d1 + z * d2))
    return out if out.shape else complex(out[()])


def generator_series(gen, order: int) -> Series:
    """Series expansion for either generator encoding."""
    if isinstance(gen, HerglotzSpec):
        return herglotz_series(gen, order)
    if isinstance(gen, RationalGenerator):
        return named_series(gen, order)
    raise TypeError(f"not a generator: {type(gen).__name__}")


def generator_eval(gen, z):
    """Exact pointwise evaluation for either generator encoding."""
    if isinstance(gen, HerglotzSpec):
        return herglotz_eval(gen, z)
    if isinstance(gen, RationalGenerator):
        return named_eval(gen, z)
    raise TypeError(f"not a generator: {type(gen).__name__}")


# ----------------------------------------------------------------------
# the (c1, zeta) chart of the coefficient body


@dataclass(frozen=True)
class BodyPoint:
    """Chart point for the first two generator coefficients.

    ``c1`` is taken real in [0, 2] (the target functionals are rotation
    invariant) and ``zeta`` ranges over the closed unit disk;
    ``c2 = c1^2/2 + (4 - c1^2) zeta / 2``.
    """

    c1: float
    zeta: complex

    def __post_init__(self):
        c1 = float(self.c1)
        zeta = complex(self.zeta)
        if not -_ATOL <= c1 <= 2.0 + _ATOL:
            raise ValueError(f"c1 out of range: expected 0 <= c1 <= 2, got {c1}")
        if abs(zeta) > 1.0 + _ATOL:
            raise ValueError(f"zeta out of range: expected |zeta| <= 1, got {abs(zeta)}")
        object.__setattr__(self, "c1", min(max(c1, 0.0), 2.0))
        object.__setattr__(self, "zeta", zeta)


def body_to_coeffs(b: BodyPoint) -> tuple[float, complex]:
    """The coefficient pair (c1, c2) of a chart point."""
    c2 = 0.5 * b.c1 * b.c1 + 0.5 * (4.0 - b.c1 * b.c1) * b.zeta
    return b.c1, c2


def _extreme_pair(m1: float, z0: complex) -> tuple[tuple[float, complex], ...]:
    """Two-atom measure realizing the boundary chart point (2*m1, z0).

    The generator of such a point is (1 + z psi)/(1 - z psi) with psi the
    disk automorphism having psi(0) = m1 and psi'(0) = (1 - m1^2) z0; its
    poles are the roots of z0 z^2 + m1 (1 - z0) z - 1 = 0 and the atoms
    sit at the conjugate points.
    """
    bq = m1 * (1.0 - z0)
    disc = cmath.sqrt(bq * bq + 4.0 * z0)
    r1 = (-bq + disc) / (2.0 * z0)
    r2 = (-bq - disc) / (2.0 * z0)
    e1 = r1.conjugate()
    e2 = r2.conjugate()
    if abs(e1 - e2) < 1e-9:
        raise DegenerateRealizationError("degenerate realization")
    w1 = (m1 - e2) / (e1 - e2)
    if abs(w1.imag) > 1e-9 or not -1e-9 <= w1.real <= 1.0 + 1e-9:
        raise DegenerateRealizationError("degenerate realization")
    w = min(max(w1.real, 0.0), 1.0)
    return ((w, e1 / abs(e1)), (1.0 - w, e2 / abs(e2)))


def realize_body_point(b: BodyPoint) -> HerglotzSpec:
    """Atomic measure whose generator has the coefficients of ``b``.

    Boundary chart points (|zeta| = 1) take two atoms; interior points are
    mixed from the two boundary points +/- zeta/|zeta| on the chord
    through zeta, which costs four atoms but stays in closed form.  The
    result is validated by a coefficient round-trip at 1e-10; failures
    raise :class:`DegenerateRealizationError` (perturbing zeta inward by
    ~1e-12 is the usual remedy).
    """
    m1 = 0.5 * b.c1
    if b.c1 >= 2.0 - _ATOL:
        return HerglotzSpec(((1.0, 1.0 + 0.0j),))
    rho = abs(b.zeta)
    phi = cmath.phase(b.zeta) if rho > 0.0 else 0.0
    z0 = cmath.exp(1j * phi)
    if rho >= 1.0 - _ATOL:
        atoms = _extreme_pair(m1, z0)
    else:
        wa = 0.5 * (1.0 + rho)
        wb = 0.5 * (1.0 - rho)
        atoms = tuple((wa * w, e) for w, e in _extreme_pair(m1, z0)) + tuple(
            (wb * w, e) for w, e in _extreme_pair(m1, -z0)
        )
    spec = HerglotzSpec(atoms)
    c1_target, c2_target = body_to_coeffs(b)
    c1_got = 2.0 * sum(w * e for w, e in atoms)
    c2_got = 2.0 * sum(w * e * e for w, e in atoms)
    if abs(c1_got - c1_target) > 1e-10 or abs(c2_got - c2_target) > 1e-10:
        raise DegenerateRealizationError("degenerate realization")
    return spec
