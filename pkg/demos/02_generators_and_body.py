"""Positive-real-part generators and their coefficient body.

A generator p has p(0) = 1 and Re p > 0 on the unit disk; its Taylor
coefficients satisfy |c_n| <= 2.  After a rotation the first two
coefficients live on the chart c1 in [0, 2], c2 = c1^2/2 + (4-c1^2)/2 *
zeta with |zeta| <= 1, and every chart point is realized by a small
atomic measure on the circle.
"""

import numpy as np

from uil import (
    BodyPoint,
    HerglotzSpec,
    body_to_coeffs,
    herglotz_eval,
    herglotz_series,
    named_series,
    p1,
    p2,
    p3,
    pq,
    pt,
    realize_body_point,
)

print("== atomic measures ==")
for label, spec in [
    ("single atom at 1", HerglotzSpec(((1.0, 1.0),))),
    ("half atoms at +/-1", HerglotzSpec(((0.5, 1.0), (0.5, -1.0)))),
    ("half atoms at +/-i", HerglotzSpec(((0.5, 1j), (0.5, -1j)))),
]:
    c = herglotz_series(spec, 4).coeffs
    print(f"{label:<22} c = {np.array2string(c.real, precision=4)}")

print()
print("== named rational generators ==")
for gen in (p1(), p2(), p3(0.5), pt(0.5), pq(0.5, 1.0)):
    c = named_series(gen, 3).coeffs
    print(f"{gen.id:<4} params {gen.params!r:<22} c1 = {c[1]:.4g}  c2 = {c[2]:.4g}")

print()
print("== realizing chart points ==")
for c1, zeta in [(1.0, -1.0), (0.7, 0.3 + 0.2j), (0.0, 1.0)]:
    b = BodyPoint(c1, zeta)
    spec = realize_body_point(b)
    _, c2 = body_to_coeffs(b)
    got1 = 2 * sum(w * e for w, e in spec.atoms)
    got2 = 2 * sum(w * e * e for w, e in spec.atoms)
    print(
        f"(c1, zeta) = ({c1}, {zeta}): {len(spec.atoms)} atoms, "
        f"round-trip error {max(abs(got1 - c1), abs(got2 - c2)):.2e}"
    )

print()
print("== positivity on a circle near the boundary ==")
z = 0.99 * np.exp(2j * np.pi * np.arange(360) / 360)
spec = realize_body_point(BodyPoint(1.3, 0.42 - 0.5j))
print("min Re p on |z| = 0.99:", float(np.min(herglotz_eval(spec, z).real)))
