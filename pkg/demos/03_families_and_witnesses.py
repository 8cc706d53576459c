"""Building maps from generators and evaluating their inverse coefficients.

Each family couples a generator p to a normalized map f through
z f''/f' = kappa (p - 1).  The quadratic and cubic coefficients follow
closed maps of (c1, c2), and the extremal witnesses are just
distinguished generator choices.
"""

import numpy as np

from uil import (
    Cgamma,
    F0,
    Gnu,
    HerglotzSpec,
    build_function,
    class_margin,
    coeffs_from_c,
    herglotz_series,
    inverse_coeffs,
    revert,
    witness,
    witness_generator,
    witness_ids,
)

params = F0(0.75)
spec = HerglotzSpec(((0.6, 1.0), (0.4, np.exp(0.9j)),))
p = herglotz_series(spec, 9)

print("== series route vs closed maps ==")
f = build_function(params, p)
finv = revert(f)
cp = coeffs_from_c(params, p[1], p[2])
ic = inverse_coeffs(cp)
print("a2:", f[2], "closed:", cp.a2)
print("a3:", f[3], "closed:", cp.a3)
print("A2:", finv[2], "closed:", ic.A2)
print("A3:", finv[3], "closed:", ic.A3)

print()
print("== membership margin on |z| = 0.95 ==")
print("min margin:", float(np.min(class_margin(params, spec))))

print()
print("== witnesses ==")
for family in (Gnu(1.0), F0(0.75), Cgamma(0.4, 0.2)):
    print(family)
    for wid in witness_ids(family):
        try:
            gen = witness_generator(family, wid)
        except ValueError as exc:
            print(f"  {wid}: not available here ({exc})")
            continue
        fw, fwinv = witness(family, wid)
        print(
            f"  {wid}: generator {getattr(gen, 'id', '?'):<3} "
            f"|A2| = {abs(fwinv[2]):.6f}  |A3| = {abs(fwinv[3]):.6f}"
        )
