"""Truncated power series and compositional inversion.

All later computations ride on this little series engine: complex
coefficient vectors with arithmetic, composition, elementary functions,
calculus and reversion, everything exact modulo z^(N+1).
"""

import numpy as np

from uil import Series, compose, integrate, pow_series, revert


def show(label, series):
    print(f"{label:<26} {np.array2string(series.coeffs.real, precision=6)}")


print("== arithmetic ==")
geom = Series([1, 1, 0, 0]) / Series([1, -1, 0, 0])
show("(1+z)/(1-z)", geom)  # the extreme generator: 1, 2, 2, 2

print()
print("== composition ==")
show("geom(z^2)", compose(geom, Series([0, 0, 1], order=3)))

print()
print("== calculus ==")
half = pow_series(Series([1, 0, -1], order=5), 0.5)
show("sqrt(1-z^2)", half)
show("integral", integrate(half))  # odd map z - z^3/6 - ...

print()
print("== reversion ==")
f = Series([0, 1, 2, 3])
g = revert(f)
show("f", f)
show("f^-1", g)
print()
print("The first inverse coefficients follow the closed identity")
print("  A2 = -a2          ->", g[2].real, "=", -f[2].real)
print("  A3 = 2 a2^2 - a3  ->", g[3].real, "=", (2 * f[2] ** 2 - f[3]).real)
print()
print("round trip f(f^-1(w)) =", np.array2string(compose(f, g).coeffs.real, precision=6))
