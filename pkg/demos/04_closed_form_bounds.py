"""The closed-form sharp bounds and their branch structure.

|A3| - |A2| reduces to a scaled quadratic functional of (c1, c2) whose
maximum over the body has a piecewise envelope; the branch switches are
visible as breakpoints in the parameter sweeps below.
"""

import numpy as np

from uil import Cgamma, F0, Gnu, theorem_bounds

print("== the bound table at a few parameter points ==")
for params in (Gnu(1.0), Gnu(1 / 16), F0(0.5), F0(1.0), Cgamma(0.0, 0.0), Cgamma(0.0, 0.75)):
    rep = theorem_bounds(params)
    print(params)
    for name, value, case, breakpoint, wids in rep.bound_items():
        tag = f" [{case}{'+breakpoint' if breakpoint else ''}]" if case else ""
        print(f"  {name}: {value:+.9f}  witnesses {','.join(wids)}{tag}")

print()
print("== branch switch of the upper bound over lambda ==")
for lam in np.linspace(0.5, 1.0, 11):
    rep = theorem_bounds(F0(lam))
    star = "  <- breakpoint" if rep.upper32_breakpoint else ""
    print(
        f"lambda = {lam:4.2f}  upper32 = {rep.upper32:.6f} "
        f"({rep.upper32_case}, {','.join(rep.w_upper32)}){star}"
    )

print()
print("== lower-bound branches over |tau| for the rotated family ==")
for alpha in (0.0, 0.4, 0.55, 0.625, 0.75):
    params = Cgamma(0.0, alpha)
    rep = theorem_bounds(params)
    print(
        f"alpha = {alpha:5.3f}  |tau| = {abs(params.tau):.4f}  "
        f"lower32 = {rep.lower32:+.6f} ({rep.lower32_case}, {','.join(rep.w_lower32)})"
    )
print()
print("Near |tau| = 0 the first envelope case governs and the extreme-point")
print("witness h1 is the minimizer; the middle display would be weaker there.")
