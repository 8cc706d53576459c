"""Independent verification: grid search vs closed forms vs witnesses.

The searches below use a reduced grid so the demo runs in seconds; the
default 401 x 201 x 360 grid is what the acceptance suite uses.
"""

from uil import (
    F0,
    GridSpec,
    Gnu,
    brute_force_extremum,
    full_verify,
    lemma_input,
    lemma_oracle,
    psi_minus_bound,
    psi_plus_bound,
    theorem_bounds,
)

grid = GridSpec(121, 61, 120)

print("== envelope oracle ==")
li = lemma_input(Gnu(1.0))
max_plus, max_minus = lemma_oracle(li, grid)
print("Psi+ grid max:", max_plus, " closed:", psi_plus_bound(li))
print("Psi- grid max:", max_minus, " closed:", psi_minus_bound(li))

print()
print("== functional extrema vs theorem table ==")
for params in (Gnu(1.0), F0(0.5)):
    rep = theorem_bounds(params)
    s = brute_force_extremum(params, 2, grid)
    print(params)
    print(f"  searched min {s.minimum:+.8f}  closed {rep.lower32:+.8f}")
    print(f"  searched max {s.maximum:+.8f}  closed {rep.upper32:+.8f}")
    print(f"  argmin {s.argmin}")

print()
print("== full report at the branch breakpoint nu = 1/8 ==")
report = full_verify(Gnu(0.125), grid, seed=1)
for row in report.rows:
    mark = " breakpoint" if row.breakpoint else ""
    gaps = f"gap {row.gap:.2e}" if row.gap is not None else ""
    print(
        f"  {row.bound:<8} closed {row.closed_form:+.8f} "
        f"{'pass' if row.passed else 'FAIL'} {gaps}{mark}"
    )
print("overall:", "PASS" if report.passed else "FAIL")
