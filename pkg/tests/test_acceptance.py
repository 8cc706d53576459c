"""Acceptance suite: every criterion at its stated tolerance.

Each test prints one ``ACCEPTANCE n ...: PASS/FAIL`` line (visible under
``pytest -s``) and then asserts.  Criteria 2 and 3 run the brute-force
machinery at the default 401 x 201 x 360 grid.
"""

import math
import time

import numpy as np

from uil.bounds import (
    lemma_input,
    psi_minus_bound,
    psi_plus_bound,
    theorem_bounds,
)
from uil.caratheodory import sample_spec
from uil.classes import Cgamma, F0, Gnu, class_margin
from uil.search import (
    GridSpec,
    brute_force_extremum,
    full_verify,
    lemma_oracle,
    witness_check,
)
from uil.series import Series, revert

DEFAULT_GRID = GridSpec()


def _report(num: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {num} ({name}): {status}" + (f" [{detail}]" if detail else ""))
    assert ok, f"criterion {num} ({name}) failed: {detail}"


# ----------------------------------------------------------------------


def test_criterion_1_inverse_coefficient_identity():
    rng = np.random.default_rng(12345)
    start = time.perf_counter()
    worst = 0.0
    for _ in range(1000):
        tail = rng.uniform(-10, 10, (7, 2)) @ np.array([1.0, 1.0j])
        f = Series(np.concatenate(([0.0, 1.0], tail)))
        g = revert(f)
        a2, a3 = f[2], f[3]
        worst = max(worst, abs(g[2] + a2), abs(g[3] - (2 * a2 * a2 - a3)))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-12 and elapsed < 5.0
    _report(
        1,
        "inverse-coefficient identity",
        ok,
        f"worst gap {worst:.2e}, {elapsed:.2f}s",
    )


def test_criterion_2_lemma_oracle_equivalence():
    families = []
    for nu in np.linspace(1e-6, 1.0, 50):
        families.append(lemma_input(Gnu(nu)))
    for lam in np.linspace(0.5, 1.0, 50):
        families.append(lemma_input(F0(lam)))
    for gamma in np.linspace(-1.3, 1.3, 10):
        for alpha in np.linspace(0.0, 0.9, 5):
            families.append(lemma_input(Cgamma(gamma, alpha)))
    assert len(families) == 150

    start = time.perf_counter()
    worst_gap = 0.0
    worst_exceed = -np.inf
    for li in families:
        max_plus, max_minus = lemma_oracle(li, DEFAULT_GRID)
        plus, _ = psi_plus_bound(li)
        minus, _ = psi_minus_bound(li)
        worst_gap = max(worst_gap, abs(max_plus - plus), abs(max_minus - minus))
        worst_exceed = max(worst_exceed, max_plus - plus, max_minus - minus)
    elapsed = time.perf_counter() - start
    ok = worst_gap <= 1e-5 and worst_exceed <= 1e-9 and elapsed < 120.0
    _report(
        2,
        "envelope oracle equivalence",
        ok,
        f"worst gap {worst_gap:.2e}, worst exceed {worst_exceed:.2e}, {elapsed:.1f}s",
    )


def test_criterion_3_named_point_tables():
    sq2 = math.sqrt(2.0)
    named = {
        Gnu(1.0): {"upper32": 1 / 6, "lower32": -0.25},
        Gnu(1 / 16): {"lower32": -(1 / 16) * 17.5 / (48 * 17 / 16)},
        F0(0.5): {"upper32": 1 / 3, "lower32": -0.5},
        F0(1.0): {"upper32": 1.0, "lower32": -math.sqrt(3) / (2 * sq2)},
        Cgamma(0.0, 0.0): {"upper32": 1 / 3, "lower32": -0.5, "upper21": 0.0},
    }
    failures = []
    for params, values in named.items():
        rep = theorem_bounds(params)
        values = dict(values, lower21=-1.0)
        for bound, want in values.items():
            got = getattr(rep, bound)
            if abs(got - want) > 1e-9:
                failures.append(f"{params} {bound}: closed {got} != {want}")
        verified = full_verify(params, DEFAULT_GRID)
        for row in verified.rows:
            if row.bound in values and not row.passed:
                failures.append(f"{params} {row.bound}: {row}")
            if row.gap_witness is not None and row.bound in values:
                if row.gap_witness > 1e-9 or (
                    row.gap_search is not None and row.gap_search > 1e-4
                ):
                    failures.append(f"{params} {row.bound}: gaps {row}")
    _report(3, "named-point theorem tables", not failures, "; ".join(failures[:3]))


def test_criterion_4_breakpoint_continuity():
    nu = 0.125
    g_gap = abs(
        -nu / (2 * math.sqrt(2 * (nu + 1)))
        - (-nu * (8 * nu + 17) / (48 * (nu + 1)))
    )
    lam = 0.75
    f_gap = abs((2 * lam + 1) / 6 - (2 * lam + 1) * (2 * lam - 1) / 3)
    params = Cgamma(math.acos(3.0 / (8.0 * math.sqrt(2))), 0.0)  # |tau| = 5/4
    t = abs(params.tau)
    cg = math.cos(params.gamma)
    c_gap = abs(-cg / math.sqrt(t + 1) - (-cg * (13 + 4 * t) / (12 * (t + 1))))
    tau_gap = abs(t - 1.25)
    ok = g_gap <= 1e-12 and f_gap <= 1e-12 and c_gap <= 1e-12 and tau_gap <= 1e-12
    _report(
        4,
        "branch continuity at breakpoints",
        ok,
        f"gaps {g_gap:.2e}, {f_gap:.2e}, {c_gap:.2e}",
    )


def test_criterion_5_witness_attainment():
    stations = [
        (Gnu(1.0), ("g1", "g2", "g3")),
        (Gnu(0.125), ("g3", "g4")),
        (Gnu(1 / 16), ("g4",)),
        (F0(0.6), ("f1", "f2", "f3")),
        (F0(0.75), ("f1", "f2")),
        (F0(1.0), ("f1", "f3")),
        (Cgamma(0.0, 0.0), ("h1", "h2", "h3")),
        (Cgamma(math.pi / 4, 0.0), ("h3",)),
        (Cgamma(0.2, 0.5), ("h4",)),
        (Cgamma(0.0, 0.75), ("h1",)),
    ]
    failures = []
    covered = set()
    for params, wids in stations:
        for wid in wids:
            covered.add(wid)
            for row in witness_check(params, wid):
                if not row.passed:
                    failures.append(f"{params} {wid} {row.bound}: gap {row.gap_witness}")
    assert covered == {"g1", "g2", "g3", "g4", "f1", "f2", "f3", "h1", "h2", "h3", "h4"}
    _report(5, "witness attainment", not failures, "; ".join(failures[:3]))


def test_criterion_6_class_coincidence():
    rep_f = theorem_bounds(F0(0.5))
    rep_c = theorem_bounds(Cgamma(0.0, 0.0))
    bound_gap = max(
        abs(getattr(rep_f, name) - getattr(rep_c, name))
        for name in ("lower21", "upper21", "lower32", "upper32")
    )
    search_gap = 0.0
    for n in (1, 2):
        a = brute_force_extremum(F0(0.5), n, DEFAULT_GRID)
        b = brute_force_extremum(Cgamma(0.0, 0.0), n, DEFAULT_GRID)
        search_gap = max(
            search_gap, abs(a.minimum - b.minimum), abs(a.maximum - b.maximum)
        )
    ok = bound_gap <= 1e-12 and search_gap <= 1e-6
    _report(
        6,
        "convex-class coincidence",
        ok,
        f"bound gap {bound_gap:.2e}, search gap {search_gap:.2e}",
    )


def test_criterion_7_membership_smoke():
    rng = np.random.default_rng(99)
    stations = {
        "g": [Gnu(v) for v in (0.05, 0.3, 0.5, 0.8, 1.0)],
        "f0": [F0(v) for v in (0.5, 0.6, 0.75, 0.9, 1.0)],
        "c": [
            Cgamma(0.0, 0.0),
            Cgamma(0.9, 0.1),
            Cgamma(-1.2, 0.4),
            Cgamma(0.4, 0.75),
            Cgamma(1.4, 0.9),
        ],
    }
    worst = np.inf
    for family in stations.values():
        for params in family:
            for _ in range(20):
                spec = sample_spec(rng, n_atoms=int(rng.integers(1, 5)))
                worst = min(
                    worst, float(np.min(class_margin(params, spec, 0.95, 360)))
                )
    ok = worst > -1e-9
    _report(7, "boundary membership margins", ok, f"worst margin {worst:.3e}")


def test_criterion_8_typo_regressions():
    nu = 0.7
    rep = theorem_bounds(Gnu(nu))
    closed_ok = abs(rep.upper21 - (nu - 2) / 2) <= 1e-15
    s = brute_force_extremum(Gnu(nu), 1, DEFAULT_GRID)
    search_ok = abs(s.maximum - (nu - 2) / 2) <= 1e-4

    convex_closed = theorem_bounds(F0(0.5)).lower32
    convex_ok = abs(convex_closed - (-0.5)) <= 1e-15
    s2 = brute_force_extremum(F0(0.5), 2, DEFAULT_GRID)
    convex_search_ok = abs(s2.minimum - (-0.5)) <= 1e-4 and s2.minimum < 0

    ok = closed_ok and search_ok and convex_ok and convex_search_ok
    _report(
        8,
        "sign/symbol regressions re-derived by search",
        ok,
        f"upper21 search gap {abs(s.maximum - (nu - 2) / 2):.2e}, "
        f"convex lower32 search {s2.minimum:.6f}",
    )
