"""Self-check suite: every advertised number, checked at its stated tolerance.

Each criterion returns a CriterionResult; ``run_all`` executes the whole
battery.  The CLI ``selfcheck`` subcommand prints one line per criterion and
the test suite asserts each one, so a numerics regression shows up in both
places.
"""

import math
import time
from dataclasses import dataclass

import numpy as np

from . import demon, entropy, numerics, szilard

LN2 = math.log(2.0)

# Momentum entropies of the L=2 box ground state and of its left-half
# truncation, and the entropy cost of the truncation.  Computed offline from
# the closed-form momentum densities by high-resolution quadrature with tail
# corrections (independent of the FFT pipeline); the test suite recomputes
# them from scratch.  The grid pipeline at n = 4096 lands within
# GRID_ORACLE_TOL of the truncated value (truncation tails fall off the
# momentum grid).
BOX_GROUND_HP_ORACLE = 1.825743727
BOX_TRUNC_HP_ORACLE = 2.900016553
BOX_DELTA_S_ORACLE = 1.074272826
GRID_ORACLE_TOL = 0.03

SELFCHECK_SEED = 20250809


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    runtime_s: float


def _result(number, name, start, checks):
    elapsed = time.perf_counter() - start
    failed = [msg for ok, msg in checks if not ok]
    detail = "; ".join(failed) if failed else f"{len(checks)} checks, {elapsed * 1e3:.1f} ms"
    return CriterionResult(number, name, not failed, detail, elapsed)


def criterion_1():
    """Analytic partition cost is k ln 2 to 1e-12 relative, in under 1 ms."""
    start = time.perf_counter()
    checks = []
    for L in (0.1, 1.0, 2.0, 1000.0):
        ev = szilard.analytic_partition_event(L, k=1.0)
        rel = abs(ev.delta_s - LN2) / LN2
        checks.append((rel < 1e-12, f"L={L}: relative error {rel:.2e} >= 1e-12"))
    elapsed = time.perf_counter() - start
    checks.append((elapsed < 1e-3, f"runtime {elapsed * 1e3:.3f} ms >= 1 ms"))
    return _result(1, "analytic partition cost equals k ln 2", start, checks)


def criterion_2():
    """Grid entropy of Gaussians matches (1/2) ln(2 pi e sigma^2) within 1e-3."""
    start = time.perf_counter()
    checks = []
    for sigma in np.linspace(0.1, 4.0, 27):
        grid = numerics.Grid(4096, -10.0 * sigma, 10.0 * sigma)
        wf = numerics.make_gaussian(grid, 0.0, sigma)
        h = entropy.differential_entropy(numerics.position_density(wf))
        ref = entropy.gaussian_entropy(sigma)
        checks.append(
            (abs(h - ref) < 1e-3, f"sigma={sigma:.3f}: |{h:.6f} - {ref:.6f}| >= 1e-3")
        )
    elapsed = time.perf_counter() - start
    checks.append((elapsed < 1.0, f"runtime {elapsed:.2f} s >= 1 s"))
    return _result(2, "grid Gaussian entropy matches the closed form", start, checks)


def _state_corpus():
    """(label, WaveFunction) pairs covering every advertised state family."""
    states = []
    grid = numerics.Grid(4096, -8.0, 8.0)
    box = numerics.centered_box(2.0)
    for sigma in (0.25, 0.5, 1.0):
        states.append((f"gaussian s={sigma}", numerics.make_gaussian(grid, 0.0, sigma)))
    wide = numerics.Grid(4096, -16.0, 16.0)
    states.append(("gaussian s=2", numerics.make_gaussian(wide, 0.0, 2.0)))
    for q in range(1, 9):
        states.append((f"eigenstate q={q}", numerics.make_box_eigenstate(grid, box, q)))
    for side in ("left", "right"):
        trunc = numerics.project_half(numerics.make_gaussian(grid, 0.0, 1.0 / 3.0), box, side)
        states.append((f"truncated gaussian {side}", trunc))
    for p0 in (1.0, 2.0, 5.0):
        states.append(
            (f"modulated gaussian p0={p0}", numerics.make_gaussian(grid, 0.0, 1.0, momentum=p0))
        )
    return states


def criterion_3():
    """Every corpus state satisfies the uncertainty sum; Gaussians saturate ln(pi e)."""
    start = time.perf_counter()
    checks = []
    for label, wf in _state_corpus():
        rep = entropy.eur_report(wf)
        checks.append(
            (
                rep.eur_sum >= entropy.EUR_BOUND_LEIPNIK - 1e-9,
                f"{label}: sum {rep.eur_sum:.6f} below ln(e/2)",
            )
        )
        if label.startswith("gaussian") or label.startswith("modulated"):
            checks.append(
                (
                    abs(rep.eur_sum - entropy.EUR_BOUND_SHARP) <= 0.002,
                    f"{label}: sum {rep.eur_sum:.6f} != ln(pi e) +- 0.002",
                )
            )
    elapsed = time.perf_counter() - start
    checks.append((elapsed < 5.0, f"runtime {elapsed:.2f} s >= 5 s"))
    return _result(3, "uncertainty sums hold across the state corpus", start, checks)


def criterion_4():
    """Numeric localization of the box ground state costs at least k ln 2."""
    start = time.perf_counter()
    grid = numerics.Grid(4096, -8.0, 8.0)
    box = numerics.centered_box(2.0)
    wf = numerics.make_box_eigenstate(grid, box, 1)
    ev = szilard.numeric_partition_event(wf, box, "left")
    checks = [
        (
            ev.delta_s >= LN2 - szilard.LOWER_BOUND_TOL,
            f"delta_s {ev.delta_s:.6f} below k ln 2 - {szilard.LOWER_BOUND_TOL}",
        ),
        (
            abs(ev.delta_s - BOX_DELTA_S_ORACLE) <= GRID_ORACLE_TOL,
            f"delta_s {ev.delta_s:.6f} drifted from the frozen quadrature value "
            f"{BOX_DELTA_S_ORACLE} by more than {GRID_ORACLE_TOL}",
        ),
    ]
    elapsed = time.perf_counter() - start
    checks.append((elapsed < 10.0, f"runtime {elapsed:.2f} s >= 10 s"))
    return _result(4, "eigenstate localization cost respects the Gaussian bound", start, checks)


def criterion_5():
    """Free expansion gives N k ln 2 exactly and is additive over ratios."""
    start = time.perf_counter()
    checks = []
    for N in (1, 2, 100):
        res = demon.free_expansion_entropy(N, 2.0, T=1.5)
        checks.append((res.delta_s == N * 1.0 * LN2, f"N={N}: delta_s != N k ln 2"))
        checks.append((res.q_equivalent == res.delta_s * 1.5, f"N={N}: q != T delta_s"))
    for r1, r2 in ((2.0, 3.0), (1.5, 4.0), (2.0, 2.0)):
        lhs = demon.free_expansion_entropy(1, r1 * r2).delta_s
        rhs = demon.free_expansion_entropy(1, r1).delta_s + demon.free_expansion_entropy(1, r2).delta_s
        checks.append((abs(lhs - rhs) < 1e-12, f"ratios {r1},{r2}: additivity off by {abs(lhs - rhs):.2e}"))
    return _result(5, "free-expansion entropy is exact and log-additive", start, checks)


def criterion_6():
    """10,000 seeded cycles: net entropy never negative, mean work = k T ln 2."""
    start = time.perf_counter()
    T, k = 1.0, 1.0

    def sampler(rng):
        return k * LN2 + abs(rng.normal(0.0, 0.1))

    res = demon.monte_carlo_cycles(10_000, T, k, sampler, seed=SELFCHECK_SEED)
    mean_work = res.total_work / res.n_cycles
    checks = [
        (res.min_delta_s_net >= -1e-9, f"min net {res.min_delta_s_net:.3e} < -1e-9"),
        (abs(mean_work - k * T * LN2) < 1e-12, f"mean work {mean_work!r} != k T ln 2"),
    ]
    again = demon.monte_carlo_cycles(10_000, T, k, sampler, seed=SELFCHECK_SEED)
    checks.append(
        (
            np.array_equal(res.delta_s_net, again.delta_s_net),
            "same seed gave different cycle histories",
        )
    )
    elapsed = time.perf_counter() - start
    checks.append((elapsed < 5.0, f"runtime {elapsed:.2f} s >= 5 s"))
    return _result(6, "second law holds over 10,000 seeded cycles", start, checks)


def criterion_7():
    """Piston reset maps both memories to R, preserving phase volume; idempotent."""
    start = time.perf_counter()
    checks = []
    for initial in ("L", "R"):
        res = demon.norton_reset(initial)
        checks.append((res.final.memory == "R", f"{initial}: final memory {res.final.memory}"))
        checks.append(
            (
                res.trace[0].volume == 1 and res.final.volume == 1,
                f"{initial}: phase volume not preserved",
            )
        )
        twice = demon.norton_reset(res.final.memory)
        checks.append((twice.final == res.final, f"{initial}: reset not idempotent"))
    return _result(7, "no-erase reset moves volume without compressing it", start, checks)


def criterion_8():
    """Aiming feasibility flips exactly at delta_p = hbar/(2 door)."""
    start = time.perf_counter()
    door, hbar = 1.0, 1.0
    boundary = hbar / (2.0 * door)
    below = np.nextafter(boundary, 0.0)
    above = np.nextafter(boundary, math.inf)
    checks = [
        (demon.speed_demon_feasibility(boundary, door).feasible, "boundary not feasible"),
        (not demon.speed_demon_feasibility(below, door).feasible, "just below boundary feasible"),
        (demon.speed_demon_feasibility(above, door).feasible, "just above boundary infeasible"),
    ]
    for exponent in range(-10, 11):
        dp = 10.0**exponent
        rep = demon.speed_demon_feasibility(dp, door)
        product = rep.sigma_x_induced * dp
        checks.append(
            (
                abs(product - 0.5 * hbar) <= 1e-15 * 0.5 * hbar,
                f"dp=1e{exponent}: sigma_x * dp = {product!r}",
            )
        )
    return _result(8, "momentum-accuracy/aiming trade-off flips at the exact boundary", start, checks)


def criterion_9():
    """Rescaling x -> a x shifts h_x by +ln a and h_p by -ln a; the sum is invariant."""
    start = time.perf_counter()
    checks = []
    base_grid = numerics.Grid(4096, -8.0, 8.0)
    base = entropy.eur_report(numerics.make_gaussian(base_grid, 0.0, 0.5))
    base_box = entropy.eur_report(
        numerics.make_box_eigenstate(base_grid, numerics.centered_box(2.0), 1)
    )
    for a in (0.5, 2.0):
        grid = numerics.Grid(4096, -8.0 * a, 8.0 * a)
        scaled = entropy.eur_report(numerics.make_gaussian(grid, 0.0, 0.5 * a))
        scaled_box = entropy.eur_report(
            numerics.make_box_eigenstate(grid, numerics.centered_box(2.0 * a), 1)
        )
        for label, ref, rep in (("gaussian", base, scaled), ("eigenstate", base_box, scaled_box)):
            checks.append(
                (
                    abs((rep.h_x - ref.h_x) - math.log(a)) < 0.002,
                    f"{label} a={a}: h_x shift {(rep.h_x - ref.h_x):.6f} != ln a",
                )
            )
            checks.append(
                (
                    abs((rep.h_p - ref.h_p) + math.log(a)) < 0.002,
                    f"{label} a={a}: h_p shift {(rep.h_p - ref.h_p):.6f} != -ln a",
                )
            )
            checks.append(
                (
                    abs(rep.eur_sum - ref.eur_sum) < 0.004,
                    f"{label} a={a}: sum changed by {abs(rep.eur_sum - ref.eur_sum):.6f}",
                )
            )
    return _result(9, "entropies shift by +-ln a under rescaling; the sum is invariant", start, checks)


ALL_CRITERIA = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
)


def run_all():
    """Run every criterion in order and return the results."""
    return [fn() for fn in ALL_CRITERIA]
