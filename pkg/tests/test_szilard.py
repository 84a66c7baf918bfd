import io
import json
import math

import pytest

from demonlab import (
    Grid,
    analytic_localization_cost,
    analytic_partition_event,
    eur_report,
    gaussian_vs_eigenstate,
    make_box_eigenstate,
    make_gaussian,
    numeric_partition_event,
    project_half,
)
from demonlab.szilard import write_sweep_csv

import oracles

LN2 = math.log(2.0)


# ---- analytic localization cost ---------------------------------------------


def test_localization_cost_values():
    assert analytic_localization_cost(0.5) == pytest.approx(LN2, abs=1e-15)
    assert analytic_localization_cost(1.0) == 0.0
    assert analytic_localization_cost(0.25) == pytest.approx(math.log(4.0), abs=1e-15)
    assert analytic_localization_cost(0.5, k=2.0) == pytest.approx(2.0 * LN2)


def test_localization_cost_domain():
    for bad in (0.0, -0.5, 1.5):
        with pytest.raises(ValueError, match="\\(0, 1\\]"):
            analytic_localization_cost(bad)


def test_localization_cost_monotone_and_additive():
    factors = [0.9, 0.7, 0.5, 0.3, 0.1]
    costs = [analytic_localization_cost(a) for a in factors]
    assert all(c2 > c1 for c1, c2 in zip(costs, costs[1:]))
    for a1 in factors:
        for a2 in factors:
            lhs = analytic_localization_cost(a1 * a2)
            rhs = analytic_localization_cost(a1) + analytic_localization_cost(a2)
            assert lhs == pytest.approx(rhs, abs=1e-12)


# ---- analytic partition event -----------------------------------------------


@pytest.mark.parametrize("L", [0.1, 1.0, 2.0, 10.0, 1000.0])
def test_analytic_event_is_k_ln2(L):
    ev = analytic_partition_event(L)
    assert abs(ev.delta_s - LN2) / LN2 < 1e-12
    assert ev.delta_s == ev.s_after - ev.s_before
    assert ev.model == "analytic-gaussian"
    assert ev.side == "unresolved"


def test_analytic_event_halves_position_doubles_momentum_entropy():
    ev = analytic_partition_event(2.0)
    assert ev.sigma_x_after == pytest.approx(0.5 * ev.sigma_x_before)
    # s_after - s_before = (k/2) ln(sigma_p ratio squared) = (k/2) ln 4
    assert ev.s_after - ev.s_before == pytest.approx(0.5 * math.log(4.0), abs=1e-12)


def test_analytic_event_scales_with_k():
    ev = analytic_partition_event(2.0, k=1.380649e-23)
    assert ev.delta_s == pytest.approx(1.380649e-23 * LN2, rel=1e-12)


def test_analytic_event_rejects_bad_length():
    with pytest.raises(ValueError, match="positive"):
        analytic_partition_event(-2.0)


# ---- numeric projection event -----------------------------------------------


def test_numeric_gaussian_event_positive_cost(grid, box):
    # sign checked at two resolutions (the coarser is the shipping one)
    deltas = []
    for n in (4096, 8192):
        g = Grid(n, -8.0, 8.0)
        wf = make_gaussian(g, 0.0, box.length / 6.0)
        deltas.append(numeric_partition_event(wf, box, "left").delta_s)
    assert all(d > 0.0 for d in deltas)
    assert deltas[0] == pytest.approx(deltas[1], abs=0.02)


def test_numeric_event_mirror_symmetric(grid, box):
    wf = make_box_eigenstate(grid, box, 1)
    left = numeric_partition_event(wf, box, "left")
    right = numeric_partition_event(wf, box, "right")
    assert left.delta_s == pytest.approx(right.delta_s, abs=1e-9)


def test_numeric_eigenstate_event_regression(grid, box):
    # independent quadrature oracle at 10x resolution, then the frozen value
    hp_before, hp_after = oracles.momentum_entropies(
        pipeline_p_max=(grid.n // 2) * grid.dp, pipeline_dp=grid.dp
    )
    assert hp_before == pytest.approx(oracles.HP_GROUND, abs=5e-4)
    assert hp_after == pytest.approx(oracles.HP_TRUNCATED, abs=5e-3)

    ev = numeric_partition_event(make_box_eigenstate(grid, box, 1), box, "left")
    assert ev.delta_s >= LN2 - 0.02
    assert ev.delta_s == pytest.approx(oracles.DELTA_S_TRUNCATION, abs=0.03)
    assert ev.s_before == pytest.approx(oracles.HP_GROUND, abs=1e-3)
    sigma_full, sigma_trunc = oracles.position_sigmas()
    assert ev.sigma_x_before == pytest.approx(sigma_full, abs=1e-4)
    assert ev.sigma_x_after == pytest.approx(sigma_trunc, abs=1e-4)


def test_numeric_event_records_side_and_model(grid, box):
    ev = numeric_partition_event(make_box_eigenstate(grid, box, 1), box, "right")
    assert ev.model == "numeric-projection"
    assert ev.side == "right"
    assert ev.delta_s == ev.s_after - ev.s_before


def test_post_projection_states_still_satisfy_eur(grid, box):
    for wf in (make_box_eigenstate(grid, box, 1), make_gaussian(grid, 0.0, 1.0 / 3.0)):
        for side in ("left", "right"):
            rep = eur_report(project_half(wf, box, side))
            assert rep.satisfies_eur


def test_variance_refit_bridges_closed_form_and_pipeline(grid, box):
    # refit the post-projection density to a Gaussian of matching variance;
    # the pipeline's momentum-entropy difference must land on -k ln(ratio)
    wf = make_gaussian(grid, 0.0, box.length / 6.0)
    ev = numeric_partition_event(wf, box, "left")
    refit = make_gaussian(grid, 0.0, ev.sigma_x_after)
    pipeline = eur_report(refit).h_p - eur_report(wf).h_p
    closed = -math.log(ev.sigma_x_after / ev.sigma_x_before)
    assert pipeline == pytest.approx(closed, rel=0.05)


# ---- comparison and serialization -------------------------------------------


def test_gaussian_vs_eigenstate_lower_bound(grid):
    cmpr = gaussian_vs_eigenstate(2.0, grid)
    assert cmpr.delta_s_gaussian_analytic == pytest.approx(LN2, rel=1e-12)
    assert cmpr.delta_s_eigenstate_numeric >= LN2 - 0.02
    assert cmpr.lower_bound_respected


def test_eigenstate_cost_is_scale_free(grid):
    small = gaussian_vs_eigenstate(2.0, grid)
    large = gaussian_vs_eigenstate(4.0, Grid(4096, -16.0, 16.0))
    assert small.delta_s_eigenstate_numeric == pytest.approx(
        large.delta_s_eigenstate_numeric, abs=0.01
    )


def test_event_json(grid, box):
    ev = numeric_partition_event(make_box_eigenstate(grid, box, 1), box, "left")
    payload = json.loads(ev.to_json())
    assert set(payload) == {
        "model",
        "side",
        "s_before",
        "s_after",
        "delta_s",
        "sigma_x_before",
        "sigma_x_after",
    }


def test_sweep_csv_columns():
    rows = [(L, analytic_partition_event(L)) for L in (1.0, 2.0)]
    buf = io.StringIO()
    write_sweep_csv(rows, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "model,L,side,s_before,s_after,delta_s"
    assert len(lines) == 3
    fields = lines[1].split(",")
    assert fields[0] == "analytic-gaussian"
    assert float(fields[5]) == pytest.approx(LN2, rel=1e-11)
