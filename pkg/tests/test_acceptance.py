"""Acceptance battery: every advertised number at its stated tolerance.

Each criterion prints one PASS/FAIL line (visible with -s or in the CLI's
``selfcheck``).  The frozen quadrature constants behind criterion 4 are
recomputed here from the closed-form momentum densities, independently of
the package pipeline.
"""

import pytest

from demonlab import acceptance

import oracles


@pytest.mark.parametrize("criterion", acceptance.ALL_CRITERIA, ids=lambda fn: fn.__name__)
def test_criterion(criterion):
    result = criterion()
    status = "PASS" if result.passed else "FAIL"
    print(f"{status} {result.number:>2d}  {result.name}  [{result.detail}]")
    assert result.passed, f"criterion {result.number}: {result.detail}"


def test_frozen_oracle_constants_match_independent_quadrature():
    # 10x-resolution Simpson quadrature of the closed-form densities must
    # reproduce the constants frozen into the acceptance module.
    hp_ground, hp_trunc = oracles.momentum_entropies()
    assert hp_ground == pytest.approx(acceptance.BOX_GROUND_HP_ORACLE, abs=5e-4)
    assert hp_trunc == pytest.approx(acceptance.BOX_TRUNC_HP_ORACLE, abs=5e-3)
    assert hp_trunc - hp_ground == pytest.approx(acceptance.BOX_DELTA_S_ORACLE, abs=5e-3)
    assert oracles.position_entropy_ground() == pytest.approx(oracles.HX_GROUND, abs=1e-9)


def test_run_all_reports_every_criterion():
    results = acceptance.run_all()
    assert [r.number for r in results] == list(range(1, 10))
    assert all(r.passed for r in results)
