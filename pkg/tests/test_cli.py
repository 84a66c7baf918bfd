import json
import math

import pytest

from demonlab import cli

LN2 = math.log(2.0)


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eur_gaussian(capsys):
    code, out, _ = run(capsys, "eur", "gaussian", "--sigma", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["eur_sum"] == pytest.approx(2.14473, abs=2e-3)
    assert payload["satisfies_eur"] is True


def test_eur_eigenstate(capsys):
    code, out, _ = run(capsys, "eur", "eigenstate", "--length", "2", "--n", "1")
    assert code == 0
    assert json.loads(out)["satisfies_eur"] is True


def test_eur_truncated_gaussian(capsys):
    code, out, _ = run(capsys, "eur", "truncated-gaussian", "--sigma", "0.3", "--side", "right")
    assert code == 0
    assert json.loads(out)["satisfies_eur"] is True


def test_eur_rejects_bad_sigma(capsys):
    code, _, err = run(capsys, "eur", "gaussian", "--sigma", "-1")
    assert code == 1
    assert "sigma" in err


def test_eur_bits_conversion(capsys):
    _, nats_out, _ = run(capsys, "eur", "gaussian", "--sigma", "1")
    _, bits_out, _ = run(capsys, "eur", "gaussian", "--sigma", "1", "--bits")
    nats, bits = json.loads(nats_out), json.loads(bits_out)
    assert bits["eur_sum"] == pytest.approx(nats["eur_sum"] / LN2)
    assert bits["satisfies_eur"] is True


def test_szilard_analytic(capsys):
    code, out, _ = run(capsys, "szilard", "analytic", "--length", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["delta_s"] == pytest.approx(0.693147, abs=1e-6)
    assert payload["side"] == "unresolved"


def test_szilard_analytic_si_units(capsys):
    code, out, _ = run(
        capsys, "szilard", "analytic", "--length", "2", "--units-k", "1.380649e-23"
    )
    assert code == 0
    assert json.loads(out)["delta_s"] == pytest.approx(9.57e-24, rel=1e-3)


def test_szilard_numeric_eigenstate(capsys):
    code, out, _ = run(
        capsys, "szilard", "numeric", "--length", "2", "--state", "eigenstate",
        "--side", "left",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["delta_s"] >= 0.673
    assert payload["model"] == "numeric-projection"


def test_cycle_default_breaks_even(capsys):
    code, out, _ = run(capsys, "cycle")
    assert code == 0
    payload = json.loads(out)
    assert payload["delta_s_net"] == 0.0
    assert payload["w_extracted"] == pytest.approx(LN2)


def test_cycle_rejects_cheap_measurement(capsys):
    code, _, err = run(capsys, "cycle", "--cost", "0.3")
    assert code == 1
    assert "localization bound" in err


def test_cycle_batch_csv(capsys):
    code, out, _ = run(capsys, "cycle", "--cycles", "4", "--seed", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "cycle,measurement_cost,delta_s_net,work"
    assert len(lines) == 5


def test_expansion(capsys):
    code, out, _ = run(capsys, "expansion", "--molecules", "1", "--ratio", "2")
    assert code == 0
    assert json.loads(out)["delta_s"] == pytest.approx(0.693147, abs=1e-6)


def test_reset(capsys):
    code, out, _ = run(capsys, "reset", "--initial", "L")
    assert code == 0
    payload = json.loads(out)
    assert payload["final"]["memory"] == "R"
    assert payload["trace"][0]["volume"] == 1
    assert payload["final"]["volume"] == 1


def test_aim_infeasible(capsys):
    code, out, _ = run(capsys, "aim", "--delta-p", "0.01", "--door", "1")
    assert code == 0
    assert json.loads(out)["feasible"] is False


def test_sweep_csv_columns(capsys):
    code, out, _ = run(capsys, "sweep", "--model", "analytic", "--lengths", "0.5,2,1000")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "model,L,side,s_before,s_after,delta_s"
    assert len(lines) == 4
    for line in lines[1:]:
        assert float(line.split(",")[5]) == pytest.approx(LN2, rel=1e-11)


def test_sweep_rejects_bad_lengths(capsys):
    code, _, err = run(capsys, "sweep", "--lengths", "a,b")
    assert code == 1
    assert "lengths" in err


def test_unknown_subcommand_exits_one(capsys):
    code, _, _ = run(capsys, "conjure")
    assert code == 1


def test_missing_subcommand_prints_help(capsys):
    code, _, err = run(capsys)
    assert code == 1
    assert "SUBCOMMAND" in err


def test_help_lists_every_subcommand(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    for name in ("eur", "szilard", "cycle", "expansion", "reset", "aim", "sweep", "selfcheck"):
        assert name in out


def test_output_deterministic(capsys):
    _, first, _ = run(capsys, "eur", "gaussian", "--sigma", "0.5")
    _, second, _ = run(capsys, "eur", "gaussian", "--sigma", "0.5")
    assert first == second
    _, a, _ = run(capsys, "cycle", "--cycles", "8", "--seed", "11")
    _, b, _ = run(capsys, "cycle", "--cycles", "8", "--seed", "11")
    assert a == b


def test_json_round_trip_is_canonical(capsys):
    for argv in (
        ("eur", "gaussian", "--sigma", "1"),
        ("szilard", "analytic", "--length", "2"),
        ("aim", "--delta-p", "1", "--door", "1"),
        ("reset", "--initial", "R"),
    ):
        _, out, _ = run(capsys, *argv)
        reserialized = json.dumps(json.loads(out), sort_keys=True, indent=2)
        assert reserialized == out.strip()


def test_format_env_variable(capsys, monkeypatch):
    monkeypatch.setenv("DEMONLAB_FORMAT", "csv")
    _, out, _ = run(capsys, "aim", "--delta-p", "1", "--door", "1")
    assert out.splitlines()[0] == "delta_p,sigma_x_induced,door_width,feasible"
    # flag overrides the environment
    _, out, _ = run(capsys, "aim", "--delta-p", "1", "--door", "1", "--format", "json")
    assert json.loads(out)["feasible"] is True


def test_csv_format_flag(capsys):
    _, out, _ = run(capsys, "szilard", "analytic", "--length", "2", "--format", "csv")
    lines = out.splitlines()
    assert lines[0].startswith("model,side,")
    assert "0.69314718056" in lines[1]
