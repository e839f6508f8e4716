import csv
import json

import pytest

from randcones.cli import EXIT_BUDGET, EXIT_PASS, EXIT_STAT_FAIL, EXIT_USAGE, main
from randcones.experiments import REGISTRY, run_experiment


def test_registry_size_and_claims():
    assert len(REGISTRY) >= 14
    claims = [e.claim for e in REGISTRY.values()]
    assert len(set(claims)) == len(claims)
    for exp in REGISTRY.values():
        assert exp.claim


def test_exploratory_ids_flagged():
    for exp_id, exp in REGISTRY.items():
        if exp_id.startswith("exploratory-"):
            assert exp.exploratory
            assert "NON-ASSERTED" in exp.claim
        else:
            assert not exp.exploratory


def test_unknown_experiment_exit_code(capsys):
    assert main(["run", "no-such-experiment"]) == EXIT_USAGE


def test_unknown_parameter_exit_code():
    assert main(["run", "wendel-mc", "--param", "bogus=3"]) == EXIT_USAGE


def test_budget_exceeded_exit_code():
    # d = 4000 pushes the subset count past the enumeration budget.
    code = main(["run", "limit-k2", "--param", "d=4000", "--reps", "5"])
    assert code == EXIT_BUDGET


def test_run_wendel_table_and_exit_zero(capsys):
    assert main(["run", "wendel-table", "--param", "n_max=7"]) == EXIT_PASS
    out = capsys.readouterr().out
    assert "5 3 5/16" in out
    assert "PASS" in out


def test_list_command(capsys):
    assert main(["list"]) == EXIT_PASS
    out = capsys.readouterr().out
    for exp_id in REGISTRY:
        assert exp_id in out
    assert "non-asserted" in out


def test_table_wendel(capsys):
    assert main(["table", "wendel", "--n-max", "6"]) == EXIT_PASS
    out = capsys.readouterr().out
    assert "5/16" in out  # p(5, 3)


def test_table_spectra(capsys):
    assert main(["table", "spectra", "--k", "2", "--r-max", "9"]) == EXIT_PASS
    out = capsys.readouterr().out
    assert "0.405284734569" in out  # 4 / pi^2


def test_table_moments(capsys):
    assert main(["table", "moments", "--d", "3"]) == EXIT_PASS
    out = capsys.readouterr().out
    assert "1/8" in out and "1/32" in out and "0.0102692826" in out


def test_table_unknown_name():
    assert main(["table", "nonsense"]) == EXIT_USAGE


def test_json_output_schema(tmp_path):
    out = tmp_path / "res.json"
    code = main(["run", "moment-symmetry", "--seed", "5", "--reps", "20000",
                 "--out", str(out), "--format", "json"])
    assert code == EXIT_PASS
    payload = json.loads(out.read_text())
    assert set(payload) == {"id", "params", "seed", "estimates", "targets",
                            "verdicts", "wall_time_s", "version"}
    assert payload["id"] == "moment-symmetry"
    assert payload["seed"] == 5
    for t in payload["targets"]:
        assert t["provenance"] in ("exact", "quadrature", "asymptotic")
        assert "/" in t["value"] or t["value"].replace(".", "").isdigit()
    for v in payload["verdicts"]:
        assert set(v) >= {"name", "statistic", "p_value", "pass", "alpha", "description"}


def test_json_determinism_modulo_wall_time(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        code = main(["run", "wendel-mc", "--seed", "11", "--reps", "20000",
                     "--out", str(path)])
        assert code == EXIT_PASS
    pa, pb = json.loads(a.read_text()), json.loads(b.read_text())
    pa.pop("wall_time_s")
    pb.pop("wall_time_s")
    assert pa == pb


def test_csv_output(tmp_path):
    out = tmp_path / "res.csv"
    code = main(["run", "moment-symmetry", "--seed", "5", "--reps", "20000",
                 "--out", str(out), "--format", "csv"])
    assert code == EXIT_PASS
    with open(out, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["id", "name", "value", "stderr", "target", "provenance", "pass"]
    assert all(row[0] == "moment-symmetry" for row in rows[1:])
    assert len(rows) >= 3


def test_run_qk_laplace_k2(capsys):
    code = main(["run", "qk-laplace-k2", "--reps", "20000", "--seed", "9"])
    assert code == EXIT_PASS
    out = capsys.readouterr().out
    assert "laplace-s1.0" in out


def test_exploratory_run_is_non_asserted(capsys):
    code = main(["run", "exploratory-moment-asymptotics", "--param", "d_max=6"])
    assert code == EXIT_PASS
    out = capsys.readouterr().out
    assert "non-asserted" in out


def test_run_experiment_rejects_unknown_param():
    with pytest.raises(Exception):
        run_experiment("wendel-mc", params={"nonsense": 1})


def test_thread_count_does_not_change_results():
    params = {"samples": 24, "subsets_per_sample": 6}
    serial = run_experiment("gale-correspondence", params=params, seed=3, threads=1)
    pooled = run_experiment("gale-correspondence", params=params, seed=3, threads=3)
    ja, jb = serial.to_json_dict(), pooled.to_json_dict()
    ja.pop("wall_time_s")
    jb.pop("wall_time_s")
    assert ja == jb


def test_statistical_failure_exit_code():
    # An impossible KS threshold forces a clean statistical failure.
    code = main(["run", "limit-k1",
                 "--param", "d_exhaustive=2", "--param", "d=100",
                 "--reps", "2000", "--param", "qk_reps=2000",
                 "--param", "ks_threshold=0.000001"])
    assert code == EXIT_STAT_FAIL
