import csv
import io
import json
import math

import pytest

from main import main
from src.services.verification import LOG_DELTA_SIMPLEX


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_delta_all_routes_agree_on_ball(capsys):
    code, out, _ = run(capsys, "delta", "--body", "simplex", "--set", "ball")
    assert code == 0
    assert out.splitlines()[0] == "route,log_delta,delta,residual"
    rows = {row["route"]: row for row in rows_of(out)}
    assert set(rows) == {"chebyshev-integral", "ball-beta", "ball-gamma", "max-spread"}
    assert float(rows["ball-beta"]["log_delta"]) == pytest.approx(LOG_DELTA_SIMPLEX, abs=1e-8)
    assert float(rows["max-spread"]["log_delta"]) <= 1e-6


def test_delta_single_route(capsys):
    code, out, _ = run(capsys, "delta", "--body", "lp:p=2", "--set", "product:disk(4)xdisk(1)",
                       "--route", "product-general")
    assert code == 0
    [row] = rows_of(out)
    assert row["route"] == "product-general"
    assert float(row["delta"]) == pytest.approx(2.0, rel=1e-11)


def test_delta_route_mismatch_exits_2(capsys):
    code, out, _ = run(capsys, "delta", "--body", "triangle:a=2,b=1", "--set", "ball", "--route", "product-triangle")
    assert code == 2
    assert out == ""


def test_delta_without_any_route_exits_2(capsys):
    code, _, _ = run(capsys, "delta", "--body", "lp:p=2", "--set", "product:interval(-1,1)xinterval(0,1)",
                     "--route", "chebyshev-integral")
    assert code == 2


def test_bad_body_exits_1_and_names_token(capsys):
    code, out, err = run(capsys, "delta", "--body", "blob", "--set", "ball")
    assert code == 1
    assert out == ""
    assert "blob" in err


def test_unknown_verb_exits_1(capsys):
    code, _, _ = run(capsys, "bogus")
    assert code == 1


def test_sweep_single_point(capsys):
    code, out, _ = run(capsys, "sweep-p", "--from", "1", "--to", "1")
    assert code == 0
    assert out.splitlines()[0] == "p,log_delta,delta"
    [row] = rows_of(out)
    assert float(row["log_delta"]) == pytest.approx(-0.25, abs=1e-8)


def test_sweep_rows_follow_steps(capsys):
    code, out, _ = run(capsys, "sweep-p", "--from", "1", "--to", "4", "--steps", "4")
    assert code == 0
    assert [float(row["p"]) for row in rows_of(out)] == [1.0, 2.0, 3.0, 4.0]


@pytest.mark.slow
def test_sweep_large_p_nears_limit(capsys):
    code, out, _ = run(capsys, "sweep-p", "--from", "32", "--to", "64", "--steps", "2")
    assert code == 0
    limit = (1.0 - 4.0 * math.log(2.0)) / 6.0
    near, far = rows_of(out)
    assert float(near["log_delta"]) == pytest.approx(limit, abs=2e-2)
    assert float(far["log_delta"]) == pytest.approx(limit, abs=5e-3)


def test_sweep_rejects_reversed_range(capsys):
    code, _, _ = run(capsys, "sweep-p", "--from", "3", "--to", "1")
    assert code == 1


def test_sweep_is_deterministic(capsys):
    first = run(capsys, "sweep-p", "--from", "1", "--to", "3", "--steps", "3")[1]
    second = run(capsys, "sweep-p", "--from", "1", "--to", "3", "--steps", "3")[1]
    assert first == second


def test_json_format(capsys):
    code, out, _ = run(capsys, "--format", "json", "sweep-p", "--from", "2", "--to", "2")
    assert code == 0
    [record] = json.loads(out)
    assert set(record) == {"p", "log_delta", "delta"}
    assert record["p"] == 2.0


def test_global_options_after_the_verb(capsys, tmp_path):
    code, out, _ = run(capsys, "sweep-p", "--from", "1", "--to", "4", "--format", "json")
    assert code == 0
    assert [record["p"] for record in json.loads(out)] == [1.0, 4.0]
    target = tmp_path / "late.csv"
    code, out, _ = run(capsys, "--format", "json", "sweep-p", "--from", "1", "--to", "1", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())[0]["p"] == 1.0


def test_output_file(capsys, tmp_path):
    target = tmp_path / "sweep.csv"
    code, out, _ = run(capsys, "--output", str(target), "sweep-p", "--from", "1", "--to", "1")
    assert code == 0
    assert out == ""
    assert target.read_text().splitlines()[0] == "p,log_delta,delta"


def test_convergence_qn_gaps_shrink(capsys):
    code, out, _ = run(capsys, "convergence", "--kind", "qn", "--body", "simplex", "--set", "ball",
                       "--n", "50,100,200,400")
    assert code == 0
    rows = rows_of(out)
    assert [int(row["n"]) for row in rows] == [50, 100, 200, 400]
    gaps = [float(row["gap"]) for row in rows]
    assert all(later < earlier for earlier, later in zip(gaps, gaps[1:]))


def test_convergence_fekete_on_polydisk(capsys):
    code, out, _ = run(capsys, "convergence", "--kind", "fekete", "--body", "simplex",
                       "--set", "polydisk:r1=1,r2=1", "--n", "1,2,3")
    assert code == 0
    for row in rows_of(out):
        assert float(row["gap"]) <= 0.2


def test_convergence_needs_increasing_n(capsys):
    code, _, _ = run(capsys, "convergence", "--kind", "qn", "--body", "simplex", "--set", "ball", "--n", "3,2")
    assert code == 1


def test_convergence_qn_needs_ball(capsys):
    code, _, _ = run(capsys, "convergence", "--kind", "qn", "--body", "simplex",
                     "--set", "polydisk:r1=1,r2=1", "--n", "4,8")
    assert code == 2


def test_fekete_json_includes_points(capsys):
    code, out, _ = run(capsys, "--format", "json", "fekete", "--body", "simplex",
                       "--set", "polydisk:r1=1,r2=1", "--n", "1", "--resolution", "4")
    assert code == 0
    [record] = json.loads(out)
    assert record["d_n"] == 3 and record["l_n"] == 2
    assert record["log_vdm"] == pytest.approx(0.5 * math.log(20.0), abs=1e-10)
    assert len(record["points"]) == 3


def test_fekete_csv_omits_points(capsys):
    code, out, _ = run(capsys, "fekete", "--body", "simplex", "--set", "ball", "--n", "1", "--resolution", "8")
    assert code == 0
    assert out.splitlines()[0] == "n,d_n,l_n,log_vdm,delta_estimate,hadamard_estimate,sweeps"


def test_fekete_rejects_zero_degree(capsys):
    code, _, _ = run(capsys, "fekete", "--body", "simplex", "--set", "ball", "--n", "0")
    assert code == 1


def test_verify_special_group_passes(capsys):
    code, out, _ = run(capsys, "verify", "--only", "special")
    assert code == 0
    rows = rows_of(out)
    assert rows and all(row["passed"] == "true" for row in rows)


def test_verify_failures_exit_3(capsys):
    code, out, _ = run(capsys, "verify", "--only", "special", "--tol-scale=-1")
    assert code == 3
    assert all(row["passed"] == "false" for row in rows_of(out))


def test_invalid_environment_setting_exits_1(capsys, monkeypatch):
    monkeypatch.setenv("CTD_QUAD_TOL", "2")
    code, _, _ = run(capsys, "sweep-p", "--from", "1", "--to", "1")
    assert code == 1
