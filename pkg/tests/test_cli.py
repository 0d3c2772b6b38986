import json

import pytest

from asyncbool.cli import main
from tests.conftest import NET1_TABLE_TEXT


@pytest.fixture
def net_file(tmp_path):
    path = tmp_path / "net1.tbl"
    path.write_text(NET1_TABLE_TEXT)
    return str(path)


SYNC = "cycle 0:11 ; period 1 ; start 0"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_fixed_points(net_file, capsys):
    code, out, _ = run(capsys, "fixed-points", "--net", net_file)
    assert code == 0
    assert out.strip() == "10"


def test_fixed_points_json(net_file, capsys):
    code, out, _ = run(capsys, "fixed-points", "--net", net_file, "--json")
    assert code == 0
    record = json.loads(out)
    assert record == {"record": "fixed-points", "states": ["10"]}


def test_attractors(net_file, capsys):
    code, out, _ = run(capsys, "attractors", "--net", net_file)
    assert code == 0
    assert out.splitlines() == ["01,11", "10"]


def test_attractors_from_state(net_file, capsys):
    code, out, _ = run(capsys, "attractors", "--net", net_file, "--from", "11")
    assert code == 0
    assert out.splitlines() == ["01,11"]


def test_omega(net_file, capsys):
    code, out, _ = run(
        capsys, "omega", "--net", net_file, "--from", "00", "--schedule", SYNC
    )
    assert code == 0
    assert out.strip() == "01,11"


def test_orbit(net_file, capsys):
    code, out, _ = run(
        capsys, "orbit", "--net", net_file, "--from", "00", "--schedule", SYNC
    )
    assert code == 0
    assert "00,01,11" in out


def test_basin_modes(net_file, capsys):
    code, out, _ = run(capsys, "basin", "--net", net_file, "--set", "10", "--mode", "p")
    assert code == 0
    assert out.splitlines()[0] == "00,10"
    assert "via" in out  # witnesses are listed
    code, out, _ = run(capsys, "basin", "--net", net_file, "--set", "10", "--mode", "n")
    assert code == 0
    assert out.strip() == "10"


def test_invariant_exit_codes(net_file, capsys):
    code, out, _ = run(
        capsys, "invariant", "--net", net_file, "--set", "01,11", "--mode", "n"
    )
    assert code == 0 and "yes" in out
    code, out, _ = run(
        capsys, "invariant", "--net", net_file, "--set", "00", "--mode", "p"
    )
    assert code == 1 and "no" in out


def test_verify(net_file, capsys):
    code, out, _ = run(capsys, "verify", "--net", net_file, "--bounds", "2,3")
    assert code == 0
    assert "OK (0 failures)" in out


def test_oracle_subcommand(net_file, capsys):
    code, out, _ = run(capsys, "oracle", "--net", net_file, "--from", "00")
    assert code == 0
    assert "stabilized: yes" in out
    code, out, _ = run(
        capsys, "oracle", "--net", net_file, "--set", "10", "--mode", "p"
    )
    assert code == 0
    assert out.strip() == "00,10"


def test_search_witness(net_file, capsys):
    code, out, _ = run(
        capsys, "search-witness", "--net", net_file, "--from", "00", "--set", "10"
    )
    assert code == 0
    assert "cycle" in out
    code, out, _ = run(
        capsys, "search-witness", "--net", net_file, "--from", "11", "--set", "10"
    )
    assert code == 1


def test_portrait(net_file, capsys):
    code, out, _ = run(capsys, "portrait", "--net", net_file)
    assert code == 0
    assert out.startswith("digraph portrait {")


def test_orbit_and_omega_basins(net_file, capsys):
    code, out, _ = run(
        capsys, "orbit-basin", "--net", net_file, "--from", "11",
        "--schedule", SYNC, "--mode", "p",
    )
    assert code == 0
    assert out.splitlines()[0] == "00,01,11"
    code, out, _ = run(
        capsys, "omega-basin", "--net", net_file, "--from", "11",
        "--schedule", SYNC, "--mode", "n",
    )
    assert code == 0
    assert out.strip() == "01,11"


def test_expr_format(tmp_path, capsys):
    path = tmp_path / "net.expr"
    path.write_text("y1 = !(x1 & x2)\ny2 = !x1 | x2\n")
    code, out, _ = run(
        capsys, "fixed-points", "--net", str(path), "--format", "expr"
    )
    assert code == 0
    assert out.strip() == "10"


def test_out_file(net_file, tmp_path, capsys):
    target = tmp_path / "result.txt"
    code, out, _ = run(
        capsys, "fixed-points", "--net", net_file, "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert target.read_text().strip() == "10"


def test_parse_error_exits_2(tmp_path, capsys):
    path = tmp_path / "broken.tbl"
    path.write_text("n=2\n00 -> 11\n")
    code, _, err = run(capsys, "fixed-points", "--net", str(path))
    assert code == 2
    assert "error:" in err


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "fixed-points", "--net", "/nonexistent.tbl")
    assert code == 2


def test_schedule_from_file(net_file, tmp_path, capsys):
    sched = tmp_path / "rho.sched"
    sched.write_text(SYNC + "\n")
    code, out, _ = run(
        capsys, "omega", "--net", net_file, "--from", "00", "--schedule", str(sched)
    )
    assert code == 0
    assert out.strip() == "01,11"


def test_json_basin_carries_witnesses(net_file, capsys):
    code, out, _ = run(
        capsys, "basin", "--net", net_file, "--set", "10", "--json"
    )
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    states = {r["state"] for r in records}
    assert states == {"00", "10"}
    assert all("witness" in r for r in records)
