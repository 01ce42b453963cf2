import json

import pytest

import lincover.cli as cli
from lincover.core import parse_hypergraph
from lincover.cover import CoverCertificate, certificate_from_json, solve


FANO_TEXT = "7 7\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n"


@pytest.fixture()
def fano_file(tmp_path):
    path = tmp_path / "fano.txt"
    path.write_text(FANO_TEXT)
    return path


def test_gen_is_reproducible(tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    for out in (a, b):
        rc = cli.main(
            ["gen", "--n", "6", "--p3", "0.5", "--p2", "0.3", "--seed", "99",
             "--out", str(out)]
        )
        assert rc == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_p3_one_builds_complete_3_uniform(tmp_path):
    out = tmp_path / "k35.txt"
    assert cli.main(["gen", "--n", "5", "--p3", "1.0", "--p2", "0", "--seed", "1",
                     "--out", str(out)]) == 0
    h = parse_hypergraph(out.read_text())
    assert h.n == 5 and len(h.edges) == 10
    assert all(len(e) == 3 for e in h.edges)


def test_gen_rejects_bad_probability(capsys):
    assert cli.main(["gen", "--n", "4", "--p3", "1.5"]) == 1
    assert "error" in capsys.readouterr().err


def test_solve_verify_round_trip(tmp_path, fano_file, capsys):
    cert_path = tmp_path / "cert.json"
    assert cli.main(["solve", str(fano_file), "--out", str(cert_path)]) == 0
    cert = certificate_from_json(cert_path.read_text())
    assert cert.alpha_bound == 4
    assert cli.main(["verify", str(fano_file), str(cert_path)]) == 0
    out = capsys.readouterr().out
    assert "result: PASS" in out
    assert "\x1b[" not in out  # no ANSI when not a terminal


def test_solve_writes_to_stdout_by_default(fano_file, capsys):
    assert cli.main(["solve", str(fano_file)]) == 0
    payload = capsys.readouterr().out
    assert json.loads(payload)["n"] == 7


def test_solve_budget_exhaustion_exit_code(tmp_path, fano_file):
    cert_path = tmp_path / "cert.json"
    rc = cli.main(
        ["solve", str(fano_file), "--budget-nodes", "1", "--out", str(cert_path)]
    )
    assert rc == 2
    assert not cert_path.exists()


def test_solve_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 0 1\n")
    assert cli.main(["solve", str(bad)]) == 1
    assert "line 2" in capsys.readouterr().err


def test_solve_missing_file_exit_code(tmp_path):
    assert cli.main(["solve", str(tmp_path / "absent.txt")]) == 1


def test_verify_instance_mismatch(tmp_path, fano_file, capsys):
    cert_path = tmp_path / "cert.json"
    assert cli.main(["solve", str(fano_file), "--out", str(cert_path)]) == 0
    other = tmp_path / "other.txt"
    other.write_text("3 1\n0 1 2\n")
    assert cli.main(["verify", str(other), str(cert_path)]) == 1
    assert "instance mismatch" in capsys.readouterr().err


def test_verify_tampered_certificate(tmp_path, fano_file, capsys):
    cert_path = tmp_path / "cert.json"
    assert cli.main(["solve", str(fano_file), "--out", str(cert_path)]) == 0
    obj = json.loads(cert_path.read_text())
    obj["cycles"] = obj["cycles"][:-1] if len(obj["cycles"]) > 1 else []
    cert_path.write_text(json.dumps(obj))
    assert cli.main(["verify", str(fano_file), str(cert_path)]) == 3
    out = capsys.readouterr().out
    assert "coverage" in out and "FAIL" in out


def test_verify_json_format(tmp_path, fano_file, capsys):
    cert_path = tmp_path / "cert.json"
    cli.main(["solve", str(fano_file), "--out", str(cert_path)])
    assert cli.main(
        ["verify", str(fano_file), str(cert_path), "--format", "json"]
    ) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["ok"] is True
    assert len(report["checks"]) == 5


def test_verify_trust_mode(tmp_path, fano_file, capsys):
    cert_path = tmp_path / "cert.json"
    cli.main(["solve", str(fano_file), "--out", str(cert_path)])
    assert cli.main(
        ["verify", str(fano_file), str(cert_path), "--alpha", "trust"]
    ) == 0
    assert "provided-bound" in capsys.readouterr().out


def test_alpha_command(fano_file, capsys):
    assert cli.main(["alpha", str(fano_file)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "alpha 4"
    witness = [int(v) for v in lines[1].split()[1:]]
    assert len(witness) == 4


def test_fuzz_clean_run(capsys):
    rc = cli.main(
        ["fuzz", "--count", "40", "--n-range", "1..6", "--p3", "0.4",
         "--p2", "0.2", "--seed", "7"]
    )
    assert rc == 0
    out = capsys.readouterr().out
    assert "instances 40" in out
    assert "failures 0" in out
    assert "max cover size" in out


def test_fuzz_single_vertex_range(capsys):
    assert cli.main(["fuzz", "--count", "1", "--n-range", "1..1"]) == 0
    assert "failures 0" in capsys.readouterr().out


def test_fuzz_deterministic_stdout(capsys):
    args = ["fuzz", "--count", "25", "--n-range", "2..7", "--seed", "13"]
    assert cli.main(args) == 0
    first = capsys.readouterr().out
    assert cli.main(args) == 0
    second = capsys.readouterr().out
    assert first == second


def test_fuzz_detects_injected_bug(tmp_path, monkeypatch, capsys):
    def buggy_solve(h, budget=None, assert_level="cheap"):
        cert = solve(h, budget, assert_level)
        return CoverCertificate(
            cert.instance, cert.cycles[:-1], cert.alpha_bound, cert.stats
        )

    monkeypatch.setattr(cli, "solve", buggy_solve)
    save = tmp_path / "failures"
    rc = cli.main(
        ["fuzz", "--count", "5", "--n-range", "3..5", "--p3", "0.5",
         "--seed", "3", "--save-failures", str(save)]
    )
    assert rc == 4
    saved = sorted(p.name for p in save.iterdir())
    assert any(name.endswith(".instance") for name in saved)
    assert any(name.endswith(".report.json") for name in saved)
    assert "failures 5" in capsys.readouterr().out


def test_fuzz_bad_range(capsys):
    assert cli.main(["fuzz", "--n-range", "9..2"]) == 1
