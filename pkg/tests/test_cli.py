import json

import pytest

from hopfatlas.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_verify(capsys):
    code, out = run(capsys, "verify", "taft3")
    assert code == 0 and out.strip() == "ok: bialgebra, antipode"


def test_invariants_k8(capsys):
    code, out = run(capsys, "invariants", "k8")
    assert code == 0
    assert "corad_dim=6" in out and "r=2" in out


def test_unknown_family_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nosuchfamily"])
    assert exc.value.code == 3


def test_prove_summary_style(capsys):
    code, out = run(
        capsys, "prove", "70", "--pack", "extended",
        "--flag", "full-orbit=2", "--flag", "free-translation",
        "--axiom", "pq-half-dim",
    )
    assert code == 0
    assert "eliminated: 5,7,10,14,35*,70 (* axiom)" in out
    assert "surviving: 1,2" in out


def test_prove_determinism(capsys):
    argv = ["prove", "42", "--pack", "extended", "--flag", "free-translation",
            "--flag", "full-orbit=2"]
    code1, out1 = run(capsys, *argv)
    code2, out2 = run(capsys, *argv)
    assert code1 == code2 == 0 and out1 == out2


def test_prove_trace_and_replay(tmp_path, capsys):
    trace = tmp_path / "t.json"
    code, _ = run(capsys, "prove", "66", "--pack", "extended",
                  "--flag", "free-translation", "--flag", "full-orbit=2",
                  "--trace", str(trace))
    assert code == 0
    obj = json.loads(trace.read_text())
    assert obj["n"] == 66
    code, out = run(capsys, "prove", "--replay", str(trace))
    assert code == 0 and "bit-for-bit" in out


def test_status_and_table(capsys):
    code, out = run(capsys, "status", "24")
    assert code == 0 and "pointed: completed" in out and "other: open" in out
    code, out = run(capsys, "status", "42")
    assert code == 0 and "grouplike_orders: 1,2,3" in out and "consistent" in out
    code, out = run(capsys, "table", "--format", "csv")
    assert code == 0 and out.startswith("pattern,")
    assert main(["status", "999"]) == 3
    code, _ = run(capsys, "status", "2")
    assert code == 0


def test_export_round_trip(tmp_path, capsys):
    out_file = tmp_path / "taft3.json"
    code, _ = run(capsys, "export", "taft3", "--out", str(out_file))
    assert code == 0
    from hopfatlas.serialize import dump_algebra, load_algebra

    text = out_file.read_text()
    assert dump_algebra(load_algebra(text)) == text


def test_dual_output(capsys):
    code, out = run(capsys, "dual", "kC2")
    assert code == 0
    obj = json.loads(out)
    assert obj["dim"] == 2 and obj["name"] == "kC2*"


def test_iso_search_and_witness_file(tmp_path, capsys):
    code, out = run(capsys, "iso", "taft2", "dual:taft2")
    assert code == 0
    wfile = tmp_path / "w.json"
    wfile.write_text(out)
    code, out = run(capsys, "iso", "taft2", "dual:taft2", "--witness", str(wfile))
    assert code == 0 and "witness verified" in out


def test_coinv(capsys):
    code, out = run(capsys, "coinv", "h4xc3-to-h4")
    assert code == 0 and "dim coinvariants=3" in out
    code, out = run(capsys, "coinv", "id:h4")
    assert code == 0 and "dim coinvariants=1" in out
    code = main(["coinv", "nope"])
    assert code == 3
