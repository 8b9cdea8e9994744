import json
import subprocess
import sys

import pytest

from atomgenus.cli import main

G1_TEXT = "v0: h0 h1 h2 h3\ne: h0 h1\ne: h2 h3\n"
G2_TEXT = "v0: h0 h1 h2 h3\ne: h0 h2\ne: h1 h3\n"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_planar_verb(capsys):
    code, out = run(capsys, "planar", "--chord", "1 2 1 2 ; ++")
    assert code == 0 and out.strip() == "planar: true"
    code, out = run(capsys, "planar", "--chord", "1 2 3 1 2 3 ; +++")
    assert code == 1 and out.strip() == "planar: false"


def test_genus_verb_json(capsys):
    code, out = run(capsys, "genus", "--chord", "1 2 3 1 2 3 ; +++", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["min_rank_sum"] == 2
    assert "torus" in report["surfaces"]


def test_bracket_and_genfun(capsys):
    code, out = run(capsys, "bracket", "--chord", "1 1 ; +")
    assert code == 0 and out.strip() == "-a^3"
    _, out = run(capsys, "genfun", "--chord", "1 2 1 2 ; ++")
    assert out.strip() == "2x^4+2x^2"
    _, out = run(capsys, "genfun", "--chord", "1 2 1 2 ; ++", "--exponent", "genus")
    assert out.strip() == "2x^4+2x^3"
    _, out = run(capsys, "weight", "--chord", "1 1 ; +")
    assert out.strip() == "2n^3-2n"


def test_genfun_tilde_extension_note(capsys):
    _, out = run(capsys, "genfun-tilde", "--chord", "1 1 ; 1:-")
    assert out.startswith("2x^2+2x")
    assert "extension" in out


def test_rp2_klein_exit_codes(capsys):
    assert run(capsys, "rp2", "--chord", "1 1 ; 1:-")[0] == 0
    assert run(capsys, "rp2", "--chord", "1 2 1 2 ; ++")[0] == 1
    assert run(capsys, "klein", "--chord", "1 1 2 2 ; 1:- 2:-")[0] == 0
    assert run(capsys, "klein", "--chord", "1 1 ; 1:-")[0] == 1


def test_input_errors_exit_2(capsys):
    code = main(["planar", "--chord", "1 2 1"])
    assert code == 2
    code = main(["genus", "--graph", "/nonexistent/path.txt"])
    assert code == 2
    code = main(["planar", "--chord", "1 1", "--graph", "x.txt"])
    assert code == 2
    big = " ".join(str(i) for i in list(range(1, 17)) * 2)
    code = main(["weight", "--chord", big])
    assert code == 2


def test_convert_and_round_trip(tmp_path, capsys):
    path = tmp_path / "g1.txt"
    path.write_text(G1_TEXT)
    code, out = run(capsys, "convert", "--graph", str(path))
    assert code == 0
    assert out.splitlines()[0] == "1 1 ; 1:+"

    code, direct = run(capsys, "genus", "--graph", str(path), "--json")
    assert code == 0
    code, via_chord = run(capsys, "genus", "--chord", out.splitlines()[0], "--json")
    assert json.loads(direct) == json.loads(via_chord)

    path2 = tmp_path / "g2.txt"
    path2.write_text(G2_TEXT)
    _, out = run(capsys, "convert", "--graph", str(path2))
    assert out.splitlines()[0] == "1 1 ; 1:-"


def test_chord_file_batch(tmp_path, capsys):
    path = tmp_path / "batch.txt"
    path.write_text("1 1 ; +\n1 2 1 2 ; ++\n")
    code, out = run(capsys, "bracket", "--chord-file", str(path))
    assert code == 0
    assert out.splitlines() == ["-a^3", "-a^2-a^-2"]


def test_random_is_seeded(capsys):
    _, a = run(capsys, "random", "--seed", "42", "--size", "5")
    _, b = run(capsys, "random", "--seed", "42", "--size", "5")
    assert a == b
    _, c = run(capsys, "random", "--seed", "43", "--size", "5")
    assert a != c
    _, g = run(capsys, "random", "--seed", "1", "--size", "3", "--kind", "graph")
    assert g.startswith("v0:")


def test_check_verb(capsys):
    code, out = run(capsys, "check", "degree", "--max-k", "3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["violations"] == [] and payload["cases"] > 0


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "atomgenus.cli", "planar", "--chord", "1 1 ; +"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "planar: true"
