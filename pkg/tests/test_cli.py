import json
import subprocess
import sys

import pytest

from cayleyham.cli import main
from cayleyham.export import load_certificate_json, load_graph_json


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_solve_s3z3(capsys):
    code, out = run(["solve", "--preset", "s3z3"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert rep["certificates"]["theorem"]["kind"] == "Cycle"
    assert rep["certificates"]["theorem"]["length"] == 18


def test_solve_a5_reports_both_cycles(capsys):
    code, out = run(["solve", "--preset", "a5"], capsys)
    rep = json.loads(out)
    certs = rep["certificates"]
    assert code == 0
    assert (certs["theorem"]["kind"], certs["theorem"]["length"]) == ("NearCycle2", 58)
    assert (certs["augmented"]["kind"], certs["augmented"]["length"]) == ("Cycle", 60)
    assert certs["path"]["length"] == 60
    assert rep["augmentation"] == {"found": True, "sgons": 2, "hexagons": 13}


def test_no_augment_flag(capsys):
    code, out = run(["solve", "--preset", "a4", "--no-augment"], capsys)
    rep = json.loads(out)
    assert rep["certificates"]["augmented"] is None and rep["augmentation"] is None


def test_bad_presentation_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("a^2 = b^2 = (a*b)^3 = 1\n")
    assert main(["solve", "--presentation", str(bad)]) == 2


def test_syntax_error_exit_2(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("a^2 = b^4 = (a*b^3 = 1\n")
    assert main(["solve", "--presentation", str(bad)]) == 2


def test_invalid_permutations_exit_2(tmp_path):
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"degree": 4, "a": [1, 0, 2, 3], "b": [1, 2, 0, 3], "s": 3}))
    assert main(["solve", "--perms", str(f)]) == 2


def test_missing_file_exit_2(tmp_path):
    assert main(["analyze", "--perms", str(tmp_path / "nope.json")]) == 2


def test_unknown_preset_exit_2():
    assert main(["analyze", "--preset", "klein"]) == 2


def test_budget_exit_3(capsys):
    assert main(["solve", "--preset", "a5", "--budget", "3"]) == 3


def test_presentation_input(tmp_path, capsys):
    f = tmp_path / "s4.txt"
    f.write_text("a^2 = b^4 = (a*b)^3 = 1\n")
    code, out = run(["solve", "--presentation", str(f), "--no-augment"], capsys)
    assert code == 0 and json.loads(out)["certificates"]["theorem"]["length"] == 22


def test_perms_input(tmp_path, capsys):
    f = tmp_path / "agl.json"
    f.write_text(json.dumps({"degree": 7, "a": [0, 6, 5, 4, 3, 2, 1], "b": [1, 4, 0, 3, 6, 2, 5], "s": 6}))
    code, out = run(["solve", "--perms", str(f)], capsys)
    rep = json.loads(out)
    theorem = rep["certificates"]["theorem"]
    assert code == 0 and (theorem["kind"], theorem["length"]) == ("Cycle", 42)


@pytest.mark.parametrize("preset,expected", [
    ("q8s3", {"n": 16, "girth": 6, "zeta": 6, "exceptional": "None"}),
    ("a4", {"n": 4, "girth": 3, "zeta": 3, "exceptional": "K4"}),
    ("z6", {"n": 2, "girth": 2, "zeta": 2, "exceptional": "Theta2"}),
])
def test_analyze(preset, expected, capsys):
    code, out = run(["analyze", "--preset", preset], capsys)
    rep = json.loads(out)
    assert code == 0 and {k: rep[k] for k in expected} == expected


def test_round_trip_and_tamper(tmp_path, capsys):
    out = tmp_path / "s4"
    assert main(["solve", "--preset", "s4", "--out", str(out)]) == 0
    capsys.readouterr()
    for name in ("theorem", "path", "augmented"):
        assert main(["verify", str(out / "graph.json"), str(out / f"{name}.json")]) == 0
    capsys.readouterr()
    cert = json.loads((out / "augmented.json").read_text())
    v = cert["vertices"]
    v[3], v[4] = v[4], v[3]
    (tmp_path / "tampered.json").write_text(json.dumps(cert))
    assert main(["verify", str(out / "graph.json"), str(tmp_path / "tampered.json")]) == 1
    report = json.loads(capsys.readouterr().out)
    assert not report["ok"] and report["failures"]


def test_certificate_for_wrong_graph(tmp_path, capsys):
    assert main(["solve", "--preset", "s4", "--out", str(tmp_path / "s4")]) == 0
    assert main(["solve", "--preset", "a4", "--out", str(tmp_path / "a4")]) == 0
    assert main(["verify", str(tmp_path / "s4" / "graph.json"), str(tmp_path / "a4" / "path.json")]) == 1


def test_verify_parse_error_exit_2(tmp_path):
    g = tmp_path / "g.json"
    g.write_text("{not json")
    assert main(["verify", str(g), str(g)]) == 2


def test_export_z6_dot(capsys):
    code, out = run(["export", "--preset", "z6", "--dot"], capsys)
    assert code == 0
    assert out.startswith("graph ")
    assert sum(1 for line in out.splitlines() if "[label=\"" in line) == 6
    assert sum(1 for line in out.splitlines() if " -- " in line) == 9
    assert "label=a" in out and "label=b" in out


def test_export_highlight(tmp_path, capsys):
    main(["solve", "--preset", "s4", "--out", str(tmp_path)])
    capsys.readouterr()
    code, out = run(["export", "--preset", "s4", "--dot", "--highlight", str(tmp_path / "augmented.json")], capsys)
    assert code == 0
    assert sum(1 for line in out.splitlines() if "[label=\"" in line) == 24
    assert sum(1 for line in out.splitlines() if "highlight=true" in line) == 24


def test_export_highlight_rejects_bad_certificate(tmp_path, capsys):
    main(["solve", "--preset", "a4", "--out", str(tmp_path)])
    assert main(["export", "--preset", "s4", "--highlight", str(tmp_path / "path.json")]) == 1


def test_export_a5_json(capsys):
    code, out = run(["export", "--preset", "a5", "--json"], capsys)
    d = json.loads(out)
    assert (len(d["vertices"]), len(d["edges"]), len(d["hexagons"]), len(d["sgons"])) == (60, 90, 20, 12)
    words, adj = load_graph_json(d)
    assert all(len(a) == 3 for a in adj)


def test_export_hex_graph(tmp_path, capsys):
    assert main(["export", "--preset", "q8s3", "--hex", "cosets", "--json", "--out", str(tmp_path)]) == 0
    d = json.loads((tmp_path / "hex_cosets.json").read_text())
    assert len(d["vertices"]) == 16 and len(d["edges"]) == 24
    code, out = run(["export", "--preset", "q8s3", "--hex", "faces"], capsys)
    assert out.count(" -- ") == 24


def test_human_summary(capsys):
    code, out = run(["solve", "--preset", "a5", "--human"], capsys)
    assert "NearCycle2 of length 58" in out and "Cycle of length 60" in out


def test_byte_identical_reports(capsys):
    _, first = run(["solve", "--preset", "q8s3"], capsys)
    _, second = run(["solve", "--preset", "q8s3", "--threads", "2"], capsys)
    assert first == second


def test_timings_only_on_request(capsys):
    _, out = run(["solve", "--preset", "z6"], capsys)
    assert "timings" not in json.loads(out)
    _, out = run(["solve", "--preset", "z6", "--timings"], capsys)
    assert "timings" in json.loads(out)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cayleyham", "analyze", "--preset", "a4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["exceptional"] == "K4"


def test_unknown_certificate_names_fail_verification():
    words = ["e", "a", "b"]
    cert = load_certificate_json({"kind": "Path", "vertices": ["e", "zz", "b"]}, words)
    assert cert.vertices == (0, -1, 2)
