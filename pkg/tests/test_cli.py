import csv
import json
import subprocess
import sys

import pytest

from chordspec import FIXTURES, fixture_path, load_fixture
from chordspec.cli import main
from chordspec.graph import complete_graph, cycle_graph, disjoint_union, parse_edge_list, write_edge_list
from chordspec.report import analyze_graph, canonical_dumps


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", FIXTURES)
def test_analyze_fixtures_ok(name, capsys):
    code, out, _ = run(["analyze", str(fixture_path(name))], capsys)
    assert code == 0
    assert out.rstrip().endswith("status: ok")


def test_analyze_json_round_trip(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, _, _ = run(["analyze", str(fixture_path("six_cliques")), "--json", str(path)], capsys)
    assert code == 0
    text = path.read_text()
    assert canonical_dumps(json.loads(text)) == text
    report = json.loads(text)
    comp = report["components"][0]
    assert comp["predictions"]["theorem8_multiset"] == [
        {"multiplicity": 3, "value": 4},
        {"multiplicity": 1, "value": 5},
        {"multiplicity": 1, "value": 6},
    ]
    assert comp["verification"]["theorem8"]["contained"] is True
    assert len(comp["spectrum"]["values"]) == 16


def test_analyze_json_stdout(capsys):
    code, out, _ = run(["analyze", str(fixture_path("kt_split_2_3_3")), "--json", "-"], capsys)
    assert code == 0
    report = json.loads(out)
    kt = report["components"][0]["predictions"]["kt_split"]
    assert (kt["structure"]["k"], kt["structure"]["t"], kt["structure"]["r"]) == (2, 3, 3)
    assert report["status"] == "ok"


def test_analyze_without_oracle(capsys):
    code, out, _ = run(["analyze", str(fixture_path("windmill_4_3")), "--no-oracle", "--json", "-"], capsys)
    assert code == 0
    comp = json.loads(out)["components"][0]
    assert comp["spectrum"] is None and comp["verification"] is None


def test_analyze_disconnected_and_non_chordal(tmp_path, capsys):
    g = disjoint_union(cycle_graph(5), complete_graph(3))
    p = tmp_path / "g.txt"
    write_edge_list(g, p)
    code, out, _ = run(["analyze", str(p), "--json", "-"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["input"]["connected"] is False
    chordal = [c["chordal"] for c in report["components"]]
    assert chordal == [False, True]
    assert report["components"][1]["vertices"] == [6, 7, 8]


def test_mismatch_exit_code(monkeypatch, capsys):
    import chordspec.report as report

    monkeypatch.setattr(report, "verdicts_ok", lambda v: False)
    code, out, _ = run(["analyze", str(fixture_path("six_cliques"))], capsys)
    assert code == 2


@pytest.mark.parametrize(
    "content",
    ["p 3 1\ne 1 4\n", "garbage\n", "p 2 1\n"],
)
def test_format_errors_exit_1(tmp_path, content, capsys):
    p = tmp_path / "bad.txt"
    p.write_text(content)
    code, _, err = run(["analyze", str(p)], capsys)
    assert code == 1 and "error" in err


def test_missing_file_exit_1(capsys):
    assert run(["classify", "/no/such/file.txt"], capsys)[0] == 1


def test_usage_error_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze"])
    assert exc.value.code == 1


def test_classify(capsys):
    code, out, _ = run(["classify", str(fixture_path("split_complete_2_5")), "--json", "-"], capsys)
    assert code == 0
    comp = json.loads(out)["components"][0]
    assert comp["split_complete"] and comp["threshold"] and comp["threshold_sequence"] == "0000011"


def test_generate_kt_split(capsys):
    code, out, _ = run(["generate", "kt-split", "2", "3", "3"], capsys)
    assert code == 0
    g = parse_edge_list(out)
    assert (g.n, g.m) == (15, 33)


def test_generate_random_is_seeded(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    run(["generate", "random-chordal", "30", "0.7", "--seed", "9", "--out", str(a)], capsys)
    run(["generate", "random-chordal", "30", "0.7", "--seed", "9", "--out", str(b)], capsys)
    assert a.read_bytes() == b.read_bytes()


def test_generate_bad_params(capsys):
    assert run(["generate", "windmill", "1", "3"], capsys)[0] == 1
    assert run(["generate", "windmill", "3"], capsys)[0] == 1


def test_verify_small(tmp_path, capsys):
    code, out, _ = run(
        ["verify", "--families", "qt,chordal,kt-split", "--count", "10", "--max-n", "20", "--out-dir", str(tmp_path)],
        capsys,
    )
    assert code == 0
    assert "FAIL" not in out
    assert list(tmp_path.iterdir()) == []


def test_verify_unknown_family(capsys):
    assert run(["verify", "--families", "nope"], capsys)[0] == 1


def test_bench_csv(tmp_path, capsys):
    path = tmp_path / "b.csv"
    code, _, _ = run(
        ["bench", "--max-n", "400", "--points", "2", "--oracle-max-n", "64", "--repeats", "1", "--csv", str(path)],
        capsys,
    )
    assert code == 0
    rows = list(csv.DictReader(path.open()))
    assert list(rows[0]) == ["n", "m", "t_structural_ms", "t_oracle_ms"]
    ns = [int(r["n"]) for r in rows]
    assert ns[0] == 10 and 400 in ns
    assert rows[-1]["t_oracle_ms"] == "" and rows[0]["t_oracle_ms"] != ""


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chordspec", "generate", "path", "3"], capture_output=True, text=True, check=True
    )
    assert parse_edge_list(proc.stdout).m == 2


def test_canonical_floats():
    text = canonical_dumps({"b": [1.0, -0.0, 2], "a": {"x": None, "y": True}, "c": "s"})
    assert text == (
        '{\n  "a": {\n    "x": null,\n    "y": true\n  },\n'
        '  "b": [1.000000000, 0.000000000, 2],\n  "c": "s"\n}\n'
    )


def test_report_labels_are_file_ids():
    g = load_fixture("windmill_4_3")
    rep = analyze_graph(g, run_oracle=False)
    # the hub s is the seventh node listed in the fixture
    seps = rep["components"][0]["decomposition"]["separators"]
    assert seps == [{"multiplicity": 2, "vertices": [7]}]
