import io
import json

from spherex.cli import Table, main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_group_info_text_and_json():
    code, out = run("group", "info", "D:2,2")
    assert code == 0
    assert "order: 40" in out and "num_classes: 16" in out and "[8]" in out
    code, out = run("--format", "json", "group", "info", "BD:3xC:5")
    assert code == 0
    info = json.loads(out)
    assert info["order"] == 60
    assert info["abelianization"] == [4, 5]
    assert info["params"] == {"q": 3, "l": 5}


def test_xi_table_matches_published_cells():
    code, out = run("xi-table", "D:2,2")
    assert code == 0
    cells = {}
    for line in out.splitlines()[1:]:
        label, xi, scaled = line.split()
        cells[label] = (xi, scaled)
    assert cells["rho_1_0"] == ("9/10", "-4")
    assert cells["rho_2_0"] == ("3/5", "-16")
    assert cells["rho_4_1"] == ("31/40", "-9")


def test_ccs_table_lens():
    code, out = run("ccs-table", "C:5,2")
    assert code == 0
    col = [line.split()[2] for line in out.splitlines()[1:]]
    assert col == ["0", "1/5", "2/5", "3/5", "4/5"]


def test_csv_json_round_trip():
    for cmd in ["xi-table", "ccs-table", "char-table", "irreps"]:
        code, csv_text = run("--format", "csv", cmd, "BD:3")
        assert code == 0
        code, json_text = run("--format", "json", cmd, "BD:3")
        assert code == 0
        assert Table.parse_csv(csv_text) == Table.parse_json(json_text)


def test_classify_exit_codes():
    code, out = run("classify", "BD:5")
    assert code == 0 and "verdict: Injective" in out
    code, out = run("--format", "json", "classify", "BT")
    assert code == 0
    rep = json.loads(out)
    assert rep["verdict"] == "Injective"
    assert len(rep["entries"]) == 7
    assert any(lab == "alpha_4" for lab, _ in rep["entries"])


def test_conjecture_scan_cli():
    code, out = run("--format", "json", "conjecture-scan", "--k-max", "2", "--r-max", "2")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert [p["params"] for p in lines] == [[2, 1], [2, 2]]
    assert all(p["status"] == "verified" for p in lines)


def test_usage_errors():
    code, _ = run("xi-table", "NOPE:3")
    assert code == 2
    code, _ = run("xi-table", "C:4,2")
    assert code == 2
    code, _ = run("group", "stats", "BT")
    assert code == 2
    code, _ = run("--element-cap", "5", "xi-table", "BT")
    assert code == 2


def test_spin_override_flag():
    code, out = run("--spin-character", "x=8:5", "xi-table", "D:2,2")
    assert code == 0
    # the override flips the sign of the odd-power defects; table changes
    code2, out2 = run("xi-table", "D:2,2")
    assert out != out2
    code3, _ = run("--spin-character", "x=8:2", "xi-table", "D:2,2")
    assert code3 == 1  # not a square root: verification failure, not usage
