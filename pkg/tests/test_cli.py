import csv
import io
import json

from click.testing import CliRunner

from powergraphkit.cli import main


def run_cli(*args):
    return CliRunner().invoke(main, list(args))


def test_analyze_json_z18():
    result = run_cli("analyze", "zn:18", "--format", "json")
    assert result.exit_code == 0
    data = json.loads(result.output)
    inv = data["invariants"]
    assert inv["chromatic_number"] == 15
    assert inv["clique_number"] == 15
    assert inv["radius"] == 1
    assert inv["psi"] == 15


def test_analyze_z9_complete_not_planar():
    result = run_cli("analyze", "zn:9")
    data = json.loads(result.output)
    assert data["invariants"]["complete"] is True
    assert data["structure"]["planar"] is False


def test_analyze_product_12x12_contains_hole_witness():
    result = run_cli("analyze", "prod:12x12")
    assert result.exit_code == 0
    data = json.loads(result.output)
    hole = data["structure"]["shortest_even_hole"]
    assert hole is not None and len(hole) >= 4
    assert data["structure"]["odd_hole"] is None
    assert data["structure"]["anti_hole"] is None


def test_analyze_text_and_csv_forms():
    text = run_cli("analyze", "zn:12", "--format", "text")
    assert text.exit_code == 0
    assert "chromatic number: 9" in text.output
    result = run_cli("analyze", "zn:12", "--format", "csv")
    rows = list(csv.reader(io.StringIO(result.output)))
    assert rows[0][0] == "spec"
    assert rows[1][0] == "zn:12"
    header = dict(zip(rows[0], rows[1]))
    assert header["chromatic_number"] == "9"
    assert header["chordal"] == "True"


def test_analyze_parse_error_exit_2():
    result = run_cli("analyze", "zn:abc")
    assert result.exit_code == 2


def test_analyze_cap_violation_exit_3():
    result = run_cli("analyze", "zn:9999")
    assert result.exit_code == 3
    result = run_cli("analyze", "zn:50", "--order-cap", "10")
    assert result.exit_code == 3


def test_verify_single_theorem():
    result = run_cli("verify", "zn:30", "--theorem", "S6.no-odd-holes")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["outcomes"][0]["outcome"] == "pass"


def test_verify_unknown_theorem_exit_2():
    result = run_cli("verify", "zn:30", "--theorem", "S0.bogus")
    assert result.exit_code == 2


def test_verify_requires_selection():
    result = run_cli("verify", "zn:30")
    assert result.exit_code == 2


def test_verify_sweep_all_small_range():
    result = run_cli("verify", "--all", "--family", "zn", "--range", "2..12")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["summary"]["fail"] == 0
    assert data["summary"]["pass"] == len(data["outcomes"])


def test_verify_csv_output():
    result = run_cli("verify", "un:45", "--theorem", "S5.alpha-equal", "--format", "csv")
    assert result.exit_code == 0
    rows = list(csv.reader(io.StringIO(result.output)))
    assert rows[0] == ["theorem", "spec", "outcome", "witness"]
    assert rows[1][:3] == ["S5.alpha-equal", "un:45", "pass"]


def test_verify_deterministic_output_bytes():
    args = ("verify", "--all", "--family", "zn", "--range", "2..20")
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.output == second.output


def test_verify_bad_range_exit_2():
    result = run_cli("verify", "--all", "--family", "zn", "--range", "2--20")
    assert result.exit_code == 2


def test_export_cg_hasse_z18(tmp_path):
    out = tmp_path / "c18.dot"
    result = run_cli("export", "zn:18", "--graph", "cg-hasse", "--out", str(out))
    assert result.exit_code == 0
    text = out.read_text()
    assert text.startswith("digraph")
    assert text.count("[label=") == 6
    assert 'label="Z_18(6)"' in text
    weights = sorted(
        int(line.split("(")[1].split(")")[0])
        for line in text.splitlines()
        if "[label=" in line
    )
    assert weights == [1, 1, 2, 2, 6, 6]


def test_export_dpg_mutual_generator_edges():
    result = run_cli("export", "zn:6", "--graph", "dpg")
    assert result.exit_code == 0
    assert "1 -> 5;" in result.output
    assert "5 -> 1;" in result.output


def test_export_pg_single_vertex():
    result = run_cli("export", "zn:1", "--graph", "pg")
    assert result.exit_code == 0
    assert result.output.startswith("graph")
    assert "--" not in result.output


def test_export_unwritable_path_exit_4(tmp_path):
    target = tmp_path / "missing-dir" / "out.dot"
    result = run_cli("export", "zn:6", "--graph", "pg", "--out", str(target))
    assert result.exit_code == 4


def test_export_determinism():
    a = run_cli("export", "zn:18", "--graph", "cg")
    b = run_cli("export", "zn:18", "--graph", "cg")
    assert a.output == b.output


def test_verify_exit_1_on_failure(monkeypatch):
    import powergraphkit.verify as verify_mod

    def always_fail(group, caps):
        return "fail", {"forced": True}

    broken = verify_mod.TheoremCheck(
        "S2.connected", ("zn",), always_fail, verify_mod._always
    )
    monkeypatch.setitem(verify_mod.CHECKS, "S2.connected", broken)
    result = run_cli("verify", "zn:6", "--theorem", "S2.connected")
    assert result.exit_code == 1
    data = json.loads(result.output)
    assert data["summary"]["fail"] == 1
    assert data["outcomes"][0]["witness"] == {"forced": True}


def test_verify_cap_violation_exit_3():
    result = run_cli("verify", "zn:9999", "--theorem", "S2.connected")
    assert result.exit_code == 3


def test_order_cap_env_var_respected():
    runner = CliRunner()
    result = runner.invoke(
        main, ["analyze", "zn:50"], env={"PGK_ORDER_CAP": "10"}
    )
    assert result.exit_code == 3
    # flag wins over the environment
    result = runner.invoke(
        main,
        ["analyze", "zn:50", "--order-cap", "100"],
        env={"PGK_ORDER_CAP": "10"},
    )
    assert result.exit_code == 0


def test_analyze_tiny_budget_reports_unknown_not_error():
    result = run_cli("analyze", "zn:60", "--search-budget", "3",
                     "--hamiltonian-budget", "5")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["invariants"]["clique_number"] is None
    assert data["invariants"]["notes"]
    assert data["structure"]["hamiltonian"] is None


def test_analyze_json_reparses_with_stable_key_order():
    result = run_cli("analyze", "zn:18")
    data = json.loads(result.output)
    assert list(data) == ["schema", "invariants", "structure"]
    assert list(data["invariants"]) == [
        "spec", "order", "connected", "complete", "radius", "diameter",
        "center", "clique_number", "chromatic_number", "independence_number",
        "psi", "longest_directed_path", "notes",
    ]
    assert list(data["structure"]) == [
        "spec", "complete", "chordal", "hole_witness", "simplicial",
        "claw_free", "claw_witness", "planar", "hamiltonian",
        "hamiltonian_cycle", "odd_hole", "anti_hole", "shortest_even_hole",
        "notes",
    ]


def test_verify_jobs_flag_is_deterministic():
    serial = run_cli("verify", "--all", "--family", "zn", "--range", "2..8", "--jobs", "1")
    parallel = run_cli("verify", "--all", "--family", "zn", "--range", "2..8", "--jobs", "2")
    assert serial.exit_code == parallel.exit_code == 0
    assert serial.output == parallel.output
