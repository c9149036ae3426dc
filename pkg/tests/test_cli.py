import json

from click.testing import CliRunner

from grundylab.cli import main


def run(*args, env=None):
    return CliRunner().invoke(main, list(args), env=env or {})


def test_analyze_wythoff():
    result = run("analyze", "--family", "wythoff", "--roots", "20,20",
                 "--format", "json")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["verdicts"]["miserable"] is True
    assert data["verdicts"]["forced"] is False


def test_analyze_fixture_pet():
    result = run("analyze", "--fixture", "pet", "--format", "json")
    assert result.exit_code == 0
    assert json.loads(result.output)["verdicts"]["pet"] is True


def test_analyze_mark_witness_8():
    result = run("analyze", "--family", "mark", "--roots", "20",
                 "--format", "json")
    data = json.loads(result.output)
    assert data["verdicts"]["domestic"] is False
    assert data["witnesses"]["domestic"]["position"] == [8]
    assert data["witnesses"]["domestic"]["label"] == [0, 2]


def test_analyze_requires_one_source():
    assert run("analyze", "--roots", "1").exit_code == 2
    assert run("analyze", "--family", "nim", "--fixture", "pet",
               "--roots", "1").exit_code == 2


def test_analyze_requires_positions():
    assert run("analyze", "--family", "nim").exit_code == 2


def test_analyze_bad_params_exit_2():
    result = run("analyze", "--family", "moore_nim", "--n", "3", "--k", "9",
                 "--roots", "1,1,1")
    assert result.exit_code == 2
    assert "error" in result.output


def test_table_p_sequence():
    result = run("table", "--family", "wythoff", "--p-sequence", "--n", "10")
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "n,x,y,convention"
    assert lines[1] == "0,0,0,normal"
    assert lines[2] == "1,1,2,normal"
    assert lines[3] == "2,3,5,normal"
    assert len(lines) == 12


def test_table_p_sequence_misere():
    result = run("table", "--family", "wyt_ab", "--a", "2", "--b", "3",
                 "--p-sequence", "--upto", "5", "--convention", "misere")
    assert result.exit_code == 0
    assert result.output.splitlines()[1] == "0,0,1,misere"


def test_table_sg_nim_xor():
    result = run("table", "--family", "nim", "--piles", "3,5", "--sg")
    assert result.exit_code == 0
    for line in result.output.strip().splitlines():
        if line.startswith(("#", "position")):
            continue
        pos, g, _ = line.split(",")
        x, y = (int(v) for v in pos.split("-"))
        assert int(g) == x ^ y


def test_table_fixture_sg():
    result = run("table", "--fixture", "not_domestic", "--sg")
    lines = result.output.strip().splitlines()
    assert "F,2,0" in lines
    assert "G,3,2" in lines


def test_table_needs_exactly_one_mode():
    assert run("table", "--family", "nim", "--piles", "2").exit_code == 2
    assert run("table", "--family", "nim", "--piles", "2", "--sg",
               "--p-sequence").exit_code == 2


def test_table_cache_round_trip(tmp_path):
    env = {"GRUNDY_CACHE_DIR": str(tmp_path)}
    args = ("table", "--family", "wythoff", "--piles", "6,6", "--sg")
    cold = run(*args, env=env)
    assert cold.exit_code == 0
    assert list(tmp_path.iterdir())
    warm = run(*args, env=env)
    assert warm.exit_code == 0
    assert warm.output == cold.output


def test_table_cache_corruption_recovered(tmp_path):
    env = {"GRUNDY_CACHE_DIR": str(tmp_path)}
    args = ("table", "--family", "nim", "--piles", "2,2", "--sg")
    cold = run(*args, env=env)
    for entry in tmp_path.iterdir():
        entry.unlink()
    rebuilt = run(*args, env=env)
    assert rebuilt.output == cold.output


def test_verify_fixtures_passes():
    result = run("verify", "fixtures")
    assert result.exit_code == 0
    assert "pass" in result.output


def test_verify_json_echoes_seed():
    result = run("verify", "wythoff", "--seed", "7", "--format", "json")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["seed"] == 7
    assert data["ok"] is True


def test_verify_small_sample_all():
    result = run("verify", "all", "--samples", "25")
    assert result.exit_code == 0


def test_verify_unknown_suite():
    assert run("verify", "chess").exit_code == 2


def test_sum_command(tmp_path):
    spec1 = tmp_path / "g1.json"
    spec2 = tmp_path / "g2.json"
    spec1.write_text(json.dumps({"family": "nim", "roots": [[2, 3]]}))
    spec2.write_text(json.dumps({"family": "nim", "roots": [[1, 4]]}))
    out_csv = tmp_path / "product.csv"
    result = run("sum", "--game", str(spec1), "--game", str(spec2),
                 "--target", "forced", "--table", str(out_csv))
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["closure"]["sum_in_class"] is True
    assert data["report"]["verdicts"]["miserable"] is True
    assert out_csv.read_text().startswith("position,g,g_minus")


def test_sum_fixture_specs(tmp_path):
    spec1 = tmp_path / "g1.json"
    spec2 = tmp_path / "g2.json"
    spec1.write_text(json.dumps({"fixture": "sodo_g1"}))
    spec2.write_text(json.dumps({"fixture": "sodo_g2"}))
    result = run("sum", "--game", str(spec1), "--game", str(spec2),
                 "--target", "domestic")
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["closure"]["summands_in_class"] == [True, True]
    assert data["closure"]["sum_in_class"] is False


def test_sum_needs_two_games(tmp_path):
    spec = tmp_path / "g.json"
    spec.write_text(json.dumps({"family": "nim", "roots": [[1]]}))
    assert run("sum", "--game", str(spec)).exit_code == 2


def test_sum_bad_spec(tmp_path):
    spec = tmp_path / "bad.json"
    spec.write_text("{not json")
    other = tmp_path / "ok.json"
    other.write_text(json.dumps({"family": "nim", "roots": [[1]]}))
    assert run("sum", "--game", str(spec), "--game", str(other)).exit_code == 2


def test_fixtures_listing():
    result = run("fixtures")
    assert result.exit_code == 0
    assert "not_domestic" in result.output
    result = run("fixtures", "--format", "json")
    data = json.loads(result.output)
    assert len(data) == 10
    assert all("verdicts" in row for row in data)
