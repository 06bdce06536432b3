import json

from codegrees import cli


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def test_table_text(capsys):
    code, out = run(capsys, ["table", "name:S4"])
    assert code == 0
    assert "S4" in out and "24" in out


def test_table_json(capsys):
    code, out = run(capsys, ["--format", "json", "table", "name:S4"])
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 24
    assert sorted(payload["degrees"]) == [1, 1, 2, 3, 3]
    assert len(payload["characters"]) == 5


def test_table_perm_spec(capsys):
    code, out = run(capsys,
                    ["--format", "json", "table", "perm:3:(1,2,3);(1,2)"])
    assert code == 0
    assert json.loads(out)["order"] == 6


def test_table_mat_spec(capsys):
    # SL(2,3) inside GL(2,3)
    spec = "mat:p=3,d=2:0,2,1,0;1,1,0,1"
    code, out = run(capsys, ["--format", "json", "table", spec])
    assert code == 0
    assert json.loads(out)["order"] == 24


def test_invariants_json(capsys):
    code, out = run(capsys, ["--format", "json", "invariants", "name:S4"])
    assert code == 0
    payload = json.loads(out)
    assert payload["codegrees"] == [1, 2, 3, 8]
    assert payload["fitting"]["height"] == 3
    assert payload["normal_subgroup_orders"] == [1, 4, 12, 24]


def test_invariants_trivial_group(capsys):
    code, out = run(capsys, ["--format", "json", "invariants", "perm:1:"])
    assert code == 0
    assert json.loads(out)["fitting"]["height"] == 0


def test_verify_single(capsys):
    code, out = run(capsys, ["verify", "cor1.2", "name:S4"])
    assert code == 0
    assert "pass" in out


def test_verify_catalog_group_json(capsys):
    code, out = run(capsys,
                    ["--format", "json", "verify", "--catalog", "S4"])
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 6
    assert all(r["status"] in ("pass", "skipped") for r in reports)


def test_verify_csv_header(capsys):
    code, out = run(capsys,
                    ["--format", "csv", "verify", "cor1.2", "name:S4"])
    assert code == 0
    header = out.splitlines()[0]
    assert header.startswith("group,check,status")


def test_catalog_list(capsys):
    code, out = run(capsys, ["catalog"])
    assert code == 0
    assert "S4" in out and "CSU(2,3)" in out


def test_usage_errors(capsys):
    assert cli.main(["table", "name:NoSuchGroup"]) == cli.EXIT_USAGE
    capsys.readouterr()
    assert cli.main(["table", "perm:3:(1,2"]) == cli.EXIT_USAGE
    capsys.readouterr()
    assert cli.main(["verify", "badcheck", "name:S4"]) == cli.EXIT_USAGE
    capsys.readouterr()


def test_order_cap(capsys):
    assert cli.main(["--order-cap", "10", "table", "name:S4"]) == \
        cli.EXIT_CAP
    capsys.readouterr()


def test_config_env(capsys, monkeypatch, tmp_path):
    cfg = tmp_path / "config.json"
    cfg.write_text(json.dumps({"order_cap": 10, "format": "json"}))
    monkeypatch.setenv("CODEGREES_CONFIG", str(cfg))
    assert cli.main(["table", "name:S4"]) == cli.EXIT_CAP
    capsys.readouterr()
    # explicit flag overrides the config default
    assert cli.main(["--order-cap", "100", "table", "name:S4"]) == 0
    capsys.readouterr()
