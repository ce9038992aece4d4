"""CLI: exit codes, output stability, schema validity, round-trips."""

import json
from pathlib import Path

import jsonschema
import pytest
from click.testing import CliRunner

from qdistmat import cli
from qdistmat.polyring import Poly
from qdistmat.treekit import load_tree, random_tree

SCHEMA = json.loads(
    (Path(__file__).resolve().parent.parent / "docs" / "output-schema.json").read_text()
)


@pytest.fixture()
def runner():
    return CliRunner()


def validated_json(result):
    payload = json.loads(result.output)
    jsonschema.validate(payload, SCHEMA)
    return payload


def test_det_plain_path4(runner):
    result = runner.invoke(cli.main, ["det", "--path", "4"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "tree: n=4 edges=(1,2,1) (2,3,1) (3,4,1)"
    assert "det(Dq) = -3 - 6*q - 3*q^2" in lines
    assert "closed(Dq) = -3 - 6*q - 3*q^2" in lines
    assert lines[-1] == "result: PASS (4/4)"


def test_det_star_equals_path_determinants(runner):
    a = runner.invoke(cli.main, ["det", "--path", "4", "--output", "json"])
    b = runner.invoke(cli.main, ["det", "--star", "4", "--output", "json"])
    pa, pb = validated_json(a), validated_json(b)
    assert [c["determinant"] for c in pa["checks"]] == [
        c["determinant"] for c in pb["checks"]
    ]


def test_det_json_schema(runner):
    result = runner.invoke(cli.main, ["det", "--random", "5", "--max-weight", "3",
                                      "--seed", "11", "--output", "json"])
    assert result.exit_code == 0
    payload = validated_json(result)
    assert payload["pass"] is True


def test_det_csv(runner):
    result = runner.invoke(cli.main, ["det", "--path", "3", "--output", "csv"])
    assert result.exit_code == 0
    rows = result.output.strip().splitlines()
    assert rows[0] == "name,determinant,closed,pass"
    assert len(rows) == 5


def test_det_rejects_cycle_file(runner, tmp_path):
    bad = tmp_path / "cycle.txt"
    bad.write_text("3\n1 2 1\n2 3 1\n1 3 1\n")
    result = runner.invoke(cli.main, ["det", "--tree", str(bad)])
    assert result.exit_code == 2


def test_det_requires_one_source(runner):
    assert runner.invoke(cli.main, ["det"]).exit_code == 2
    assert runner.invoke(cli.main, ["det", "--path", "3", "--star", "4"]).exit_code == 2


def test_det_identity_failure_exits_1(runner, monkeypatch):
    monkeypatch.setattr(cli, "det_bareiss", lambda m: Poly([777]))
    result = runner.invoke(cli.main, ["det", "--path", "3"])
    assert result.exit_code == 1
    assert "FAIL" in result.output


def test_verify_exhaustive(runner):
    result = runner.invoke(cli.main, ["verify", "--exhaustive", "5"])
    assert result.exit_code == 0
    assert "trees: 125" in result.output
    assert "failures: 0" in result.output
    assert result.output.splitlines()[-1] == "result: PASS"


def test_verify_random_deterministic(runner):
    args = ["verify", "--random", "25", "--n-max", "7", "--max-weight", "4",
            "--seed", "42", "--output", "json"]
    a = runner.invoke(cli.main, args)
    b = runner.invoke(cli.main, args)
    assert a.exit_code == b.exit_code == 0
    assert a.output == b.output
    payload = validated_json(a)
    assert payload["trees"] == 25 and payload["pass"] is True


def test_verify_usage_errors(runner):
    assert runner.invoke(cli.main, ["verify"]).exit_code == 2
    assert runner.invoke(cli.main, ["verify", "--random", "0"]).exit_code == 2
    assert runner.invoke(cli.main, ["verify", "--exhaustive", "8"]).exit_code == 2
    assert runner.invoke(
        cli.main, ["verify", "--exhaustive", "3", "--random", "5"]
    ).exit_code == 2


def test_verify_trials_alias(runner):
    result = runner.invoke(cli.main, ["verify", "--trials", "5", "--seed", "1"])
    assert result.exit_code == 0
    assert "trees: 5" in result.output


def test_perm_table_plain(runner):
    result = runner.invoke(cli.main, ["perm-table", "--path", "3"])
    assert result.exit_code == 0
    out = result.output
    assert "  0: 1 / 1 / 1" in out
    assert "  2: -2 / -2 / -2" in out
    assert "agreement(N): determinant PASS, closed PASS" in out
    assert "agreement(M): determinant PASS, closed PASS" in out


def test_perm_table_csv_path4(runner):
    result = runner.invoke(cli.main, ["perm-table", "--path", "4", "--output", "csv"])
    assert result.exit_code == 0
    rows = result.output.strip().splitlines()
    assert rows[0] == "kind,k,oracle,determinant,closed"
    n_rows = [r for r in rows if r.startswith("N,")]
    assert [r.split(",")[1] for r in n_rows] == [str(k) for k in range(7)]


def test_perm_table_weighted_marks_closed_na(runner):
    result = runner.invoke(
        cli.main, ["perm-table", "--path", "3", "--weights", "2 1"]
    )
    assert result.exit_code == 0
    assert "n/a (weighted)" in result.output


def test_perm_table_json_schema(runner):
    result = runner.invoke(
        cli.main, ["perm-table", "--star", "4", "--output", "json"]
    )
    payload = validated_json(result)
    assert payload["pass"] is True
    assert payload["tables"]["N"]["oracle"]["coeffs"]["0"] == 1


def test_perm_table_k_max(runner):
    result = runner.invoke(
        cli.main, ["perm-table", "--path", "4", "--k-max", "2", "--output", "csv"]
    )
    rows = [r for r in result.output.strip().splitlines()[1:]]
    assert all(int(r.split(",")[1]) <= 2 for r in rows)


def test_perm_table_cap(runner):
    result = runner.invoke(cli.main, ["perm-table", "--random", "10"])
    assert result.exit_code == 2


def test_wiener_plain(runner):
    result = runner.invoke(cli.main, ["wiener", "--path", "4"])
    assert result.exit_code == 0
    assert "wiener polynomial: 3*q + 2*q^2 + q^3" in result.output
    assert "wiener index: 10" in result.output


def test_wiener_json_schema(runner):
    result = runner.invoke(cli.main, ["wiener", "--star", "6", "--output", "json"])
    payload = validated_json(result)
    assert payload["index"] == 5 + 2 * 10


def test_gen_tree_prufer_star(runner):
    result = runner.invoke(cli.main, ["gen-tree", "--prufer", "1 1"])
    assert result.exit_code == 0
    assert result.output == "4\n2 1 1\n3 1 1\n1 4 1\n"


def test_gen_tree_round_trip(runner, tmp_path):
    out = tmp_path / "t.txt"
    result = runner.invoke(
        cli.main, ["gen-tree", "--random", "6", "--seed", "7", "-o", str(out)]
    )
    assert result.exit_code == 0
    assert load_tree(str(out)).edge_set() == random_tree(6, 1, 7).edge_set()


def test_gen_tree_json_round_trip(runner, tmp_path):
    out = tmp_path / "t.json"
    result = runner.invoke(
        cli.main,
        ["gen-tree", "--star", "4", "--weights", "2 3 4", "--output", "json",
         "-o", str(out)],
    )
    assert result.exit_code == 0
    payload = json.loads(out.read_text())
    jsonschema.validate(payload, SCHEMA)
    assert load_tree(str(out)).weights == (2, 3, 4)


def test_enumerate_counts(runner):
    result = runner.invoke(cli.main, ["enumerate", "--exhaustive", "3"])
    assert result.exit_code == 0
    assert len(result.output.strip().splitlines()) == 3


def test_enumerate_json_lines_schema(runner):
    result = runner.invoke(
        cli.main, ["enumerate", "--exhaustive", "4", "--output", "json"]
    )
    lines = result.output.strip().splitlines()
    assert len(lines) == 16
    for line in lines:
        jsonschema.validate(json.loads(line), SCHEMA)


def test_enumerate_cap(runner):
    assert runner.invoke(cli.main, ["enumerate", "--exhaustive", "8"]).exit_code == 2
    assert runner.invoke(cli.main, ["enumerate", "--exhaustive", "1"]).exit_code == 2


def test_backend_command(runner):
    result = runner.invoke(cli.main, ["backend"])
    assert result.output.strip() in ("compiled", "pure")
