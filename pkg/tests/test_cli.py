import json

import pytest

from opball.cli import main
from opball.jsonio import dumps


@pytest.fixture
def hexagon_file(tmp_path):
    path = tmp_path / "hexagon.json"
    path.write_text(json.dumps({
        "dim": 2,
        "kind": "polytopal",
        "vertices": [["1", "0"], ["1/2", "1"], ["-1/2", "1"]],
    }))
    return str(path)


def write_operator(tmp_path, matrix, domain, codomain, name="op.json"):
    path = tmp_path / name
    path.write_text(json.dumps({"domain": domain, "codomain": codomain, "matrix": matrix}))
    return str(path)


LP2 = {"dim": 2, "kind": "lp", "p": "2"}
L1_2 = {"dim": 2, "kind": "lp", "p": "1"}
LINF2 = {"dim": 2, "kind": "lp", "p": "inf"}


class TestNorm:
    def test_l1_shorthand(self, capsys):
        assert main(["norm", "--space", "l1:2", "--vector", "1/2,-1/2"]) == 0
        assert capsys.readouterr().out.strip() == "1"

    def test_hexagon_file(self, capsys, hexagon_file):
        assert main(["norm", "--space", hexagon_file, "--vector", "1,0"]) == 0
        assert capsys.readouterr().out.strip() == "1"

    def test_decimal_vector_rejected(self, capsys):
        assert main(["norm", "--space", "l1:2", "--vector", "1.5,0"]) == 2

    def test_json_output(self, capsys):
        assert main(["norm", "--space", "l2:2", "--vector", "3/5,4/5", "--json"]) == 0
        assert json.loads(capsys.readouterr().out) == {"norm": "1", "squared": True}


class TestExtreme:
    def test_unit_row_projection(self, capsys, tmp_path):
        op = write_operator(tmp_path, [["1", "0"], ["1", "0"]], LP2, LINF2)
        assert main(["extreme", op]) == 0
        out = capsys.readouterr().out
        assert "extreme (unit_row_rule)" in out

    def test_witness_printed(self, capsys, tmp_path):
        op = write_operator(tmp_path, [["1/2", "0"], ["1/2", "1"]], L1_2, L1_2)
        assert main(["extreme", op]) == 0
        out = capsys.readouterr().out
        assert "not_extreme" in out and "witness" in out

    def test_norm_violation_exit_code(self, capsys, tmp_path):
        op = write_operator(tmp_path, [["2", "0"], ["0", "1"]], L1_2, L1_2)
        assert main(["extreme", op]) == 3
        assert "2" in capsys.readouterr().err

    def test_json_determinism(self, capsys, tmp_path):
        op = write_operator(tmp_path, [["1", "0"], ["0", "1"]], L1_2, L1_2)
        outputs = set()
        for _ in range(3):
            assert main(["extreme", op, "--json"]) == 0
            outputs.add(capsys.readouterr().out)
        assert len(outputs) == 1

    def test_schema_error_exit_code(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"domain": L1_2, "codomain": L1_2, "matrix": [["1.5", "0"], ["0", "1"]]}))
        assert main(["extreme", str(path)]) == 2


class TestEnumerate:
    def test_count_line(self, capsys):
        assert main(["enumerate", "--pair", "l1:2", "l1:2", "--limit", "0"]) == 0
        assert "16 extreme contractions" in capsys.readouterr().out

    def test_hexagon_pair(self, capsys, hexagon_file):
        assert main(["enumerate", "--pair", "l1:2", hexagon_file, "--limit", "2"]) == 0
        out = capsys.readouterr().out
        assert "36 extreme contractions" in out
        assert "34 more" in out

    def test_size_cap_exit(self, capsys):
        assert main(["enumerate", "--pair", "linf:4", "l1:4"]) == 4

    def test_json_listing(self, capsys):
        assert main(["enumerate", "--pair", "l1:2", "linf:2", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["count"] == 16 and len(doc["operators"]) == 16


class TestLpProperty:
    def test_holds_exit_zero(self, capsys):
        assert main(["lp-property", "--pair", "l1:2", "linf:2"]) == 0
        assert "holds" in capsys.readouterr().out

    def test_fails_exit_one_with_witness(self, capsys):
        assert main(["lp-property", "--pair", "l2:2", "linf:2"]) == 1
        out = capsys.readouterr().out
        assert "fails" in out and "forward violation" in out

    def test_json_report(self, capsys):
        assert main(["lp-property", "--pair", "l2:2", "linf:2", "--json"]) == 1
        doc = json.loads(capsys.readouterr().out)
        assert doc["holds"] is False
        assert doc["forward_violations"][0]["operator"] == [["1", "0"], ["1", "0"]]


class TestAudit:
    def test_identity_audit(self, capsys, tmp_path):
        op = write_operator(tmp_path, [["1", "0"], ["0", "1"]], L1_2, L1_2)
        assert main(["audit", op]) == 0
        out = capsys.readouterr().out
        assert "span: pass" in out

    def test_euclidean_domain_not_applicable(self, capsys, tmp_path):
        op = write_operator(tmp_path, [["1", "0"], ["0", "1"]], LP2, LINF2)
        assert main(["audit", op]) == 0
        assert "not_applicable" in capsys.readouterr().out

    def test_not_extreme_rejected(self, capsys, tmp_path):
        op = write_operator(tmp_path, [["1/2", "0"], ["1/2", "1"]], L1_2, L1_2)
        assert main(["audit", op]) == 2
