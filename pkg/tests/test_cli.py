from __future__ import annotations

import json
from fractions import Fraction

import pytest

from fanoblowup.cli import main

PAIR_ENTRY = """\
[family-4.2]
n = 3
r = 2
l = 2
vol_v = 8
expect_a = {expected}
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCoeff:
    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "coeff", "--dim", "3", "--index", "3/2")
        assert code == 0
        assert out.splitlines() == ["9/52", "decimal: 0.173076923077"]

    def test_quiet(self, capsys):
        code, out, _ = run(capsys, "coeff", "--dim", "4", "--index", "2", "--quiet")
        assert code == 0
        assert out == "13/75\n"

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "coeff", "--dim", "3", "--index", "3", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc == {"n": 3, "r": "3", "a": "33/152", "decimal": "0.217105263158"}
        assert Fraction(doc["a"]) == Fraction(33, 152)

    def test_invalid_index_exits_2(self, capsys):
        code, _, err = run(capsys, "coeff", "--dim", "3", "--index", "1")
        assert code == 2
        assert "r must exceed 1" in err

    def test_unparsable_flag_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["coeff", "--dim", "3", "--index", "x/y"])
        assert exc.value.code == 2


class TestInvariants:
    def test_pair_case_text(self, capsys):
        code, out, _ = run(capsys, "invariants", "--dim", "3", "--index", "2", "--l", "2", "--vol-v", "8")
        assert code == 0
        assert "classification reduces-to-pair a=11/56" in out
        assert "s_v0       1" in out and "s_vinf     1" in out

    def test_unstable_case_text(self, capsys):
        code, out, _ = run(capsys, "invariants", "--dim", "3", "--index", "3", "--l", "3")
        assert code == 0
        assert "classification k-unstable destabilizer=infinity-section beta=-15/128" in out

    def test_json_schema_and_values(self, capsys):
        code, out, _ = run(capsys, "invariants", "--dim", "3", "--index", "2", "--l", "2", "--vol-v", "8", "--json")
        assert code == 0
        doc = json.loads(out)
        assert list(doc) == ["n", "r", "l", "vol_v", "vol_y", "s_v0", "s_vinf", "beta_v0", "beta_vinf", "classification"]
        assert doc["vol_y"] == "28"
        assert doc["classification"] == {"kind": "reduces-to-pair", "a": "11/56"}
        assert Fraction(doc["vol_y"]) == 28

    def test_inadmissible_l_exits_2(self, capsys):
        code, _, err = run(capsys, "invariants", "--dim", "3", "--index", "2", "--l", "5")
        assert code == 2
        assert "l must satisfy" in err

    def test_deterministic_json(self, capsys):
        argv = ("invariants", "--dim", "4", "--index", "3", "--l", "5/2", "--json")
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert first == second


class TestCatalog:
    def test_default_catalog_passes(self, capsys):
        code, out, _ = run(capsys, "catalog")
        assert code == 0
        assert "FAIL" not in out
        assert out.strip().endswith("entries passed")

    def test_default_catalog_json(self, capsys):
        code, out, _ = run(capsys, "catalog", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["passed"] == doc["total"] == len(doc["entries"])
        entry = doc["entries"][0]
        assert list(entry)[0] == "name" and list(entry)[-1] == "pass"
        for key in ("r", "l", "vol_v", "vol_y", "s_v0", "s_vinf", "beta_v0", "beta_vinf"):
            Fraction(entry[key])  # every rational field round-trips

    def test_expectation_mismatch_exits_1(self, tmp_path, capsys):
        path = tmp_path / "bad.cfg"
        path.write_text(PAIR_ENTRY.format(expected="1/2"), encoding="utf-8")
        code, out, _ = run(capsys, "catalog", str(path))
        assert code == 1
        assert "FAIL family-4.2" in out
        assert "11/56 ≠ 1/2" in out

    def test_correct_expectation_exits_0(self, tmp_path, capsys):
        path = tmp_path / "good.cfg"
        path.write_text(PAIR_ENTRY.format(expected="11/56"), encoding="utf-8")
        code, out, _ = run(capsys, "catalog", str(path))
        assert code == 0
        assert "PASS family-4.2: reduces-to-pair a=11/56" in out

    def test_empty_catalog_exits_0(self, tmp_path, capsys):
        path = tmp_path / "empty.cfg"
        path.write_text("", encoding="utf-8")
        code, out, _ = run(capsys, "catalog", str(path))
        assert code == 0
        assert "0/0 entries passed" in out

    def test_parse_error_exits_2_with_location(self, tmp_path, capsys):
        path = tmp_path / "broken.cfg"
        path.write_text("[entry]\nn = 3\nr 2\n", encoding="utf-8")
        code, _, err = run(capsys, "catalog", str(path))
        assert code == 2
        assert "line" in err and "3" in err

    def test_unknown_key_exits_2(self, tmp_path, capsys):
        path = tmp_path / "odd.cfg"
        path.write_text("[entry]\nn = 3\nr = 2\nl = 2\nvolume = 1\n", encoding="utf-8")
        code, _, err = run(capsys, "catalog", str(path))
        assert code == 2
        assert "unknown key" in err

    def test_inadmissible_entry_exits_2(self, tmp_path, capsys):
        path = tmp_path / "inadmissible.cfg"
        path.write_text("[entry]\nn = 3\nr = 1\nl = 0\n", encoding="utf-8")
        code, _, err = run(capsys, "catalog", str(path))
        assert code == 2
        assert "r must exceed 1" in err

    def test_quiet_hides_passing_entries(self, capsys):
        code, out, _ = run(capsys, "catalog", "--quiet")
        assert code == 0
        assert "PASS" not in out

    def test_missing_file_exits_2(self, tmp_path, capsys):
        code, _, err = run(capsys, "catalog", str(tmp_path / "nope.cfg"))
        assert code == 2
        assert "cannot read catalog" in err


class TestRefine:
    def test_rows_text(self, capsys):
        code, out, _ = run(capsys, "refine", "--dim", "3", "--index", "3", "--base", "ps:2:1", "--m", "1,2")
        assert code == 0
        assert "m=1    a_m=3/11" in out
        assert "m=2    a_m=51/200" in out
        assert "target a(3,3) = 33/152" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "refine", "--dim", "3", "--index", "3", "--base", "ps:2:1", "--m", "2,1", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["target"] == "33/152"
        assert [row["m"] for row in doc["rows"]] == [1, 2]
        assert doc["rows"][0]["a_m"] == "3/11"

    def test_fractional_stride_exits_2(self, capsys):
        code, _, err = run(capsys, "refine", "--dim", "3", "--index", "3/2", "--base", "ps:2:2", "--m", "3")
        assert code == 2
        assert "multiples of 2" in err

    def test_valid_even_m_for_half_integer_r(self, capsys):
        code, out, _ = run(capsys, "refine", "--dim", "3", "--index", "3/2", "--base", "ps:2:2", "--m", "2")
        assert code == 0
        assert "a_m=27/140" in out

    def test_base_mismatch_exits_2(self, capsys):
        code, _, err = run(capsys, "refine", "--dim", "3", "--index", "2", "--base", "ps:2:3", "--m", "2")
        assert code == 2
        assert "base mismatch" in err

    def test_unknown_base_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["refine", "--dim", "3", "--index", "3", "--base", "grassmannian:2:4", "--m", "1"])
        assert exc.value.code == 2


class TestGlobalFlags:
    def test_json_before_subcommand(self, capsys):
        code, out, _ = run(capsys, "--json", "coeff", "--dim", "4", "--index", "2")
        assert code == 0
        assert json.loads(out)["a"] == "13/75"
