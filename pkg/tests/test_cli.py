import json

import pytest

from cyclicsb.cli import main, parse_scalar_token
from cyclicsb.scalars import SymbolicScalar

GAMMA = SymbolicScalar.symbol("gamma")


class TestScalarTokens:
    def test_rational(self):
        assert parse_scalar_token("1") == SymbolicScalar.unit(1)
        assert parse_scalar_token("-2/3") == SymbolicScalar.unit(-2) / 3

    def test_gamma_forms(self):
        assert parse_scalar_token("gamma") == GAMMA
        assert parse_scalar_token("gamma^3") == GAMMA ** 3
        assert parse_scalar_token("gamma^-1") == GAMMA ** -1
        assert parse_scalar_token("2*gamma") == 2 * GAMMA

    def test_garbage_rejected(self):
        with pytest.raises(ValueError):
            parse_scalar_token("delta")
        with pytest.raises(ValueError):
            parse_scalar_token("")


class TestVerifyCocycle:
    def test_standard_symbolic_passes(self, capsys):
        assert main(["verify-cocycle", "--s", "6", "--gamma", "symbolic"]) == 0
        out = capsys.readouterr().out
        assert "pass" in out

    def test_rational_gamma(self, capsys):
        assert main(["verify-cocycle", "--s", "3", "--gamma", "-1"]) == 0

    def test_zero_s_is_usage_error(self):
        assert main(["verify-cocycle", "--s", "0"]) == 2

    def test_missing_arguments_usage_error(self):
        assert main(["verify-cocycle"]) == 2

    def test_failing_table_from_file(self, tmp_path, capsys):
        table = {"s": 2, "entries": [["1", "1"], ["gamma", "1"]]}
        path = tmp_path / "table.json"
        path.write_text(json.dumps(table), encoding="utf-8")
        assert main(["verify-cocycle", "--table", str(path)]) == 1
        out = capsys.readouterr().out
        assert "fail" in out
        assert "witness" in out and "sigma^" in out

    def test_valid_table_from_file(self, tmp_path):
        table = {"entries": [["1", "1", "1"], ["1", "1", "gamma"],
                             ["1", "gamma", "gamma"]]}
        path = tmp_path / "table.json"
        path.write_text(json.dumps(table), encoding="utf-8")
        assert main(["verify-cocycle", "--table", str(path)]) == 0

    def test_bad_table_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"entries": [["delta"]]}', encoding="utf-8")
        assert main(["verify-cocycle", "--table", str(path)]) == 2


class TestRoquette:
    def test_pass_with_certificate(self, tmp_path, capsys):
        out_path = tmp_path / "cert.json"
        code = main(["roquette", "--s", "5", "--ell", "3",
                     "--backend", "symbolic", "--out", str(out_path)])
        assert code == 0
        with open(out_path, encoding="utf-8") as handle:
            cert = json.load(handle)
        assert cert["spec"] == {"s": 5, "ell": 3, "backend": "symbolic",
                                "gamma": "gamma"}
        assert cert["diagram"]["verdict"] is True
        out = capsys.readouterr().out
        assert "verdict: pass" in out

    def test_non_coprime_reports_determinant(self, capsys):
        assert main(["roquette", "--s", "4", "--ell", "2"]) == 1
        out = capsys.readouterr().out
        assert "fail at lattice_certificate" in out
        assert "det=0" in out

    def test_trivial_ell_one(self, capsys):
        assert main(["roquette", "--s", "2", "--ell", "1"]) == 0

    def test_cyclotomic_backend(self, tmp_path):
        out_path = tmp_path / "cert.json"
        code = main(["roquette", "--s", "4", "--ell", "3",
                     "--backend", "cyclotomic", "--conductor", "5",
                     "--generator", "2", "--gamma", "2",
                     "--out", str(out_path)])
        assert code == 0
        with open(out_path, encoding="utf-8") as handle:
            cert = json.load(handle)
        assert cert["spec"]["conductor"] == 5

    def test_cyclotomic_needs_conductor(self):
        assert main(["roquette", "--s", "4", "--ell", "3",
                     "--backend", "cyclotomic"]) == 2

    def test_ell_out_of_range_usage_error(self):
        assert main(["roquette", "--s", "3", "--ell", "3"]) == 2


class TestSweep:
    def test_small_sweep_passes(self, capsys):
        assert main(["sweep", "--max-s", "5"]) == 0
        out = capsys.readouterr().out
        lines = out.strip().splitlines()
        # header plus one row per coprime pair: s=2:1, s=3:2, s=4:2, s=5:4
        assert len(lines) == 1 + (1 + 2 + 2 + 4)
        assert all("pass" in line for line in lines[1:])

    def test_single_row_sweep(self, capsys):
        assert main(["sweep", "--max-s", "2"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 2
        assert lines[1].startswith("2   1")

    def test_noncoprime_rows_marked(self, capsys):
        assert main(["sweep", "--max-s", "4", "--include-noncoprime"]) == 1
        out = capsys.readouterr().out
        assert "not-birational" in out
        # the coprime rows still pass
        for line in out.strip().splitlines()[1:]:
            assert line.endswith("pass") or line.endswith("not-birational")

    def test_sweep_is_deterministic(self, capsys):
        main(["sweep", "--max-s", "8"])
        first = capsys.readouterr().out
        main(["sweep", "--max-s", "8"])
        second = capsys.readouterr().out
        assert first == second


class TestCrossed:
    def test_conductor_five(self, capsys):
        assert main(["crossed", "--conductor", "5", "--gamma", "2"]) == 0
        out = capsys.readouterr().out
        assert "s = 4" in out
        assert "center dimension: 1" in out
        assert "splitting rank: 16 of 16" in out
        assert "associativity (basis triples): pass" in out

    def test_quaternions(self, capsys):
        assert main(["crossed", "--conductor", "4", "--gamma", "-1"]) == 0
        out = capsys.readouterr().out
        assert "s = 2" in out
        assert "center dimension: 1" in out
        assert "splitting rank: 4 of 4" in out

    def test_non_cyclic_unit_group_rejected(self, capsys):
        assert main(["crossed", "--conductor", "8"]) == 2
        err = capsys.readouterr().err
        assert "not cyclic" in err

    def test_explicit_non_generator_rejected(self):
        # 4 has order 2 in the units modulo 5
        assert main(["crossed", "--conductor", "5", "--generator", "4"]) == 2

    def test_zero_gamma_rejected(self):
        assert main(["crossed", "--conductor", "5", "--gamma", "0"]) == 2
