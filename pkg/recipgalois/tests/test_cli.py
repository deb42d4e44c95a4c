# External imports
import json

import pytest

# Module to test
from .. import validate
from ..cli import main, build_parser
from ..census import CSV_COLUMNS
from ..validate import CheckResult


def lines(capsys):
    return capsys.readouterr().out.strip().splitlines()


class TestParser(object):

    def test_flags_on_either_side(self):
        parser = build_parser()
        args = parser.parse_args(["--workers", "2", "xyz", "--H", "4"])
        assert args.workers == 2
        args = parser.parse_args(["xyz", "--H", "4", "--seed", "9", "-vv"])
        assert args.seed == 9
        assert args.verbose == 2

    def test_usage_error(self):
        with pytest.raises(SystemExit) as info:
            main(["xyz"])
        assert info.value.code == 2


class TestVerbs(object):

    def test_xyz(self, capsys):
        assert main(["xyz", "--H", "4"]) == 0
        assert lines(capsys) == ["6"]

    def test_xyz_fit(self, capsys):
        assert main(["xyz", "--H", "64", "128", "256"]) == 0
        out = lines(capsys)
        assert out[0] == "64 180"
        assert out[-1].startswith("fit")

    def test_bad_height(self, capsys):
        assert main(["xyz", "--H", "0"]) == 2

    def test_groups(self, capsys):
        assert main(["groups", "--n", "3"]) == 0
        record = json.loads(lines(capsys)[0])
        assert [s["tag"] for s in record["subgroups"]] == [
            "FULL", "G1", "G2", "G3", "SN_PLAIN", "SN_TWISTED"]
        assert record["schema"] == 1

    def test_classify(self, capsys):
        code = main(["--workers", "1", "classify", "--poly", "1,0,-3,0,1",
                     "--no-fingerprint"])
        assert code == 0
        record = json.loads(lines(capsys)[0])
        assert record["g"] == "-5,0,1"
        assert record["in_G1"] is True

    def test_fourier(self, capsys):
        assert main(["fourier", "--p", "5", "--sigma", "1"]) == 0
        record = json.loads(lines(capsys)[0])
        assert record["zero_value"] == "6/5"
        assert list(record)[:3] == ["p", "n", "sigma"]

    def test_fourier_pointed(self, capsys):
        assert main(["fourier", "--p", "3", "--sigma", "1^2",
                     "--pointed", "+2"]) == 0
        record = json.loads(lines(capsys)[0])
        assert record["sigma"] == "*1^2@2"
        assert record["index"] == 9
        assert record["a_p"] == "1"

    def test_census_csv(self, capsys, tmp_path):
        path = str(tmp_path / "census.csv")
        code = main(["census", "--n", "1", "--H", "2", "--workers", "1",
                     "--format", "csv", "--out", path])
        assert code == 0
        with open(path) as f:
            text = f.read().splitlines()
        assert text[0] == ",".join(CSV_COLUMNS)
        assert text[1].startswith("1,2,False,25,9,")

    def test_census_budget(self, capsys, monkeypatch):
        monkeypatch.setenv("RECIP_WORKERS", "1")
        code = main(["census", "--n", "3", "--H", "200"])
        assert code == 1


class TestVerify(object):

    def test_failure_exit_code(self, capsys, monkeypatch):
        def broken(config, samples=1):
            return [CheckResult(suite="poly", name="always fails",
                                passed=False)]
        monkeypatch.setitem(validate.SUITES, "poly", broken)
        assert main(["verify", "--suite", "poly"]) == 1
        record = json.loads(lines(capsys)[0])
        assert record["passed"] is False

    def test_pass(self, capsys):
        code = main(["--workers", "1", "verify", "--suite", "poly",
                     "--samples", "5"])
        assert code == 0
        assert len(lines(capsys)) == 5
