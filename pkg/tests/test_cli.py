import io
import json
import math
import subprocess
import sys
from contextlib import redirect_stdout
from pathlib import Path

import pytest

from ferrox.cli import emit_json, main, parse_complex

SCHEMA = json.loads((Path(__file__).parent.parent / "docs" / "cli_schema.json").read_text())


def check_schema(obj, spec, schema=SCHEMA):
    """Minimal structural validator for the checked-in schema document."""
    if isinstance(spec, str):
        if spec.startswith("$"):
            name = spec[1:]
            if name == "compare_row":
                key = "compare_row_valid" if obj.get("valid") else "compare_row_invalid"
                return check_schema(obj, schema[key], schema)
            return check_schema(obj, schema[name], schema)
        if spec == "number":
            assert isinstance(obj, (int, float)) and not isinstance(obj, bool), obj
        elif spec == "integer":
            assert isinstance(obj, int) and not isinstance(obj, bool), obj
        elif spec == "string":
            assert isinstance(obj, str), obj
        elif spec == "string_or_null":
            assert obj is None or isinstance(obj, str), obj
        elif spec == "boolean":
            assert isinstance(obj, bool), obj
        elif spec == "array":
            assert isinstance(obj, list), obj
        else:
            raise AssertionError(f"unknown schema atom {spec}")
        return
    if spec["type"] == "array":
        assert isinstance(obj, list)
        for item in obj:
            check_schema(item, spec["items"], schema)
        return
    assert spec["type"] == "object" and isinstance(obj, dict)
    for key, sub in spec["fields"].items():
        assert key in obj, f"missing field {key} in {obj}"
        check_schema(obj[key], sub, schema)
    allowed = set(spec["fields"]) | set(spec.get("optional", {}))
    for key in obj:
        assert key in allowed, f"unexpected field {key}"
    for key, sub in spec.get("optional", {}).items():
        if key in obj:
            check_schema(obj[key], sub, schema)


def run_cli(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def run_cli_json(*argv):
    code, out = run_cli(*argv)
    return code, json.loads(out)


class TestComplexLiterals:
    @pytest.mark.parametrize("text,want", [
        ("0.5", 0.5 + 0j),
        ("-2", -2 + 0j),
        ("0.4i", 0.4j),
        ("-1.5i", -1.5j),
        ("0.2+0.3i", 0.2 + 0.3j),
        ("0.2-0.3i", 0.2 - 0.3j),
        ("1e-3+2e1i", 0.001 + 20j),
    ])
    def test_accepted_forms(self, text, want):
        assert parse_complex(text) == want

    @pytest.mark.parametrize("text", ["", "i", "1+i", "1 + 2i", "abc", "1+2j"])
    def test_rejected_forms(self, text):
        from ferrox.cli import _CliError
        with pytest.raises(_CliError):
            parse_complex(text)


class TestJsonEmission:
    def test_seventeen_significant_digits(self):
        out = emit_json({"v": 1.0 / 3.0})
        assert out == '{"v": 0.33333333333333331}'

    def test_complex_encoding(self):
        assert emit_json(1 + 2j) == '{"re": 1, "im": 2}'

    def test_nested(self):
        assert emit_json([True, None, "a\"b"]) == '[true, null, "a\\"b"]'


class TestEval:
    def test_basic_value(self):
        code, obj = run_cli_json("eval", "--nu", "0", "--mu", "0", "--x", "0.5")
        assert code == 0
        check_schema(obj, SCHEMA["eval"])
        assert abs(obj["value"]["re"] - math.atanh(0.5)) < 1e-10

    def test_domain_error_exit_2(self):
        code, obj = run_cli_json("eval", "--nu", "0", "--mu", "0", "--x", "1.5")
        assert code == 2
        check_schema(obj, SCHEMA["error"])
        assert "D1" in obj["error"]["message"]

    def test_parse_error_exit_1(self):
        code, _ = run_cli("eval", "--nu", "0", "--mu", "0", "--x", "zebra")
        assert code == 1

    def test_unknown_rep_exit_1(self):
        code, _ = run_cli("eval", "--nu", "0", "--mu", "0", "--x", "0.5",
                          "--rep", "IX9")
        assert code == 1

    def test_usage_error_exit_1(self):
        proc = subprocess.run(
            [sys.executable, "-m", "ferrox.cli", "eval", "--nu", "0"],
            capture_output=True, text=True)
        assert proc.returncode == 1

    def test_forced_reps_agree(self):
        code1, a = run_cli_json("eval", "--nu", "0.3", "--mu", "0.4",
                                "--x", "0.2+0.3i", "--rep", "I1")
        code2, b = run_cli_json("eval", "--nu", "0.3", "--mu", "0.4",
                                "--x", "0.2+0.3i", "--rep", "II3")
        assert code1 == code2 == 0
        diff = abs(complex(a["value"]["re"], a["value"]["im"])
                   - complex(b["value"]["re"], b["value"]["im"]))
        assert diff < 1e-8

    def test_round_trip_with_compare(self):
        _, ev = run_cli("eval", "--nu", "0.3", "--mu", "0.4", "--x", "0.2",
                        "--rep", "II3")
        _, cp = run_cli("compare", "--nu", "0.3", "--mu", "0.4", "--x", "0.2")
        ev_obj = json.loads(ev)
        row = next(r for r in json.loads(cp)["rows"] if r["rep"] == "II3")
        # bit-for-bit identical serialized value
        assert emit_json(ev_obj["value"]) == emit_json(row["value"])


class TestCompare:
    def test_spread_small(self):
        code, obj = run_cli_json("compare", "--nu", "0.3", "--mu", "0.4", "--x", "0.2")
        assert code == 0
        check_schema(obj, SCHEMA["compare"])
        assert obj["rel_spread"] < 1e-8

    def test_integer_order_reasons(self):
        _, obj = run_cli_json("compare", "--nu", "0.3", "--mu", "1", "--x", "0.2")
        rows = {r["rep"]: r for r in obj["rows"]}
        for rep in ("I1", "I2", "I3", "I4", "II1", "II5"):
            assert rows[rep]["valid"] is False
            assert rows[rep]["reason"] == "mu in Z"

    def test_halfplane_reps_valid_off_axis(self):
        _, obj = run_cli_json("compare", "--nu", "0.3", "--mu", "0.4",
                              "--x", "0.2+0.1i")
        rows = {r["rep"]: r for r in obj["rows"]}
        for rep in ("I5", "II2", "II4"):
            assert rows[rep]["valid"] is True
        assert obj["rel_spread"] < 1e-8


class TestRegion:
    def test_csv_spot_values(self):
        code, out = run_cli("region", "--j", "7", "--re-min", "-2", "--re-max", "2",
                            "--im-min", "-2", "--im-max", "2", "--nx", "9", "--ny", "9")
        assert code == 0
        lines = out.strip().split("\r\n")
        assert lines[0] == "re,im,inside_7"
        table = {}
        for line in lines[1:]:
            re_s, im_s, flag = line.split(",")
            table[(float(re_s), float(im_s))] = flag
        assert table[(0.5, 0.0)] == "1"
        assert table[(0.0, 1.0)] == "0"

    def test_hyperbola_contains_one(self):
        code, out = run_cli("region", "--j", "11", "--re-min", "0.5", "--re-max", "1.5",
                            "--im-min", "-0.5", "--im-max", "0.5", "--nx", "3", "--ny", "3")
        rows = out.strip().split("\r\n")[1:]
        middle = [r for r in rows if r.startswith("1,0,") or r.startswith("1,-0,")]
        assert middle and middle[0].endswith("1")

    def test_pgm_output(self, tmp_path):
        proc = subprocess.run(
            [sys.executable, "-m", "ferrox.cli", "region", "--j", "1",
             "--re-min", "-3", "--re-max", "3", "--im-min", "-3", "--im-max", "3",
             "--nx", "41", "--ny", "41", "--format", "pgm"],
            capture_output=True)
        assert proc.returncode == 0
        data = proc.stdout
        assert data.startswith(b"P5\n41 41\n255\n")
        pixels = data[len(b"P5\n41 41\n255\n"):]
        assert len(pixels) == 41 * 41
        # center pixel (x = 0) is inside the disk |1 - x| < 2
        assert pixels[20 * 41 + 20] == 255
        # far corner (x = -3 + 3i) is outside
        assert pixels[0] == 0

    def test_disk_area_fraction(self):
        # fraction of inside points over [-3,3]^2 approximates the area of
        # the disk |1 - x| < 2 clipped to the square, i.e. the disk part with
        # Re x <= 3 (the full disk: center 1, radius 2 fits horizontally)
        code, out = run_cli("region", "--j", "1", "--nx", "121", "--ny", "121")
        rows = out.strip().split("\r\n")[1:]
        inside = sum(1 for r in rows if r.endswith(",1"))
        frac = inside / len(rows)
        want = math.pi * 4.0 / 36.0
        assert abs(frac - want) < 0.02

    def test_pgm_requires_single_j(self):
        code, _ = run_cli("region", "--format", "pgm")
        assert code == 1

    def test_bad_grid_exit_1(self):
        code, _ = run_cli("region", "--j", "1", "--nx", "1")
        assert code == 1


class TestFourierCommand:
    def test_conditional_series(self):
        code, obj = run_cli_json("fourier", "--nu", "1", "--mu", "0",
                                 "--theta", str(math.pi / 3), "--n-terms", "10000")
        assert code == 0
        check_schema(obj, SCHEMA["fourier"])
        assert obj["class"] == "Conditional"
        assert abs(obj["partial_sum"]["re"] - (0.5 * math.atanh(0.5) - 1.0)) < 1e-3
        assert obj["discrepancy"] < 1e-3

    def test_divergent_warns(self):
        code, obj = run_cli_json("fourier", "--nu", "0.3", "--mu", "1",
                                 "--theta", str(math.pi / 3), "--n-terms", "50")
        assert code == 0
        assert obj["class"] == "Divergent"
        assert "warning" in obj

    def test_absolute_matches_reference(self):
        code, obj = run_cli_json("fourier", "--nu", "0", "--mu", "-0.5",
                                 "--theta", str(math.pi / 3), "--n-terms", "2000")
        assert obj["class"] == "Absolute"
        assert obj["discrepancy"] < 1e-6


class TestOlbrichtCommand:
    def test_single_entry(self):
        code, obj = run_cli_json("olbricht", "--group", "I", "--index", "3")
        assert code == 0
        check_schema(obj, SCHEMA["olbricht"])
        assert obj["total"] == 1
        e = obj["entries"][0]
        assert "I.1" in e["identity"]
        assert e["identity_residual_max"] < 1e-10

    def test_group_selection(self):
        code, obj = run_cli_json("olbricht", "--group", "III", "--index", "5")
        assert code == 0
        assert obj["total"] == 2  # both root variants
        assert {e["root"] for e in obj["entries"]} == {"Y1", "Y2"}

    def test_catalogue_dump(self):
        code, obj = run_cli_json("olbricht", "--group", "II", "--index", "1",
                                 "--catalogue")
        assert code == 0
        assert len(obj["catalogue"]) == 88

    def test_bad_selection_exit_1(self):
        code, _ = run_cli("olbricht", "--group", "I", "--index", "99")
        assert code == 1

    def test_verification_failure_exit_3(self):
        # nu = 0.5 makes this entry's lower parameter a gamma pole, so the
        # verification cannot pass and the run must report failure
        code, obj = run_cli_json("olbricht", "--group", "I", "--index", "9",
                                 "--nu", "0.5", "--mu", "0.5")
        assert code == 3
        assert obj["entries"][0]["status"] == "fail"


class TestCutCommand:
    def test_log_case(self):
        code, obj = run_cli_json("cut", "--a", "1", "--b", "1", "--c", "2",
                                 "--x", "2", "--side", "above")
        assert code == 0
        check_schema(obj, SCHEMA["cut"])
        assert abs(obj["value"]["im"] - math.pi / 2) < 1e-10
        assert abs(obj["value"]["re"]) < 1e-10

    def test_sides_conjugate(self):
        _, above = run_cli_json("cut", "--a", "0.3", "--b", "1.1", "--c", "2.2",
                                "--x", "3", "--side", "above")
        _, below = run_cli_json("cut", "--a", "0.3", "--b", "1.1", "--c", "2.2",
                                "--x", "3", "--side", "below")
        assert above["value"]["re"] == pytest.approx(below["value"]["re"], abs=1e-12)
        assert above["value"]["im"] == pytest.approx(-below["value"]["im"], abs=1e-12)

    def test_domain_error_exit_2(self):
        code, obj = run_cli_json("cut", "--a", "0.3", "--b", "1.1", "--c", "2.2",
                                 "--x", "0.5", "--side", "above")
        assert code == 2
        check_schema(obj, SCHEMA["error"])


class TestTolEnvVar:
    def test_override(self, monkeypatch):
        monkeypatch.setenv("FERROX_TOL", "1e-6")
        code, obj = run_cli_json("eval", "--nu", "0.3", "--mu", "0.4", "--x", "0.2")
        assert code == 0
        loose_terms = obj["terms_used"]
        monkeypatch.delenv("FERROX_TOL")
        _, tight = run_cli_json("eval", "--nu", "0.3", "--mu", "0.4", "--x", "0.2")
        assert tight["terms_used"] > loose_terms

    def test_invalid_value(self, monkeypatch):
        monkeypatch.setenv("FERROX_TOL", "soup")
        code, _ = run_cli("eval", "--nu", "0.3", "--mu", "0.4", "--x", "0.2")
        assert code == 1
