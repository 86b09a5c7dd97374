import json
import subprocess
import sys

import pytest

from jacobikit.cli import bundled_fixtures, load, loads, main, run
from jacobikit.errors import DimensionMismatch, ExpressionSyntaxError, IoError, SchemaError, UnresolvedReference
from jacobikit.jacobi.generators import contact_r3
from jacobikit.tensor import basis_vector

EXPECTED_FIXTURES = {
    "contact_r3.json",
    "so3_homogeneous.json",
    "lcs_r4_pencil.json",
    "hierarchy_r4.json",
    "recursion_trivial.json",
    "identities_random_seeded.json",
}


def minimal(**extra):
    raw = {"chart": ["x", "y", "z"], "bivectors": {"L": {"(1,2)": "1", "(2,3)": "-y"}}, "vectors": {"E": {"(3)": "1"}},
           "jacobi_pairs": {"p": {"L": "L", "E": "E"}}}
    raw.update(extra)
    return raw


class TestLoad:
    def test_contact_fixture(self):
        sf = load("contact_r3.json")
        assert sf.chart.names == ("x", "y", "z")
        p = sf.get("contact", "pair")
        assert p == contact_r3()
        assert p.E == basis_vector(sf.chart, 2)
        assert len(sf.checks) == 4

    def test_bundled_set(self):
        assert EXPECTED_FIXTURES <= set(bundled_fixtures())

    def test_decreasing_key(self):
        with pytest.raises(SchemaError, match="increasing"):
            loads(minimal(bivectors={"L": {"(2,1)": "1"}}))

    def test_unresolved(self):
        raw = minimal(checks=[{"op": "check_compatibility", "args": {"pair": "p", "J": "J2"}}])
        raw["endomorphisms"] = {"J": {"lcs": ["F", "G"]}}
        with pytest.raises(UnresolvedReference):
            loads(raw)

    def test_unresolved_pair_member(self):
        with pytest.raises(UnresolvedReference):
            loads(minimal(jacobi_pairs={"p": {"L": "L", "E": "E2"}}))

    def test_parse_error_carries_field_and_offset(self):
        with pytest.raises(ExpressionSyntaxError) as info:
            loads(minimal(scalars={"f": "x +"}))
        assert "scalars.f" in str(info.value)
        assert info.value.offset == 3

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            loads(minimal(vectors={"E": ["1", "0"]}))
        with pytest.raises(DimensionMismatch):
            loads(minimal(bivectors={"L": {"(1,4)": "1"}}))

    def test_degree_mismatch(self):
        with pytest.raises(SchemaError):
            loads(minimal(bivectors={"L": {"(1,2,3)": "1"}}))

    def test_duplicate_names(self):
        with pytest.raises(SchemaError, match="duplicate"):
            loads(minimal(scalars={"L": "1"}))

    def test_unknown_key(self):
        with pytest.raises(SchemaError):
            loads(minimal(bivector={}))

    def test_wrong_kind(self):
        raw = minimal(jacobi_pairs={"p": {"L": "E"}})
        with pytest.raises(SchemaError, match="expected bivector"):
            loads(raw)

    def test_missing_file(self, tmp_path):
        with pytest.raises(IoError):
            load(tmp_path / "missing.json")

    def test_invalid_json(self, tmp_path):
        f = tmp_path / "bad.json"
        f.write_text("{", encoding="utf-8")
        with pytest.raises(SchemaError):
            load(f)


class TestRun:
    def test_contact_all_pass(self):
        report = run(load("contact_r3.json"))
        assert report["summary"] == {"pass": 4, "fail": 0, "error": 0}

    def test_bad_pencil_residual(self):
        report = run(load("bad_pencil.json"), timing=False)
        pencil = report["checks"][-1]
        assert pencil["status"] == "fail"
        assert "condition (2) | E1∧Λ2+E2∧Λ1-[Λ1,Λ2]: (1)*D[x,y,z]" in pencil["residuals"]

    def test_unknown_op_is_isolated(self):
        raw = minimal(checks=[
            {"name": "a", "op": "is_jacobi", "args": {"pair": "p"}},
            {"name": "b", "op": "no_such_op"},
            {"name": "c", "op": "is_jacobi", "args": {"pair": "p"}},
        ])
        report = run(loads(raw), timing=False)
        assert [c["status"] for c in report["checks"]] == ["pass", "error", "pass"]
        assert "no_such_op" in report["checks"][1]["error"]
        assert report["summary"] == {"pass": 2, "fail": 0, "error": 1}

    def test_runtime_reference_error(self):
        raw = minimal(checks=[{"name": "a", "op": "check_compatibility", "args": {"pair": "p", "J": "nope"}}])
        report = run(loads(raw), timing=False)
        assert report["checks"][0]["status"] == "error"

    def test_order_preserved_with_jobs(self):
        sf = load("lcs_r4_pencil.json")
        serial = run(sf, jobs=1, timing=False)
        parallel = run(sf, jobs=4, timing=False)
        assert serial == parallel
        assert [c["name"] for c in parallel["checks"]] == [c.name for c in sf.checks]

    def test_timing_section(self):
        report = run(load("recursion_trivial.json"))
        assert set(report["timing_ms"]) == {"identity operator"}


class TestMain:
    def test_check_out(self, tmp_path):
        out = tmp_path / "report.json"
        assert main(["check", "contact_r3.json", "--out", str(out)]) == 0
        assert json.loads(out.read_text(encoding="utf-8"))["summary"]["pass"] == 4

    def test_missing(self, capsys):
        assert main(["check", "missing.json"]) == 2
        assert "missing.json" in capsys.readouterr().err

    def test_bad_pencil(self, capsys):
        assert main(["check", "bad_pencil.json", "--no-timing"]) == 1
        assert "(1)*D[x,y,z]" in capsys.readouterr().out

    def test_counterexample_fixture(self, capsys):
        assert main(["check", "recursion_counterexample.json", "--no-timing"]) == 1

    @pytest.mark.parametrize("argv", [[], ["check"], ["check", "x.json", "--kmax", "two"], ["frobnicate"]])
    def test_bad_usage(self, argv):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2

    def test_nonpositive_jobs(self):
        assert main(["check", "contact_r3.json", "--jobs", "0"]) == 2

    def test_print(self, capsys):
        assert main(["print", "contact_r3.json"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("chart: (x, y, z)")
        assert "pair contact" in out

    def test_fixtures(self, capsys):
        assert main(["fixtures"]) == 0
        assert EXPECTED_FIXTURES <= set(capsys.readouterr().out.split())

    def test_byte_deterministic(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for f in (a, b):
            assert main(["check", "so3_homogeneous.json", "--no-timing", "--out", str(f)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_console_entry(self, tmp_path):
        out = tmp_path / "r.json"
        proc = subprocess.run([sys.executable, "-m", "jacobikit.cli", "check", "recursion_trivial.json", "--no-timing", "--out", str(out)],
                              capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        assert json.loads(out.read_text(encoding="utf-8"))["summary"] == {"pass": 1, "fail": 0, "error": 0}
