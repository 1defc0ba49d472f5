import io
import json
from importlib import resources

import jsonschema
import pytest

from mulhopf.cli import main, report_schema

DATA = resources.files("mulhopf").joinpath("data")


def bundled(name):
    return str(DATA.joinpath(name))


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--format", "json")
    return code, (json.loads(out) if out else None), err


@pytest.fixture
def spec_file(tmp_path):
    def write(doc):
        path = tmp_path / "spec.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        return str(path)
    return write


def test_all_on_z2_function_algebra_passes():
    code, doc, _ = run_json("all", bundled("z2_function.json"))
    assert code == 0
    jsonschema.validate(doc, report_schema())
    assert doc["laws"] and all(law["passed"] for law in doc["laws"])
    assert doc["skipped"] == []
    assert doc["derived"]["sbar"] == [["1", "0"], ["0", "1"]]


def test_check_hopf_on_idempotent_monoid_fails_with_witness():
    code, doc, _ = run_json("check-hopf", bundled("idempotent_monoid.json"))
    assert code == 1
    jsonschema.validate(doc, report_schema())
    bad = {law["id"]: law for law in doc["laws"] if not law["passed"]}
    assert bad["hopf.t1_invertible"]["witness"]["text"] == "t1 kernel: δ_1⊗δ_z"


def test_antipode_prints_inversion_for_z3():
    code, doc, _ = run_json("antipode", bundled("z3_group.json"))
    assert code == 0
    assert doc["derived"]["sbar"] == [["1", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]]


def test_text_format():
    code, out, _ = run("antipode", bundled("z3_group.json"))
    assert code == 0
    assert "PASS hopf.t1_invertible" in out
    assert "sbar:\n  1 0 0\n  0 0 1\n  0 1 0\n" in out
    assert out.rstrip().endswith("0 failed")


def test_raw_spec_matches_builder():
    code_raw, raw, _ = run_json("check-bimonoid", bundled("z2_raw.json"))
    code_b, built, _ = run_json("check-bimonoid", bundled("z2_function.json"))
    assert code_raw == code_b == 0
    assert [law["id"] for law in raw["laws"]] == [law["id"] for law in built["laws"]]


@pytest.mark.parametrize("name", ["s3_group.json", "z3_group.json"])
@pytest.mark.parametrize("command", ["check-regular", "check-comodule", "check-module",
                                     "check-hopfmodule", "fthm"])
def test_commands_pass_on_groups(name, command):
    code, doc, err = run_json(command, bundled(name))
    assert code == 0, err
    jsonschema.validate(doc, report_schema())


def test_idempotent_all_skips_hopf_dependent_suites():
    code, doc, _ = run_json("all", bundled("idempotent_monoid.json"))
    assert code == 1
    jsonschema.validate(doc, report_schema())
    suites = [s["suite"] for s in doc["skipped"]]
    assert "fthm" in suites


def test_fthm_on_idempotent_is_a_precondition_error():
    code, out, err = run("fthm", bundled("idempotent_monoid.json"))
    assert code == 2 and out == ""
    assert "t1 not invertible" in err


def test_sparse_spec():
    code, doc, _ = run_json("check-bimonoid", bundled("integers_sparse.json"))
    assert code == 0
    jsonschema.validate(doc, report_schema())
    assert all(law["id"].startswith("sparse.") for law in doc["laws"])


def test_fthm_on_sparse_is_rejected():
    code, _, err = run("fthm", bundled("integers_sparse.json"))
    assert code == 2 and "finite-dimensional" in err


def test_bad_matrix_shape_exits_2(spec_file):
    path = spec_file({"field": {"kind": "rational"},
                      "raw": {"dim": 2, "t1": [["1", "0"]], "t2": [["1", "0"]],
                              "e": ["1", "0"]}})
    code, out, err = run("check-bimonoid", path)
    assert code == 2 and out == "" and err.startswith("error:")


@pytest.mark.parametrize("doc", [
    {"field": {"kind": "rational"}},
    {"field": {"kind": "prime", "p": 6}, "builder": {"kind": "group_algebra",
                                                     "table": {"cyclic": 2}}},
    {"field": {"kind": "rational"}, "builder": {"kind": "function_algebra",
                                                "table": {"mul": [[1, 0], [0, 1]]}}},
    {"field": {"kind": "rational"}, "raw": {"dim": 1, "t1": [["x"]], "t2": [["1"]],
                                            "e": ["1"]}},
])
def test_malformed_specs_exit_2(spec_file, doc):
    assert run("check-bimonoid", spec_file(doc))[0] == 2


def test_missing_file_and_bad_arguments_exit_2(tmp_path):
    assert run("all", str(tmp_path / "nope.json"))[0] == 2
    assert run("frobnicate", bundled("z2_function.json"))[0] == 2
    assert run("all", bundled("z2_function.json"), "--seed", "-1")[0] == 2


def test_output_is_deterministic():
    for fmt in ("json", "text"):
        first = run("all", bundled("z3_group.json"), "--format", fmt, "--seed", "9")
        second = run("all", bundled("z3_group.json"), "--format", fmt, "--seed", "9")
        assert first == second


def test_laws_filter():
    code, doc, _ = run_json("check-hopf", bundled("idempotent_monoid.json"), "--laws", "*.t2_*")
    assert [law["id"] for law in doc["laws"]] == ["hopf.t2_invertible"]
    assert code == 1
    # the failing suites are filtered out, so the run passes
    code, doc, _ = run_json("all", bundled("idempotent_monoid.json"), "--laws", "check-bimonoid:*")
    assert doc["laws"] and all(law["id"].startswith("check-bimonoid:") for law in doc["laws"])
    assert code == 0


def test_seed_flag_and_environment(monkeypatch):
    _, doc, _ = run_json("check-bimonoid", bundled("integers_sparse.json"), "--seed", "42")
    assert doc["seed"] == 42
    monkeypatch.setenv("MULHOPF_SEED", "17")
    _, doc, _ = run_json("check-bimonoid", bundled("integers_sparse.json"))
    assert doc["seed"] == 17
    monkeypatch.setenv("MULHOPF_SEED", "abc")
    assert run("check-bimonoid", bundled("integers_sparse.json"))[0] == 2


def test_prime_field_scalars_are_residues(spec_file):
    path = spec_file({"field": {"kind": "prime", "p": 7},
                      "builder": {"kind": "group_algebra", "table": {"cyclic": 3}}})
    code, doc, _ = run_json("antipode", path)
    assert code == 0 and doc["field"] == "GF(7)"
