import io
import json
from pathlib import Path

from primerline.cli import run

SAMPLES = Path(__file__).resolve().parents[1] / "samples"
FIG8 = str(SAMPLES / "fig8.fm")
ADULT = str(SAMPLES / "adult_literacy.fm")
PRIMER = str(SAMPLES / "hindi_primer.xml")
PRESET2_CONFIG = str(SAMPLES / "preset2_config.json")
BAD_PRIORITY = str(SAMPLES / "fig8_bad_priority.json")


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), out=out, err=err)
    return status, out.getvalue(), err.getvalue()


def invoke_json(*argv):
    status, out, err = invoke("--format", "json", *argv)
    return status, json.loads(out), err


# --- exit codes ---------------------------------------------------------------

def test_no_arguments_is_usage_error():
    status, out, err = invoke()
    assert status == 1
    assert out == ""
    assert err


def test_unknown_subcommand_is_usage_error():
    status, _, err = invoke("model", "frobnicate", FIG8)
    assert status == 1


def test_missing_file_is_io_error():
    status, _, err = invoke("model", "check", "/nonexistent.fm")
    assert status == 1
    assert "error:" in err


def test_model_check_ok():
    status, out, err = invoke("model", "check", FIG8)
    assert status == 0
    assert "model: InstructionalDesignSpecification" in out


def test_model_check_parse_error_is_validation(tmp_path):
    bad = tmp_path / "bad.fm"
    bad.write_text("featuremodel M root R { optional X [5..2] }")
    status, out, err = invoke("model", "check", str(bad))
    assert status == 2
    assert "MIN_GT_MAX" in err


def test_config_check_invalid_exits_2():
    status, out, err = invoke("config", "check", FIG8, BAD_PRIORITY)
    assert status == 2
    assert "valid: False" in out
    assert "R4_ALTERNATIVE_NOT_ONE" in err


def test_config_check_valid_exits_0():
    status, out, err = invoke("config", "check", ADULT, PRESET2_CONFIG)
    assert status == 0, err
    assert "valid: True" in out


def test_instance_validate_clean(tmp_path):
    spec = tmp_path / "spec.json"
    assert invoke("spec", "preset", "2", "-o", str(spec))[0] == 0
    status, out, err = invoke("instance", "validate", str(spec), PRIMER)
    assert status == 0
    assert "errors: 0" in out
    assert "valid: True" in out


def test_instance_validate_errors_exit_2(tmp_path):
    spec = tmp_path / "spec.json"
    invoke("spec", "preset", "2", "-o", str(spec))
    broken = tmp_path / "broken.xml"
    text = Path(PRIMER).read_text("utf-8")
    broken.write_text(text.replace("नमन", "रमण", 1), "utf-8")
    status, out, err = invoke("instance", "validate", str(spec), str(broken))
    assert status == 2
    assert "KNOWN_TO_UNKNOWN" in err


def test_instance_parse_failure_exit_2(tmp_path):
    spec = tmp_path / "spec.json"
    invoke("spec", "preset", "2", "-o", str(spec))
    bad = tmp_path / "bad.xml"
    bad.write_text("<primer spec='s' lang='hi'><weird/></primer>")
    status, _, err = invoke("instance", "validate", str(spec), str(bad))
    assert status == 2
    assert "UNKNOWN_ELEMENT" in err


# --- json format ----------------------------------------------------------------

def test_json_envelope_on_success(tmp_path):
    small = tmp_path / "small.fm"
    small.write_text("featuremodel M root R { optional A alternative {B, C} }")
    status, doc, err = invoke_json("model", "count", str(small))
    assert status == 0
    assert err == ""
    assert set(doc) == {"diagnostics", "result", "status"}
    assert doc["status"] == 0
    assert doc["diagnostics"] == []
    assert doc["result"]["count"] == 4


def test_model_count_search_space_guard_exits_2():
    status, _, err = invoke("model", "count", FIG8)
    assert status == 2


def test_json_envelope_on_validation_failure():
    status, doc, err = invoke_json("config", "check", FIG8, BAD_PRIORITY)
    assert status == 2
    assert doc["status"] == 2
    assert any("R4_ALTERNATIVE_NOT_ONE" in d for d in doc["diagnostics"])
    assert doc["result"]["valid"] is False


def test_json_envelope_on_usage_error():
    status, doc, err = invoke_json("model", "check", "/nonexistent.fm")
    assert status == 1
    assert doc["status"] == 1
    assert "error" in doc["result"]


# --- pipeline commands ----------------------------------------------------------

def test_model_count_clone_cap():
    status, doc, _ = invoke_json("model", "count", FIG8, "--clone-cap", "1")
    assert status == 0
    assert doc["result"]["clone_cap"] == 1


def test_spec_preset_writes_only_target(tmp_path):
    target = tmp_path / "out" if False else tmp_path / "spec.json"
    before = set(tmp_path.iterdir())
    status, out, _ = invoke("spec", "preset", "3", "-o", str(target))
    assert status == 0
    created = set(tmp_path.iterdir()) - before
    assert created == {target}
    doc = json.loads(target.read_text("utf-8"))
    assert doc["goal_technique"] == "BloomRevised"
    assert doc["process_model"] == "PASI_Merrill"
    assert doc["content_scheme"] == "FCRMT"


def test_spec_preset_bad_number_is_usage_error(tmp_path):
    status, _, err = invoke("spec", "preset", "9",
                            "-o", str(tmp_path / "x.json"))
    assert status == 1


def test_spec_derive_matches_preset(tmp_path):
    derived = tmp_path / "derived.json"
    status, _, err = invoke("spec", "derive", ADULT, PRESET2_CONFIG,
                            "-o", str(derived))
    assert status == 0, err
    doc = json.loads(derived.read_text("utf-8"))
    assert doc["goal_technique"] == "Plain3Rs"
    assert doc["process_model"] == "PASI"
    assert doc["content_scheme"] == "FCRMT"


def test_spec_derive_invalid_config_exits_2(tmp_path):
    config = tmp_path / "bad.json"
    config.write_text(json.dumps({
        "model": "AdultLiteracyInstructionalDesign",
        "select": {"InstructionalDesign": 1}, "attrs": []}))
    status, _, err = invoke("spec", "derive", ADULT, str(config),
                            "-o", str(tmp_path / "out.json"))
    assert status == 2


def test_editor_schema_from_preset(tmp_path):
    spec = tmp_path / "spec.json"
    invoke("spec", "preset", "4", "-o", str(spec))
    schema = tmp_path / "schema.json"
    status, out, _ = invoke("editor", "schema", str(spec), "-o", str(schema))
    assert status == 0
    doc = json.loads(schema.read_text("utf-8"))
    lesson = next(s for s in doc["sections"] if s["id"] == "lesson")
    goal = next(s for s in lesson["subsections"] if s["id"] == "goal")
    ids = [f["id"] for f in goal["fields"]]
    assert ids == ["audience", "behavior", "condition", "degree"]


def test_primer_build_bundle(tmp_path):
    spec = tmp_path / "spec.json"
    invoke("spec", "preset", "2", "-o", str(spec))
    out_dir = tmp_path / "bundle"
    status, out, err = invoke("primer", "build", str(spec), PRIMER,
                              "-o", str(out_dir))
    assert status == 0, err
    assert (out_dir / "manifest.json").is_file()
    assert (out_dir / "lessons" / "01.json").is_file()
    assert "lessons: 2" in out


def test_primer_build_refuses_invalid_instance(tmp_path):
    spec = tmp_path / "spec.json"
    invoke("spec", "preset", "2", "-o", str(spec))
    broken = tmp_path / "broken.xml"
    text = Path(PRIMER).read_text("utf-8")
    broken.write_text(text.replace("<text>मन</text>",
                                   "<text>कल</text>"), "utf-8")
    out_dir = tmp_path / "bundle"
    status, _, err = invoke("primer", "build", str(spec), str(broken),
                            "-o", str(out_dir))
    assert status == 2
    assert not out_dir.exists()


def test_cost_report_text():
    status, out, _ = invoke(
        "cost", "report", "--org", "24", "--cab", "48", "--unique", "2",
        "--reuse", "1", "--product", "24", "--n", "9")
    assert status == 0
    assert "c_spl_pw: 99" in out
    assert "c_standalone_pw: 216" in out
    assert "break_even: 4" in out
    assert "savings_paper_style_pm: 29" in out


def test_cost_report_csv(tmp_path):
    csv = tmp_path / "curve.csv"
    status, _, _ = invoke(
        "cost", "report", "--org", "24", "--cab", "48", "--unique", "2",
        "--reuse", "1", "--product", "24", "--n", "9",
        "--curve", "3", "--csv", str(csv))
    assert status == 0
    lines = csv.read_text().splitlines()
    assert lines[0] == "n,spl_pw,standalone_pw"
    assert lines[1] == "1,75,24"
    assert len(lines) == 4


def test_cost_report_negative_input_is_usage_error():
    status, _, err = invoke(
        "cost", "report", "--org", "-1", "--cab", "0", "--unique", "0",
        "--reuse", "0", "--product", "0", "--n", "1")
    assert status == 1


def test_word_decompose_success():
    status, doc, _ = invoke_json("word", "decompose", "नमन",
                                 "--taught", "नम,न,म")
    assert status == 0
    assert doc["result"]["parts"] == ["नम", "न"]


def test_word_decompose_failure_exits_2():
    status, _, err = invoke("word", "decompose", "xyz", "--taught", "a,b")
    assert status == 2
