import json
import os
import random

import pytest

from primerline.generator import (
    GenerationError, generate_primer, missing_asset_report, write_bundle,
)
from primerline.idinstance import (
    Case, Fact, Goal, IdInstance, Lesson, hindi_sample_instance,
)
from primerline.idspec import IdSpecification, preset_specification


def sample_bundle(assets_dir=None):
    return generate_primer(hindi_sample_instance(), preset_specification(2),
                           assets_dir=assets_dir)


def kinds(steps):
    return [s.kind for s in steps]


def test_step_ids_dense_from_zero():
    for steps in sample_bundle().timelines:
        assert [s.id for s in steps] == list(range(len(steps)))


def test_lesson_one_shape():
    steps = sample_bundle().timelines[0]
    assert kinds(steps)[0] == "show_frame"
    assert steps[0].payload["frame"] == "start"
    assert kinds(steps)[1:3] == ["present_goal", "present_goal"]
    assert kinds(steps)[-1] == "show_frame"
    assert steps[-1].payload["frame"] == "end"
    assert kinds(steps)[-2] == "practice_prompt"


def test_case_step_law():
    """Each k-syllable case yields k drops, a join, then a reveal."""
    bundle = sample_bundle()
    steps = bundle.timelines[0]
    texts = {}
    i = 0
    while i < len(steps):
        if steps[i].kind == "drop_fact" and steps[i].payload["slot"] == 0 \
                and i + 1 < len(steps) and steps[i + 1].kind != "reveal_word":
            j = i
            while steps[j].kind == "drop_fact":
                j += 1
            k = j - i
            assert steps[j].kind == "join"
            assert steps[j + 1].kind == "reveal_word"
            word = steps[j].payload["text"]
            dropped = "".join(steps[i + n].payload["text"] for n in range(k))
            assert dropped == word
            assert [steps[i + n].payload["slot"] for n in range(k)] == \
                list(range(k))
            texts[word] = k
            i = j + 2
        else:
            i += 1
    assert texts == {"नम": 2, "मन": 2, "नमन": 3}


def test_fact_reveal_is_drop_then_reveal():
    steps = sample_bundle().timelines[0]
    first_drop = next(i for i, s in enumerate(steps) if s.kind == "drop_fact")
    assert steps[first_drop].payload == {"slot": 0, "text": "म"}
    assert steps[first_drop + 1].kind == "reveal_word"
    assert steps[first_drop + 1].payload["text"] == "म"


def test_lesson_without_cases_has_no_practice_prompt():
    instance = IdInstance(spec="s", lang="hi", title="t", lessons=[
        Lesson(title="l", goals=[Goal(text="g")], content=[Fact(text="म")])])
    spec = IdSpecification(name="s")
    bundle = generate_primer(instance, spec)
    assert "practice_prompt" not in kinds(bundle.timelines[0])


def test_practice_prompt_at_most_once_per_lesson():
    for steps in sample_bundle().timelines:
        assert kinds(steps).count("practice_prompt") <= 1


def test_invalid_instance_refuses_generation():
    instance = hindi_sample_instance()
    instance.lessons[0].facts()[1].cases.append(Case(text="xyz"))
    with pytest.raises(GenerationError) as exc:
        generate_primer(instance, preset_specification(2))
    assert exc.value.code == "VALIDATION_ERRORS_PRESENT"
    assert exc.value.diagnostics


def test_manifest_lists_lessons_in_order():
    manifest = sample_bundle().manifest
    assert [e["file"] for e in manifest["lessons"]] == \
        ["lessons/00.json", "lessons/01.json"]
    assert manifest["lessons"][0]["title"] == "मन का काम"
    assert manifest["spec"] == "ID-Specification-2"
    assert manifest["lang"] == "hi"


def test_asset_manifest_links_steps():
    assets = sample_bundle().assets
    by_path = {a["path"]: a for a in assets}
    entry = by_path["sounds/hsounds/naman.wav"]
    assert entry["kind"] == "audio"
    assert entry["present"] is False
    assert entry["steps"]
    for link in entry["steps"]:
        assert set(link) == {"lesson", "step"}


def test_asset_presence_detected(tmp_path):
    target = tmp_path / "sounds" / "hsounds"
    target.mkdir(parents=True)
    (target / "naman.wav").write_bytes(b"")
    assets = sample_bundle(assets_dir=str(tmp_path)).assets
    by_path = {a["path"]: a for a in assets}
    assert by_path["sounds/hsounds/naman.wav"]["present"] is True
    assert by_path["sounds/hsounds/ma.wav"]["present"] is False


def test_asset_manifest_sorted_and_unique():
    assets = sample_bundle().assets
    keys = [(a["path"], a["kind"]) for a in assets]
    assert keys == sorted(keys)
    assert len(keys) == len(set(keys))


def test_write_bundle_layout(tmp_path):
    out = tmp_path / "bundle"
    written = write_bundle(sample_bundle(), str(out))
    assert written == ["manifest.json", "lessons/00.json",
                       "lessons/01.json", "assets.json"]
    for rel in written:
        assert (out / rel).is_file()
    lesson = json.loads((out / "lessons" / "00.json").read_text("utf-8"))
    assert set(lesson) == {"steps", "title"}
    assert lesson["steps"][0]["kind"] == "show_frame"


def test_bundle_files_end_with_newline(tmp_path):
    write_bundle(sample_bundle(), str(tmp_path))
    data = (tmp_path / "manifest.json").read_bytes()
    assert data.endswith(b"\n")
    assert b"\r" not in data


def test_double_build_is_byte_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    write_bundle(sample_bundle(), str(a))
    write_bundle(sample_bundle(), str(b))
    for rel in ("manifest.json", "lessons/00.json", "lessons/01.json",
                "assets.json"):
        assert (a / rel).read_bytes() == (b / rel).read_bytes()


def test_two_digit_lesson_file_names(tmp_path):
    lessons = [Lesson(title=f"l{i}", goals=[Goal(text="g")])
               for i in range(24)]
    instance = IdInstance(spec="s", lang="hi", title="t", lessons=lessons)
    bundle = generate_primer(instance, IdSpecification(name="s"))
    written = write_bundle(bundle, str(tmp_path))
    assert len(written) == 26
    assert written[1] == "lessons/00.json"
    assert written[-2] == "lessons/23.json"


def test_process_nodes_carried_into_lesson_doc(tmp_path):
    rng = random.Random(7)
    from randgen import random_instance
    instance = random_instance(rng)
    while not any(lesson.plays for lesson in instance.lessons):
        instance = random_instance(rng)
    # random content may not satisfy decomposability; strip cases
    for lesson in instance.lessons:
        for fact in lesson.facts():
            fact.cases = []
    bundle = generate_primer(instance, IdSpecification(name="s"))
    write_bundle(bundle, str(tmp_path))
    for i, lesson in enumerate(instance.lessons):
        doc = json.loads((tmp_path / f"lessons/{i:02d}.json").read_text("utf-8"))
        if lesson.plays:
            assert doc["process"][0]["kind"] == "play"
        else:
            assert "process" not in doc


def test_missing_asset_report(tmp_path):
    instance = hindi_sample_instance()
    missing = missing_asset_report(instance, str(tmp_path))
    paths = {ref.path for ref, _ in missing}
    assert "sounds/hsounds/ma.wav" in paths
    sounds = tmp_path / "sounds"
    sounds.mkdir()
    for ref, _ in missing:
        p = tmp_path / ref.path
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_bytes(b"")
    assert missing_asset_report(instance, str(tmp_path)) == []


def test_json_is_sorted_and_unicode(tmp_path):
    write_bundle(sample_bundle(), str(tmp_path))
    text = (tmp_path / "lessons" / "00.json").read_text("utf-8")
    assert "मन का काम" in text
    assert "\\u" not in text
    doc = json.loads(text)
    assert list(doc) == sorted(doc)
