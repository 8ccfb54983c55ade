import random

import pytest
from hypothesis import given, settings, strategies as st

from primerline.idinstance import (
    AssetRef, Case, EmptyWordError, Fact, Goal, IdInstance, InstanceParseError,
    Lesson, ProcessNode, decompose_word, hindi_sample_instance,
    hindi_sample_xml, parse_instance, serialize_instance, taught_facts_through,
    validate_instance,
)
from primerline.idspec import IdSpecification, preset_specification

from randgen import all_segmentations_exist, random_instance, random_segmentation_case


# --- parsing ----------------------------------------------------------------

def test_hindi_sample_parses():
    instance = parse_instance(hindi_sample_xml())
    assert len(instance.lessons) == 2
    lesson = instance.lessons[0]
    assert lesson.title == "मन का काम"
    assert len(lesson.goals) == 2
    facts = lesson.facts()
    assert [f.text for f in facts] == ["म", "न"]
    assert [c.text for c in facts[1].cases] == ["नम", "मन", "नमन"]


def test_minimal_lesson_parses_without_goals():
    xml = "<primer spec='s' lang='hi'><lesson><title>x</title></lesson></primer>"
    instance = parse_instance(xml)
    assert len(instance.lessons) == 1
    assert instance.lessons[0].goals == []
    assert instance.lessons[0].content == []


def test_unknown_element_rejected():
    xml = "<primer spec='s' lang='hi'><chapter/></primer>"
    with pytest.raises(InstanceParseError) as exc:
        parse_instance(xml)
    diag = exc.value.diagnostics[0]
    assert diag.code == "UNKNOWN_ELEMENT"
    assert "chapter" in diag.message


def test_malformed_xml_reports_position():
    with pytest.raises(InstanceParseError) as exc:
        parse_instance("<primer><lesson>")
    assert exc.value.diagnostics[0].code == "MALFORMED_XML"


def test_fact_without_text_rejected():
    xml = ("<primer spec='s' lang='hi'><lesson><title>x</title>"
           "<fact><sound>a.wav</sound></fact></lesson></primer>")
    with pytest.raises(InstanceParseError) as exc:
        parse_instance(xml)
    assert any(d.code == "MISSING_TEXT" for d in exc.value.diagnostics)


def test_goal_technique_attributes_parse():
    xml = ("<primer spec='s' lang='en'><lesson><title>x</title><goals>"
           "<goal audience='a' behavior='b' condition='c' degree='d'>"
           "<text>g1</text></goal>"
           "<goal bloom='apply'><text>g2</text></goal>"
           "</goals></lesson></primer>")
    instance = parse_instance(xml)
    g1, g2 = instance.lessons[0].goals
    assert g1.abcd == {"audience": "a", "behavior": "b",
                       "condition": "c", "degree": "d"}
    assert g2.bloom == "apply"


def test_empty_sound_element_is_absent():
    xml = ("<primer spec='s' lang='hi'><lesson><title>x</title><goals>"
           "<goal><text>g</text><sound></sound></goal></goals></lesson></primer>")
    assert parse_instance(xml).lessons[0].goals[0].sound is None


# --- serialization ----------------------------------------------------------

def test_round_trip_hindi_sample():
    instance = hindi_sample_instance()
    assert parse_instance(serialize_instance(instance)) == instance


def test_serialization_is_deterministic():
    assert hindi_sample_xml() == hindi_sample_xml()


def test_indic_text_preserved_byte_exact():
    text = "क़्‍त्र"  # includes nukta, virama and ZWJ
    instance = IdInstance(spec="s", lang="hi", title=text, lessons=[
        Lesson(title=text, goals=[Goal(text=text)])])
    xml = serialize_instance(instance)
    again = parse_instance(xml)
    assert again.title == text
    assert again.lessons[0].goals[0].text == text


def test_markup_characters_escaped():
    instance = IdInstance(spec="s", lang="en", title="a & b < c", lessons=[
        Lesson(title="<tag>", goals=[Goal(text="x & y")])])
    assert parse_instance(serialize_instance(instance)) == instance


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_round_trip_property(seed):
    instance = random_instance(random.Random(seed))
    assert parse_instance(serialize_instance(instance)) == instance


# --- decomposition ----------------------------------------------------------

def test_decompose_paper_example():
    assert decompose_word("नम", ["न", "म"]) == ["न", "म"]


def test_decompose_single_fact_identity():
    assert decompose_word("म", ["म"]) == ["म"]


def test_decompose_requires_backtracking():
    # greedy "ab" first fails; the only segmentation is a+bc
    assert decompose_word("abc", ["ab", "a", "bc"]) == ["a", "bc"]


def test_decompose_longest_first_preference():
    assert decompose_word("abab", ["a", "b", "ab"]) == ["ab", "ab"]


def test_decompose_no_segmentation():
    assert decompose_word("xyz", ["a", "b"]) is None


def test_decompose_empty_word_rejected():
    with pytest.raises(EmptyWordError):
        decompose_word("", ["a"])
    with pytest.raises(EmptyWordError):
        decompose_word("a", [])


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_decomposition_matches_exhaustive_oracle(seed):
    word, taught = random_segmentation_case(random.Random(seed))
    parts = decompose_word(word, taught)
    assert (parts is not None) == all_segmentations_exist(word, taught)
    if parts is not None:
        assert "".join(parts) == word
        assert all(p in taught for p in parts)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_decomposition_monotone_under_superset(seed):
    rng = random.Random(seed)
    word, taught = random_segmentation_case(rng)
    if decompose_word(word, taught) is None:
        return
    superset = taught + [w for w in ("aa", "cb", "abc") if w not in taught]
    assert decompose_word(word, superset) is not None


def test_taught_facts_first_occurrence_order():
    instance = hindi_sample_instance()
    assert taught_facts_through(instance, 0) == ["म", "न"]
    assert taught_facts_through(instance, 1) == ["म", "न", "र"]


def test_taught_facts_deduplicates():
    instance = IdInstance(spec="s", lang="hi", title="t", lessons=[
        Lesson(title="a", goals=[Goal(text="g")], content=[Fact(text="म")]),
        Lesson(title="b", goals=[Goal(text="g")],
               content=[Fact(text="म"), Fact(text="न")]),
    ])
    assert taught_facts_through(instance, 1) == ["म", "न"]


def test_taught_facts_index_out_of_range():
    with pytest.raises(IndexError):
        taught_facts_through(hindi_sample_instance(), 2)


def test_taught_facts_empty_lesson():
    instance = IdInstance(spec="s", lang="hi", title="t", lessons=[
        Lesson(title="a", goals=[Goal(text="g")])])
    assert taught_facts_through(instance, 0) == []


# --- validation ---------------------------------------------------------------

def test_hindi_sample_conformant_under_preset2():
    diags = validate_instance(hindi_sample_instance(), preset_specification(2))
    assert diags == []


def test_missing_goals_flagged():
    instance = parse_instance(
        "<primer spec='s' lang='hi'><lesson><title>x</title></lesson></primer>")
    diags = validate_instance(instance, preset_specification(2))
    assert any(d.code == "GOALS_MISSING" for d in diags)


def test_untaught_syllable_is_known_to_unknown_error():
    instance = hindi_sample_instance()
    instance.lessons[0].facts()[1].cases.append(Case(text="नर"))
    diags = validate_instance(instance, preset_specification(2))
    bad = [d for d in diags if d.code == "KNOWN_TO_UNKNOWN"]
    assert bad and "नर" in bad[0].message and "lesson 1" in bad[0].message


def test_pasi_bounds_26_plays():
    instance = hindi_sample_instance()
    instance.lessons[0].plays = [
        ProcessNode(kind="play", title=f"p{i}") for i in range(26)]
    diags = validate_instance(instance, preset_specification(2))
    assert any(d.code == "PROCESS_BOUNDS" for d in diags)


def test_abcd_fields_required_by_spec():
    spec = IdSpecification(name="x", goal_technique="ABCD")
    instance = IdInstance(spec="x", lang="en", title="t", lessons=[
        Lesson(title="l", goals=[Goal(text="g")])])
    diags = validate_instance(instance, spec)
    assert any(d.code == "ABCD_FIELDS_MISSING" for d in diags)


def test_bloom_level_checked_against_taxonomy():
    spec = IdSpecification(name="x", goal_technique="BloomRevised")
    instance = IdInstance(spec="x", lang="en", title="t", lessons=[
        Lesson(title="l", goals=[Goal(text="g", bloom="memorize")])])
    diags = validate_instance(instance, spec)
    assert any(d.code == "BLOOM_LEVEL_INVALID" for d in diags)


def test_unsafe_asset_path_is_error():
    instance = hindi_sample_instance()
    instance.lessons[0].goals[0].sound = AssetRef("../secret.wav", "audio")
    diags = validate_instance(instance, preset_specification(2))
    assert any(d.code == "ASSET_PATH_INVALID" and d.severity == "error"
               for d in diags)


def test_missing_asset_files_warn_only(tmp_path):
    instance = hindi_sample_instance()
    diags = validate_instance(instance, preset_specification(2),
                              base_dir=str(tmp_path))
    assert diags and all(d.severity == "warning" for d in diags)
    assert all(d.code == "ASSET_MISSING" for d in diags)


def test_present_asset_files_do_not_warn(tmp_path):
    instance = hindi_sample_instance()
    ref = instance.lessons[0].facts()[0].sound
    target = tmp_path / ref.path
    target.parent.mkdir(parents=True)
    target.write_bytes(b"")
    diags = validate_instance(instance, preset_specification(2),
                              base_dir=str(tmp_path))
    assert not any(ref.path in d.message for d in diags)


def test_validation_is_deterministic():
    instance = hindi_sample_instance()
    instance.lessons[0].facts()[1].cases.append(Case(text="xyz"))
    spec = preset_specification(2)
    first = [str(d) for d in validate_instance(instance, spec)]
    second = [str(d) for d in validate_instance(instance, spec)]
    assert first == second
