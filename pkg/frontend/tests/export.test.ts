import { beforeAll, describe, expect, it } from "vitest";

import { addEntry, buildForm, FormState, setValue } from "../src/formState.js";
import { ExportError, exportInstanceXml } from "../src/exportXml.js";
import { parseSchema } from "../src/schema.js";
import { StudioSession } from "../src/session.js";
import { presetSchemaText, presetSpecFile, tempDir } from "./helpers.js";

const META = { spec: "ID-Specification-2", lang: "hi", title: "वर्णमाला" };

let schemaText2: string;
let schemaText4: string;
let spec2: string;

beforeAll(() => {
  const dir = tempDir();
  schemaText2 = presetSchemaText(2, dir);
  schemaText4 = presetSchemaText(4, dir);
  spec2 = presetSpecFile(2, dir);
});

/** Fill a preset-2 form to mirror the shipped Hindi lesson. */
function authorLesson(form: FormState): void {
  const lesson = ["lesson", 0];
  setValue(form, lesson, "title", "मन का काम");

  setValue(form, [...lesson, "goal", 0], "text", "परिचित शब्द पढ़ना");
  addEntry(form, [...lesson, "goal"]);
  setValue(form, [...lesson, "goal", 1], "text", "अक्षर म और न पहचानना");

  const play = [...lesson, "play", 0];
  setValue(form, play, "title", "पहला खेल");
  const act = [...play, "act", 0];
  setValue(form, act, "title", "पहला अंक");
  const scene = [...act, "scene", 0];
  setValue(form, scene, "title", "पहला दृश्य");
  const instruction = [...scene, "instruction", 0];
  setValue(form, instruction, "title", "अक्षर दिखाओ");
  setValue(form, instruction, "text", "म और न को बोर्ड पर लिखो");

  setValue(form, [...lesson, "fact", 0], "text", "म");
  addEntry(form, [...lesson, "fact"]);
  const fact1 = [...lesson, "fact", 1];
  setValue(form, fact1, "text", "न");
  for (const word of ["नम", "मन", "नमन"]) {
    const index = addEntryIndex(form, [...fact1, "case"]);
    setValue(form, [...fact1, "case", index], "text", word);
  }

  setValue(form, [...lesson, "evaluation", 0], "text", "शब्द पढ़वाकर जाँचें");
}

function addEntryIndex(form: FormState, path: Array<string | number>): number {
  addEntry(form, path);
  let group = form.groups.find((g) => g.section.id === path[0])!;
  for (let i = 1; i < path.length; i += 2) {
    const entry = group.entries[path[i] as number];
    if (i + 1 >= path.length) break;
    group = entry.groups.find((g) => g.section.id === path[i + 1])!;
  }
  return group.entries.length - 1;
}

describe("exportInstanceXml", () => {
  it("emits canonical markup", () => {
    const form = buildForm(parseSchema(schemaText2));
    authorLesson(form);
    const xml = exportInstanceXml(form, META);
    expect(xml.startsWith('<primer spec="ID-Specification-2" lang="hi">\n')).toBe(true);
    expect(xml.endsWith("</primer>\n")).toBe(true);
    expect(xml).toContain("  <lesson>\n    <title>मन का काम</title>");
    expect(xml).toContain("<case>\n          <text>नम</text>");
    expect(xml).toContain("<play>\n      <title>पहला खेल</title>");
    expect(xml).not.toContain("evaluation");
  });

  it("blocks export while required fields are empty", () => {
    const form = buildForm(parseSchema(schemaText2));
    expect(() => exportInstanceXml(form, META)).toThrow(ExportError);
    expect(() => exportInstanceXml(form, META)).toThrow(/lesson\/0:title/);
  });

  it("writes ABCD goals as attributes", () => {
    const form = buildForm(parseSchema(schemaText4));
    setValue(form, ["lesson", 0], "title", "Lesson");
    const goal = ["lesson", 0, "goal", 0];
    setValue(form, goal, "audience", "new readers");
    setValue(form, goal, "behavior", "read the word");
    setValue(form, goal, "condition", "given the primer");
    setValue(form, goal, "degree", "without help");
    setValue(form, ["lesson", 0, "evaluation", 0], "text", "quiz");
    const xml = exportInstanceXml(form, { spec: "s", lang: "en" });
    expect(xml).toContain(
      '<goal audience="new readers" behavior="read the word" ' +
      'condition="given the primer" degree="without help">');
  });

  it("escapes markup in values", () => {
    const form = buildForm(parseSchema(schemaText2));
    authorLesson(form);
    setValue(form, ["lesson", 0, "goal", 0], "text", "a < b & \"c\"");
    const xml = exportInstanceXml(form, META);
    expect(xml).toContain("<text>a &lt; b &amp; \"c\"</text>");
  });
});

describe("StudioSession.exportInstance", () => {
  it("offers the download after clean validation", async () => {
    const session = new StudioSession();
    const form = session.loadSchema(schemaText2);
    authorLesson(form);
    const outcome = await session.exportInstance(META, spec2);
    expect(outcome.offered).toBe(true);
    if (outcome.offered) expect(outcome.xml).toContain("नमन");
  });

  it("refuses while a title is missing, naming the field", async () => {
    const session = new StudioSession();
    const form = session.loadSchema(schemaText2);
    authorLesson(form);
    setValue(form, ["lesson", 0], "title", "");
    const outcome = await session.exportInstance(META, spec2);
    expect(outcome.offered).toBe(false);
    if (!outcome.offered) {
      expect(outcome.errors.join("\n")).toContain("lesson/0: Lesson title");
    }
  });

  it("surfaces the primary validator's KNOWN_TO_UNKNOWN", async () => {
    const session = new StudioSession();
    const form = session.loadSchema(schemaText2);
    authorLesson(form);
    const fact1 = ["lesson", 0, "fact", 1];
    const index = addEntryIndex(form, [...fact1, "case"]);
    setValue(form, [...fact1, "case", index], "text", "नर");
    const outcome = await session.exportInstance(META, spec2);
    expect(outcome.offered).toBe(false);
    if (!outcome.offered) {
      expect(outcome.errors.join("\n")).toContain("KNOWN_TO_UNKNOWN");
      expect(outcome.errors.join("\n")).toContain("नर");
    }
  });
});
