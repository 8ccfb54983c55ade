/**
 * Instance XML export.
 *
 * Mirrors the toolchain serializer: 2-space indent, fixed child order,
 * LF endings, attributes for goal technique data. Sections without an XML
 * counterpart (evaluation notes, context/environment remarks) are editor-side
 * metadata and are not exported.
 */

import { FormState, SectionEntry, SectionGroup, missingRequired } from "./formState.js";

export class ExportError extends Error {}

export interface ExportMeta {
  spec: string;
  lang: string;
  title?: string;
}

const ABCD_ATTRS = ["audience", "behavior", "condition", "degree"];
const FRAME_SLOTS = ["start", "middle", "end"];
const RESOURCE_KINDS = ["rule", "model", "theory"];
const PROCESS_CHILD: Record<string, string | undefined> = {
  play: "act", act: "scene", scene: "instruction",
};

function escapeText(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function quoteAttr(text: string): string {
  return `"${escapeText(text).replace(/"/g, "&quot;")}"`;
}

function leaf(tag: string, content: string, pad: string): string {
  return `${pad}<${tag}>${escapeText(content)}</${tag}>`;
}

function value(entry: SectionEntry, fieldId: string): string {
  return (entry.values[fieldId] ?? "").trim();
}

function group(entry: SectionEntry, id: string): SectionGroup | undefined {
  return entry.groups.find((g) => g.section.id === id);
}

function frameLines(slot: string, entry: SectionEntry, pad: string): string[] {
  const text = value(entry, "text");
  const sound = value(entry, "sound");
  const image = value(entry, "image");
  if (!text && !sound && !image) return [];
  const inner = pad + "  ";
  const lines = [`${pad}<${slot}>`];
  if (text) lines.push(leaf("text", text, inner));
  if (sound) lines.push(leaf("sound", sound, inner));
  if (image) lines.push(leaf("image", image, inner));
  lines.push(`${pad}</${slot}>`);
  return lines;
}

function instructionsLines(entry: SectionEntry, pad: string): string[] {
  const block = group(entry, "instructions");
  const holder = block?.entries[0];
  if (!holder) return [];
  const body: string[] = [];
  for (const slot of FRAME_SLOTS) {
    const frames = group(holder, slot);
    for (const frame of frames?.entries ?? []) {
      body.push(...frameLines(slot, frame, pad + "  "));
    }
  }
  if (body.length === 0) return [];
  return [`${pad}<instructions>`, ...body, `${pad}</instructions>`];
}

function goalLines(entry: SectionEntry, pad: string): string[] {
  let attrs = "";
  for (const part of ABCD_ATTRS) {
    const v = value(entry, part);
    if (v) attrs += ` ${part}=${quoteAttr(v)}`;
  }
  const bloom = value(entry, "bloom_level");
  if (bloom) attrs += ` bloom=${quoteAttr(bloom)}`;
  const inner = pad + "  ";
  // ABCD forms carry no free-text field; synthesize the goal text from the
  // behavior so the document stays parseable.
  const text = value(entry, "text") || value(entry, "behavior");
  if (!text) throw new ExportError("goal requires text");
  const lines = [`${pad}<goal${attrs}>`, leaf("text", text, inner)];
  const sound = value(entry, "sound");
  if (sound) lines.push(leaf("sound", sound, inner));
  lines.push(`${pad}</goal>`);
  return lines;
}

function caseLines(entry: SectionEntry, pad: string): string[] {
  const inner = pad + "  ";
  const lines = [`${pad}<case>`, leaf("text", value(entry, "text"), inner)];
  const sound = value(entry, "sound");
  if (sound) lines.push(leaf("sound", sound, inner));
  const image = value(entry, "image");
  if (image) lines.push(leaf("image", image, inner));
  lines.push(`${pad}</case>`);
  return lines;
}

function factLines(entry: SectionEntry, pad: string): string[] {
  const inner = pad + "  ";
  const lines = [`${pad}<fact>`, leaf("text", value(entry, "text"), inner)];
  const sound = value(entry, "sound");
  if (sound) lines.push(leaf("sound", sound, inner));
  const cases = group(entry, "case");
  if (cases && cases.entries.length > 0) {
    lines.push(`${inner}<cases>`);
    for (const c of cases.entries) lines.push(...caseLines(c, inner + "  "));
    lines.push(`${inner}</cases>`);
  }
  lines.push(`${pad}</fact>`);
  return lines;
}

function resourceLines(kind: string, entry: SectionEntry, pad: string): string[] {
  const inner = pad + "  ";
  const lines = [`${pad}<${kind}>`, leaf("text", value(entry, "text"), inner)];
  const sound = value(entry, "sound");
  if (sound) lines.push(leaf("sound", sound, inner));
  const image = value(entry, "image");
  if (image) lines.push(leaf("image", image, inner));
  lines.push(`${pad}</${kind}>`);
  return lines;
}

function processLines(kind: string, entry: SectionEntry, pad: string): string[] {
  const inner = pad + "  ";
  const lines = [`${pad}<${kind}>`, leaf("title", value(entry, "title"), inner)];
  for (const id of ["text", "sound", "image"]) {
    const v = value(entry, id);
    if (v) lines.push(leaf(id, v, inner));
  }
  const childKind = PROCESS_CHILD[kind];
  if (childKind) {
    const children = group(entry, childKind);
    for (const child of children?.entries ?? []) {
      lines.push(...processLines(childKind, child, inner));
    }
  }
  lines.push(`${pad}</${kind}>`);
  return lines;
}

function lessonLines(entry: SectionEntry, pad: string): string[] {
  const inner = pad + "  ";
  const lines = [`${pad}<lesson>`, leaf("title", value(entry, "title"), inner)];
  lines.push(...instructionsLines(entry, inner));
  const goals = group(entry, "goal");
  if (goals && goals.entries.length > 0) {
    lines.push(`${inner}<goals>`);
    for (const g of goals.entries) lines.push(...goalLines(g, inner + "  "));
    lines.push(`${inner}</goals>`);
  }
  const plays = group(entry, "play");
  for (const play of plays?.entries ?? []) {
    lines.push(...processLines("play", play, inner));
  }
  const facts = group(entry, "fact");
  for (const fact of facts?.entries ?? []) {
    lines.push(...factLines(fact, inner));
  }
  for (const kind of RESOURCE_KINDS) {
    const items = group(entry, kind);
    for (const item of items?.entries ?? []) {
      lines.push(...resourceLines(kind, item, inner));
    }
  }
  lines.push(`${pad}</lesson>`);
  return lines;
}

export function exportInstanceXml(state: FormState, meta: ExportMeta): string {
  const missing = missingRequired(state);
  if (missing.length > 0) {
    const shown = missing.slice(0, 5)
      .map((m) => `${m.path.join("/")}:${m.field.id}`).join(", ");
    throw new ExportError(`required fields empty: ${shown}`);
  }
  const lessons = state.groups.find((g) => g.section.id === "lesson");
  if (!lessons || lessons.entries.length === 0) {
    throw new ExportError("a primer requires at least one lesson");
  }
  const lines = [
    `<primer spec=${quoteAttr(meta.spec)} lang=${quoteAttr(meta.lang)}>`,
  ];
  if (meta.title) lines.push(leaf("title", meta.title, "  "));
  for (const lesson of lessons.entries) {
    lines.push(...lessonLines(lesson, "  "));
  }
  lines.push("</primer>");
  return lines.join("\n") + "\n";
}
