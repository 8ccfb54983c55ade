/**
 * Mutable form state behind the rendered editor.
 *
 * Each schema section becomes a group of repeatable entries; add/remove are
 * clamped to the section's [min..max] bounds and required fields are tracked
 * so export can be blocked with the offending paths highlighted.
 */

import { EditorSchema, FormField, FormSection } from "./schema.js";

export interface SectionEntry {
  values: Record<string, string>;
  groups: SectionGroup[];
}

export interface SectionGroup {
  section: FormSection;
  entries: SectionEntry[];
}

export interface FormState {
  schema: EditorSchema;
  groups: SectionGroup[];
}

function newEntry(section: FormSection): SectionEntry {
  return {
    values: {},
    groups: section.subsections.map(newGroup),
  };
}

function newGroup(section: FormSection): SectionGroup {
  const entries = [];
  for (let i = 0; i < section.repeat[0]; i++) entries.push(newEntry(section));
  return { section, entries };
}

export function buildForm(schema: EditorSchema): FormState {
  return { schema, groups: schema.sections.map(newGroup) };
}

/** Path steps: section id, then entry index, alternating. */
export type FormPath = Array<string | number>;

function resolveGroup(state: FormState, path: FormPath): SectionGroup {
  let groups = state.groups;
  let group: SectionGroup | undefined;
  for (let i = 0; i < path.length; i++) {
    const step = path[i];
    if (typeof step === "string") {
      group = groups.find((g) => g.section.id === step);
      if (!group) throw new Error(`no section ${step} at ${path.slice(0, i).join("/")}`);
    } else {
      if (!group) throw new Error("path must start with a section id");
      const entry = group.entries[step];
      if (!entry) throw new Error(`no entry ${step} in section ${group.section.id}`);
      groups = entry.groups;
      group = undefined;
    }
  }
  if (!group) throw new Error("path must end on a section id");
  return group;
}

function resolveEntry(state: FormState, path: FormPath): SectionEntry {
  const last = path[path.length - 1];
  if (typeof last !== "number") throw new Error("path must end on an entry index");
  const group = resolveGroup(state, path.slice(0, -1));
  const entry = group.entries[last];
  if (!entry) throw new Error(`no entry ${last} in section ${group.section.id}`);
  return entry;
}

export function canAdd(state: FormState, path: FormPath): boolean {
  const group = resolveGroup(state, path);
  return group.entries.length < group.section.repeat[1];
}

export function canRemove(state: FormState, path: FormPath): boolean {
  const group = resolveGroup(state, path);
  return group.entries.length > group.section.repeat[0];
}

export function addEntry(state: FormState, path: FormPath): SectionEntry {
  const group = resolveGroup(state, path);
  if (group.entries.length >= group.section.repeat[1]) {
    throw new Error(
      `section ${group.section.id} is full (max ${group.section.repeat[1]})`);
  }
  const entry = newEntry(group.section);
  group.entries.push(entry);
  return entry;
}

export function removeEntry(state: FormState, path: FormPath, index: number): void {
  const group = resolveGroup(state, path);
  if (group.entries.length <= group.section.repeat[0]) {
    throw new Error(
      `section ${group.section.id} needs at least ${group.section.repeat[0]}`);
  }
  if (index < 0 || index >= group.entries.length) {
    throw new Error(`no entry ${index} in section ${group.section.id}`);
  }
  group.entries.splice(index, 1);
}

export function setValue(state: FormState, path: FormPath,
                         fieldId: string, value: string): void {
  const entry = resolveEntry(state, path);
  const group = resolveGroup(state, path.slice(0, -1));
  const field = group.section.fields.find((f) => f.id === fieldId);
  if (!field) throw new Error(`no field ${fieldId} in section ${group.section.id}`);
  if (field.kind === "enum" && value !== "" &&
      !(field.options ?? []).includes(value)) {
    throw new Error(`${value} is not an option of ${fieldId}`);
  }
  entry.values[fieldId] = value;
}

export function getValue(state: FormState, path: FormPath, fieldId: string): string {
  return resolveEntry(state, path).values[fieldId] ?? "";
}

export interface MissingField {
  path: FormPath;
  field: FormField;
}

function walkMissing(groups: SectionGroup[], prefix: FormPath,
                     out: MissingField[]): void {
  for (const group of groups) {
    group.entries.forEach((entry, index) => {
      const here = [...prefix, group.section.id, index];
      for (const field of group.section.fields) {
        if (field.required && !(entry.values[field.id] ?? "").trim()) {
          out.push({ path: here, field });
        }
      }
      walkMissing(entry.groups, here, out);
    });
  }
}

/** Required fields still empty; export is offered only when this is []. */
export function missingRequired(state: FormState): MissingField[] {
  const out: MissingField[] = [];
  walkMissing(state.groups, [], out);
  return out;
}
