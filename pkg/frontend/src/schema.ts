/**
 * Editor form-schema types and loading.
 *
 * The schema JSON is produced by the primary toolchain (`primerline editor
 * schema`); the studio treats it as the generated artifact and renders one
 * form per section tree.
 */

export type FieldKind =
  | "short-text"
  | "long-text"
  | "enum"
  | "asset-audio"
  | "asset-image";

export interface FormField {
  id: string;
  label: string;
  kind: FieldKind;
  required: boolean;
  options?: string[];
}

export interface FormSection {
  id: string;
  title: string;
  repeat: [number, number];
  fields: FormField[];
  subsections: FormSection[];
}

export interface EditorSchema {
  spec: string;
  sections: FormSection[];
}

export class SchemaError extends Error {}

const FIELD_KINDS: FieldKind[] = [
  "short-text", "long-text", "enum", "asset-audio", "asset-image",
];

function fail(path: string, message: string): never {
  throw new SchemaError(`${path}: ${message}`);
}

function readField(raw: unknown, path: string): FormField {
  if (typeof raw !== "object" || raw === null) fail(path, "field must be an object");
  const data = raw as Record<string, unknown>;
  if (typeof data.id !== "string" || !data.id) fail(path, "field needs an id");
  if (typeof data.label !== "string") fail(path, "field needs a label");
  if (!FIELD_KINDS.includes(data.kind as FieldKind)) {
    fail(path, `unknown field kind ${JSON.stringify(data.kind)}`);
  }
  const field: FormField = {
    id: data.id,
    label: data.label,
    kind: data.kind as FieldKind,
    required: data.required === true,
  };
  if (field.kind === "enum") {
    if (!Array.isArray(data.options) || data.options.length < 2 ||
        !data.options.every((o) => typeof o === "string")) {
      fail(path, "enum field needs at least 2 string options");
    }
    field.options = data.options as string[];
  }
  return field;
}

function readSection(raw: unknown, path: string): FormSection {
  if (typeof raw !== "object" || raw === null) fail(path, "section must be an object");
  const data = raw as Record<string, unknown>;
  if (typeof data.id !== "string" || !data.id) fail(path, "section needs an id");
  if (typeof data.title !== "string") fail(path, "section needs a title");
  if (!Array.isArray(data.repeat) || data.repeat.length !== 2 ||
      !data.repeat.every((n) => Number.isInteger(n))) {
    fail(path, "section repeat must be [min, max]");
  }
  const [lo, hi] = data.repeat as [number, number];
  if (lo < 0 || lo > hi) fail(path, `repeat bounds [${lo}..${hi}] invalid`);
  if (!Array.isArray(data.fields)) fail(path, "section fields must be a list");
  if (!Array.isArray(data.subsections)) fail(path, "section subsections must be a list");
  return {
    id: data.id,
    title: data.title,
    repeat: [lo, hi],
    fields: data.fields.map((f, i) => readField(f, `${path}/fields[${i}]`)),
    subsections: data.subsections.map((s, i) =>
      readSection(s, `${path}/${(s as { id?: string })?.id ?? i}`)),
  };
}

export function parseSchema(text: string): EditorSchema {
  let doc: unknown;
  try {
    doc = JSON.parse(text);
  } catch (exc) {
    throw new SchemaError(`schema is not valid JSON: ${(exc as Error).message}`);
  }
  if (typeof doc !== "object" || doc === null) {
    throw new SchemaError("schema root must be an object");
  }
  const data = doc as Record<string, unknown>;
  if (typeof data.spec !== "string") throw new SchemaError("schema needs a spec name");
  if (!Array.isArray(data.sections) || data.sections.length === 0) {
    throw new SchemaError("schema needs at least one section");
  }
  return {
    spec: data.spec,
    sections: data.sections.map((s, i) =>
      readSection(s, (s as { id?: string })?.id ?? `sections[${i}]`)),
  };
}
