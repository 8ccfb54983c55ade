/**
 * HTML rendering of a form state.
 *
 * Output is plain markup with data attributes for the event layer; there is
 * no framework dependency so the same renderer serves tests and the browser
 * shell.
 */

import { FormField } from "./schema.js";
import { FormPath, FormState, SectionEntry, SectionGroup } from "./formState.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function pathAttr(path: FormPath): string {
  return escapeHtml(path.join("/"));
}

function renderField(field: FormField, value: string, path: FormPath): string {
  const name = `${pathAttr(path)}:${escapeHtml(field.id)}`;
  const mark = field.required ? ' <span class="required">*</span>' : "";
  let control: string;
  switch (field.kind) {
    case "long-text":
      control = `<textarea name="${name}">${escapeHtml(value)}</textarea>`;
      break;
    case "enum": {
      const options = (field.options ?? []).map((opt) => {
        const selected = opt === value ? " selected" : "";
        return `<option value="${escapeHtml(opt)}"${selected}>${escapeHtml(opt)}</option>`;
      });
      control = `<select name="${name}"><option value=""></option>${options.join("")}</select>`;
      break;
    }
    case "asset-audio":
      control = `<input type="text" name="${name}" value="${escapeHtml(value)}" data-asset="audio">`;
      break;
    case "asset-image":
      control = `<input type="text" name="${name}" value="${escapeHtml(value)}" data-asset="image">`;
      break;
    default:
      control = `<input type="text" name="${name}" value="${escapeHtml(value)}">`;
  }
  return `<label>${escapeHtml(field.label)}${mark} ${control}</label>`;
}

function renderEntry(group: SectionGroup, entry: SectionEntry,
                     path: FormPath, removable: boolean): string {
  const parts: string[] = [`<fieldset data-path="${pathAttr(path)}">`];
  if (removable) {
    parts.push(`<button type="button" data-remove="${pathAttr(path)}">Remove</button>`);
  }
  for (const field of group.section.fields) {
    parts.push(renderField(field, entry.values[field.id] ?? "", path));
  }
  for (const sub of entry.groups) {
    parts.push(renderGroup(sub, path));
  }
  parts.push("</fieldset>");
  return parts.join("\n");
}

function renderGroup(group: SectionGroup, prefix: FormPath): string {
  const path = [...prefix, group.section.id];
  const [lo, hi] = group.section.repeat;
  const parts: string[] = [];
  if (group.entries.length > 0 || hi > lo) {
    parts.push(`<section data-section="${pathAttr(path)}">`);
    parts.push(`<h3>${escapeHtml(group.section.title)}</h3>`);
    const removable = group.entries.length > lo;
    group.entries.forEach((entry, index) => {
      parts.push(renderEntry(group, entry, [...path, index], removable));
    });
    if (hi > 1 || lo === 0) {
      const disabled = group.entries.length >= hi ? " disabled" : "";
      parts.push(
        `<button type="button" data-add="${pathAttr(path)}"${disabled}>` +
        `Add ${escapeHtml(group.section.title)}</button>`);
    }
    parts.push("</section>");
  }
  return parts.join("\n");
}

export function renderForm(state: FormState): string {
  const parts = [`<form data-spec="${escapeHtml(state.schema.spec)}">`];
  for (const group of state.groups) {
    parts.push(renderGroup(group, []));
  }
  parts.push("</form>");
  return parts.join("\n");
}
