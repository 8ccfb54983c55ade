import { execFileSync } from "node:child_process";
import { mkdtempSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { fileURLToPath } from "node:url";

export const REPO_ROOT = fileURLToPath(new URL("../..", import.meta.url));
export const SAMPLES = join(REPO_ROOT, "samples");
export const SAMPLE_PRIMER = join(SAMPLES, "hindi_primer.xml");

export function primerline(...args: string[]): string {
  return execFileSync("python3", ["-m", "primerline", ...args],
    { encoding: "utf-8" });
}

export function tempDir(prefix = "studio-test-"): string {
  return mkdtempSync(join(tmpdir(), prefix));
}

export function presetSpecFile(preset: number, dir: string): string {
  const path = join(dir, `spec${preset}.json`);
  primerline("spec", "preset", String(preset), "-o", path);
  return path;
}

export function presetSchemaText(preset: number, dir: string): string {
  const spec = presetSpecFile(preset, dir);
  const path = join(dir, `schema${preset}.json`);
  primerline("editor", "schema", spec, "-o", path);
  return readFileSync(path, "utf-8");
}

export function buildSampleBundle(dir: string): string {
  const spec = presetSpecFile(2, dir);
  const out = join(dir, "bundle");
  primerline("primer", "build", spec, SAMPLE_PRIMER, "-o", out);
  return out;
}
