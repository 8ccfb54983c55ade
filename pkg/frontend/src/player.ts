/**
 * Primer-bundle loading and timeline playback.
 *
 * The player steps through a lesson's timeline exactly as generated; the
 * visual layer maps step kinds to phases (falling syllable, join, reveal)
 * and substitutes a placeholder when an asset file is missing.
 */

import { readFile, access } from "node:fs/promises";
import { join } from "node:path";

export interface TimelineStep {
  id: number;
  kind: string;
  text?: string;
  slot?: number;
  frame?: string;
  sound?: string;
  image?: string;
}

export interface LessonDoc {
  title: string;
  steps: TimelineStep[];
  process?: unknown[];
}

export interface AssetEntry {
  kind: "audio" | "image";
  path: string;
  present: boolean;
  steps: Array<{ lesson: number; step: number }>;
}

export interface PrimerBundle {
  dir: string;
  manifest: {
    title: string;
    lang: string;
    spec: string;
    lessons: Array<{ index: number; title: string; file: string }>;
  };
  lessons: LessonDoc[];
  assets: AssetEntry[];
}

export class BundleError extends Error {}

async function readJson(path: string): Promise<unknown> {
  let text: string;
  try {
    text = await readFile(path, "utf-8");
  } catch (exc) {
    throw new BundleError(`cannot read ${path}: ${(exc as Error).message}`);
  }
  try {
    return JSON.parse(text);
  } catch (exc) {
    throw new BundleError(`${path} is not valid JSON: ${(exc as Error).message}`);
  }
}

export async function loadBundle(dir: string): Promise<PrimerBundle> {
  const manifest = await readJson(join(dir, "manifest.json")) as PrimerBundle["manifest"];
  if (!Array.isArray(manifest.lessons)) {
    throw new BundleError("manifest has no lesson list");
  }
  const lessons: LessonDoc[] = [];
  for (const entry of manifest.lessons) {
    lessons.push(await readJson(join(dir, entry.file)) as LessonDoc);
  }
  const assets = await readJson(join(dir, "assets.json")) as AssetEntry[];
  return { dir, manifest, lessons, assets };
}

export interface RenderedStep {
  kind: string;
  phase: "frame" | "goal" | "drop" | "join" | "reveal" | "practice";
  detail: string;
  placeholders: string[];
}

export interface PlayerState {
  lesson: number;
  step: number;
  playing: boolean;
}

export class TimelinePlayer {
  readonly bundle: PrimerBundle;
  state: PlayerState;
  private readonly assetPresent: Map<string, boolean>;

  constructor(bundle: PrimerBundle) {
    if (bundle.lessons.length === 0) throw new BundleError("empty bundle");
    this.bundle = bundle;
    this.state = { lesson: 0, step: 0, playing: false };
    this.assetPresent = new Map(
      bundle.assets.map((a) => [a.path, a.present]));
  }

  selectLesson(index: number): void {
    if (index < 0 || index >= this.bundle.lessons.length) {
      throw new BundleError(`no lesson ${index}`);
    }
    this.state = { lesson: index, step: 0, playing: false };
  }

  get steps(): TimelineStep[] {
    return this.bundle.lessons[this.state.lesson].steps;
  }

  get currentStep(): TimelineStep | null {
    return this.steps[this.state.step] ?? null;
  }

  get canPrevious(): boolean {
    return this.state.step > 0;
  }

  get canNext(): boolean {
    return this.state.step < this.steps.length - 1;
  }

  next(): boolean {
    if (!this.canNext) {
      this.state.playing = false;
      return false;
    }
    this.state.step += 1;
    return true;
  }

  previous(): boolean {
    if (!this.canPrevious) return false;
    this.state.step -= 1;
    return true;
  }

  play(): void {
    this.state.playing = true;
  }

  pause(): void {
    this.state.playing = false;
  }

  /** Map the current step onto its visual phase; never throws on gaps. */
  render(step: TimelineStep): RenderedStep {
    const placeholders: string[] = [];
    for (const key of ["sound", "image"] as const) {
      const path = step[key];
      if (path && !this.assetPresent.get(path)) placeholders.push(path);
    }
    switch (step.kind) {
      case "show_frame":
        return { kind: step.kind, phase: "frame",
                 detail: step.text ?? step.frame ?? "", placeholders };
      case "present_goal":
        return { kind: step.kind, phase: "goal",
                 detail: step.text ?? "", placeholders };
      case "drop_fact":
        return { kind: step.kind, phase: "drop",
                 detail: `${step.text} -> slot ${step.slot}`, placeholders };
      case "join":
        return { kind: step.kind, phase: "join",
                 detail: step.text ?? "", placeholders };
      case "reveal_word":
        return { kind: step.kind, phase: "reveal",
                 detail: step.text ?? "", placeholders };
      case "practice_prompt":
        return { kind: step.kind, phase: "practice",
                 detail: step.text ?? "", placeholders };
      default:
        throw new BundleError(`unknown step kind ${step.kind}`);
    }
  }

  /** Step through the whole lesson from the start, returning rendered steps. */
  playThrough(): RenderedStep[] {
    this.state.step = 0;
    const rendered: RenderedStep[] = [];
    if (this.steps.length === 0) return rendered;
    rendered.push(this.render(this.currentStep as TimelineStep));
    while (this.next()) {
      rendered.push(this.render(this.currentStep as TimelineStep));
    }
    return rendered;
  }
}

/** Check one asset file under the bundle's asset root. */
export async function assetExists(dir: string, path: string): Promise<boolean> {
  try {
    await access(join(dir, path));
    return true;
  } catch {
    return false;
  }
}
