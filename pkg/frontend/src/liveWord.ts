/**
 * Live-word demo: segment an audience word against the syllables taught so
 * far and animate it with the same drop/join/reveal sequence as a case.
 * Decomposition is delegated to the primary toolchain.
 */

import { PrimaryBridge } from "./bridge.js";
import { PrimerBundle, TimelineStep } from "./player.js";

/**
 * Taught facts through a lesson, reconstructed from the bundle: the union of
 * dropped syllables in document order (cases only ever use taught facts, so
 * this equals the fact set).
 */
export function taughtFactsThrough(bundle: PrimerBundle,
                                   lessonIndex: number): string[] {
  if (lessonIndex < 0 || lessonIndex >= bundle.lessons.length) {
    throw new RangeError(`no lesson ${lessonIndex}`);
  }
  const taught: string[] = [];
  for (let i = 0; i <= lessonIndex; i++) {
    for (const step of bundle.lessons[i].steps) {
      if (step.kind === "drop_fact" && step.text && !taught.includes(step.text)) {
        taught.push(step.text);
      }
    }
  }
  return taught;
}

export type LiveWordResult =
  | { ok: true; parts: string[]; steps: TimelineStep[] }
  | { ok: false; message: string; taught: string[] };

/** Ad-hoc case timeline: k drops, a join, a reveal. */
export function adHocTimeline(word: string, parts: string[]): TimelineStep[] {
  const steps: TimelineStep[] = parts.map((text, slot) => ({
    id: slot, kind: "drop_fact", slot, text,
  }));
  steps.push({ id: steps.length, kind: "join", text: word });
  steps.push({ id: steps.length, kind: "reveal_word", text: word });
  return steps;
}

export async function liveWord(bridge: PrimaryBridge, bundle: PrimerBundle,
                               lessonIndex: number,
                               word: string): Promise<LiveWordResult> {
  const trimmed = word.trim();
  if (!trimmed) {
    return { ok: false, message: "enter a word first", taught: [] };
  }
  const taught = taughtFactsThrough(bundle, lessonIndex);
  if (taught.length === 0) {
    return { ok: false, message: "no syllables taught yet", taught };
  }
  const parts = await bridge.decomposeWord(trimmed, taught);
  if (parts === null) {
    return {
      ok: false,
      message: `"${trimmed}" uses untaught syllables; taught so far: ` +
        taught.join(", "),
      taught,
    };
  }
  return { ok: true, parts, steps: adHocTimeline(trimmed, parts) };
}
