/**
 * Studio session: one loaded schema, one working document, optionally one
 * loaded bundle. A download is only offered after the primary validator
 * accepts the export with zero errors.
 */

import { PrimaryBridge } from "./bridge.js";
import { buildForm, FormState, missingRequired } from "./formState.js";
import { EditorSchema, parseSchema } from "./schema.js";
import { ExportMeta, exportInstanceXml } from "./exportXml.js";
import { loadBundle, PrimerBundle, TimelinePlayer } from "./player.js";
import { liveWord, LiveWordResult } from "./liveWord.js";

export type ExportOutcome =
  | { offered: true; xml: string; warnings: string[] }
  | { offered: false; errors: string[] };

export class StudioSession {
  readonly bridge: PrimaryBridge;
  schema: EditorSchema | null = null;
  form: FormState | null = null;
  bundle: PrimerBundle | null = null;
  player: TimelinePlayer | null = null;

  constructor(bridge: PrimaryBridge = new PrimaryBridge()) {
    this.bridge = bridge;
  }

  loadSchema(text: string): FormState {
    this.schema = parseSchema(text);
    this.form = buildForm(this.schema);
    return this.form;
  }

  async loadBundleDir(dir: string): Promise<TimelinePlayer> {
    this.bundle = await loadBundle(dir);
    this.player = new TimelinePlayer(this.bundle);
    return this.player;
  }

  /** Export the working document; offered only when validation is clean. */
  async exportInstance(meta: ExportMeta, specPath: string,
                       assetsDir?: string): Promise<ExportOutcome> {
    if (!this.form) return { offered: false, errors: ["no document loaded"] };
    const missing = missingRequired(this.form);
    if (missing.length > 0) {
      return {
        offered: false,
        errors: missing.map(
          (m) => `${m.path.join("/")}: ${m.field.label} is required`),
      };
    }
    const xml = exportInstanceXml(this.form, meta);
    const reply = await this.bridge.validateInstance(xml, specPath, assetsDir);
    if (reply.status !== 0) {
      return { offered: false, errors: reply.diagnostics };
    }
    return { offered: true, xml, warnings: reply.diagnostics };
  }

  async liveWord(word: string): Promise<LiveWordResult> {
    if (!this.bundle || !this.player) {
      return { ok: false, message: "load a bundle first", taught: [] };
    }
    return liveWord(this.bridge, this.bundle, this.player.state.lesson, word);
  }
}
