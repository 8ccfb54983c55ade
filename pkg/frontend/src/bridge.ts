/**
 * Bridge to the primary toolchain.
 *
 * Validation and word decomposition are never reimplemented here; both go
 * through the `primerline` command in `--format json` mode so the studio and
 * the generator can never drift apart.
 */

import { spawn } from "node:child_process";
import { mkdtemp, rm, writeFile } from "node:fs/promises";
import { tmpdir } from "node:os";
import { join } from "node:path";

export interface BridgeResult {
  status: number;
  diagnostics: string[];
  result: Record<string, unknown>;
}

export class BridgeError extends Error {}

export interface BridgeOptions {
  python?: string;
}

export class PrimaryBridge {
  private readonly python: string;

  constructor(options: BridgeOptions = {}) {
    this.python = options.python ?? process.env.PRIMERLINE_PYTHON ?? "python3";
  }

  invoke(args: string[]): Promise<BridgeResult> {
    return new Promise((resolve, reject) => {
      const child = spawn(this.python,
        ["-m", "primerline", "--format", "json", ...args],
        { stdio: ["ignore", "pipe", "pipe"] });
      let out = "";
      let err = "";
      child.stdout.on("data", (chunk) => { out += chunk; });
      child.stderr.on("data", (chunk) => { err += chunk; });
      child.on("error", (exc) => reject(new BridgeError(exc.message)));
      child.on("close", () => {
        try {
          const doc = JSON.parse(out);
          resolve({
            status: doc.status,
            diagnostics: doc.diagnostics ?? [],
            result: doc.result ?? {},
          });
        } catch {
          reject(new BridgeError(
            `primerline produced no JSON envelope: ${err || out}`));
        }
      });
    });
  }

  /** Validate instance XML text against a specification file. */
  async validateInstance(xml: string, specPath: string,
                         assetsDir?: string): Promise<BridgeResult> {
    const dir = await mkdtemp(join(tmpdir(), "studio-"));
    try {
      const instancePath = join(dir, "instance.xml");
      await writeFile(instancePath, xml, "utf-8");
      const args = ["instance", "validate", specPath, instancePath];
      if (assetsDir) args.push("--assets", assetsDir);
      return await this.invoke(args);
    } finally {
      await rm(dir, { recursive: true, force: true });
    }
  }

  /**
   * Decompose a word over taught facts (teaching order preserved).
   * Returns the segmentation, or null when no decomposition exists.
   */
  async decomposeWord(word: string, taught: string[]): Promise<string[] | null> {
    if (!word || taught.length === 0) {
      throw new BridgeError("word and taught facts must be nonempty");
    }
    const reply = await this.invoke(
      ["word", "decompose", word, "--taught", taught.join(",")]);
    if (reply.status === 0) {
      return reply.result.parts as string[];
    }
    if (reply.status === 2) return null;
    throw new BridgeError(String(reply.result.error ?? "decompose failed"));
  }
}
