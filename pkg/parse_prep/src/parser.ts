import { spawnSync } from "node:child_process";

import type { ReviewRecord } from "./corpus.js";

/** Parser process failed outright (nonzero exit, spawn error); maps to exit code 1. */
export class ParserError extends Error {}

const NEWDOC = /^# newdoc id = (.*)$/;

/**
 * Run the external parser once over the whole batch.
 *
 * Protocol: one JSON object {"id", "text"} per stdin line; stdout is CoNLL-U
 * where each review's parse opens with "# newdoc id = <id>". Reviews the
 * parser could not handle simply have no sentences under their marker (or no
 * marker at all); the caller turns those into skips.
 */
export function runParser(cmd: string, reviews: ReviewRecord[]): Map<string, string> {
  const input =
    reviews.map((r) => JSON.stringify({ id: r.review_id, text: r.text })).join("\n") + "\n";
  const proc = spawnSync(cmd, {
    shell: true,
    input,
    encoding: "utf8",
    maxBuffer: 64 * 1024 * 1024,
  });
  if (proc.error) {
    const code = (proc.error as NodeJS.ErrnoException).code;
    if (code === "EPIPE") {
      throw new ParserError("parser exited before reading its input");
    }
    throw new ParserError(`parser did not start: ${proc.error.message}`);
  }
  if (proc.status !== 0) {
    const tail = (proc.stderr ?? "").trim().split("\n").slice(-5).join("\n");
    throw new ParserError(`parser exited with status ${proc.status}${tail ? `\n${tail}` : ""}`);
  }
  return splitSections(proc.stdout ?? "");
}

/** Group parser output by its "# newdoc id" markers; text before the first marker is dropped. */
export function splitSections(stdout: string): Map<string, string> {
  const sections = new Map<string, string>();
  let current: string | null = null;
  let buf: string[] = [];

  const flush = () => {
    if (current !== null) sections.set(current, buf.join("\n"));
    buf = [];
  };

  for (const line of stdout.split(/\r?\n/)) {
    const m = NEWDOC.exec(line);
    if (m) {
      flush();
      current = m[1].trim();
      continue;
    }
    buf.push(line);
  }
  flush();
  return sections;
}
