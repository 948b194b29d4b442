import { readFileSync, writeFileSync } from "node:fs";

import { restamp, splitBlocks, validateOutput, type Violation } from "./conllu.js";
import { parseCorpus, serializeRecords, type ReviewRecord } from "./corpus.js";
import { UsageError, type PrepManifest } from "./manifest.js";
import { runParser } from "./parser.js";

/** Output failed its own post-write check; maps to exit code 1. */
export class ValidationError extends Error {
  constructor(public violations: Violation[]) {
    super(
      `output failed validation (${violations.length} violation${violations.length === 1 ? "" : "s"}):\n` +
        violations.map((v) => `  ${v.sentId}: ${v.problem}`).join("\n"),
    );
  }
}

export interface PrepResult {
  reviews: number;
  kept: number;
  sentences: number;
  skipped: Array<{ review_id: string; reason: string }>;
}

function header(manifest: PrepManifest): string {
  const lines = [`# parser_cmd = ${manifest.parserCmd}`];
  if (manifest.parserModel) lines.push(`# parser_model = ${manifest.parserModel}`);
  lines.push(`# lang = ${manifest.lang}`);
  return lines.join("\n") + "\n\n";
}

export function prepare(manifest: PrepManifest): PrepResult {
  let raw: string;
  try {
    raw = readFileSync(manifest.inPath, "utf8");
  } catch (err) {
    throw new UsageError(`cannot read ${manifest.inPath}: ${(err as Error).message}`);
  }
  const reviews = parseCorpus(raw);

  const sections = reviews.length > 0 ? runParser(manifest.parserCmd, reviews) : new Map<string, string>();

  const kept: ReviewRecord[] = [];
  const skipped: PrepResult["skipped"] = [];
  const parts: string[] = [];
  let sentences = 0;

  for (const review of reviews) {
    const section = sections.get(review.review_id);
    const blocks = section === undefined ? [] : splitBlocks(section);
    if (blocks.length === 0) {
      skipped.push({
        review_id: review.review_id,
        reason: section === undefined ? "no parser output" : "parser produced no sentences",
      });
      continue;
    }
    parts.push(restamp(review.review_id, blocks));
    kept.push(review);
    sentences += blocks.length;
  }

  const conllu = kept.length > 0 ? header(manifest) + parts.join("\n") : "";
  writeFileSync(manifest.outConllu, conllu);
  writeFileSync(manifest.outRecords, serializeRecords(kept));
  if (manifest.skipReport !== undefined) {
    const report = skipped.map((s) => `${s.review_id}\t${s.reason}\n`).join("");
    writeFileSync(manifest.skipReport, report);
  }

  const violations = validateOutput(conllu, new Set(kept.map((r) => r.review_id)));
  if (violations.length > 0) throw new ValidationError(violations);

  return { reviews: reviews.length, kept: kept.length, sentences, skipped };
}
