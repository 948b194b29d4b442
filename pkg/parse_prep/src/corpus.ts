import { UsageError } from "./manifest.js";

export interface ReviewRecord {
  review_id: string;
  text: string;
  opinions: unknown[];
}

function coerce(value: unknown, where: string): ReviewRecord {
  if (typeof value !== "object" || value === null || Array.isArray(value)) {
    throw new UsageError(`${where}: expected an object`);
  }
  const rec = value as Record<string, unknown>;
  // Public releases disagree on the id field name; accept the common ones.
  const id = rec.review_id ?? rec.id ?? rec.sent_id;
  if (typeof id !== "string" || id.length === 0) {
    throw new UsageError(`${where}: missing review id`);
  }
  if (id.includes(":")) {
    throw new UsageError(`${where}: review id ${JSON.stringify(id)} may not contain ':'`);
  }
  if (typeof rec.text !== "string") {
    throw new UsageError(`${where}: missing text`);
  }
  const opinions = Array.isArray(rec.opinions) ? rec.opinions : [];
  return { review_id: id, text: rec.text, opinions };
}

/** Parse a corpus given either as JSON lines or as one JSON array. */
export function parseCorpus(raw: string): ReviewRecord[] {
  const trimmed = raw.trim();
  if (trimmed.length === 0) return [];

  let records: ReviewRecord[];
  if (trimmed.startsWith("[")) {
    let data: unknown;
    try {
      data = JSON.parse(trimmed);
    } catch (err) {
      throw new UsageError(`corpus: ${(err as Error).message}`);
    }
    if (!Array.isArray(data)) throw new UsageError("corpus: expected a JSON array");
    records = data.map((item, i) => coerce(item, `corpus[${i}]`));
  } else {
    records = [];
    const lines = raw.split(/\r?\n/);
    for (let i = 0; i < lines.length; i++) {
      const line = lines[i].trim();
      if (!line) continue;
      let data: unknown;
      try {
        data = JSON.parse(line);
      } catch (err) {
        throw new UsageError(`corpus line ${i + 1}: ${(err as Error).message}`);
      }
      records.push(coerce(data, `corpus line ${i + 1}`));
    }
  }

  const seen = new Set<string>();
  for (const rec of records) {
    if (seen.has(rec.review_id)) {
      throw new UsageError(`corpus: duplicate review id ${JSON.stringify(rec.review_id)}`);
    }
    seen.add(rec.review_id);
  }
  return records;
}

/** One JSON object per line, the shape the scoring tools read back. */
export function serializeRecords(records: ReviewRecord[]): string {
  return records
    .map((r) => JSON.stringify({ review_id: r.review_id, text: r.text, opinions: r.opinions }) + "\n")
    .join("");
}
