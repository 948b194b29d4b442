const N_COLUMNS = 10;

export interface SentenceBlock {
  comments: string[];
  tokenLines: string[];
}

/** Split one review's parser output into sentence blocks (blank-line separated). */
export function splitBlocks(section: string): SentenceBlock[] {
  const blocks: SentenceBlock[] = [];
  let comments: string[] = [];
  let tokenLines: string[] = [];

  const flush = () => {
    if (tokenLines.length > 0) blocks.push({ comments, tokenLines });
    comments = [];
    tokenLines = [];
  };

  for (const raw of section.split(/\r?\n/)) {
    const line = raw.replace(/\s+$/, "");
    if (!line) {
      flush();
    } else if (line.startsWith("#")) {
      // Old sent_id stamps are replaced wholesale on restamp.
      if (!/^#\s*sent_id\s*=/.test(line)) comments.push(line);
    } else {
      tokenLines.push(line);
    }
  }
  flush();
  return blocks;
}

/** Stamp blocks as <reviewId>:1, <reviewId>:2, ... and serialize them. */
export function restamp(reviewId: string, blocks: SentenceBlock[]): string {
  const out: string[] = [];
  blocks.forEach((block, i) => {
    out.push(`# sent_id = ${reviewId}:${i + 1}`);
    out.push(...block.comments);
    out.push(...block.tokenLines);
    out.push("");
  });
  return out.join("\n");
}

export interface Violation {
  sentId: string;
  problem: string;
}

/**
 * Post-write check: every sentence must carry an aligned sent_id and a
 * well-formed single-root tree. This is a safety net; the scoring tools run
 * their own stricter ingest on top.
 */
export function validateOutput(conllu: string, knownIds: Set<string>): Violation[] {
  const violations: Violation[] = [];
  let sentId = "";
  let rows: string[][] = [];

  const check = () => {
    if (rows.length === 0) return;
    const where = sentId || "<unstamped>";
    if (!sentId) {
      violations.push({ sentId: where, problem: "sentence has no sent_id" });
    } else {
      const colon = sentId.lastIndexOf(":");
      const prefix = colon < 0 ? sentId : sentId.slice(0, colon);
      const index = colon < 0 ? "" : sentId.slice(colon + 1);
      if (colon < 0 || !/^[1-9][0-9]*$/.test(index)) {
        violations.push({ sentId: where, problem: "sent_id is not <review_id>:<k>" });
      } else if (!knownIds.has(prefix)) {
        violations.push({ sentId: where, problem: `no record for review ${JSON.stringify(prefix)}` });
      }
    }
    let roots = 0;
    let words = 0;
    for (let i = 0; i < rows.length; i++) {
      const cols = rows[i];
      if (cols.length !== N_COLUMNS) {
        violations.push({ sentId: where, problem: `token ${i + 1}: expected ${N_COLUMNS} columns, got ${cols.length}` });
        continue;
      }
      if (/[-.]/.test(cols[0])) continue; // range / empty-node lines are passed through
      words++;
      const id = Number(cols[0]);
      const head = Number(cols[6]);
      if (id !== words) violations.push({ sentId: where, problem: `token ids not consecutive at ${cols[0]}` });
      if (!Number.isInteger(head) || head < 0 || head > rows.length) {
        violations.push({ sentId: where, problem: `token ${id}: head ${cols[6]} out of range` });
      } else if (head === 0) {
        roots++;
      }
    }
    if (roots !== 1) violations.push({ sentId: where, problem: `expected one root, found ${roots}` });
    sentId = "";
    rows = [];
  };

  for (const raw of conllu.split(/\r?\n/)) {
    const line = raw.trimEnd();
    if (!line) {
      check();
    } else if (line.startsWith("#")) {
      const m = /^#\s*sent_id\s*=\s*(.*)$/.exec(line);
      if (m) sentId = m[1].trim();
    } else {
      rows.push(line.split("\t"));
    }
  }
  check();
  return violations;
}
