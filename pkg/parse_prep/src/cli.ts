#!/usr/bin/env node
import { parseArgs } from "node:util";

import { checkLang, UsageError, type PrepManifest } from "./manifest.js";
import { ParserError } from "./parser.js";
import { prepare, ValidationError } from "./prepare.js";

const USAGE = `usage: parse-prep prepare --in <corpus> --out-conllu <path> --out-records <path> --lang en|es
                         [--parser-cmd <shell command>] [--model <label>] [--skip-report <path>]

The parser command (or the PARSE_PREP_PARSER environment variable) receives
one {"id", "text"} JSON object per stdin line and must write CoNLL-U to
stdout with a "# newdoc id = <id>" marker opening each review's parse.`;

function buildManifest(argv: string[]): PrepManifest {
  const { values, positionals } = parseArgs({
    args: argv,
    allowPositionals: true,
    options: {
      in: { type: "string" },
      "out-conllu": { type: "string" },
      "out-records": { type: "string" },
      lang: { type: "string", default: "en" },
      "parser-cmd": { type: "string" },
      model: { type: "string", default: "" },
      "skip-report": { type: "string" },
      help: { type: "boolean", default: false },
    },
  });
  if (values.help) {
    console.log(USAGE);
    process.exit(0);
  }
  if (positionals.length !== 1 || positionals[0] !== "prepare") {
    throw new UsageError(`expected the single subcommand 'prepare'\n${USAGE}`);
  }
  for (const key of ["in", "out-conllu", "out-records"] as const) {
    if (!values[key]) throw new UsageError(`missing required option --${key}\n${USAGE}`);
  }
  const parserCmd = values["parser-cmd"] ?? process.env.PARSE_PREP_PARSER;
  if (!parserCmd) {
    throw new UsageError("no parser configured; pass --parser-cmd or set PARSE_PREP_PARSER");
  }
  return {
    inPath: values.in!,
    outConllu: values["out-conllu"]!,
    outRecords: values["out-records"]!,
    lang: checkLang(values.lang!),
    parserCmd,
    parserModel: values.model!,
    skipReport: values["skip-report"],
  };
}

function main(): number {
  let manifest: PrepManifest;
  try {
    manifest = buildManifest(process.argv.slice(2));
  } catch (err) {
    // parseArgs raises plain Errors for unknown flags; treat those as usage too.
    console.error(err instanceof UsageError ? err.message : `${(err as Error).message}\n${USAGE}`);
    return 2;
  }
  try {
    const result = prepare(manifest);
    console.error(
      `reviews: ${result.reviews}  kept: ${result.kept}  skipped: ${result.skipped.length}  sentences: ${result.sentences}`,
    );
    for (const skip of result.skipped) {
      console.error(`skipped ${skip.review_id}: ${skip.reason}`);
    }
    return 0;
  } catch (err) {
    if (err instanceof UsageError) {
      console.error(err.message);
      return 2;
    }
    if (err instanceof ParserError || err instanceof ValidationError) {
      console.error(err.message);
      return 1;
    }
    throw err;
  }
}

process.exit(main());
