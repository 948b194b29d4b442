export type Lang = "en" | "es";

const LANGS: ReadonlySet<string> = new Set(["en", "es"]);

export interface PrepManifest {
  inPath: string;
  outConllu: string;
  outRecords: string;
  lang: Lang;
  /** Shell command run once per batch; see README for the stdin/stdout protocol. */
  parserCmd: string;
  /** Free-form model/version label, recorded in the output header. */
  parserModel: string;
  skipReport?: string;
}

/** Bad flags or unreadable input; maps to exit code 2. */
export class UsageError extends Error {}

export function checkLang(value: string): Lang {
  if (!LANGS.has(value)) {
    throw new UsageError(`unsupported language ${JSON.stringify(value)}; expected en or es`);
  }
  return value as Lang;
}
