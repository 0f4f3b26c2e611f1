// Typed client for the analysis service (report schema v1).

export type Band = "high" | "medium" | "low";
export type Severity = "long" | "very_long";

export interface SpanDoc {
  start: number;
  end: number;
  byte_start: number;
  byte_end: number;
}

export interface LongSentenceDoc extends SpanDoc {
  word_count: number;
  severity: Severity;
}

export interface ComplexWordDoc extends SpanDoc {
  surface: string;
}

export interface StatisticsDoc {
  letters: number;
  syllables: number;
  words: number;
  sentences: number;
  complex_words: number;
  letters_per_word: number;
  syllables_per_word: number;
  words_per_sentence: number;
  sentences_per_word: number;
  complex_per_word: number;
}

export interface ScoresDoc {
  flesch_pt: number;
  gulpease: number;
  fk_pt: number;
  gf_pt: number;
  ari_pt: number;
  cl_pt: number;
  final_result: number;
  final_display: number;
  band: Band;
}

export interface ReportDoc {
  alt_report_version: number;
  statistics: StatisticsDoc;
  scores: ScoresDoc;
  keywords: { keyword: string; absolute: number; relative: number }[];
  cloud: { word: string; count: number }[];
  annotations: {
    long_sentences: LongSentenceDoc[];
    complex_words: ComplexWordDoc[];
  };
  elapsed_ms?: number;
}

export const DEFAULT_SERVICE_URL = "http://127.0.0.1:8321";

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ServiceError";
  }
}

export async function requestAnalysis(
  baseUrl: string,
  text: string,
  keywords: string[],
  signal?: AbortSignal,
): Promise<ReportDoc> {
  const url = `${baseUrl.replace(/\/+$/, "")}/api/v1/analyze`;
  const resp = await fetch(url, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ text, keywords }),
    signal,
  });
  if (!resp.ok) {
    let message = `service returned ${resp.status}`;
    try {
      const doc: unknown = await resp.json();
      if (
        typeof doc === "object" &&
        doc !== null &&
        typeof (doc as { error?: unknown }).error === "string"
      ) {
        message = (doc as { error: string }).error;
      }
    } catch {
      // not a JSON error body; keep the status line
    }
    throw new ServiceError(resp.status, message);
  }
  const report = (await resp.json()) as ReportDoc;
  if (report.alt_report_version !== 1) {
    throw new ServiceError(
      resp.status,
      `unsupported report version ${report.alt_report_version}`,
    );
  }
  return report;
}

/** Service base URL from a `?service=` query parameter, else the default. */
export function resolveServiceUrl(
  search: string,
  fallback: string = DEFAULT_SERVICE_URL,
): string {
  return new URLSearchParams(search).get("service") ?? fallback;
}
