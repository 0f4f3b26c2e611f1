// Turns report annotation spans into render-ready regions. Pure data in,
// pure data out; the DOM assembly lives in app.ts.

import type { ReportDoc, Severity } from "./api";

export interface InlinePiece {
  kind: "text" | "complex";
  text: string;
  /** Original service offsets (code points), uncut even when the visual
   *  text is clipped by a region boundary. */
  start: number;
  end: number;
}

export interface Region {
  severity: Severity | null;
  start: number;
  end: number;
  pieces: InlinePiece[];
}

/**
 * Service offsets count Unicode code points; JavaScript string indices
 * count UTF-16 units. Identical until an astral character appears.
 */
export function codePointIndexer(text: string): (cp: number) => number {
  if (!/[\uD800-\uDFFF]/.test(text)) {
    return (cp) => cp;
  }
  const units: number[] = [];
  let unit = 0;
  for (const ch of text) {
    units.push(unit);
    unit += ch.length;
  }
  units.push(unit);
  return (cp) => {
    const mapped = units[cp];
    if (mapped === undefined) {
      throw new RangeError(`code point offset ${cp} out of range`);
    }
    return mapped;
  };
}

export function codePointLength(text: string): number {
  if (!/[\uD800-\uDFFF]/.test(text)) {
    return text.length;
  }
  let n = 0;
  for (const _ of text) n += 1;
  return n;
}

export function annotatedRegions(text: string, report: ReportDoc): Region[] {
  const total = codePointLength(text);
  if (total === 0) {
    return [];
  }
  const toUnit = codePointIndexer(text);
  const slice = (a: number, b: number) => text.slice(toUnit(a), toUnit(b));

  const complexes = [...report.annotations.complex_words].sort(
    (a, b) => a.start - b.start,
  );

  const makeRegion = (
    severity: Severity | null,
    a: number,
    b: number,
  ): Region => {
    const pieces: InlinePiece[] = [];
    let at = a;
    for (const c of complexes) {
      if (c.end <= a || c.start >= b) continue;
      const from = Math.max(c.start, a);
      const to = Math.min(c.end, b);
      if (from > at) {
        pieces.push({ kind: "text", text: slice(at, from), start: at, end: from });
      }
      pieces.push({
        kind: "complex",
        text: slice(from, to),
        start: c.start,
        end: c.end,
      });
      at = to;
    }
    if (at < b) {
      pieces.push({ kind: "text", text: slice(at, b), start: at, end: b });
    }
    return { severity, start: a, end: b, pieces };
  };

  const sentences = [...report.annotations.long_sentences].sort(
    (a, b) => a.start - b.start,
  );
  const regions: Region[] = [];
  let cursor = 0;
  for (const s of sentences) {
    if (s.start > cursor) {
      regions.push(makeRegion(null, cursor, s.start));
    }
    regions.push(makeRegion(s.severity, s.start, Math.min(s.end, total)));
    cursor = Math.min(s.end, total);
  }
  if (cursor < total) {
    regions.push(makeRegion(null, cursor, total));
  }
  return regions;
}
