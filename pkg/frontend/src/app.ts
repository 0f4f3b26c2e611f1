// Page assembly and interaction loop: paste text, analyze, read scores,
// inspect highlights, edit, re-run. Every displayed number comes from the
// service response; this file only formats.

import {
  DEFAULT_SERVICE_URL,
  requestAnalysis,
  ServiceError,
  type ReportDoc,
} from "./api";
import { sizeCloud } from "./cloud";
import { annotatedRegions } from "./highlights";

export interface AppHandles {
  editor: HTMLTextAreaElement;
  analyzeButton: HTMLButtonElement;
  keywordInput: HTMLInputElement;
  serviceInput: HTMLInputElement;
  badge: HTMLElement;
  banner: HTMLElement;
  annotated: HTMLElement;
  results: HTMLElement;
  /** Run the same analysis the button triggers; resolves when settled. */
  analyze: () => Promise<void>;
  lastReport: () => ReportDoc | null;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

const INDEX_LABELS: [keyof ReportDoc["scores"], string][] = [
  ["flesch_pt", "Flesch"],
  ["gulpease", "Gulpease"],
  ["fk_pt", "Flesch-Kincaid"],
  ["gf_pt", "Gunning Fog"],
  ["ari_pt", "ARI"],
  ["cl_pt", "Coleman-Liau"],
];

function parseKeywords(raw: string): string[] {
  return raw
    .split(",")
    .map((k) => k.trim())
    .filter((k) => k.length > 0);
}

export function createApp(
  root: HTMLElement,
  serviceUrl: string = DEFAULT_SERVICE_URL,
): AppHandles {
  root.textContent = "";

  const header = el("header");
  header.append(el("h1", "", "ALT"));
  const serviceLabel = el("label", "service-url", "service ");
  const serviceInput = el("input");
  serviceInput.type = "text";
  serviceInput.value = serviceUrl;
  serviceLabel.append(serviceInput);
  header.append(serviceLabel);

  const banner = el("div", "banner");
  banner.setAttribute("role", "alert");
  banner.hidden = true;

  const editor = el("textarea");
  editor.placeholder = "Paste the text here…";
  editor.rows = 12;

  const keywordInput = el("input");
  keywordInput.type = "text";
  keywordInput.placeholder = "keywords, comma separated";

  const analyzeButton = el("button", "", "Analyze");
  analyzeButton.disabled = true;

  const status = el("span", "status");

  const controls = el("div", "controls");
  controls.append(keywordInput, analyzeButton, status);

  const badge = el("div", "badge");
  const indicesTable = el("table", "indices");
  const summary = el("p", "summary");
  const annotated = el("div", "annotated");
  const keywordTable = el("table", "keywords");
  const cloudPanel = el("div", "cloud");

  const results = el("section", "results");
  results.hidden = true;
  results.append(
    badge,
    indicesTable,
    summary,
    el("h2", "", "Annotated text"),
    annotated,
    el("h2", "", "Keywords"),
    keywordTable,
    el("h2", "", "Word cloud"),
    cloudPanel,
  );

  root.append(header, banner, editor, controls, results);

  let lastReport: ReportDoc | null = null;
  let analyzedText: string | null = null;
  let inflight: AbortController | null = null;

  function renderBadge(report: ReportDoc): void {
    badge.textContent = `${report.scores.final_display} / ${report.scores.band} readability`;
    badge.className = `badge band-${report.scores.band}`;
  }

  function renderIndices(report: ReportDoc): void {
    indicesTable.textContent = "";
    for (const [key, label] of INDEX_LABELS) {
      const row = el("tr");
      row.append(el("td", "", label), el("td", "num", (report.scores[key] as number).toFixed(1)));
      indicesTable.append(row);
    }
  }

  function renderSummary(report: ReportDoc): void {
    const s = report.statistics;
    const complexShare = (s.complex_per_word * 100).toFixed(1);
    summary.textContent =
      `${s.words} words in ${s.sentences} sentences — ` +
      `${s.letters} letters, ${s.syllables} syllables, ` +
      `${s.complex_words} complex words (${complexShare}%).`;
  }

  function renderAnnotated(report: ReportDoc, text: string): void {
    annotated.textContent = "";
    for (const region of annotatedRegions(text, report)) {
      const wrap = el("span");
      if (region.severity === "long") wrap.classList.add("hl-long");
      if (region.severity === "very_long") wrap.classList.add("hl-very-long");
      wrap.dataset.start = String(region.start);
      wrap.dataset.end = String(region.end);
      for (const piece of region.pieces) {
        if (piece.kind === "complex") {
          const mark = el("span", "hl-complex", piece.text);
          mark.dataset.start = String(piece.start);
          mark.dataset.end = String(piece.end);
          wrap.append(mark);
        } else {
          wrap.append(document.createTextNode(piece.text));
        }
      }
      annotated.append(wrap);
    }
  }

  function renderStaleNotice(): void {
    annotated.textContent = "";
    annotated.append(
      el("p", "stale", "Edited since the last analysis — highlights are suppressed until you re-run."),
    );
  }

  function renderKeywords(report: ReportDoc): void {
    keywordTable.textContent = "";
    if (report.keywords.length === 0) {
      keywordTable.append(el("caption", "", "no keywords requested"));
      return;
    }
    const head = el("tr");
    head.append(el("th", "", "keyword"), el("th", "", "count"), el("th", "", "share"));
    keywordTable.append(head);
    for (const row of report.keywords) {
      const tr = el("tr");
      tr.append(
        el("td", "", row.keyword),
        el("td", "num", String(row.absolute)),
        el("td", "num", `${(row.relative * 100).toFixed(2)}%`),
      );
      keywordTable.append(tr);
    }
  }

  function renderCloud(report: ReportDoc): void {
    cloudPanel.textContent = "";
    const sized = sizeCloud(report.cloud);
    if (sized.length === 0) {
      cloudPanel.append(el("p", "placeholder", "nothing left after stopword removal"));
      return;
    }
    for (const { word, count, px } of sized) {
      const node = el("span", "cloud-word", word);
      node.style.fontSize = `${px}px`;
      node.title = `${count}×`;
      cloudPanel.append(node);
    }
  }

  function refreshAnnotated(): void {
    if (lastReport === null || analyzedText === null) return;
    if (editor.value === analyzedText) {
      renderAnnotated(lastReport, analyzedText);
    } else {
      renderStaleNotice();
    }
  }

  function renderAll(report: ReportDoc, text: string): void {
    results.hidden = false;
    renderBadge(report);
    renderIndices(report);
    renderSummary(report);
    renderAnnotated(report, text);
    renderKeywords(report);
    renderCloud(report);
  }

  async function analyze(): Promise<void> {
    const text = editor.value;
    if (text.trim() === "") return;
    inflight?.abort();
    const controller = new AbortController();
    inflight = controller;
    status.textContent = "analyzing…";
    try {
      const report = await requestAnalysis(
        serviceInput.value,
        text,
        parseKeywords(keywordInput.value),
        controller.signal,
      );
      lastReport = report;
      analyzedText = text;
      banner.hidden = true;
      renderAll(report, text);
      refreshAnnotated();
    } catch (err) {
      if (controller.signal.aborted) return; // superseded by a newer click
      banner.textContent =
        err instanceof ServiceError ? err.message : "service unreachable";
      banner.hidden = false;
      // previous report and panels stay as they were
    } finally {
      if (inflight === controller) {
        inflight = null;
        status.textContent = "";
      }
    }
  }

  editor.addEventListener("input", () => {
    analyzeButton.disabled = editor.value.trim() === "";
    refreshAnnotated();
  });
  analyzeButton.addEventListener("click", () => {
    void analyze();
  });

  return {
    editor,
    analyzeButton,
    keywordInput,
    serviceInput,
    badge,
    banner,
    annotated,
    results,
    analyze,
    lastReport: () => lastReport,
  };
}
