// @vitest-environment jsdom

import { readFileSync } from "node:fs";
import { resolve } from "node:path";
import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import type { ReportDoc } from "../src/api";
import { createApp, type AppHandles } from "../src/app";

// vitest runs with the package directory as cwd
const fixture = (name: string) =>
  readFileSync(resolve("tests/fixtures", name), "utf8");

const tractatus = fixture("tractatus.txt");
const tractatusReport = JSON.parse(fixture("tractatus_report.json")) as ReportDoc;
const veryLong = fixture("very_long.txt");
const veryLongReport = JSON.parse(fixture("very_long_report.json")) as ReportDoc;

const jsonResponse = (doc: unknown) =>
  ({ ok: true, status: 200, json: async () => doc }) as unknown as Response;

let handles: AppHandles;
let fetchMock: ReturnType<typeof vi.fn>;

function typeText(text: string): void {
  handles.editor.value = text;
  handles.editor.dispatchEvent(new Event("input"));
}

beforeEach(() => {
  document.body.innerHTML = '<div id="app"></div>';
  fetchMock = vi.fn();
  vi.stubGlobal("fetch", fetchMock);
  handles = createApp(document.getElementById("app")!, "http://svc.test");
});

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("analyze button", () => {
  it("is disabled until the editor has text", () => {
    expect(handles.analyzeButton.disabled).toBe(true);
    typeText("Olá mundo.");
    expect(handles.analyzeButton.disabled).toBe(false);
    typeText("   ");
    expect(handles.analyzeButton.disabled).toBe(true);
  });
});

describe("result rendering", () => {
  it("shows the badge for the reference text", async () => {
    fetchMock.mockResolvedValue(jsonResponse(tractatusReport));
    typeText(tractatus);
    await handles.analyze();

    expect(handles.badge.textContent).toBe("6 / high readability");
    expect(handles.badge.classList.contains("band-high")).toBe(true);
    expect(handles.results.hidden).toBe(false);

    const sent = JSON.parse(fetchMock.mock.calls[0]![1].body);
    expect(sent.text).toBe(tractatus);
  });

  it("renders keyword rows from the report", async () => {
    fetchMock.mockResolvedValue(jsonResponse(tractatusReport));
    typeText(tractatus);
    handles.keywordInput.value = "figura, mundo";
    await handles.analyze();

    const cells = [...document.querySelectorAll(".keywords td")].map(
      (td) => td.textContent,
    );
    expect(cells).toContain("figura");
    expect(cells).toContain("mundo");
    expect(cells).toContain("5");
    const sent = JSON.parse(fetchMock.mock.calls[0]![1].body);
    expect(sent.keywords).toEqual(["figura", "mundo"]);
  });

  it("sizes the cloud from report counts", async () => {
    fetchMock.mockResolvedValue(jsonResponse(tractatusReport));
    typeText(tractatus);
    await handles.analyze();

    const words = [...document.querySelectorAll<HTMLElement>(".cloud-word")];
    expect(words.length).toBe(tractatusReport.cloud.length);
    expect(words[0]!.textContent).toBe(tractatusReport.cloud[0]!.word);
    expect(words[0]!.style.fontSize).toBe("28px");
  });

  it("shows a placeholder when the cloud is empty", async () => {
    fetchMock.mockResolvedValue(
      jsonResponse({ ...veryLongReport, cloud: [] }),
    );
    typeText(veryLong);
    await handles.analyze();
    expect(document.querySelector(".cloud .placeholder")).not.toBeNull();
  });
});

describe("highlights", () => {
  it("marks a 46-word sentence red with the service's span offsets", async () => {
    fetchMock.mockResolvedValue(jsonResponse(veryLongReport));
    typeText(veryLong);
    await handles.analyze();

    const red = handles.annotated.querySelector<HTMLElement>(".hl-very-long");
    expect(red).not.toBeNull();
    const reported = veryLongReport.annotations.long_sentences[0]!;
    expect(Number(red!.dataset.start)).toBe(reported.start);
    expect(Number(red!.dataset.end)).toBe(reported.end);
    expect(handles.annotated.textContent).toBe(veryLong);
  });

  it("composes complex words inside a long sentence", async () => {
    fetchMock.mockResolvedValue(jsonResponse(tractatusReport));
    typeText(tractatus);
    await handles.analyze();

    const complexSpans = handles.annotated.querySelectorAll(".hl-complex");
    expect(complexSpans.length).toBe(
      tractatusReport.annotations.complex_words.length,
    );
    const composed = handles.annotated.querySelectorAll(".hl-long .hl-complex");
    expect(composed.length).toBeGreaterThan(0);
    expect(handles.annotated.textContent).toBe(tractatus);
  });

  it("suppresses highlights when the text is edited, restores on exact undo", async () => {
    fetchMock.mockResolvedValue(jsonResponse(veryLongReport));
    typeText(veryLong);
    await handles.analyze();
    expect(handles.annotated.querySelector(".hl-very-long")).not.toBeNull();

    typeText(veryLong + " x");
    expect(handles.annotated.querySelector(".hl-very-long")).toBeNull();
    expect(handles.annotated.querySelector(".stale")).not.toBeNull();

    typeText(veryLong);
    expect(handles.annotated.querySelector(".hl-very-long")).not.toBeNull();
  });
});

describe("failure handling", () => {
  it("keeps the previous report behind a non-blocking banner", async () => {
    fetchMock.mockResolvedValueOnce(jsonResponse(tractatusReport));
    typeText(tractatus);
    await handles.analyze();
    expect(handles.banner.hidden).toBe(true);

    fetchMock.mockRejectedValueOnce(new TypeError("fetch failed"));
    typeText(tractatus + " mais");
    await handles.analyze();

    expect(handles.banner.hidden).toBe(false);
    expect(handles.banner.textContent).toBe("service unreachable");
    expect(handles.badge.textContent).toBe("6 / high readability");
    expect(handles.lastReport()).toBe(tractatusReport);
  });

  it("shows the service's own message on a 4xx", async () => {
    fetchMock.mockResolvedValueOnce({
      ok: false,
      status: 422,
      json: async () => ({ error: "text contains no words" }),
    } as unknown as Response);
    typeText("?!? a");
    await handles.analyze();
    expect(handles.banner.hidden).toBe(false);
    expect(handles.banner.textContent).toBe("text contains no words");
  });

  it("cancels a pending request when a newer one starts", async () => {
    fetchMock.mockImplementationOnce(
      (_url: string, init: RequestInit) =>
        new Promise((_, reject) => {
          init.signal!.addEventListener("abort", () =>
            reject(new DOMException("The operation was aborted.", "AbortError")),
          );
        }),
    );
    fetchMock.mockResolvedValueOnce(jsonResponse(veryLongReport));

    typeText(veryLong);
    const first = handles.analyze();
    const second = handles.analyze();
    await Promise.all([first, second]);

    expect(fetchMock).toHaveBeenCalledTimes(2);
    expect((fetchMock.mock.calls[0]![1].signal as AbortSignal).aborted).toBe(true);
    expect(handles.banner.hidden).toBe(true);
    expect(handles.badge.textContent).toBe("17 / medium readability");
  });
});
