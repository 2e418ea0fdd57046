/** Mismatch panel: pure row model plus a thin DOM renderer.
 *
 * The model is derived entirely from service responses; the only arithmetic
 * here is the delta against a pinned reference report.
 */

import { MismatchReportJson, MismatchRowJson } from "./types.js";

export type RowTone = "match" | "low" | "high" | "mismatch";

export interface PanelRow {
  criterion: string;
  label: string;
  gender: string;
  n: number;
  matchPct: number;
  lowPct: number | null;
  highPct: number | null;
  totalPct: number;
  tone: RowTone;
  /** Signed change in total mismatch vs the pinned reference, if any. */
  deltaPct: number | null;
}

/** Structural check of a payload before rendering; message when malformed. */
export function reportProblem(payload: unknown): string | null {
  if (typeof payload !== "object" || payload === null) {
    return "response is not an object";
  }
  const report = payload as Partial<MismatchReportJson>;
  if (!Array.isArray(report.rows)) {
    return "response has no rows";
  }
  for (const row of report.rows) {
    if (
      typeof row !== "object" ||
      row === null ||
      typeof row.criterion !== "string" ||
      typeof row.gender !== "string" ||
      typeof row.match_pct !== "number" ||
      typeof row.total_mismatch_pct !== "number"
    ) {
      return "malformed report row";
    }
  }
  return null;
}

function tone(row: MismatchRowJson): RowTone {
  if (row.total_mismatch_pct === 0) {
    return "match";
  }
  if (row.low_pct === null || row.high_pct === null) {
    return "mismatch";
  }
  return row.low_pct >= row.high_pct ? "low" : "high";
}

export function buildPanelRows(
  report: MismatchReportJson,
  pinned: MismatchReportJson | null = null,
): PanelRow[] {
  const pinnedTotals = new Map<string, number>();
  if (pinned !== null) {
    for (const row of pinned.rows) {
      pinnedTotals.set(`${row.criterion}/${row.gender}`, row.total_mismatch_pct);
    }
  }
  return report.rows.map((row) => {
    const reference = pinnedTotals.get(`${row.criterion}/${row.gender}`);
    return {
      criterion: row.criterion,
      label: row.label,
      gender: row.gender,
      n: row.n,
      matchPct: row.match_pct,
      lowPct: row.low_pct,
      highPct: row.high_pct,
      totalPct: row.total_mismatch_pct,
      tone: tone(row),
      deltaPct: reference === undefined ? null : row.total_mismatch_pct - reference,
    };
  });
}

function pct(value: number | null): string {
  return value === null ? "–" : value.toFixed(2);
}

export function renderMismatchPanel(
  container: HTMLElement,
  report: MismatchReportJson,
  pinned: MismatchReportJson | null = null,
): void {
  const problem = reportProblem(report);
  if (problem !== null) {
    renderErrorBanner(container, `cannot render report: ${problem}`);
    return;
  }
  const rows = buildPanelRows(report, pinned);
  const table = document.createElement("table");
  table.className = "panel";
  const head = document.createElement("tr");
  const headers = ["Criterion", "Gender", "Match %", "Low %", "High %", "Total %"];
  if (pinned !== null) {
    headers.push(`Δ vs ${pinned.spec}`);
  }
  for (const text of headers) {
    const th = document.createElement("th");
    th.textContent = text;
    head.appendChild(th);
  }
  table.appendChild(head);
  for (const row of rows) {
    const tr = document.createElement("tr");
    tr.className = `tone-${row.tone}`;
    const cells = [
      row.label,
      row.gender,
      pct(row.matchPct),
      pct(row.lowPct),
      pct(row.highPct),
      pct(row.totalPct),
    ];
    if (pinned !== null) {
      cells.push(
        row.deltaPct === null
          ? "–"
          : `${row.deltaPct > 0 ? "+" : ""}${row.deltaPct.toFixed(2)}`,
      );
    }
    cells.forEach((text, index) => {
      const td = document.createElement("td");
      td.textContent = text;
      if (index === 2) {
        td.className = "cell-match";
      }
      tr.appendChild(td);
    });
    table.appendChild(tr);
  }
  container.replaceChildren(table);
  for (const note of report.notes ?? []) {
    const p = document.createElement("p");
    p.className = "note";
    p.textContent = note;
    container.appendChild(p);
  }
}

export function renderErrorBanner(container: HTMLElement, message: string): void {
  const banner = document.createElement("div");
  banner.className = "banner-error";
  banner.textContent = message;
  container.replaceChildren(banner);
}
