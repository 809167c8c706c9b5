/**
 * Word-cloud layout and rendering.
 *
 * Font size is proportional to the server-supplied weight; placement walks
 * an Archimedean spiral until a slot is free of collisions.  Deterministic:
 * the same payload always lays out identically.
 */

import type { WordcloudEntry } from "../types.js";
import { escapeHtml } from "./wordtree.js";

export interface PlacedWord {
  term: string;
  weight: number;
  fontSize: number;
  x: number;
  y: number;
  width: number;
  height: number;
}

export const MIN_FONT = 12;
export const MAX_FONT = 46;

interface Box {
  x: number;
  y: number;
  width: number;
  height: number;
}

function overlaps(a: Box, b: Box): boolean {
  return (
    a.x < b.x + b.width &&
    b.x < a.x + a.width &&
    a.y < b.y + b.height &&
    b.y < a.y + a.height
  );
}

export function layoutWordcloud(
  entries: WordcloudEntry[],
  width = 640,
  height = 400,
): PlacedWord[] {
  const placed: PlacedWord[] = [];
  const boxes: Box[] = [];
  for (const entry of entries) {
    const fontSize = MIN_FONT + (MAX_FONT - MIN_FONT) * entry.weight;
    // crude but monotone text metrics: width tracks glyph count and size
    const w = entry.term.length * fontSize * 0.62;
    const h = fontSize * 1.2;
    let angle = 0;
    let radius = 0;
    let x = width / 2 - w / 2;
    let y = height / 2 - h / 2;
    for (let step = 0; step < 2000; step++) {
      const candidate: Box = { x, y, width: w, height: h };
      if (!boxes.some((b) => overlaps(candidate, b))) break;
      angle += 0.35;
      radius += 0.8;
      x = width / 2 - w / 2 + radius * Math.cos(angle);
      y = height / 2 - h / 2 + radius * Math.sin(angle);
    }
    boxes.push({ x, y, width: w, height: h });
    placed.push({ term: entry.term, weight: entry.weight, fontSize, x, y, width: w, height: h });
  }
  return placed;
}

export function renderWordcloudSvg(
  entries: WordcloudEntry[],
  width = 640,
  height = 400,
): string {
  if (entries.length === 0) {
    return `<svg viewBox="0 0 ${width} ${height}" class="word-cloud"><text x="${
      width / 2
    }" y="${height / 2}" text-anchor="middle" class="empty">no terms to display</text></svg>`;
  }
  const words = layoutWordcloud(entries, width, height)
    .map(
      (word) =>
        `<text x="${(word.x + word.width / 2).toFixed(1)}" y="${(word.y + word.height * 0.8).toFixed(1)}"` +
        ` font-size="${word.fontSize.toFixed(1)}" text-anchor="middle"` +
        ` data-value="${word.weight}">${escapeHtml(word.term)}</text>`,
    )
    .join("");
  return `<svg viewBox="0 0 ${width} ${height}" class="word-cloud">${words}</svg>`;
}

/** CSV pass-through of the server payload (no client-side rounding). */
export function wordcloudCsv(entries: WordcloudEntry[]): string {
  const lines = ["term,weight,statistic,count_study,count_reference"];
  for (const e of entries) {
    const cell = e.term.includes(",") ? `"${e.term.replace(/"/g, '""')}"` : e.term;
    lines.push(
      `${cell},${e.weight},${e.statistic},${e.count_study},${e.count_reference}`,
    );
  }
  return lines.join("\r\n") + "\r\n";
}
