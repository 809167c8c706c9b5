/**
 * Sentiment view: ranked table plus bar and pie charts.
 *
 * The 5-to-3 class toggle is a pure relabelling on the client (the same
 * projection the server applies); no re-query and no recomputation of any
 * number.  Every numeric shown comes straight from the API response.
 */

import type { Label3, Label5, SentimentResponse, SentimentRow } from "../types.js";
import { escapeHtml } from "./wordtree.js";

export const LABEL5_ORDER: Label5[] = [
  "very_negative",
  "negative",
  "neutral",
  "positive",
  "very_positive",
];

export function projectLabel(label: Label5): Label3 {
  switch (label) {
    case "very_negative":
    case "negative":
      return "negative";
    case "neutral":
      return "neutral";
    case "positive":
    case "very_positive":
      return "positive";
  }
}

export function displayLabel(row: SentimentRow, classes: 3 | 5): string {
  return classes === 5 ? row.label5 : projectLabel(row.label5);
}

/** Table rows sorted by confidence descending; ties keep response order. */
export function rankedRows(response: SentimentResponse): SentimentRow[] {
  return [...response.results].sort((a, b) => b.confidence - a.confidence);
}

export function renderTableHtml(response: SentimentResponse, classes: 3 | 5): string {
  const rows = rankedRows(response)
    .map(
      (row) =>
        `<tr><td>${escapeHtml(row.text)}</td>` +
        `<td class="label">${displayLabel(row, classes)}</td>` +
        `<td class="confidence" data-value="${row.confidence}">` +
        `${row.confidence.toFixed(2)}</td></tr>`,
    )
    .join("");
  return (
    `<table class="sentiment-table"><thead><tr>` +
    `<th>Text</th><th>Label</th><th>Confidence</th></tr></thead>` +
    `<tbody>${rows}</tbody></table>`
  );
}

export interface ChartSlice {
  label: Label5;
  count: number;
  fraction: number;
}

export function chartSlices(response: SentimentResponse): ChartSlice[] {
  return LABEL5_ORDER.map((label) => ({
    label,
    count: response.distribution.counts[label] ?? 0,
    fraction: response.distribution.fractions[label] ?? 0,
  }));
}

const COLORS: Record<Label5, string> = {
  very_negative: "#b71c1c",
  negative: "#e57373",
  neutral: "#9e9e9e",
  positive: "#81c784",
  very_positive: "#1b5e20",
};

export function renderBarChartSvg(response: SentimentResponse, width = 360, height = 160): string {
  const slices = chartSlices(response);
  const max = Math.max(1, ...slices.map((s) => s.count));
  const barWidth = width / slices.length;
  const bars = slices
    .map((slice, i) => {
      const h = (slice.count / max) * (height - 24);
      const x = i * barWidth + 4;
      const y = height - h - 16;
      return (
        `<rect x="${x.toFixed(1)}" y="${y.toFixed(1)}" width="${(barWidth - 8).toFixed(1)}"` +
        ` height="${h.toFixed(1)}" fill="${COLORS[slice.label]}"></rect>` +
        `<text x="${(x + barWidth / 2 - 4).toFixed(1)}" y="${height - 2}"` +
        ` class="bar-count" data-value="${slice.count}" text-anchor="middle">${slice.count}</text>`
      );
    })
    .join("");
  return `<svg viewBox="0 0 ${width} ${height}" class="sentiment-bars">${bars}</svg>`;
}

export function renderPieChartSvg(response: SentimentResponse, radius = 70): string {
  const slices = chartSlices(response).filter((s) => s.fraction > 0);
  const cx = radius + 4;
  const cy = radius + 4;
  if (slices.length === 1) {
    // a full circle; arcs degenerate at 100%
    const s = slices[0];
    return (
      `<svg viewBox="0 0 ${2 * cx} ${2 * cy}" class="sentiment-pie">` +
      `<circle cx="${cx}" cy="${cy}" r="${radius}" fill="${COLORS[s.label]}"` +
      ` data-value="${s.fraction}"></circle></svg>`
    );
  }
  let angle = -Math.PI / 2;
  const paths = slices
    .map((slice) => {
      const sweep = slice.fraction * 2 * Math.PI;
      const x1 = cx + radius * Math.cos(angle);
      const y1 = cy + radius * Math.sin(angle);
      angle += sweep;
      const x2 = cx + radius * Math.cos(angle);
      const y2 = cy + radius * Math.sin(angle);
      const large = sweep > Math.PI ? 1 : 0;
      return (
        `<path d="M ${cx} ${cy} L ${x1.toFixed(2)} ${y1.toFixed(2)} ` +
        `A ${radius} ${radius} 0 ${large} 1 ${x2.toFixed(2)} ${y2.toFixed(2)} Z"` +
        ` fill="${COLORS[slice.label]}" data-value="${slice.fraction}"></path>`
      );
    })
    .join("");
  return `<svg viewBox="0 0 ${2 * cx} ${2 * cy}" class="sentiment-pie">${paths}</svg>`;
}
