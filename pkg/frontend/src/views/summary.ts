/**
 * Aspect chips with confidence badges plus the summary panel.
 *
 * Selecting a chip sets the aspect on the summary request; the rendered
 * result always names the backend that produced it.
 */

import type { AspectScore, SummaryResponse } from "../types.js";
import type { SummaryParams } from "../state.js";
import { escapeHtml } from "./wordtree.js";

export function renderAspectChipsHtml(
  aspects: AspectScore[],
  selected: string | null,
): string {
  const chips = aspects
    .map((aspect) => {
      const labels = Object.values(aspect.labels);
      const display = labels.length > 1 ? labels.join(" / ") : (labels[0] ?? aspect.aspect);
      const active = aspect.aspect === selected ? " active" : "";
      return (
        `<button class="aspect-chip${active}" data-aspect="${escapeHtml(aspect.aspect)}">` +
        `${escapeHtml(display)}` +
        `<span class="badge" data-value="${aspect.confidence}">` +
        `${aspect.confidence.toFixed(2)}</span></button>`
      );
    })
    .join("");
  return `<div class="aspects">${chips}</div>`;
}

/** New params after the user clicks an aspect chip (toggle off when re-clicked). */
export function selectAspect(params: SummaryParams, aspect: string): SummaryParams {
  return { ...params, aspect: params.aspect === aspect ? null : aspect };
}

export function renderSummaryHtml(summary: SummaryResponse): string {
  return (
    `<div class="summary"><p class="backend">backend: ` +
    `<code>${escapeHtml(summary.backend)}</code></p>` +
    `<blockquote>${escapeHtml(summary.text)}</blockquote></div>`
  );
}
