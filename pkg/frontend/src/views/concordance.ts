/** KWIC table with the node column centred, AntConc-style. */

import type { KwicLine, Suggestion } from "../types.js";
import { escapeHtml } from "./wordtree.js";

export function renderKwicHtml(lines: KwicLine[]): string {
  if (lines.length === 0) {
    return `<p class="empty">no matches</p>`;
  }
  const rows = lines
    .map(
      (line) =>
        `<tr><td class="left">${escapeHtml(line.left.join(" "))}</td>` +
        `<td class="node">${escapeHtml(line.node)}</td>` +
        `<td class="right">${escapeHtml(line.right.join(" "))}</td></tr>`,
    )
    .join("");
  return (
    `<table class="kwic"><thead><tr><th>Left</th><th>Keyword</th><th>Right</th>` +
    `</tr></thead><tbody>${rows}</tbody></table>`
  );
}

export function renderSuggestionsHtml(suggestions: Suggestion[]): string {
  if (suggestions.length === 0) {
    return "";
  }
  const chips = suggestions
    .map(
      (s) =>
        `<button class="suggestion" data-term="${escapeHtml(s.term)}">` +
        `${escapeHtml(s.term)}<small>${escapeHtml(s.gloss)}</small></button>`,
    )
    .join("");
  return `<div class="suggestions">${chips}</div>`;
}
