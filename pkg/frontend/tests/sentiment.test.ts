import { describe, expect, it } from "vitest";

import type { SentimentResponse } from "../src/types.js";
import {
  displayLabel,
  projectLabel,
  rankedRows,
  renderBarChartSvg,
  renderPieChartSvg,
  renderTableHtml,
} from "../src/views/sentiment.js";
import { loadFixture } from "./helpers.js";

const sentiment = loadFixture<SentimentResponse>("sentiment.json");

describe("sentiment view", () => {
  it("5-class display shows the fine-grained label", () => {
    const row = sentiment.results.find((r) => r.label5 === "very_positive");
    expect(row).toBeDefined();
    expect(displayLabel(row!, 5)).toBe("very_positive");
  });

  it("3-class toggle re-maps very_positive rows to positive client-side", () => {
    const row = sentiment.results.find((r) => r.label5 === "very_positive")!;
    expect(displayLabel(row, 3)).toBe("positive");
    const html3 = renderTableHtml(sentiment, 3);
    expect(html3).not.toContain(`<td class="label">very_positive`);
    expect(html3).not.toContain(`<td class="label">very_negative`);
  });

  it("client projection agrees with the server's label3 on every row", () => {
    for (const row of sentiment.results) {
      expect(projectLabel(row.label5)).toBe(row.label3);
    }
  });

  it("table is ranked by confidence descending", () => {
    const confidences = rankedRows(sentiment).map((r) => r.confidence);
    const sorted = [...confidences].sort((a, b) => b - a);
    expect(confidences).toEqual(sorted);
  });

  it("re-rendering is stable", () => {
    expect(renderTableHtml(sentiment, 5)).toBe(renderTableHtml(sentiment, 5));
    expect(renderBarChartSvg(sentiment)).toBe(renderBarChartSvg(sentiment));
  });

  it("bar chart shows the distribution counts verbatim", () => {
    const svg = renderBarChartSvg(sentiment);
    for (const count of Object.values(sentiment.distribution.counts)) {
      expect(svg).toContain(`data-value="${count}"`);
    }
  });

  it("pie slices carry the fraction values from the response", () => {
    const svg = renderPieChartSvg(sentiment);
    for (const fraction of Object.values(sentiment.distribution.fractions)) {
      if (fraction > 0) {
        expect(svg).toContain(`data-value="${fraction}"`);
      }
    }
  });
});
