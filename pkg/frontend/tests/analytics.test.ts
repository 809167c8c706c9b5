/**
 * Zero client-side analytics: every number the UI displays must exist in
 * some recorded API response.  Views attach the exact API value in a
 * data-value attribute next to any formatted text, so the check is:
 * all data-values and all visible numeric tokens trace back to fixture
 * fields (exactly, or as a toFixed(2) rendering of one).
 */

import { describe, expect, it } from "vitest";

import type {
  AspectScore,
  KwicLine,
  SentimentResponse,
  TreeNode,
  WordcloudEntry,
} from "../src/types.js";
import { renderKwicHtml } from "../src/views/concordance.js";
import { renderAspectChipsHtml } from "../src/views/summary.js";
import {
  renderBarChartSvg,
  renderPieChartSvg,
  renderTableHtml,
} from "../src/views/sentiment.js";
import { renderWordcloudSvg } from "../src/views/wordcloud.js";
import { buildTreeView, renderTreeHtml } from "../src/views/wordtree.js";
import { collectNumbers, dataValues, loadFixture, visibleNumbers } from "./helpers.js";

interface RenderedView {
  name: string;
  markup: string;
  fixture: unknown;
}

const views: RenderedView[] = (() => {
  const wordcloud = loadFixture<WordcloudEntry[]>("wordcloud_frequency.json");
  const keyness = loadFixture<WordcloudEntry[]>("wordcloud_keyness.json");
  const tree = loadFixture<TreeNode>("tree.json");
  const sentiment = loadFixture<SentimentResponse>("sentiment.json");
  const aspects = loadFixture<AspectScore[]>("aspects.json");
  const kwic = loadFixture<KwicLine[]>("kwic.json");
  return [
    { name: "wordcloud", markup: renderWordcloudSvg(wordcloud), fixture: wordcloud },
    { name: "keyness cloud", markup: renderWordcloudSvg(keyness), fixture: keyness },
    { name: "word tree", markup: renderTreeHtml(buildTreeView(tree)), fixture: tree },
    { name: "sentiment table", markup: renderTableHtml(sentiment, 5), fixture: sentiment },
    { name: "sentiment bars", markup: renderBarChartSvg(sentiment), fixture: sentiment },
    { name: "sentiment pie", markup: renderPieChartSvg(sentiment), fixture: sentiment },
    { name: "aspect chips", markup: renderAspectChipsHtml(aspects, null), fixture: aspects },
    { name: "kwic table", markup: renderKwicHtml(kwic), fixture: kwic },
  ];
})();

describe("zero client-side analytics", () => {
  for (const view of views) {
    it(`every data-value in the ${view.name} comes from its API response`, () => {
      const allowed = collectNumbers(view.fixture);
      for (const value of dataValues(view.markup)) {
        expect(allowed.has(value), `${value} not in fixture`).toBe(true);
      }
    });

    it(`every visible number in the ${view.name} traces to an API field`, () => {
      const allowed = collectNumbers(view.fixture);
      const formatted = new Set<string>();
      for (const n of allowed) {
        formatted.add(String(n));
        formatted.add(n.toFixed(2));
      }
      for (const token of visibleNumbers(view.markup)) {
        expect(formatted.has(token), `displayed ${token} not in fixture`).toBe(true);
      }
    });
  }

  it("the views display at least some numbers (the check has teeth)", () => {
    const total = views.reduce((n, v) => n + dataValues(v.markup).length, 0);
    expect(total).toBeGreaterThan(10);
  });
});
