/**
 * Browser entry point: tab shell, upload box, and per-tab wiring.
 *
 * All analysis happens on the server; this file only moves JSON between
 * the API client and the pure render functions in ./views.
 */

import { ApiClient } from "./api.js";
import {
  ViewState,
  Tab,
  buildExpandRequest,
  buildRequest,
  defaultViewState,
  restoreViewState,
  serializeViewState,
} from "./state.js";
import type {
  AspectScore,
  KwicLine,
  SentimentResponse,
  Suggestion,
  SummaryResponse,
  TreeNode,
  WordcloudEntry,
} from "./types.js";
import { renderKwicHtml, renderSuggestionsHtml } from "./views/concordance.js";
import { renderAspectChipsHtml, renderSummaryHtml, selectAspect } from "./views/summary.js";
import {
  renderBarChartSvg,
  renderPieChartSvg,
  renderTableHtml,
} from "./views/sentiment.js";
import { renderWordcloudSvg, wordcloudCsv } from "./views/wordcloud.js";
import {
  TreeViewNode,
  buildTreeView,
  collapseNode,
  expandNode,
  renderTreeHtml,
} from "./views/wordtree.js";

const TABS: Tab[] = ["WordCloud", "WordTree", "Concordance", "Sentiment", "Summary"];
const STATE_KEY = "vietext-view-state";

const api = new ApiClient("");
let state: ViewState;
let treeView: TreeViewNode | null = null;

function $(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el;
}

function persistState(): void {
  sessionStorage.setItem(STATE_KEY, serializeViewState(state));
}

async function init(): Promise<void> {
  const saved = sessionStorage.getItem(STATE_KEY);
  if (saved) {
    state = restoreViewState(saved);
  } else {
    state = defaultViewState(await api.createSession());
  }
  persistState();
  renderTabs();
  wireUpload();
  wireControls();
}

function renderTabs(): void {
  const nav = $("tabs");
  nav.innerHTML = TABS.map(
    (tab) =>
      `<button class="tab${tab === state.activeTab ? " active" : ""}" data-tab="${tab}">` +
      `${tab}</button>`,
  ).join("");
  nav.querySelectorAll("button").forEach((button) =>
    button.addEventListener("click", () => {
      state = { ...state, activeTab: button.dataset.tab as Tab };
      persistState();
      renderTabs();
      void refresh();
    }),
  );
  TABS.forEach((tab) => {
    $(`panel-${tab}`).style.display = tab === state.activeTab ? "block" : "none";
  });
}

function wireUpload(): void {
  $("upload-button").addEventListener("click", () => {
    void (async () => {
      const content = ($("upload-text") as HTMLTextAreaElement).value;
      if (!content.trim()) return;
      const column = ($("upload-column") as HTMLInputElement).value.trim();
      await api.uploadDocuments(
        state.sessionId,
        column ? "csv" : "direct",
        content,
        column || undefined,
      );
      $("upload-status").textContent = "uploaded";
      void refresh();
    })();
  });
}

function wireControls(): void {
  $("wordcloud-mode").addEventListener("change", (event) => {
    state = {
      ...state,
      wordcloud: {
        ...state.wordcloud,
        mode: (event.target as HTMLSelectElement).value as never,
      },
    };
    persistState();
    void refresh();
  });
  $("wordcloud-stopwords").addEventListener("change", (event) => {
    state = {
      ...state,
      wordcloud: {
        ...state.wordcloud,
        stopwords: (event.target as HTMLInputElement).checked,
      },
    };
    persistState();
    void refresh();   // stopword toggle re-queries; nothing is recomputed here
  });
  $("kwic-run").addEventListener("click", () => {
    state = {
      ...state,
      kwic: {
        ...state.kwic,
        query: ($("kwic-query") as HTMLInputElement).value,
        window: Number(($("kwic-window") as HTMLInputElement).value) || 5,
      },
    };
    persistState();
    void refresh();
  });
  $("tree-run").addEventListener("click", () => {
    state = {
      ...state,
      tree: { ...state.tree, query: ($("tree-query") as HTMLInputElement).value },
    };
    persistState();
    void refresh();
  });
  $("sentiment-classes").addEventListener("change", (event) => {
    const classes = Number((event.target as HTMLSelectElement).value) as 3 | 5;
    state = { ...state, sentiment: { ...state.sentiment, classes } };
    persistState();
    renderSentimentFromCache();   // relabel only: no re-query needed
  });
  $("summary-run").addEventListener("click", () => {
    state = {
      ...state,
      summary: {
        ...state.summary,
        instruction: ($("summary-instruction") as HTMLInputElement).value,
      },
    };
    persistState();
    void refresh();
  });
  $("wordcloud-export-csv").addEventListener("click", () => {
    if (lastWordcloud) downloadText("wordcloud.csv", wordcloudCsv(lastWordcloud));
  });
  $("wordcloud-export-png").addEventListener("click", () => {
    void exportPanelPng("panel-WordCloud", "wordcloud.png");
  });
}

let lastWordcloud: WordcloudEntry[] | null = null;
let lastSentiment: SentimentResponse | null = null;

async function refresh(): Promise<void> {
  const request = buildRequest(state);
  try {
    switch (state.activeTab) {
      case "WordCloud": {
        lastWordcloud = await api.post<WordcloudEntry[]>("WordCloud", request);
        $("wordcloud-view").innerHTML = renderWordcloudSvg(lastWordcloud);
        break;
      }
      case "WordTree": {
        if (!state.tree.query.trim()) return;
        const root = await api.post<TreeNode>("WordTree", request);
        treeView = buildTreeView(root);
        renderTree();
        break;
      }
      case "Concordance": {
        if (!state.kwic.query.trim()) return;
        const lines = await api.post<KwicLine[]>("Concordance", request);
        const suggestions = await api.post<Suggestion[]>("Suggest", {
          path: `/v1/sessions/${state.sessionId}/analyse/suggest`,
          body: { keyword: state.kwic.query },
        });
        $("kwic-view").innerHTML =
          renderKwicHtml(lines) + renderSuggestionsHtml(suggestions);
        break;
      }
      case "Sentiment": {
        lastSentiment = await api.post<SentimentResponse>("Sentiment", request);
        renderSentimentFromCache();
        break;
      }
      case "Summary": {
        const aspects = await api.post<AspectScore[]>("Aspects", {
          path: `/v1/sessions/${state.sessionId}/analyse/aspects`,
          body: null,
        });
        $("aspect-chips").innerHTML = renderAspectChipsHtml(
          aspects,
          state.summary.aspect,
        );
        $("aspect-chips")
          .querySelectorAll("button")
          .forEach((chip) =>
            chip.addEventListener("click", () => {
              state = {
                ...state,
                summary: selectAspect(state.summary, chip.dataset.aspect ?? ""),
              };
              persistState();
              void refresh();
            }),
          );
        const summary = await api.post<SummaryResponse>("Summary", request);
        $("summary-view").innerHTML = renderSummaryHtml(summary);
        break;
      }
    }
  } catch (error) {
    if ((error as Error).name === "AbortError") return;   // superseded request
    $("error-bar").textContent = String(error);
  }
}

function renderTree(): void {
  if (!treeView) return;
  $("tree-view").innerHTML = renderTreeHtml(treeView);
  $("tree-view")
    .querySelectorAll(".tree-node > .token")
    .forEach((span) => {
      span.addEventListener("click", () => {
        void toggleBranch(pathOf(span as HTMLElement));
      });
    });
}

function pathOf(el: HTMLElement): string[] {
  const path: string[] = [];
  let li = el.closest("li");
  while (li) {
    const token = li.querySelector(":scope > .token")?.textContent ?? "";
    path.unshift(token);
    li = li.parentElement?.closest("li") ?? null;
  }
  return path.slice(1);   // drop the root token
}

async function toggleBranch(path: string[]): Promise<void> {
  if (!treeView) return;
  let node = treeView;
  for (const token of path) {
    const next = node.children.find((c) => c.token === token);
    if (!next) return;
    node = next;
  }
  if (node.expanded) {
    treeView = collapseNode(treeView, path);   // purely client-side
  } else if (node.children.length > 0) {
    treeView = expandNode(treeView, path);
  } else {
    const subtree = await api.post<TreeNode>(
      "WordTree",
      buildExpandRequest(state, path, 2),
    );
    treeView = expandNode(treeView, path, subtree);
  }
  renderTree();
}

function renderSentimentFromCache(): void {
  if (!lastSentiment) return;
  const classes = state.sentiment.classes;
  $("sentiment-table").innerHTML = renderTableHtml(lastSentiment, classes);
  $("sentiment-bars").innerHTML = renderBarChartSvg(lastSentiment);
  $("sentiment-pie").innerHTML = renderPieChartSvg(lastSentiment);
}

function downloadText(filename: string, content: string): void {
  const blob = new Blob([content], { type: "text/csv;charset=utf-8" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = filename;
  link.click();
  URL.revokeObjectURL(link.href);
}

async function exportPanelPng(panelId: string, filename: string): Promise<void> {
  const svg = $(panelId).querySelector("svg");
  if (!svg) return;
  const xml = new XMLSerializer().serializeToString(svg);
  const image = new Image();
  const url = `data:image/svg+xml;charset=utf-8,${encodeURIComponent(xml)}`;
  await new Promise((resolve, reject) => {
    image.onload = resolve;
    image.onerror = reject;
    image.src = url;
  });
  const canvas = document.createElement("canvas");
  canvas.width = image.width || 640;
  canvas.height = image.height || 400;
  canvas.getContext("2d")?.drawImage(image, 0, 0);
  const link = document.createElement("a");
  link.href = canvas.toDataURL("image/png");
  link.download = filename;
  link.click();
}

document.addEventListener("DOMContentLoaded", () => {
  void init();
});
