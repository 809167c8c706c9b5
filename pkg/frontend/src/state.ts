/**
 * ViewState: everything needed to reproduce the current view.
 *
 * Every rendered view is a pure function of (session corpus, ViewState);
 * serialising and restoring the state must yield byte-identical API
 * requests, which the contract tests assert.
 */

export type Tab = "WordCloud" | "WordTree" | "Concordance" | "Sentiment" | "Summary";

export interface WordcloudParams {
  mode: "Frequency" | "LogLikelihood" | "Keyness";
  top_k: number;
  stopwords: boolean;
}

export interface TreeParams {
  query: string;
  direction: "Right" | "Left";
  max_depth: number;
  min_branch_count: number;
}

export interface KwicParams {
  query: string;
  window: number;
  case_sensitive: boolean;
}

export interface SentimentParams {
  granularity: "PerSentence" | "PerDocument";
  backend: "Lexicon" | "ExternalClient";
  classes: 3 | 5;
}

export interface SummaryParams {
  instruction: string;
  aspect: string | null;
  backend: "OfflineStub" | "ExternalLLM";
}

export interface ViewState {
  sessionId: string;
  activeTab: Tab;
  wordcloud: WordcloudParams;
  tree: TreeParams;
  kwic: KwicParams;
  sentiment: SentimentParams;
  summary: SummaryParams;
}

export function defaultViewState(sessionId: string): ViewState {
  return {
    sessionId,
    activeTab: "WordCloud",
    wordcloud: { mode: "Frequency", top_k: 50, stopwords: true },
    tree: { query: "", direction: "Right", max_depth: 4, min_branch_count: 1 },
    kwic: { query: "", window: 5, case_sensitive: false },
    sentiment: { granularity: "PerSentence", backend: "Lexicon", classes: 5 },
    summary: { instruction: "", aspect: null, backend: "OfflineStub" },
  };
}

export function serializeViewState(state: ViewState): string {
  return JSON.stringify(state);
}

export function restoreViewState(raw: string): ViewState {
  return JSON.parse(raw) as ViewState;
}

export interface ApiRequest {
  path: string;
  body: unknown;
}

/** The exact API request the active tab issues for the current state. */
export function buildRequest(state: ViewState): ApiRequest {
  const base = `/v1/sessions/${state.sessionId}/analyse`;
  switch (state.activeTab) {
    case "WordCloud":
      return {
        path: `${base}/wordcloud`,
        body: {
          mode: state.wordcloud.mode,
          top_k: state.wordcloud.top_k,
          stopwords: state.wordcloud.stopwords,
        },
      };
    case "WordTree":
      return {
        path: `${base}/tree`,
        body: {
          query: state.tree.query,
          direction: state.tree.direction,
          max_depth: state.tree.max_depth,
          min_branch_count: state.tree.min_branch_count,
        },
      };
    case "Concordance":
      return {
        path: `${base}/kwic`,
        body: {
          query: state.kwic.query,
          window: state.kwic.window,
          case_sensitive: state.kwic.case_sensitive,
        },
      };
    case "Sentiment":
      return {
        path: `${base}/sentiment`,
        body: {
          granularity: state.sentiment.granularity,
          backend: state.sentiment.backend,
          classes: state.sentiment.classes,
        },
      };
    case "Summary":
      return {
        path: `${base}/summary/abstractive`,
        body: {
          instruction: state.summary.instruction,
          aspect: state.summary.aspect,
          backend: state.summary.backend,
        },
      };
  }
}

/** Follow-up request for expanding one word-tree branch in place. */
export function buildExpandRequest(
  state: ViewState,
  path: string[],
  additionalDepth: number,
): ApiRequest {
  const request = buildRequest({ ...state, activeTab: "WordTree" });
  return {
    path: request.path,
    body: {
      ...(request.body as Record<string, unknown>),
      expand_path: path,
      additional_depth: additionalDepth,
    },
  };
}
