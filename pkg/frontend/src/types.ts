/** Wire types for the /v1 analysis API. */

export interface WordcloudEntry {
  term: string;
  weight: number;
  statistic: number;
  count_study: number;
  count_reference: number;
  pct_diff?: number;
}

export interface KwicLine {
  doc_id: string;
  left: string[];
  node: string;
  right: string[];
  start: number;
  end: number;
}

export interface TreeNode {
  token: string;
  count: number;
  children: TreeNode[];
}

export type Label5 =
  | "very_negative"
  | "negative"
  | "neutral"
  | "positive"
  | "very_positive";

export type Label3 = "negative" | "neutral" | "positive";

export interface SentimentRow {
  text: string;
  label: string;
  label5: Label5;
  label3: Label3;
  score: number;
  confidence: number;
}

export interface SentimentResponse {
  classes: number;
  results: SentimentRow[];
  distribution: {
    counts: Record<Label5, number>;
    fractions: Record<Label5, number>;
  };
}

export interface AspectScore {
  aspect: string;
  labels: Record<string, string>;
  confidence: number;
  matched_terms: { term: string; count: number }[];
}

export interface SummaryResponse {
  text: string;
  backend: string;
  prompt_used: string;
}

export interface ExtractiveResponse {
  summary: { index: number; score: number; text: string }[];
  method: string;
}

export interface Suggestion {
  term: string;
  gloss: string;
}
