import { describe, expect, it } from "vitest";

import { ApiClient, type FetchLike } from "../src/api.js";
import {
  buildExpandRequest,
  buildRequest,
  defaultViewState,
  restoreViewState,
  serializeViewState,
  type Tab,
} from "../src/state.js";
import { selectAspect } from "../src/views/summary.js";

describe("request construction", () => {
  it("selecting an aspect chip puts that aspect in the request body", () => {
    let state = defaultViewState("s1");
    state = {
      ...state,
      activeTab: "Summary",
      summary: selectAspect(state.summary, "Social"),
    };
    const request = buildRequest(state);
    expect(request.path).toBe("/v1/sessions/s1/analyse/summary/abstractive");
    expect((request.body as { aspect: string }).aspect).toBe("Social");
  });

  it("re-clicking the same chip clears the aspect (plain summarisation)", () => {
    let params = defaultViewState("s1").summary;
    params = selectAspect(params, "Social");
    params = selectAspect(params, "Social");
    expect(params.aspect).toBeNull();
  });

  it("view-state round trip reproduces identical requests on every tab", () => {
    const state = {
      ...defaultViewState("abc123"),
      wordcloud: { mode: "Keyness" as const, top_k: 25, stopwords: false },
      tree: {
        query: "tri thức",
        direction: "Left" as const,
        max_depth: 3,
        min_branch_count: 2,
      },
      kwic: { query: "học", window: 7, case_sensitive: true },
      sentiment: {
        granularity: "PerDocument" as const,
        backend: "Lexicon" as const,
        classes: 3 as const,
      },
      summary: {
        instruction: "ngắn gọn",
        aspect: "Academic",
        backend: "OfflineStub" as const,
      },
    };
    const restored = restoreViewState(serializeViewState(state));
    const tabs: Tab[] = ["WordCloud", "WordTree", "Concordance", "Sentiment", "Summary"];
    for (const tab of tabs) {
      const a = buildRequest({ ...state, activeTab: tab });
      const b = buildRequest({ ...restored, activeTab: tab });
      expect(JSON.stringify(b)).toBe(JSON.stringify(a));
    }
  });

  it("expand requests extend the tree request without changing its params", () => {
    const state = {
      ...defaultViewState("s9"),
      tree: {
        query: "học tập",
        direction: "Right" as const,
        max_depth: 4,
        min_branch_count: 1,
      },
    };
    const request = buildExpandRequest(state, ["phong phú"], 2);
    const body = request.body as Record<string, unknown>;
    expect(body.query).toBe("học tập");
    expect(body.expand_path).toEqual(["phong phú"]);
    expect(body.additional_depth).toBe(2);
  });
});

function trackingFetch(log: { aborted: boolean[] }): FetchLike {
  return (_url, init) => {
    const index = log.aborted.length;
    log.aborted.push(false);
    init?.signal?.addEventListener("abort", () => {
      log.aborted[index] = true;
    });
    return new Promise((resolve) => {
      setTimeout(
        () => resolve({ ok: true, status: 200, json: async () => ({}) }),
        5,
      );
    });
  };
}

describe("one in-flight request per tab", () => {
  it("a newer request on the same tab aborts the previous one", async () => {
    const log = { aborted: [] as boolean[] };
    const client = new ApiClient("", trackingFetch(log));
    const first = client.post("WordTree", { path: "/x", body: {} });
    const second = client.post("WordTree", { path: "/x", body: {} });
    await Promise.allSettled([first, second]);
    expect(log.aborted[0]).toBe(true);
    expect(log.aborted[1]).toBe(false);
  });

  it("requests on different tabs never cancel each other", async () => {
    const log = { aborted: [] as boolean[] };
    const client = new ApiClient("", trackingFetch(log));
    await Promise.all([
      client.post("WordTree", { path: "/x", body: {} }),
      client.post("Sentiment", { path: "/y", body: {} }),
    ]);
    expect(log.aborted).toEqual([false, false]);
  });
});
