/**
 * Minimal API client.  At most one request is in flight per tab: issuing
 * a new one aborts the previous, so stale responses can never land on a
 * newer view.
 */

import type { ApiRequest } from "./state.js";

export type FetchLike = (
  input: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string; signal?: AbortSignal },
) => Promise<{ ok: boolean; status: number; json(): Promise<unknown> }>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

export class ApiClient {
  private inFlight = new Map<string, AbortController>();

  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = fetch as unknown as FetchLike,
  ) {}

  /** POST for `tab`, cancelling the tab's previous request if still open. */
  async post<T>(tab: string, request: ApiRequest): Promise<T> {
    this.inFlight.get(tab)?.abort();
    const controller = new AbortController();
    this.inFlight.set(tab, controller);
    try {
      const response = await this.fetchImpl(this.baseUrl + request.path, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(request.body),
        signal: controller.signal,
      });
      const payload = (await response.json()) as T & {
        error?: { code: string; message: string };
      };
      if (!response.ok) {
        const err = payload.error ?? { code: "Unknown", message: "request failed" };
        throw new ApiError(response.status, err.code, err.message);
      }
      return payload;
    } finally {
      if (this.inFlight.get(tab) === controller) {
        this.inFlight.delete(tab);
      }
    }
  }

  async createSession(): Promise<string> {
    const response = await this.fetchImpl(`${this.baseUrl}/v1/sessions`, {
      method: "POST",
    });
    const body = (await response.json()) as { session_id: string };
    return body.session_id;
  }

  async uploadDocuments(
    sessionId: string,
    kind: "direct" | "text" | "csv",
    content: string,
    textColumn?: string,
  ): Promise<unknown> {
    const response = await this.fetchImpl(
      `${this.baseUrl}/v1/sessions/${sessionId}/documents`,
      {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ kind, content, text_column: textColumn ?? null }),
      },
    );
    return response.json();
  }
}
