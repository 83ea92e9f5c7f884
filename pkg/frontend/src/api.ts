// Thin fetch wrappers over the service endpoints.

import type { FightSummary, LedgerResponse, OddsResponse, StreamEvent } from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async get<T>(path: string): Promise<T> {
    const response = await this.fetchImpl(`${this.base}${path}`);
    if (!response.ok) {
      throw new Error(`GET ${path} failed: ${response.status}`);
    }
    return (await response.json()) as T;
  }

  listFights(): Promise<FightSummary[]> {
    return this.get("/fights");
  }

  fightPredictions(fightId: string): Promise<StreamEvent[]> {
    return this.get(`/fights/${encodeURIComponent(fightId)}/predictions`);
  }

  ledger(): Promise<LedgerResponse> {
    return this.get("/ledger");
  }

  async submitOdds(fightId: string, corner: "red" | "blue", decimalOdds: number): Promise<OddsResponse> {
    const response = await this.fetchImpl(
      `${this.base}/fights/${encodeURIComponent(fightId)}/odds`,
      {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ corner, decimal_odds: decimalOdds }),
      },
    );
    if (response.status === 409) {
      const detail = (await response.json()) as { detail?: string };
      throw new NoWinnerPredictionError(detail.detail ?? "no winner prediction yet");
    }
    if (!response.ok) {
      throw new Error(`odds submission failed: ${response.status}`);
    }
    return (await response.json()) as OddsResponse;
  }
}

export class NoWinnerPredictionError extends Error {}
