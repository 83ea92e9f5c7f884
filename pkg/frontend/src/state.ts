// Pure view-state: everything on screen derives from API/stream data plus
// unsent form input. Events are deduplicated by sequence number so replays
// and reconnect backfills can never double-render a row.

import type {
  FightSummary,
  LedgerResponse,
  RoundScorePayload,
  StreamEvent,
  ValueBetPayload,
  WinnerPayload,
} from "./types.js";

export type ConnectionStatus = "connecting" | "live" | "stale";

export interface ScorecardRow {
  round: number;
  redPoints: number;
  bluePoints: number;
  margin: number;
  marginProbabilities: Record<string, number>;
}

export interface DashboardViewState {
  fight: FightSummary | null;
  rounds: ScorecardRow[];
  winnerProbability: number | null;
  alerts: ValueBetPayload[];
  ledger: LedgerResponse | null;
  connection: ConnectionStatus;
  lastSeq: number;
  seenSeqs: Set<number>;
}

export function initialState(): DashboardViewState {
  return {
    fight: null,
    rounds: [],
    winnerProbability: null,
    alerts: [],
    ledger: null,
    connection: "connecting",
    lastSeq: 0,
    seenSeqs: new Set(),
  };
}

export function applyEvent(state: DashboardViewState, event: StreamEvent): DashboardViewState {
  if (state.seenSeqs.has(event.seq)) {
    return state; // duplicate delivery (at-least-once stream, backfill overlap)
  }
  const next: DashboardViewState = {
    ...state,
    seenSeqs: new Set(state.seenSeqs).add(event.seq),
    lastSeq: Math.max(state.lastSeq, event.seq),
  };
  if (event.kind === "round_score" && event.round !== null) {
    const payload = event.payload as RoundScorePayload;
    if (!next.rounds.some((row) => row.round === event.round)) {
      next.rounds = [
        ...next.rounds,
        {
          round: event.round,
          redPoints: payload.red_points,
          bluePoints: payload.blue_points,
          margin: payload.predicted_margin,
          marginProbabilities: payload.margin_probabilities,
        },
      ];
    }
  } else if (event.kind === "winner_probability") {
    next.winnerProbability = (event.payload as WinnerPayload).red_win_probability;
  } else if (event.kind === "value_bet") {
    next.alerts = [...next.alerts, event.payload as ValueBetPayload];
  }
  return next;
}

export function applyBackfill(state: DashboardViewState, events: StreamEvent[]): DashboardViewState {
  return events.reduce(applyEvent, state);
}

export function setConnection(state: DashboardViewState, status: ConnectionStatus): DashboardViewState {
  return { ...state, connection: status };
}

export function setFight(state: DashboardViewState, fight: FightSummary): DashboardViewState {
  return { ...state, fight };
}

export function setLedger(state: DashboardViewState, ledger: LedgerResponse): DashboardViewState {
  return { ...state, ledger };
}
