// Wire types mirroring the service's JSON payloads. The dashboard never
// computes statistics itself; it renders exactly what these carry.

export interface FighterInfo {
  name: string;
  age: number | null;
  height_cm: number | null;
}

export interface FightSummary {
  fight_id: string;
  event_name: string;
  scheduled_rounds: number;
  red: FighterInfo;
  blue: FighterInfo;
  current_round: number;
  completed_rounds: number[];
  winner_probability: number | null;
}

export interface RoundScorePayload {
  red_points: number;
  blue_points: number;
  predicted_margin: number;
  margin_probabilities: Record<string, number>;
}

export interface WinnerPayload {
  red_win_probability: number;
}

export interface ValueBetPayload {
  fight_id: string;
  corner: "red" | "blue";
  model_probability: number;
  implied_probability: number;
  edge: number;
  odds: number;
  ev_per_unit: number;
  stake: number;
  expected_value: number;
}

export interface StreamEvent {
  seq: number;
  kind: "round_score" | "winner_probability" | "value_bet";
  fight_id: string;
  round: number | null;
  payload: RoundScorePayload | WinnerPayload | ValueBetPayload;
  model_version?: string;
  timestamp: string;
}

export interface OddsResponse {
  quote: { fight_id: string; corner: string; decimal_odds: number; timestamp: string };
  duplicate: boolean;
  signal: (ValueBetPayload & Record<string, unknown>) | null;
  reason: string | null;
  red_win_probability: number;
}

export interface LedgerEntry {
  entry_id: number;
  signal: { corner: string; odds: number };
  stake: number;
  result: "open" | "won" | "lost" | "void";
  net_profit: number | null;
}

export interface LedgerSummary {
  total_staked: number;
  net_profit: number;
  roi: number;
  hit_rate: number;
  average_odds: number;
  won: number;
  lost: number;
  void: number;
}

export interface LedgerResponse {
  entries: LedgerEntry[];
  summary: LedgerSummary | null;
}
