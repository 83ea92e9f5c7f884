import { describe, expect, it } from "vitest";

import { applyBackfill, applyEvent, initialState, setConnection } from "../src/state.js";
import { replayCapture } from "./helpers.js";

const [round1, round2, winner, round3] = replayCapture.events;

describe("view state reducer", () => {
  it("appends scorecard rows in stream order", () => {
    let state = initialState();
    for (const event of [round1, round2, round3]) {
      state = applyEvent(state, event);
    }
    expect(state.rounds.map((r) => r.round)).toEqual([1, 2, 3]);
    expect(state.rounds[0].redPoints).toBe(round1.payload["red_points" as never]);
  });

  it("sets the winner gauge only from winner events", () => {
    let state = initialState();
    state = applyEvent(state, round1);
    expect(state.winnerProbability).toBeNull();
    state = applyEvent(state, winner);
    expect(state.winnerProbability).toBeCloseTo(0.7794, 4);
  });

  it("ignores duplicate sequence numbers", () => {
    let state = initialState();
    state = applyEvent(state, round1);
    state = applyEvent(state, round1);
    expect(state.rounds).toHaveLength(1);
  });

  it("backfill over already-applied events adds nothing", () => {
    let state = initialState();
    state = applyEvent(state, round1);
    state = applyEvent(state, round2);
    state = applyBackfill(state, replayCapture.events);
    expect(state.rounds.map((r) => r.round)).toEqual([1, 2, 3]);
    expect(state.alerts).toHaveLength(1); // the captured value-bet event
  });

  it("tracks the highest sequence seen for resume", () => {
    let state = initialState();
    state = applyBackfill(state, replayCapture.events);
    const maxSeq = Math.max(...replayCapture.events.map((e) => e.seq));
    expect(state.lastSeq).toBe(maxSeq);
  });

  it("connection status transitions do not disturb data", () => {
    let state = applyBackfill(initialState(), replayCapture.events);
    const stale = setConnection(state, "stale");
    expect(stale.connection).toBe("stale");
    expect(stale.rounds).toEqual(state.rounds);
  });
});
