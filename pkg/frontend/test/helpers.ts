// Test doubles: a scriptable EventSource and a fetch stub, plus the captured
// backend payloads for the bundled replay fixture.

import capture from "./fixtures/replay_capture.json";
import type { EventSourceLike } from "../src/stream.js";
import type { FightSummary, LedgerResponse, OddsResponse, StreamEvent } from "../src/types.js";

export interface ReplayCapture {
  fight: FightSummary & { latest_snapshot: unknown; audit_log: string[] };
  events: StreamEvent[];
  odds_response: OddsResponse;
  ledger: LedgerResponse;
}

export const replayCapture = capture as unknown as ReplayCapture;

export class FakeEventSource implements EventSourceLike {
  onopen: ((ev: unknown) => void) | null = null;
  onerror: ((ev: unknown) => void) | null = null;
  closed = false;
  private listeners = new Map<string, Array<(ev: MessageEvent) => void>>();

  constructor(public readonly url: string) {}

  addEventListener(type: string, handler: (ev: MessageEvent) => void): void {
    const existing = this.listeners.get(type) ?? [];
    this.listeners.set(type, [...existing, handler]);
  }

  close(): void {
    this.closed = true;
  }

  open(): void {
    this.onopen?.({});
  }

  fail(): void {
    this.onerror?.({});
  }

  emit(event: StreamEvent): void {
    for (const handler of this.listeners.get(event.kind) ?? []) {
      handler({ data: JSON.stringify(event) } as MessageEvent);
    }
  }
}

export class FakeEventSourceHub {
  instances: FakeEventSource[] = [];

  factory = (url: string): EventSourceLike => {
    const source = new FakeEventSource(url);
    this.instances.push(source);
    return source;
  };

  get current(): FakeEventSource {
    const source = this.instances[this.instances.length - 1];
    if (!source) throw new Error("no event source created yet");
    return source;
  }
}

export function fetchStub(routes: Record<string, () => unknown>) {
  const calls: string[] = [];
  const impl = async (input: string, init?: RequestInit): Promise<Response> => {
    const method = init?.method ?? "GET";
    const key = `${method} ${input}`;
    calls.push(key);
    // longest matching prefix wins, so /fights/{id}/predictions is not
    // swallowed by /fights
    const match = Object.keys(routes)
      .filter((route) => key.startsWith(route))
      .sort((a, b) => b.length - a.length)[0];
    if (match === undefined) {
      throw new Error(`unmatched request: ${key}`);
    }
    return {
      ok: true,
      status: 200,
      json: async () => routes[match](),
    } as Response;
  };
  return { impl, calls };
}

export function flushMicrotasks(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
