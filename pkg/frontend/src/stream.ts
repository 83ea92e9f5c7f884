// Reconnecting event-stream subscription with last-event-id resume.
//
// The browser EventSource reconnects on its own, but we also surface the
// down/up transitions so the view can show a stale-data banner and trigger a
// history backfill (the state layer dedupes by sequence number, so replaying
// overlap is harmless).

import type { StreamEvent } from "./types.js";

export interface EventSourceLike {
  onopen: ((ev: unknown) => void) | null;
  onerror: ((ev: unknown) => void) | null;
  addEventListener(type: string, handler: (ev: MessageEvent) => void): void;
  close(): void;
}

export type EventSourceFactory = (url: string) => EventSourceLike;

export interface StreamHandlers {
  onEvent: (event: StreamEvent) => void;
  onUp: () => void;
  onDown: () => void;
}

const KINDS = ["round_score", "winner_probability", "value_bet"] as const;

export class StreamSubscription {
  private source: EventSourceLike | null = null;
  private lastSeq = 0;
  private closed = false;

  constructor(
    private readonly handlers: StreamHandlers,
    private readonly base: string = "",
    private readonly factory: EventSourceFactory = (url) =>
      new EventSource(url) as unknown as EventSourceLike,
  ) {}

  connect(fromSeq = 0): void {
    this.lastSeq = Math.max(this.lastSeq, fromSeq);
    this.open();
  }

  private open(): void {
    if (this.closed) return;
    this.source = this.factory(`${this.base}/events?from_seq=${this.lastSeq}`);
    this.source.onopen = () => this.handlers.onUp();
    this.source.onerror = () => this.handlers.onDown();
    for (const kind of KINDS) {
      this.source.addEventListener(kind, (message) => {
        const event = JSON.parse(message.data as string) as StreamEvent;
        if (event.seq > this.lastSeq) {
          this.lastSeq = event.seq;
        }
        this.handlers.onEvent(event);
      });
    }
  }

  // force a new connection resuming after the last seen sequence number
  reconnect(): void {
    this.source?.close();
    this.open();
  }

  close(): void {
    this.closed = true;
    this.source?.close();
  }

  get resumeFrom(): number {
    return this.lastSeq;
  }
}
