"""Append-only JSON Lines persistence and the event broadcast channel.

Stores follow a single-writer contract; readers see a consistent prefix.
The broadcaster gives every subscriber a bounded queue so a slow stream
client can never block snapshot ingestion: on overflow the subscriber is
flagged as lagged and events are dropped for that subscriber only.
"""

from __future__ import annotations

import json
import queue
import threading
from pathlib import Path
from typing import Optional


class JsonlStore:
    """One JSON object per line, append-only."""

    def __init__(self, path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self.path.parent.mkdir(parents=True, exist_ok=True)

    def append(self, record: dict) -> None:
        line = json.dumps(record, sort_keys=True, separators=(",", ":"))
        with self._lock:
            with open(self.path, "a") as fh:
                fh.write(line + "\n")

    def read_all(self) -> list[dict]:
        if not self.path.exists():
            return []
        with self._lock:
            text = self.path.read_text()
        return [json.loads(line) for line in text.splitlines() if line.strip()]


class EventLog:
    """Sequence-numbered event store backing stream replay."""

    def __init__(self, path):
        self._store = JsonlStore(path)
        self._lock = threading.Lock()
        self._events: list[dict] = self._store.read_all()
        self._next_seq = max((e["seq"] for e in self._events), default=0) + 1

    def append(self, kind: str, payload: dict) -> dict:
        with self._lock:
            record = {"seq": self._next_seq, "kind": kind, **payload}
            self._next_seq += 1
            self._events.append(record)
            self._store.append(record)
            return record

    def since(self, seq: int) -> list[dict]:
        with self._lock:
            return [e for e in self._events if e["seq"] > seq]

    def all(self) -> list[dict]:
        with self._lock:
            return list(self._events)

    @property
    def last_seq(self) -> int:
        with self._lock:
            return self._next_seq - 1


class Subscription:
    def __init__(self, maxsize: int):
        self.queue: queue.Queue = queue.Queue(maxsize=maxsize)
        self.lagged = False
        self.closed = False

    def get(self, timeout: Optional[float] = None) -> Optional[dict]:
        try:
            return self.queue.get(timeout=timeout)
        except queue.Empty:
            return None


class Broadcaster:
    """Fan out events to subscribers without ever blocking the publisher."""

    def __init__(self, buffer_size: int = 256):
        self.buffer_size = buffer_size
        self._subs: list[Subscription] = []
        self._lock = threading.Lock()

    def subscribe(self) -> Subscription:
        sub = Subscription(self.buffer_size)
        with self._lock:
            self._subs.append(sub)
        return sub

    def unsubscribe(self, sub: Subscription) -> None:
        sub.closed = True
        with self._lock:
            if sub in self._subs:
                self._subs.remove(sub)

    def publish(self, record: dict) -> None:
        with self._lock:
            subs = list(self._subs)
        for sub in subs:
            try:
                sub.queue.put_nowait(record)
            except queue.Full:
                sub.lagged = True
