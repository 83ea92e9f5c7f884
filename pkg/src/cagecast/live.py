"""Live fight sessions: snapshot ingestion, round-boundary detection, and the
deterministic replay harness.

The feed publishes cumulative totals, so a round boundary freezes the last
snapshot seen for that round; per-round deltas are differences of frozen
boundaries. Boundaries trigger on a round-index increment OR on the round
clock reaching 300 s, whichever lands first, and are deduplicated.
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .domain import (
    REGULATION_ROUND_SECONDS,
    FeatureVector,
    FighterProfile,
    RoundStatLine,
    STAT_FIELDS,
    round_feature_vector,
    winner_feature_vector,
)
from .errors import BoundaryMissing, FightMismatch, FixtureParseError, MissingProfileField
from .glm import LogisticModel, OrdinalModel, predict_binary, predict_ordinal

log = logging.getLogger(__name__)

SNAPSHOT_LOG_SCHEMA = "cagecast-snapshots/1"

ROUND_SCORE = "round_score"
WINNER_PROBABILITY = "winner_probability"


@dataclass(frozen=True)
class LiveSnapshot:
    """Cumulative fight totals at one polling instant."""

    fight_id: str
    timestamp: str  # ISO-8601; ordering is lexicographic == chronological
    round: int
    clock_seconds: float
    red: RoundStatLine
    blue: RoundStatLine

    @classmethod
    def from_dict(cls, doc: dict) -> "LiveSnapshot":
        return cls(
            fight_id=doc["fight_id"],
            timestamp=doc["ts"],
            round=int(doc["round"]),
            clock_seconds=float(doc["clock"]),
            red=RoundStatLine.from_dict(doc["red"]),
            blue=RoundStatLine.from_dict(doc["blue"]),
        )

    def as_dict(self) -> dict:
        return {
            "fight_id": self.fight_id,
            "ts": self.timestamp,
            "round": self.round,
            "clock": self.clock_seconds,
            "red": self.red.as_dict(),
            "blue": self.blue.as_dict(),
        }


@dataclass(frozen=True)
class FightMeta:
    fight_id: str
    event_name: str
    scheduled_rounds: int
    red: FighterProfile
    blue: FighterProfile

    @classmethod
    def from_dict(cls, doc: dict) -> "FightMeta":
        def prof(d: dict) -> FighterProfile:
            return FighterProfile(
                name=d["name"],
                age_at_fight=d.get("age"),
                height_cm=d.get("height_cm"),
            )

        return cls(
            fight_id=doc["fight_id"],
            event_name=doc.get("event_name", ""),
            scheduled_rounds=int(doc["scheduled_rounds"]),
            red=prof(doc["red"]),
            blue=prof(doc["blue"]),
        )


@dataclass(frozen=True)
class PredictionEvent:
    """One model output: a round scorecard or the red-win probability."""

    kind: str
    fight_id: str
    round: int
    payload: dict
    model_version: str
    timestamp: str

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "fight_id": self.fight_id,
            "round": self.round,
            "payload": self.payload,
            "model_version": self.model_version,
            "timestamp": self.timestamp,
        }

    def canonical_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":"))


class FightSession:
    """Per-fight state machine. Single writer: apply snapshots in order."""

    def __init__(
        self,
        meta: FightMeta,
        round_model: OrdinalModel,
        winner_model: LogisticModel,
        model_version: str = "bundled",
    ):
        self.meta = meta
        self.round_model = round_model
        self.winner_model = winner_model
        self.model_version = model_version
        self.latest: Optional[LiveSnapshot] = None
        self.current_round = 1
        self.frozen: dict[int, LiveSnapshot] = {}
        self.events: list[PredictionEvent] = []
        self.winner_emitted = False
        self.audit_log: list[str] = []
        self._rounds_seen: set[int] = set()

    def _audit(self, message: str) -> None:
        self.audit_log.append(message)
        log.info("[%s] %s", self.meta.fight_id, message)

    def ingest_snapshot(self, snapshot: LiveSnapshot) -> list[PredictionEvent]:
        """Apply one snapshot; returns any events emitted by round boundaries.

        Stale snapshots (timestamp older than the latest) are ignored with an
        audit entry. Snapshots for a different fight raise FightMismatch.
        """
        if snapshot.fight_id != self.meta.fight_id:
            raise FightMismatch(
                f"session {self.meta.fight_id!r} got snapshot for {snapshot.fight_id!r}"
            )
        if self.latest is not None and snapshot.timestamp < self.latest.timestamp:
            self._audit(f"stale snapshot at {snapshot.timestamp} ignored "
                        f"(latest {self.latest.timestamp})")
            return []

        emitted: list[PredictionEvent] = []
        if self.latest is not None:
            self._audit_corrections(snapshot)

        if snapshot.round > self.current_round:
            # freeze every round we just learned is complete, using the last
            # snapshot observed before the boundary
            boundary_snapshot = self.latest if self.latest is not None else snapshot
            for completed in range(self.current_round, snapshot.round):
                if completed not in self.frozen:
                    self.frozen[completed] = boundary_snapshot
                    if completed in self._rounds_seen:
                        emitted.extend(self._emit_round_events(completed))
                    else:
                        self._audit(
                            f"round {completed} boundary inferred without any observed "
                            "snapshot; no prediction emitted"
                        )
            self.current_round = snapshot.round
            self.latest = snapshot
            self._rounds_seen.add(snapshot.round)
        else:
            self.latest = snapshot
            self._rounds_seen.add(snapshot.round)
            if (
                snapshot.round == self.current_round
                and snapshot.clock_seconds >= REGULATION_ROUND_SECONDS
                and self.current_round not in self.frozen
            ):
                self.frozen[self.current_round] = snapshot
                emitted.extend(self._emit_round_events(self.current_round))
        self.events.extend(emitted)
        return emitted

    def _audit_corrections(self, snapshot: LiveSnapshot) -> None:
        for corner in ("red", "blue"):
            new = getattr(snapshot, corner)
            old = getattr(self.latest, corner)
            for stat in STAT_FIELDS:
                if getattr(new, stat) < getattr(old, stat):
                    self._audit(
                        f"downward correction at {snapshot.timestamp}: {corner} {stat} "
                        f"{getattr(old, stat)} -> {getattr(new, stat)}"
                    )

    def round_delta(self, k: int) -> tuple[RoundStatLine, RoundStatLine]:
        """Per-round stats for round k from frozen boundaries, floored at 0."""
        if k not in self.frozen:
            raise BoundaryMissing(f"round {k} boundary not frozen yet")
        if k > 1 and k - 1 not in self.frozen:
            raise BoundaryMissing(f"round {k - 1} boundary not frozen yet")
        end = self.frozen[k]
        start_red = self.frozen[k - 1].red if k > 1 else RoundStatLine.zero()
        start_blue = self.frozen[k - 1].blue if k > 1 else RoundStatLine.zero()
        return (
            self._floored_delta(end.red, start_red, k, "red"),
            self._floored_delta(end.blue, start_blue, k, "blue"),
        )

    def _floored_delta(self, end: RoundStatLine, start: RoundStatLine,
                       k: int, corner: str) -> RoundStatLine:
        values = {}
        for stat in STAT_FIELDS:
            delta = getattr(end, stat) - getattr(start, stat)
            if delta < 0:
                self._audit(
                    f"negative round-{k} delta floored: {corner} {stat} ({delta})"
                )
                delta = 0
            values[stat] = delta
        return RoundStatLine(**values)

    def _emit_round_events(self, k: int) -> list[PredictionEvent]:
        events = []
        red_delta, blue_delta = self.round_delta(k)
        probs, score = predict_ordinal(
            self.round_model, round_feature_vector(red_delta, blue_delta)
        )
        boundary = self.frozen[k]
        events.append(PredictionEvent(
            kind=ROUND_SCORE,
            fight_id=self.meta.fight_id,
            round=k,
            payload={
                "red_points": score.red_points,
                "blue_points": score.blue_points,
                "predicted_margin": score.margin,
                "margin_probabilities": {
                    str(cat): float(p)
                    for cat, p in zip(self.round_model.categories, probs)
                },
            },
            model_version=self.model_version,
            timestamp=boundary.timestamp,
        ))
        if k == 2 and self.meta.scheduled_rounds == 3 and not self.winner_emitted:
            winner_event = self._winner_event(boundary)
            if winner_event is not None:
                events.append(winner_event)
                self.winner_emitted = True
        return events

    def _winner_event(self, boundary: LiveSnapshot) -> Optional[PredictionEvent]:
        try:
            vec = winner_feature_vector(boundary.red, boundary.blue,
                                        self.meta.red, self.meta.blue)
        except MissingProfileField as exc:
            self._audit(f"winner prediction skipped: {exc}")
            return None
        p_red = predict_binary(self.winner_model, vec)
        return PredictionEvent(
            kind=WINNER_PROBABILITY,
            fight_id=self.meta.fight_id,
            round=2,
            payload={"red_win_probability": float(p_red)},
            model_version=self.model_version,
            timestamp=boundary.timestamp,
        )

    @property
    def latest_winner_probability(self) -> Optional[float]:
        for event in reversed(self.events):
            if event.kind == WINNER_PROBABILITY:
                return event.payload["red_win_probability"]
        return None


def load_snapshot_log(path) -> tuple[FightMeta, list[LiveSnapshot]]:
    """Parse a snapshot-log fixture: a header line, then one snapshot per line."""
    path = Path(path)
    try:
        lines = [ln for ln in path.read_text().splitlines() if ln.strip()]
    except OSError as exc:
        raise FixtureParseError(f"cannot read fixture {path}: {exc}") from exc
    if not lines:
        raise FixtureParseError(f"fixture {path} is empty")
    try:
        header = json.loads(lines[0])
        if header.get("schema") != SNAPSHOT_LOG_SCHEMA:
            raise FixtureParseError(
                f"fixture {path}: unsupported schema {header.get('schema')!r}"
            )
        meta = FightMeta.from_dict(header["fight"])
        snapshots = [LiveSnapshot.from_dict(json.loads(ln)) for ln in lines[1:]]
    except FixtureParseError:
        raise
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise FixtureParseError(f"fixture {path}: {exc}") from exc
    return meta, snapshots


def replay(
    fixture_path,
    round_model: OrdinalModel,
    winner_model: LogisticModel,
    tick_seconds: float = 5.0,
    speed: float = 0.0,
    model_version: str = "bundled",
    on_event=None,
) -> tuple[FightSession, list[PredictionEvent]]:
    """Feed a snapshot log through a fresh session in timestamp order.

    ``speed`` scales the pacing between snapshots (0 = as fast as possible);
    the emitted event sequence is identical at every speed because event
    timestamps come from the snapshots, not the wall clock. ``tick_seconds``
    paces consecutive snapshots that share a timestamp.
    """
    meta, snapshots = load_snapshot_log(fixture_path)
    snapshots = sorted(snapshots, key=lambda s: s.timestamp)  # stable for equal ts
    session = FightSession(meta, round_model, winner_model, model_version=model_version)
    events: list[PredictionEvent] = []
    previous: Optional[LiveSnapshot] = None
    for snapshot in snapshots:
        if speed > 0 and previous is not None:
            gap = tick_seconds
            if snapshot.timestamp != previous.timestamp:
                gap = _timestamp_gap_seconds(previous.timestamp, snapshot.timestamp, tick_seconds)
            time.sleep(gap / speed)
        for event in session.ingest_snapshot(snapshot):
            events.append(event)
            if on_event is not None:
                on_event(event)
        previous = snapshot
    return session, events


def _timestamp_gap_seconds(earlier: str, later: str, fallback: float) -> float:
    import datetime as dt

    try:
        a = dt.datetime.fromisoformat(earlier.replace("Z", "+00:00"))
        b = dt.datetime.fromisoformat(later.replace("Z", "+00:00"))
        return max((b - a).total_seconds(), 0.0)
    except ValueError:
        return fallback


def write_snapshot_log(path, meta: FightMeta, snapshots: list[LiveSnapshot]) -> None:
    """Write a fixture in the documented JSONL format."""
    lines = [json.dumps({
        "schema": SNAPSHOT_LOG_SCHEMA,
        "fight": {
            "fight_id": meta.fight_id,
            "event_name": meta.event_name,
            "scheduled_rounds": meta.scheduled_rounds,
            "red": {"name": meta.red.name, "age": meta.red.age_at_fight,
                    "height_cm": meta.red.height_cm},
            "blue": {"name": meta.blue.name, "age": meta.blue.age_at_fight,
                     "height_cm": meta.blue.height_cm},
        },
    })]
    lines += [json.dumps(s.as_dict()) for s in snapshots]
    Path(path).write_text("\n".join(lines) + "\n")
