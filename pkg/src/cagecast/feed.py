"""Pluggable polling client for a live JSON stats feed.

The feed shape is configured, not hardcoded: a field map names the JSON path
for the round index, the round clock, and each of the nine statistics per
corner. The mapping is validated at startup so a missing path fails before a
fight starts, not in the middle of one.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

import requests

from .domain import STAT_FIELDS, RoundStatLine
from .errors import FeedUnavailable, MappingError
from .live import LiveSnapshot

log = logging.getLogger(__name__)

REQUIRED_MAP_KEYS = ["round", "clock"] + [
    f"{corner}.{stat}" for corner in ("red", "blue") for stat in STAT_FIELDS
]

DEFAULT_POLL_INTERVAL = 5.0


@dataclass(frozen=True)
class FeedHealthEvent:
    timestamp: float
    ok: bool
    detail: str


@dataclass(frozen=True)
class FeedConfig:
    """Where to poll and how to read the document that comes back."""

    url: str
    fight_id: str
    field_map: dict
    poll_interval: float = DEFAULT_POLL_INTERVAL
    timeout: float = 10.0
    retry_budget: int = 5
    backoff_base: float = 1.0

    def __post_init__(self) -> None:
        missing = [key for key in REQUIRED_MAP_KEYS if key not in self.field_map]
        if missing:
            raise MappingError(f"field map is missing paths for: {', '.join(missing)}")


def extract_path(doc, path: str):
    """Walk a dotted path through nested dicts/lists ("stats.red.2.value")."""
    node = doc
    for part in path.split("."):
        if isinstance(node, dict):
            if part not in node:
                raise MappingError(f"path {path!r}: key {part!r} absent")
            node = node[part]
        elif isinstance(node, list):
            try:
                node = node[int(part)]
            except (ValueError, IndexError) as exc:
                raise MappingError(f"path {path!r}: bad list index {part!r}") from exc
        else:
            raise MappingError(f"path {path!r}: cannot descend into {type(node).__name__}")
    return node


def _snapshot_from_document(doc, config: FeedConfig, timestamp: str) -> LiveSnapshot:
    def stats(corner: str) -> RoundStatLine:
        return RoundStatLine(**{
            stat: type_cast(extract_path(doc, config.field_map[f"{corner}.{stat}"]))
            for stat, type_cast in zip(STAT_FIELDS, [int] * 8 + [float])
        })

    return LiveSnapshot(
        fight_id=config.fight_id,
        timestamp=timestamp,
        round=int(extract_path(doc, config.field_map["round"])),
        clock_seconds=float(extract_path(doc, config.field_map["clock"])),
        red=stats("red"),
        blue=stats("blue"),
    )


def poll_feed(
    config: FeedConfig,
    on_health: Optional[Callable[[FeedHealthEvent], None]] = None,
    max_polls: Optional[int] = None,
    clock: Callable[[], float] = time.time,
    sleep: Callable[[float], None] = time.sleep,
) -> Iterator[LiveSnapshot]:
    """Yield one snapshot per successful poll, forever (or for ``max_polls``).

    Transport failures retry with exponential backoff and surface a health
    event; once the retry budget is spent, FeedUnavailable is raised. Data is
    never fabricated: a failed poll yields nothing.
    """
    polls = 0
    while max_polls is None or polls < max_polls:
        snapshot = _poll_once(config, on_health, clock)
        polls += 1
        yield snapshot
        if max_polls is None or polls < max_polls:
            sleep(config.poll_interval)


def _poll_once(config, on_health, clock) -> LiveSnapshot:
    import datetime as dt

    failures = 0
    while True:
        try:
            response = requests.get(config.url, timeout=config.timeout)
            response.raise_for_status()
            doc = response.json()
        except (requests.RequestException, ValueError) as exc:
            failures += 1
            detail = f"poll failed ({failures}/{config.retry_budget}): {exc}"
            log.warning(detail)
            if on_health is not None:
                on_health(FeedHealthEvent(timestamp=clock(), ok=False, detail=detail))
            if failures >= config.retry_budget:
                raise FeedUnavailable(
                    f"feed {config.url} unreachable after {failures} attempts"
                ) from exc
            time.sleep(config.backoff_base * (2 ** (failures - 1)))
            continue
        stamp = dt.datetime.fromtimestamp(clock(), tz=dt.timezone.utc).isoformat()
        snapshot = _snapshot_from_document(doc, config, stamp)
        if on_health is not None and failures:
            on_health(FeedHealthEvent(timestamp=clock(), ok=True, detail="recovered"))
        return snapshot
