"""HTTP service binding the system together.

Endpoints (all JSON): fight listings, per-fight prediction history, a
server-sent event stream with last-event-id replay, operator odds submission,
and the value-bet/ledger surfaces. All statistics and betting math stay
server-side; clients only render what these endpoints return.
"""

from __future__ import annotations

import json
import logging
import threading
from typing import Optional

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import StreamingResponse

from .. import __version__
from ..betting import (
    BetConfig,
    BetLedgerEntry,
    BetResult,
    OddsQuote,
    ValueBetSignal,
    detect_value_bet,
    settle_ledger,
    signal_from_dict,
)
from ..domain import Corner
from ..errors import BindError, ModelLoadError
from ..glm import load_model
from ..live import FightSession, PredictionEvent, replay
from .config import ServiceConfig
from .store import Broadcaster, EventLog, JsonlStore

log = logging.getLogger(__name__)

STREAM_KEEPALIVE_SECONDS = 15.0


class ServiceContext:
    """Shared state: models, sessions, stores, and the broadcast channel."""

    def __init__(self, config: ServiceConfig):
        self.config = config
        self.bet_config = BetConfig(
            edge_threshold=config.edge_threshold,
            min_odds=config.min_odds,
            default_stake=config.default_stake,
        )
        if not config.round_model_path or not config.winner_model_path:
            raise ModelLoadError("round_model_path and winner_model_path are required")
        self.round_model = load_model(config.round_model_path)
        self.winner_model = load_model(config.winner_model_path)

        data_dir = config.ensure_data_dir()
        self.events = EventLog(data_dir / "events.jsonl")
        self.quotes = JsonlStore(data_dir / "quotes.jsonl")
        self.signals = JsonlStore(data_dir / "signals.jsonl")
        self.ledger = JsonlStore(data_dir / "ledger.jsonl")
        self.broadcaster = Broadcaster()
        self.sessions: dict[str, FightSession] = {}
        self.lock = threading.RLock()

        self._quote_keys = {self._quote_key(q) for q in self.quotes.read_all()}
        self._signals_by_quote = {
            tuple(s["quote_key"]): s for s in self.signals.read_all() if "quote_key" in s
        }
        self._entry_count = sum(
            1 for rec in self.ledger.read_all() if rec.get("type") == "entry"
        )

    @staticmethod
    def _quote_key(quote: dict) -> tuple:
        return (quote["fight_id"], quote["corner"], quote["decimal_odds"],
                quote.get("timestamp", ""))

    # -- event recording ---------------------------------------------------

    def record_prediction_event(self, event: PredictionEvent) -> None:
        """Persist and broadcast, skipping events already in the log (restart)."""
        key = (event.kind, event.fight_id, event.round)
        for existing in self.events.all():
            if (existing["kind"], existing.get("fight_id"), existing.get("round")) == key:
                return
        record = self.events.append(event.kind, event.as_dict())
        self.broadcaster.publish(record)

    def record_value_bet(self, signal: ValueBetSignal, quote_key: tuple,
                         timestamp: str) -> dict:
        payload = signal.as_dict()
        payload["quote_key"] = list(quote_key)
        self.signals.append(payload)
        self._signals_by_quote[quote_key] = payload
        entry_id = self._entry_count + 1
        self._entry_count = entry_id
        self.ledger.append({
            "type": "entry",
            "entry_id": entry_id,
            "signal": signal.as_dict(),
            "stake": self.bet_config.default_stake,
            "timestamp": timestamp,
        })
        record = self.events.append("value_bet", {
            "fight_id": signal.fight_id,
            "round": None,
            "payload": {**signal.as_dict(),
                        "stake": self.bet_config.default_stake,
                        "expected_value": signal.expected_value(
                            self.bet_config.default_stake)},
            "timestamp": timestamp,
        })
        self.broadcaster.publish(record)
        return payload

    def latest_quote(self, fight_id: str, corner: Corner) -> Optional[OddsQuote]:
        latest = None
        for rec in self.quotes.read_all():
            if rec["fight_id"] == fight_id and rec["corner"] == corner.value:
                latest = rec
        if latest is None:
            return None
        return OddsQuote(fight_id=latest["fight_id"], corner=Corner(latest["corner"]),
                         decimal_odds=latest["decimal_odds"],
                         timestamp=latest.get("timestamp", ""))

    def ledger_state(self) -> tuple[list[dict], Optional[dict]]:
        entries: dict[int, dict] = {}
        for rec in self.ledger.read_all():
            if rec.get("type") == "entry":
                entries[rec["entry_id"]] = {
                    "entry_id": rec["entry_id"],
                    "signal": rec["signal"],
                    "stake": rec["stake"],
                    "result": "open",
                    "net_profit": None,
                    "timestamp": rec.get("timestamp", ""),
                }
            elif rec.get("type") == "settle" and rec.get("entry_id") in entries:
                entry = entries[rec["entry_id"]]
                settled = BetLedgerEntry.settle(
                    signal_from_dict(entry["signal"]),
                    entry["stake"],
                    BetResult(rec["result"]),
                )
                entry["result"] = settled.result.value
                entry["net_profit"] = settled.net_profit
        ordered = [entries[k] for k in sorted(entries)]
        settled_entries = [
            BetLedgerEntry.settle(signal_from_dict(e["signal"]), e["stake"],
                                  BetResult(e["result"]))
            for e in ordered if e["result"] != "open"
        ]
        summary = settle_ledger(settled_entries).as_dict() if settled_entries else None
        return ordered, summary


def create_app(config: ServiceConfig) -> FastAPI:
    """Build the app, load models, restore state, and start any replay."""
    ctx = ServiceContext(config)
    app = FastAPI(title="cagecast", version=__version__)
    app.state.ctx = ctx

    if config.replay_fixture:
        _start_replay(ctx, config.replay_fixture, config.replay_speed)

    # -- read endpoints ----------------------------------------------------

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__, "fights": len(ctx.sessions)}

    @app.get("/fights")
    def fights():
        return [_fight_summary(s) for s in ctx.sessions.values()]

    @app.get("/fights/{fight_id}")
    def fight_detail(fight_id: str):
        session = ctx.sessions.get(fight_id)
        if session is None:
            raise HTTPException(status_code=404, detail=f"unknown fight {fight_id!r}")
        detail = _fight_summary(session)
        detail["latest_snapshot"] = session.latest.as_dict() if session.latest else None
        detail["audit_log"] = list(session.audit_log)
        return detail

    @app.get("/fights/{fight_id}/predictions")
    def fight_predictions(fight_id: str):
        if fight_id not in ctx.sessions:
            raise HTTPException(status_code=404, detail=f"unknown fight {fight_id!r}")
        return [e for e in ctx.events.all() if e.get("fight_id") == fight_id]

    @app.get("/valuebets")
    def valuebets():
        return self_signals()

    def self_signals():
        return [
            {k: v for k, v in rec.items() if k != "quote_key"}
            for rec in ctx.signals.read_all()
        ]

    @app.get("/ledger")
    def ledger():
        entries, summary = ctx.ledger_state()
        return {"entries": entries, "summary": summary}

    # -- write endpoints ---------------------------------------------------

    @app.post("/fights/{fight_id}/odds")
    def submit_odds(fight_id: str, body: dict, request: Request):
        session = ctx.sessions.get(fight_id)
        if session is None:
            raise HTTPException(status_code=404, detail=f"unknown fight {fight_id!r}")
        try:
            corner = Corner(str(body.get("corner", "")).lower())
        except ValueError:
            raise HTTPException(status_code=422, detail="corner must be 'red' or 'blue'")
        try:
            odds = float(body["decimal_odds"])
        except (KeyError, TypeError, ValueError):
            raise HTTPException(status_code=422, detail="decimal_odds must be a number")
        if not odds > 1.0:
            raise HTTPException(status_code=422, detail="decimal odds must be > 1.0")
        timestamp = str(body.get("timestamp", ""))

        with ctx.lock:
            p_red = session.latest_winner_probability
            if p_red is None:
                raise HTTPException(
                    status_code=409,
                    detail="no winner probability yet; submit odds after round 2 completes",
                )
            quote = {"fight_id": fight_id, "corner": corner.value,
                     "decimal_odds": odds, "timestamp": timestamp}
            key = ctx._quote_key(quote)
            duplicate = key in ctx._quote_keys
            if not duplicate:
                ctx.quotes.append(quote)
                ctx._quote_keys.add(key)

            submitted = OddsQuote(fight_id=fight_id, corner=corner,
                                  decimal_odds=odds, timestamp=timestamp)
            red_q = submitted if corner is Corner.RED else ctx.latest_quote(fight_id, Corner.RED)
            blue_q = submitted if corner is Corner.BLUE else ctx.latest_quote(fight_id, Corner.BLUE)
            signal = detect_value_bet(p_red, red_q, blue_q, ctx.bet_config)

            reason = None
            signal_payload = None
            if signal is None:
                reason = _no_signal_reason(p_red, corner, red_q, blue_q, ctx.bet_config)
            elif key in ctx._signals_by_quote:
                signal_payload = {k: v for k, v in ctx._signals_by_quote[key].items()
                                  if k != "quote_key"}
            else:
                ctx.record_value_bet(signal, key, timestamp)
                signal_payload = signal.as_dict()
            if signal_payload is not None:
                signal_payload = {
                    **signal_payload,
                    "stake": ctx.bet_config.default_stake,
                    "expected_value": signal_from_dict(signal_payload).expected_value(
                        ctx.bet_config.default_stake),
                }
        return {
            "quote": quote,
            "duplicate": duplicate,
            "signal": signal_payload,
            "reason": reason,
            "red_win_probability": p_red,
        }

    @app.post("/ledger/{entry_id}/settle")
    def settle(entry_id: int, body: dict):
        result_raw = str(body.get("result", "")).lower()
        try:
            result = BetResult(result_raw)
        except ValueError:
            raise HTTPException(status_code=422,
                                detail="result must be won, lost, or void")
        with ctx.lock:
            entries, _ = ctx.ledger_state()
            if not any(e["entry_id"] == entry_id for e in entries):
                raise HTTPException(status_code=404, detail=f"no ledger entry {entry_id}")
            ctx.ledger.append({"type": "settle", "entry_id": entry_id,
                               "result": result.value})
            entries, summary = ctx.ledger_state()
        entry = next(e for e in entries if e["entry_id"] == entry_id)
        return {"entry": entry, "summary": summary}

    # -- event stream --------------------------------------------------------

    @app.get("/events")
    def events(request: Request, from_seq: Optional[int] = None,
               limit: Optional[int] = None):
        start = from_seq
        if start is None:
            header = request.headers.get("last-event-id")
            start = int(header) if header and header.isdigit() else 0

        def stream():
            sent = 0
            last = start
            sub = ctx.broadcaster.subscribe()
            try:
                for record in ctx.events.since(start):
                    yield _sse_frame(record)
                    last = record["seq"]
                    sent += 1
                    if limit is not None and sent >= limit:
                        return
                while True:
                    item = sub.get(timeout=STREAM_KEEPALIVE_SECONDS)
                    if item is None:
                        yield ": keepalive\n\n"
                        continue
                    if item["seq"] <= last:
                        continue
                    yield _sse_frame(item)
                    last = item["seq"]
                    sent += 1
                    if limit is not None and sent >= limit:
                        return
            finally:
                ctx.broadcaster.unsubscribe(sub)

        return StreamingResponse(stream(), media_type="text/event-stream")

    return app


def _fight_summary(session: FightSession) -> dict:
    meta = session.meta
    return {
        "fight_id": meta.fight_id,
        "event_name": meta.event_name,
        "scheduled_rounds": meta.scheduled_rounds,
        "red": {"name": meta.red.name, "age": meta.red.age_at_fight,
                "height_cm": meta.red.height_cm},
        "blue": {"name": meta.blue.name, "age": meta.blue.age_at_fight,
                 "height_cm": meta.blue.height_cm},
        "current_round": session.current_round,
        "completed_rounds": sorted(session.frozen),
        "winner_probability": session.latest_winner_probability,
    }


def _no_signal_reason(p_red: float, corner: Corner, red_q, blue_q,
                      cfg: BetConfig) -> str:
    favored = Corner.RED if p_red >= 0.5 else Corner.BLUE
    quote = red_q if favored is Corner.RED else blue_q
    if quote is None:
        return f"model favors {favored.value} but no {favored.value} quote is available"
    p = p_red if favored is Corner.RED else 1.0 - p_red
    edge = p - 1.0 / quote.decimal_odds
    if edge < cfg.edge_threshold:
        return (f"edge {edge:.4f} on {favored.value} is below the "
                f"{cfg.edge_threshold:.2f} threshold")
    if quote.decimal_odds < cfg.min_odds:
        return f"odds {quote.decimal_odds} below minimum {cfg.min_odds}"
    return "no signal"


def _sse_frame(record: dict) -> str:
    data = json.dumps(record, sort_keys=True, separators=(",", ":"))
    return f"id: {record['seq']}\nevent: {record['kind']}\ndata: {data}\n\n"


def _start_replay(ctx: ServiceContext, fixture: str, speed: float) -> None:
    from ..live import load_snapshot_log

    meta, _ = load_snapshot_log(fixture)
    session = FightSession(meta, ctx.round_model, ctx.winner_model,
                           model_version=f"cagecast/{__version__}")
    ctx.sessions[meta.fight_id] = session

    def run():
        _, snapshots = load_snapshot_log(fixture)
        import time as _time

        previous = None
        for snapshot in snapshots:
            if speed > 0 and previous is not None:
                from ..live import _timestamp_gap_seconds

                gap = _timestamp_gap_seconds(previous.timestamp, snapshot.timestamp, 5.0)
                _time.sleep(gap / speed)
            with ctx.lock:
                for event in session.ingest_snapshot(snapshot):
                    ctx.record_prediction_event(event)
            previous = snapshot

    if speed > 0:
        threading.Thread(target=run, daemon=True).start()
    else:
        run()


def serve(config: ServiceConfig) -> None:
    """Run the service under uvicorn; raises BindError if the port is taken."""
    import uvicorn

    app = create_app(config)
    try:
        uvicorn.run(app, host=config.listen_host, port=config.listen_port,
                    log_level="info")
    except OSError as exc:
        raise BindError(f"cannot bind {config.listen_host}:{config.listen_port}: {exc}") from exc
