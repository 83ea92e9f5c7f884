"""Value-bet detection, expected value, and ledger accounting.

The signal rule: back the model-favored corner when the model probability
exceeds the odds-implied probability by at least the edge threshold AND the
decimal odds clear the minimum. The comparison is signed in the backed
corner's favor; backing a corner the model likes less than the market is
never a value bet.
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .domain import Corner
from .errors import EmptyLedger, InvalidOdds

log = logging.getLogger(__name__)


class BetResult(str, Enum):
    WON = "won"
    LOST = "lost"
    VOID = "void"


@dataclass(frozen=True)
class OddsQuote:
    """One bookmaker decimal-odds quote for one corner of a fight."""

    fight_id: str
    corner: Corner
    decimal_odds: float
    timestamp: str = ""

    def __post_init__(self) -> None:
        if not self.decimal_odds > 1.0:
            raise InvalidOdds(f"decimal odds must be > 1.0, got {self.decimal_odds}")


@dataclass(frozen=True)
class BetConfig:
    """Signal rule thresholds; defaults follow the backtested strategy."""

    edge_threshold: float = 0.10
    min_odds: float = 1.20
    default_stake: float = 100.0


@dataclass(frozen=True)
class ValueBetSignal:
    fight_id: str
    corner: Corner
    model_probability: float
    implied_probability: float
    edge: float
    odds: float
    ev_per_unit: float

    def expected_value(self, stake: float) -> float:
        return expected_value(self.model_probability, self.odds, stake)

    def as_dict(self) -> dict:
        return {
            "fight_id": self.fight_id,
            "corner": self.corner.value,
            "model_probability": self.model_probability,
            "implied_probability": self.implied_probability,
            "edge": self.edge,
            "odds": self.odds,
            "ev_per_unit": self.ev_per_unit,
        }


@dataclass(frozen=True)
class BetLedgerEntry:
    """A settled bet: Won pays stake*(odds-1), Lost -stake, Void 0."""

    signal: ValueBetSignal
    stake: float
    result: BetResult
    net_profit: float

    @classmethod
    def settle(cls, signal: ValueBetSignal, stake: float, result: BetResult) -> "BetLedgerEntry":
        if result is BetResult.WON:
            net = stake * (signal.odds - 1.0)
        elif result is BetResult.LOST:
            net = -stake
        else:
            net = 0.0
        return cls(signal=signal, stake=stake, result=result, net_profit=net)


@dataclass(frozen=True)
class LedgerSummary:
    total_staked: float
    net_profit: float
    roi: float
    hit_rate: float
    average_odds: float
    won: int
    lost: int
    void: int

    def as_dict(self) -> dict:
        return {
            "total_staked": self.total_staked,
            "net_profit": self.net_profit,
            "roi": self.roi,
            "hit_rate": self.hit_rate,
            "average_odds": self.average_odds,
            "won": self.won,
            "lost": self.lost,
            "void": self.void,
        }


def implied_probability(odds: float) -> float:
    """Break-even probability of decimal odds: 1/odds."""
    if not odds > 1.0:
        raise InvalidOdds(f"decimal odds must be > 1.0, got {odds}")
    return 1.0 / odds


def expected_value(p: float, odds: float, stake: float) -> float:
    """Expected profit of a stake at decimal odds given win probability p."""
    if not odds > 1.0:
        raise InvalidOdds(f"decimal odds must be > 1.0, got {odds}")
    return p * stake * (odds - 1.0) - (1.0 - p) * stake


def detect_value_bet(
    p_red: float,
    red_quote: Optional[OddsQuote],
    blue_quote: Optional[OddsQuote],
    cfg: Optional[BetConfig] = None,
) -> Optional[ValueBetSignal]:
    """Evaluate backing the model-favored corner against its quote.

    Returns None when the favored corner has no quote, the edge is below the
    threshold, or the odds are below the minimum. Red is favored at p_red 0.5.
    """
    cfg = cfg or BetConfig()
    if not 0.0 <= p_red <= 1.0:
        raise ValueError(f"p_red must lie in [0, 1], got {p_red}")
    if p_red >= 0.5:
        corner, p, quote = Corner.RED, p_red, red_quote
    else:
        corner, p, quote = Corner.BLUE, 1.0 - p_red, blue_quote
    if quote is None:
        log.info("no %s quote available for the model-favored corner; no signal", corner.value)
        return None
    implied = implied_probability(quote.decimal_odds)
    edge = p - implied
    if edge < cfg.edge_threshold:
        return None
    if quote.decimal_odds < cfg.min_odds:
        return None
    return ValueBetSignal(
        fight_id=quote.fight_id,
        corner=corner,
        model_probability=p,
        implied_probability=implied,
        edge=edge,
        odds=quote.decimal_odds,
        ev_per_unit=expected_value(p, quote.decimal_odds, 1.0),
    )


def signal_from_dict(d: dict) -> ValueBetSignal:
    return ValueBetSignal(
        fight_id=d["fight_id"],
        corner=Corner(d["corner"]),
        model_probability=d["model_probability"],
        implied_probability=d["implied_probability"],
        edge=d["edge"],
        odds=d["odds"],
        ev_per_unit=d["ev_per_unit"],
    )


def settle_ledger(entries: Sequence[BetLedgerEntry]) -> LedgerSummary:
    """ROI, hit rate (voids excluded), and average odds over settled bets."""
    if not entries:
        raise EmptyLedger("cannot summarize an empty ledger")
    total_staked = sum(e.stake for e in entries)
    net = sum(e.net_profit for e in entries)
    won = sum(1 for e in entries if e.result is BetResult.WON)
    lost = sum(1 for e in entries if e.result is BetResult.LOST)
    void = sum(1 for e in entries if e.result is BetResult.VOID)
    decided = won + lost
    return LedgerSummary(
        total_staked=total_staked,
        net_profit=net,
        roi=net / total_staked,
        hit_rate=won / decided if decided else float("nan"),
        average_odds=sum(e.signal.odds for e in entries) / len(entries),
        won=won,
        lost=lost,
        void=void,
    )


@dataclass(frozen=True)
class BacktestRow:
    """One bout from the bundled live-odds backtest sheet.

    ``selected`` marks the bets actually placed during the recorded run; the
    stated rule can disagree with that set in a couple of spots, so both
    selections are available.
    """

    event: str
    red_name: str
    blue_name: str
    odds_red: Optional[float]
    odds_blue: Optional[float]
    p_red: Optional[float]
    predicted: Optional[Corner]
    actual: Optional[str]  # "red", "blue", or "draw"
    selected: bool
    ev_per_100: Optional[float]
    net_profit_per_100: Optional[float]

    @property
    def backed_corner(self) -> Optional[Corner]:
        if self.p_red is None:
            return None
        return Corner.RED if self.p_red >= 0.5 else Corner.BLUE

    @property
    def backed_odds(self) -> Optional[float]:
        corner = self.backed_corner
        if corner is Corner.RED:
            return self.odds_red
        if corner is Corner.BLUE:
            return self.odds_blue
        return None


BACKTEST_COLUMNS = [
    "event", "red_name", "blue_name", "odds_red", "odds_blue", "p_red_pct",
    "predicted", "actual", "selected", "ev_per_100", "net_profit_per_100",
]


def load_backtest_rows(path) -> list[BacktestRow]:
    rows = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != BACKTEST_COLUMNS:
            raise ValueError(f"unexpected backtest columns: {reader.fieldnames}")
        for rec in reader:
            def opt_float(key: str) -> Optional[float]:
                raw = rec[key].strip()
                return float(raw) if raw else None

            p_pct = opt_float("p_red_pct")
            predicted = rec["predicted"].strip().lower() or None
            rows.append(BacktestRow(
                event=rec["event"],
                red_name=rec["red_name"],
                blue_name=rec["blue_name"],
                odds_red=opt_float("odds_red"),
                odds_blue=opt_float("odds_blue"),
                p_red=p_pct / 100.0 if p_pct is not None else None,
                predicted=Corner(predicted) if predicted else None,
                actual=rec["actual"].strip().lower() or None,
                selected=rec["selected"].strip() == "1",
                ev_per_100=opt_float("ev_per_100"),
                net_profit_per_100=opt_float("net_profit_per_100"),
            ))
    return rows


def backtest_ledger(
    rows: Sequence[BacktestRow],
    stake: float = 100.0,
    selection: str = "recorded",
    cfg: Optional[BetConfig] = None,
) -> list[BetLedgerEntry]:
    """Build a settled ledger from backtest rows.

    ``selection`` is "recorded" (the bets marked selected in the sheet) or
    "rule" (re-derive signals with detect_value_bet from the stored quotes).
    """
    cfg = cfg or BetConfig()
    entries = []
    for i, row in enumerate(rows):
        if row.p_red is None or row.actual is None:
            continue
        fight_id = f"backtest-{i}"
        red_q = (OddsQuote(fight_id, Corner.RED, row.odds_red)
                 if row.odds_red is not None else None)
        blue_q = (OddsQuote(fight_id, Corner.BLUE, row.odds_blue)
                  if row.odds_blue is not None else None)
        signal = detect_value_bet(row.p_red, red_q, blue_q, cfg)
        if selection == "rule":
            if signal is None:
                continue
        elif selection == "recorded":
            if not row.selected:
                continue
            if signal is None:
                # recorded bet that the stated rule would not flag; settle it
                # anyway from the stored quote so the sheet reconciles
                corner = row.backed_corner
                odds = row.backed_odds
                p = row.p_red if corner is Corner.RED else 1.0 - row.p_red
                signal = ValueBetSignal(
                    fight_id=fight_id,
                    corner=corner,
                    model_probability=p,
                    implied_probability=implied_probability(odds),
                    edge=p - implied_probability(odds),
                    odds=odds,
                    ev_per_unit=expected_value(p, odds, 1.0),
                )
        else:
            raise ValueError(f"unknown selection {selection!r}")
        if row.actual == "draw":
            result = BetResult.VOID
        elif row.actual == signal.corner.value:
            result = BetResult.WON
        else:
            result = BetResult.LOST
        entries.append(BetLedgerEntry.settle(signal, stake, result))
    return entries
