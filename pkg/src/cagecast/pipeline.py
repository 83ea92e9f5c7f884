"""Historical data ingestion: CSV loading with row-level diagnostics, scorecard
merging, the winner-model filter chain, and temporal train/test splits.

Every filter decision is logged in an auditable report whose counts chain:
the after-count of each rule is the before-count of the next.
"""

from __future__ import annotations

import csv
import datetime as dt
import re
from collections import Counter
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from .domain import (
    FighterProfile,
    FightRecord,
    JudgeRoundScore,
    Outcome,
    REGULATION_ROUND_SECONDS,
    RoundObservation,
    RoundStatLine,
    cumulative_stats,
    round_feature_vector,
    winner_feature_vector,
)
from .errors import AmbiguousKey, MissingProfileField, SchemaError

# Named temporal-split presets: train strictly before the cutoff date.
SPLIT_PRESETS = {
    "round_score": dt.date(2019, 9, 18),
    "winner": dt.date(2018, 12, 15),
}

WINNER_DATE_FLOOR = dt.date(2010, 1, 1)

FIGHT_CSV_COLUMNS = [
    "event", "date", "red_name", "blue_name",
    "red_age", "red_height_cm", "blue_age", "blue_height_cm",
    "scheduled_rounds", "outcome", "finish_round", "round",
    "red_kd", "red_sig_landed", "red_total_att", "red_sig_body", "red_sig_leg",
    "red_td_succ", "red_td_att", "red_sub_att", "red_ctrl_sec",
    "blue_kd", "blue_sig_landed", "blue_total_att", "blue_sig_body", "blue_sig_leg",
    "blue_td_succ", "blue_td_att", "blue_sub_att", "blue_ctrl_sec",
]

SCORECARD_CSV_COLUMNS = [
    "event", "red_name", "blue_name", "round",
    "j1_red", "j1_blue", "j2_red", "j2_blue", "j3_red", "j3_blue",
]

_OUTCOME_CODES = {
    "red_win": Outcome.RED_WIN,
    "blue_win": Outcome.BLUE_WIN,
    "draw": Outcome.DRAW,
    "no_contest": Outcome.NO_CONTEST,
}

_STAT_COLS = ["kd", "sig_landed", "total_att", "sig_body", "sig_leg",
              "td_succ", "td_att", "sub_att", "ctrl_sec"]


@dataclass(frozen=True)
class ParseDiagnostic:
    line_number: int
    message: str

    def __str__(self) -> str:
        return f"line {self.line_number}: {self.message}"


@dataclass(frozen=True)
class FilterRule:
    name: str
    before: int
    after: int


@dataclass(frozen=True)
class DatasetFilterReport:
    """Ordered per-rule record counts plus final target/outcome tallies."""

    rules: tuple[FilterRule, ...]
    outcome_counts: dict

    def __post_init__(self) -> None:
        for prev, nxt in zip(self.rules, self.rules[1:]):
            if prev.after != nxt.before:
                raise ValueError(
                    f"filter chain broken between {prev.name!r} and {nxt.name!r}"
                )
        for rule in self.rules:
            if rule.after > rule.before:
                raise ValueError(f"rule {rule.name!r} increased the record count")

    def rule(self, name: str) -> FilterRule:
        for rule in self.rules:
            if rule.name == name:
                return rule
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "rules": [{"name": r.name, "before": r.before, "after": r.after}
                      for r in self.rules],
            "outcome_counts": dict(self.outcome_counts),
        }


@dataclass(frozen=True)
class RowId:
    event: str
    date: dt.date
    red_name: str
    blue_name: str
    round: int


@dataclass(frozen=True)
class DesignMatrixBundle:
    """Feature matrix, targets, and row identities for one model family."""

    layout: str
    features: np.ndarray
    targets: np.ndarray
    row_ids: tuple[RowId, ...]
    filter_report: Optional[DatasetFilterReport] = None

    def __post_init__(self) -> None:
        if not (len(self.features) == len(self.targets) == len(self.row_ids)):
            raise ValueError("bundle members disagree on row count")

    def __len__(self) -> int:
        return len(self.targets)

    def subset(self, mask: np.ndarray) -> "DesignMatrixBundle":
        ids = tuple(rid for rid, keep in zip(self.row_ids, mask) if keep)
        return DesignMatrixBundle(
            layout=self.layout,
            features=self.features[mask],
            targets=self.targets[mask],
            row_ids=ids,
            filter_report=None,
        )


def _parse_duration_seconds(raw: str) -> float:
    """Accept plain seconds ("185" / "185.0") or "m:ss" clock notation."""
    raw = raw.strip()
    clock = re.fullmatch(r"(\d+):([0-5]\d)", raw)
    if clock:
        return int(clock.group(1)) * 60 + int(clock.group(2))
    return float(raw)


def _parse_stat_line(rec: dict, prefix: str) -> RoundStatLine:
    counts = {}
    for col, field in zip(_STAT_COLS[:-1], (
        "knockdowns", "sig_strikes_landed", "total_strikes_attempted",
        "sig_strikes_landed_body", "sig_strikes_landed_leg",
        "takedowns_successful", "takedowns_attempted", "submission_attempts",
    )):
        raw = rec[f"{prefix}_{col}"].strip()
        value = int(raw)
        counts[field] = value
    ctrl = _parse_duration_seconds(rec[f"{prefix}_ctrl_sec"])
    if ctrl > REGULATION_ROUND_SECONDS:
        raise ValueError(f"{prefix} control_time exceeds 300s ({ctrl:.0f}s)")
    return RoundStatLine(control_time_sec=ctrl, **counts)


def _parse_profile(rec: dict, prefix: str) -> FighterProfile:
    age_raw = rec[f"{prefix}_age"].strip()
    height_raw = rec[f"{prefix}_height_cm"].strip()
    return FighterProfile(
        name=rec[f"{prefix}_name"].strip(),
        age_at_fight=int(age_raw) if age_raw else None,
        height_cm=float(height_raw) if height_raw else None,
    )


def load_fight_dataset(path) -> tuple[list[FightRecord], list[ParseDiagnostic]]:
    """Parse the per-round fights CSV into validated FightRecords.

    Malformed rows are quarantined with a line-numbered diagnostic instead of
    being silently dropped; a wrong header raises SchemaError.
    """
    diagnostics: list[ParseDiagnostic] = []
    # rows grouped per fight, keyed by (event, red, blue), insertion-ordered
    groups: dict[tuple, dict] = {}
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != FIGHT_CSV_COLUMNS:
            raise SchemaError(
                f"unexpected fights header: {reader.fieldnames} (want {FIGHT_CSV_COLUMNS})"
            )
        for rec in reader:
            line = reader.line_num
            try:
                parsed = _parse_fight_row(rec)
            except (ValueError, KeyError) as exc:
                diagnostics.append(ParseDiagnostic(line, str(exc)))
                continue
            key = (rec["event"].strip(), rec["red_name"].strip(), rec["blue_name"].strip())
            group = groups.setdefault(key, {"meta": None, "rounds": {}, "lines": {}})
            if group["meta"] is None:
                group["meta"] = parsed["meta"]
            elif group["meta"] != parsed["meta"]:
                diagnostics.append(ParseDiagnostic(
                    line, "fight metadata conflicts with an earlier row for the same bout"))
                continue
            round_no = parsed["round"]
            if round_no in group["rounds"]:
                diagnostics.append(ParseDiagnostic(line, f"duplicate round {round_no}"))
                continue
            group["rounds"][round_no] = parsed["obs"]
            group["lines"][round_no] = line

    fights: list[FightRecord] = []
    for (event, red_name, blue_name), group in groups.items():
        meta = group["meta"]
        if meta is None:
            continue
        round_numbers = sorted(group["rounds"])
        if round_numbers != list(range(1, len(round_numbers) + 1)):
            diagnostics.append(ParseDiagnostic(
                min(group["lines"].values()),
                f"fight {event} / {red_name} vs {blue_name}: rounds are not contiguous "
                f"from 1 ({round_numbers}); fight quarantined"))
            continue
        try:
            fights.append(FightRecord(
                event_name=event,
                date=meta["date"],
                red=meta["red"],
                blue=meta["blue"],
                scheduled_rounds=meta["scheduled_rounds"],
                rounds=tuple(group["rounds"][k] for k in round_numbers),
                outcome=meta["outcome"],
                finish_round=meta["finish_round"],
            ))
        except ValueError as exc:
            diagnostics.append(ParseDiagnostic(min(group["lines"].values()), str(exc)))
    return fights, diagnostics


def _parse_fight_row(rec: dict) -> dict:
    date = dt.date.fromisoformat(rec["date"].strip())
    scheduled = int(rec["scheduled_rounds"])
    outcome_raw = rec["outcome"].strip().lower()
    if outcome_raw not in _OUTCOME_CODES:
        raise ValueError(f"unknown outcome {outcome_raw!r}")
    finish_round = int(rec["finish_round"])
    round_no = int(rec["round"])
    if round_no < 1 or round_no > scheduled:
        raise ValueError(f"round {round_no} outside schedule of {scheduled}")
    meta = {
        "date": date,
        "red": _parse_profile(rec, "red"),
        "blue": _parse_profile(rec, "blue"),
        "scheduled_rounds": scheduled,
        "outcome": _OUTCOME_CODES[outcome_raw],
        "finish_round": finish_round,
    }
    obs = RoundObservation(red=_parse_stat_line(rec, "red"), blue=_parse_stat_line(rec, "blue"))
    return {"meta": meta, "round": round_no, "obs": obs}


@dataclass(frozen=True)
class ScorecardRow:
    event: str
    red_name: str
    blue_name: str
    round: int
    scores: tuple[JudgeRoundScore, JudgeRoundScore, JudgeRoundScore]


def load_scorecards(path) -> tuple[list[ScorecardRow], list[ParseDiagnostic]]:
    rows: list[ScorecardRow] = []
    diagnostics: list[ParseDiagnostic] = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != SCORECARD_CSV_COLUMNS:
            raise SchemaError(
                f"unexpected scorecards header: {reader.fieldnames} (want {SCORECARD_CSV_COLUMNS})"
            )
        for rec in reader:
            try:
                scores = tuple(
                    JudgeRoundScore(int(rec[f"j{i}_red"]), int(rec[f"j{i}_blue"]))
                    for i in (1, 2, 3)
                )
                rows.append(ScorecardRow(
                    event=rec["event"].strip(),
                    red_name=rec["red_name"].strip(),
                    blue_name=rec["blue_name"].strip(),
                    round=int(rec["round"]),
                    scores=scores,
                ))
            except (ValueError, KeyError) as exc:
                diagnostics.append(ParseDiagnostic(reader.line_num, str(exc)))
    return rows, diagnostics


def _norm(text: str) -> str:
    return re.sub(r"\s+", " ", text.strip().casefold())


@dataclass
class MergeReport:
    attached: int = 0
    unmatched: list = None

    def __post_init__(self):
        if self.unmatched is None:
            self.unmatched = []


def merge_scorecards(
    fights: Sequence[FightRecord], scorecards: Sequence[ScorecardRow]
) -> tuple[list[FightRecord], MergeReport]:
    """Attach judge scores by normalized (event, red, blue, round) key.

    A scorecard key matching more than one fight raises AmbiguousKey; keys
    with no match are reported, never guessed.
    """
    by_key: dict[tuple, list[int]] = {}
    for idx, fight in enumerate(fights):
        key = (_norm(fight.event_name), _norm(fight.red.name), _norm(fight.blue.name))
        by_key.setdefault(key, []).append(idx)

    report = MergeReport()
    pending: dict[int, dict[int, tuple]] = {}
    for card in scorecards:
        key = (_norm(card.event), _norm(card.red_name), _norm(card.blue_name))
        matches = by_key.get(key, [])
        if len(matches) > 1:
            raise AmbiguousKey(
                f"scorecard key {key} matches {len(matches)} fights"
            )
        if not matches:
            report.unmatched.append(
                f"{card.event} / {card.red_name} vs {card.blue_name} round {card.round}: no such fight"
            )
            continue
        idx = matches[0]
        if not 1 <= card.round <= len(fights[idx].rounds):
            report.unmatched.append(
                f"{card.event} / {card.red_name} vs {card.blue_name} round {card.round}: "
                "round not present in fight data"
            )
            continue
        pending.setdefault(idx, {})[card.round] = card.scores
        report.attached += 1

    merged = []
    for idx, fight in enumerate(fights):
        cards = pending.get(idx)
        if not cards:
            merged.append(fight)
            continue
        rounds = tuple(
            replace(obs, judge_scores=cards.get(k + 1, obs.judge_scores))
            for k, obs in enumerate(fight.rounds)
        )
        merged.append(replace(fight, rounds=rounds))
    return merged, report


def build_round_dataset(fights: Sequence[FightRecord]) -> DesignMatrixBundle:
    """One row per scored round; rounds without a majority score are dropped
    and counted in the filter report."""
    total_rounds = sum(len(f.rounds) for f in fights)
    scored = 0
    features, targets, ids = [], [], []
    for fight in fights:
        for k, obs in enumerate(fight.rounds, start=1):
            if obs.judge_scores is None:
                continue
            scored += 1
            majority = obs.majority
            if majority is None:
                continue
            features.append(round_feature_vector(obs.red, obs.blue).values)
            targets.append(majority.margin)
            ids.append(RowId(fight.event_name, fight.date, fight.red.name,
                             fight.blue.name, k))
    report = DatasetFilterReport(
        rules=(
            FilterRule("scored_rounds", total_rounds, scored),
            FilterRule("majority_exists", scored, len(targets)),
        ),
        outcome_counts=dict(Counter(str(t) for t in targets)),
    )
    return DesignMatrixBundle(
        layout="round9",
        features=np.array(features, dtype=float).reshape(len(targets), 9),
        targets=np.array(targets, dtype=int),
        row_ids=tuple(ids),
        filter_report=report,
    )


def build_winner_dataset(
    fights: Sequence[FightRecord], through_round: int
) -> DesignMatrixBundle:
    """Winner-model rows from fights that went beyond ``through_round``.

    Filter chain, applied in order and logged: modern era (2010+), 3-round
    bouts only, outlasted the feature window, both profiles complete, full
    stat coverage for rounds 1..k. Target is 1 for a red win and 0 otherwise
    (draws and no-contests count as 0).
    """
    if through_round not in (1, 2):
        raise ValueError(f"through_round must be 1 or 2, got {through_round}")
    rules: list[FilterRule] = []
    current = list(fights)

    def apply(name: str, keep) -> None:
        nonlocal current
        before = len(current)
        current = [f for f in current if keep(f)]
        rules.append(FilterRule(name, before, len(current)))

    apply("date_from_2010", lambda f: f.date >= WINNER_DATE_FLOOR)
    apply("three_round_bouts", lambda f: f.scheduled_rounds == 3)
    apply(f"beyond_round_{through_round}", lambda f: f.finish_round > through_round)
    apply("profiles_complete", lambda f: f.red.complete and f.blue.complete)
    apply("round_stats_complete", lambda f: len(f.rounds) >= through_round)

    features, targets, ids = [], [], []
    for fight in current:
        red_cum = cumulative_stats([obs.red for obs in fight.rounds[:through_round]])
        blue_cum = cumulative_stats([obs.blue for obs in fight.rounds[:through_round]])
        try:
            vec = winner_feature_vector(red_cum, blue_cum, fight.red, fight.blue)
        except MissingProfileField:  # unreachable after the profile filter
            continue
        features.append(vec.values)
        targets.append(1 if fight.outcome is Outcome.RED_WIN else 0)
        ids.append(RowId(fight.event_name, fight.date, fight.red.name,
                         fight.blue.name, through_round))
    report = DatasetFilterReport(
        rules=tuple(rules),
        outcome_counts=dict(Counter(f.outcome.value for f in current)),
    )
    return DesignMatrixBundle(
        layout="winner11",
        features=np.array(features, dtype=float).reshape(len(targets), 11),
        targets=np.array(targets, dtype=int),
        row_ids=tuple(ids),
        filter_report=report,
    )


def temporal_split(
    bundle: DesignMatrixBundle, cutoff_date: dt.date
) -> tuple[DesignMatrixBundle, DesignMatrixBundle]:
    """Train on rows strictly before the cutoff; the cutoff day goes to test."""
    dates = np.array([rid.date for rid in bundle.row_ids])
    train_mask = dates < cutoff_date
    return bundle.subset(train_mask), bundle.subset(~train_mask)
