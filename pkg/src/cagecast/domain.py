"""Canonical fight-domain types and the feature construction shared by all models.

Every model consumes red-minus-blue differences. Two fixed layouts exist:

* ``round9``   - the nine per-round stat differences feeding the round-score model.
* ``winner11`` - age and height differences followed by the nine cumulative stat
  differences, feeding the fight-winner models.

Control time is stored internally in seconds but always exposed to models in
minutes; ages are whole years at fight date and heights are centimeters, so
fitted coefficients read as per-minute / per-year / per-centimeter effects.
"""

from __future__ import annotations

import datetime as dt
import json
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .errors import MissingProfileField

REGULATION_ROUND_SECONDS = 300

# Storage order for the nine in-round statistics.
STAT_FIELDS = (
    "knockdowns",
    "sig_strikes_landed",
    "total_strikes_attempted",
    "sig_strikes_landed_body",
    "sig_strikes_landed_leg",
    "takedowns_successful",
    "takedowns_attempted",
    "submission_attempts",
    "control_time_sec",
)

# Regressor order of the round-score model. Control time is in minutes here.
ROUND9_FIELDS = (
    "knockdowns",
    "sig_strikes_landed",
    "total_strikes_attempted",
    "sig_strikes_landed_body",
    "sig_strikes_landed_leg",
    "takedowns_successful",
    "takedowns_attempted",
    "submission_attempts",
    "control_time",
)

# Regressor order of the winner models: age, height, then the nine stats.
WINNER11_FIELDS = (
    "age",
    "height",
    "knockdowns",
    "total_strikes_attempted",
    "sig_strikes_landed",
    "sig_strikes_landed_body",
    "sig_strikes_landed_leg",
    "control_time",
    "takedowns_successful",
    "takedowns_attempted",
    "submission_attempts",
)

LAYOUTS = {"round9": ROUND9_FIELDS, "winner11": WINNER11_FIELDS}

# Ordered margin categories: red points minus blue points for a round.
MARGINS = (-3, -2, -1, 0, 1, 2, 3)

VALID_ROUND_POINTS = (7, 8, 9, 10)


class Corner(str, Enum):
    RED = "red"
    BLUE = "blue"


class Outcome(str, Enum):
    RED_WIN = "red_win"
    BLUE_WIN = "blue_win"
    DRAW = "draw"
    NO_CONTEST = "no_contest"


@dataclass(frozen=True)
class RoundStatLine:
    """One fighter's nine in-round statistics.

    Also reused for cumulative totals across rounds, so only non-negativity is
    enforced here; the per-round 300 s control-time cap is a parse-time check.
    """

    knockdowns: int = 0
    sig_strikes_landed: int = 0
    total_strikes_attempted: int = 0
    sig_strikes_landed_body: int = 0
    sig_strikes_landed_leg: int = 0
    takedowns_successful: int = 0
    takedowns_attempted: int = 0
    submission_attempts: int = 0
    control_time_sec: float = 0.0

    def __post_init__(self) -> None:
        for name in STAT_FIELDS:
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")

    def as_tuple(self) -> tuple:
        return tuple(getattr(self, name) for name in STAT_FIELDS)

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in STAT_FIELDS}

    @classmethod
    def from_dict(cls, d: dict) -> "RoundStatLine":
        return cls(**{name: d[name] for name in STAT_FIELDS})

    @classmethod
    def zero(cls) -> "RoundStatLine":
        return cls()

    def __add__(self, other: "RoundStatLine") -> "RoundStatLine":
        return RoundStatLine(*(a + b for a, b in zip(self.as_tuple(), other.as_tuple())))


def cumulative_stats(lines: Sequence[RoundStatLine]) -> RoundStatLine:
    """Sum stat lines across rounds."""
    total = RoundStatLine.zero()
    for line in lines:
        total = total + line
    return total


@dataclass(frozen=True)
class FighterProfile:
    """Fighter identity plus the two pre-fight regressors (may be unknown)."""

    name: str
    age_at_fight: Optional[int] = None
    height_cm: Optional[float] = None

    def __post_init__(self) -> None:
        if self.age_at_fight is not None and not 15 < self.age_at_fight < 60:
            raise ValueError(f"age_at_fight out of range: {self.age_at_fight}")
        if self.height_cm is not None and not 120 < self.height_cm < 230:
            raise ValueError(f"height_cm out of range: {self.height_cm}")

    @property
    def complete(self) -> bool:
        return self.age_at_fight is not None and self.height_cm is not None


@dataclass(frozen=True)
class JudgeRoundScore:
    """A single judge's points for one round under 10-point-must scoring."""

    red_points: int
    blue_points: int

    def __post_init__(self) -> None:
        for points in (self.red_points, self.blue_points):
            if points not in VALID_ROUND_POINTS:
                raise ValueError(f"round points must be in {VALID_ROUND_POINTS}, got {points}")
        if self.red_points != 10 and self.blue_points != 10:
            raise ValueError("at least one fighter must receive 10 points")


@dataclass(frozen=True)
class MajorityScore:
    """The score pair shared by at least two of the three judges.

    ``margin`` is red points minus blue points, one of the seven values
    -3 (7-10) through +3 (10-7); 0 means a 10-10 round.
    """

    red_points: int
    blue_points: int

    def __post_init__(self) -> None:
        for points in (self.red_points, self.blue_points):
            if points not in VALID_ROUND_POINTS:
                raise ValueError(f"round points must be in {VALID_ROUND_POINTS}, got {points}")
        if self.red_points != 10 and self.blue_points != 10:
            raise ValueError("at least one fighter must receive 10 points")

    @property
    def margin(self) -> int:
        return self.red_points - self.blue_points

    @classmethod
    def from_margin(cls, margin: int) -> "MajorityScore":
        if margin not in MARGINS:
            raise ValueError(f"margin must be in {MARGINS}, got {margin}")
        if margin >= 0:
            return cls(red_points=10, blue_points=10 - margin)
        return cls(red_points=10 + margin, blue_points=10)


def majority_score(
    s1: JudgeRoundScore, s2: JudgeRoundScore, s3: JudgeRoundScore
) -> Optional[MajorityScore]:
    """Score pair given by at least two judges; None when all three differ."""
    if s1 == s2 or s1 == s3:
        agreed = s1
    elif s2 == s3:
        agreed = s2
    else:
        return None
    return MajorityScore(red_points=agreed.red_points, blue_points=agreed.blue_points)


@dataclass(frozen=True)
class RoundObservation:
    """Both corners' stats for one round, plus judge scores when available."""

    red: RoundStatLine
    blue: RoundStatLine
    judge_scores: Optional[tuple[JudgeRoundScore, JudgeRoundScore, JudgeRoundScore]] = None

    @property
    def majority(self) -> Optional[MajorityScore]:
        if self.judge_scores is None:
            return None
        return majority_score(*self.judge_scores)


@dataclass(frozen=True)
class FightRecord:
    """One historical bout: metadata, per-round stats, and the outcome."""

    event_name: str
    date: dt.date
    red: FighterProfile
    blue: FighterProfile
    scheduled_rounds: int
    rounds: tuple[RoundObservation, ...]
    outcome: Outcome
    finish_round: int

    def __post_init__(self) -> None:
        if self.scheduled_rounds not in (3, 5):
            raise ValueError(f"scheduled_rounds must be 3 or 5, got {self.scheduled_rounds}")
        if len(self.rounds) > self.scheduled_rounds:
            raise ValueError("more recorded rounds than scheduled")
        if not 1 <= self.finish_round <= self.scheduled_rounds:
            raise ValueError(f"finish_round out of range: {self.finish_round}")


@dataclass(frozen=True)
class FeatureVector:
    """Ordered, named feature values under a fixed layout tag."""

    layout: str
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.layout not in LAYOUTS:
            raise ValueError(f"unknown layout {self.layout!r}")
        expected = len(LAYOUTS[self.layout])
        if len(self.values) != expected:
            raise ValueError(
                f"layout {self.layout!r} expects {expected} entries, got {len(self.values)}"
            )

    @property
    def names(self) -> tuple[str, ...]:
        return LAYOUTS[self.layout]

    def entries(self) -> list[tuple[str, float]]:
        return list(zip(self.names, self.values))

    def to_json(self) -> str:
        return json.dumps({"layout": self.layout, "values": self.entries()})

    @classmethod
    def from_json(cls, text: str) -> "FeatureVector":
        doc = json.loads(text)
        layout = doc["layout"]
        names = tuple(name for name, _ in doc["values"])
        if names != LAYOUTS.get(layout, ()):
            raise ValueError(f"feature names do not match layout {layout!r}")
        return cls(layout=layout, values=tuple(float(v) for _, v in doc["values"]))


def round_feature_vector(red: RoundStatLine, blue: RoundStatLine) -> FeatureVector:
    """Red-minus-blue differences for one round, control time in minutes."""
    values = (
        float(red.knockdowns - blue.knockdowns),
        float(red.sig_strikes_landed - blue.sig_strikes_landed),
        float(red.total_strikes_attempted - blue.total_strikes_attempted),
        float(red.sig_strikes_landed_body - blue.sig_strikes_landed_body),
        float(red.sig_strikes_landed_leg - blue.sig_strikes_landed_leg),
        float(red.takedowns_successful - blue.takedowns_successful),
        float(red.takedowns_attempted - blue.takedowns_attempted),
        float(red.submission_attempts - blue.submission_attempts),
        (red.control_time_sec - blue.control_time_sec) / 60.0,
    )
    return FeatureVector(layout="round9", values=values)


def winner_feature_vector(
    red_cum: RoundStatLine,
    blue_cum: RoundStatLine,
    red_prof: FighterProfile,
    blue_prof: FighterProfile,
) -> FeatureVector:
    """Age and height differences plus cumulative stat differences.

    Raises MissingProfileField when either fighter lacks age or height; the
    caller is expected to drop such fights rather than impute.
    """
    for corner, prof in (("red", red_prof), ("blue", blue_prof)):
        if not prof.complete:
            raise MissingProfileField(f"{corner} fighter {prof.name!r} is missing age or height")
    values = (
        float(red_prof.age_at_fight - blue_prof.age_at_fight),
        float(red_prof.height_cm - blue_prof.height_cm),
        float(red_cum.knockdowns - blue_cum.knockdowns),
        float(red_cum.total_strikes_attempted - blue_cum.total_strikes_attempted),
        float(red_cum.sig_strikes_landed - blue_cum.sig_strikes_landed),
        float(red_cum.sig_strikes_landed_body - blue_cum.sig_strikes_landed_body),
        float(red_cum.sig_strikes_landed_leg - blue_cum.sig_strikes_landed_leg),
        (red_cum.control_time_sec - blue_cum.control_time_sec) / 60.0,
        float(red_cum.takedowns_successful - blue_cum.takedowns_successful),
        float(red_cum.takedowns_attempted - blue_cum.takedowns_attempted),
        float(red_cum.submission_attempts - blue_cum.submission_attempts),
    )
    return FeatureVector(layout="winner11", values=values)
