"""Shared fixtures: bundled data paths, loaded demo models, and the
hand-constructed 30-fight corpus used for the pipeline audit."""

from __future__ import annotations

import datetime as dt
from importlib import resources
from pathlib import Path

import pytest

from cagecast.domain import (
    FighterProfile,
    FightRecord,
    JudgeRoundScore,
    Outcome,
    RoundObservation,
    RoundStatLine,
)
from cagecast.glm import load_model

DATA_DIR = Path(str(resources.files("cagecast") / "data"))


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def round_model():
    return load_model(DATA_DIR / "models" / "round_score.json")


@pytest.fixture(scope="session")
def winner_model_r1():
    return load_model(DATA_DIR / "models" / "winner_round1.json")


@pytest.fixture(scope="session")
def winner_model_r2():
    return load_model(DATA_DIR / "models" / "winner_round2.json")


def make_stats(sig=10, **overrides) -> RoundStatLine:
    base = dict(
        knockdowns=0, sig_strikes_landed=sig, total_strikes_attempted=sig * 2 + 5,
        sig_strikes_landed_body=2, sig_strikes_landed_leg=2,
        takedowns_successful=0, takedowns_attempted=1,
        submission_attempts=0, control_time_sec=45.0,
    )
    base.update(overrides)
    return RoundStatLine(**base)


def make_round(red_sig=12, blue_sig=10, scores=None) -> RoundObservation:
    return RoundObservation(
        red=make_stats(sig=red_sig),
        blue=make_stats(sig=blue_sig),
        judge_scores=scores,
    )


def unanimous(red_points: int, blue_points: int):
    score = JudgeRoundScore(red_points, blue_points)
    return (score, score, score)


def make_fight(
    event="Test Event",
    date=dt.date(2018, 6, 2),
    red_name="Red Fighter",
    blue_name="Blue Fighter",
    red_age=28,
    red_height=178.0,
    blue_age=30,
    blue_height=180.0,
    scheduled_rounds=3,
    outcome=Outcome.RED_WIN,
    finish_round=3,
    n_rounds=3,
    scored=True,
) -> FightRecord:
    rounds = tuple(
        make_round(scores=unanimous(10, 9) if scored else None)
        for _ in range(n_rounds)
    )
    return FightRecord(
        event_name=event,
        date=date,
        red=FighterProfile(red_name, red_age, red_height),
        blue=FighterProfile(blue_name, blue_age, blue_height),
        scheduled_rounds=scheduled_rounds,
        rounds=rounds,
        outcome=outcome,
        finish_round=finish_round,
    )


@pytest.fixture()
def audit_corpus() -> list[FightRecord]:
    """Thirty fights whose winner-model filter counts are known by hand.

    For through_round=2 the chain is 30 -> 26 (date) -> 21 (3-round)
    -> 15 (beyond round 2) -> 12 (profiles) -> 11 (round stats present);
    final outcomes: 6 red wins, 4 blue wins, 1 draw.
    """
    fights = []
    i = 0

    def add(**kwargs):
        nonlocal i
        i += 1
        defaults = dict(
            event=f"Audit Event {i}",
            red_name=f"Red {i}",
            blue_name=f"Blue {i}",
            date=dt.date(2015, 3, 14),
        )
        defaults.update(kwargs)
        fights.append(make_fight(**defaults))

    # 4 removed by the date rule (one exactly on the boundary's wrong side)
    add(date=dt.date(2008, 5, 10))
    add(date=dt.date(2009, 1, 1))
    add(date=dt.date(2009, 12, 31))
    add(date=dt.date(2005, 7, 4))
    # 5 removed as five-round bouts (modern dates)
    for _ in range(5):
        add(scheduled_rounds=5, n_rounds=5, finish_round=5)
    # 6 removed for ending in round <= 2 (2 in round 1, 4 in round 2)
    add(finish_round=1, n_rounds=1, outcome=Outcome.RED_WIN)
    add(finish_round=1, n_rounds=1, outcome=Outcome.BLUE_WIN)
    for _ in range(4):
        add(finish_round=2, n_rounds=2, outcome=Outcome.RED_WIN)
    # 3 removed for incomplete profiles
    add(red_age=None)
    add(blue_height=None)
    add(red_age=None, blue_height=None)
    # 1 removed for missing round rows (finished in 3, only round 1 recorded)
    add(n_rounds=1, finish_round=3)
    # 11 survivors: 6 red wins, 4 blue wins, 1 draw; two pin the split boundary
    add(outcome=Outcome.RED_WIN, date=dt.date(2010, 1, 1))
    add(outcome=Outcome.RED_WIN, date=dt.date(2019, 9, 17))
    add(outcome=Outcome.RED_WIN, date=dt.date(2019, 9, 18))
    add(outcome=Outcome.RED_WIN)
    add(outcome=Outcome.RED_WIN)
    add(outcome=Outcome.RED_WIN)
    add(outcome=Outcome.BLUE_WIN)
    add(outcome=Outcome.BLUE_WIN)
    add(outcome=Outcome.BLUE_WIN)
    add(outcome=Outcome.BLUE_WIN)
    add(outcome=Outcome.DRAW)
    assert len(fights) == 30
    return fights
