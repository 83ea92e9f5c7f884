#!/usr/bin/env python3
"""Regenerate the bundled demo data under src/cagecast/data/.

Outputs: demonstration model files, three replay snapshot logs, the 2023
live-odds backtest sheet, and a small sample of the historical CSV schema.
Deterministic by construction; rerun after changing any of the recipes.
"""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from cagecast import __version__  # noqa: E402
from cagecast.domain import FighterProfile, RoundStatLine  # noqa: E402
from cagecast.glm import LogisticModel, OrdinalModel, save_model  # noqa: E402
from cagecast.live import FightMeta, LiveSnapshot, write_snapshot_log  # noqa: E402

DATA = ROOT / "src" / "cagecast" / "data"
MODELS = DATA / "models"

# Demonstration coefficients: representative effect sizes for each regressor,
# shipped so replay and the service work out of the box. Retrain on your own
# data with `cagecast fit` for anything that matters.
ROUND_SCORE_COEFS = [
    ("knockdowns", 1.611),
    ("sig_strikes_landed", 0.154),
    ("total_strikes_attempted", 0.016),
    ("sig_strikes_landed_body", -0.056),
    ("sig_strikes_landed_leg", -0.054),
    ("takedowns_successful", 0.509),
    ("takedowns_attempted", -0.133),
    ("submission_attempts", 0.804),
    ("control_time", 0.590),
]
ROUND_SCORE_THRESHOLDS = [-7.8, -4.3, -0.35, -0.33, 3.58, 10.0]

WINNER_R1 = {
    "intercept": 0.261,
    "coefs": [
        ("age", -0.038), ("height", -0.002), ("knockdowns", -0.082),
        ("total_strikes_attempted", 0.007), ("sig_strikes_landed", 0.061),
        ("sig_strikes_landed_body", -0.008), ("sig_strikes_landed_leg", -0.022),
        ("control_time", 0.069), ("takedowns_successful", 0.281),
        ("takedowns_attempted", -0.025), ("submission_attempts", 0.144),
    ],
}
WINNER_R2 = {
    "intercept": 0.281,
    "coefs": [
        ("age", -0.019), ("height", -0.001), ("knockdowns", 0.215),
        ("total_strikes_attempted", 0.006), ("sig_strikes_landed", 0.071),
        ("sig_strikes_landed_body", -0.011), ("sig_strikes_landed_leg", -0.025),
        ("control_time", 0.179), ("takedowns_successful", 0.275),
        ("takedowns_attempted", -0.062), ("submission_attempts", 0.220),
    ],
}


def write_models() -> None:
    MODELS.mkdir(parents=True, exist_ok=True)
    ordinal = OrdinalModel(
        thresholds=tuple(ROUND_SCORE_THRESHOLDS),
        coefficient_names=tuple(n for n, _ in ROUND_SCORE_COEFS),
        coefficients=tuple(v for _, v in ROUND_SCORE_COEFS),
    )
    save_model(MODELS / "round_score.json", ordinal, version=f"demo-{__version__}")
    for name, spec in (("winner_round1.json", WINNER_R1), ("winner_round2.json", WINNER_R2)):
        model = LogisticModel(
            intercept=spec["intercept"],
            coefficient_names=tuple(n for n, _ in spec["coefs"]),
            coefficients=tuple(v for _, v in spec["coefs"]),
        )
        save_model(MODELS / name, model, version=f"demo-{__version__}")


def stats(kd, sig, tot, body, leg, tds, tda, sub, ctrl) -> RoundStatLine:
    return RoundStatLine(
        knockdowns=kd, sig_strikes_landed=sig, total_strikes_attempted=tot,
        sig_strikes_landed_body=body, sig_strikes_landed_leg=leg,
        takedowns_successful=tds, takedowns_attempted=tda,
        submission_attempts=sub, control_time_sec=ctrl,
    )


def snap(fight_id, ts, rnd, clock, red, blue) -> LiveSnapshot:
    return LiveSnapshot(fight_id=fight_id, timestamp=ts, round=rnd,
                        clock_seconds=clock, red=red, blue=blue)


def write_replay_3round() -> None:
    fid = "vegas70-osbourne-johnson"
    meta = FightMeta(
        fight_id=fid,
        event_name="UFC Vegas 70",
        scheduled_rounds=3,
        red=FighterProfile("Ode Osbourne", age_at_fight=31, height_cm=178.0),
        blue=FighterProfile("Charles Johnson", age_at_fight=32, height_cm=177.0),
    )
    def t(minute: int, second: int) -> str:
        return f"2023-02-26T03:{minute:02d}:{second:02d}+00:00"

    snapshots = [
        # round 1
        snap(fid, t(10, 0), 1, 55, stats(0, 6, 15, 2, 1, 0, 1, 0, 20), stats(0, 7, 16, 1, 2, 0, 0, 0, 5)),
        snap(fid, t(12, 0), 1, 175, stats(1, 14, 33, 4, 2, 1, 2, 0, 55), stats(0, 12, 30, 3, 4, 0, 1, 0, 20)),
        snap(fid, t(14, 5), 1, 298, stats(1, 20, 50, 5, 3, 1, 2, 0, 80), stats(0, 18, 47, 4, 5, 0, 1, 0, 30)),
        # round 2 (index increment freezes round 1 at the snapshot above)
        snap(fid, t(15, 30), 2, 28, stats(1, 23, 57, 6, 3, 1, 2, 0, 88), stats(0, 21, 54, 5, 5, 0, 1, 0, 36)),
        snap(fid, t(17, 30), 2, 150, stats(1, 30, 75, 7, 5, 1, 3, 0, 104), stats(0, 27, 70, 7, 6, 0, 1, 0, 52)),
        snap(fid, t(19, 59), 2, 299, stats(1, 38, 95, 9, 6, 1, 3, 0, 120), stats(0, 33, 86, 8, 8, 0, 1, 0, 70)),
        # round 3 (index increment freezes round 2; winner prediction fires)
        snap(fid, t(21, 0), 3, 20, stats(1, 40, 99, 9, 6, 1, 3, 0, 124), stats(0, 35, 90, 8, 9, 0, 1, 0, 72)),
        snap(fid, t(22, 20), 3, 100, stats(1, 44, 110, 10, 7, 2, 4, 0, 150), stats(0, 41, 103, 9, 10, 0, 2, 0, 80)),
        # downward correction on blue significant strikes (feed revision)
        snap(fid, t(23, 20), 3, 160, stats(1, 47, 117, 11, 8, 2, 4, 0, 160), stats(0, 40, 108, 10, 10, 0, 2, 1, 85)),
        snap(fid, t(24, 50), 3, 250, stats(1, 50, 124, 12, 9, 2, 4, 0, 172), stats(0, 45, 118, 11, 11, 0, 2, 1, 90)),
        # clock reaches 300: freezes round 3
        snap(fid, t(25, 40), 3, 300, stats(1, 52, 130, 12, 9, 2, 4, 0, 180), stats(0, 49, 125, 11, 12, 0, 2, 1, 95)),
    ]
    write_snapshot_log(DATA / "replay_3round_decision.jsonl", meta, snapshots)


def write_replay_5round() -> None:
    fid = "demo-title-5round"
    meta = FightMeta(
        fight_id=fid,
        event_name="Demo Championship Night",
        scheduled_rounds=5,
        red=FighterProfile("Rivera", age_at_fight=29, height_cm=180.0),
        blue=FighterProfile("Sato", age_at_fight=33, height_cm=175.0),
    )
    def t(minute: int, second: int) -> str:
        return f"2023-03-05T04:{minute:02d}:{second:02d}+00:00"

    cum_red = [
        stats(0, 15, 40, 4, 3, 1, 2, 0, 60),
        stats(0, 31, 82, 8, 6, 1, 3, 0, 110),
        stats(1, 49, 128, 12, 9, 2, 4, 0, 180),
        stats(1, 63, 165, 15, 12, 2, 5, 1, 230),
        stats(1, 80, 205, 19, 15, 3, 6, 1, 290),
    ]
    cum_blue = [
        stats(0, 12, 38, 3, 4, 0, 1, 0, 40),
        stats(0, 26, 80, 7, 8, 0, 2, 0, 75),
        stats(0, 44, 126, 11, 12, 1, 3, 0, 120),
        stats(0, 60, 168, 14, 16, 1, 4, 0, 170),
        stats(0, 74, 210, 17, 20, 1, 5, 0, 220),
    ]
    snapshots = []
    minute = 0
    for rnd in range(1, 6):
        mid_red = cum_red[rnd - 2] if rnd > 1 else stats(0, 7, 20, 2, 1, 0, 1, 0, 30)
        mid_blue = cum_blue[rnd - 2] if rnd > 1 else stats(0, 6, 19, 1, 2, 0, 0, 0, 22)
        snapshots.append(snap(fid, t(10 + minute // 60, minute % 60), rnd, 150,
                              mid_red, mid_blue))
        minute += 3
        clock = 300 if rnd == 5 else 295
        snapshots.append(snap(fid, t(10 + minute // 60, minute % 60), rnd, clock,
                              cum_red[rnd - 1], cum_blue[rnd - 1]))
        minute += 3
    write_snapshot_log(DATA / "replay_5round.jsonl", meta, snapshots)


def write_replay_ko() -> None:
    fid = "demo-ko-r3"
    meta = FightMeta(
        fight_id=fid,
        event_name="Demo Fight Night",
        scheduled_rounds=3,
        red=FighterProfile("Keller", age_at_fight=27, height_cm=183.0),
        blue=FighterProfile("Drummond", age_at_fight=30, height_cm=185.0),
    )
    def t(minute: int, second: int) -> str:
        return f"2023-04-09T02:{minute:02d}:{second:02d}+00:00"

    snapshots = [
        snap(fid, t(0, 0), 1, 120, stats(0, 9, 22, 2, 2, 0, 0, 0, 10), stats(0, 11, 25, 3, 3, 0, 1, 0, 30)),
        snap(fid, t(2, 30), 1, 290, stats(0, 17, 45, 4, 4, 0, 1, 0, 25), stats(0, 22, 50, 6, 5, 1, 2, 0, 70)),
        snap(fid, t(4, 0), 2, 60, stats(0, 20, 52, 5, 4, 0, 1, 0, 30), stats(0, 26, 60, 7, 6, 1, 2, 0, 85)),
        snap(fid, t(6, 30), 2, 280, stats(0, 30, 80, 8, 6, 0, 2, 0, 45), stats(1, 40, 92, 10, 9, 2, 3, 1, 140)),
        snap(fid, t(8, 0), 3, 40, stats(0, 33, 86, 9, 6, 0, 2, 0, 50), stats(1, 44, 100, 11, 10, 2, 3, 1, 150)),
        # fight ends by KO at 3:07 of round 3: no further snapshots
        snap(fid, t(9, 30), 3, 187, stats(0, 36, 94, 10, 7, 0, 2, 0, 55), stats(2, 52, 112, 13, 11, 2, 3, 1, 165)),
    ]
    write_snapshot_log(DATA / "replay_3round_ko.jsonl", meta, snapshots)


BACKTEST_ROWS = [
    # event, red, blue, odds_r, odds_b, p_red_pct, predicted, actual, selected, ev, net
    ("UFC Vegas 70", "Osbourne", "Johnson", "4.4", "1.19", "77.94", "red", "red", "1", "242.94", "340"),
    ("UFC Vegas 70", "Jasudavicius", "Fernandes", "1.08", "", "98.66", "red", "red", "0", "", ""),
    ("UFC Vegas 70", "Sakai", "Mayes", "1.14", "", "92.61", "red", "red", "0", "", ""),
    ("UFC Vegas 70", "Muniz", "Allen", "3.55", "", "27.94", "blue", "blue", "0", "", ""),
    ("UFC 285", "Araújo", "Ribas", "3.6", "1.23", "9.95", "blue", "blue", "1", "10.76", "23"),
    ("UFC 285", "Garbrandt", "Jones", "1.09", "6.5", "87.96", "red", "red", "0", "", ""),
    ("UFC ESPN+ 79", "Assunção", "Grant", "1.58", "2.18", "59.36", "red", "blue", "0", "", ""),
    ("UFC ESPN+ 79", "Williams", "Brzeski", "1.2", "3.9", "96.11", "red", "red", "1", "15.33", "20"),
    ("UFC ESPN+ 79", "Petrino", "Turkalj", "1.67", "2.04", "87.42", "red", "red", "1", "45.99", "67"),
    ("UFC ESPN+ 79", "Nurmagomedov", "Martinez", "1.8", "1.86", "66.61", "red", "blue", "1", "19.90", "-100"),
    ("UFC 286", "Miller", "Hardy", "3.4", "1.28", "19.12", "blue", "blue", "0", "", ""),
    ("UFC 286", "Herbert", "Klein", "1.62", "2.16", "39.76", "blue", "draw", "0", "", ""),
    ("UFC 286", "Wood", "Carolina", "1.09", "7", "59.18", "red", "red", "0", "", ""),
    ("UFC 286", "Murphy", "Santos", "2.33", "1.52", "52.56", "red", "red", "1", "22.46", "133"),
    ("UFC 286", "Mokaev", "Filho", "1.02", "12.5", "82.03", "red", "red", "0", "", ""),
    ("UFC 286", "Duncan", "Morales", "1.82", "1.85", "67.34", "red", "red", "1", "22.56", "82"),
    ("UFC 286", "Vettori", "Dolidze", "2.85", "1.37", "74.23", "red", "red", "1", "111.56", "185"),
    ("UFC 286", "Maia", "O'Neill", "1.09", "7", "92.00", "red", "red", "0", "", ""),
    ("UFC 286", "Gaethje", "Fiziev", "2.45", "1.52", "42.27", "blue", "red", "0", "", ""),
    ("UFC ESPN 43", "Altamirano", "Salvador", "1.85", "1.85", "78.28", "red", "red", "1", "44.82", "85"),
    ("UFC ESPN 43", "Giles", "Parsons", "1.24", "3.65", "52.31", "red", "red", "0", "", ""),
    ("UFC ESPN 43", "Peterson", "Alexander", "13", "1.02", "6.46", "blue", "blue", "0", "", ""),
    ("UFC ESPN 43", "Njokuani", "Duraev", "2.8", "1.4", "9.56", "blue", "blue", "1", "26.62", "40"),
    ("UFC ESPN 43", "Lee", "Barber", "1.84", "1.82", "62.84", "red", "blue", "1", "15.63", "-100"),
    ("UFC ESPN 43", "Holm", "Santos", "1.02", "12", "94.87", "red", "red", "0", "", ""),
    ("UFC 287", "Amorim", "Hughes", "3.3", "1.29", "", "", "blue", "0", "", ""),
    ("UFC 287", "Bahamondes", "Ogden", "1.12", "6", "85.73", "red", "red", "0", "", ""),
    ("UFC 287", "Calvillo", "Godinez", "2.6", "1.43", "66.84", "red", "blue", "1", "73.78", "-100"),
    ("UFC 287", "Waterson-Gomez", "Pinheiro", "3.1", "1.32", "72.61", "red", "blue", "1", "125.09", "-100"),
    ("UFC 287", "Curtis", "Gastelum", "3.65", "1.25", "32.63", "blue", "blue", "0", "", ""),
    ("UFC 287", "Rosas Jr.", "Rodriguez", "3.25", "1.39", "37.79", "blue", "blue", "0", "", ""),
    ("UFC ESPN 44", "Edwards", "Pudilova", "18", "1.01", "50.47", "red", "red", "1", "808.46", "1700"),
    ("UFC ESPN 44", "Phillips", "Bolanos", "3.35", "1.29", "27.64", "blue", "blue", "0", "", ""),
    ("UFC ESPN 44", "Vannata", "Zellhuber", "3.65", "1.25", "9.14", "blue", "blue", "0", "", ""),
    ("UFC ESPN 44", "Cummings", "Herman", "1.01", "17", "98.14", "red", "red", "0", "", ""),
    ("UFC ESPN 44", "Guida", "Garcia", "15", "1.02", "11.1", "blue", "blue", "0", "", ""),
    ("UFC ESPN 44", "Munhoz", "Gutierrez", "1.23", "3.8", "66.08", "red", "red", "0", "", ""),
    ("UFC ESPN 44", "Jacoby", "Murzakanov", "9", "1.06", "11.71", "blue", "blue", "0", "", ""),
    ("UFC Vegas 71", "Hiestand", "Batgerel", "5.5", "1.13", "28.264", "red", "red", "0", "", ""),
    ("UFC Vegas 71", "Marshall", "Gomis", "2.48", "1.48", "50.739", "red", "blue", "1", "25.83", "-100"),
    ("UFC Vegas 71", "Usman", "Tafa", "1.75", "1.97", "91.054", "red", "red", "1", "59.34", "75"),
    ("UFC Vegas 71", "Rosa", "Dumont", "5.1", "1.15", "67.537", "red", "blue", "1", "244.44", "-100"),
    ("UFC Vegas 71", "Wells", "Semelsberger", "1.73", "2", "99.128", "red", "red", "1", "71.49", "73"),
    ("UFC Vegas 71", "Lucindo", "Walker", "1.02", "14", "89.809", "red", "red", "0", "", ""),
]


# break-even percentages as printed on the recorded sheet (None = not noted)
PRINTED_IMPLIED = [
    (22.73, 84.03), (92.59, None), (87.72, None), (28.17, None),
    (27.78, 81.30), (91.74, 15.39), (63.29, 45.87), (83.33, 25.64),
    (59.88, 49.02), (55.56, 53.76), (29.41, 78.13), (61.73, 46.30),
    (91.74, 14.29), (42.92, 65.79), (98.04, 8.0), (54.95, 54.05),
    (35.09, 72.99), (91.74, 14.29), (40.82, 65.79), (54.05, 54.05),
    (80.65, 27.40), (7.69, 98.04), (35.71, 71.43), (54.35, 54.95),
    (98.04, 8.33), (30.3, 77.52), (89.29, 16.67), (38.46, 69.93),
    (32.26, 75.76), (27.4, 80.0), (30.77, 71.94), (5.56, 99.01),
    (29.85, 77.52), (27.4, 80.0), (99.01, 5.88), (6.67, 98.04),
    (81.3, 26.32), (11.11, 94.34), (18.182, 88.496), (40.323, 67.568),
    (57.143, 50.761), (19.608, 86.957), (57.803, 50.0), (98.039, 7.143),
]


def write_backtest_sheet() -> None:
    header = ["event", "red_name", "blue_name", "odds_red", "odds_blue", "p_red_pct",
              "predicted", "actual", "selected", "ev_per_100", "net_profit_per_100"]
    with open(DATA / "live_odds_backtest_2023.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(BACKTEST_ROWS)
    assert len(PRINTED_IMPLIED) == len(BACKTEST_ROWS)
    (DATA / "implied_probabilities_2023.json").write_text(
        json.dumps([list(pair) for pair in PRINTED_IMPLIED], indent=0) + "\n")


def write_sample_history() -> None:
    """Twelve synthetic fights in the documented per-round CSV schema."""
    header = [
        "event", "date", "red_name", "blue_name",
        "red_age", "red_height_cm", "blue_age", "blue_height_cm",
        "scheduled_rounds", "outcome", "finish_round", "round",
        "red_kd", "red_sig_landed", "red_total_att", "red_sig_body", "red_sig_leg",
        "red_td_succ", "red_td_att", "red_sub_att", "red_ctrl_sec",
        "blue_kd", "blue_sig_landed", "blue_total_att", "blue_sig_body", "blue_sig_leg",
        "blue_td_succ", "blue_td_att", "blue_sub_att", "blue_ctrl_sec",
    ]
    # (event, date, red, blue, red_age, red_h, blue_age, blue_h, sched, outcome,
    #  finish, rounds[(red stats...), (blue stats...)])
    r = lambda *v: list(v)  # noqa: E731
    fights = [
        ("Demo Fight Night 1", "2019-05-04", "Alvarez", "Becker", 28, 175, 31, 178, 3, "red_win", 3,
         [(r(0, 18, 44, 5, 3, 1, 2, 0, 75), r(0, 12, 40, 3, 4, 0, 1, 0, 30)),
          (r(0, 14, 38, 4, 2, 0, 1, 0, 40), r(0, 16, 42, 5, 5, 1, 2, 0, 65)),
          (r(1, 22, 50, 6, 4, 1, 1, 1, 90), r(0, 10, 35, 2, 3, 0, 1, 0, 20))]),
        ("Demo Fight Night 1", "2019-05-04", "Costa", "Dunn", 26, 180, 29, 182, 3, "blue_win", 2,
         [(r(0, 11, 30, 3, 2, 0, 1, 0, 25), r(0, 15, 34, 4, 3, 1, 2, 0, 70)),
          (r(0, 6, 15, 1, 1, 0, 0, 0, 10), r(1, 13, 22, 3, 2, 1, 1, 0, 95))]),
        ("Demo Fight Night 1", "2019-05-04", "Eng", "Farias", 33, 168, 27, 170, 3, "red_win", 3,
         [(r(0, 20, 52, 6, 5, 2, 3, 1, 120), r(0, 14, 45, 4, 6, 0, 2, 0, 35)),
          (r(0, 17, 46, 5, 4, 1, 2, 0, 95), r(0, 15, 44, 5, 5, 0, 1, 0, 50)),
          (r(0, 19, 49, 5, 4, 1, 2, 1, 110), r(0, 13, 40, 3, 4, 0, 1, 0, 30))]),
        ("Demo Fight Night 1", "2019-05-04", "Gibbs", "Horvat", 30, 185, 30, 188, 3, "draw", 3,
         [(r(0, 16, 40, 4, 4, 0, 1, 0, 60), r(0, 16, 41, 5, 3, 0, 1, 0, 55)),
          (r(0, 15, 39, 4, 4, 1, 2, 0, 70), r(0, 14, 38, 4, 4, 0, 1, 0, 45)),
          (r(0, 13, 36, 3, 3, 0, 1, 0, 40), r(0, 17, 43, 5, 5, 1, 2, 0, 80))]),
        ("Demo Fight Night 1", "2019-05-04", "Ito", "Juarez", 24, 172, 35, 169, 5, "red_win", 5,
         [(r(0, 21, 55, 6, 4, 1, 2, 0, 85), r(0, 15, 48, 4, 5, 0, 1, 0, 40)),
          (r(0, 18, 50, 5, 4, 1, 2, 0, 75), r(0, 16, 47, 4, 5, 0, 2, 0, 55)),
          (r(1, 24, 58, 7, 5, 1, 1, 1, 100), r(0, 12, 42, 3, 4, 0, 1, 0, 25)),
          (r(0, 17, 45, 4, 3, 0, 1, 0, 60), r(0, 18, 49, 5, 5, 1, 2, 0, 70)),
          (r(0, 20, 52, 5, 4, 1, 2, 0, 80), r(0, 14, 44, 4, 4, 0, 1, 0, 35))]),
        ("Demo Fight Night 1", "2019-05-04", "Kim", "Lopez", 29, 177, 28, 176, 3, "no_contest", 1,
         [(r(0, 5, 14, 1, 1, 0, 0, 0, 15), r(0, 6, 16, 2, 1, 0, 1, 0, 20))]),
        ("Demo Fight Night 2", "2021-10-16", "Mendes", "Novak", 31, 179, 26, 181, 3, "red_win", 3,
         [(r(1, 19, 47, 5, 3, 0, 1, 0, 65), r(0, 13, 41, 4, 4, 0, 1, 0, 30)),
          (r(0, 16, 43, 4, 3, 1, 2, 0, 85), r(0, 15, 42, 4, 4, 0, 1, 0, 45)),
          (r(0, 18, 46, 5, 4, 1, 2, 0, 75), r(0, 14, 40, 4, 3, 0, 1, 0, 40))]),
        ("Demo Fight Night 2", "2021-10-16", "Okafor", "Petrov", 27, 190, 32, 193, 3, "blue_win", 3,
         [(r(0, 12, 36, 3, 3, 0, 1, 0, 35), r(0, 17, 44, 5, 4, 1, 2, 0, 85)),
          (r(0, 14, 39, 4, 3, 0, 1, 0, 45), r(0, 16, 43, 5, 4, 1, 1, 0, 75)),
          (r(0, 11, 33, 3, 2, 0, 1, 0, 30), r(0, 18, 46, 5, 5, 1, 2, 1, 95))]),
        ("Demo Fight Night 2", "2021-10-16", "Quinn", "Ramos", 25, 174, 28, "", 3, "red_win", 1,
         [(r(1, 15, 28, 4, 2, 0, 0, 0, 40), r(0, 8, 20, 2, 2, 0, 1, 0, 25))]),
        ("Demo Fight Night 2", "2021-10-16", "Silva", "Torres", 34, 183, 29, 184, 3, "blue_win", 3,
         [(r(0, 13, 38, 4, 3, 0, 2, 0, 50), r(0, 15, 41, 4, 4, 1, 2, 0, 60)),
          (r(0, 12, 36, 3, 3, 0, 1, 0, 45), r(0, 16, 42, 5, 4, 1, 2, 0, 70)),
          (r(0, 14, 39, 4, 3, 0, 1, 0, 55), r(0, 17, 44, 5, 5, 1, 2, 0, 80))]),
        ("Demo Fight Night 2", "2021-10-16", "Usov", "Vance", 30, 186, 31, 185, 3, "red_win", 2,
         [(r(0, 16, 42, 4, 3, 1, 2, 0, 70), r(0, 13, 39, 4, 4, 0, 1, 0, 40)),
          (r(1, 12, 25, 3, 2, 1, 1, 1, 80), r(0, 7, 18, 2, 2, 0, 0, 0, 15))]),
        ("Demo Fight Night 2", "2021-10-16", "Walsh", "Yamada", 28, 171, 27, 173, 3, "red_win", 3,
         [(r(0, 17, 43, 5, 3, 1, 2, 0, 80), r(0, 14, 40, 4, 4, 0, 1, 0, 35)),
          (r(0, 16, 41, 4, 3, 1, 2, 0, 75), r(0, 15, 41, 4, 4, 0, 1, 0, 50)),
          (r(0, 18, 45, 5, 4, 1, 1, 0, 85), r(0, 13, 38, 3, 3, 0, 1, 0, 30))]),
    ]
    with open(DATA / "sample_fights.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for (event, date, red, blue, ra, rh, ba, bh, sched, outcome, finish, rounds) in fights:
            for idx, (red_stats, blue_stats) in enumerate(rounds, start=1):
                writer.writerow([event, date, red, blue, ra, rh, ba, bh, sched,
                                 outcome, finish, idx, *red_stats, *blue_stats])

    # judge scores for every completed round of the decision fights; the
    # Gibbs-Horvat round 2 deliberately has three different scorecards
    scorecards = [
        ("Demo Fight Night 1", "Alvarez", "Becker", 1, 10, 9, 10, 9, 10, 9),
        ("Demo Fight Night 1", "Alvarez", "Becker", 2, 9, 10, 9, 10, 10, 9),
        ("Demo Fight Night 1", "Alvarez", "Becker", 3, 10, 8, 10, 9, 10, 8),
        ("Demo Fight Night 1", "Costa", "Dunn", 1, 9, 10, 9, 10, 9, 10),
        ("Demo Fight Night 1", "Eng", "Farias", 1, 10, 9, 10, 9, 10, 9),
        ("Demo Fight Night 1", "Eng", "Farias", 2, 10, 9, 10, 9, 9, 10),
        ("Demo Fight Night 1", "Eng", "Farias", 3, 10, 9, 10, 9, 10, 9),
        ("Demo Fight Night 1", "Gibbs", "Horvat", 1, 10, 9, 10, 9, 10, 9),
        ("Demo Fight Night 1", "Gibbs", "Horvat", 2, 9, 10, 10, 9, 10, 10),
        ("Demo Fight Night 1", "Gibbs", "Horvat", 3, 9, 10, 9, 10, 9, 10),
        ("Demo Fight Night 1", "Ito", "Juarez", 1, 10, 9, 10, 9, 10, 9),
        ("Demo Fight Night 1", "Ito", "Juarez", 2, 10, 9, 10, 9, 10, 9),
        ("Demo Fight Night 1", "Ito", "Juarez", 3, 10, 8, 10, 8, 10, 9),
        ("Demo Fight Night 1", "Ito", "Juarez", 4, 9, 10, 9, 10, 9, 10),
        ("Demo Fight Night 1", "Ito", "Juarez", 5, 10, 9, 10, 9, 10, 9),
        ("Demo Fight Night 2", "Mendes", "Novak", 1, 10, 9, 10, 9, 10, 9),
        ("Demo Fight Night 2", "Mendes", "Novak", 2, 10, 9, 10, 9, 10, 9),
        ("Demo Fight Night 2", "Mendes", "Novak", 3, 10, 9, 10, 9, 10, 9),
        ("Demo Fight Night 2", "Okafor", "Petrov", 1, 9, 10, 9, 10, 9, 10),
        ("Demo Fight Night 2", "Okafor", "Petrov", 2, 9, 10, 9, 10, 10, 9),
        ("Demo Fight Night 2", "Okafor", "Petrov", 3, 9, 10, 9, 10, 9, 10),
        ("Demo Fight Night 2", "Silva", "Torres", 1, 9, 10, 9, 10, 9, 10),
        ("Demo Fight Night 2", "Silva", "Torres", 2, 9, 10, 9, 10, 9, 10),
        ("Demo Fight Night 2", "Silva", "Torres", 3, 9, 10, 10, 9, 9, 10),
        ("Demo Fight Night 2", "Usov", "Vance", 1, 10, 9, 10, 9, 9, 10),
        ("Demo Fight Night 2", "Walsh", "Yamada", 1, 10, 9, 10, 9, 10, 9),
        ("Demo Fight Night 2", "Walsh", "Yamada", 2, 10, 9, 9, 10, 10, 9),
        ("Demo Fight Night 2", "Walsh", "Yamada", 3, 10, 9, 10, 9, 10, 9),
    ]
    with open(DATA / "sample_scorecards.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["event", "red_name", "blue_name", "round",
                         "j1_red", "j1_blue", "j2_red", "j2_blue", "j3_red", "j3_blue"])
        writer.writerows(scorecards)


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    write_models()
    write_replay_3round()
    write_replay_5round()
    write_replay_ko()
    write_backtest_sheet()
    write_sample_history()
    print(f"demo data written under {DATA}")


if __name__ == "__main__":
    main()
