"""Command-line entry point: fit, evaluate, predict, replay, serve, backtest."""

from __future__ import annotations

import argparse
import datetime as dt
import json
import sys
from pathlib import Path


from . import __version__
from .betting import backtest_ledger, load_backtest_rows, settle_ledger
from .domain import LAYOUTS, FeatureVector, MajorityScore
from .errors import CagecastError
from .evaluation import auc_with_ci, calibration_table, confusion_summary, score_accuracy
from .glm import (
    LogisticModel,
    OrdinalModel,
    fit_binary_logistic,
    fit_proportional_odds,
    load_model,
    predict_binary,
    predict_ordinal,
    predict_proba,
    save_model,
)
from .live import replay as run_replay
from .pipeline import (
    SPLIT_PRESETS,
    build_round_dataset,
    build_winner_dataset,
    load_fight_dataset,
    load_scorecards,
    merge_scorecards,
    temporal_split,
)
from .service import ServiceConfig, serve


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 2
    try:
        return args.func(args)
    except CagecastError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cagecast",
                                     description="MMA live prediction toolkit")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command")
    parser.set_defaults(command=None)

    p_fit = sub.add_parser("fit", help="fit a model from historical CSVs")
    p_fit.add_argument("--fights", required=True)
    p_fit.add_argument("--scorecards", help="required for the round-score model")
    p_fit.add_argument("--model", required=True,
                       choices=["round_score", "winner_r1", "winner_r2"])
    p_fit.add_argument("--out", required=True)
    p_fit.add_argument("--cutoff", help="train on fights strictly before this date "
                                        "(default: the model's preset)")
    p_fit.add_argument("--report", help="write the filter report JSON here")
    p_fit.set_defaults(func=cmd_fit)

    p_eval = sub.add_parser("evaluate", help="evaluate a model on a dataset")
    p_eval.add_argument("--model", required=True)
    p_eval.add_argument("--fights", required=True)
    p_eval.add_argument("--scorecards")
    p_eval.add_argument("--through-round", type=int, choices=[1, 2], default=2,
                        help="feature window for winner models")
    p_eval.add_argument("--cutoff", help="evaluate on fights on/after this date "
                                         "(default: the model's preset)")
    p_eval.add_argument("--cutpoint", type=float, default=0.5,
                        help="classification cutoff for the winner models")
    p_eval.add_argument("--calibration-csv", help="export calibration buckets here")
    p_eval.set_defaults(func=cmd_evaluate)

    p_pred = sub.add_parser("predict", help="predict from a model and one feature row")
    p_pred.add_argument("--model", required=True)
    group = p_pred.add_mutually_exclusive_group(required=True)
    group.add_argument("--zeros", action="store_true",
                       help="use an all-zero feature vector")
    group.add_argument("--features", help="JSON object of feature name -> value")
    p_pred.set_defaults(func=cmd_predict)

    p_replay = sub.add_parser("replay", help="replay a snapshot fixture to an event log")
    p_replay.add_argument("--fixture", required=True)
    p_replay.add_argument("--round-model", required=True)
    p_replay.add_argument("--winner-model", required=True)
    p_replay.add_argument("--speed", type=float, default=0.0,
                          help="pace multiplier; 0 = as fast as possible")
    p_replay.set_defaults(func=cmd_replay)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--config", help="service config JSON file")
    p_serve.add_argument("--listen", help="host:port")
    p_serve.add_argument("--data-dir")
    p_serve.add_argument("--round-model")
    p_serve.add_argument("--winner-model")
    p_serve.add_argument("--fixture", help="replay this snapshot log on startup")
    p_serve.add_argument("--speed", type=float, default=None)
    p_serve.set_defaults(func=cmd_serve)

    p_back = sub.add_parser("backtest", help="settle a backtest sheet into a ledger report")
    p_back.add_argument("--fixture", required=True)
    p_back.add_argument("--stake", type=float, default=100.0)
    p_back.add_argument("--selection", choices=["recorded", "rule"], default="recorded",
                        help="settle the recorded bets or re-derive them from the rule")
    p_back.set_defaults(func=cmd_backtest)
    return parser


def _load_merged_fights(args):
    fights, diags = load_fight_dataset(args.fights)
    for diag in diags:
        print(f"fights.csv {diag}", file=sys.stderr)
    if args.scorecards:
        cards, card_diags = load_scorecards(args.scorecards)
        for diag in card_diags:
            print(f"scorecards.csv {diag}", file=sys.stderr)
        fights, merge_report = merge_scorecards(fights, cards)
        for miss in merge_report.unmatched:
            print(f"unmatched scorecard: {miss}", file=sys.stderr)
    return fights


def _build_bundle(model_kind: str, fights):
    if model_kind == "round_score":
        return build_round_dataset(fights)
    return build_winner_dataset(fights, through_round=1 if model_kind == "winner_r1" else 2)


def _preset_cutoff(model_kind: str) -> dt.date:
    return SPLIT_PRESETS["round_score" if model_kind == "round_score" else "winner"]


def cmd_fit(args) -> int:
    if args.model == "round_score" and not args.scorecards:
        print("error: --scorecards is required for the round-score model", file=sys.stderr)
        return 1
    fights = _load_merged_fights(args)
    bundle = _build_bundle(args.model, fights)
    cutoff = dt.date.fromisoformat(args.cutoff) if args.cutoff else _preset_cutoff(args.model)
    train, test = temporal_split(bundle, cutoff)
    print(f"rows: {len(bundle)} total, {len(train)} train (before {cutoff}), "
          f"{len(test)} test")
    if len(train) == 0:
        print(f"error: no training rows before {cutoff}; pass an explicit --cutoff",
              file=sys.stderr)
        return 1
    if args.model == "round_score":
        model, report = fit_proportional_odds(train.features, train.targets)
    else:
        model, report = fit_binary_logistic(train.features, train.targets)
    save_model(args.out, model, report, version=__version__)
    print(report.format_table())
    if args.report and bundle.filter_report is not None:
        Path(args.report).write_text(json.dumps(bundle.filter_report.as_dict(), indent=2))
        print(f"filter report written to {args.report}")
    print(f"model written to {args.out}")
    return 0


def cmd_evaluate(args) -> int:
    model = load_model(args.model)
    fights = _load_merged_fights(args)
    if isinstance(model, OrdinalModel):
        bundle = build_round_dataset(fights)
        preset = SPLIT_PRESETS["round_score"]
    else:
        bundle = build_winner_dataset(fights, through_round=args.through_round)
        preset = SPLIT_PRESETS["winner"]
    cutoff = dt.date.fromisoformat(args.cutoff) if args.cutoff else preset
    _, test = temporal_split(bundle, cutoff)
    if len(test) == 0:
        print("error: no evaluation rows on/after the cutoff", file=sys.stderr)
        return 1

    if isinstance(model, OrdinalModel):
        predicted, actual, red_round_probs, red_round_wins = [], [], [], []
        for row, target in zip(test.features, test.targets):
            probs, score = predict_ordinal(
                model, FeatureVector(layout="round9", values=tuple(row)))
            predicted.append(score)
            actual.append(MajorityScore.from_margin(int(target)))
            positive = [p for cat, p in zip(model.categories, probs) if cat >= 1]
            red_round_probs.append(float(sum(positive)))
            red_round_wins.append(1 if target >= 1 else 0)
        contingency = score_accuracy(predicted, actual)
        print(contingency.format_table())
        table = calibration_table(red_round_probs, red_round_wins)
    else:
        probs = predict_proba(model, test.features)
        summary = confusion_summary(probs, test.targets, cutoff=args.cutpoint)
        print(json.dumps(summary.as_dict(), indent=2))
        estimate, lo, hi = auc_with_ci(probs, test.targets)
        print(f"AUC {estimate:.4f} (95% CI {lo:.4f}-{hi:.4f})")
        table = calibration_table(probs, test.targets)
    occupied = table.occupied()
    print(f"calibration: {len(occupied)} occupied buckets over {table.total} rows")
    for b in occupied:
        print(f"  [{b.low:.1f}, {b.high:.1f}{']' if b.high == 1.0 else ')'} "
              f"n={b.count:<6} predicted {b.mean_predicted:.3f} observed {b.observed_rate:.3f}")
    if args.calibration_csv:
        Path(args.calibration_csv).write_text(table.to_csv())
        print(f"calibration CSV written to {args.calibration_csv}")
    return 0


def cmd_predict(args) -> int:
    model = load_model(args.model)
    layout = model.layout
    names = LAYOUTS.get(layout, model.coefficient_names)
    if args.zeros:
        values = {name: 0.0 for name in names}
    else:
        values = {name: 0.0 for name in names}
        overrides = json.loads(args.features)
        unknown = set(overrides) - set(names)
        if unknown:
            print(f"error: unknown feature names {sorted(unknown)}", file=sys.stderr)
            return 1
        values.update({k: float(v) for k, v in overrides.items()})
    vec = FeatureVector(layout=layout, values=tuple(values[n] for n in names))
    if isinstance(model, LogisticModel):
        p = predict_binary(model, vec)
        print(f"{p:.4f}")
    else:
        probs, score = predict_ordinal(model, vec)
        print(f"predicted score {score.red_points}-{score.blue_points} "
              f"(margin {score.margin:+d})")
        for cat, p in zip(model.categories, probs):
            print(f"  margin {cat:+d}: {p:.4f}")
    return 0


def cmd_replay(args) -> int:
    round_model = load_model(args.round_model)
    winner_model = load_model(args.winner_model)
    _, events = run_replay(args.fixture, round_model, winner_model, speed=args.speed)
    for event in events:
        print(event.canonical_json())
    print(f"{len(events)} events", file=sys.stderr)
    return 0


def cmd_serve(args) -> int:
    if args.config:
        config = ServiceConfig.from_file(args.config)
    else:
        config = ServiceConfig()
    updates = {}
    if args.listen:
        host, _, port = args.listen.rpartition(":")
        updates["listen_host"] = host or config.listen_host
        updates["listen_port"] = int(port)
    if args.data_dir:
        updates["data_dir"] = args.data_dir
    if args.round_model:
        updates["round_model_path"] = args.round_model
    if args.winner_model:
        updates["winner_model_path"] = args.winner_model
    if args.fixture:
        updates["replay_fixture"] = args.fixture
    if args.speed is not None:
        updates["replay_speed"] = args.speed
    if updates:
        from dataclasses import replace
        config = replace(config, **updates)
    config = config.with_env_overrides()
    serve(config)
    return 0


def cmd_backtest(args) -> int:
    rows = load_backtest_rows(args.fixture)
    entries = backtest_ledger(rows, stake=args.stake, selection=args.selection)
    if not entries:
        print("no bets selected", file=sys.stderr)
        return 1
    summary = settle_ledger(entries)
    print(f"bets settled: {len(entries)} "
          f"(won {summary.won}, lost {summary.lost}, void {summary.void})")
    print(f"hit rate:     {summary.hit_rate * 100:.2f}%")
    print(f"average odds: {summary.average_odds:.3f}")
    print(f"total staked: {summary.total_staked:.2f}")
    print(f"net profit:   {summary.net_profit:+.2f}")
    print(f"ROI:          {summary.roi * 100:.2f}%")
    return 0


if __name__ == "__main__":
    sys.exit(main())
