"""Value-bet rule, expected value, and ledger accounting."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cagecast.betting import (
    BetConfig,
    BetLedgerEntry,
    BetResult,
    OddsQuote,
    backtest_ledger,
    detect_value_bet,
    expected_value,
    implied_probability,
    load_backtest_rows,
    settle_ledger,
)
from cagecast.domain import Corner
from cagecast.errors import EmptyLedger, InvalidOdds


def quote(corner: Corner, odds: float, fight="f1") -> OddsQuote:
    return OddsQuote(fight_id=fight, corner=corner, decimal_odds=odds)


class TestImpliedProbability:
    def test_reference_values(self):
        assert implied_probability(4.4) == pytest.approx(0.2273, abs=5e-5)
        assert implied_probability(2.0) == 0.5
        assert implied_probability(1.19) == pytest.approx(0.8403, abs=5e-5)

    def test_rejects_odds_at_or_below_one(self):
        with pytest.raises(InvalidOdds):
            implied_probability(1.0)
        with pytest.raises(InvalidOdds):
            implied_probability(0.8)


class TestExpectedValue:
    def test_reference_rows(self):
        # oracle: p*stake*(odds-1) - (1-p)*stake
        assert expected_value(0.7794, 4.4, 100) == pytest.approx(242.94, abs=0.01)
        assert expected_value(0.5047, 18, 100) == pytest.approx(808.46, abs=0.01)

    def test_fair_odds_break_even(self):
        odds = 3.7
        assert expected_value(1 / odds, odds, 250.0) == pytest.approx(0.0, abs=1e-9)

    @given(st.floats(0, 1), st.floats(1.01, 50), st.floats(0.01, 1e4))
    def test_linear_in_stake(self, p, odds, stake):
        assert expected_value(p, odds, 2 * stake) == pytest.approx(
            2 * expected_value(p, odds, stake), rel=1e-9, abs=1e-9)

    @given(st.floats(0.001, 0.999), st.floats(1.01, 50))
    def test_positive_iff_p_exceeds_implied(self, p, odds):
        ev = expected_value(p, odds, 100.0)
        if p > implied_probability(odds) + 1e-12:
            assert ev > 0
        elif p < implied_probability(odds) - 1e-12:
            assert ev < 0


class TestDetectValueBet:
    def test_osbourne_scenario(self):
        signal = detect_value_bet(0.7794, quote(Corner.RED, 4.4), quote(Corner.BLUE, 1.19))
        assert signal is not None
        assert signal.corner is Corner.RED
        assert signal.edge == pytest.approx(0.5521, abs=5e-5)
        assert signal.ev_per_unit == pytest.approx(2.4294, abs=5e-5)

    def test_odds_below_minimum(self):
        assert detect_value_bet(0.95, quote(Corner.RED, 1.05), None) is None

    def test_negative_edge(self):
        assert detect_value_bet(0.55, quote(Corner.RED, 1.80), None) is None

    def test_blue_side_signal(self):
        signal = detect_value_bet(0.0995, quote(Corner.RED, 3.6), quote(Corner.BLUE, 1.23),
                                  BetConfig(edge_threshold=0.05))
        assert signal.corner is Corner.BLUE
        assert signal.model_probability == pytest.approx(0.9005)

    def test_edge_below_threshold_is_rejected_even_if_positive(self):
        # 0.9005 - 1/1.23 = 0.0875: below the 0.10 default
        assert detect_value_bet(0.0995, quote(Corner.RED, 3.6), quote(Corner.BLUE, 1.23)) is None

    def test_missing_quote_for_favored_corner(self):
        # model favors blue but only a red quote exists
        assert detect_value_bet(0.2794, quote(Corner.RED, 3.55), None) is None

    def test_exact_threshold_signals(self):
        # boundary values qualify ("at least"); exact binary fractions avoid
        # float noise: p=0.625 vs implied 0.5 is an edge of exactly 0.125
        cfg = BetConfig(edge_threshold=0.125, min_odds=2.0)
        signal = detect_value_bet(0.625, quote(Corner.RED, 2.0), None, cfg)
        assert signal is not None
        assert detect_value_bet(0.99, quote(Corner.RED, 1.20), None) is not None

    @given(st.floats(0.5, 1.0), st.floats(0.0, 0.5))
    def test_monotone_in_probability(self, p, bump):
        red = quote(Corner.RED, 2.5)
        base = detect_value_bet(p, red, None)
        higher = detect_value_bet(min(p + bump, 1.0), red, None)
        if base is not None:
            assert higher is not None


class TestLedger:
    def make_signal(self, odds=2.0, p=0.7):
        return detect_value_bet(p, quote(Corner.RED, odds), None,
                                BetConfig(edge_threshold=0.0, min_odds=1.01))

    def test_settlement_amounts(self):
        signal = self.make_signal(odds=2.0)
        won = BetLedgerEntry.settle(signal, 100.0, BetResult.WON)
        lost = BetLedgerEntry.settle(signal, 100.0, BetResult.LOST)
        void = BetLedgerEntry.settle(signal, 100.0, BetResult.VOID)
        assert won.net_profit == pytest.approx(100.0)
        assert lost.net_profit == -100.0
        assert void.net_profit == 0.0

    def test_single_winning_bet_roi(self):
        entry = BetLedgerEntry.settle(self.make_signal(odds=2.0), 100.0, BetResult.WON)
        summary = settle_ledger([entry])
        assert summary.roi == pytest.approx(1.0)
        assert summary.hit_rate == 1.0

    def test_net_profit_identity(self):
        entries = [
            BetLedgerEntry.settle(self.make_signal(odds=o), 50.0, result)
            for o, result in [(2.0, BetResult.WON), (3.0, BetResult.LOST),
                              (1.5, BetResult.WON), (4.0, BetResult.VOID)]
        ]
        summary = settle_ledger(entries)
        expected = 50.0 * (2.0 - 1) + 50.0 * (1.5 - 1) - 50.0
        assert summary.net_profit == pytest.approx(expected)
        assert summary.void == 1

    def test_empty_ledger_raises(self):
        with pytest.raises(EmptyLedger):
            settle_ledger([])


@pytest.fixture(scope="module")
def rows(data_dir):
    return load_backtest_rows(data_dir / "live_odds_backtest_2023.csv")


class TestBacktestSheet:

    def test_sheet_shape(self, rows):
        assert len(rows) == 44
        assert sum(r.selected for r in rows) == 18

    def test_recorded_selection_reproduces_the_run(self, rows):
        summary = settle_ledger(backtest_ledger(rows, stake=100.0))
        assert summary.hit_rate == pytest.approx(2 / 3, abs=1e-9)
        assert summary.average_odds == pytest.approx(3.175, abs=1e-9)
        assert summary.net_profit == pytest.approx(2223.0)
        assert summary.roi == pytest.approx(1.235)

    def test_printed_evs_match_the_formula(self, rows):
        checked = 0
        for row in rows:
            if row.ev_per_100 is None:
                continue
            p = row.p_red if row.backed_corner is Corner.RED else 1 - row.p_red
            assert expected_value(p, row.backed_odds, 100.0) == pytest.approx(
                row.ev_per_100, abs=0.01)
            checked += 1
        assert checked == 18

    def test_rule_selection_differs_from_recorded(self, rows):
        # the stated rule drops three recorded bets (edge below 10%) and
        # picks up two the operator passed on
        rule_entries = backtest_ledger(rows, selection="rule")
        assert len(rule_entries) == 17
