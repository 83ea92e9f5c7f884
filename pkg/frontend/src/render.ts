// DOM rendering of the view state. Numbers shown are the server's values
// formatted to two decimals (probabilities as percentages); nothing is
// recomputed client-side.

import type { DashboardViewState } from "./state.js";
import type { OddsResponse } from "./types.js";

export function formatMoney(value: number): string {
  return `$${value.toFixed(2)}`;
}

export function formatPercent(probability: number): string {
  return `${(probability * 100).toFixed(2)}%`;
}

export function renderDashboard(state: DashboardViewState, root: HTMLElement): void {
  const fight = state.fight;
  const title = fight
    ? `${fight.red.name} (red) vs ${fight.blue.name} (blue) — ${fight.event_name}`
    : "waiting for fight data";

  const banner =
    state.connection === "stale"
      ? `<div class="banner stale" data-testid="stale-banner">Connection lost — data may be stale. Reconnecting…</div>`
      : "";

  const rows = state.rounds
    .map(
      (row) => `
        <tr data-testid="round-row" data-round="${row.round}">
          <td>R${row.round}</td>
          <td>${row.redPoints}</td>
          <td>${row.bluePoints}</td>
          <td>${formatPercent(maxProbability(row.marginProbabilities))}</td>
        </tr>`,
    )
    .join("");

  const scorecard = `
    <table class="scorecard" data-testid="scorecard">
      <thead><tr><th>Round</th><th>Red</th><th>Blue</th><th>Confidence</th></tr></thead>
      <tbody>${state.rounds.length ? rows : `<tr class="empty"><td colspan="4">No rounds scored yet</td></tr>`}</tbody>
    </table>`;

  const gauge =
    state.winnerProbability === null
      ? `<div class="gauge off" data-testid="gauge-empty">Winner probability appears after round 2</div>`
      : `<div class="gauge" data-testid="gauge">
           <span class="gauge-label">Red win probability</span>
           <span class="gauge-value" data-testid="gauge-value">${formatPercent(state.winnerProbability)}</span>
           <div class="gauge-bar"><div class="gauge-fill" style="width: ${(state.winnerProbability * 100).toFixed(2)}%"></div></div>
         </div>`;

  const alerts = state.alerts
    .map(
      (alert) => `
        <div class="alert" data-testid="value-bet-alert">
          Value bet: back <strong>${alert.corner}</strong> at ${alert.odds} —
          edge ${(alert.edge * 100).toFixed(1)} pts,
          EV <span data-testid="alert-ev">${formatMoney(alert.expected_value)}</span>
          per ${formatMoney(alert.stake)}
        </div>`,
    )
    .join("");

  const summary = state.ledger?.summary;
  const ledgerBlock = summary
    ? `<div class="ledger" data-testid="ledger-summary">
         Settled ${summary.won + summary.lost + summary.void} bets —
         hit rate ${formatPercent(summary.hit_rate)},
         ROI ${formatPercent(summary.roi)},
         net ${formatMoney(summary.net_profit)}
       </div>`
    : `<div class="ledger empty">No settled bets yet</div>`;

  root.innerHTML = `
    ${banner}
    <h1>${title}</h1>
    <section>${scorecard}</section>
    <section>${gauge}</section>
    <section class="odds-entry">
      <form data-testid="odds-form">
        <label>Corner
          <select name="corner"><option value="red">red</option><option value="blue">blue</option></select>
        </label>
        <label>Decimal odds <input name="odds" type="text" inputmode="decimal" /></label>
        <button type="submit">Check value</button>
      </form>
      <div data-testid="odds-feedback" class="odds-feedback"></div>
    </section>
    <section class="alerts" data-testid="alerts">${alerts}</section>
    <section>${ledgerBlock}</section>
  `;
}

function maxProbability(probabilities: Record<string, number>): number {
  return Math.max(...Object.values(probabilities));
}

export function renderOddsFeedback(result: OddsResponse, element: HTMLElement): void {
  if (result.signal) {
    element.innerHTML = `
      <div class="signal" data-testid="odds-signal">
        Back <strong>${result.signal.corner}</strong>:
        edge ${(result.signal.edge * 100).toFixed(1)} pts,
        EV <span data-testid="signal-ev">${formatMoney(result.signal.expected_value)}</span>
        per ${formatMoney(result.signal.stake)} stake
      </div>`;
  } else {
    element.innerHTML = `<div class="no-value" data-testid="odds-no-value">No value: ${result.reason ?? "below thresholds"}</div>`;
  }
}

export function renderOddsError(message: string, element: HTMLElement, retry?: () => void): void {
  element.innerHTML = `<div class="error" data-testid="odds-error">${message}${retry ? ' <button data-testid="retry">retry</button>' : ""}</div>`;
  if (retry) {
    element.querySelector<HTMLButtonElement>('[data-testid="retry"]')?.addEventListener("click", retry);
  }
}

export function validateOddsInput(raw: string): { ok: true; odds: number } | { ok: false; message: string } {
  const odds = Number.parseFloat(raw);
  if (!Number.isFinite(odds)) {
    return { ok: false, message: "Enter decimal odds, e.g. 2.50" };
  }
  if (odds <= 1.0) {
    return { ok: false, message: "Decimal odds must be greater than 1.00" };
  }
  return { ok: true, odds };
}
