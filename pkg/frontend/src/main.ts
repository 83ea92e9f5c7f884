// Bootstrap: pick the fight, subscribe to the stream, wire the odds form.

import { ApiClient, NoWinnerPredictionError } from "./api.js";
import {
  applyBackfill,
  applyEvent,
  initialState,
  setConnection,
  setFight,
  setLedger,
  type DashboardViewState,
} from "./state.js";
import {
  renderDashboard,
  renderOddsError,
  renderOddsFeedback,
  validateOddsInput,
} from "./render.js";
import { StreamSubscription, type EventSourceFactory } from "./stream.js";

export interface StartOptions {
  api?: ApiClient;
  eventSourceFactory?: EventSourceFactory;
}

export async function start(root: HTMLElement, options: StartOptions = {}): Promise<StreamSubscription | undefined> {
  const api = options.api ?? new ApiClient();
  let state: DashboardViewState = initialState();

  const redraw = () => {
    renderDashboard(state, root);
    wireOddsForm();
  };

  const fights = await api.listFights();
  if (!fights.length) {
    root.innerHTML = "<p>No live fights right now.</p>";
    return undefined;
  }
  const fight = fights[0];
  state = setFight(state, fight);
  state = setLedger(state, await api.ledger());
  redraw();

  const handlers = {
    onEvent: (event: Parameters<typeof applyEvent>[1]) => {
      if (event.fight_id !== fight.fight_id) return;
      state = applyEvent(state, event);
      redraw();
    },
    onUp: () => {
      state = setConnection(state, "live");
      // backfill anything missed while down; seq dedupe prevents duplicates
      api
        .fightPredictions(fight.fight_id)
        .then((events) => {
          state = applyBackfill(state, events);
          redraw();
        })
        .catch(() => undefined);
      redraw();
    },
    onDown: () => {
      state = setConnection(state, "stale");
      redraw();
    },
  };
  const stream = options.eventSourceFactory
    ? new StreamSubscription(handlers, "", options.eventSourceFactory)
    : new StreamSubscription(handlers);
  stream.connect();

  function wireOddsForm(): void {
    const form = root.querySelector<HTMLFormElement>('[data-testid="odds-form"]');
    const feedback = root.querySelector<HTMLElement>('[data-testid="odds-feedback"]');
    if (!form || !feedback) return;
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      const data = new FormData(form);
      const corner = String(data.get("corner")) as "red" | "blue";
      const checked = validateOddsInput(String(data.get("odds") ?? ""));
      if (!checked.ok) {
        renderOddsError(checked.message, feedback);
        return;
      }
      const submit = () =>
        api
          .submitOdds(fight.fight_id, corner, checked.odds)
          .then(async (result) => {
            renderOddsFeedback(result, feedback);
            state = setLedger(state, await api.ledger());
          })
          .catch((error: unknown) => {
            if (error instanceof NoWinnerPredictionError) {
              renderOddsError("No winner prediction yet — wait for round 2 to finish.", feedback);
            } else {
              renderOddsError(`Submission failed: ${String(error)}`, feedback, () => void submit());
            }
          });
      void submit();
    });
  }

  return stream;
}

declare global {
  interface Window {
    cagecastStart?: typeof start;
  }
}

if (typeof window !== "undefined" && typeof document !== "undefined") {
  window.cagecastStart = start;
  const root = document.getElementById("app");
  if (root) {
    void start(root);
  }
}
