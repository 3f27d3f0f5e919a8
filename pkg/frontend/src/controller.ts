/** Screen state machine. All math happens on the server; the controller
 * only moves documents between the API client and the renderers.
 */

import { ApiError, SessionApi } from "./api.js";
import type { DiagnosisView, IntervalPair, SessionView } from "./types.js";

export type Screen = "ranking" | "cards" | "diagnosis" | "result";

export interface AppState {
  screen: Screen;
  ranking: string[];
  session: SessionView | null;
  diagnosis: DiagnosisView | null;
  banner: string | null;
}

const CONFLICT_MESSAGE =
  "Session changed elsewhere; the latest state has been reloaded. Check it and retry.";

export class AppController {
  state: AppState = {
    screen: "ranking",
    ranking: [],
    session: null,
    diagnosis: null,
    banner: null,
  };

  private listeners: Array<(state: AppState) => void> = [];

  constructor(private readonly api: SessionApi) {}

  onChange(listener: (state: AppState) => void): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  private set(partial: Partial<AppState>): void {
    this.state = { ...this.state, ...partial };
    this.emit();
  }

  private get session(): SessionView {
    if (!this.state.session) {
      throw new Error("no active session");
    }
    return this.state.session;
  }

  // -- ranking screen (local until the session starts) ---------------------

  addObject(name: string): void {
    const trimmed = name.trim();
    if (!trimmed || this.state.ranking.includes(trimmed)) {
      return;
    }
    this.set({ ranking: [...this.state.ranking, trimmed] });
  }

  moveObject(from: number, to: number): void {
    const ranking = [...this.state.ranking];
    if (from < 0 || from >= ranking.length || to < 0 || to >= ranking.length) {
      return;
    }
    const [item] = ranking.splice(from, 1);
    ranking.splice(to, 0, item);
    this.set({ ranking });
  }

  async start(): Promise<void> {
    await this.guard(async () => {
      const session = await this.api.createSession(this.state.ranking);
      this.set({ session, screen: "cards", banner: null });
    });
  }

  // -- cards screen ---------------------------------------------------------

  async saveCardsAndDiagnose(entries: Array<IntervalPair | null>): Promise<void> {
    await this.guard(async () => {
      let session = this.session;
      for (let slot = 0; slot < entries.length; slot += 1) {
        const cards = entries[slot];
        if (!cards) {
          continue;
        }
        const current = session.blank_cards[slot];
        if (current && current[0] === cards[0] && current[1] === cards[1]) {
          continue;
        }
        session = await this.api.putCards(
          session.session_id,
          slot,
          cards,
          session.revision,
        );
      }
      const diagnosis = await this.api.getDiagnosis(session.session_id);
      session = await this.api.getSession(session.session_id);
      this.set({ session, diagnosis, screen: "diagnosis", banner: null });
    });
  }

  // -- diagnosis screen -------------------------------------------------------

  async accept(): Promise<void> {
    await this.guard(async () => {
      let session = this.session;
      const diagnosis = this.state.diagnosis;
      if (diagnosis && !diagnosis.equal_lengths) {
        session = await this.api.respond(session.session_id, true, session.revision);
      }
      session = await this.api.finalize(session.session_id, session.revision);
      this.set({ session, screen: "result", banner: null });
    });
  }

  async revise(): Promise<void> {
    await this.guard(async () => {
      const session = await this.api.respond(
        this.session.session_id,
        false,
        this.session.revision,
      );
      this.set({ session, diagnosis: null, screen: "cards", banner: null });
    });
  }

  restart(): void {
    this.set({
      screen: "ranking",
      ranking: [...this.state.ranking],
      session: null,
      diagnosis: null,
      banner: null,
    });
  }

  // -- error handling -----------------------------------------------------------

  private async guard(action: () => Promise<void>): Promise<void> {
    try {
      await action();
    } catch (error) {
      if (error instanceof ApiError && error.status === 409 && this.state.session) {
        const session = await this.api.getSession(this.state.session.session_id);
        const screen: Screen =
          session.phase === "Finalized"
            ? "result"
            : session.phase === "ProposalPending"
              ? "diagnosis"
              : this.state.screen;
        const diagnosis =
          screen === "diagnosis"
            ? await this.api.getDiagnosis(session.session_id)
            : this.state.diagnosis;
        this.set({ session, diagnosis, screen, banner: CONFLICT_MESSAGE });
        return;
      }
      if (error instanceof ApiError) {
        this.set({ banner: `${error.errorName}: ${error.detail}` });
        return;
      }
      throw error;
    }
  }
}
