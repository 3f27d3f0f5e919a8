import { describe, expect, it } from "vitest";

import { renderApp, renderCards, renderDiagnosis, renderRanking, renderResult } from "../src/views.js";
import type { AppState } from "../src/controller.js";
import type { SessionView } from "../src/types.js";

const baseSession: SessionView = {
  session_id: "s1",
  objects: ["l1", "l2", "l3", "l4"],
  phase: "CardsEntry",
  blank_cards: [[3, 5], [0, 2], null],
  history: [
    { ts: 1, event: "created", objects: ["l1", "l2", "l3", "l4"] },
    { ts: 2, event: "proposal_rejected" },
  ],
  revision: 2,
};

describe("ranking screen", () => {
  it("lists draggable objects in order", () => {
    const html = renderRanking(["best", "worst"]);
    expect(html).toContain('draggable="true"');
    expect(html.indexOf("best")).toBeLessThan(html.indexOf("worst"));
  });

  it("disables start below two objects", () => {
    expect(renderRanking(["only"])).toContain("disabled");
    expect(renderRanking(["a", "b"])).not.toContain("disabled");
  });

  it("escapes object names", () => {
    expect(renderRanking(["<img>"])).toContain("&lt;img&gt;");
  });
});

describe("cards screen", () => {
  it("shows one row per gap with entered values", () => {
    const html = renderCards(baseSession);
    expect(html.match(/data-slot="\d"/g)?.length).toBe(6);
    expect(html).toContain('value="3"');
    expect(html).toContain("Zero blank cards");
  });

  it("keeps the history visible after a rejection", () => {
    const html = renderCards(baseSession);
    expect(html).toContain("proposal_rejected");
  });
});

describe("diagnosis screen", () => {
  const state: AppState = {
    screen: "diagnosis",
    ranking: [],
    session: { ...baseSession, blank_cards: [[3, 5], [0, 2], [1, 4]], phase: "ProposalPending" },
    diagnosis: {
      equal_lengths: false,
      alpha: 7 / 6,
      adjusted_steps: [
        [3.8333333333333335, 6.166666666666667],
        [0.8333333333333334, 3.1666666666666665],
        [2.3333333333333335, 4.666666666666667],
      ],
      objective: 0.0555,
      phase: "ProposalPending",
      revision: 3,
    },
    banner: null,
  };

  it("shows entered and proposed units side by side", () => {
    const html = renderDiagnosis(state);
    expect(html).toContain("[4.000, 6.000]");
    expect(html).toContain("[3.833, 6.167]");
    expect(html).toContain("1.167");
    expect(html).toContain('data-action="accept"');
    expect(html).toContain('data-action="revise"');
  });

  it("offers a single continue button when lengths agree", () => {
    const equal: AppState = {
      ...state,
      diagnosis: { ...state.diagnosis!, equal_lengths: true },
    };
    const html = renderDiagnosis(equal);
    expect(html).toContain("Continue");
    expect(html).not.toContain('data-action="revise"');
  });
});

describe("result screen", () => {
  const finalized: SessionView = {
    ...baseSession,
    phase: "Finalized",
    blank_cards: [[3, 5], [0, 2], [1, 3]],
    result: {
      unit_chain: [[4, 6], [1, 3], [2, 4]],
      neutral: 1,
      full_table: [
        [[-1, 1], [4, 6], [6, 8], [9, 11]],
        [[-6, -4], [-1, 1], [1, 3], [4, 6]],
        [[-8, -6], [-3, -1], [-1, 1], [2, 4]],
        [[-11, -9], [-6, -4], [-4, -2], [-1, 1]],
      ],
      raw_scale: { values: [[9, 11], [4, 6], [2, 4], [-1, 1]], neutral: 1 },
      normalized_scale: {
        values: [[0.9, 1.1], [0.4, 0.6], [0.2, 0.4], [-0.1, 0.1]],
        neutral: 0.1,
        normalization_constant: 10,
      },
      normalization_constant: 10,
    },
  };

  it("draws one bar per object with three-decimal labels", () => {
    const html = renderResult(finalized);
    expect(html.match(/class="bar"/g)?.length).toBe(4);
    expect(html).toContain("[0.900, 1.100]");
    expect(html).toContain("[-0.100, 0.100]");
  });

  it("anchors the axis at the generalized 0 and 1", () => {
    const html = renderResult(finalized);
    expect(html.match(/class="anchor"/g)?.length).toBe(8);
    expect(html).toContain(">0</span>");
    expect(html).toContain(">1</span>");
  });

  it("renders the full consistent table", () => {
    const html = renderResult(finalized);
    expect(html).toContain("[9.000, 11.000]");
    expect(html).toContain("[-11.000, -9.000]");
  });
});

describe("banner", () => {
  it("is visible on any screen", () => {
    const state: AppState = {
      screen: "cards",
      ranking: [],
      session: baseSession,
      diagnosis: null,
      banner: "Session changed elsewhere; the latest state has been reloaded.",
    };
    expect(renderApp(state)).toContain('class="banner"');
  });
});
