/** Pure HTML renderers, one per screen.
 *
 * Every number shown comes straight out of a service document; the only
 * client-side arithmetic is presentation geometry (bar positions).
 */

import { anchorPct, barDomain, barGeometry, escapeHtml, fmt3, fmtInterval } from "./format.js";
import type { AppState } from "./controller.js";
import type { HistoryEvent, IntervalPair, SessionResultPayload, SessionView } from "./types.js";

const CARD_LEGEND =
  "Zero blank cards still means a one-unit difference, the smallest possible; " +
  "each blank card adds one more unit. Enter a range when the count is uncertain.";

export function renderApp(state: AppState): string {
  const banner = state.banner
    ? `<div class="banner" role="alert">${escapeHtml(state.banner)}</div>`
    : "";
  let screen: string;
  switch (state.screen) {
    case "ranking":
      screen = renderRanking(state.ranking);
      break;
    case "cards":
      screen = renderCards(state.session);
      break;
    case "diagnosis":
      screen = renderDiagnosis(state);
      break;
    case "result":
      screen = renderResult(state.session);
      break;
  }
  return `<main>${banner}${screen}</main>`;
}

export function renderRanking(ranking: string[]): string {
  const items = ranking
    .map(
      (name, index) =>
        `<li class="rank-item" draggable="true" data-index="${index}">` +
        `<span class="grip">&#8942;&#8942;</span>${escapeHtml(name)}</li>`,
    )
    .join("");
  const disabled = ranking.length < 2 ? " disabled" : "";
  return `<section class="screen" data-screen="ranking">
  <h2>Rank the objects</h2>
  <p class="hint">Drag the cards into order, best at the top.</p>
  <ul class="rank-list">${items}</ul>
  <form class="object-entry" data-action="add-object">
    <input name="object-name" placeholder="object name" autocomplete="off">
    <button type="submit">Add</button>
  </form>
  <button class="primary" data-action="start"${disabled}>Start session</button>
</section>`;
}

export function renderCards(session: SessionView | null): string {
  if (!session) {
    return `<section class="screen" data-screen="cards"><p>No session.</p></section>`;
  }
  const rows = session.blank_cards
    .map((cards, slot) => {
      const [lo, hi] = cards ?? ["", ""];
      return `<tr>
      <td class="gap-name">${escapeHtml(session.objects[slot])} &rarr; ${escapeHtml(session.objects[slot + 1])}</td>
      <td><input type="number" min="0" step="1" data-slot="${slot}" data-bound="lo" value="${lo}"></td>
      <td><input type="number" min="0" step="1" data-slot="${slot}" data-bound="hi" value="${hi}"></td>
    </tr>`;
    })
    .join("");
  return `<section class="screen" data-screen="cards">
  <h2>Blank cards between consecutive objects</h2>
  <p class="legend">${CARD_LEGEND}</p>
  <table class="cards-table">
    <thead><tr><th>gap</th><th>min cards</th><th>max cards</th></tr></thead>
    <tbody>${rows}</tbody>
  </table>
  <button class="primary" data-action="diagnose">Save cards and diagnose</button>
  ${renderHistory(session.history)}
</section>`;
}

export function renderDiagnosis(state: AppState): string {
  const { session, diagnosis } = state;
  if (!session || !diagnosis) {
    return `<section class="screen" data-screen="diagnosis"><p>No diagnosis.</p></section>`;
  }
  const verdict = diagnosis.equal_lengths
    ? `<p class="verdict ok">All card ranges share one spread; the table is usable as entered.</p>`
    : `<p class="verdict warn">The card ranges have different spreads, so no consistent table
       fits them exactly. The closest equal-spread version is shown below.</p>`;
  const entered = session.blank_cards.map((c, slot) => unitStep(c, slot));
  const rows = diagnosis.adjusted_steps
    .map(
      (step, slot) => `<tr>
      <td class="gap-name">${escapeHtml(session.objects[slot])} &rarr; ${escapeHtml(session.objects[slot + 1])}</td>
      <td class="num">${fmtInterval(entered[slot])}</td>
      <td class="num">${fmtInterval(step)}</td>
    </tr>`,
    )
    .join("");
  const buttons = diagnosis.equal_lengths
    ? `<button class="primary" data-action="accept">Continue</button>`
    : `<button class="primary" data-action="accept">Accept proposal</button>
       <button data-action="revise">Revise cards</button>`;
  return `<section class="screen" data-screen="diagnosis">
  <h2>Consistency diagnosis</h2>
  ${verdict}
  <p>Common half-width: <span class="bar-label">${fmt3(diagnosis.alpha)}</span></p>
  <table class="diagnosis-table">
    <thead><tr><th>gap</th><th>entered units</th><th>proposed units</th></tr></thead>
    <tbody>${rows}</tbody>
  </table>
  ${buttons}
</section>`;
}

function unitStep(cards: IntervalPair | null, slot: number): IntervalPair {
  if (!cards) {
    throw new Error(`slot ${slot} has no cards despite a diagnosis`);
  }
  return [cards[0] + 1, cards[1] + 1];
}

export function renderResult(session: SessionView | null): string {
  const result = session?.result;
  if (!session || !result) {
    return `<section class="screen" data-screen="result"><p>No result.</p></section>`;
  }
  return `<section class="screen" data-screen="result">
  <h2>Interval value scale</h2>
  <p>Unit total: <span class="bar-label">${fmt3(result.normalization_constant)}</span></p>
  ${renderBars(session.objects, result)}
  <h3>Consistent comparison table</h3>
  ${renderTable(session.objects, result.full_table)}
  <button data-action="restart">New session</button>
</section>`;
}

function renderBars(objects: string[], result: SessionResultPayload): string {
  const values = result.normalized_scale.values;
  const domain = barDomain(values);
  const zero = anchorPct(0, domain).toFixed(2);
  const one = anchorPct(1, domain).toFixed(2);
  const rows = values
    .map((pair, index) => {
      const { leftPct, widthPct } = barGeometry(pair, domain);
      return `<div class="bar-row">
      <span class="bar-name">${escapeHtml(objects[index])}</span>
      <div class="bar-track">
        <div class="anchor" style="left:${zero}%"></div>
        <div class="anchor" style="left:${one}%"></div>
        <div class="bar" style="left:${leftPct.toFixed(2)}%;width:${widthPct.toFixed(2)}%"></div>
      </div>
      <span class="bar-label">${fmtInterval(pair)}</span>
    </div>`;
    })
    .join("");
  return `<div class="bars">${rows}
  <div class="bar-row axis">
    <span class="bar-name"></span>
    <div class="bar-track">
      <span class="axis-label" style="left:${zero}%">0</span>
      <span class="axis-label" style="left:${one}%">1</span>
    </div>
    <span class="bar-label"></span>
  </div>
</div>`;
}

function renderTable(objects: string[], table: IntervalPair[][]): string {
  const head = objects.map((name) => `<th>${escapeHtml(name)}</th>`).join("");
  const body = table
    .map((row, i) => {
      const cells = row.map((pair) => `<td class="num">${fmtInterval(pair)}</td>`).join("");
      return `<tr><th>${escapeHtml(objects[i])}</th>${cells}</tr>`;
    })
    .join("");
  return `<table class="full-table">
    <thead><tr><th></th>${head}</tr></thead>
    <tbody>${body}</tbody>
  </table>`;
}

export function renderHistory(history: HistoryEvent[]): string {
  if (history.length === 0) {
    return "";
  }
  const items = history
    .map((event) => {
      const extras = Object.entries(event)
        .filter(([key]) => key !== "ts" && key !== "event")
        .map(([key, value]) => `${key}=${JSON.stringify(value)}`)
        .join(" ");
      return `<li><code>${escapeHtml(event.event)}</code> ${escapeHtml(extras)}</li>`;
    })
    .join("");
  return `<details class="history" open>
  <summary>Session history (${history.length} events)</summary>
  <ul>${items}</ul>
</details>`;
}
