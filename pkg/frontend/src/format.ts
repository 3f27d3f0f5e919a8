/** Presentation helpers: labels and interval-bar geometry. */

import type { IntervalPair } from "./types.js";

/** All displayed numbers use three decimals. */
export function fmt3(x: number): string {
  const text = x.toFixed(3);
  return text === "-0.000" ? "0.000" : text;
}

export function fmtInterval(pair: IntervalPair): string {
  return `[${fmt3(pair[0])}, ${fmt3(pair[1])}]`;
}

export interface BarDomain {
  lo: number;
  hi: number;
}

/** Plot domain covering every bar plus the 0 and 1 anchors, with padding. */
export function barDomain(values: IntervalPair[]): BarDomain {
  let lo = 0;
  let hi = 1;
  for (const [a, b] of values) {
    lo = Math.min(lo, a);
    hi = Math.max(hi, b);
  }
  const pad = 0.08 * (hi - lo || 1);
  return { lo: lo - pad, hi: hi + pad };
}

export interface BarGeometry {
  leftPct: number;
  widthPct: number;
}

export function barGeometry(pair: IntervalPair, domain: BarDomain): BarGeometry {
  const span = domain.hi - domain.lo;
  const leftPct = ((pair[0] - domain.lo) / span) * 100;
  const widthPct = Math.max(((pair[1] - pair[0]) / span) * 100, 0.4);
  return { leftPct, widthPct };
}

export function anchorPct(x: number, domain: BarDomain): number {
  return ((x - domain.lo) / (domain.hi - domain.lo)) * 100;
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
