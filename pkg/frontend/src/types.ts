/** Wire types mirroring the service's canonical JSON documents. */

export type IntervalPair = [number, number];

export interface DocumentEnvelope<T> {
  kind: string;
  payload: T;
  version: number;
}

export interface HistoryEvent {
  ts: number;
  event: string;
  [extra: string]: unknown;
}

export interface ChainProposal {
  alpha: number;
  adjusted_steps: IntervalPair[];
  objective: number;
}

export interface ScalePayload {
  values: IntervalPair[];
  neutral: number;
  normalization_constant?: number;
}

export interface SessionResultPayload {
  unit_chain: IntervalPair[];
  neutral: number;
  full_table: IntervalPair[][];
  raw_scale: ScalePayload;
  normalized_scale: ScalePayload;
  normalization_constant: number;
}

/** Session summary as served; `revision` drives optimistic concurrency. */
export interface SessionView {
  session_id: string;
  objects: string[];
  phase: string;
  blank_cards: (IntervalPair | null)[];
  history: HistoryEvent[];
  proposal?: ChainProposal;
  result?: SessionResultPayload;
  revision: number;
}

export interface DiagnosisView {
  equal_lengths: boolean;
  alpha: number;
  adjusted_steps: IntervalPair[];
  objective: number;
  phase: string;
  revision: number;
}

export interface ErrorBody {
  error_name: string;
  detail: string;
  path?: string;
}
