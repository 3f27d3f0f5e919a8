/** Typed client for the session and computation routes.
 *
 * Every document received from the service is kept in `received`, so
 * tests can assert that each number the UI displays came from a service
 * response rather than from client-side arithmetic.
 */

import type {
  DiagnosisView,
  DocumentEnvelope,
  ErrorBody,
  IntervalPair,
  SessionView,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly errorName: string,
    readonly detail: string,
  ) {
    super(`${errorName}: ${detail}`);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class SessionApi {
  /** Payloads of every document the service has returned, in order. */
  readonly received: unknown[] = [];

  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    revision?: number,
  ): Promise<T> {
    const headers: Record<string, string> = { "content-type": "application/json" };
    if (revision !== undefined) {
      headers["If-Match"] = String(revision);
    }
    const response = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const data: unknown = await response.json();
    if (!response.ok) {
      const err = data as ErrorBody;
      throw new ApiError(response.status, err.error_name ?? "Unknown", err.detail ?? "");
    }
    const doc = data as DocumentEnvelope<T>;
    this.received.push(doc.payload);
    return doc.payload;
  }

  createSession(objects: string[]): Promise<SessionView> {
    return this.request("POST", "/sessions", { objects });
  }

  getSession(id: string): Promise<SessionView> {
    return this.request("GET", `/sessions/${id}`);
  }

  putCards(
    id: string,
    slot: number,
    cards: IntervalPair,
    revision: number,
  ): Promise<SessionView> {
    return this.request("PUT", `/sessions/${id}/cards/${slot}`, cards, revision);
  }

  getDiagnosis(id: string): Promise<DiagnosisView> {
    return this.request("GET", `/sessions/${id}/diagnosis`);
  }

  respond(id: string, accept: boolean, revision: number): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/respond`, { accept }, revision);
  }

  finalize(id: string, revision: number): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/finalize`, undefined, revision);
  }
}
