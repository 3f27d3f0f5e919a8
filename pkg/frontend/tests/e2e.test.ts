/** End-to-end flows scripted against the real HTTP service.
 *
 * Spawns `python3 -m ivalue.cli serve` on a free port, drives the app
 * controller exactly as the browser event handlers would, and checks the
 * rendered screens. A final assertion verifies that every number shown
 * on a result screen was received inside a service document.
 */

import { mkdtempSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { createServer } from "node:net";
import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiError, SessionApi } from "../src/api.js";
import { AppController } from "../src/controller.js";
import { fmt3 } from "../src/format.js";
import { renderApp } from "../src/views.js";

let server: ChildProcess;
let base: string;

async function freePort(): Promise<number> {
  return new Promise((resolve, reject) => {
    const probe = createServer();
    probe.once("error", reject);
    probe.listen(0, "127.0.0.1", () => {
      const address = probe.address();
      if (address && typeof address === "object") {
        const port = address.port;
        probe.close(() => resolve(port));
      } else {
        reject(new Error("no port"));
      }
    });
  });
}

beforeAll(async () => {
  const port = await freePort();
  base = `http://127.0.0.1:${port}`;
  const log = join(mkdtempSync(join(tmpdir(), "ivalue-e2e-")), "sessions.log");
  server = spawn(
    "python3",
    ["-m", "ivalue.cli", "serve", "--addr", `127.0.0.1:${port}`, "--log", log],
    { stdio: "ignore" },
  );
  for (let attempt = 0; attempt < 150; attempt += 1) {
    try {
      const resp = await fetch(`${base}/sessions/warmup-probe`);
      if (resp.status === 404) {
        return;
      }
    } catch {
      await new Promise((resolve) => setTimeout(resolve, 100));
    }
  }
  throw new Error("service did not come up");
}, 30_000);

afterAll(() => {
  server?.kill();
});

function newController(): { controller: AppController; api: SessionApi } {
  const api = new SessionApi(base);
  const controller = new AppController(api);
  for (const name of ["l1", "l2", "l3", "l4"]) {
    controller.addObject(name);
  }
  return { controller, api };
}

/** Numeric labels visible on screen: bar labels and table cells. */
function displayedNumbers(html: string): string[] {
  const texts = [
    ...html.matchAll(/class="bar-label">([^<]*)</g),
    ...html.matchAll(/class="num">([^<]*)</g),
  ].map((match) => match[1]);
  const numbers: string[] = [];
  for (const text of texts) {
    for (const match of text.matchAll(/-?\d+\.\d{3}/g)) {
      numbers.push(match[0]);
    }
  }
  return numbers;
}

function receivedNumbers(received: unknown[]): Set<string> {
  const out = new Set<string>();
  const walk = (node: unknown): void => {
    if (typeof node === "number") {
      out.add(fmt3(node));
    } else if (Array.isArray(node)) {
      node.forEach(walk);
    } else if (node && typeof node === "object") {
      Object.values(node).forEach(walk);
    }
  };
  received.forEach(walk);
  return out;
}

describe("equal-spread flow", () => {
  it("reproduces the known result screen", async () => {
    const { controller, api } = newController();
    await controller.start();
    expect(controller.state.screen).toBe("cards");

    await controller.saveCardsAndDiagnose([[3, 5], [0, 2], [1, 3]]);
    expect(controller.state.screen).toBe("diagnosis");
    expect(controller.state.diagnosis?.equal_lengths).toBe(true);
    expect(renderApp(controller.state)).toContain("Continue");

    await controller.accept();
    expect(controller.state.screen).toBe("result");
    const html = renderApp(controller.state);
    for (const label of [
      "[0.900, 1.100]",
      "[0.400, 0.600]",
      "[0.200, 0.400]",
      "[-0.100, 0.100]",
      "10.000",
    ]) {
      expect(html).toContain(label);
    }

    const fromDocuments = receivedNumbers(api.received);
    for (const shown of displayedNumbers(html)) {
      expect(fromDocuments).toContain(shown);
    }
  });
});

describe("mixed-spread flow with rejection", () => {
  it("revise returns to cards with history, accept reaches the known result", async () => {
    const { controller, api } = newController();
    await controller.start();
    await controller.saveCardsAndDiagnose([[3, 5], [0, 2], [1, 4]]);

    expect(controller.state.diagnosis?.equal_lengths).toBe(false);
    let html = renderApp(controller.state);
    expect(html).toContain("1.167"); // proposed common half-width
    expect(html).toContain("[3.833, 6.167]");
    expect(html).toContain('data-action="revise"');

    await controller.revise();
    expect(controller.state.screen).toBe("cards");
    html = renderApp(controller.state);
    expect(html).toContain("proposal_rejected");
    expect(html).toContain('value="3"'); // entered counts preserved

    await controller.saveCardsAndDiagnose([[3, 5], [0, 2], [1, 4]]);
    expect(controller.state.diagnosis?.equal_lengths).toBe(false);
    await controller.accept();

    expect(controller.state.screen).toBe("result");
    html = renderApp(controller.state);
    for (const label of [
      "[0.889, 1.111]",
      "[0.413, 0.635]",
      "[0.222, 0.444]",
      "[-0.111, 0.111]",
      "10.500",
    ]) {
      expect(html).toContain(label);
    }

    const fromDocuments = receivedNumbers(api.received);
    for (const shown of displayedNumbers(html)) {
      expect(fromDocuments).toContain(shown);
    }
  });
});

describe("stale revision", () => {
  it("shows the conflict banner and reloads the session", async () => {
    const { controller } = newController();
    await controller.start();
    const sid = controller.state.session!.session_id;
    const revision = controller.state.session!.revision;

    // another client mutates the same session first
    const other = new SessionApi(base);
    await other.putCards(sid, 0, [7, 9], revision);

    await controller.saveCardsAndDiagnose([[3, 5], [0, 2], [1, 3]]);
    expect(controller.state.banner).toMatch(/changed elsewhere/i);
    expect(renderApp(controller.state)).toContain('class="banner"');
    expect(controller.state.session?.blank_cards[0]).toEqual([7, 9]);
    expect(controller.state.session?.revision).toBe(revision + 1);
  });

  it("raw stale mutations yield 409 Conflict", async () => {
    const api = new SessionApi(base);
    const created = await api.createSession(["a", "b"]);
    await api.putCards(created.session_id, 0, [1, 2], created.revision);
    await expect(
      api.putCards(created.session_id, 0, [3, 4], created.revision),
    ).rejects.toThrowError(ApiError);
  });
});
