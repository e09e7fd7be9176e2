// Scripted end-to-end check against the real play server: the same
// request flow the UI performs, driven through the typed client.

import { spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient, type SessionView } from "../src/api.js";
import { winnerBanner } from "../src/logic.js";

const PORT = 8790 + Math.floor(Math.random() * 200);
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;
const api = new ApiClient(BASE);

async function waitForServer(): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt++) {
    try {
      await api.complete([]);
      return;
    } catch {
      await new Promise((r) => setTimeout(r, 100));
    }
  }
  throw new Error("play server did not come up");
}

beforeAll(async () => {
  const transcript = join(mkdtempSync(join(tmpdir(), "antonim-")), "t.ndjson");
  server = spawn(
    "python3",
    ["-m", "antonim.cli", "serve", "--port", String(PORT), "--transcript", transcript],
    { stdio: "ignore" },
  );
  await waitForServer();
}, 30_000);

afterAll(() => {
  server?.kill();
});

/**
 * Simulate chip clicks: starting from the top chip of the largest heap,
 * try click targets until the server accepts one. Legality always comes
 * from the server, exactly as in the UI.
 */
async function clickSomeChip(session: SessionView): Promise<SessionView> {
  const heaps = session.state;
  const order = heaps
    .map((size, heapIndex) => ({ size, heapIndex }))
    .filter(({ size }) => size > 0)
    .sort((a, b) => b.size - a.size);
  for (const { size, heapIndex } of order) {
    for (let target = size - 1; target >= 0; target--) {
      try {
        return await api.postMove(session.id, {
          heap_index: heapIndex,
          new_size: target,
        });
      } catch {
        // that chip level is illegal here (would duplicate a heap); the
        // UI would show a toast and let the user click elsewhere
      }
    }
  }
  throw new Error("no clickable chip accepted");
}

describe("playing against the engine", () => {
  it("shows the engine opening move from [0,1,4,5]", async () => {
    const session = await api.createSession([0, 1, 4, 5], false);
    expect(session.engine_move).toEqual({ heap_index: 2, new_size: 3 });
    expect(session.state).toEqual([0, 1, 3, 5]);
    expect(session.to_move).toBe("human");
    expect(session.classification).toBe("P"); // the human is losing
  });

  it("hint on [0,1,4,5] highlights heap 2 to 3", async () => {
    const hint = await api.classify([0, 1, 4, 5]);
    expect(hint.classification).toBe("N");
    expect(hint.best_move).toEqual({ heap_index: 2, new_size: 3 });
  });

  it("reports no winning move from a lost position", async () => {
    const hint = await api.classify([0, 1, 2]);
    expect(hint.classification).toBe("P");
    expect(hint.best_move).toBeNull();
  });

  it("plays a full game to a winner banner", async () => {
    let session = await api.createSession([0, 1, 4, 5], false);
    let turns = 0;
    while (session.status === "ongoing") {
      session = await clickSomeChip(session);
      if (++turns > 50) throw new Error("game did not terminate");
    }
    expect(winnerBanner(session.status)).toBeTruthy();
    // perfect play from an opening win means the engine takes it
    expect(session.status).toBe("engine_won");
    const replayed = await api.getSession(session.id);
    expect(replayed.history.length).toBe(session.history.length);
  });

  it("replaying the history against classify reproduces every badge", async () => {
    let session = await api.createSession([0, 1, 4, 5], false);
    for (let i = 0; i < 2 && session.status === "ongoing"; i++) {
      session = await clickSomeChip(session);
    }
    for (const entry of session.history) {
      const check = await api.classify(entry.state_after);
      expect(check.classification).toBe(entry.classification_after);
    }
  });

  it("rejects duplicate starts with a 400 the form can surface", async () => {
    const err = await api.createSession([1, 1], true).then(() => null, (e) => e);
    expect(err).not.toBeNull();
    expect(String((err as { detail: unknown }).detail)).toMatch(/duplicate/);
  });
});
