// End-to-end round trip against the real Python service: spawns
// `python3 -m nimgraph.cli serve` and drives it through the same client
// and view-model code the browser uses.

import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { spawn, type ChildProcess } from "node:child_process";
import { GameApi } from "../src/api.js";
import { buildBoard, edgeForMove, EXAMPLE_C4_LEFT, hintMove } from "../src/viewmodel.js";

const PORT = 8781;
const BASE = `http://127.0.0.1:${PORT}`;
const api = new GameApi(BASE);

let server: ChildProcess;

async function waitForServer(timeoutMs = 30000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const res = await fetch(`${BASE}/api/games/nope`);
      if (res.status === 404) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 200));
  }
  throw new Error("service did not come up");
}

beforeAll(async () => {
  server = spawn(
    "python3",
    ["-m", "nimgraph.cli", "serve", "--port", String(PORT), "--host", "127.0.0.1"],
    { cwd: "..", stdio: "ignore" },
  );
  await waitForServer();
}, 40000);

afterAll(() => {
  server?.kill();
});

describe("round trip on unit K_4 with the strategy engine", () => {
  it("engine opens by deleting the hub edge, human replies, weights stay in sync", async () => {
    const created = await api.createFromFamily(
      { family: "complete", n: 4, weights: "uniform:1" },
      "strategy",
    );
    expect(created.token).toBe(0);
    expect(created.edges.every((e) => e.w === 1)).toBe(true);

    const opened = await api.engineMove(created.id);
    expect(opened.strategy).toBe("ssb");
    // first strategy move removes the edge between the two hubs entirely
    expect(opened.engine_move.new_weight).toBe(0);
    const hubEdge = opened.edges.find(
      (e) =>
        (e.u === created.token && e.v === opened.engine_move.to) ||
        (e.v === created.token && e.u === opened.engine_move.to),
    );
    expect(hubEdge).toBeDefined();
    expect(hubEdge!.w).toBe(0);
    expect(opened.token).toBe(opened.engine_move.to);

    // human plays any legal reply through the same path the UI uses
    const reply = opened.legal_moves[0];
    const afterHuman = await api.submitMove(opened.id, reply);
    const rendered = buildBoard(afterHuman);

    // rendered weights must equal the server state after a fresh refetch
    const refetched = await api.getGame(opened.id);
    const renderedAgain = buildBoard(refetched);
    expect(renderedAgain.edges.map((e) => e.w)).toEqual(
      rendered.edges.map((e) => e.w),
    );
    expect(refetched.edges.map((e) => e.w)).toEqual(
      afterHuman.edges.map((e) => e.w),
    );
    expect(refetched.token).toBe(afterHuman.token);
  });
});

describe("hint on the weighted C4 preset", () => {
  it("highlights an oracle-optimal move", async () => {
    const game = await api.createFromInstance(EXAMPLE_C4_LEFT, "oracle");
    const analysis = await api.analysis(game.id);
    expect(analysis.oracle_unavailable).toBe(false);
    expect(analysis.winner).toBe("mover");

    const hint = hintMove(analysis);
    expect(hint).not.toBeNull();
    expect(analysis.optimal_moves).toContainEqual(hint);

    // the hinted move maps to a real edge at the token, so it can be drawn
    const edgeIndex = edgeForMove(game, hint!);
    expect(edgeIndex).not.toBeNull();
    const edge = game.edges[edgeIndex!];
    expect([edge.u, edge.v]).toContain(game.token);
    expect(hint!.new_weight).toBeLessThan(edge.w);

    // and the server accepts it
    const after = await api.submitMove(game.id, hint!);
    expect(after.move_count).toBe(1);
  });
});

describe("server-side validation surfaces as errors", () => {
  it("rejects malformed instances with a 400", async () => {
    await expect(api.createFromInstance("not a game", "oracle")).rejects.toMatchObject(
      { status: 400 },
    );
  });

  it("rejects illegal moves with a 409 and leaves the board unchanged", async () => {
    const game = await api.createFromInstance(EXAMPLE_C4_LEFT, "oracle");
    await expect(
      api.submitMove(game.id, { to: 3, new_weight: 0 }),
    ).rejects.toMatchObject({ status: 409 });
    const fresh = await api.getGame(game.id);
    expect(fresh.move_count).toBe(0);
    expect(fresh.edges.map((e) => e.w)).toEqual(game.edges.map((e) => e.w));
  });
});
