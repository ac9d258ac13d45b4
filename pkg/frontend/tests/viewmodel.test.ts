import { describe, expect, it } from "vitest";
import type { GameSummary } from "../src/api.js";
import {
  buildBoard,
  edgeForMove,
  findHubs,
  hintMove,
  layoutPositions,
  statusLine,
  weightChoices,
} from "../src/viewmodel.js";

function c4(): GameSummary {
  return {
    id: "g1",
    engine: "oracle",
    vertices: 4,
    start: 0,
    edges: [
      { u: 0, v: 1, w: 3, initial: 3 },
      { u: 1, v: 3, w: 2, initial: 2 },
      { u: 3, v: 2, w: 4, initial: 4 },
      { u: 2, v: 0, w: 4, initial: 4 },
    ],
    token: 0,
    legal_moves: [
      { to: 1, new_weight: 0 },
      { to: 1, new_weight: 1 },
      { to: 1, new_weight: 2 },
      { to: 2, new_weight: 0 },
      { to: 2, new_weight: 1 },
      { to: 2, new_weight: 2 },
      { to: 2, new_weight: 3 },
    ],
    terminal: false,
    loser: null,
    move_count: 0,
  };
}

function hubGraph(j: number, withHubEdge: boolean): GameSummary {
  const edges = [];
  if (withHubEdge) edges.push({ u: 0, v: 1, w: 1, initial: 1 });
  for (let leaf = 2; leaf < j + 2; leaf++) {
    edges.push({ u: 0, v: leaf, w: 1, initial: 1 });
    edges.push({ u: 1, v: leaf, w: 1, initial: 1 });
  }
  const targets = withHubEdge ? [1] : [];
  for (let leaf = 2; leaf < j + 2; leaf++) targets.push(leaf);
  return {
    id: "g2",
    engine: "strategy",
    vertices: j + 2,
    start: 0,
    edges,
    token: 0,
    legal_moves: targets.map((to) => ({ to, new_weight: 0 })),
    terminal: false,
    loser: null,
    move_count: 0,
  };
}

describe("playability mirrors legal_moves", () => {
  it("marks exactly the token-incident positive edges the server offers", () => {
    const board = buildBoard(c4());
    expect(board.edges.map((e) => e.playable)).toEqual([true, false, false, true]);
  });

  it("marks nothing playable on a terminal board", () => {
    const g = c4();
    g.legal_moves = [];
    g.terminal = true;
    g.loser = 1;
    const board = buildBoard(g);
    expect(board.edges.every((e) => !e.playable)).toBe(true);
  });

  it("renders weight-0 edges as removed and never playable", () => {
    const g = c4();
    g.edges[0].w = 0;
    g.legal_moves = g.legal_moves.filter((m) => m.to !== 1);
    const board = buildBoard(g);
    expect(board.edges[0].removed).toBe(true);
    expect(board.edges[0].playable).toBe(false);
  });
});

describe("weight stepper", () => {
  it("offers exactly 0..w-1 for a playable edge", () => {
    const g = c4();
    const board = buildBoard(g);
    expect(weightChoices(g, board.edges[0])).toEqual([0, 1, 2]);
    expect(weightChoices(g, board.edges[3])).toEqual([0, 1, 2, 3]);
  });
});

describe("status line", () => {
  it("tracks whose turn from the move count", () => {
    const g = c4();
    expect(statusLine(g)).toContain("Player 1");
    g.move_count = 1;
    expect(statusLine(g)).toContain("Player 2");
  });

  it("names the loser when terminal", () => {
    const g = c4();
    g.terminal = true;
    g.loser = 2;
    expect(statusLine(g)).toContain("player 2");
    expect(statusLine(g)).toContain("loses");
  });
});

describe("layout", () => {
  it("uses a circle for cycles: all vertices equidistant from center", () => {
    const pos = layoutPositions(c4(), 360);
    const dists = pos.map((p) => Math.hypot(p.x - 180, p.y - 180));
    for (const d of dists) expect(d).toBeCloseTo(dists[0], 6);
  });

  it("detects the two hubs of a hub-and-leaves graph", () => {
    expect(findHubs(hubGraph(4, false))).toEqual([0, 1]);
    expect(findHubs(hubGraph(4, true))).toEqual([0, 1]);
    // C4 is K_{2,2}, but with fewer than three leaves it stays a circle
    expect(findHubs(c4())).toBeNull();
    expect(findHubs(hubGraph(2, false))).toBeNull();
  });

  it("puts hubs on the top row and leaves on the bottom row", () => {
    const g = hubGraph(3, true);
    const pos = layoutPositions(g, 360);
    expect(pos[0].y).toBe(pos[1].y);
    for (let leaf = 2; leaf < 5; leaf++) {
      expect(pos[leaf].y).toBeGreaterThan(pos[0].y);
    }
  });
});

describe("hints", () => {
  it("picks the first oracle-optimal move and maps it to an edge", () => {
    const g = c4();
    const move = hintMove({
      tags: [],
      strategy: "none",
      prediction: "no_claim",
      oracle_unavailable: false,
      winner: "mover",
      grundy: 2,
      optimal_moves: [{ to: 2, new_weight: 1 }],
    });
    expect(move).toEqual({ to: 2, new_weight: 1 });
    expect(edgeForMove(g, move!)).toBe(3);
  });

  it("returns null when there is no winning move", () => {
    expect(
      hintMove({
        tags: [],
        strategy: "none",
        prediction: "no_claim",
        oracle_unavailable: false,
        winner: "opponent",
        grundy: 0,
        optimal_moves: [],
      }),
    ).toBeNull();
  });
});
