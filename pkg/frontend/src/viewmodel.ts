// Pure board view-model: layout positions, playable edges, weight choices,
// status line. Playability mirrors the server's legal_moves exactly; the
// client never computes game rules on its own.

import type { AnalysisView, GameSummary, MoveView } from "./api.js";

export interface Point {
  x: number;
  y: number;
}

export interface VertexView {
  index: number;
  pos: Point;
  hasToken: boolean;
}

export interface BoardEdge {
  index: number;
  u: number;
  v: number;
  w: number;
  initial: number;
  removed: boolean; // weight hit 0: drawn as gone
  playable: boolean; // the server offers a move across this edge
}

export interface BoardViewModel {
  vertices: VertexView[];
  edges: BoardEdge[];
  token: number;
  terminal: boolean;
  status: string;
}

// Two hubs that both see every leaf, leaves seeing only the hubs: the
// two-row layout used for the hub-and-leaves families. Fewer than three
// leaves (C4 is also K_{2,2}) keeps the circle layout instead.
export function findHubs(summary: GameSummary): [number, number] | null {
  const n = summary.vertices;
  if (n < 5) return null;
  const adj: Set<number>[] = Array.from({ length: n }, () => new Set());
  for (const e of summary.edges) {
    adj[e.u].add(e.v);
    adj[e.v].add(e.u);
  }
  for (let a = 0; a < n; a++) {
    for (let b = a + 1; b < n; b++) {
      let ok = true;
      for (let x = 0; x < n && ok; x++) {
        if (x === a || x === b) continue;
        if (!adj[a].has(x) || !adj[b].has(x)) ok = false;
        for (const y of adj[x]) if (y !== a && y !== b) ok = false;
      }
      if (ok) return [a, b];
    }
  }
  return null;
}

export function layoutPositions(summary: GameSummary, size = 360): Point[] {
  const n = summary.vertices;
  const hubs = findHubs(summary);
  if (hubs) {
    const [a, b] = hubs;
    const leaves: number[] = [];
    for (let x = 0; x < n; x++) if (x !== a && x !== b) leaves.push(x);
    const pos: Point[] = new Array(n);
    pos[a] = { x: size * 0.35, y: size * 0.2 };
    pos[b] = { x: size * 0.65, y: size * 0.2 };
    leaves.forEach((x, i) => {
      pos[x] = { x: (size * (i + 1)) / (leaves.length + 1), y: size * 0.8 };
    });
    return pos;
  }
  const c = size / 2;
  const r = size * 0.4;
  return Array.from({ length: n }, (_, i) => {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    return { x: c + r * Math.cos(angle), y: c + r * Math.sin(angle) };
  });
}

export function statusLine(summary: GameSummary): string {
  if (summary.terminal) {
    return `Game over — player ${summary.loser} cannot move and loses`;
  }
  const player = (summary.move_count % 2) + 1;
  return `Player ${player} to move (token on v${summary.token})`;
}

export function buildBoard(summary: GameSummary, size = 360): BoardViewModel {
  const pos = layoutPositions(summary, size);
  const playableTargets = new Set(summary.legal_moves.map((m) => m.to));
  const edges = summary.edges.map((e, i) => {
    const other =
      e.u === summary.token ? e.v : e.v === summary.token ? e.u : null;
    return {
      index: i,
      u: e.u,
      v: e.v,
      w: e.w,
      initial: e.initial,
      removed: e.w === 0,
      playable:
        !summary.terminal && other !== null && e.w > 0 && playableTargets.has(other),
    };
  });
  return {
    vertices: pos.map((p, i) => ({
      index: i,
      pos: p,
      hasToken: i === summary.token,
    })),
    edges,
    token: summary.token,
    terminal: summary.terminal,
    status: statusLine(summary),
  };
}

// New weights the server accepts across a given edge, ascending. For a
// weight-w edge this is exactly 0..w-1; it is read off legal_moves so that
// the stepper can never offer anything the server would bounce.
export function weightChoices(summary: GameSummary, edge: BoardEdge): number[] {
  const other = edge.u === summary.token ? edge.v : edge.u;
  return summary.legal_moves
    .filter((m) => m.to === other)
    .map((m) => m.new_weight)
    .sort((a, b) => a - b);
}

export function hintMove(analysis: AnalysisView): MoveView | null {
  if (!analysis.optimal_moves || analysis.optimal_moves.length === 0) return null;
  return analysis.optimal_moves[0];
}

export function edgeForMove(summary: GameSummary, move: MoveView): number | null {
  const i = summary.edges.findIndex(
    (e) =>
      (e.u === summary.token && e.v === move.to) ||
      (e.v === summary.token && e.u === move.to),
  );
  return i === -1 ? null : i;
}

export const EXAMPLE_C4_LEFT = [
  "nimgraph 1",
  "vertices 4",
  "start 0",
  "edge 0 1 3",
  "edge 1 3 2",
  "edge 3 2 4",
  "edge 2 0 4",
  "",
].join("\n");
