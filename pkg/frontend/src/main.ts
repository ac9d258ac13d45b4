import { ApiError, GameApi } from "./api.js";
import type { GameSummary, MoveView } from "./api.js";
import {
  BoardEdge,
  buildBoard,
  edgeForMove,
  EXAMPLE_C4_LEFT,
  hintMove,
  weightChoices,
} from "./viewmodel.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const SIZE = 420;

const api = new GameApi("");

let game: GameSummary | null = null;
let busy = false; // one request in flight per session
let selectedEdge: number | null = null;
let hintedEdge: number | null = null;

const $ = (id: string) => document.getElementById(id)!;

function setError(msg: string) {
  $("error").textContent = msg;
}

function setNote(msg: string) {
  $("note").textContent = msg;
}

async function run(action: () => Promise<void>) {
  if (busy) return;
  busy = true;
  setError("");
  document.body.classList.add("busy");
  try {
    await action();
  } catch (err) {
    if (err instanceof ApiError && err.status === 409) {
      setError(`Illegal move: ${err.message}`);
    } else if (err instanceof ApiError) {
      setError(err.message);
    } else {
      setError(String(err));
    }
  } finally {
    busy = false;
    document.body.classList.remove("busy");
    render();
  }
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) el.setAttribute(k, String(v));
  return el;
}

function render() {
  const svg = $("board") as unknown as SVGSVGElement;
  svg.innerHTML = "";
  const stepper = $("stepper");
  stepper.innerHTML = "";
  if (!game) {
    $("status").textContent = "No game yet — start one above.";
    return;
  }
  const board = buildBoard(game, SIZE);
  $("status").textContent = board.status;

  for (const edge of board.edges) {
    if (edge.removed) continue;
    const a = board.vertices[edge.u].pos;
    const b = board.vertices[edge.v].pos;
    const line = svgEl("line", {
      x1: a.x, y1: a.y, x2: b.x, y2: b.y,
      class:
        "edge" +
        (edge.playable ? " playable" : "") +
        (edge.index === selectedEdge ? " selected" : "") +
        (edge.index === hintedEdge ? " hinted" : ""),
    });
    if (edge.playable && !busy) {
      line.addEventListener("click", () => {
        selectedEdge = edge.index === selectedEdge ? null : edge.index;
        render();
      });
    }
    svg.appendChild(line);
    const label = svgEl("text", {
      x: (a.x + b.x) / 2,
      y: (a.y + b.y) / 2 - 6,
      class: "weight",
      "text-anchor": "middle",
    });
    label.textContent = String(edge.w);
    svg.appendChild(label);
  }

  for (const v of board.vertices) {
    svg.appendChild(
      svgEl("circle", {
        cx: v.pos.x, cy: v.pos.y, r: v.hasToken ? 16 : 12,
        class: "vertex" + (v.hasToken ? " token" : ""),
      }),
    );
    const t = svgEl("text", {
      x: v.pos.x, y: v.pos.y + 4,
      class: "vlabel",
      "text-anchor": "middle",
    });
    t.textContent = String(v.index);
    svg.appendChild(t);
  }

  if (selectedEdge !== null) {
    const edge = board.edges[selectedEdge];
    if (edge && edge.playable) {
      const caption = document.createElement("span");
      caption.textContent = `Edge v${edge.u}–v${edge.v}: new weight `;
      stepper.appendChild(caption);
      for (const w of weightChoices(game, edge)) {
        const btn = document.createElement("button");
        btn.textContent = String(w);
        const to = edge.u === game.token ? edge.v : edge.u;
        btn.addEventListener("click", () => playMove({ to, new_weight: w }));
        stepper.appendChild(btn);
      }
    }
  }
}

function playMove(move: MoveView) {
  run(async () => {
    if (!game) return;
    selectedEdge = null;
    hintedEdge = null;
    game = await api.submitMove(game.id, move);
    setNote("");
    if (!game.terminal) {
      const reply = await api.engineMove(game.id);
      game = reply;
      setNote(
        `Engine (${reply.strategy}) played: v${reply.engine_move.to}, ` +
          `weight → ${reply.engine_move.new_weight}`,
      );
    }
  });
}

function newGame() {
  run(async () => {
    selectedEdge = null;
    hintedEdge = null;
    setNote("");
    const engine = ($("engine") as HTMLSelectElement).value;
    const family = ($("family") as HTMLSelectElement).value;
    if (family === "instance") {
      const text = ($("instance") as HTMLTextAreaElement).value;
      game = await api.createFromInstance(text, engine);
    } else if (family === "example-c4") {
      game = await api.createFromInstance(EXAMPLE_C4_LEFT, engine);
    } else {
      const n = Number(($("n") as HTMLInputElement).value);
      const j = Number(($("j") as HTMLInputElement).value);
      const weights = ($("weights") as HTMLInputElement).value || "uniform:1";
      const spec: Record<string, unknown> = { family, weights };
      if (family === "k2j" || family === "ssb") spec.j = j;
      else spec.n = n;
      game = await api.createFromFamily(spec as never, engine);
    }
    if (($("engine-first") as HTMLInputElement).checked && game && !game.terminal) {
      const reply = await api.engineMove(game.id);
      game = reply;
      setNote(
        `Engine (${reply.strategy}) opened: v${reply.engine_move.to}, ` +
          `weight → ${reply.engine_move.new_weight}`,
      );
    }
  });
}

function showHint() {
  run(async () => {
    if (!game || game.terminal) return;
    const analysis = await api.analysis(game.id);
    if (analysis.oracle_unavailable) {
      setNote("Hint unavailable: position too large for the oracle budget.");
      return;
    }
    const move = hintMove(analysis);
    if (!move) {
      setNote(`No winning move here (${analysis.winner} already decided).`);
      hintedEdge = null;
      return;
    }
    hintedEdge = edgeForMove(game, move);
    setNote(
      `Hint: move to v${move.to} lowering the edge to ${move.new_weight}` +
        ` (oracle: ${analysis.winner} wins, grundy ${analysis.grundy}).`,
    );
  });
}

function refetch() {
  run(async () => {
    if (!game) return;
    game = await api.getGame(game.id);
  });
}

export function init() {
  $("new-game").addEventListener("click", newGame);
  $("hint").addEventListener("click", showHint);
  $("refetch").addEventListener("click", refetch);
  $("family").addEventListener("change", () => {
    const family = ($("family") as HTMLSelectElement).value;
    $("instance-row").style.display = family === "instance" ? "" : "none";
  });
  render();
}

if (typeof document !== "undefined" && document.getElementById("board")) {
  init();
}
