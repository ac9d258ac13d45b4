// Typed client for the game service. The client never decides legality
// itself; everything playable comes back from these endpoints.

export interface EdgeView {
  u: number;
  v: number;
  w: number;
  initial: number;
}

export interface MoveView {
  to: number;
  new_weight: number;
}

export interface GameSummary {
  id: string;
  engine: string;
  vertices: number;
  start: number;
  edges: EdgeView[];
  token: number;
  legal_moves: MoveView[];
  terminal: boolean;
  loser: number | null;
  move_count: number;
}

export interface EngineMoveSummary extends GameSummary {
  engine_move: MoveView;
  strategy: string;
}

export interface AnalysisView {
  tags: string[];
  strategy: string;
  prediction: string;
  oracle_unavailable: boolean;
  winner?: string;
  grundy?: number;
  optimal_moves?: MoveView[];
  states_visited?: number;
}

export interface FamilySpec {
  family: string;
  n?: number;
  j?: number;
  weights?: string;
  seed?: number;
  start?: number;
}

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const res = await fetch(base + path, init);
  const body = await res.json().catch(() => ({}));
  if (!res.ok) {
    const detail = typeof body.detail === "string" ? body.detail : res.statusText;
    throw new ApiError(res.status, detail);
  }
  return body as T;
}

function post(payload: unknown): RequestInit {
  return {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(payload),
  };
}

export class GameApi {
  constructor(private base: string = "") {}

  createFromInstance(instance: string, engine: string): Promise<GameSummary> {
    return request(this.base, "/api/games", post({ instance, engine }));
  }

  createFromFamily(family: FamilySpec, engine: string): Promise<GameSummary> {
    return request(this.base, "/api/games", post({ family, engine }));
  }

  getGame(id: string): Promise<GameSummary> {
    return request(this.base, `/api/games/${id}`);
  }

  submitMove(id: string, move: MoveView): Promise<GameSummary> {
    return request(this.base, `/api/games/${id}/moves`, post(move));
  }

  engineMove(id: string): Promise<EngineMoveSummary> {
    return request(this.base, `/api/games/${id}/engine-move`, { method: "POST" });
  }

  analysis(id: string): Promise<AnalysisView> {
    return request(this.base, `/api/games/${id}/analysis`);
  }
}
