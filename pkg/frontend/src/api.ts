// Typed client for the play server's JSON API. The server is the single
// source of truth: nothing here computes game logic.

export type Mover = "human" | "engine";
export type Classification = "P" | "N";
export type GameStatus = "ongoing" | "human_won" | "engine_won";

export interface MoveDict {
  heap_index: number;
  new_size: number;
}

export interface HistoryEntry {
  mover: Mover;
  move: MoveDict;
  state_after: number[];
  classification_after: Classification;
}

export interface SessionView {
  id: string;
  state: number[];
  initial_state: number[];
  to_move: Mover;
  status: GameStatus;
  classification: Classification;
  engine_move: MoveDict | null;
  history: HistoryEntry[];
}

export interface ClassifyResponse {
  classification: Classification;
  best_move: MoveDict | null;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: unknown,
    /** violated rule name for 422 illegal-move errors */
    readonly rule: string | null,
  ) {
    super(typeof detail === "string" ? detail : `request failed (${status})`);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    // wrap the global so the browser sees the right `this`
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  async createSession(heaps: number[], humanFirst: boolean): Promise<SessionView> {
    return this.request("POST", "/api/sessions", {
      heaps,
      human_first: humanFirst,
    });
  }

  async postMove(sessionId: string, move: MoveDict): Promise<SessionView> {
    return this.request("POST", `/api/sessions/${sessionId}/moves`, move);
  }

  async getSession(sessionId: string): Promise<SessionView> {
    return this.request("GET", `/api/sessions/${sessionId}`);
  }

  async classify(heaps: number[]): Promise<ClassifyResponse> {
    return this.request("GET", `/api/classify?heaps=${heaps.join(",")}`);
  }

  async complete(heaps: number[]): Promise<number> {
    const body = await this.request<{ z: number }>(
      "GET",
      `/api/complete?heaps=${heaps.join(",")}`,
    );
    return body.z;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const resp = await this.fetchFn(this.baseUrl + path, init);
    const payload = await resp.json().catch(() => null);
    if (!resp.ok) {
      const detail =
        payload && typeof payload === "object" && "detail" in payload
          ? (payload as { detail: unknown }).detail
          : payload;
      const rule =
        detail && typeof detail === "object" && "rule" in detail
          ? String((detail as { rule: unknown }).rule)
          : null;
      throw new ApiError(resp.status, detail, rule);
    }
    return payload as T;
  }
}
