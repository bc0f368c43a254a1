// Thin client for the board service.  fetch is injectable so tests can
// stub the wire without a browser or a server.

import type {
  BoardView,
  HintView,
  PartitionRequest,
  SatRequest,
  SolvabilityView,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ServiceError";
  }
}

async function readError(response: Response): Promise<ServiceError> {
  let message = `service error ${response.status}`;
  try {
    const body = await response.json();
    if (typeof body?.detail === "string") message = body.detail;
  } catch {
    // non-JSON error body; keep the generic message
  }
  return new ServiceError(response.status, message);
}

export class ServiceClient {
  constructor(
    private readonly fetchImpl: FetchLike,
    private readonly base: string = "",
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.base + path, init);
    if (!response.ok) throw await readError(response);
    return (await response.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  createBoard(text: string): Promise<BoardView> {
    return this.post("/boards", { text });
  }

  getBoard(id: string): Promise<BoardView> {
    return this.request(`/boards/${id}`);
  }

  clickCell(id: string, cell: [number, number]): Promise<BoardView> {
    return this.post(`/boards/${id}/click`, { cell });
  }

  undo(id: string): Promise<BoardView> {
    return this.post(`/boards/${id}/undo`, {});
  }

  hint(id: string, budgetMs?: number): Promise<HintView> {
    return this.post(`/boards/${id}/hint`, budgetMs ? { budget_ms: budgetMs } : {});
  }

  solvability(id: string): Promise<SolvabilityView> {
    return this.request(`/boards/${id}/solvability`);
  }

  generatePartition(body: PartitionRequest): Promise<BoardView> {
    return this.post("/generate/3partition", body);
  }

  generateSat(body: SatRequest): Promise<BoardView> {
    return this.post("/generate/3sat", body);
  }
}
