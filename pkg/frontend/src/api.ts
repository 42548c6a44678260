/** Thin JSON client for the session service. */

import type { GameInfo, MoveOutcome, SessionView } from "./model.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }
}

async function asJson<T>(response: Response): Promise<T> {
  const body = await response.json().catch(() => null);
  if (!response.ok) {
    const detail =
      body && typeof body.error === "string" ? body.error : response.statusText;
    throw new ApiError(response.status, detail);
  }
  return body as T;
}

export class ApiClient {
  constructor(private base: string = "") {}

  listGames(): Promise<GameInfo[]> {
    return fetch(`${this.base}/meta/games`).then((r) => asJson<GameInfo[]>(r));
  }

  createSession(game: string): Promise<SessionView> {
    return fetch(`${this.base}/games`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ game }),
    }).then((r) => asJson<SessionView>(r));
  }

  getState(id: string): Promise<SessionView> {
    return fetch(`${this.base}/games/${id}`).then((r) => asJson<SessionView>(r));
  }

  postMove(id: string, move: string): Promise<MoveOutcome> {
    return fetch(`${this.base}/games/${id}/moves`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ move }),
    }).then((r) => asJson<MoveOutcome>(r));
  }

  deleteSession(id: string): Promise<void> {
    return fetch(`${this.base}/games/${id}`, { method: "DELETE" }).then(() => {});
  }
}
