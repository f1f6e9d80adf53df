// Thin client for the session API. The server is the source of truth for
// all game state; nothing here second-guesses its answers.

export interface GraphJson {
  n: number;
  edges: [number, number][];
  labels?: Record<string, string>;
}

export interface SessionInfo {
  id: string;
  k: number;
  mode: string;
  config: number[];
}

export interface AttackResult {
  moves: [number, number][];
  config: number[];
}

export interface HistoryEntry {
  vertex: number;
  moves: [number, number][];
}

export interface SessionState extends SessionInfo {
  history: HistoryEntry[];
}

export interface AnalyzeReport {
  n: number;
  values: Record<string, number | null>;
  methods: Record<string, string>;
  budgetExceeded: boolean;
}

export class ApiError extends Error {
  status: number;
  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const res = await fetch(`${base}${path}`, {
    headers: { 'Content-Type': 'application/json' },
    ...init,
  });
  const body = await res.json().catch(() => ({}));
  if (!res.ok) {
    throw new ApiError(res.status, (body as { error?: string }).error ?? `HTTP ${res.status}`);
  }
  return body as T;
}

export class Api {
  base: string;

  constructor(base = '') {
    this.base = base;
  }

  createSession(graph: GraphJson, k: number): Promise<SessionInfo> {
    return request(this.base, '/api/session', {
      method: 'POST',
      body: JSON.stringify({ graph, k }),
    });
  }

  getSession(id: string): Promise<SessionState> {
    return request(this.base, `/api/session/${id}`);
  }

  attack(id: string, vertex: number): Promise<AttackResult> {
    return request(this.base, `/api/session/${id}/attack`, {
      method: 'POST',
      body: JSON.stringify({ vertex }),
    });
  }

  deleteSession(id: string): Promise<{ deleted: string }> {
    return request(this.base, `/api/session/${id}`, { method: 'DELETE' });
  }

  analyze(graph: GraphJson, params: string[]): Promise<AnalyzeReport> {
    return request(this.base, '/api/analyze', {
      method: 'POST',
      body: JSON.stringify({ graph, params }),
    });
  }
}
