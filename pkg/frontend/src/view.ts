// Pure view-state bookkeeping, kept separate from the DOM so the game
// invariants ("occupied mirrors the server", no client-side game logic)
// are unit-testable without a browser.

import type { AttackResult, GraphJson, HistoryEntry } from './api.js';

export type Status = 'idle' | 'alive' | 'busy' | 'infeasible' | 'error';

export interface ViewState {
  graph: GraphJson | null;
  sessionId: string | null;
  k: number;
  occupied: Set<number>;
  lastMoves: [number, number][];
  history: HistoryEntry[];
  status: Status;
  message: string;
}

export function initialView(): ViewState {
  return {
    graph: null,
    sessionId: null,
    k: 0,
    occupied: new Set(),
    lastMoves: [],
    history: [],
    status: 'idle',
    message: '',
  };
}

export function onSessionStarted(
  state: ViewState,
  graph: GraphJson,
  id: string,
  k: number,
  config: number[],
): ViewState {
  return {
    ...state,
    graph,
    sessionId: id,
    k,
    occupied: new Set(config),
    lastMoves: [],
    history: [],
    status: 'alive',
    message: `session ${id}: ${k} guards`,
  };
}

// The occupied set is replaced wholesale by the server's config; the client
// never infers occupancy from the moves it animates.
export function onAttackResult(state: ViewState, vertex: number, result: AttackResult): ViewState {
  return {
    ...state,
    occupied: new Set(result.config),
    lastMoves: result.moves,
    history: [...state.history, { vertex, moves: result.moves }],
    status: 'alive',
    message: result.moves.length === 0
      ? `attack on ${vertex}: already covered`
      : `attack on ${vertex}: ${result.moves.length} guard(s) moved`,
  };
}

export function onFailure(state: ViewState, status: Status, message: string): ViewState {
  return { ...state, status, message };
}

export function canAttack(state: ViewState): boolean {
  return state.status === 'alive' && state.sessionId !== null;
}
