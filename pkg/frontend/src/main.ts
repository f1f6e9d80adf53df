import { Api, ApiError, type GraphJson } from './api.js';
import { forceLayout } from './layout.js';
import { presets } from './presets.js';
import { GraphRenderer } from './render.js';
import {
  canAttack,
  initialView,
  onAttackResult,
  onFailure,
  onSessionStarted,
  type ViewState,
} from './view.js';

const api = new Api('');
let state: ViewState = initialView();
let renderer: GraphRenderer;
let layoutSeed = 42;

function $(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

function setStatus(): void {
  const banner = $('status');
  banner.textContent = state.message;
  banner.className = `status ${state.status}`;
  const historyList = $('history');
  historyList.innerHTML = '';
  for (const entry of state.history.slice(-12).reverse()) {
    const li = document.createElement('li');
    const moved = entry.moves.map(([a, b]) => `${a}→${b}`).join(', ');
    li.textContent = `attack ${entry.vertex}${moved ? `; moves ${moved}` : ''}`;
    historyList.appendChild(li);
  }
}

async function startSession(graph: GraphJson, k: number): Promise<void> {
  if (state.sessionId) {
    api.deleteSession(state.sessionId).catch(() => undefined);
  }
  state = { ...initialView(), message: 'starting session…' };
  setStatus();
  try {
    const info = await api.createSession(graph, k);
    state = onSessionStarted(state, graph, info.id, info.k, info.config);
    const svg = $('board') as unknown as SVGSVGElement;
    renderer = new GraphRenderer(svg);
    const positions = forceLayout(graph, svg.clientWidth || 760, svg.clientHeight || 520, layoutSeed);
    renderer.draw(graph, positions, (v) => void attack(v));
    renderer.setOccupied(state.occupied);
  } catch (err) {
    if (err instanceof ApiError && err.status === 409) {
      state = onFailure(state, 'infeasible', `infeasible: ${err.message}`);
    } else {
      state = onFailure(state, 'error', String(err));
    }
  }
  setStatus();
}

async function attack(vertex: number): Promise<void> {
  if (!canAttack(state) || !state.sessionId) return;
  const sessionId = state.sessionId;
  state = { ...state, status: 'busy' };
  renderer.flashAttack(vertex);
  try {
    const result = await api.attack(sessionId, vertex);
    const next = onAttackResult(state, vertex, result);
    await renderer.animateMoves(result.moves, next.occupied);
    state = next;
  } catch (err) {
    // a failed defense freezes the session; the server state is truth
    state = onFailure(state, 'error', `defense failed: ${String(err)}`);
  }
  setStatus();
}

function wireControls(): void {
  const select = $('preset') as HTMLSelectElement;
  presets.forEach((preset, i) => {
    const option = document.createElement('option');
    option.value = String(i);
    option.textContent = preset.name;
    select.appendChild(option);
  });
  const kInput = $('guards') as HTMLInputElement;
  select.addEventListener('change', () => {
    kInput.value = String(presets[Number(select.value)].defaultK);
  });
  kInput.value = String(presets[0].defaultK);

  $('start').addEventListener('click', () => {
    const preset = presets[Number(select.value)];
    void startSession(preset.graph, Number(kInput.value));
  });

  $('import').addEventListener('click', () => {
    const raw = window.prompt('graph JSON ({"n": ..., "edges": [...]})');
    if (!raw) return;
    try {
      const graph = JSON.parse(raw) as GraphJson;
      void startSession(graph, Number(kInput.value));
    } catch {
      state = onFailure(state, 'error', 'could not parse graph JSON');
      setStatus();
    }
  });

  $('reseed').addEventListener('click', () => {
    layoutSeed = (layoutSeed * 1103515245 + 12345) >>> 0;
    if (state.graph) {
      const svg = $('board') as unknown as SVGSVGElement;
      const positions = forceLayout(state.graph, svg.clientWidth || 760, svg.clientHeight || 520, layoutSeed);
      renderer.draw(state.graph, positions, (v) => void attack(v));
      renderer.setOccupied(state.occupied);
    }
  });
}

wireControls();
setStatus();
