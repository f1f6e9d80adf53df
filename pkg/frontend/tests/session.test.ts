// End-to-end session test against the real backend, through the JSON API
// only (exactly what the browser client speaks). The server is spawned
// here; every exchange re-checks that our occupancy mirrors the server's.

import { ChildProcess, spawn } from 'node:child_process';
import { afterAll, beforeAll, describe, expect, it } from 'vitest';

import { Api } from '../src/api.js';
import { coverSplitGraph, path } from '../src/presets.js';
import { initialView, onAttackResult, onSessionStarted } from '../src/view.js';

const PORT = 8841;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForServer(timeoutMs = 30000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const res = await fetch(`${BASE}/api/session/0`);
      if (res.status === 404) return; // answering: good enough
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  throw new Error('backend did not come up');
}

beforeAll(async () => {
  server = spawn('python3', ['-m', 'domguard.cli', 'serve', '--port', String(PORT)], {
    stdio: 'ignore',
  });
  await waitForServer();
}, 40000);

afterAll(() => {
  server?.kill();
});

// deterministic attack script: cycles plus a pseudo-random mix
function attackScript(n: number, count: number, seed: number): number[] {
  const out: number[] = [];
  let s = seed;
  for (let i = 0; i < count; i++) {
    s = (s * 1103515245 + 12345) & 0x7fffffff;
    out.push(i % 3 === 0 ? i % n : s % n);
  }
  return out;
}

async function runScriptedSession(graph: typeof coverSplitGraph, k: number, attacks: number[]) {
  const api = new Api(BASE);
  const info = await api.createSession(graph, k);
  let state = onSessionStarted(initialView(), graph, info.id, info.k, info.config);
  expect(state.occupied.size).toBe(k);

  for (const vertex of attacks) {
    const result = await api.attack(info.id, vertex);
    state = onAttackResult(state, vertex, result);
    // attacked vertex occupied, guard count conserved, move count <= k
    expect(state.occupied.has(vertex)).toBe(true);
    expect(state.occupied.size).toBe(k);
    expect(result.moves.length).toBeLessThanOrEqual(k);
    // client occupancy mirrors the server's view
    const remote = await api.getSession(info.id);
    expect([...state.occupied].sort((a, b) => a - b)).toEqual(remote.config);
  }

  const final = await api.getSession(info.id);
  expect(final.history).toHaveLength(attacks.length);
  await api.deleteSession(info.id);
}

describe('scripted sessions', () => {
  it('defends 50 attacks on P5 with 3 guards', async () => {
    await runScriptedSession(path(5), 3, attackScript(5, 50, 17));
  }, 30000);

  it('defends 50 attacks on the 17-vertex cover preset with 5 guards', async () => {
    await runScriptedSession(coverSplitGraph, 5, attackScript(17, 50, 23));
  }, 60000);

  it('reports infeasible guard counts as 409', async () => {
    const api = new Api(BASE);
    await expect(api.createSession(path(5), 2)).rejects.toMatchObject({ status: 409 });
  });

  it('analyze endpoint agrees on known values', async () => {
    const api = new Api(BASE);
    const report = await api.analyze(path(5), ['gamma', 'medn']);
    expect(report.values).toEqual({ gamma: 2, medn: 3 });
  });
});
