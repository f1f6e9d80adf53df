import type { GraphJson } from './api.js';

export interface Point {
  x: number;
  y: number;
}

// Mulberry32: tiny seeded PRNG so layouts are reproducible across reloads.
export function seededRandom(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

// Plain force-directed placement: spring along edges, inverse-square
// repulsion everywhere, centering pull. Good enough for n <= ~40.
export function forceLayout(
  graph: GraphJson,
  width: number,
  height: number,
  seed = 42,
  iterations = 300,
): Point[] {
  const n = graph.n;
  const rand = seededRandom(seed);
  const pos: Point[] = [];
  for (let i = 0; i < n; i++) {
    pos.push({ x: (rand() - 0.5) * width * 0.8, y: (rand() - 0.5) * height * 0.8 });
  }
  if (n === 1) return [{ x: 0, y: 0 }];

  const k = Math.sqrt((width * height) / n) * 0.5;
  for (let iter = 0; iter < iterations; iter++) {
    const temp = 0.1 * Math.max(width, height) * (1 - iter / iterations);
    const disp: Point[] = pos.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = pos[i].x - pos[j].x;
        let dy = pos[i].y - pos[j].y;
        let d = Math.hypot(dx, dy);
        if (d < 0.01) {
          dx = rand() - 0.5;
          dy = rand() - 0.5;
          d = Math.hypot(dx, dy);
        }
        const rep = (k * k) / d;
        disp[i].x += (dx / d) * rep;
        disp[i].y += (dy / d) * rep;
        disp[j].x -= (dx / d) * rep;
        disp[j].y -= (dy / d) * rep;
      }
    }
    for (const [u, v] of graph.edges) {
      let dx = pos[u].x - pos[v].x;
      let dy = pos[u].y - pos[v].y;
      const d = Math.max(Math.hypot(dx, dy), 0.01);
      const att = (d * d) / k;
      dx = (dx / d) * att;
      dy = (dy / d) * att;
      disp[u].x -= dx;
      disp[u].y -= dy;
      disp[v].x += dx;
      disp[v].y += dy;
    }
    for (let i = 0; i < n; i++) {
      // centering keeps disconnected pieces on screen
      disp[i].x -= pos[i].x * 0.03;
      disp[i].y -= pos[i].y * 0.03;
      const d = Math.max(Math.hypot(disp[i].x, disp[i].y), 0.01);
      const step = Math.min(d, temp);
      pos[i].x += (disp[i].x / d) * step;
      pos[i].y += (disp[i].y / d) * step;
    }
  }

  // normalize into the viewport with a margin
  const xs = pos.map((p) => p.x);
  const ys = pos.map((p) => p.y);
  const minX = Math.min(...xs), maxX = Math.max(...xs);
  const minY = Math.min(...ys), maxY = Math.max(...ys);
  const margin = 40;
  const sx = (width - 2 * margin) / Math.max(maxX - minX, 1);
  const sy = (height - 2 * margin) / Math.max(maxY - minY, 1);
  const s = Math.min(sx, sy);
  return pos.map((p) => ({
    x: margin + (p.x - minX) * s + (width - 2 * margin - (maxX - minX) * s) / 2,
    y: margin + (p.y - minY) * s + (height - 2 * margin - (maxY - minY) * s) / 2,
  }));
}
