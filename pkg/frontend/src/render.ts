import type { GraphJson } from './api.js';
import type { Point } from './layout.js';

const SVG_NS = 'http://www.w3.org/2000/svg';
const R = 16;

function el<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, String(value));
  }
  return node;
}

export class GraphRenderer {
  svg: SVGSVGElement;
  private positions: Point[] = [];
  private nodeCircles: SVGCircleElement[] = [];
  private guardDots: Map<number, SVGCircleElement> = new Map();

  constructor(svg: SVGSVGElement) {
    this.svg = svg;
  }

  draw(graph: GraphJson, positions: Point[], onClick: (v: number) => void): void {
    this.positions = positions;
    this.nodeCircles = [];
    this.guardDots.clear();
    this.svg.innerHTML = '';

    const edgeLayer = el('g', { class: 'edges' });
    for (const [u, v] of graph.edges) {
      edgeLayer.appendChild(el('line', {
        x1: positions[u].x, y1: positions[u].y,
        x2: positions[v].x, y2: positions[v].y,
        class: 'edge',
      }));
    }
    this.svg.appendChild(edgeLayer);

    const nodeLayer = el('g', { class: 'nodes' });
    for (let v = 0; v < graph.n; v++) {
      const g = el('g', { class: 'node', 'data-vertex': v });
      const circle = el('circle', { cx: positions[v].x, cy: positions[v].y, r: R });
      const label = el('text', {
        x: positions[v].x, y: positions[v].y + 4,
        'text-anchor': 'middle',
      });
      label.textContent = graph.labels?.[String(v)] ?? String(v);
      g.appendChild(circle);
      g.appendChild(label);
      g.addEventListener('click', () => onClick(v));
      nodeLayer.appendChild(g);
      this.nodeCircles.push(circle);
    }
    this.svg.appendChild(nodeLayer);
    this.svg.appendChild(el('g', { class: 'guards' }));
  }

  setOccupied(occupied: Set<number>): void {
    const guardLayer = this.svg.querySelector('g.guards');
    if (!guardLayer) return;
    for (const [v, dot] of [...this.guardDots]) {
      if (!occupied.has(v)) {
        dot.remove();
        this.guardDots.delete(v);
      }
    }
    for (const v of occupied) {
      if (!this.guardDots.has(v)) {
        const dot = el('circle', {
          cx: this.positions[v].x, cy: this.positions[v].y - R - 7,
          r: 6, class: 'guard',
        });
        guardLayer.appendChild(dot);
        this.guardDots.set(v, dot);
      }
    }
    this.nodeCircles.forEach((c, v) => {
      c.classList.toggle('occupied', occupied.has(v));
    });
  }

  // Animate the server's move list in order, then settle on the new
  // occupied set. Resolves when the animation is done.
  animateMoves(moves: [number, number][], finalOccupied: Set<number>): Promise<void> {
    const guardLayer = this.svg.querySelector('g.guards');
    if (!guardLayer || moves.length === 0) {
      this.setOccupied(finalOccupied);
      return Promise.resolve();
    }
    const duration = 350;
    const movers = moves.map(([from, to]) => {
      const dot = this.guardDots.get(from);
      if (dot) this.guardDots.delete(from);
      return { from, to, dot };
    });
    return new Promise((resolve) => {
      const start = performance.now();
      const step = (now: number) => {
        const t = Math.min((now - start) / duration, 1);
        for (const { from, to, dot } of movers) {
          if (!dot) continue;
          const a = this.positions[from];
          const b = this.positions[to];
          dot.setAttribute('cx', String(a.x + (b.x - a.x) * t));
          dot.setAttribute('cy', String(a.y + (b.y - a.y) * t - R - 7));
        }
        if (t < 1) {
          requestAnimationFrame(step);
        } else {
          for (const { dot } of movers) dot?.remove();
          this.setOccupied(finalOccupied);
          resolve();
        }
      };
      requestAnimationFrame(step);
    });
  }

  flashAttack(v: number): void {
    const circle = this.nodeCircles[v];
    if (!circle) return;
    circle.classList.add('attacked');
    setTimeout(() => circle.classList.remove('attacked'), 600);
  }
}
