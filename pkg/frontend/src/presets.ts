import type { GraphJson } from './api.js';

export function star(leaves: number): GraphJson {
  const edges: [number, number][] = [];
  for (let i = 1; i <= leaves; i++) edges.push([0, i]);
  return { n: leaves + 1, edges };
}

export function path(n: number): GraphJson {
  const edges: [number, number][] = [];
  for (let i = 0; i + 1 < n; i++) edges.push([i, i + 1]);
  return { n, edges };
}

// 17-vertex split graph built from a 5-triple exact-cover instance over a
// 9-element ground set; triples 0, 1, 3 form an exact cover, so 5 guards
// suffice (triple vertices C0..C4 and u are the clique side).
export const coverSplitGraph: GraphJson = {
  n: 17,
  edges: [
    [0, 1], [0, 2], [0, 3], [0, 4], [0, 5], [0, 6], [0, 7], [0, 8],
    [1, 2], [1, 3], [1, 4], [1, 5], [1, 9], [1, 10], [1, 11],
    [2, 3], [2, 4], [2, 5], [2, 7], [2, 8], [2, 10],
    [3, 4], [3, 5], [3, 12], [3, 13], [3, 14],
    [4, 5], [4, 11], [4, 12], [4, 13],
    [5, 15], [5, 16],
  ],
  labels: {
    '0': 'C0', '1': 'C1', '2': 'C2', '3': 'C3', '4': 'C4', '5': 'u',
    '6': 'x0', '7': 'x1', '8': 'x2', '9': 'x3', '10': 'x4', '11': 'x5',
    '12': 'x6', '13': 'x7', '14': 'x8', '15': 'v', '16': 'w',
  },
};

// P3 with a pendant 3-path glued to every vertex; the m-eternal domination
// number doubles the base graph's vertex count (here 6).
export const pendantPathSample: GraphJson = {
  n: 12,
  edges: [
    [0, 1], [0, 4], [1, 2], [1, 7], [2, 10],
    [3, 4], [4, 5], [6, 7], [7, 8], [9, 10], [10, 11],
  ],
  labels: {
    '0': 'v0', '1': 'v1', '2': 'v2',
    '3': 'v0^0', '4': 'v0^1', '5': 'v0^2',
    '6': 'v1^0', '7': 'v1^1', '8': 'v1^2',
    '9': 'v2^0', '10': 'v2^1', '11': 'v2^2',
  },
};

export interface Preset {
  name: string;
  graph: GraphJson;
  defaultK: number;
}

export const presets: Preset[] = [
  { name: 'Star K(1,4)', graph: star(4), defaultK: 2 },
  { name: 'Star K(1,6)', graph: star(6), defaultK: 2 },
  { name: 'Path P5', graph: path(5), defaultK: 3 },
  { name: 'Path P8', graph: path(8), defaultK: 4 },
  { name: 'Cover split graph (17)', graph: coverSplitGraph, defaultK: 5 },
  { name: 'Pendant-path sample (12)', graph: pendantPathSample, defaultK: 6 },
];
