#![allow(dead_code)]

use std::collections::BTreeMap;

use nrr_core::{LabeledGraph, SeriesQ, VertexLabel, WeightMap};
use rand::Rng;

/// Random simple graph on `x_1..x_n` with at most `max_edges` edges.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: u32, max_edges: usize) -> LabeledGraph {
    let n = rng.random_range(1..=max_vertices);
    let vs: Vec<VertexLabel> = (1..=n).map(VertexLabel::x).collect();
    let mut pairs = Vec::new();
    for a in 0..vs.len() {
        for b in a + 1..vs.len() {
            pairs.push((vs[a], vs[b]));
        }
    }
    let p = rng.random_range(0.0..1.0);
    let mut edges: Vec<_> = pairs.into_iter().filter(|_| rng.random_bool(p)).collect();
    while edges.len() > max_edges {
        let k = rng.random_range(0..edges.len());
        edges.swap_remove(k);
    }
    LabeledGraph::new(vs, edges).unwrap()
}

pub fn random_weights<R: Rng>(rng: &mut R, g: &LabeledGraph, max: u32) -> WeightMap {
    let w: BTreeMap<_, _> = g.vertices().iter().map(|v| (*v, rng.random_range(1..=max))).collect();
    WeightMap::new(g, w).unwrap()
}

/// All labeled simple graphs on `x_1..x_n`.
pub fn all_graphs(n: u32) -> Vec<LabeledGraph> {
    let vs: Vec<VertexLabel> = (1..=n).map(VertexLabel::x).collect();
    let mut pairs = Vec::new();
    for a in 0..vs.len() {
        for b in a + 1..vs.len() {
            pairs.push((vs[a], vs[b]));
        }
    }
    (0u32..1 << pairs.len())
        .map(|mask| {
            let es = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, e)| *e);
            LabeledGraph::new(vs.clone(), es).unwrap()
        })
        .collect()
}

/// Signature by a plain loop over edge-subset bitmasks.
pub fn signature_oracle(g: &LabeledGraph) -> i64 {
    let edges: Vec<_> = g.edges().iter().map(|e| e.endpoints()).collect();
    let mut total = 0i64;
    for mask in 0u64..1 << edges.len() {
        let mut covered = std::collections::BTreeSet::new();
        for (k, (a, b)) in edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                covered.insert(*a);
                covered.insert(*b);
            }
        }
        if covered.len() == g.vertex_count() {
            total += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        }
    }
    total
}

/// Hilbert series of `K[vars]/<gens>` by listing every monomial of weight ≤ `order`.
pub fn monomial_count_oracle(weights: &[u32], gens: &[Vec<u32>], order: usize) -> Vec<i64> {
    fn rec(
        k: usize,
        weights: &[u32],
        gens: &[Vec<u32>],
        exps: &mut Vec<u32>,
        weight: usize,
        order: usize,
        out: &mut Vec<i64>,
    ) {
        if k == weights.len() {
            let divisible = gens
                .iter()
                .any(|g| g.iter().zip(exps.iter()).all(|(a, b)| a <= b));
            if !divisible {
                out[weight] += 1;
            }
            return;
        }
        let w = weights[k] as usize;
        let mut e = 0;
        while weight + e as usize * w <= order {
            exps.push(e);
            rec(k + 1, weights, gens, exps, weight + e as usize * w, order, out);
            exps.pop();
            e += 1;
        }
    }
    let mut out = vec![0; order + 1];
    rec(0, weights, gens, &mut Vec::new(), 0, order, &mut out);
    out
}

/// `Σ_{S ⊆ E} z^|S| q^{w(V(S))}`: every subgraph without isolated vertices is the
/// edge set `S` on the vertices it touches.
pub fn subgraph_series_oracle(g: &LabeledGraph, w: &WeightMap, z: i64, order: usize) -> Vec<i64> {
    let edges: Vec<_> = g.edges().iter().map(|e| e.endpoints()).collect();
    let mut out = vec![0i64; order + 1];
    for mask in 0u64..1 << edges.len() {
        let mut touched = std::collections::BTreeSet::new();
        for (k, (a, b)) in edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                touched.insert(*a);
                touched.insert(*b);
            }
        }
        let weight: usize = touched.iter().map(|v| w.get(*v).unwrap() as usize).sum();
        if weight <= order {
            out[weight] += z.pow(mask.count_ones());
        }
    }
    out
}

pub fn coeffs(s: &SeriesQ) -> Vec<i64> {
    s.coeffs().to_vec()
}
