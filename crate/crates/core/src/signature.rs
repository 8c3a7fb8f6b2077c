//! Signed counts of vertex-spanning subgraphs without isolated vertices.
//!
//! For a finite graph `G`, the signature is `δ(G) = Σ_S (-1)^|S|` over edge subsets
//! `S ⊆ E(G)` that cover every vertex. Two independent routes compute it:
//!
//! - [`signature_bruteforce`] enumerates all `2^|E|` edge subsets (Gray code order,
//!   constant work per step). This is the ground truth.
//! - [`signature_fast`] uses `δ(G) = (-1)^|V| · I_G(-1)`, where `I_G` is the
//!   independence polynomial. Inclusion-exclusion over the uncovered vertex set `U`
//!   leaves only the terms where `V \ U` spans no edge, i.e. is independent.

use rayon::prelude::*;

use crate::bounds::{Bounds, HARD_VERTEX_LIMIT};
use crate::error::{Error, Result};
use crate::graphs::{graph_of_partition, IndexedGraph, LabeledGraph};
use crate::partitions::{neighborly_partitions, Mode};
use crate::qseries::{Coeff, Order, SeriesQ};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SignedCount(pub Coeff);

impl SignedCount {
    pub fn get(self) -> Coeff {
        self.0
    }
}

impl std::fmt::Display for SignedCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which algorithm evaluates a signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignatureRoute {
    BruteForce,
    IndependencePolynomial,
}

/// `counts[k]` = number of `k`-edge subsets covering every vertex.
///
/// The empty graph has exactly one covering subset (the empty one).
pub fn spanning_cover_counts(g: &LabeledGraph, bounds: &Bounds) -> Result<Vec<u64>> {
    let m = g.edge_count();
    Bounds::check("edge", m, bounds.max_edges.min(63))?;
    let indexed = IndexedGraph::from_graph(g);
    let mut counts = vec![0u64; m + 1];
    if g.has_isolated_vertex() {
        return Ok(counts);
    }

    let mut cover = vec![0u32; indexed.len()];
    let mut uncovered = indexed.len();
    let mut size = 0usize;
    if uncovered == 0 {
        counts[0] = 1;
    }
    for step in 1u64..(1u64 << m) {
        let bit = step.trailing_zeros() as usize;
        let gray = step ^ (step >> 1);
        let (a, b) = indexed.edges[bit];
        if gray & (1 << bit) != 0 {
            for v in [a, b] {
                if cover[v] == 0 {
                    uncovered -= 1;
                }
                cover[v] += 1;
            }
            size += 1;
        } else {
            for v in [a, b] {
                cover[v] -= 1;
                if cover[v] == 0 {
                    uncovered += 1;
                }
            }
            size -= 1;
        }
        if uncovered == 0 {
            counts[size] += 1;
        }
    }
    Ok(counts)
}

/// `Σ_k counts[k] z^k` for the spanning cover counts of `g`.
pub fn spanning_cover_sum_at(g: &LabeledGraph, z: Coeff, bounds: &Bounds) -> Result<Coeff> {
    let counts = spanning_cover_counts(g, bounds)?;
    let overflow = || Error::Overflow("spanning subgraph sum");
    let mut total: Coeff = 0;
    let mut power: Coeff = 1;
    for (k, &c) in counts.iter().enumerate() {
        if k > 0 {
            power = power.checked_mul(z).ok_or_else(overflow)?;
        }
        if c != 0 {
            let c = Coeff::try_from(c).map_err(|_| overflow())?;
            let term = c.checked_mul(power).ok_or_else(overflow)?;
            total = total.checked_add(term).ok_or_else(overflow)?;
        }
    }
    Ok(total)
}

/// Signature by explicit enumeration of edge subsets.
pub fn signature_bruteforce(g: &LabeledGraph, bounds: &Bounds) -> Result<SignedCount> {
    spanning_cover_sum_at(g, -1, bounds).map(SignedCount)
}

/// `I_G(t) = Σ_{I independent} t^|I|`, the empty set included.
///
/// Forests use a rooted dynamic program per component; other graphs use the
/// recursion `I(G) = I(G - v) + t · I(G - N[v])` on a maximum-degree vertex.
pub fn independence_polynomial_at(g: &LabeledGraph, t: Coeff, bounds: &Bounds) -> Result<Coeff> {
    let n = g.vertex_count();
    let indexed = IndexedGraph::from_graph(g);
    if g.is_forest() {
        Bounds::check("forest vertex", n, bounds.max_forest_vertices)?;
        forest_independence(&indexed, t)
    } else {
        Bounds::check("vertex", n, bounds.max_vertices.min(HARD_VERTEX_LIMIT))?;
        let adj = indexed.adjacency_masks();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        general_independence(all, &adj, t)
    }
}

fn overflow_ip() -> Error {
    Error::Overflow("independence polynomial")
}

fn forest_independence(g: &IndexedGraph, t: Coeff) -> Result<Coeff> {
    let n = g.len();
    // without[v]: root v excluded; with[v]: root v included
    let mut without = vec![1 as Coeff; n];
    let mut with = vec![t; n];
    let mut visited = vec![false; n];
    let mut total: Coeff = 1;
    for root in 0..n {
        if visited[root] {
            continue;
        }
        // iterative DFS, recording (vertex, parent) in preorder
        let mut order = Vec::new();
        let mut stack = vec![(root, usize::MAX)];
        visited[root] = true;
        while let Some((v, parent)) = stack.pop() {
            order.push((v, parent));
            for &u in &g.neighbors[v] {
                if !visited[u] {
                    visited[u] = true;
                    stack.push((u, v));
                }
            }
        }
        for &(v, parent) in order.iter().rev() {
            if parent == usize::MAX {
                continue;
            }
            let child_any = without[v].checked_add(with[v]).ok_or_else(overflow_ip)?;
            without[parent] = without[parent].checked_mul(child_any).ok_or_else(overflow_ip)?;
            with[parent] = with[parent].checked_mul(without[v]).ok_or_else(overflow_ip)?;
        }
        let component = without[root].checked_add(with[root]).ok_or_else(overflow_ip)?;
        total = total.checked_mul(component).ok_or_else(overflow_ip)?;
    }
    Ok(total)
}

fn general_independence(mask: u64, adj: &[u64], t: Coeff) -> Result<Coeff> {
    if mask == 0 {
        return Ok(1);
    }
    let mut best = 0usize;
    let mut best_degree = 0u32;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & mask).count_ones();
        if d > best_degree {
            best = v;
            best_degree = d;
        }
    }
    if best_degree == 0 {
        let base = t.checked_add(1).ok_or_else(overflow_ip)?;
        return base.checked_pow(mask.count_ones()).ok_or_else(overflow_ip);
    }
    let without_v = mask & !(1u64 << best);
    let a = general_independence(without_v, adj, t)?;
    let b = general_independence(without_v & !adj[best], adj, t)?;
    b.checked_mul(t)
        .and_then(|tb| tb.checked_add(a))
        .ok_or_else(overflow_ip)
}

/// `(-1)^|V| · I_G(-1)`; must agree with [`signature_bruteforce`].
pub fn signature_fast(g: &LabeledGraph, bounds: &Bounds) -> Result<SignedCount> {
    let value = independence_polynomial_at(g, -1, bounds)?;
    let signed = if g.vertex_count().is_multiple_of(2) {
        Some(value)
    } else {
        value.checked_neg()
    };
    signed.map(SignedCount).ok_or_else(overflow_ip)
}

pub fn signature(g: &LabeledGraph, route: SignatureRoute, bounds: &Bounds) -> Result<SignedCount> {
    match route {
        SignatureRoute::BruteForce => signature_bruteforce(g, bounds),
        SignatureRoute::IndependencePolynomial => signature_fast(g, bounds),
    }
}

/// `Σ_{λ ∈ N_i(n)} δ(G_λ)`.
pub fn neighborly_signature_sum(
    n: usize,
    mode: Mode,
    route: SignatureRoute,
    bounds: &Bounds,
) -> Result<Coeff> {
    neighborly_partitions(n, mode)
        .iter()
        .try_fold(0 as Coeff, |acc, lambda| {
            let delta = signature(&graph_of_partition(lambda)?, route, bounds)?;
            acc.checked_add(delta.get())
                .ok_or(Error::Overflow("neighborly signature sum"))
        })
}

/// `Σ_{λ ∈ N_i} δ(λ) q^|λ|` truncated at `order`, with constant term 1 (the empty
/// partition, whose graph has one spanning subgraph with no edges).
///
/// Coefficients are computed in parallel; the result does not depend on scheduling.
pub fn signed_neighborly_gf(
    mode: Mode,
    order: Order,
    route: SignatureRoute,
    bounds: &Bounds,
) -> Result<SeriesQ> {
    let tail = (1..=order.value())
        .into_par_iter()
        .map(|n| neighborly_signature_sum(n, mode, route, bounds))
        .collect::<Result<Vec<_>>>()?;
    let mut coeffs = Vec::with_capacity(order.len());
    coeffs.push(1);
    coeffs.extend(tail);
    SeriesQ::from_coeffs(coeffs)
}
