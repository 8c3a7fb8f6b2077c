//! Weighted Hilbert series of monomial quotients.
//!
//! The multigraded Hilbert series of `A/I` sums every monomial outside `I`. Here it
//! is always specialized by sending each variable `v` to `q^w(v)`, which turns it
//! into a one-variable series that counts surviving monomials by weight.
//!
//! Independent routes:
//!
//! - [`weighted_hilbert_independent_sets`]: for an edge ideal a monomial survives iff
//!   its support is an independent set, so the series is
//!   `Σ_{W independent} ∏_{v∈W} q^w(v) / (1 - q^w(v))`.
//! - [`weighted_hilbert_inclusion_exclusion`]: `H_A · Σ_{S ⊆ gens} (-1)^|S| q^w(lcm S)`
//!   for any monomial ideal.
//! - [`ladder_hilbert_series`] and [`hp_r`]: transfer-matrix dynamic programs for the
//!   ladder prefixes and for `K[x_j]/<x_j², x_j x_{j+1}>`.
//!
//! [`weighted_subgraph_series_at`] evaluates the weighted subgraph enumerating
//! series by summing over vertex subsets and enumerating spanning edge subsets.

use std::collections::{BTreeMap, BTreeSet};

use crate::bounds::{Bounds, HARD_VERTEX_LIMIT};
use crate::error::{Error, Result};
use crate::graphs::{as_g_infinity_prefix, truncated_g_infinity, IndexedGraph, LabeledGraph, VertexLabel};
use crate::partitions::{ladder_exponents, Mode};
use crate::qseries::{inverse_one_minus, Coeff, Order, SeriesQ};
use crate::signature::{signed_neighborly_gf, spanning_cover_sum_at, SignatureRoute};
use crate::verify::Check;

/// A positive weight for every vertex of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMap {
    weights: BTreeMap<VertexLabel, u32>,
}

impl WeightMap {
    /// Checks that `weights` covers exactly the vertices of `g` with weights ≥ 1.
    pub fn new(g: &LabeledGraph, weights: BTreeMap<VertexLabel, u32>) -> Result<Self> {
        for v in g.vertices() {
            match weights.get(v) {
                None => return Err(Error::InvalidWeights(format!("vertex {v} has no weight"))),
                Some(0) => return Err(Error::InvalidWeights(format!("vertex {v} has weight 0"))),
                Some(_) => {}
            }
        }
        if let Some(extra) = weights.keys().find(|v| !g.vertices().contains(v)) {
            return Err(Error::InvalidWeights(format!("{extra} is not a vertex")));
        }
        Ok(Self { weights })
    }

    /// `w(x_j) = w(y_j) = j`.
    pub fn by_index(g: &LabeledGraph) -> Self {
        Self {
            weights: g.vertices().iter().map(|v| (*v, v.index())).collect(),
        }
    }

    pub fn uniform(g: &LabeledGraph, weight: u32) -> Result<Self> {
        Self::new(g, g.vertices().iter().map(|v| (*v, weight)).collect())
    }

    pub fn get(&self, v: VertexLabel) -> Option<u32> {
        self.weights.get(&v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexLabel, u32)> + '_ {
        self.weights.iter().map(|(v, w)| (*v, *w))
    }

    fn is_by_index(&self) -> bool {
        self.weights.iter().all(|(v, w)| v.index() == *w)
    }

    /// Weights in the graph's sorted vertex order.
    fn ordered(&self, g: &IndexedGraph) -> Vec<usize> {
        g.labels.iter().map(|v| self.weights[v] as usize).collect()
    }

    /// `∏_v 1 / (1 - q^w(v))`, the Hilbert series of the polynomial ring.
    pub fn ambient_series(&self, order: Order) -> Result<SeriesQ> {
        inverse_one_minus(self.weights.values().map(|&w| w as usize), order)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    pub name: String,
    pub weight: u32,
}

impl Variable {
    pub fn new(name: impl Into<String>, weight: u32) -> Self {
        Self {
            name: name.into(),
            weight,
        }
    }
}

/// A monomial ideal given by weighted variables and generator exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdealSpec {
    variables: Vec<Variable>,
    generators: Vec<Vec<u32>>,
}

impl MonomialIdealSpec {
    pub fn new(variables: Vec<Variable>, generators: Vec<Vec<u32>>) -> Result<Self> {
        let names: BTreeSet<&str> = variables.iter().map(|v| v.name.as_str()).collect();
        if names.len() != variables.len() {
            return Err(Error::InvalidIdeal("duplicate variable name".into()));
        }
        if let Some(v) = variables.iter().find(|v| v.weight == 0) {
            return Err(Error::InvalidIdeal(format!("variable {} has weight 0", v.name)));
        }
        for g in &generators {
            if g.len() != variables.len() {
                return Err(Error::InvalidIdeal(format!(
                    "generator has {} exponents for {} variables",
                    g.len(),
                    variables.len()
                )));
            }
            if g.iter().all(|&e| e == 0) {
                return Err(Error::InvalidIdeal("generator 1 is not allowed".into()));
            }
        }
        Ok(Self {
            variables,
            generators,
        })
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    /// Generators as `name -> exponent` maps, ignoring variable and generator order.
    pub fn generator_monomials(&self) -> BTreeSet<BTreeMap<String, u32>> {
        self.generators
            .iter()
            .map(|g| {
                g.iter()
                    .zip(&self.variables)
                    .filter(|(e, _)| **e > 0)
                    .map(|(e, v)| (v.name.clone(), *e))
                    .collect()
            })
            .collect()
    }

    /// Variables as a name-sorted set.
    pub fn variable_set(&self) -> BTreeSet<Variable> {
        self.variables.iter().cloned().collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().flatten().all(|&e| e <= 1)
    }

    pub fn weight_of(&self, exponents: &[u32]) -> usize {
        exponents
            .iter()
            .zip(&self.variables)
            .map(|(&e, v)| e as usize * v.weight as usize)
            .sum()
    }

    /// `<x_j², x_j x_{j+1}>` over the variables `x_j`, `3-i ≤ j ≤ max_index`, with
    /// `w(x_j) = j`. Its standard monomials are the gap-two partitions.
    pub fn consecutive_square_ideal(mode: Mode, max_index: u32) -> Result<Self> {
        let lo = mode.min_part();
        if max_index < lo {
            return Err(Error::IndexTooSmall {
                max_index,
                min_index: lo,
            });
        }
        let variables: Vec<Variable> = (lo..=max_index)
            .map(|j| Variable::new(VertexLabel::x(j).to_string(), j))
            .collect();
        let n = variables.len();
        let mut generators = Vec::new();
        for k in 0..n {
            let mut square = vec![0; n];
            square[k] = 2;
            generators.push(square);
            if k + 1 < n {
                let mut pair = vec![0; n];
                pair[k] = 1;
                pair[k + 1] = 1;
                generators.push(pair);
            }
        }
        Self::new(variables, generators)
    }
}

/// The edge ideal `<uv : uv ∈ E(G)>`, one variable per vertex named by its label.
pub fn edge_ideal_of(g: &LabeledGraph, w: &WeightMap) -> Result<MonomialIdealSpec> {
    let labels: Vec<VertexLabel> = g.vertices().iter().copied().collect();
    let position: BTreeMap<VertexLabel, usize> =
        labels.iter().enumerate().map(|(k, v)| (*v, k)).collect();
    let variables = labels
        .iter()
        .map(|v| {
            let weight = w
                .get(*v)
                .ok_or_else(|| Error::InvalidWeights(format!("vertex {v} has no weight")))?;
            Ok(Variable::new(v.to_string(), weight))
        })
        .collect::<Result<Vec<_>>>()?;
    let generators = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = e.endpoints();
            let mut exps = vec![0; labels.len()];
            exps[position[&a]] = 1;
            exps[position[&b]] = 1;
            exps
        })
        .collect();
    MonomialIdealSpec::new(variables, generators)
}

/// Polarization with fresh variables named `{name}.{k}`.
pub fn polarize(spec: &MonomialIdealSpec) -> Result<MonomialIdealSpec> {
    polarize_with(spec, |name, k| format!("{name}.{k}"))
}

/// Replaces every power `x^e` in a generator by `x · x⁽¹⁾ ⋯ x⁽ᵉ⁻¹⁾`, where the
/// `k`-th copy `x⁽ᵏ⁾ = naming(x, k)` is one shared variable carrying the weight of `x`.
pub fn polarize_with<F>(spec: &MonomialIdealSpec, naming: F) -> Result<MonomialIdealSpec>
where
    F: Fn(&str, u32) -> String,
{
    let n = spec.variables.len();
    let mut variables = spec.variables.clone();
    // copy_slot[v][k-1] = column of the k-th copy of variable v
    let mut copy_slot: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (v, var) in spec.variables.iter().enumerate() {
        let max_exp = spec.generators.iter().map(|g| g[v]).max().unwrap_or(0);
        for k in 1..max_exp {
            copy_slot[v].push(variables.len());
            variables.push(Variable::new(naming(&var.name, k), var.weight));
        }
    }
    let generators = spec
        .generators
        .iter()
        .map(|g| {
            let mut out = vec![0; variables.len()];
            for (v, &e) in g.iter().enumerate() {
                if e > 0 {
                    out[v] = 1;
                    for &slot in &copy_slot[v][..(e - 1) as usize] {
                        out[slot] = 1;
                    }
                }
            }
            out
        })
        .collect();
    MonomialIdealSpec::new(variables, generators)
}

/// Weighted Hilbert series of `A / I(G)` by independent-set enumeration.
///
/// A ladder prefix with `w(x_j) = w(y_j) = j` is dispatched to
/// [`ladder_hilbert_series`], which has no size limit. Other graphs are limited to
/// `bounds.max_vertices` vertices.
pub fn weighted_hilbert_independent_sets(
    g: &LabeledGraph,
    w: &WeightMap,
    order: Order,
    bounds: &Bounds,
) -> Result<SeriesQ> {
    if w.is_by_index() {
        if let Some((mode, max_index)) = as_g_infinity_prefix(g) {
            return ladder_hilbert_series(mode, max_index, order);
        }
    }
    generic_independent_set_series(g, w, order, bounds)
}

/// The independent-set route without the ladder shortcut.
pub fn generic_independent_set_series(
    g: &LabeledGraph,
    w: &WeightMap,
    order: Order,
    bounds: &Bounds,
) -> Result<SeriesQ> {
    Bounds::check("vertex", g.vertex_count(), bounds.max_vertices.min(HARD_VERTEX_LIMIT))?;
    let indexed = IndexedGraph::from_graph(g);
    let adj = indexed.adjacency_masks();
    let weights = w.ordered(&indexed);

    struct Walk<'a> {
        adj: &'a [u64],
        weights: &'a [usize],
        limit: usize,
        total: SeriesQ,
    }

    impl Walk<'_> {
        fn rec(&mut self, k: usize, blocked: u64, acc: &SeriesQ, weight: usize) -> Result<()> {
            if k == self.weights.len() {
                self.total = self.total.try_add(acc)?;
                return Ok(());
            }
            self.rec(k + 1, blocked, acc, weight)?;
            let wk = self.weights[k];
            if blocked & (1 << k) == 0 && weight + wk <= self.limit {
                // support gains v_k: factor q^w / (1 - q^w)
                let mut next = acc.shift(wk);
                next.div_one_minus_in_place(wk)?;
                self.rec(k + 1, blocked | self.adj[k] | (1 << k), &next, weight + wk)?;
            }
            Ok(())
        }
    }

    let mut walk = Walk {
        adj: &adj,
        weights: &weights,
        limit: order.value(),
        total: SeriesQ::zero(order),
    };
    walk.rec(0, 0, &SeriesQ::one(order), 0)?;
    Ok(walk.total)
}

/// Weighted Hilbert series of `A/I` by inclusion-exclusion over generator subsets:
/// `H_A · Σ_S (-1)^|S| q^w(lcm S)`. Subsets whose lcm already exceeds the order are
/// pruned together with all their supersets.
pub fn weighted_hilbert_inclusion_exclusion(
    spec: &MonomialIdealSpec,
    order: Order,
    bounds: &Bounds,
) -> Result<SeriesQ> {
    Bounds::check("generator", spec.generators.len(), bounds.max_generators)?;
    let weights: Vec<usize> = spec.variables.iter().map(|v| v.weight as usize).collect();
    let mut numerator = SeriesQ::zero(order);

    #[allow(clippy::too_many_arguments)]
    fn rec(
        idx: usize,
        spec: &MonomialIdealSpec,
        weights: &[usize],
        lcm: &mut Vec<u32>,
        weight: usize,
        sign: Coeff,
        limit: usize,
        numerator: &mut SeriesQ,
    ) -> Result<()> {
        if idx == spec.generators.len() {
            return numerator.add_to_coeff(weight, sign);
        }
        rec(idx + 1, spec, weights, lcm, weight, sign, limit, numerator)?;
        let g = &spec.generators[idx];
        let added: usize = g
            .iter()
            .zip(lcm.iter())
            .zip(weights)
            .map(|((&e, &l), &w)| e.saturating_sub(l) as usize * w)
            .sum();
        if weight + added <= limit {
            let saved = lcm.clone();
            for (l, &e) in lcm.iter_mut().zip(g) {
                *l = (*l).max(e);
            }
            rec(idx + 1, spec, weights, lcm, weight + added, -sign, limit, numerator)?;
            *lcm = saved;
        }
        Ok(())
    }

    let mut lcm = vec![0; weights.len()];
    rec(0, spec, &weights, &mut lcm, 0, 1, order.value(), &mut numerator)?;
    let ambient = inverse_one_minus(weights.iter().copied(), order)?;
    numerator.try_mul(&ambient)
}

/// Weighted specialization of the subgraph enumerating series at `z`:
/// `Σ_{V'} q^w(V') · Σ_H z^|E(H)|`, where `H` ranges over spanning subgraphs of the
/// induced graph on `V'` without isolated vertices. Constant term 1 (`V' = ∅`).
///
/// Vertex subsets are walked in sorted order; a branch is cut as soon as its weight
/// passes the order or a chosen vertex has all neighbors decided and none chosen.
pub fn weighted_subgraph_series_at(
    g: &LabeledGraph,
    w: &WeightMap,
    z: Coeff,
    order: Order,
    bounds: &Bounds,
) -> Result<SeriesQ> {
    let indexed = IndexedGraph::from_graph(g);
    let n = indexed.len();
    let weights = w.ordered(&indexed);
    // closing[k]: vertices whose own and neighbors' membership is decided at step k
    let mut closing = vec![Vec::new(); n];
    for v in 0..n {
        let last = indexed.neighbors[v].iter().copied().max().unwrap_or(v).max(v);
        closing[last].push(v);
    }

    struct Walk<'a> {
        g: &'a LabeledGraph,
        indexed: &'a IndexedGraph,
        weights: &'a [usize],
        closing: &'a [Vec<usize>],
        z: Coeff,
        bounds: &'a Bounds,
        limit: usize,
        chosen: Vec<bool>,
        total: SeriesQ,
    }

    impl Walk<'_> {
        fn closes_cleanly(&self, k: usize) -> bool {
            self.closing[k].iter().all(|&v| {
                !self.chosen[v] || self.indexed.neighbors[v].iter().any(|&u| self.chosen[u])
            })
        }

        fn rec(&mut self, k: usize, weight: usize) -> Result<()> {
            if k == self.indexed.len() {
                let subset: BTreeSet<VertexLabel> = (0..k)
                    .filter(|&v| self.chosen[v])
                    .map(|v| self.indexed.labels[v])
                    .collect();
                let induced = self.g.induced_subgraph(&subset)?;
                let value = spanning_cover_sum_at(&induced, self.z, self.bounds)?;
                return self.total.add_to_coeff(weight, value);
            }
            if self.closes_cleanly(k) {
                self.rec(k + 1, weight)?;
            }
            let wk = self.weights[k];
            if weight + wk <= self.limit {
                self.chosen[k] = true;
                if self.closes_cleanly(k) {
                    self.rec(k + 1, weight + wk)?;
                }
                self.chosen[k] = false;
            }
            Ok(())
        }
    }

    let mut walk = Walk {
        g,
        indexed: &indexed,
        weights: &weights,
        closing: &closing,
        z,
        bounds,
        limit: order.value(),
        chosen: vec![false; n],
        total: SeriesQ::zero(order),
    };
    walk.rec(0, 0)?;
    Ok(walk.total)
}

/// Hilbert series of `K[x_j, y_j] / <x_j y_j, x_j x_{j+1}>` over `3-i ≤ j ≤ max_index`
/// with `w(x_j) = w(y_j) = j`, by a two-state transfer over `j` (state: whether
/// `x_j` divides the monomial).
pub fn ladder_hilbert_series(mode: Mode, max_index: u32, order: Order) -> Result<SeriesQ> {
    let lo = mode.min_part() as usize;
    let hi = (max_index as usize).min(order.value());
    let mut x_free = SeriesQ::one(order);
    let mut x_used = SeriesQ::zero(order);
    for j in lo..=hi {
        // x_j absent: y_j^b for any b >= 0
        let mut next_free = x_free.try_add(&x_used)?;
        next_free.div_one_minus_in_place(j)?;
        // x_j^a with a >= 1: needs x_{j-1} absent and y_j absent
        let mut next_used = x_free.shift(j);
        next_used.div_one_minus_in_place(j)?;
        x_free = next_free;
        x_used = next_used;
    }
    x_free.try_add(&x_used)
}

/// Hilbert series of `R = K[x_j, j ≥ 3-i] / <x_j², x_j x_{j+1}>` with `w(x_j) = j`,
/// using the variables of weight at most the order. Standard monomials are
/// squarefree with no two consecutive indices.
pub fn hp_r(mode: Mode, order: Order) -> Result<SeriesQ> {
    let mut x_free = SeriesQ::one(order);
    let mut x_used = SeriesQ::zero(order);
    for j in ladder_exponents(mode, order) {
        let next_free = x_free.try_add(&x_used)?;
        x_used = x_free.shift(j);
        x_free = next_free;
    }
    x_free.try_add(&x_used)
}

/// The ladder prefix relevant at `order`: indices up to the order, or the empty
/// graph when the order is below the smallest index.
pub fn ladder_prefix(mode: Mode, order: Order) -> Result<LabeledGraph> {
    let n = u32::try_from(order.value()).map_err(|_| Error::BoundExceeded {
        what: "order",
        actual: order.value(),
        limit: u32::MAX as usize,
    })?;
    if n < mode.min_part() {
        Ok(LabeledGraph::empty())
    } else {
        truncated_g_infinity(mode, n)
    }
}

/// `H_G = S_G(·, -1) / ∏_v (1 - q^w(v))`: Hilbert series by independent sets
/// against the subgraph series by spanning-subgraph enumeration.
pub fn lemma_hilb_check(
    g: &LabeledGraph,
    w: &WeightMap,
    order: Order,
    bounds: &Bounds,
) -> Result<Check> {
    let left = weighted_hilbert_independent_sets(g, w, order, bounds)?;
    let subgraphs = weighted_subgraph_series_at(g, w, -1, order, bounds)?;
    let right = subgraphs.try_mul(&w.ambient_series(order)?)?;
    Ok(Check::new("H_G = S_G(-1) / prod(1 - q^w)", left, right))
}

pub fn verify_lemma_hilb(
    g: &LabeledGraph,
    w: &WeightMap,
    order: Order,
    bounds: &Bounds,
) -> Result<std::result::Result<(), crate::qseries::Mismatch>> {
    Ok(lemma_hilb_check(g, w, order, bounds)?.outcome())
}

/// Polarization identity `HP_P(q) = HP_R(q) / ∏_{j ≥ 3-i} (1 - q^j)`.
pub fn polarization_check(mode: Mode, order: Order) -> Result<Check> {
    let left = ladder_hilbert_series(mode, order.value() as u32, order)?;
    let right = hp_r(mode, order)?.try_mul(&inverse_one_minus(ladder_exponents(mode, order), order)?)?;
    Ok(Check::new("HP_P = HP_R / prod(1 - q^j)", left, right))
}

pub fn verify_polarization_identity(
    mode: Mode,
    order: Order,
) -> Result<std::result::Result<(), crate::qseries::Mismatch>> {
    Ok(polarization_check(mode, order)?.outcome())
}

/// `HP_P(q) = Σ δ(λ) q^|λ| / ∏_{j ≥ 3-i} (1 - q^j)²`.
pub fn proposition_check(mode: Mode, order: Order, bounds: &Bounds) -> Result<Check> {
    let left = ladder_hilbert_series(mode, order.value() as u32, order)?;
    let signed = signed_neighborly_gf(mode, order, SignatureRoute::IndependencePolynomial, bounds)?;
    let ladder = ladder_exponents(mode, order);
    let squared = inverse_one_minus(ladder.clone().chain(ladder), order)?;
    Ok(Check::new(
        "HP_P = signed neighborly series / prod(1 - q^j)^2",
        left,
        signed.try_mul(&squared)?,
    ))
}

pub fn verify_proposition_hp(
    mode: Mode,
    order: Order,
    bounds: &Bounds,
) -> Result<std::result::Result<(), crate::qseries::Mismatch>> {
    Ok(proposition_check(mode, order, bounds)?.outcome())
}
