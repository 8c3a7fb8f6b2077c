//! Labeled finite simple graphs: `G_λ` for a partition and finite prefixes of the
//! infinite ladder `G_i^∞` (vertices `x_j, y_j` for `j ≥ 3-i`, edges `x_j y_j` and
//! `x_j x_{j+1}`).
//!
//! Vertices are [`VertexLabel`]s kept in sorted `(kind, index)` order, so every
//! enumeration over a graph is reproducible.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::{Mode, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKind {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabel {
    kind: VertexKind,
    index: u32,
}

impl VertexLabel {
    pub fn new(kind: VertexKind, index: u32) -> Result<Self> {
        if index == 0 {
            return Err(Error::ZeroIndex);
        }
        Ok(Self { kind, index })
    }

    /// # Panics
    /// If `index` is zero.
    pub fn x(index: u32) -> Self {
        Self::new(VertexKind::X, index).expect("vertex index must be positive")
    }

    /// # Panics
    /// If `index` is zero.
    pub fn y(index: u32) -> Self {
        Self::new(VertexKind::Y, index).expect("vertex index must be positive")
    }

    pub fn kind(self) -> VertexKind {
        self.kind
    }

    pub fn index(self) -> u32 {
        self.index
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            VertexKind::X => 'x',
            VertexKind::Y => 'y',
        };
        write!(f, "{k}_{}", self.index)
    }
}

/// An unordered pair of distinct vertices, stored with the smaller label first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(VertexLabel, VertexLabel);

impl Edge {
    pub fn new(a: VertexLabel, b: VertexLabel) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Self(a, b)),
            std::cmp::Ordering::Greater => Ok(Self(b, a)),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    pub fn endpoints(self) -> (VertexLabel, VertexLabel) {
        (self.0, self.1)
    }

    pub fn contains(self, v: VertexLabel) -> bool {
        self.0 == v || self.1 == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LabeledGraph {
    vertices: BTreeSet<VertexLabel>,
    edges: BTreeSet<Edge>,
}

impl LabeledGraph {
    /// Builds a simple graph; duplicate edges collapse, loops and dangling
    /// endpoints are rejected.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = VertexLabel>,
        E: IntoIterator<Item = (VertexLabel, VertexLabel)>,
    {
        let vertices: BTreeSet<_> = vertices.into_iter().collect();
        let mut edge_set = BTreeSet::new();
        for (a, b) in edges {
            for v in [a, b] {
                if !vertices.contains(&v) {
                    return Err(Error::UnknownVertex(v));
                }
            }
            edge_set.insert(Edge::new(a, b)?);
        }
        Ok(Self {
            vertices,
            edges: edge_set,
        })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn vertices(&self) -> &BTreeSet<VertexLabel> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: VertexLabel, b: VertexLabel) -> bool {
        Edge::new(a, b).is_ok_and(|e| self.edges.contains(&e))
    }

    pub fn degree(&self, v: VertexLabel) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// True iff some vertex lies on no edge.
    pub fn has_isolated_vertex(&self) -> bool {
        let covered: BTreeSet<VertexLabel> = self
            .edges
            .iter()
            .flat_map(|e| [e.0, e.1])
            .collect();
        covered.len() < self.vertices.len()
    }

    /// Subgraph on `subset` containing every edge of `self` with both endpoints in it.
    pub fn induced_subgraph(&self, subset: &BTreeSet<VertexLabel>) -> Result<Self> {
        if let Some(v) = subset.iter().find(|v| !self.vertices.contains(v)) {
            return Err(Error::UnknownVertex(*v));
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| subset.contains(&e.0) && subset.contains(&e.1))
            .copied()
            .collect();
        Ok(Self {
            vertices: subset.clone(),
            edges,
        })
    }

    /// Maximal connected induced subgraphs, ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<LabeledGraph> {
        let indexed = IndexedGraph::from_graph(self);
        let mut seen = vec![false; indexed.len()];
        let mut out = Vec::new();
        for start in 0..indexed.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut members = BTreeSet::new();
            while let Some(v) = stack.pop() {
                members.insert(indexed.labels[v]);
                for &u in &indexed.neighbors[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            out.push(
                self.induced_subgraph(&members)
                    .expect("component vertices belong to the graph"),
            );
        }
        out
    }

    /// No cycles: `|E| = |V| - #components`.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.connected_components().len() == self.vertex_count()
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(ToString::to_string).collect();
        let es: Vec<String> = self.edges.iter().map(ToString::to_string).collect();
        write!(f, "V={{{}}} E={{{}}}", vs.join(","), es.join(","))
    }
}

/// `G_λ`: a vertex `x_h` for every part `h`, plus `y_h` when `h` occurs twice;
/// edges `x_{h+1} x_h` and `x_h y_h` whenever both endpoints exist.
///
/// Defined for every partition with multiplicities at most 2, neighborly or not;
/// non-neighborly inputs produce isolated vertices.
pub fn graph_of_partition(lambda: &Partition) -> Result<LabeledGraph> {
    let mut vertices = BTreeSet::new();
    for (part, multiplicity) in lambda.part_counts() {
        if multiplicity > 2 {
            return Err(Error::MultiplicityTooLarge { part, multiplicity });
        }
        vertices.insert(VertexLabel::x(part));
        if multiplicity == 2 {
            vertices.insert(VertexLabel::y(part));
        }
    }
    let mut edges = Vec::new();
    for v in &vertices {
        if v.kind == VertexKind::X {
            let up = VertexLabel::x(v.index + 1);
            if vertices.contains(&up) {
                edges.push((*v, up));
            }
            let twin = VertexLabel::y(v.index);
            if vertices.contains(&twin) {
                edges.push((*v, twin));
            }
        }
    }
    LabeledGraph::new(vertices, edges)
}

/// `G_i^∞` restricted to indices `3-i ..= max_index`.
pub fn truncated_g_infinity(mode: Mode, max_index: u32) -> Result<LabeledGraph> {
    let min_index = mode.min_part();
    if max_index < min_index {
        return Err(Error::IndexTooSmall {
            max_index,
            min_index,
        });
    }
    let range = min_index..=max_index;
    let vertices = range
        .clone()
        .flat_map(|j| [VertexLabel::x(j), VertexLabel::y(j)]);
    let edges = range.flat_map(|j| {
        let rung = (VertexLabel::x(j), VertexLabel::y(j));
        let rail = (j < max_index).then(|| (VertexLabel::x(j), VertexLabel::x(j + 1)));
        std::iter::once(rung).chain(rail)
    });
    LabeledGraph::new(vertices, edges)
}

/// Recognizes a graph that is exactly `truncated_g_infinity(mode, max_index)`.
pub fn as_g_infinity_prefix(g: &LabeledGraph) -> Option<(Mode, u32)> {
    let lo = g.vertices.iter().map(|v| v.index).min()?;
    let hi = g.vertices.iter().map(|v| v.index).max()?;
    let mode = match lo {
        1 => Mode::Two,
        2 => Mode::One,
        _ => return None,
    };
    if g.vertex_count() != 2 * (hi - lo + 1) as usize || g.edge_count() != 2 * (hi - lo) as usize + 1
    {
        return None;
    }
    let prefix = truncated_g_infinity(mode, hi).ok()?;
    (prefix == *g).then_some((mode, hi))
}

/// Dense-index view of a [`LabeledGraph`] used by the enumeration routines.
#[derive(Debug, Clone)]
pub(crate) struct IndexedGraph {
    pub labels: Vec<VertexLabel>,
    pub neighbors: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl IndexedGraph {
    pub fn from_graph(g: &LabeledGraph) -> Self {
        let labels: Vec<VertexLabel> = g.vertices.iter().copied().collect();
        let position: BTreeMap<VertexLabel, usize> =
            labels.iter().enumerate().map(|(k, v)| (*v, k)).collect();
        let mut neighbors = vec![Vec::new(); labels.len()];
        let mut edges = Vec::with_capacity(g.edge_count());
        for e in &g.edges {
            let (a, b) = (position[&e.0], position[&e.1]);
            neighbors[a].push(b);
            neighbors[b].push(a);
            edges.push((a, b));
        }
        Self {
            labels,
            neighbors,
            edges,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Neighbor bitmasks. Callers guarantee at most 64 vertices.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        debug_assert!(self.len() <= 64);
        self.neighbors
            .iter()
            .map(|ns| ns.iter().fold(0u64, |m, &u| m | (1 << u)))
            .collect()
    }
}
