//! Immutable finite simple graphs, the families and products built on them,
//! and basic structural queries.
//!
//! Vertices are dense 0-based ids; human-readable labels (grid coordinates,
//! the `w`/`v_i` names of the subdivided wheel) are metadata only. Graphs are
//! immutable after construction, so they are freely shareable across threads
//! and every operation in the crate is a pure function of its inputs.
//!
//! Graphs up to [`MAX_ORDER`] vertices can be constructed; the exponential
//! subset searches additionally require the order to fit one machine word
//! (64) and enforce that at their own entry points.

mod connectivity;
mod families;
mod io;
mod products;
mod spec;

pub use connectivity::{clique_number, vertex_connectivity};
pub use families::FamilySpec;
pub use products::{
    cartesian_grid, join, lexicographic, split_graph, split_partition, subdivided_wheel, GridSpec,
};
pub use spec::parse_graph_spec;

use crate::bits;
use crate::error::{Error, Result};
use crate::steiner::Distance;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Hard ceiling on graph order; keeps accidental huge inputs out of the
/// exact algorithms.
pub const MAX_ORDER: usize = 4096;

/// Orders up to this fit a one-word subset mask; the branch-and-bound
/// searches and brute-force oracles require it.
pub const WORD_ORDER: usize = 64;

/// How a graph came to be; carried along so products can recover their
/// factor layout and split graphs their clique/independent partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    Family(FamilySpec),
    Join { left: usize, right: usize },
    Lexicographic { left: usize, right: usize },
    Grid { radius: usize },
    SubdividedWheel { k: usize },
    Split { clique: usize, independent: usize },
    Induced,
    Complement,
    EdgeList,
    Random { n: usize, seed: u64 },
    Named(String),
}

/// Canonical ordered set of vertex ids: strictly increasing, no duplicates.
/// The universal currency of every set-valued operation in the crate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<u32>);

impl VertexSet {
    /// Builds a set from arbitrary ids, sorting them; duplicates are a
    /// domain error.
    pub fn new(mut ids: Vec<u32>) -> Result<Self> {
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::domain("vertex set contains a duplicate id"));
        }
        Ok(VertexSet(ids))
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n as u32).collect())
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(bits::mask_to_ids(mask))
    }

    /// One-word mask of the members; only meaningful when all ids are < 64.
    pub fn mask(&self) -> u64 {
        debug_assert!(self.0.last().is_none_or(|&v| v < 64));
        bits::ids_to_mask(&self.0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Set minus a single vertex.
    pub fn without(&self, v: u32) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&u| u != v).collect())
    }

    /// Set plus a single vertex (no-op if already present).
    pub fn with(&self, v: u32) -> VertexSet {
        if self.contains(v) {
            return self.clone();
        }
        let mut ids = self.0.clone();
        let pos = ids.partition_point(|&u| u < v);
        ids.insert(pos, v);
        VertexSet(ids)
    }
}

impl FromIterator<u32> for VertexSet {
    /// Collects, sorts and deduplicates.
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        let mut ids: Vec<u32> = iter.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }
}

/// Immutable finite simple graph. Edges are stored once as `(u, v)` with
/// `u < v`, sorted; adjacency lists are sorted; one-word adjacency masks are
/// kept alongside whenever the order allows it.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
    masks: Option<Vec<u64>>,
    labels: BTreeMap<u32, String>,
    provenance: Provenance,
}

impl Graph {
    /// Validates and builds a graph: `1 <= n <= MAX_ORDER`, endpoints in
    /// range, no loops, no parallel edges.
    pub fn new(n: usize, mut edges: Vec<(u32, u32)>, provenance: Provenance) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("graph order must be at least 1"));
        }
        if n > MAX_ORDER {
            return Err(Error::Cap {
                what: "graph order",
                cap: MAX_ORDER,
                got: n,
            });
        }
        for e in &mut edges {
            if e.0 == e.1 {
                return Err(Error::domain(format!("loop at vertex {}", e.0)));
            }
            if e.0 as usize >= n || e.1 as usize >= n {
                return Err(Error::domain(format!(
                    "edge ({}, {}) out of range for order {}",
                    e.0, e.1, n
                )));
            }
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::domain(format!(
                "parallel edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let masks = (n <= WORD_ORDER).then(|| {
            let mut rows = vec![0u64; n];
            for &(u, v) in &edges {
                rows[u as usize] |= 1 << v;
                rows[v as usize] |= 1 << u;
            }
            rows
        });
        Ok(Graph {
            n,
            edges,
            adj,
            masks,
            labels: BTreeMap::new(),
            provenance,
        })
    }

    pub(crate) fn with_labels(mut self, labels: BTreeMap<u32, String>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for (&v, name) in &labels {
            if v as usize >= self.n {
                return Err(Error::domain(format!("label on unknown vertex {v}")));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::domain(format!("duplicate label {name:?}")));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn label(&self, v: u32) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<u32, String> {
        &self.labels
    }

    /// Looks a vertex up by its label.
    pub fn vertex_by_label(&self, name: &str) -> Option<u32> {
        self.labels
            .iter()
            .find_map(|(&v, l)| (l == name).then_some(v))
    }

    /// Per-row adjacency masks; present iff `n <= 64`.
    pub fn adjacency_masks(&self) -> Option<&[u64]> {
        self.masks.as_deref()
    }

    pub(crate) fn masks_or_cap(&self, what: &'static str) -> Result<&[u64]> {
        self.masks.as_deref().ok_or(Error::Cap {
            what,
            cap: WORD_ORDER,
            got: self.n,
        })
    }

    /// Checks every member of `set` is a vertex of this graph.
    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.as_slice().last() {
            Some(&v) if v as usize >= self.n => Err(Error::domain(format!(
                "vertex {v} out of range for order {}",
                self.n
            ))),
            _ => Ok(()),
        }
    }

    /// BFS distances from `src` to every vertex; `Infinite` across
    /// components.
    pub fn bfs_distances(&self, src: u32) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.n];
        let mut queue = std::collections::VecDeque::new();
        dist[src as usize] = Distance::Finite(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = match dist[u as usize] {
                Distance::Finite(d) => d,
                Distance::Infinite => unreachable!(),
            };
            for &v in self.neighbors(u) {
                if dist[v as usize] == Distance::Infinite {
                    dist[v as usize] = Distance::Finite(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// All-pairs distances, one BFS per vertex.
    pub fn all_distances(&self) -> Vec<Vec<Distance>> {
        (0..self.n as u32).map(|v| self.bfs_distances(v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(Distance::is_finite)
    }

    /// Connected components, each as a sorted vertex set, ordered by their
    /// smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start as usize] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &v in self.neighbors(u) {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(VertexSet(comp));
        }
        out
    }

    /// Degree-1 vertices; for a tree these are exactly its leaves.
    pub fn leaves(&self) -> VertexSet {
        (0..self.n as u32).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn is_tree(&self) -> bool {
        self.m() == self.n - 1 && self.is_connected()
    }

    /// Whether the subgraph induced by `mask` is connected (true for the
    /// empty and singleton masks). Requires one-word adjacency.
    pub(crate) fn connected_within(&self, mask: u64) -> bool {
        let rows = self.masks.as_deref().expect("caller checked word order");
        if mask == 0 {
            return true;
        }
        let mut reached = mask & mask.wrapping_neg();
        loop {
            let mut grown = reached;
            let mut m = reached;
            while m != 0 {
                let v = m.trailing_zeros();
                m &= m - 1;
                grown |= rows[v as usize] & mask;
            }
            if grown == reached {
                return reached == mask;
            }
            reached = grown;
        }
    }

    /// Component sizes of the subgraph induced by `mask`.
    pub(crate) fn components_within(&self, mask: u64) -> Vec<u64> {
        let rows = self.masks.as_deref().expect("caller checked word order");
        let mut rest = mask;
        let mut comps = Vec::new();
        while rest != 0 {
            let mut reached = rest & rest.wrapping_neg();
            loop {
                let mut grown = reached;
                let mut m = reached;
                while m != 0 {
                    let v = m.trailing_zeros();
                    m &= m - 1;
                    grown |= rows[v as usize] & rest;
                }
                if grown == reached {
                    break;
                }
                reached = grown;
            }
            comps.push(reached);
            rest &= !reached;
        }
        comps
    }
}

/// Complement graph on the same vertex set.
pub fn complement(g: &Graph) -> Graph {
    let mut edges = Vec::new();
    for u in 0..g.n() as u32 {
        for v in u + 1..g.n() as u32 {
            if !g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(g.n(), edges, Provenance::Complement).expect("complement of a valid graph is valid")
}

/// Subgraph induced by `set`, with vertices renumbered `0..set.len()`.
/// The second component maps each new id back to the original one.
pub fn induced_subgraph(g: &Graph, set: &VertexSet) -> Result<(Graph, Vec<u32>)> {
    g.check_set(set)?;
    let old_ids: Vec<u32> = set.iter().collect();
    let mut new_id = BTreeMap::new();
    for (i, &v) in old_ids.iter().enumerate() {
        new_id.insert(v, i as u32);
    }
    let mut edges = Vec::new();
    for &(u, v) in g.edges() {
        if let (Some(&a), Some(&b)) = (new_id.get(&u), new_id.get(&v)) {
            edges.push((a, b));
        }
    }
    let n = old_ids.len().max(1);
    // An empty selection still yields the (unusable) one-vertex graph guard
    // below rather than a zero-order graph.
    if old_ids.is_empty() {
        return Err(Error::domain("cannot induce on the empty vertex set"));
    }
    let induced = Graph::new(n, edges, Provenance::Induced)?;
    Ok((induced, old_ids))
}
