//! Exact Steiner distances.
//!
//! The Steiner distance `d_G(W)` of a vertex set `W` is the minimum number
//! of edges of a connected subgraph of `G` containing `W`; the minimizer is
//! a tree. When `W` meets several components no such subgraph exists and the
//! distance is [`Distance::Infinite`].
//!
//! Two independent routes are kept side by side: [`steiner_table`] runs a
//! subset dynamic program over the terminal set (merge two sub-trees at a
//! vertex, then relax along graph edges), and [`naive_steiner_distance`]
//! enumerates vertex supersets of `W` by increasing size until one induces a
//! connected subgraph. The second is deliberately independent of the first
//! and serves as its oracle in tests and verification suites.
//!
//! # Membership in some Steiner tree
//!
//! [`on_some_steiner_tree`] decides whether `v` lies on at least one Steiner
//! `B`-tree via the identity
//!
//! > `v` lies on some Steiner `B`-tree  ⇔  `d_G(B ∪ {v}) = d_G(B)` (finite).
//!
//! Proof. If a Steiner `B`-tree `T` contains `v`, then `T` is a connected
//! subgraph containing `B ∪ {v}` of size `d_G(B)`, so `d_G(B ∪ {v}) <=
//! d_G(B)`; monotonicity gives the other direction, hence equality.
//! Conversely, a Steiner `(B ∪ {v})`-tree of size `d_G(B)` is a connected
//! subgraph containing `B` of minimum size, i.e. a Steiner `B`-tree, and it
//! contains `v`. If `d_G(B)` is infinite there is no Steiner `B`-tree at
//! all, and the predicate is false. ∎

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// Maximum number of terminals a table may cover: the table then has at
/// most `2^16 - 1` entries and the DP state stays one small array.
pub const MAX_TERMINALS: usize = 16;

/// A path/tree length that may be infinite. Infinity is a real variant, not
/// a magic integer, so accidental arithmetic on it cannot type-check; use
/// [`Distance::plus`] for saturating addition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn is_finite(&self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub fn finite(&self) -> Option<u32> {
        match *self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    /// Saturating addition: anything plus infinity is infinity.
    pub fn plus(self, other: Distance) -> Distance {
        match (self, other) {
            (Distance::Finite(a), Distance::Finite(b)) => Distance::Finite(a + b),
            _ => Distance::Infinite,
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

// JSON: a number, or null for infinity.
impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_some(d),
            Distance::Infinite => s.serialize_none(),
        }
    }
}

impl<'de> Deserialize<'de> for Distance {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Option<u32> = Option::deserialize(d)?;
        Ok(match v {
            Some(x) => Distance::Finite(x),
            None => Distance::Infinite,
        })
    }
}

/// Steiner distances of every nonempty subset of a fixed terminal set,
/// indexed by subset mask over terminal positions.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SteinerTable {
    terminals: VertexSet,
    #[serde(
        serialize_with = "serialize_dist_map",
        deserialize_with = "deserialize_dist_map"
    )]
    dist: Vec<Distance>,
}

fn serialize_dist_map<S: Serializer>(
    dist: &[Distance],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(dist.len().saturating_sub(1)))?;
    for (mask, d) in dist.iter().enumerate().skip(1) {
        map.serialize_entry(&mask.to_string(), d)?;
    }
    map.end()
}

fn deserialize_dist_map<'de, D: Deserializer<'de>>(
    d: D,
) -> std::result::Result<Vec<Distance>, D::Error> {
    let raw: std::collections::BTreeMap<String, Distance> = Deserialize::deserialize(d)?;
    let len = raw.len() + 1;
    if !len.is_power_of_two() {
        return Err(D::Error::custom("table must cover all nonempty masks"));
    }
    let mut dist = vec![Distance::Finite(0); len];
    for (key, value) in raw {
        let mask: usize = key.parse().map_err(D::Error::custom)?;
        if mask == 0 || mask >= len {
            return Err(D::Error::custom(format!("mask {mask} out of range")));
        }
        dist[mask] = value;
    }
    Ok(dist)
}

impl SteinerTable {
    pub fn terminals(&self) -> &VertexSet {
        &self.terminals
    }

    /// Distance of the subset given as a mask over terminal positions
    /// (bit `i` = `terminals[i]`). The mask must be nonempty.
    pub fn distance(&self, mask: u16) -> Distance {
        assert!(mask != 0, "Steiner distance of the empty set is undefined");
        self.dist[mask as usize]
    }

    /// Distance of the full terminal set.
    pub fn full(&self) -> Distance {
        self.dist[self.dist.len() - 1]
    }

    /// Checks the structural invariants of the table against its graph:
    /// singletons at 0, pairs at BFS distance, monotone under inclusion,
    /// and the tree-extension bound
    /// `d(S) <= d(S \ v) + min_{u in S \ v} d(u, v)`.
    pub fn check_invariants(&self, g: &Graph) -> std::result::Result<(), String> {
        let t = self.terminals.len();
        let ids: Vec<u32> = self.terminals.iter().collect();
        let dists: Vec<Vec<Distance>> = ids.iter().map(|&v| g.bfs_distances(v)).collect();
        for i in 0..t {
            if self.dist[1 << i] != Distance::Finite(0) {
                return Err(format!("singleton {{{}}} not at distance 0", ids[i]));
            }
            for j in i + 1..t {
                let expect = dists[i][ids[j] as usize];
                let got = self.dist[(1 << i) | (1 << j)];
                if got != expect {
                    return Err(format!(
                        "pair {{{}, {}}}: table {got}, BFS {expect}",
                        ids[i], ids[j]
                    ));
                }
            }
        }
        for mask in 1..self.dist.len() {
            let d = self.dist[mask];
            let mut bitset = mask;
            while bitset != 0 {
                let i = bitset.trailing_zeros() as usize;
                bitset &= bitset - 1;
                let sub = mask & !(1 << i);
                if sub == 0 {
                    continue;
                }
                if self.dist[sub] > d {
                    return Err(format!(
                        "not monotone: d({sub:b}) = {} > d({mask:b}) = {d}",
                        self.dist[sub]
                    ));
                }
                // cheapest attachment of terminal i to the rest
                let mut attach = Distance::Infinite;
                let mut rest = sub;
                while rest != 0 {
                    let j = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    attach = attach.min(dists[j][ids[i] as usize]);
                }
                if d > self.dist[sub].plus(attach) {
                    return Err(format!(
                        "extension bound violated at mask {mask:b} / terminal {}",
                        ids[i]
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Builds the full Steiner-distance table for `terminals` (at most
/// [`MAX_TERMINALS`]) by the merge-and-relax subset DP.
pub fn steiner_table(g: &Graph, terminals: &VertexSet) -> Result<SteinerTable> {
    g.check_set(terminals)?;
    let t = terminals.len();
    if t == 0 {
        return Err(Error::domain("terminal set must be nonempty"));
    }
    if t > MAX_TERMINALS {
        return Err(Error::Cap {
            what: "terminal set size",
            cap: MAX_TERMINALS,
            got: t,
        });
    }
    let n = g.n();
    let ids: Vec<u32> = terminals.iter().collect();
    let full = 1usize << t;

    // dp[mask * n + v] = least edges of a connected subgraph containing
    // { terminals in mask } ∪ { v }.
    let mut dp = vec![Distance::Infinite; full * n];
    for (i, &term) in ids.iter().enumerate() {
        let row = g.bfs_distances(term);
        let base = (1usize << i) * n;
        dp[base..base + n].copy_from_slice(&row);
    }

    let mut heap: BinaryHeap<Reverse<(u32, u32)>> = BinaryHeap::new();
    for mask in 1..full {
        if mask.count_ones() < 2 {
            continue;
        }
        let base = mask * n;
        // merge: split the terminal set at v; fixing the lowest bit in one
        // side visits every unordered split once
        let low = mask & mask.wrapping_neg();
        for v in 0..n {
            let mut best = dp[base + v];
            let mut sub = (mask - 1) & mask;
            while sub != 0 {
                if sub & low != 0 {
                    let other = mask ^ sub;
                    best = best.min(dp[sub * n + v].plus(dp[other * n + v]));
                }
                sub = (sub - 1) & mask;
            }
            dp[base + v] = best;
        }
        // relax along edges (Dijkstra over unit weights, merged values as
        // starting potentials)
        heap.clear();
        for v in 0..n {
            if let Distance::Finite(d) = dp[base + v] {
                heap.push(Reverse((d, v as u32)));
            }
        }
        while let Some(Reverse((d, v))) = heap.pop() {
            if dp[base + v as usize] != Distance::Finite(d) {
                continue;
            }
            for &u in g.neighbors(v) {
                let cand = Distance::Finite(d + 1);
                if cand < dp[base + u as usize] {
                    dp[base + u as usize] = cand;
                    heap.push(Reverse((d + 1, u)));
                }
            }
        }
    }

    let mut dist = vec![Distance::Finite(0); full];
    for mask in 1..full {
        let anchor = ids[mask.trailing_zeros() as usize];
        dist[mask] = dp[mask * n + anchor as usize];
    }
    let table = SteinerTable {
        terminals: terminals.clone(),
        dist,
    };
    #[cfg(debug_assertions)]
    debug_assert_monotone(&table);
    Ok(table)
}

#[cfg(debug_assertions)]
fn debug_assert_monotone(table: &SteinerTable) {
    for mask in 1..table.dist.len() {
        let mut bitset = mask;
        while bitset != 0 {
            let i = bitset.trailing_zeros();
            bitset &= bitset - 1;
            let sub = mask & !(1usize << i);
            if sub != 0 {
                debug_assert!(
                    table.dist[sub] <= table.dist[mask],
                    "Steiner table not monotone at mask {mask:b}"
                );
            }
        }
    }
}

/// Steiner distance of `w`: the full entry of its table.
pub fn steiner_distance(g: &Graph, w: &VertexSet) -> Result<Distance> {
    Ok(steiner_table(g, w)?.full())
}

/// Brute-force oracle: enumerate vertex supersets of `w` by increasing
/// size; the first one that induces a connected subgraph has `size - 1`
/// edges in its spanning tree, which is the Steiner distance. Exponential
/// in `n - |w|`; intended for graphs of order about 20 or less.
pub fn naive_steiner_distance(g: &Graph, w: &VertexSet) -> Result<Distance> {
    g.check_set(w)?;
    if w.is_empty() {
        return Err(Error::domain("terminal set must be nonempty"));
    }
    let _ = g.masks_or_cap("naive Steiner oracle order")?;
    // straddling components means no connecting subgraph at all
    let comp0 = g.components();
    let home = comp0
        .iter()
        .position(|c| c.contains(w.as_slice()[0]))
        .expect("vertex in some component");
    if !w.iter().all(|v| comp0[home].contains(v)) {
        return Ok(Distance::Infinite);
    }
    let wmask = w.mask();
    let free: Vec<u32> = (0..g.n() as u32).filter(|&v| !w.contains(v)).collect();
    for extra in 0..=free.len() {
        for combo in bits::k_subset_masks(free.len(), extra) {
            let mut mask = wmask;
            let mut c = combo;
            while c != 0 {
                let i = c.trailing_zeros() as usize;
                c &= c - 1;
                mask |= 1 << free[i];
            }
            if g.connected_within(mask) {
                return Ok(Distance::Finite((w.len() + extra - 1) as u32));
            }
        }
    }
    unreachable!("w lies in one component, so the whole component connects it")
}

/// Whether `v` lies on at least one Steiner `b`-tree; decided by the
/// distance identity documented in the module docs.
pub fn on_some_steiner_tree(g: &Graph, b: &VertexSet, v: u32) -> Result<bool> {
    if b.contains(v) {
        return Err(Error::domain("v must not be a member of b"));
    }
    let with_v = b.with(v);
    let table = steiner_table(g, &with_v)?;
    let pos = with_v.as_slice().iter().position(|&u| u == v).unwrap();
    let full_mask = ((1u32 << with_v.len()) - 1) as u16;
    let without = full_mask & !(1 << pos);
    match (table.distance(full_mask), table.distance(without)) {
        (Distance::Finite(a), Distance::Finite(b)) => Ok(a == b),
        _ => Ok(false),
    }
}
