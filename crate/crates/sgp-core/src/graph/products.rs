//! Graph products and the purpose-built constructions: join, lexicographic
//! product, finite grid windows, split graphs and the subdivided wheel.
//!
//! Products fix their id layout so projections stay pure arithmetic:
//! `join(g, h)` keeps `g`'s ids and offsets `h`'s by `n(g)`; the
//! lexicographic product numbers `(a, x)` as `a * n(h) + x` (row-major).

use super::{Graph, Provenance, VertexSet};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Join `g ∨ h`: disjoint union plus every edge between the factors.
///
/// Panics if the combined order exceeds [`super::MAX_ORDER`]; the spec
/// parser checks that bound before calling in.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.n() as u32;
    let mut edges: Vec<(u32, u32)> = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(u, v)| (u + off, v + off)));
    for u in 0..g.n() as u32 {
        for v in 0..h.n() as u32 {
            edges.push((u, off + v));
        }
    }
    Graph::new(
        g.n() + h.n(),
        edges,
        Provenance::Join {
            left: g.n(),
            right: h.n(),
        },
    )
    .expect("factors are valid and their total order fits MAX_ORDER")
}

/// Lexicographic product `g ∘ h`: vertex `(a, x)` has id `a * n(h) + x`;
/// `(a, x)` and `(b, y)` are adjacent when `ab` is an edge of `g`, or
/// `a = b` and `xy` is an edge of `h`.
///
/// Panics if the product order exceeds [`super::MAX_ORDER`]; the spec
/// parser checks that bound before calling in.
pub fn lexicographic(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n() as u32;
    let mut edges = Vec::new();
    for &(a, b) in g.edges() {
        for x in 0..nh {
            for y in 0..nh {
                edges.push((a * nh + x, b * nh + y));
            }
        }
    }
    for a in 0..g.n() as u32 {
        for &(x, y) in h.edges() {
            edges.push((a * nh + x, a * nh + y));
        }
    }
    Graph::new(
        g.n() * h.n(),
        edges,
        Provenance::Lexicographic {
            left: g.n(),
            right: h.n(),
        },
    )
    .expect("factors are valid and their product order fits MAX_ORDER")
}

/// Finite window of the integer grid: coordinates `(x, y)` with
/// `|x| <= radius` and `|y| <= radius`, adjacent at L1 distance 1.
///
/// Soundness of using a window in place of the infinite grid: folding the
/// plane onto the window (clamping each coordinate to `[-R, R]`) maps edges
/// to edges or collapses them, so any connected subgraph containing a
/// terminal set `W` folds to one inside the bounding box of `W` that is no
/// larger. Steiner distances of sets whose bounding box lies strictly inside
/// the window therefore agree with their infinite-grid values, and any
/// window with margin >= 1 around a construction's bounding box is faithful.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GridSpec {
    radius: usize,
}

impl GridSpec {
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn side(&self) -> usize {
        2 * self.radius + 1
    }

    /// Vertex id of the coordinate pair, if inside the window.
    pub fn id(&self, x: i64, y: i64) -> Option<u32> {
        let r = self.radius as i64;
        if x.abs() > r || y.abs() > r {
            return None;
        }
        Some(((x + r) * self.side() as i64 + (y + r)) as u32)
    }

    pub fn coord(&self, id: u32) -> (i64, i64) {
        let side = self.side() as i64;
        let r = self.radius as i64;
        (id as i64 / side - r, id as i64 % side - r)
    }
}

/// Builds the `(2R+1) x (2R+1)` grid window and its coordinate map.
pub fn cartesian_grid(radius: usize) -> Result<(Graph, GridSpec)> {
    if radius < 1 {
        return Err(Error::domain("grid radius must be at least 1"));
    }
    let spec = GridSpec { radius };
    let side = spec.side();
    let n = side * side;
    let mut edges = Vec::with_capacity(2 * side * (side - 1));
    let mut labels = BTreeMap::new();
    let r = radius as i64;
    for x in -r..=r {
        for y in -r..=r {
            let v = spec.id(x, y).unwrap();
            labels.insert(v, format!("({x},{y})"));
            if let Some(u) = spec.id(x + 1, y) {
                edges.push((v, u));
            }
            if let Some(u) = spec.id(x, y + 1) {
                edges.push((v, u));
            }
        }
    }
    let g = Graph::new(n, edges, Provenance::Grid { radius })?.with_labels(labels)?;
    Ok((g, spec))
}

/// Wheel on `k + 1` vertices whose rim edges are subdivided `k - 1` times
/// and whose spokes are subdivided `k - 2` times, `k >= 3`.
///
/// This is the standard witness that a `(k-1)`-Steiner general position set
/// need not be a `k`-Steiner general position set: the hub together with the
/// rim vertices is one but not the other. Labels expose the hub as `w`, the
/// rim vertices as `v1..vk`, and for `k = 3` the rim subdivision vertices
/// adjacent to `v1`, `v3`, `v2` as `x`, `y`, `z` respectively.
pub fn subdivided_wheel(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::domain("subdivided wheel needs k >= 3"));
    }
    let k32 = k as u32;
    // ids: 0 = hub, 1..=k = rim vertices, then rim subdivisions edge by
    // edge, then spoke subdivisions spoke by spoke.
    let hub = 0u32;
    let rim = |i: u32| 1 + (i % k32); // i-th rim vertex, cyclic
    let rim_sub_base = 1 + k32;
    let spoke_sub_base = rim_sub_base + k32 * (k32 - 1);
    let n = 1 + k + k * (k - 1) + k * (k - 2);

    let mut edges = Vec::new();
    // rim edge j runs rim(j) .. rim(j+1) through k-1 subdivision vertices
    for j in 0..k32 {
        let chain: Vec<u32> = std::iter::once(rim(j))
            .chain((0..k32 - 1).map(|t| rim_sub_base + j * (k32 - 1) + t))
            .chain(std::iter::once(rim(j + 1)))
            .collect();
        edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
    }
    // spoke i runs hub .. rim(i) through k-2 subdivision vertices
    for i in 0..k32 {
        let chain: Vec<u32> = std::iter::once(hub)
            .chain((0..k32 - 2).map(|t| spoke_sub_base + i * (k32 - 2) + t))
            .chain(std::iter::once(rim(i)))
            .collect();
        edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
    }

    let mut labels = BTreeMap::new();
    labels.insert(hub, "w".to_string());
    for i in 0..k32 {
        labels.insert(1 + i, format!("v{}", i + 1));
    }
    if k == 3 {
        // One labelled vertex per rim edge, the one adjacent to the edge's
        // second endpoint: z next to v2, y next to v3, x next to v1.
        labels.insert(rim_sub_base + 1, "z".to_string());
        labels.insert(rim_sub_base + 2 + 1, "y".to_string());
        labels.insert(rim_sub_base + 4 + 1, "x".to_string());
    }
    Graph::new(n, edges, Provenance::SubdividedWheel { k })?.with_labels(labels)
}

/// Split graph: a clique on `0..r` and an independent set `r..r+s`, where
/// independent vertex `i` is attached to `neighbor_lists[i] ⊆ 0..r`.
/// The result must be connected.
pub fn split_graph(r: usize, neighbor_lists: &[Vec<u32>]) -> Result<Graph> {
    if r < 1 {
        return Err(Error::domain("split graph needs a clique of size r >= 1"));
    }
    let s = neighbor_lists.len();
    let mut edges = Vec::new();
    for u in 0..r as u32 {
        for v in u + 1..r as u32 {
            edges.push((u, v));
        }
    }
    for (i, list) in neighbor_lists.iter().enumerate() {
        if list.is_empty() {
            return Err(Error::domain(format!(
                "independent vertex {} has no clique neighbors; the graph would be disconnected",
                r + i
            )));
        }
        for &q in list {
            if q as usize >= r {
                return Err(Error::domain(format!(
                    "independent vertex {} lists neighbor {q} outside the clique 0..{r}",
                    r + i
                )));
            }
            edges.push((q, (r + i) as u32));
        }
    }
    let g = Graph::new(
        r + s,
        edges,
        Provenance::Split {
            clique: r,
            independent: s,
        },
    )?;
    if !g.is_connected() {
        return Err(Error::domain("split graph must be connected"));
    }
    Ok(g)
}

/// The clique/independent partition of a graph built by [`split_graph`].
pub fn split_partition(g: &Graph) -> Result<(VertexSet, VertexSet)> {
    match *g.provenance() {
        Provenance::Split {
            clique,
            independent,
        } => Ok((
            (0..clique as u32).collect(),
            (clique as u32..(clique + independent) as u32).collect(),
        )),
        _ => Err(Error::domain(
            "graph was not built by split_graph; clique/independent partition unknown",
        )),
    }
}
