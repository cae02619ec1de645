//! Constructors for the standard graph families.

use super::products::join;
use super::{Graph, Provenance};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Descriptor of a standard family instance. Wheels and fans are defined by
/// their join decompositions `W_n = K_1 ∨ C_{n-1}` and `F_n = K_1 ∨ P_{n-1}`
/// and the constructors build them exactly that way, so the direct family
/// and the join route produce identical edge sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    /// Star `K_{1,r}`: hub 0, `r` leaves.
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Wheel on `n` vertices (hub plus an `(n-1)`-cycle), `n >= 4`.
    Wheel(usize),
    /// Fan on `n` vertices (hub plus an `(n-1)`-path), `n >= 2`.
    Fan(usize),
    /// Tree decoded from a Prüfer sequence over `0..len+2`.
    Prufer(Vec<u32>),
    /// Edgeless graph.
    Empty(usize),
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Star(r) => write!(f, "star:{r}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(r, s) => write!(f, "complete_bipartite:{r},{s}"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::Fan(n) => write!(f, "fan:{n}"),
            FamilySpec::Prufer(seq) => {
                write!(f, "tree:")?;
                for (i, x) in seq.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
        }
    }
}

impl Graph {
    /// Builds the standard graph described by `spec`.
    pub fn from_family(spec: &FamilySpec) -> Result<Graph> {
        let provenance = Provenance::Family(spec.clone());
        let relabel = |g: Graph| Graph {
            provenance: Provenance::Family(spec.clone()),
            ..g
        };
        match *spec {
            FamilySpec::Path(n) => {
                require(n >= 1, "path needs n >= 1")?;
                let edges = (0..n.saturating_sub(1) as u32).map(|i| (i, i + 1)).collect();
                Graph::new(n, edges, provenance)
            }
            FamilySpec::Cycle(n) => {
                require(n >= 3, "cycle needs n >= 3")?;
                let edges = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
                Graph::new(n, edges, provenance)
            }
            FamilySpec::Star(r) => {
                require(r >= 1, "star needs r >= 1 leaves")?;
                let edges = (1..=r as u32).map(|v| (0, v)).collect();
                Graph::new(r + 1, edges, provenance)
            }
            FamilySpec::Complete(n) => {
                require(n >= 1, "complete graph needs n >= 1")?;
                let mut edges = Vec::new();
                for u in 0..n as u32 {
                    for v in u + 1..n as u32 {
                        edges.push((u, v));
                    }
                }
                Graph::new(n, edges, provenance)
            }
            FamilySpec::CompleteBipartite(r, s) => {
                require(r >= 1 && s >= 1, "complete bipartite needs r, s >= 1")?;
                let mut edges = Vec::new();
                for u in 0..r as u32 {
                    for v in 0..s as u32 {
                        edges.push((u, r as u32 + v));
                    }
                }
                Graph::new(r + s, edges, provenance)
            }
            FamilySpec::Wheel(n) => {
                require(n >= 4, "wheel needs n >= 4")?;
                let hub = Graph::from_family(&FamilySpec::Complete(1))?;
                let rim = Graph::from_family(&FamilySpec::Cycle(n - 1))?;
                Ok(relabel(join(&hub, &rim)))
            }
            FamilySpec::Fan(n) => {
                require(n >= 2, "fan needs n >= 2")?;
                let hub = Graph::from_family(&FamilySpec::Complete(1))?;
                let spine = Graph::from_family(&FamilySpec::Path(n - 1))?;
                Ok(relabel(join(&hub, &spine)))
            }
            FamilySpec::Prufer(ref seq) => prufer_tree(seq, provenance),
            FamilySpec::Empty(n) => {
                require(n >= 1, "empty graph needs n >= 1")?;
                Graph::new(n, Vec::new(), provenance)
            }
        }
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::domain(msg))
    }
}

/// Standard Prüfer decode: repeatedly join the smallest current leaf to the
/// next sequence entry. A sequence of length `t` yields the tree on `t + 2`
/// vertices whose leaves are exactly the ids missing from the sequence.
fn prufer_tree(seq: &[u32], provenance: Provenance) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x as usize >= n) {
        return Err(Error::domain(format!(
            "Prüfer entry {bad} out of range for order {n}"
        )));
    }
    let mut degree = vec![1u32; n];
    for &a in seq {
        degree[a as usize] += 1;
    }
    let mut leaves: BTreeSet<u32> = (0..n as u32).filter(|&v| degree[v as usize] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in seq {
        let leaf = *leaves.iter().next().expect("a tree always has a leaf");
        leaves.remove(&leaf);
        edges.push((leaf, a));
        degree[a as usize] -= 1;
        if degree[a as usize] == 1 {
            leaves.insert(a);
        }
    }
    let mut last = leaves.iter();
    let (u, v) = (*last.next().unwrap(), *last.next().unwrap());
    edges.push((u, v));
    Graph::new(n, edges, provenance)
}

/// The Petersen graph: outer 5-cycle, inner 5-cycle at step 2, spokes.
pub(super) fn petersen() -> Graph {
    let edges = vec![
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (0, 4),
        (5, 7),
        (7, 9),
        (6, 9),
        (6, 8),
        (5, 8),
        (0, 5),
        (1, 6),
        (2, 7),
        (3, 8),
        (4, 9),
    ];
    Graph::new(10, edges, Provenance::Named("petersen".into())).expect("static edge list")
}
