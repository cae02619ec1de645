//! The family-spec mini-grammar shared by the CLI and the verification
//! suites: `name:param[,param]`, with `/` separating the two factors of
//! `join:` and `lex:`.
//!
//! ```text
//! path:7  cycle:10  star:5  complete:4  complete_bipartite:3,4
//! wheel:7  fan:6  empty:3  tree:2,2,3  grid:2  counterexample:3
//! petersen  join:complete:1/cycle:6  lex:cycle:5/complete:2
//! ```

use super::families::petersen;
use super::products::{cartesian_grid, join, lexicographic, subdivided_wheel};
use super::{FamilySpec, Graph};
use crate::error::{Error, Result};

/// Parses a graph spec string and builds the graph.
pub fn parse_graph_spec(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    let bad = |msg: String| Error::domain(format!("bad graph spec {spec:?}: {msg}"));
    let (name, rest) = match spec.split_once(':') {
        Some((n, r)) => (n, Some(r)),
        None => (spec, None),
    };
    let params = |expect: usize| -> Result<Vec<usize>> {
        let raw = rest.ok_or_else(|| bad(format!("{name} needs {expect} parameter(s)")))?;
        let vals: Vec<usize> = raw
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| bad(format!("parameter of {name}: {e}")))?;
        if vals.len() != expect {
            return Err(bad(format!(
                "{name} needs {expect} parameter(s), got {}",
                vals.len()
            )));
        }
        Ok(vals)
    };
    match name {
        "path" => Graph::from_family(&FamilySpec::Path(params(1)?[0])),
        "cycle" => Graph::from_family(&FamilySpec::Cycle(params(1)?[0])),
        "star" => Graph::from_family(&FamilySpec::Star(params(1)?[0])),
        "complete" => Graph::from_family(&FamilySpec::Complete(params(1)?[0])),
        "empty" => Graph::from_family(&FamilySpec::Empty(params(1)?[0])),
        "wheel" => Graph::from_family(&FamilySpec::Wheel(params(1)?[0])),
        "fan" => Graph::from_family(&FamilySpec::Fan(params(1)?[0])),
        "complete_bipartite" => {
            let p = params(2)?;
            Graph::from_family(&FamilySpec::CompleteBipartite(p[0], p[1]))
        }
        "tree" => {
            let raw = rest.ok_or_else(|| bad("tree needs a Prüfer sequence".into()))?;
            let seq: Vec<u32> = raw
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(|p| p.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| bad(format!("Prüfer entry: {e}")))?;
            Graph::from_family(&FamilySpec::Prufer(seq))
        }
        "grid" => Ok(cartesian_grid(params(1)?[0])?.0),
        "counterexample" => subdivided_wheel(params(1)?[0]),
        "petersen" => {
            if rest.is_some() {
                return Err(bad("petersen takes no parameters".into()));
            }
            Ok(petersen())
        }
        "join" | "lex" => {
            let raw = rest.ok_or_else(|| bad(format!("{name} needs two factors")))?;
            let (left, right) = raw
                .split_once('/')
                .ok_or_else(|| bad(format!("{name} factors must be separated by '/'")))?;
            let g = parse_graph_spec(left)?;
            let h = parse_graph_spec(right)?;
            let order = if name == "join" {
                g.n() + h.n()
            } else {
                g.n() * h.n()
            };
            if order > super::MAX_ORDER {
                return Err(Error::Cap {
                    what: "product order",
                    cap: super::MAX_ORDER,
                    got: order,
                });
            }
            Ok(if name == "join" {
                join(&g, &h)
            } else {
                lexicographic(&g, &h)
            })
        }
        other => Err(bad(format!("unknown family {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_families() {
        assert_eq!(parse_graph_spec("cycle:10").unwrap().n(), 10);
        assert_eq!(parse_graph_spec("complete_bipartite:3,4").unwrap().m(), 12);
        assert_eq!(parse_graph_spec("petersen").unwrap().m(), 15);
        assert_eq!(parse_graph_spec("tree:2,2,3").unwrap().n(), 5);
    }

    #[test]
    fn parses_composites() {
        let w7 = parse_graph_spec("join:complete:1/cycle:6").unwrap();
        assert_eq!((w7.n(), w7.m()), (7, 12));
        let lex = parse_graph_spec("lex:cycle:5/complete:2").unwrap();
        assert_eq!(lex.n(), 10);
        assert!(lex.degrees().iter().all(|&d| d == 5));
    }

    #[test]
    fn rejects_junk() {
        assert!(parse_graph_spec("moebius:7").is_err());
        assert!(parse_graph_spec("cycle").is_err());
        assert!(parse_graph_spec("cycle:x").is_err());
        assert!(parse_graph_spec("join:cycle:3").is_err());
        assert!(parse_graph_spec("petersen:1").is_err());
    }
}
