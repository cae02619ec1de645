//! The edge-list text format, the only graph wire format.
//!
//! First meaningful line is `n m`, followed by `m` lines `u v` with 0-based
//! ids and `u != v`. Blank lines and lines starting with `#` are ignored.
//! The writer emits edges sorted with `u < v`, so write-read-write is
//! byte-identical.

use super::{Graph, Provenance};
use crate::error::{Error, Result};

impl Graph {
    /// Parses the edge-list format; errors carry the 1-based line number.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let mut fields = body.split_whitespace();
            let a = parse_field(fields.next(), line)?;
            let b = parse_field(fields.next(), line)?;
            if fields.next().is_some() {
                return Err(Error::Parse {
                    line,
                    message: "expected exactly two fields".into(),
                });
            }
            match header {
                None => header = Some((a as usize, b as usize)),
                Some((n, m)) => {
                    if edges.len() >= m {
                        return Err(Error::Parse {
                            line,
                            message: format!("more than the declared {m} edges"),
                        });
                    }
                    if a == b {
                        return Err(Error::Parse {
                            line,
                            message: format!("loop at vertex {a}"),
                        });
                    }
                    if a as usize >= n || b as usize >= n {
                        return Err(Error::Parse {
                            line,
                            message: format!("edge ({a}, {b}) out of range for order {n}"),
                        });
                    }
                    edges.push((a, b));
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 1,
            message: "missing 'n m' header".into(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: text.lines().count(),
                message: format!("declared {m} edges but found {}", edges.len()),
            });
        }
        let g = Graph::new(n, edges, Provenance::EdgeList).map_err(|e| match e {
            Error::Domain(msg) => Error::Parse {
                line: 1,
                message: msg,
            },
            other => other,
        })?;
        Ok(g)
    }

    /// Canonical edge-list serialization: header then sorted edges.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(8 * (self.m() + 1));
        out.push_str(&format!("{} {}\n", self.n(), self.m()));
        for &(u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_field(field: Option<&str>, line: usize) -> Result<u32> {
    let text = field.ok_or(Error::Parse {
        line,
        message: "expected two whitespace-separated integers".into(),
    })?;
    text.parse().map_err(|_| Error::Parse {
        line,
        message: format!("not a non-negative integer: {text:?}"),
    })
}
