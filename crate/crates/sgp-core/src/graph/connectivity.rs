//! Exact vertex connectivity and clique number.

use super::Graph;
use crate::error::Result;

/// Minimum number of vertices whose removal disconnects the graph.
/// Conventions: a disconnected graph has connectivity 0 and the complete
/// graph `K_n` has connectivity `n - 1` (no cut exists), so the predicate
/// "`G` is `d`-connected" is uniformly `vertex_connectivity(g) >= d`.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n == 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    if g.m() == n * (n - 1) / 2 {
        return n - 1;
    }
    // Menger: for a non-complete graph the connectivity is the minimum over
    // non-adjacent pairs of the maximum number of internally disjoint paths,
    // computed as max-flow in the vertex-split digraph.
    let mut best = n - 1;
    for s in 0..n as u32 {
        for t in s + 1..n as u32 {
            if g.has_edge(s, t) {
                continue;
            }
            best = best.min(max_vertex_disjoint_paths(g, s, t, best));
        }
    }
    best
}

/// Max-flow between `out(s)` and `in(t)` in the split digraph where every
/// other vertex contributes a unit-capacity `in -> out` arc. Stops early
/// once the flow reaches `cap_hint` since callers only take minima.
fn max_vertex_disjoint_paths(g: &Graph, s: u32, t: u32, cap_hint: usize) -> usize {
    let n = g.n();
    let big = n as i32;
    let mut net = FlowNet::new(2 * n);
    let inn = |v: u32| 2 * v as usize;
    let out = |v: u32| 2 * v as usize + 1;
    for v in 0..n as u32 {
        let c = if v == s || v == t { big } else { 1 };
        net.arc(inn(v), out(v), c);
    }
    for &(u, v) in g.edges() {
        net.arc(out(u), inn(v), big);
        net.arc(out(v), inn(u), big);
    }
    net.max_flow(out(s), inn(t), cap_hint as i32) as usize
}

struct FlowNet {
    head: Vec<Vec<usize>>, // per-node arc indices
    to: Vec<usize>,
    cap: Vec<i32>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn arc(&mut self, from: usize, to: usize, cap: i32) {
        self.head[from].push(self.to.len());
        self.to.push(to);
        self.cap.push(cap);
        self.head[to].push(self.to.len());
        self.to.push(from);
        self.cap.push(0);
    }

    /// Dinic with an upper cutoff.
    fn max_flow(&mut self, s: usize, t: usize, cutoff: i32) -> i32 {
        let mut flow = 0;
        while flow < cutoff {
            let level = self.bfs_levels(s);
            if level[t].is_none() {
                break;
            }
            let mut iter = vec![0usize; self.head.len()];
            loop {
                let pushed = self.dfs_push(s, t, cutoff - flow, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
                if flow >= cutoff {
                    break;
                }
            }
        }
        flow
    }

    fn bfs_levels(&self, s: usize) -> Vec<Option<u32>> {
        let mut level = vec![None; self.head.len()];
        let mut queue = std::collections::VecDeque::new();
        level[s] = Some(0);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &a in &self.head[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && level[v].is_none() {
                    level[v] = Some(level[u].unwrap() + 1);
                    queue.push_back(v);
                }
            }
        }
        level
    }

    fn dfs_push(
        &mut self,
        u: usize,
        t: usize,
        limit: i32,
        level: &[Option<u32>],
        iter: &mut [usize],
    ) -> i32 {
        if u == t || limit == 0 {
            return limit;
        }
        while iter[u] < self.head[u].len() {
            let a = self.head[u][iter[u]];
            let v = self.to[a];
            if self.cap[a] > 0 && level[v] == level[u].map(|l| l + 1) {
                let pushed = self.dfs_push(v, t, limit.min(self.cap[a]), level, iter);
                if pushed > 0 {
                    self.cap[a] -= pushed;
                    self.cap[a ^ 1] += pushed;
                    return pushed;
                }
            }
            iter[u] += 1;
        }
        0
    }
}

/// Clique number by branch and bound over one-word candidate masks.
pub fn clique_number(g: &Graph) -> Result<usize> {
    let rows = g.masks_or_cap("clique search order")?;
    let mut best = 0usize;
    let all = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    expand(rows, 0, all, &mut best);
    Ok(best)
}

fn expand(rows: &[u64], size: usize, cand: u64, best: &mut usize) {
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    let v = cand.trailing_zeros();
    expand(rows, size + 1, cand & rows[v as usize], best);
    expand(rows, size, cand & !(1u64 << v), best);
}

/// Brute-force reference: smallest vertex set whose removal disconnects the
/// graph, by exhaustive enumeration. Used to cross-check the flow-based
/// implementation on small graphs.
#[cfg(test)]
pub fn vertex_connectivity_bruteforce(g: &Graph) -> Result<usize> {
    let rows = g.masks_or_cap("connectivity brute force order")?;
    let n = g.n();
    if !g.is_connected() {
        return Ok(0);
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for size in 1..n.saturating_sub(1) {
        for cut in crate::bits::k_subset_masks(n, size) {
            let rest = all & !cut;
            if rest.count_ones() >= 2 && !connected_under(rows, rest) {
                return Ok(size);
            }
        }
    }
    Ok(n - 1)
}

#[cfg(test)]
fn connected_under(rows: &[u64], mask: u64) -> bool {
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
