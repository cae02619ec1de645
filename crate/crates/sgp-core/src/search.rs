//! Decision procedures and exact maximum searches for the set invariants:
//! `k`-Steiner general position (`sgp_k`), `k`-Steiner cliques (`sω_k`),
//! `k`-Steiner join-critical sets (`sjc_k`), interval sets (`sgp_[k:l]`)
//! and the classical general position number (`gp = sgp_2`).
//!
//! # The search and why its pruning is sound
//!
//! All five set properties here are *hereditary* (closed under subsets),
//! which makes a depth-first include/exclude search over ascending vertex
//! ids exact:
//!
//! * `k`-SGP: a violation of `A'` is a `k`-subset `B ⊆ A'` and a vertex
//!   `v ∈ A' \ B` on some Steiner `B`-tree. The same `(B, v)` violates any
//!   superset of `A'`, so subsets of violation-free sets are violation-free.
//! * `k`-Steiner clique: every `k`-subset of a subset of `A` is a
//!   `k`-subset of `A`, and induced connectivity does not depend on the
//!   ambient set.
//! * `k`-Steiner join-critical: distances live in the induced subgraph
//!   `G[A]`, so shrinking `A` can only *increase* them. For a `k`-subset
//!   `B` of a valid `A`, either `d_{G[A]}(B) = k - 1` (then `G[B]` itself
//!   is connected and the value persists in every subset containing `B`)
//!   or `d_{G[A]}(B) > k` (then it stays `> k` in subsets). Either way the
//!   value `k` cannot appear, so validity is inherited.
//!
//! Hereditariness justifies two prunes: an invalid partial set is never
//! extended, and a branch whose partial set plus all remaining vertices
//! cannot beat the best known size is cut. Vertices are explored in
//! ascending id order with "include" before "exclude" and the incumbent is
//! only replaced on strict improvement, so the reported witness is always
//! the lexicographically smallest maximum set — searches are reproducible
//! bit for bit.
//!
//! Extending a valid set `A` by `v > max(A)` only requires checking the
//! violating objects that involve `v` (for `k`-SGP the `(k+1)`-subsets
//! containing `v`, for cliques the `k`-subsets containing `v`): any other
//! violating object would already violate `A` itself. The join-critical
//! property is the exception — adding `v` changes the induced subgraph
//! globally — so its membership re-checks the whole candidate, memoized by
//! candidate mask.
//!
//! # Enumeration contract for interval families
//!
//! [`enumerate_interval_sgp_sets`] yields the maximal-by-inclusion
//! `[k:l]`-sgp sets together with, for each maximal set `S`, every set
//! obtained from `S` by deleting vertices that are non-isolated in `G[S]`.
//! That suffices for maximizing any objective `|I_S|·c1 + |J_S|·c2` with
//! `c1, c2 >= 1` over the full family: a maximizer `S*` extends to a
//! maximal `M ⊇ S*`, and re-adding any deleted vertex that is *isolated*
//! in `G[M]` keeps the set in the family (hereditariness plus the fact
//! that an isolated vertex of `G[M]` stays isolated in every subset) and
//! raises the objective by `c1 > 0`. Hence some optimum has the form
//! `M \ D` with `D` a subset of the non-isolated vertices of `M`, and all
//! of those are in the stream.

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, WORD_ORDER};
use crate::steiner::{steiner_table, Distance, MAX_TERMINALS};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

/// Resource limits for the exponential searches. `max_n` is a hard
/// precondition (exceeding it is an error); node and wall-time limits are
/// soft — on breach the search stops and the result is flagged as a lower
/// bound, never silently wrong.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Budget {
    /// Largest graph order the search will accept. Defaults to 12, which is
    /// plenty for formula verification; raise it deliberately for bigger
    /// instances (hard ceiling: one machine word, 64).
    pub max_n: usize,
    pub max_nodes: Option<u64>,
    pub max_millis: Option<u64>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_n: 12,
            max_nodes: None,
            max_millis: None,
        }
    }
}

impl Budget {
    pub fn with_max_n(max_n: usize) -> Self {
        Budget {
            max_n,
            ..Budget::default()
        }
    }
}

/// Whether a reported value is exact or only a certified lower bound
/// (budget truncation, or a formula that only bounds).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    Exact,
    LowerBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantKind {
    SgpK,
    SomegaK,
    SjcK,
    SgpInterval,
    Gp,
}

#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
pub struct SearchStats {
    /// Membership checks attempted.
    pub nodes: u64,
    pub millis: u64,
    pub truncated: bool,
}

/// A computed invariant: the value, a witness attaining it, and how the
/// search went. The witness always re-passes its membership predicate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InvariantResult {
    pub kind: InvariantKind,
    pub k: Option<usize>,
    pub l: Option<usize>,
    pub value: usize,
    pub witness: VertexSet,
    pub exactness: Exactness,
    pub stats: SearchStats,
}

/// Split of a set into its isolated and non-isolated members within the
/// induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SgpPartition {
    pub isolated: VertexSet,
    pub nonisolated: VertexSet,
}

/// Result of a family enumeration; `truncated` marks a breached budget.
#[derive(Clone, Debug)]
pub struct SetFamily {
    pub sets: Vec<VertexSet>,
    pub truncated: bool,
}

// ---------------------------------------------------------------------------
// DFS engine

struct Dfs<'b> {
    n: u32,
    budget: &'b Budget,
    started: Instant,
    nodes: u64,
    truncated: bool,
}

impl<'b> Dfs<'b> {
    fn new(n: usize, budget: &'b Budget) -> Self {
        Dfs {
            n: n as u32,
            budget,
            started: Instant::now(),
            nodes: 0,
            truncated: false,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if let Some(cap) = self.budget.max_nodes {
            if self.nodes > cap {
                self.truncated = true;
            }
        }
        if let Some(ms) = self.budget.max_millis {
            if self.nodes.is_multiple_of(512) && self.started.elapsed().as_millis() as u64 >= ms {
                self.truncated = true;
            }
        }
        self.truncated
    }

    fn stats(&self) -> SearchStats {
        SearchStats {
            nodes: self.nodes,
            millis: self.started.elapsed().as_millis() as u64,
            truncated: self.truncated,
        }
    }
}

/// Maximum valid set under a hereditary property. `extend_ok(cur, mask, v)`
/// must decide whether `cur ∪ {v}` stays valid given `cur` is valid and
/// `v > max(cur)`.
fn maximize<F>(n: usize, budget: &Budget, mut extend_ok: F) -> (usize, u64, SearchStats)
where
    F: FnMut(&[u32], u64, u32) -> bool,
{
    struct State {
        current: Vec<u32>,
        mask: u64,
        best_size: usize,
        best_mask: u64,
    }
    fn dfs<F: FnMut(&[u32], u64, u32) -> bool>(
        ctl: &mut Dfs,
        st: &mut State,
        extend_ok: &mut F,
        from: u32,
    ) {
        for v in from..ctl.n {
            if st.current.len() + (ctl.n - v) as usize <= st.best_size {
                return;
            }
            if ctl.tick() {
                return;
            }
            if extend_ok(&st.current, st.mask, v) {
                st.current.push(v);
                st.mask |= 1 << v;
                if st.current.len() > st.best_size {
                    st.best_size = st.current.len();
                    st.best_mask = st.mask;
                }
                dfs(ctl, st, extend_ok, v + 1);
                st.current.pop();
                st.mask &= !(1 << v);
                if ctl.truncated {
                    return;
                }
            }
        }
    }
    let mut ctl = Dfs::new(n, budget);
    let mut st = State {
        current: Vec::with_capacity(n),
        mask: 0,
        best_size: 0,
        best_mask: 0,
    };
    dfs(&mut ctl, &mut st, &mut extend_ok, 0);
    (st.best_size, st.best_mask, ctl.stats())
}

/// Every nonempty valid set under a hereditary property, as masks.
fn enumerate_all<F>(n: usize, budget: &Budget, mut extend_ok: F) -> (Vec<u64>, SearchStats)
where
    F: FnMut(&[u32], u64, u32) -> bool,
{
    fn dfs<F: FnMut(&[u32], u64, u32) -> bool>(
        ctl: &mut Dfs,
        current: &mut Vec<u32>,
        mask: &mut u64,
        found: &mut Vec<u64>,
        extend_ok: &mut F,
        from: u32,
    ) {
        for v in from..ctl.n {
            if ctl.tick() {
                return;
            }
            if extend_ok(current, *mask, v) {
                current.push(v);
                *mask |= 1 << v;
                found.push(*mask);
                dfs(ctl, current, mask, found, extend_ok, v + 1);
                current.pop();
                *mask &= !(1 << v);
                if ctl.truncated {
                    return;
                }
            }
        }
    }
    let mut ctl = Dfs::new(n, budget);
    let mut found = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut mask = 0u64;
    dfs(&mut ctl, &mut current, &mut mask, &mut found, &mut extend_ok, 0);
    (found, ctl.stats())
}

fn ensure_searchable(g: &Graph, budget: &Budget) -> Result<()> {
    if g.n() > budget.max_n {
        return Err(Error::Cap {
            what: "search graph order (raise Budget::max_n to allow this)",
            cap: budget.max_n,
            got: g.n(),
        });
    }
    g.masks_or_cap("subset search order")?;
    Ok(())
}

// ---------------------------------------------------------------------------
// k-Steiner general position

/// Decides violations of the general-position condition, memoizing per
/// candidate subset when the graph is small enough to key subsets by mask.
pub(crate) struct SgpMembership<'g> {
    g: &'g Graph,
    memo: Option<HashMap<u64, bool>>,
}

impl<'g> SgpMembership<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        SgpMembership {
            g,
            memo: (g.n() <= WORD_ORDER).then(HashMap::new),
        }
    }

    /// Whether some vertex of `c` lies on a Steiner tree of the rest,
    /// i.e. `d(C \ v) = d(C)` for some `v ∈ C`. `c` must be sorted.
    fn violating(&mut self, c: &[u32]) -> bool {
        let key = self
            .memo
            .as_ref()
            .map(|_| bits::ids_to_mask(c))
            .unwrap_or(0);
        if let Some(memo) = &self.memo {
            if let Some(&hit) = memo.get(&key) {
                return hit;
            }
        }
        let set = VertexSet::new(c.to_vec()).expect("distinct sorted ids");
        let table = steiner_table(self.g, &set).expect("terminal cap checked at entry");
        let t = c.len();
        let full_mask = ((1u32 << t) - 1) as u16;
        let hit = match table.distance(full_mask) {
            Distance::Finite(full) => (0..t).any(|i| {
                table.distance(full_mask & !(1 << i)) == Distance::Finite(full)
            }),
            Distance::Infinite => false,
        };
        if let Some(memo) = &mut self.memo {
            memo.insert(key, hit);
        }
        hit
    }

    /// Incremental step: `cur` is `k`-SGP and `v > max(cur)`; only
    /// `(k+1)`-subsets through `v` can introduce a violation.
    fn extend_ok(&mut self, k: usize, cur: &[u32], v: u32) -> bool {
        if cur.len() < k {
            return true;
        }
        let mut ids = Vec::with_capacity(k + 1);
        for combo in bits::k_subset_masks(cur.len(), k) {
            ids.clear();
            let mut m = combo;
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                ids.push(cur[i]);
            }
            ids.push(v);
            if self.violating(&ids) {
                return false;
            }
        }
        true
    }

    /// Full check of an arbitrary set.
    fn is_valid(&mut self, k: usize, a: &VertexSet) -> bool {
        if a.len() <= k {
            return true;
        }
        let ids: Vec<u32> = a.iter().collect();
        let mut c = Vec::with_capacity(k + 1);
        for combo in bits::k_subset_masks(ids.len(), k + 1) {
            c.clear();
            let mut m = combo;
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                c.push(ids[i]);
            }
            if self.violating(&c) {
                return false;
            }
        }
        true
    }
}

/// Is `a` a `k`-Steiner general position set? Sets of at most `k` vertices
/// trivially are. Works for any graph order — only the candidate subsets go
/// through Steiner tables — provided `k + 1` fits the terminal cap.
pub fn is_k_sgp(g: &Graph, a: &VertexSet, k: usize) -> Result<bool> {
    g.check_set(a)?;
    if k < 2 {
        return Err(Error::domain("k must be at least 2"));
    }
    if a.len() <= k {
        return Ok(true);
    }
    check_terminal_room(k)?;
    Ok(SgpMembership::new(g).is_valid(k, a))
}

fn check_terminal_room(k: usize) -> Result<()> {
    if k + 1 > MAX_TERMINALS {
        return Err(Error::Cap {
            what: "k (membership checks need k+1 Steiner terminals)",
            cap: MAX_TERMINALS - 1,
            got: k,
        });
    }
    Ok(())
}

/// Exact `sgp_k` with witness. For `k >= n(G)` every set qualifies, so the
/// answer is `n(G)` with the whole vertex set as witness (the natural
/// reading of the `|A| <= k` triviality; the invariant is only studied for
/// `k` up to `n(G)`).
pub fn sgp(g: &Graph, k: usize, budget: &Budget) -> Result<InvariantResult> {
    if k < 2 {
        return Err(Error::domain("k must be at least 2"));
    }
    let n = g.n();
    if k >= n {
        return Ok(trivial_result(InvariantKind::SgpK, Some(k), None, n));
    }
    ensure_searchable(g, budget)?;
    check_terminal_room(k)?;
    let mut membership = SgpMembership::new(g);
    let (value, mask, stats) =
        maximize(n, budget, |cur, _mask, v| membership.extend_ok(k, cur, v));
    let witness = VertexSet::from_mask(mask);
    debug_assert!(membership.is_valid(k, &witness));
    Ok(InvariantResult {
        kind: InvariantKind::SgpK,
        k: Some(k),
        l: None,
        value,
        witness,
        exactness: exactness_of(&stats),
        stats,
    })
}

fn trivial_result(
    kind: InvariantKind,
    k: Option<usize>,
    l: Option<usize>,
    n: usize,
) -> InvariantResult {
    InvariantResult {
        kind,
        k,
        l,
        value: n,
        witness: VertexSet::full(n),
        exactness: Exactness::Exact,
        stats: SearchStats::default(),
    }
}

fn exactness_of(stats: &SearchStats) -> Exactness {
    if stats.truncated {
        Exactness::LowerBound
    } else {
        Exactness::Exact
    }
}

// ---------------------------------------------------------------------------
// k-Steiner cliques

/// Is `a` a `k`-Steiner clique, i.e. does every `k`-subset induce a
/// connected subgraph? Sets of fewer than `k` vertices count by convention.
pub fn is_k_steiner_clique(g: &Graph, a: &VertexSet, k: usize) -> Result<bool> {
    g.check_set(a)?;
    if k < 2 {
        return Err(Error::domain("k must be at least 2"));
    }
    if a.len() < k {
        return Ok(true);
    }
    g.masks_or_cap("Steiner clique check order")?;
    let ids: Vec<u32> = a.iter().collect();
    for combo in bits::k_subset_masks(ids.len(), k) {
        let mut mask = 0u64;
        let mut m = combo;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            mask |= 1 << ids[i];
        }
        if !g.connected_within(mask) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact `sω_k` (largest `k`-Steiner clique) with witness. Handles
/// disconnected graphs by the convention that sets of fewer than `k`
/// vertices always qualify.
pub fn somega(g: &Graph, k: usize) -> Result<InvariantResult> {
    if k < 2 {
        return Err(Error::domain("k must be at least 2"));
    }
    g.masks_or_cap("Steiner clique search order")?;
    let budget = Budget::with_max_n(WORD_ORDER);
    let (value, mask, stats) = maximize(g.n(), &budget, |cur, _cur_mask, v| {
        if cur.len() + 1 < k {
            return true;
        }
        let vbit = 1u64 << v;
        for combo in bits::k_subset_masks(cur.len(), k - 1) {
            let mut bmask = vbit;
            let mut m = combo;
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                bmask |= 1 << cur[i];
            }
            if !g.connected_within(bmask) {
                return false;
            }
        }
        true
    });
    Ok(InvariantResult {
        kind: InvariantKind::SomegaK,
        k: Some(k),
        l: None,
        value,
        witness: VertexSet::from_mask(mask),
        exactness: exactness_of(&stats),
        stats,
    })
}

// ---------------------------------------------------------------------------
// k-Steiner join-critical sets

/// Is `a` `k`-Steiner join-critical: no `k`-subset `B ⊆ a` has Steiner
/// distance exactly `k` inside the induced subgraph `G[a]`? Sets of fewer
/// than `k` vertices qualify vacuously.
///
/// The distance test never builds a table: for a `k`-set `B` inside `G[A]`,
/// `d_{G[A]}(B) = k` iff `G[B]` is disconnected and some single vertex
/// `v ∈ A \ B` makes `G[B ∪ {v}]` connected — a `(k+1)`-vertex Steiner tree
/// is `B` plus exactly one extra vertex, and it exists inside the induced
/// subgraph iff that vertex can be chosen from `A`. (Unit-tested against
/// the Steiner DP on the induced subgraph.)
pub fn is_steiner_join_critical(g: &Graph, a: &VertexSet, k: usize) -> Result<bool> {
    g.check_set(a)?;
    if k < 2 {
        return Err(Error::domain("k must be at least 2"));
    }
    g.masks_or_cap("join-critical check order")?;
    let ids: Vec<u32> = a.iter().collect();
    Ok(sjc_valid(g, k, &ids, a.mask()))
}

fn sjc_valid(g: &Graph, k: usize, ids: &[u32], amask: u64) -> bool {
    if ids.len() < k {
        return true;
    }
    // if every component of G[A] has at most k vertices, no k-subset can
    // need a (k+1)-vertex tree
    if g
        .components_within(amask)
        .iter()
        .all(|c| c.count_ones() as usize <= k)
    {
        return true;
    }
    for combo in bits::k_subset_masks(ids.len(), k) {
        let mut bmask = 0u64;
        let mut m = combo;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            bmask |= 1 << ids[i];
        }
        if g.connected_within(bmask) {
            continue; // d = k - 1
        }
        let mut rest = amask & !bmask;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            if g.connected_within(bmask | (1 << v)) {
                return false; // d = k exactly
            }
        }
    }
    true
}

/// Exact `sjc_k` with witness. For `k >= n(G)` the whole vertex set
/// qualifies (no `k`-subsets to violate, or `d = n - 1 != k`).
pub fn sjc(g: &Graph, k: usize) -> Result<InvariantResult> {
    if k < 2 {
        return Err(Error::domain("k must be at least 2"));
    }
    let n = g.n();
    if k >= n {
        return Ok(trivial_result(InvariantKind::SjcK, Some(k), None, n));
    }
    g.masks_or_cap("join-critical search order")?;
    let budget = Budget::with_max_n(WORD_ORDER);
    let mut cache: HashMap<u64, bool> = HashMap::new();
    let mut scratch: Vec<u32> = Vec::with_capacity(n);
    let (value, mask, stats) = maximize(n, &budget, |cur, cur_mask, v| {
        let candidate = cur_mask | (1 << v);
        if let Some(&hit) = cache.get(&candidate) {
            return hit;
        }
        scratch.clear();
        scratch.extend_from_slice(cur);
        scratch.push(v);
        let ok = sjc_valid(g, k, &scratch, candidate);
        cache.insert(candidate, ok);
        ok
    });
    Ok(InvariantResult {
        kind: InvariantKind::SjcK,
        k: Some(k),
        l: None,
        value,
        witness: VertexSet::from_mask(mask),
        exactness: exactness_of(&stats),
        stats,
    })
}

// ---------------------------------------------------------------------------
// interval sets and gp

fn interval_extend_ok(
    membership: &mut SgpMembership,
    k: usize,
    l: usize,
    cur: &[u32],
    v: u32,
) -> bool {
    let upper = l.min(cur.len());
    let mut ids = Vec::new();
    for j in k..=upper {
        // (j+1)-subsets through v = j-subsets of cur, plus v
        for combo in bits::k_subset_masks(cur.len(), j) {
            ids.clear();
            let mut m = combo;
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                ids.push(cur[i]);
            }
            ids.push(v);
            if membership.violating(&ids) {
                return false;
            }
        }
    }
    true
}

/// Is `a` a `j`-Steiner general position set for every `j ∈ [k:l]`?
pub fn is_interval_sgp(g: &Graph, a: &VertexSet, k: usize, l: usize) -> Result<bool> {
    check_interval(k, l)?;
    for j in k..=l.min(a.len().saturating_sub(1)) {
        if !is_k_sgp(g, a, j)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_interval(k: usize, l: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::domain("interval must start at k >= 2"));
    }
    if l < k {
        return Err(Error::domain("interval upper end must satisfy l >= k"));
    }
    Ok(())
}

/// Exact `sgp_[k:l]`: the largest set that is simultaneously `j`-SGP for
/// every `j` in the interval.
pub fn sgp_interval(g: &Graph, k: usize, l: usize, budget: &Budget) -> Result<InvariantResult> {
    check_interval(k, l)?;
    let n = g.n();
    if k >= n {
        return Ok(trivial_result(InvariantKind::SgpInterval, Some(k), Some(l), n));
    }
    ensure_searchable(g, budget)?;
    check_terminal_room(l.min(n - 1))?;
    let mut membership = SgpMembership::new(g);
    let (value, mask, stats) = maximize(n, budget, |cur, _mask, v| {
        interval_extend_ok(&mut membership, k, l, cur, v)
    });
    Ok(InvariantResult {
        kind: InvariantKind::SgpInterval,
        k: Some(k),
        l: Some(l),
        value,
        witness: VertexSet::from_mask(mask),
        exactness: exactness_of(&stats),
        stats,
    })
}

/// Is `a` a general position set: no member on a geodesic between two
/// others? Pure distance arithmetic over the all-pairs matrix.
pub fn is_general_position(g: &Graph, a: &VertexSet) -> Result<bool> {
    g.check_set(a)?;
    let dist = g.all_distances();
    let ids: Vec<u32> = a.iter().collect();
    for i in 0..ids.len() {
        for j in i + 1..ids.len() {
            for m in 0..ids.len() {
                if m != i && m != j && on_geodesic(&dist, ids[i], ids[j], ids[m]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn on_geodesic(dist: &[Vec<Distance>], a: u32, b: u32, mid: u32) -> bool {
    match (
        dist[a as usize][mid as usize],
        dist[mid as usize][b as usize],
        dist[a as usize][b as usize],
    ) {
        (Distance::Finite(x), Distance::Finite(y), Distance::Finite(z)) => x + y == z,
        _ => false,
    }
}

/// The general position number `gp = sgp_2`, computed twice: once directly
/// from geodesics and once through the Steiner machinery. The two routes
/// must agree; a mismatch is reported as an internal error rather than a
/// value.
pub fn gp(g: &Graph, budget: &Budget) -> Result<InvariantResult> {
    let n = g.n();
    if n <= 2 {
        return Ok(InvariantResult {
            kind: InvariantKind::Gp,
            ..trivial_result(InvariantKind::SgpK, Some(2), None, n)
        });
    }
    ensure_searchable(g, budget)?;
    let dist = g.all_distances();
    let (geo_value, geo_mask, geo_stats) = maximize(n, budget, |cur, _mask, v| {
        cur.iter().enumerate().all(|(i, &a)| {
            cur[i + 1..].iter().all(|&b| {
                !on_geodesic(&dist, a, b, v)
                    && !on_geodesic(&dist, a, v, b)
                    && !on_geodesic(&dist, b, v, a)
            })
        })
    });
    let steiner_route = sgp(g, 2, budget)?;
    let geo_exact = !geo_stats.truncated;
    let steiner_exact = !steiner_route.stats.truncated;
    if geo_exact
        && steiner_exact
        && (geo_value != steiner_route.value || geo_mask != steiner_route.witness.mask())
    {
        return Err(Error::Internal(format!(
            "geodesic route found gp = {geo_value}, Steiner route {}",
            steiner_route.value
        )));
    }
    // an exact route wins outright; if both were truncated, both values are
    // certified lower bounds and we keep the better one
    let (value, mask, exact) = if geo_exact {
        (geo_value, geo_mask, Exactness::Exact)
    } else if steiner_exact {
        (
            steiner_route.value,
            steiner_route.witness.mask(),
            Exactness::Exact,
        )
    } else if geo_value >= steiner_route.value {
        (geo_value, geo_mask, Exactness::LowerBound)
    } else {
        (
            steiner_route.value,
            steiner_route.witness.mask(),
            Exactness::LowerBound,
        )
    };
    let stats = SearchStats {
        nodes: geo_stats.nodes + steiner_route.stats.nodes,
        millis: geo_stats.millis + steiner_route.stats.millis,
        truncated: exact == Exactness::LowerBound,
    };
    Ok(InvariantResult {
        kind: InvariantKind::Gp,
        k: Some(2),
        l: None,
        value,
        witness: VertexSet::from_mask(mask),
        exactness: exact,
        stats,
    })
}

// ---------------------------------------------------------------------------
// partitions, enumeration, monotonicity probe

/// Splits `s` into its isolated and non-isolated vertices within `G[s]`.
pub fn partition_by_isolation(g: &Graph, s: &VertexSet) -> Result<SgpPartition> {
    g.check_set(s)?;
    let mut isolated = Vec::new();
    let mut nonisolated = Vec::new();
    for v in s.iter() {
        if g.neighbors(v).iter().any(|&u| s.contains(u)) {
            nonisolated.push(v);
        } else {
            isolated.push(v);
        }
    }
    Ok(SgpPartition {
        isolated: VertexSet::new(isolated)?,
        nonisolated: VertexSet::new(nonisolated)?,
    })
}

/// Enumerates the `[k:l]`-sgp family per the contract in the module docs:
/// all maximal sets, plus every deletion of non-isolated vertices from each
/// maximal set. Output is deduplicated and ordered by mask.
pub fn enumerate_interval_sgp_sets(
    g: &Graph,
    k: usize,
    l: usize,
    budget: &Budget,
) -> Result<SetFamily> {
    check_interval(k, l)?;
    let n = g.n();
    ensure_searchable(g, budget)?;
    if k < n {
        check_terminal_room(l.min(n - 1))?;
    }
    let mut membership = SgpMembership::new(g);
    let (valid, stats) = enumerate_all(n, budget, |cur, _mask, v| {
        if k >= n {
            return true;
        }
        interval_extend_ok(&mut membership, k, l, cur, v)
    });
    // maximal = not strictly contained in another valid mask
    let mut maximal: Vec<u64> = Vec::new();
    for &m in &valid {
        if !valid.iter().any(|&other| other != m && other & m == m) {
            maximal.push(m);
        }
    }
    let mut out: BTreeSet<u64> = BTreeSet::new();
    for &m in &maximal {
        let members = bits::mask_to_ids(m);
        let jmask = members
            .iter()
            .filter(|&&v| g.neighbors(v).iter().any(|&u| m & (1 << u) != 0))
            .fold(0u64, |acc, &v| acc | 1 << v);
        for d in bits::submasks(jmask) {
            out.insert(m & !d);
        }
    }
    Ok(SetFamily {
        sets: out.into_iter().map(VertexSet::from_mask).collect(),
        truncated: stats.truncated,
    })
}

/// Empirical monotonicity data: `sgp_k` for every `k ∈ [2 : n-1]`, plus the
/// positions where the sequence decreases.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonotonicityReport {
    /// `(k, sgp_k)` rows in ascending `k`.
    pub rows: Vec<(usize, usize)>,
    /// Each `k` whose successor value drops below `sgp_k`.
    pub decreases: Vec<usize>,
    pub truncated: bool,
}

pub fn monotonicity_probe(g: &Graph, budget: &Budget) -> Result<MonotonicityReport> {
    let n = g.n();
    let mut rows = Vec::new();
    let mut truncated = false;
    for k in 2..n {
        let r = sgp(g, k, budget)?;
        truncated |= r.stats.truncated;
        rows.push((k, r.value));
    }
    let decreases = rows
        .windows(2)
        .filter(|w| w[1].1 < w[0].1)
        .map(|w| w[0].0)
        .collect();
    Ok(MonotonicityReport {
        rows,
        decreases,
        truncated,
    })
}

#[cfg(test)]
mod tests;
