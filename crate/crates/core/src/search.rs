//! Exact maximum k-neighborly families for small `(k, d)`.
//!
//! The search is a bitset branch-and-bound maximum-clique solver on the
//! compatibility graph whose vertices are candidate strings and whose
//! edges join strings at distance `1..=k`. Subtrees are cut by a greedy
//! colouring bound, by the disjoint-subcube volume bound and by the best
//! known upper bound on `n(k, d)`.
//!
//! Symmetry fixing uses the action of coordinate permutations and per
//! coordinate 0/1 swaps. Its orbits on `S^d` are the joker levels, with
//! representative `0^{d-j} *^j`. If an optimum exists whose least-joker
//! member has `j` jokers, one exists containing that representative and no
//! member with fewer jokers, so level `j` is searched from the representative
//! alone and levels below it are excluded.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bounds::best_bounds;
use crate::constructions::{ball_family, extremal_dminus1, realize_mbar};
use crate::count::Count;
use crate::family::Family;
use crate::strings::TernaryString;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("need 1 <= k <= d, got k={k}, d={d}")]
    OutOfRange { k: usize, d: usize },
    #[error("search supports d <= 64, got {0}")]
    DimensionTooLarge(usize),
    #[error("{candidates} candidates exceed the capacity {capacity}")]
    CapacityExceeded { candidates: u128, capacity: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("more than {0} maximum families")]
    EnumerationCapExceeded(usize),
    #[error("the optimum was not proven within the budget")]
    NotProven,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_budget: u64,
    pub time_budget: Duration,
    /// Restrict candidates to strings with at most `d - k` jokers.
    pub joker_prune: bool,
    /// Branch only on joker-level orbit representatives at the root.
    pub symmetry: bool,
    /// Sequential exploration; identical results on every run.
    pub deterministic: bool,
    /// Start from the largest explicit construction.
    pub seed_with_constructions: bool,
    /// Stop as soon as the incumbent meets the best known upper bound.
    pub upper_cutoff: bool,
    pub capacity: usize,
    pub enumeration_cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: u64::MAX,
            time_budget: Duration::from_secs(24 * 3600),
            joker_prune: true,
            symmetry: true,
            deterministic: false,
            seed_with_constructions: true,
            upper_cutoff: true,
            capacity: 60_000,
            enumeration_cap: 100_000,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<(), SearchError> {
        if self.node_budget == 0 || self.time_budget.is_zero() {
            return Err(SearchError::InvalidConfig("budgets must be positive".into()));
        }
        if self.capacity == 0 || self.enumeration_cap == 0 {
            return Err(SearchError::InvalidConfig("capacities must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    #[serde(rename = "elapsed_ms", serialize_with = "duration_ms")]
    pub elapsed: Duration,
    pub candidates: usize,
    pub budget_exhausted: bool,
}

fn duration_ms<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub k: usize,
    pub d: usize,
    /// Proven maximum, or the best size found when the budget ran out.
    pub optimum: usize,
    pub witness: Vec<TernaryString>,
    pub proven_optimal: bool,
    pub stats: SearchStats,
}

impl SearchResult {
    pub fn witness_family(&self) -> Option<Family> {
        Family::new(self.d, self.witness.clone()).ok()
    }
}

impl Serialize for SearchResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SearchResult", 6)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("optimum", &self.optimum)?;
        st.serialize_field("proven_optimal", &self.proven_optimal)?;
        let witness: Vec<String> = self.witness.iter().map(ToString::to_string).collect();
        st.serialize_field("witness", &witness)?;
        st.serialize_field("stats", &self.stats)?;
        st.end()
    }
}

/// Re-checks a result from scratch: the witness has `optimum` distinct
/// members of length `d`, pairwise at distance `1..=k`.
pub fn verify_certificate(result: &SearchResult) -> bool {
    let w = &result.witness;
    if w.len() != result.optimum || w.iter().any(|x| x.len() != result.d) {
        return false;
    }
    if result.k == 0 || result.k > result.d {
        return false;
    }
    w.iter().enumerate().all(|(i, x)| {
        w[i + 1..].iter().all(|y| {
            let dist = x.distance(y).unwrap();
            (1..=result.k).contains(&dist)
        })
    })
}

/// Number of strings in `S^d` with at most `max_jokers` jokers.
pub fn candidate_count(d: usize, max_jokers: usize) -> u128 {
    (0..=max_jokers.min(d))
        .map(|j| u128::binomial(d, j) * u128::pow2(d - j))
        .sum()
}

fn check_args(k: usize, d: usize) -> Result<(), SearchError> {
    if k == 0 || k > d {
        return Err(SearchError::OutOfRange { k, d });
    }
    if d > 64 {
        return Err(SearchError::DimensionTooLarge(d));
    }
    Ok(())
}

/// All strings of `S^d` with at most `d - k` jokers, in text order.
pub fn enumerate_candidates(k: usize, d: usize) -> Result<Vec<TernaryString>, SearchError> {
    check_args(k, d)?;
    Ok(strings_with_jokers_at_most(d, d - k))
}

fn strings_with_jokers_at_most(d: usize, max_jokers: usize) -> Vec<TernaryString> {
    let mut out = Vec::new();
    // (zeros, ones) masks, coordinate 1 = bit 0
    let mut stack = vec![(0usize, 0u64, 0u64, 0usize)];
    while let Some((pos, zeros, ones, jokers)) = stack.pop() {
        if pos == d {
            out.push(TernaryString::from_masks(d, zeros, ones));
            continue;
        }
        let bit = 1u64 << pos;
        stack.push((pos + 1, zeros, ones | bit, jokers));
        stack.push((pos + 1, zeros | bit, ones, jokers));
        if jokers < max_jokers {
            stack.push((pos + 1, zeros, ones, jokers + 1));
        }
    }
    out.sort();
    out
}

type Bits = Vec<u64>;

fn bit_set(b: &mut [u64], i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn bit_clear(b: &mut [u64], i: usize) {
    b[i / 64] &= !(1 << (i % 64));
}

fn bits_empty(b: &[u64]) -> bool {
    b.iter().all(|&w| w == 0)
}

fn and_into(dst: &mut [u64], a: &[u64], b: &[u64]) {
    for ((d, x), y) in dst.iter_mut().zip(a).zip(b) {
        *d = x & y;
    }
}

fn first_bit(b: &[u64]) -> Option<usize> {
    b.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// The compatibility graph, vertices renumbered by descending degree, then
/// fewer jokers, then text order.
struct Graph {
    d: usize,
    strings: Vec<TernaryString>,
    jokers: Vec<usize>,
    adj: Vec<Bits>,
    /// `levels[j]`: vertices with exactly `j` jokers.
    levels: Vec<Bits>,
    words: usize,
}

impl Graph {
    fn build(k: usize, d: usize, candidates: Vec<TernaryString>) -> Graph {
        let masks: Vec<(u64, u64)> = candidates.iter().map(|s| s.masks().unwrap()).collect();
        let n = candidates.len();
        let compatible = |a: usize, b: usize| {
            let ((z1, o1), (z2, o2)) = (masks[a], masks[b]);
            let dist = ((z1 & o2) | (o1 & z2)).count_ones() as usize;
            (1..=k).contains(&dist)
        };
        let degree: Vec<usize> = (0..n)
            .into_par_iter()
            .map(|a| (0..n).filter(|&b| b != a && compatible(a, b)).count())
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            degree[b]
                .cmp(&degree[a])
                .then(candidates[a].joker_count().cmp(&candidates[b].joker_count()))
                .then(candidates[a].cmp(&candidates[b]))
        });
        let words = n.div_ceil(64).max(1);
        let adj: Vec<Bits> = order
            .par_iter()
            .map(|&a| {
                let mut row = vec![0u64; words];
                for (j, &b) in order.iter().enumerate() {
                    if a != b && compatible(a, b) {
                        bit_set(&mut row, j);
                    }
                }
                row
            })
            .collect();
        let strings: Vec<TernaryString> = order.iter().map(|&a| candidates[a].clone()).collect();
        let jokers: Vec<usize> = strings.iter().map(TernaryString::joker_count).collect();
        let mut levels = vec![vec![0u64; words]; d + 1];
        for (v, &j) in jokers.iter().enumerate() {
            bit_set(&mut levels[j], v);
        }
        Graph {
            d,
            strings,
            jokers,
            adj,
            levels,
            words,
        }
    }

    fn len(&self) -> usize {
        self.strings.len()
    }

    fn all(&self) -> Bits {
        let mut b = vec![0u64; self.words];
        for v in 0..self.len() {
            bit_set(&mut b, v);
        }
        b
    }

    /// Greedy sequential colouring of `p`. Returns the vertices whose colour
    /// is at least `min_color`, with their colours, in colour order.
    fn color_sort(&self, p: &[u64], min_color: usize) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = p.to_vec();
        let mut q = vec![0u64; self.words];
        let mut order = Vec::new();
        let mut colors = Vec::new();
        let mut color = 0;
        while !bits_empty(&uncolored) {
            color += 1;
            q.copy_from_slice(&uncolored);
            while let Some(v) = first_bit(&q) {
                bit_clear(&mut uncolored, v);
                bit_clear(&mut q, v);
                for (qw, aw) in q.iter_mut().zip(&self.adj[v]) {
                    *qw &= !aw;
                }
                if color >= min_color {
                    order.push(v);
                    colors.push(color);
                }
            }
        }
        (order, colors)
    }

    /// Most members addable to a family of volume `used` from `p` without
    /// exceeding `2^d`, smallest subcubes first.
    fn volume_bound(&self, p: &[u64], used: u128) -> usize {
        let mut room = (1u128 << self.d) - used;
        let mut total = 0;
        for (j, level) in self.levels.iter().enumerate() {
            let count = p
                .iter()
                .zip(level)
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum::<usize>();
            if count == 0 {
                continue;
            }
            let size = 1u128 << j;
            let fit = (room / size).min(count as u128) as usize;
            total += fit;
            room -= fit as u128 * size;
            if fit < count {
                break;
            }
        }
        total
    }

    fn volume_of(&self, v: usize) -> u128 {
        1u128 << self.jokers[v]
    }
}

struct Shared<'a> {
    graph: &'a Graph,
    cfg: &'a SearchConfig,
    best: AtomicUsize,
    witness: Mutex<Option<Vec<usize>>>,
    nodes: AtomicU64,
    abort: AtomicBool,
    exhausted: AtomicBool,
    start: Instant,
    upper: usize,
}

impl Shared<'_> {
    fn tick(&self) -> bool {
        if self.abort.load(Ordering::Relaxed) {
            return false;
        }
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n >= self.cfg.node_budget || (n.is_multiple_of(1024) && self.start.elapsed() > self.cfg.time_budget) {
            self.exhausted.store(true, Ordering::Relaxed);
            self.abort.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn offer(&self, clique: &[usize]) {
        let mut w = self.witness.lock().unwrap();
        if clique.len() > self.best.load(Ordering::Relaxed) {
            *w = Some(clique.to_vec());
            self.best.store(clique.len(), Ordering::Relaxed);
            if clique.len() >= self.upper {
                self.abort.store(true, Ordering::Relaxed);
            }
        }
    }

    fn best(&self) -> usize {
        self.best.load(Ordering::Relaxed)
    }

    fn expand(&self, clique: &mut Vec<usize>, used: u128, mut p: Bits) {
        let g = self.graph;
        let min_color = (self.best() + 1).saturating_sub(clique.len());
        let (order, colors) = g.color_sort(&p, min_color.max(1));
        let mut next = vec![0u64; g.words];
        for idx in (0..order.len()).rev() {
            if clique.len() + colors[idx] <= self.best() {
                return;
            }
            if clique.len() + g.volume_bound(&p, used) <= self.best() {
                return;
            }
            if !self.tick() {
                return;
            }
            let v = order[idx];
            and_into(&mut next, &p, &g.adj[v]);
            clique.push(v);
            if bits_empty(&next) {
                self.offer(clique);
            } else {
                self.expand(clique, used + g.volume_of(v), next.clone());
            }
            clique.pop();
            bit_clear(&mut p, v);
        }
    }

    /// Root-level branches: `(seed clique, candidate set)` pairs.
    fn roots(&self) -> Vec<(Vec<usize>, Bits)> {
        let g = self.graph;
        if !self.cfg.symmetry {
            return vec![(Vec::new(), g.all())];
        }
        let mut out = Vec::new();
        let mut allowed = g.all();
        for j in 0..=g.d {
            let rep = TernaryString::from_masks(g.d, (1u64 << (g.d - j)) - 1, 0);
            let rep = if g.d - j == 64 {
                TernaryString::from_masks(64, u64::MAX, 0)
            } else {
                rep
            };
            if let Some(v) = g.strings.iter().position(|s| *s == rep) {
                let mut p = vec![0u64; g.words];
                and_into(&mut p, &allowed, &g.adj[v]);
                out.push((vec![v], p));
            }
            for (a, l) in allowed.iter_mut().zip(&g.levels[j]) {
                *a &= !l;
            }
        }
        out
    }

    /// Runs one root branch, splitting its first level across threads unless
    /// deterministic.
    fn run_root(&self, mut clique: Vec<usize>, p: Bits) {
        let g = self.graph;
        let used: u128 = clique.iter().map(|&v| g.volume_of(v)).sum();
        if clique.len() + g.volume_bound(&p, used) <= self.best() {
            return;
        }
        if bits_empty(&p) {
            if !clique.is_empty() {
                self.offer(&clique);
            }
            return;
        }
        if self.cfg.deterministic {
            self.expand(&mut clique, used, p);
            return;
        }
        let min_color = (self.best() + 1).saturating_sub(clique.len());
        let (order, colors) = g.color_sort(&p, min_color.max(1));
        // Task idx sees p minus the vertices after it in the order.
        let mut tasks = Vec::with_capacity(order.len());
        let mut rest = p.clone();
        for idx in (0..order.len()).rev() {
            tasks.push((order[idx], colors[idx], rest.clone()));
            bit_clear(&mut rest, order[idx]);
        }
        tasks.into_par_iter().for_each(|(v, color, rest)| {
            if clique.len() + color <= self.best() || self.abort.load(Ordering::Relaxed) {
                return;
            }
            if clique.len() + g.volume_bound(&rest, used) <= self.best() || !self.tick() {
                return;
            }
            let mut next = vec![0u64; g.words];
            and_into(&mut next, &rest, &g.adj[v]);
            let mut c = clique.clone();
            c.push(v);
            if bits_empty(&next) {
                self.offer(&c);
            } else {
                self.expand(&mut c, used + g.volume_of(v), next);
            }
        });
    }
}

fn seed_family(k: usize, d: usize) -> Option<Family> {
    let mut options = Vec::new();
    if k == d && d < 20 {
        options.push(Family::full_cube(d));
    }
    if k + 1 == d && d < 20 {
        options.extend(extremal_dminus1(d).ok());
    }
    if k < d {
        options.extend(ball_family(k, d).ok());
    }
    options.extend(realize_mbar(k, d).ok());
    options.into_iter().max_by_key(Family::len)
}

fn prepare(k: usize, d: usize, cfg: &SearchConfig) -> Result<Graph, SearchError> {
    check_args(k, d)?;
    cfg.validate()?;
    let max_jokers = if cfg.joker_prune { d - k } else { d };
    let count = candidate_count(d, max_jokers);
    if count > cfg.capacity as u128 {
        return Err(SearchError::CapacityExceeded {
            candidates: count,
            capacity: cfg.capacity,
        });
    }
    Ok(Graph::build(k, d, strings_with_jokers_at_most(d, max_jokers)))
}

/// Maximum k-neighborly family in `S^d`. Running out of budget is not an
/// error: the best family found is returned with `proven_optimal = false`.
pub fn max_family(k: usize, d: usize, cfg: &SearchConfig) -> Result<SearchResult, SearchError> {
    let start = Instant::now();
    let graph = prepare(k, d, cfg)?;
    let seed = if cfg.seed_with_constructions {
        seed_family(k, d)
    } else {
        None
    };
    let upper = if cfg.upper_cutoff {
        let entry = best_bounds::<u128>(k, d).expect("range checked");
        usize::try_from(entry.upper.value).unwrap_or(usize::MAX)
    } else {
        usize::MAX
    };
    let shared = Shared {
        graph: &graph,
        cfg,
        best: AtomicUsize::new(seed.as_ref().map_or(0, Family::len)),
        witness: Mutex::new(None),
        nodes: AtomicU64::new(0),
        abort: AtomicBool::new(seed.as_ref().is_some_and(|s| s.len() >= upper)),
        exhausted: AtomicBool::new(false),
        start,
        upper,
    };
    for (clique, p) in shared.roots() {
        if shared.abort.load(Ordering::Relaxed) {
            break;
        }
        shared.run_root(clique, p);
    }
    let exhausted = shared.exhausted.load(Ordering::Relaxed);
    let mut witness: Vec<TernaryString> = match shared.witness.into_inner().unwrap() {
        Some(vs) => vs.iter().map(|&v| graph.strings[v].clone()).collect(),
        None => seed.map(Family::into_members).unwrap_or_default(),
    };
    witness.sort();
    Ok(SearchResult {
        k,
        d,
        optimum: witness.len(),
        witness,
        proven_optimal: !exhausted,
        stats: SearchStats {
            nodes: shared.nodes.into_inner(),
            elapsed: start.elapsed(),
            candidates: graph.len(),
            budget_exhausted: exhausted,
        },
    })
}

/// Every maximum family (as a member set, members sorted), up to
/// `cfg.enumeration_cap` of them. Families are listed in discovery order of
/// a sequential search.
pub fn enumerate_max_families(k: usize, d: usize, cfg: &SearchConfig) -> Result<Vec<Family>, SearchError> {
    let best = max_family(k, d, cfg)?;
    if !best.proven_optimal {
        return Err(SearchError::NotProven);
    }
    let graph = prepare(k, d, cfg)?;
    let mut found = Vec::new();
    let mut state = Enumerator {
        graph: &graph,
        target: best.optimum,
        cap: cfg.enumeration_cap,
        found: &mut found,
    };
    if !state.expand(&mut Vec::new(), 0, graph.all()) {
        return Err(SearchError::EnumerationCapExceeded(cfg.enumeration_cap));
    }
    Ok(found
        .into_iter()
        .map(|vs| {
            let mut members: Vec<_> = vs.iter().map(|&v| graph.strings[v].clone()).collect();
            members.sort();
            Family::new(d, members).expect("cliques have distinct members")
        })
        .collect())
}

struct Enumerator<'a> {
    graph: &'a Graph,
    target: usize,
    cap: usize,
    found: &'a mut Vec<Vec<usize>>,
}

impl Enumerator<'_> {
    /// False once the cap is exceeded.
    fn expand(&mut self, clique: &mut Vec<usize>, used: u128, mut p: Bits) -> bool {
        let g = self.graph;
        if clique.len() == self.target {
            if self.found.len() == self.cap {
                return false;
            }
            self.found.push(clique.clone());
            return true;
        }
        let need = self.target - clique.len();
        let (order, colors) = g.color_sort(&p, need);
        let mut next = vec![0u64; g.words];
        for idx in (0..order.len()).rev() {
            if colors[idx] < need || g.volume_bound(&p, used) < need {
                return true;
            }
            let v = order[idx];
            and_into(&mut next, &p, &g.adj[v]);
            clique.push(v);
            let ok = self.expand(clique, used + g.volume_of(v), next.clone());
            clique.pop();
            if !ok {
                return false;
            }
            bit_clear(&mut p, v);
        }
        true
    }
}
