//! Exact `kappa2` by branch and bound over connected vertex sets.
//!
//! For a connected set `A` let `R = V - A - N(A)` and let `cost(A)` be
//! `|N(A)|` plus the number of isolated vertices of `G[R]`. Whenever `G[R]`
//! keeps an edge, `N(A)` together with those isolated vertices is a valid cut,
//! and every minimum valid cut arises this way from its smallest component.
//! So `kappa2` is the least valid `cost(A)`, and the search enumerates
//! connected sets rooted at their least vertex.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use super::flow::vertex_connectivity;
use super::{check_searchable, verify_cut, ConnectivityError, CutCertificate};
use crate::graph::{Graph, VertexSet};
use crate::srg::{srg_check, SrgParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kappa2 {
    Value(usize),
    NoValidCut,
}

impl Kappa2 {
    pub fn value(&self) -> Option<usize> {
        match self {
            Kappa2::Value(v) => Some(*v),
            Kappa2::NoValidCut => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kappa2Options {
    /// Also return every minimum cut, deduplicated by `S`.
    pub enumerate_all: bool,
    pub threads: usize,
    /// Maximum number of search nodes over both phases.
    pub node_budget: u64,
    /// Extra connected sets (typically cliques) used to seed the upper bound.
    pub seeds: Vec<VertexSet>,
}

impl Default for Kappa2Options {
    fn default() -> Self {
        Kappa2Options {
            enumerate_all: false,
            threads: 1,
            node_budget: 1_000_000_000,
            seeds: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    /// Candidate sets whose cost was evaluated.
    pub evaluated: u64,
    pub frontier_prunes: u64,
    /// Upper bound on `kappa2` from the seed sets, if any was valid.
    pub seed_bound: Option<usize>,
    /// Largest `|A|` enumerated in the final phase.
    pub size_cap: usize,
    /// Smallest `|A|` evaluated in the final phase.
    pub size_floor: usize,
    pub vertex_connectivity: usize,
    pub srg: Option<SrgParams>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kappa2Result {
    /// Exact when `closed`; otherwise the best cut found so far.
    pub value: Kappa2,
    pub closed: bool,
    /// Minimum cut whose component `A` is lexicographically least.
    pub certificate: Option<CutCertificate>,
    pub optimal_cuts: Option<Vec<CutCertificate>>,
    pub stats: SearchStats,
}

/// `N(A)` plus the isolated vertices of `G - A - N(A)`, or `None` when nothing
/// but isolated vertices would remain.
pub fn separator_cost(g: &Graph, a: &VertexSet) -> Option<VertexSet> {
    let nb = g.neighborhood(a);
    separator_from(g, a, &nb)
}

fn separator_from(g: &Graph, a: &VertexSet, nb: &VertexSet) -> Option<VertexSet> {
    let rest = a.union(nb).complement();
    let mut s = nb.clone();
    let mut keeps_edge = false;
    for x in rest.to_vec() {
        let touches = g.row(x).iter().zip(rest.words()).any(|(r, w)| r & w != 0);
        if touches {
            keeps_edge = true;
        } else {
            s.insert(x);
        }
    }
    keeps_edge.then_some(s)
}

/// Largest `a` with `4 mu a max(a, v - s - a) <= s D`: the smaller side of any
/// cut of size at most `s` in an SRG has at most this many vertices.
pub(crate) fn spectral_size_cap(p: &SrgParams, s: usize) -> usize {
    let d = p.discriminant() as u128;
    let mu = p.mu as u128;
    let budget = s as u128 * d;
    let rest = p.v.saturating_sub(s) as u128;
    let mut a = 0u128;
    while a < p.v as u128 {
        let next = a + 1;
        let b = next.max(rest.saturating_sub(next));
        if 4 * mu * next * b > budget {
            break;
        }
        a = next;
    }
    a as usize
}

struct Shared<'g> {
    g: &'g Graph,
    generic_cap: usize,
    srg: Option<SrgParams>,
    budget: u64,
    nodes: AtomicU64,
    aborted: AtomicBool,
}

impl Shared<'_> {
    fn cap(&self, s_max: usize) -> usize {
        match &self.srg {
            Some(p) => self.generic_cap.min(spectral_size_cap(p, s_max)),
            None => self.generic_cap,
        }
    }

    /// A connected set of size `t` in an SRG has `|N(A)| >= 2k - lambda - t`.
    fn floor(&self, s_max: usize) -> usize {
        match &self.srg {
            Some(p) => (2 * p.k - p.lambda).saturating_sub(s_max).max(2),
            None => 2,
        }
    }
}

enum Mode<'a> {
    /// Report any set cheaper than the shared incumbent.
    Improve(&'a AtomicUsize),
    /// Collect every set of exactly this cost.
    Collect(usize),
}

struct Worker<'a, 'g> {
    shared: &'a Shared<'g>,
    mode: Mode<'a>,
    best: Option<(usize, VertexSet, VertexSet)>,
    found: Vec<(VertexSet, VertexSet)>,
    evaluated: u64,
    frontier_prunes: u64,
}

impl<'a, 'g> Worker<'a, 'g> {
    fn new(shared: &'a Shared<'g>, mode: Mode<'a>) -> Self {
        Worker {
            shared,
            mode,
            best: None,
            found: Vec::new(),
            evaluated: 0,
            frontier_prunes: 0,
        }
    }

    fn s_max(&self) -> Option<usize> {
        match &self.mode {
            Mode::Improve(inc) => inc.load(Ordering::Relaxed).checked_sub(1),
            Mode::Collect(s) => Some(*s),
        }
    }

    fn run_root(&mut self, r: usize) {
        let g = self.shared.g;
        let n = g.order();
        let mut a = VertexSet::from_vertices(n, [r]);
        let nb = g.neighbors(r);
        let excluded = VertexSet::from_vertices(n, 0..r);
        self.dfs(&mut a, &nb, &excluded, 1);
    }

    fn dfs(&mut self, a: &mut VertexSet, nb: &VertexSet, excluded: &VertexSet, t: usize) {
        let shared = self.shared;
        if shared.aborted.load(Ordering::Relaxed) {
            return;
        }
        if shared.nodes.fetch_add(1, Ordering::Relaxed) >= shared.budget {
            shared.aborted.store(true, Ordering::Relaxed);
            return;
        }
        let Some(s_max) = self.s_max() else { return };
        let cap = shared.cap(s_max);
        let floor = shared.floor(s_max);
        if t > cap || floor > cap {
            return;
        }
        let candidates = nb.difference(excluded);
        // each added vertex removes at most itself from N(A)
        let removable = (cap - t).min(candidates.len());
        if nb.len() - removable > s_max {
            self.frontier_prunes += 1;
            return;
        }
        if t >= floor {
            self.evaluate(a, nb, s_max);
        }
        if t == cap {
            return;
        }
        let g = shared.g;
        let mut excl = excluded.clone();
        for w in candidates.iter() {
            a.insert(w);
            let mut child_nb = nb.union(&g.neighbors(w));
            child_nb.difference_with(a);
            self.dfs(a, &child_nb, &excl, t + 1);
            a.remove(w);
            excl.insert(w);
        }
    }

    fn evaluate(&mut self, a: &VertexSet, nb: &VertexSet, s_max: usize) {
        self.evaluated += 1;
        let Some(s) = separator_from(self.shared.g, a, nb) else {
            return;
        };
        let cost = s.len();
        if cost > s_max {
            return;
        }
        match &self.mode {
            Mode::Improve(inc) => {
                inc.fetch_min(cost, Ordering::Relaxed);
                let better = match &self.best {
                    Some((c, best_a, _)) => (cost, a) < (*c, best_a),
                    None => true,
                };
                if better {
                    self.best = Some((cost, a.clone(), s));
                }
            }
            Mode::Collect(target) => {
                if cost == *target {
                    self.found.push((a.clone(), s));
                }
            }
        }
    }
}

/// Runs `job` on roots `0..n` across `threads` workers. Roots above the value
/// in `stop_above` (when given) are skipped.
fn for_each_root<T, F>(threads: usize, n: usize, stop_above: Option<&AtomicUsize>, job: F) -> Vec<(usize, T)>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let next = AtomicUsize::new(0);
    let out = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..threads.max(1) {
            scope.spawn(|| loop {
                let r = next.fetch_add(1, Ordering::Relaxed);
                if r >= n || stop_above.is_some_and(|s| r > s.load(Ordering::Relaxed)) {
                    break;
                }
                let value = job(r);
                out.lock().unwrap().push((r, value));
            });
        }
    });
    let mut out = out.into_inner().unwrap();
    out.sort_by_key(|(r, _)| *r);
    out
}

fn certificate(a: &VertexSet, s: &VertexSet) -> CutCertificate {
    let b = a.union(s).complement();
    CutCertificate {
        a: a.clone(),
        s: s.clone(),
        b,
    }
}

/// Exact `kappa2`, or `NoValidCut` when no valid cut exists.
pub fn kappa2_exact(g: &Graph, opts: &Kappa2Options) -> Result<Kappa2Result, ConnectivityError> {
    check_searchable(g)?;
    let n = g.order();
    let kappa = vertex_connectivity(g)?;
    let srg = srg_check(g).ok();
    let shared = Shared {
        g,
        generic_cap: (n - kappa) / 2,
        srg,
        budget: opts.node_budget,
        nodes: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
    };
    let mut stats = SearchStats {
        vertex_connectivity: kappa,
        srg,
        ..SearchStats::default()
    };

    // seed the incumbent with edges and caller-supplied sets
    let edges = g.edges();
    let seed_edges = edges.iter().filter(|&&(u, _)| edges.len() <= 50_000 || u < 8);
    let mut seed_best: Option<(usize, VertexSet, VertexSet)> = None;
    let seeds = seed_edges.map(|&(u, w)| VertexSet::from_vertices(n, [u, w])).chain(
        opts.seeds
            .iter()
            .filter(|s| s.len() >= 2 && g.components(s).len() == 1)
            .cloned(),
    );
    for a in seeds {
        if let Some(s) = separator_cost(g, &a) {
            let key = (s.len(), &a);
            if seed_best.as_ref().is_none_or(|(c, best_a, _)| key < (*c, best_a)) {
                seed_best = Some((s.len(), a, s));
            }
        }
    }
    stats.seed_bound = seed_best.as_ref().map(|b| b.0);

    // phase 1: the value
    let incumbent = AtomicUsize::new(seed_best.as_ref().map_or(n, |b| b.0));
    let improve = for_each_root(opts.threads, n, None, |r| {
        let mut w = Worker::new(&shared, Mode::Improve(&incumbent));
        w.run_root(r);
        (w.best, w.evaluated, w.frontier_prunes)
    });
    let mut best = seed_best;
    for (_, (found, evaluated, prunes)) in improve {
        stats.evaluated += evaluated;
        stats.frontier_prunes += prunes;
        if let Some((c, a, s)) = found {
            if best.as_ref().is_none_or(|(bc, ba, _)| (c, &a) < (*bc, ba)) {
                best = Some((c, a, s));
            }
        }
    }
    let aborted = |stats: &mut SearchStats| {
        stats.nodes = shared.nodes.load(Ordering::Relaxed);
        shared.aborted.load(Ordering::Relaxed)
    };
    if aborted(&mut stats) {
        let result = Kappa2Result {
            value: best.as_ref().map_or(Kappa2::NoValidCut, |b| Kappa2::Value(b.0)),
            closed: false,
            certificate: best.as_ref().map(|(_, a, s)| certificate(a, s)),
            optimal_cuts: None,
            stats,
        };
        return Err(ConnectivityError::BudgetExceeded(Box::new(result)));
    }
    let Some((value, best_a, best_s)) = best else {
        return Ok(Kappa2Result {
            value: Kappa2::NoValidCut,
            closed: true,
            certificate: None,
            optimal_cuts: opts.enumerate_all.then(Vec::new),
            stats,
        });
    };

    // phase 2: canonical certificate, and every optimum when asked
    stats.size_cap = shared.cap(value);
    stats.size_floor = shared.floor(value);
    let first_root = AtomicUsize::new(usize::MAX);
    let stop = (!opts.enumerate_all).then_some(&first_root);
    let collected = for_each_root(opts.threads, n, stop, |r| {
        let mut w = Worker::new(&shared, Mode::Collect(value));
        w.run_root(r);
        if !w.found.is_empty() {
            first_root.fetch_min(r, Ordering::Relaxed);
        }
        (w.found, w.evaluated, w.frontier_prunes)
    });
    let mut all = Vec::new();
    for (_, (found, evaluated, prunes)) in collected {
        stats.evaluated += evaluated;
        stats.frontier_prunes += prunes;
        all.extend(found);
    }
    if aborted(&mut stats) {
        let result = Kappa2Result {
            value: Kappa2::Value(value),
            closed: true,
            certificate: Some(certificate(&best_a, &best_s)),
            optimal_cuts: None,
            stats,
        };
        return Err(ConnectivityError::BudgetExceeded(Box::new(result)));
    }
    let (a, s) = all
        .iter()
        .min_by(|x, y| x.0.cmp(&y.0))
        .cloned()
        .expect("the optimum's smallest component lies within the search caps");
    let optimal_cuts = opts.enumerate_all.then(|| {
        let mut cuts: Vec<VertexSet> = all.into_iter().map(|(_, s)| s).collect();
        cuts.sort();
        cuts.dedup();
        cuts.iter()
            .map(|s| verify_cut(g, s).expect("collected separators are valid"))
            .collect()
    });
    Ok(Kappa2Result {
        value: Kappa2::Value(value),
        closed: true,
        certificate: Some(certificate(&a, &s)),
        optimal_cuts,
        stats,
    })
}

/// Every minimum valid cut, deduplicated by `S` and ordered by `S`.
pub fn enumerate_optimal_cuts(g: &Graph, opts: &Kappa2Options) -> Result<Vec<CutCertificate>, ConnectivityError> {
    let opts = Kappa2Options {
        enumerate_all: true,
        ..opts.clone()
    };
    Ok(kappa2_exact(g, &opts)?.optimal_cuts.unwrap_or_default())
}
