//! Exact matching sequencibility by depth-first search over edge placements.
//!
//! Edges are placed left to right. A candidate for position `p` must avoid
//! every vertex used in the previous `d - 1` positions; in cyclic mode it
//! must also stay `d` away (around the wrap) from the first occurrence of
//! each of its vertices. After every placement a per-vertex capacity bound
//! prunes states where some vertex has more unplaced edges than free slots
//! spaced `d` apart. Rotations are fixed by putting edge 0 first (cyclic
//! mode) and reflections by an id comparison at the ends of the sequence.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::matching::max_matching_size;
use crate::ordering::{EdgeOrdering, OrderingMode};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveBudget {
    pub max_nodes: u64,
    pub max_seconds: f64,
}

impl SolveBudget {
    pub fn new(max_nodes: u64, max_seconds: f64) -> Result<Self> {
        if max_nodes == 0 || max_seconds.is_nan() || max_seconds <= 0.0 {
            return Err(Error::InvalidTarget { target: 0, max: 0 });
        }
        Ok(SolveBudget {
            max_nodes,
            max_seconds,
        })
    }
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget {
            max_nodes: 200_000_000,
            max_seconds: 60.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    ValueFound,
    NonexistenceCertified,
    BudgetExceeded,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// The decided target (decision form) or the exact optimum.
    pub value: Option<usize>,
    pub witness: Option<EdgeOrdering>,
    pub nodes_explored: u64,
    /// Nodes per placement depth (index 0 = first position).
    pub depth_histogram: Vec<u64>,
    /// Verified bracket on the optimum; equal ends once solved.
    pub lower_bound: usize,
    pub upper_bound: usize,
}

/// Search configuration. `parallel` fans the second decision level out
/// over the rayon pool; witnesses are identical to the sequential search
/// whenever every branch completes.
#[derive(Debug, Clone, Copy, Default)]
pub struct Solver {
    pub budget: SolveBudget,
    pub parallel: bool,
}

pub fn exists_ordering(
    g: &Graph,
    d: usize,
    mode: OrderingMode,
    budget: &SolveBudget,
) -> Result<SolveResult> {
    Solver::new(*budget).exists_ordering(g, d, mode)
}

pub fn ms_exact(g: &Graph, budget: &SolveBudget) -> Result<SolveResult> {
    Solver::new(*budget).solve(g, OrderingMode::Linear)
}

pub fn cms_exact(g: &Graph, budget: &SolveBudget) -> Result<SolveResult> {
    Solver::new(*budget).solve(g, OrderingMode::Cyclic)
}

struct Limits {
    nodes: AtomicU64,
    stop: AtomicBool,
    max_nodes: u64,
    deadline: Instant,
}

impl Limits {
    fn new(budget: &SolveBudget) -> Self {
        let secs = Duration::from_secs_f64(budget.max_seconds.min(1e9));
        Limits {
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            max_nodes: budget.max_nodes,
            deadline: Instant::now() + secs,
        }
    }
}

enum Outcome {
    Found,
    Exhausted,
    Aborted,
}

#[derive(Clone)]
struct Search<'a> {
    ends: Vec<(VertexId, VertexId)>,
    m: usize,
    d: usize,
    cyclic: bool,
    used: Vec<bool>,
    // 1-based positions, 0 = vertex not placed yet
    last: Vec<usize>,
    first: Vec<usize>,
    remaining: Vec<usize>,
    seq: Vec<EdgeId>,
    hist: Vec<u64>,
    limits: &'a Limits,
    // parallel branch index and the smallest branch index holding a witness
    branch: usize,
    best_branch: Option<&'a AtomicUsize>,
}

impl<'a> Search<'a> {
    fn new(g: &Graph, d: usize, cyclic: bool, limits: &'a Limits) -> Self {
        let m = g.edge_count();
        Search {
            ends: g.edges().iter().map(|e| (e.u, e.v)).collect(),
            m,
            d,
            cyclic,
            used: vec![false; m],
            last: vec![0; g.order()],
            first: vec![0; g.order()],
            remaining: g.degrees(),
            seq: Vec::with_capacity(m),
            hist: vec![0; m],
            limits,
            branch: 0,
            best_branch: None,
        }
    }

    fn fits(&self, e: EdgeId, pos: usize) -> bool {
        let (u, v) = self.ends[e];
        [u, v].into_iter().all(|x| {
            let near = self.last[x] == 0 || pos - self.last[x] >= self.d;
            let wrap = !self.cyclic || self.first[x] == 0 || self.m - pos + self.first[x] >= self.d;
            near && wrap
        })
    }

    fn place(&mut self, e: EdgeId) -> [usize; 4] {
        let pos = self.seq.len() + 1;
        let (u, v) = self.ends[e];
        let saved = [self.last[u], self.first[u], self.last[v], self.first[v]];
        for x in [u, v] {
            self.last[x] = pos;
            if self.first[x] == 0 {
                self.first[x] = pos;
            }
            self.remaining[x] -= 1;
        }
        self.used[e] = true;
        self.seq.push(e);
        saved
    }

    fn undo(&mut self, e: EdgeId, saved: [usize; 4]) {
        let (u, v) = self.ends[e];
        for x in [u, v] {
            self.remaining[x] += 1;
        }
        self.last[v] = saved[2];
        self.first[v] = saved[3];
        self.last[u] = saved[0];
        self.first[u] = saved[1];
        self.used[e] = false;
        self.seq.pop();
    }

    /// Every vertex can still fit its unplaced edges into the free positions.
    fn capacity_ok(&self) -> bool {
        let placed = self.seq.len();
        let (m, d) = (self.m, self.d);
        (0..self.remaining.len()).all(|x| {
            let need = self.remaining[x];
            if need == 0 {
                return true;
            }
            let mut lo = placed + 1;
            if self.last[x] > 0 {
                lo = lo.max(self.last[x] + d);
            }
            let mut hi = m;
            if self.cyclic && self.first[x] > 0 {
                hi = match (m + self.first[x]).checked_sub(d) {
                    Some(h) => h.min(m),
                    None => return false,
                };
            }
            let mut cap = if hi >= lo { (hi - lo) / d + 1 } else { 0 };
            if self.cyclic && self.first[x] == 0 {
                cap = cap.min(m / d);
            }
            need <= cap
        })
    }

    fn reflection_ok(&self) -> bool {
        let s = &self.seq;
        if self.cyclic {
            self.m < 3 || s[1] < s[self.m - 1]
        } else {
            self.m < 2 || s[0] < s[self.m - 1]
        }
    }

    fn should_abort(&self) -> bool {
        let n = self.limits.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.limits.max_nodes
            || (n.is_multiple_of(4096) && Instant::now() >= self.limits.deadline)
        {
            self.limits.stop.store(true, Ordering::Relaxed);
        }
        if self.limits.stop.load(Ordering::Relaxed) {
            return true;
        }
        match self.best_branch {
            Some(best) => best.load(Ordering::Relaxed) < self.branch,
            None => false,
        }
    }

    fn dfs(&mut self) -> Outcome {
        let placed = self.seq.len();
        if placed == self.m {
            return if self.reflection_ok() {
                Outcome::Found
            } else {
                Outcome::Exhausted
            };
        }
        for e in 0..self.m {
            if self.used[e] || !self.fits(e, placed + 1) {
                continue;
            }
            self.hist[placed] += 1;
            if self.should_abort() {
                return Outcome::Aborted;
            }
            let saved = self.place(e);
            if self.capacity_ok() {
                match self.dfs() {
                    Outcome::Found => return Outcome::Found,
                    Outcome::Aborted => {
                        self.undo(e, saved);
                        return Outcome::Aborted;
                    }
                    Outcome::Exhausted => {}
                }
            }
            self.undo(e, saved);
        }
        Outcome::Exhausted
    }

    /// Sets up the fixed prefix (edge 0 first in cyclic mode). Returns
    /// false if the root is already infeasible.
    fn prepare(&mut self) -> bool {
        if !self.capacity_ok() {
            return false;
        }
        if self.cyclic {
            self.hist[0] += 1;
            self.limits.nodes.fetch_add(1, Ordering::Relaxed);
            self.place(0);
            return self.capacity_ok();
        }
        true
    }
}

struct RawOutcome {
    status: SolveStatus,
    witness: Option<Vec<EdgeId>>,
    hist: Vec<u64>,
}

impl Solver {
    pub fn new(budget: SolveBudget) -> Self {
        Solver {
            budget,
            parallel: false,
        }
    }

    pub fn parallel(mut self, on: bool) -> Self {
        self.parallel = on;
        self
    }

    /// Decides whether some ordering in `mode` has matching number at least `d`.
    pub fn exists_ordering(&self, g: &Graph, d: usize, mode: OrderingMode) -> Result<SolveResult> {
        let m = g.edge_count();
        if m == 0 {
            return Err(Error::EmptyGraph);
        }
        if d == 0 || d > m {
            return Err(Error::InvalidTarget { target: d, max: m });
        }
        let limits = Limits::new(&self.budget);
        let raw = self.decide(g, d, mode, &limits);
        let nodes = limits.nodes.load(Ordering::Relaxed);
        let witness = raw.witness.map(|seq| witness_ordering(g, seq, mode));
        let (lower_bound, upper_bound) = match raw.status {
            SolveStatus::ValueFound => (d, m),
            SolveStatus::NonexistenceCertified => (1, d - 1),
            SolveStatus::BudgetExceeded => (1, m),
        };
        Ok(SolveResult {
            status: raw.status,
            value: (raw.status == SolveStatus::ValueFound).then_some(d),
            witness,
            nodes_explored: nodes,
            depth_histogram: raw.hist,
            lower_bound,
            upper_bound,
        })
    }

    /// Exact optimum over orderings in `mode`, searching `d` downward from
    /// `min(max matching, m)`. The budget covers the whole descent.
    pub fn solve(&self, g: &Graph, mode: OrderingMode) -> Result<SolveResult> {
        let m = g.edge_count();
        if m == 0 {
            return Err(Error::EmptyGraph);
        }
        let upper = max_matching_size(g).min(m);
        let limits = Limits::new(&self.budget);
        let mut hist = vec![0u64; m];
        for d in (1..=upper).rev() {
            let raw = self.decide(g, d, mode, &limits);
            for (h, x) in hist.iter_mut().zip(&raw.hist) {
                *h += x;
            }
            let nodes_explored = limits.nodes.load(Ordering::Relaxed);
            match raw.status {
                SolveStatus::NonexistenceCertified => continue,
                SolveStatus::ValueFound => {
                    return Ok(SolveResult {
                        status: SolveStatus::ValueFound,
                        value: Some(d),
                        witness: raw.witness.map(|seq| witness_ordering(g, seq, mode)),
                        nodes_explored,
                        depth_histogram: hist,
                        lower_bound: d,
                        upper_bound: d,
                    })
                }
                SolveStatus::BudgetExceeded => {
                    return Ok(SolveResult {
                        status: SolveStatus::BudgetExceeded,
                        value: None,
                        witness: None,
                        nodes_explored,
                        depth_histogram: hist,
                        lower_bound: 1,
                        upper_bound: d,
                    })
                }
            }
        }
        unreachable!("d = 1 always has a witness")
    }

    fn decide(&self, g: &Graph, d: usize, mode: OrderingMode, limits: &Limits) -> RawOutcome {
        let cyclic = mode == OrderingMode::Cyclic;
        let mut root = Search::new(g, d, cyclic, limits);
        if !root.prepare() {
            return RawOutcome {
                status: SolveStatus::NonexistenceCertified,
                witness: None,
                hist: root.hist,
            };
        }
        if !self.parallel || root.seq.len() == root.m {
            let outcome = root.dfs();
            return finish(outcome, root);
        }

        let depth = root.seq.len();
        let candidates: Vec<EdgeId> = (0..root.m)
            .filter(|&e| !root.used[e] && root.fits(e, depth + 1))
            .collect();
        let best = AtomicUsize::new(usize::MAX);
        let branches: Vec<(Outcome, Search)> = candidates
            .par_iter()
            .enumerate()
            .map(|(i, &e)| {
                let mut s = root.clone();
                s.hist = vec![0; s.m];
                s.branch = i;
                s.best_branch = Some(&best);
                s.hist[depth] += 1;
                if s.should_abort() {
                    return (Outcome::Aborted, s);
                }
                s.place(e);
                let outcome = if s.capacity_ok() {
                    s.dfs()
                } else {
                    Outcome::Exhausted
                };
                if let Outcome::Found = outcome {
                    best.fetch_min(i, Ordering::Relaxed);
                }
                (outcome, s)
            })
            .collect();

        let mut hist = root.hist.clone();
        for (_, s) in &branches {
            for (h, x) in hist.iter_mut().zip(&s.hist) {
                *h += x;
            }
        }
        let mut incomplete = false;
        for (outcome, s) in branches {
            match outcome {
                Outcome::Found => {
                    return RawOutcome {
                        status: SolveStatus::ValueFound,
                        witness: Some(s.seq),
                        hist,
                    };
                }
                Outcome::Aborted => incomplete = true,
                Outcome::Exhausted => {}
            }
        }
        let status = if incomplete {
            SolveStatus::BudgetExceeded
        } else {
            SolveStatus::NonexistenceCertified
        };
        RawOutcome {
            status,
            witness: None,
            hist,
        }
    }
}

fn finish(outcome: Outcome, s: Search) -> RawOutcome {
    match outcome {
        Outcome::Found => RawOutcome {
            status: SolveStatus::ValueFound,
            witness: Some(s.seq),
            hist: s.hist,
        },
        Outcome::Exhausted => RawOutcome {
            status: SolveStatus::NonexistenceCertified,
            witness: None,
            hist: s.hist,
        },
        Outcome::Aborted => RawOutcome {
            status: SolveStatus::BudgetExceeded,
            witness: None,
            hist: s.hist,
        },
    }
}

fn witness_ordering(g: &Graph, seq: Vec<EdgeId>, mode: OrderingMode) -> EdgeOrdering {
    EdgeOrdering::new(Arc::new(g.clone()), seq, mode).expect("search emits permutations")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;
    use crate::ordering::matching_number;

    fn budget() -> SolveBudget {
        SolveBudget {
            max_nodes: 50_000_000,
            max_seconds: 60.0,
        }
    }

    fn complete(n: usize) -> Graph {
        FamilySpec::Complete { n }.build().unwrap()
    }

    #[test]
    fn k5_decisions() {
        let k5 = complete(5);
        let cyc = exists_ordering(&k5, 2, OrderingMode::Cyclic, &budget()).unwrap();
        assert_eq!(cyc.status, SolveStatus::NonexistenceCertified);
        assert!(cyc.witness.is_none());
        let lin = exists_ordering(&k5, 2, OrderingMode::Linear, &budget()).unwrap();
        assert_eq!(lin.status, SolveStatus::ValueFound);
        assert!(matching_number(lin.witness.as_ref().unwrap()).value >= 2);
    }

    #[test]
    fn single_edge() {
        let g = Graph::from_edges(2, [(0, 1)], false).unwrap();
        for mode in [OrderingMode::Linear, OrderingMode::Cyclic] {
            let r = exists_ordering(&g, 1, mode, &budget()).unwrap();
            assert_eq!(r.status, SolveStatus::ValueFound);
            assert_eq!(ms_exact(&g, &budget()).unwrap().value, Some(1));
        }
    }

    #[test]
    fn invalid_targets() {
        let k4 = complete(4);
        assert_eq!(
            exists_ordering(&k4, 0, OrderingMode::Linear, &budget()).unwrap_err(),
            Error::InvalidTarget { target: 0, max: 6 }
        );
        assert!(exists_ordering(&k4, 7, OrderingMode::Linear, &budget()).is_err());
        let empty = Graph::from_edges(2, [], false).unwrap();
        assert_eq!(ms_exact(&empty, &budget()).unwrap_err(), Error::EmptyGraph);
    }

    #[test]
    fn small_complete_values() {
        let want_cms = [(3, 1), (4, 1), (5, 1), (6, 2)];
        for (n, v) in want_cms {
            let r = cms_exact(&complete(n), &budget()).unwrap();
            assert_eq!(r.value, Some(v), "cms(K_{n})");
            assert_eq!(r.lower_bound, r.upper_bound);
        }
        for n in 3..=6 {
            assert_eq!(
                ms_exact(&complete(n), &budget()).unwrap().value,
                Some((n - 1) / 2)
            );
        }
    }

    #[test]
    fn cycles_and_paths() {
        let c5 = FamilySpec::Cycle { n: 5 }.build().unwrap();
        assert_eq!(ms_exact(&c5, &budget()).unwrap().value, Some(2));
        assert_eq!(cms_exact(&c5, &budget()).unwrap().value, Some(2));
        let p7 = FamilySpec::Path { n: 7 }.build().unwrap();
        assert_eq!(ms_exact(&p7, &budget()).unwrap().value, Some(3));
        assert_eq!(cms_exact(&p7, &budget()).unwrap().value, Some(2));
    }

    #[test]
    fn budget_exhaustion_is_not_nonexistence() {
        let k7 = complete(7);
        let tiny = SolveBudget {
            max_nodes: 10,
            max_seconds: 10.0,
        };
        let r = exists_ordering(&k7, 3, OrderingMode::Linear, &tiny).unwrap();
        assert_eq!(r.status, SolveStatus::BudgetExceeded);
        assert!(r.value.is_none());
        let r = cms_exact(&k7, &tiny).unwrap();
        assert_eq!(r.status, SolveStatus::BudgetExceeded);
        assert_eq!(r.upper_bound, 3);
    }

    #[test]
    fn parallel_matches_sequential() {
        for g in [
            complete(5),
            complete(6),
            FamilySpec::Cycle { n: 8 }.build().unwrap(),
        ] {
            for mode in [OrderingMode::Linear, OrderingMode::Cyclic] {
                let seq = Solver::new(budget()).solve(&g, mode).unwrap();
                let par = Solver::new(budget())
                    .parallel(true)
                    .solve(&g, mode)
                    .unwrap();
                assert_eq!(seq.value, par.value);
                assert_eq!(
                    seq.witness.unwrap().sequence(),
                    par.witness.unwrap().sequence(),
                    "{mode}"
                );
            }
        }
    }

    #[test]
    fn deterministic_witness() {
        let g = complete(6);
        let a = ms_exact(&g, &budget()).unwrap();
        let b = ms_exact(&g, &budget()).unwrap();
        assert_eq!(a.witness.unwrap().sequence(), b.witness.unwrap().sequence());
        assert_eq!(a.nodes_explored, b.nodes_explored);
    }

    #[test]
    fn multigraph_parallel_copies_adjacent() {
        let g = Graph::from_edges(2, [(0, 1)], false)
            .unwrap()
            .multiply(2)
            .unwrap();
        assert_eq!(cms_exact(&g, &budget()).unwrap().value, Some(1));
        let k5x2 = complete(5).multiply(2).unwrap();
        let r = cms_exact(&k5x2, &budget()).unwrap();
        assert_eq!(r.value, Some(2));
        assert!(matching_number(r.witness.as_ref().unwrap()).value >= 2);
    }
}
