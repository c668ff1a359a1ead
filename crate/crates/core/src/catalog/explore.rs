//! Exact-value experiments around multigraph powers, the gap between linear
//! and cyclic values, and pendant-heavy graphs. These produce data only;
//! rows the solver could not settle are flagged rather than guessed.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::matching::max_matching_size;
use crate::ordering::OrderingMode;
use crate::solver::{SolveBudget, SolveStatus, Solver};

fn exact(g: &Graph, mode: OrderingMode, budget: &SolveBudget) -> Result<Option<usize>> {
    let r = Solver::new(*budget).solve(g, mode)?;
    Ok(match r.status {
        SolveStatus::ValueFound => r.value,
        _ => None,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Q1Row {
    pub k: usize,
    pub matching_number: usize,
    pub ms: Option<usize>,
    pub cms: Option<usize>,
    pub ms_reaches: Option<bool>,
    pub cms_reaches: Option<bool>,
    pub unresolved: bool,
}

/// `ms(kG)` and `cms(kG)` for `k = 1..=k_max`, compared with the matching
/// number of `G`.
pub fn explore_q1(g: &Graph, k_max: usize, budget: &SolveBudget) -> Result<Vec<Q1Row>> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let p = max_matching_size(g);
    (1..=k_max)
        .map(|k| {
            let multi = g.multiply(k)?;
            let ms = exact(&multi, OrderingMode::Linear, budget)?;
            let cms = exact(&multi, OrderingMode::Cyclic, budget)?;
            Ok(Q1Row {
                k,
                matching_number: p,
                ms,
                cms,
                ms_reaches: ms.map(|v| v == p),
                cms_reaches: cms.map(|v| v == p),
                unresolved: ms.is_none() || cms.is_none(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Q2Witness {
    pub order: usize,
    pub edges: Vec<(VertexId, VertexId)>,
    pub ms: usize,
    pub cms: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Q2Report {
    pub max_n: usize,
    pub connected_only: bool,
    /// Isomorphism classes examined (graphs with at least one edge).
    pub graphs_examined: usize,
    pub max_gap: usize,
    pub witnesses: Vec<Q2Witness>,
    pub gap_histogram: Vec<usize>,
    pub unresolved: usize,
    /// Rows with `cms > ms`; always zero unless something is broken.
    pub order_violations: usize,
}

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Permutations of `0..n` that keep each degree class in place after
/// sorting vertices by degree.
fn class_permutations(classes: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, out);
            items.swap(k, i);
        }
    }
    let mut result = vec![Vec::new()];
    for class in classes {
        let mut perms = Vec::new();
        permute(&mut class.clone(), 0, &mut perms);
        result = result
            .into_iter()
            .flat_map(|prefix| {
                perms.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(p);
                    v
                })
            })
            .collect();
    }
    result
}

/// Canonical edge mask under relabeling: vertices sorted by degree, then
/// the lexicographically smallest mask over within-class permutations.
fn canonical_mask(n: usize, mask: u64, pairs: &[(usize, usize)], index: &[Vec<usize>]) -> u64 {
    let mut deg = vec![0usize; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    let mut distinct: Vec<usize> = deg.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let classes: Vec<Vec<usize>> = distinct
        .iter()
        .map(|&d| (0..n).filter(|&v| deg[v] == d).collect())
        .collect();
    let mut best = u64::MAX;
    for order in class_permutations(&classes) {
        // order[new] = old
        let mut new_of = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            new_of[old] = new;
        }
        let mut m = 0u64;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                m |= 1 << index[new_of[u]][new_of[v]];
            }
        }
        best = best.min(m);
    }
    best
}

/// Enumerates every graph on `max_n` vertices up to isomorphism (smaller
/// orders appear with isolated vertices), computes `ms` and `cms` exactly
/// and reports the largest gap with all graphs attaining it.
pub fn explore_q2(max_n: usize, connected_only: bool, budget: &SolveBudget) -> Result<Q2Report> {
    if !(2..=7).contains(&max_n) {
        return Err(Error::InvalidFamilyParams(format!(
            "max_n = {max_n}, expected 2..=7"
        )));
    }
    let n = max_n;
    let pairs = pair_index(n);
    let mut index = vec![vec![0; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let total = 1u64 << pairs.len();
    let canon: HashSet<u64> = (1..total)
        .into_par_iter()
        .map(|mask| canonical_mask(n, mask, &pairs, &index))
        .collect();
    let mut classes: Vec<u64> = canon.into_iter().collect();
    classes.sort_unstable();

    let graphs: Vec<Graph> = classes
        .iter()
        .map(|&mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p);
            Graph::from_edges(n, edges, false)
        })
        .collect::<Result<_>>()?;
    let graphs: Vec<Graph> = if connected_only {
        // ignore isolated vertices when testing connectivity
        graphs.into_iter().filter(connected_on_support).collect()
    } else {
        graphs
    };

    let solved: Vec<(Option<usize>, Option<usize>)> = graphs
        .par_iter()
        .map(|g| -> Result<_> {
            Ok((
                exact(g, OrderingMode::Linear, budget)?,
                exact(g, OrderingMode::Cyclic, budget)?,
            ))
        })
        .collect::<Result<_>>()?;

    let mut report = Q2Report {
        max_n,
        connected_only,
        graphs_examined: graphs.len(),
        max_gap: 0,
        witnesses: Vec::new(),
        gap_histogram: Vec::new(),
        unresolved: 0,
        order_violations: 0,
    };
    let mut rows = Vec::new();
    for (g, res) in graphs.iter().zip(solved) {
        match res {
            (Some(ms), Some(cms)) => {
                if cms > ms {
                    report.order_violations += 1;
                    continue;
                }
                let gap = ms - cms;
                if report.gap_histogram.len() <= gap {
                    report.gap_histogram.resize(gap + 1, 0);
                }
                report.gap_histogram[gap] += 1;
                report.max_gap = report.max_gap.max(gap);
                rows.push((g, ms, cms));
            }
            _ => report.unresolved += 1,
        }
    }
    report.witnesses = rows
        .into_iter()
        .filter(|(_, ms, cms)| ms - cms == report.max_gap)
        .map(|(g, ms, cms)| Q2Witness {
            order: g.order(),
            edges: g.edges().iter().map(|e| (e.u, e.v)).collect(),
            ms,
            cms,
        })
        .collect();
    Ok(report)
}

fn connected_on_support(g: &Graph) -> bool {
    let deg = g.degrees();
    let support: Vec<usize> = (0..g.order()).filter(|&v| deg[v] > 0).collect();
    let relabel = |x: usize| {
        support
            .iter()
            .position(|&s| s == x)
            .expect("support vertex")
    };
    let edges = g.edges().iter().map(|e| (relabel(e.u), relabel(e.v)));
    Graph::from_edges(support.len(), edges, false).is_ok_and(|h| h.is_connected())
}

#[derive(Debug, Clone, Serialize)]
pub struct Q3Report {
    pub cms_doubled: Option<usize>,
    pub ms: Option<usize>,
    pub equal: Option<bool>,
}

/// Compares `cms(2G)` with `ms(G)`.
pub fn explore_q3(g: &Graph, budget: &SolveBudget) -> Result<Q3Report> {
    let doubled = g.multiply(2)?;
    let cms_doubled = exact(&doubled, OrderingMode::Cyclic, budget)?;
    let ms = exact(g, OrderingMode::Linear, budget)?;
    let equal = match (cms_doubled, ms) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    Ok(Q3Report {
        cms_doubled,
        ms,
        equal,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PendantReport {
    pub tree_order: usize,
    pub vertex: VertexId,
    /// `ms` after attaching `n + 1` pendant edges.
    pub ms_with_n_plus_1: Option<usize>,
    /// `cms` after attaching `n + 2` pendant edges.
    pub cms_with_n_plus_2: Option<usize>,
    pub pass: bool,
}

/// A tree of order `n` with `n + 1` extra pendant edges at one vertex has
/// `ms = 1`; with `n + 2` it has `cms = 1`. Checked exactly, at a
/// maximum-degree vertex.
pub fn pendant_lemma_check(tree: &Graph, budget: &SolveBudget) -> Result<PendantReport> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let n = tree.order();
    let deg = tree.degrees();
    let vertex = (0..n)
        .max_by_key(|&v| (deg[v], std::cmp::Reverse(v)))
        .expect("nonempty tree");
    let linear = tree.attach_pendants(vertex, n + 1)?;
    let cyclic = tree.attach_pendants(vertex, n + 2)?;
    let ms = exact(&linear, OrderingMode::Linear, budget)?;
    let cms = exact(&cyclic, OrderingMode::Cyclic, budget)?;
    Ok(PendantReport {
        tree_order: n,
        vertex,
        ms_with_n_plus_1: ms,
        cms_with_n_plus_2: cms,
        pass: ms == Some(1) && cms == Some(1),
    })
}
