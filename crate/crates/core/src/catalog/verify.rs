use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{predicted, Case};
use crate::graph::FamilySpec;
use crate::ordering::{matching_number, OrderingMode};
use crate::solver::{SolveBudget, SolveStatus, Solver};

/// Parameter ranges for [`verify_families`].
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Complete graphs `K_2 ..= K_{2M+1}`.
    pub max_complete_m: usize,
    /// `K_{p,q}` for `1 <= p <= q <= max_bipartite`.
    pub max_bipartite: usize,
    pub max_cycle: usize,
    pub max_path: usize,
    pub max_circulant: usize,
    /// `2K_{2m+1}` for `2 <= m <= max_doubled_m`.
    pub max_doubled_m: usize,
    /// Run the exact solver on graphs with at most this many edges.
    pub exact_up_to_edges: usize,
    pub budget: SolveBudget,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_complete_m: 8,
            max_bipartite: 8,
            max_cycle: 16,
            max_path: 16,
            max_circulant: 10,
            max_doubled_m: 3,
            exact_up_to_edges: 12,
            budget: SolveBudget::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Pass,
    Fail,
    /// The exact solver ran out of budget.
    Unresolved,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationRow {
    pub case: Case,
    pub mode: OrderingMode,
    pub predicted: usize,
    pub constructed: usize,
    pub exact: Option<usize>,
    pub status: RowStatus,
    pub citation: &'static str,
    pub runtime_ms: u64,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub rows: Vec<VerificationRow>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.status == RowStatus::Pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<22} {:<7} {:>9} {:>11} {:>6} {:>10} {:>8}  status",
            "case", "mode", "predicted", "constructed", "exact", "nodes", "ms"
        );
        for r in &self.rows {
            let exact = r.exact.map_or("-".to_string(), |v| v.to_string());
            let status = match r.status {
                RowStatus::Pass => "pass",
                RowStatus::Fail => "FAIL",
                RowStatus::Unresolved => "unresolved",
            };
            let _ = writeln!(
                out,
                "{:<22} {:<7} {:>9} {:>11} {:>6} {:>10} {:>8}  {}",
                r.case.to_string(),
                r.mode.to_string(),
                r.predicted,
                r.constructed,
                exact,
                r.nodes,
                r.runtime_ms,
                status
            );
        }
        let failed = self
            .rows
            .iter()
            .filter(|r| r.status != RowStatus::Pass)
            .count();
        let _ = writeln!(out, "{} rows, {} not passing", self.rows.len(), failed);
        out
    }
}

fn cases(cfg: &VerifyConfig) -> Vec<(Case, OrderingMode)> {
    use OrderingMode::*;
    let both = [Linear, Cyclic];
    let mut out = Vec::new();
    let mut push_family = |spec: FamilySpec, modes: &[OrderingMode]| {
        for &mode in modes {
            out.push((Case::Family(spec), mode));
        }
    };
    for n in 2..=2 * cfg.max_complete_m + 1 {
        push_family(FamilySpec::Complete { n }, &both);
    }
    for p in 1..=cfg.max_bipartite {
        for q in p..=cfg.max_bipartite {
            push_family(FamilySpec::CompleteBipartite { p, q }, &[Linear]);
        }
    }
    for n in 3..=cfg.max_cycle {
        push_family(FamilySpec::Cycle { n }, &both);
    }
    for n in 2..=cfg.max_path {
        push_family(FamilySpec::Path { n }, &both);
    }
    for n in 3..=cfg.max_circulant {
        push_family(FamilySpec::Circulant3 { n }, &both);
    }
    for m in 2..=cfg.max_doubled_m {
        out.push((Case::DoubledComplete { n: 2 * m + 1 }, Cyclic));
    }
    out
}

fn run_row(case: Case, mode: OrderingMode, cfg: &VerifyConfig) -> VerificationRow {
    let start = Instant::now();
    let mut row = VerificationRow {
        case,
        mode,
        predicted: 0,
        constructed: 0,
        exact: None,
        status: RowStatus::Fail,
        citation: "",
        runtime_ms: 0,
        nodes: 0,
        error: None,
    };
    let result = (|| -> crate::Result<()> {
        let pred = predicted(case, mode)?;
        row.predicted = pred.value;
        row.citation = pred.citation;
        let ordering = case.construct(mode)?;
        row.constructed = matching_number(&ordering).value;
        let mut ok = row.constructed == row.predicted;

        let g = ordering.graph();
        if g.edge_count() <= cfg.exact_up_to_edges {
            let res = Solver::new(cfg.budget).solve(g, mode)?;
            row.nodes = res.nodes_explored;
            match res.status {
                SolveStatus::ValueFound => {
                    let value = res.value.expect("value with witness");
                    let witness_ok = res
                        .witness
                        .as_ref()
                        .is_some_and(|w| matching_number(w).value >= value);
                    row.exact = Some(value);
                    ok &= witness_ok && value == row.predicted;
                }
                _ => {
                    row.status = RowStatus::Unresolved;
                    return Ok(());
                }
            }
        }
        row.status = if ok { RowStatus::Pass } else { RowStatus::Fail };
        Ok(())
    })();
    if let Err(e) = result {
        row.status = RowStatus::Fail;
        row.error = Some(e.to_string());
    }
    row.runtime_ms = start.elapsed().as_millis() as u64;
    row
}

/// Checks every construction in the configured ranges against its
/// tabulated value, and against the exact solver on small graphs. Rows run
/// in parallel; the report keeps the enumeration order.
pub fn verify_families(cfg: &VerifyConfig) -> VerificationReport {
    let rows = cases(cfg)
        .into_par_iter()
        .map(|(case, mode)| run_row(case, mode, cfg))
        .collect();
    VerificationReport { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges_pass() {
        let cfg = VerifyConfig {
            max_complete_m: 3,
            max_bipartite: 4,
            max_cycle: 8,
            max_path: 8,
            max_circulant: 5,
            max_doubled_m: 2,
            exact_up_to_edges: 10,
            budget: SolveBudget::default(),
        };
        let report = verify_families(&cfg);
        assert!(report.passed(), "{}", report.to_text());
        assert!(report.rows.iter().any(|r| r.exact.is_some()));
        let text = report.to_text();
        assert!(text.contains("complete(7)"));
    }

    #[test]
    fn budget_exhaustion_marks_unresolved() {
        let cfg = VerifyConfig {
            max_complete_m: 2,
            max_bipartite: 0,
            max_cycle: 2,
            max_path: 1,
            max_circulant: 2,
            max_doubled_m: 1,
            exact_up_to_edges: 10,
            budget: SolveBudget {
                max_nodes: 3,
                max_seconds: 1.0,
            },
        };
        let report = verify_families(&cfg);
        assert!(!report.passed());
        assert!(report
            .rows
            .iter()
            .any(|r| r.status == RowStatus::Unresolved));
    }
}
