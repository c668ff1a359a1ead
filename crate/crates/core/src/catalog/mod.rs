//! Closed-form values for the graph families with known (cyclic) matching
//! sequencibility, a harness that checks constructions and the exact solver
//! against them, and drivers for experiments on open questions.

mod explore;
mod verify;

use std::fmt;

use serde::Serialize;

pub use explore::{
    explore_q1, explore_q2, explore_q3, pendant_lemma_check, PendantReport, Q1Row, Q2Report,
    Q2Witness, Q3Report,
};
pub use verify::{verify_families, RowStatus, VerificationReport, VerificationRow, VerifyConfig};

use crate::constructions::{self, cms_doubled_complete_odd};
use crate::error::{Error, Result};
use crate::graph::{FamilySpec, Graph};
use crate::ordering::{EdgeOrdering, OrderingMode};

/// A graph with a tabulated value: a family member, or the doubled
/// complete graph `2K_n` of odd order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    Family(FamilySpec),
    DoubledComplete { n: usize },
}

impl Case {
    pub fn graph(&self) -> Result<Graph> {
        match *self {
            Case::Family(spec) => spec.build(),
            Case::DoubledComplete { n } => FamilySpec::Complete { n }.build()?.multiply(2),
        }
    }

    pub fn construct(&self, mode: OrderingMode) -> Result<EdgeOrdering> {
        match *self {
            Case::Family(spec) => constructions::construct(spec, mode),
            Case::DoubledComplete { n } => {
                if n % 2 == 0 || n < 5 {
                    return Err(Error::InvalidFamilyParams(format!(
                        "2K_{n}: need odd n >= 5"
                    )));
                }
                Ok(cms_doubled_complete_odd(n / 2)?.with_mode(mode))
            }
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::Family(spec) => spec.fmt(f),
            Case::DoubledComplete { n } => write!(f, "doubled_complete({n})"),
        }
    }
}

impl Serialize for Case {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl From<FamilySpec> for Case {
    fn from(spec: FamilySpec) -> Self {
        Case::Family(spec)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictedValue {
    pub case: Case,
    pub mode: OrderingMode,
    pub value: usize,
    pub citation: &'static str,
}

/// Tabulated (cyclic) matching sequencibility.
pub fn predicted(case: Case, mode: OrderingMode) -> Result<PredictedValue> {
    use OrderingMode::*;
    let unknown = || Error::NoKnownFormula(format!("{case} ({mode})"));
    let (value, citation) = match case {
        Case::Family(spec) => {
            spec.validate()?;
            match spec {
                FamilySpec::Complete { n: 1 } => return Err(unknown()),
                FamilySpec::Complete { n: 2 } => (1, "K_2 is a single edge"),
                FamilySpec::Complete { n: 3 } => (1, "K_3: every two edges meet"),
                FamilySpec::Complete { n } => match (mode, n % 2) {
                    (Linear, _) => (
                        (n - 1) / 2,
                        "ms(K_n) = floor((n-1)/2) via Walecki decompositions",
                    ),
                    (Cyclic, 0) => ((n - 1) / 2, "cms(K_n) = floor((n-1)/2) for even n >= 4"),
                    (Cyclic, _) => ((n - 3) / 2, "cms(K_n) = floor((n-3)/2) for odd n >= 5"),
                },
                FamilySpec::CompleteBipartite { p, q } => {
                    if mode == Cyclic {
                        return Err(unknown());
                    }
                    let (a, b) = (p.min(q), p.max(q));
                    if a == b {
                        ((b - 1).max(1), "ms(K_{n,n}) = n-1")
                    } else {
                        (a, "ms(K_{m,n}) = m for m < n")
                    }
                }
                FamilySpec::Cycle { n } => ((n - 1) / 2, "cms(C_n) = ms(C_n) = floor((n-1)/2)"),
                FamilySpec::Path { n: 2 } => (1, "P_2 is a single edge"),
                FamilySpec::Path { n } if n % 2 == 0 => {
                    ((n - 2) / 2, "cms(P_n) = ms(P_n) = (n-2)/2 for even n")
                }
                FamilySpec::Path { n } => match mode {
                    Linear => ((n - 1) / 2, "ms(P_n) = (n-1)/2 for odd n"),
                    // P_3 has two adjacent edges; any ordering scores 1
                    Cyclic if n == 3 => (1, "P_3: both edges meet"),
                    Cyclic => ((n - 3) / 2, "cms(P_n) = (n-3)/2 for odd n"),
                },
                FamilySpec::Circulant3 { n } => {
                    (n - 1, "cms = ms = n-1 for the cubic circulant I+P+P^2")
                }
            }
        }
        Case::DoubledComplete { n } => {
            if n % 2 == 0 || n < 5 || mode == Linear {
                return Err(unknown());
            }
            (
                (n - 1) / 2,
                "cms(2K_{2m+1}) = m via doubled Walecki ordering",
            )
        }
    };
    Ok(PredictedValue {
        case,
        mode,
        value,
        citation,
    })
}
