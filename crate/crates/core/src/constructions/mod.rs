//! Explicit edge orderings attaining the known (cyclic) matching
//! sequencibility of complete graphs, complete bipartite graphs, cycles,
//! paths, the cubic circulant bipartite graphs and doubled odd complete
//! graphs.

mod bipartite;
mod complete;
mod cycles;

use std::sync::Arc;

pub use bipartite::{ms_circulant3, ms_complete_bipartite};
pub use complete::{
    cms_complete_even, cms_complete_odd, cms_doubled_complete_odd, ms_complete_odd_walecki,
    RotationScheme, WALECKI_START_OFFSET,
};
pub use cycles::{cms_cycle, cms_path, ms_path};

use crate::error::{Error, Result};
use crate::graph::{FamilySpec, Graph, VertexId};
use crate::ordering::{EdgeOrdering, OrderingMode};

/// The construction for a family member, read in the requested mode.
pub fn construct(spec: FamilySpec, mode: OrderingMode) -> Result<EdgeOrdering> {
    spec.validate()?;
    match spec {
        FamilySpec::Complete { n } => match n {
            1 => Err(Error::InvalidFamilyParams(
                "complete(1) has no edges".into(),
            )),
            2 | 3 => {
                let g = Arc::new(spec.build()?);
                let m = g.edge_count();
                EdgeOrdering::new(g, (0..m).collect(), mode)
            }
            n if n % 2 == 0 => Ok(cms_complete_even(n / 2)?.with_mode(mode)),
            n => match mode {
                OrderingMode::Cyclic => cms_complete_odd(n / 2),
                OrderingMode::Linear => ms_complete_odd_walecki(n / 2),
            },
        },
        FamilySpec::CompleteBipartite { p, q } => Ok(ms_complete_bipartite(p, q)?.with_mode(mode)),
        FamilySpec::Cycle { n } => Ok(cms_cycle(n)?.with_mode(mode)),
        FamilySpec::Path { n } => match mode {
            OrderingMode::Linear => ms_path(n),
            OrderingMode::Cyclic => cms_path(n),
        },
        FamilySpec::Circulant3 { n } => Ok(ms_circulant3(n)?.with_mode(mode)),
    }
}

/// Resolves an endpoint sequence against `g`. The k-th occurrence of a
/// vertex pair takes the k-th parallel copy of that edge.
pub(crate) fn ordering_from_pairs(
    g: Graph,
    pairs: &[(VertexId, VertexId)],
    mode: OrderingMode,
) -> Result<EdgeOrdering> {
    let mut seen = std::collections::HashMap::new();
    let mut sequence = Vec::with_capacity(pairs.len());
    for &(a, b) in pairs {
        let key = (a.min(b), a.max(b));
        let copy = seen.entry(key).or_insert(0usize);
        let id = g
            .find_edge(a, b, *copy)
            .ok_or_else(|| Error::NotPermutation(format!("no edge {{{a},{b}}} copy {copy}")))?;
        *copy += 1;
        sequence.push(id);
    }
    EdgeOrdering::new(Arc::new(g), sequence, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::matching_number;

    #[test]
    fn dispatcher_covers_small_complete_graphs() {
        for n in 2..=9 {
            for mode in [OrderingMode::Linear, OrderingMode::Cyclic] {
                let o = construct(FamilySpec::Complete { n }, mode).unwrap();
                assert_eq!(o.mode(), mode);
                assert_eq!(o.len(), n * (n - 1) / 2);
            }
        }
        assert!(construct(FamilySpec::Complete { n: 1 }, OrderingMode::Linear).is_err());
    }

    #[test]
    fn complete_three_is_one() {
        let o = construct(FamilySpec::Complete { n: 3 }, OrderingMode::Cyclic).unwrap();
        assert_eq!(matching_number(&o).value, 1);
    }
}
