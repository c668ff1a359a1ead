use crate::error::{Error, Result};
use crate::graph::{FamilySpec, VertexId};
use crate::ordering::{EdgeOrdering, OrderingMode};

use super::ordering_from_pairs;

/// Offset of the first edge taken from each Walecki Hamilton cycle when its
/// edges are listed by alternate-edge double traversal.
pub const WALECKI_START_OFFSET: usize = 0;

/// A base edge sequence and a vertex permutation; block `k` is the base
/// sequence with the permutation applied `k` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationScheme {
    pub base: Vec<(VertexId, VertexId)>,
    pub rotation: Vec<VertexId>,
    pub block_count: usize,
}

impl RotationScheme {
    pub fn block_size(&self) -> usize {
        self.base.len()
    }

    /// `rotation` applied `k` times to `v`.
    pub fn rotate_vertex(&self, mut v: VertexId, k: usize) -> VertexId {
        for _ in 0..k {
            v = self.rotation[v];
        }
        v
    }

    pub fn block(&self, k: usize) -> Vec<(VertexId, VertexId)> {
        self.base
            .iter()
            .map(|&(a, b)| (self.rotate_vertex(a, k), self.rotate_vertex(b, k)))
            .collect()
    }

    pub fn pairs(&self) -> Vec<(VertexId, VertexId)> {
        (0..self.block_count).flat_map(|k| self.block(k)).collect()
    }

    /// Scheme for `K_{2m}`: base perfect matching `{0,1},{2,2m-1},...,{m,m+1}`,
    /// vertex 0 fixed and `1..2m-1` turned one step around the circle.
    pub fn complete_even(m: usize) -> Self {
        let n = 2 * m;
        let base = std::iter::once((0, 1))
            .chain((2..=m).map(|k| (k, n + 1 - k)))
            .collect();
        let rotation = (0..n)
            .map(|v| if v == 0 { 0 } else { 1 + v % (n - 1) })
            .collect();
        RotationScheme {
            base,
            rotation,
            block_count: n - 1,
        }
    }

    /// Scheme for `K_{2m+1}`: base near-perfect matching
    /// `{1,2m},{2,2m-1},...,{m,m+1}` missing vertex 0, rotated `v -> v+1`.
    pub fn complete_odd(m: usize) -> Self {
        let n = 2 * m + 1;
        let base = (1..=m).map(|k| (k, n - k)).collect();
        let rotation = (0..n).map(|v| (v + 1) % n).collect();
        RotationScheme {
            base,
            rotation,
            block_count: n,
        }
    }
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidFamilyParams(format!("m = {m}, need m >= 2")));
    }
    Ok(())
}

/// Cyclic ordering of `K_{2m}` with cyclic matching number `m - 1`; the
/// aligned blocks of `m` labels form a 1-factorization.
pub fn cms_complete_even(m: usize) -> Result<EdgeOrdering> {
    check_m(m)?;
    let g = FamilySpec::Complete { n: 2 * m }.build()?;
    ordering_from_pairs(
        g,
        &RotationScheme::complete_even(m).pairs(),
        OrderingMode::Cyclic,
    )
}

/// Cyclic ordering of `K_{2m+1}` with cyclic matching number `m - 1`; the
/// aligned blocks are near-perfect matchings, each missing a different vertex.
pub fn cms_complete_odd(m: usize) -> Result<EdgeOrdering> {
    check_m(m)?;
    let g = FamilySpec::Complete { n: 2 * m + 1 }.build()?;
    ordering_from_pairs(
        g,
        &RotationScheme::complete_odd(m).pairs(),
        OrderingMode::Cyclic,
    )
}

/// Zigzag Hamilton cycle through the center `2m` and rim `0..2m`, as an
/// edge list: `(c, 0, 1, 2m-1, 2, 2m-2, ..., m+1, m, c)`.
fn walecki_base_cycle(m: usize) -> Vec<(VertexId, VertexId)> {
    let center = 2 * m;
    let mut walk = vec![center, 0];
    for k in 1..=m {
        walk.push(k);
        if k < m {
            walk.push(2 * m - k);
        }
    }
    walk.push(center);
    walk.windows(2).map(|w| (w[0], w[1])).collect()
}

/// Walecki cycles `C, θC, θ²C, ...` (θ turns the rim, fixes the center),
/// each listed by taking every other edge twice around.
fn walecki_pairs(m: usize, cycles: usize) -> Vec<(VertexId, VertexId)> {
    let center = 2 * m;
    let cycle = walecki_base_cycle(m);
    let len = cycle.len();
    let alternate: Vec<_> = (0..len)
        .map(|t| cycle[(WALECKI_START_OFFSET + 2 * t) % len])
        .collect();
    let theta = |v: VertexId, k: usize| if v == center { v } else { (v + k) % (2 * m) };
    (0..cycles)
        .flat_map(|k| {
            alternate
                .iter()
                .map(move |&(a, b)| (theta(a, k), theta(b, k)))
        })
        .collect()
}

/// Linear ordering of `K_{2m+1}` with matching number `m`, from the Walecki
/// Hamilton decomposition.
pub fn ms_complete_odd_walecki(m: usize) -> Result<EdgeOrdering> {
    check_m(m)?;
    let g = FamilySpec::Complete { n: 2 * m + 1 }.build()?;
    ordering_from_pairs(g, &walecki_pairs(m, m), OrderingMode::Linear)
}

/// Cyclic ordering of `2K_{2m+1}` with cyclic matching number `m`. The
/// Walecki rotation continues for `2m` steps; since `θ^m C` is `C` traversed
/// backwards, the second half revisits every edge once more, on its second
/// copy.
pub fn cms_doubled_complete_odd(m: usize) -> Result<EdgeOrdering> {
    check_m(m)?;
    let g = FamilySpec::Complete { n: 2 * m + 1 }.build()?.multiply(2)?;
    ordering_from_pairs(g, &walecki_pairs(m, 2 * m), OrderingMode::Cyclic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::{is_matching, matching_number};

    fn pairs_of(o: &EdgeOrdering) -> Vec<(usize, usize)> {
        o.sequence()
            .iter()
            .map(|&id| o.graph().edges()[id].endpoints())
            .collect()
    }

    #[test]
    fn even_m2_sequence() {
        let o = cms_complete_even(2).unwrap();
        assert_eq!(
            pairs_of(&o),
            vec![(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)]
        );
        assert_eq!(matching_number(&o).value, 1);
    }

    #[test]
    fn even_m3_prefix() {
        let o = cms_complete_even(3).unwrap();
        assert_eq!(o.len(), 15);
        assert_eq!(
            &pairs_of(&o)[..6],
            &[(0, 1), (2, 5), (3, 4), (0, 2), (1, 3), (4, 5)]
        );
        assert_eq!(matching_number(&o).value, 2);
    }

    #[test]
    fn odd_m2_sequence() {
        let o = cms_complete_odd(2).unwrap();
        let expected = [
            (1, 4),
            (2, 3),
            (0, 2),
            (3, 4),
            (1, 3),
            (0, 4),
            (2, 4),
            (0, 1),
            (0, 3),
            (1, 2),
        ];
        assert_eq!(pairs_of(&o), expected);
        assert_eq!(matching_number(&o).value, 1);
    }

    #[test]
    fn schemes_close_up() {
        for m in 2..9 {
            for s in [
                RotationScheme::complete_even(m),
                RotationScheme::complete_odd(m),
            ] {
                assert_eq!(s.block(s.block_count), s.block(0));
                assert_eq!(s.block_size(), m);
            }
        }
    }

    #[test]
    fn odd_blocks_have_distinct_isolated_vertices() {
        for m in 2..9 {
            let o = cms_complete_odd(m).unwrap();
            let g = o.graph();
            let n = 2 * m + 1;
            let mut isolated: Vec<usize> = o
                .sequence()
                .chunks(m)
                .map(|block| {
                    assert!(is_matching(g, block).unwrap());
                    let covered: Vec<_> = block
                        .iter()
                        .flat_map(|&id| [g.edges()[id].u, g.edges()[id].v])
                        .collect();
                    (0..n).find(|v| !covered.contains(v)).unwrap()
                })
                .collect();
            isolated.sort_unstable();
            assert_eq!(isolated, (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn walecki_base_cycle_is_hamiltonian() {
        for m in 2..7 {
            let c = walecki_base_cycle(m);
            assert_eq!(c.len(), 2 * m + 1);
            let mut deg = vec![0; 2 * m + 1];
            for (a, b) in c {
                deg[a] += 1;
                deg[b] += 1;
            }
            assert!(deg.iter().all(|&d| d == 2));
        }
    }

    #[test]
    fn walecki_values() {
        let k7 = ms_complete_odd_walecki(3).unwrap();
        assert_eq!(matching_number(&k7).value, 3);
        assert!(matching_number(&k7.with_mode(OrderingMode::Cyclic)).value <= 2);
        assert_eq!(
            matching_number(&ms_complete_odd_walecki(2).unwrap()).value,
            2
        );
    }

    #[test]
    fn doubled_copies_are_far_apart() {
        for m in 2..6 {
            let o = cms_doubled_complete_odd(m).unwrap();
            let half = m * (2 * m + 1);
            assert_eq!(o.len(), 2 * half);
            let labels = o.labels();
            for e in 0..half {
                let gap = labels[e].abs_diff(labels[e + half]);
                assert!(gap.min(2 * half - gap) >= m);
            }
            assert_eq!(matching_number(&o).value, m);
        }
    }

    #[test]
    fn rejects_small_m() {
        assert!(cms_complete_even(1).is_err());
        assert!(cms_complete_odd(0).is_err());
        assert!(ms_complete_odd_walecki(1).is_err());
        assert!(cms_doubled_complete_odd(1).is_err());
    }
}
