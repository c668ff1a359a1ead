use std::sync::Arc;

use crate::error::Result;
use crate::graph::FamilySpec;
use crate::ordering::{EdgeOrdering, OrderingMode};

/// 1-based labels of the edges of `C_{2q}`, indexed by edge id.
///
/// Rows of the `q x q` biadjacency matrix `I + P` are the odd vertices and
/// columns the even ones, so edge `e_{2i}` is diagonal cell `(i+1, i+1)` and
/// `e_{2i+1}` is the cell right of it (the wrap cell `(q, 1)` for `i = q-1`).
/// In every scheme two edges sharing a vertex have labels differing by
/// `±(q-1)` or `q` modulo `2q`.
#[allow(clippy::needless_range_loop)] // indices are the matrix rows
fn even_cycle_labels(q: usize) -> Vec<usize> {
    let mut diag = vec![0; q + 1];
    let mut right = vec![0; q + 1];
    if q.is_multiple_of(4) {
        diag[1] = 1;
        for i in 2..=q {
            diag[i] = 2 * q + 3 - 2 * i;
        }
        for i in 1..q {
            right[i] = if i <= q / 2 {
                q + 2 - 2 * i
            } else {
                3 * q + 2 - 2 * i
            };
        }
        right[q] = q + 2;
    } else if q.is_multiple_of(2) {
        for i in 1..=q / 2 {
            diag[i] = 2 * i - 1;
            right[i] = q + 2 * i;
        }
        for j in 1..=q / 2 {
            diag[q / 2 + j] = q + 2 - 2 * j;
            right[q / 2 + j] = 2 * q + 1 - 2 * j;
        }
    } else {
        // Even edges take 0, 2, 4, ..., q-1 then q-2, ..., 3, 1; each odd edge
        // sits q+1, q or q-1 after its predecessor (0-based labels mod 2q).
        let evens = (0..q).step_by(2).chain((1..q).step_by(2).rev());
        for (k, e) in evens.enumerate() {
            let after = if e == q - 1 {
                q
            } else if e % 2 == 0 {
                q + 1
            } else {
                q - 1
            };
            diag[k + 1] = e + 1;
            right[k + 1] = e + after + 1;
        }
    }
    (1..=q).flat_map(|i| [diag[i], right[i]]).collect()
}

/// Cyclic ordering of `C_n` with cyclic matching number `⌊(n-1)/2⌋`.
///
/// Odd `n`: every other edge, twice around the cycle. Even `n = 2q`: a
/// labeled biadjacency scheme chosen by `q mod 4`, or for odd `q` a zigzag
/// with the same difference property.
pub fn cms_cycle(n: usize) -> Result<EdgeOrdering> {
    let spec = FamilySpec::Cycle { n };
    let g = Arc::new(spec.build()?);
    if n % 2 == 1 {
        let sequence = (0..n).map(|t| (2 * t) % n).collect();
        EdgeOrdering::new(g, sequence, OrderingMode::Cyclic)
    } else {
        EdgeOrdering::from_labels(g, &even_cycle_labels(n / 2), OrderingMode::Cyclic)
    }
}

fn path_labels(n: usize) -> Vec<usize> {
    let q = n / 2;
    let mut labels = vec![0; n - 1];
    if n.is_multiple_of(2) {
        for i in 1..q {
            labels[2 * i - 2] = q - i;
            labels[2 * i - 1] = 2 * q - 1 - i;
        }
        labels[2 * q - 2] = 2 * q - 1;
    } else {
        for i in 1..=q {
            labels[2 * i - 2] = q + 1 - i;
            labels[2 * i - 1] = 2 * q + 1 - i;
        }
    }
    labels
}

/// Linear ordering of `P_n`: matching number `(n-2)/2` for even `n` and
/// `(n-1)/2` for odd `n`.
pub fn ms_path(n: usize) -> Result<EdgeOrdering> {
    let g = Arc::new(FamilySpec::Path { n }.build()?);
    EdgeOrdering::from_labels(g, &path_labels(n), OrderingMode::Linear)
}

/// The same sequence as [`ms_path`] read cyclically: `(n-2)/2` for even `n`,
/// `(n-3)/2` for odd `n >= 5`.
pub fn cms_path(n: usize) -> Result<EdgeOrdering> {
    Ok(ms_path(n)?.with_mode(OrderingMode::Cyclic))
}
