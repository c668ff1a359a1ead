use std::sync::Arc;

use crate::error::Result;
use crate::graph::FamilySpec;
use crate::ordering::{EdgeOrdering, OrderingMode};

/// Linear ordering of `K_{p,q}` with matching number `q - 1` when `p = q`
/// and `min(p, q)` otherwise.
///
/// Labels run along wrapped diagonals of the biadjacency matrix. For a
/// square matrix the diagonals come in order `0, 1, ..., q-1`; for `p < q`
/// in order `0, q-1, q-2, ..., 1`, so two blocks meeting inside a window of
/// `p` labels would need rows differing by `-1 mod q`.
pub fn ms_complete_bipartite(p: usize, q: usize) -> Result<EdgeOrdering> {
    let g = Arc::new(FamilySpec::CompleteBipartite { p, q }.build()?);
    let (rows, cols) = (p.min(q), p.max(q));
    let diagonals: Vec<usize> = if rows == cols {
        (0..cols).collect()
    } else {
        std::iter::once(0).chain((1..cols).rev()).collect()
    };
    let mut labels = vec![0; p * q];
    for (block, &d) in diagonals.iter().enumerate() {
        for i in 0..rows {
            let j = (i + d) % cols;
            // cell (i, j) of the matrix with the smaller side as rows
            let id = if p <= q { i * q + j } else { j * q + i };
            labels[id] = block * rows + i + 1;
        }
    }
    EdgeOrdering::from_labels(g, &labels, OrderingMode::Linear)
}

/// Ordering of the cubic circulant bipartite graph `I + P + P^2` of order
/// `2n` with (cyclic) matching number `n - 1`.
///
/// Diagonal cells take labels `1..n-1`, the off-diagonal corners `n` and
/// `n+1`; the cells beside the diagonal alternate between the second and
/// third band of `n` labels; the last diagonal cell closes whichever band
/// has a free slot.
pub fn ms_circulant3(n: usize) -> Result<EdgeOrdering> {
    let g = Arc::new(FamilySpec::Circulant3 { n }.build()?);
    let mut labels = vec![0; 3 * n];
    // 1-based cell (row, col)
    let mut set = |row: usize, col: usize, label: usize| {
        let id = g
            .find_edge(row - 1, n + col - 1, 0)
            .expect("circulant cell");
        labels[id] = label;
    };
    for i in 1..n {
        set(i, i, i);
        if i % 2 == 0 {
            set(i, i + 1, n + i);
            set(i + 1, i, n + 1 + i);
        } else {
            set(i, i + 1, 2 * n + 1 + i);
            set(i + 1, i, 2 * n + i);
        }
    }
    set(1, n, n);
    set(n, 1, n + 1);
    set(n, n, if n.is_multiple_of(2) { 2 * n } else { 3 * n });
    EdgeOrdering::from_labels(g, &labels, OrderingMode::Cyclic)
}
