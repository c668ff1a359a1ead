//! Linear and cyclic edge orderings and their matching number.
//!
//! The matching number of an ordering is the largest `d` such that every `d`
//! consecutive edges (wrapping around in cyclic mode) form a matching. A
//! window of size `w` holds two edges iff their position gap is at most
//! `w - 1`, so `d` equals the smallest gap between two adjacent edges, or `m`
//! when no two edges are adjacent.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Biadjacency, EdgeId, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderingMode {
    Linear,
    Cyclic,
}

impl fmt::Display for OrderingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderingMode::Linear => "linear",
            OrderingMode::Cyclic => "cyclic",
        })
    }
}

impl std::str::FromStr for OrderingMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "linear" => Ok(OrderingMode::Linear),
            "cyclic" => Ok(OrderingMode::Cyclic),
            other => Err(format!(
                "unknown mode {other:?} (expected linear or cyclic)"
            )),
        }
    }
}

/// A permutation of all edges of a graph. Position `i` (0-based) carries
/// label `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrdering {
    graph: Arc<Graph>,
    sequence: Vec<EdgeId>,
    mode: OrderingMode,
}

impl EdgeOrdering {
    pub fn new(graph: Arc<Graph>, sequence: Vec<EdgeId>, mode: OrderingMode) -> Result<Self> {
        let m = graph.edge_count();
        if m == 0 {
            return Err(Error::EmptyGraph);
        }
        if sequence.len() != m {
            return Err(Error::NotPermutation(format!(
                "sequence has {} entries, graph has {m} edges",
                sequence.len()
            )));
        }
        let mut seen = vec![false; m];
        for (pos, &id) in sequence.iter().enumerate() {
            if id >= m {
                return Err(Error::InvalidEdgeId(id));
            }
            if std::mem::replace(&mut seen[id], true) {
                return Err(Error::NotPermutation(format!(
                    "edge id {id} repeated at label {}",
                    pos + 1
                )));
            }
        }
        Ok(EdgeOrdering {
            graph,
            sequence,
            mode,
        })
    }

    /// Builds an ordering from a label assignment: `labels[e]` is the
    /// 1-based label of edge `e`.
    pub fn from_labels(graph: Arc<Graph>, labels: &[usize], mode: OrderingMode) -> Result<Self> {
        let m = graph.edge_count();
        let mut sequence = vec![usize::MAX; m];
        for (id, &label) in labels.iter().enumerate() {
            if label == 0 || label > m {
                return Err(Error::NotPermutation(format!(
                    "label {label} outside 1..={m}"
                )));
            }
            if sequence[label - 1] != usize::MAX {
                return Err(Error::NotPermutation(format!("label {label} used twice")));
            }
            sequence[label - 1] = id;
        }
        Self::new(graph, sequence, mode)
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn sequence(&self) -> &[EdgeId] {
        &self.sequence
    }

    pub fn mode(&self) -> OrderingMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn with_mode(&self, mode: OrderingMode) -> Self {
        EdgeOrdering {
            mode,
            ..self.clone()
        }
    }

    /// `labels()[e]` is the 1-based label of edge `e`.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.len()];
        for (pos, &id) in self.sequence.iter().enumerate() {
            labels[id] = pos + 1;
        }
        labels
    }

    /// Cyclic shift: the edge at position `s` moves to position 0.
    pub fn rotate(&self, s: i64) -> Self {
        let m = self.len() as i64;
        let s = s.rem_euclid(m) as usize;
        let mut sequence = self.sequence.clone();
        sequence.rotate_left(s);
        EdgeOrdering {
            sequence,
            ..self.clone()
        }
    }

    pub fn reflect(&self) -> Self {
        let mut sequence = self.sequence.clone();
        sequence.reverse();
        EdgeOrdering {
            sequence,
            ..self.clone()
        }
    }
}

/// The closest adjacent pair, positions 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ViolatingPair {
    pub first: EdgeId,
    pub second: EdgeId,
    pub first_position: usize,
    pub second_position: usize,
    pub gap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MatchingNumberReport {
    pub value: usize,
    pub violating_pair: Option<ViolatingPair>,
}

/// True iff the given edges are pairwise non-adjacent.
pub fn is_matching(g: &Graph, ids: &[EdgeId]) -> Result<bool> {
    let mut covered = vec![false; g.order()];
    let mut ok = true;
    for &id in ids {
        let e = g.edge(id)?;
        for x in [e.u, e.v] {
            if std::mem::replace(&mut covered[x], true) {
                ok = false;
            }
        }
    }
    Ok(ok)
}

/// Exact matching number of an ordering.
///
/// Among minimizing pairs the report names the one whose window starts
/// earliest, then the smaller edge id.
pub fn matching_number(o: &EdgeOrdering) -> MatchingNumberReport {
    let g = o.graph();
    let m = o.len();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (pos, &id) in o.sequence().iter().enumerate() {
        let e = &g.edges()[id];
        incident[e.u].push(pos);
        incident[e.v].push(pos);
    }

    // (gap, start, end) with end = (start + gap) mod m
    let mut best: Option<(usize, usize, usize)> = None;
    let mut consider = |gap: usize, start: usize, end: usize| {
        let key = (gap, start, o.sequence()[start].min(o.sequence()[end]));
        let better = match best {
            None => true,
            Some((bg, bs, be)) => key < (bg, bs, o.sequence()[bs].min(o.sequence()[be])),
        };
        if better {
            best = Some((gap, start, end));
        }
    };
    for positions in &incident {
        // positions are already ascending
        for w in positions.windows(2) {
            let (a, b) = (w[0], w[1]);
            match o.mode() {
                OrderingMode::Linear => consider(b - a, a, b),
                OrderingMode::Cyclic => {
                    let forward = b - a;
                    if forward <= m - forward {
                        consider(forward, a, b);
                    } else {
                        consider(m - forward, b, a);
                    }
                }
            }
        }
        if o.mode() == OrderingMode::Cyclic && positions.len() > 2 {
            let (first, last) = (positions[0], positions[positions.len() - 1]);
            let wrap = m - (last - first);
            if wrap <= last - first {
                consider(wrap, last, first);
            }
        }
    }

    match best {
        None => MatchingNumberReport {
            value: m,
            violating_pair: None,
        },
        Some((gap, start, end)) => MatchingNumberReport {
            value: gap,
            violating_pair: Some(ViolatingPair {
                first: o.sequence()[start],
                second: o.sequence()[end],
                first_position: start + 1,
                second_position: end + 1,
                gap,
            }),
        },
    }
}

/// Reference computation of the matching number by testing every window
/// of every size. Cubic in `m`; meant for cross-checking.
pub fn matching_number_bruteforce(o: &EdgeOrdering) -> usize {
    let g = o.graph();
    let m = o.len();
    let seq = o.sequence();
    let mut d = 1;
    for w in 1..=m {
        let starts = match o.mode() {
            OrderingMode::Linear => m - w + 1,
            OrderingMode::Cyclic => m,
        };
        let all_ok = (0..starts).all(|s| {
            let window: Vec<EdgeId> = (0..w).map(|i| seq[(s + i) % m]).collect();
            is_matching(g, &window).expect("ordering ids are valid")
        });
        if all_ok {
            d = w;
        }
    }
    d
}

/// Renders a bipartite ordering as its labeled biadjacency matrix, one row
/// per line, cells right-aligned to a common width with `.` for zeros.
pub fn render_matrix(o: &EdgeOrdering, layout: &Biadjacency) -> Result<String> {
    let (rows, cols) = (layout.rows.len(), layout.cols.len());
    let mut cells = vec![vec![0usize; cols]; rows];
    for (pos, &id) in o.sequence().iter().enumerate() {
        let e = &o.graph().edges()[id];
        let (r, c) = layout
            .cell(e)
            .ok_or_else(|| Error::Layout(format!("edge {{{},{}}} has no cell", e.u, e.v)))?;
        if cells[r][c] != 0 {
            return Err(Error::Layout(format!(
                "cell ({},{}) holds two edges",
                r + 1,
                c + 1
            )));
        }
        cells[r][c] = pos + 1;
    }
    let width = o.len().to_string().len();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .map(|&l| {
                let s = if l == 0 {
                    ".".to_string()
                } else {
                    l.to_string()
                };
                format!("{s:>width$}")
            })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn ordering(g: Graph, seq: Vec<EdgeId>, mode: OrderingMode) -> EdgeOrdering {
        EdgeOrdering::new(Arc::new(g), seq, mode).unwrap()
    }

    #[test]
    fn is_matching_cases() {
        let k6 = FamilySpec::Complete { n: 6 }.build().unwrap();
        let id = |a, b| k6.find_edge(a, b, 0).unwrap();
        assert!(is_matching(&k6, &[id(0, 1), id(2, 3), id(4, 5)]).unwrap());
        assert!(!is_matching(&k6, &[id(0, 1), id(1, 2)]).unwrap());
        assert_eq!(is_matching(&k6, &[99]), Err(Error::InvalidEdgeId(99)));
        let doubled = Graph::from_edges(2, [(0, 1), (0, 1)], true).unwrap();
        assert!(!is_matching(&doubled, &[0, 1]).unwrap());
    }

    #[test]
    fn trivial_values() {
        let single = Graph::from_edges(2, [(0, 1)], false).unwrap();
        for mode in [OrderingMode::Linear, OrderingMode::Cyclic] {
            let o = ordering(single.clone(), vec![0], mode);
            assert_eq!(matching_number(&o).value, 1);
            assert_eq!(matching_number_bruteforce(&o), 1);
        }
        let disjoint = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)], false).unwrap();
        let o = ordering(disjoint, vec![2, 0, 1], OrderingMode::Cyclic);
        let r = matching_number(&o);
        assert_eq!(
            r,
            MatchingNumberReport {
                value: 3,
                violating_pair: None
            }
        );
    }

    #[test]
    fn rejects_non_permutations() {
        let g = Arc::new(FamilySpec::Path { n: 4 }.build().unwrap());
        assert!(matches!(
            EdgeOrdering::new(g.clone(), vec![0, 0, 1], OrderingMode::Linear),
            Err(Error::NotPermutation(_))
        ));
        assert!(EdgeOrdering::new(g.clone(), vec![0, 1], OrderingMode::Linear).is_err());
        assert_eq!(
            EdgeOrdering::new(g, vec![0, 1, 5], OrderingMode::Linear),
            Err(Error::InvalidEdgeId(5))
        );
        let empty = Arc::new(Graph::from_edges(3, [], false).unwrap());
        assert_eq!(
            EdgeOrdering::new(empty, vec![], OrderingMode::Linear),
            Err(Error::EmptyGraph)
        );
    }

    #[test]
    fn wrap_gap_counts_in_cyclic_mode() {
        // P_4 in order e0, e2, e1: e1 touches both neighbours.
        let g = FamilySpec::Path { n: 4 }.build().unwrap();
        let lin = ordering(g.clone(), vec![0, 2, 1], OrderingMode::Linear);
        assert_eq!(matching_number(&lin).value, 1);
        // C_5 alternate edges: e0 e2 e4 e1 e3, e4 and e0 are at wrap gap 3 -> 2
        let c5 = FamilySpec::Cycle { n: 5 }.build().unwrap();
        let o = ordering(c5, vec![0, 2, 4, 1, 3], OrderingMode::Cyclic);
        let r = matching_number(&o);
        assert_eq!(r.value, 2);
        assert_eq!(matching_number_bruteforce(&o), 2);
    }

    #[test]
    fn tie_break_prefers_earliest_window() {
        let g = FamilySpec::Path { n: 5 }.build().unwrap();
        // e0 e1 adjacent at start 0 and e2 e3 adjacent at start 2; both gap 1
        let o = ordering(g, vec![0, 1, 2, 3], OrderingMode::Linear);
        let p = matching_number(&o).violating_pair.unwrap();
        assert_eq!((p.first_position, p.second_position, p.gap), (1, 2, 1));
    }

    #[test]
    fn rotate_and_reflect() {
        let g = FamilySpec::Complete { n: 5 }.build().unwrap();
        let o = ordering(g, (0..10).collect(), OrderingMode::Cyclic);
        assert_eq!(o.rotate(10).sequence(), o.sequence());
        assert_eq!(o.rotate(-1).sequence()[0], 9);
        assert_eq!(o.rotate(3).sequence()[0], 3);
        assert_eq!(o.reflect().sequence()[0], 9);
        let d = matching_number(&o).value;
        for s in 0..10 {
            assert_eq!(matching_number(&o.rotate(s)).value, d);
        }
        assert_eq!(matching_number(&o.reflect()).value, d);
    }

    #[test]
    fn labels_roundtrip() {
        let g = Arc::new(FamilySpec::Cycle { n: 5 }.build().unwrap());
        let o =
            EdgeOrdering::from_labels(g.clone(), &[1, 4, 2, 5, 3], OrderingMode::Cyclic).unwrap();
        assert_eq!(o.sequence(), &[0, 2, 4, 1, 3]);
        assert_eq!(o.labels(), vec![1, 4, 2, 5, 3]);
        assert!(EdgeOrdering::from_labels(g, &[1, 1, 2, 5, 3], OrderingMode::Cyclic).is_err());
    }

    #[test]
    fn renders_matrix() {
        let spec = FamilySpec::CompleteBipartite { p: 2, q: 3 };
        let g = spec.build().unwrap();
        let o = ordering(g, vec![0, 4, 2, 3, 1, 5], OrderingMode::Linear);
        let s = render_matrix(&o, &spec.biadjacency().unwrap()).unwrap();
        assert_eq!(s, "1 5 3\n4 2 6\n");
        let spec = FamilySpec::Path { n: 4 };
        let o = ordering(spec.build().unwrap(), vec![1, 0, 2], OrderingMode::Linear);
        assert_eq!(
            render_matrix(&o, &spec.biadjacency().unwrap()).unwrap(),
            "2 1\n. 3\n"
        );
    }
}
