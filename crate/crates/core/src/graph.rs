//! Undirected (multi)graphs with dense edge ids, the graph families used
//! throughout the crate, and small structural helpers.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// An undirected edge with endpoints stored as `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn contains(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

/// Two distinct edges are adjacent iff they share an endpoint. Parallel
/// copies share both endpoints and are therefore adjacent.
pub fn adjacent(e: &Edge, f: &Edge) -> bool {
    e.contains(f.u) || e.contains(f.v)
}

/// A graph of order `n` whose edge ids are exactly `0..m` in insertion order.
/// Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    edges: Vec<Edge>,
    allow_parallel: bool,
}

impl Graph {
    /// Builds a graph from endpoint pairs; edge ids follow iteration order.
    pub fn from_edges<I>(order: usize, pairs: I, allow_parallel: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if order == 0 {
            return Err(Error::InvalidFamilyParams(
                "graph order must be at least 1".into(),
            ));
        }
        let mut seen = HashSet::new();
        let mut edges = Vec::new();
        for (a, b) in pairs {
            for x in [a, b] {
                if x >= order {
                    return Err(Error::InvalidVertex { vertex: x, order });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if !allow_parallel && !seen.insert((u, v)) {
                return Err(Error::ParallelEdge(u, v));
            }
            edges.push(Edge {
                id: edges.len(),
                u,
                v,
            });
        }
        Ok(Graph {
            order,
            edges,
            allow_parallel,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge> {
        self.edges.get(id).ok_or(Error::InvalidEdgeId(id))
    }

    pub fn allow_parallel(&self) -> bool {
        self.allow_parallel
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    /// True when no two edges share a vertex.
    pub fn is_matching(&self) -> bool {
        self.degrees().iter().all(|&d| d <= 1)
    }

    /// The `copy`-th edge (in id order) joining `a` and `b`.
    pub fn find_edge(&self, a: VertexId, b: VertexId, copy: usize) -> Option<EdgeId> {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.edges
            .iter()
            .filter(|e| e.u == u && e.v == v)
            .nth(copy)
            .map(|e| e.id)
    }

    /// Index of `id` among the parallel copies of its endpoint pair.
    pub fn copy_index(&self, id: EdgeId) -> Result<usize> {
        let e = self.edge(id)?;
        Ok(self.edges[..id]
            .iter()
            .filter(|f| f.u == e.u && f.v == e.v)
            .count())
    }

    pub fn is_connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.order).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let mut comps = self.order;
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
        comps == 1
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.order && self.is_connected()
    }

    /// `k` copies of every edge; copy `j` of edge `e` gets id `j * m + e`.
    pub fn multiply(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::InvalidFamilyParams(
                "multiplicity must be at least 1".into(),
            ));
        }
        let pairs = (0..k).flat_map(|_| self.edges.iter().map(|e| (e.u, e.v)));
        Graph::from_edges(self.order, pairs, true)
    }

    /// Adds `t` new leaves `n..n+t` joined to `v`.
    pub fn attach_pendants(&self, v: VertexId, t: usize) -> Result<Graph> {
        if v >= self.order {
            return Err(Error::InvalidVertex {
                vertex: v,
                order: self.order,
            });
        }
        let n = self.order;
        let pairs = self
            .edges
            .iter()
            .map(|e| (e.u, e.v))
            .chain((0..t).map(|j| (v, n + j)));
        Graph::from_edges(n + t, pairs, self.allow_parallel)
    }
}

/// The graph families with closed-form (cyclic) matching sequencibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Complete {
        n: usize,
    },
    CompleteBipartite {
        p: usize,
        q: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    /// Bipartite graph on `n + n` vertices with biadjacency `I + P + P^2`
    /// (equivalently `P^-1 + I + P`), `P` the full-cycle permutation.
    Circulant3 {
        n: usize,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            FamilySpec::Complete { n } => n >= 1,
            FamilySpec::CompleteBipartite { p, q } => p >= 1 && q >= 1,
            FamilySpec::Cycle { n } => n >= 3,
            FamilySpec::Path { n } => n >= 2,
            FamilySpec::Circulant3 { n } => n >= 3,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidFamilyParams(self.to_string()))
        }
    }

    /// Builds the family member with its canonical vertex and edge indexing.
    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            FamilySpec::Complete { n } => {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                Graph::from_edges(n, pairs, false)
            }
            FamilySpec::CompleteBipartite { p, q } => {
                let pairs = (0..p).flat_map(|i| (0..q).map(move |j| (i, p + j)));
                Graph::from_edges(p + q, pairs, false)
            }
            FamilySpec::Cycle { n } => {
                Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)), false)
            }
            FamilySpec::Path { n } => Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1)), false),
            FamilySpec::Circulant3 { n } => {
                let pairs = (0..n).flat_map(|i| {
                    let mut cols = [(i + n - 1) % n, i, (i + 1) % n];
                    cols.sort_unstable();
                    cols.into_iter().map(move |j| (i, n + j))
                });
                Graph::from_edges(2 * n, pairs, false)
            }
        }
    }

    /// Row/column vertex assignment used to draw orderings as labeled
    /// biadjacency matrices, when the family is bipartite.
    pub fn biadjacency(&self) -> Option<Biadjacency> {
        match *self {
            FamilySpec::CompleteBipartite { p, q } => Some(Biadjacency {
                rows: (0..p).collect(),
                cols: (p..p + q).collect(),
            }),
            FamilySpec::Circulant3 { n } => Some(Biadjacency {
                rows: (0..n).collect(),
                cols: (n..2 * n).collect(),
            }),
            // Row i holds vertex 2i+1, column j holds vertex 2j, so edge
            // {2i, 2i+1} sits on the diagonal and {2i+1, 2i+2} just right of it.
            FamilySpec::Cycle { n } if n % 2 == 0 => Some(Biadjacency {
                rows: (0..n / 2).map(|i| 2 * i + 1).collect(),
                cols: (0..n / 2).map(|j| 2 * j).collect(),
            }),
            FamilySpec::Path { n } => Some(Biadjacency {
                rows: (0..n / 2).map(|i| 2 * i + 1).collect(),
                cols: (0..n.div_ceil(2)).map(|j| 2 * j).collect(),
            }),
            _ => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Complete { n } => write!(f, "complete({n})"),
            FamilySpec::CompleteBipartite { p, q } => write!(f, "bipartite({p},{q})"),
            FamilySpec::Cycle { n } => write!(f, "cycle({n})"),
            FamilySpec::Path { n } => write!(f, "path({n})"),
            FamilySpec::Circulant3 { n } => write!(f, "circulant3({n})"),
        }
    }
}

/// Assignment of a bipartite graph's vertices to matrix rows and columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Biadjacency {
    pub rows: Vec<VertexId>,
    pub cols: Vec<VertexId>,
}

impl Biadjacency {
    /// Matrix cell `(row, col)` of an edge, if the edge runs between the sides.
    pub fn cell(&self, e: &Edge) -> Option<(usize, usize)> {
        let row = |x| self.rows.iter().position(|&r| r == x);
        let col = |x| self.cols.iter().position(|&c| c == x);
        match (row(e.u), col(e.v), row(e.v), col(e.u)) {
            (Some(r), Some(c), _, _) | (_, _, Some(r), Some(c)) => Some((r, c)),
            _ => None,
        }
    }
}
