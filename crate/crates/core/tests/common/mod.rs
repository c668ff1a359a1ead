#![allow(dead_code)]

use std::sync::Arc;

use matchseq::{EdgeOrdering, FamilySpec, Graph, OrderingMode};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn fixture(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}.txt", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

/// Reads a labeled matrix fixture back into an ordering of `spec`, using the
/// family's row/column vertex assignment.
pub fn ordering_from_matrix(spec: FamilySpec, text: &str, mode: OrderingMode) -> EdgeOrdering {
    let g = Arc::new(spec.build().unwrap());
    let layout = spec.biadjacency().expect("bipartite family");
    let mut labels = vec![0; g.edge_count()];
    for (r, line) in text.lines().enumerate() {
        for (c, cell) in line.split_whitespace().enumerate() {
            if cell == "." {
                continue;
            }
            let id = g
                .find_edge(layout.rows[r], layout.cols[c], 0)
                .unwrap_or_else(|| panic!("cell ({r},{c}) is not an edge"));
            labels[id] = cell.parse().unwrap();
        }
    }
    EdgeOrdering::from_labels(g, &labels, mode).unwrap()
}

pub fn shuffled(g: &Arc<Graph>, mode: OrderingMode, rng: &mut impl Rng) -> EdgeOrdering {
    let mut seq: Vec<usize> = (0..g.edge_count()).collect();
    seq.shuffle(rng);
    EdgeOrdering::new(g.clone(), seq, mode).unwrap()
}

/// Uniform random labeled tree on `n >= 2` vertices via a Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    if n == 2 {
        return Graph::from_edges(2, [(0, 1)], false).unwrap();
    }
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1; n];
    for &x in &prufer {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &prufer {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges, false).unwrap()
}

/// Erdős–Rényi style random graph with at least one edge.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    loop {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        if !edges.is_empty() {
            return Graph::from_edges(n, edges, false).unwrap();
        }
    }
}

/// A mix of family members and random graphs, each with at most `max_edges` edges.
pub fn sample_graphs(max_edges: usize, rng: &mut impl Rng) -> Vec<Graph> {
    let mut out: Vec<Graph> = Vec::new();
    let specs = (2..8)
        .map(|n| FamilySpec::Complete { n })
        .chain((3..14).map(|n| FamilySpec::Cycle { n }))
        .chain((2..14).map(|n| FamilySpec::Path { n }))
        .chain((1..5).flat_map(|p| (p..6).map(move |q| FamilySpec::CompleteBipartite { p, q })))
        .chain((3..5).map(|n| FamilySpec::Circulant3 { n }));
    for spec in specs {
        let g = spec.build().unwrap();
        if g.edge_count() <= max_edges {
            out.push(g);
        }
    }
    while out.len() < 60 {
        let g = random_graph(rng.gen_range(3..8), 0.45, rng);
        if g.edge_count() <= max_edges {
            out.push(g);
        }
    }
    out
}
