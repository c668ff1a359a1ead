//! Maximum matching in general graphs (Edmonds' blossom algorithm).

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// Size of a maximum matching. Parallel edges collapse onto the underlying
/// simple graph, since two copies of one edge never appear in a matching.
pub fn max_matching_size(g: &Graph) -> usize {
    let n = g.order();
    let mut adj = vec![Vec::new(); n];
    for e in g.edges() {
        if !adj[e.u].contains(&e.v) {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
    }
    Blossom::new(adj).run()
}

struct Blossom {
    adj: Vec<Vec<usize>>,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl Blossom {
    fn new(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn run(mut self) -> usize {
        let n = self.adj.len();
        // Greedy start
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(&w) = self.adj[v].iter().find(|&&w| self.mate[w] == NONE) {
                    self.mate[v] = w;
                    self.mate[w] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            let mut v = self.find_path(root);
            while v != NONE {
                let pv = self.parent[v];
                let next = self.mate[pv];
                self.mate[v] = pv;
                self.mate[pv] = v;
                v = next;
            }
        }
        self.mate.iter().filter(|&&m| m != NONE).count() / 2
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> usize {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    queue.push_back(m);
                }
            }
        }
        NONE
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;
    use proptest::prelude::*;

    /// Exhaustive oracle: largest pairwise-disjoint edge subset.
    fn brute(g: &Graph) -> usize {
        fn go(edges: &[(usize, usize)], used: u64, i: usize) -> usize {
            if i == edges.len() {
                return 0;
            }
            let skip = go(edges, used, i + 1);
            let (u, v) = edges[i];
            if used & (1 << u) == 0 && used & (1 << v) == 0 {
                skip.max(1 + go(edges, used | 1 << u | 1 << v, i + 1))
            } else {
                skip
            }
        }
        let edges: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        go(&edges, 0, 0)
    }

    #[test]
    fn family_values() {
        let k7 = FamilySpec::Complete { n: 7 }.build().unwrap();
        assert_eq!(max_matching_size(&k7), 3);
        assert_eq!(
            max_matching_size(&FamilySpec::Path { n: 10 }.build().unwrap()),
            5
        );
        assert_eq!(max_matching_size(&k7.multiply(3).unwrap()), 3);
        assert_eq!(
            max_matching_size(&FamilySpec::Cycle { n: 9 }.build().unwrap()),
            4
        );
    }

    #[test]
    fn order_18_tree_with_perfect_matching() {
        // A caterpillar: spine 0..9 with one leaf 9+i hanging off each spine vertex.
        let pairs = (0..8).map(|i| (i, i + 1)).chain((0..9).map(|i| (i, 9 + i)));
        let t = Graph::from_edges(18, pairs, false).unwrap();
        assert!(t.is_tree());
        assert_eq!(max_matching_size(&t), 9);
    }

    #[test]
    fn petersen_graph_is_perfectly_matchable() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::from_edges(10, outer.chain(spokes).chain(inner), false).unwrap();
        assert_eq!(max_matching_size(&g), 5);
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(n in 2usize..10, mask in any::<u64>()) {
            let pairs: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .enumerate()
                .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
                .map(|(_, p)| p)
                .collect();
            let g = Graph::from_edges(n, pairs, false).unwrap();
            prop_assert_eq!(max_matching_size(&g), brute(&g));
        }
    }
}
