//! Small simple undirected graphs.

use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            matrix: vec![false; n * n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::new(n);
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Adds `{a, b}`; loops and repeated edges are ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        let n = self.node_count();
        if a == b || self.matrix[a * n + b] {
            return;
        }
        self.matrix[a * n + b] = true;
        self.matrix[b * n + a] = true;
        insert_sorted(&mut self.adjacency[a], b);
        insert_sorted(&mut self.adjacency[b], a);
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.matrix[a * self.node_count() + b]
    }

    pub fn neighbors(&self, a: usize) -> &[usize] {
        &self.adjacency[a]
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adjacency[a].len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|d| d.is_some())
    }

    pub fn bfs_distances(&self, from: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.node_count()];
        dist[from] = Some(0);
        let mut queue = VecDeque::from([from]);
        while let Some(a) = queue.pop_front() {
            let d = dist[a].unwrap();
            for &b in &self.adjacency[a] {
                if dist[b].is_none() {
                    dist[b] = Some(d + 1);
                    queue.push_back(b);
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.node_count();
        let mut best: Option<usize> = None;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(a) = queue.pop_front() {
                for &b in &self.adjacency[a] {
                    if dist[b] == usize::MAX {
                        dist[b] = dist[a] + 1;
                        parent[b] = a;
                        queue.push_back(b);
                    } else if parent[a] != b {
                        let len = dist[a] + dist[b] + 1;
                        best = Some(best.map_or(len, |x| x.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Replaces `node` by a complete graph on `d + 1` new nodes, attaching each
    /// former neighbour to its own new node. The new nodes are appended in the
    /// order of the neighbours of `node`; every other node keeps its relative
    /// order.
    pub fn truncate_vertex(&self, node: usize, d: usize) -> Result<Graph, DegreeMismatch> {
        let neighbors = self.neighbors(node).to_vec();
        if neighbors.len() != d + 1 {
            return Err(DegreeMismatch {
                node,
                degree: neighbors.len(),
                expected: d + 1,
            });
        }
        let n = self.node_count();
        let remap = |x: usize| if x > node { x - 1 } else { x };
        let base = n - 1;
        let mut g = Graph::new(base + d + 1);
        for (a, b) in self.edges() {
            if a != node && b != node {
                g.add_edge(remap(a), remap(b));
            }
        }
        for (i, &nb) in neighbors.iter().enumerate() {
            for j in i + 1..=d {
                g.add_edge(base + i, base + j);
            }
            g.add_edge(base + i, remap(nb));
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("node {node} has degree {degree}, truncation needs {expected}")]
pub struct DegreeMismatch {
    pub node: usize,
    pub degree: usize,
    pub expected: usize,
}

fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    if let Err(pos) = v.binary_search(&x) {
        v.insert(pos, x);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    #[test]
    fn cycle_basics() {
        let g = cycle(5);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.girth(), Some(5));
        assert!(g.is_connected());
        assert!(g.has_edge(4, 0));
    }

    #[test]
    fn truncating_k4_gives_prism_like_graph() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let t = k4.truncate_vertex(0, 2).unwrap();
        assert_eq!(t.node_count(), 6);
        assert_eq!(t.edge_count(), 9);
        assert!((0..6).all(|v| t.degree(v) == 3));
        assert_eq!(t.girth(), Some(3));
    }

    #[test]
    fn truncation_checks_degree() {
        let g = Graph::new(1);
        assert_eq!(
            g.truncate_vertex(0, 2),
            Err(DegreeMismatch {
                node: 0,
                degree: 0,
                expected: 3
            })
        );
    }
}
