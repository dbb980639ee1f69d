//! Simple undirected graph on dense labels 0..n-1, adjacency as bitmasks.
//!
//! Every mutation returns a new value; nothing here is interior-mutable, so
//! graphs can be shared freely across threads. Vertex relabeling on
//! delete/contract is deterministic (the last vertex moves into the hole)
//! so downstream canonical keys and tests are reproducible.

use thiserror::Error;

/// Hard cap imposed by the single-byte graph6 order field.
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of 62")]
    OrderTooLarge(usize),
    #[error("no such edge ({0}, {1})")]
    NoSuchEdge(usize, usize),
    #[error("vertex {0} out of range for order {1}")]
    BadVertex(usize, usize),
    #[error("graph has no vertices")]
    EmptyGraph,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("malformed edge list near {0:?}")]
    Malformed(String),
    #[error("edge ({0}, {1}) repeated")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph order {0} exceeds the supported maximum of 62")]
    OrderTooLarge(usize),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph { n, adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// Complete multipartite graph; parts are consecutive label blocks.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let n: usize = parts.iter().sum();
        let mut g = Graph::empty(n);
        let mut part_of = Vec::with_capacity(n);
        for (i, &p) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat(i).take(p));
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if part_of[u] != part_of[v] {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.set_edge(u, (u + 1) % n);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            assert!(u != v && u < n && v < n, "bad edge ({u}, {v}) for order {n}");
            g.set_edge(u, v);
        }
        g
    }

    /// Parse the printed edge-list format: "(0, 4), (0, 5), ...", with or
    /// without surrounding brackets; whitespace-insensitive. The order is
    /// 1 + the largest endpoint.
    pub fn from_edge_list_text(text: &str) -> Result<Graph, EdgeListError> {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let cleaned: String = text
            .chars()
            .map(|c| if c.is_ascii_digit() || c == '(' || c == ')' { c } else { ' ' })
            .collect();
        for chunk in cleaned.split('(').skip(1) {
            let inner = match chunk.split(')').next() {
                Some(s) => s,
                None => return Err(EdgeListError::Malformed(chunk.to_string())),
            };
            let nums: Vec<usize> = inner
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| EdgeListError::Malformed(inner.to_string())))
                .collect::<Result<_, _>>()?;
            if nums.len() != 2 {
                return Err(EdgeListError::Malformed(inner.to_string()));
            }
            let (u, v) = (nums[0].min(nums[1]), nums[0].max(nums[1]));
            if u == v {
                return Err(EdgeListError::SelfLoop(u));
            }
            if pairs.contains(&(u, v)) {
                return Err(EdgeListError::DuplicateEdge(u, v));
            }
            pairs.push((u, v));
        }
        if pairs.is_empty() {
            return Err(EdgeListError::Malformed(text.trim().to_string()));
        }
        let n = 1 + pairs.iter().map(|&(_, v)| v).max().unwrap();
        if n > MAX_ORDER {
            return Err(EdgeListError::OrderTooLarge(n));
        }
        Ok(Graph::from_edges(n, &pairs))
    }

    /// Inverse of [`from_edge_list_text`]: "(u, v)" entries, u < v, sorted.
    pub fn to_edge_list_text(&self) -> String {
        let entries: Vec<String> = self.edges().map(|(u, v)| format!("({u}, {v})")).collect();
        entries.join(", ")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// New graph with the non-edge (u, v) added.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(!self.has_edge(u, v) && u != v && u < self.n && v < self.n);
        let mut g = self.clone();
        g.set_edge(u, v);
        g
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NoSuchEdge(u, v));
        }
        let mut g = self.clone();
        g.clear_edge(u, v);
        Ok(g)
    }

    /// Contract (u, v): merge into min(u, v), relabel the last vertex into
    /// the hole left by max(u, v), suppress the loop and parallel edges.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NoSuchEdge(u, v));
        }
        let (a, b) = (u.min(v), u.max(v));
        let last = self.n - 1;
        let mut g = Graph::empty(self.n - 1);
        for (x, y) in self.edges() {
            let map = |t: usize| {
                let t = if t == b { a } else { t };
                if t == last && b != last {
                    b
                } else {
                    t
                }
            };
            let (p, q) = (map(x), map(y));
            if p != q {
                g.set_edge(p, q);
            }
        }
        Ok(g)
    }

    /// Delete vertex v; the last vertex is relabeled to v.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::BadVertex(v, self.n));
        }
        let last = self.n - 1;
        let mut g = Graph::empty(self.n - 1);
        for (x, y) in self.edges() {
            if x == v || y == v {
                continue;
            }
            let map = |t: usize| if t == last { v } else { t };
            g.set_edge(map(x), map(y));
        }
        Ok(g)
    }

    /// Drop all isolated vertices, preserving the relative order of the rest.
    pub fn drop_isolated(&self) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.adj[v] != 0).collect();
        self.induced(&keep)
    }

    /// Induced subgraph on `keep` (relabeled 0.. in the given order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    /// Apply a relabeling permutation: vertex v becomes perm[v].
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degree multiset, ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        self.degrees().into_iter().min().ok_or(GraphError::EmptyGraph)
    }

    pub fn max_degree(&self) -> Result<usize, GraphError> {
        self.degrees().into_iter().max().ok_or(GraphError::EmptyGraph)
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            BitIter(self.adj[u] & !((1u64 << (u + 1)) - 1)).map(move |v| (u, v))
        })
    }

    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> u64 {
        self.adj[u] & self.adj[v]
    }

    /// All triangles as ascending vertex triples.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for (u, v) in self.edges() {
            for w in BitIter(self.common_neighbors(u, v)) {
                if w > v {
                    out.push([u, v, w]);
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.connected_within(self.full_mask())
    }

    /// Is the subgraph induced by `mask` connected? (Empty mask counts as
    /// connected; isolated-in-mask vertices count as components.)
    pub fn connected_within(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.adj[v] & mask & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen == mask
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 0 {
            0
        } else {
            u64::MAX >> (64 - self.n)
        }
    }

    /// Graph-distance matrix entry (usize::MAX when disconnected).
    pub fn distance(&self, u: usize, v: usize) -> usize {
        let mut dist = 0usize;
        let mut seen = 1u64 << u;
        let mut frontier = seen;
        while frontier != 0 {
            if seen >> v & 1 == 1 {
                return dist;
            }
            let mut next = 0u64;
            for x in BitIter(frontier) {
                next |= self.adj[x] & !seen;
            }
            seen |= next;
            frontier = next;
            dist += 1;
        }
        usize::MAX
    }

    pub fn diameter(&self) -> usize {
        let mut d = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                d = d.max(self.distance(u, v));
            }
        }
        d
    }
}

/// Iterator over set bit positions of a u64.
#[derive(Clone)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_counts() {
        let k7 = Graph::complete(7);
        assert_eq!(k7.order(), 7);
        assert_eq!(k7.size(), 21);
        assert_eq!(k7.min_degree().unwrap(), 6);
    }

    #[test]
    fn contract_k3_gives_k2() {
        let k3 = Graph::complete(3);
        let g = k3.contract_edge(0, 1).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.size(), 1);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn contract_size_identity_small_orders() {
        // |E(G/uv)| = |E(G)| - 1 - |N(u) ∩ N(v)| over every edge of every
        // graph on 5 vertices.
        for bits in 0u64..(1 << 10) {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..5 {
                for v in (u + 1)..5 {
                    if bits >> k & 1 == 1 {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            let g = Graph::from_edges(5, &edges);
            for (u, v) in g.edges().collect::<Vec<_>>() {
                let c = g.contract_edge(u, v).unwrap();
                let shared = g.common_neighbors(u, v).count_ones() as usize;
                assert_eq!(c.size(), g.size() - 1 - shared);
                assert_eq!(c.order(), g.order() - 1);
            }
        }
    }

    #[test]
    fn delete_vertex_relabels_last_into_hole() {
        // Path 0-1-2-3; deleting 1 moves 3 into slot 1: edge (2,3) -> (2,1).
        let p = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let g = p.delete_vertex(1).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn edge_list_text_round_trip() {
        let text = "[(0, 4), (0, 5), (2, 3), (1, 5)]";
        let g = Graph::from_edge_list_text(text).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.size(), 4);
        assert_eq!(g.to_edge_list_text(), "(0, 4), (0, 5), (1, 5), (2, 3)");
        let h = Graph::from_edge_list_text(&g.to_edge_list_text()).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn edge_list_rejects_garbage() {
        assert!(matches!(
            Graph::from_edge_list_text("(1, 2, 3)"),
            Err(EdgeListError::Malformed(_))
        ));
        assert!(matches!(
            Graph::from_edge_list_text("(1, 1)"),
            Err(EdgeListError::SelfLoop(1))
        ));
        assert!(matches!(
            Graph::from_edge_list_text("(0, 1), (1, 0)"),
            Err(EdgeListError::DuplicateEdge(0, 1))
        ));
    }

    #[test]
    fn multipartite_shapes() {
        let k331 = Graph::complete_multipartite(&[3, 3, 1]);
        assert_eq!(k331.order(), 7);
        assert_eq!(k331.size(), 15);
        let k33 = Graph::complete_multipartite(&[3, 3]);
        assert_eq!(k33.size(), 9);
        assert_eq!(k33.degree_sequence(), vec![3; 6]);
    }

    #[test]
    fn connectivity_and_distance() {
        let mut g = Graph::cycle(6);
        assert!(g.is_connected());
        assert_eq!(g.distance(0, 3), 3);
        assert_eq!(g.diameter(), 3);
        g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert!(!g.is_connected());
        assert_eq!(g.distance(0, 2), usize::MAX);
        assert!(g.connected_within(0b0011));
        assert!(!g.connected_within(0b0101));
    }

    #[test]
    fn triangles_of_k4() {
        assert_eq!(Graph::complete(4).triangles().len(), 4);
        assert_eq!(Graph::cycle(5).triangles().len(), 0);
    }
}
