//! Undirected simple graphs with stable vertex indices, plus the surgery and
//! decomposition operations the rest of the crate is built on.

mod blocks;
mod hamilton;
mod iso;

pub use blocks::BlockDecomposition;
pub use iso::MAX_ISOMORPHISM_VERTICES;

const WORD_BITS: usize = 64;

/// Undirected simple graph on vertices `0..n`.
///
/// Adjacency is stored as per-vertex bitset rows, giving constant-time edge
/// queries for the small graphs this crate works with (one word per row up to
/// 64 vertices). Graphs are immutable once built: surgery operations return a
/// fresh graph and never mutate the receiver, so values can be shared freely
/// across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(WORD_BITS).max(1);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    ///
    /// # Panics
    /// Panics on self-loops or endpoints `>= n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range for n={}", self.n);
        assert_ne!(u, v, "self-loop at vertex {u}");
        let w = self.words;
        self.adj[u * w + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.adj[v * w + u / WORD_BITS] |= 1 << (u % WORD_BITS);
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Number of vertices, `v(G)`.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges, `e(G)`.
    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.n).map(|v| self.degree(v)).sum();
        debug_assert_eq!(total % 2, 0);
        total / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.adj[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// `deg(v) = |N(v)|`.
    ///
    /// # Panics
    /// Panics if `v >= n`.
    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex {v} out of range for n={}", self.n);
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `deg_t(v)`: the number of neighbours of `v` whose degree is exactly `t`.
    ///
    /// # Panics
    /// Panics if `v >= n`.
    pub fn degree_count(&self, v: usize, t: usize) -> usize {
        self.neighbours(v).filter(|&u| self.degree(u) == t).count()
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        assert!(v < self.n, "vertex {v} out of range for n={}", self.n);
        let row = self.row(v);
        (0..self.n).filter(move |&u| row[u / WORD_BITS] >> (u % WORD_BITS) & 1 == 1)
    }

    /// All edges `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbours(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `N(X)`: vertices adjacent to a member of `xs` but not in `xs`.
    pub fn neighbourhood(&self, xs: &[usize]) -> Vec<usize> {
        let member = |v: usize| xs.contains(&v);
        let mut out: Vec<usize> = (0..self.n)
            .filter(|&v| !member(v) && self.neighbours(v).any(member))
            .collect();
        out.sort_unstable();
        out
    }

    /// Complement graph: `uv` is an edge iff it is not one here.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Copy of the graph without the edge `uv`.
    ///
    /// # Panics
    /// Panics if `uv` is not an edge.
    pub fn delete_edge(&self, u: usize, v: usize) -> Graph {
        assert!(self.has_edge(u, v), "({u},{v}) is not an edge");
        let mut g = self.clone();
        let w = g.words;
        g.adj[u * w + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        g.adj[v * w + u / WORD_BITS] &= !(1 << (u % WORD_BITS));
        g
    }

    /// Copy of the graph without vertex `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n, "vertex {v} out of range");
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep).0
    }

    /// Induced subgraph on `vs` (deduplicated, ascending). Returns the graph
    /// and the map from new index to original vertex.
    pub fn induced(&self, vs: &[usize]) -> (Graph, Vec<usize>) {
        let mut map: Vec<usize> = vs.to_vec();
        map.sort_unstable();
        map.dedup();
        for &v in &map {
            assert!(v < self.n, "vertex {v} out of range");
        }
        let mut g = Graph::new(map.len());
        for i in 0..map.len() {
            for j in (i + 1)..map.len() {
                if self.has_edge(map[i], map[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, map)
    }

    /// Identifies all vertices of `s` into a single vertex, dropping the loops
    /// and parallel edges this creates. Vertices outside `s` keep their
    /// relative order starting at index 0; the merged vertex is appended last.
    ///
    /// # Panics
    /// Panics if `s` is empty or contains an out-of-range vertex.
    pub fn identify_vertices(&self, s: &[usize]) -> Graph {
        assert!(!s.is_empty(), "cannot identify an empty vertex set");
        let mut members = vec![false; self.n];
        for &v in s {
            assert!(v < self.n, "vertex {v} out of range");
            members[v] = true;
        }
        let outside: Vec<usize> = (0..self.n).filter(|&v| !members[v]).collect();
        let merged = outside.len();
        let mut g = Graph::new(merged + 1);
        for i in 0..outside.len() {
            for j in (i + 1)..outside.len() {
                if self.has_edge(outside[i], outside[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        for (i, &u) in outside.iter().enumerate() {
            if self.neighbours(u).any(|w| members[w]) {
                g.add_edge(i, merged);
            }
        }
        g
    }

    /// Connected components as ascending vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for u in self.neighbours(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True iff the graph is a single cycle: connected, every degree 2.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    /// True iff every pair of vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n.saturating_sub(1)) / 2
    }

    /// Biconnected decomposition; see [`BlockDecomposition`].
    pub fn blocks(&self) -> BlockDecomposition {
        blocks::decompose(self)
    }

    /// Exact Hamiltonian-cycle test by backtracking with a degree-2
    /// forced-edge prefilter. Intended for desk-scale graphs.
    pub fn has_hamiltonian_cycle(&self) -> bool {
        hamilton::has_hamiltonian_cycle(self)
    }

    /// Exact isomorphism test for graphs with at most
    /// [`MAX_ISOMORPHISM_VERTICES`] vertices.
    pub fn is_isomorphic(&self, other: &Graph) -> crate::error::Result<bool> {
        iso::is_isomorphic(self, other)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, e={}, {:?})", self.n, self.edge_count(), self.edges())
    }
}
