//! Biconnected decomposition (Hopcroft–Tarjan with an edge stack).

use super::Graph;

/// Blocks of a graph: each block is a maximal 2-connected subgraph, a bridge
/// edge, or an isolated vertex. Every edge lies in exactly one block, and two
/// blocks meet in at most one vertex, which is then a cut vertex.
///
/// Blocks are reported as ascending vertex lists, ordered lexicographically
/// (so in particular by minimum vertex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

struct Dfs<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
    cut: Vec<bool>,
}

impl Dfs<'_> {
    fn visit(&mut self, v: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[v] = self.time;
        self.low[v] = self.time;
        let mut children = 0;
        for u in self.g.neighbours(v) {
            if self.disc[u] == 0 {
                children += 1;
                self.edge_stack.push((v, u));
                self.visit(u, Some(v));
                self.low[v] = self.low[v].min(self.low[u]);
                if self.low[u] >= self.disc[v] {
                    // v separates u's subtree: pop one block
                    if parent.is_some() || children > 1 {
                        self.cut[v] = true;
                    }
                    let mut verts = Vec::new();
                    while let Some(&(a, b)) = self.edge_stack.last() {
                        self.edge_stack.pop();
                        for x in [a, b] {
                            if !verts.contains(&x) {
                                verts.push(x);
                            }
                        }
                        if (a, b) == (v, u) {
                            break;
                        }
                    }
                    verts.sort_unstable();
                    self.blocks.push(verts);
                }
            } else if Some(u) != parent && self.disc[u] < self.disc[v] {
                self.edge_stack.push((v, u));
                self.low[v] = self.low[v].min(self.disc[u]);
            }
        }
    }
}

pub(super) fn decompose(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut dfs = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        cut: vec![false; n],
    };
    for v in 0..n {
        if dfs.disc[v] == 0 {
            if g.degree(v) == 0 {
                dfs.blocks.push(vec![v]);
                dfs.disc[v] = usize::MAX;
            } else {
                dfs.visit(v, None);
            }
        }
    }
    dfs.blocks.sort();
    let cut_vertices = (0..n).filter(|&v| dfs.cut[v]).collect();
    BlockDecomposition {
        blocks: dfs.blocks,
        cut_vertices,
    }
}
