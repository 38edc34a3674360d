//! Generators for every graph family and graph operation the toolkit works
//! with, plus the built-in verification corpus.
//!
//! Index conventions (fixed so tests can rely on them):
//! - `cycle(n)`: vertices `0..n` in cyclic order.
//! - `wheel(n)`: rim cycle on `0..n-1`, hub at `n-1`. A wheel is *odd* when
//!   `n` is even (odd rim).
//! - constructions that add vertices append them after the existing ones.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// Path on `n` vertices, `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidConstruction(format!("cycle needs n >= 3, got {n}")));
    }
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    Ok(g)
}

/// Wheel `W_n`: the cycle `C_{n-1}` plus a hub adjacent to all of it.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::InvalidConstruction(format!("wheel needs n >= 4, got {n}")));
    }
    let mut g = Graph::new(n);
    for v in 0..(n - 1) {
        g.add_edge(v, (v + 1) % (n - 1));
    }
    for v in 0..(n - 1) {
        g.add_edge(v, n - 1);
    }
    Ok(g)
}

/// The Moser spindle: vertices `a..g` as `0..7`, edges
/// `ab,ac,af,ag,bc,bd,cd,de,ef,eg,fg`.
pub fn moser_spindle() -> Graph {
    Graph::from_edges(
        7,
        &[
            (0, 1),
            (0, 2),
            (0, 5),
            (0, 6),
            (1, 2),
            (1, 3),
            (2, 3),
            (3, 4),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
    )
}

/// The Grötzsch graph, `M(C_5)`.
pub fn grotzsch() -> Graph {
    mycielski(&cycle(5).expect("C5"))
}

/// Ore composition: delete the edge `xy` of `g1`, split `z` in `g2` into
/// `z'` (taking the neighbours in `split_first`) and `z''` (taking the rest),
/// then identify `z'` with `x` and `z''` with `y`.
///
/// Vertices of `g1` keep their indices; vertices of `g2` other than `z` are
/// appended in order. The result has `v1 + v2 - 1` vertices and
/// `e1 + e2 - 1` edges.
pub fn ore_compose(
    g1: &Graph,
    xy: (usize, usize),
    g2: &Graph,
    z: usize,
    split_first: &[usize],
) -> Result<Graph> {
    let (x, y) = xy;
    let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
    if x >= n1 || y >= n1 || !g1.has_edge(x, y) {
        return Err(Error::InvalidConstruction(format!("({x},{y}) is not an edge of g1")));
    }
    if z >= n2 {
        return Err(Error::InvalidConstruction(format!("vertex {z} out of range in g2")));
    }
    let nz: Vec<usize> = g2.neighbours(z).collect();
    let first: Vec<usize> = split_first.to_vec();
    if first.is_empty() || first.len() == nz.len() {
        return Err(Error::InvalidConstruction("both parts of the split must be non-empty".into()));
    }
    if first.iter().any(|u| !nz.contains(u)) {
        return Err(Error::InvalidConstruction("split contains a non-neighbour of z".into()));
    }

    // g2 vertex u (u != z) maps to n1 + its rank among the survivors
    let survivors: Vec<usize> = (0..n2).filter(|&u| u != z).collect();
    let map = |u: usize| n1 + survivors.iter().position(|&s| s == u).unwrap();

    let mut g = Graph::new(n1 + n2 - 1);
    for (u, v) in g1.edges() {
        if (u, v) != (x.min(y), x.max(y)) {
            g.add_edge(u, v);
        }
    }
    for (u, v) in g2.edges() {
        if u != z && v != z {
            g.add_edge(map(u), map(v));
        }
    }
    for &u in &nz {
        let anchor = if first.contains(&u) { x } else { y };
        g.add_edge(anchor, map(u));
    }
    Ok(g)
}

/// A seeded chain of `k`-Ore graphs: starts at `K_k` and performs `steps`
/// Ore compositions with a fresh `K_k`, drawing the edge, split vertex, and
/// split uniformly. Returns the whole chain, `steps + 1` graphs.
pub fn k_ore_family(k: usize, steps: usize, seed: u64) -> Result<Vec<Graph>> {
    if k < 4 {
        return Err(Error::InvalidConstruction(format!("k-Ore needs k >= 4, got {k}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![complete(k)];
    for _ in 0..steps {
        let g1 = out.last().unwrap();
        let edges = g1.edges();
        let xy = edges[rng.random_range(0..edges.len())];
        let g2 = complete(k);
        let z = rng.random_range(0..k);
        let nz: Vec<usize> = g2.neighbours(z).collect();
        // proper non-empty subset of N(z)
        let subset = rng.random_range(1..(1u32 << nz.len()) - 1);
        let first: Vec<usize> = nz
            .iter()
            .enumerate()
            .filter(|(i, _)| subset >> i & 1 == 1)
            .map(|(_, &u)| u)
            .collect();
        let composed = ore_compose(g1, xy, &g2, z, &first)?;
        out.push(composed);
    }
    Ok(out)
}

/// Mycielski construction `M(G)`: originals `0..n`, shadows `n..2n`
/// (`x' = x + n`), apex `2n`. Shadows copy their original's adjacency and
/// all attach to the apex: `v = 2v(G)+1`, `e = 3e(G)+v(G)`.
pub fn mycielski(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut m = Graph::new(2 * n + 1);
    for (u, v) in g.edges() {
        m.add_edge(u, v);
        m.add_edge(u, v + n);
        m.add_edge(v, u + n);
    }
    for x in 0..n {
        m.add_edge(x + n, 2 * n);
    }
    m
}

/// C6-expansion at a degree-3 vertex `v` with `N(v) = {x,y,z}` (ascending):
/// deletes `v` and adds `x',y',z',w` with the nine edges
/// `x'y, x'z, x'w, y'x, y'z, y'w, z'x, z'y, z'w`. The surviving vertices are
/// compacted in order, then `x',y',z',w` are appended.
pub fn c6_expansion(g: &Graph, v: usize) -> Result<Graph> {
    if v >= g.vertex_count() {
        return Err(Error::InvalidConstruction(format!("vertex {v} out of range")));
    }
    if g.degree(v) != 3 {
        return Err(Error::InvalidConstruction(format!(
            "C6-expansion needs deg(v) = 3, got {}",
            g.degree(v)
        )));
    }
    let nv: Vec<usize> = g.neighbours(v).collect();
    let shifted = |u: usize| if u > v { u - 1 } else { u };
    let (x, y, z) = (shifted(nv[0]), shifted(nv[1]), shifted(nv[2]));
    let n = g.vertex_count() - 1;
    let (xp, yp, zp, w) = (n, n + 1, n + 2, n + 3);

    let mut out = Graph::new(n + 4);
    for (a, b) in g.edges() {
        if a != v && b != v {
            out.add_edge(shifted(a), shifted(b));
        }
    }
    for (prime, others) in [(xp, [y, z]), (yp, [x, z]), (zp, [x, y])] {
        out.add_edge(prime, others[0]);
        out.add_edge(prime, others[1]);
        out.add_edge(prime, w);
    }
    Ok(out)
}

/// Indicator composition `G * P_len`: every edge is replaced by a path with
/// `len` vertices whose endpoints are the original endpoints. `len = 2`
/// returns the graph unchanged. Internal path vertices are appended edge by
/// edge in lexicographic edge order.
pub fn indicator_compose(g: &Graph, path_len: usize) -> Result<Graph> {
    if path_len < 2 {
        return Err(Error::InvalidConstruction(format!(
            "indicator path needs at least 2 vertices, got {path_len}"
        )));
    }
    if path_len == 2 {
        return Ok(g.clone());
    }
    let n = g.vertex_count();
    let internals = path_len - 2;
    let edges = g.edges();
    let mut out = Graph::new(n + internals * edges.len());
    let mut next = n;
    for (u, v) in edges {
        let mut prev = u;
        for _ in 0..internals {
            out.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        out.add_edge(prev, v);
    }
    Ok(out)
}

/// Expected properties attached to a corpus graph. `None` means the property
/// is not asserted up front and is left to be determined at run time.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusTags {
    /// chi = 4 and every edge deletion drops it to 3.
    pub four_critical: bool,
    pub no_7_2_colouring: Option<bool>,
    /// expected circular chromatic number, as a reduced fraction
    pub chi_c: Option<(usize, usize)>,
    /// edge count meets the k=4 Kostochka-Yancey formula with equality
    pub ky_equality: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: String,
    pub graph: Graph,
    pub tags: CorpusTags,
}

/// The deterministic verification corpus: `K4`, the odd wheels `W6..W12`,
/// the Moser spindle, the Grötzsch graph, C6-expansions of `K4` and of the
/// odd wheels (with iterated expansions of `K4` up to depth 3), and a seeded
/// 4-Ore chain. Only graphs with at most `budget` vertices are kept.
pub fn corpus_generate(seed: u64, budget: usize) -> Vec<CorpusEntry> {
    let mut entries: Vec<CorpusEntry> = Vec::new();
    let mut push = |id: &str, graph: Graph, tags: CorpusTags| {
        if graph.vertex_count() <= budget {
            entries.push(CorpusEntry {
                id: id.to_string(),
                graph,
                tags,
            });
        }
    };
    let tags = |no72: Option<bool>, chi_c: Option<(usize, usize)>, ky: Option<bool>| CorpusTags {
        four_critical: true,
        no_7_2_colouring: no72,
        chi_c,
        ky_equality: ky,
    };

    push("k4", complete(4), tags(Some(true), Some((4, 1)), Some(true)));
    for n in [6usize, 8, 10, 12] {
        push(
            &format!("w{n}"),
            wheel(n).unwrap(),
            tags(Some(true), Some((4, 1)), Some(false)),
        );
    }
    push("moser", moser_spindle(), tags(Some(false), Some((7, 2)), Some(true)));
    push("grotzsch", grotzsch(), tags(Some(true), Some((4, 1)), Some(false)));

    // iterated C6-expansions of K4, always at the lowest-index degree-3 vertex
    let mut g = complete(4);
    for depth in 1..=3 {
        let v = lowest_degree3_vertex(&g).expect("expansion keeps degree-3 vertices");
        g = c6_expansion(&g, v).unwrap();
        push(
            &format!("c6x{depth}-k4"),
            g.clone(),
            tags(Some(true), None, Some(false)),
        );
    }
    for n in [6usize, 8, 10, 12] {
        let w = wheel(n).unwrap();
        push(
            &format!("c6x-w{n}"),
            c6_expansion(&w, 0).unwrap(),
            tags(Some(true), None, Some(false)),
        );
    }

    let chain = k_ore_family(4, 3, seed).unwrap();
    for (i, g) in chain.into_iter().enumerate().skip(1) {
        push(&format!("ore4-{i}"), g, tags(None, None, Some(true)));
    }
    entries
}

fn lowest_degree3_vertex(g: &Graph) -> Option<usize> {
    (0..g.vertex_count()).find(|&v| g.degree(v) == 3)
}
