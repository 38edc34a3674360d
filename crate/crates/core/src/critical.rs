//! Exact chromatic number, `k`-criticality, and `H`-criticality for circular
//! clique targets.

use crate::colour::{find_colouring, CircularTarget, Colouring};
use crate::graph::Graph;

/// Outcome of a criticality test. When `is_critical` is false the witness
/// explains why: either a colouring of the whole graph at the subcritical
/// target, or the lexicographically first edge whose deletion leaves the
/// graph uncolourable at that target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalityVerdict {
    pub is_critical: bool,
    pub witness: Option<CriticalityWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriticalityWitness {
    /// deleting this edge does not drop the graph below the target
    FailingEdge(usize, usize),
    /// the graph itself is colourable at the subcritical target
    Colouring(Colouring),
}

/// True iff `g` admits a proper colouring with `m` colours.
pub fn is_m_colourable(g: &Graph, m: usize) -> bool {
    match m {
        0 => g.vertex_count() == 0,
        1 => g.edge_count() == 0,
        _ => find_colouring(g, CircularTarget::new(m, 1).expect("m >= 2")).is_some(),
    }
}

/// The chromatic number, exact. Iterative deepening from a greedy clique
/// lower bound; each level is one run of the exact solver at target `(m,1)`.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.vertex_count() == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let lb = greedy_clique(g).len().max(2);
    (lb..=g.vertex_count())
        .find(|&m| is_m_colourable(g, m))
        .expect("n colours always suffice")
}

/// A maximal clique found greedily along descending degree; its size lower
/// bounds the chromatic number.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique
}

/// Is `g` `k`-critical: `chi(g) = k` and `chi(g - e) = k - 1` for every edge?
///
/// Testing edge deletions suffices: `chi(g) = k` forces
/// `chi(g - e) >= k - 1`, so only `(k-1)`-colourability of each `g - e` needs
/// checking.
///
/// # Panics
/// Panics if `k < 2`.
pub fn is_k_critical(g: &Graph, k: usize) -> CriticalityVerdict {
    assert!(k >= 2, "criticality needs k >= 2");
    let chi = chromatic_number(g);
    if chi < k {
        let witness = if k >= 3 {
            find_colouring(g, CircularTarget::new(k - 1, 1).unwrap())
                .expect("chi(g) <= k-1")
        } else {
            // k = 2 and chi <= 1: the graph is edgeless, any constant map works
            Colouring::new(
                CircularTarget::new(2, 1).unwrap(),
                vec![0; g.vertex_count()],
            )
        };
        return CriticalityVerdict {
            is_critical: false,
            witness: Some(CriticalityWitness::Colouring(witness)),
        };
    }
    if chi > k {
        // chi(g - e) >= chi(g) - 1 > k - 1 for every edge
        let (u, v) = g.edges()[0];
        return CriticalityVerdict {
            is_critical: false,
            witness: Some(CriticalityWitness::FailingEdge(u, v)),
        };
    }
    for (u, v) in g.edges() {
        if !is_m_colourable(&g.delete_edge(u, v), k - 1) {
            return CriticalityVerdict {
                is_critical: false,
                witness: Some(CriticalityWitness::FailingEdge(u, v)),
            };
        }
    }
    CriticalityVerdict {
        is_critical: true,
        witness: None,
    }
}

/// Is `g` `G_{p,q}`-critical: no `(p,q)`-colouring, but every edge-deleted
/// subgraph has one?
pub fn is_h_critical(g: &Graph, t: CircularTarget) -> CriticalityVerdict {
    if let Some(c) = find_colouring(g, t) {
        return CriticalityVerdict {
            is_critical: false,
            witness: Some(CriticalityWitness::Colouring(c)),
        };
    }
    for (u, v) in g.edges() {
        if find_colouring(&g.delete_edge(u, v), t).is_none() {
            return CriticalityVerdict {
                is_critical: false,
                witness: Some(CriticalityWitness::FailingEdge(u, v)),
            };
        }
    }
    CriticalityVerdict {
        is_critical: true,
        witness: None,
    }
}

/// Exact edge connectivity: the minimum over `t` of the max-flow from vertex
/// 0 to `t` with unit capacities. Zero for disconnected or trivial graphs.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    (1..n).map(|t| max_flow_unit(g, 0, t)).min().unwrap()
}

fn max_flow_unit(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.vertex_count();
    let mut cap = vec![0i32; n * n];
    for (u, v) in g.edges() {
        cap[u * n + v] = 1;
        cap[v * n + u] = 1;
    }
    let mut flow = 0;
    loop {
        // BFS augmenting path
        let mut parent = vec![usize::MAX; n];
        parent[s] = s;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if parent[v] == usize::MAX && cap[u * n + v] > 0 {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[t] == usize::MAX {
            return flow;
        }
        let mut v = t;
        while v != s {
            let u = parent[v];
            cap[u * n + v] -= 1;
            cap[v * n + u] += 1;
            v = u;
        }
        flow += 1;
    }
}

/// Checks the necessary conditions for `k`-criticality: minimum degree and
/// edge connectivity both at least `k - 1`.
pub fn min_degree_and_edge_connectivity_check(g: &Graph, k: usize) -> bool {
    g.min_degree() >= k - 1 && edge_connectivity(g) >= k - 1
}
