//! Exact Hamiltonian-cycle search.

use super::Graph;

/// Backtracking search with a degree-2 forced-edge prefilter. A Hamiltonian
/// cycle must use both edges at every degree-2 vertex, so the forced edges
/// already rule out most sparse negatives before any search happens.
pub(super) fn has_hamiltonian_cycle(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 3 {
        return false;
    }
    if (0..n).any(|v| g.degree(v) < 2) {
        return false;
    }
    if !g.is_connected() {
        return false;
    }

    // Forced edges: both incident edges of every degree-2 vertex.
    let mut forced_deg = vec![0usize; n];
    let mut forced = vec![false; n * n];
    for v in 0..n {
        if g.degree(v) == 2 {
            for u in g.neighbours(v) {
                if !forced[v * n + u] {
                    forced[v * n + u] = true;
                    forced[u * n + v] = true;
                    forced_deg[v] += 1;
                    forced_deg[u] += 1;
                }
            }
        }
    }
    if forced_deg.iter().any(|&d| d > 2) {
        return false;
    }
    // A cycle among forced edges must already span all vertices.
    if let Some(cycle_len) = forced_cycle_len(n, &forced, &forced_deg) {
        return cycle_len == n;
    }

    let mut visited = vec![false; n];
    visited[0] = true;
    extend(g, &forced, &mut visited, 0, 1)
}

/// Length of a cycle in the forced subgraph, if one exists. Forced degrees
/// are at most 2 here, so the forced subgraph is a union of paths and cycles.
fn forced_cycle_len(n: usize, forced: &[bool], forced_deg: &[usize]) -> Option<usize> {
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] || forced_deg[start] != 2 {
            continue;
        }
        let mut len = 0;
        let mut prev = usize::MAX;
        let mut v = start;
        loop {
            seen[v] = true;
            len += 1;
            let next = (0..n).find(|&u| forced[v * n + u] && u != prev);
            match next {
                Some(u) if u == start => return Some(len),
                Some(u) if forced_deg[u] == 2 => {
                    prev = v;
                    v = u;
                }
                _ => break,
            }
        }
    }
    None
}

fn extend(g: &Graph, forced: &[bool], visited: &mut [bool], last: usize, depth: usize) -> bool {
    let n = g.vertex_count();
    if depth == n {
        return g.has_edge(last, 0);
    }
    // If `last` has an unused forced edge, the cycle must follow it.
    let forced_next: Vec<usize> = g
        .neighbours(last)
        .filter(|&u| forced[last * n + u] && !visited[u])
        .collect();
    let candidates: Vec<usize> = if !forced_next.is_empty() {
        forced_next
    } else {
        g.neighbours(last).filter(|&u| !visited[u]).collect()
    };
    for u in candidates {
        visited[u] = true;
        if extend(g, forced, visited, u, depth + 1) {
            return true;
        }
        visited[u] = false;
    }
    false
}
