//! The exact `(p,q)`-colouring decision procedure and its brute-force
//! counting oracle.

use super::{as_cyclic_interval, full_mask, CircularTarget, Colouring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Finds a valid `(p,q)`-colouring of `g`, or `None` if none exists.
///
/// Backtracking with forward checking: assigning a colour intersects every
/// uncoloured neighbour's availability with the target neighbourhood of that
/// colour (at `p/q < 4` those sets stay cyclic intervals). The next vertex is
/// always one with the smallest availability set, ties broken by lowest
/// index, and colours are tried ascending from the interval's low end, so the
/// result is deterministic. Because every `G_{p,q}` is vertex-transitive, the
/// first vertex is pinned to colour 0.
pub fn find_colouring(g: &Graph, t: CircularTarget) -> Option<Colouring> {
    let domains = vec![t.full_mask(); g.vertex_count()];
    solve_with_domains(g, t, domains, true).map(|assignment| Colouring::new(t, assignment))
}

/// Shared search engine. `domains[v]` restricts vertex `v`'s colours;
/// `symmetry_break` pins vertex 0 to colour 0 when its domain is unrestricted
/// (only sound for full domains, hence the guard).
pub(crate) fn solve_with_domains(
    g: &Graph,
    t: CircularTarget,
    mut domains: Vec<u64>,
    symmetry_break: bool,
) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    debug_assert_eq!(domains.len(), n);
    if n == 0 {
        return Some(Vec::new());
    }
    if domains.contains(&0) {
        return None;
    }
    if symmetry_break && domains[0] == t.full_mask() {
        domains[0] = 1;
    }
    let masks: Vec<u64> = (0..t.p()).map(|c| t.neighbour_mask(c)).collect();
    let mut assigned: Vec<Option<usize>> = vec![None; n];
    if search(g, t.p(), &masks, &mut domains, &mut assigned, n) {
        Some(assigned.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}

fn search(
    g: &Graph,
    p: usize,
    masks: &[u64],
    domains: &mut [u64],
    assigned: &mut [Option<usize>],
    remaining: usize,
) -> bool {
    if remaining == 0 {
        return true;
    }
    // smallest availability set first, ties by lowest index
    let v = (0..g.vertex_count())
        .filter(|&v| assigned[v].is_none())
        .min_by_key(|&v| (domains[v].count_ones(), v))
        .unwrap();
    for c in ordered_colours(domains[v], p) {
        assigned[v] = Some(c);
        let mut trail: Vec<(usize, u64)> = Vec::new();
        let mut dead_end = false;
        for u in g.neighbours(v) {
            if assigned[u].is_none() {
                let old = domains[u];
                let new = old & masks[c];
                if new != old {
                    trail.push((u, old));
                    domains[u] = new;
                    if new == 0 {
                        dead_end = true;
                        break;
                    }
                }
            }
        }
        if !dead_end && search(g, p, masks, domains, assigned, remaining - 1) {
            return true;
        }
        for (u, old) in trail {
            domains[u] = old;
        }
        assigned[v] = None;
    }
    false
}

/// Colours of `mask` in the documented trial order: ascending from the
/// interval's low end when the set is a cyclic interval, plain ascending
/// otherwise.
fn ordered_colours(mask: u64, p: usize) -> Vec<usize> {
    let set: Vec<usize> = (0..p).filter(|&c| mask >> c & 1 == 1).collect();
    if mask != full_mask(p) {
        if let Some((lo, _)) = as_cyclic_interval(mask, p) {
            let mut out = Vec::with_capacity(set.len());
            let mut c = lo;
            for _ in 0..set.len() {
                out.push(c);
                c = (c + 1) % p;
            }
            return out;
        }
    }
    set
}

/// Exhaustively counts the valid total assignments `V(g) -> {0..p-1}`.
///
/// This is the independent oracle for [`find_colouring`]: it enumerates the
/// assignment tree in plain index order with nothing beyond edge checks, and
/// shares no code with the solver's propagation. Guarded to instances with
/// `p^v <= 2^30`.
pub fn count_colourings_oracle(g: &Graph, t: CircularTarget) -> Result<u64> {
    let n = g.vertex_count();
    let p = t.p();
    let mut space = 1u64;
    for _ in 0..n {
        space = space.saturating_mul(p as u64);
        if space > 1 << 30 {
            return Err(Error::OracleTooLarge { n, p });
        }
    }
    let mut assignment = vec![0usize; n];
    Ok(count_rec(g, t, &mut assignment, 0))
}

fn count_rec(g: &Graph, t: CircularTarget, assignment: &mut [usize], v: usize) -> u64 {
    if v == assignment.len() {
        return 1;
    }
    let mut total = 0;
    'colours: for c in 0..t.p() {
        for u in g.neighbours(v) {
            if u < v && !t.adjacent_colours(assignment[u], c) {
                continue 'colours;
            }
        }
        assignment[v] = c;
        total += count_rec(g, t, assignment, v + 1);
    }
    total
}
