//! Exact isomorphism testing for small graphs: colour refinement to prune,
//! then backtracking over colour-compatible assignments.

use std::collections::BTreeMap;

use super::Graph;
use crate::error::{Error, Result};

/// Hard cap for [`Graph::is_isomorphic`]. Only recognition of named small
/// graphs is needed here; anything bigger is a usage error.
pub const MAX_ISOMORPHISM_VERTICES: usize = 16;

pub(super) fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    let n = g.vertex_count();
    if n.max(h.vertex_count()) > MAX_ISOMORPHISM_VERTICES {
        return Err(Error::IsomorphismTooLarge {
            n: n.max(h.vertex_count()),
            max: MAX_ISOMORPHISM_VERTICES,
        });
    }
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    if n == 0 {
        return Ok(true);
    }

    let cg = refine(g);
    let ch = refine(h);
    if colour_histogram(&cg) != colour_histogram(&ch) {
        return Ok(false);
    }

    // Map vertices of g in order of increasing colour-class size, so the most
    // constrained vertices are assigned first.
    let hist = colour_histogram(&cg);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (hist[&cg[v]], cg[v], v));

    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(assign(g, h, &cg, &ch, &order, 0, &mut mapping, &mut used))
}

fn colour_histogram(colours: &[usize]) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for &c in colours {
        *hist.entry(c).or_insert(0) += 1;
    }
    hist
}

/// 1-dimensional Weisfeiler–Leman refinement. Colour ids are canonical
/// (assigned by sorted signature), so they are comparable across graphs.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colours: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbours(v).map(|u| colours[u]).collect();
                nb.sort_unstable();
                (colours[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .drain(..)
            .map(|s| sorted.binary_search(&s).unwrap())
            .collect();
        if next == colours {
            return colours;
        }
        colours = next;
    }
}

fn assign(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    pos: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    for w in 0..h.vertex_count() {
        if used[w] || ch[w] != cg[v] {
            continue;
        }
        let consistent = order[..pos]
            .iter()
            .all(|&p| g.has_edge(v, p) == h.has_edge(w, mapping[p]));
        if consistent {
            mapping[v] = w;
            used[w] = true;
            if assign(g, h, cg, ch, order, pos + 1, mapping, used) {
                return true;
            }
            used[w] = false;
            mapping[v] = usize::MAX;
        }
    }
    false
}
