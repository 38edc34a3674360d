//! Circular cliques `G_{p,q}`, exact `(p,q)`-colouring, lower parents, and
//! the circular chromatic number.

mod solver;

pub use solver::{count_colourings_oracle, find_colouring};

/// Domain-restricted entry into the search engine, for list colouring.
pub(crate) fn solver_entry(g: &Graph, t: CircularTarget, domains: Vec<u64>) -> Option<Vec<usize>> {
    solver::solve_with_domains(g, t, domains, false)
}

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Rational = Ratio<i64>;

/// A colouring target `(p, q)` with `gcd(p,q) = 1` and `p/q >= 2`, naming the
/// circular clique `G_{p,q}`: vertices `0..p`, with `ij` an edge iff
/// `q <= |i-j| <= p-q`.
///
/// The modulus is capped at 64 so colour sets fit in a machine word; every
/// target this crate ever searches has `p <= v(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(usize, usize)", into = "(usize, usize)")]
pub struct CircularTarget {
    p: usize,
    q: usize,
}

impl CircularTarget {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if q == 0 || p < 2 * q {
            return Err(Error::InvalidTarget { p, q });
        }
        let g = p.gcd(&q);
        let (p, q) = (p / g, q / g);
        if p > 64 {
            return Err(Error::TargetTooLarge { p, q });
        }
        Ok(CircularTarget { p, q })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// `p/q` as an exact rational.
    pub fn value(&self) -> Rational {
        Ratio::new(self.p as i64, self.q as i64)
    }

    /// True iff colours `a` and `b` may appear on adjacent vertices.
    pub fn adjacent_colours(&self, a: usize, b: usize) -> bool {
        let d = a.abs_diff(b);
        self.q <= d && d <= self.p - self.q
    }

    /// Bitmask over `0..p` of every colour, `(1 << p) - 1`.
    pub fn full_mask(&self) -> u64 {
        full_mask(self.p)
    }

    /// `N_{G_{p,q}}(c)` as a bitmask: the cyclic interval `[c+q, c+p-q]`.
    pub fn neighbour_mask(&self, c: usize) -> u64 {
        debug_assert!(c < self.p);
        let mut mask = 0u64;
        for d in 0..self.p {
            if self.adjacent_colours(c, d) {
                mask |= 1 << d;
            }
        }
        mask
    }

    /// The unique `(p', q')` with `p' < p`, `p*q' - p'*q = 1` and
    /// `p'/q' >= 2`. Undefined for `(2,1)`, the bottom of the order.
    pub fn lower_parents(&self) -> Result<CircularTarget> {
        for q1 in 1..=self.q {
            let num = self.p * q1;
            if num >= 1 && (num - 1) % self.q == 0 {
                let p1 = (num - 1) / self.q;
                if p1 >= 1 && p1 < self.p && p1 >= 2 * q1 {
                    return Ok(CircularTarget { p: p1, q: q1 });
                }
            }
        }
        Err(Error::NoLowerParents)
    }
}

impl TryFrom<(usize, usize)> for CircularTarget {
    type Error = Error;
    fn try_from((p, q): (usize, usize)) -> Result<Self> {
        CircularTarget::new(p, q)
    }
}

impl From<CircularTarget> for (usize, usize) {
    fn from(t: CircularTarget) -> Self {
        (t.p, t.q)
    }
}

impl std::fmt::Display for CircularTarget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

pub(crate) fn full_mask(p: usize) -> u64 {
    if p >= 64 {
        u64::MAX
    } else {
        (1u64 << p) - 1
    }
}

/// The circular clique `G_{p,q}` itself.
pub fn circular_clique(t: CircularTarget) -> Graph {
    let mut g = Graph::new(t.p);
    for i in 0..t.p {
        for j in (i + 1)..t.p {
            if t.adjacent_colours(i, j) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// A total `(p,q)`-colouring: vertex `v` receives `assignment[v]` in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ColouringDto", into = "ColouringDto")]
pub struct Colouring {
    pub target: CircularTarget,
    pub assignment: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ColouringDto {
    p: usize,
    q: usize,
    assignment: Vec<usize>,
}

impl TryFrom<ColouringDto> for Colouring {
    type Error = Error;
    fn try_from(d: ColouringDto) -> Result<Self> {
        let target = CircularTarget::new(d.p, d.q)?;
        if d.assignment.iter().any(|&c| c >= target.p()) {
            return Err(Error::InvalidColouring);
        }
        Ok(Colouring {
            target,
            assignment: d.assignment,
        })
    }
}

impl From<Colouring> for ColouringDto {
    fn from(c: Colouring) -> Self {
        ColouringDto {
            p: c.target.p,
            q: c.target.q,
            assignment: c.assignment,
        }
    }
}

impl Colouring {
    pub fn new(target: CircularTarget, assignment: Vec<usize>) -> Self {
        Colouring { target, assignment }
    }

    /// All vertices receiving colour `t`.
    pub fn colour_class(&self, t: usize) -> Vec<usize> {
        (0..self.assignment.len())
            .filter(|&v| self.assignment[v] == t)
            .collect()
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.target.p()).all(|c| self.assignment.contains(&c))
    }

    /// `N_t(X)`: the neighbours of `xs` (outside `xs`) coloured `t`.
    pub fn neighbours_coloured(&self, g: &Graph, xs: &[usize], t: usize) -> Vec<usize> {
        g.neighbourhood(xs)
            .into_iter()
            .filter(|&v| self.assignment[v] == t)
            .collect()
    }
}

/// True iff every edge `uv` satisfies `q <= |f(u)-f(v)| <= p-q`.
pub fn is_valid_colouring(g: &Graph, c: &Colouring) -> bool {
    if c.assignment.len() != g.vertex_count() {
        return false;
    }
    if c.assignment.iter().any(|&x| x >= c.target.p()) {
        return false;
    }
    g.edges()
        .iter()
        .all(|&(u, v)| c.target.adjacent_colours(c.assignment[u], c.assignment[v]))
}

/// Set of colours available at a vertex given a partial colouring: the
/// intersection of `N_{G_{p,q}}(f(u))` over coloured neighbours `u`. When
/// `p/q < 4` a non-full, non-empty availability set is always a single
/// cyclic interval; above that it can be an arbitrary set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AvailabilityInterval {
    /// `v` has no coloured neighbour: all of `[0, p-1]`.
    Full,
    Empty,
    /// The cyclic interval `[lo, hi]`, endpoints inclusive, wrapping mod p.
    Interval { lo: usize, hi: usize },
    /// Fallback for `p/q >= 4`, where availability need not be an interval.
    Explicit(Vec<usize>),
}

impl AvailabilityInterval {
    pub fn to_colours(&self, p: usize) -> Vec<usize> {
        match self {
            AvailabilityInterval::Full => (0..p).collect(),
            AvailabilityInterval::Empty => Vec::new(),
            AvailabilityInterval::Interval { lo, hi } => {
                let mut out = Vec::new();
                let mut c = *lo;
                loop {
                    out.push(c);
                    if c == *hi {
                        break;
                    }
                    c = (c + 1) % p;
                }
                out.sort_unstable();
                out
            }
            AvailabilityInterval::Explicit(cs) => cs.clone(),
        }
    }
}

/// Availability of the uncoloured vertex `v` under a partial colouring
/// (`None` entries are uncoloured).
///
/// # Panics
/// Panics if `v` is out of range, already coloured, or `partial` has the
/// wrong length.
pub fn available_colours(
    g: &Graph,
    t: CircularTarget,
    partial: &[Option<usize>],
    v: usize,
) -> AvailabilityInterval {
    assert_eq!(partial.len(), g.vertex_count(), "partial colouring length mismatch");
    assert!(v < g.vertex_count(), "vertex {v} out of range");
    assert!(partial[v].is_none(), "vertex {v} is already coloured");
    let mut mask = t.full_mask();
    let mut constrained = false;
    for u in g.neighbours(v) {
        if let Some(c) = partial[u] {
            assert!(c < t.p(), "colour {c} out of range for p={}", t.p());
            mask &= t.neighbour_mask(c);
            constrained = true;
        }
    }
    classify_mask(mask, t.p(), constrained)
}

pub(crate) fn classify_mask(mask: u64, p: usize, constrained: bool) -> AvailabilityInterval {
    if !constrained || mask == full_mask(p) {
        return AvailabilityInterval::Full;
    }
    if mask == 0 {
        return AvailabilityInterval::Empty;
    }
    if let Some((lo, hi)) = as_cyclic_interval(mask, p) {
        AvailabilityInterval::Interval { lo, hi }
    } else {
        let cs = (0..p).filter(|&c| mask >> c & 1 == 1).collect();
        AvailabilityInterval::Explicit(cs)
    }
}

/// If the set is a single cyclic interval (and neither empty nor full),
/// returns its endpoints `(lo, hi)`.
pub(crate) fn as_cyclic_interval(mask: u64, p: usize) -> Option<(usize, usize)> {
    if mask == 0 || mask == full_mask(p) {
        return None;
    }
    let bit = |c: usize| mask >> c & 1 == 1;
    let mut lo = None;
    let mut hi = None;
    let mut boundaries = 0;
    for c in 0..p {
        let prev = (c + p - 1) % p;
        if bit(c) && !bit(prev) {
            lo = Some(c);
            boundaries += 1;
        }
        if bit(c) && !bit((c + 1) % p) {
            hi = Some(c);
        }
    }
    if boundaries == 1 {
        Some((lo.unwrap(), hi.unwrap()))
    } else {
        None
    }
}

/// Reduces a valid non-surjective `(p,q)`-colouring to a valid colouring at
/// the lower parents `(p',q')`, by composing with a homomorphism
/// `G_{p,q} - x -> G_{p',q'}` found by the solver (x the smallest unused
/// colour).
pub fn reduce_nonsurjective(g: &Graph, c: &Colouring) -> Result<Colouring> {
    if !is_valid_colouring(g, c) {
        return Err(Error::InvalidColouring);
    }
    let p = c.target.p();
    let missing = (0..p).find(|x| !c.assignment.contains(x));
    let Some(x) = missing else {
        return Err(Error::SurjectiveColouring { p });
    };
    let parents = c.target.lower_parents()?;
    let clique_minus_x = circular_clique(c.target).delete_vertex(x);
    let hom = find_colouring(&clique_minus_x, parents)
        .expect("G_{p,q} - x is homomorphically equivalent to its lower parents");
    // vertex index of colour `c` inside G_{p,q} - x
    let shifted = |col: usize| if col > x { col - 1 } else { col };
    let assignment = c
        .assignment
        .iter()
        .map(|&col| hom.assignment[shifted(col)])
        .collect();
    let reduced = Colouring::new(parents, assignment);
    debug_assert!(is_valid_colouring(g, &reduced));
    Ok(reduced)
}

/// `chi_c(G) = inf { p/q : G -> G_{p,q} }`, computed exactly.
///
/// The infimum is attained at a reduced fraction with `p <= v(G)`, so the
/// search enumerates that fraction lattice in Farey order and binary-searches
/// it using monotonicity (`p/q <= p'/q'` implies `G_{p,q} -> G_{p',q'}`).
/// Edgeless graphs (including a single vertex) get `chi_c = 1`.
pub fn circular_chromatic_number(g: &Graph) -> Rational {
    if g.edge_count() == 0 {
        return Ratio::new(1, 1);
    }
    let n = g.vertex_count();
    let mut candidates: Vec<CircularTarget> = Vec::new();
    for q in 1..=n {
        for p in (2 * q)..=n {
            if p.gcd(&q) == 1 {
                candidates.push(CircularTarget { p, q });
            }
        }
    }
    candidates.sort_by_key(|t| t.value());
    // least colourable candidate; (chi,1) guarantees one exists
    let mut lo = 0;
    let mut hi = candidates.len() - 1;
    debug_assert!(find_colouring(g, candidates[hi]).is_some());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if find_colouring(g, candidates[mid]).is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    candidates[lo].value()
}
