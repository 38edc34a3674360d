//! Density bounds for 4-critical graphs and a computational replay of the
//! discharging argument. All arithmetic is exact rational; no floating point
//! enters the ledger.

use num_rational::Ratio;

use crate::colour::{find_colouring, CircularTarget, Rational};
use crate::critical;
use crate::error::{Error, Result};
use crate::gallai::{self, ComponentShape};
use crate::graph::Graph;

/// 17/5, the per-vertex charge threshold.
pub fn charge_threshold() -> Rational {
    Ratio::new(17, 5)
}

/// The Kostochka-Yancey lower bound
/// `ceil(((k+1)(k-2)v - k(k-3)) / (2(k-1)))` on the edge count of a
/// `k`-critical graph, exact integer arithmetic.
pub fn kostochka_yancey_bound(k: usize, v: usize) -> Result<i64> {
    if k < 4 || v < k {
        return Err(Error::Precondition(format!(
            "bound needs k >= 4 and v >= k, got k={k}, v={v}"
        )));
    }
    Ok(ky_ceil(k as i64, v as i64))
}

fn ky_ceil(k: i64, v: i64) -> i64 {
    let num = (k + 1) * (k - 2) * v - k * (k - 3);
    let den = 2 * (k - 1);
    num.div_euclid(den) + if num.rem_euclid(den) != 0 { 1 } else { 0 }
}

/// Whether `e` meets the k=4 Kostochka-Yancey formula with equality as a
/// rational, i.e. `e = (5v - 2)/3` exactly. Equality characterizes the
/// 4-Ore graphs.
pub fn ky_equality(v: usize, e: usize) -> bool {
    3 * e as i64 == 5 * v as i64 - 2
}

/// The three density bounds evaluated on one graph (k = 4 throughout).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub v: usize,
    pub e: usize,
    /// `ceil((10v - 4)/6)`
    pub ky_bound: i64,
    /// `17v/10`
    pub main_bound: Rational,
    /// `(27v - 20)/15`
    pub conj_bound: Rational,
    pub satisfies_ky: bool,
    pub satisfies_main: bool,
    pub satisfies_conj: bool,
    pub ky_equality: bool,
}

pub fn evaluate_bounds(g: &Graph) -> BoundReport {
    let v = g.vertex_count();
    let e = g.edge_count();
    let ky_bound = ky_ceil(4, v as i64);
    let main_bound = Ratio::new(17 * v as i64, 10);
    let conj_bound = Ratio::new(27 * v as i64 - 20, 15);
    let e_rat = Ratio::from_integer(e as i64);
    BoundReport {
        v,
        e,
        ky_bound,
        main_bound,
        conj_bound,
        satisfies_ky: (e as i64) >= ky_bound,
        satisfies_main: e_rat >= main_bound,
        satisfies_conj: e_rat >= conj_bound,
        ky_equality: ky_equality(v, e),
    }
}

/// One application of the discharging rule: `from` (of degree at least 4)
/// sends `(deg - 17/5) / deg_3` to its degree-3 neighbour `to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeTransfer {
    pub from: usize,
    pub to: usize,
    pub amount: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCharge {
    /// a connected component of `D_3(G)`, ascending original vertex ids
    pub vertices: Vec<usize>,
    pub shape: ComponentShape,
    pub charge: Rational,
    /// `17/5 * v(P)`
    pub threshold: Rational,
    pub safe: bool,
}

/// The full exact ledger of the discharging rule on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    /// initial charge `deg(v)` per vertex
    pub initial: Vec<Rational>,
    pub sent: Vec<ChargeTransfer>,
    /// `ch(v)` after the rule
    pub final_charge: Vec<Rational>,
    /// per-component safety over the components of `D_3(G)`
    pub components: Vec<ComponentCharge>,
}

impl ChargeLedger {
    /// Charge conservation: the rule only moves charge, so the final total
    /// must equal the initial total, which is `2e(G)`.
    pub fn conserves(&self) -> bool {
        let before: Rational = self.initial.iter().sum();
        let after: Rational = self.final_charge.iter().sum();
        before == after
    }

    pub fn total(&self) -> Rational {
        self.initial.iter().sum()
    }

    pub fn all_components_safe(&self) -> bool {
        self.components.iter().all(|c| c.safe)
    }
}

/// Runs the discharging rule: every vertex of degree at least 4 with at
/// least one degree-3 neighbour sends `(deg(v) - 17/5)/deg_3(v)` to each of
/// them; senders without degree-3 neighbours send nothing (the rule divides
/// by `deg_3`, so that is the only reading that keeps it defined). Safety of
/// every component of `D_3(G)` is evaluated regardless of its shape.
pub fn discharging_audit(g: &Graph) -> ChargeLedger {
    let n = g.vertex_count();
    let initial: Vec<Rational> = (0..n).map(|v| Ratio::from_integer(g.degree(v) as i64)).collect();
    let mut final_charge = initial.clone();
    let mut sent = Vec::new();
    for v in 0..n {
        let deg = g.degree(v);
        if deg < 4 {
            continue;
        }
        let deg3 = g.degree_count(v, 3);
        if deg3 == 0 {
            continue;
        }
        let amount = (Ratio::from_integer(deg as i64) - charge_threshold())
            / Ratio::from_integer(deg3 as i64);
        for u in g.neighbours(v) {
            if g.degree(u) == 3 {
                sent.push(ChargeTransfer { from: v, to: u, amount });
                final_charge[v] -= amount;
                final_charge[u] += amount;
            }
        }
    }

    let report = gallai::gallai_tree(g, 4);
    let components = report
        .components
        .iter()
        .map(|comp| {
            let charge: Rational = comp.vertices.iter().map(|&v| final_charge[v]).sum();
            let threshold = charge_threshold() * Ratio::from_integer(comp.vertices.len() as i64);
            ComponentCharge {
                vertices: comp.vertices.clone(),
                shape: comp.shape,
                charge,
                threshold,
                safe: charge >= threshold,
            }
        })
        .collect();

    let ledger = ChargeLedger {
        initial,
        sent,
        final_charge,
        components,
    };
    debug_assert!(ledger.conserves());
    ledger
}

/// Verifies the main density theorem over a corpus: every member must be
/// certified 4-critical with no `(7,2)`-colouring (an error otherwise), and
/// then every member not isomorphic to `K_4` or `W_6` must satisfy
/// `e >= 17v/10`.
pub fn verify_main_theorem(corpus: &[Graph]) -> Result<bool> {
    for (i, g) in corpus.iter().enumerate() {
        if !critical::is_k_critical(g, 4).is_critical {
            return Err(Error::Precondition(format!("corpus graph {i} is not 4-critical")));
        }
        if find_colouring(g, CircularTarget::new(7, 2).unwrap()).is_some() {
            return Err(Error::Precondition(format!(
                "corpus graph {i} admits a (7,2)-colouring"
            )));
        }
    }
    Ok(corpus.iter().all(|g| is_theorem_exception(g) || {
        Ratio::from_integer(g.edge_count() as i64) >= Ratio::new(17 * g.vertex_count() as i64, 10)
    }))
}

/// The two graphs excluded by the main theorem: `K_4` and `W_6`.
pub fn is_theorem_exception(g: &Graph) -> bool {
    let n = g.vertex_count();
    (n == 4 && g.is_complete()) || (n == 6 && gallai::is_odd_wheel(g))
}

/// The implication behind the discharging argument, checked directly: on a
/// graph of minimum degree at least 3, if every degree-3 component is safe
/// then summing charges gives `2e = sum ch(v) >= 17v/5`, i.e. the main
/// bound. Vacuously true when a component is unsafe or some vertex has
/// degree below 3.
pub fn safe_components_imply_bound(g: &Graph) -> bool {
    if g.vertex_count() == 0 || g.min_degree() < 3 {
        return true;
    }
    let ledger = discharging_audit(g);
    if !ledger.all_components_safe() {
        return true;
    }
    Ratio::from_integer(g.edge_count() as i64) >= Ratio::new(17 * g.vertex_count() as i64, 10)
}
