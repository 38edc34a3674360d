//! Acceptance suite. Each test verifies one numbered criterion end to end at
//! its stated tolerance and prints a single pass/fail line
//! (`cargo test --test acceptance -- --nocapture` to see them all).

use std::time::{Duration, Instant};

use circ_crit::colour::{
    circular_chromatic_number, count_colourings_oracle, find_colouring, is_valid_colouring,
    CircularTarget,
};
use circ_crit::construct::{self, CorpusEntry};
use circ_crit::critical::{self, chromatic_number};
use circ_crit::density;
use circ_crit::gallai::{self, ComponentShape};
use circ_crit::graph::Graph;
use circ_crit::lists::{
    self, check_clique_klists, check_near_uniform_clique, interval_mask, solve_list,
    ListAssignment,
};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn run(number: usize, name: &str, budget: Option<Duration>, f: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let mut outcome = f();
    let elapsed = start.elapsed();
    if let (Ok(()), Some(limit)) = (&outcome, budget) {
        if elapsed > limit {
            outcome = Err(format!("runtime {elapsed:?} exceeds the {limit:?} budget"));
        }
    }
    match &outcome {
        Ok(()) => println!("criterion {number}: PASS [{elapsed:.2?}] {name}"),
        Err(e) => println!("criterion {number}: FAIL [{elapsed:.2?}] {name}: {e}"),
    }
    if let Err(e) = outcome {
        panic!("criterion {number} failed: {e}");
    }
}

fn t(p: usize, q: usize) -> CircularTarget {
    CircularTarget::new(p, q).unwrap()
}

fn certified_no72_corpus() -> Vec<CorpusEntry> {
    construct::corpus_generate(1, 16)
        .into_iter()
        .filter(|e| e.tags.no_7_2_colouring == Some(true))
        .collect()
}

#[test]
fn criterion_1_moser_spindle() {
    run(1, "Moser spindle certification", Some(Duration::from_secs(1)), || {
        let m = construct::moser_spindle();
        ensure!(critical::is_k_critical(&m, 4).is_critical, "spindle must be 4-critical");
        ensure!(find_colouring(&m, t(3, 1)).is_none(), "spindle must have no (3,1)-colouring");
        let c = find_colouring(&m, t(7, 2)).ok_or("spindle must have a (7,2)-colouring")?;
        ensure!(is_valid_colouring(&m, &c), "returned colouring must validate");
        ensure!(
            circular_chromatic_number(&m) == Ratio::new(7, 2),
            "chi_c must be exactly 7/2"
        );
        let e = m.edge_count() as i64;
        ensure!(e == 11, "spindle has 11 edges");
        ensure!(
            density::kostochka_yancey_bound(4, 7).unwrap() == 11,
            "KY bound at (4,7) is 11"
        );
        ensure!(density::ky_equality(7, 11), "spindle meets the KY bound with equality");
        ensure!(
            Ratio::from_integer(e) < Ratio::new(169, 15),
            "11 < 169/15 certifies sharpness"
        );
        Ok(())
    });
}

#[test]
fn criterion_2_odd_wheels() {
    run(2, "odd wheels W4..W12", Some(Duration::from_secs(10)), || {
        for n in [4usize, 6, 8, 10, 12] {
            let w = construct::wheel(n).unwrap();
            ensure!(
                circular_chromatic_number(&w) == Ratio::new(4, 1),
                "chi_c(W{n}) must be 4"
            );
            ensure!(critical::is_k_critical(&w, 4).is_critical, "W{n} must be 4-critical");
            ensure!(find_colouring(&w, t(7, 2)).is_none(), "W{n} must have no (7,2)-colouring");
        }
        for n in [5usize, 7, 9, 11] {
            let w = construct::wheel(n).unwrap();
            ensure!(chromatic_number(&w) == 3, "even wheel W{n} must have chi = 3");
        }
        Ok(())
    });
}

#[test]
fn criterion_3_c6_expansion_preservation() {
    run(3, "C6-expansion preservation", Some(Duration::from_secs(60)), || {
        let mut bases: Vec<(String, Graph)> = vec![("K4".into(), construct::complete(4))];
        for n in [6usize, 8, 10] {
            bases.push((format!("W{n}"), construct::wheel(n).unwrap()));
        }
        // one iterated expansion
        bases.push((
            "c6exp(K4)".into(),
            construct::c6_expansion(&construct::complete(4), 0).unwrap(),
        ));
        for (name, base) in bases {
            let v = (0..base.vertex_count())
                .find(|&v| base.degree(v) == 3)
                .ok_or(format!("{name} has no degree-3 vertex"))?;
            let image = construct::c6_expansion(&base, v).unwrap();
            ensure!(
                image.vertex_count() == base.vertex_count() + 3,
                "{name}: vertex count must grow by 3"
            );
            ensure!(
                image.edge_count() == base.edge_count() + 6,
                "{name}: edge count must grow by 6"
            );
            ensure!(
                critical::is_k_critical(&image, 4).is_critical,
                "{name}: image must be 4-critical"
            );
            ensure!(
                find_colouring(&image, t(7, 2)).is_none(),
                "{name}: image must have no (7,2)-colouring"
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_4_indicator_equivalence() {
    run(4, "P4 indicator equivalence", None, || {
        let graphs: Vec<(String, Graph)> = vec![
            ("K4".into(), construct::complete(4)),
            ("C5".into(), construct::cycle(5).unwrap()),
            ("Moser".into(), construct::moser_spindle()),
            ("W6".into(), construct::wheel(6).unwrap()),
            (
                "c6exp(K4)".into(),
                construct::c6_expansion(&construct::complete(4), 0).unwrap(),
            ),
        ];
        for (name, g) in graphs {
            let composed = construct::indicator_compose(&g, 4).unwrap();
            ensure!(
                composed.vertex_count() == 2 * g.edge_count() + g.vertex_count(),
                "{name}: composed vertex count"
            );
            ensure!(
                composed.edge_count() == 3 * g.edge_count(),
                "{name}: composed edge count"
            );
            let left = find_colouring(&g, t(7, 2)).is_some();
            let right = find_colouring(&composed, t(7, 3)).is_some();
            ensure!(
                left == right,
                "{name}: (7,2)-colourability ({left}) must match C7-colourability of the composition ({right})"
            );
        }
        Ok(())
    });
}

fn exhaustive_odd_cycle_law(len: usize) -> Result<(), String> {
    let g = construct::cycle(len).unwrap();
    let t72 = t(7, 2);
    let base = interval_mask(7, 0, 3);
    let total = 7u64.pow(len as u32 - 1);
    for code in 0..total {
        let mut masks = vec![base];
        let mut x = code;
        for _ in 1..len {
            let lo = (x % 7) as usize;
            masks.push(interval_mask(7, lo, lo + 3));
            x /= 7;
        }
        let uniform = masks.iter().all(|&m| m == base);
        let l = ListAssignment::from_masks(7, masks);
        let solvable = solve_list(&g, t72, &l).map_err(|e| e.to_string())?.is_some();
        if solvable == uniform {
            return Err(format!(
                "C{len}: assignment #{code} is {} but {}",
                if uniform { "uniform" } else { "non-uniform" },
                if solvable { "colourable" } else { "uncolourable" },
            ));
        }
    }
    Ok(())
}

fn randomized_odd_cycle_law(len: usize, trials: usize, seed: u64) -> Result<(), String> {
    let g = construct::cycle(len).unwrap();
    let t72 = t(7, 2);
    for lo in 0..7 {
        let l = ListAssignment::from_masks(7, vec![interval_mask(7, lo, lo + 3); len]);
        ensure!(
            solve_list(&g, t72, &l).unwrap().is_none(),
            "C{len}: uniform [{}..] must be uncolourable",
            lo
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < trials {
        let l = lists::random_four_interval_assignment(&mut rng, len);
        if l.is_uniform() {
            continue;
        }
        ensure!(
            solve_list(&g, t72, &l).unwrap().is_some(),
            "C{len}: random non-uniform assignment #{done} must be colourable"
        );
        done += 1;
    }
    Ok(())
}

/// All 2-subsets (k=2) of a 6-colour universe, or all 3-subset multisets
/// (k=3) of a 12-colour universe with the first list pinned to {0,1,2}: by
/// colour renaming and vertex symmetry this is exhaustive.
fn exhaustive_clique_lists(k: usize) -> Result<(), String> {
    let universe = k * (k + 1);
    let subsets: Vec<u64> = (0..1u64 << universe)
        .filter(|m| m.count_ones() as usize == k)
        .collect();
    match k {
        2 => {
            for &a in &subsets {
                for &b in &subsets {
                    for &c in &subsets {
                        let l = ListAssignment::from_masks(universe, vec![a, b, c]);
                        let uniform = a == b && b == c;
                        let ok = check_clique_klists(2, &l).map_err(|e| e.to_string())?;
                        ensure!(
                            ok == !uniform,
                            "K3 lists {a:b}/{b:b}/{c:b}: colourable={ok}, uniform={uniform}"
                        );
                    }
                }
            }
        }
        3 => {
            let first = 0b111u64;
            let m = subsets.len();
            for i in 0..m {
                for j in i..m {
                    for l3 in j..m {
                        let masks = vec![first, subsets[i], subsets[j], subsets[l3]];
                        let uniform = masks.iter().all(|&x| x == first);
                        let l = ListAssignment::from_masks(universe, masks);
                        let ok = check_clique_klists(3, &l).map_err(|e| e.to_string())?;
                        ensure!(
                            ok == !uniform,
                            "K4 lists #({i},{j},{l3}): colourable={ok}, uniform={uniform}"
                        );
                    }
                }
            }
        }
        _ => return Err(format!("exhaustive sweep not defined for k={k}")),
    }
    Ok(())
}

fn randomized_clique_lists(trials: usize, seed: u64) -> Result<(), String> {
    let k = 4;
    let universe = 20usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // uniform lists always fail: chi(K5) = 5 > 4
    let uniform = ListAssignment::from_masks(universe, vec![0b1111u64; 5]);
    ensure!(
        !check_clique_klists(k, &uniform).unwrap(),
        "uniform 4-lists on K5 must be uncolourable"
    );
    for trial in 0..trials {
        let masks: Vec<u64> = (0..5)
            .map(|_| {
                let mut mask = 0u64;
                while mask.count_ones() < k as u32 {
                    mask |= 1 << rng.random_range(0..universe);
                }
                mask
            })
            .collect();
        let uniform = masks.windows(2).all(|w| w[0] == w[1]);
        let l = ListAssignment::from_masks(universe, masks);
        let ok = check_clique_klists(k, &l).map_err(|e| e.to_string())?;
        ensure!(ok == !uniform, "K5 trial {trial}: colourable={ok}, uniform={uniform}");
    }
    Ok(())
}

#[test]
fn criterion_5_list_colouring_lemmas() {
    run(5, "list-colouring lemma suite", None, || {
        // (a) exhaustive odd-cycle law on C5 and C7, up to colour rotation
        exhaustive_odd_cycle_law(5)?;
        exhaustive_odd_cycle_law(7)?;
        // (b) randomized on C9 and C11
        randomized_odd_cycle_law(9, 500, 9)?;
        randomized_odd_cycle_law(11, 500, 11)?;
        // (c) the P3 counterexample
        let l = ListAssignment::new(7, &[vec![0, 1], vec![5, 6, 0, 1], vec![5, 6]]).unwrap();
        ensure!(
            solve_list(&construct::path(3), t(7, 2), &l).unwrap().is_none(),
            "the P3 counterexample must be uncolourable"
        );
        // (d) near-uniform cliques
        for k in [4usize, 5, 6] {
            ensure!(
                check_near_uniform_clique(k).map_err(|e| e.to_string())?,
                "near-uniform K_{} at k={k} must be colourable",
                k - 1
            );
        }
        // (e) clique k-lists: exhaustive for k <= 3, randomized for k = 4
        exhaustive_clique_lists(2)?;
        exhaustive_clique_lists(3)?;
        randomized_clique_lists(1000, 5)?;
        Ok(())
    });
}

#[test]
fn criterion_6_gallai_audits() {
    run(6, "Gallai structure audits", None, || {
        for entry in certified_no72_corpus() {
            let g = &entry.graph;
            let id = &entry.id;
            ensure!(
                gallai::audit_structure_theorem(g).map_err(|e| e.to_string())?,
                "{id}: structure theorem audit"
            );
            ensure!(
                gallai::audit_path3_structure(g).map_err(|e| e.to_string())?,
                "{id}: path3 audit"
            );
            ensure!(
                gallai::audit_alternating_path(g).map_err(|e| e.to_string())?,
                "{id}: alternating path audit"
            );
            if !(g.vertex_count() == 4 && g.is_complete()) {
                ensure!(
                    gallai::audit_no_kminus1_clique(g, 4).map_err(|e| e.to_string())?,
                    "{id}: no-K3 audit"
                );
            } else {
                // K4 is the theorem's excluded case: the guard must reject it
                ensure!(
                    gallai::audit_no_kminus1_clique(g, 4).is_err(),
                    "{id}: K4 must be rejected by the guard"
                );
            }
        }
        // pinned shapes
        let grotzsch = gallai::gallai_tree(&construct::grotzsch(), 4);
        ensure!(
            grotzsch.components.len() == 5
                && grotzsch.components.iter().all(|c| c.shape == ComponentShape::Isolated),
            "Grotzsch D_3 must be five isolated vertices"
        );
        let claw = gallai::gallai_tree(
            &construct::c6_expansion(&construct::complete(4), 0).unwrap(),
            4,
        );
        ensure!(
            claw.components.len() == 1 && claw.components[0].shape == ComponentShape::Claw,
            "c6exp(K4) D_3 must be a claw"
        );
        let w8 = gallai::gallai_tree(&construct::wheel(8).unwrap(), 4);
        ensure!(
            w8.components.len() == 1
                && w8.components[0].shape == ComponentShape::OddCycle
                && w8.components[0].vertices.len() == 7,
            "W8 D_3 must be the rim C7"
        );
        Ok(())
    });
}

#[test]
fn criterion_7_density_and_discharging() {
    run(7, "density bounds and discharging", None, || {
        let corpus = certified_no72_corpus();
        let graphs: Vec<Graph> = corpus.iter().map(|e| e.graph.clone()).collect();
        ensure!(
            density::verify_main_theorem(&graphs).map_err(|e| e.to_string())?,
            "main theorem must hold on the certified corpus"
        );
        // K4 and W6 are the only members below 17v/10, exactly
        for entry in &corpus {
            let report = density::evaluate_bounds(&entry.graph);
            let exceptional = density::is_theorem_exception(&entry.graph);
            ensure!(
                report.satisfies_main == !exceptional,
                "{}: e >= 17v/10 must fail exactly on K4 and W6",
                entry.id
            );
        }
        ensure!(
            Ratio::from_integer(6) < Ratio::new(34, 5) && Ratio::from_integer(10) < Ratio::new(51, 5),
            "the exceptional inequalities 6 < 34/5 and 10 < 51/5"
        );

        // discharging over the full corpus, colourable members included
        for entry in construct::corpus_generate(1, 16) {
            let g = &entry.graph;
            let ledger = density::discharging_audit(g);
            ensure!(ledger.conserves(), "{}: charge must be conserved", entry.id);
            ensure!(
                ledger.total() == Ratio::from_integer(2 * g.edge_count() as i64),
                "{}: total charge must be 2e",
                entry.id
            );
            // path components are safe on every graph; all components are
            // safe away from the theorem's two exceptions
            for comp in &ledger.components {
                if comp.shape == ComponentShape::Path || comp.shape == ComponentShape::Isolated {
                    ensure!(comp.safe, "{}: degree-3 path component must be safe", entry.id);
                }
            }
            if entry.tags.no_7_2_colouring == Some(true) && !density::is_theorem_exception(g) {
                ensure!(
                    ledger.all_components_safe(),
                    "{}: every degree-3 component must be safe",
                    entry.id
                );
            }
            ensure!(
                density::safe_components_imply_bound(g),
                "{}: safe components must imply the bound",
                entry.id
            );
        }
        // the exceptions really are exceptions: their lone components are unsafe
        for g in [construct::complete(4), construct::wheel(6).unwrap()] {
            let ledger = density::discharging_audit(&g);
            ensure!(
                !ledger.all_components_safe(),
                "K4 and W6 must each carry an unsafe component"
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_8_oracle_equivalence() {
    run(8, "solver vs brute-force oracle", Some(Duration::from_secs(120)), || {
        let targets = [t(3, 1), t(5, 2), t(7, 2), t(7, 3), t(4, 1)];
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for case in 0..200 {
            let n = rng.random_range(3..=8usize);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.random_range(0..2u32) == 1 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges);
            for target in targets {
                let found = find_colouring(&g, target);
                let count = count_colourings_oracle(&g, target).map_err(|e| e.to_string())?;
                ensure!(
                    found.is_some() == (count > 0),
                    "case {case} (n={n}) target {target}: solver={} oracle count={count}",
                    found.is_some()
                );
                if let Some(c) = found {
                    ensure!(is_valid_colouring(&g, &c), "case {case}: colouring must validate");
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_9_complement_hamiltonicity() {
    run(9, "complement Hamiltonicity", None, || {
        let mut checked = Vec::new();
        for entry in construct::corpus_generate(1, 16) {
            let g = &entry.graph;
            if g.vertex_count() > 13 {
                continue;
            }
            if find_colouring(g, t(7, 2)).is_none() {
                continue;
            }
            ensure!(
                critical::is_k_critical(g, 4).is_critical,
                "{}: corpus member must be 4-critical",
                entry.id
            );
            ensure!(
                g.complement().has_hamiltonian_cycle(),
                "{}: complement must contain a Hamiltonian cycle",
                entry.id
            );
            checked.push(entry.id);
        }
        ensure!(
            checked.iter().any(|id| id == "moser"),
            "the Moser spindle must be among the checked graphs, got {checked:?}"
        );
        ensure!(checked.len() >= 2, "expected 4-Ore samples besides the spindle, got {checked:?}");
        Ok(())
    });
}
