//! Property tests for the structural invariants: degree sums, complement
//! involution, block partitioning, solver-vs-oracle agreement, availability
//! intervals, colouring reductions, list monotonicity, and format round
//! trips.

use circ_crit::colour::{
    available_colours, circular_chromatic_number, count_colourings_oracle, find_colouring,
    is_valid_colouring, reduce_nonsurjective, AvailabilityInterval, CircularTarget,
};
use circ_crit::critical::chromatic_number;
use circ_crit::graph::Graph;
use circ_crit::lists::{solve_list, ListAssignment};
use circ_crit::{construct, io};
use num_rational::Ratio;
use proptest::prelude::*;

/// Random graph on up to `max_n` vertices: edges picked by a bitmask over the
/// vertex pairs.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, bits)| {
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if bits >> (k % 64) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges)
    })
}

fn small_targets() -> Vec<CircularTarget> {
    [(3, 1), (5, 2), (7, 2), (7, 3), (4, 1)]
        .into_iter()
        .map(|(p, q)| CircularTarget::new(p, q).unwrap())
        .collect()
}

proptest! {
    #[test]
    fn degree_sum_is_twice_edge_count(g in arb_graph(8)) {
        let total: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(8)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn every_edge_lies_in_exactly_one_block(g in arb_graph(8)) {
        let d = g.blocks();
        for (u, v) in g.edges() {
            let holding = d.blocks.iter().filter(|b| b.contains(&u) && b.contains(&v)).count();
            prop_assert_eq!(holding, 1);
        }
        // and every vertex appears in at least one block
        for v in 0..g.vertex_count() {
            prop_assert!(d.blocks.iter().any(|b| b.contains(&v)));
        }
    }

    #[test]
    fn solver_agrees_with_oracle(g in arb_graph(6)) {
        for t in small_targets() {
            let found = find_colouring(&g, t);
            let count = count_colourings_oracle(&g, t).unwrap();
            prop_assert_eq!(found.is_some(), count > 0, "target {}", t);
            if let Some(c) = found {
                prop_assert!(is_valid_colouring(&g, &c));
            }
        }
    }

    #[test]
    fn availability_matches_direct_intersection(g in arb_graph(7), seed in any::<u64>()) {
        // colour a random subset of vertices arbitrarily but validly at (7,2)
        let t = CircularTarget::new(7, 2).unwrap();
        let n = g.vertex_count();
        let mut partial: Vec<Option<usize>> = vec![None; n];
        let mut state = seed;
        for v in 0..n {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if state % 3 == 0 {
                partial[v] = Some((state >> 8) as usize % 7);
            }
        }
        for v in 0..n {
            if partial[v].is_some() {
                continue;
            }
            let avail = available_colours(&g, t, &partial, v);
            // direct set intersection, independent of the interval logic
            let mut expected: Vec<usize> = (0..7).collect();
            let mut constrained = false;
            for u in g.neighbours(v) {
                if let Some(c) = partial[u] {
                    constrained = true;
                    expected.retain(|&d| t.adjacent_colours(c, d));
                }
            }
            prop_assert_eq!(avail.to_colours(7), expected.clone());
            // at p/q < 4 the result is never the Explicit fallback
            match avail {
                AvailabilityInterval::Explicit(_) => prop_assert!(false, "explicit set at p/q < 4"),
                AvailabilityInterval::Full => prop_assert!(!constrained || expected.len() == 7),
                _ => {}
            }
        }
    }

    #[test]
    fn nonsurjective_colourings_reduce(g in arb_graph(6)) {
        let t = CircularTarget::new(7, 2).unwrap();
        if let Some(c) = find_colouring(&g, t) {
            if !c.is_surjective() {
                let r = reduce_nonsurjective(&g, &c).unwrap();
                prop_assert_eq!((r.target.p(), r.target.q()), (3, 1));
                prop_assert!(is_valid_colouring(&g, &r));
            }
        }
    }

    #[test]
    fn chi_c_is_at_most_chi(g in arb_graph(7)) {
        prop_eq_or_less(&g)?;
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(10)) {
        prop_assert_eq!(io::parse_graph6(&io::to_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(io::parse_sparse6(&io::to_sparse6(&g)).unwrap(), g.clone());
        prop_assert_eq!(io::parse_edge_list(&io::to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn enlarging_lists_preserves_solvability(g in arb_graph(5), seed in any::<u64>()) {
        let t = CircularTarget::new(7, 2).unwrap();
        let n = g.vertex_count();
        let mut state = seed;
        let mut masks = Vec::with_capacity(n);
        for _ in 0..n {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let m = (state >> 13) & 0x7f;
            masks.push(if m == 0 { 1 } else { m });
        }
        let l = ListAssignment::from_masks(7, masks.clone());
        let solvable = solve_list(&g, t, &l).unwrap().is_some();
        if solvable {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let v = (state as usize >> 7) % n;
            let extra = 1u64 << ((state >> 3) % 7);
            let mut bigger = masks;
            bigger[v] |= extra;
            let l2 = ListAssignment::from_masks(7, bigger);
            prop_assert!(solve_list(&g, t, &l2).unwrap().is_some());
        }
    }

    #[test]
    fn solve_list_agrees_with_product_enumeration(g in arb_graph(5), seed in any::<u64>()) {
        let t = CircularTarget::new(7, 2).unwrap();
        let n = g.vertex_count();
        let mut state = seed;
        let mut masks = Vec::with_capacity(n);
        for _ in 0..n {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let m = (state >> 13) & 0x7f;
            masks.push(if m == 0 { 1 } else { m });
        }
        let l = ListAssignment::from_masks(7, masks);
        let solver = solve_list(&g, t, &l).unwrap();
        let brute = brute_force_list(&g, t, &l);
        prop_assert_eq!(solver.is_some(), brute);
    }
}

fn prop_eq_or_less(g: &Graph) -> Result<(), TestCaseError> {
    let chi_c = circular_chromatic_number(g);
    let chi = chromatic_number(g);
    prop_assert!(chi_c <= Ratio::from_integer(chi as i64));
    Ok(())
}

/// Restricted brute-force oracle: enumerates the full product of the lists
/// and checks edges directly. Kept independent of the solver.
fn brute_force_list(g: &Graph, t: CircularTarget, l: &ListAssignment) -> bool {
    let n = g.vertex_count();
    let lists: Vec<Vec<usize>> = (0..n).map(|v| l.list(v)).collect();
    let product: usize = lists.iter().map(|c| c.len()).product();
    assert!(product <= 1 << 20, "instance too large for the brute force");
    let mut choice = vec![0usize; n];
    'outer: loop {
        let assignment: Vec<usize> = (0..n).map(|v| lists[v][choice[v]]).collect();
        let ok = g
            .edges()
            .iter()
            .all(|&(u, v)| t.adjacent_colours(assignment[u], assignment[v]));
        if ok {
            return true;
        }
        for v in 0..n {
            choice[v] += 1;
            if choice[v] < lists[v].len() {
                continue 'outer;
            }
            choice[v] = 0;
        }
        return false;
    }
}

/// Monotonicity of circular colourability over the fraction lattice with
/// p <= 9, on a spread of small graphs.
#[test]
fn monotonicity_over_the_fraction_lattice() {
    use num_integer::Integer;
    let mut lattice: Vec<CircularTarget> = Vec::new();
    for q in 1..=4usize {
        for p in (2 * q)..=9 {
            if p.gcd(&q) == 1 {
                lattice.push(CircularTarget::new(p, q).unwrap());
            }
        }
    }
    lattice.sort_by_key(|t| t.value());

    let graphs = vec![
        construct::complete(4),
        construct::moser_spindle(),
        construct::cycle(5).unwrap(),
        construct::cycle(7).unwrap(),
        construct::wheel(6).unwrap(),
        construct::path(6),
        construct::grotzsch(),
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]),
    ];
    for g in &graphs {
        let verdicts: Vec<bool> = lattice.iter().map(|&t| find_colouring(g, t).is_some()).collect();
        for i in 0..lattice.len() {
            for j in (i + 1)..lattice.len() {
                if verdicts[i] {
                    assert!(
                        verdicts[j],
                        "colourable at {} but not at {}",
                        lattice[i], lattice[j]
                    );
                }
            }
        }
    }
}

/// The claw-contraction accounting: identifying the claw component of a
/// C6-expansion drops exactly three vertices and six edges.
#[test]
fn claw_contraction_accounting() {
    for base in [
        construct::complete(4),
        construct::wheel(6).unwrap(),
        construct::wheel(8).unwrap(),
    ] {
        let g = construct::c6_expansion(&base, 0).unwrap();
        let report = circ_crit::gallai::gallai_tree(&g, 4);
        let claw = report
            .components
            .iter()
            .find(|c| c.shape == circ_crit::gallai::ComponentShape::Claw)
            .expect("expansion creates a claw");
        let contracted = g.identify_vertices(&claw.vertices);
        assert_eq!(contracted.vertex_count(), g.vertex_count() - 3);
        assert_eq!(contracted.edge_count(), g.edge_count() - 6);
    }
}

/// chi_c equals chi exactly on the odd wheels.
#[test]
fn chi_c_equals_chi_on_odd_wheels() {
    for n in [4usize, 6, 8, 10] {
        let w = construct::wheel(n).unwrap();
        assert_eq!(
            circular_chromatic_number(&w),
            Ratio::from_integer(chromatic_number(&w) as i64)
        );
    }
}
