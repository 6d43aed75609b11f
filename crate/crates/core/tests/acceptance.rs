//! Exit criteria. Every check is exact (zero tolerance); run with
//! `cargo test --test acceptance -- --nocapture` to see one line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use gridspectra::cliques::{maximal_cliques, CliqueConfig};
use gridspectra::lines::{
    check_intersecting_pair_orders, check_line_count, check_order_histogram, check_two_lines_per_vertex,
    check_vertex_line_profile, find_lines,
};
use gridspectra::reconstruct::{quotient, twin_classes, GridVerdict, Stage};
use gridspectra::regularity::{local_valency_stats, max_coclique_order, regularity_profile};
use gridspectra::spectra::{
    expected_spectrum, grid_spectrum, verify_a3_classification, verify_hoffman_identity, verify_spectrum,
    verify_walk_regularity, A3Classification,
};
use gridspectra::{build_grid, build_shrikhande, clique_extension, local_graph, run_pipeline, Graph, Verdict};
use rand::Rng;

const SPECTRUM_TIME_BUDGET: Duration = Duration::from_secs(5);

fn c1_spectrum_exactness() {
    let start = Instant::now();
    for (s, t) in PARAMS {
        let g = grid_extension(s, t);
        let check = verify_spectrum(&g, &expected_spectrum(params(s, t)).unwrap()).unwrap();
        assert!(check.holds, "({s},{t}): {:?}", check.witness);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < SPECTRUM_TIME_BUDGET, "took {elapsed:?}");
}

fn c2_hoffman_and_walk_regularity() {
    for (s, t) in PARAMS {
        let (g, p) = (grid_extension(s, t), params(s, t));
        assert!(verify_hoffman_identity(&g, p).unwrap().holds, "({s},{t})");
        let w = verify_walk_regularity(&g, 3).unwrap();
        assert!(w.holds, "({s},{t})");
        assert_eq!(w.diagonal(3), Some(A3Classification::for_params(p).diag_value), "({s},{t})");
    }
    assert_eq!(verify_walk_regularity(&grid_extension(2, 2), 3).unwrap().diagonal(3), Some(40));
}

fn c3_a3_classification() {
    for (s, t) in PARAMS {
        let check = verify_a3_classification(&grid_extension(s, t), params(s, t)).unwrap();
        assert!(check.holds, "({s},{t}): {:?}", check.first_violation);
    }
}

fn c4_local_identities() {
    for (s, t) in PARAMS {
        let (g, p) = (grid_extension(s, t), params(s, t));
        let want = (s * s * t * t * (s - 1)) as i128;
        for v in 0..g.order() {
            let st = local_valency_stats(&g, v, p).unwrap();
            assert!(st.all_ok(), "({s},{t}) vertex {v}: {st:?}");
            assert_eq!(st.centered_square_sum, want);
        }
    }
    let at = |s, t| local_valency_stats(&grid_extension(s, t), 0, params(s, t)).unwrap().centered_square_sum;
    assert_eq!(at(2, 2), 16);
    assert_eq!(at(2, 3), 36);
}

fn c5_line_structure() {
    for (s, t) in PARAMS {
        let (g, p) = (grid_extension(s, t), params(s, t));
        let ls = find_lines(&g, p, CliqueConfig::default()).unwrap();
        assert_eq!(ls.delta, 2 * t as usize + 2, "({s},{t})");
        assert!(ls.lines.iter().all(|l| l.order() == (s * (t + 1)) as usize));
        assert!(check_line_count(&ls, p));
        assert!(check_two_lines_per_vertex(&ls, g.order()).holds);
        for v in 0..g.order() {
            let prof = check_vertex_line_profile(&g, &ls, v, p).unwrap();
            assert!(prof.ell_plus_m_ok && prof.order_bounds_ok, "({s},{t}) vertex {v}");
        }
        assert!(check_intersecting_pair_orders(&ls, p).holds);
        let h = check_order_histogram(&ls, p);
        assert!(h.eq_main && h.delta_bounds && h.eq_alpha, "({s},{t}): {h:?}");
        assert_eq!(ls.alpha, 0);
        let weighted: u64 = (1..=2 * s as u64).zip(&ls.q).map(|(i, q)| (s as u64 * (t as u64 - 1) + i) * q).sum();
        assert_eq!(weighted, 2 * s as u64 * (t as u64 + 1).pow(2));
    }
}

fn c6_reconstruction_round_trip() {
    for (s, t) in PARAMS {
        let (g, p) = (grid_extension(s, t), params(s, t));
        let report = run_pipeline(&g, p, false);
        assert_eq!(report.verdict, Verdict::IsGridExtension, "({s},{t})\n{report}");
        assert_eq!(report.quotient_spectrum, Some(grid_spectrum(t).unwrap()));

        // the coordinate map is an isomorphism onto the (t+1)-grid
        let id = report.identification.as_ref().unwrap();
        assert_eq!(id.verdict, GridVerdict::Grid);
        let coords = id.coordinates.as_ref().unwrap();
        let side = t as usize + 1;
        let grid = build_grid(side).unwrap();
        let q = quotient(&g, &twin_classes(&g)).unwrap().graph;
        let img: Vec<usize> = coords.iter().map(|&(r, c)| r * side + c).collect();
        let mut sorted = img.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..side * side).collect::<Vec<_>>());
        for u in 0..q.order() {
            for v in 0..q.order() {
                assert_eq!(q.adjacent(u, v), grid.adjacent(img[u], img[v]));
            }
        }
        let qspec = verify_spectrum(&q, &grid_spectrum(t).unwrap()).unwrap();
        assert!(qspec.holds);
    }
}

fn c7_shrikhande_negative_control() {
    let g = clique_extension(&build_shrikhande(), 2).unwrap();
    let p = params(2, 3);
    let report = run_pipeline(&g, p, false);
    let stages = [
        Stage::Spectrum,
        Stage::CoEdgeRegularity,
        Stage::Hoffman,
        Stage::A3Classification,
        Stage::LocalIdentities,
    ];
    for st in stages {
        assert!(report.stage(st).unwrap().pass, "{st}\n{report}");
    }
    assert!(!report.stage(Stage::Lines).unwrap().pass);
    assert_eq!(report.verdict, Verdict::FailsLineStructure);
    assert_eq!(regularity_profile(&g).mu, Some(4));
    assert_eq!(find_lines(&g, p, CliqueConfig::default()).unwrap().delta, 0);
}

fn c8_perturbation_sensitivity() {
    let base = grid_extension(2, 3);
    let p = params(2, 3);
    let n = base.order();
    let mut r = rng(2024);
    for trial in 0..20 {
        let (u, v) = loop {
            let (u, v) = (r.gen_range(0..n), r.gen_range(0..n));
            if u != v {
                break (u.min(v), u.max(v));
            }
        };
        let mut edges = base.edges();
        match edges.iter().position(|&e| e == (u, v)) {
            Some(i) => {
                edges.remove(i);
            }
            None => edges.push((u, v)),
        }
        let g = Graph::from_edges(n, edges).unwrap();
        let report = run_pipeline(&g, p, false);
        assert_ne!(report.verdict, Verdict::IsGridExtension, "trial {trial}: toggled ({u},{v})");
    }
}

fn c9_oracle_equivalence() {
    let mut r = rng(99);
    for i in 0..200 {
        let n = r.gen_range(1..=12);
        let density = r.gen_range(0.1..0.9);
        let g = random_graph(&mut r, n, density);
        let ours: Vec<Vec<usize>> = maximal_cliques(&g, CliqueConfig::default())
            .unwrap()
            .into_iter()
            .map(|c| c.as_slice().to_vec())
            .collect();
        assert_eq!(ours, brute_force_maximal_cliques(&g), "graph {i}");
    }
    for i in 0..200 {
        let n = r.gen_range(1..=14);
        let density = r.gen_range(0.1..0.9);
        let g = random_graph(&mut r, n, density);
        assert_eq!(max_coclique_order(&g).unwrap(), brute_force_independence_number(&g), "graph {i}");
    }
}

fn c10_property_suite() {
    // p^2 + q^2 <= a^2 + b^2 for 0 <= q <= p <= a <= 20, b <= a, p + q = a + b
    let mut tuples = 0;
    for a in 0i64..=20 {
        for p in 0..=a {
            for q in 0..=p {
                let b = p + q - a;
                if b <= a {
                    assert!(p * p + q * q <= a * a + b * b, "a={a} b={b} p={p} q={q}");
                    tuples += 1;
                }
            }
        }
    }
    assert!(tuples > 0);

    let mut r = rng(5);
    for _ in 0..100 {
        let n = r.gen_range(1..=12);
        let density = r.gen_range(0.0..1.0);
        let g = random_graph(&mut r, n, density);
        let s = r.gen_range(1..=4);
        let ext = clique_extension(&g, s).unwrap();
        for x in 0..n {
            for i in 0..s {
                assert_eq!(ext.degree(x * s + i), s * (g.degree(x) + 1) - 1);
            }
        }
    }

    for (s, t) in PARAMS {
        let g = grid_extension(s, t);
        let bound = ((s + 1) * (s + 1)) as usize;
        for v in 0..g.order() {
            let lg = local_graph(&g, v).unwrap();
            let alpha = max_coclique_order(&lg.graph).unwrap();
            assert!(alpha <= bound, "({s},{t}) vertex {v}: {alpha} > {bound}");
        }
    }
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn()); 10] = [
        ("1 spectrum exactness", c1_spectrum_exactness),
        ("2 Hoffman identity and walk-regularity", c2_hoffman_and_walk_regularity),
        ("3 A^3 classification", c3_a3_classification),
        ("4 local valency identities", c4_local_identities),
        ("5 line structure", c5_line_structure),
        ("6 reconstruction round-trip", c6_reconstruction_round_trip),
        ("7 Shrikhande negative control", c7_shrikhande_negative_control),
        ("8 perturbation sensitivity", c8_perturbation_sensitivity),
        ("9 oracle equivalence", c9_oracle_equivalence),
        ("10 property suite", c10_property_suite),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let tag = if outcome.is_ok() { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {name} ({:.2?})", start.elapsed());
        if outcome.is_err() {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
