//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured values. Long-running optional reproductions are `#[ignore]`
//! and can be enabled explicitly.

use std::collections::BTreeSet;
use trifree_cli::certificate::{self, CertificateDocument};
use trifree_cli::commands::{self, Ctx, OutputFormat};
use trifree_cli::graph6;
use trifree_cli::sweep::{sweep, SweepConfig, SweepSource, SweepVerdict};
use trifree_core::dicolour::{self, Verdict};
use trifree_core::random::SeededRng;
use trifree_core::{
    acyclic, construct, decompose, enumerate, linforest, order, random, sparse, Budget, Digraph,
    VertexSet,
};

fn budget() -> Budget {
    Budget::default()
}

/// Criterion 1: the 25-vertex blowup has dichromatic number 3 and is
/// 3-dicritical (all 25 vertex deletions and 125 arc deletions become
/// 2-dicolourable). Exact; budgeted at 30 minutes, the run takes well
/// under a second.
#[test]
fn c01_verify_d25() {
    let mut out = Vec::new();
    let mut certs = Vec::new();
    let mut ctx = Ctx {
        out: &mut out,
        format: OutputFormat::Human,
        budget: budget(),
    };
    let code = commands::verify_d25(&mut ctx, Some(&mut certs)).unwrap();
    assert_eq!(code, commands::EXIT_OK);
    let text = String::from_utf8(out).unwrap();
    assert!(text.contains("χ⃗ = 3, 3-dicritical: yes"), "got: {text}");

    // every emitted certificate re-validates (self-consistency)
    let cert_text = String::from_utf8(certs).unwrap();
    let mut count = 0;
    for line in cert_text.lines() {
        let doc = CertificateDocument::from_json(line).unwrap();
        assert!(certificate::verify_certificate(&doc).unwrap(), "{line}");
        count += 1;
    }
    // 1 refutation + 1 base 3-dicolouring + 25 vertex + 125 arc deletions
    assert_eq!(count, 152);
    println!("ACCEPTANCE C1 PASS — D25: chi = 3, 3-dicritical, {count} certificates re-validated");
}

/// Criterion 2: the small dichromatic landmarks.
#[test]
fn c02_small_dichromatic_landmarks() {
    let c3 = construct::directed_cycle(3);
    assert_eq!(dicolour::dichromatic_number(&c3, budget()).unwrap().0, 2);
    let p7 = construct::paley_tournament(7).unwrap();
    assert_eq!(dicolour::dichromatic_number(&p7, budget()).unwrap().0, 3);
    let p11 = construct::paley_tournament(11).unwrap();
    assert_eq!(dicolour::dichromatic_number(&p11, budget()).unwrap().0, 4);
    println!("ACCEPTANCE C2 PASS — chi(C3)=2, chi(P7)=3, chi(P11)=4");
}

/// Criterion 3: transitive-subtournament landmarks. Every tournament on 4
/// vertices has an acyclic set of size 3 while the directed triangle stops
/// at 2; the witness side of the order-8 statement is the Paley tournament
/// with acyclic number 3, and 10^4 sampled 8-vertex tournaments all reach 4.
#[test]
fn c03_transitive_tournament_values() {
    // exhaustive over all 2^6 labelled tournaments on 4 vertices
    for mask in 0u32..64 {
        let mut t = Digraph::new(4);
        let mut e = 0;
        for u in 0..4 {
            for v in (u + 1)..4 {
                if mask >> e & 1 == 1 {
                    t.add_arc(u, v);
                } else {
                    t.add_arc(v, u);
                }
                e += 1;
            }
        }
        assert!(acyclic::has_acyclic_set_of_size(&t, 3, budget()).unwrap());
    }
    let c3 = construct::directed_cycle(3);
    assert_eq!(acyclic::acyclic_number(&c3, budget()).unwrap().0, 2);
    let p7 = construct::paley_tournament(7).unwrap();
    assert_eq!(acyclic::acyclic_number(&p7, budget()).unwrap().0, 3);

    let mut rng = SeededRng::new(33);
    for _ in 0..10_000 {
        let t = random::random_tournament(8, rng.derive());
        assert!(acyclic::has_acyclic_set_of_size(&t, 4, budget()).unwrap());
    }
    println!(
        "ACCEPTANCE C3 PASS — all 4-vertex tournaments have alpha >= 3, alpha(C3)=2, alpha(P7)=3, 10^4 sampled 8-tournaments have alpha >= 4"
    );
}

/// Optional full enumeration side of criterion 3: all 2^28 labelled
/// tournaments on 8 vertices have an acyclic set of size 4.
#[test]
#[ignore = "full 2^28 tournament enumeration; roughly an hour"]
fn c03_optional_all_8_vertex_tournaments() {
    let b = budget();
    for mask in 0u64..(1u64 << 28) {
        let mut t = Digraph::new(8);
        let mut e = 0;
        for u in 0..8 {
            for v in (u + 1)..8 {
                if mask >> e & 1 == 1 {
                    t.add_arc(u, v);
                } else {
                    t.add_arc(v, u);
                }
                e += 1;
            }
        }
        assert!(
            acyclic::has_acyclic_set_of_size(&t, 4, b).unwrap(),
            "tournament mask {mask}"
        );
    }
    println!("ACCEPTANCE C3(optional) PASS — every 8-vertex tournament has alpha >= 4");
}

/// Criterion 4: the eight-vertex enumeration counts: 83 triangle-free
/// graphs with minimum degree 2, 30 survivors of the adjacent-pair filter,
/// 998 exceptional orientations (raw labelled count; the isomorph-counting
/// caveat is reported alongside). The classifier also never raises over the
/// full n=8 oriented triangle-free stream.
#[test]
fn c04_eight_vertex_counts() {
    let graphs = enumerate::enumerate_triangle_free(8, 2).unwrap();
    assert_eq!(graphs.len(), 83);

    let survivors: Vec<_> = graphs
        .iter()
        .filter(|g| decompose::adjacent_pair_forest_filter(g).is_none())
        .collect();
    assert_eq!(survivors.len(), 30);

    let mut raw = 0u64;
    let mut deduped = 0u64;
    for g in &survivors {
        let edges = g.edges();
        let action = enumerate::MaskAction::new(g);
        let mut orbit_seen = BTreeSet::new();
        for mask in 0u64..(1u64 << edges.len()) {
            let d = enumerate::orient_by_mask(&edges, 8, mask);
            match decompose::lemma8_classify(&d).unwrap() {
                decompose::Lemma8Outcome::Acyclic => {}
                decompose::Lemma8Outcome::ArcWitness(u, v) => {
                    debug_assert!(d.has_arc(u, v));
                }
                decompose::Lemma8Outcome::Exception(_) => {
                    raw += 1;
                    if orbit_seen.insert(action.orbit_min(mask)) {
                        deduped += 1;
                    }
                }
            }
        }
    }
    assert_eq!(raw, 998);

    // completeness: classification works on every orientation of every
    // 8-vertex triangle-free graph, not just the filtered survivors
    let all = enumerate::enumerate_triangle_free(8, 0).unwrap();
    for g in &all {
        let edges = g.edges();
        for mask in 0u64..(1u64 << edges.len()) {
            let d = enumerate::orient_by_mask(&edges, 8, mask);
            decompose::lemma8_classify(&d).unwrap();
        }
    }
    println!(
        "ACCEPTANCE C4 PASS — 83 graphs, 30 survivors, 998 exceptional orientations (998 raw / {deduped} up to isomorphism); classifier total on the full stream"
    );
}

/// Criterion 5: over every oriented triangle-free digraph with n <= 7 and
/// minimum in- and out-degree at least 1, a deletion witness of one vertex
/// or two adjacent vertices exists.
#[test]
fn c05_small_case_witness_exhaustive() {
    let mut checked = 0u64;
    for n in 3..=7usize {
        for g in enumerate::enumerate_triangle_free(n, 2).unwrap() {
            let edges = g.edges();
            for mask in 0u64..(1u64 << edges.len()) {
                let d = enumerate::orient_by_mask(&edges, n, mask);
                if (0..n).any(|v| {
                    d.in_neighbours(v).is_empty() || d.out_neighbours(v).is_empty()
                }) {
                    continue;
                }
                checked += 1;
                assert!(
                    decompose::lemma7_witness(&d).is_some(),
                    "no witness for {d:?}"
                );
            }
        }
    }
    assert!(checked > 0);
    println!("ACCEPTANCE C5 PASS — deletion witnesses exist for all {checked} qualifying digraphs up to order 7");
}

/// Criterion 6: blowup tightness around the acyclic C5 orientations with no
/// directed P4: the 6-backward-blowups are 2-dicolourable, the
/// 7-backward-blowups are not (both refutations run under the 10^10-node
/// budget reserved for the refutation side).
#[test]
fn c06_blowup_tightness_pair() {
    let (a, b) = construct::acyclic_c5_no_p4();
    for (name, base) in [("first", &a), ("second", &b)] {
        let six = construct::backward_blowup(base, 6).unwrap();
        let out = dicolour::is_k_dicolourable(&six, 2, budget());
        assert_eq!(out.verdict, Verdict::Dicolourable, "{name} 6-blowup");
        let cert = out.certificate.unwrap();
        assert_eq!(dicolour::verify_dicolouring(&six, &cert), Ok(true));

        let seven = construct::backward_blowup(base, 7).unwrap();
        let out = dicolour::is_k_dicolourable(&seven, 2, Budget::new(10_000_000_000));
        assert_eq!(out.verdict, Verdict::NotDicolourable, "{name} 7-blowup");
    }
    println!(
        "ACCEPTANCE C6 PASS — 6-backward-blowups of both P4-free acyclic C5 orientations are 2-dicolourable; 7-backward-blowups are not"
    );
}

/// Criterion 7: the total-order formulation agrees with the solver on every
/// labelled oriented graph with n <= 5 and on 200 random 7-vertex oriented
/// graphs.
#[test]
fn c07_order_formulation_agreement() {
    let mut scanned = 0u64;
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let mut states = vec![0u8; pairs.len()];
        loop {
            let mut d = Digraph::new(n);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                match states[i] {
                    0 => {}
                    1 => d.add_arc(u, v),
                    _ => d.add_arc(v, u),
                }
            }
            scanned += 1;
            assert_eq!(
                order::dichromatic_via_orders(&d).unwrap(),
                dicolour::dichromatic_number(&d, budget()).unwrap().0,
                "digraph {d:?}"
            );
            // advance base-3 counter
            let mut i = 0;
            loop {
                if i == states.len() {
                    break;
                }
                states[i] += 1;
                if states[i] < 3 {
                    break;
                }
                states[i] = 0;
                i += 1;
            }
            if states.iter().all(|&s| s == 0) {
                break;
            }
        }
    }
    let mut rng = SeededRng::new(7777);
    for _ in 0..200 {
        let d = random::random_oriented(7, 0.5, rng.derive());
        assert_eq!(
            order::dichromatic_via_orders(&d).unwrap(),
            dicolour::dichromatic_number(&d, budget()).unwrap().0
        );
    }
    println!("ACCEPTANCE C7 PASS — order formulation matches the solver on {scanned} oriented graphs up to n=5 and 200 random n=7 instances");
}

/// Criterion 8: the linear-forest identity `min over orientations = n -
/// alpha` on every connected graph with n <= 7 (oracle over all 2^m
/// orientations), plus the Grötzsch value 6.
#[test]
fn c08_linear_forest_identity() {
    let b = budget();
    let mut graphs_checked = 0u64;
    for n in 2..=7usize {
        for key in enumerate::all_graph_keys(n).unwrap() {
            let g = enumerate::graph_from_key(n, key);
            if !g.is_connected() {
                continue;
            }
            graphs_checked += 1;
            let alpha = acyclic::independence_number(&g, b).unwrap().0;
            let target = n - alpha;
            // lower side: every orientation keeps a linear forest of
            // target size
            let edges = g.edges();
            for mask in 0u64..(1u64 << edges.len()) {
                let d = enumerate::orient_by_mask(&edges, n, mask);
                assert!(
                    linforest::linear_forest_at_least(&d, target, b).unwrap(),
                    "graph {g:?} mask {mask}"
                );
            }
            // upper side: the source orientation attains the minimum
            let or = linforest::min_orientation_linear_forest(&g, b).unwrap();
            assert_eq!(or.value, target);
            let exact = linforest::max_directed_linear_forest(&or.orientation, b)
                .unwrap()
                .0;
            assert_eq!(exact, target, "graph {g:?}");
        }
    }
    // Grötzsch: n - alpha = 11 - 5 = 6, attained exactly
    let g = construct::grotzsch();
    let or = linforest::min_orientation_linear_forest(&g, b).unwrap();
    assert_eq!(or.value, 6);
    let exact = linforest::max_directed_linear_forest(&or.orientation, b)
        .unwrap()
        .0;
    assert_eq!(exact, 6);
    let mut rng = SeededRng::new(2020);
    for _ in 0..50 {
        let d = random::random_orientation(&g, rng.derive());
        assert!(linforest::linear_forest_at_least(&d, 6, b).unwrap());
    }
    println!("ACCEPTANCE C8 PASS — linear-forest identity on {graphs_checked} connected graphs up to order 7; Grötzsch value 6");
}

/// Criterion 9: the degree-halving order postcondition on 10^3 random
/// digraphs with up to 32 vertices.
#[test]
fn c09_degree_halving_orders() {
    let mut rng = SeededRng::new(909);
    for i in 0..1000u32 {
        let n = 2 + rng.below(31) as usize;
        let d = if i % 2 == 0 {
            random::random_digraph(n, 0.3, rng.derive())
        } else {
            random::random_oriented(n, 0.5, rng.derive())
        };
        let ord = order::halve_degree_order(&d);
        assert!(order::halving_holds(&d, &ord), "digraph {d:?}");
    }
    println!("ACCEPTANCE C9 PASS — degree-halving postcondition on 1000 random digraphs up to n=32");
}

/// Criterion 10: d-sparse orientations of 100 random triangle-free graphs
/// with 14 to 18 vertices, with exhaustive subset verification; mean trial
/// count at most 3.
#[test]
fn c10_dsparse_orientations() {
    let mut rng = SeededRng::new(1010);
    let mut total_trials = 0u64;
    for i in 0..100u64 {
        let n = 14 + (i % 5) as usize;
        let g = random::random_triangle_free(n, 0.5, rng.derive());
        let out = sparse::find_dsparse_orientation(&g, 10, rng.next_u64())
            .expect("an orientation must verify");
        assert_eq!(out.verification, sparse::Verification::Exhaustive);
        total_trials += out.trials_used;
    }
    let mean = total_trials as f64 / 100.0;
    assert!(mean <= 3.0, "mean trials {mean}");
    println!("ACCEPTANCE C10 PASS — 100 d-sparse orientations verified exhaustively, mean trials {mean:.2}");
}

/// Criterion 11: the local-lemma constants hold with positive margins,
/// computed to at least 6 significant digits.
#[test]
fn c11_lll_constants() {
    let r = sparse::verify_lll_constants(0.513, 3.43, 3.1, 1e-4);
    assert!(r.holds1 && r.holds2);
    assert!(r.margin1 > 0.0 && r.margin2 > 0.0);
    println!(
        "ACCEPTANCE C11 PASS — condition 1 margin {:.6e}, condition 2 margin {:.6e}",
        r.margin1, r.margin2
    );
}

/// Criterion 12: the scaled sweep over every triangle-free graph with at
/// most 12 vertices leaves nothing unresolved: each instance is filtered
/// for a dicriticality reason or carries a decomposition certificate, so
/// every oriented triangle-free graph of order <= 12 is 2-dicolourable.
#[test]
fn c12_scaled_sweep() {
    let config = SweepConfig {
        threads: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(4),
        checkpoint: None,
    };
    let out = sweep(&SweepSource::Internal { n_max: 12 }, &config).unwrap();
    assert_eq!(out.summary.total_unresolved(), 0);
    for (n, counts) in &out.summary.per_order {
        let expected = enumerate::triangle_free_keys(*n).unwrap().len() as u64;
        assert_eq!(counts.total, expected, "n = {n}");
    }
    // spot-check: every decomposition record validates structurally
    let mut validated = 0u64;
    for record in out.records.iter().filter(|r| r.n == 12).take(500) {
        if let SweepVerdict::Decomposed { .. } = record.verdict {
            let g = graph6::decode_graph6(&record.id).unwrap();
            let dec = decompose::cut_decomposition_search(&g).unwrap();
            assert!(dec.validate(&g));
            validated += 1;
        }
    }
    assert!(validated > 0);
    let n12 = &out.summary.per_order[&12];
    println!(
        "ACCEPTANCE C12 PASS — swept all orders <= 12 ({} instances at n=12), zero unresolved, {validated} decompositions re-validated",
        n12.total
    );
}

/// Optional full reproduction of the order-17 bucket counts (375 survivors,
/// 362 with |Z| <= 7, 12 with |Z| = 8, 1 larger). The 17-vertex stream must
/// be generated externally (nauty geng; expect days of compute); point
/// TRIFREE_N17_G6 at the file.
#[test]
#[ignore = "needs an externally generated n=17 graph6 stream in TRIFREE_N17_G6"]
fn c12_optional_n17_reproduction() {
    let path = std::env::var("TRIFREE_N17_G6")
        .expect("set TRIFREE_N17_G6 to the 17-vertex graph6 file");
    let config = SweepConfig {
        threads: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(4),
        checkpoint: None,
    };
    let out = sweep(&SweepSource::Files(vec![path.into()]), &config).unwrap();
    let c = &out.summary.per_order[&17];
    assert_eq!(c.survivors, 375);
    assert_eq!(c.survivors_z_at_most_7, 362);
    assert_eq!(c.survivors_z_eight, 12);
    assert_eq!(c.survivors_z_larger, 1);
    assert_eq!(c.unresolved, 0);
    println!("ACCEPTANCE C12(optional) PASS — n=17 buckets (375, 362, 12, 1)");
}

/// Criterion 13: the asymptotic statements are not reproducible at desk
/// scale; the substitute is this output-only demonstration of empirical
/// acyclic numbers against the asymptotic threshold, printed with both
/// logarithm bases since the target expression does not fix one.
#[test]
fn c13_alpha_demonstration_report() {
    for n in [20usize, 30, 40] {
        let row = sparse::alpha_demo_row(n, 0.513, 4242 + n as u64, budget()).unwrap();
        assert!(row.alpha >= 1 && row.alpha <= n);
        assert!(row.threshold_log2 > row.threshold_ln);
        println!(
            "ACCEPTANCE C13 REPORT — n={:>2}: empirical acyclic number {:>2} vs (107/8) sqrt(n) log n = {:>7.2} (ln) / {:>7.2} (log2)",
            row.n, row.alpha, row.threshold_ln, row.threshold_log2
        );
    }
    println!("ACCEPTANCE C13 PASS — demonstration report generated (no pass/fail threshold by design)");
}

/// The io-cli exit-code example: deciding k=2 on the 25-vertex blowup
/// refutes and exits 1, with search statistics in the output.
#[test]
fn cli_dichromatic_k2_on_d25_exits_1() {
    let d25 = construct::d25();
    let mut out = Vec::new();
    let mut ctx = Ctx {
        out: &mut out,
        format: OutputFormat::Human,
        budget: budget(),
    };
    let code = commands::dichromatic(&mut ctx, &[d25], Some(2)).unwrap();
    assert_eq!(code, commands::EXIT_REFUTED);
    let text = String::from_utf8(out).unwrap();
    assert!(text.contains("not 2-dicolourable"), "got: {text}");
    assert!(text.contains("nodes"), "stats missing: {text}");
}

/// Extremal scan sanity at tiny orders: t(n) = 1 up to
/// n = 3, t(4) = 2 via the directed C4, and a-values bounded by the
/// girth argument.
#[test]
fn extremal_scan_tiny_orders() {
    for n in 1..=3usize {
        let r = trifree_core::extremal::extremal_scan(n, budget()).unwrap();
        assert_eq!(r.t_max, 1);
        assert_eq!(r.a_min, n);
    }
    let r4 = trifree_core::extremal::extremal_scan(4, budget()).unwrap();
    assert_eq!(r4.t_max, 2);
    assert_eq!(r4.a_min, 3);
    let r5 = trifree_core::extremal::extremal_scan(5, budget()).unwrap();
    assert_eq!(r5.t_max, 2);
    assert_eq!(r5.a_min, 4);
    // every witness is an oriented triangle-free graph of the right order
    for r in [&r4, &r5] {
        assert!(r.t_witness.is_oriented());
        assert!(r.t_witness.underlying_graph().is_triangle_free());
    }
}

/// D25 pack structure feeds the solver examples: a full pack is acyclic,
/// and 2^25-scale spot sampling of 2-colourings never validates.
#[test]
fn d25_spot_checks() {
    let d25 = construct::d25();
    for base in 0..5 {
        assert!(d25.is_acyclic_induced(&construct::pack(base, 5)));
    }
    let mut rng = SeededRng::new(25);
    for _ in 0..20_000 {
        let colours: Vec<u8> = (0..25).map(|_| rng.below(2) as u8).collect();
        let col = dicolour::Dicolouring::new(2, colours);
        assert_eq!(dicolour::verify_dicolouring(&d25, &col), Ok(false));
    }
    // D25 minus any vertex is 2-dicolourable
    for v in [0usize, 7, 24] {
        let sub = d25.remove_vertex(v);
        let out = dicolour::is_k_dicolourable(&sub, 2, budget());
        assert_eq!(out.verdict, Verdict::Dicolourable);
    }
}

/// Adding an isolated vertex to D25 keeps the dichromatic number at 3, so
/// the deletion of that vertex fails the dicriticality requirement.
#[test]
fn d25_plus_isolated_vertex_is_not_dicritical() {
    let d25 = construct::d25();
    let mut padded = Digraph::new(26);
    for (u, v) in d25.arcs() {
        padded.add_arc(u, v);
    }
    let report = dicolour::is_k_dicritical(&padded, 3, budget()).unwrap();
    assert_eq!(report.dichromatic, 3);
    assert!(!report.is_dicritical());
    assert_eq!(report.failing_vertices, vec![25]);
    assert!(report.failing_arcs.is_empty());
}

/// The 209-vertex corollary witness: 19-backward-blowup of an orientation
/// of the Grötzsch graph, triangle-free by construction.
#[test]
fn corollary_witness_sizes() {
    let b = budget();
    // C5 with k = 2: chi = 3 > 2, alpha = 2, multiplicity 2*3+1 = 7
    let c5 = construct::cycle_graph(5);
    let w = construct::corollary43_witness(&c5, 2, b).unwrap();
    assert_eq!(w.multiplicity, 7);
    assert_eq!(w.blowup.n(), 35);
    // Grötzsch with k = 3: multiplicity 3*6+1 = 19, 209 vertices
    let g = construct::grotzsch();
    let w = construct::corollary43_witness(&g, 3, b).unwrap();
    assert_eq!(w.multiplicity, 19);
    assert_eq!(w.blowup.n(), 209);
    assert_eq!(w.chromatic, 4);
    assert!(w.blowup.underlying_graph().is_triangle_free());
    assert!(w.blowup.is_oriented());
    // k = 0 and chi <= k are rejected
    assert!(construct::corollary43_witness(&c5, 0, b).is_err());
    assert!(construct::corollary43_witness(&c5, 3, b).is_err());
}

/// Decomposition invariant: on random triangle-free graphs the
/// induced 2-dicolouring validates for sampled orientations.
#[test]
fn decomposition_colourings_validate() {
    let mut rng = SeededRng::new(4848);
    let mut decomposed = 0;
    for i in 0..30 {
        let n = 9 + (i % 4) as usize;
        let g = random::random_triangle_free(n, 0.45, rng.derive());
        let Some(dec) = decompose::cut_decomposition_search(&g) else {
            continue;
        };
        decomposed += 1;
        assert!(dec.validate(&g));
        for _ in 0..20 {
            let d = random::random_orientation(&g, rng.derive());
            let col = decompose::two_dicolouring_from(&d, &dec).unwrap();
            assert_eq!(dicolour::verify_dicolouring(&d, &col), Ok(true));
        }
    }
    assert!(decomposed >= 25, "only {decomposed} of 30 graphs decomposed");
}

/// VertexSet spot check for the blowup pack layout documented in the
/// public contract: flattened index = base * m + (copy - 1).
#[test]
fn pack_layout_contract() {
    let p = construct::pack(2, 5);
    assert_eq!(p, VertexSet::from_iter([10, 11, 12, 13, 14]));
}
