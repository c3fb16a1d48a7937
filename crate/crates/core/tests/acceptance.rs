//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Criterion 2's order-4 row is asserted exactly as quoted by the reference
//! table and is EXPECTED TO FAIL: the table's Wronskian count at order 4 is
//! inconsistent with the Wronskian-vertex definition itself (see the test
//! body for the two-line proof). It is kept red rather than special-cased.

use mspectra_core::analysis::{all_wronskian_vertices, rooted_separability, wronskian_vertex};
use mspectra_core::census::{census_graphs, census_order, generate_connected, CensusRow};
use mspectra_core::constructions::{alpha_sweep, cospectral_rooted_pair, unit_grid};
use mspectra_core::control::{
    controllability_matrix, is_controllable_graph, rooted_controllability,
};
use mspectra_core::family::{build_matrix, charpoly_m, deleted_charpoly, MatrixKind};
use mspectra_core::fixtures::{fixture, g1, path};
use mspectra_core::products::rooted_product;
use mspectra_core::rat::{rat, rat_int};
use mspectra_core::verify::{self, VerifyConfig};
use mspectra_core::Poly;
use std::time::Instant;

fn report(criterion: &str, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("[{status}] criterion {criterion}: {detail}");
    assert!(pass, "criterion {criterion}: {detail}");
}

#[test]
fn c1_fixture_polynomials() {
    let t0 = Instant::now();
    // Adjacency charpolys of the diameter family.
    assert_eq!(
        charpoly_m(&g1(4, 3).unwrap(), &MatrixKind::Adjacency),
        Poly::from_i64(&[1, 0, -3, 0, 1])
    );
    assert_eq!(
        charpoly_m(&g1(5, 3).unwrap(), &MatrixKind::Adjacency),
        Poly::from_i64(&[0, 2, 0, -4, 0, 1])
    );
    // Laplacian pair for H6.
    let h6 = fixture("H6").unwrap();
    assert_eq!(
        charpoly_m(&h6, &MatrixKind::Laplacian),
        Poly::from_i64(&[0, -126, 305, -256, 95, -16, 1])
    );
    assert_eq!(
        deleted_charpoly(&h6, &MatrixKind::Laplacian, 6).unwrap(),
        Poly::from_i64(&[-21, 159, -186, 81, -15, 1])
    );
    // Signless-Laplacian values; these gate the Q = D + A interpretation.
    let h5 = fixture("H5").unwrap();
    assert_eq!(
        charpoly_m(&h5, &MatrixKind::SignlessLaplacian),
        Poly::from_i64(&[60, -262, 396, -276, 96, -16, 1])
    );
    assert_eq!(
        deleted_charpoly(&h5, &MatrixKind::SignlessLaplacian, 6).unwrap(),
        Poly::from_i64(&[-101, 238, -206, 82, -15, 1])
    );
    let q78 = Poly::from_i64(&[48, -256, 404, -282, 97, -16, 1]);
    assert_eq!(
        charpoly_m(&fixture("H7").unwrap(), &MatrixKind::SignlessLaplacian),
        q78
    );
    assert_eq!(
        charpoly_m(&fixture("H8").unwrap(), &MatrixKind::SignlessLaplacian),
        q78
    );
    // The quoted coprimality that drives the cospectral construction.
    assert!(Poly::gcd(
        &charpoly_m(&h5, &MatrixKind::SignlessLaplacian),
        &deleted_charpoly(&h5, &MatrixKind::SignlessLaplacian, 6).unwrap(),
    )
    .unwrap()
    .is_one());
    // Universal kind on P2 at three rational (a, d) instances:
    // phi = (x-d)^2 - a^2 and the deleted polynomial is x - d.
    let p2 = path(2).unwrap();
    for (a, d) in [
        (rat_int(2), rat_int(3)),
        (rat_int(1), rat_int(-2)),
        (rat(1, 2), rat(1, 3)),
    ] {
        let kind = MatrixKind::universal(a.clone(), d.clone()).unwrap();
        let x_minus_d = Poly::from_coeffs(vec![-d.clone(), rat_int(1)]);
        let expect = x_minus_d.mul(&x_minus_d).sub(&Poly::constant(&a * &a));
        assert_eq!(charpoly_m(&p2, &kind), expect, "a={a} d={d}");
        assert_eq!(deleted_charpoly(&p2, &kind, 2).unwrap(), x_minus_d);
    }
    let dt = t0.elapsed();
    report(
        "1 (fixture polynomials)",
        dt.as_secs_f64() < 10.0,
        &format!("all quoted charpolys exact in {dt:?}"),
    );
}

fn reference_row(
    order: usize,
    total: usize,
    separable: usize,
    controllable: usize,
    wronskian: usize,
    controllable_wronskian: usize,
) -> CensusRow {
    CensusRow {
        order,
        total,
        separable,
        controllable,
        wronskian,
        controllable_wronskian,
    }
}

#[test]
fn c2_census_orders_1_to_7_except_4() {
    let expect = [
        reference_row(1, 1, 1, 1, 0, 0),
        reference_row(2, 1, 1, 0, 1, 0),
        reference_row(3, 2, 1, 0, 1, 0),
        reference_row(5, 21, 11, 0, 9, 0),
        reference_row(6, 112, 54, 8, 37, 8),
        reference_row(7, 853, 539, 85, 414, 85),
    ];
    let t0 = Instant::now();
    for want in &expect {
        let got = census_order(want.order, &MatrixKind::Adjacency, 1).unwrap();
        assert_eq!(&got, want, "order {}", want.order);
    }
    let dt = t0.elapsed();
    report(
        "2 (census orders 1-3, 5-7, single-threaded)",
        dt.as_secs_f64() <= 600.0,
        &format!("six rows exact in {dt:?}"),
    );
}

#[test]
fn c2_census_order_4_row_as_quoted() {
    // The reference table claims (6,3,0,3,0). The Wronskian column cannot be
    // 3: the diamond (K4 minus an edge) is the third separable order-4 graph,
    // its charpoly is x(x+1)(x^2-x-4), and deleting a degree-3 vertex leaves
    // P3 (charpoly x^3-2x, shares the factor x) while deleting a degree-2
    // vertex leaves K3 (charpoly (x-2)(x+1)^2, shares x+1). No vertex attains
    // gcd 1, so the faithful count is 2 and this row reads (6,3,0,2,0).
    let got = census_order(4, &MatrixKind::Adjacency, 1).unwrap();
    let quoted = reference_row(4, 6, 3, 0, 3, 0);
    report(
        "2 (census order 4, quoted row)",
        got == quoted,
        &format!("expected {quoted:?}, computed {got:?}"),
    );
}

fn corpus_text(name: &str) -> Option<String> {
    let dir = std::env::var("MSPECTRA_CORPUS_DIR").unwrap_or_else(|_| "corpus".into());
    std::fs::read_to_string(std::path::Path::new(&dir).join(name)).ok()
}

#[test]
fn c2_census_order_8_corpus_optional() {
    let Some(text) = corpus_text("graph8c.g6") else {
        println!("[SKIP] criterion 2 (order 8): no corpus file graph8c.g6");
        return;
    };
    let graphs = mspectra_core::graph6::parse_graph6_lines(&text).unwrap();
    let got = census_graphs(&graphs, &MatrixKind::Adjacency, 4).unwrap();
    let want = reference_row(8, 11117, 7319, 2275, 5984, 2275);
    report(
        "2 (census order 8, ingested corpus)",
        got == want,
        &format!("expected {want:?}, computed {got:?}"),
    );
}

#[test]
fn c2_census_order_9_corpus_optional() {
    let Some(text) = corpus_text("graph9c.g6") else {
        println!("[SKIP] criterion 2 (order 9): no corpus file graph9c.g6");
        return;
    };
    let graphs = mspectra_core::graph6::parse_graph6_lines(&text).unwrap();
    let got = census_graphs(&graphs, &MatrixKind::Adjacency, 8).unwrap();
    let want = reference_row(9, 261080, 209471, 83034, 186053, 83034);
    report(
        "2 (census order 9, ingested corpus)",
        got == want,
        &format!("expected {want:?}, computed {got:?}"),
    );
}

/// Self-generated order-8 corpus (vertex augmentation over canonical forms),
/// then the same ingestion path as an external file. Slow-ish; run with
/// `cargo test --test acceptance -- --ignored`.
#[test]
#[ignore]
fn c2_census_order_8_self_generated() {
    use mspectra_core::canon::canonical_form;
    use mspectra_core::Graph;
    use std::collections::HashSet;

    let t0 = Instant::now();
    let mut reps: Vec<(usize, Vec<(usize, usize)>)> = vec![(1, vec![])];
    for k in 2..=8usize {
        let mut seen: HashSet<Vec<(usize, usize)>> = HashSet::new();
        for (n, edges) in &reps {
            debug_assert_eq!(*n, k - 1);
            for subset in 0u32..(1 << (k - 1)) {
                let mut e = edges.clone();
                for i in 1..k {
                    if subset >> (i - 1) & 1 == 1 {
                        e.push((i, k));
                    }
                }
                let g = Graph::new(k, &e).unwrap();
                seen.insert(canonical_form(&g).unwrap().edges);
            }
        }
        reps = seen.into_iter().map(|e| (k, e)).collect();
        reps.sort();
    }
    let graphs: Vec<Graph> = reps
        .into_iter()
        .map(|(n, e)| Graph::new(n, &e).unwrap())
        .filter(Graph::is_connected)
        .collect();
    assert_eq!(graphs.len(), 11117);
    let got = census_graphs(&graphs, &MatrixKind::Adjacency, 4).unwrap();
    let want = reference_row(8, 11117, 7319, 2275, 5984, 2275);
    report(
        "2 (census order 8, self-generated)",
        got == want,
        &format!("expected {want:?}, computed {got:?} in {:?}", t0.elapsed()),
    );
}

/// Order-9 analogue, several minutes of work; run explicitly with
/// `cargo test --test acceptance -- --ignored c2_census_order_9_self_generated`.
#[test]
#[ignore]
fn c2_census_order_9_self_generated() {
    use mspectra_core::canon::canonical_form;
    use mspectra_core::Graph;
    use rayon::prelude::*;
    use std::collections::HashSet;

    fn mask_graph(n: usize, mask: u64) -> Graph {
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 2..=n {
            for i in 1..j {
                if mask >> idx & 1 == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    let t0 = Instant::now();
    let mut reps: Vec<u64> = vec![0];
    for k in 2..=9usize {
        let tri = (k - 1) * (k - 2) / 2;
        let keys: HashSet<u64> = reps
            .par_iter()
            .flat_map_iter(|&parent| (0u64..(1 << (k - 1))).map(move |subset| (parent, subset)))
            .map(|(parent, subset)| {
                let mask = parent | (subset << tri);
                canonical_form(&mask_graph(k, mask)).unwrap().bit_key()
            })
            .collect();
        reps = keys.into_iter().collect();
        reps.sort_unstable();
    }
    let graphs: Vec<Graph> = reps
        .into_iter()
        .map(|m| mask_graph(9, m))
        .filter(Graph::is_connected)
        .collect();
    assert_eq!(graphs.len(), 261080);
    let got = census_graphs(&graphs, &MatrixKind::Adjacency, 8).unwrap();
    let want = reference_row(9, 261080, 209471, 83034, 186053, 83034);
    report(
        "2 (census order 9, self-generated)",
        got == want,
        &format!("expected {want:?}, computed {got:?} in {:?}", t0.elapsed()),
    );
}

#[test]
fn c3_controllability_counterexamples() {
    let t0 = Instant::now();
    // The 49-vertex product has walk-matrix rank exactly 48.
    let h9 = fixture("H9").unwrap();
    let h10 = fixture("H10").unwrap();
    let prod = rooted_product(&h9, &h10, 7).unwrap();
    assert_eq!(prod.graph.order(), 49);
    let rank =
        controllability_matrix(&build_matrix(&prod.graph, &MatrixKind::Adjacency)).exact_rank();
    assert_eq!(rank, 48);
    // Factors individually controllable (full rank = order).
    for g in [&h9, &h10, &g1(7, 3).unwrap()] {
        let rep = is_controllable_graph(g, &MatrixKind::Adjacency).unwrap();
        assert!(rep.controllable && rep.walk_matrix_rank == g.order());
    }
    // The two-route decomposition agrees on the 49-vertex product.
    let rep = rooted_controllability(&h9, &h10, 7, &MatrixKind::Adjacency).unwrap();
    assert!(!rep.product.controllable);
    assert_eq!(rep.product.walk_matrix_rank, 48);
    // G1(7,3) rooted on itself at v1: neither separable nor controllable.
    let g = g1(7, 3).unwrap();
    let sep = rooted_separability(&g, &g, 1, &MatrixKind::Adjacency).unwrap();
    assert!(!sep.separable);
    let con = rooted_controllability(&g, &g, 1, &MatrixKind::Adjacency).unwrap();
    assert!(!con.product.controllable);
    let dt = t0.elapsed();
    report(
        "3 (controllability counterexamples)",
        dt.as_secs_f64() <= 30.0,
        &format!("rank 48/49 and both negative verdicts in {dt:?}"),
    );
}

#[test]
fn c4_wronskian_results() {
    // v4 is an A-Wronskian vertex of G1(5,3).
    assert!(
        wronskian_vertex(&g1(5, 3).unwrap(), &MatrixKind::Adjacency, 4)
            .unwrap()
            .is_wronskian
    );
    // v_{n-1} for G1(n,3), n = 5..9.
    for n in 5..=9usize {
        assert!(
            wronskian_vertex(&g1(n, 3).unwrap(), &MatrixKind::Adjacency, n - 1)
                .unwrap()
                .is_wronskian,
            "G1({n},3)"
        );
    }
    // Every vertex of H1..H4 under A.
    for name in ["H1", "H2", "H3", "H4"] {
        let g = fixture(name).unwrap();
        assert_eq!(
            all_wronskian_vertices(&g, &MatrixKind::Adjacency)
                .unwrap()
                .len(),
            g.order(),
            "{name}"
        );
    }
    // (H5, v6) fails at alpha = 2/3.
    let k = MatrixKind::alpha(rat(2, 3)).unwrap();
    assert!(
        !wronskian_vertex(&fixture("H5").unwrap(), &k, 6)
            .unwrap()
            .is_wronskian
    );
    // Dual-route agreement at every tested (fixture, kind, vertex): the
    // routes are asserted inside wronskian_vertex; zero disagreements means
    // zero errors across the sweep.
    let suite = verify::suite_wronskian_dual_route(&VerifyConfig::default());
    assert!(suite.passed(), "{:?}", suite.failures);
    report(
        "4 (Wronskian results)",
        true,
        &format!(
            "families verified; dual route agreed on {} checks",
            suite.cases
        ),
    );
}

#[test]
fn c5_cospectral_construction() {
    let t0 = Instant::now();
    let h7 = fixture("H7").unwrap();
    let h8 = fixture("H8").unwrap();
    let h5 = fixture("H5").unwrap();
    for n in 1..=2usize {
        let h = h5.pendant_path_extend(6, n).unwrap();
        let root = h.order();
        let rep =
            cospectral_rooted_pair(&h7, &h8, &h, root, &MatrixKind::SignlessLaplacian).unwrap();
        assert!(rep.separable, "n={n}");
        assert!(rep.non_isomorphic, "n={n}");
        assert!(rep.charpoly.is_squarefree().unwrap(), "n={n}");
        assert_eq!(rep.product1.order(), 6 * (6 + n));
        if n == 1 {
            // resultant-route charpoly of the 42-vertex product agrees with
            // the direct one (asserted inside).
            let s = mspectra_core::analysis::rooted_spectrum_factors(
                &h7,
                &h,
                root,
                &MatrixKind::SignlessLaplacian,
            )
            .unwrap();
            assert_eq!(s.product_charpoly, rep.charpoly);
        }
    }
    let dt = t0.elapsed();
    report(
        "5 (cospectral construction, n = 1, 2)",
        dt.as_secs_f64() <= 60.0,
        &format!("both pairs cospectral, squarefree, non-isomorphic in {dt:?}"),
    );
}

#[test]
fn cospectral_pair_iterates_once() {
    // Feed the constructed pair back in as the cospectral bases with a fresh
    // Wronskian-rooted H (P2 at an endpoint stays Wronskian under Q).
    let h7 = fixture("H7").unwrap();
    let h8 = fixture("H8").unwrap();
    let h = fixture("H5").unwrap().pendant_path_extend(6, 1).unwrap();
    let root = h.order();
    let q = MatrixKind::SignlessLaplacian;
    let first = cospectral_rooted_pair(&h7, &h8, &h, root, &q).unwrap();
    let p2 = path(2).unwrap();
    let second = cospectral_rooted_pair(&first.product1, &first.product2, &p2, 1, &q).unwrap();
    assert!(second.separable);
    assert!(second.non_isomorphic);
    assert_eq!(second.product1.order(), 84);
}

#[test]
fn c6_property_suites() {
    let cfg = VerifyConfig::default();
    let t0 = Instant::now();
    let suites = [
        verify::suite_spectrum_resultant(&cfg),
        verify::suite_rooted_separability(&cfg),
        verify::suite_cartesian_separability(&cfg),
        verify::suite_rooted_controllability(&cfg),
        verify::suite_pendant_recurrence(&cfg),
        verify::suite_adjugate_identity(&cfg),
        verify::suite_kronecker_assembly(&cfg),
    ];
    let mut total = 0usize;
    for s in &suites {
        assert!(s.passed(), "{}: {:?}", s.name, s.failures);
        total += s.cases;
    }
    report(
        "6 (seeded property suites)",
        true,
        &format!("{total} cases, zero failures in {:?}", t0.elapsed()),
    );
}

#[test]
fn c7_numeric_eigenvector_cross_check() {
    let s = verify::suite_eigenvector_structure(&VerifyConfig::default());
    report(
        "7 (numeric eigenvector structure)",
        s.passed(),
        &format!(
            "{} coupled products, residuals < 1e-8: {:?}",
            s.cases, s.failures
        ),
    );
}

#[test]
fn alpha_two_thirds_membership_and_grid_sweep() {
    // Substitute for the symbolic exceptional-alpha analysis: 2/3 membership
    // plus a full 1/64-step sweep. The 1/64 grid contains no exceptional
    // values (frozen from an independent computation).
    let h5 = fixture("H5").unwrap();
    let sweep = alpha_sweep(&h5, 6, &unit_grid(64)).unwrap();
    assert_eq!(sweep.verdicts.len(), 64);
    assert!(sweep.hits.is_empty(), "grid hits: {:?}", sweep.hits);
    let member = alpha_sweep(&h5, 6, &[rat(2, 3)]).unwrap();
    assert_eq!(member.hits.len(), 1);
    assert_eq!(member.hits[0].1, Poly::from_i64(&[-2, 1]));
    report(
        "alpha sweep (2/3 membership + 1/64 grid)",
        true,
        "2/3 blocked by gcd x-2; 1/64 grid clean",
    );
}
