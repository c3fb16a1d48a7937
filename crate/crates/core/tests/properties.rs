//! Cross-module property suites: proptest invariants for the algebra kernel
//! and enumerative checks that are too global for any one module's unit
//! tests.

use mspectra_core::analysis;
use mspectra_core::canon::{canonical_form, is_isomorphic};
use mspectra_core::census::{cospectral_classes, generate_connected};
use mspectra_core::control::is_controllable_graph;
use mspectra_core::ext::{ext_rank, Extension};
use mspectra_core::family::{charpoly_m, MatrixKind};
use mspectra_core::fixtures::path;
use mspectra_core::graph6::{encode_graph6, parse_graph6};
use mspectra_core::poly::Poly;
use mspectra_core::products::rooted_product;
use mspectra_core::rat::{rat_int, Rat};
use mspectra_core::sturm::{isolate_real_roots, sturm_count, Bound};
use mspectra_core::{Graph, RatMatrix};
use proptest::prelude::*;

fn poly_strategy(max_deg: usize, max_coeff: i64) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-max_coeff..=max_coeff, 1..=max_deg + 1).prop_map(|v| Poly::from_i64(&v))
}

proptest! {
    #[test]
    fn gcd_divides_both(f in poly_strategy(12, 6), g in poly_strategy(12, 6)) {
        prop_assume!(!f.is_zero() || !g.is_zero());
        let d = Poly::gcd(&f, &g).unwrap();
        prop_assert!(d.divides(&f));
        prop_assert!(d.divides(&g));
        // any common divisor divides it: use g itself when it divides f
        if !g.is_zero() && g.divides(&f) {
            prop_assert!(g.divides(&d));
        }
    }

    #[test]
    fn sturm_count_matches_isolation(f in poly_strategy(10, 5)) {
        prop_assume!(!f.is_zero());
        let count = sturm_count(&f, &Bound::NegInf, &Bound::PosInf).unwrap();
        let intervals = isolate_real_roots(&f).unwrap();
        prop_assert_eq!(count, intervals.len());
        // intervals are pairwise disjoint and ascending
        for w in intervals.windows(2) {
            prop_assert!(w[0].hi <= w[1].lo);
        }
    }

    #[test]
    fn sturm_matches_naive_rational_chain(f in poly_strategy(9, 7), a in -6i64..=6, b in -6i64..=6) {
        prop_assume!(!f.is_zero());
        prop_assume!(a < b);
        // Oracle: the classical chain over Q with exact rational remainders.
        let sf = f.squarefree_part().unwrap();
        let mut chain = vec![sf.clone(), sf.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let r = chain[n - 2].div_rem(&chain[n - 1]).unwrap().1;
            chain.push(r.neg());
        }
        chain.pop();
        let vars = |at: &Rat| {
            let mut c = 0;
            let mut last = 0i32;
            for p in &chain {
                let s = mspectra_core::rat::sign(&p.eval(at));
                if s == 0 { continue; }
                if last != 0 && s != last { c += 1; }
                last = s;
            }
            c
        };
        let lo = rat_int(a);
        let hi = rat_int(b);
        let naive = vars(&lo) - vars(&hi);
        let fast = sturm_count(&f, &Bound::Finite(lo), &Bound::Finite(hi)).unwrap();
        prop_assert_eq!(fast, naive);
    }

    #[test]
    fn charpoly_matches_determinant_evaluation(
        entries in prop::collection::vec(-4i64..=4, 36),
        n in 1usize..=6,
    ) {
        let m = RatMatrix::from_fn(n, n, |i, j| rat_int(entries[i * 6 + j]));
        let phi = m.charpoly().unwrap();
        // independent oracle: exact determinant of (xI - m) at n+1 points
        for t in 0..=(n as i64) {
            let x = rat_int(t - 3);
            let shifted = RatMatrix::from_fn(n, n, |i, j| {
                if i == j { &x - &m[(i, j)] } else { -&m[(i, j)].clone() }
            });
            prop_assert_eq!(phi.eval(&x), naive_det(&shifted));
        }
    }

    #[test]
    fn resultant_over_split_modulus(r1 in -4i64..=4, r2 in -4i64..=4, r3 in -4i64..=4,
                                    fc in prop::collection::vec(-3i64..=3, 1..=4),
                                    gc in prop::collection::vec(-3i64..=3, 1..=3)) {
        // p = (t-r1)(t-r2)(t-r3) monic split: Res_t(p, f - t g) = prod (f - ri g)
        let lin = |r: i64| Poly::from_i64(&[-r, 1]);
        let p = lin(r1).mul(&lin(r2)).mul(&lin(r3));
        let f = Poly::from_i64(&fc);
        let g = Poly::from_i64(&gc);
        let res = mspectra_core::resultant::resultant_in_t(&p, &[f.clone(), g.neg()]).unwrap();
        let expect = [r1, r2, r3]
            .iter()
            .fold(Poly::one(), |acc, &r| acc.mul(&f.sub(&g.mul_scalar(&rat_int(r)))));
        prop_assert_eq!(res, expect);
    }

    #[test]
    fn graph6_round_trip(n in 1usize..=62, seed in any::<u64>()) {
        // deterministic pseudo-random edge set from the seed
        let mut edges = Vec::new();
        let mut state = seed | 1;
        for i in 1..=n {
            for j in (i + 1)..=n {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if state >> 63 == 1 {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let enc = encode_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn poly_display_round_trip(f in poly_strategy(8, 9)) {
        let shown = f.to_string();
        let back: Poly = shown.parse().unwrap();
        prop_assert_eq!(&back, &f);
        // JSON coefficient-string encoding round-trips too
        let js = serde_json::to_string(&f).unwrap();
        let back: Poly = serde_json::from_str(&js).unwrap();
        prop_assert_eq!(&back, &f);
    }

    #[test]
    fn canonical_form_invariant_under_relabeling(seed in any::<u64>(), n in 2usize..=7) {
        let mut state = seed | 1;
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if state >> 63 == 1 {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        // rotate labels as a nontrivial relabeling
        let perm: Vec<usize> = (1..=n).map(|v| v % n + 1).collect();
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap().edges, canonical_form(&h).unwrap().edges);
    }
}

fn naive_det(m: &RatMatrix) -> Rat {
    // fraction-full Gaussian elimination over Q, independent of Bareiss
    let n = m.rows();
    let mut a: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| m[(i, j)].clone()).collect())
        .collect();
    let mut det = rat_int(1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !num_traits::Zero::is_zero(&a[i][k])) else {
            return rat_int(0);
        };
        if p != k {
            a.swap(k, p);
            det = -det;
        }
        let piv = a[k][k].clone();
        det *= &piv;
        for i in (k + 1)..n {
            let f = &a[i][k] / &piv;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

/// Enumerate every labeled graph on n vertices (n <= 6) and verify the
/// canonical form is a complete isomorphism invariant against brute-force
/// permutation search.
#[test]
fn canonical_form_complete_at_small_orders() {
    let class_counts = [1usize, 2, 4, 11, 34, 156];
    for n in 1..=6usize {
        let bits = n * (n - 1) / 2;
        let mut reps: std::collections::BTreeMap<Vec<(usize, usize)>, Graph> =
            std::collections::BTreeMap::new();
        for mask in 0u64..(1 << bits) {
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
            let g = Graph::new(n, &edges).unwrap();
            let c = canonical_form(&g).unwrap();
            // the canonical form is reachable by an actual relabeling
            reps.entry(c.edges).or_insert(g);
        }
        assert_eq!(reps.len(), class_counts[n - 1], "class count at order {n}");
        // distinct canonical forms are genuinely non-isomorphic (exhaustive
        // search), and identical ones genuinely isomorphic
        let graphs: Vec<&Graph> = reps.values().collect();
        for (i, a) in graphs.iter().enumerate() {
            for b in graphs.iter().skip(i + 1) {
                if a.degree_sequence() == b.degree_sequence() {
                    assert!(!brute_iso(a, b), "order {n} canonical collision");
                }
            }
        }
    }
}

fn brute_iso(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    let mut perm: Vec<usize> = (1..=n).collect();
    let target: std::collections::BTreeSet<(usize, usize)> = b.edges().iter().cloned().collect();
    fn heap(
        k: usize,
        perm: &mut Vec<usize>,
        a: &Graph,
        target: &std::collections::BTreeSet<(usize, usize)>,
    ) -> bool {
        let n = perm.len();
        if k == n {
            let image: std::collections::BTreeSet<(usize, usize)> = a
                .edges()
                .iter()
                .map(|&(x, y)| {
                    let (p, q) = (perm[x - 1], perm[y - 1]);
                    (p.min(q), p.max(q))
                })
                .collect();
            return image == *target;
        }
        for i in k..n {
            perm.swap(k, i);
            if heap(k + 1, perm, a, target) {
                perm.swap(k, i);
                return true;
            }
            perm.swap(k, i);
        }
        false
    }
    heap(0, &mut perm, a, &target)
}

/// ext_rank branch ranks are stable under row/column permutations: matching
/// factors (nontrivial gcd) report identical ranks.
#[test]
fn ext_rank_permutation_stable() {
    let p = Poly::from_i64(&[0, 1])
        .mul(&Poly::from_i64(&[-1, 1]))
        .mul(&Poly::from_i64(&[-4, 1]));
    let ext = Extension::new(&p).unwrap();
    let t = Poly::x;
    let m = vec![
        vec![t(), Poly::one(), Poly::from_i64(&[-1, 1])],
        vec![Poly::one(), t(), Poly::zero()],
        vec![t().mul(&t()), Poly::one(), Poly::from_i64(&[0, 2])],
    ];
    let base = ext_rank(&m, &ext).unwrap();
    // a few row/column permutations of the same matrix
    let perms: [[usize; 3]; 3] = [[1, 0, 2], [2, 1, 0], [1, 2, 0]];
    for rp in &perms {
        for cp in &perms {
            let pm: Vec<Vec<Poly>> = rp
                .iter()
                .map(|&i| cp.iter().map(|&j| m[i][j].clone()).collect())
                .collect();
            let got = ext_rank(&pm, &ext).unwrap();
            for a in &base {
                for b in &got {
                    let g = Poly::gcd(&a.factor, &b.factor).unwrap();
                    if !g.is_constant() {
                        assert_eq!(
                            a.rank, b.rank,
                            "ranks differ on shared factor {g} ({rp:?}/{cp:?})"
                        );
                    }
                }
            }
        }
    }
}

/// Every controllable graph of order 6 and 7 has a Wronskian vertex (the
/// closing observation of the census), vacuous below 6.
#[test]
fn subset_observation_orders_6_and_7() {
    for n in 6..=7usize {
        let graphs = generate_connected(n).unwrap();
        let (ok, cex) =
            mspectra_core::census::subset_observation(&graphs, &MatrixKind::Adjacency).unwrap();
        assert!(ok, "order {n}: counterexamples {cex:?}");
    }
}

/// Controllable implies separable across the whole order <= 7 census.
#[test]
fn controllable_implies_separable_census() {
    for n in 1..=7usize {
        for g in generate_connected(n).unwrap() {
            let rep = is_controllable_graph(&g, &MatrixKind::Adjacency).unwrap();
            if rep.controllable {
                assert!(
                    analysis::is_separable(&g, &MatrixKind::Adjacency)
                        .unwrap()
                        .separable,
                    "order {n}"
                );
            }
        }
    }
}

/// Cospectral factors yield cospectral rooted products: harvested from the
/// order-6 census (the smallest connected cospectral A-pairs live there).
#[test]
fn cospectral_factors_give_cospectral_products() {
    let graphs = generate_connected(6).unwrap();
    let classes = cospectral_classes(&graphs, &MatrixKind::Adjacency);
    let nontrivial: Vec<&Vec<usize>> = classes
        .iter()
        .filter(|(_, m)| m.len() > 1)
        .map(|(_, m)| m)
        .collect();
    assert!(
        !nontrivial.is_empty(),
        "order-6 census should contain cospectral pairs"
    );
    let hs = [path(2).unwrap(), path(4).unwrap()];
    let mut checked = 0;
    for members in nontrivial.iter().take(3) {
        let g1 = &graphs[members[0]];
        let g2 = &graphs[members[1]];
        for h in &hs {
            let p1 = rooted_product(g1, h, 1).unwrap();
            let p2 = rooted_product(g2, h, 1).unwrap();
            assert_eq!(
                charpoly_m(&p1.graph, &MatrixKind::Adjacency),
                charpoly_m(&p2.graph, &MatrixKind::Adjacency)
            );
            checked += 1;
        }
    }
    assert!(checked > 0);
}

/// Spectrum-unique factors keep their products spectrum-determined at tiny
/// orders: across all connected graphs of order <= 5 (every one of which is
/// spectrum-unique within its order class), rooted products with a fixed
/// Wronskian-rooted H are cospectral only for isomorphic factors.
#[test]
fn unique_spectrum_products_stay_unique() {
    let h = path(2).unwrap();
    for n in 2..=5usize {
        let graphs = generate_connected(n).unwrap();
        // precondition of the statement: within the order class, spectra unique
        let classes = cospectral_classes(&graphs, &MatrixKind::Adjacency);
        assert!(classes.iter().all(|(_, m)| m.len() == 1), "order {n}");
        let products: Vec<Poly> = graphs
            .iter()
            .map(|g| {
                charpoly_m(
                    &rooted_product(g, &h, 1).unwrap().graph,
                    &MatrixKind::Adjacency,
                )
            })
            .collect();
        for i in 0..products.len() {
            for j in (i + 1)..products.len() {
                if products[i] == products[j] {
                    assert!(
                        is_isomorphic(&graphs[i], &graphs[j]),
                        "order {n}: cospectral products from non-isomorphic factors"
                    );
                }
            }
        }
    }
}
