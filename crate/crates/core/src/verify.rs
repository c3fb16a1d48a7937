//! Seeded cross-validation suites: every identity that admits two
//! independent computation routes is exercised on randomized instances, and
//! the eigenvector structure of coupled products is checked numerically.
//! These suites back both the `verify` CLI subcommand and the test suite.

use crate::analysis::{cartesian_separability, rooted_separability, rooted_spectrum_factors};
use crate::control::rooted_controllability;
use crate::error::Result;
use crate::family::{
    adjugate_column_identity, build_matrix, charpoly_m, deleted_charpoly, MatrixKind,
};
use crate::fixtures::{fixture, g1};
use crate::graph::Graph;
use crate::matrix::RatMatrix;
use crate::products::{assemble_product_matrix, c_product, pendant_recurrence, CMatrix};
use crate::rat::{rat, to_f64};
use nalgebra::DMatrix;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5eed_0001;

#[derive(Clone, Debug, serde::Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub cases: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: DEFAULT_SEED,
            cases: 100,
        }
    }
}

fn random_graph(rng: &mut ChaCha8Rng, min_order: usize, max_order: usize) -> Graph {
    let n = rng.gen_range(min_order..=max_order);
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if rng.gen_bool(0.5) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("random edges are valid")
}

/// Sometimes weighted: the route agreements hold for weighted graphs too,
/// so a third of the random instances carry nonzero rational weights.
fn random_maybe_weighted(rng: &mut ChaCha8Rng, min_order: usize, max_order: usize) -> Graph {
    let g = random_graph(rng, min_order, max_order);
    if g.edge_count() == 0 || rng.gen_range(0..3) > 0 {
        return g;
    }
    let pool = [
        rat(1, 1),
        rat(2, 1),
        rat(-1, 1),
        rat(1, 2),
        rat(3, 2),
        rat(-1, 2),
    ];
    let weighted: Vec<(usize, usize, crate::rat::Rat)> = g
        .edges()
        .iter()
        .map(|&(a, b)| (a, b, pool[rng.gen_range(0..pool.len())].clone()))
        .collect();
    Graph::weighted(g.order(), &weighted).expect("nonzero weights")
}

fn random_symmetric_c(rng: &mut ChaCha8Rng, m: usize, diagonal: bool) -> CMatrix {
    let mut rows = vec![vec![0u8; m]; m];
    for i in 0..m {
        for j in i..m {
            if j > i && diagonal {
                continue;
            }
            let bit = u8::from(rng.gen_bool(0.5));
            rows[i][j] = bit;
            rows[j][i] = bit;
        }
    }
    CMatrix::new(rows).expect("constructed symmetric 0/1")
}

fn kind_pool() -> Vec<MatrixKind> {
    vec![
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
        MatrixKind::alpha(rat(1, 3)).expect("1/3 in range"),
        MatrixKind::universal(rat(2, 1), rat(-1, 1)).expect("a != 0"),
    ]
}

fn pick_kind(rng: &mut ChaCha8Rng) -> MatrixKind {
    let pool = kind_pool();
    pool[rng.gen_range(0..pool.len())].clone()
}

/// Resultant-route product charpoly equals the direct charpoly (the
/// assertion lives inside `rooted_spectrum_factors`).
pub fn suite_spectrum_resultant(cfg: &VerifyConfig) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x01);
    let mut failures = Vec::new();
    for case in 0..cfg.cases {
        let g = random_maybe_weighted(&mut rng, 1, 4);
        let h = random_maybe_weighted(&mut rng, 1, 4);
        let root = rng.gen_range(1..=h.order());
        let kind = pick_kind(&mut rng);
        if let Err(e) = rooted_spectrum_factors(&g, &h, root, &kind) {
            failures.push(format!("case {case}: {e}"));
        }
    }
    SuiteResult {
        name: "spectrum-factorization resultant vs direct".into(),
        cases: cfg.cases,
        failures,
    }
}

/// Rooted separability: squarefree route vs theorem route.
pub fn suite_rooted_separability(cfg: &VerifyConfig) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x02);
    let mut failures = Vec::new();
    for case in 0..cfg.cases {
        let g = random_maybe_weighted(&mut rng, 1, 4);
        let h = random_maybe_weighted(&mut rng, 1, 4);
        let root = rng.gen_range(1..=h.order());
        let kind = pick_kind(&mut rng);
        if let Err(e) = rooted_separability(&g, &h, root, &kind) {
            failures.push(format!("case {case}: {e}"));
        }
    }
    SuiteResult {
        name: "rooted separability two-route agreement".into(),
        cases: cfg.cases,
        failures,
    }
}

/// Cartesian separability: difference-set route vs squarefree route.
pub fn suite_cartesian_separability(cfg: &VerifyConfig) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x03);
    let mut failures = Vec::new();
    for case in 0..cfg.cases {
        let g = random_maybe_weighted(&mut rng, 1, 4);
        let h = random_maybe_weighted(&mut rng, 1, 4);
        let kind = pick_kind(&mut rng);
        if let Err(e) = cartesian_separability(&g, &h, &kind) {
            failures.push(format!("case {case}: {e}"));
        }
    }
    SuiteResult {
        name: "Cartesian separability two-route agreement".into(),
        cases: cfg.cases,
        failures,
    }
}

/// Rooted controllability: direct walk-matrix rank vs the three-condition
/// decomposition with dynamic-evaluation ranks.
pub fn suite_rooted_controllability(cfg: &VerifyConfig) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x04);
    let mut failures = Vec::new();
    for case in 0..cfg.cases {
        let g = random_graph(&mut rng, 1, 3);
        let h = random_graph(&mut rng, 1, 4);
        let root = rng.gen_range(1..=h.order());
        let kind = if rng.gen_bool(0.5) {
            MatrixKind::Adjacency
        } else {
            MatrixKind::SignlessLaplacian
        };
        if let Err(e) = rooted_controllability(&g, &h, root, &kind) {
            failures.push(format!("case {case}: {e}"));
        }
    }
    SuiteResult {
        name: "rooted controllability two-route agreement".into(),
        cases: cfg.cases,
        failures,
    }
}

/// Pendant recurrences against direct computation on the named fixtures for
/// every kind in the pool and n <= 5.
pub fn suite_pendant_recurrence(_cfg: &VerifyConfig) -> SuiteResult {
    let mut failures = Vec::new();
    let mut cases = 0usize;
    let bases: Vec<(Graph, usize, &str)> = vec![
        (fixture("H3").expect("fixture"), 6, "H3"),
        (fixture("H5").expect("fixture"), 6, "H5"),
        (fixture("H6").expect("fixture"), 6, "H6"),
        (g1(5, 3).expect("fixture"), 4, "G1(5,3)"),
    ];
    for (g, v, name) in &bases {
        for kind in kind_pool() {
            for n in 1..=5usize {
                cases += 1;
                match pendant_recurrence(g, *v, n, &kind) {
                    Err(e) => failures.push(format!("{name} {kind} n={n}: {e}")),
                    Ok((f, gn)) => {
                        let ext = g.pendant_path_extend(*v, n).expect("valid vertex");
                        let direct_f = charpoly_m(&ext, &kind);
                        let direct_g =
                            deleted_charpoly(&ext, &kind, ext.order()).expect("valid vertex");
                        if f != direct_f || gn != direct_g {
                            failures.push(format!("{name} {kind} n={n}: recurrence != direct"));
                        }
                    }
                }
            }
        }
    }
    SuiteResult {
        name: "pendant recurrence vs direct".into(),
        cases,
        failures,
    }
}

/// Adjugate identity residual is zero on every fixture vertex.
pub fn suite_adjugate_identity(_cfg: &VerifyConfig) -> SuiteResult {
    let mut failures = Vec::new();
    let mut cases = 0usize;
    let names = [
        "H1",
        "H2",
        "H3",
        "H4",
        "H5",
        "H6",
        "H7",
        "H8",
        "H9",
        "H10",
        "P:2",
        "P:4",
        "G1:5:3",
        "Fig1Product",
    ];
    for name in names {
        let g = fixture(name).expect("fixture");
        for u in 1..=g.order() {
            cases += 1;
            match adjugate_column_identity(&g, u) {
                Err(e) => failures.push(format!("{name} v{u}: {e}")),
                Ok((ok, diff)) => {
                    if !ok {
                        failures.push(format!("{name} v{u}: residual {diff}"));
                    }
                }
            }
        }
    }
    SuiteResult {
        name: "adjugate column identity residuals".into(),
        cases,
        failures,
    }
}

/// Kronecker assembly equals the matrix of the constructed product graph
/// whenever defined, and the degree identity holds structurally.
pub fn suite_kronecker_assembly(cfg: &VerifyConfig) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x05);
    let mut failures = Vec::new();
    let cases = cfg.cases.max(200);
    for case in 0..cases {
        let g = random_maybe_weighted(&mut rng, 1, 4);
        let h = random_maybe_weighted(&mut rng, 1, 4);
        let diagonal = rng.gen_bool(0.5);
        let c = random_symmetric_c(&mut rng, h.order(), diagonal);
        let kind = if c.is_diagonal() {
            pick_kind(&mut rng)
        } else {
            MatrixKind::Adjacency
        };
        let prod = match c_product(&g, &h, &c) {
            Ok(p) => p,
            Err(e) => {
                failures.push(format!("case {case}: {e}"));
                continue;
            }
        };
        match assemble_product_matrix(&g, &h, &c, &kind) {
            Err(e) => failures.push(format!("case {case}: {e}")),
            Ok(asm) => {
                if asm != build_matrix(&prod.graph, &kind) {
                    failures.push(format!("case {case}: assembly != construction"));
                }
            }
        }
        // Degree identity: D(product) = C_1 (x) D(G) + D(H) (x) I_n.
        let dmat = |gr: &Graph| {
            let q = build_matrix(gr, &MatrixKind::SignlessLaplacian);
            let a = build_matrix(gr, &MatrixKind::Adjacency);
            q.add(&a.scale(&rat(-1, 1)))
        };
        let lhs = dmat(&prod.graph);
        let rhs = c
            .row_sum_diagonal()
            .kronecker(&dmat(&g))
            .add(&dmat(&h).kronecker(&RatMatrix::identity(g.order())));
        if lhs != rhs {
            failures.push(format!("case {case}: degree identity"));
        }
    }
    SuiteResult {
        name: "Kronecker assembly and degree identity".into(),
        cases,
        failures,
    }
}

/// Numeric eigenvector structure: eigenpairs of B(mu_j) and M(G) combine to
/// eigenpairs of the coupled product, residual below 1e-8 in f64.
pub fn suite_eigenvector_structure(cfg: &VerifyConfig) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x06);
    let mut failures = Vec::new();
    let cases = 20usize;
    for case in 0..cases {
        let g = random_maybe_weighted(&mut rng, 1, 4);
        let h = random_maybe_weighted(&mut rng, 1, 4);
        let c = random_symmetric_c(&mut rng, h.order(), true);
        let kind = pick_kind(&mut rng);
        let n = g.order();
        let m = h.order();
        let mg = to_na(&build_matrix(&g, &kind));
        let mh = to_na(&build_matrix(&h, &kind));
        let cf = to_na(&c.to_rat_matrix());
        let prod = assemble_product_matrix(&g, &h, &c, &kind).expect("diagonal C");
        let mp = to_na(&prod);
        let eg = nalgebra::SymmetricEigen::new(mg.clone());
        let mut worst: f64 = 0.0;
        for j in 0..n {
            let mu = eg.eigenvalues[j];
            let xi = eg.eigenvectors.column(j);
            let bmu = &mh + &cf * mu;
            let eb = nalgebra::SymmetricEigen::new(bmu);
            for i in 0..m {
                let lambda = eb.eigenvalues[i];
                let eta = eb.eigenvectors.column(i);
                // flat (u_i, v_j) index = (j-1)*n + i: eta (x) xi.
                let mut v = nalgebra::DVector::zeros(n * m);
                for jj in 0..m {
                    for ii in 0..n {
                        v[jj * n + ii] = eta[jj] * xi[ii];
                    }
                }
                let r = &mp * &v - &v * lambda;
                worst = worst.max(r.amax());
            }
        }
        if worst >= 1e-8 {
            failures.push(format!("case {case}: residual {worst:e}"));
        }
    }
    SuiteResult {
        name: "coupled-product eigenvector structure (numeric)".into(),
        cases,
        failures,
    }
}

/// Wronskian dual-route agreement over fixtures, kinds, vertices (the
/// assertion lives inside `wronskian_vertex`).
pub fn suite_wronskian_dual_route(_cfg: &VerifyConfig) -> SuiteResult {
    let mut failures = Vec::new();
    let mut cases = 0usize;
    let names = [
        "H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8", "H9", "H10", "P:3", "P:5", "G1:5:3",
        "G1:7:3",
    ];
    let kinds = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
        MatrixKind::alpha(rat(1, 3)).expect("1/3 in range"),
    ];
    for name in names {
        let g = fixture(name).expect("fixture");
        for kind in &kinds {
            for u in 1..=g.order() {
                cases += 1;
                if let Err(e) = crate::analysis::wronskian_vertex(&g, kind, u) {
                    failures.push(format!("{name} {kind} v{u}: {e}"));
                }
            }
        }
    }
    SuiteResult {
        name: "Wronskian gcd vs Sturm dual route".into(),
        cases,
        failures,
    }
}

/// Exact walk-matrix rank equals the numerically counted main eigenvalues on
/// random graphs (tolerance 1e-8).
pub fn suite_main_eigenvalue_count(cfg: &VerifyConfig) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x07);
    let mut failures = Vec::new();
    for case in 0..cfg.cases {
        let g = random_graph(&mut rng, 1, 7);
        let m = build_matrix(&g, &MatrixKind::Adjacency);
        let exact = crate::control::controllability_matrix(&m).exact_rank();
        let na = to_na(&m);
        let n = g.order();
        let eig = nalgebra::SymmetricEigen::new(na);
        // Group eigenvalues within tolerance, project the all-ones vector.
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&a, &b| {
            eig.eigenvalues[a]
                .partial_cmp(&eig.eigenvalues[b])
                .expect("finite")
        });
        let ones = nalgebra::DVector::from_element(n, 1.0f64);
        let mut numeric = 0usize;
        let mut k = 0usize;
        while k < n {
            let mut grp = vec![idx[k]];
            let mut k2 = k + 1;
            while k2 < n && (eig.eigenvalues[idx[k2]] - eig.eigenvalues[idx[k]]).abs() < 1e-8 {
                grp.push(idx[k2]);
                k2 += 1;
            }
            let mut proj: f64 = 0.0;
            for &c in &grp {
                let v = eig.eigenvectors.column(c);
                proj += v.dot(&ones).powi(2);
            }
            if proj.sqrt() > 1e-8 {
                numeric += 1;
            }
            k = k2;
        }
        if exact != numeric {
            failures.push(format!(
                "case {case}: exact rank {exact} vs numeric main count {numeric}"
            ));
        }
    }
    SuiteResult {
        name: "walk rank vs numeric main-eigenvalue count".into(),
        cases: cfg.cases,
        failures,
    }
}

/// Dynamic-evaluation factor ranks for B(t) controllability matrices match
/// floating-point ranks at each numerically isolated eigenvalue (1e-8).
pub fn suite_ext_rank_numeric(cfg: &VerifyConfig) -> SuiteResult {
    use crate::ext::{ext_rank, Extension};
    use crate::sturm::SturmChain;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x08);
    let mut failures = Vec::new();
    let cases = cfg.cases.min(40);
    for case in 0..cases {
        let g = random_graph(&mut rng, 2, 3);
        let h = random_graph(&mut rng, 2, 3);
        let root = rng.gen_range(1..=h.order());
        let kind = MatrixKind::Adjacency;
        let phi = charpoly_m(&g, &kind);
        let p = match phi.squarefree_part() {
            Ok(p) if !p.is_constant() => p,
            _ => continue,
        };
        let ext = match Extension::new(&p) {
            Ok(e) => e,
            Err(e) => {
                failures.push(format!("case {case}: {e}"));
                continue;
            }
        };
        // Controllability matrix of B(t) over Q[t], reused symbolically and
        // numerically.
        let m = h.order();
        let mh = build_matrix(&h, &kind);
        let mut perm: Vec<usize> = vec![root - 1];
        perm.extend((0..m).filter(|&i| i != root - 1));
        let mp = mh.permuted(&perm);
        let mut v: Vec<crate::Poly> = vec![crate::Poly::one(); m];
        let mut cols = Vec::with_capacity(m);
        for _ in 0..m {
            cols.push(v.clone());
            let mut next: Vec<crate::Poly> = (0..m)
                .map(|i| {
                    let mut acc = crate::Poly::zero();
                    for (j, vj) in v.iter().enumerate() {
                        if !mp[(i, j)].is_zero() {
                            acc = acc.add(&vj.mul_scalar(&mp[(i, j)]));
                        }
                    }
                    acc
                })
                .collect();
            next[0] = next[0].add(&v[0].mul(&crate::Poly::x()));
            v = next;
        }
        let kt: Vec<Vec<crate::Poly>> = (0..m)
            .map(|i| (0..m).map(|k| cols[k][i].clone()).collect())
            .collect();
        let ranks = match ext_rank(&kt, &ext) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("case {case}: {e}"));
                continue;
            }
        };
        for fr in &ranks {
            let chain = match SturmChain::new(&fr.factor) {
                Ok(c) => c,
                Err(e) => {
                    failures.push(format!("case {case}: {e}"));
                    continue;
                }
            };
            for iv in chain.isolate() {
                let tight = chain.refine(&iv, &rat(1, 1 << 30));
                let mu = to_f64(&tight.midpoint());
                let mut k_num = DMatrix::zeros(m, m);
                for i in 0..m {
                    for j in 0..m {
                        k_num[(i, j)] = to_f64(&kt[i][j].eval(&tight.midpoint()));
                    }
                }
                let numeric = k_num.rank(1e-8);
                if numeric != fr.rank {
                    failures.push(format!(
                        "case {case}: factor rank {} vs numeric {} at mu ~ {mu}",
                        fr.rank, numeric
                    ));
                }
            }
        }
    }
    SuiteResult {
        name: "dynamic-evaluation ranks vs numeric ranks".into(),
        cases,
        failures,
    }
}

fn to_na(m: &RatMatrix) -> DMatrix<f64> {
    DMatrix::from_row_slice(m.rows(), m.cols(), &m.to_f64_rowmajor())
}

/// Run every suite with the given seed and case count.
pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<SuiteResult>> {
    Ok(vec![
        suite_spectrum_resultant(cfg),
        suite_rooted_separability(cfg),
        suite_cartesian_separability(cfg),
        suite_rooted_controllability(cfg),
        suite_pendant_recurrence(cfg),
        suite_adjugate_identity(cfg),
        suite_kronecker_assembly(cfg),
        suite_eigenvector_structure(cfg),
        suite_wronskian_dual_route(cfg),
        suite_main_eigenvalue_count(cfg),
        suite_ext_rank_numeric(cfg),
    ])
}
