//! Graph products (rooted, C-product, Cartesian), Kronecker assembly of the
//! product's M-matrix, and the pendant-path charpoly recurrences.
//!
//! Product vertices (u_i, v_j) are flattened H-major, to index (j-1)*n + i,
//! so the Kronecker identity C (x) M(G) + M(H) (x) I_n holds literally (not
//! merely up to permutation).

use crate::error::{Error, Result};
use crate::family::{build_matrix, deleted_charpoly, MatrixKind};
use crate::graph::Graph;
use crate::matrix::RatMatrix;
use crate::poly::Poly;
use crate::rat::Rat;
use num_traits::{One, Zero};

/// Structure class of a (0,1)-symmetric coupling matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum CClass {
    Identity,
    /// E_{ii} (1-based index).
    SingleEntry(usize),
    Diagonal,
    GeneralSymmetric,
}

/// (0,1)-symmetric coupling matrix of order m = |V(H)|.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMatrix {
    m: usize,
    rows: Vec<Vec<u8>>,
}

impl CMatrix {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<CMatrix> {
        let m = rows.len();
        for r in &rows {
            if r.len() != m {
                return Err(Error::invalid("C matrix must be square"));
            }
        }
        for i in 0..m {
            for j in 0..m {
                if rows[i][j] > 1 {
                    return Err(Error::invalid("C matrix entries must be 0 or 1"));
                }
                if rows[i][j] != rows[j][i] {
                    return Err(Error::invalid("C matrix must be symmetric"));
                }
            }
        }
        Ok(CMatrix { m, rows })
    }

    pub fn identity(m: usize) -> CMatrix {
        let rows = (0..m)
            .map(|i| (0..m).map(|j| u8::from(i == j)).collect())
            .collect();
        CMatrix { m, rows }
    }

    /// E_{ii} with 1-based i.
    pub fn single_entry(m: usize, i: usize) -> Result<CMatrix> {
        if i == 0 || i > m {
            return Err(Error::invalid(format!("E index {i} out of range 1..={m}")));
        }
        let rows = (0..m)
            .map(|r| (0..m).map(|c| u8::from(r == i - 1 && c == i - 1)).collect())
            .collect();
        Ok(CMatrix { m, rows })
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.rows[i - 1][j - 1]
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.m).all(|i| (0..self.m).all(|j| i == j || self.rows[i][j] == 0))
    }

    pub fn classify(&self) -> CClass {
        if !self.is_diagonal() {
            return CClass::GeneralSymmetric;
        }
        let ones: Vec<usize> = (0..self.m).filter(|&i| self.rows[i][i] == 1).collect();
        if ones.len() == self.m {
            CClass::Identity
        } else if ones.len() == 1 {
            CClass::SingleEntry(ones[0] + 1)
        } else {
            CClass::Diagonal
        }
    }

    pub fn to_rat_matrix(&self) -> RatMatrix {
        RatMatrix::from_fn(self.m, self.m, |i, j| {
            Rat::from_integer(self.rows[i][j].into())
        })
    }

    /// Diagonal matrix of row sums (C_1 in the degree identity).
    pub fn row_sum_diagonal(&self) -> RatMatrix {
        RatMatrix::from_fn(self.m, self.m, |i, j| {
            if i == j {
                Rat::from_integer(self.rows[i].iter().map(|&x| x as i64).sum::<i64>().into())
            } else {
                Rat::zero()
            }
        })
    }

    /// Parse a 0/1 text grid, one row per line, entries separated by spaces
    /// or adjacent digits.
    pub fn parse_grid(text: &str) -> Result<CMatrix> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row: Vec<u8> = if line.contains(char::is_whitespace) {
                line.split_whitespace()
                    .map(|t| match t {
                        "0" => Ok(0u8),
                        "1" => Ok(1u8),
                        _ => Err(Error::parse(0, format!("bad C entry {t:?}"))),
                    })
                    .collect::<Result<_>>()?
            } else {
                line.chars()
                    .map(|c| match c {
                        '0' => Ok(0u8),
                        '1' => Ok(1u8),
                        _ => Err(Error::parse(0, format!("bad C entry {c:?}"))),
                    })
                    .collect::<Result<_>>()?
            };
            rows.push(row);
        }
        CMatrix::new(rows)
    }
}

/// A constructed product graph together with its factor data and the flat
/// vertex ordering (H-major).
#[derive(Clone, Debug)]
pub struct ProductResult {
    pub graph: Graph,
    pub g: Graph,
    pub h: Graph,
    pub c: CMatrix,
    /// Root vertex of H for rooted products.
    pub root: Option<usize>,
}

impl ProductResult {
    /// Flat label of (u_i, v_j), all 1-based.
    pub fn flat_index(&self, i: usize, j: usize) -> usize {
        (j - 1) * self.g.order() + i
    }

    /// Inverse of `flat_index`.
    pub fn unflatten(&self, v: usize) -> (usize, usize) {
        let n = self.g.order();
        (((v - 1) % n) + 1, ((v - 1) / n) + 1)
    }
}

/// The C-product: (u_i1, v_j1) ~ (u_i2, v_j2) iff u's adjacent in G with
/// c_{j1 j2} = 1, or v's adjacent in H with i1 = i2. Weighted factors induce
/// the corresponding weighted product.
pub fn c_product(g: &Graph, h: &Graph, c: &CMatrix) -> Result<ProductResult> {
    if c.order() != h.order() {
        return Err(Error::invalid(format!(
            "C order {} must match |V(H)| = {}",
            c.order(),
            h.order()
        )));
    }
    let n = g.order();
    let m = h.order();
    let weighted = g.is_weighted() || h.is_weighted();
    let mut edges = Vec::new();
    let flat = |i: usize, j: usize| (j - 1) * n + i;
    // G-side edges, one per coupled layer pair.
    for j1 in 1..=m {
        for j2 in j1..=m {
            if c.get(j1, j2) == 0 {
                continue;
            }
            for &(i1, i2) in g.edges() {
                let a = flat(i1, j1);
                let b = flat(i2, j2);
                let w = g.weight(i1, i2);
                edges.push((a.min(b), a.max(b), w.clone()));
                if j1 != j2 {
                    let a = flat(i2, j1);
                    let b = flat(i1, j2);
                    edges.push((a.min(b), a.max(b), w));
                }
            }
        }
    }
    // H-side edges within each column.
    for i in 1..=n {
        for &(j1, j2) in h.edges() {
            let a = flat(i, j1);
            let b = flat(i, j2);
            edges.push((a.min(b), a.max(b), h.weight(j1, j2)));
        }
    }
    let graph = if weighted {
        Graph::weighted(n * m, &edges)?
    } else {
        let bare: Vec<(usize, usize)> = edges.iter().map(|&(a, b, _)| (a, b)).collect();
        Graph::new(n * m, &bare)?
    };
    Ok(ProductResult {
        graph,
        g: g.clone(),
        h: h.clone(),
        c: c.clone(),
        root: None,
    })
}

/// Rooted product: one copy of H per vertex of G, roots identified with the
/// G-vertices. Exactly `c_product(g, h, E_{root,root})`.
pub fn rooted_product(g: &Graph, h: &Graph, root: usize) -> Result<ProductResult> {
    let c = CMatrix::single_entry(h.order(), root)?;
    let mut p = c_product(g, h, &c)?;
    p.root = Some(root);
    Ok(p)
}

/// Cartesian product: `c_product` with C = I.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<ProductResult> {
    c_product(g, h, &CMatrix::identity(h.order()))
}

/// Kronecker assembly C (x) M(G) + M(H) (x) I_n of the product's M-matrix.
///
/// Valid for arbitrary kinds only when C is diagonal (then the row-sum
/// diagonal C_1 equals C); for general symmetric C only the adjacency kind
/// satisfies the identity, and other kinds are refused.
pub fn assemble_product_matrix(
    g: &Graph,
    h: &Graph,
    c: &CMatrix,
    kind: &MatrixKind,
) -> Result<RatMatrix> {
    if c.order() != h.order() {
        return Err(Error::invalid(format!(
            "C order {} must match |V(H)| = {}",
            c.order(),
            h.order()
        )));
    }
    if !c.is_diagonal() && *kind != MatrixKind::Adjacency {
        return Err(Error::invalid(
            "Kronecker assembly with a non-diagonal C holds only for the adjacency kind: \
             the degree term picks up (C_1 - C) (x) D(G) != 0",
        ));
    }
    let mg = build_matrix(g, kind);
    let mh = build_matrix(h, kind);
    let id = RatMatrix::identity(g.order());
    Ok(c.to_rat_matrix().kronecker(&mg).add(&mh.kronecker(&id)))
}

/// Charpoly pair (f_n, g_n) of the pendant-path extension G_v^n under kind
/// U(a, d): f_n is the charpoly of U(G_v^n), g_n of its principal submatrix
/// with the pendant u_n deleted. Computed by the three-term recurrences
///   g_n = (x - 2d) g_{n-1} - a^2 g_{n-2}   (n >= 2)
///   f_n = (x - d) g_n - a^2 g_{n-1}        (n >= 1)
/// with base cases taken from direct computation.
pub fn pendant_recurrence(
    g: &Graph,
    v: usize,
    n: usize,
    kind: &MatrixKind,
) -> Result<(Poly, Poly)> {
    if v == 0 || v > g.order() {
        return Err(Error::invalid(format!(
            "vertex {v} out of range 1..={}",
            g.order()
        )));
    }
    if n == 0 {
        return Err(Error::invalid("pendant recurrence needs n >= 1"));
    }
    let a = kind.coeff_a();
    let d = kind.coeff_d();
    let a2 = &a * &a;
    let x_minus_2d = Poly::from_coeffs(vec![-(&d + &d), Rat::one()]);
    let x_minus_d = Poly::from_coeffs(vec![-d.clone(), Rat::one()]);

    let g0 = deleted_charpoly(g, kind, v)?;
    let ext1 = g.pendant_path_extend(v, 1)?;
    let g1 = deleted_charpoly(&ext1, kind, ext1.order())?;

    let mut prev = g0; // g_{k-1}
    let mut cur = g1; // g_k
    for _ in 2..=n {
        let next = x_minus_2d.mul(&cur).sub(&prev.mul_scalar(&a2));
        prev = cur;
        cur = next;
    }
    let f = x_minus_d.mul(&cur).sub(&prev.mul_scalar(&a2));
    Ok((f, cur))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::family::charpoly_m;
    use crate::fixtures::{fig1_product, fixture, path};
    use crate::rat::rat_int;

    #[test]
    fn rooted_product_shapes() {
        // K1 o H = H.
        let k1 = Graph::empty(1);
        let h = fixture("H3").unwrap();
        let p = rooted_product(&k1, &h, 2).unwrap();
        assert_eq!(p.graph.order(), h.order());
        assert!(is_isomorphic(&p.graph, &h));
        // P2 o P2 at an endpoint = P4.
        let p2 = path(2).unwrap();
        let p4 = rooted_product(&p2, &p2, 1).unwrap();
        assert!(is_isomorphic(&p4.graph, &path(4).unwrap()));
        // |E| = |E(g)| + |g| * |E(h)|.
        let g = fixture("H9").unwrap();
        let h = fixture("H10").unwrap();
        let p = rooted_product(&g, &h, 7).unwrap();
        assert_eq!(p.graph.order(), 49);
        assert_eq!(
            p.graph.edge_count(),
            g.edge_count() + g.order() * h.edge_count()
        );
    }

    #[test]
    fn figure_one_instance() {
        let p3 = path(3).unwrap();
        let c = CMatrix::new(vec![vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 1]]).unwrap();
        let prod = c_product(&p3, &p3, &c).unwrap();
        assert_eq!(prod.graph, fig1_product());
        assert_eq!(prod.graph.edge_count(), 14);
    }

    #[test]
    fn flat_ordering_is_h_major() {
        let prod = c_product(&path(3).unwrap(), &path(3).unwrap(), &CMatrix::identity(3)).unwrap();
        assert_eq!(prod.flat_index(2, 3), 8);
        assert_eq!(prod.unflatten(8), (2, 3));
        for v in 1..=9 {
            let (i, j) = prod.unflatten(v);
            assert_eq!(prod.flat_index(i, j), v);
        }
    }

    #[test]
    fn cartesian_of_edges_is_c4() {
        let p2 = path(2).unwrap();
        let c4 = cartesian_product(&p2, &p2).unwrap();
        let expect = Graph::new(4, &[(1, 2), (3, 4), (1, 3), (2, 4)]).unwrap();
        assert_eq!(c4.graph, expect);
    }

    #[test]
    fn single_entry_c_is_rooted() {
        let names = [
            "H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8", "H9", "H10",
        ];
        let g = path(3).unwrap();
        for name in names {
            let h = fixture(name).unwrap();
            for root in 1..=h.order() {
                let rp = rooted_product(&g, &h, root).unwrap();
                let cp =
                    c_product(&g, &h, &CMatrix::single_entry(h.order(), root).unwrap()).unwrap();
                assert_eq!(rp.graph, cp.graph, "{name} root {root}");
            }
        }
    }

    #[test]
    fn kronecker_assembly_matches_construction() {
        // Figure 1 instance under A.
        let p3 = path(3).unwrap();
        let c = CMatrix::new(vec![vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 1]]).unwrap();
        let assembled = assemble_product_matrix(&p3, &p3, &c, &MatrixKind::Adjacency).unwrap();
        let built = build_matrix(
            &c_product(&p3, &p3, &c).unwrap().graph,
            &MatrixKind::Adjacency,
        );
        assert_eq!(assembled, built);
        // Cartesian with L.
        let p2 = path(2).unwrap();
        let ci = CMatrix::identity(2);
        let asm = assemble_product_matrix(&p2, &p2, &ci, &MatrixKind::Laplacian).unwrap();
        let direct = build_matrix(
            &cartesian_product(&p2, &p2).unwrap().graph,
            &MatrixKind::Laplacian,
        );
        assert_eq!(asm, direct);
        // Rooted with Q.
        let ce = CMatrix::single_entry(2, 1).unwrap();
        let asm = assemble_product_matrix(&p2, &p2, &ce, &MatrixKind::SignlessLaplacian).unwrap();
        let direct = build_matrix(
            &rooted_product(&p2, &p2, 1).unwrap().graph,
            &MatrixKind::SignlessLaplacian,
        );
        assert_eq!(asm, direct);
        // Non-diagonal C with a non-adjacency kind is refused.
        let err = assemble_product_matrix(&p3, &p3, &c, &MatrixKind::Laplacian);
        assert!(err.is_err());
    }

    #[test]
    fn classification() {
        assert_eq!(CMatrix::identity(3).classify(), CClass::Identity);
        assert_eq!(
            CMatrix::single_entry(3, 2).unwrap().classify(),
            CClass::SingleEntry(2)
        );
        let d = CMatrix::new(vec![vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(d.classify(), CClass::Diagonal);
        let g = CMatrix::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.classify(), CClass::GeneralSymmetric);
        assert!(CMatrix::new(vec![vec![0, 1], vec![0, 0]]).is_err());
        assert!(CMatrix::new(vec![vec![2]]).is_err());
    }

    #[test]
    fn degree_identity_for_products() {
        // diag D(G o_C H) = C_1 (x) D(G) + D(H) (x) I_n, structurally.
        let g = fixture("H3").unwrap();
        let h = path(3).unwrap();
        let c = CMatrix::new(vec![vec![1, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]).unwrap();
        let prod = c_product(&g, &h, &c).unwrap();
        let dk = MatrixKind::universal(rat_int(1), rat_int(1)).unwrap();
        let q = build_matrix(&prod.graph, &dk);
        let a = build_matrix(&prod.graph, &MatrixKind::Adjacency);
        // D = Q - A on the product side.
        let dg = build_matrix(&g, &dk)
            .add(&build_matrix(&g, &MatrixKind::Adjacency).scale(&rat_int(-1)));
        let dh = build_matrix(&h, &dk)
            .add(&build_matrix(&h, &MatrixKind::Adjacency).scale(&rat_int(-1)));
        let expect = c
            .row_sum_diagonal()
            .kronecker(&dg)
            .add(&dh.kronecker(&RatMatrix::identity(g.order())));
        let dprod = q.add(&a.scale(&rat_int(-1)));
        assert_eq!(dprod, expect);
    }

    #[test]
    fn recurrence_base_cases() {
        // K1 extended by one vertex under A gives f_1 = x^2 - 1 (that is P2).
        let k1 = Graph::empty(1);
        let (f1, g1) = pendant_recurrence(&k1, 1, 1, &MatrixKind::Adjacency).unwrap();
        assert_eq!(f1, Poly::from_i64(&[-1, 0, 1]));
        assert_eq!(g1, Poly::x());
    }

    #[test]
    fn recurrence_matches_direct() {
        let kinds: Vec<MatrixKind> = vec![
            MatrixKind::Adjacency,
            MatrixKind::Laplacian,
            MatrixKind::SignlessLaplacian,
            MatrixKind::alpha(crate::rat::rat(1, 3)).unwrap(),
            MatrixKind::universal(rat_int(2), rat_int(-1)).unwrap(),
        ];
        for base in ["H3", "H5"] {
            let g = fixture(base).unwrap();
            for kind in &kinds {
                for n in 1..=4usize {
                    let (f, gn) = pendant_recurrence(&g, 6, n, kind).unwrap();
                    let ext = g.pendant_path_extend(6, n).unwrap();
                    assert_eq!(f, charpoly_m(&ext, kind), "{base} {kind} f_{n}");
                    assert_eq!(
                        gn,
                        deleted_charpoly(&ext, kind, ext.order()).unwrap(),
                        "{base} {kind} g_{n}"
                    );
                }
            }
        }
    }
}
