//! Constructions of verified families: pendant-path Wronskian families and
//! cospectral separable pairs from rooted products, with every member
//! re-verified independently rather than trusted from the construction
//! theorem.

use crate::analysis::{rooted_separability, wronskian_vertex};
use crate::canon::{canonical_form, is_isomorphic};
use crate::error::{Error, Result};
use crate::family::{charpoly_m, MatrixKind};
use crate::graph::Graph;
use crate::poly::Poly;
use crate::products::rooted_product;
use crate::rat::{format_rat, Rat};

/// One verified member of a pendant-path family.
#[derive(Clone, Debug, serde::Serialize)]
pub struct FamilyMember {
    pub graph: Graph,
    /// The distinguished pendant vertex u_n (always the last label).
    pub pendant: usize,
    pub verified: bool,
}

/// Build G_v^n for n = 1..=n_max and verify that each pendant u_n is an
/// M-Wronskian vertex. The precondition (u_1 Wronskian in G_v^1) is checked
/// first and reported with the blocking gcd on failure; a later member
/// failing would falsify the propagation theorem and raises an invariant
/// violation.
pub fn wronskian_family(
    g: &Graph,
    v: usize,
    kind: &MatrixKind,
    n_max: usize,
) -> Result<Vec<FamilyMember>> {
    if n_max == 0 {
        return Err(Error::invalid("family needs n_max >= 1"));
    }
    let first = g.pendant_path_extend(v, 1)?;
    let rep = wronskian_vertex(&first, kind, first.order())?;
    if !rep.is_wronskian {
        return Err(Error::invalid(format!(
            "u_1 is not an M-Wronskian vertex of the length-1 extension; blocking gcd {}",
            rep.gcd
        )));
    }
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let ext = g.pendant_path_extend(v, n)?;
        let pendant = ext.order();
        let rep = wronskian_vertex(&ext, kind, pendant)?;
        if !rep.is_wronskian {
            return Err(Error::invariant(format!(
                "pendant family member n={n} failed the Wronskian check (gcd {})",
                rep.gcd
            )));
        }
        out.push(FamilyMember {
            graph: ext,
            pendant,
            verified: true,
        });
    }
    Ok(out)
}

/// Report for a constructed cospectral pair of rooted products.
#[derive(Clone, Debug, serde::Serialize)]
pub struct CospectralPairReport {
    pub product1: Graph,
    pub product2: Graph,
    /// The shared product charpoly (exact equality asserted).
    pub charpoly: Poly,
    pub separable: bool,
    /// True iff the factors (hence the products) are non-isomorphic.
    pub non_isomorphic: bool,
    /// Set when g1 and g2 were isomorphic to begin with (degenerate input).
    pub degenerate: bool,
    /// Direct canonical-form confirmation of product non-isomorphism, only
    /// attempted when the product order is within canonicalization range.
    pub canonical_confirmed: Option<bool>,
}

/// Construct G1 o H and G2 o H and verify the pair is M-cospectral,
/// M-separable, and non-isomorphic. Preconditions (cospectral factors, both
/// separable, Wronskian root) are checked and named on failure.
pub fn cospectral_rooted_pair(
    g1: &Graph,
    g2: &Graph,
    h: &Graph,
    root: usize,
    kind: &MatrixKind,
) -> Result<CospectralPairReport> {
    let phi1 = charpoly_m(g1, kind);
    let phi2 = charpoly_m(g2, kind);
    if phi1 != phi2 {
        return Err(Error::invalid(
            "precondition failed: g1 and g2 are not M-cospectral",
        ));
    }
    if !phi1.is_squarefree()? {
        return Err(Error::invalid(
            "precondition failed: g1 (hence g2) is not M-separable",
        ));
    }
    let rep = wronskian_vertex(h, kind, root)?;
    if !rep.is_wronskian {
        return Err(Error::invalid(format!(
            "precondition failed: root {root} is not an M-Wronskian vertex of H (gcd {})",
            rep.gcd
        )));
    }
    let p1 = rooted_product(g1, h, root)?;
    let p2 = rooted_product(g2, h, root)?;
    let c1 = charpoly_m(&p1.graph, kind);
    let c2 = charpoly_m(&p2.graph, kind);
    if c1 != c2 {
        return Err(Error::invariant(
            "cospectral factors produced non-cospectral products",
        ));
    }
    // Separability of each product, two-route checked inside.
    let v1 = rooted_separability(g1, h, root, kind)?;
    let v2 = rooted_separability(g2, h, root, kind)?;
    if !v1.separable || !v2.separable {
        return Err(Error::invariant(
            "separable factors with a Wronskian root produced an inseparable product",
        ));
    }
    let degenerate = is_isomorphic(g1, g2);
    let non_isomorphic = !degenerate;
    let canonical_confirmed = if p1.graph.order() <= 12 {
        let k1 = canonical_form(&p1.graph)?;
        let k2 = canonical_form(&p2.graph)?;
        Some((k1.edges != k2.edges) == non_isomorphic)
    } else {
        None
    };
    if canonical_confirmed == Some(false) {
        return Err(Error::invariant(
            "factor-level and canonical-form isomorphism verdicts disagree",
        ));
    }
    Ok(CospectralPairReport {
        product1: p1.graph,
        product2: p2.graph,
        charpoly: c1,
        separable: true,
        non_isomorphic,
        degenerate,
        canonical_confirmed,
    })
}

/// Result of sweeping exact rational alpha values.
#[derive(Clone, Debug, serde::Serialize)]
pub struct AlphaSweep {
    /// (alpha, is-Wronskian) for every grid point, in grid order.
    pub verdicts: Vec<(String, bool)>,
    /// The alphas with a nontrivial gcd (not a Wronskian vertex), with the
    /// blocking gcd.
    pub hits: Vec<(String, Poly)>,
}

/// Evaluate the A_alpha Wronskian-vertex verdict at each exact rational
/// alpha in the grid; returns all verdicts plus the non-Wronskian hits.
pub fn alpha_sweep(h: &Graph, u: usize, grid: &[Rat]) -> Result<AlphaSweep> {
    let mut verdicts = Vec::with_capacity(grid.len());
    let mut hits = Vec::new();
    for alpha in grid {
        let kind = MatrixKind::alpha(alpha.clone())?;
        let rep = wronskian_vertex(h, &kind, u)?;
        verdicts.push((format_rat(alpha), rep.is_wronskian));
        if !rep.is_wronskian {
            hits.push((format_rat(alpha), rep.gcd));
        }
    }
    Ok(AlphaSweep { verdicts, hits })
}

/// The 1/step grid 0, 1/step, ..., (step-1)/step.
pub fn unit_grid(step: u32) -> Vec<Rat> {
    (0..step).map(|k| Rat::new(k.into(), step.into())).collect()
}
