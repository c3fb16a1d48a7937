//! Separability verdicts with re-checkable certificates, Wronskian-vertex
//! detection, spectrum factorization of rooted products, and strict
//! interlacing tests.
//!
//! Every boolean answered here is computed along two independent routes where
//! the underlying theory supplies two; a disagreement raises an invariant
//! violation rather than silently picking one side. The one scoped exception
//! is a base graph of order 1: the product then *is* H, the theorem-side
//! route needs two distinct base eigenvalues to be necessary, and only the
//! implication (theorem route implies direct route) is asserted.

use crate::error::{Error, Result};
use crate::family::{charpoly_m, deleted_charpoly, MatrixKind};
use crate::graph::Graph;
use crate::poly::Poly;
use crate::products::{c_product, cartesian_product, rooted_product, CMatrix};
use crate::resultant::{resultant, resultant_in_t, root_difference_poly};
use crate::sturm::{Bound, RootInterval, SturmChain};
use num_traits::Zero;

/// Why a rooted product failed to be separable, in the terms of the two
/// separability conditions for rooted products.
#[derive(Clone, Debug, serde::Serialize)]
pub enum RootedFailure {
    /// The base graph itself has a repeated eigenvalue.
    BaseNotSeparable { gcd: Poly },
    /// Condition 1: phi(M(H)) and phi(M^u(H)) share the reported factor.
    CommonFactor { gcd: Poly },
    /// Condition 2: some base eigenvalue mu hits the critical set. The bad
    /// mu's are the roots of `mu_factor` (a factor of the base charpoly),
    /// isolated by `mu_intervals`; the repeated roots of the product lie in
    /// `root_intervals`, each refined to sit inside an isolating interval of
    /// a real root of the Wronskian polynomial.
    BadMu {
        repeated_factor: Poly,
        mu_factor: Poly,
        mu_intervals: Vec<RootInterval>,
        root_intervals: Vec<RootInterval>,
    },
}

/// Boolean verdict plus a machine-checkable certificate: the monic
/// gcd(charpoly, charpoly') — constant exactly when separable — and, for
/// rooted products, an attribution of the failure.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SeparabilityVerdict {
    pub separable: bool,
    pub charpoly: Poly,
    /// Monic gcd of the charpoly with its derivative; 1 iff separable.
    pub certificate: Poly,
    pub attribution: Option<RootedFailure>,
}

fn separability_of(phi: Poly) -> Result<SeparabilityVerdict> {
    let cert = Poly::gcd(&phi, &phi.derivative())?;
    Ok(SeparabilityVerdict {
        separable: cert.is_one(),
        charpoly: phi,
        certificate: cert,
        attribution: None,
    })
}

/// A graph is M-separable iff its M-charpoly is squarefree.
pub fn is_separable(g: &Graph, kind: &MatrixKind) -> Result<SeparabilityVerdict> {
    separability_of(charpoly_m(g, kind))
}

/// Wronskian-vertex report: the gcd route and the Sturm-on-W route are both
/// computed and must agree.
#[derive(Clone, Debug, serde::Serialize)]
pub struct WronskianReport {
    pub vertex: usize,
    pub is_wronskian: bool,
    /// W = phi * (phi^u)' - phi' * phi^u.
    pub wronskian_poly: Poly,
    /// Monic gcd(phi, phi^u).
    pub gcd: Poly,
    /// Distinct real roots of W.
    pub wronskian_real_roots: usize,
    /// True when the verdict is the order-1 reporting convention (the single
    /// vertex of K1 counts as non-Wronskian) rather than the raw criterion.
    pub order_one_convention: bool,
}

/// Decide whether `u` is an M-Wronskian vertex of `h`: W(x) != 0 for every
/// real x, equivalently gcd(phi, phi^u) = 1. Both routes are computed.
pub fn wronskian_vertex(h: &Graph, kind: &MatrixKind, u: usize) -> Result<WronskianReport> {
    let n = h.order();
    if u == 0 || u > n {
        return Err(Error::invalid(format!("vertex {u} out of range 1..={n}")));
    }
    let phi = charpoly_m(h, kind);
    let phi_u = deleted_charpoly(h, kind, u)?;
    let w = phi
        .mul(&phi_u.derivative())
        .sub(&phi.derivative().mul(&phi_u));
    let gcd = Poly::gcd(&phi, &phi_u)?;
    if n == 1 {
        // Raw criterion holds vacuously (W = -1); reported false by the
        // order-1 census convention.
        return Ok(WronskianReport {
            vertex: u,
            is_wronskian: false,
            wronskian_poly: w,
            gcd,
            wronskian_real_roots: 0,
            order_one_convention: true,
        });
    }
    let gcd_route = gcd.is_one();
    let real_roots = SturmChain::new(&w)?.count_all();
    let sturm_route = real_roots == 0;
    if gcd_route != sturm_route {
        return Err(Error::invariant(format!(
            "Wronskian routes disagree at vertex {u} (kind {kind}): gcd {gcd} vs {real_roots} real W-roots"
        )));
    }
    Ok(WronskianReport {
        vertex: u,
        is_wronskian: gcd_route,
        wronskian_poly: w,
        gcd,
        wronskian_real_roots: real_roots,
        order_one_convention: false,
    })
}

/// All vertices of `h` that are M-Wronskian vertices.
pub fn all_wronskian_vertices(h: &Graph, kind: &MatrixKind) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for u in 1..=h.order() {
        if wronskian_vertex(h, kind, u)?.is_wronskian {
            out.push(u);
        }
    }
    Ok(out)
}

/// One eigenvalue of the base graph, driving one degree-|H| factor of the
/// product spectrum.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SpectrumFactor {
    pub mu_interval: RootInterval,
    pub multiplicity: usize,
}

/// The factored spectrum of a rooted product: the product charpoly is the
/// resultant of the base charpoly against f(x) - t*g(x), equivalently the
/// product of f - mu*g over the base eigenvalues mu.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RootedSpectrum {
    pub product_charpoly: Poly,
    /// f = phi(M(H)).
    pub h_charpoly: Poly,
    /// g = phi(M^u(H)); the factor for eigenvalue mu is f - mu*g.
    pub h_deleted_charpoly: Poly,
    pub factors: Vec<SpectrumFactor>,
}

/// Compute the product charpoly by the resultant route and assert it equals
/// the direct charpoly of the constructed product.
pub fn rooted_spectrum_factors(
    g: &Graph,
    h: &Graph,
    root: usize,
    kind: &MatrixKind,
) -> Result<RootedSpectrum> {
    let f = charpoly_m(h, kind);
    let gd = deleted_charpoly(h, kind, root)?;
    let phi_g = charpoly_m(g, kind);
    let via_resultant = resultant_in_t(&phi_g, &[f.clone(), gd.neg()])?;
    let product = rooted_product(g, h, root)?;
    let direct = charpoly_m(&product.graph, kind);
    if via_resultant != direct {
        return Err(Error::invariant(format!(
            "resultant-route product charpoly differs from direct: {via_resultant} vs {direct}"
        )));
    }
    let chain = SturmChain::new(&phi_g)?;
    let intervals = chain.isolate();
    let mut factors = Vec::with_capacity(intervals.len());
    for iv in intervals {
        factors.push(SpectrumFactor {
            multiplicity: root_multiplicity(&phi_g, &iv)?,
            mu_interval: iv,
        });
    }
    Ok(RootedSpectrum {
        product_charpoly: direct,
        h_charpoly: f,
        h_deleted_charpoly: gd,
        factors,
    })
}

/// Multiplicity of the root isolated by `iv` in `phi`, via the derived gcd
/// chain phi_{k+1} = gcd(phi_k, phi_k'). Roots of every phi_k are roots of
/// phi, so the isolating interval stays isolating along the chain.
fn root_multiplicity(phi: &Poly, iv: &RootInterval) -> Result<usize> {
    let mut mult = 0usize;
    let mut cur = phi.clone();
    while !cur.is_constant() {
        let has_root = if iv.is_point() {
            cur.eval(&iv.lo).is_zero()
        } else {
            SturmChain::new(&cur)?
                .count(&Bound::Finite(iv.lo.clone()), &Bound::Finite(iv.hi.clone()))
                > 0
        };
        if !has_root {
            break;
        }
        mult += 1;
        cur = Poly::gcd(&cur, &cur.derivative())?;
    }
    Ok(mult)
}

/// Rooted-product separability, decided two independent ways: a squarefree
/// test on the full product charpoly, and the theorem route (base separable
/// and the root a Wronskian vertex of H). On failure the certificate is
/// attributed to the failing condition.
pub fn rooted_separability(
    g: &Graph,
    h: &Graph,
    root: usize,
    kind: &MatrixKind,
) -> Result<SeparabilityVerdict> {
    let product = rooted_product(g, h, root)?;
    let phi_p = charpoly_m(&product.graph, kind);
    let cert = Poly::gcd(&phi_p, &phi_p.derivative())?;
    let direct = cert.is_one();

    let phi_g = charpoly_m(g, kind);
    let gcd_g = Poly::gcd(&phi_g, &phi_g.derivative())?;
    let sep_g = gcd_g.is_one();
    let f = charpoly_m(h, kind);
    let gd = deleted_charpoly(h, kind, root)?;
    let gcd_fg = Poly::gcd(&f, &gd)?;
    let theorem_route = sep_g && gcd_fg.is_one();

    if g.order() >= 2 {
        if direct != theorem_route {
            return Err(Error::invariant(format!(
                "rooted separability routes disagree: direct {direct}, theorem {theorem_route}"
            )));
        }
    } else if theorem_route && !direct {
        return Err(Error::invariant(
            "order-1 base: theorem route claims separable but the product is not",
        ));
    }

    let attribution = if direct {
        None
    } else if !sep_g {
        Some(RootedFailure::BaseNotSeparable { gcd: gcd_g })
    } else if !gcd_fg.is_one() {
        Some(RootedFailure::CommonFactor { gcd: gcd_fg })
    } else {
        Some(bad_mu_certificate(&phi_g, &f, &gd, &cert)?)
    };
    Ok(SeparabilityVerdict {
        separable: direct,
        charpoly: phi_p,
        certificate: cert,
        attribution,
    })
}

/// Build the condition-2 certificate: the repeated factor d of the product
/// charpoly; the factor of the base charpoly whose roots are the bad mu's
/// (mu = f(lambda)/g(lambda) with d(lambda) = 0); isolating intervals for
/// both, with every repeated-root interval refined into an isolating
/// interval of a real root of the Wronskian polynomial.
///
/// A trivial gcd(f, g) forces the Wronskian polynomial root-free, which
/// empties the critical set, so with the route assertions above this branch
/// is reachable only if that equivalence were falsified; it completes the
/// certificate contract and would fail loudly rather than fabricate one.
fn bad_mu_certificate(phi_g: &Poly, f: &Poly, gd: &Poly, repeated: &Poly) -> Result<RootedFailure> {
    // Res_x(d(x), f(x) - t*g(x)) vanishes at t = mu iff d and f - mu*g share
    // a root; intersecting with the base charpoly picks out the bad mu's.
    let d_coeffs: Vec<Poly> = repeated
        .coeffs()
        .iter()
        .map(|c| Poly::constant(c.clone()))
        .collect();
    let deg = f.degree().unwrap_or(0).max(gd.degree().unwrap_or(0));
    let mixed: Vec<Poly> = (0..=deg)
        .map(|k| Poly::from_coeffs(vec![f.coeff(k), -gd.coeff(k)]))
        .collect();
    let locus = resultant(&d_coeffs, &mixed);
    let mu_factor = Poly::gcd(phi_g, &locus)?;
    if mu_factor.is_constant() {
        return Err(Error::invariant(
            "condition-2 failure without a bad base eigenvalue",
        ));
    }
    let mu_intervals = SturmChain::new(&mu_factor)?.isolate();

    let w = f.mul(&gd.derivative()).sub(&f.derivative().mul(gd));
    let w_chain = SturmChain::new(&w)?;
    let w_intervals = w_chain.isolate();
    let d_chain = SturmChain::new(repeated)?;
    let mut root_intervals = Vec::new();
    for iv in d_chain.isolate() {
        let mut cur = iv;
        // Every multiple product root lies in the Wronskian root set, so the
        // refinement below succeeds within a bounded number of halvings; the
        // cap turns a falsified premise into a loud failure.
        let mut steps = 0usize;
        loop {
            let inside = w_intervals.iter().any(|wiv| {
                if cur.is_point() {
                    wiv.contains(&cur.lo)
                } else {
                    !wiv.is_point() && wiv.lo <= cur.lo && cur.hi <= wiv.hi
                }
            });
            if inside {
                break;
            }
            steps += 1;
            if steps > 128 || (cur.is_point() && steps > 1) {
                return Err(Error::invariant(
                    "repeated product root does not refine into a Wronskian root interval",
                ));
            }
            cur = d_chain.refine(&cur, &(cur.width() / crate::rat::rat_int(4)));
        }
        root_intervals.push(cur);
    }
    Ok(RootedFailure::BadMu {
        repeated_factor: repeated.clone(),
        mu_factor,
        mu_intervals,
        root_intervals,
    })
}

/// Cartesian-product separability, decided two independent ways: the exact
/// eigenvalue-difference criterion via resultants, and a direct squarefree
/// test on the product charpoly.
pub fn cartesian_separability(
    g: &Graph,
    h: &Graph,
    kind: &MatrixKind,
) -> Result<SeparabilityVerdict> {
    let phi_g = charpoly_m(g, kind);
    let phi_h = charpoly_m(h, kind);
    let sep_g = phi_g.is_squarefree()?;
    let sep_h = phi_h.is_squarefree()?;
    let difference_route = if sep_g && sep_h {
        // All roots of the difference polynomials are real (differences of
        // real eigenvalues), so a trivial gcd says exactly that the two
        // eigenvalue-difference sets are disjoint.
        let sg = root_difference_poly(&phi_g)?;
        let sh = root_difference_poly(&phi_h)?;
        Poly::gcd(&sg, &sh)?.is_one()
    } else {
        false
    };
    let product = cartesian_product(g, h)?;
    let phi_p = charpoly_m(&product.graph, kind);
    let cert = Poly::gcd(&phi_p, &phi_p.derivative())?;
    let direct = cert.is_one();
    if direct != difference_route {
        return Err(Error::invariant(format!(
            "Cartesian separability routes disagree: direct {direct}, difference-set {difference_route}"
        )));
    }
    Ok(SeparabilityVerdict {
        separable: direct,
        charpoly: phi_p,
        certificate: cert,
        attribution: None,
    })
}

/// Separability of a general C-product by a direct squarefree test on the
/// Kronecker-assembled matrix charpoly. Arbitrary kinds require a diagonal
/// C; a general symmetric C is adjacency-only.
pub fn general_c_separability(
    g: &Graph,
    h: &Graph,
    c: &CMatrix,
    kind: &MatrixKind,
) -> Result<SeparabilityVerdict> {
    let assembled = crate::products::assemble_product_matrix(g, h, c, kind)?;
    let phi = assembled.charpoly()?;
    // Consistency: the assembled matrix must be the matrix of the constructed
    // product graph under the flat ordering.
    let built = crate::family::build_matrix(&c_product(g, h, c)?.graph, kind);
    if assembled != built {
        return Err(Error::invariant(
            "Kronecker assembly differs from the constructed product matrix",
        ));
    }
    separability_of(phi)
}

/// Strict interlacing: deg g = deg f - 1, all roots of both real and simple,
/// no shared roots, and exactly one root of g strictly between consecutive
/// roots of f.
pub fn interlacing_check(f: &Poly, g: &Poly) -> Result<bool> {
    let df = f
        .degree()
        .ok_or_else(|| Error::invalid("interlacing check with zero polynomial"))?;
    let dg = g
        .degree()
        .ok_or_else(|| Error::invalid("interlacing check with zero polynomial"))?;
    if df == 0 || dg + 1 != df {
        return Ok(false);
    }
    if !Poly::gcd(f, g)?.is_one() {
        return Ok(false);
    }
    if !f.is_squarefree()? || !g.is_squarefree()? {
        return Ok(false);
    }
    let f_chain = SturmChain::new(f)?;
    if f_chain.count_all() != df {
        return Ok(false);
    }
    let g_chain = SturmChain::new(g)?;
    if g_chain.count_all() != dg {
        return Ok(false);
    }
    // Shrink the f-intervals until none contains a root of g (possible since
    // the root sets are disjoint).
    let mut f_ivs = f_chain.isolate();
    for iv in f_ivs.iter_mut() {
        while !iv.is_point()
            && g_chain.count(&Bound::Finite(iv.lo.clone()), &Bound::Finite(iv.hi.clone())) > 0
        {
            *iv = f_chain.refine(iv, &(iv.width() / crate::rat::rat_int(4)));
        }
    }
    // No g-root at or below the first f-root, none at or above the last, and
    // exactly one in each gap.
    if g_chain.count(&Bound::NegInf, &Bound::Finite(f_ivs[0].hi.clone())) != 0 {
        return Ok(false);
    }
    if g_chain.count(&Bound::Finite(f_ivs[df - 1].lo.clone()), &Bound::PosInf) != 0 {
        return Ok(false);
    }
    for w in f_ivs.windows(2) {
        let c = g_chain.count(
            &Bound::Finite(w[0].hi.clone()),
            &Bound::Finite(w[1].lo.clone()),
        );
        if c != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
