//! Arithmetic over Q[t]/(p) with dynamic splitting (D5-style evaluation).
//!
//! The modulus is monic and squarefree but never factored into irreducibles:
//! whenever Gaussian elimination meets a pivot that is a zero divisor, the
//! modulus splits into the two coprime factors revealed by the gcd and the
//! computation continues in both quotients. The union of factor-tagged
//! results covers every root of the original modulus.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::Rat;
use num_traits::One;

/// The quotient ring Q[t]/(p), p monic squarefree of degree >= 1.
#[derive(Clone, Debug)]
pub struct Extension {
    modulus: Poly,
}

/// Outcome of attempting to invert a reduced element.
pub enum Invert {
    /// The element is zero in the quotient.
    Zero,
    /// A unit; its inverse mod p.
    Inverse(Poly),
    /// A zero divisor: gcd with the modulus is the first factor, the cofactor
    /// is the second; they are coprime and multiply to the modulus.
    Split(Poly, Poly),
}

/// Rank of a matrix over the quotient by one coprime factor of the modulus.
#[derive(Clone, Debug, serde::Serialize)]
pub struct FactorRank {
    pub factor: Poly,
    pub rank: usize,
}

impl Extension {
    pub fn new(modulus: &Poly) -> Result<Self> {
        if modulus.degree().is_none_or(|d| d == 0) {
            return Err(Error::invalid("extension modulus must have degree >= 1"));
        }
        if !modulus.is_squarefree()? {
            return Err(Error::invalid("extension modulus must be squarefree"));
        }
        Ok(Extension {
            modulus: modulus.monic(),
        })
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn reduce(&self, f: &Poly) -> Poly {
        f.div_rem(&self.modulus).expect("nonzero modulus").1
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&a.mul(b))
    }

    /// Classify a reduced element as zero, unit, or zero divisor.
    pub fn try_invert(&self, a: &Poly) -> Result<Invert> {
        let a = self.reduce(a);
        if a.is_zero() {
            return Ok(Invert::Zero);
        }
        let (g, s) = ext_gcd_bezout_first(&a, &self.modulus);
        if g.is_one() {
            return Ok(Invert::Inverse(self.reduce(&s)));
        }
        let cofactor = self.modulus.exact_div(&g).monic();
        Ok(Invert::Split(g, cofactor))
    }
}

/// Monic gcd of (a, b) together with the Bezout coefficient of `a`:
/// returns (g, s) with s*a = g (mod b).
fn ext_gcd_bezout_first(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = Poly::one();
    let mut s1 = Poly::zero();
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1).expect("nonzero divisor in ext gcd");
        let s = s0.sub(&q.mul(&s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    let lead = r0.leading().cloned().unwrap_or_else(Rat::one);
    let inv = Rat::one() / lead;
    (r0.mul_scalar(&inv), s0.mul_scalar(&inv))
}

/// Rank of `m` over Q[t]/(p) for every branch of the splitting tree.
/// Factors in the result are pairwise coprime and multiply to the modulus.
pub fn ext_rank(m: &[Vec<Poly>], ctx: &Extension) -> Result<Vec<FactorRank>> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let reduced: Vec<Vec<Poly>> = m
        .iter()
        .map(|row| row.iter().map(|e| ctx.reduce(e)).collect())
        .collect();
    let mut out = Vec::new();
    rank_branch(reduced, ctx.modulus().clone(), 0, 0, rows, cols, &mut out)?;
    Ok(out)
}

fn rank_branch(
    mut m: Vec<Vec<Poly>>,
    modulus: Poly,
    mut row: usize,
    start_col: usize,
    rows: usize,
    cols: usize,
    out: &mut Vec<FactorRank>,
) -> Result<()> {
    let ext = Extension { modulus };
    for col in start_col..cols {
        if row == rows {
            break;
        }
        let mut pivot: Option<(usize, Poly)> = None;
        for i in row..rows {
            let e = ext.reduce(&m[i][col]);
            if e.is_zero() {
                m[i][col] = Poly::zero();
                continue;
            }
            match ext.try_invert(&e)? {
                Invert::Zero => m[i][col] = Poly::zero(),
                Invert::Inverse(inv) => {
                    pivot = Some((i, inv));
                    break;
                }
                Invert::Split(d, q) => {
                    // Re-enter this branch twice, once per coprime factor.
                    for factor in [d, q] {
                        let fext = Extension {
                            modulus: factor.clone(),
                        };
                        let mm: Vec<Vec<Poly>> = m
                            .iter()
                            .map(|r| r.iter().map(|e| fext.reduce(e)).collect())
                            .collect();
                        rank_branch(mm, factor, row, col, rows, cols, out)?;
                    }
                    return Ok(());
                }
            }
        }
        if let Some((p, inv)) = pivot {
            m.swap(row, p);
            let prow: Vec<Poly> = m[row].iter().map(|e| ext.mul(e, &inv)).collect();
            m[row] = prow;
            for i in (row + 1)..rows {
                if m[i][col].is_zero() {
                    continue;
                }
                let f = m[i][col].clone();
                for j in col..cols {
                    let t = ext.mul(&f, &m[row][j]);
                    m[i][j] = ext.reduce(&m[i][j].sub(&t));
                }
            }
            row += 1;
        }
    }
    out.push(FactorRank {
        factor: ext.modulus().clone(),
        rank: row,
    });
    Ok(())
}
