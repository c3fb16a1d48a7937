//! Resultants of polynomials whose coefficients are themselves polynomials in
//! a second variable, via Sylvester determinants evaluated with fraction-free
//! Bareiss elimination over Q[x].
//!
//! `resultant(a, b)` treats the slice index as the power of the eliminated
//! variable; slice entries are the coefficients, living in the other variable.

use crate::error::{Error, Result};
use crate::matrix::polymat_det;
use crate::poly::Poly;
use crate::rat::Rat;
use num_traits::{One, Zero};

fn trim(cs: &[Poly]) -> &[Poly] {
    let mut n = cs.len();
    while n > 0 && cs[n - 1].is_zero() {
        n -= 1;
    }
    &cs[..n]
}

/// `Res(a, b)` over the eliminated variable. With `deg a = m`, `deg b = n`,
/// this is the determinant of the (m+n) Sylvester matrix; it equals
/// `lc(a)^n * prod b(alpha_i)` over the roots of `a` (with multiplicity).
pub fn resultant(a: &[Poly], b: &[Poly]) -> Poly {
    let a = trim(a);
    let b = trim(b);
    if a.is_empty() || b.is_empty() {
        return Poly::zero();
    }
    let m = a.len() - 1;
    let n = b.len() - 1;
    if m == 0 && n == 0 {
        return Poly::one();
    }
    if m == 0 {
        return a[0].pow(n);
    }
    if n == 0 {
        return b[0].pow(m);
    }
    let size = m + n;
    let mut s = vec![vec![Poly::zero(); size]; size];
    for (r, row) in s.iter_mut().enumerate().take(n) {
        for (k, c) in a.iter().rev().enumerate() {
            row[r + k] = c.clone();
        }
    }
    for (r, row) in s.iter_mut().enumerate().skip(n).take(m) {
        for (k, c) in b.iter().rev().enumerate() {
            row[(r - n) + k] = c.clone();
        }
    }
    polymat_det(&s)
}

/// Product of `q(x, mu)` over all roots `mu` of `p` (with multiplicity):
/// `Res_t(p(t), q(x, t)) / lc(p)^deg_t(q)`. `q` is given by its coefficients
/// in `t`, each a polynomial in `x`. A non-monic `p` is normalized by
/// dividing out the tracked power of its leading coefficient.
pub fn resultant_in_t(p: &Poly, q: &[Poly]) -> Result<Poly> {
    if p.is_zero() {
        return Err(Error::invalid("resultant_in_t with zero modulus"));
    }
    let q = trim(q);
    if q.is_empty() {
        return Ok(Poly::zero());
    }
    let p_coeffs: Vec<Poly> = p
        .coeffs()
        .iter()
        .map(|c| Poly::constant(c.clone()))
        .collect();
    let res = resultant(&p_coeffs, q);
    let lead = p.leading().unwrap();
    if lead.is_one() {
        return Ok(res);
    }
    let mut scale = Rat::one();
    for _ in 0..(q.len() - 1) {
        scale *= lead;
    }
    Ok(res.mul_scalar(&(Rat::one() / scale)))
}

/// `p(x + z)` as coefficients in `x`, each a polynomial in `z`:
/// Taylor expansion, coefficient of `x^k` is `p^(k)(z) / k!`.
pub fn shifted_coeffs(p: &Poly) -> Vec<Poly> {
    let n = match p.degree() {
        None => return vec![],
        Some(d) => d,
    };
    let mut out = Vec::with_capacity(n + 1);
    let mut d = p.clone();
    let mut fact = Rat::one();
    for k in 0..=n {
        if k > 0 {
            d = d.derivative();
            fact *= crate::rat::rat_int(k as i64);
        }
        out.push(d.mul_scalar(&(Rat::one() / &fact)));
    }
    out
}

/// `s_p(z) = Res_x(p(x), p(x+z)) / z^deg(p)`: its roots are exactly the
/// differences of distinct roots of `p` (symmetric about zero).
pub fn root_difference_poly(p: &Poly) -> Result<Poly> {
    let n = p
        .degree()
        .ok_or_else(|| Error::invalid("difference polynomial of zero polynomial"))?;
    if n == 0 {
        return Ok(Poly::one());
    }
    let a: Vec<Poly> = p
        .coeffs()
        .iter()
        .map(|c| Poly::constant(c.clone()))
        .collect();
    let b = shifted_coeffs(p);
    let res = resultant(&a, &b);
    // The z^n factor comes from the coincident-root pairs; remove it exactly.
    let coeffs = res.coeffs();
    debug_assert!(coeffs.iter().take(n).all(|c| c.is_zero() || !res.is_zero()));
    let mut shifted = Vec::new();
    if coeffs.len() > n {
        shifted.extend_from_slice(&coeffs[n..]);
    }
    Ok(Poly::from_coeffs(shifted))
}
