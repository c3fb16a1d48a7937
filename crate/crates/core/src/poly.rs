//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored in ascending degree order; the representation is
//! canonical (empty vector for zero, nonzero last element otherwise). The gcd
//! goes through the subresultant PRS on primitive integer parts to bound
//! coefficient growth; plain Euclidean division is used only over Q where it
//! is exact.

use crate::error::{Error, Result};
use crate::rat::{format_rat, parse_rat, sign, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Poly {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    /// `c * x^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// From ascending coefficients; trailing zeros stripped.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    /// Convenience: ascending integer coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rat::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub(crate) fn from_bigint_coeffs(coeffs: Vec<BigInt>) -> Self {
        Poly::from_coeffs(coeffs.into_iter().map(Rat::from_integer).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn mul_scalar(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: usize) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn sign_at(&self, at: &Rat) -> i32 {
        sign(&self.eval(at))
    }

    /// Substitute `x -> c*x` (coefficient of `x^k` scales by `c^k`).
    pub fn scale_var(&self, c: &Rat) -> Poly {
        let mut pow = Rat::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &pow);
            pow *= c;
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = Rat::one() / l;
                self.mul_scalar(&inv)
            }
        }
    }

    /// Euclidean division over Q: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d
            .degree()
            .ok_or_else(|| Error::invalid("division by zero polynomial"))?;
        if self.degree().is_none_or(|n| n < dd) {
            return Ok((Poly::zero(), self.clone()));
        }
        let n = self.degree().unwrap();
        let lead_inv = Rat::one() / d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); n - dd + 1];
        for k in (dd..=n).rev() {
            let c = &rem[k] * &lead_inv;
            if !c.is_zero() {
                for j in 0..dd {
                    let t = &c * &d.coeffs[j];
                    rem[k - dd + j] -= t;
                }
            }
            rem[k] = Rat::zero();
            quot[k - dd] = c;
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Division known to be exact; debug-asserts a zero remainder.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d).expect("exact_div by zero polynomial");
        debug_assert!(r.is_zero(), "exact_div had nonzero remainder");
        q
    }

    /// True iff `self` divides `other` with zero remainder.
    pub fn divides(&self, other: &Poly) -> bool {
        if other.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        other.div_rem(self).is_ok_and(|(_, r)| r.is_zero())
    }

    /// Monic greatest common divisor. Errors if both inputs are zero.
    pub fn gcd(f: &Poly, g: &Poly) -> Result<Poly> {
        if f.is_zero() && g.is_zero() {
            return Err(Error::invalid("gcd of two zero polynomials"));
        }
        if f.is_zero() {
            return Ok(g.monic());
        }
        if g.is_zero() {
            return Ok(f.monic());
        }
        if f.is_constant() || g.is_constant() {
            return Ok(Poly::one());
        }
        let a = int_primitive(&f.to_int_coeffs());
        let b = int_primitive(&g.to_int_coeffs());
        let d = int_subresultant_gcd(&a, &b);
        Ok(Poly::from_bigint_coeffs(d).monic())
    }

    /// `gcd(f, f')` is constant.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::invalid("squarefree test of zero polynomial"));
        }
        if self.is_constant() {
            return Ok(true);
        }
        Ok(Poly::gcd(self, &self.derivative())?.is_one())
    }

    /// `f / gcd(f, f')`, monic; carries exactly the distinct roots of `f`.
    pub fn squarefree_part(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::invalid("squarefree part of zero polynomial"));
        }
        if self.is_constant() {
            return Ok(Poly::one());
        }
        let d = Poly::gcd(self, &self.derivative())?;
        Ok(self.exact_div(&d).monic())
    }

    /// Clear denominators: integer coefficient vector of `lcm(denoms) * self`.
    pub(crate) fn to_int_coeffs(&self) -> Vec<BigInt> {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        self.coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect()
    }
}

// ---- Integer-polynomial kernel (subresultant PRS) ----

pub(crate) fn int_degree(p: &[BigInt]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn int_trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub(crate) fn int_content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divide out the content; zero input stays zero. Sign of the leading
/// coefficient is preserved.
pub(crate) fn int_primitive(p: &[BigInt]) -> Vec<BigInt> {
    let g = int_content(p);
    if g.is_zero() || g.is_one() {
        return int_trim(p.to_vec());
    }
    int_trim(p.iter().map(|c| c / &g).collect())
}

/// Pseudo-remainder: `prem(a, b)` with multiplier `lc(b)^(deg a - deg b + 1)`.
pub(crate) fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = int_degree(b).expect("pseudo_rem by zero");
    let mut r = int_trim(a.to_vec());
    let lb = b[db].clone();
    let da = match int_degree(&r) {
        Some(d) if d >= db => d,
        _ => {
            // deg a < deg b: prem = lc(b)^(delta+1) * a with delta+1 = 1
            return r.iter().map(|c| c * &lb).collect();
        }
    };
    let mut steps = da - db + 1;
    while let Some(dr) = int_degree(&r) {
        if dr < db {
            break;
        }
        let lead = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for j in 0..=db {
            r[dr - db + j] -= &lead * &b[j];
        }
        r = int_trim(r);
        steps -= 1;
    }
    // Pad with the remaining multiplier so the result equals the classical prem.
    for _ in 0..steps {
        for c in r.iter_mut() {
            *c *= &lb;
        }
    }
    int_trim(r)
}

/// Subresultant polynomial remainder sequence gcd (primitive result).
pub(crate) fn int_subresultant_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut f, mut g) = {
        let da = int_degree(a);
        let db = int_degree(b);
        match (da, db) {
            (None, _) => return int_primitive(b),
            (_, None) => return int_primitive(a),
            (Some(x), Some(y)) if x >= y => (int_primitive(a), int_primitive(b)),
            _ => (int_primitive(b), int_primitive(a)),
        }
    };
    // psi_1 = -1; at step i >= 2, psi_i = (-lc(r_{i-1}))^{d_{i-1}} / psi_{i-1}^{d_{i-1}-1}
    // and beta_i = -lc(r_{i-1}) * psi_i^{d_i}; beta_1 = (-1)^{d_1+1}.
    let mut psi = -BigInt::one();
    let mut delta_prev: usize = 0;
    let mut first = true;
    loop {
        let df = int_degree(&f).unwrap();
        let dg = match int_degree(&g) {
            None => return int_primitive(&f),
            Some(d) => d,
        };
        if dg == 0 {
            // Nonzero constant in a primitive sequence: coprime.
            return vec![BigInt::one()];
        }
        let delta = df - dg;
        let r = int_pseudo_rem(&f, &g);
        let beta: BigInt = if first {
            first = false;
            if (delta + 1).is_multiple_of(2) {
                BigInt::one()
            } else {
                -BigInt::one()
            }
        } else {
            let lf = f[df].clone();
            if delta_prev > 0 {
                psi = exact_div_big(
                    &pow_big(&(-&lf), delta_prev),
                    &pow_big(&psi, delta_prev - 1),
                );
            }
            -(&lf * pow_big(&psi, delta))
        };
        delta_prev = delta;
        if int_degree(&r).is_none() {
            return int_primitive(&g);
        }
        let next: Vec<BigInt> = r.iter().map(|c| exact_div_big(c, &beta)).collect();
        f = g;
        g = int_trim(next);
    }
}

fn pow_big(b: &BigInt, e: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

fn exact_div_big(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "integer division expected to be exact");
    q
}

// ---- Formatting and parsing ----

impl fmt::Display for Poly {
    /// Descending powers, exact rational coefficients, `x^4-3x^2+1` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let show_coeff = !abs.is_one() || k == 0;
            if show_coeff {
                write!(f, "{}", format_rat(&abs))?;
            }
            if k >= 1 {
                write!(f, "x")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Accepts the `Display` format: signed terms `c`, `cx`, `cx^k`, `x^k`.
    fn from_str(s: &str) -> Result<Poly> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse(0, "empty polynomial"));
        }
        let bytes = compact.as_bytes();
        let mut acc = Poly::zero();
        let mut i = 0usize;
        while i < bytes.len() {
            let neg = match bytes[i] {
                b'-' => {
                    i += 1;
                    true
                }
                b'+' => {
                    i += 1;
                    false
                }
                _ => false,
            };
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
                i += 1;
            }
            let coeff_str = &compact[start..i];
            let mut coeff = if coeff_str.is_empty() {
                Rat::one()
            } else {
                parse_rat(coeff_str)
                    .map_err(|_| Error::parse(start, format!("bad coefficient {coeff_str:?}")))?
            };
            if neg {
                coeff = -coeff;
            }
            let mut power = 0usize;
            if i < bytes.len() && bytes[i] == b'x' {
                i += 1;
                power = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let pstart = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    power = compact[pstart..i]
                        .parse()
                        .map_err(|_| Error::parse(pstart, "bad exponent"))?;
                }
            } else if coeff_str.is_empty() {
                return Err(Error::parse(start, "expected coefficient or x"));
            }
            acc = acc.add(&Poly::monomial(coeff, power));
        }
        Ok(acc)
    }
}

impl Serialize for Poly {
    /// Ascending coefficient strings, e.g. `["1","0","-3","0","1"]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(format_rat).collect();
        v.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Poly, D::Error> {
        let v: Vec<String> = Vec::deserialize(deserializer)?;
        let coeffs: Vec<Rat> = v
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<_>>()
            .map_err(|e| D::Error::custom(e.to_string()))?;
        Ok(Poly::from_coeffs(coeffs))
    }
}
