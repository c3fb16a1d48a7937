//! Sturm chains: exact real-root counting and isolation.
//!
//! Chains are built on the squarefree part, over primitive integer
//! polynomials, with the content stripped after every pseudo-remainder step.
//! Pseudo-remainders scale the true remainder by lc^(delta+1), which can flip
//! its sign; the flip is undone before normalizing, since Sturm's theorem
//! needs every chain member to be a *positive* multiple of the Euclidean one.
//!
//! Isolating intervals are half-open `(lo, hi]` with dyadic endpoints, except
//! that a root hit exactly during bisection is returned as a point interval.

use crate::error::{Error, Result};
use crate::poly::{int_degree, int_primitive, int_pseudo_rem, Poly};
use crate::rat::Rat;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Endpoint of a counting interval.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

/// One isolated real root: either the half-open interval `(lo, hi]` known to
/// contain exactly one distinct root (with `f(lo) != 0` and `f(hi) != 0`), or
/// a point `lo == hi` that is exactly a root.
#[derive(Clone, Debug, PartialEq)]
pub struct RootInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl serde::Serialize for RootInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RootInterval", 2)?;
        st.serialize_field("lo", &crate::rat::format_rat(&self.lo))?;
        st.serialize_field("hi", &crate::rat::format_rat(&self.hi))?;
        st.end()
    }
}

impl RootInterval {
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / crate::rat::rat_int(2)
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rat) -> bool {
        if self.is_point() {
            *x == self.lo
        } else {
            *x > self.lo && *x <= self.hi
        }
    }
}

pub struct SturmChain {
    /// Primitive integer chain, sign-faithful to the rational Sturm sequence.
    chain: Vec<Vec<BigInt>>,
    /// Squarefree part of the input (monic), for exact zero tests.
    squarefree: Poly,
}

impl SturmChain {
    pub fn new(f: &Poly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::invalid("Sturm chain of the zero polynomial"));
        }
        let sf = f.squarefree_part()?;
        let p0 = int_primitive(&sf.to_int_coeffs());
        let mut chain = vec![p0.clone()];
        if int_degree(&p0).unwrap_or(0) >= 1 {
            let p1: Vec<BigInt> = p0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect();
            chain.push(int_primitive(&p1));
            loop {
                let a = &chain[chain.len() - 2];
                let b = &chain[chain.len() - 1];
                let db = match int_degree(b) {
                    None => break,
                    Some(d) => d,
                };
                let da = int_degree(a).unwrap();
                if da < db {
                    break;
                }
                let r = int_pseudo_rem(a, b);
                if int_degree(&r).is_none() {
                    break;
                }
                // prem = lc(b)^(delta+1) * rem; flip so the stored polynomial is a
                // positive multiple of -rem.
                let delta_plus_1 = da - db + 1;
                let lb_negative = b[db].is_negative();
                let scale_negative = lb_negative && delta_plus_1 % 2 == 1;
                let mut next = int_primitive(&r);
                if !scale_negative {
                    for c in next.iter_mut() {
                        *c = -std::mem::take(c);
                    }
                }
                chain.push(next);
            }
        }
        Ok(SturmChain {
            chain,
            squarefree: sf,
        })
    }

    pub fn squarefree_part(&self) -> &Poly {
        &self.squarefree
    }

    fn variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut count = 0;
        let mut last = 0i32;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn variations_at(&self, at: &Bound) -> usize {
        match at {
            Bound::Finite(x) => Self::variations(self.chain.iter().map(|p| int_sign_at(p, x))),
            Bound::PosInf => Self::variations(self.chain.iter().map(|p| leading_sign(p))),
            Bound::NegInf => Self::variations(self.chain.iter().map(|p| {
                let s = leading_sign(p);
                match int_degree(p) {
                    Some(d) if d % 2 == 1 => -s,
                    _ => s,
                }
            })),
        }
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        if let (Bound::Finite(a), Bound::Finite(b)) = (lo, hi) {
            if a >= b {
                return 0;
            }
        }
        let va = self.variations_at(lo);
        let vb = self.variations_at(hi);
        va.saturating_sub(vb)
    }

    /// Distinct real roots in the closed interval `[lo, hi]`.
    pub fn count_closed(&self, lo: &Rat, hi: &Rat) -> usize {
        if lo > hi {
            return 0;
        }
        let at_lo = usize::from(self.squarefree.eval(lo).is_zero());
        if lo == hi {
            return at_lo;
        }
        at_lo + self.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))
    }

    /// All distinct real roots.
    pub fn count_all(&self) -> usize {
        self.count(&Bound::NegInf, &Bound::PosInf)
    }

    /// Power-of-two bound strictly larger than every real root magnitude.
    fn root_bound(&self) -> Rat {
        let p = &self.squarefree;
        let n = p.degree().unwrap_or(0);
        let lead = p.leading().cloned().unwrap_or_else(Rat::one);
        let mut max = Rat::one();
        for k in 0..n {
            let q = (p.coeff(k) / &lead).abs();
            if q > max {
                max = q;
            }
        }
        // Cauchy: |root| <= 1 + max; round up to a power of two.
        let target = max + Rat::one();
        let mut b = Rat::one();
        let two = crate::rat::rat_int(2);
        while b <= target {
            b *= &two;
        }
        b
    }

    /// Disjoint isolating intervals, ascending, one per distinct real root.
    pub fn isolate(&self) -> Vec<RootInterval> {
        let total = self.count_all();
        let mut out = Vec::with_capacity(total);
        if total == 0 {
            return out;
        }
        let b = self.root_bound();
        let mut stack = vec![(-&b, b.clone())];
        // Depth-first, left child first, so results come out ascending when
        // pushed right-before-left.
        let mut ordered = Vec::new();
        while let Some((lo, hi)) = stack.pop() {
            let c = self.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()));
            match c {
                0 => {}
                1 => {
                    if self.squarefree.eval(&hi).is_zero() {
                        ordered.push(RootInterval {
                            lo: hi.clone(),
                            hi: hi.clone(),
                        });
                    } else {
                        ordered.push(RootInterval { lo, hi });
                    }
                }
                _ => {
                    let mid = (&lo + &hi) / crate::rat::rat_int(2);
                    stack.push((mid.clone(), hi));
                    stack.push((lo, mid));
                }
            }
        }
        ordered.sort_by(|a, b| a.lo.cmp(&b.lo));
        out.extend(ordered);
        debug_assert_eq!(out.len(), total);
        out
    }

    /// Bisect an isolating interval until its width is at most `max_width`.
    pub fn refine(&self, iv: &RootInterval, max_width: &Rat) -> RootInterval {
        let mut cur = iv.clone();
        let two = crate::rat::rat_int(2);
        while !cur.is_point() && cur.width() > *max_width {
            let mid = (&cur.lo + &cur.hi) / &two;
            if self.squarefree.eval(&mid).is_zero() {
                return RootInterval {
                    lo: mid.clone(),
                    hi: mid,
                };
            }
            if self.count(&Bound::Finite(cur.lo.clone()), &Bound::Finite(mid.clone())) == 1 {
                cur.hi = mid;
            } else {
                cur.lo = mid;
            }
        }
        cur
    }
}

/// Distinct real roots of `f` in `(lo, hi]` (squarefree part is used).
pub fn sturm_count(f: &Poly, lo: &Bound, hi: &Bound) -> Result<usize> {
    Ok(SturmChain::new(f)?.count(lo, hi))
}

/// Distinct real roots of `f` over the whole line.
pub fn count_real_roots(f: &Poly) -> Result<usize> {
    Ok(SturmChain::new(f)?.count_all())
}

/// Isolating intervals for all distinct real roots of `f`.
pub fn isolate_real_roots(f: &Poly) -> Result<Vec<RootInterval>> {
    Ok(SturmChain::new(f)?.isolate())
}

/// Sign of an integer polynomial at a rational point, computed in integers:
/// sign(sum a_i p^i q^(n-i)) for x = p/q.
fn int_sign_at(poly: &[BigInt], x: &Rat) -> i32 {
    let n = match int_degree(poly) {
        None => return 0,
        Some(d) => d,
    };
    let p = x.numer();
    let q = x.denom();
    let mut acc = poly[n].clone();
    let mut qpow = BigInt::one();
    for k in (0..n).rev() {
        qpow *= q;
        acc = acc * p + &poly[k] * &qpow;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

fn leading_sign(p: &[BigInt]) -> i32 {
    match int_degree(p) {
        None => 0,
        Some(d) => {
            if p[d].is_negative() {
                -1
            } else {
                1
            }
        }
    }
}
