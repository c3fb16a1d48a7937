//! Exact rational scalars and small construction/parsing helpers.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number; all arithmetic in this crate is over `Rat` (or over
/// `BigInt` after clearing denominators).
pub type Rat = BigRational;

/// `p/q` as a `Rat`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Integer `n` as a `Rat`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parse `"p"` or `"p/q"` with optional sign, exact.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::parse(0, "empty rational"));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::parse(0, format!("bad integer {num:?}")))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::parse(0, format!("bad integer {d:?}")))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::parse(0, "zero denominator"));
    }
    Ok(Rat::new(n, d))
}

/// Render without a `/1` suffix for integers.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sign of a rational as -1, 0, or 1.
pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Best-effort conversion to f64 (numeric cross-checks only, never verdicts).
/// Keeps ~64 significant bits of numerator and denominator and restores the
/// binary exponent afterwards, so huge operands stay finite-accurate.
pub fn to_f64(r: &Rat) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let n = r.numer();
    let d = r.denom();
    let ns = (n.bits() as i64 - 64).max(0);
    let ds = (d.bits() as i64 - 64).max(0);
    let ntop = approx_f64(&(n >> ns));
    let dtop = approx_f64(&(d >> ds));
    ntop / dtop * ((ns - ds) as f64).exp2()
}

fn approx_f64(n: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    n.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("-7").unwrap(), rat_int(-7));
        assert_eq!(parse_rat(" 2/6 ").unwrap(), rat(1, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(format_rat(&rat(6, 4)), "3/2");
        assert_eq!(format_rat(&rat_int(5)), "5");
    }

    #[test]
    fn f64_conversion() {
        assert!((to_f64(&rat(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
    }
}
