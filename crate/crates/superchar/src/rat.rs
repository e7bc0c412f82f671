//! Exact rational scalars. Everything in the library is computed over `Rat`;
//! no floating point appears anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse "p/q" or "p".
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| format!("bad rational {s:?}: {e}"))
}

/// Render as "p/q", or "p" when the denominator is 1.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn is_natural(r: &Rat) -> bool {
    is_integer(r) && !r.is_negative()
}

/// Integer value, if the rational is an integer and fits in i64.
pub fn to_i64(r: &Rat) -> Option<i64> {
    if !is_integer(r) {
        return None;
    }
    i64::try_from(r.numer().clone()).ok()
}

/// Largest integer <= r, as i64 (callers only use desk-scale bounds).
pub fn floor_i64(r: &Rat) -> Option<i64> {
    i64::try_from(r.floor().numer().clone()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(fmt_rat(&parse_rat("-1/2").unwrap()), "-1/2");
        assert_eq!(fmt_rat(&parse_rat("3").unwrap()), "3");
        assert_eq!(parse_rat("4/2").unwrap(), rat(2));
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn floors() {
        assert_eq!(floor_i64(&rat_frac(7, 2)), Some(3));
        assert_eq!(floor_i64(&rat_frac(-7, 2)), Some(-4));
        assert!(is_natural(&rat(0)));
        assert!(!is_natural(&rat(-1)));
        assert!(!is_natural(&rat_frac(1, 2)));
    }
}
