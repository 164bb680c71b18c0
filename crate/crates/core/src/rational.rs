//! Reduced rationals and the classical (logarithmic) Mahler measure.
//!
//! A nonzero rational `p/q` in lowest terms has minimal polynomial `q x - p`,
//! so its Mahler measure is `log max(|p|, q)`. Signs never affect a measure.

use std::fmt;
use std::str::FromStr;

use num_prime::nt_funcs::factorize64;

use crate::error::{Error, Result};

/// Largest magnitude accepted for either side of a rational.
pub const MAX_MAGNITUDE: u64 = i64::MAX as u64;

/// A nonzero rational number in lowest terms with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedRational {
    numerator: i64,
    denominator: u64,
}

pub(crate) fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl ReducedRational {
    /// Reduces `p/q`, normalizing the sign onto the numerator.
    pub fn reduce(p: i64, q: i64) -> Result<Self> {
        Self::reduce_wide(p as i128, q as i128)
    }

    /// Reduction on wide integers; the reduced magnitudes must fit in `i64`.
    pub fn reduce_wide(p: i128, q: i128) -> Result<Self> {
        if p == 0 {
            return Err(Error::domain("numerator must be nonzero"));
        }
        if q == 0 {
            return Err(Error::domain("denominator must be nonzero"));
        }
        let negative = (p < 0) != (q < 0);
        let (pa, qa) = (p.unsigned_abs(), q.unsigned_abs());
        let g = gcd(pa, qa);
        let (pa, qa) = (pa / g, qa / g);
        if pa > MAX_MAGNITUDE as u128 || qa > MAX_MAGNITUDE as u128 {
            return Err(Error::domain(format!(
                "magnitude of {pa}/{qa} exceeds 2^63-1"
            )));
        }
        let numerator = if negative { -(pa as i64) } else { pa as i64 };
        Ok(ReducedRational {
            numerator,
            denominator: qa as u64,
        })
    }

    pub fn integer(n: i64) -> Result<Self> {
        Self::reduce(n, 1)
    }

    pub fn one() -> Self {
        ReducedRational {
            numerator: 1,
            denominator: 1,
        }
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    /// `|numerator|`, the `r` of `|α| = r/s`.
    pub fn abs_numerator(&self) -> u64 {
        self.numerator.unsigned_abs()
    }

    /// True for `1` and `-1`, the only rational roots of unity.
    pub fn is_torsion(&self) -> bool {
        self.abs_numerator() == 1 && self.denominator == 1
    }

    pub fn inverse(&self) -> Self {
        let sign = self.numerator.signum();
        ReducedRational {
            numerator: sign * self.denominator as i64,
            denominator: self.abs_numerator(),
        }
    }

    pub fn neg(&self) -> Self {
        ReducedRational {
            numerator: -self.numerator,
            denominator: self.denominator,
        }
    }

    /// Exact product, reduced.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::reduce_wide(
            self.numerator as i128 * other.numerator as i128,
            self.denominator as i128 * other.denominator as i128,
        )
    }
}

impl fmt::Display for ReducedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

impl FromStr for ReducedRational {
    type Err = Error;

    /// Accepts `p/q` or `p` with an optional leading `-`.
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        let digits = |part: &str| -> Result<u64> {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("invalid rational `{s}`")));
            }
            part.parse::<u64>()
                .ok()
                .filter(|v| *v <= MAX_MAGNITUDE)
                .ok_or_else(|| Error::Parse(format!("`{part}` exceeds 2^63-1")))
        };
        let (p, q) = match body.split_once('/') {
            Some((p, q)) => (digits(p)?, digits(q)?),
            None => (digits(body)?, 1),
        };
        if p == 0 {
            return Err(Error::Parse(format!("`{s}` is zero")));
        }
        if q == 0 {
            return Err(Error::Parse(format!("`{s}` has zero denominator")));
        }
        let p = if negative { -(p as i64) } else { p as i64 };
        Self::reduce(p, q as i64).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// `log max(|p|, q)` in natural-log units.
pub fn mahler_measure(alpha: &ReducedRational) -> f64 {
    if alpha.is_torsion() {
        return 0.0;
    }
    (alpha.abs_numerator().max(alpha.denominator()) as f64).ln()
}

/// Prime factorization with multiplicity, primes ascending.
pub fn prime_factors(n: u64) -> Vec<(u64, usize)> {
    if n < 2 {
        return Vec::new();
    }
    factorize64(n).into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, q: i64) -> ReducedRational {
        ReducedRational::reduce(p, q).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(q(14, 60), q(7, 30));
        assert_eq!(q(7, 30).numerator(), 7);
        assert_eq!(q(7, 30).denominator(), 30);
        let r = q(-6, -4);
        assert_eq!((r.numerator(), r.denominator()), (3, 2));
        let r = q(6, -4);
        assert_eq!((r.numerator(), r.denominator()), (-3, 2));
    }

    #[test]
    fn reduce_rejects_zero() {
        assert!(matches!(ReducedRational::reduce(0, 3), Err(Error::Domain(_))));
        assert!(matches!(ReducedRational::reduce(3, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn wide_products_reject_overflow() {
        let big = q(i64::MAX, 1);
        assert!(big.mul(&q(2, 1)).is_err());
        assert_eq!(big.mul(&q(1, 7)).unwrap().numerator(), i64::MAX / 7);
    }

    #[test]
    fn measure_examples() {
        assert!((mahler_measure(&q(7, 30)) - 30f64.ln()).abs() < 1e-15);
        assert!((mahler_measure(&q(7, 30)) - 3.401_197_381_662_155).abs() < 1e-12);
        assert_eq!(mahler_measure(&q(1, 1)), 0.0);
        assert_eq!(mahler_measure(&q(-1, 1)), 0.0);
        assert_eq!(mahler_measure(&q(-2, 1)), 2f64.ln());
    }

    #[test]
    fn parse_formats() {
        assert_eq!("7/30".parse::<ReducedRational>().unwrap(), q(7, 30));
        assert_eq!("-14/60".parse::<ReducedRational>().unwrap(), q(-7, 30));
        assert_eq!("12".parse::<ReducedRational>().unwrap(), q(12, 1));
        for bad in ["0", "5/0", "0/3", "", "a/b", "3/", "/3", "1/-2", "--1", "9223372036854775808"] {
            assert!(bad.parse::<ReducedRational>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for r in [q(7, 30), q(-3, 2), q(12, 1), q(-1, 1)] {
            assert_eq!(r.to_string().parse::<ReducedRational>().unwrap(), r);
        }
    }

    #[test]
    fn factors() {
        assert_eq!(prime_factors(12), vec![(2, 2), (3, 1)]);
        assert_eq!(prime_factors(1), vec![]);
        assert_eq!(prime_factors(9_223_372_036_854_775_783), vec![(9_223_372_036_854_775_783, 1)]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn measure_symmetries(p in 1i64..1_000_000, s in 1i64..1_000_000, neg in any::<bool>()) {
                let a = ReducedRational::reduce(if neg { -p } else { p }, s).unwrap();
                let m = mahler_measure(&a);
                prop_assert_eq!(m, mahler_measure(&a.inverse()));
                prop_assert_eq!(m, mahler_measure(&a.neg()));
                prop_assert_eq!(m == 0.0, a.is_torsion());
                if !a.is_torsion() {
                    prop_assert!(m >= 2f64.ln());
                }
            }
        }
    }
}
