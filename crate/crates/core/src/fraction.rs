//! Exact nonnegative rationals in lowest terms.
//!
//! Circular total chromatic numbers of nearby graphs can differ by as little
//! as `1/(q(q-1))`, so every comparison here cross-multiplies in 128-bit
//! integers. No floating point is used anywhere on the exact path.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A reduced fraction `num/den` with `den >= 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fraction {
    num: u64,
    den: u64,
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Fraction {
    /// Builds `num/den` in lowest terms. Panics if `den == 0`.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "fraction denominator must be positive");
        if num == 0 {
            return Fraction { num: 0, den: 1 };
        }
        let g = gcd(num, den);
        Fraction {
            num: num / g,
            den: den / g,
        }
    }

    pub fn integer(n: u64) -> Self {
        Fraction { num: n, den: 1 }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// Approximate value, for display purposes only.
    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum ParseFractionError {
    #[error("`{0}` is not a fraction (expected `p` or `p/q`)")]
    Malformed(String),
    #[error("fraction denominator must be positive")]
    ZeroDenominator,
}

impl FromStr for Fraction {
    type Err = ParseFractionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseFractionError::Malformed(s.to_string());
        match s.split_once('/') {
            None => {
                let n: u64 = s.trim().parse().map_err(|_| bad())?;
                Ok(Fraction::integer(n))
            }
            Some((a, b)) => {
                let num: u64 = a.trim().parse().map_err(|_| bad())?;
                let den: u64 = b.trim().parse().map_err(|_| bad())?;
                if den == 0 {
                    return Err(ParseFractionError::ZeroDenominator);
                }
                Ok(Fraction::new(num, den))
            }
        }
    }
}
