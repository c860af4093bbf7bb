use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::Rational;

/// An extended rational `p/q` with `q = 0` allowed for the vertical slope.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slope {
    Finite(Rational),
    /// `1/0`.
    Infinite,
}

impl Slope {
    /// `num/den`, with `den = 0` giving `1/0` (the sign of `num` is irrelevant).
    pub fn from_ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Slope {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            Slope::Infinite
        } else {
            Slope::Finite(Rational::new(num, den).expect("nonzero denominator"))
        }
    }

    pub fn integer(n: i64) -> Slope {
        Slope::Finite(Rational::from(n))
    }

    /// Primitive `(p, q)` with `q >= 0` (and `p = 1` for `1/0`).
    pub fn as_pair(&self) -> (BigInt, BigInt) {
        match self {
            Slope::Finite(r) => (r.numer().clone(), r.denom().clone()),
            Slope::Infinite => (BigInt::from(1), BigInt::zero()),
        }
    }

    pub fn negate(&self) -> Slope {
        match self {
            Slope::Finite(r) => Slope::Finite(-r),
            Slope::Infinite => Slope::Infinite,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Slope::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Slope::Infinite => f.write_str("1/0"),
        }
    }
}

impl core::str::FromStr for Slope {
    type Err = super::ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some((n, d)) = t.split_once('/') {
            if d.trim() == "0" {
                let n: BigInt = n.trim().parse().map_err(|_| super::ExactError::Parse(s.into()))?;
                if n.abs() == BigInt::from(1) {
                    return Ok(Slope::Infinite);
                }
                return Err(super::ExactError::Parse(s.into()));
            }
        }
        Ok(Slope::Finite(t.parse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn display_and_parse() {
        assert_eq!(Slope::from_ratio(-8, 1).to_string(), "-8");
        assert_eq!(Slope::from_ratio(3, -6).to_string(), "-1/2");
        assert_eq!(Slope::from_ratio(5, 0).to_string(), "1/0");
        for s in ["-8", "-1/2", "1/0", "0"] {
            assert_eq!(s.parse::<Slope>().unwrap().to_string(), s);
        }
        assert!("2/0".parse::<Slope>().is_err());
    }
}
