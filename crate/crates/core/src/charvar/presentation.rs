use alloc::vec::Vec;

use crate::confrac::check_knot_fraction;
use crate::exactnum::Rational;

use super::CharVarError;

/// The two-generator one-relator presentation `<a, b | a w = w b>` of the
/// two-bridge knot `p/q`, where `w = b^ε1 a^ε2 b^ε3 ... a^ε(q-1)`.
///
/// The signs are `εi = (-1)^floor(i·b'/q)` with `b'` the odd one of `p` and
/// `p - q`; with an odd numerator the pattern is palindromic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoBridgePresentation {
    fraction: Rational,
    epsilons: Vec<i8>,
}

/// A letter of the relator word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    A,
    B,
}

impl TwoBridgePresentation {
    pub fn fraction(&self) -> &Rational {
        &self.fraction
    }

    pub fn epsilons(&self) -> &[i8] {
        &self.epsilons
    }

    pub fn is_palindromic(&self) -> bool {
        self.epsilons.iter().eq(self.epsilons.iter().rev())
    }

    /// `w` as (generator, exponent) pairs, starting with `b`.
    pub fn word(&self) -> Vec<(Generator, i8)> {
        self.epsilons
            .iter()
            .enumerate()
            .map(|(i, &e)| (if i % 2 == 0 { Generator::B } else { Generator::A }, e))
            .collect()
    }

    /// Exponent sum `σ = Σ εi`.
    pub fn exponent_sum(&self) -> i64 {
        self.epsilons.iter().map(|&e| e as i64).sum()
    }
}

pub fn presentation(p_over_q: &Rational) -> Result<TwoBridgePresentation, CharVarError> {
    let (p, q) = check_knot_fraction(p_over_q)?;
    let b = if p % 2 == 1 { p } else { p - q };
    let epsilons = (1..q).map(|i| if (i * b).div_euclid(q) % 2 == 0 { 1 } else { -1 }).collect();
    Ok(TwoBridgePresentation { fraction: p_over_q.clone(), epsilons })
}
