//! Continued fractions `r + [a1, ..., as]` with signed integer entries.
//!
//! `[a1, ..., as]` stands for `1/(a1 + 1/(a2 + ... + 1/as))`. An expansion is
//! admissible when every `|ai| >= 2`; admissible expansions of a two-bridge
//! fraction `p/q` are exactly the branched surfaces of the knot.

use core::fmt;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::exactnum::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CfError {
    #[error("continued fraction entries must be nonzero")]
    ZeroEntry,
    #[error("a partial denominator vanishes during evaluation")]
    ZeroDenominator,
    #[error("invalid two-bridge fraction {0}: need q odd and 0 < p < q in lowest terms")]
    InvalidFraction(String),
    #[error("entry does not fit in a machine integer")]
    Overflow,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    integer_part: i64,
    entries: Vec<i64>,
}

impl ContinuedFraction {
    pub fn new(integer_part: i64, entries: Vec<i64>) -> Result<Self, CfError> {
        if entries.contains(&0) {
            return Err(CfError::ZeroEntry);
        }
        Ok(ContinuedFraction { integer_part, entries })
    }

    /// `[a1, ..., as]` with integer part 0.
    pub fn from_entries(entries: Vec<i64>) -> Result<Self, CfError> {
        ContinuedFraction::new(0, entries)
    }

    pub fn integer_part(&self) -> i64 {
        self.integer_part
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_admissible(&self) -> bool {
        self.entries.iter().all(|a| a.abs() >= 2)
    }

    pub fn with_integer_part(&self, r: i64) -> Self {
        ContinuedFraction { integer_part: r, entries: self.entries.clone() }
    }

    /// Value of the bracket alone, i.e. `evaluate() - integer_part`.
    pub fn tail_value(&self) -> Result<Rational, CfError> {
        self.with_integer_part(0).evaluate()
    }

    pub fn evaluate(&self) -> Result<Rational, CfError> {
        let r = Rational::from(self.integer_part);
        let Some((&last, init)) = self.entries.split_last() else {
            return Ok(r);
        };
        let tail = evaluate_with_tail(init, &Rational::from(last))?;
        Ok(r + tail)
    }
}

/// Value of `[a1, ..., ak, x]` where the last entry `x` may be any rational.
pub fn evaluate_with_tail(entries: &[i64], x: &Rational) -> Result<Rational, CfError> {
    let mut t = x.clone();
    for &a in entries.iter().rev() {
        let inv = t.recip().map_err(|_| CfError::ZeroDenominator)?;
        t = Rational::from(a) + inv;
    }
    t.recip().map_err(|_| CfError::ZeroDenominator)
}

/// `[a1..as] -> [-a1..-as]` and `r -> -r`; the value is negated.
pub fn negate(cf: &ContinuedFraction) -> ContinuedFraction {
    ContinuedFraction { integer_part: -cf.integer_part, entries: cf.entries.iter().map(|a| -a).collect() }
}

/// `(pattern)_k`: the pattern concatenated `k` times.
pub fn expand_repetition(pattern: &[i64], k: usize) -> Vec<i64> {
    pattern.repeat(k)
}

/// Checks that `x` is `p/q` with `q` odd and `0 < p < q`.
pub fn check_knot_fraction(x: &Rational) -> Result<(i64, i64), CfError> {
    let bad = || CfError::InvalidFraction(x.to_string());
    let p = x.numer().to_i64().ok_or_else(bad)?;
    let q = x.denom().to_i64().ok_or_else(bad)?;
    if q % 2 == 0 || p <= 0 || p >= q {
        return Err(bad());
    }
    Ok((p, q))
}

fn to_i64(n: &BigInt) -> Result<i64, CfError> {
    n.to_i64().ok_or(CfError::Overflow)
}

/// The two representatives of `p/q` modulo the integers that lie in `(-1, 1)`.
pub fn representatives(p_over_q: &Rational) -> Result<[Rational; 2], CfError> {
    check_knot_fraction(p_over_q)?;
    Ok([p_over_q.clone(), p_over_q - &Rational::one()])
}

/// Every admissible expansion whose value is congruent to `p/q` modulo the
/// integers, sorted lexicographically by entries.
///
/// Each result carries the integer part that makes its full value exactly
/// `p/q`; the bracket value ([`ContinuedFraction::tail_value`]) is the
/// representative in `(-1, 1)` it expands.
pub fn enumerate_admissible(p_over_q: &Rational) -> Result<Vec<ContinuedFraction>, CfError> {
    let mut out = Vec::new();
    for (shift, rep) in representatives(p_over_q)?.iter().enumerate() {
        let mut found = Vec::new();
        expand_admissible(rep, &mut Vec::new(), &mut found)?;
        out.extend(found.into_iter().map(|entries| ContinuedFraction { integer_part: shift as i64, entries }));
    }
    out.sort_by(|a, b| a.entries.cmp(&b.entries));
    out.dedup();
    Ok(out)
}

// Head entry a of [a, ...] = x must satisfy |1/x - a| < 1 because admissible
// tails have absolute value below 1; the remainder 1/x - a has a strictly
// smaller denominator, so the recursion terminates.
fn expand_admissible(x: &Rational, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) -> Result<(), CfError> {
    let inv = x.recip().map_err(|_| CfError::ZeroDenominator)?;
    let lo = to_i64(&inv.floor())?;
    let hi = to_i64(&inv.ceil())?;
    for a in lo..=hi {
        if a.abs() < 2 {
            continue;
        }
        let rest = &inv - &Rational::from(a);
        if rest.abs() >= Rational::one() {
            continue;
        }
        prefix.push(a);
        if rest.is_zero() {
            out.push(prefix.clone());
        } else {
            expand_admissible(&rest, prefix, out)?;
        }
        prefix.pop();
    }
    Ok(())
}

/// The unique expansion with all entries even. It expands the representative
/// of `p/q` in `(-1, 1)` with even numerator (no all-even expansion exists for
/// the other one); the integer part makes the full value `p/q`.
pub fn all_even_expansion(p_over_q: &Rational) -> Result<ContinuedFraction, CfError> {
    let (p, _) = check_knot_fraction(p_over_q)?;
    let (rep, shift) = if p % 2 == 0 { (p_over_q.clone(), 0) } else { (p_over_q - &Rational::one(), 1) };
    let mut entries = Vec::new();
    let mut x = rep;
    loop {
        let inv = x.recip().map_err(|_| CfError::ZeroDenominator)?;
        let f = inv.floor();
        let a = if f.is_even() { f } else { inv.ceil() };
        if a.is_odd() {
            // 1/x is an odd integer; cannot happen for an even-numerator start.
            return Err(CfError::InvalidFraction(p_over_q.to_string()));
        }
        let rest = &inv - &Rational::from(a.clone());
        entries.push(to_i64(&a)?);
        if rest.is_zero() {
            break;
        }
        x = rest;
    }
    Ok(ContinuedFraction { integer_part: shift, entries })
}

/// Standard Euclidean expansion of `x` in `(0, 1)`: all entries positive, the
/// last one at least 2.
pub fn all_positive_expansion(x: &Rational) -> Result<ContinuedFraction, CfError> {
    if !x.is_positive() || *x >= Rational::one() {
        return Err(CfError::InvalidFraction(x.to_string()));
    }
    let mut entries = Vec::new();
    let mut x = x.clone();
    loop {
        let inv = x.recip().map_err(|_| CfError::ZeroDenominator)?;
        let a = inv.floor();
        let rest = &inv - &Rational::from(a.clone());
        entries.push(to_i64(&a)?);
        if rest.is_zero() {
            break;
        }
        x = rest;
    }
    Ok(ContinuedFraction { integer_part: 0, entries })
}

impl PartialOrd for ContinuedFraction {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on entries, then on the integer part.
impl Ord for ContinuedFraction {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.entries.cmp(&other.entries).then(self.integer_part.cmp(&other.integer_part))
    }
}

/// Canonical, fully expanded form: `[4,-4]`, or `1+[-2,2]` with an integer part.
impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.integer_part != 0 {
            write!(f, "{}+", self.integer_part)?;
        }
        write!(f, "[")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
