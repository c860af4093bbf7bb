//! Branched surfaces `Σ[a1..as]` carried by admissible expansions, their
//! boundary slopes, and the flip that turns the 4-plat upside down.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use thiserror::Error;

use crate::confrac::{self, check_knot_fraction, CfError, ContinuedFraction};
use crate::exactnum::Rational;
use crate::idealpoints;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error(transparent)]
    ContinuedFraction(#[from] CfError),
    #[error("expansion {0} is not admissible (every entry needs |a| >= 2)")]
    NotAdmissible(ContinuedFraction),
    #[error("expansion {0} does not expand {1} modulo the integers")]
    WrongFraction(ContinuedFraction, Rational),
}

/// An admissible expansion of a two-bridge fraction. The stored expansion's
/// integer part is chosen so that it evaluates to `knot_fraction` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchedSurface {
    expansion: ContinuedFraction,
    knot_fraction: Rational,
}

impl BranchedSurface {
    pub fn new(expansion: &ContinuedFraction, knot_fraction: &Rational) -> Result<Self, SurfaceError> {
        check_knot_fraction(knot_fraction)?;
        if !expansion.is_admissible() || expansion.is_empty() {
            return Err(SurfaceError::NotAdmissible(expansion.clone()));
        }
        let tail = expansion.tail_value()?;
        let shift = knot_fraction - &tail;
        let Some(r) = shift.to_i64() else {
            return Err(SurfaceError::WrongFraction(expansion.clone(), knot_fraction.clone()));
        };
        Ok(BranchedSurface { expansion: expansion.with_integer_part(r), knot_fraction: knot_fraction.clone() })
    }

    /// Surface for an admissible expansion of whatever knot it expands.
    pub fn from_expansion(expansion: &ContinuedFraction) -> Result<Self, SurfaceError> {
        if !expansion.is_admissible() || expansion.is_empty() {
            return Err(SurfaceError::NotAdmissible(expansion.clone()));
        }
        let fraction = expansion.tail_value()?.fract_part();
        BranchedSurface::new(expansion, &fraction)
    }

    pub fn expansion(&self) -> &ContinuedFraction {
        &self.expansion
    }

    pub fn entries(&self) -> &[i64] {
        self.expansion.entries()
    }

    pub fn knot_fraction(&self) -> &Rational {
        &self.knot_fraction
    }
}

/// `[a1, -a2, a3, -a4, ...]`.
pub fn alternate_signs(entries: &[i64]) -> Vec<i64> {
    entries.iter().enumerate().map(|(i, &a)| if i % 2 == 0 { a } else { -a }).collect()
}

/// `n+ - n-` after alternating signs.
fn sign_balance(entries: &[i64]) -> i64 {
    alternate_signs(entries).iter().map(|a| a.signum()).sum()
}

/// `2((n+ - n-) - (n0+ - n0-))`, with the reference counts taken from the
/// all-even expansion of the knot fraction.
pub fn boundary_slope(surface: &BranchedSurface) -> Result<i64, SurfaceError> {
    let even = confrac::all_even_expansion(&surface.knot_fraction)?;
    Ok(2 * (sign_balance(surface.entries()) - sign_balance(even.entries())))
}

/// Image under the 4-plat flip: `Σ[b1..bs] -> (-1)^(s+1) Σ[bs..b1]`, with
/// `-Σ[c] = Σ[-c]`. The result belongs to the flipped knot's fraction, which
/// is the original one exactly when the twist pattern is palindromic.
pub fn flip(surface: &BranchedSurface) -> Result<BranchedSurface, SurfaceError> {
    let mut entries: Vec<i64> = surface.entries().iter().rev().copied().collect();
    if entries.len().is_multiple_of(2) {
        entries.iter_mut().for_each(|a| *a = -*a);
    }
    let cf = ContinuedFraction::from_entries(entries)?;
    BranchedSurface::from_expansion(&cf)
}

/// True when the flip fixes the expansion.
pub fn is_symmetric(surface: &BranchedSurface) -> bool {
    flip(surface).is_ok_and(|f| f.entries() == surface.entries())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeDatum {
    pub slope: i64,
    pub expansion: ContinuedFraction,
    pub symmetric: bool,
    pub ideal_point_count: usize,
}

impl SlopeDatum {
    /// The representative in `(-1, 1)` the expansion evaluates to.
    pub fn representative(&self) -> Rational {
        self.expansion.tail_value().expect("admissible expansions evaluate")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeReport {
    pub knot_fraction: Rational,
    pub data: Vec<SlopeDatum>,
}

impl SlopeReport {
    pub fn all_slopes(&self) -> BTreeSet<i64> {
        self.data.iter().map(|d| d.slope).collect()
    }

    /// Slopes carried by at least one flip-invariant expansion.
    pub fn symmetric_slopes(&self) -> BTreeSet<i64> {
        self.data.iter().filter(|d| d.symmetric).map(|d| d.slope).collect()
    }
}

/// One datum per admissible expansion of `p/q`, in enumeration order.
pub fn slope_report(p_over_q: &Rational) -> Result<SlopeReport, SurfaceError> {
    let mut data = Vec::new();
    for cf in confrac::enumerate_admissible(p_over_q)? {
        let surface = BranchedSurface::new(&cf, p_over_q)?;
        let classes = idealpoints::ideal_point_classes(&cf, idealpoints::AltIndexing::default())
            .map_err(|_| SurfaceError::NotAdmissible(cf.clone()))?;
        data.push(SlopeDatum {
            slope: boundary_slope(&surface)?,
            symmetric: is_symmetric(&surface),
            ideal_point_count: classes.len(),
            expansion: surface.expansion,
        });
    }
    Ok(SlopeReport { knot_fraction: p_over_q.clone(), data })
}

impl core::fmt::Display for SlopeDatum {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "{} slope={} symmetric={} ideal_points={}",
            self.expansion.with_integer_part(0),
            self.slope,
            self.symmetric,
            self.ideal_point_count
        )
    }
}
