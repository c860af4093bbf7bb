//! File formats, reports, the regression suite and the command-line front
//! end for `tbk-core`.

pub mod apoly_format;
pub mod cf_syntax;
pub mod cli;
pub mod matrix_file;
pub mod report;
pub mod suite;

use num_integer::Integer;

use tbk_core::confrac::CfError;
use tbk_core::Rational;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TbkError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid knot fraction `{0}`: expected p/q with q odd, q >= 3 and gcd(p, q) = 1")]
    Fraction(String),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Cf(#[from] CfError),
    #[error(transparent)]
    Surface(#[from] tbk_core::surfaces::SurfaceError),
    #[error(transparent)]
    CharVar(#[from] tbk_core::charvar::CharVarError),
    #[error(transparent)]
    Knot(#[from] tbk_core::knot::KnotError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Parses `p/q` naming a two-bridge knot and reduces `p` into `(0, q)`;
/// `p` and `p + q` give the same knot.
pub fn parse_knot_fraction(s: &str) -> Result<Rational, TbkError> {
    let bad = || TbkError::Fraction(s.to_string());
    let cleaned = s.trim().replace('\u{2212}', "-");
    let (p, q) = cleaned.split_once('/').ok_or_else(bad)?;
    let p: i64 = p.trim().parse().map_err(|_| bad())?;
    let q: i64 = q.trim().parse().map_err(|_| bad())?;
    if q < 3 || q % 2 == 0 || p.gcd(&q) != 1 {
        return Err(bad());
    }
    let x = Rational::new(p.rem_euclid(q), q).map_err(|_| bad())?;
    tbk_core::confrac::check_knot_fraction(&x).map_err(|_| bad())?;
    Ok(x)
}
