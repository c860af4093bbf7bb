//! Character-variety computations for two-bridge knots: the Riley polynomial
//! of the standard presentation, the A-polynomial by eliminating `u` against
//! the longitude eigenvalue, its splitting into irreducible factors, and
//! Newton polygons with their edge slopes.

mod apoly;
mod factor;
mod newton;
mod presentation;
mod riley;

pub use apoly::{
    a_polynomial, a_polynomial_components, longitude_relation, split_components, APoly, APolyOptions, ComponentTag,
    Components,
};
pub use factor::{factor_bivariate, factor_univariate, gcd_bivariate, squarefree_bivariate, UniPoly};
pub use newton::{convex_hull, edge_slopes, newton_polygon, Axes, NewtonPolygon, SlopeConvention};
pub use presentation::{presentation, Generator, TwoBridgePresentation};
pub use riley::riley_polynomial;

use alloc::string::String;

use thiserror::Error;

use crate::confrac::CfError;
use crate::exactnum::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharVarError {
    #[error(transparent)]
    Fraction(#[from] CfError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("relation entries have a trivial gcd; the presentation convention is inconsistent")]
    TrivialRiley,
    #[error("elimination produced the zero polynomial")]
    ZeroElimination,
    #[error("could not split the polynomial: {0}")]
    Split(String),
}
