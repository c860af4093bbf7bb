//! Two-bridge knot identifiers and the double twist family `J(k, l)`.
//!
//! `K(p, q)` and `K(p', q')` are the same unoriented knot exactly when
//! `q = q'` and `p' ≡ p^{±1} (mod q)`; allowing `p' ≡ -p^{±1}` as well
//! identifies a knot with its mirror image.

use core::fmt;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("q must be odd and at least 3, got {0}")]
    BadDenominator(i64),
    #[error("gcd({p}, {q}) != 1")]
    NotCoprime { p: i64, q: i64 },
    #[error("J({k}, {l}) is a two-component link: k*l must be even")]
    Link { k: i64, l: i64 },
    #[error("J({k}, {l}) is the unknot")]
    Unknot { k: i64, l: i64 },
}

/// Which representatives are identified when canonicalizing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MirrorConvention {
    /// `p ~ p^{-1}` only; a knot and its mirror stay distinct.
    #[default]
    Chiral,
    /// Also `p ~ q - p`, identifying mirror images.
    UpToMirror,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KnotId {
    p: i64,
    q: i64,
}

/// `p^{-1} mod q`, assuming `gcd(p, q) = 1`.
fn inverse_mod(p: i64, q: i64) -> i64 {
    let e = p.extended_gcd(&q);
    e.x.rem_euclid(q)
}

/// Smallest member of the class of `p` in `(0, q)` under the convention.
pub fn canonical_p(p: i64, q: i64, convention: MirrorConvention) -> i64 {
    let p = p.rem_euclid(q);
    let inv = inverse_mod(p, q);
    let mut best = p.min(inv);
    if convention == MirrorConvention::UpToMirror {
        best = best.min(q - p).min(q - inv);
    }
    best
}

impl KnotId {
    /// `K(p, q)` in canonical form. `p` may be any integer coprime to `q`.
    pub fn new(p: i64, q: i64) -> Result<Self, KnotError> {
        Self::with_convention(p, q, MirrorConvention::Chiral)
    }

    pub fn with_convention(p: i64, q: i64, convention: MirrorConvention) -> Result<Self, KnotError> {
        if q < 3 || q % 2 == 0 {
            return Err(KnotError::BadDenominator(q));
        }
        if p.gcd(&q) != 1 {
            return Err(KnotError::NotCoprime { p, q });
        }
        Ok(KnotId { p: canonical_p(p, q, convention), q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn mirror(&self) -> KnotId {
        KnotId::new(self.q - self.p, self.q).expect("mirror of a valid id is valid")
    }

    /// The 2-bridge torus knots `K(±1, q)` are the non-hyperbolic members.
    pub fn is_hyperbolic(&self) -> bool {
        self.p != 1 && self.p != self.q - 1
    }
}

impl fmt::Display for KnotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// `q = q'` and `p' ≡ p^{±1} (mod q)`.
pub fn knot_equivalent(a: &KnotId, b: &KnotId) -> bool {
    if a.q != b.q {
        return false;
    }
    let q = a.q;
    let (p, pp) = (a.p.rem_euclid(q), b.p.rem_euclid(q));
    pp == p || pp == inverse_mod(p, q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwistKnot {
    pub id: KnotId,
    pub hyperbolic: bool,
}

/// `J(k, l)` as the two-bridge knot `l / (1 - kl)`. A negative denominator's
/// sign is dropped, so `J(2n, 2n)` lands on `2n / (4n² - 1)`.
pub fn double_twist_to_two_bridge(k: i64, l: i64) -> Result<TwistKnot, KnotError> {
    if (k * l) % 2 != 0 {
        return Err(KnotError::Link { k, l });
    }
    let q = (1 - k * l).abs();
    if q == 1 {
        return Err(KnotError::Unknot { k, l });
    }
    let id = KnotId::new(l, q)?;
    Ok(TwistKnot { id, hyperbolic: id.is_hyperbolic() })
}
