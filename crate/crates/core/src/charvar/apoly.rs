use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::exactnum::{poly_resultant, MultiPoly, Rational, ResultantMethod, Slope};
use crate::surfaces;

use super::factor::{factor_bivariate, squarefree_bivariate};
use super::newton::{edge_slopes, newton_polygon, NewtonPolygon, SlopeConvention};
use super::presentation::{presentation, Generator, TwoBridgePresentation};
use super::riley::{riley_polynomial, scaled_generator, scaled_word};
use super::CharVarError;

/// What part of the character variety a polynomial describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentTag {
    /// The whole eliminant.
    Full,
    /// The factor whose slopes are all carried by flip-invariant surfaces.
    Canonical,
    /// Any other non-abelian factor.
    Other,
    /// `L - 1`.
    Abelian,
}

/// A polynomial in `L, M` with content 1 and no repeated factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct APoly {
    pub poly: MultiPoly,
    pub component_tag: ComponentTag,
}

impl APoly {
    pub fn newton_polygon(&self) -> NewtonPolygon {
        newton_polygon(&self.poly)
    }

    pub fn edge_slopes(&self, convention: &SlopeConvention) -> alloc::collections::BTreeSet<Slope> {
        edge_slopes(&self.newton_polygon(), convention)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct APolyOptions {
    /// Keep (or add) the abelian factor `L - 1`.
    pub keep_abelian: bool,
    pub method: ResultantMethod,
}

fn abelian_factor() -> MultiPoly {
    MultiPoly::from_terms(&["L", "M"], [(alloc::vec![1, 0], 1), (alloc::vec![0, 0], -1)])
}

/// The longitude commuting with `a`: `λ = w w̃ a^(-2σ)`, with `w̃` the reversed
/// word and `σ` its exponent sum. Returns `(N, e)` with `N ∈ Z[M, u]` and the
/// longitude eigenvalue at `e1` equal to `N / M^e`.
pub fn longitude_relation(pres: &TwoBridgePresentation) -> (MultiPoly, u32) {
    let word = pres.word();
    let reversed: Vec<(Generator, i8)> = word.iter().rev().copied().collect();
    let sigma = pres.exponent_sum();
    let correction = scaled_generator(Generator::A, if sigma > 0 { -1 } else { 1 });
    let mut lam = scaled_word(&word).mul(&scaled_word(&reversed));
    for _ in 0..2 * sigma.unsigned_abs() {
        lam = lam.mul(&correction);
    }
    let e = 2 * word.len() as u32 + 2 * sigma.unsigned_abs() as u32;
    let [n, ..] = lam.0;
    (n, e)
}

/// The A-polynomial of `p/q`: `Res_u(R, M^e L - N)` with `R` the Riley
/// polynomial, stripped of monomials, content and repeated factors. The
/// abelian factor `L - 1` is present exactly when `keep_abelian` is set.
pub fn a_polynomial(p_over_q: &Rational, options: &APolyOptions) -> Result<APoly, CharVarError> {
    let pres = presentation(p_over_q)?;
    let riley = riley_polynomial(&pres)?;
    let (n, e) = longitude_relation(&pres);
    let m_e = MultiPoly::from_terms(&["M"], [(alloc::vec![e], 1)]);
    let l = MultiPoly::var("L");
    // common powers of M only inflate the eliminant; drop them up front
    let relation = (&(&m_e * &l) - &n).strip_monomial();
    let res = poly_resultant(&riley, &relation, "u", options.method)?;
    if res.is_zero() {
        return Err(CharVarError::ZeroElimination);
    }
    let lm = ["L".into(), "M".into()];
    let res = res.strip_monomial().with_vars(&lm).ok_or(CharVarError::ZeroElimination)?;
    let mut poly = squarefree_bivariate(&res, "L", "M")?;
    let abelian = abelian_factor();
    if let Some(q) = poly.div_exact(&abelian) {
        if !options.keep_abelian {
            poly = q;
        }
    } else if options.keep_abelian {
        poly = &poly * &abelian;
    }
    Ok(APoly { poly: poly.normalize_sign(), component_tag: ComponentTag::Full })
}

/// The full polynomial together with its irreducible factors, each tagged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub full: APoly,
    pub parts: Vec<APoly>,
    /// Set when splitting was not possible; `parts` then holds `full` alone.
    pub note: Option<String>,
}

/// Splits an eliminant over the integers and tags the factors: `L - 1` is
/// abelian; a non-abelian factor is canonical when every slope of its Newton
/// polygon is carried by a flip-invariant surface of the knot, else other.
pub fn split_components(full: &APoly, p_over_q: &Rational) -> Result<Vec<APoly>, CharVarError> {
    let factors = factor_bivariate(&full.poly, "L", "M")?;
    let report = surfaces::slope_report(p_over_q).map_err(|e| CharVarError::Split(format!("{e}")))?;
    let symmetric: alloc::collections::BTreeSet<Slope> =
        report.symmetric_slopes().into_iter().map(Slope::integer).collect();
    let abelian = abelian_factor();
    let nonabelian = factors.iter().filter(|f| **f != abelian).count();
    let mut parts: Vec<APoly> = factors
        .into_iter()
        .map(|f| {
            let tag = if f == abelian {
                ComponentTag::Abelian
            } else {
                let slopes = edge_slopes(&newton_polygon(&f), &SlopeConvention::default());
                if nonabelian == 1 || slopes.is_subset(&symmetric) {
                    ComponentTag::Canonical
                } else {
                    ComponentTag::Other
                }
            };
            APoly { poly: f, component_tag: tag }
        })
        .collect();
    parts.sort_by(|a, b| {
        (a.component_tag, a.poly.degree_in("L"), a.poly.degree_in("M")).cmp(&(
            b.component_tag,
            b.poly.degree_in("L"),
            b.poly.degree_in("M"),
        ))
    });
    Ok(parts)
}

/// [`a_polynomial`] followed by [`split_components`]. A failed split is
/// reported in `note` rather than as an error.
pub fn a_polynomial_components(p_over_q: &Rational, options: &APolyOptions) -> Result<Components, CharVarError> {
    let full = a_polynomial(p_over_q, options)?;
    match split_components(&full, p_over_q) {
        Ok(parts) => Ok(Components { full, parts, note: None }),
        Err(e) => Ok(Components { parts: alloc::vec![full.clone()], full, note: Some(format!("{e}")) }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lm(terms: &[(u32, u32, i64)]) -> MultiPoly {
        MultiPoly::from_terms(&["L", "M"], terms.iter().map(|&(a, b, c)| (alloc::vec![a, b], c)))
    }

    #[test]
    fn figure_eight() {
        let a = a_polynomial(&Rational::new(2, 5).unwrap(), &APolyOptions::default()).unwrap();
        // L^2 M^4 + L (-M^8 + M^6 + 2 M^4 + M^2 - 1) + M^4, from an independent
        // symbolic elimination with the same generator conventions
        let expected = lm(&[(2, 4, 1), (1, 8, -1), (1, 6, 1), (1, 4, 2), (1, 2, 1), (1, 0, -1), (0, 4, 1)]);
        assert_eq!(a.poly, expected);
    }

    #[test]
    fn keep_abelian_adds_the_factor() {
        let opts = APolyOptions { keep_abelian: true, ..Default::default() };
        let a = a_polynomial(&Rational::new(2, 5).unwrap(), &opts).unwrap();
        assert!(a.poly.div_exact(&abelian_factor()).is_some());
        assert_eq!(a.poly.degree_in("L"), Some(3));
    }

    #[test]
    fn trefoil() {
        // independent symbolic elimination gives L M^6 + 1
        let a = a_polynomial(&Rational::new(1, 3).unwrap(), &APolyOptions::default()).unwrap();
        assert_eq!(a.poly, lm(&[(1, 6, 1), (0, 0, 1)]));
    }
}
