use alloc::vec::Vec;

use crate::exactnum::{gcd, primitive_part, MultiPoly};

use super::presentation::{Generator, TwoBridgePresentation};
use super::CharVarError;

/// 2x2 matrix over `Z[M, u]`, row-major.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct PolyMat(pub [MultiPoly; 4]);

const VARS: [&str; 2] = ["M", "u"];

fn mono(c: i64, em: u32, eu: u32) -> MultiPoly {
    MultiPoly::from_terms(&VARS, [(alloc::vec![em, eu], c)])
}

fn zero() -> MultiPoly {
    MultiPoly::zero(&VARS)
}

impl PolyMat {
    pub(crate) fn identity() -> Self {
        PolyMat([mono(1, 0, 0), zero(), zero(), mono(1, 0, 0)])
    }

    pub(crate) fn mul(&self, rhs: &PolyMat) -> PolyMat {
        let [a, b, c, d] = &self.0;
        let [w, x, y, z] = &rhs.0;
        PolyMat([&(a * w) + &(b * y), &(a * x) + &(b * z), &(c * w) + &(d * y), &(c * x) + &(d * z)])
    }

    pub(crate) fn sub(&self, rhs: &PolyMat) -> PolyMat {
        let [a, b, c, d] = &self.0;
        let [w, x, y, z] = &rhs.0;
        PolyMat([a - w, b - x, c - y, d - z])
    }
}

/// `M` times the image of a generator power `g^±1`, which clears the
/// `1/M` entries of `a -> [[M, 1], [0, 1/M]]` and `b -> [[M, 0], [-u, 1/M]]`.
pub(crate) fn scaled_generator(g: Generator, exponent: i8) -> PolyMat {
    match (g, exponent > 0) {
        (Generator::A, true) => PolyMat([mono(1, 2, 0), mono(1, 1, 0), zero(), mono(1, 0, 0)]),
        (Generator::A, false) => PolyMat([mono(1, 0, 0), mono(-1, 1, 0), zero(), mono(1, 2, 0)]),
        (Generator::B, true) => PolyMat([mono(1, 2, 0), zero(), mono(-1, 1, 1), mono(1, 0, 0)]),
        (Generator::B, false) => PolyMat([mono(1, 0, 0), zero(), mono(1, 1, 1), mono(1, 2, 0)]),
    }
}

/// `M^len` times the image of a word.
pub(crate) fn scaled_word(word: &[(Generator, i8)]) -> PolyMat {
    word.iter().fold(PolyMat::identity(), |acc, &(g, e)| acc.mul(&scaled_generator(g, e)))
}

/// The polynomial in `(M, u)` cutting out the non-abelian representations:
/// the gcd of the entries of `a w - w b`, with monomial and integer content
/// removed. Its degree in `u` is `(q - 1)/2`.
pub fn riley_polynomial(pres: &TwoBridgePresentation) -> Result<MultiPoly, CharVarError> {
    let w = scaled_word(&pres.word());
    let lhs = scaled_generator(Generator::A, 1).mul(&w);
    let rhs = w.mul(&scaled_generator(Generator::B, 1));
    let rel = lhs.sub(&rhs);
    let mut entries: Vec<MultiPoly> =
        rel.0.iter().filter(|e| !e.is_zero()).map(|e| primitive_part(&e.strip_monomial())).collect();
    entries.sort_by_key(MultiPoly::num_terms);
    let Some((first, rest)) = entries.split_first() else {
        return Err(CharVarError::TrivialRiley);
    };
    // In practice every nonzero entry is the same polynomial up to monomial
    // and content factors; exact division confirms that cheaply.
    let g = if rest.iter().all(|e| e.div_exact(first).is_some()) {
        first.clone()
    } else {
        rest.iter().fold(first.clone(), |acc, e| gcd(&acc, e))
    };
    let g = primitive_part(&g.strip_monomial()).normalize_sign();
    if g.degree_in("u").unwrap_or(0) == 0 {
        return Err(CharVarError::TrivialRiley);
    }
    Ok(g.with_vars(&VARS.map(Into::into)).expect("only M and u occur"))
}

#[cfg(test)]
mod tests {
    use super::super::presentation::presentation;
    use super::*;
    use crate::exactnum::Rational;

    fn riley(p: i64, q: i64) -> MultiPoly {
        riley_polynomial(&presentation(&Rational::new(p, q).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn trefoil() {
        // With w = ba, both off-diagonal entries of a w - w b are multiples of
        // (M^2 u + M^2 - M^4 - 1) / M^2 and the diagonal vanishes.
        let r = riley(1, 3);
        let expected = MultiPoly::from_terms(
            &VARS,
            [(alloc::vec![4, 0], 1), (alloc::vec![2, 1], -1), (alloc::vec![2, 0], -1), (alloc::vec![0, 0], 1)],
        );
        assert_eq!(r, expected);
    }

    #[test]
    fn degrees() {
        assert_eq!(riley(1, 3).degree_in("u"), Some(1));
        assert_eq!(riley(2, 5).degree_in("u"), Some(2));
        assert_eq!(riley(4, 15).degree_in("u"), Some(7));
    }
}
