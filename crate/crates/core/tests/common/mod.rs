//! Independent oracles shared by the integration tests and the acceptance
//! suite. Nothing here calls the algorithms under test.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Value of `[a1, ..., as]` by direct back-substitution; `None` when a
/// partial denominator vanishes.
pub fn cf_value(entries: &[i64]) -> Option<BigRational> {
    let (&last, init) = entries.split_last()?;
    let mut t = BigRational::from_integer(BigInt::from(last));
    for &a in init.iter().rev() {
        if t.is_zero() {
            return None;
        }
        t = BigRational::from_integer(BigInt::from(a)) + t.recip();
    }
    if t.is_zero() {
        None
    } else {
        Some(t.recip())
    }
}

/// Exhaustive depth-first search for admissible expansions of `x`, |x| < 1.
///
/// Candidates for the head entry are all integers in
/// `floor(1/x) - 1 ..= ceil(1/x) + 1` with `|a| >= 2`. The remainder
/// `1/x - a` has a smaller denominator than `x` (it is `|numer x|`), so the
/// search terminates. Every leaf is re-evaluated from scratch.
pub fn dfs_expansions(x: &BigRational) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if x.is_zero() {
        return out;
    }
    let inv = x.recip();
    let lo = inv.floor().to_integer().to_i64().unwrap() - 1;
    let hi = inv.ceil().to_integer().to_i64().unwrap() + 1;
    for a in lo..=hi {
        if a.abs() < 2 {
            continue;
        }
        let rest = &inv - BigRational::from_integer(BigInt::from(a));
        if rest.is_zero() {
            out.push(vec![a]);
        } else if rest.abs() < BigRational::one() {
            assert!(rest.denom() < x.denom(), "remainder denominators must decrease");
            for tail in dfs_expansions(&rest) {
                let mut e = vec![a];
                e.extend(tail);
                out.push(e);
            }
        }
    }
    out.retain(|e| cf_value(e).as_ref() == Some(x));
    out
}

/// All admissible expansions of `p/q` modulo the integers: the DFS run on
/// both representatives `p/q` and `p/q - 1`, sorted.
pub fn oracle_all_expansions(p: i64, qq: i64) -> Vec<Vec<i64>> {
    let mut all = dfs_expansions(&q(p, qq));
    all.extend(dfs_expansions(&q(p - qq, qq)));
    all.sort();
    all
}

/// Reduced `p/q` with `q` odd, `3 <= q <= max_q`, `0 < p < q`.
pub fn knot_fractions(max_q: i64) -> Vec<(i64, i64)> {
    let mut v = Vec::new();
    for qq in (3..=max_q).step_by(2) {
        for p in 1..qq {
            if p.gcd(&qq) == 1 {
                v.push((p, qq));
            }
        }
    }
    v
}

/// Determinant over Q by plain Gaussian elimination with pivoting.
#[allow(clippy::needless_range_loop)]
pub fn det_q(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if r != c {
            m.swap(r, c);
            det = -det;
        }
        let piv = m[c][c].clone();
        det *= &piv;
        for r in c + 1..n {
            let f = &m[r][c] / &piv;
            if f.is_zero() {
                continue;
            }
            for k in c..n {
                let t = &f * &m[c][k];
                m[r][k] -= t;
            }
        }
    }
    det
}

/// Resultant of two univariate polynomials (coefficients low to high, both
/// of positive degree with nonzero leading coefficient) from the Sylvester
/// matrix determinant.
pub fn sylvester_resultant(f: &[BigRational], g: &[BigRational]) -> BigRational {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut mat = vec![vec![BigRational::zero(); size]; size];
    for i in 0..n {
        for (j, c) in f.iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.iter().rev().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    det_q(mat)
}
