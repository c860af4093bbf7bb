//! Resultants over `Z[x1..xn]`, by two independent routes: the Sylvester
//! determinant with Bareiss fraction-free elimination, and the subresultant
//! remainder sequence.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::cleanup::{prem, trim};
use super::{ExactError, MultiPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ResultantMethod {
    Sylvester,
    #[default]
    Subresultant,
}

/// `Res_var(f, g)` as a polynomial in the remaining variables, computed with
/// the given method.
pub fn poly_resultant(
    f: &MultiPoly,
    g: &MultiPoly,
    var: &str,
    method: ResultantMethod,
) -> Result<MultiPoly, ExactError> {
    match method {
        ResultantMethod::Sylvester => resultant_sylvester(f, g, var),
        ResultantMethod::Subresultant => resultant_subresultant(f, g, var),
    }
}

fn all_vars(f: &MultiPoly, g: &MultiPoly) -> Vec<String> {
    (f + g).vars().to_vec()
}

fn zero_like(vars: &[String]) -> MultiPoly {
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    MultiPoly::zero(&names)
}

/// Handles absent variables, zero inputs and degree-0 arguments. Returns the
/// coefficient vectors when both degrees are positive.
#[allow(clippy::type_complexity)]
fn prepare(
    f: &MultiPoly,
    g: &MultiPoly,
    var: &str,
) -> Result<Result<(Vec<MultiPoly>, Vec<MultiPoly>), MultiPoly>, ExactError> {
    if !f.involves(var) && !g.involves(var) {
        return Err(ExactError::MissingVariable(var.to_string()));
    }
    let vars = all_vars(f, g);
    if f.is_zero() || g.is_zero() {
        return Ok(Err(zero_like(&vars)));
    }
    let (df, dg) = (f.degree_in(var).unwrap(), g.degree_in(var).unwrap());
    if dg == 0 {
        return Ok(Err(g.pow(df).with_vars(&vars).expect("subset")));
    }
    if df == 0 {
        return Ok(Err(f.pow(dg).with_vars(&vars).expect("subset")));
    }
    let f = f.with_vars(&vars).expect("subset");
    let g = g.with_vars(&vars).expect("subset");
    Ok(Ok((f.coeffs_in(var), g.coeffs_in(var))))
}

/// Determinant of the Sylvester matrix by Bareiss elimination.
pub fn resultant_sylvester(f: &MultiPoly, g: &MultiPoly, var: &str) -> Result<MultiPoly, ExactError> {
    let (fc, gc) = match prepare(f, g, var)? {
        Ok(v) => v,
        Err(done) => return Ok(done),
    };
    let vars = all_vars(f, g);
    let m = fc.len() - 1;
    let n = gc.len() - 1;
    let size = m + n;
    let zero = zero_like(&vars);
    let mut mat: Vec<Vec<MultiPoly>> = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = alloc::vec![zero.clone(); size];
        for (k, c) in fc.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        mat.push(row);
    }
    for i in 0..m {
        let mut row = alloc::vec![zero.clone(); size];
        for (k, c) in gc.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        mat.push(row);
    }
    Ok(bareiss_det(mat, &vars))
}

/// Fraction-free determinant; every division is exact.
pub(crate) fn bareiss_det(mut mat: Vec<Vec<MultiPoly>>, vars: &[String]) -> MultiPoly {
    let size = mat.len();
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    let mut prev = MultiPoly::constant(1, &names);
    let mut negate = false;
    for k in 0..size {
        if mat[k][k].is_zero() {
            match (k + 1..size).find(|&r| !mat[r][k].is_zero()) {
                Some(r) => {
                    mat.swap(k, r);
                    negate = !negate;
                }
                None => return zero_like(vars),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&mat[i][j] * &mat[k][k]) - &(&mat[i][k] * &mat[k][j]);
                mat[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            mat[i][k] = zero_like(vars);
        }
        prev = mat[k][k].clone();
    }
    let det = mat[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Subresultant remainder sequence (Collins / Brown), no content removal.
pub fn resultant_subresultant(f: &MultiPoly, g: &MultiPoly, var: &str) -> Result<MultiPoly, ExactError> {
    let (mut a, mut b) = match prepare(f, g, var)? {
        Ok(v) => v,
        Err(done) => return Ok(done),
    };
    let vars = all_vars(f, g);
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    let one = MultiPoly::constant(1, &names);
    let mut sign_negative = false;
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
        let (da, db) = (a.len() - 1, b.len() - 1);
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = !sign_negative;
        }
    }
    let mut gg = one.clone();
    let mut h = one.clone();
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let mut r = prem(&a, &b);
        trim(&mut r);
        if r.is_empty() {
            return Ok(zero_like(&vars));
        }
        let divisor = &gg * &h.pow(delta);
        a = b;
        b = r.iter().map(|c| c.div_exact(&divisor).expect("subresultant division is exact")).collect();
        gg = a.last().expect("nonzero").clone();
        // h <- g^delta / h^(delta - 1)
        if delta > 0 {
            h = gg.pow(delta).div_exact(&h.pow(delta - 1)).expect("exact");
        }
        if b.len() == 1 {
            let da = (a.len() - 1) as u32;
            let lb = &b[0];
            let res = if da == 0 { lb.clone() } else { lb.pow(da).div_exact(&h.pow(da - 1)).expect("exact") };
            let res = res.with_vars(&vars).expect("subset");
            return Ok(if sign_negative { -res } else { res });
        }
    }
}
