//! Integer content, gcd over `Z[x1..xn]` and square-free parts.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactError, MultiPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CleanupMode {
    Content,
    PrimitivePart,
    SquarefreePart,
}

pub fn poly_cleanup(f: &MultiPoly, mode: CleanupMode) -> Result<MultiPoly, ExactError> {
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    Ok(match mode {
        CleanupMode::Content => {
            let vars: Vec<&str> = f.vars().iter().map(String::as_str).collect();
            MultiPoly::constant(content(f), &vars)
        }
        CleanupMode::PrimitivePart => primitive_part(f),
        CleanupMode::SquarefreePart => squarefree_part(f)?,
    })
}

/// Positive gcd of the coefficients (0 for the zero polynomial).
pub fn content(f: &MultiPoly) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in f.terms() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// `f / content(f)`, sign unchanged.
pub fn primitive_part(f: &MultiPoly) -> MultiPoly {
    let c = content(f);
    if c.is_zero() || c.is_one() {
        return f.clone();
    }
    f.div_scalar_exact(&c).expect("content divides")
}

pub(crate) fn trim(v: &mut Vec<MultiPoly>) {
    while v.last().is_some_and(MultiPoly::is_zero) {
        v.pop();
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b` on coefficient
/// vectors (index = degree). `b` must be nonzero.
pub(crate) fn prem(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut r: Vec<MultiPoly> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    if r.len() < b.len() {
        return r;
    }
    let mut e = (r.len() - b.len() + 1) as u32;
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        let off = dr - db;
        for (j, bj) in b.iter().enumerate() {
            r[j + off] = &r[j + off] - &(&lr * bj);
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

fn gcd_int(a: &BigInt, b: &BigInt, vars: &[String]) -> MultiPoly {
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    MultiPoly::constant(a.gcd(b), &names)
}

/// Content with respect to `v`: gcd of the coefficients in `v`.
pub(crate) fn content_in(f: &MultiPoly, v: &str) -> MultiPoly {
    let mut g: Option<MultiPoly> = None;
    for c in f.coeffs_in(v).iter().rev() {
        if c.is_zero() {
            continue;
        }
        g = Some(match g {
            None => c.clone(),
            Some(acc) => gcd(&acc, c),
        });
        if g.as_ref().is_some_and(|x| x.constant_value().is_some_and(|k| k.abs().is_one())) {
            break;
        }
    }
    g.map(MultiPoly::normalize_sign).unwrap_or_else(|| f.clone())
}

/// Greatest common divisor in `Z[vars]`, normalized to a positive leading
/// coefficient. `gcd(0, 0) = 0`.
pub fn gcd(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    if f.is_zero() {
        return g.clone().normalize_sign();
    }
    if g.is_zero() {
        return f.clone().normalize_sign();
    }
    let (f, g) = MultiPoly::unify(f, g);
    let all_vars = f.vars().to_vec();
    if let (Some(a), Some(b)) = (f.constant_value(), g.constant_value()) {
        return gcd_int(&a, &b, &all_vars);
    }
    let fu = f.used_vars();
    let gu = g.used_vars();
    let shared: Vec<&String> = fu.iter().filter(|v| gu.contains(v)).collect();
    if shared.is_empty() {
        // A variable occurring in only one argument cannot divide the gcd.
        return if let Some(v) = fu.first() {
            gcd(&content_in(&f, v), &g)
        } else {
            let v = gu.first().expect("g is non-constant");
            gcd(&f, &content_in(&g, v))
        };
    }
    let v =
        shared.iter().min_by_key(|v| f.degree_in(v).unwrap().max(g.degree_in(v).unwrap())).expect("nonempty").as_str();
    let cf = content_in(&f, v);
    let cg = content_in(&g, v);
    let c = gcd(&cf, &cg);
    let pf = f.div_exact(&cf).expect("content divides");
    let pg = g.div_exact(&cg).expect("content divides");
    let (mut a, mut b) = (pf.coeffs_in(v), pg.coeffs_in(v));
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = prem(&a, &b);
        if r.is_empty() {
            let bp = MultiPoly::from_coeffs_in(v, &b);
            let bp = bp.div_exact(&content_in(&bp, v)).expect("content divides");
            return (&c * &bp).with_vars(&all_vars).expect("superset").normalize_sign();
        }
        if r.len() == 1 {
            return c.with_vars(&all_vars).expect("superset").normalize_sign();
        }
        let rp = MultiPoly::from_coeffs_in(v, &r);
        let rp = rp.div_exact(&content_in(&rp, v)).expect("content divides");
        a = b;
        b = rp.coeffs_in(v);
    }
}

/// Product of the distinct irreducible factors of `f` (up to sign and
/// integer content): for each variable, `pp / gcd(pp, d pp)` collects the
/// factors involving it, and the content in that variable carries the rest.
pub fn squarefree_part(f: &MultiPoly) -> Result<MultiPoly, ExactError> {
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let mut rest = primitive_part(f);
    let mut acc = MultiPoly::constant(1, &[]);
    for v in f.used_vars() {
        if !rest.involves(&v) {
            continue;
        }
        let cont = content_in(&rest, &v);
        let pp = rest.div_exact(&cont).expect("content divides");
        let d = pp.derivative(&v);
        let g = gcd(&pp, &d);
        acc = &acc * &pp.div_exact(&g).expect("gcd divides");
        rest = cont;
    }
    let acc = acc.with_vars(f.vars()).expect("subset of f's variables");
    Ok(primitive_part(&acc).normalize_sign())
}
