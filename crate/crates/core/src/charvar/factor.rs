//! Factorization over the integers.
//!
//! Univariate: Zassenhaus — Berlekamp modulo a small prime, linear Hensel
//! lifting past a coefficient bound, then recombination of lifted factors by
//! trial division. Bivariate `F(L, M)`: factor `F(L, m)` at many integer
//! points `m`, match factors by degree in `L`, and interpolate
//! `lc_L(F)(m) · monic(g_m)` coefficientwise in `M`; the result is verified by
//! exact multiplication.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactnum::{content_in, MultiPoly, Rational};

use super::CharVarError;

/// Dense polynomial over `Z`, coefficients from degree 0 upward, no trailing
/// zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly(Vec<BigInt>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.0.last()
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        UniPoly(self.0.iter().map(|a| a / &c).collect())
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::default();
        }
        let mut out = alloc::vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    /// Exact quotient over `Z`, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        let dd = d.degree()?;
        let lc = d.leading()?;
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return if self.is_zero() { Some(UniPoly::default()) } else { None };
        }
        let mut quot = alloc::vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let (qk, r) = rem[k + dd].div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in d.0.iter().enumerate() {
                rem[k + i] -= &qk * dc;
            }
            quot[k] = qk;
        }
        rem.iter().all(Zero::is_zero).then(|| UniPoly::new(quot))
    }

    /// Sum of absolute values of the coefficients.
    fn norm1(&self) -> BigInt {
        self.0.iter().map(|c| c.abs()).sum()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

/// Primitive-PRS gcd over `Z`, primitive with positive leading coefficient.
pub fn uni_gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let (mut a, mut b) = (a.primitive(), b.primitive());
    if a.degree() < b.degree() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b).primitive();
        a = b;
        b = r;
    }
    a.primitive()
}

fn pseudo_rem(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let db = b.0.len() - 1;
    let lb = &b.0[db];
    let mut r = a.0.clone();
    while r.len() > db && !r.is_empty() {
        let lr = r.last().expect("nonempty").clone();
        let off = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.0.iter().enumerate() {
            r[j + off] -= &lr * bj;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    UniPoly::new(r)
}

pub fn is_squarefree(f: &UniPoly) -> bool {
    f.degree().is_some_and(|d| d == 0 || uni_gcd(f, &f.derivative()).degree() == Some(0))
}

// ---- arithmetic in F_p[x], coefficients low to high ----

type Fp = Vec<u64>;

fn fp_trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_from(f: &UniPoly, p: u64) -> Fp {
    let pb = BigInt::from(p);
    fp_trim(f.0.iter().map(|c| c.mod_floor(&pb).to_u64().expect("reduced")).collect())
}

fn fp_inv(a: u64, p: u64) -> u64 {
    fp_pow(a, p - 2, p)
}

fn fp_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn fp_sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    fp_trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p).collect())
}

fn fp_mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = alloc::vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(out)
}

fn fp_divrem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let db = b.len() - 1;
    let inv = fp_inv(b[db], p);
    let mut r = a.clone();
    if r.len() <= db {
        return (Vec::new(), fp_trim(r));
    }
    let mut q = alloc::vec![0u64; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db] * inv % p;
        q[k] = c;
        for (i, &bc) in b.iter().enumerate() {
            r[k + i] = (r[k + i] + p - c * bc % p) % p;
        }
    }
    r.truncate(db);
    (fp_trim(q), fp_trim(r))
}

fn fp_monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        Some(&lc) => {
            let inv = fp_inv(lc, p);
            a.iter().map(|&c| c * inv % p).collect()
        }
        None => Vec::new(),
    }
}

fn fp_gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let (_, r) = fp_divrem(&a, &b, p);
        a = b;
        b = r;
    }
    fp_monic(&a, p)
}

/// `(g, s, t)` with `s a + t b = g` monic.
fn fp_xgcd(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (alloc::vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), alloc::vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s2);
        t0 = core::mem::replace(&mut t1, t2);
    }
    let inv = fp_inv(*r0.last().expect("nonzero gcd"), p);
    let sc = |v: &Fp| fp_trim(v.iter().map(|&c| c * inv % p).collect());
    (sc(&r0), sc(&s0), sc(&t0))
}

fn fp_derivative(a: &Fp, p: u64) -> Fp {
    fp_trim(a.iter().enumerate().skip(1).map(|(i, &c)| c * (i as u64 % p) % p).collect())
}

/// Irreducible monic factors of a monic square-free `f` over `F_p`.
#[allow(clippy::needless_range_loop)] // row operations read one row while writing another
fn berlekamp(f: &Fp, p: u64) -> Vec<Fp> {
    let n = f.len() - 1;
    if n <= 1 {
        return alloc::vec![f.clone()];
    }
    // rows: x^(i p) mod f
    let xp = {
        let mut base = alloc::vec![0u64, 1];
        let mut acc = alloc::vec![1u64];
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = fp_divrem(&fp_mul(&acc, &base, p), f, p).1;
            }
            base = fp_divrem(&fp_mul(&base, &base, p), f, p).1;
            e >>= 1;
        }
        acc
    };
    let mut rows: Vec<Fp> = Vec::with_capacity(n);
    let mut cur = alloc::vec![1u64];
    for _ in 0..n {
        rows.push(cur.clone());
        cur = fp_divrem(&fp_mul(&cur, &xp, p), f, p).1;
    }
    // kernel of (Q - I)^T: v with sum_i v_i (Q - I)[i][j] = 0 for all j
    let mut m: Vec<Vec<u64>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    let q = rows[i].get(j).copied().unwrap_or(0);
                    if i == j {
                        (q + p - 1) % p
                    } else {
                        q
                    }
                })
                .collect()
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(r) = (row..n).find(|&r| m[r][col] != 0) else { continue };
        m.swap(row, r);
        let inv = fp_inv(m[row][col], p);
        for x in m[row].iter_mut() {
            *x = *x * inv % p;
        }
        for r2 in 0..n {
            if r2 != row && m[r2][col] != 0 {
                let c = m[r2][col];
                for k in 0..n {
                    m[r2][k] = (m[r2][k] + p - c * m[row][k] % p) % p;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let basis: Vec<Fp> = free
        .iter()
        .map(|&fc| {
            let mut v = alloc::vec![0u64; n];
            v[fc] = 1;
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - m[r][fc]) % p;
            }
            fp_trim(v)
        })
        .collect();
    let r = basis.len();
    let mut factors = alloc::vec![f.clone()];
    for v in &basis {
        if v.len() <= 1 {
            continue;
        }
        let mut next = Vec::new();
        for g in factors {
            let mut pending = alloc::vec![g];
            for s in 0..p {
                if factors_done(&pending, &next, r) {
                    break;
                }
                let mut split = Vec::new();
                for h in pending {
                    if h.len() <= 2 {
                        split.push(h);
                        continue;
                    }
                    let vs = fp_sub(v, &alloc::vec![s], p);
                    let d = fp_gcd(&h, &vs, p);
                    if d.len() > 1 && d.len() < h.len() {
                        let (q, _) = fp_divrem(&h, &d, p);
                        split.push(d);
                        split.push(fp_monic(&q, p));
                    } else {
                        split.push(h);
                    }
                }
                pending = split;
            }
            next.extend(pending);
        }
        factors = next;
        if factors.len() == r {
            break;
        }
    }
    factors
}

fn factors_done(pending: &[Fp], done: &[Fp], r: usize) -> bool {
    pending.len() + done.len() >= r
}

const PRIMES: [u64; 40] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109,
    113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
];

/// Symmetric residue in `(-m/2, m/2]`.
fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    e.x.mod_floor(m)
}

/// Irreducible factors of a square-free polynomial over `Z`, each primitive
/// with positive leading coefficient, sorted by degree then coefficients;
/// returned with the integer content (carrying the sign).
pub fn factor_univariate(f: &UniPoly) -> Result<(BigInt, Vec<UniPoly>), CharVarError> {
    let Some(deg) = f.degree() else {
        return Err(CharVarError::Split("zero polynomial".into()));
    };
    let prim = f.primitive();
    let content = f.leading().expect("nonzero") / prim.leading().expect("nonzero");
    if deg == 0 {
        return Ok((content, Vec::new()));
    }
    if !is_squarefree(&prim) {
        return Err(CharVarError::Split("univariate input is not square-free".into()));
    }
    let mut out = zassenhaus(&prim)?;
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.0.cmp(&b.0)));
    Ok((content, out))
}

fn zassenhaus(f: &UniPoly) -> Result<Vec<UniPoly>, CharVarError> {
    let n = f.degree().expect("nonzero");
    if n == 1 {
        return Ok(alloc::vec![f.clone()]);
    }
    let lc = f.leading().expect("nonzero").clone();
    let p = PRIMES
        .iter()
        .copied()
        .find(|&p| {
            if (&lc % BigInt::from(p)).is_zero() {
                return false;
            }
            let fp = fp_from(f, p);
            fp_gcd(&fp, &fp_derivative(&fp, p), p).len() == 1
        })
        .ok_or_else(|| CharVarError::Split("no suitable prime".into()))?;
    let fbar = fp_monic(&fp_from(f, p), p);
    let local = berlekamp(&fbar, p);
    if local.len() == 1 {
        return Ok(alloc::vec![f.clone()]);
    }
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * f.norm1();
    let (lifted, modulus) = hensel_lift(f, &local, p, &bound);
    Ok(recombine(f, lifted, &modulus))
}

/// Lifts `f ≡ lc · Π g_i (mod p)` to a monic factorization modulo `p^k > bound`.
fn hensel_lift(f: &UniPoly, local: &[Fp], p: u64, bound: &BigInt) -> (Vec<Vec<BigInt>>, BigInt) {
    let r = local.len();
    // s_i = (Π_{j≠i} g_j)^{-1} mod g_i, so that Σ s_i Π_{j≠i} g_j ≡ 1
    let s: Vec<Fp> = (0..r)
        .map(|i| {
            let others = (0..r).filter(|&j| j != i).fold(alloc::vec![1u64], |acc, j| fp_mul(&acc, &local[j], p));
            let (_, a, _) = fp_xgcd(&others, &local[i], p);
            a
        })
        .collect();
    let pb = BigInt::from(p);
    let mut gs: Vec<Vec<BigInt>> = local.iter().map(|g| g.iter().map(|&c| BigInt::from(c)).collect()).collect();
    let lc = f.leading().expect("nonzero");
    let mut pk = pb.clone();
    while &pk <= bound {
        let next = &pk * &pb;
        let lcinv = mod_inverse(lc, &next);
        let fhat: Vec<BigInt> = f.0.iter().map(|c| (c * &lcinv).mod_floor(&next)).collect();
        let prod = gs.iter().fold(UniPoly::from_i64(&[1]), |acc, g| acc.mul(&UniPoly::new(g.clone())));
        let err: Fp = fp_trim(
            (0..fhat.len())
                .map(|i| {
                    let d = &fhat[i] - prod.0.get(i).cloned().unwrap_or_else(BigInt::zero);
                    let (q, rem) = d.div_rem(&pk);
                    debug_assert!(rem.is_zero());
                    q.mod_floor(&pb).to_u64().expect("reduced")
                })
                .collect(),
        );
        for (i, g) in gs.iter_mut().enumerate() {
            let delta = fp_divrem(&fp_mul(&err, &s[i], p), &local[i], p).1;
            for (k, d) in delta.iter().enumerate() {
                g[k] = (&g[k] + &pk * BigInt::from(*d)).mod_floor(&next);
            }
        }
        pk = next;
    }
    (gs, pk)
}

fn recombine(f: &UniPoly, mut lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<UniPoly> {
    let mut f = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for subset in combinations(lifted.len(), size) {
            let lc = f.leading().expect("nonzero").clone();
            let prod = subset.iter().fold(UniPoly::new(alloc::vec![lc]), |acc, &i| {
                let g = acc.mul(&UniPoly::new(lifted[i].clone()));
                UniPoly::new(g.0.iter().map(|c| c.mod_floor(modulus)).collect())
            });
            let cand = UniPoly::new(prod.0.iter().map(|c| symmetric(c, modulus)).collect()).primitive();
            if let Some(q) = f.div_exact(&cand) {
                found.push(cand);
                f = q;
                hit = Some(subset);
                break;
            }
        }
        match hit {
            Some(subset) => {
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    found.push(f.primitive());
    found
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

// ---- bivariate ----

fn to_uni(f: &MultiPoly, main: &str) -> UniPoly {
    UniPoly::new(f.coeffs_in(main).iter().map(|c| c.constant_value().unwrap_or_else(BigInt::zero)).collect())
}

/// `gcd(F, G)` for `F, G ∈ Z[main, param]` that are primitive in `main`, by
/// univariate gcds at integer points `param = m` and interpolation of
/// `γ(m) · monic(gcd_m)` with `γ = gcd(lc F, lc G)`. The result is checked by
/// exact division; `None` if no consistent interpolant was found.
pub fn gcd_bivariate(f: &MultiPoly, g: &MultiPoly, main: &str, param: &str) -> Option<MultiPoly> {
    let names = [main, param];
    let vars: Vec<String> = names.iter().map(|s| String::from(*s)).collect();
    let f = f.with_vars(&vars)?;
    let g = g.with_vars(&vars)?;
    let (lf, lg) = (f.leading_coeff_in(main), g.leading_coeff_in(main));
    let gamma = crate::exactnum::gcd(&lf, &lg);
    let bound = f.degree_in(param).unwrap_or(0).min(g.degree_in(param).unwrap_or(0)) as usize
        + gamma.degree_in(param).unwrap_or(0) as usize;
    let mut xs: Vec<BigInt> = Vec::new();
    let mut vals: Vec<(BigInt, UniPoly)> = Vec::new();
    let mut best = usize::MAX;
    let mut m = BigInt::from(1);
    let mut tried = 0;
    while xs.len() < bound + 1 {
        m += 1;
        tried += 1;
        if tried > 4 * (bound + 1) + 40 {
            return None;
        }
        let gm = gamma.eval_var(param, &m).constant_value().unwrap_or_else(BigInt::zero);
        if gm.is_zero() || lf.eval_var(param, &m).is_zero() || lg.eval_var(param, &m).is_zero() {
            continue;
        }
        let h = uni_gcd(&to_uni(&f.eval_var(param, &m), main), &to_uni(&g.eval_var(param, &m), main));
        let d = h.degree().expect("nonzero");
        if d > best {
            continue;
        }
        if d < best {
            best = d;
            xs.clear();
            vals.clear();
        }
        xs.push(m.clone());
        vals.push((gm, h));
    }
    if best == 0 {
        return Some(MultiPoly::constant(1, &names));
    }
    let mut terms: Vec<(Vec<u32>, BigInt)> = Vec::new();
    for j in 0..=best {
        let ys: Vec<Rational> = vals
            .iter()
            .map(|(gm, h)| {
                let scale = Rational::new(gm.clone(), h.leading().expect("nonzero").clone()).expect("nonzero");
                &scale * &Rational::from(h.0[j].clone())
            })
            .collect();
        for (k, c) in interpolate(&xs, &ys).into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_integer() {
                return None;
            }
            terms.push((alloc::vec![j as u32, k as u32], c.numer().clone()));
        }
    }
    let h = MultiPoly::from_terms(&names, terms);
    let h = h.div_exact(&content_in(&h, main))?;
    let h = crate::exactnum::primitive_part(&h).normalize_sign();
    (f.div_exact(&h).is_some() && g.div_exact(&h).is_some()).then_some(h)
}

/// Square-free part of `F ∈ Z[main, param]`, primitive with positive leading
/// coefficient.
pub fn squarefree_bivariate(f: &MultiPoly, main: &str, param: &str) -> Result<MultiPoly, CharVarError> {
    let f = crate::exactnum::primitive_part(f);
    let cont = content_in(&f, main);
    let f1 = f.div_exact(&cont).expect("content divides");
    let cont = if cont.is_constant() { cont } else { crate::exactnum::squarefree_part(&cont)? };
    let f1 = if f1.degree_in(main).unwrap_or(0) == 0 {
        f1
    } else {
        let d = f1.derivative(main);
        let h = gcd_bivariate(&f1, &d, main, param)
            .ok_or_else(|| CharVarError::Split("square-free part: interpolation failed".into()))?;
        f1.div_exact(&h).expect("gcd divides")
    };
    Ok(crate::exactnum::primitive_part(&(&cont * &f1)).normalize_sign())
}

fn specialize(f: &MultiPoly, main: &str, param: &str, m: &BigInt) -> UniPoly {
    let g = f.eval_var(param, m);
    UniPoly::new(g.coeffs_in(main).iter().map(|c| c.constant_value().unwrap_or_else(BigInt::zero)).collect())
}

/// Newton interpolation over the rationals through `(x_i, y_i)`, returned as
/// coefficients from degree 0.
fn interpolate(xs: &[BigInt], ys: &[Rational]) -> Vec<Rational> {
    let n = xs.len();
    let mut dd: Vec<Rational> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = Rational::from(&xs[i] - &xs[i - j]);
            dd[i] = num.checked_div(&den).expect("distinct nodes");
        }
    }
    let mut poly: Vec<Rational> = alloc::vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        // poly = poly * (x - x_i) + dd[i]
        let mut next = alloc::vec![Rational::zero(); poly.len() + 1];
        let xi = Rational::from(xs[i].clone());
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] = &next[k + 1] + c;
            next[k] = &next[k] - &(c * &xi);
        }
        next[0] = &next[0] + &dd[i];
        poly = next;
    }
    poly
}

/// Irreducible factors over `Z` of a square-free `F ∈ Z[main, param]`, each
/// primitive with positive leading coefficient. Factors free of `main` come
/// from the content and are factored as univariate polynomials in `param`.
pub fn factor_bivariate(f: &MultiPoly, main: &str, param: &str) -> Result<Vec<MultiPoly>, CharVarError> {
    let vars: Vec<String> = [main, param].iter().map(|s| String::from(*s)).collect();
    let names = [main, param];
    let f = f
        .with_vars(&vars)
        .ok_or_else(|| CharVarError::Split(format!("expected a polynomial in {main} and {param}")))?;
    if f.is_zero() {
        return Err(CharVarError::Split("zero polynomial".into()));
    }
    let mut out = Vec::new();
    // content in `main`: a polynomial in `param` alone
    let cont = content_in(&f, main);
    let f = f.div_exact(&cont).expect("content divides");
    if cont.degree_in(param).is_some_and(|d| d > 0) {
        let uni = UniPoly::new(
            cont.coeffs_in(param).iter().map(|c| c.constant_value().unwrap_or_else(BigInt::zero)).collect(),
        );
        for g in factor_univariate(&uni)?.1 {
            let terms = g.0.iter().enumerate().map(|(k, c)| (alloc::vec![0, k as u32], c.clone()));
            out.push(MultiPoly::from_terms(&names, terms));
        }
    }
    let n = f.degree_in(main).unwrap_or(0) as usize;
    if n == 0 {
        return Ok(out);
    }
    if n == 1 {
        out.push(f.normalize_sign());
        return Ok(out);
    }
    let lc = f.leading_coeff_in(main);
    let dm = f.degree_in(param).unwrap_or(0) as usize + lc.degree_in(param).unwrap_or(0) as usize;

    // factor at successive integer points, keeping those with the coarsest pattern
    let mut samples: Vec<(BigInt, BigInt, Vec<UniPoly>)> = Vec::new();
    let mut best: Option<Vec<usize>> = None;
    let mut m = BigInt::from(1);
    let mut tried = 0;
    while samples.len() < dm + 1 {
        m += 1;
        tried += 1;
        if tried > 4 * (dm + 1) + 40 {
            return Err(CharVarError::Split("not enough good specialization points".into()));
        }
        let lcm = lc.eval_var(param, &m).constant_value().unwrap_or_else(BigInt::zero);
        if lcm.is_zero() {
            continue;
        }
        let fm = specialize(&f, main, param, &m);
        if fm.degree() != Some(n) || !is_squarefree(&fm) {
            continue;
        }
        let (_, facs) = factor_univariate(&fm)?;
        let pattern: Vec<usize> = facs.iter().map(|g| g.degree().expect("nonzero")).collect();
        match &best {
            Some(b) if pattern.len() > b.len() => continue,
            Some(b) if pattern.len() == b.len() && &pattern != b => {
                return Err(CharVarError::Split("inconsistent factor degrees across points".into()));
            }
            Some(b) if pattern.len() == b.len() => {}
            _ => {
                best = Some(pattern.clone());
                samples.clear();
            }
        }
        samples.push((m.clone(), lcm, facs));
    }
    let pattern = best.expect("at least one sample");
    if pattern.len() == 1 {
        out.push(f.normalize_sign());
        return Ok(out);
    }
    let mut sorted = pattern.clone();
    sorted.dedup();
    if sorted.len() != pattern.len() {
        return Err(CharVarError::Split(format!("ambiguous factor degrees {pattern:?}")));
    }
    let xs: Vec<BigInt> = samples.iter().map(|s| s.0.clone()).collect();
    let mut product = MultiPoly::constant(1, &names);
    let mut factors = Vec::new();
    for (idx, &d) in pattern.iter().enumerate() {
        let mut terms: Vec<(Vec<u32>, BigInt)> = Vec::new();
        for j in 0..=d {
            let ys: Vec<Rational> = samples
                .iter()
                .map(|(_, lcm, facs)| {
                    let g = &facs[idx];
                    let scale = Rational::new(lcm.clone(), g.leading().expect("nonzero").clone()).expect("nonzero");
                    &scale * &Rational::from(g.0[j].clone())
                })
                .collect();
            for (k, c) in interpolate(&xs, &ys).into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if !c.is_integer() {
                    return Err(CharVarError::Split("interpolated coefficient is not integral".into()));
                }
                terms.push((alloc::vec![j as u32, k as u32], c.numer().clone()));
            }
        }
        let h = MultiPoly::from_terms(&names, terms);
        let c = content_in(&h, main);
        let g = h.div_exact(&c).expect("content divides");
        let g = crate::exactnum::primitive_part(&g).normalize_sign();
        product = &product * &g;
        factors.push(g);
    }
    if product != f && product != -f.clone() {
        return Err(CharVarError::Split("interpolated factors do not multiply back".into()));
    }
    out.extend(factors);
    Ok(out)
}
