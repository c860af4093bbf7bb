use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Position of a variable name in the global ordering `L, M, u, t, ...`.
///
/// Unknown names sort after the fixed ones, alphabetically.
pub fn var_rank(name: &str) -> (u8, &str) {
    match name {
        "L" => (0, ""),
        "M" => (1, ""),
        "u" => (2, ""),
        "t" => (3, ""),
        other => (4, other),
    }
}

fn cmp_vars(a: &str, b: &str) -> Ordering {
    var_rank(a).cmp(&var_rank(b))
}

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients.
///
/// Exponent vectors are indexed by `vars` and kept in a `BTreeMap`, so
/// iteration is lexicographic with the first variable most significant.
/// Zero coefficients are never stored.
#[derive(Clone)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly { vars: sorted_vars(vars.iter().map(|v| v.to_string())), terms: BTreeMap::new() }
    }

    pub fn constant(c: impl Into<BigInt>, vars: &[&str]) -> Self {
        let mut p = MultiPoly::zero(vars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    /// The polynomial consisting of a single variable.
    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], BigInt::one());
        MultiPoly { vars: vec![name.to_string()], terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; exponents are
    /// indexed by `vars` in the order given. Repeated exponents are summed.
    pub fn from_terms<I, C>(vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
        C: Into<BigInt>,
    {
        let given: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        let sorted = sorted_vars(given.iter().cloned());
        let perm: Vec<usize> =
            sorted.iter().map(|v| given.iter().position(|g| g == v).expect("variable present")).collect();
        let mut p = MultiPoly { vars: sorted, terms: BTreeMap::new() };
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length must match variable count");
            let key: Vec<u32> = perm.iter().map(|&i| e[i]).collect();
            p.add_term(key, c.into());
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<BigInt> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(BigInt::zero))
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// True when `name` occurs with a positive exponent.
    pub fn involves(&self, name: &str) -> bool {
        match self.var_index(name) {
            Some(i) => self.terms.keys().any(|e| e[i] > 0),
            None => false,
        }
    }

    /// Variables that actually occur with positive exponent.
    pub fn used_vars(&self) -> Vec<String> {
        self.vars.iter().filter(|v| self.involves(v)).cloned().collect()
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Re-expresses the polynomial over `vars`, which must contain every used
    /// variable. Returns `None` otherwise.
    pub fn with_vars(&self, vars: &[String]) -> Option<MultiPoly> {
        let target = sorted_vars(vars.iter().cloned());
        if target == self.vars {
            return Some(self.clone());
        }
        for v in self.used_vars() {
            if !target.contains(&v) {
                return None;
            }
        }
        let map: Vec<Option<usize>> = target.iter().map(|v| self.var_index(v)).collect();
        let mut out = MultiPoly { vars: target, terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            let key: Vec<u32> = map.iter().map(|m| m.map_or(0, |i| e[i])).collect();
            out.terms.insert(key, c.clone());
        }
        Some(out)
    }

    /// Drops variables that do not occur.
    pub fn trimmed(&self) -> MultiPoly {
        let used = self.used_vars();
        self.with_vars(&used).expect("used variables are kept")
    }

    pub(crate) fn unify(a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
        if a.vars == b.vars {
            return (a.clone(), b.clone());
        }
        let all = sorted_vars(a.vars.iter().chain(b.vars.iter()).cloned());
        (a.with_vars(&all).expect("superset"), b.with_vars(&all).expect("superset"))
    }

    /// Degree in `name`; `None` for the zero polynomial. Absent variables have
    /// degree 0.
    pub fn degree_in(&self, name: &str) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        Some(match self.var_index(name) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        })
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Coefficients with respect to `name`, indexed by degree. Each
    /// coefficient keeps the full variable list but does not involve `name`.
    pub fn coeffs_in(&self, name: &str) -> Vec<MultiPoly> {
        let deg = match self.degree_in(name) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut out = vec![MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() }; deg + 1];
        let idx = self.var_index(name);
        for (e, c) in &self.terms {
            let (d, key) = match idx {
                Some(i) => {
                    let mut k = e.clone();
                    let d = k[i];
                    k[i] = 0;
                    (d as usize, k)
                }
                None => (0, e.clone()),
            };
            out[d].terms.insert(key, c.clone());
        }
        out
    }

    /// Inverse of [`MultiPoly::coeffs_in`].
    pub fn from_coeffs_in(name: &str, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut vars: Vec<String> = coeffs.iter().flat_map(|c| c.vars.iter().cloned()).collect();
        vars.push(name.to_string());
        let vars = sorted_vars(vars.into_iter());
        let i = vars.iter().position(|v| v == name).expect("just inserted");
        let mut out = MultiPoly { vars: vars.clone(), terms: BTreeMap::new() };
        for (d, c) in coeffs.iter().enumerate() {
            let c = c.with_vars(&vars).expect("superset");
            for (e, v) in c.terms {
                let mut k = e;
                k[i] += d as u32;
                out.add_term(k, v);
            }
        }
        out
    }

    /// Leading coefficient with respect to `name` (a polynomial in the other
    /// variables).
    pub fn leading_coeff_in(&self, name: &str) -> MultiPoly {
        self.coeffs_in(name).pop().unwrap_or_else(|| self.zeroed())
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn zeroed(&self) -> MultiPoly {
        MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() }
    }

    pub fn derivative(&self, name: &str) -> MultiPoly {
        let mut out = self.zeroed();
        if let Some(i) = self.var_index(name) {
            for (e, c) in &self.terms {
                if e[i] > 0 {
                    let mut k = e.clone();
                    k[i] -= 1;
                    out.add_term(k, c * BigInt::from(e[i]));
                }
            }
        }
        out
    }

    /// Substitutes the integer `value` for `name`.
    pub fn eval_var(&self, name: &str, value: &BigInt) -> MultiPoly {
        let i = match self.var_index(name) {
            Some(i) => i,
            None => return self.clone(),
        };
        let mut powers: BTreeMap<u32, BigInt> = BTreeMap::new();
        let mut out = self.zeroed();
        for (e, c) in &self.terms {
            let p = powers.entry(e[i]).or_insert_with(|| num_traits::pow::Pow::pow(value, e[i])).clone();
            let mut k = e.clone();
            k[i] = 0;
            out.add_term(k, c * p);
        }
        out
    }

    /// Replaces `name` by `name^k`.
    pub fn inflate(&self, name: &str, k: u32) -> MultiPoly {
        let mut out = self.zeroed();
        if let Some(i) = self.var_index(name) {
            for (e, c) in &self.terms {
                let mut key = e.clone();
                key[i] *= k;
                out.terms.insert(key, c.clone());
            }
            out
        } else {
            self.clone()
        }
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        let mut out = self.zeroed();
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    /// Divides every coefficient by `c`; `None` unless all divisions are exact.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Option<MultiPoly> {
        if c.is_zero() {
            return None;
        }
        let mut out = self.zeroed();
        for (e, v) in &self.terms {
            let (q, r) = v.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.terms.insert(e.clone(), q);
        }
        Some(out)
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::constant(1, &[]).with_vars(&self.vars).expect("constant");
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplies by the monomial with exponent vector `shift` (over `self.vars`).
    pub fn shift(&self, shift: &[u32]) -> MultiPoly {
        let mut out = self.zeroed();
        for (e, c) in &self.terms {
            let k: Vec<u32> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            out.terms.insert(k, c.clone());
        }
        out
    }

    /// Componentwise minimum exponent over all terms (the largest monomial
    /// dividing the polynomial).
    pub fn monomial_content(&self) -> Vec<u32> {
        let mut it = self.terms.keys();
        let mut m = match it.next() {
            Some(e) => e.clone(),
            None => return vec![0; self.vars.len()],
        };
        for e in it {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        m
    }

    /// Removes the monomial content.
    pub fn strip_monomial(&self) -> MultiPoly {
        let m = self.monomial_content();
        let mut out = self.zeroed();
        for (e, c) in &self.terms {
            let k: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a - b).collect();
            out.terms.insert(k, c.clone());
        }
        out
    }

    /// Exact division. Returns `None` when `divisor` does not divide `self`
    /// (or is zero).
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        if divisor.is_zero() {
            return None;
        }
        let (mut rem, d) = MultiPoly::unify(self, divisor);
        let mut quot = rem.zeroed();
        let (d_lead_e, d_lead_c) = {
            let (e, c) = d.leading_term().expect("nonzero");
            (e.clone(), c.clone())
        };
        if let Some(c) = d.constant_value() {
            return rem.div_scalar_exact(&c);
        }
        while let Some((e, c)) = rem.leading_term() {
            if e.iter().zip(&d_lead_e).any(|(a, b)| a < b) {
                return None;
            }
            let (qc, r) = c.div_rem(&d_lead_c);
            if !r.is_zero() {
                return None;
            }
            let qe: Vec<u32> = e.iter().zip(&d_lead_e).map(|(a, b)| a - b).collect();
            for (de, dc) in &d.terms {
                let k: Vec<u32> = de.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(k, -(dc * &qc));
            }
            quot.terms.insert(qe, qc);
        }
        Some(quot)
    }

    /// Sign of the lexicographically leading coefficient.
    pub fn leading_sign(&self) -> i8 {
        match self.leading_term() {
            Some((_, c)) if c.is_negative() => -1,
            Some(_) => 1,
            None => 0,
        }
    }

    /// Flips the sign so the leading coefficient is positive.
    pub fn normalize_sign(self) -> MultiPoly {
        if self.leading_sign() < 0 {
            -self
        } else {
            self
        }
    }
}

fn sorted_vars(vars: impl Iterator<Item = String>) -> Vec<String> {
    let mut v: Vec<String> = vars.collect();
    v.sort_by(|a, b| cmp_vars(a, b));
    v.dedup();
    v
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = MultiPoly::unify(self, other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let (mut a, b) = MultiPoly::unify(self, rhs);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        let (mut a, b) = MultiPoly::unify(self, rhs);
        for (e, c) in b.terms {
            a.add_term(e, -c);
        }
        a
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    // exponents add when monomials multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        let (a, b) = MultiPoly::unify(self, rhs);
        let mut out = a.zeroed();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let k: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(k, ca * cb);
            }
        }
        out
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -self.clone()
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

/// Human-readable form, highest term first, e.g. `L^2*M^4 - L + 3`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (v, &x) in self.vars.iter().zip(e) {
                match x {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(alloc::format!("{v}^{x}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.vars.join(","), self)
    }
}
