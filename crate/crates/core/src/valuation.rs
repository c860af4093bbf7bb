//! The order-of-vanishing valuation at `t = 0` on `Q(t)`, and the tree-action
//! tests it induces on `SL2(Q(t))`: a matrix fixes a vertex of the tree iff its
//! trace is integral, and a group acts non-trivially as soon as some element
//! has a trace with a pole.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use thiserror::Error;

use crate::exactnum::{Rational, Slope};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValuationError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("determinant is {0}, not 1")]
    NotUnimodular(ValuedElement),
}

/// Polynomial in `t` over the rationals, coefficients from degree 0 upward,
/// without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        RatPoly::from_coeffs(alloc::vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = alloc::vec![Rational::zero(); k];
        coeffs.push(c);
        RatPoly::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Multiplicity of `t` as a factor; `None` for zero.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn scale(&self, c: &Rational) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> RatPoly {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip().expect("nonzero leading coefficient")),
            None => RatPoly::zero(),
        }
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, d: &RatPoly) -> Option<(RatPoly, RatPoly)> {
        let dd = d.degree()?;
        let inv = d.leading()?.recip().ok()?;
        let mut rem = self.coeffs.clone();
        let mut quot = alloc::vec![Rational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = &rem[rem.len() - 1] * &inv;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&c * dc);
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Rational::is_zero) {
                rem.pop();
            }
        }
        Some((RatPoly::from_coeffs(quot), RatPoly::from_coeffs(rem)))
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        // monic remainders keep the rational coefficients from swelling
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * x) + c)
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        RatPoly::from_coeffs(
            (0..n).map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)).collect(),
        )
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        self + &(-rhs)
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = alloc::vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        RatPoly::from_coeffs(out)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = a == Rational::one();
            let coef = if a.is_integer() { alloc::format!("{}", a.numer()) } else { alloc::format!("{a}") };
            match (k, unit) {
                (0, _) => f.write_str(&coef)?,
                (_, true) => {}
                (_, false) => write!(f, "{coef}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Element of `Q(t)`: numerator over a monic coprime denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValuedElement {
    num: RatPoly,
    den: RatPoly,
}

impl ValuedElement {
    pub fn new(num: RatPoly, den: RatPoly) -> Result<Self, ValuationError> {
        if den.is_zero() {
            return Err(ValuationError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(ValuedElement::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g).expect("gcd is nonzero");
        let (den, _) = den.div_rem(&g).expect("gcd is nonzero");
        let lc = den.leading().expect("nonzero").recip().expect("nonzero");
        Ok(ValuedElement { num: num.scale(&lc), den: den.scale(&lc) })
    }

    pub fn from_poly(p: RatPoly) -> Self {
        ValuedElement { num: p, den: RatPoly::constant(Rational::one()) }
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        ValuedElement::from_poly(RatPoly::constant(c.into()))
    }

    pub fn zero() -> Self {
        ValuedElement::constant(Rational::zero())
    }

    pub fn one() -> Self {
        ValuedElement::constant(Rational::one())
    }

    /// `t^k` for any integer `k`.
    pub fn t_pow(k: i64) -> Self {
        let m = RatPoly::monomial(Rational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            ValuedElement::from_poly(m)
        } else {
            ValuedElement { num: RatPoly::constant(Rational::one()), den: m }
        }
    }

    pub fn numer(&self) -> &RatPoly {
        &self.num
    }

    pub fn denom(&self) -> &RatPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self, ValuationError> {
        ValuedElement::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &ValuedElement) -> Result<Self, ValuationError> {
        Ok(self * &rhs.recip()?)
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        self.num.eval(x).checked_div(&self.den.eval(x)).ok()
    }
}

impl Add for &ValuedElement {
    type Output = ValuedElement;
    fn add(self, rhs: &ValuedElement) -> ValuedElement {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        ValuedElement::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Neg for &ValuedElement {
    type Output = ValuedElement;
    fn neg(self) -> ValuedElement {
        ValuedElement { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &ValuedElement {
    type Output = ValuedElement;
    fn sub(self, rhs: &ValuedElement) -> ValuedElement {
        self + &(-rhs)
    }
}

impl Mul for &ValuedElement {
    type Output = ValuedElement;
    fn mul(self, rhs: &ValuedElement) -> ValuedElement {
        ValuedElement::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl fmt::Display for ValuedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Value of `ord`: an integer, or `+∞` for zero. `Finite(_) < Infinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(i64),
    Infinity,
}

impl Order {
    pub fn finite(self) -> Option<i64> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinity => None,
        }
    }
}

impl Add for Order {
    type Output = Order;
    fn add(self, rhs: Order) -> Order {
        match (self, rhs) {
            (Order::Finite(a), Order::Finite(b)) => Order::Finite(a + b),
            _ => Order::Infinity,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinity => f.write_str("inf"),
        }
    }
}

/// Order of vanishing at `t = 0` (negative at a pole).
pub fn ord(f: &ValuedElement) -> Order {
    match f.num.lowest_degree() {
        None => Order::Infinity,
        Some(n) => {
            let d = f.den.lowest_degree().expect("nonzero denominator");
            Order::Finite(n as i64 - d as i64)
        }
    }
}

/// `[[a, b], [c, d]]` with `ad - bc = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    e: [ValuedElement; 4],
}

impl Mat2 {
    pub fn new(a: ValuedElement, b: ValuedElement, c: ValuedElement, d: ValuedElement) -> Result<Self, ValuationError> {
        let m = Mat2 { e: [a, b, c, d] };
        let det = m.det();
        if det != ValuedElement::one() {
            return Err(ValuationError::NotUnimodular(det));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Mat2 { e: [ValuedElement::one(), ValuedElement::zero(), ValuedElement::zero(), ValuedElement::one()] }
    }

    /// `diag(x, 1/x)`.
    pub fn diagonal(x: &ValuedElement) -> Result<Self, ValuationError> {
        Ok(Mat2 { e: [x.clone(), ValuedElement::zero(), ValuedElement::zero(), x.recip()?] })
    }

    /// `[[1, x], [0, 1]]`.
    pub fn upper(x: ValuedElement) -> Self {
        Mat2 { e: [ValuedElement::one(), x, ValuedElement::zero(), ValuedElement::one()] }
    }

    /// `[[1, 0], [x, 1]]`.
    pub fn lower(x: ValuedElement) -> Self {
        Mat2 { e: [ValuedElement::one(), ValuedElement::zero(), x, ValuedElement::one()] }
    }

    pub fn entries(&self) -> &[ValuedElement; 4] {
        &self.e
    }

    pub fn det(&self) -> ValuedElement {
        let [a, b, c, d] = &self.e;
        &(a * d) - &(b * c)
    }

    pub fn trace(&self) -> ValuedElement {
        &self.e[0] + &self.e[3]
    }

    /// The adjugate, which is the inverse in `SL2`.
    pub fn inverse(&self) -> Mat2 {
        let [a, b, c, d] = &self.e;
        Mat2 { e: [d.clone(), -b, -c, a.clone()] }
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        let [a, b, c, d] = &self.e;
        let [w, x, y, z] = &rhs.e;
        Mat2 { e: [&(a * w) + &(b * y), &(a * x) + &(b * z), &(c * w) + &(d * y), &(c * x) + &(d * z)] }
    }
}

pub fn trace_order(m: &Mat2) -> Order {
    ord(&m.trace())
}

/// `A` fixes a vertex of the tree iff `ord(tr A) >= 0`.
pub fn fixes_vertex(m: &Mat2) -> bool {
    trace_order(m) >= Order::Finite(0)
}

/// Translation length `max(0, -2 ord(tr A))` of `A` on the tree.
pub fn translation_length(m: &Mat2) -> u64 {
    match trace_order(m) {
        Order::Finite(n) if n < 0 => (-2 * n) as u64,
        _ => 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

/// A word in the generators whose trace has a pole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub word: Vec<Letter>,
    pub trace_order: i64,
}

impl Certificate {
    /// The generator index when the certificate is a single generator.
    pub fn index(&self) -> Option<usize> {
        match self.word.as_slice() {
            [l] => Some(l.generator),
            _ => None,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "g{}", l.generator)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        write!(f, " (ord tr = {})", self.trace_order)
    }
}

pub const DEFAULT_CERTIFICATE_DEPTH: usize = 3;

/// Breadth-first search over reduced words of length at most 3.
pub fn nontriviality_certificate(gens: &[Mat2]) -> Option<Certificate> {
    nontriviality_certificate_with_depth(gens, DEFAULT_CERTIFICATE_DEPTH)
}

/// Breadth-first search over freely reduced words of length `1..=depth`;
/// shorter words first, then generator order with `g` before `g^-1`.
pub fn nontriviality_certificate_with_depth(gens: &[Mat2], depth: usize) -> Option<Certificate> {
    let letters: Vec<(Letter, Mat2)> = gens
        .iter()
        .enumerate()
        .flat_map(|(i, g)| {
            [
                (Letter { generator: i, inverse: false }, g.clone()),
                (Letter { generator: i, inverse: true }, g.inverse()),
            ]
        })
        .collect();
    let mut queue: VecDeque<(Vec<Letter>, Mat2)> = VecDeque::new();
    queue.push_back((Vec::new(), Mat2::identity()));
    while let Some((word, m)) = queue.pop_front() {
        if word.len() == depth {
            continue;
        }
        for (l, g) in &letters {
            if word.last().is_some_and(|p| p.generator == l.generator && p.inverse != l.inverse) {
                continue;
            }
            let next = &m * g;
            let mut w = word.clone();
            w.push(*l);
            if let Order::Finite(n) = trace_order(&next) {
                if n < 0 {
                    return Some(Certificate { word: w, trace_order: n });
                }
            }
            queue.push_back((w, next));
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Detection {
    /// A unique primitive peripheral class `p/q` with `p vM + q vL = 0`.
    Strict(Slope),
    /// Every peripheral trace stays finite.
    Weak,
}

/// Classification from the valuations of the meridian and longitude
/// eigenvalues: the detected slope is `-vL / vM`.
pub fn classify_detection(v_m: i64, v_l: i64) -> Detection {
    if v_m == 0 && v_l == 0 {
        return Detection::Weak;
    }
    Detection::Strict(Slope::from_ratio(-v_l, v_m))
}
