//! Matrix files for `tbk valuation`.
//!
//! One 2x2 matrix per line, row-major, four entries separated by commas;
//! brackets are optional, so `[[1, 1/t], [0, 1]]` and `1, 1/t, 0, 1` are the
//! same matrix. Entries are rational functions of `t` written with integers,
//! `t`, `+ - * /`, `^` with integer exponents, parentheses and implicit
//! multiplication (`3t^2`). Blank lines and `#` comments are ignored.

use tbk_core::valuation::{Mat2, ValuationError, ValuedElement};
use tbk_core::Rational;

use crate::TbkError;

struct Expr<'a> {
    s: &'a [u8],
    pos: usize,
}

type Res<T> = Result<T, String>;

impl Expr<'_> {
    fn peek(&mut self) -> Option<u8> {
        while self.s.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
        self.s.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn div(a: &ValuedElement, b: &ValuedElement) -> Res<ValuedElement> {
        a.checked_div(b).map_err(|_| "division by zero".to_string())
    }

    fn expr(&mut self) -> Res<ValuedElement> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.bump();
                -&self.term()?
            }
            Some(b'+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Res<ValuedElement> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.bump();
                    acc = Self::div(&acc, &self.power()?)?;
                }
                Some(c) if c == b't' || c == b'(' || c.is_ascii_digit() => acc = &acc * &self.power()?,
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Res<ValuedElement> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.bump();
        let neg = match self.peek() {
            Some(b'-') => {
                self.bump();
                true
            }
            _ => false,
        };
        let k = self.integer()?;
        let k: u32 = k.try_into().map_err(|_| "exponent too large".to_string())?;
        let mut out = ValuedElement::one();
        for _ in 0..k {
            out = &out * &base;
        }
        if neg {
            out = Self::div(&ValuedElement::one(), &out)?;
        }
        Ok(out)
    }

    fn integer(&mut self) -> Res<i64> {
        self.peek();
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| format!("expected an integer at column {}", start + 1))
    }

    fn atom(&mut self) -> Res<ValuedElement> {
        match self.peek() {
            Some(b't') => {
                self.bump();
                Ok(ValuedElement::t_pow(1))
            }
            Some(b'(') => {
                self.bump();
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(format!("expected `)` at column {}", self.pos + 1));
                }
                self.bump();
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(ValuedElement::constant(Rational::from(self.integer()?))),
            Some(c) => Err(format!("unexpected `{}` at column {}", c as char, self.pos + 1)),
            None => Err("unexpected end of entry".to_string()),
        }
    }
}

/// Parses one rational function of `t`.
pub fn parse_element(text: &str) -> Result<ValuedElement, String> {
    let normalized = text.replace('\u{2212}', "-");
    let mut p = Expr { s: normalized.as_bytes(), pos: 0 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(format!("trailing input at column {}", p.pos + 1));
    }
    Ok(v)
}

/// Splits on commas outside parentheses.
fn split_entries(line: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in line.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&line[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&line[start..]);
    out
}

/// Parses a matrix file into matrices of determinant 1.
pub fn parse_matrices(text: &str) -> Result<Vec<Mat2>, TbkError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").replace(['[', ']'], "");
        if line.trim().is_empty() {
            continue;
        }
        let err = |message: String| TbkError::Syntax { line: i + 1, message };
        let entries = split_entries(&line);
        if entries.len() != 4 {
            return Err(err(format!("expected 4 entries, found {}", entries.len())));
        }
        let mut vals = Vec::with_capacity(4);
        for e in entries {
            vals.push(parse_element(e).map_err(|m| err(format!("`{}`: {m}", e.trim())))?);
        }
        let [a, b, c, d]: [ValuedElement; 4] = vals.try_into().expect("four entries");
        let m = Mat2::new(a, b, c, d).map_err(|e| match e {
            ValuationError::NotUnimodular(det) => err(format!("determinant is {det}, not 1")),
            other => err(other.to_string()),
        })?;
        out.push(m);
    }
    if out.is_empty() {
        return Err(TbkError::Syntax { line: 1, message: "no matrices found".to_string() });
    }
    Ok(out)
}
