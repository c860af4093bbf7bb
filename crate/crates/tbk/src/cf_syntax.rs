//! Text syntax for continued-fraction entries: `[4,-4]`, `[(-2,2)_3,-3]`.
//!
//! `(pattern)_k` repeats the pattern `k` times. Output is always fully
//! expanded. A unicode minus sign is accepted in place of `-`.

use tbk_core::confrac::expand_repetition;

use crate::TbkError;

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: &str) -> TbkError {
        TbkError::Syntax { line: 1, message: format!("{message} at column {}", self.pos + 1) }
    }

    fn skip_ws(&mut self) {
        while self.s.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), TbkError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn int(&mut self) -> Result<i64, TbkError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.s.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected an integer"))
    }

    fn list(&mut self, close: u8, out: &mut Vec<i64>) -> Result<(), TbkError> {
        loop {
            if self.eat(b'(') {
                let mut pattern = Vec::new();
                self.list(b')', &mut pattern)?;
                self.expect(b'_')?;
                let k = self.int()?;
                if k < 0 {
                    return Err(self.err("repetition count must be non-negative"));
                }
                out.extend(expand_repetition(&pattern, k as usize));
            } else {
                out.push(self.int()?);
            }
            if self.eat(close) {
                return Ok(());
            }
            self.expect(b',')?;
        }
    }
}

/// Parses a bracketed entry list, expanding repetition groups.
pub fn parse_cf(text: &str) -> Result<Vec<i64>, TbkError> {
    let normalized = text.replace('\u{2212}', "-");
    let mut p = Parser { s: normalized.as_bytes(), pos: 0 };
    p.expect(b'[')?;
    let mut out = Vec::new();
    p.list(b']', &mut out)?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    if out.is_empty() {
        return Err(p.err("empty continued fraction"));
    }
    if out.contains(&0) {
        return Err(p.err("entries must be nonzero"));
    }
    Ok(out)
}

/// Fully expanded form, e.g. `[-2,2,-2,2,-2,2,-3]`.
pub fn format_cf(entries: &[i64]) -> String {
    let parts: Vec<String> = entries.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_groups() {
        assert_eq!(parse_cf("[4,-4]").unwrap(), vec![4, -4]);
        assert_eq!(parse_cf("[(-2,2)_3,-3]").unwrap(), vec![-2, 2, -2, 2, -2, 2, -3]);
        assert_eq!(parse_cf("[ (\u{2212}2, 2)_1 , \u{2212}3 ]").unwrap(), vec![-2, 2, -3]);
        assert_eq!(parse_cf("[3,((2,-2)_2)_2]").unwrap(), vec![3, 2, -2, 2, -2, 2, -2, 2, -2]);
        assert_eq!(parse_cf("[(2,-2)_0,5]").unwrap(), vec![5]);
    }

    #[test]
    fn round_trips_expanded_form() {
        let e = parse_cf("[(-2,2)_2,-3,(2,-2)_2]").unwrap();
        assert_eq!(format_cf(&e), "[-2,2,-2,2,-3,2,-2,2,-2]");
        assert_eq!(parse_cf(&format_cf(&e)).unwrap(), e);
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "4,-4", "[4,-4", "[4,,4]", "[]", "[0,3]", "[(2,-2)]", "[(2)_-1]", "[1] x", "[a]"] {
            assert!(parse_cf(bad).is_err(), "{bad}");
        }
    }
}
