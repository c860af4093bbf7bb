//! The `# apoly v1` sparse polynomial text format.
//!
//! ```text
//! # apoly v1
//! vars L M
//! term 0 4 1
//! term 1 0 -1
//! ```
//!
//! One `term <exponents...> <coefficient>` line per nonzero term, sorted
//! lexicographically by exponent vector.

use num_bigint::BigInt;
use tbk_core::MultiPoly;

use crate::TbkError;

pub const HEADER: &str = "# apoly v1";

/// Serializes over the variables `L M`.
pub fn write_apoly(poly: &MultiPoly) -> String {
    write_apoly_vars(poly, &["L", "M"])
}

/// Serializes over the given variable order. Panics if `poly` involves a
/// variable outside `vars`.
pub fn write_apoly_vars(poly: &MultiPoly, vars: &[&str]) -> String {
    let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    let mut terms: Vec<(Vec<u32>, BigInt)> = Vec::new();
    let index: Vec<usize> =
        poly.vars().iter().map(|v| names.iter().position(|n| n == v).expect("variable listed in vars")).collect();
    for (e, c) in poly.terms() {
        let mut key = vec![0u32; names.len()];
        for (k, &i) in e.iter().zip(&index) {
            key[i] = *k;
        }
        terms.push((key, c.clone()));
    }
    terms.sort();
    let mut out = format!("{HEADER}\nvars {}\n", names.join(" "));
    for (e, c) in terms {
        let exps: Vec<String> = e.iter().map(u32::to_string).collect();
        out.push_str(&format!("term {} {c}\n", exps.join(" ")));
    }
    out
}

/// Parses the format, returning the polynomial and its variable names.
pub fn parse_apoly(text: &str) -> Result<(MultiPoly, Vec<String>), TbkError> {
    let err = |line: usize, message: &str| TbkError::Syntax { line, message: message.to_string() };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end()));
    match lines.next() {
        Some((_, l)) if l.trim() == HEADER => {}
        _ => return Err(err(1, "expected `# apoly v1` header")),
    }
    let vars: Vec<String> = match lines.next() {
        Some((_, l)) => {
            let mut it = l.split_whitespace();
            if it.next() != Some("vars") {
                return Err(err(2, "expected `vars <names>`"));
            }
            it.map(str::to_string).collect()
        }
        None => return Err(err(2, "missing `vars` line")),
    };
    if vars.is_empty() {
        return Err(err(2, "no variables declared"));
    }
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) || !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(err(2, &format!("bad or repeated variable name `{v}`")));
        }
    }
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    let mut terms: Vec<(Vec<u32>, BigInt)> = Vec::new();
    for (n, l) in lines {
        if l.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields.first() != Some(&"term") || fields.len() != vars.len() + 2 {
            return Err(err(n, &format!("expected `term` with {} exponents and a coefficient", vars.len())));
        }
        let exps = fields[1..=vars.len()]
            .iter()
            .map(|f| f.parse::<u32>())
            .collect::<Result<Vec<u32>, _>>()
            .map_err(|_| err(n, "exponents must be non-negative integers"))?;
        let coef: BigInt = fields[vars.len() + 1].parse().map_err(|_| err(n, "coefficient must be an integer"))?;
        if terms.iter().any(|(e, _)| *e == exps) {
            return Err(err(n, "repeated exponent vector"));
        }
        terms.push((exps, coef));
    }
    Ok((MultiPoly::from_terms(&names, terms), vars))
}
