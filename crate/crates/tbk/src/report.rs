//! JSON and text renderings of a knot's slope data.

use serde::{Deserialize, Serialize};
use tbk_core::surfaces::{SlopeDatum, SlopeReport};
use tbk_core::Rational;

use crate::cf_syntax::format_cf;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotJson {
    pub p: i64,
    pub q: i64,
}

impl KnotJson {
    pub fn from_fraction(x: &Rational) -> Self {
        let p = x.numer().try_into().expect("knot numerator fits in i64");
        let q = x.denom().try_into().expect("knot denominator fits in i64");
        KnotJson { p, q }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionJson {
    pub entries: Vec<i64>,
    /// The value of the expansion, `a/b`.
    pub representative: String,
    pub slope: i64,
    pub symmetric: bool,
    pub ideal_points: usize,
}

impl From<&SlopeDatum> for ExpansionJson {
    fn from(d: &SlopeDatum) -> Self {
        ExpansionJson {
            entries: d.expansion.entries().to_vec(),
            representative: d.representative().to_string(),
            slope: d.slope,
            symmetric: d.symmetric,
            ideal_points: d.ideal_point_count,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotReport {
    pub knot: KnotJson,
    pub expansions: Vec<ExpansionJson>,
    pub symmetric_slopes: Vec<i64>,
    pub all_slopes: Vec<i64>,
}

impl From<&SlopeReport> for KnotReport {
    fn from(r: &SlopeReport) -> Self {
        KnotReport {
            knot: KnotJson::from_fraction(&r.knot_fraction),
            expansions: r.data.iter().map(ExpansionJson::from).collect(),
            symmetric_slopes: r.symmetric_slopes().into_iter().collect(),
            all_slopes: r.all_slopes().into_iter().collect(),
        }
    }
}

impl KnotReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One expansion per line with its value.
    pub fn expansions_text(&self) -> String {
        let mut out = format!("K({}/{}): {} admissible expansions\n", self.knot.p, self.knot.q, self.expansions.len());
        for e in &self.expansions {
            out.push_str(&format!("  {:<32} = {}\n", format_cf(&e.entries), e.representative));
        }
        out
    }

    /// The slope table plus the aggregated slope sets.
    pub fn slopes_text(&self) -> String {
        let width = self.expansions.iter().map(|e| format_cf(&e.entries).len()).max().unwrap_or(0).max(9);
        let mut out = format!("K({}/{})\n", self.knot.p, self.knot.q);
        out.push_str(&format!(
            "  {:<width$}  {:>6}  {:>9}  {:>12}\n",
            "expansion", "slope", "symmetric", "ideal_points"
        ));
        for e in &self.expansions {
            out.push_str(&format!(
                "  {:<width$}  {:>6}  {:>9}  {:>12}\n",
                format_cf(&e.entries),
                e.slope,
                e.symmetric,
                e.ideal_points
            ));
        }
        out.push_str(&format!("  all slopes:       {}\n", format_set(&self.all_slopes)));
        out.push_str(&format!("  symmetric slopes: {}\n", format_set(&self.symmetric_slopes)));
        out
    }
}

pub(crate) fn format_set<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}
