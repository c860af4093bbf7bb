//! The `K_n = J(2n, 2n)` regression suite.
//!
//! Hard checks per knot: the four admissible expansions, their slopes,
//! symmetry under the flip, ideal-point counts and the aggregated slope sets;
//! for small `n` also the Newton-polygon slopes of the A-polynomial. The
//! published corner lists of the A-polynomial are compared in report mode:
//! differences are recorded but never fail the suite.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use tbk_core::charvar::{
    a_polynomial_components, convex_hull, edge_slopes, APolyOptions, NewtonPolygon, SlopeConvention,
};
use tbk_core::confrac::{expand_repetition, ContinuedFraction};
use tbk_core::exactnum::Slope;
use tbk_core::idealpoints::{count_classes_by_orbits, AltIndexing};
use tbk_core::knot::double_twist_to_two_bridge;
use tbk_core::surfaces::{flip, slope_report, BranchedSurface};
use tbk_core::Rational;

use crate::cf_syntax::format_cf;
use crate::report::{format_set, ExpansionJson, KnotJson};
use crate::TbkError;

/// A lattice point `(e_L, e_M)`.
pub type Corner = (i64, i64);

/// A-polynomials are computed for `n` up to this bound by default.
pub const DEFAULT_APOLY_MAX_N: i64 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub computed: String,
}

impl Check {
    fn new(name: &str, expected: impl ToString, computed: impl ToString) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        Check { name: name.to_string(), passed: expected == computed, expected, computed }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub tag: String,
    pub bidegree: (u32, u32),
    pub corners: Vec<(i64, i64)>,
    pub edge_slopes: Vec<String>,
}

/// A computed corner list next to the published one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerComparison {
    pub what: String,
    pub published: Vec<(i64, i64)>,
    pub computed: Vec<(i64, i64)>,
    pub published_slopes: Vec<String>,
    pub computed_slopes: Vec<String>,
    pub differences: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonRecord {
    pub full_corners: Vec<(i64, i64)>,
    pub full_slopes: Vec<String>,
    pub components: Vec<ComponentRecord>,
    pub note: Option<String>,
    pub comparisons: Vec<CornerComparison>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaperKnotRecord {
    pub n: i64,
    pub knot: KnotJson,
    pub expansions: Vec<ExpansionJson>,
    pub checks: Vec<Check>,
    pub polygon: Option<PolygonRecord>,
}

impl PaperKnotRecord {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaperReport {
    pub n_min: i64,
    pub n_max: i64,
    pub knots: Vec<PaperKnotRecord>,
}

impl PaperReport {
    /// True when every hard check passed; report-mode differences do not count.
    pub fn passed(&self) -> bool {
        self.knots.iter().all(PaperKnotRecord::passed)
    }

    pub fn failures(&self) -> Vec<(i64, &Check)> {
        self.knots.iter().flat_map(|k| k.checks.iter().filter(|c| !c.passed).map(move |c| (k.n, c))).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for k in &self.knots {
            let status = if k.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("n={} K({}/{}): {status}\n", k.n, k.knot.p, k.knot.q));
            for c in &k.checks {
                if c.passed {
                    out.push_str(&format!("  ok   {}: {}\n", c.name, c.computed));
                } else {
                    out.push_str(&format!("  FAIL {}: expected {}, computed {}\n", c.name, c.expected, c.computed));
                }
            }
            if let Some(p) = &k.polygon {
                out.push_str(&format!(
                    "  A-polynomial corners {:?}, slopes {}\n",
                    p.full_corners,
                    format_set(&p.full_slopes)
                ));
                for c in &p.components {
                    out.push_str(&format!(
                        "    {} bidegree {:?}: corners {:?}, slopes {}\n",
                        c.tag,
                        c.bidegree,
                        c.corners,
                        format_set(&c.edge_slopes)
                    ));
                }
                if let Some(note) = &p.note {
                    out.push_str(&format!("    note: {note}\n"));
                }
                for r in &p.comparisons {
                    out.push_str(&format!("  report-only: {} vs published corners\n", r.what));
                    out.push_str(&format!(
                        "    published {:?} slopes {}\n",
                        r.published,
                        format_set(&r.published_slopes)
                    ));
                    out.push_str(&format!(
                        "    computed  {:?} slopes {}\n",
                        r.computed,
                        format_set(&r.computed_slopes)
                    ));
                    if r.differences.is_empty() {
                        out.push_str("    no differences\n");
                    }
                    for d in &r.differences {
                        out.push_str(&format!("    diff: {d}\n"));
                    }
                }
            }
        }
        let failures = self.failures().len();
        out.push_str(&format!(
            "{} knots, {} hard-check failures: {}\n",
            self.knots.len(),
            failures,
            if failures == 0 { "PASS" } else { "FAIL" }
        ));
        out
    }
}

/// The four admissible expansions of `K_n`, ordered by slope
/// `0, -4n, -4n, -8n+2`.
pub fn expected_expansions(n: i64) -> [Vec<i64>; 4] {
    let k = (n - 1) as usize;
    let cat = |parts: &[&[i64]]| parts.concat();
    [
        vec![2 * n, -2 * n],
        cat(&[&[2 * n - 1, 2], &expand_repetition(&[-2, 2], k)]),
        cat(&[&expand_repetition(&[-2, 2], k), &[-2, -2 * n + 1]]),
        cat(&[&expand_repetition(&[-2, 2], k), &[-3], &expand_repetition(&[2, -2], k)]),
    ]
}

pub fn expected_slopes(n: i64) -> [i64; 4] {
    [0, -4 * n, -4 * n, -8 * n + 2]
}

/// The published corners of the full A-polynomial and of one component.
pub fn published_corners(n: i64) -> (Vec<Corner>, Vec<Corner>) {
    (
        vec![(0, 12 * n - 1), (2, 12 * n - 1), (1, 4 * n), (3, 8 * n - 2), (2, 0), (4, 0)],
        vec![(0, 8 * n - 2), (1, 8 * n - 2), (1, 0), (2, 0)],
    )
}

fn slope_strings(s: &BTreeSet<Slope>) -> Vec<String> {
    s.iter().map(Slope::to_string).collect()
}

fn polygon_slopes(corners: &[(i64, i64)]) -> BTreeSet<Slope> {
    edge_slopes(&NewtonPolygon { corners: convex_hull(corners) }, &SlopeConvention::default())
}

/// Corner sets and edge slopes side by side, with every difference spelled out.
pub fn compare_corners(what: &str, published: Vec<(i64, i64)>, computed: Vec<(i64, i64)>) -> CornerComparison {
    let (p, c): (BTreeSet<_>, BTreeSet<_>) = (published.iter().copied().collect(), computed.iter().copied().collect());
    let mut differences: Vec<String> = Vec::new();
    for x in p.difference(&c) {
        differences.push(format!("published corner {x:?} not a computed corner"));
    }
    for x in c.difference(&p) {
        differences.push(format!("computed corner {x:?} not in the published list"));
    }
    let published_slopes = slope_strings(&polygon_slopes(&published));
    let computed_slopes = slope_strings(&polygon_slopes(&computed));
    if published_slopes != computed_slopes {
        differences.push(format!(
            "edge slopes differ: published {} vs computed {}",
            format_set(&published_slopes),
            format_set(&computed_slopes)
        ));
    }
    CornerComparison { what: what.to_string(), published, computed, published_slopes, computed_slopes, differences }
}

fn polygon_record(n: i64, x: &Rational, checks: &mut Vec<Check>) -> PolygonRecord {
    let expected: BTreeSet<Slope> = [0, -4 * n, -8 * n + 2].into_iter().map(Slope::integer).collect();
    let comps = match a_polynomial_components(x, &APolyOptions::default()) {
        Ok(c) => c,
        Err(e) => {
            checks.push(Check::new("apoly_slopes", format_set(slope_strings(&expected)), format!("error: {e}")));
            return PolygonRecord {
                full_corners: vec![],
                full_slopes: vec![],
                components: vec![],
                note: Some(e.to_string()),
                comparisons: vec![],
            };
        }
    };
    let conv = SlopeConvention::default();
    let full_slopes = comps.full.edge_slopes(&conv);
    checks.push(Check::new(
        "apoly_slopes",
        format_set(slope_strings(&expected)),
        format_set(slope_strings(&full_slopes)),
    ));
    let union: BTreeSet<Slope> = comps.parts.iter().flat_map(|p| p.edge_slopes(&conv)).collect();
    checks.push(Check::new(
        "apoly_component_slope_union",
        format_set(slope_strings(&full_slopes)),
        format_set(slope_strings(&union)),
    ));
    let components: Vec<ComponentRecord> = comps
        .parts
        .iter()
        .map(|p| ComponentRecord {
            tag: format!("{:?}", p.component_tag).to_lowercase(),
            bidegree: (p.poly.degree_in("L").unwrap_or(0), p.poly.degree_in("M").unwrap_or(0)),
            corners: p.newton_polygon().corners,
            edge_slopes: slope_strings(&p.edge_slopes(&conv)),
        })
        .collect();
    let full_corners = comps.full.newton_polygon().corners;
    let (pub_full, pub_comp) = published_corners(n);
    let mut comparisons = vec![compare_corners("full A-polynomial", pub_full, full_corners.clone())];
    if let Some(c) = components.iter().find(|c| c.tag == "canonical") {
        comparisons.push(compare_corners("canonical component", pub_comp.clone(), c.corners.clone()));
    }
    if let Some(c) = components.iter().find(|c| c.tag == "other") {
        comparisons.push(compare_corners("other component", pub_comp, c.corners.clone()));
    }
    PolygonRecord { full_corners, full_slopes: slope_strings(&full_slopes), components, note: comps.note, comparisons }
}

fn knot_record(n: i64, apoly_max_n: i64) -> Result<PaperKnotRecord, TbkError> {
    let twist = double_twist_to_two_bridge(2 * n, 2 * n)?;
    let x = Rational::new(twist.id.p(), twist.id.q()).expect("odd denominator");
    let report = slope_report(&x)?;
    let mut checks = Vec::new();

    checks.push(Check::new("fraction", format!("{}/{}", 2 * n, 4 * n * n - 1), twist.id));

    let expected = expected_expansions(n);
    let slopes = expected_slopes(n);
    let computed: BTreeSet<Vec<i64>> = report.data.iter().map(|d| d.expansion.entries().to_vec()).collect();
    let want: BTreeSet<Vec<i64>> = expected.iter().cloned().collect();
    let show = |s: &BTreeSet<Vec<i64>>| format_set(s.iter().map(|e| format_cf(e)));
    checks.push(Check::new("expansions", show(&want), show(&computed)));

    let slope_of = |e: &[i64]| report.data.iter().find(|d| d.expansion.entries() == e).map(|d| d.slope);
    let pairs = |f: &dyn Fn(&[i64]) -> String| {
        expected.iter().map(|e| format!("{}:{}", format_cf(e), f(e))).collect::<Vec<_>>().join(" ")
    };
    checks.push(Check::new(
        "slopes",
        pairs(&|e| slopes[expected.iter().position(|x| x == e).unwrap()].to_string()),
        pairs(&|e| slope_of(e).map_or("missing".to_string(), |s| s.to_string())),
    ));

    let flipped = |e: &[i64]| -> Result<Vec<i64>, TbkError> {
        let s = BranchedSurface::new(&ContinuedFraction::from_entries(e.to_vec())?, &x)?;
        Ok(flip(&s)?.entries().to_vec())
    };
    let mut flip_expected = Vec::new();
    let mut flip_computed = Vec::new();
    for (i, e) in expected.iter().enumerate() {
        let image = match i {
            1 => &expected[2],
            2 => &expected[1],
            _ => e,
        };
        flip_expected.push(format!("{}->{}", format_cf(e), format_cf(image)));
        flip_computed.push(format!("{}->{}", format_cf(e), format_cf(&flipped(e)?)));
    }
    checks.push(Check::new("flip", flip_expected.join(" "), flip_computed.join(" ")));

    let sym_expected = format_set([-8 * n + 2, 0]);
    checks.push(Check::new("symmetric_slopes", &sym_expected, format_set(report.symmetric_slopes())));
    checks.push(Check::new("all_slopes", format_set([-8 * n + 2, -4 * n, 0]), format_set(report.all_slopes())));

    let mut ideal_expected = Vec::new();
    let mut ideal_computed = Vec::new();
    for e in &expected[1..3] {
        let cf = ContinuedFraction::from_entries(e.clone())?;
        let listed = report.data.iter().find(|d| d.expansion.entries() == e.as_slice()).map(|d| d.ideal_point_count);
        let swept = count_classes_by_orbits(&cf, AltIndexing::default()).ok();
        ideal_expected.push(format!("{}:{}/{}", format_cf(e), n - 1, n - 1));
        ideal_computed.push(format!(
            "{}:{}/{}",
            format_cf(e),
            listed.map_or("missing".to_string(), |c| c.to_string()),
            swept.map_or("error".to_string(), |c| c.to_string())
        ));
    }
    checks.push(Check::new("ideal_points", ideal_expected.join(" "), ideal_computed.join(" ")));

    let polygon = (n <= apoly_max_n).then(|| polygon_record(n, &x, &mut checks));

    Ok(PaperKnotRecord {
        n,
        knot: KnotJson::from_fraction(&x),
        expansions: report.data.iter().map(ExpansionJson::from).collect(),
        checks,
        polygon,
    })
}

/// Runs the suite for `n_min..=n_max` with A-polynomials up to
/// [`DEFAULT_APOLY_MAX_N`].
pub fn run_paper_suite(n_min: i64, n_max: i64) -> Result<PaperReport, TbkError> {
    run_paper_suite_with(n_min, n_max, DEFAULT_APOLY_MAX_N)
}

/// Knots are evaluated on the rayon pool; records come back in `n` order.
pub fn run_paper_suite_with(n_min: i64, n_max: i64, apoly_max_n: i64) -> Result<PaperReport, TbkError> {
    if n_min < 2 {
        return Err(TbkError::Usage(format!("--n-min must be at least 2, got {n_min}")));
    }
    if n_min > n_max {
        return Err(TbkError::Usage(format!("--n-min ({n_min}) exceeds --n-max ({n_max})")));
    }
    if n_max > 1_000 {
        return Err(TbkError::Usage(format!("--n-max must be at most 1000, got {n_max}")));
    }
    let knots = (n_min..=n_max).into_par_iter().map(|n| knot_record(n, apoly_max_n)).collect::<Result<Vec<_>, _>>()?;
    Ok(PaperReport { n_min, n_max, knots })
}
