//! The ten acceptance criteria, each checked at its stated tolerance and time
//! limit. Prints one PASS/FAIL line per criterion and exits non-zero if any
//! criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tbk::report::KnotReport;
use tbk::suite::{compare_corners, expected_expansions, expected_slopes, published_corners};
use tbk_core::charvar::{
    a_polynomial, a_polynomial_components, edge_slopes, newton_polygon, APolyOptions, ComponentTag, SlopeConvention,
};
use tbk_core::confrac::{enumerate_admissible, evaluate_with_tail, expand_repetition, negate, ContinuedFraction};
use tbk_core::exactnum::Slope;
use tbk_core::idealpoints::{count_classes_by_orbits, ideal_point_classes, AltIndexing};
use tbk_core::surfaces::{boundary_slope, flip, is_symmetric, slope_report, BranchedSurface};
use tbk_core::valuation::{classify_detection, fixes_vertex, ord, Detection, Mat2, Order, RatPoly, ValuedElement};
use tbk_core::{MultiPoly, Rational};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn k_n(n: i64) -> Rational {
    Rational::new(2 * n, 4 * n * n - 1).unwrap()
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let el = start.elapsed();
    ensure(el <= limit, || format!("{what} took {el:.2?}, limit {limit:?}"))?;
    Ok(el)
}

// 1. `tbk expand` returns exactly the four expansions for n = 2..10.
fn expansions_via_cli() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_tbk");
    for n in 2..=10 {
        let arg = format!("{}/{}", 2 * n, 4 * n * n - 1);
        let out = Command::new(bin).args(["expand", &arg, "--json"]).output().map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("tbk expand {arg} exited with {}", out.status))?;
        let report: KnotReport = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        let got: BTreeSet<Vec<i64>> = report.expansions.iter().map(|e| e.entries.clone()).collect();
        let want: BTreeSet<Vec<i64>> = expected_expansions(n).into_iter().collect();
        ensure(got == want, || format!("n={n}: got {got:?}, expected {want:?}"))?;
        // the exhaustive search agrees as well
        let oracle: BTreeSet<Vec<i64>> = common::oracle_all_expansions(2 * n, 4 * n * n - 1).into_iter().collect();
        ensure(oracle == want, || format!("n={n}: exhaustive search found {oracle:?}"))?;
    }
    Ok("n = 2..10 exact".into())
}

// 2. Slopes (0, -4n, -4n, -8n+2).
fn slope_formula() -> Outcome {
    for n in 2..=10 {
        let x = k_n(n);
        for (e, want) in expected_expansions(n).iter().zip(expected_slopes(n)) {
            let s = BranchedSurface::new(&ContinuedFraction::from_entries(e.clone()).unwrap(), &x)
                .map_err(|e| e.to_string())?;
            let got = boundary_slope(&s).map_err(|e| e.to_string())?;
            ensure(got == want, || format!("n={n} {e:?}: slope {got}, expected {want}"))?;
        }
    }
    Ok("n = 2..10 exact".into())
}

fn random_entries(rng: &mut ChaCha8Rng, min_abs: i64) -> Vec<i64> {
    let len = rng.gen_range(1..=8);
    (0..len)
        .map(|_| {
            let a = rng.gen_range(min_abs..=9);
            if rng.gen_bool(0.5) {
                -a
            } else {
                a
            }
        })
        .collect()
}

fn big(r: &Rational) -> BigRational {
    r.as_big_rational().clone()
}

// 3. Continued-fraction identities.
fn cf_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut defined = 0;
    for _ in 0..1000 {
        let r = rng.gen_range(-3..=3);
        let e = random_entries(&mut rng, 1);
        let cf = ContinuedFraction::new(r, e.clone()).unwrap();
        let oracle = common::cf_value(&e).map(|v| v + BigRational::from_integer(BigInt::from(r)));
        match (cf.evaluate(), negate(&cf).evaluate(), oracle) {
            (Ok(v), Ok(w), Some(o)) => {
                ensure(big(&v) == o, || format!("{cf}: {v} vs back-substitution {o}"))?;
                ensure(w == -v.clone(), || format!("negation of {cf}: {w} vs {}", -v))?;
                defined += 1;
            }
            (Err(_), Err(_), None) => {}
            other => return Err(format!("{cf}: definedness differs {other:?}")),
        }
    }
    for s in 1..=50i64 {
        let v = ContinuedFraction::from_entries(expand_repetition(&[-2, 2], s as usize)).unwrap().evaluate().unwrap();
        ensure(v == Rational::new(-2 * s, 2 * s + 1).unwrap(), || format!("[(-2,2)_{s}] = {v}"))?;
    }
    let mut closed = 0;
    let mut xs = 0;
    while xs < 50 {
        let x = Rational::new(rng.gen_range(-60..=60), rng.gen_range(1..=60)).unwrap();
        if x.is_zero() {
            continue;
        }
        xs += 1;
        for k in 0..=20i64 {
            let mut e = expand_repetition(&[2, -2], k as usize);
            e.push(2);
            let den = Rational::from(2 * k + 2) * &x + Rational::from(2 * k + 1);
            let Ok(got) = evaluate_with_tail(&e, &x) else { continue };
            let Ok(expect) = (Rational::from(2 * k + 1) * &x + Rational::from(2 * k)).checked_div(&den) else {
                return Err(format!("k={k} x={x}: left side defined but closed form has a pole"));
            };
            ensure(got == expect, || format!("k={k} x={x}: {got} vs {expect}"))?;
            closed += 1;
        }
    }
    for _ in 0..200 {
        let e = random_entries(&mut rng, 2);
        let whole = ContinuedFraction::from_entries(e.clone()).unwrap().evaluate().unwrap();
        for i in 1..e.len() {
            let tail = ContinuedFraction::from_entries(e[i..].to_vec()).unwrap().evaluate().unwrap();
            let composed = evaluate_with_tail(&e[..i], &tail.recip().unwrap()).map_err(|e| e.to_string())?;
            ensure(composed == whole, || format!("{e:?} split at {i}: {composed} vs {whole}"))?;
        }
    }
    Ok(format!("negation 1000 ({defined} defined), blocks s<=50, closed form {closed} cases, composition 200"))
}

// 4. Flip symmetry of the four expansions.
fn symmetry() -> Outcome {
    for n in 2..=10 {
        let x = k_n(n);
        let s: Vec<BranchedSurface> = expected_expansions(n)
            .into_iter()
            .map(|e| BranchedSurface::new(&ContinuedFraction::from_entries(e).unwrap(), &x).unwrap())
            .collect();
        let f = |i: usize| flip(&s[i]).unwrap();
        ensure(f(1).entries() == s[2].entries() && f(2).entries() == s[1].entries(), || {
            format!("n={n}: flip does not exchange the -4n pair")
        })?;
        ensure(!is_symmetric(&s[1]) && !is_symmetric(&s[2]), || format!("n={n}: a -4n expansion is symmetric"))?;
        ensure(f(0).entries() == s[0].entries() && f(3).entries() == s[3].entries(), || {
            format!("n={n}: slope 0 or -8n+2 expansion is not fixed")
        })?;
    }
    Ok("n = 2..10 exact".into())
}

// 5. n - 1 ideal-point classes for each slope -4n expansion, by two methods.
fn ideal_point_counts() -> Outcome {
    for n in 2..=10 {
        for e in &expected_expansions(n)[1..3] {
            let cf = ContinuedFraction::from_entries(e.clone()).unwrap();
            let canon = ideal_point_classes(&cf, AltIndexing::default()).map_err(|e| e.to_string())?.len();
            let swept = count_classes_by_orbits(&cf, AltIndexing::default()).map_err(|e| e.to_string())?;
            ensure(canon == (n - 1) as usize && swept == canon, || {
                format!("n={n} {e:?}: canonical {canon}, orbit sweep {swept}, expected {}", n - 1)
            })?;
        }
    }
    Ok("n = 2..10 exact".into())
}

// 6. Aggregated slope sets.
fn detected_slopes() -> Outcome {
    for n in 2..=10 {
        let r = slope_report(&k_n(n)).map_err(|e| e.to_string())?;
        let all: BTreeSet<i64> = [0, -4 * n, -8 * n + 2].into();
        let sym: BTreeSet<i64> = [0, -8 * n + 2].into();
        ensure(r.all_slopes() == all, || format!("n={n}: slopes {:?}", r.all_slopes()))?;
        ensure(r.symmetric_slopes() == sym, || format!("n={n}: symmetric {:?}", r.symmetric_slopes()))?;
    }
    Ok("n = 2..10 exact".into())
}

// 7. Enumeration against the exhaustive search.
fn enumeration_oracle() -> Outcome {
    let fractions = common::knot_fractions(45);
    for &(p, q) in &fractions {
        let got = enumerate_admissible(&Rational::new(p, q).unwrap()).map_err(|e| e.to_string())?;
        let mut entries: Vec<Vec<i64>> = got.iter().map(|c| c.entries().to_vec()).collect();
        entries.sort();
        let oracle = common::oracle_all_expansions(p, q);
        ensure(entries == oracle, || format!("{p}/{q}: {entries:?} vs {oracle:?}"))?;
    }
    Ok(format!("{} fractions with q <= 45", fractions.len()))
}

// 8. A-polynomial slopes, with the published corners compared in report mode.
fn a_polynomials() -> Outcome {
    let conv = SlopeConvention::default();
    let start = Instant::now();
    let fig8 = a_polynomial(&Rational::new(2, 5).unwrap(), &APolyOptions::default()).map_err(|e| e.to_string())?;
    let s = fig8.edge_slopes(&conv);
    ensure(s.contains(&Slope::integer(4)) && s.contains(&Slope::integer(-4)), || format!("figure-eight slopes {s:?}"))?;
    let mut detail = vec![format!("figure-eight {:.2?}", within(start, Duration::from_secs(30), "figure-eight")?)];
    for n in [2i64, 3] {
        let start = Instant::now();
        let comps = a_polynomial_components(&k_n(n), &APolyOptions::default()).map_err(|e| e.to_string())?;
        let got = comps.full.edge_slopes(&conv);
        let want: BTreeSet<Slope> = [0, -4 * n, -8 * n + 2].into_iter().map(Slope::integer).collect();
        ensure(got == want, || format!("K{n}: slopes {got:?}, expected {want:?}"))?;
        let el = within(start, Duration::from_secs(300), &format!("K{n}"))?;
        detail.push(format!("K{n} {el:.2?}"));

        let (pub_full, pub_comp) = published_corners(n);
        let mut comparisons = vec![compare_corners("full A-polynomial", pub_full, comps.full.newton_polygon().corners)];
        for p in &comps.parts {
            if matches!(p.component_tag, ComponentTag::Canonical | ComponentTag::Other) {
                let what = format!("{:?} component", p.component_tag).to_lowercase();
                comparisons.push(compare_corners(&what, pub_comp.clone(), p.newton_polygon().corners));
            }
        }
        for c in comparisons {
            println!("  report-only K{n} {}: published {:?} vs computed {:?}", c.what, c.published, c.computed);
            for d in &c.differences {
                println!("    diff: {d}");
            }
        }
    }
    Ok(detail.join(", "))
}

fn rat_poly(c: &[i64]) -> RatPoly {
    RatPoly::from_coeffs(c.iter().map(|&x| Rational::from(x)).collect())
}

/// A random `t^shift * num / den` with its order read off the raw lists.
fn random_element(rng: &mut ChaCha8Rng) -> (ValuedElement, Order) {
    let coeffs =
        |rng: &mut ChaCha8Rng| -> Vec<i64> { (0..rng.gen_range(1..5)).map(|_| rng.gen_range(-4..=4)).collect() };
    let num = coeffs(rng);
    let den = loop {
        let d = coeffs(rng);
        if d.iter().any(|&x| x != 0) {
            break d;
        }
    };
    let shift = rng.gen_range(-3..=3);
    let lowest = |c: &[i64]| c.iter().position(|&x| x != 0).map(|i| i as i64);
    let v = &ValuedElement::new(rat_poly(&num), rat_poly(&den)).unwrap() * &ValuedElement::t_pow(shift);
    let o = match lowest(&num) {
        None => Order::Infinity,
        Some(a) => Order::Finite(a - lowest(&den).unwrap() + shift),
    };
    (v, o)
}

fn order_min(a: Order, b: Order) -> Order {
    match (a, b) {
        (Order::Infinity, x) | (x, Order::Infinity) => x,
        (Order::Finite(x), Order::Finite(y)) => Order::Finite(x.min(y)),
    }
}

fn order_ge(a: Order, b: Order) -> bool {
    match (a, b) {
        (Order::Infinity, _) => true,
        (Order::Finite(_), Order::Infinity) => false,
        (Order::Finite(x), Order::Finite(y)) => x >= y,
    }
}

// 9. Valuation properties.
fn valuations() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..500 {
        let ((f, of), (g, og)) = (random_element(&mut rng), random_element(&mut rng));
        ensure(ord(&f) == of && ord(&g) == og, || format!("ord({f}) = {}, raw {of}", ord(&f)))?;
        ensure(ord(&(&f * &g)) == of + og, || format!("ord({f} * {g}) = {}", ord(&(&f * &g))))?;
        let sum = ord(&(&f + &g));
        ensure(order_ge(sum, order_min(of, og)), || format!("ultrametric fails for {f}, {g}"))?;
        if of != og {
            ensure(sum == order_min(of, og), || format!("no equality for {f}, {g} with distinct orders"))?;
        }
    }
    let t = ValuedElement::t_pow(1);
    ensure(fixes_vertex(&Mat2::identity()), || "identity".into())?;
    ensure(!fixes_vertex(&Mat2::diagonal(&t).unwrap()), || "diag(t, 1/t)".into())?;
    ensure(fixes_vertex(&Mat2::upper(ValuedElement::t_pow(-1))), || "[[1, 1/t], [0, 1]]".into())?;
    for vm in -12i64..=12 {
        for vl in -12i64..=12 {
            let base = classify_detection(vm, vl);
            if let Detection::Strict(s) = &base {
                let (p, q) = s.as_pair();
                ensure(p * BigInt::from(vm) + q * BigInt::from(vl) == BigInt::from(0), || {
                    format!("({vm}, {vl}) -> {s} does not annihilate")
                })?;
            }
            for c in 1..=12 {
                ensure(classify_detection(c * vm, c * vl) == base, || format!("({vm}, {vl}) scaled by {c}"))?;
            }
        }
    }
    Ok("500 pairs, 3 fixed-vertex examples, detection scaling on a 25x25 grid".into())
}

// 10. Newton polygon of a product: edge slopes are the union.
fn minkowski() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let random_poly = |rng: &mut ChaCha8Rng| loop {
        let terms: Vec<(Vec<u32>, i64)> = (0..rng.gen_range(1..6))
            .map(|_| {
                let c = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { -1 } else { 1 };
                (vec![rng.gen_range(0..6), rng.gen_range(0..6)], c)
            })
            .collect();
        let p = MultiPoly::from_terms(&["L", "M"], terms);
        if !p.is_zero() {
            break p;
        }
    };
    let conv = SlopeConvention::default();
    for _ in 0..100 {
        let (f, g) = (random_poly(&mut rng), random_poly(&mut rng));
        let mut union = edge_slopes(&newton_polygon(&f), &conv);
        union.extend(edge_slopes(&newton_polygon(&g), &conv));
        let prod = edge_slopes(&newton_polygon(&(&f * &g)), &conv);
        ensure(prod == union, || format!("{f:?} * {g:?}: {prod:?} vs {union:?}"))?;
    }
    Ok("100 random pairs".into())
}

fn main() {
    type Criterion = (u32, &'static str, Option<Duration>, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        (1, "four expansions via tbk expand", Some(Duration::from_secs(1)), expansions_via_cli),
        (2, "slope formula", None, slope_formula),
        (3, "continued-fraction identities", Some(Duration::from_secs(5)), cf_identities),
        (4, "flip symmetry", None, symmetry),
        (5, "ideal-point counts", Some(Duration::from_secs(10)), ideal_point_counts),
        (6, "detected slope sets", None, detected_slopes),
        (7, "enumeration oracle", Some(Duration::from_secs(60)), enumeration_oracle),
        (8, "A-polynomial slopes", None, a_polynomials),
        (9, "valuation properties", Some(Duration::from_secs(5)), valuations),
        (10, "Newton polygon Minkowski law", Some(Duration::from_secs(5)), minkowski),
    ];
    let mut failed = 0;
    for (id, name, limit, f) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (r, _) => r,
        };
        let limit_text = limit.map_or(String::new(), |l| format!(" / limit {l:?}"));
        match result {
            Ok(detail) => println!("PASS criterion {id} ({name}): {detail} [{elapsed:.2?}{limit_text}]"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {id} ({name}): {why} [{elapsed:.2?}{limit_text}]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
