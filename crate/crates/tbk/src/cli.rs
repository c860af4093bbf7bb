//! `tbk` subcommands. [`run`] returns the process exit code: 0 on success,
//! 1 when the regression suite finds a mismatch, 2 for invalid input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use tbk_core::charvar::{a_polynomial, newton_polygon, APolyOptions, Axes, SlopeConvention};
use tbk_core::knot::double_twist_to_two_bridge;
use tbk_core::surfaces::slope_report;
use tbk_core::valuation::{
    fixes_vertex, nontriviality_certificate_with_depth, ord, trace_order, translation_length, DEFAULT_CERTIFICATE_DEPTH,
};

use crate::apoly_format::{parse_apoly, write_apoly};
use crate::matrix_file::parse_matrices;
use crate::report::KnotReport;
use crate::suite::run_paper_suite;
use crate::{parse_knot_fraction, TbkError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "tbk", version, about = "Boundary slopes of two-bridge knots")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    /// Slope `ΔM / ΔL`.
    Lm,
    /// Slope `ΔL / ΔM`.
    Ml,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the admissible continued-fraction expansions of p/q.
    Expand {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
        #[arg(long)]
        json: bool,
    },
    /// Boundary slope, symmetry and ideal-point count for each expansion.
    Slopes {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
        #[arg(long)]
        json: bool,
    },
    /// Normalize the double twist knot J(k, l) to a two-bridge fraction.
    Jkl {
        #[arg(allow_hyphen_values = true)]
        k: i64,
        #[arg(allow_hyphen_values = true)]
        l: i64,
    },
    /// Compute the A-polynomial of p/q in the `# apoly v1` format.
    Apoly {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
        /// Keep the abelian factor L - 1.
        #[arg(long)]
        keep_abelian: bool,
        /// Write to FILE instead of standard output.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Newton polygon corners and edge slopes of an `# apoly v1` file, as JSON.
    Polygon {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "lm")]
        convention: ConventionArg,
        /// Negate every slope.
        #[arg(long)]
        negate: bool,
        /// Halve every slope.
        #[arg(long)]
        half: bool,
    },
    /// Valuation diagnostics for the matrices in a file.
    Valuation {
        file: PathBuf,
        /// Maximum word length searched for a certificate.
        #[arg(long, default_value_t = DEFAULT_CERTIFICATE_DEPTH)]
        depth: usize,
    },
    /// Run the regression suite for K_n = J(2n, 2n).
    Verify {
        #[arg(long)]
        paper: bool,
        #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
        n_min: i64,
        #[arg(long, default_value_t = 10, allow_hyphen_values = true)]
        n_max: i64,
        #[arg(long)]
        json: bool,
    },
}

/// Output of `tbk polygon`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonJson {
    pub corners: Vec<(i64, i64)>,
    pub edge_slopes: Vec<String>,
    pub convention: String,
    pub negate: bool,
    pub half: bool,
}

fn read(path: &Path) -> Result<String, TbkError> {
    std::fs::read_to_string(path).map_err(|source| TbkError::Io { path: path.display().to_string(), source })
}

fn write_file(path: &Path, text: &str) -> Result<(), TbkError> {
    std::fs::write(path, text).map_err(|source| TbkError::Io { path: path.display().to_string(), source })
}

fn knot_report(fraction: &str) -> Result<KnotReport, TbkError> {
    let x = parse_knot_fraction(fraction)?;
    Ok(KnotReport::from(&slope_report(&x)?))
}

fn polygon_json(text: &str, convention: ConventionArg, negate: bool, half: bool) -> Result<PolygonJson, TbkError> {
    let (poly, vars) = parse_apoly(text)?;
    if vars.iter().any(|v| v != "L" && v != "M") {
        return Err(TbkError::Usage(format!("polygon expects variables L and M, found {}", vars.join(" "))));
    }
    if poly.is_zero() {
        return Err(TbkError::Usage("the polynomial is zero".to_string()));
    }
    let axes = match convention {
        ConventionArg::Lm => Axes::LM,
        ConventionArg::Ml => Axes::ML,
    };
    let np = newton_polygon(&poly);
    let slopes = tbk_core::charvar::edge_slopes(&np, &SlopeConvention { axes, negate, half });
    Ok(PolygonJson {
        corners: np.corners,
        edge_slopes: slopes.iter().map(ToString::to_string).collect(),
        convention: format!("{convention:?}").to_lowercase(),
        negate,
        half,
    })
}

fn valuation_text(text: &str, depth: usize) -> Result<String, TbkError> {
    let gens = parse_matrices(text)?;
    let mut out = String::new();
    for (i, g) in gens.iter().enumerate() {
        let [a, b, c, d] = g.entries();
        let tr = g.trace();
        out.push_str(&format!("g{i} = [[{a}, {b}], [{c}, {d}]]\n"));
        out.push_str(&format!(
            "  trace {tr}, ord(trace) {}, fixes vertex {}, translation length {}\n",
            ord(&tr),
            fixes_vertex(g),
            translation_length(g)
        ));
        debug_assert_eq!(trace_order(g), ord(&tr));
    }
    match nontriviality_certificate_with_depth(&gens, depth) {
        Some(c) => out.push_str(&format!("certificate: {c}\n")),
        None => out.push_str(&format!("certificate: none up to word length {depth}\n")),
    }
    Ok(out)
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, TbkError> {
    let emit = |out: &mut dyn Write, s: &str| {
        // a closed pipe is not an error worth reporting
        let _ = out.write_all(s.as_bytes());
    };
    match cli.command {
        Command::Expand { fraction, json } => {
            let r = knot_report(&fraction)?;
            emit(out, &if json { r.to_json() + "\n" } else { r.expansions_text() });
        }
        Command::Slopes { fraction, json } => {
            let r = knot_report(&fraction)?;
            emit(out, &if json { r.to_json() + "\n" } else { r.slopes_text() });
        }
        Command::Jkl { k, l } => {
            let t = double_twist_to_two_bridge(k, l)?;
            let kind = if t.hyperbolic { "hyperbolic" } else { "not hyperbolic" };
            emit(out, &format!("J({k},{l}) = K({}) ({kind})\n", t.id));
        }
        Command::Apoly { fraction, keep_abelian, out: path } => {
            let x = parse_knot_fraction(&fraction)?;
            let options = APolyOptions { keep_abelian, ..APolyOptions::default() };
            let ap = a_polynomial(&x, &options)?;
            let text = write_apoly(&ap.poly);
            match path {
                Some(p) => {
                    write_file(&p, &text)?;
                    emit(out, &format!("wrote {} ({} terms)\n", p.display(), ap.poly.num_terms()));
                }
                None => emit(out, &text),
            }
        }
        Command::Polygon { file, convention, negate, half } => {
            let j = polygon_json(&read(&file)?, convention, negate, half)?;
            emit(out, &(serde_json::to_string_pretty(&j)? + "\n"));
        }
        Command::Valuation { file, depth } => {
            emit(out, &valuation_text(&read(&file)?, depth)?);
        }
        Command::Verify { paper, n_min, n_max, json } => {
            if !paper {
                return Err(TbkError::Usage("verify needs a suite; only --paper is available".to_string()));
            }
            let report = run_paper_suite(n_min, n_max)?;
            emit(out, &if json { report.to_json() + "\n" } else { report.to_text() });
            return Ok(if report.passed() { EXIT_OK } else { EXIT_MISMATCH });
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "tbk: {e}");
            EXIT_INVALID
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut all = vec!["tbk"];
        all.extend_from_slice(args);
        let code = run(all, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn expand_and_slopes() {
        let (code, out, _) = run_str(&["expand", "4/15"]);
        assert_eq!(code, 0);
        assert!(out.contains("[4,-4]"));
        let (code, out, _) = run_str(&["slopes", "4/15", "--json"]);
        assert_eq!(code, 0);
        let r: KnotReport = serde_json::from_str(&out).unwrap();
        assert_eq!(r.all_slopes, vec![-14, -8, 0]);
    }

    #[test]
    fn jkl() {
        assert_eq!(run_str(&["jkl", "4", "4"]).1, "J(4,4) = K(4/15) (hyperbolic)\n");
        assert_eq!(run_str(&["jkl", "2", "-1"]).1, "J(2,-1) = K(2/3) (not hyperbolic)\n");
        let (code, _, err) = run_str(&["jkl", "3", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("link"));
    }

    #[test]
    fn invalid_input_exits_2() {
        assert_eq!(run_str(&["expand", "4/16"]).0, 2);
        assert_eq!(run_str(&["expand"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["verify", "--paper", "--n-min", "5", "--n-max", "4"]).0, 2);
        assert_eq!(run_str(&["verify"]).0, 2);
        assert_eq!(run_str(&["valuation", "/nonexistent/file"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn polygon_conventions() {
        let text = "# apoly v1\nvars L M\nterm 0 14 1\nterm 1 14 1\nterm 1 0 1\nterm 2 0 1\n";
        let j = polygon_json(text, ConventionArg::Lm, false, false).unwrap();
        assert_eq!(j.corners, vec![(1, 0), (2, 0), (1, 14), (0, 14)]);
        assert_eq!(j.edge_slopes, vec!["-14", "0"]);
        let j = polygon_json(text, ConventionArg::Ml, true, true).unwrap();
        assert_eq!(j.edge_slopes, vec!["1/28", "1/0"]);
        assert!(polygon_json("# apoly v1\nvars x y\nterm 1 1 1\n", ConventionArg::Lm, false, false).is_err());
    }

    #[test]
    fn valuation_report() {
        let text = valuation_text("1, 1/t, 0, 1\n1, 0, 1/t, 1\n", 3).unwrap();
        // each generator fixes a vertex, their product does not
        assert_eq!(text.matches("fixes vertex true").count(), 2, "{text}");
        assert!(text.contains("certificate: g0*g1 (ord tr = -2)"), "{text}");
        let text = valuation_text("1, 0, 0, 1\n", 3).unwrap();
        assert!(text.contains("certificate: none up to word length 3"));
    }
}
