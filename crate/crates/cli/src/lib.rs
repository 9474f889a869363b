//! Command-line front end for `bihom-core`: the JSON algebra file plus the
//! `check`, `induce`, `twist`, `analyze`, `classify3`, `iso3` and `catalog`
//! commands.
//!
//! Exit codes: 0 when the answer is positive, 1 when a check fails or the
//! input is rejected by the mathematics, 2 for I/O, parse and usage errors.

pub mod format;
pub mod report;

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use bihom_core::analysis::{
    decompose_bihom, is_semisimple_lie, killing_determinant, simplicity, type_candidates,
};
use bihom_core::catalog::entry;
use bihom_core::classify::{bihom_isomorphic3, classify3, ClassLabel};
use bihom_core::exactlin::parse_rational;
use bihom_core::twist::{induce_lie, yau_twist, TwistInput};
use bihom_core::{check_all, is_abelian, is_regular, BiHomAlgebra, Check, MatrixQ, Rational};
use clap::{Parser, Subcommand};
use serde::Serialize;

use format::FileError;
use report::{AnalyzeReport, CheckReport, ClassifyReport, DecompositionJson, IsoReport};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "bihom", version, about = "Exact computations with BiHom-Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the BiHom-Lie axioms
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write the induced Lie algebra (bracket replaced, maps kept)
    Induce {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Twist a Lie algebra by two commuting automorphisms
    Twist {
        /// Algebra file whose bracket is the Lie bracket; its maps are ignored
        lie_file: PathBuf,
        /// JSON grid of rational strings
        #[arg(long)]
        alpha: PathBuf,
        #[arg(long)]
        beta: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Regularity, simplicity, semisimplicity, decomposition and type candidates
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Classify a 3-dimensional simple algebra
    Classify3 {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide isomorphism of two 3-dimensional simple algebras
    Iso3 {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write a catalog algebra: sl2, L1 (needs --a, --b), L2, L3 (needs --a)
    Catalog {
        name: String,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        a: Option<Rational>,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        b: Option<Rational>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

enum Failure {
    /// The mathematics says no; exit 1.
    Rejected(String),
    /// Bad input or environment; exit 2.
    Error(String),
}

impl From<FileError> for Failure {
    fn from(e: FileError) -> Self {
        Failure::Error(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Error(format!("write failed: {e}"))
    }
}

type Outcome = Result<u8, Failure>;

/// Runs one command; reports go to `out`, diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result = match &cli.command {
        Command::Check { file, json } => cmd_check(file, *json, out),
        Command::Induce { file, output } => cmd_induce(file, output.as_deref(), out),
        Command::Twist {
            lie_file,
            alpha,
            beta,
            output,
        } => cmd_twist(lie_file, alpha, beta, output.as_deref(), out),
        Command::Analyze { file, json } => cmd_analyze(file, *json, out),
        Command::Classify3 { file, json } => cmd_classify3(file, *json, out),
        Command::Iso3 { first, second, json } => cmd_iso3(first, second, *json, out),
        Command::Catalog { name, a, b, output } => cmd_catalog(name, a.clone(), b.clone(), output.as_deref(), out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Rejected(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAIL
        }
        Err(Failure::Error(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn emit_json<T: Serialize>(value: &T, out: &mut dyn Write) -> io::Result<()> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    writeln!(out, "{text}")
}

fn write_algebra(a: &BiHomAlgebra, output: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(path) => format::save(a, path)?,
        None => out.write_all(format::to_canonical_string(a).as_bytes())?,
    }
    Ok(())
}

fn write_matrix(m: &MatrixQ, indent: &str, out: &mut dyn Write) -> io::Result<()> {
    for row in m.row_iter() {
        let cells: Vec<String> = row.iter().map(report::rational).collect();
        writeln!(out, "{indent}[{}]", cells.join(", "))?;
    }
    Ok(())
}

fn cmd_check(file: &Path, json: bool, out: &mut dyn Write) -> Outcome {
    let a = format::load(file)?;
    let report = check_all(&a);
    if json {
        emit_json(&CheckReport::from(&report), out)?;
    } else {
        for (name, check) in report.entries() {
            match check {
                Check::Pass => writeln!(out, "{name}: pass")?,
                Check::Fail(w) => writeln!(out, "{name}: FAIL {w}")?,
            }
        }
        writeln!(out, "{}", if report.all_pass() { "all axioms hold" } else { "axioms fail" })?;
    }
    Ok(if report.all_pass() { EXIT_PASS } else { EXIT_FAIL })
}

fn cmd_induce(file: &Path, output: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let a = format::load(file)?;
    let induced = induce_lie(&a).map_err(|e| Failure::Rejected(e.to_string()))?;
    let result = BiHomAlgebra::new(induced.lie, induced.alpha, induced.beta)
        .and_then(|r| r.with_basis_names(a.basis_names().to_vec()))
        .expect("same shape as the input");
    write_algebra(&result, output, out)?;
    Ok(EXIT_PASS)
}

fn cmd_twist(lie_file: &Path, alpha: &Path, beta: &Path, output: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let lie = format::load(lie_file)?;
    let alpha = format::load_matrix(alpha)?;
    let beta = format::load_matrix(beta)?;
    let input = TwistInput::new(lie.tensor().clone(), alpha, beta);
    let twisted = yau_twist(&input).map_err(|e| Failure::Rejected(e.to_string()))?;
    let twisted = twisted
        .with_basis_names(lie.basis_names().to_vec())
        .expect("same dimension");
    write_algebra(&twisted, output, out)?;
    Ok(EXIT_PASS)
}

fn analyze(a: &BiHomAlgebra) -> AnalyzeReport {
    let mut r = AnalyzeReport {
        dim: a.dim(),
        axioms_pass: check_all(a).all_pass(),
        regular: is_regular(a),
        abelian: is_abelian(a.tensor()),
        type_candidates: type_candidates(a.dim()).iter().map(ToString::to_string).collect(),
        ..AnalyzeReport::default()
    };
    if !r.axioms_pass {
        return r;
    }
    if let Ok(s) = simplicity(a) {
        r.simple = Some(s.simple);
        r.enveloping_dim = Some(s.enveloping_dim);
    }
    if !r.regular {
        return r;
    }
    if let Ok(induced) = induce_lie(a) {
        r.induced_killing_determinant = killing_determinant(&induced.lie).ok().map(|d| report::rational(&d));
        r.semisimple = is_semisimple_lie(&induced.lie).ok();
    }
    if r.semisimple == Some(true) {
        match decompose_bihom(a) {
            Ok(d) => r.decomposition = Some(DecompositionJson::from(&d)),
            Err(e) => r.decomposition_error = Some(e.to_string()),
        }
    }
    r
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_analyze(file: &Path, json: bool, out: &mut dyn Write) -> Outcome {
    let a = format::load(file)?;
    let r = analyze(&a);
    if json {
        emit_json(&r, out)?;
    } else {
        writeln!(out, "dimension: {}", r.dim)?;
        writeln!(out, "axioms: {}", if r.axioms_pass { "pass" } else { "FAIL (run check for a witness)" })?;
        writeln!(out, "regular: {}", yes_no(r.regular))?;
        writeln!(out, "abelian: {}", yes_no(r.abelian))?;
        if let (Some(simple), Some(d)) = (r.simple, r.enveloping_dim) {
            writeln!(out, "simple: {} (enveloping dimension {d} of {})", yes_no(simple), r.dim * r.dim)?;
        }
        if let Some(det) = &r.induced_killing_determinant {
            writeln!(out, "induced Killing determinant: {det}")?;
        }
        if let Some(s) = r.semisimple {
            writeln!(out, "induced Lie algebra semisimple: {}", yes_no(s))?;
        }
        if let Some(d) = &r.decomposition {
            writeln!(out, "decomposition: m = {}", d.m)?;
            for (i, ideal) in d.ideals.iter().enumerate() {
                writeln!(out, "  ideal {}:", i + 1)?;
                for row in ideal {
                    writeln!(out, "    [{}]", row.join(", "))?;
                }
            }
            writeln!(out, "  sigma_alpha: {}", d.sigma_alpha)?;
            writeln!(out, "  sigma_beta: {}", d.sigma_beta)?;
            if let Some(w) = d.warning {
                writeln!(out, "  warning: {w}")?;
            }
        }
        if let Some(e) = &r.decomposition_error {
            writeln!(out, "decomposition: unavailable ({e})")?;
        }
        writeln!(out, "type candidates: {}", r.type_candidates.join(", "))?;
    }
    Ok(if r.axioms_pass { EXIT_PASS } else { EXIT_FAIL })
}

fn classify_file(file: &Path) -> Result<(BiHomAlgebra, ClassLabel), Failure> {
    let a = format::load(file)?;
    let label = classify3(&a).map_err(|e| Failure::Rejected(format!("{}: {e}", file.display())))?;
    Ok((a, label))
}

fn cmd_classify3(file: &Path, json: bool, out: &mut dyn Write) -> Outcome {
    let (_, label) = classify_file(file)?;
    if json {
        emit_json(&ClassifyReport::from(&label), out)?;
    } else {
        writeln!(out, "{label}")?;
        writeln!(out, "change of basis:")?;
        write_matrix(&label.change_of_basis, "  ", out)?;
        writeln!(out, "alpha: {}", label.alpha_profile)?;
        writeln!(out, "beta: {}", label.beta_profile)?;
    }
    Ok(EXIT_PASS)
}

fn cmd_iso3(first: &Path, second: &Path, json: bool, out: &mut dyn Write) -> Outcome {
    let (a1, l1) = classify_file(first)?;
    let (a2, l2) = classify_file(second)?;
    let iso = bihom_isomorphic3(&a1, &a2).map_err(|e| Failure::Rejected(e.to_string()))?;
    if json {
        emit_json(
            &IsoReport {
                isomorphic: iso.is_some(),
                first: l1.to_string(),
                second: l2.to_string(),
                isomorphism: iso.as_ref().map(report::matrix),
            },
            out,
        )?;
    } else {
        match &iso {
            Some(f) => {
                writeln!(out, "isomorphic ({l1})")?;
                writeln!(out, "isomorphism:")?;
                write_matrix(f, "  ", out)?;
            }
            None => writeln!(out, "not isomorphic ({l1} vs {l2})")?,
        }
    }
    Ok(if iso.is_some() { EXIT_PASS } else { EXIT_FAIL })
}

fn cmd_catalog(
    name: &str,
    a: Option<Rational>,
    b: Option<Rational>,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> Outcome {
    let e = entry(name, a, b).map_err(|e| Failure::Error(e.to_string()))?;
    write_algebra(&e.algebra, output, out)?;
    Ok(EXIT_PASS)
}
