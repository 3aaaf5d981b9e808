//! Batch command-line front end: parse fixture documents, run validations,
//! homology, the quotient constructions and the reproduction battery, and
//! emit deterministic reports.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use homuce::corep::HomCoRep;
use homuce::document::{self, AlgebraDocument, Document};
use homuce::extension::Extension;
use homuce::homology;
use homuce::morphism::Hom;
use homuce::suite::{CheckLine, RunReport};
use homuce::uce::{self, UceSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum UceMode {
    Lie,
    Leibniz,
}

#[derive(Parser)]
#[command(
    name = "homuce",
    about = "Exact computer algebra for Hom-Leibniz and Hom-Lie algebras: \
             validation, homology and universal (alpha-)central extensions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Degree cap for chain computations.
    #[arg(long, global = true, default_value_t = homology::DEFAULT_DEGREE_CAP)]
    cap: usize,
    /// Directory whose *.alg files are appended to the input list.
    #[arg(long, global = true)]
    fixture_dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the defining identities of every algebra in the inputs.
    Validate { files: Vec<PathBuf> },
    /// Compute the center of every algebra in the inputs.
    Center { files: Vec<PathBuf> },
    /// Homology of the tensor chain complex in one degree.
    Homology {
        #[arg(long, default_value_t = 2)]
        degree: usize,
        files: Vec<PathBuf>,
    },
    /// Homology of the exterior complex of a Hom-Lie algebra.
    LieHomology {
        #[arg(long, default_value_t = 2)]
        degree: usize,
        files: Vec<PathBuf>,
    },
    /// The tensor-square quotient construction and its kernel.
    Uce { files: Vec<PathBuf> },
    /// The twist-image quotient constructions.
    UceAlpha {
        #[arg(long, value_enum, default_value_t = UceMode::Leibniz)]
        mode: UceMode,
        files: Vec<PathBuf>,
    },
    /// Classify every homomorphism block as an extension.
    ExtensionAudit { files: Vec<PathBuf> },
    /// Verify the generalized Cartan operator identities up to a degree.
    Cartan {
        #[arg(long, default_value_t = 3)]
        degree: usize,
        files: Vec<PathBuf>,
    },
    /// Run the whole reproduction battery on the built-in fixtures.
    PaperSuite,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            eprintln!("[timing] total: {:?}", report.elapsed);
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_documents(
    files: &[PathBuf],
    fixture_dir: &Option<PathBuf>,
) -> Result<Vec<(String, Document)>, String> {
    let mut paths: Vec<PathBuf> = files.to_vec();
    if let Some(dir) = fixture_dir {
        let mut extra: Vec<PathBuf> = std::fs::read_dir(dir)
            .map_err(|e| format!("{}: {e}", dir.display()))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "alg"))
            .collect();
        extra.sort();
        paths.extend(extra);
    }
    if paths.is_empty() {
        return Err("no input files (pass FILES or --fixture-dir)".into());
    }
    let mut docs = Vec::new();
    for path in paths {
        let text =
            std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        let doc = document::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        docs.push((path.display().to_string(), doc));
    }
    Ok(docs)
}

/// Iterates algebras together with the document they came from.
fn each_algebra(
    docs: &[(String, Document)],
) -> impl Iterator<Item = (&Document, &AlgebraDocument)> {
    docs.iter()
        .flat_map(|(_, doc)| doc.algebras.iter().map(move |a| (doc, a)))
}

fn run(cli: Cli) -> Result<RunReport, String> {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::PaperSuite => homuce::suite::paper_suite(),
        Command::Validate { files } => {
            let docs = load_documents(files, &cli.fixture_dir)?;
            let mut report = report_for("validate", &docs);
            for (doc, entry) in each_algebra(&docs) {
                let rep = entry.algebra.validate();
                let detail = if rep.is_valid() {
                    format!("{}: all identities hold", entry.name)
                } else {
                    let first = &rep.failures[0];
                    format!(
                        "{}: {} fails at basis {:?}",
                        entry.name, first.identity, first.indices
                    )
                };
                report
                    .checks
                    .push(CheckLine::new("validate", rep.is_valid(), detail));
                if entry.corep.is_some() {
                    let (ok, detail) = match doc.corep_for(entry) {
                        Ok(_) => (
                            true,
                            format!("{}: coefficient module satisfies the axioms", entry.name),
                        ),
                        Err(e) => (false, format!("{}: {e}", entry.name)),
                    };
                    report.checks.push(CheckLine::new("validate", ok, detail));
                }
            }
            report
        }
        Command::Center { files } => {
            let docs = load_documents(files, &cli.fixture_dir)?;
            let mut report = report_for("center", &docs);
            for (_, entry) in each_algebra(&docs) {
                let z = entry.algebra.center();
                let basis: Vec<String> = z
                    .basis_rows()
                    .iter()
                    .map(|v| entry.algebra.format_vector(v))
                    .collect();
                report.checks.push(CheckLine::new(
                    "center",
                    true,
                    format!(
                        "Z({}) = span{{{}}}, dim {}",
                        entry.name,
                        basis.join(", "),
                        z.dim()
                    ),
                ));
            }
            report
        }
        Command::Homology { degree, files } => {
            let docs = load_documents(files, &cli.fixture_dir)?;
            let mut report = report_for("homology", &docs);
            for (doc, entry) in each_algebra(&docs) {
                let corep = doc
                    .corep_for(entry)
                    .map_err(|e| format!("{}: {e}", entry.name))?;
                let h =
                    homology::homology(&corep, *degree, cli.cap).map_err(|e| e.to_string())?;
                report.checks.push(CheckLine::new(
                    "homology",
                    true,
                    format!(
                        "dim HL_{}({}) = {} (boundary rank {})",
                        degree, entry.name, h.dim, h.boundary_rank
                    ),
                ));
            }
            report
        }
        Command::LieHomology { degree, files } => {
            let docs = load_documents(files, &cli.fixture_dir)?;
            let mut report = report_for("lie-homology", &docs);
            for (_, entry) in each_algebra(&docs) {
                let h =
                    homology::lie_homology(&entry.algebra, *degree).map_err(|e| e.to_string())?;
                report.checks.push(CheckLine::new(
                    "lie-homology",
                    true,
                    format!("dim H_{}({}) = {}", degree, entry.name, h.dim),
                ));
            }
            report
        }
        Command::Uce { files } => {
            let docs = load_documents(files, &cli.fixture_dir)?;
            let mut report = report_for("uce", &docs);
            for (_, entry) in each_algebra(&docs) {
                let res = uce::uce_leibniz(&entry.algebra).map_err(|e| e.to_string())?;
                let hl2 =
                    homology::homology(&HomCoRep::ground_field(&entry.algebra), 2, cli.cap)
                        .map_err(|e| e.to_string())?;
                report.checks.push(CheckLine::new(
                    "uce",
                    res.validation.is_valid() && res.kernel_dim() == hl2.dim,
                    format!(
                        "uce({}): dim {}, kernel dim {} (= second homology {}), {}",
                        entry.name,
                        res.dim(),
                        res.kernel_dim(),
                        hl2.dim,
                        if res.universal {
                            "universal"
                        } else {
                            "input not perfect: universality disabled"
                        },
                    ),
                ));
            }
            report
        }
        Command::UceAlpha { mode, files } => {
            let docs = load_documents(files, &cli.fixture_dir)?;
            let mut report = report_for("uce-alpha", &docs);
            let space = match mode {
                UceMode::Lie => UceSpace::Wedge,
                UceMode::Leibniz => UceSpace::Tensor,
            };
            for (_, entry) in each_algebra(&docs) {
                let res = uce::uce_alpha(&entry.algebra, space).map_err(|e| e.to_string())?;
                report.checks.push(CheckLine::new(
                    "uce-alpha",
                    res.validation.is_valid(),
                    format!(
                        "alpha-uce({}): dim {}, kernel dim {}, {}",
                        entry.name,
                        res.dim(),
                        res.kernel_dim(),
                        if res.universal {
                            "universal over alpha-central targets"
                        } else {
                            "input not alpha-perfect: universality disabled"
                        },
                    ),
                ));
            }
            report
        }
        Command::ExtensionAudit { files } => {
            let docs = load_documents(files, &cli.fixture_dir)?;
            let mut report = report_for("extension-audit", &docs);
            for (_, doc) in &docs {
                for h in &doc.homs {
                    let src = doc.algebra(&h.src).expect("checked by parser");
                    let dst = doc.algebra(&h.dst).expect("checked by parser");
                    let hom = Hom::new(&src.algebra, &dst.algebra, h.matrix.clone())
                        .map_err(|e| format!("hom {}: {e}", h.name))?;
                    let ext =
                        Extension::new(hom).map_err(|e| format!("hom {}: {e}", h.name))?;
                    let kernel: Vec<String> = ext
                        .kernel()
                        .basis_rows()
                        .iter()
                        .map(|v| src.algebra.format_vector(v))
                        .collect();
                    report.checks.push(CheckLine::new(
                        "extension",
                        true,
                        format!(
                            "{}: {} -> {} is {:?} with kernel span{{{}}}",
                            h.name,
                            h.src,
                            h.dst,
                            ext.classification(),
                            kernel.join(", ")
                        ),
                    ));
                }
            }
            report
        }
        Command::Cartan { degree, files } => {
            let docs = load_documents(files, &cli.fixture_dir)?;
            let mut report = report_for("cartan", &docs);
            for (doc, entry) in each_algebra(&docs) {
                let corep = doc
                    .corep_for(entry)
                    .map_err(|e| format!("{}: {e}", entry.name))?;
                let rep = homology::cartan_verify(&corep, *degree, cli.cap)
                    .map_err(|e| e.to_string())?;
                let detail = if rep.all_hold() {
                    format!(
                        "{}: all five operator identities hold exactly up to degree {}",
                        entry.name, degree
                    )
                } else {
                    format!("{}: first failure {:?}", entry.name, rep.failures[0])
                };
                report
                    .checks
                    .push(CheckLine::new("cartan", rep.all_hold(), detail));
            }
            report
        }
    };
    report.elapsed = start.elapsed();
    match cli.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json()),
    }
    Ok(report)
}

fn report_for(command: &str, docs: &[(String, Document)]) -> RunReport {
    RunReport::new(command, docs.iter().map(|(p, _)| p.clone()).collect())
}
