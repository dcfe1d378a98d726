use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nss_core::decision::{decide_with, ReciprocityPolicy};
use nss_core::group::group_decide_with;
use nss_core::io::{self, DocumentKind};
use nss_core::maji::{self, VerifyConfig};
use nss_core::ns::{self, NsSet};
use nss_core::{Error, ErrorClass, Execution};

#[derive(Parser)]
#[command(
    name = "nss",
    version,
    about = "Neutrosophic soft set operations and decision ranking"
)]
#[command(
    after_help = "exit codes:\n  0  success\n  1  parse or validation error\n  2  domain mismatch\n  3  internal invariant violation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a document (ns-set, maji set, panel, fixture or comparison grid).
    Validate { file: PathBuf },
    /// Apply a set operation and write the resulting document.
    Op(OpArgs),
    /// Rank the elements of one soft set.
    Decide(DecideArgs),
    /// Rank the elements for a panel of decision makers.
    GroupDecide(GroupArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Operation {
    Union,
    Intersection,
    Complement,
    Difference,
    And,
    Or,
    MajiUnion,
    MajiIntersection,
    MajiComplement,
    VerifyMaji,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Reciprocity {
    #[default]
    Error,
    Warn,
}

impl From<Reciprocity> for ReciprocityPolicy {
    fn from(r: Reciprocity) -> Self {
        match r {
            Reciprocity::Error => ReciprocityPolicy::Error,
            Reciprocity::Warn => ReciprocityPolicy::Warn,
        }
    }
}

#[derive(clap::Args)]
struct OpArgs {
    #[arg(value_enum)]
    operation: Operation,
    files: Vec<PathBuf>,
    /// Write the result here instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Random seed for verify-maji.
    #[arg(long)]
    seed: Option<u64>,
    /// Random instances for verify-maji.
    #[arg(long)]
    cases: Option<usize>,
    /// Report format for verify-maji.
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[arg(long)]
    sequential: bool,
}

#[derive(clap::Args)]
struct ReportArgs {
    /// Reference values to compare the run against.
    #[arg(long)]
    fixture: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Decimals shown in text reports.
    #[arg(long, default_value_t = io::DEFAULT_PRECISION)]
    precision: usize,
    /// How to treat non-reciprocal comparison entries.
    #[arg(long, value_enum, default_value_t)]
    reciprocity: Reciprocity,
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Run without the thread pool.
    #[arg(long)]
    sequential: bool,
}

impl ReportArgs {
    fn execution(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        }
    }
}

#[derive(clap::Args)]
struct DecideArgs {
    #[arg(long)]
    nsset: PathBuf,
    #[arg(long)]
    saaty: PathBuf,
    #[command(flatten)]
    report: ReportArgs,
}

#[derive(clap::Args)]
struct GroupArgs {
    #[arg(long)]
    panel: PathBuf,
    #[command(flatten)]
    report: ReportArgs,
}

fn exit_code(e: &Error) -> u8 {
    match e.class() {
        ErrorClass::Input => 1,
        ErrorClass::Domain => 2,
        ErrorClass::Invariant => 3,
    }
}

fn emit(output: Option<&Path>, text: &str) -> nss_core::Result<()> {
    match output {
        Some(path) => fs::write(path, text).map_err(|source| Error::Io {
            locus: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn validate(file: &Path) -> nss_core::Result<String> {
    let text = io::read_text(file)?;
    let kind = io::document_kind(file, &text).map_err(|e| io::in_file(file, e))?;
    let summary = match kind {
        DocumentKind::NsSet => {
            let f = io::load_ns_set(file)?;
            format!(
                "ns-set, {} parameters over {} elements",
                f.parameters().len(),
                f.universe().len()
            )
        }
        DocumentKind::Maji => {
            let h = io::load_maji_ns_set(file)?;
            format!(
                "maji soft set, {} parameters over {} elements",
                h.parameters().len(),
                h.universe().len()
            )
        }
        DocumentKind::Saaty => {
            let d = io::load_saaty(file, ReciprocityPolicy::Error)?;
            for w in d.warnings() {
                eprintln!("warning: {}: {w}", file.display());
            }
            format!("comparison matrix over {} parameters", d.parameters().len())
        }
        DocumentKind::Panel => {
            let makers = io::load_panel(file, ReciprocityPolicy::Error)?;
            format!("panel of {} decision makers", makers.len())
        }
        DocumentKind::Fixture => {
            let fx = io::load_fixture(file)?;
            format!(
                "fixture, {} expected values and {} errata",
                fx.expected.len(),
                fx.errata.len()
            )
        }
    };
    Ok(format!("ok: {}: {summary}\n", file.display()))
}

fn expect_files(op: &str, files: &[PathBuf], n: usize) -> nss_core::Result<()> {
    if files.len() != n {
        return Err(Error::Validation {
            locus: "arguments".into(),
            message: format!("`{op}` takes {n} file(s), got {}", files.len()),
        });
    }
    Ok(())
}

fn binary_ns(
    files: &[PathBuf],
    name: &str,
    op: fn(&NsSet, &NsSet) -> nss_core::Result<NsSet>,
) -> nss_core::Result<String> {
    expect_files(name, files, 2)?;
    let f = io::load_ns_set(&files[0])?;
    let g = io::load_ns_set(&files[1])?;
    Ok(io::serialize_ns_set(&op(&f, &g)?))
}

fn binary_maji(
    files: &[PathBuf],
    name: &str,
    op: fn(&maji::MajiNsSet, &maji::MajiNsSet) -> nss_core::Result<maji::MajiNsSet>,
) -> nss_core::Result<String> {
    expect_files(name, files, 2)?;
    let h = io::load_maji_ns_set(&files[0])?;
    let g = io::load_maji_ns_set(&files[1])?;
    Ok(io::serialize_maji_ns_set(&op(&h, &g)?))
}

fn run_op(args: &OpArgs) -> nss_core::Result<String> {
    let files = &args.files;
    match args.operation {
        Operation::Union => binary_ns(files, "union", ns::union),
        Operation::Intersection => binary_ns(files, "intersection", ns::intersection),
        Operation::Difference => binary_ns(files, "difference", ns::difference),
        Operation::And => binary_ns(files, "and", ns::and_product),
        Operation::Or => binary_ns(files, "or", ns::or_product),
        Operation::Complement => {
            expect_files("complement", files, 1)?;
            Ok(io::serialize_ns_set(&ns::complement(&io::load_ns_set(
                &files[0],
            )?)))
        }
        Operation::MajiUnion => binary_maji(files, "maji-union", maji::maji_union),
        Operation::MajiIntersection => {
            binary_maji(files, "maji-intersection", maji::maji_intersection)
        }
        Operation::MajiComplement => {
            expect_files("maji-complement", files, 1)?;
            let h = io::load_maji_ns_set(&files[0])?;
            Ok(io::serialize_maji_ns_set(&maji::maji_complement(&h)))
        }
        Operation::VerifyMaji => {
            expect_files("verify-maji", files, 0)?;
            let mut config = VerifyConfig::default();
            if let Some(seed) = args.seed {
                config.seed = seed;
            }
            if let Some(cases) = args.cases {
                config.cases = cases;
            }
            if args.sequential {
                config.execution = Execution::Sequential;
            }
            let report = maji::verify_maji_propositions(&config);
            Ok(match args.format {
                Format::Text => io::render_propositions_text(&report),
                Format::Structured => io::render_propositions_structured(&report),
            })
        }
    }
}

fn load_fixture(args: &ReportArgs) -> nss_core::Result<Option<io::Fixture>> {
    args.fixture.as_deref().map(io::load_fixture).transpose()
}

fn run_decide(args: &DecideArgs) -> nss_core::Result<String> {
    let r = &args.report;
    let f = io::load_ns_set(&args.nsset)?;
    let d = io::load_saaty(&args.saaty, r.reciprocity.into())?;
    let fixture = load_fixture(r)?;
    let report = decide_with(&f, &d, r.execution())?;
    let comparison = fixture.map(|fx| fx.compare(&report));
    Ok(match r.format {
        Format::Text => io::render_decision_text(&report, comparison.as_ref(), r.precision),
        Format::Structured => io::render_decision_structured(&report, comparison.as_ref()),
    })
}

fn run_group(args: &GroupArgs) -> nss_core::Result<String> {
    let r = &args.report;
    let makers = io::load_panel(&args.panel, r.reciprocity.into())?;
    let fixture = load_fixture(r)?;
    let report = group_decide_with(&makers, r.execution())?;
    let comparison = fixture.map(|fx| fx.compare(&report.report));
    Ok(match r.format {
        Format::Text => io::render_group_text(&report, comparison.as_ref(), r.precision),
        Format::Structured => io::render_group_structured(&report, comparison.as_ref()),
    })
}

fn run(cli: &Cli) -> nss_core::Result<()> {
    match &cli.command {
        Command::Validate { file } => emit(None, &validate(file)?),
        Command::Op(args) => emit(args.output.as_deref(), &run_op(args)?),
        Command::Decide(args) => emit(args.report.output.as_deref(), &run_decide(args)?),
        Command::GroupDecide(args) => emit(args.report.output.as_deref(), &run_group(args)?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
