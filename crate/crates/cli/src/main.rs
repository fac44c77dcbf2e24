//! Command-line front door: load algebra files or catalog entries, run the
//! axiom checks, compute subspaces, construct derived algebras, and emit
//! text or JSON reports.
//!
//! Exit codes: 0 on success (and on all-axioms-pass for `check`), 1 when a
//! check fails, 2 on usage or parse errors.

use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use trialgebra::algebra::{AlgebraFile, HomTrialgebra, OpSelector};
use trialgebra::axioms::{self, render_report_line};
use trialgebra::catalog::{self, Assignment, SampleStrategy};
use trialgebra::constructions;
use trialgebra::isomorphism;
use trialgebra::linalg::Scalar;
use trialgebra::subspaces::{self, SignConvention, SubspaceBasis, VectorSubspace};

#[derive(Parser)]
#[command(name = "trialgebra", version, about = "Exact computations with Hom-associative trialgebras")]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Parameter assignment for catalog entries: `name=value,...` with exact
    /// rational values such as `a=1,b=3/2`.
    #[arg(long, global = true)]
    params: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Convention {
    Plus,
    Minus,
}

impl From<Convention> for SignConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Plus => SignConvention::Plus,
            Convention::Minus => SignConvention::Minus,
        }
    }
}

#[derive(clap::Args)]
struct Source {
    /// Path to an algebra file.
    #[arg(conflicts_with = "entry", required_unless_present = "entry")]
    file: Option<PathBuf>,
    /// Catalog entry id, e.g. TH2.4.
    #[arg(long)]
    entry: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the nine defining axioms and multiplicativity of the twist.
    Check {
        #[command(flatten)]
        src: Source,
    },
    /// Twisted derivations: symbolic basis and dimension.
    Derivations {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_enum, default_value_t = Convention::Minus)]
        convention: Convention,
    },
    /// Span of the adjoint maps of the basis vectors.
    Inner {
        #[command(flatten)]
        src: Source,
    },
    /// Centroid: basis, dimension, and the quadratic-condition report.
    Centroid {
        #[command(flatten)]
        src: Source,
    },
    /// Central derivations.
    Central {
        #[command(flatten)]
        src: Source,
    },
    /// The center (centralizer of the whole algebra).
    Center {
        #[command(flatten)]
        src: Source,
        /// Include the middle product in the annihilation conditions.
        #[arg(long)]
        include_middle: bool,
    },
    /// Build a derived structure and write it as an algebra file.
    Construct {
        /// One of: sum-right-middle, total-sum, signed-sum, augment-right,
        /// opposite, commutator-pair, lp-pair, lp-pair-corollary.
        name: String,
        #[command(flatten)]
        src: Source,
        /// Output path for the derived algebra file.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Transport-invariant fingerprint of an algebra.
    Fingerprint {
        #[command(flatten)]
        src: Source,
    },
    /// Exhaustive isomorphism search over GL_n(F_p).
    Iso {
        /// First algebra: file path or catalog id.
        a: String,
        /// Second algebra: file path or catalog id.
        b: String,
        #[arg(long)]
        prime: u32,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List all entry ids.
    List,
    /// Show one entry's multiplication table.
    Show { id: String },
    /// Verify the whole catalog and print the discrepancy report.
    Verify,
    /// Write one algebra file per entry (default parameters).
    Export {
        /// Target directory.
        #[arg(long, default_value = "data/catalog")]
        dir: PathBuf,
    },
}

fn fail_usage(msg: &str) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

fn parse_params(text: &Option<String>) -> Assignment {
    let mut out = Assignment::new();
    let Some(text) = text else {
        return out;
    };
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let Some((name, value)) = piece.split_once('=') else {
            fail_usage(&format!("bad --params piece {piece:?}, expected name=value"));
        };
        let Ok(value) = value.trim().parse::<Scalar>() else {
            fail_usage(&format!("bad rational value in --params: {value:?}"));
        };
        out.insert(name.trim().to_string(), value);
    }
    out
}

fn load_file(path: &Path) -> HomTrialgebra {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => fail_usage(&format!("cannot read {}: {e}", path.display())),
    };
    match AlgebraFile::parse_json(&path.display().to_string(), &text) {
        Ok(a) => a,
        Err(e) => fail_usage(&format!("parse error: {e}")),
    }
}

fn load_entry(id: &str, params: &Assignment) -> HomTrialgebra {
    let entry = match catalog::find_entry(id) {
        Ok(e) => e,
        Err(e) => fail_usage(&e.to_string()),
    };
    if !entry.params.is_empty() && params.is_empty() {
        let defaults: Vec<String> = entry.params.iter().map(|p| format!("{p}=1")).collect();
        eprintln!(
            "warning: {} is parameterized; using default values {}",
            id,
            defaults.join(",")
        );
    }
    match entry.instantiate(params) {
        Ok(a) => a,
        Err(e) => fail_usage(&e.to_string()),
    }
}

fn load_source(src: &Source, params: &Assignment) -> HomTrialgebra {
    match (&src.file, &src.entry) {
        (_, Some(id)) => load_entry(id, params),
        (Some(path), None) => load_file(path),
        (None, None) => fail_usage("a source file or --entry is required"),
    }
}

/// File path or catalog id, for `iso`'s positional arguments.
fn load_path_or_entry(text: &str, params: &Assignment) -> HomTrialgebra {
    if text.starts_with("TH") && !Path::new(text).exists() {
        load_entry(text, params)
    } else {
        load_file(Path::new(text))
    }
}

fn label_of(a: &HomTrialgebra) -> String {
    a.label().unwrap_or("<input>").to_string()
}

fn matrix_strings(m: &trialgebra::linalg::Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.at(r, c).to_string()).collect())
        .collect()
}

fn print_subspace(
    format: Format,
    source: &str,
    space_name: &str,
    prefix: &str,
    space: &SubspaceBasis,
    extra: serde_json::Value,
) {
    match format {
        Format::Json => {
            let mut value = serde_json::json!({
                "source": source,
                "space": space_name,
                "dimension": space.dimension(),
                "matrix_convention": "entry [q][p] is the coefficient of e_q in D(e_p)",
                "basis": space.basis.iter().map(matrix_strings).collect::<Vec<_>>(),
            });
            if let serde_json::Value::Object(extra) = extra {
                value.as_object_mut().unwrap().extend(extra);
            }
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Text => {
            println!("{space_name} of {source}");
            println!("dimension: {}", space.dimension());
            let pattern = subspaces::SymbolicPattern::of(space);
            println!("{}", pattern.render(prefix));
        }
    }
}

fn vector_subspace_output(format: Format, source: &str, space_name: &str, z: &VectorSubspace) {
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "source": source,
                "space": space_name,
                "dimension": z.dimension(),
                "basis": z.basis.iter().map(|v| v.iter().map(|s| s.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Text => {
            println!("{space_name} of {source}");
            println!("dimension: {}", z.dimension());
            for v in &z.basis {
                println!("  {}", trialgebra::linalg::format_vector(v));
            }
        }
    }
}

fn run_check(format: Format, a: &HomTrialgebra) -> ExitCode {
    let axioms = axioms::check_triassociativity(a);
    let mult = axioms::check_multiplicative(a);
    let passed = axioms.iter().all(|r| r.passed);
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "source": label_of(a),
                "passed": passed,
                "axioms": axioms,
                "multiplicative": mult,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Text => {
            println!("axioms for {}", label_of(a));
            for r in &axioms {
                println!("{}", render_report_line(r));
            }
            for r in &mult {
                println!("{}", render_report_line(r));
            }
            println!("RESULT: {}", if passed { "PASS" } else { "FAIL" });
        }
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn show_entry(format: Format, id: &str) {
    let entry = match catalog::find_entry(id) {
        Ok(e) => e,
        Err(e) => fail_usage(&e.to_string()),
    };
    let a = entry
        .instantiate(&entry.default_assignment())
        .expect("catalog instantiates");
    match format {
        Format::Json => {
            let file = AlgebraFile::from_algebra(&a);
            print!("{}", file.to_json());
        }
        Format::Text => {
            println!("{} (dim {})", entry.id, entry.dim);
            if !entry.params.is_empty() {
                println!("parameters: {} (defaults 1)", entry.params.join(", "));
            }
            for op in OpSelector::ALL {
                for i in 0..entry.dim {
                    for j in 0..entry.dim {
                        let v = a.basis_product(op, i, j);
                        if !trialgebra::linalg::is_zero_vector(v) {
                            println!(
                                "  {}: e{} * e{} = {}",
                                op.symbol(),
                                i + 1,
                                j + 1,
                                trialgebra::linalg::format_vector(v)
                            );
                        }
                    }
                }
            }
            for i in 0..entry.dim {
                let v = a.twist_of_basis(i);
                if !trialgebra::linalg::is_zero_vector(&v) {
                    println!("  alpha(e{}) = {}", i + 1, trialgebra::linalg::format_vector(&v));
                }
            }
            for note in &entry.notes {
                println!("  note: {note}");
            }
        }
    }
}

fn run_catalog_verify(format: Format) -> ExitCode {
    let report = catalog::verify_catalog(SampleStrategy::WithSamples);
    match format {
        Format::Json => print!("{}", report.to_json()),
        Format::Text => {
            println!("verified {} entry/assignment pairs", report.entries.len());
            for e in &report.entries {
                let assignment = if e.assignment.is_empty() {
                    String::new()
                } else {
                    let pairs: Vec<String> =
                        e.assignment.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    format!(" [{}]", pairs.join(","))
                };
                println!(
                    "{:8}{} axioms={} multiplicative={} derM={} derP={} cent={} inner={} central={}",
                    e.id,
                    assignment,
                    if e.all_axioms_pass { "pass" } else { "FAIL" },
                    if e.is_multiplicative { "yes" } else { "no" },
                    e.dims.derivations_minus,
                    e.dims.derivations_plus,
                    e.dims.centroid,
                    e.dims.inner_span,
                    e.dims.central_derivations,
                );
            }
            println!("discrepancies: {}", report.discrepancies.len());
            for d in &report.discrepancies {
                println!("  {}", serde_json::to_string(d).unwrap());
            }
        }
    }
    ExitCode::SUCCESS
}

fn run_export(dir: &Path) -> ExitCode {
    if let Err(e) = std::fs::create_dir_all(dir) {
        fail_usage(&format!("cannot create {}: {e}", dir.display()));
    }
    for entry in catalog::entries() {
        let a = entry
            .instantiate(&entry.default_assignment())
            .expect("catalog instantiates");
        let file = AlgebraFile::from_algebra(&a);
        let path = dir.join(format!("{}.json", entry.id));
        if let Err(e) = std::fs::write(&path, file.to_json()) {
            fail_usage(&format!("cannot write {}: {e}", path.display()));
        }
    }
    println!("wrote {} files to {}", catalog::entries().len(), dir.display());
    ExitCode::SUCCESS
}

fn run_iso(format: Format, a: &HomTrialgebra, b: &HomTrialgebra, prime: u32) -> ExitCode {
    let fa = match isomorphism::reduce_mod_p(a, prime) {
        Ok(f) => f,
        Err(e) => fail_usage(&e.to_string()),
    };
    let fb = match isomorphism::reduce_mod_p(b, prime) {
        Ok(f) => f,
        Err(e) => fail_usage(&e.to_string()),
    };
    let witness = match isomorphism::isomorphic_over_fp(&fa, &fb) {
        Ok(w) => w,
        Err(e) => fail_usage(&e.to_string()),
    };
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "a": label_of(a),
                "b": label_of(b),
                "prime": prime,
                "isomorphic_over_fp": witness.is_some(),
                "witness": witness.as_ref().map(|g| {
                    (0..g.n).map(|r| (0..g.n).map(|c| g.at(r, c).to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()
                }),
                "caveat": "finite-field verdicts are evidence only for the characteristic-zero question",
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Text => match &witness {
            Some(g) => {
                println!("yes: isomorphic over F_{prime}; witness (columns are images of basis vectors):");
                for r in 0..g.n {
                    let row: Vec<String> = (0..g.n).map(|c| g.at(r, c).to_string()).collect();
                    println!("  [ {} ]", row.join("  "));
                }
                println!("note: F_{prime} evidence only; not a characteristic-zero proof");
            }
            None => {
                println!("no: not isomorphic over F_{prime} (exhaustive GL search)");
                println!("note: F_{prime} evidence only; not a characteristic-zero proof");
            }
        },
    }
    ExitCode::SUCCESS
}

/// Dying on SIGPIPE is the right behavior for a pipeline tool; Rust's
/// default of panicking on EPIPE is not.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    let params = parse_params(&cli.params);
    let format = cli.format;

    match &cli.command {
        Command::Check { src } => {
            let a = load_source(src, &params);
            run_check(format, &a)
        }
        Command::Derivations { src, convention } => {
            let a = load_source(src, &params);
            let conv: SignConvention = (*convention).into();
            let space = subspaces::derivation_space(&a, conv);
            print_subspace(
                format,
                &label_of(&a),
                "derivations",
                "I",
                &space,
                serde_json::json!({ "convention": conv.label() }),
            );
            ExitCode::SUCCESS
        }
        Command::Inner { src } => {
            let a = load_source(src, &params);
            let space = subspaces::inner_span(&a);
            print_subspace(
                format,
                &label_of(&a),
                "inner-derivations",
                "I",
                &space,
                serde_json::json!({}),
            );
            ExitCode::SUCCESS
        }
        Command::Centroid { src } => {
            let a = load_source(src, &params);
            let (space, quads) = subspaces::centroid_space(&a);
            print_subspace(
                format,
                &label_of(&a),
                "centroid",
                "c",
                &space,
                serde_json::json!({ "quadratic_condition": quads }),
            );
            if format == Format::Text {
                for q in &quads {
                    println!(
                        "quadratic condition on basis element {}: {}",
                        q.element,
                        if q.holds { "holds" } else { "fails" }
                    );
                }
            }
            ExitCode::SUCCESS
        }
        Command::Central { src } => {
            let a = load_source(src, &params);
            let space = subspaces::central_derivations(&a);
            print_subspace(
                format,
                &label_of(&a),
                "central-derivations",
                "c",
                &space,
                serde_json::json!({}),
            );
            ExitCode::SUCCESS
        }
        Command::Center { src, include_middle } => {
            let a = load_source(src, &params);
            let z = subspaces::center(
                &a,
                subspaces::CentralizerProducts {
                    include_middle: *include_middle,
                },
            );
            vector_subspace_output(format, &label_of(&a), "center", &z);
            ExitCode::SUCCESS
        }
        Command::Construct { name, src, output } => {
            let a = load_source(src, &params);
            let Some((derived, provenance)) = constructions::construct_by_name(name, &a) else {
                fail_usage(&format!(
                    "unknown construction {name:?}; expected one of {}",
                    constructions::CONSTRUCTION_NAMES.join(", ")
                ));
            };
            let mut file = AlgebraFile::from_algebra(&derived);
            file.provenance = Some(provenance.clone());
            if let Err(e) = std::fs::write(output, file.to_json()) {
                fail_usage(&format!("cannot write {}: {e}", output.display()));
            }
            println!("wrote {} ({provenance})", output.display());
            ExitCode::SUCCESS
        }
        Command::Catalog { action } => match action {
            CatalogCommand::List => {
                match format {
                    Format::Json => println!(
                        "{}",
                        serde_json::to_string_pretty(&catalog::list_entries()).unwrap()
                    ),
                    Format::Text => {
                        for id in catalog::list_entries() {
                            println!("{id}");
                        }
                    }
                }
                ExitCode::SUCCESS
            }
            CatalogCommand::Show { id } => {
                show_entry(format, id);
                ExitCode::SUCCESS
            }
            CatalogCommand::Verify => run_catalog_verify(format),
            CatalogCommand::Export { dir } => run_export(dir),
        },
        Command::Fingerprint { src } => {
            let a = load_source(src, &params);
            let f = isomorphism::fingerprint(&a);
            match format {
                Format::Json => {
                    let mut value = serde_json::to_value(&f).unwrap();
                    value
                        .as_object_mut()
                        .unwrap()
                        .insert("source".into(), serde_json::Value::String(label_of(&a)));
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                }
                Format::Text => {
                    println!("fingerprint of {}", label_of(&a));
                    println!("dim:            {}", f.dim);
                    println!("rank(alpha):    {}", f.rank_alpha);
                    println!("charpoly:       [{}]", f.charpoly_alpha.join(", "));
                    println!("dim Der(minus): {}", f.dim_der_minus);
                    println!("dim Der(plus):  {}", f.dim_der_plus);
                    println!("dim Cent:       {}", f.dim_centroid);
                    println!("dim A^2:        {}", f.dim_square);
                    println!("dim Z(A):       {}", f.dim_center);
                }
            }
            ExitCode::SUCCESS
        }
        Command::Iso { a, b, prime } => {
            let left = load_path_or_entry(a, &params);
            let right = load_path_or_entry(b, &params);
            run_iso(format, &left, &right, *prime)
        }
    }
}
