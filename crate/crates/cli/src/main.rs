//! Command-line surface: validation of ring/bimodule files, extension
//! construction, classification, lattice enumeration, verification suites,
//! and the object catalog.

mod format;

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use format::{build_ring, build_rrng, emit_ring, emit_rrng, parse_document, RawRecord};
use minext_core::algebra::FiniteRing;
use minext_core::bimodule::RRng;
use minext_core::catalog::{self, CatalogItem, CatalogSpec};
use minext_core::classify::{classify_central, classify_minimal_extension, run_suite, CentralType, ExtensionType};
use minext_core::extensions::ideal_extension;
use minext_core::substructure::{enumerate_ideals, find_unital_embedding, ElementSet};
use minext_core::{Caps, Error};

#[derive(Parser)]
#[command(name = "minext", about = "Finite rings, ideal extensions, and their classification")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct CapFlags {
    /// Cap on the order of fully enumerated objects
    #[arg(long, default_value_t = 65536)]
    max_order: usize,
    /// Cap on the ambient order for subset-closure computations
    #[arg(long, default_value_t = 4096)]
    closure_cap: usize,
}

impl CapFlags {
    fn caps(&self) -> Caps {
        Caps { enumeration: self.max_order, closure: self.closure_cap }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and validate every record of a ring/rrng file
    Validate { file: PathBuf },
    /// Build the ideal extension E(R,I) and emit it as a ring file
    Extend {
        /// Bimodule-rng spec: a file path or `catalog:<name>(<params>)`
        #[arg(long)]
        rrng: String,
        /// Write the ring file here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        caps: CapFlags,
    },
    /// Classify a minimal extension of a prime ring
    Classify {
        /// Ring spec for the base R
        #[arg(long)]
        base: String,
        /// Ring spec for the extension S
        #[arg(long)]
        ext: String,
        /// Apply the central refinement
        #[arg(long)]
        central: bool,
        #[command(flatten)]
        caps: CapFlags,
    },
    /// List ideals of a ring, or subrings of E(R,I) containing R
    Enumerate {
        /// Ring spec whose two-sided ideals to list
        #[arg(long)]
        ideals: Option<String>,
        /// Bimodule-rng spec whose extension's subrings over R to list
        #[arg(long)]
        subrings_over: Option<String>,
        #[command(flatten)]
        caps: CapFlags,
    },
    /// Run a named verification suite over the standing corpus
    Verify {
        #[arg(long)]
        suite: String,
        /// Worker threads (scheduling only; never affects report order)
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        caps: CapFlags,
    },
    /// Inspect or emit catalog objects
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List the available constructors
    List,
    /// Emit a catalog object as a ring/rrng file
    Emit { name: String },
}

/// exit 1: suite failure or negative classification precondition;
/// exit 2: invalid input.
enum CliError {
    Negative(String),
    Invalid(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::NotPrimeBase | Error::NotMinimalExtension | Error::NotCentral => {
                CliError::Negative(e.to_string())
            }
            other => CliError::Invalid(other.to_string()),
        }
    }
}

type CliResult = Result<(), CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Negative(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(CliError::Invalid(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    match cli.cmd {
        Cmd::Validate { file } => cmd_validate(&file),
        Cmd::Extend { rrng, out, caps } => cmd_extend(&rrng, out.as_deref(), &caps.caps()),
        Cmd::Classify { base, ext, central, caps } => {
            cmd_classify(&base, &ext, central, &caps.caps())
        }
        Cmd::Enumerate { ideals, subrings_over, caps } => {
            cmd_enumerate(ideals.as_deref(), subrings_over.as_deref(), &caps.caps())
        }
        Cmd::Verify { suite, jobs, caps } => cmd_verify(&suite, jobs, &caps.caps()),
        Cmd::Catalog { action } => match action {
            CatalogCmd::List => cmd_catalog_list(),
            CatalogCmd::Emit { name } => cmd_catalog_emit(&name),
        },
    }
}

// ---------------------------------------------------------------------------
// spec resolution
// ---------------------------------------------------------------------------

fn read_records(path: &str) -> Result<Vec<RawRecord>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("{path}: {e}")))?;
    parse_document(path, &text).map_err(|d| CliError::Invalid(d.to_string()))
}

/// Builds every record of a document in order, resolving `over` references
/// against earlier inline rings, catalog names, or other files.
fn build_document(
    path: &str,
    records: &[RawRecord],
    caps: &Caps,
) -> Result<(Vec<(String, FiniteRing)>, Vec<(String, RRng)>), CliError> {
    let mut rings: Vec<(String, FiniteRing)> = Vec::new();
    let mut by_name: HashMap<String, FiniteRing> = HashMap::new();
    let mut rrngs: Vec<(String, RRng)> = Vec::new();
    for rec in records {
        match rec {
            RawRecord::Ring(raw) => {
                let ring = build_ring(path, raw).map_err(|d| CliError::Invalid(d.to_string()))?;
                by_name.insert(raw.name.clone(), ring.clone());
                rings.push((raw.name.clone(), ring));
            }
            RawRecord::RRng(raw) => {
                let base = if let Some(r) = by_name.get(&raw.over) {
                    r.clone()
                } else {
                    resolve_ring(&raw.over, caps)?
                };
                let m = build_rrng(path, raw, &base).map_err(|d| CliError::Invalid(d.to_string()))?;
                rrngs.push((raw.name.clone(), m));
            }
        }
    }
    Ok((rings, rrngs))
}

fn resolve_item(spec: &str, caps: &Caps) -> Result<CatalogItem, CliError> {
    if let Some(rest) = spec.strip_prefix("catalog:") {
        let parsed = CatalogSpec::parse(rest)?;
        Ok(catalog::make(&parsed, caps)?)
    } else {
        let records = read_records(spec)?;
        let (rings, rrngs) = build_document(spec, &records, caps)?;
        if let Some((_, m)) = rrngs.into_iter().next() {
            Ok(CatalogItem::RRng(m))
        } else if let Some((_, r)) = rings.into_iter().next() {
            Ok(CatalogItem::Ring(r))
        } else {
            Err(CliError::Invalid(format!("{spec}:1: file contains no records")))
        }
    }
}

fn resolve_ring(spec: &str, caps: &Caps) -> Result<FiniteRing, CliError> {
    match resolve_item(spec, caps)? {
        CatalogItem::Ring(r) => Ok(r),
        _ => Err(CliError::Invalid(format!("`{spec}` does not name a ring"))),
    }
}

fn resolve_rrng(spec: &str, caps: &Caps) -> Result<RRng, CliError> {
    match resolve_item(spec, caps)? {
        CatalogItem::RRng(m) => Ok(m),
        _ => Err(CliError::Invalid(format!("`{spec}` does not name a bimodule-rng"))),
    }
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

fn cmd_validate(file: &PathBuf) -> CliResult {
    let path = file.to_string_lossy().to_string();
    let records = read_records(&path)?;
    if records.is_empty() {
        return Err(CliError::Invalid(format!("{path}:1: file contains no records")));
    }
    let caps = Caps::default();
    let (rings, rrngs) = build_document(&path, &records, &caps)?;
    for (name, r) in &rings {
        println!("ok ring {name} (order {})", r.order());
    }
    for (name, m) in &rrngs {
        println!("ok rrng {name} (order {} over a ring of order {})", m.i_order(), m.ring().order());
    }
    Ok(())
}

fn cmd_extend(spec: &str, out: Option<&std::path::Path>, caps: &Caps) -> CliResult {
    let m = resolve_rrng(spec, caps)?;
    let x = ideal_extension(&m, caps)?;
    let text = emit_ring("extension", &x.ext);
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn fmt_set(s: &ElementSet) -> String {
    let inner: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

fn cmd_classify(base_spec: &str, ext_spec: &str, central: bool, caps: &Caps) -> CliResult {
    let base = resolve_ring(base_spec, caps)?;
    let ext = resolve_ring(ext_spec, caps)?;
    let emb = find_unital_embedding(&base, &ext).ok_or_else(|| {
        CliError::Invalid(format!("no unital embedding of `{base_spec}` into `{ext_spec}`"))
    })?;
    if central {
        match classify_central(&emb, caps)? {
            CentralType::P => println!("central type P"),
            CentralType::Si { m, model, .. } => {
                println!("central type SI");
                println!("maximal ideal M = {}", fmt_set(&m));
                println!("model: R x R/M (order {})", model.order());
            }
            CentralType::N { m, model, .. } => {
                println!("central type N");
                println!("maximal ideal M = {}", fmt_set(&m));
                println!("model: trivial extension of R by R/M (order {})", model.order());
            }
        }
        return Ok(());
    }
    match classify_minimal_extension(&emb, caps)? {
        ExtensionType::P => {
            println!("type P");
            println!("witness: every nonzero ideal meets the base");
        }
        ExtensionType::Pi { i } => {
            println!("type PI");
            println!("witness: ideal bimodule-rng of order {}", i.i_order());
        }
        ExtensionType::Sr { i } => {
            println!("type SR");
            println!("witness: ideal bimodule-rng of order {}", i.i_order());
        }
        ExtensionType::Si { prime_ideal, i } => {
            println!("type SI");
            println!(
                "witness: ideal bimodule-rng of order {}, prime ideal {}",
                i.i_order(),
                fmt_set(&prime_ideal)
            );
        }
        ExtensionType::N { m } => {
            println!("type N");
            println!("witness: trivial bimodule of order {}", m.i_order());
        }
    }
    Ok(())
}

fn cmd_enumerate(ideals: Option<&str>, subrings_over: Option<&str>, caps: &Caps) -> CliResult {
    match (ideals, subrings_over) {
        (Some(spec), None) => {
            let ring = resolve_ring(spec, caps)?;
            let list = enumerate_ideals(&ring, caps)?;
            for i in &list {
                println!("ideal {}", fmt_set(i));
            }
            println!("total {}", list.len());
            Ok(())
        }
        (None, Some(spec)) => {
            let m = resolve_rrng(spec, caps)?;
            let x = ideal_extension(&m, caps)?;
            let pairs = minext_core::extensions::subrings_over(&x, caps)?;
            for (s, k) in &pairs {
                println!("subring {} from K {}", fmt_set(s), fmt_set(k));
            }
            println!("total {}", pairs.len());
            Ok(())
        }
        _ => Err(CliError::Invalid(
            "enumerate expects exactly one of --ideals or --subrings-over".into(),
        )),
    }
}

fn cmd_verify(suite: &str, jobs: Option<usize>, caps: &Caps) -> CliResult {
    if let Some(j) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| CliError::Invalid(format!("--jobs: {e}")))?;
    }
    let report = run_suite(suite, caps)?;
    for f in &report.failures {
        println!("FAIL [{}] {} ({})", f.instance, f.assertion, f.witness);
    }
    println!("{}", report.summary_line());
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Negative(format!("suite {suite} failed")))
    }
}

fn cmd_catalog_list() -> CliResult {
    for (_, signature, kind) in catalog::CONSTRUCTORS {
        println!("{signature} -> {kind}");
    }
    Ok(())
}

fn cmd_catalog_emit(name: &str) -> CliResult {
    let caps = Caps::default();
    let spec = CatalogSpec::parse(name)?;
    let label: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    match catalog::make(&spec, &caps)? {
        CatalogItem::Ring(r) => print!("{}", emit_ring(&label, &r)),
        CatalogItem::RRng(m) => {
            print!("{}", emit_ring("base", m.ring()));
            print!("{}", emit_rrng(&label, "base", &m));
        }
        CatalogItem::Embedding(_) | CatalogItem::Bergman(_) => {
            return Err(CliError::Invalid(format!("`{name}` has no file representation")));
        }
    }
    Ok(())
}
