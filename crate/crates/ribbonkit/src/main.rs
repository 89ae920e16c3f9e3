//! Command-line interface to the ribbon-code toolkit.
//!
//! Verbs:
//!
//! - `alex FILE` — Alexander class and determinant of a ribbon code.
//! - `reduce FILE` — irreducible form of a ribbon code.
//! - `enumerate R` — classification of irreducible codes with at most `R`
//!   markings, printed in the `.ribbonset` cache format.
//! - `bound [FILE...]` — computed ribbon-number lower bounds against the
//!   published intervals in knot-table CSV files (bundled tables by default).
//! - `upper FILE...` — underpass statistics of Gauss codes, or fusion-number
//!   bounds for table records.
//! - `jones FILE` — Kauffman bracket of a planar diagram at the primitive
//!   eighth root of unity, with the fusion-budget obstruction.
//! - `tables` — the bundled knot tables, as text or CSV.
//!
//! Exit codes: `0` success, `1` invalid input or a failed consistency check,
//! `2` a computation budget was exceeded or refused, `3` internal error.

use std::fs;
use std::io::{self, BufReader, Write};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

use ribbonkit::bounds::{self, BoundError, RibbonSets};
use ribbonkit::code::{CodeError, RibbonCode};
use ribbonkit::diagram::{DiagramError, GaussCode, PdCode};
use ribbonkit::enumerate::{self, EnumerateError, EnumerationReport};
use ribbonkit::jones::{self, JonesError};
use ribbonkit::knotdb::{self, DbError, KnotRecord};
use ribbonkit::seifert;

/// Enumeration budget the `enumerate` verb accepts without `--allow-large`.
const DEFAULT_ENUMERATE_CAP: u32 = 4;

#[derive(Parser)]
#[command(
    name = "ribbonkit",
    version,
    about = "Alexander polynomials, ribbon-number bounds, and bracket determinants"
)]
struct Cli {
    /// Number of worker threads (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    /// Directory of cached `r<k>.ribbonset` files for the `bound` verb.
    #[arg(long, global = true, value_name = "DIR")]
    sets: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Alexander class and determinant of a ribbon code.
    Alex {
        /// Ribbon-code file (`vertices N` then `edge U V : M...` lines).
        file: PathBuf,
    },
    /// Apply class-preserving reduction moves until the code is irreducible.
    Reduce {
        /// Ribbon-code file.
        file: PathBuf,
        /// Log each applied move to stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Classify irreducible codes with at most R markings.
    Enumerate {
        /// Marking budget.
        r: u32,
        /// Permit budgets above the default cap (they can take much longer).
        #[arg(long)]
        allow_large: bool,
        /// Report progress on stderr.
        #[arg(long)]
        progress: bool,
        /// Also write `r0.ribbonset` through `rR.ribbonset` into this
        /// directory, ready for `bound --sets`.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
    /// Check published ribbon-number intervals against computed lower bounds.
    Bound {
        /// Knot-table CSV files (bundled tables when omitted).
        files: Vec<PathBuf>,
        /// Largest marking budget enumerated for the membership rule when no
        /// `--sets` directory is given.
        #[arg(long, default_value_t = 3, value_name = "R")]
        set_rmax: u32,
        /// Largest factorization degree tried by the factor rule.
        #[arg(long, default_value_t = 4, value_name = "R")]
        factor_rmax: u32,
    },
    /// Print upper-bound statistics for Gauss codes or table records.
    Upper {
        /// `.gauss` files (crossing, bridge, and underpass statistics) or
        /// `.csv` knot tables (fusion-number bounds).
        files: Vec<PathBuf>,
    },
    /// Evaluate the Kauffman bracket at the eighth root of unity.
    Jones {
        /// Planar-diagram file (`X(a,b,c,d)` and `L(a)` terms).
        file: PathBuf,
        /// Check compatibility with this fusion budget.
        #[arg(short, long, value_name = "R")]
        r: Option<u32>,
        /// Claimed component count for the divisibility test
        /// (default: the diagram's own component count).
        #[arg(long, value_name = "N")]
        components: Option<usize>,
    },
    /// Print the bundled knot tables.
    Tables {
        /// Emit machine-readable CSV instead of an aligned text table.
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Db(#[from] DbError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Jones(#[from] JonesError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Data(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    /// Maps every budget refusal to exit code 2 and every other failure to 1.
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Budget(_)
            | CliError::Enumerate(EnumerateError::BudgetExceeded(_))
            | CliError::Bound(BoundError::Budget { .. })
            | CliError::Jones(JonesError::Budget { .. }) => 2,
            _ => 1,
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            err.print().expect("rendering a usage message cannot fail");
            std::process::exit(code);
        }
    };
    let outcome = catch_unwind(AssertUnwindSafe(|| run(cli)));
    let code = match outcome {
        Ok(Ok(())) => 0,
        // A reader that stopped consuming our output is not an error.
        Ok(Err(err)) if is_broken_pipe(&err) => 0,
        Ok(Err(err)) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
        Err(_) => {
            eprintln!("internal error");
            3
        }
    };
    std::process::exit(code);
}

fn is_broken_pipe(err: &CliError) -> bool {
    let kind = match err {
        CliError::Io(e) => e.kind(),
        CliError::Db(DbError::Io(e)) => e.kind(),
        CliError::Enumerate(EnumerateError::Io(e)) => e.kind(),
        _ => return false,
    };
    kind == io::ErrorKind::BrokenPipe
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("the global thread pool is configured before any work");
    }
    let stdout = io::stdout();
    let out = &mut stdout.lock();
    match cli.command {
        Command::Alex { file } => cmd_alex(out, &file),
        Command::Reduce { file, trace } => cmd_reduce(out, &file, trace),
        Command::Enumerate {
            r,
            allow_large,
            progress,
            out: out_dir,
        } => cmd_enumerate(out, r, allow_large, progress, out_dir.as_deref()),
        Command::Bound {
            files,
            set_rmax,
            factor_rmax,
        } => cmd_bound(out, &files, cli.sets.as_deref(), set_rmax, factor_rmax),
        Command::Upper { files } => cmd_upper(out, &files),
        Command::Jones {
            file,
            r,
            components,
        } => cmd_jones(out, &file, r, components),
        Command::Tables { csv } => cmd_tables(out, csv),
    }
}

fn read_to_string(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|err| CliError::Data(format!("cannot read {}: {err}", path.display())))
}

fn cmd_alex(out: &mut dyn Write, file: &Path) -> Result<(), CliError> {
    let code = RibbonCode::parse(&read_to_string(file)?)?;
    let alex = seifert::alexander(&code);
    writeln!(
        out,
        "code: {} vertices, {} edges, {} markings",
        code.vertex_count(),
        code.edge_count(),
        code.marking_count()
    )?;
    writeln!(out, "alexander class: {alex}")?;
    writeln!(out, "polynomial: {}", alex.to_laurent())?;
    writeln!(out, "determinant: {}", alex.determinant())?;
    Ok(())
}

fn cmd_reduce(out: &mut dyn Write, file: &Path, trace: bool) -> Result<(), CliError> {
    let code = RibbonCode::parse(&read_to_string(file)?)?;
    let (reduced, moves) = code.reduce_with_trace();
    if trace {
        for line in &moves {
            eprintln!("{line}");
        }
        eprintln!("{} moves applied", moves.len());
    }
    writeln!(out, "{}", reduced.serialize())?;
    Ok(())
}

fn cmd_enumerate(
    out: &mut dyn Write,
    r: u32,
    allow_large: bool,
    progress: bool,
    out_dir: Option<&Path>,
) -> Result<(), CliError> {
    if r > DEFAULT_ENUMERATE_CAP && !allow_large {
        return Err(CliError::Budget(format!(
            "budget {r} exceeds the default cap of {DEFAULT_ENUMERATE_CAP}; \
             pass --allow-large to run it anyway"
        )));
    }
    let stderr_progress = |done: usize, total: usize| {
        eprint!("\r{done}/{total} tree shapes");
        if done == total {
            eprintln!();
        }
    };
    let silent = |_: usize, _: usize| {};
    let callback: &(dyn Fn(usize, usize) + Sync) =
        if progress { &stderr_progress } else { &silent };
    let report = enumerate::enumerate_report_with_progress(r, callback)?;
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir)?;
        for k in 0..=r {
            let report_k = if k == r {
                report.clone()
            } else {
                enumerate::enumerate_report(k)?
            };
            let path = dir.join(EnumerationReport::file_name(k));
            report_k.save(fs::File::create(&path)?)?;
        }
    }
    write!(out, "{}", report.to_cache_text())?;
    Ok(())
}

/// Loads every `r<k>.ribbonset` file in `dir`.  The membership rule needs
/// every budget from zero up, so gaps are rejected.
fn load_sets(dir: &Path) -> Result<RibbonSets, CliError> {
    let mut sets = RibbonSets::new();
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        let Some(name) = path.file_name().and_then(|n| n.to_str()) else {
            continue;
        };
        let Some(stem) = name.strip_suffix(".ribbonset") else {
            continue;
        };
        let Some(k) = stem.strip_prefix('r').and_then(|s| s.parse::<u32>().ok()) else {
            continue;
        };
        let report = EnumerationReport::load(BufReader::new(fs::File::open(&path)?))?;
        if report.r != k {
            return Err(CliError::Data(format!(
                "{} declares budget {} but its name says {k}",
                path.display(),
                report.r
            )));
        }
        sets.insert(k, report.ribbon_set);
    }
    let max = *sets
        .keys()
        .next_back()
        .ok_or_else(|| CliError::Data(format!("no .ribbonset files in {}", dir.display())))?;
    for k in 0..=max {
        if !sets.contains_key(&k) {
            return Err(CliError::Data(format!(
                "missing r{k}.ribbonset in {} (budgets 0..={max} must all be present)",
                dir.display()
            )));
        }
    }
    Ok(sets)
}

fn load_records(files: &[PathBuf]) -> Result<Vec<KnotRecord>, CliError> {
    if files.is_empty() {
        return Ok(knotdb::bundled_records());
    }
    let mut records = Vec::new();
    for file in files {
        let text = read_to_string(file)?;
        records.extend(knotdb::load_csv(text.as_bytes())?);
    }
    Ok(records)
}

fn cmd_bound(
    out: &mut dyn Write,
    files: &[PathBuf],
    sets_dir: Option<&Path>,
    set_rmax: u32,
    factor_rmax: u32,
) -> Result<(), CliError> {
    let records = load_records(files)?;
    let sets = match sets_dir {
        Some(dir) => load_sets(dir)?,
        None => bounds::computed_ribbon_sets(set_rmax)?,
    };
    let name_width = records
        .iter()
        .map(|r| r.name.len())
        .chain(["name".len()])
        .max()
        .unwrap_or(4);
    writeln!(
        out,
        "{:name_width$}  {:>5}  {:<13}  {:<9}  {:<8}  reason",
        "name", "lower", "rule", "published", "verdict"
    )?;
    let mut tight = 0usize;
    let mut conflicts = 0usize;
    for record in &records {
        let bound = bounds::lower_bound(&record.facts(), Some(&sets), factor_rmax)?;
        let verdict = if bound.value > record.rmax {
            conflicts += 1;
            "CONFLICT"
        } else if bound.value == record.rmin {
            tight += 1;
            "tight"
        } else {
            "ok"
        };
        writeln!(
            out,
            "{:name_width$}  {:>5}  {:<13}  {:<9}  {:<8}  {}",
            record.name,
            bound.value,
            bound.rule.to_string(),
            record.interval_text(),
            verdict,
            bound.detail
        )?;
    }
    writeln!(
        out,
        "{} records: {} tight, {} conflicting",
        records.len(),
        tight,
        conflicts
    )?;
    if conflicts > 0 {
        return Err(CliError::Data(format!(
            "{conflicts} computed lower bounds exceed their published upper bounds"
        )));
    }
    Ok(())
}

fn cmd_upper(out: &mut dyn Write, files: &[PathBuf]) -> Result<(), CliError> {
    if files.is_empty() {
        return Err(CliError::Data(
            "pass at least one .gauss or .csv file".into(),
        ));
    }
    for file in files {
        let is_csv = file
            .extension()
            .and_then(|e| e.to_str())
            .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
        if is_csv {
            let text = read_to_string(file)?;
            let records = knotdb::load_csv(text.as_bytes())?;
            for record in &records {
                match &record.upper {
                    Some((upper, cite)) => {
                        let fusion = bounds::fusion_upper_bound(*upper)
                            .map(|f| f.to_string())
                            .unwrap_or_else(|| "-".into());
                        writeln!(
                            out,
                            "{}: ribbon number <= {upper} ({cite}); fusion number <= {fusion}",
                            record.name
                        )?;
                    }
                    None => writeln!(out, "{}: no recorded upper bound", record.name)?,
                }
            }
        } else {
            let code = GaussCode::parse(&read_to_string(file)?)?;
            writeln!(out, "{}:", file.display())?;
            writeln!(out, "  crossings: {}", code.crossing_count())?;
            writeln!(out, "  longest over/under run: {}", code.max_bridge_length())?;
            writeln!(out, "  underpasses needed: <= {}", code.underpass_upper_bound())?;
        }
    }
    Ok(())
}

fn cmd_jones(
    out: &mut dyn Write,
    file: &Path,
    r: Option<u32>,
    components: Option<usize>,
) -> Result<(), CliError> {
    let pd = PdCode::parse(&read_to_string(file)?)?;
    let bracket = jones::bracket(&pd)?;
    writeln!(out, "crossings: {}", pd.crossing_count())?;
    writeln!(out, "components: {}", pd.component_count())?;
    writeln!(out, "bracket: {}", bracket.to_string().replace('t', "A"))?;
    let claimed = components.unwrap_or_else(|| pd.component_count());
    if claimed != pd.component_count() {
        match jones::divisibility_check(&bracket, claimed) {
            Some(_) => writeln!(out, "divisible as a {claimed}-component bracket: yes")?,
            None => writeln!(
                out,
                "divisible as a {claimed}-component bracket: NO (obstructed)"
            )?,
        }
    }
    let det_sq = jones::jones_det_sq(&pd)?;
    writeln!(out, "squared determinant: {det_sq}")?;
    writeln!(
        out,
        "smallest compatible fusion budget: {}",
        jones::min_r_from_jones(&det_sq)
    )?;
    if let Some(r) = r {
        let verdict = if jones::ribbon_bound_check(&det_sq, r) {
            "compatible"
        } else {
            "obstructed"
        };
        writeln!(out, "budget {r}: {verdict}")?;
    }
    Ok(())
}

fn cmd_tables(out: &mut dyn Write, csv: bool) -> Result<(), CliError> {
    if csv {
        knotdb::emit_csv(&knotdb::bundled_records(), &mut *out)?;
    } else {
        writeln!(out, "== table 1 ==")?;
        knotdb::emit_table(&knotdb::table_one(), &mut *out)?;
        writeln!(out)?;
        writeln!(out, "== table 2 ==")?;
        knotdb::emit_table(&knotdb::table_two(), &mut *out)?;
    }
    Ok(())
}
