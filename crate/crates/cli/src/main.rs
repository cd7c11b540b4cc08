use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use quotcheck::catalog::{
    builtin_target, emit_report, parse_catalog, Classification, Format, Report, Target,
};
use quotcheck::checks::{
    base_case_check, iso_check, lemma_a_check, mcg_orbit_checks, relation_check,
    simplicity_check, sp_info, theorem_a_catalog_check, CheckReport,
};
use quotcheck::group::{FiniteGroupTable, GroupElement, DEFAULT_CEILING};
use quotcheck::hom::{classify_homs, enumerate_homs, SearchOptions};

#[derive(Parser)]
#[command(name = "quotcheck", version)]
#[command(about = "Verify finite quotient computations for braid and symplectic groups")]
struct Cli {
    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Abort any group enumeration that grows past this many elements
    #[arg(long, global = true, env = "QUOTCHECK_MAX_ELEMENTS", default_value_t = DEFAULT_CEILING)]
    max_elements: usize,

    /// Worker threads (1 runs everything on the calling thread's pool)
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    workers: Option<u16>,

    /// Suppress the progress line on standard error
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate homomorphisms B_n -> T, raw or up to conjugation
    ClassifyHoms {
        #[arg(long, value_parser = strands())]
        n: usize,
        #[command(flatten)]
        target: TargetArgs,
        /// One representative per conjugacy class
        #[arg(long)]
        classes: bool,
        /// Drop homomorphisms with cyclic image
        #[arg(long)]
        non_cyclic: bool,
    },
    /// Check that band generator images are pairwise distinct for every
    /// non-cyclic class B_n -> T
    VerifyLemmaA {
        #[arg(long, value_parser = strands())]
        n: usize,
        #[command(flatten)]
        target: TargetArgs,
    },
    /// Order, transvection, pair and refinement counts for Sp(2g, F2)
    SpInfo {
        #[arg(long, value_parser = genus())]
        g: usize,
    },
    /// Refinement-action isomorphisms Sp(2,F2) -> S3 and Sp(4,F2) -> S6
    VerifyIso {
        #[arg(long, value_parser = genus())]
        g: usize,
    },
    /// Orbit and stabilizer counts for transvections and symplectic pairs
    McgOrbits {
        #[arg(long, value_parser = genus())]
        g: usize,
    },
    /// Decide whether a built-in group is simple
    Simplicity {
        #[arg(long)]
        group: String,
    },
    /// Non-cyclic quotients of B3 and B4 among groups of order at most 6
    BaseCases,
    /// Look for non-cyclic B_n -> G with |G| < n! over a catalog file
    CatalogRun {
        #[arg(long, value_parser = strands())]
        n: usize,
        #[arg(long)]
        catalog: PathBuf,
    },
    /// Artin and band generator relations under the free-group action
    Relations {
        #[arg(long, value_parser = strands())]
        n: usize,
    },
}

#[derive(clap::Args)]
struct TargetArgs {
    /// Built-in group name or a catalog file
    #[arg(long)]
    target: String,
    /// Entry to use when the catalog file holds several groups
    #[arg(long)]
    entry: Option<String>,
}

fn strands() -> clap::builder::RangedU64ValueParser<usize> {
    clap::builder::RangedU64ValueParser::new().range(2..=7)
}

fn genus() -> clap::builder::RangedU64ValueParser<usize> {
    clap::builder::RangedU64ValueParser::new().range(1..=3)
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::ClassifyHoms { .. } => "classify-homs",
            Command::VerifyLemmaA { .. } => "verify-lemma-a",
            Command::SpInfo { .. } => "sp-info",
            Command::VerifyIso { .. } => "verify-iso",
            Command::McgOrbits { .. } => "mcg-orbits",
            Command::Simplicity { .. } => "simplicity",
            Command::BaseCases => "base-cases",
            Command::CatalogRun { .. } => "catalog-run",
            Command::Relations { .. } => "relations",
        }
    }
}

fn read_catalog(path: &Path) -> Result<Vec<quotcheck::catalog::CatalogEntry>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_catalog(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn resolve_target(args: &TargetArgs, ceiling: usize) -> Result<Target, String> {
    let path = Path::new(&args.target);
    if !path.is_file() {
        return builtin_target(&args.target, ceiling).map_err(|e| e.to_string());
    }
    let entries = read_catalog(path)?;
    let entry = match &args.entry {
        Some(name) => entries
            .iter()
            .find(|e| &e.name == name)
            .ok_or_else(|| format!("{}: no entry named {name:?}", path.display()))?,
        None if entries.len() == 1 => &entries[0],
        None => {
            return Err(format!(
                "{} holds {} groups; choose one with --entry",
                path.display(),
                entries.len()
            ))
        }
    };
    Ok(Target::Perm(entry.to_named_group(ceiling).map_err(|e| e.to_string())?))
}

fn classify<E: GroupElement>(
    n: usize,
    name: &str,
    table: &FiniteGroupTable<E>,
    classes: bool,
    non_cyclic: bool,
) -> Result<Report, String> {
    let opts = SearchOptions {
        non_cyclic_only: non_cyclic,
        ..Default::default()
    };
    let c = if classes {
        let found = classify_homs(n, table, &opts).map_err(|e| e.to_string())?;
        Classification::from_classes(n, name, table.order(), &found, non_cyclic)
    } else {
        let found = enumerate_homs(n, table, &opts).map_err(|e| e.to_string())?;
        Classification::from_raw(n, name, table.order(), &found, non_cyclic)
            .map_err(|e| e.to_string())?
    };
    Ok(Report::Classification(c))
}

fn lemma_report<E: GroupElement>(
    n: usize,
    name: &str,
    table: &FiniteGroupTable<E>,
) -> Result<Report, String> {
    let found = classify_homs(n, table, &SearchOptions::non_cyclic()).map_err(|e| e.to_string())?;
    let parts = found
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut r = lemma_a_check(&c.representative)?;
            r.name = format!("class{i}");
            Ok(r)
        })
        .collect::<quotcheck::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    let mut report = CheckReport::combine("lemma_a", parts);
    report.params.insert("n".into(), n.to_string());
    report.params.insert("target".into(), name.to_string());
    report.count("non_cyclic_classes", found.len());
    Ok(Report::Check(report))
}

fn run(command: &Command, ceiling: usize) -> Result<Report, String> {
    let check = |r: quotcheck::Result<CheckReport>| r.map(Report::Check).map_err(|e| e.to_string());
    match command {
        Command::ClassifyHoms {
            n,
            target,
            classes,
            non_cyclic,
        } => match resolve_target(target, ceiling)? {
            Target::Perm(g) => classify(*n, &g.name, &g.table, *classes, *non_cyclic),
            Target::Matrix { name, table } => classify(*n, &name, &table, *classes, *non_cyclic),
        },
        Command::VerifyLemmaA { n, target } => match resolve_target(target, ceiling)? {
            Target::Perm(g) => lemma_report(*n, &g.name, &g.table),
            Target::Matrix { name, table } => lemma_report(*n, &name, &table),
        },
        Command::SpInfo { g } => sp_info(*g, ceiling).map(Report::SpInfo).map_err(|e| e.to_string()),
        Command::VerifyIso { g } => check(iso_check(*g, ceiling)),
        Command::McgOrbits { g } => check(mcg_orbit_checks(*g, ceiling)),
        Command::Simplicity { group } => {
            match builtin_target(group, ceiling).map_err(|e| e.to_string())? {
                Target::Perm(g) => check(simplicity_check(&g.name, &g.table)),
                Target::Matrix { name, table } => check(simplicity_check(&name, &table)),
            }
        }
        Command::BaseCases => check(base_case_check()),
        Command::CatalogRun { n, catalog } => {
            let groups = read_catalog(catalog)?
                .iter()
                .map(|e| e.to_named_group(ceiling))
                .collect::<quotcheck::Result<Vec<_>>>()
                .map_err(|e| e.to_string())?;
            check(theorem_a_catalog_check(*n, &groups))
        }
        Command::Relations { n } => check(relation_check(*n)),
    }
}

fn failure_witnesses(report: &Report) -> Vec<String> {
    match report {
        Report::Check(c) if !c.passed() => c.witnesses.clone(),
        Report::SpInfo(s) if !s.passed() => vec![format!(
            "enumerated order {} differs from formula {}",
            s.order, s.order_formula
        )],
        _ => Vec::new(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Tsv => Format::Tsv,
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(k) = cli.workers {
        pool = pool.num_threads(k.into());
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start workers: {e}");
            return ExitCode::from(2);
        }
    };

    let name = cli.command.name();
    let start = Instant::now();
    if !cli.quiet {
        eprintln!("quotcheck: {name} running on {} worker(s)", pool.current_num_threads());
    }
    let report = match pool.install(|| run(&cli.command, cli.max_elements)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if !cli.quiet {
        eprintln!("quotcheck: {name} finished in {:.1}s", start.elapsed().as_secs_f64());
    }

    let text = emit_report(&report, format);
    let written = match &cli.output {
        Some(path) => fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }

    if report.passed() {
        ExitCode::SUCCESS
    } else {
        for w in failure_witnesses(&report) {
            eprintln!("witness: {w}");
        }
        ExitCode::from(1)
    }
}
