use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context as _, Result};
use clap::{Args, Parser, Subcommand};

use gamma_core::instances::{self, EnumerationMode, InstanceSpec};
use gamma_core::text::{emit_table, parse_grades, parse_subset, parse_table};
use gamma_core::verifier::{self, CorpusReport, TheoremId, VerifyOptions};
use gamma_core::{classify, FuzzySubset, GammaSemigroup, GradeGrid, IdealKind, ValidationError};

#[derive(Parser)]
#[command(name = "gamma", version, about = "Finite Γ-semigroups and their fuzzy ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that an instance file describes an associative Γ-semigroup.
    Validate { file: PathBuf },
    /// Print the structural flags of an instance.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Test a crisp or fuzzy subset against an ideal kind.
    Check(CheckArgs),
    /// Run the theorem catalog over every instance up to a size.
    Verify(VerifyArgs),
    /// Write instance files for named families or whole enumerations.
    #[command(subcommand)]
    Generate(Generate),
    /// List the theorem catalog.
    Theorems,
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    /// subsemigroup, left, right, two_sided, bi, one_two or quasi.
    #[arg(long)]
    kind: IdealKind,
    /// Comma-separated element indices, e.g. `0,2` or `{0,2}`.
    #[arg(long, conflicts_with = "fuzzy", required_unless_present = "fuzzy")]
    subset: Option<String>,
    /// File of n grades, `p/q` or integers.
    #[arg(long)]
    fuzzy: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest carrier size.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Largest number of parameters.
    #[arg(long, default_value_t = 2)]
    m: usize,
    /// Additional shapes `NxM` beyond the n/m rectangle.
    #[arg(long = "also", value_parser = parse_shape)]
    also: Vec<(usize, usize)>,
    /// Grade levels evenly spaced in [0, 1], or `complete` for n+1 levels.
    #[arg(long, env = "GAMMA_GRID_LEVELS", default_value = "3")]
    grid: String,
    /// Comma-separated catalog ids, or `all`.
    #[arg(long, default_value = "all")]
    theorems: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Candidate tables per shape before switching to sampling.
    #[arg(long, default_value_t = 1 << 20)]
    budget: u128,
    /// Write the JSON report here; witness files go beside it.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Generate {
    LeftZero {
        n: usize,
        m: usize,
    },
    RightZero {
        n: usize,
        m: usize,
    },
    /// `x γ y = x·γ·y mod n` for each listed γ.
    Modular {
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        gammas: Vec<usize>,
    },
    /// Replicate a one-parameter table (an ordinary semigroup) over m parameters.
    Lift {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Every associative table of the given shape.
    All {
        n: usize,
        m: usize,
        #[arg(long, default_value_t = 1 << 20)]
        budget: u128,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep one table per isomorphism class.
        #[arg(long)]
        up_to_iso: bool,
        /// Write one file per table into this directory instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_shape(s: &str) -> Result<(usize, usize), String> {
    let (n, m) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected NxM, got `{s}`"))?;
    Ok((
        n.trim().parse().map_err(|_| format!("bad size in `{s}`"))?,
        m.trim().parse().map_err(|_| format!("bad size in `{s}`"))?,
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    let mut out = io::stdout().lock();
    match command {
        Command::Validate { file } => validate(&file, &mut out),
        Command::Classify { file, json } => {
            let g = load(&file)?;
            let p = classify(&g);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&p)?)?;
            } else {
                for (name, value) in p.flags() {
                    writeln!(out, "{name}: {value}")?;
                }
                writeln!(out, "idempotents: {}", p.idempotents)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check(args) => check(args, &mut out),
        Command::Verify(args) => verify(args, &mut out),
        Command::Generate(spec) => generate(spec, &mut out),
        Command::Theorems => {
            for id in TheoremId::ALL {
                writeln!(out, "{:<6} [{}] {}", id.code(), id.hypothesis(), id.conclusion())?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(path: &Path) -> Result<GammaSemigroup> {
    let data = parse_table(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    GammaSemigroup::validate(&data).with_context(|| format!("validating {}", path.display()))
}

fn validate(file: &Path, out: &mut impl Write) -> Result<ExitCode> {
    let data = parse_table(&read(file)?).with_context(|| format!("parsing {}", file.display()))?;
    match GammaSemigroup::validate(&data) {
        Ok(g) => {
            writeln!(out, "valid: n={} m={}", g.n(), g.m())?;
            Ok(ExitCode::SUCCESS)
        }
        Err(ValidationError::NotAssociative(violations)) => {
            for v in &violations {
                writeln!(out, "{v}")?;
            }
            eprintln!("{} associativity violations", violations.len());
            Ok(ExitCode::FAILURE)
        }
        Err(e) => bail!(e),
    }
}

fn check(args: CheckArgs, out: &mut impl Write) -> Result<ExitCode> {
    let g = load(&args.file)?;
    let holds = if let Some(text) = &args.subset {
        let a = parse_subset(&g, text)?;
        let violation = g.crisp_violation(args.kind, &a)?;
        writeln!(out, "{}", violation.is_none())?;
        if let Some(v) = violation {
            writeln!(out, "{v}")?;
        }
        violation.is_none()
    } else {
        let path = args.fuzzy.as_ref().expect("clap enforces one of --subset/--fuzzy");
        let mu = FuzzySubset::new(&g, parse_grades(&read(path)?, g.n())?)?;
        let violation = g.fuzzy_violation(args.kind, &mu)?;
        writeln!(out, "{}", violation.is_none())?;
        if let Some(v) = &violation {
            writeln!(out, "{v}")?;
        }
        violation.is_none()
    };
    Ok(if holds { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn verify(args: VerifyArgs, out: &mut impl Write) -> Result<ExitCode> {
    let mut shapes = verifier::shapes_up_to(args.n, args.m);
    for s in args.also {
        if !shapes.contains(&s) {
            shapes.push(s);
        }
    }
    let max_n = shapes.iter().map(|s| s.0).max().unwrap_or(1);
    let grid = if args.grid.eq_ignore_ascii_case("complete") {
        GradeGrid::complete_for(max_n)
    } else {
        let levels: usize = args.grid.parse().with_context(|| format!("grid level count `{}`", args.grid))?;
        GradeGrid::uniform(levels)?
    };
    let theorems = verifier::parse_list(&args.theorems)?;
    let corpus = verifier::build_corpus(&shapes, args.budget, args.seed);
    let options = VerifyOptions { grid: grid.clone(), theorems, ..VerifyOptions::default() };
    let report = verifier::verify_corpus(&corpus, &options);

    writeln!(out, "corpus: {} instances, grid {grid}", corpus.len())?;
    writeln!(
        out,
        "{:<7} {:>9} {:>15} {:>19} {:>8}",
        "theorem", "verified", "counterexample", "hypothesis_not_met", "skipped"
    )?;
    for (id, c) in report.summary() {
        writeln!(
            out,
            "{:<7} {:>9} {:>15} {:>19} {:>8}",
            id.code(),
            c.verified,
            c.counterexample,
            c.hypothesis_not_met,
            c.skipped
        )?;
    }
    for r in report.counterexamples() {
        let desc = r.witness.as_ref().map_or("", |w| w.description.as_str());
        writeln!(out, "counterexample {} on {}: {desc}", r.theorem, r.instance)?;
    }
    let truncated = report.results.iter().filter(|r| r.truncated).count();
    if truncated > 0 {
        writeln!(out, "note: {truncated} results used a truncated fuzzy family")?;
    }
    if let Some(path) = &args.json {
        fs::write(path, serde_json::to_string_pretty(&report)?)
            .with_context(|| format!("writing {}", path.display()))?;
        write_witnesses(&report, &corpus, path)?;
    }
    Ok(if report.is_clean() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

/// One instance file plus one fuzzy file per witness function, named after
/// the report, theorem and instance.
fn write_witnesses(report: &CorpusReport, corpus: &[verifier::CorpusInstance], report_path: &Path) -> Result<()> {
    let dir = report_path.parent().map(Path::to_path_buf).unwrap_or_default();
    let stem = report_path.file_stem().map_or("report".into(), |s| s.to_string_lossy().into_owned());
    for r in report.counterexamples() {
        let Some(inst) = corpus.iter().find(|c| c.id == r.instance) else { continue };
        let base = format!("{stem}.{}.{}", r.theorem.code().replace('.', "_"), r.instance);
        let mut header = format!("# {} on {}\n", r.theorem, r.instance);
        if let Some(w) = &r.witness {
            header.push_str(&format!("# {}\n", w.description));
            for s in &w.subsets {
                header.push_str(&format!("# subset {s}\n"));
            }
            if !w.elements.is_empty() {
                header.push_str(&format!("# elements {:?}\n", w.elements));
            }
            for map in &w.maps {
                header.push_str(&format!("# map {map:?}\n"));
            }
            for (i, f) in w.fuzzy.iter().enumerate() {
                fs::write(dir.join(format!("{base}.fuzzy{i}.txt")), format!("{f}\n"))?;
            }
        }
        fs::write(dir.join(format!("{base}.instance.txt")), header + &emit_table(&inst.structure))?;
    }
    Ok(())
}

fn generate(spec: Generate, out: &mut impl Write) -> Result<ExitCode> {
    let single = match spec {
        Generate::LeftZero { n, m } => InstanceSpec::LeftZero { n, m },
        Generate::RightZero { n, m } => InstanceSpec::RightZero { n, m },
        Generate::Modular { n, gammas } => InstanceSpec::Modular { n, gammas },
        Generate::Lift { file, m } => {
            let data = parse_table(&read(&file)?)?;
            if data.m != 1 {
                bail!("lift expects a one-parameter table, found m = {}", data.m);
            }
            InstanceSpec::Lift { product: data.slices.into_iter().next().expect("m = 1"), m }
        }
        Generate::All { n, m, budget, seed, up_to_iso, out: dir } => {
            let e = instances::enumerate_all(n, m, budget, seed);
            match e.mode {
                EnumerationMode::Exhaustive { candidates } => eprintln!("exhaustive over {candidates} candidates"),
                EnumerationMode::Sampled { drawn, accepted, .. } => eprintln!(
                    "sampled {drawn} tables, kept {accepted} (yield {:.4})",
                    e.mode.yield_rate().unwrap_or(0.0)
                ),
            }
            let structures = if up_to_iso { instances::dedupe_up_to_isomorphism(e.structures)? } else { e.structures };
            eprintln!("{} structures", structures.len());
            for (i, g) in structures.iter().enumerate() {
                let id = format!("n{n}m{m}-{i:04}");
                match &dir {
                    Some(d) => {
                        fs::create_dir_all(d)?;
                        fs::write(d.join(format!("{id}.txt")), emit_table(g))?;
                    }
                    None => write!(out, "# {id}\n{}\n", emit_table(g))?,
                }
            }
            return Ok(ExitCode::SUCCESS);
        }
    };
    let g = single.make()?;
    write!(out, "{}", emit_table(&g))?;
    Ok(ExitCode::SUCCESS)
}
