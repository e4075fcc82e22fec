//! `finitop`: validate, classify and exhaustively check finite spaces.
//!
//! Exit status: 0 when every check passed or the verdict asked for is
//! positive, 1 when a verdict is negative or a discrepancy was found, 2 on
//! bad input or usage.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use finitop::atlas::{self, FixtureStatus, Goal, MineOutcome};
use finitop::format::{parse_map_spec, parse_set, read_space, resolve_assignment};
use finitop::genclass::{check_implication_diagram, implication_arrows};
use finitop::harness::{self, CoveragePolicy, HarnessConfig, TheoremId};
use finitop::maps::{MapClass, MapPredicate, MapRef};
use finitop::normality::{
    check_normality_diagram, is_normal_kind, normality_arrows, NormalityKind, NormalityProfile,
};
use finitop::report::{Format, Record, Report};
use finitop::{ClassTable, ClosedClass, OpenKind, SetProperty, Topology};

#[derive(Parser)]
#[command(
    name = "finitop",
    version,
    about = "Generalized closed sets and normality on finite spaces"
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Plain)]
    format: OutFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Plain,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoverageArg {
    Auto,
    Labeled,
    UpToRelabeling,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a `.top` file describes a topology.
    Validate { file: PathBuf },
    /// List a class or open-kind family, or every family with `all`.
    Families {
        file: PathBuf,
        #[arg(long, default_value = "all")]
        class: String,
    },
    /// Decide whether a set belongs to a class (exit 0 yes, 1 no).
    Classify {
        file: PathBuf,
        #[arg(long)]
        set: String,
        #[arg(long)]
        class: String,
    },
    /// Normality verdicts, one line per kind.
    Normality {
        file: PathBuf,
        #[arg(long)]
        kind: Option<String>,
    },
    /// Check the class and normality implication diagrams on one space or
    /// on every labeled space with `--n` points.
    Diagram {
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        n: Option<usize>,
    },
    /// Map class verdicts for a `.map` file.
    Mapcheck {
        file: PathBuf,
        #[arg(long)]
        class: Option<String>,
    },
    /// Exhaustive theorem ledger over spaces with 1..=N points.
    Verify {
        #[arg(long)]
        n: usize,
        /// Comma-separated theorem tokens and ranges, e.g. `3.12,5.1-5.8`.
        #[arg(long, default_value = "all")]
        theorems: String,
        #[arg(long, env = harness::JOBS_ENV)]
        jobs: Option<usize>,
        /// Budget of elementary membership checks per theorem.
        #[arg(long, default_value_t = harness::DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long, value_enum, default_value_t = CoverageArg::Auto)]
        coverage: CoverageArg,
    },
    /// Enumerate every topology on N points.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// One representative per relabeling class.
        #[arg(long)]
        canonical: bool,
        #[arg(long)]
        count_only: bool,
    },
    /// Find the first space (and set) satisfying a goal expression.
    Mine {
        #[arg(long)]
        goal: String,
        #[arg(long)]
        n: usize,
    },
    /// Run the fixture corpus.
    Fixtures {
        #[arg(long, default_value = "corpus")]
        corpus: PathBuf,
    },
}

/// A failure that maps to exit status 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<(Report, bool), InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        OutFormat::Plain => Format::Plain,
        OutFormat::Tsv => Format::Tsv,
    };
    match run(cli.command) {
        Ok((report, positive)) => {
            print!("{}", report.render(format));
            if positive {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Validate { file } => validate(&file),
        Command::Families { file, class } => families(&file, &class),
        Command::Classify { file, set, class } => classify(&file, &set, &class),
        Command::Normality { file, kind } => normality(&file, kind.as_deref()),
        Command::Diagram { file, n } => diagram(file.as_deref(), n),
        Command::Mapcheck { file, class } => mapcheck(&file, class.as_deref()),
        Command::Verify {
            n,
            theorems,
            jobs,
            budget,
            coverage,
        } => verify(n, &theorems, jobs, budget, coverage),
        Command::Enumerate {
            n,
            canonical,
            count_only,
        } => enumerate(n, canonical, count_only),
        Command::Mine { goal, n } => mine(&goal, n),
        Command::Fixtures { corpus } => fixtures(&corpus),
    }
}

fn subject(file: &Path) -> String {
    file.file_stem().map_or_else(
        || file.display().to_string(),
        |s| s.to_string_lossy().into_owned(),
    )
}

fn validate(file: &Path) -> Outcome {
    let t = read_space(file)?;
    let mut r = Report::new();
    r.push(Record::new(
        subject(file),
        "valid",
        "true",
        format!("{} points, {} open sets", t.n(), t.opens().len()),
    ));
    Ok((r, true))
}

/// Class tokens (`pigdhat`) first, then full property tokens.
fn class_property(token: &str) -> Result<SetProperty, InputError> {
    token
        .parse::<ClosedClass>()
        .map(SetProperty::Closed)
        .or_else(|_| token.parse::<SetProperty>())
        .map_err(|_| InputError(format!("unknown class `{token}`")))
}

fn all_properties() -> Vec<SetProperty> {
    let mut props: Vec<SetProperty> = ClosedClass::ALL
        .into_iter()
        .map(SetProperty::Closed)
        .collect();
    props.extend(OpenKind::ALL.into_iter().map(SetProperty::Open));
    props.extend(
        OpenKind::ALL
            .into_iter()
            .filter(|k| k.is_intrinsic() && *k != OpenKind::Open)
            .map(SetProperty::CoOpen),
    );
    props
}

fn families(file: &Path, class: &str) -> Outcome {
    let t = read_space(file)?;
    let table = ClassTable::build(&t);
    let props = if class == "all" {
        all_properties()
    } else {
        vec![class_property(class)?]
    };
    let mut r = Report::new();
    for p in props {
        let fam = table.family(p);
        let sets: Vec<String> = fam.iter().map(|s| t.show(s)).collect();
        r.push(Record::new(
            subject(file),
            p.token(),
            fam.len().to_string(),
            sets.join(" "),
        ));
    }
    Ok((r, true))
}

fn classify(file: &Path, set: &str, class: &str) -> Outcome {
    let t = read_space(file)?;
    let a = parse_set(t.labels(), set).map_err(InputError)?;
    let p = class_property(class)?;
    let table = ClassTable::build(&t);
    let member = table.has(p, a);
    let mut r = Report::new();
    r.push(Record::new(
        subject(file),
        p.token(),
        member.to_string(),
        t.show(a),
    ));
    Ok((r, member))
}

fn normality(file: &Path, kind: Option<&str>) -> Outcome {
    let t = read_space(file)?;
    let table = ClassTable::build(&t);
    let kinds = match kind {
        Some(k) => vec![k.parse::<NormalityKind>()?],
        None => NormalityKind::ALL.to_vec(),
    };
    let mut r = Report::new();
    let mut all = true;
    for k in kinds {
        let v = is_normal_kind(&table, k);
        all &= v.holds;
        let witness = v
            .witness
            .map(|(a, b)| format!("witness A={} B={}", t.show(a), t.show(b)))
            .unwrap_or_default();
        r.push(Record::new(
            subject(file),
            k.token(),
            if v.holds { "HOLDS" } else { "FAILS" },
            witness,
        ));
    }
    // a listing of every kind is informational; a single kind is a question
    Ok((r, kind.is_none() || all))
}

fn diagram_records(name: &str, t: &Topology, r: &mut Report) -> bool {
    let table = ClassTable::build(t);
    let sets = check_implication_diagram(&table);
    let kinds = check_normality_diagram(&NormalityProfile::of(&table));
    let mut ok = true;
    if let Some((arrow, a)) = sets.violation {
        ok = false;
        r.push(Record::new(
            name,
            "set-diagram",
            "VIOLATION",
            format!("{arrow} fails at A={}", t.show(a)),
        ));
    }
    if let Some((a, b)) = kinds.violation {
        ok = false;
        r.push(Record::new(
            name,
            "normality-diagram",
            "VIOLATION",
            format!("{a} => {b}"),
        ));
    }
    ok
}

fn diagram(file: Option<&Path>, n: Option<usize>) -> Outcome {
    let mut r = Report::new();
    let (spaces, label): (Vec<(String, Topology)>, String) = match (file, n) {
        (Some(f), _) => (vec![(subject(f), read_space(f)?)], subject(f)),
        (None, Some(n)) => (
            atlas::enumerate_topologies(n)?
                .into_iter()
                .enumerate()
                .map(|(i, t)| (format!("n{n}#{i}"), t))
                .collect(),
            format!("n{n}"),
        ),
        (None, None) => return Err(InputError("give a FILE or --n N".into())),
    };
    let mut violations = 0;
    for (name, t) in &spaces {
        if !diagram_records(name, t, &mut r) {
            violations += 1;
        }
    }
    let summary = format!(
        "spaces={} set-arrows={} normality-arrows={} violations={violations}",
        spaces.len(),
        implication_arrows().len(),
        normality_arrows().len()
    );
    r.push(Record::new(
        label,
        "diagram",
        if violations == 0 {
            "holds"
        } else {
            "VIOLATION"
        },
        summary,
    ));
    Ok((r, violations == 0))
}

fn mapcheck(file: &Path, class: Option<&str>) -> Outcome {
    let text =
        fs::read_to_string(file).map_err(|e| InputError(format!("{}: {e}", file.display())))?;
    let base = file.parent().unwrap_or(Path::new("."));
    let spec = parse_map_spec(&text, base)?;
    let dom = read_space(&spec.from)?;
    let cod = read_space(&spec.to)?;
    let image = resolve_assignment(&spec, &dom, &cod)?;
    let (dt, ct) = (ClassTable::build(&dom), ClassTable::build(&cod));
    let f = MapRef::new(&dt, &ct, &image);
    let preds: Vec<MapPredicate> = match class {
        Some(c) => vec![c.parse()?],
        None => MapClass::ALL.into_iter().map(MapClass::predicate).collect(),
    };
    let mut r = Report::new();
    let mut all = true;
    for p in preds {
        let v = f.violation(p);
        all &= v.is_none();
        let witness = v
            .map(|s| {
                let end = if matches!(p, MapPredicate::Image { .. }) {
                    &dom
                } else {
                    &cod
                };
                format!("fails at {}", end.show(s))
            })
            .unwrap_or_default();
        r.push(Record::new(
            subject(file),
            p.token(),
            v.is_none().to_string(),
            witness,
        ));
    }
    let homeo = f.is_homeomorphism();
    if class.is_none() {
        r.push(Record::new(
            subject(file),
            "homeomorphism",
            homeo.to_string(),
            "",
        ));
    }
    Ok((r, class.is_none() || all))
}

fn verify(
    n: usize,
    theorems: &str,
    jobs: Option<usize>,
    budget: u128,
    coverage: CoverageArg,
) -> Outcome {
    let ids = TheoremId::parse_list(theorems)?;
    if ids.is_empty() {
        return Err(InputError("no theorems selected".into()));
    }
    let config = HarnessConfig {
        scope: n,
        budget,
        jobs: jobs.unwrap_or_else(harness::default_jobs),
        coverage: match coverage {
            CoverageArg::Auto => CoveragePolicy::Auto,
            CoverageArg::Labeled => CoveragePolicy::Labeled,
            CoverageArg::UpToRelabeling => CoveragePolicy::UpToRelabeling,
        },
    };
    let start = Instant::now();
    eprintln!(
        "verifying {} theorem(s) over spaces with 1..={n} points",
        ids.len()
    );
    let ledgers = harness::run(&config, &ids)?;
    for l in &ledgers {
        eprintln!("  {}: {}", l.check_id(), l.summary());
    }
    eprintln!("done in {:.2?}", start.elapsed());
    let hard_ok = ledgers
        .iter()
        .all(|l| !l.theorem.is_hard() || l.counterexamples == 0);
    Ok((harness::ledger_report(&ledgers), hard_ok))
}

fn enumerate(n: usize, canonical: bool, count_only: bool) -> Outcome {
    let mut r = Report::new();
    if canonical {
        let reps = atlas::canonical_spaces(n)?;
        if count_only {
            println!("{}", reps.len());
            return Ok((r, true));
        }
        for (i, c) in reps.iter().enumerate() {
            r.push(Record::new(
                format!("n{n}c#{i}"),
                c.key.to_string(),
                c.labeled_count.to_string(),
                c.topology.compact(),
            ));
        }
    } else {
        let all = atlas::enumerate_topologies(n)?;
        if count_only {
            println!("{}", all.len());
            return Ok((r, true));
        }
        for (i, t) in all.iter().enumerate() {
            r.push(Record::new(
                format!("n{n}#{i}"),
                "topology",
                t.opens().len().to_string(),
                t.compact(),
            ));
        }
    }
    Ok((r, true))
}

fn mine(goal: &str, n: usize) -> Outcome {
    let g: Goal = goal.parse()?;
    let outcome = atlas::mine(&g, n)?;
    let mut r = Report::new();
    let found = outcome.is_found();
    match outcome {
        MineOutcome::Found { topology, key, set } => {
            let mut w = format!("space={}", topology.compact());
            if let Some(a) = set {
                w.push_str(&format!(" A={}", topology.show(a)));
            }
            r.push(Record::new(
                format!("n{}", topology.n()),
                key.to_string(),
                "found",
                w,
            ));
        }
        MineOutcome::NotFound { spaces_scanned } => {
            r.push(Record::new(
                format!("n<={n}"),
                g.to_string(),
                "not-found",
                format!("spaces scanned={spaces_scanned}"),
            ));
        }
    }
    Ok((r, found))
}

fn fixtures(corpus: &Path) -> Outcome {
    let results = atlas::run_corpus(corpus)?;
    let mut r = Report::new();
    for res in &results {
        r.extend(res.report());
    }
    let ok = results.iter().all(|f| f.status == FixtureStatus::Confirmed);
    Ok((r, ok))
}
