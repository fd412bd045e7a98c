mod report;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dix::catalog::{catalog, entry, CatalogEntry};
use dix::fdg::{build_fdg, fd_separation, parse_fdg_query, SeparationQuery};
use dix::inner::{
    all_decoding_tuples, ccc_lp, fixed_composite_region_pruned, fixed_lp_with, fractional_lp_with, maximal_decoding_sets,
    parse_configs, server_subfamilies, DecodingConfig, InnerOptions,
};
use dix::lp::{solve_checked, InequalitySystem, LinearProgram};
use dix::outer::{
    allserver_region, fl_lp, grouping_pm_lp, parse_grouping_spec, search_upper, touch_specialized_lp, Family,
    OuterOptions, SubmodMode, DEFAULT_FME_MAX_N,
};
use dix::sumcap::sumcap;
use dix::{parse_problem, MsgSet, Problem, Rational};
use rayon::prelude::*;
use report::{render, write_catalog, write_records, CatalogRow, Format, Record};
use thiserror::Error;

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] dix::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("writing output: {0}")]
    Write(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(dix::Error::CapExceeded { .. }) => 3,
            CliError::Core(dix::Error::Invariant(_)) => 4,
            CliError::Core(_) | CliError::Usage(_) | CliError::Read { .. } => 2,
            CliError::Write(_) => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Capacity bounds for distributed index coding problems.
#[derive(Parser)]
#[command(name = "dix", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Composite coding inner bound (fixed, fractional or cooperative).
    Inner(InnerArgs),
    /// Grouping polymatroidal outer bound.
    Outer(OuterArgs),
    /// Inner bound against the outer ladder for one problem.
    Sumcap(SumcapArgs),
    /// Sum-capacity verdicts for the 218-problem catalog.
    Catalog(CatalogArgs),
    /// Rate region projected by Fourier-Motzkin elimination.
    Region(RegionArgs),
    /// fd-separation query on the functional dependence graph.
    Fdg(FdgArgs),
}

#[derive(Args)]
struct ProblemArgs {
    /// Problem text such as `(1|2),(2|1)`, `@file`, or a catalog number.
    #[arg(short, long)]
    problem: String,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct InnerArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Decoding configuration file; several blocks give fractional coding.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Per-receiver rate weights, comma separated.
    #[arg(long)]
    weights: Option<String>,
    /// Cooperative composite coding over every nonempty subset of active servers.
    #[arg(long)]
    ccc: bool,
    /// With --ccc, maximize over every decoding message set tuple.
    #[arg(long, requires = "ccc")]
    all_d: bool,
    /// Variable cap for generated programs.
    #[arg(long, env = "DIX_CAP_VARS")]
    cap_vars: Option<usize>,
}

#[derive(Copy, Clone, ValueEnum)]
enum SubmodArg {
    Full,
    Elemental,
}

#[derive(Args)]
struct OuterOpts {
    #[arg(long, value_enum, default_value = "elemental")]
    submod: SubmodArg,
    /// Drop the fd-separation equalities.
    #[arg(long)]
    no_fd_separation: bool,
    /// Lattice-point cap for generated programs.
    #[arg(long, env = "DIX_CAP_VARS")]
    cap_vars: Option<usize>,
}

impl OuterOpts {
    fn options(&self) -> OuterOptions {
        let mut o = OuterOptions {
            submod: match self.submod {
                SubmodArg::Full => SubmodMode::Full,
                SubmodArg::Elemental => SubmodMode::Elemental,
            },
            fd_separation: !self.no_fd_separation,
            ..OuterOptions::default()
        };
        if let Some(cap) = self.cap_vars {
            o.max_lattice = cap;
        }
        o
    }
}

#[derive(Args)]
struct OuterArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Grouping text (or `@file`), e.g. `touch`, `fd2:1;4`, `intersect:a,b`.
    #[arg(long, conflicts_with = "family")]
    grouping: Option<String>,
    /// all_server, individual_touch, fd2_all_pairs, fd2_bridge_pairs, touch_cross_fd2, fl or touch_specialized.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    weights: Option<String>,
    #[command(flatten)]
    opts: OuterOpts,
}

#[derive(Args)]
struct SumcapArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    #[command(flatten)]
    output: OutputArgs,
    #[command(flatten)]
    opts: OuterOpts,
}

#[derive(Args)]
struct CatalogArgs {
    #[command(flatten)]
    output: OutputArgs,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Restrict to these problem numbers, comma separated.
    #[arg(long, value_delimiter = ',')]
    only: Vec<u16>,
    #[command(flatten)]
    opts: OuterOpts,
}

#[derive(Copy, Clone, ValueEnum)]
enum RegionMode {
    FixedComposite,
    Allserver,
}

#[derive(Args)]
struct RegionArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    #[arg(long, value_enum, default_value = "fixed-composite")]
    mode: RegionMode,
    /// Decoding sets for the fixed-composite mode as `1;1,2;...` (default `[n] \ A_i`).
    #[arg(long)]
    d: Option<String>,
    /// Largest message count accepted for projection.
    #[arg(long, default_value_t = DEFAULT_FME_MAX_N)]
    max_n: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FdgArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    /// `U: x1 y1,2; W: x2; Z: x3 x4` (or `@file`).
    #[arg(long)]
    query: String,
}

fn read_arg(text: &str) -> CliResult<String> {
    match text.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_string(), source }),
        None => Ok(text.to_string()),
    }
}

fn load_problem(arg: &ProblemArgs) -> CliResult<(Problem, String, Option<&'static CatalogEntry>)> {
    let t = arg.problem.trim();
    if !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()) {
        let no: u16 = t.parse().map_err(|_| CliError::Usage(format!("no catalog problem {t}")))?;
        let e = entry(no).ok_or_else(|| CliError::Usage(format!("no catalog problem {t}")))?;
        return Ok((e.problem.clone(), format!("#{no}"), Some(e)));
    }
    let text = read_arg(t)?;
    let p = parse_problem(&text, None)?;
    let label = p.sequence();
    Ok((p, label, None))
}

fn parse_weights(text: Option<&str>, n: usize) -> CliResult<Vec<Rational>> {
    let Some(text) = text else { return Ok(vec![Rational::ONE; n]) };
    let w = text
        .split(',')
        .map(|t| Rational::parse(t.trim()).map_err(|e| CliError::Usage(format!("bad weight: {e}"))))
        .collect::<CliResult<Vec<_>>>()?;
    if w.len() != n {
        return Err(CliError::Usage(format!("{} weights given for {n} receivers", w.len())));
    }
    Ok(w)
}

fn open_out(path: &Option<PathBuf>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(io::BufWriter::new(fs::File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn solve_value(lp: &LinearProgram) -> CliResult<Rational> {
    Ok(solve_checked(lp)?.optimal_value()?)
}

fn expected_of(e: Option<&CatalogEntry>) -> Option<&Rational> {
    e.map(|e| &e.expected_sumcap)
}

/// `P=N_A D=({1},{1,2,3},...)`, listing the groups only when they differ from `N_A`.
fn describe_config(problem: &Problem, cfg: &DecodingConfig) -> String {
    let na = problem.active_servers();
    let groups = if cfg.p.iter().all(|p| *p == na) {
        "P=N_A".to_string()
    } else {
        let list: Vec<String> = cfg.p.iter().map(|p| p.to_string()).collect();
        format!("P=({})", list.join(", "))
    };
    let sets: Vec<String> = cfg.d.iter().map(|d| d.to_string()).collect();
    format!("{groups} D=({})", sets.join(","))
}

fn cmd_inner(a: &InnerArgs) -> CliResult<()> {
    let (problem, label, cat) = load_problem(&a.problem)?;
    let weights = parse_weights(a.weights.as_deref(), problem.n())?;
    let mut opts = InnerOptions::default();
    if let Some(cap) = a.cap_vars {
        opts.max_vars = cap;
    }
    let configs = match &a.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|source| CliError::Read { path: path.display().to_string(), source })?;
            parse_configs(&text, &problem)?
        }
        None => vec![DecodingConfig::standard(&problem)?],
    };
    let start = Instant::now();
    let (bound, detail, value) = if a.ccc {
        let family = server_subfamilies(&problem.active_servers());
        if a.all_d {
            let tuples = all_decoding_tuples(&problem);
            let count = tuples.len();
            let values = tuples
                .par_iter()
                .map(|d| Ok(solve_checked(&ccc_lp(&problem, d, &family, &weights)?)?.optimal_value()?))
                .collect::<CliResult<Vec<Rational>>>()?;
            let best = values.into_iter().max().unwrap_or(Rational::ZERO);
            ("ccc", format!("{} server groups, {count} decoding tuples", family.len()), best)
        } else {
            let v = solve_value(&ccc_lp(&problem, &configs[0].d, &family, &weights)?)?;
            ("ccc", format!("{} server groups", family.len()), v)
        }
    } else if configs.len() == 1 {
        let v = solve_value(&fixed_lp_with(&problem, &configs[0], &weights, &opts)?)?;
        ("inner", describe_config(&problem, &configs[0]), v)
    } else {
        let v = solve_value(&fractional_lp_with(&problem, &configs, &weights, &opts)?)?;
        ("fractional", format!("{} configurations", configs.len()), v)
    };
    let ms = start.elapsed().as_millis();
    let unit = weights.iter().all(|w| *w == Rational::ONE);
    let rec = Record::new(&label, bound, detail, &value, ms).expect(expected_of(cat).filter(|_| unit && !a.ccc));
    let mut out = open_out(&a.output.out)?;
    write_records(&mut out, &[rec], a.output.format)?;
    Ok(())
}

fn cmd_outer(a: &OuterArgs) -> CliResult<()> {
    let (problem, label, _) = load_problem(&a.problem)?;
    let weights = parse_weights(a.weights.as_deref(), problem.n())?;
    let opts = a.opts.options();
    let start = Instant::now();
    let (detail, value) = match (&a.grouping, a.family.as_deref()) {
        (_, Some("fl")) => ("fl".to_string(), fl_lp(&problem, &weights, &opts)?.value()?),
        (_, Some("touch_specialized")) => {
            ("touch_specialized".to_string(), touch_specialized_lp(&problem, &weights, &opts)?.value()?)
        }
        (_, Some(name)) => {
            let family: Family = name.parse()?;
            let out = search_upper(&problem, family, &weights, &opts)?;
            let mut detail = format!("{family}: {} ({})", out.label, out.grouping);
            if !out.skipped.is_empty() {
                let names: Vec<&str> = out.skipped.iter().map(|s| s.label.as_str()).collect();
                detail.push_str(&format!("; skipped over cap: {}", names.join(" ")));
            }
            (detail, out.value)
        }
        (grouping, None) => {
            let text = read_arg(grouping.as_deref().unwrap_or("touch"))?;
            let g = parse_grouping_spec(&text, problem.n()).map_err(dix::Error::from)?.resolve(&problem)?;
            let v = grouping_pm_lp(&problem, &g, &weights, &opts)?.value()?;
            (format!("{} groups: {g}", g.m()), v)
        }
    };
    let ms = start.elapsed().as_millis();
    let rec = Record::new(&label, "outer", detail, &value, ms);
    let mut out = open_out(&a.output.out)?;
    write_records(&mut out, &[rec], a.output.format)?;
    Ok(())
}

fn catalog_row(no: Option<u16>, problem: &Problem, expected: Option<&Rational>, opts: &OuterOptions) -> CliResult<CatalogRow> {
    let v = sumcap(problem, no, opts)?;
    Ok(CatalogRow {
        problem_no: no,
        sequence: problem.sequence(),
        inner: v.inner.to_string(),
        outer: v.outer.to_string(),
        expected: expected.map(|e| e.to_string()),
        established: v.established,
        grouping_used: v.grouping,
        ms_inner: v.inner_time.as_millis(),
        ms_outer: v.outer_time.as_millis(),
    })
}

fn cmd_sumcap(a: &SumcapArgs) -> CliResult<()> {
    let (problem, _, cat) = load_problem(&a.problem)?;
    let row = catalog_row(cat.map(|e| e.problem_no), &problem, expected_of(cat), &a.opts.options())?;
    let mut out = open_out(&a.output.out)?;
    if a.output.format == Format::Text {
        let inner = Rational::parse(&row.inner).map_err(|e| CliError::Usage(e.to_string()))?;
        let outer = Rational::parse(&row.outer).map_err(|e| CliError::Usage(e.to_string()))?;
        if row.established {
            writeln!(out, "ESTABLISHED {} via {}", render(&inner), row.grouping_used)?;
        } else {
            writeln!(out, "UNRESOLVED [{}, {}] best grouping {}", render(&inner), render(&outer), row.grouping_used)?;
        }
    } else {
        write_catalog(&mut out, &[row], a.output.format)?;
    }
    Ok(())
}

fn cmd_catalog(a: &CatalogArgs) -> CliResult<()> {
    let opts = a.opts.options();
    let entries: Vec<&CatalogEntry> =
        catalog().iter().filter(|e| a.only.is_empty() || a.only.contains(&e.problem_no)).collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = a.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().map_err(|e| CliError::Usage(e.to_string()))?;
    let start = Instant::now();
    let rows: Vec<CatalogRow> = pool.install(|| {
        entries
            .par_iter()
            .map(|e| catalog_row(Some(e.problem_no), &e.problem, Some(&e.expected_sumcap), &opts))
            .collect::<CliResult<Vec<_>>>()
    })?;
    let mut out = open_out(&a.output.out)?;
    write_catalog(&mut out, &rows, a.output.format)?;
    out.flush()?;

    let total = rows.len();
    let inner_ok = rows.iter().filter(|r| Some(&r.inner) == r.expected.as_ref()).count();
    let outer_ok = rows.iter().filter(|r| Some(&r.outer) == r.expected.as_ref()).count();
    let basic = rows
        .iter()
        .filter(|r| Some(&r.outer) == r.expected.as_ref() && (r.grouping_used == "allserver" || r.grouping_used == "touch"))
        .count();
    let established = rows.iter().filter(|r| r.established).count();
    let mut err = io::stderr().lock();
    writeln!(err, "inner matches table: {inner_ok}/{total}")?;
    writeln!(err, "outer matches table: {outer_ok}/{total} ({basic} via all-server or individual touch)")?;
    writeln!(err, "established: {established}/{total}")?;
    for r in rows.iter().filter(|r| !r.established) {
        writeln!(
            err,
            "UNRESOLVED {} {}: inner {} best outer {} via {}",
            r.problem_no.unwrap_or(0),
            r.sequence,
            r.inner,
            r.outer,
            r.grouping_used
        )?;
    }
    writeln!(err, "elapsed: {:.1}s", start.elapsed().as_secs_f64())?;
    Ok(())
}

fn parse_decoding_sets(text: &str, problem: &Problem) -> CliResult<Vec<MsgSet>> {
    let n = problem.n();
    let parts: Vec<&str> = text.split(';').collect();
    if parts.len() != n {
        return Err(CliError::Usage(format!("{} decoding sets given for {n} receivers", parts.len())));
    }
    parts
        .iter()
        .map(|p| {
            let mut s = MsgSet::EMPTY;
            for tok in p.split(',') {
                let i: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Usage(format!("malformed decoding set `{p}`")))?;
                if !(1..=n).contains(&i) {
                    return Err(CliError::Usage(format!("message {i} out of range 1..={n}")));
                }
                s = s.with(i);
            }
            Ok(s)
        })
        .collect()
}

fn cmd_region(a: &RegionArgs) -> CliResult<()> {
    let (problem, _, _) = load_problem(&a.problem)?;
    let n = problem.n();
    let sys: InequalitySystem = match a.mode {
        RegionMode::FixedComposite => {
            if n > a.max_n {
                return Err(dix::Error::cap("messages for region projection", n as u128, a.max_n as u128).into());
            }
            let d = match &a.d {
                Some(t) => parse_decoding_sets(t, &problem)?,
                None => maximal_decoding_sets(&problem),
            };
            fixed_composite_region_pruned(&problem, &d)?
        }
        RegionMode::Allserver => allserver_region(&problem, a.max_n)?,
    };
    let mut out = open_out(&a.out)?;
    for r in &sys.rows {
        writeln!(out, "{}", sys.format_row(r))?;
    }
    Ok(())
}

fn cmd_fdg(a: &FdgArgs) -> CliResult<()> {
    let (problem, _, _) = load_problem(&a.problem)?;
    let text = read_arg(&a.query)?;
    let (u, w, z) = parse_fdg_query(&text, problem.n()).map_err(dix::Error::from)?;
    let q = SeparationQuery::new(u, w, z)?;
    let g = build_fdg(&problem);
    let s = fd_separation(&g, &q)?;
    let mut out = io::stdout().lock();
    writeln!(out, "{}", if s.separated { "separated" } else { "not separated" })?;
    writeln!(out, "ancestral graph: {} vertices, {} edges", s.ancestral_vertices, s.ancestral_edges)?;
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    match &cli.command {
        Command::Inner(a) => cmd_inner(a),
        Command::Outer(a) => cmd_outer(a),
        Command::Sumcap(a) => cmd_sumcap(a),
        Command::Catalog(a) => cmd_catalog(a),
        Command::Region(a) => cmd_region(a),
        Command::Fdg(a) => cmd_fdg(a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dix: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
