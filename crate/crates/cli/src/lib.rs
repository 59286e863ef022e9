//! Command-line front end for the pentagon-algebra workbench.

pub mod format;
pub mod render;
pub mod reproduce;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use apa_core::census::{run_census, CensusQuery, DotSource, PropertyFilter};
use apa_core::constructions::{
    build_named_example, free_211_semigroup, letter_names, ltd_tensor, presented_semigroup,
    rtd_tensor, tensor_partial, FreeBand, Presentation, TensorMode, Word,
};
use apa_core::freeobjects::{build_ak, build_bx, build_cn, DEFAULT_SIZE_CAP};
use apa_core::pentagon::{
    classify, derived_relations, solution_symmetries, theorem_crosscheck, triple_map_check,
    ApaClassification, ApaStatus, DerivedRelations, PentagonAlgebra, SolutionSymmetries, Violation,
};
use apa_core::term::check_single;
use apa_core::{laws, structural_profile, CayleyTable, CheckResult, Error, StructuralProfile};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use format::{parse_algebra, print_algebra, AlgebraFile};
use reproduce::{run_reproduction, Config, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "apa",
    version,
    about = "Build, check and enumerate associative pentagon algebras"
)]
pub struct Cli {
    /// Worker threads for parallel scans (default: all cores)
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate and classify an algebra file
    Check(CheckArgs),
    /// Write a free object, free band or named example
    Build {
        #[command(subcommand)]
        what: BuildWhat,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Build the ⊗ algebra of a star on a free carrier
    Tensor(TensorArgs),
    /// Normal forms and table of a presented semigroup
    Present(PresentArgs),
    /// Enumerate all APAs over one dot or all dots of an order
    Census(CensusArgs),
    /// Recompute every published table and claim
    #[command(visible_alias = "paper")]
    Reproduce,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub file: PathBuf,
    /// Comma-separated properties that must hold
    #[arg(long, value_delimiter = ',')]
    pub prop: Vec<String>,
    /// Require validity, map agreement and no implication violations
    #[arg(long)]
    pub all: bool,
    /// Largest k for the P_k family
    #[arg(long, default_value_t = 4)]
    pub k: usize,
}

#[derive(Debug, Subcommand)]
pub enum BuildWhat {
    /// Free object A_k(n) of the right-normal P_k variety
    Ak {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Free object C_n of the x∗x∗z = z variety
    Cn {
        #[arg(long)]
        n: usize,
    },
    /// Free object B(X_n) of the x∗y∗z = y∗z variety
    Bx {
        #[arg(long)]
        n: usize,
    },
    /// Free band on up to three generators
    Freeband {
        #[arg(long)]
        gens: usize,
    },
    /// Free semigroup of x·y·z = y·z, as the APA (S,·,·)
    Free211 {
        #[arg(long)]
        gens: usize,
    },
    /// A named example
    Example {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(apa_core::constructions::EXAMPLE_NAMES))]
        name: String,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Mode {
    Ltd,
    Rtd,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CarrierKind {
    Freeband,
    Bounded,
}

#[derive(Debug, Args)]
pub struct TensorArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,
    /// Algebra file whose star (or only) table is used
    #[arg(long)]
    pub star: PathBuf,
    #[arg(long, value_enum, default_value = "freeband")]
    pub carrier: CarrierKind,
    /// Word length bound of the bounded carrier
    #[arg(long, default_value_t = 2)]
    pub bound: usize,
    /// Comma-separated generator names (default: the star's labels)
    #[arg(long, value_delimiter = ',')]
    pub names: Vec<String>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PresentArgs {
    /// Presentation file; the built-in seven-element one if omitted
    pub file: Option<PathBuf>,
    /// Longest words enumerated
    #[arg(long, default_value_t = 4)]
    pub bound: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    /// Order of the dot semigroups (with --all-dots)
    #[arg(long)]
    pub order: Option<usize>,
    /// Enumerate every dot semigroup of the order
    #[arg(long)]
    pub all_dots: bool,
    /// Fixed dot table from an algebra file
    #[arg(long, conflicts_with = "all_dots")]
    pub dot: Option<PathBuf>,
    #[arg(long)]
    pub up_to_iso: bool,
    /// Run the implication crosscheck on every algebra
    #[arg(long)]
    pub crosscheck: bool,
    #[arg(long)]
    pub ltd: Option<bool>,
    #[arg(long)]
    pub rtd: Option<bool>,
    #[arg(long)]
    pub p2: Option<bool>,
    #[arg(long)]
    pub q1: Option<bool>,
    #[arg(long)]
    pub r: Option<bool>,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

type CmdResult = std::result::Result<i32, Failure>;

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ValidationFailed(_)
            | Error::ConstructionInconsistent(_)
            | Error::InternalInconsistency(_)
            | Error::StarNotInVariety(_)
            | Error::TargetNotInVariety(_)
            | Error::NotAnApa(_)
            | Error::NotAssociative(_)
            | Error::DotNotAssociative(_)
            | Error::NotClosed(_)
            | Error::NonTerminating(_) => EXIT_FAILED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

struct Ctx<'a> {
    json: bool,
    seed: u64,
    out: &'a mut (dyn Write + Send),
}

impl Ctx<'_> {
    fn emit<T: Serialize>(&mut self, report: &T) -> std::result::Result<(), Failure> {
        let v = serde_json::to_value(report).map_err(|e| usage(e.to_string()))?;
        let text = if self.json {
            serde_json::to_string_pretty(&v).map_err(|e| usage(e.to_string()))? + "\n"
        } else {
            render::to_text(&v)
        };
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| usage(e.to_string()))
    }

    /// Writes an algebra to `-o`, or to the output stream.
    fn write_algebra(
        &mut self,
        file: &AlgebraFile,
        output: &Option<PathBuf>,
    ) -> std::result::Result<(), Failure> {
        let text = print_algebra(file);
        match output {
            Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
            None => self
                .out
                .write_all(text.as_bytes())
                .map_err(|e| usage(e.to_string())),
        }
    }
}

fn read(path: &PathBuf) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load(path: &PathBuf) -> std::result::Result<AlgebraFile, Failure> {
    parse_algebra(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Parses `args` (program name first) and runs the command, writing
/// reports to `out` and errors to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if code == EXIT_OK {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        seed: cli.seed,
        out,
    };
    match pool.install(|| dispatch(cli.command, &mut ctx)) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, ctx: &mut Ctx) -> CmdResult {
    match cmd {
        Command::Check(a) => cmd_check(a, ctx),
        Command::Build { what, output } => cmd_build(what, &output, ctx),
        Command::Tensor(a) => cmd_tensor(a, ctx),
        Command::Present(a) => cmd_present(a, ctx),
        Command::Census(a) => cmd_census(a, ctx),
        Command::Reproduce => cmd_reproduce(ctx),
    }
}

#[derive(Debug, Serialize)]
struct PropResult {
    name: String,
    holds: bool,
}

#[derive(Debug, Serialize)]
struct Solution {
    bijective: bool,
    symmetries: SolutionSymmetries,
}

#[derive(Debug, Serialize)]
struct PairReport {
    n: usize,
    status: ApaStatus,
    apa: bool,
    map_check: CheckResult,
    classification: Option<ApaClassification>,
    derived_relations: Option<DerivedRelations>,
    solution: Option<Solution>,
    crosscheck: Option<Vec<Violation>>,
    properties: Vec<PropResult>,
}

#[derive(Debug, Serialize)]
struct TableReport {
    n: usize,
    operation: &'static str,
    profile: StructuralProfile,
    p: Vec<(usize, bool)>,
    q1: bool,
    r: bool,
    properties: Vec<PropResult>,
}

/// Laws of a single table, by property name.
fn table_prop(t: &CayleyTable, name: &str) -> Option<bool> {
    let sp = || structural_profile(t);
    Some(match name {
        "associative" => t.is_associative().holds,
        "commutative" => t.is_commutative(),
        "right-normal" => sp().right_normal,
        "left-normal" => sp().left_normal,
        "band" => sp().band,
        "semilattice" => sp().semilattice,
        "group" => sp().group,
        "left-group" => sp().left_group,
        "left-zero" => sp().left_zero,
        "right-zero" => sp().right_zero,
        "rectangular-band" => sp().rectangular_band,
        "clifford" => sp().clifford,
        "monoid" => sp().is_monoid(),
        "r" => check_single(t, &laws::r()).holds,
        _ => {
            let (kind, k) = name.split_at(1);
            let k: usize = k.parse().ok().filter(|&k| k >= 1)?;
            match kind {
                "p" => check_single(t, &laws::p(k)).holds,
                "q" => check_single(t, &laws::q(k)).holds,
                _ => return None,
            }
        }
    })
}

const PAIR_PROPS: &str = "apa, pentagon, ltd, rtd, both, neither, gamma, map, bijective, commutative-solution, \
cocommutative, qybe, t-commutative, t-right-zero, false-distributive, crosscheck, dot-<law>, or a star law";
const TABLE_PROPS: &str =
    "associative, commutative, right-normal, left-normal, band, semilattice, group, \
left-group, left-zero, right-zero, rectangular-band, clifford, monoid, r, p<k>, q<k>";

fn cmd_check(a: CheckArgs, ctx: &mut Ctx) -> CmdResult {
    if a.k < 2 {
        return Err(usage("--k must be at least 2"));
    }
    let file = load(&a.file)?;
    if file.dot.is_none() || file.star.is_none() {
        let (t, operation) = match (&file.dot, &file.star) {
            (Some(d), None) => (d, "dot"),
            (None, Some(s)) => (s, "star"),
            _ => unreachable!("parser requires a section"),
        };
        let mut props = Vec::new();
        for name in &a.prop {
            let holds = table_prop(t, name)
                .ok_or_else(|| usage(format!("unknown property {name}; expected {TABLE_PROPS}")))?;
            props.push(PropResult {
                name: name.clone(),
                holds,
            });
        }
        let report = TableReport {
            n: t.n(),
            operation,
            profile: structural_profile(t),
            p: (1..=a.k)
                .map(|k| (k, check_single(t, &laws::p(k)).holds))
                .collect(),
            q1: check_single(t, &laws::q(1)).holds,
            r: check_single(t, &laws::r()).holds,
            properties: props,
        };
        ctx.emit(&report)?;
        let ok =
            report.properties.iter().all(|p| p.holds) && (!a.all || report.profile.associative);
        return Ok(if ok { EXIT_OK } else { EXIT_FAILED });
    }

    let p = file.algebra()?;
    let apa = p.is_apa();
    let classification = if apa { Some(classify(&p, a.k)?) } else { None };
    let derived = if apa {
        Some(derived_relations(&p)?)
    } else {
        None
    };
    let crosscheck = if apa {
        Some(theorem_crosscheck(&p)?)
    } else {
        None
    };
    let mut props = Vec::new();
    for name in &a.prop {
        let holds = pair_prop(
            &p,
            name,
            classification.as_ref(),
            derived.as_ref(),
            crosscheck.as_deref(),
        )
        .ok_or_else(|| usage(format!("unknown property {name}; expected {PAIR_PROPS}")))?;
        props.push(PropResult {
            name: name.clone(),
            holds,
        });
    }
    let map_check = triple_map_check(&p);
    let report = PairReport {
        n: p.n(),
        status: p.status().clone(),
        apa,
        map_check,
        classification,
        derived_relations: derived,
        solution: Some(Solution {
            bijective: p.solution_is_bijective(),
            symmetries: solution_symmetries(&p),
        }),
        crosscheck,
        properties: props,
    };
    ctx.emit(&report)?;
    let all_ok = !a.all
        || (report.apa
            && report.map_check.holds
            && report.crosscheck.as_ref().is_some_and(|c| c.is_empty())
            && report
                .derived_relations
                .as_ref()
                .is_some_and(|d| d.rel.holds && d.rel4.holds));
    let ok = report.properties.iter().all(|p| p.holds) && all_ok;
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

fn pair_prop(
    p: &PentagonAlgebra,
    name: &str,
    c: Option<&ApaClassification>,
    d: Option<&DerivedRelations>,
    v: Option<&[Violation]>,
) -> Option<bool> {
    let cls = |f: &dyn Fn(&ApaClassification) -> bool| c.is_some_and(f);
    Some(match name {
        "apa" => p.is_apa(),
        "pentagon" => p.status().is_pentagon_algebra(),
        "map" => triple_map_check(p).holds,
        "ltd" => cls(&|c| c.is_ltd),
        "rtd" => cls(&|c| c.is_rtd),
        "both" => cls(&|c| c.is_ltd && c.is_rtd),
        "neither" => cls(&|c| !c.is_ltd && !c.is_rtd),
        "gamma" => cls(&|c| c.determined_by.is_some()),
        "t-commutative" => cls(&|c| c.tprofile.commutative),
        "t-right-zero" => cls(&|c| c.tprofile.right_zero),
        "bijective" => p.solution_is_bijective(),
        "commutative-solution" => solution_symmetries(p).commutative.holds,
        "cocommutative" => solution_symmetries(p).cocommutative.holds,
        "qybe" => solution_symmetries(p).qybe.holds,
        "false-distributive" => d.is_some_and(|d| d.false_distributive.holds),
        "crosscheck" => v.is_some_and(|v| v.is_empty()),
        _ => match name.strip_prefix("dot-") {
            Some(law) => table_prop(p.dot(), law)?,
            None => table_prop(p.star(), name)?,
        },
    })
}

fn cmd_build(what: BuildWhat, output: &Option<PathBuf>, ctx: &mut Ctx) -> CmdResult {
    let file = match what {
        BuildWhat::Ak { k, n } => AlgebraFile::single_star(&build_ak(k, n)?.table),
        BuildWhat::Cn { n } => AlgebraFile::single_star(&build_cn(n)?.table),
        BuildWhat::Bx { n } => AlgebraFile::single_star(&build_bx(n)?.table),
        BuildWhat::Freeband { gens } => AlgebraFile::single_dot(FreeBand::new(gens)?.table()),
        BuildWhat::Free211 { gens } => {
            let t = free_211_semigroup(gens)?;
            AlgebraFile::pair(&t, &t)
        }
        BuildWhat::Example { name, n } => AlgebraFile::from_apa(&build_named_example(&name, n)?),
    };
    ctx.write_algebra(&file, output)?;
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct PartialReport {
    mode: &'static str,
    carrier_size: usize,
    bound: usize,
    law_instances_checked: usize,
    law_instances_skipped: usize,
    labels: Vec<String>,
}

fn cmd_tensor(a: TensorArgs, ctx: &mut Ctx) -> CmdResult {
    let file = load(&a.star)?;
    let star = file.either().clone();
    let names = if !a.names.is_empty() {
        a.names.clone()
    } else {
        star.labels()
            .map_or_else(|| letter_names(star.n()), <[String]>::to_vec)
    };
    if names.len() != star.n() {
        return Err(usage(format!(
            "{} names for {} generators",
            names.len(),
            star.n()
        )));
    }
    let mode = match a.mode {
        Mode::Ltd => TensorMode::Ltd,
        Mode::Rtd => TensorMode::Rtd,
    };
    match a.carrier {
        CarrierKind::Freeband => {
            let band = FreeBand::with_names(names)?;
            let p = match mode {
                TensorMode::Ltd => ltd_tensor(&star, &band)?,
                TensorMode::Rtd => rtd_tensor(&star, &band)?,
            };
            ctx.write_algebra(&AlgebraFile::from_apa(&p), &a.output)?;
        }
        CarrierKind::Bounded => {
            let carrier = apa_core::constructions::BoundedFreeSemigroup::with_names(
                names,
                a.bound,
                DEFAULT_SIZE_CAP,
            )?;
            let r = tensor_partial(mode, &star, &carrier)?;
            if let Some(path) = &a.output {
                let text = print_algebra(&AlgebraFile::single_star(&r.tensor));
                fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            ctx.emit(&PartialReport {
                mode: match mode {
                    TensorMode::Ltd => "ltd",
                    TensorMode::Rtd => "rtd",
                },
                carrier_size: carrier.size(),
                bound: a.bound,
                law_instances_checked: r.checked,
                law_instances_skipped: r.skipped,
                labels: r.labels,
            })?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct PresentReport {
    generators: usize,
    size: usize,
    normal_forms: Vec<String>,
    labels: Vec<String>,
    right_normal: bool,
}

fn cmd_present(a: PresentArgs, ctx: &mut Ctx) -> CmdResult {
    let pres = match &a.file {
        Some(path) => Presentation::parse(&read(path)?)
            .map_err(|e| usage(format!("{}: {e}", path.display())))?,
        None => apa_core::constructions::two_generator_seven(),
    };
    let s = presented_semigroup(&pres, a.bound)?;
    if let Some(path) = &a.output {
        fs::write(path, print_algebra(&AlgebraFile::single_star(&s.table)))
            .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    ctx.emit(&PresentReport {
        generators: pres.generators,
        size: s.table.n(),
        normal_forms: s.normal_forms.iter().map(Word::to_string).collect(),
        labels: s.table.labels().unwrap_or_default().to_vec(),
        right_normal: check_single(&s.table, &laws::right_normal()).holds,
    })?;
    Ok(EXIT_OK)
}

fn cmd_census(a: CensusArgs, ctx: &mut Ctx) -> CmdResult {
    let dots = match (&a.dot, a.all_dots, a.order) {
        (Some(path), false, None) => {
            let f = load(path)?;
            DotSource::Table(f.dot.clone().unwrap_or_else(|| f.either().clone()))
        }
        (None, true, Some(n)) => DotSource::AllOfOrder(n),
        _ => return Err(usage("give either --dot FILE or --all-dots --order N")),
    };
    let q = CensusQuery {
        dots,
        up_to_iso: a.up_to_iso,
        filter: PropertyFilter {
            ltd: a.ltd,
            rtd: a.rtd,
            star_p2: a.p2,
            star_q1: a.q1,
            star_r: a.r,
        },
        crosscheck: a.crosscheck,
    };
    let report = run_census(&q)?;
    ctx.emit(&report)?;
    Ok(if report.violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn cmd_reproduce(ctx: &mut Ctx) -> CmdResult {
    let r = run_reproduction(&Config {
        seed: ctx.seed,
        ..Config::default()
    });
    if ctx.json {
        ctx.emit(&r)?;
    } else {
        let mut text = String::new();
        for c in &r.checks {
            text.push_str(&format!(
                "{:<4}  {:<32}  {}{}\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.item,
                c.claim,
                if c.detail.is_empty() {
                    String::new()
                } else {
                    format!("  [{}]", c.detail)
                }
            ));
        }
        text.push_str(&format!(
            "{} passed, {} failed (seed {})\n",
            r.passed, r.failed, r.seed
        ));
        ctx.out
            .write_all(text.as_bytes())
            .map_err(|e| usage(e.to_string()))?;
    }
    Ok(if r.all_pass() { EXIT_OK } else { EXIT_FAILED })
}
