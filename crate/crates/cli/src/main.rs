use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polymat_core::harness::{run_suite, CorpusMode, CorpusSpec, RunOptions, SuiteKind};
use polymat_core::lexsegment::{default_shadow_depth, first_non_lexsegment_shadow};
use polymat_core::{
    graded_betti, has_linear_resolution, lexsegment, linear_quotients_failure,
    linear_segment_criterion, linear_segment_criterion_full, lq_all_orders_failure, parse_ideal,
    parse_monomial, polymatroidal_failure, qwlr_failure, sort_generators, Error, MonomialIdeal,
    OrderKind, PermBudget, VariableOrder,
};

const EXIT_VIOLATED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "polymat",
    version,
    about = "Checks for equigenerated monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a property of one ideal. Exit status 1 when it fails.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Print the graded Betti table.
    Betti {
        #[command(flatten)]
        input: IdealInput,
        /// Print `{"betti": [[i, j, value], ...]}` instead of the table.
        #[arg(long)]
        json: bool,
    },
    /// Describe the lexsegment L(u, v) and its shadows.
    Lexsegment {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        /// Number of variables (default: largest index in u or v).
        #[arg(long)]
        vars: Option<usize>,
        /// How many iterated shadows to test (default n*d).
        #[arg(long)]
        shadow_depth: Option<usize>,
    },
    /// Set the listed variables to 1.
    Localize {
        #[command(flatten)]
        input: IdealInput,
        /// Comma-separated one-based variable indices.
        #[arg(long, value_delimiter = ',', required = true)]
        at: Vec<usize>,
    },
    /// Run a verification suite and write a JSON report.
    Suite(SuiteArgs),
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Polymatroidal exchange property.
    Poly {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Linear quotients for an induced generator order.
    Lq {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        ordering: Ordering,
    },
    /// Quotients with linear resolution for an induced generator order.
    Qwlr {
        #[command(flatten)]
        input: IdealInput,
        #[command(flatten)]
        ordering: Ordering,
    },
}

#[derive(Args)]
struct IdealInput {
    /// Generators such as `x1*x3^2 + x2^2*x3`, or a JSON object.
    ideal: Option<String>,
    /// Read the ideal from a file instead.
    #[arg(long, conflicts_with = "ideal")]
    file: Option<PathBuf>,
    /// Number of variables (default: largest index used).
    #[arg(long)]
    vars: Option<usize>,
}

impl IdealInput {
    fn read(&self) -> Result<MonomialIdeal, Failure> {
        let text = match (&self.ideal, &self.file) {
            (Some(s), _) => s.clone(),
            (None, Some(p)) => fs::read_to_string(p)
                .map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?,
            (None, None) => return Err(Failure::usage("give an ideal or --file")),
        };
        Ok(parse_ideal(&text, self.vars)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Lex,
    Revlex,
}

impl From<KindArg> for OrderKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Lex => OrderKind::Lex,
            KindArg::Revlex => OrderKind::Revlex,
        }
    }
}

#[derive(Args)]
struct Ordering {
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Variable order as one-based indices, largest first, e.g. `3,2,1`.
    #[arg(long, value_delimiter = ',', conflicts_with = "all_orders")]
    order: Option<Vec<usize>>,
    /// Check every order of the variables.
    #[arg(long)]
    all_orders: bool,
}

impl Ordering {
    fn orders(&self, n: usize) -> Result<Vec<VariableOrder>, Failure> {
        match &self.order {
            Some(o) => Ok(vec![VariableOrder::from_one_based(o)?]),
            None if self.all_orders => {
                PermBudget::from_env()?.admit(n)?;
                Ok(VariableOrder::all(n).collect())
            }
            None => Ok(vec![VariableOrder::identity(n)]),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Theorem,
    Conjecture,
    Remark,
    Localization,
    Implications,
    Betti,
    Lexsegment,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(value_enum)]
    name: SuiteName,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long, value_enum, default_value = "exhaustive")]
    mode: ModeArg,
    /// Generators per ideal (random mode).
    #[arg(long)]
    m: Option<usize>,
    /// Number of ideals (random mode).
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Resume an exhaustive sweep at this subset mask.
    #[arg(long)]
    start_mask: Option<u64>,
    /// Keep one ideal per orbit under renaming variables.
    #[arg(long)]
    reduce_isomorphic: bool,
    /// Record wall time in the report.
    #[arg(long)]
    timing: bool,
    /// Write the report here (`-` for standard output).
    #[arg(long)]
    json: Option<PathBuf>,
}

impl SuiteArgs {
    fn kind(&self) -> SuiteKind {
        match self.name {
            SuiteName::Theorem => SuiteKind::Theorem,
            SuiteName::Conjecture => SuiteKind::Conjecture,
            SuiteName::Remark => SuiteKind::Remark,
            SuiteName::Localization => SuiteKind::Localization,
            SuiteName::Implications => SuiteKind::Implications,
            SuiteName::Betti => SuiteKind::Betti,
            SuiteName::Lexsegment => SuiteKind::Lexsegment,
        }
    }

    fn spec(&self) -> Result<Option<CorpusSpec>, Failure> {
        if matches!(self.name, SuiteName::Remark) {
            return Ok(None);
        }
        let (Some(n), Some(d)) = (self.n, self.d) else {
            return Err(Failure::usage("this suite needs --n and --d"));
        };
        let mut spec = match self.mode {
            ModeArg::Exhaustive => CorpusSpec::exhaustive(n, d),
            ModeArg::Random => CorpusSpec {
                mode: CorpusMode::Random,
                m: self.m,
                count: self.count,
                ..CorpusSpec::exhaustive(n, d)
            },
        };
        spec.seed = self.seed;
        spec.start_mask = self.start_mask;
        spec.reduce_isomorphic = self.reduce_isomorphic;
        Ok(Some(spec))
    }
}

/// A command that did not succeed: a violated property or a usage error.
struct Failure {
    code: u8,
    message: Option<String>,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: Some(msg.into()),
        }
    }

    fn violated() -> Self {
        Failure {
            code: EXIT_VIOLATED,
            message: None,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::usage(e.to_string())
    }
}

fn verdict(holds: bool) -> Result<(), Failure> {
    if holds {
        Ok(())
    } else {
        Err(Failure::violated())
    }
}

fn check(cmd: &CheckCommand) -> Result<(), Failure> {
    match cmd {
        CheckCommand::Poly { input } => {
            let ideal = input.read()?;
            let failure = polymatroidal_failure(&ideal)?;
            match &failure {
                None => println!("polymatroidal"),
                Some(w) => println!(
                    "not polymatroidal: u = {}, v = {}, no exchange for x{}\n{}",
                    w.u,
                    w.v,
                    w.var + 1,
                    serde_json::to_string(&w).expect("witness serializes")
                ),
            }
            verdict(failure.is_none())
        }
        CheckCommand::Lq { input, ordering } => {
            let ideal = input.read()?;
            let kind = OrderKind::from(ordering.kind);
            if ordering.all_orders {
                let fail = lq_all_orders_failure(&ideal, kind, PermBudget::from_env()?)?;
                match &fail {
                    None => println!("linear quotients under {kind} for every variable order"),
                    Some(f) => println!(
                        "{kind} {}: fails at generator {} ({}), earlier colon {}\n{}",
                        f.order,
                        f.failure.position,
                        f.failure.generator,
                        f.failure.earlier,
                        serde_json::to_string(f).expect("failure serializes")
                    ),
                }
                return verdict(fail.is_none());
            }
            let mut ok = true;
            for o in ordering.orders(ideal.n())? {
                let seq = sort_generators(&ideal, kind, &o)?;
                let shown: Vec<String> = seq.generators().iter().map(|g| g.to_string()).collect();
                match linear_quotients_failure(&seq) {
                    None => println!("{kind} {o}: linear quotients [{}]", shown.join(", ")),
                    Some(f) => {
                        ok = false;
                        println!(
                            "{kind} {o}: fails at generator {} ({}), earlier colon {} [{}]",
                            f.position,
                            f.generator,
                            f.earlier,
                            shown.join(", ")
                        );
                    }
                }
            }
            verdict(ok)
        }
        CheckCommand::Qwlr { input, ordering } => {
            let ideal = input.read()?;
            let kind = OrderKind::from(ordering.kind);
            let mut ok = true;
            for o in ordering.orders(ideal.n())? {
                let seq = sort_generators(&ideal, kind, &o)?;
                match qwlr_failure(&seq)? {
                    None => println!("{kind} {o}: quotients with linear resolution"),
                    Some(f) => {
                        ok = false;
                        let at = if f.position == 0 {
                            "the ideal itself".to_string()
                        } else {
                            format!("colon {}", f.position)
                        };
                        println!("{kind} {o}: {at} is not linear: {}", f.colon);
                    }
                }
            }
            verdict(ok)
        }
    }
}

fn lexsegment_cmd(
    u: &str,
    v: &str,
    vars: Option<usize>,
    depth: Option<usize>,
) -> Result<(), Failure> {
    let n = match vars {
        Some(n) => n,
        None => {
            let nu = parse_monomial(u, None)?.n();
            let nv = parse_monomial(v, None)?.n();
            nu.max(nv)
        }
    };
    let (u, v) = (parse_monomial(u, Some(n))?, parse_monomial(v, Some(n))?);
    let seg = lexsegment(&u, &v)?;
    let shown: Vec<String> = seg.elems().iter().map(|w| w.to_string()).collect();
    println!(
        "L({u}, {v}) = {{{}}} ({} monomials)",
        shown.join(", "),
        seg.len()
    );
    let depth = depth.unwrap_or_else(|| default_shadow_depth(n, u.degree()));
    match first_non_lexsegment_shadow(&u, &v, depth)? {
        Some(k) => println!("shadow {k} is not a lexsegment"),
        None => {
            println!("completely lexsegment (shadows checked to depth {depth})");
            println!(
                "two-condition criterion: {}",
                linear_segment_criterion(&u, &v)?
            );
            println!("full criterion: {}", linear_segment_criterion_full(&u, &v)?);
        }
    }
    println!(
        "linear resolution: {}",
        has_linear_resolution(&seg.to_ideal()?)?
    );
    Ok(())
}

fn suite(args: &SuiteArgs) -> Result<(), Failure> {
    let spec = args.spec()?;
    let opts = RunOptions {
        jobs: args.jobs,
        budget: PermBudget::from_env()?,
        timing: args.timing,
    };
    let report = run_suite(args.kind(), spec.as_ref(), &opts)?;
    match &args.json {
        Some(p) if p.as_os_str() == "-" => print!("{}", report.to_json()),
        Some(p) => {
            fs::write(p, report.to_json())
                .map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?;
            println!("{}", report.summary());
        }
        None => println!("{}", report.summary()),
    }
    verdict(report.passed())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Check(cmd) => check(&cmd),
        Command::Betti { input, json } => {
            let table = graded_betti(&input.read()?)?;
            if json {
                println!("{}", table.to_json());
            } else {
                print!("{table}");
            }
            Ok(())
        }
        Command::Lexsegment {
            u,
            v,
            vars,
            shadow_depth,
        } => lexsegment_cmd(&u, &v, vars, shadow_depth),
        Command::Localize { input, at } => {
            let ideal = input.read()?;
            let zero_based = at
                .iter()
                .map(|&i| {
                    i.checked_sub(1)
                        .ok_or_else(|| Failure::usage("variables start at 1"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            println!("{}", ideal.localize(&zero_based)?);
            Ok(())
        }
        Command::Suite(args) => suite(&args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Some(msg) = f.message {
                eprintln!("error: {msg}");
            }
            ExitCode::from(f.code)
        }
    }
}
