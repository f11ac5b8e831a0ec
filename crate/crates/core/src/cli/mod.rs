//! Command-line front end: `value`, `table`, `poly` and `verify`.
//!
//! [`run`] parses arguments, does the work and returns the text destined for
//! stdout and stderr together with the exit code, so the binary is a thin
//! wrapper and the whole interface can be exercised in-process.
//!
//! Exit codes: 0 success, 1 bad arguments or other errors, 2 brute-force
//! budget exceeded, 3 no closed form for the requested `(m, s)`, 4 a
//! verification suite reported failures.

mod render;
pub mod suites;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cyclo::CycloElem;
use crate::error::Error;
use crate::exactnum::Rat;
use crate::qstirling::{rstirling1, QPoint, StirlingKind, StirlingParams, StirlingTable};
use crate::seqlib;
use crate::zeta::{self, Method, ZetaParams};

pub use render::Format;
use render::{Cell, Doc, Table};
pub use suites::{Suite, SuiteConfig};

#[derive(Debug, Parser)]
#[command(name = "qmzv", version, about = "Exact finite q-multiple zeta values at roots of unity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Also print decimal approximations (labelled as such)
    #[arg(long, global = true)]
    pub approx: bool,
    /// Brute-force tuple budget (default: QMZV_BUDGET or 2000000)
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,
    /// Worker threads for verification sweeps
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one value Z_n(zeta_n; m, s)
    Value {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Product)]
        method: MethodArg,
    },
    /// Dump a table of values
    Table {
        #[arg(value_enum)]
        table: TableKind,
        /// Single row for this n (zeta), or lambda = 1/n (degenerate Bernoulli)
        #[arg(long)]
        n: Option<usize>,
        #[arg(long = "n-max", alias = "nmax")]
        n_max: Option<usize>,
        /// Exponent s (zeta, Stirling) or order alpha (Bernoulli of order alpha)
        #[arg(long)]
        s: Option<u32>,
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// symbolic, a rational such as 2/3, or zeta:<n>
        #[arg(long, default_value = "symbolic")]
        q: String,
        /// Bernoulli family
        #[arg(long, value_enum, default_value_t = BernoulliKind::Classical)]
        kind: BernoulliKind,
    },
    /// Recover Z_n(zeta_n; m, s) as a polynomial in n
    Poly {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        s: u32,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long = "n-max", alias = "nmax")]
        n_max: Option<usize>,
        #[arg(long = "m-max", alias = "mmax")]
        m_max: Option<usize>,
        #[arg(long = "s-max", alias = "smax")]
        s_max: Option<u32>,
        /// Truncation order for the generating-function suite
        #[arg(long)]
        trunc: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Brute,
    Product,
    Stirling,
    Bell,
    Det,
    Closed,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Brute => Method::Brute,
            MethodArg::Product => Method::Product,
            MethodArg::Stirling => Method::Stirling,
            MethodArg::Bell => Method::Bell,
            MethodArg::Det => Method::Det,
            MethodArg::Closed => Method::Closed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Zeta,
    Stirling1,
    Stirling2,
    Rstirling,
    Bernoulli,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BernoulliKind {
    Classical,
    Norlund,
    Degenerate,
    Order,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => 2,
        Error::UnsupportedClosedForm { .. } => 3,
        _ => 1,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: 1, stdout: String::new(), stderr: text },
            };
        }
    };
    let (code, doc) = match execute(&cli) {
        Ok(pair) => pair,
        Err(e) => return Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    let text = doc.render(cli.common.format, cli.common.approx);
    match &cli.common.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Outcome { code, stdout: text, stderr: String::new() },
    }
}

fn execute(cli: &Cli) -> crate::Result<(i32, Doc)> {
    let budget = cli.common.budget.unwrap_or_else(zeta::default_budget);
    match &cli.command {
        Command::Value { n, m, s, method } => {
            let p = ZetaParams::new(*n, *m, *s)?;
            let v = match Method::from(*method) {
                Method::Brute => zeta::zeta_brute_with_budget(p, budget)?,
                other => zeta::zeta_value(p, other)?,
            };
            Ok((0, Doc::Value(v)))
        }
        Command::Table { table, n, n_max, s, r, q, kind } => {
            Ok((0, Doc::Table(build_table(*table, *n, *n_max, *s, *r, q, *kind)?)))
        }
        Command::Poly { m, s } => Ok((0, Doc::Poly { m: *m, s: *s, poly: zeta::zeta_poly_in_n(*m, *s)? })),
        Command::Verify { suite, n_max, m_max, s_max, trunc } => {
            let cfg = SuiteConfig { n_max: *n_max, m_max: *m_max, s_max: *s_max, trunc: *trunc, budget };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cli.common.jobs as usize)
                .build()
                .map_err(|e| Error::BadParams(format!("thread pool: {e}")))?;
            let targets: Vec<Suite> = match suite {
                Suite::All => Suite::EACH.to_vec(),
                one => vec![*one],
            };
            let reports: Vec<_> = targets
                .into_iter()
                .map(|t| {
                    let start = Instant::now();
                    let mut rs = pool.install(|| suites::run_suite(t, &cfg));
                    let report = rs.pop().expect("one report per suite");
                    report.finish(start.elapsed().as_millis() as u64)
                })
                .collect();
            let code = if reports.iter().all(|r| r.passed()) { 0 } else { 4 };
            Ok((code, Doc::Verify { all: *suite == Suite::All, reports }))
        }
    }
}

fn build_table(
    kind: TableKind,
    n: Option<usize>,
    n_max: Option<usize>,
    s: Option<u32>,
    r: usize,
    q: &str,
    bkind: BernoulliKind,
) -> crate::Result<Table> {
    let mut t = Table::new(kind_name(kind));
    match kind {
        TableKind::Zeta => {
            let s = s.unwrap_or(1);
            t.param("s", s);
            let ns: Vec<usize> = match n {
                Some(n) => vec![n],
                None => (2..=n_max.unwrap_or(8)).collect(),
            };
            t.keys("n", Some("m"));
            for n in ns {
                let row = zeta::zeta_product(n, s, n.saturating_sub(1))?;
                t.row(n, row.iter().map(Cell::rat).collect());
            }
        }
        TableKind::Stirling1 | TableKind::Stirling2 => {
            let s = s.unwrap_or(1);
            let stirling_kind = if kind == TableKind::Stirling1 { StirlingKind::First } else { StirlingKind::Second };
            let params = StirlingParams::new(r, s, stirling_kind)?;
            let qp: QPoint = q.parse()?;
            let n_max = n_max.unwrap_or(6);
            t.param("r", r);
            t.param("s", s);
            t.param("q", &qp);
            t.keys("n", Some("k"));
            match qp {
                QPoint::Symbolic => {
                    let rows = StirlingTable::new(params, QPoint::symbolic_q()).rows(n_max);
                    for (n, row) in rows.iter().enumerate() {
                        t.row(n, row.iter().map(|p| Cell::text(p.to_string_in("q"))).collect());
                    }
                }
                QPoint::Rational(qv) => {
                    let rows = StirlingTable::new(params, qv).rows(n_max);
                    for (n, row) in rows.iter().enumerate() {
                        t.row(n, row.iter().map(Cell::rat).collect());
                    }
                }
                QPoint::RootOfUnity(ctx) => {
                    let rows = StirlingTable::new(params, ctx.zeta()).rows(n_max);
                    for (n, row) in rows.iter().enumerate() {
                        t.row(n, row.iter().map(cyclo_cell).collect());
                    }
                }
            }
        }
        TableKind::Rstirling => {
            let n_max = n_max.unwrap_or(8);
            t.param("r", r);
            t.keys("n", Some("k"));
            for n in 0..=n_max {
                let row =
                    (0..=n).map(|k| Ok(Cell::rat(&Rat::from(rstirling1(n, k, r)?)))).collect::<crate::Result<_>>()?;
                t.row(n, row);
            }
        }
        TableKind::Bernoulli => {
            let n_max = n_max.unwrap_or(8);
            t.param("kind", bkind_name(bkind));
            t.keys("k", None);
            let cells: Vec<Cell> = match bkind {
                BernoulliKind::Classical => seqlib::bernoulli_numbers(n_max).iter().map(Cell::rat).collect(),
                BernoulliKind::Norlund => seqlib::norlund_table(n_max).iter().map(Cell::rat).collect(),
                BernoulliKind::Order => {
                    let alpha = s.unwrap_or(1);
                    t.param("alpha", alpha);
                    seqlib::bernoulli_order_table(n_max, alpha).iter().map(Cell::rat).collect()
                }
                BernoulliKind::Degenerate => match n {
                    Some(n) => {
                        let lambda = Rat::new(1, n as i64);
                        t.param("lambda", &lambda);
                        seqlib::degen_bernoulli_table(n_max, &lambda)?.iter().map(Cell::rat).collect()
                    }
                    None => {
                        t.param("lambda", "symbolic");
                        seqlib::degen_bernoulli_symbolic_table(n_max)
                            .iter()
                            .map(|p| Cell::text(p.to_string_in("lambda")))
                            .collect()
                    }
                },
            };
            for (k, c) in cells.into_iter().enumerate() {
                t.row(k, vec![c]);
            }
        }
    }
    Ok(t)
}

fn cyclo_cell(e: &CycloElem) -> Cell {
    match e.as_rational() {
        Ok(r) => Cell::rat(&r),
        Err(_) => Cell::text(e.to_string()),
    }
}

fn kind_name(k: TableKind) -> &'static str {
    match k {
        TableKind::Zeta => "zeta",
        TableKind::Stirling1 => "stirling1",
        TableKind::Stirling2 => "stirling2",
        TableKind::Rstirling => "rstirling",
        TableKind::Bernoulli => "bernoulli",
    }
}

fn bkind_name(k: BernoulliKind) -> &'static str {
    match k {
        BernoulliKind::Classical => "classical",
        BernoulliKind::Norlund => "norlund",
        BernoulliKind::Degenerate => "degenerate",
        BernoulliKind::Order => "order",
    }
}
