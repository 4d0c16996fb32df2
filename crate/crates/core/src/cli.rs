//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 scale
//! guard refusal. [`run`] executes a command line in-process and returns the
//! captured output; the binary only prints it.

use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::coinvariants::orbit_series;
use crate::combinatorics::{is_prime, partitions_of, Partition, SkewTuple};
use crate::error::Error;
use crate::formulas::{gamma_p_series, gamma_top_degree};
use crate::model::{build_tensor_cohomology, total_series};
use crate::poincare::PoincareSeries;
use crate::sandwich::{Convention, SandwichEngine, DEFAULT_MAX_DEGREE};
use crate::verify::{self, Grid, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SCALE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "glcohom", version, about = "Poincaré series of H*_P(GL, S^μ(r) gl) and H*_P(GL, Γ^p(r) gl)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Path {
    Orbit,
    Sandwich,
    Both,
}

impl Path {
    fn name(self) -> &'static str {
        match self {
            Path::Orbit => "orbit",
            Path::Sandwich => "sandwich",
            Path::Both => "both",
        }
    }
}

#[derive(clap::Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
    /// Record the elapsed time in the metadata.
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Series of S^{μ(r)} gl.
    Sym {
        /// Partition such as "2,1".
        #[arg(long)]
        mu: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value = "orbit")]
        path: Path,
        /// Largest d accepted by the sandwich route.
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_d: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Series of Γ^{p(r)} gl.
    Gamma {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Series of ⊗^{d(r)} gl.
    Tensor {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Series of one sandwich s_left M s_right over all summands.
    Ext {
        /// Tuple of partitions such as "2,1|1".
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_d: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Run the cross-checks over a grid.
    Verify {
        #[arg(long, default_value_t = 4)]
        dmax: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        primes: Vec<u64>,
        #[arg(long, default_value_t = 2)]
        rmax: u32,
        #[arg(long, default_value_t = 5)]
        naive_dmax: usize,
        #[arg(long, default_value_t = 6)]
        model_dmax: usize,
        #[arg(long, default_value_t = 3)]
        lemma_dmax: usize,
        /// Drop the sign twist on the right (negative control).
        #[arg(long, hide = true)]
        corrupt_convention: bool,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// CSV of sym series over a grid.
    Table {
        #[arg(long, default_value_t = 4)]
        dmax: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        primes: Vec<u64>,
        #[arg(long, default_value_t = 2)]
        rmax: u32,
    },
}

/// Captured result of one command line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::ScaleGuard { .. } => EXIT_SCALE,
            Error::NegativeCoefficient { .. } => EXIT_VERIFY_FAILED,
            _ => EXIT_USAGE,
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

pub fn main() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(e) => Outcome::error(&e),
    }
}

fn parse<T: FromStr<Err = Error>>(s: &str) -> crate::Result<T> {
    s.parse()
}

fn check_prime(p: u64) -> crate::Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn execute(command: Command) -> crate::Result<Outcome> {
    let start = Instant::now();
    match command {
        Command::Sym {
            mu,
            p,
            r,
            path,
            max_d,
            output,
        } => {
            let mu: Partition = parse(&mu)?;
            check_prime(p)?;
            if mu.weight() == 0 {
                return Err(Error::InvalidShape("μ must have positive weight".into()));
            }
            let orbit = match path {
                Path::Sandwich => None,
                _ => Some(orbit_series(&mu, p, r)?),
            };
            let sandwich = match path {
                Path::Orbit => None,
                _ => Some(SandwichEngine::default().with_max_degree(max_d).sandwich_series(&mu.to_composition(), p, r)?),
            };
            let params = json!({
                "kind": "sym",
                "mu": mu.to_string(),
                "p": p,
                "r": r,
                "path": path.name(),
            });
            let title = format!("S^({mu}) p={p} r={r}, {} route", path.name());
            let main = orbit.clone().or_else(|| sandwich.clone()).expect("one route runs");
            let mut doc = Document::new(params, main, title);
            if let (Some(a), Some(b)) = (&orbit, &sandwich) {
                doc.extra.insert("agree".into(), Value::Bool(a == b));
                doc.extra.insert("series_sandwich".into(), series_json(b));
                doc.second = Some(b.clone());
            }
            Ok(doc.render(output, start))
        }
        Command::Gamma { p, r, output } => {
            check_prime(p)?;
            let series = gamma_p_series(p, r)?;
            let formula = gamma_top_degree(1, p, r)?;
            let mut doc = Document::new(json!({"kind": "gamma", "p": p, "r": r}), series, format!("Γ^{p} p={p} r={r}"));
            doc.extra.insert("formula_top_degree".into(), big(&formula));
            Ok(doc.render(output, start))
        }
        Command::Tensor { d, p, r, output } => {
            let series = total_series(&build_tensor_cohomology(d, p, r)?);
            let doc = Document::new(json!({"kind": "tensor", "d": d, "p": p, "r": r}), series, format!("⊗^{d} p={p} r={r}"));
            Ok(doc.render(output, start))
        }
        Command::Ext {
            left,
            right,
            p,
            r,
            max_d,
            output,
        } => {
            let left: SkewTuple = parse(&left)?;
            let right: SkewTuple = parse(&right)?;
            check_prime(p)?;
            let series = SandwichEngine::default().with_max_degree(max_d).ext_series(&left, &right, p, r)?;
            let params = json!({
                "kind": "ext",
                "left": left.to_string(),
                "right": right.to_string(),
                "p": p,
                "r": r,
            });
            let doc = Document::new(params, series, format!("s_({left}) M s_({right}) p={p} r={r}"));
            Ok(doc.render(output, start))
        }
        Command::Verify {
            dmax,
            primes,
            rmax,
            naive_dmax,
            model_dmax,
            lemma_dmax,
            corrupt_convention,
            format,
        } => {
            for &p in &primes {
                check_prime(p)?;
            }
            if primes.is_empty() {
                return Err(Error::Parse("at least one prime is needed".into()));
            }
            let grid = Grid {
                dmax,
                primes,
                rmax,
                naive_dmax,
                model_dmax,
                lemma_dmax,
                convention: if corrupt_convention {
                    Convention::UntwistedRight
                } else {
                    Convention::RowsAlternating
                },
            };
            let report = verify::run(&grid)?;
            let text = match format {
                Format::Json => format!("{}\n", serde_json::to_string(&report_json(&report)).expect("json")),
                _ => report_pretty(&report),
            };
            let mut out = Outcome::ok(text);
            if !report.passed() {
                out.code = EXIT_VERIFY_FAILED;
                for c in report.checks.iter().filter(|c| !c.passed) {
                    out.stderr
                        .push_str(&format!("{} failed at {}\n", c.name, c.counterexample.as_deref().unwrap_or("?")));
                }
            }
            Ok(out)
        }
        Command::Table { dmax, primes, rmax } => {
            for &p in &primes {
                check_prime(p)?;
            }
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["mu", "p", "r", "degree", "dimension"]).expect("csv");
            for d in 1..=dmax {
                for mu in partitions_of(d) {
                    for &p in &primes {
                        for r in 0..=rmax {
                            for (degree, dim) in orbit_series(&mu, p, r)?.sparse() {
                                w.write_record([
                                    mu.to_string(),
                                    p.to_string(),
                                    r.to_string(),
                                    degree.to_string(),
                                    dim.to_string(),
                                ])
                                .expect("csv");
                            }
                        }
                    }
                }
            }
            Ok(Outcome::ok(String::from_utf8(w.into_inner().expect("csv")).expect("utf-8")))
        }
    }
}

fn big(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

fn series_json(s: &PoincareSeries) -> Value {
    Value::Array(
        s.sparse()
            .iter()
            .map(|(d, c)| Value::Array(vec![Value::from(*d), big(c)]))
            .collect(),
    )
}

struct Document {
    params: Value,
    series: PoincareSeries,
    /// The sandwich series when both routes ran.
    second: Option<PoincareSeries>,
    extra: Map<String, Value>,
    title: String,
}

impl Document {
    fn new(params: Value, series: PoincareSeries, title: String) -> Self {
        Document {
            params,
            series,
            second: None,
            extra: Map::new(),
            title,
        }
    }

    fn render(self, output: Output, start: Instant) -> Outcome {
        let elapsed_ms = start.elapsed().as_millis();
        let text = match output.format {
            Format::Json => {
                let mut metadata = Map::new();
                metadata.insert("engine".into(), Value::from(env!("CARGO_PKG_NAME")));
                metadata.insert("version".into(), Value::from(env!("CARGO_PKG_VERSION")));
                if output.timing {
                    metadata.insert("elapsed_ms".into(), Value::from(elapsed_ms as u64));
                }
                let mut doc = self.extra;
                doc.insert("params".into(), self.params);
                doc.insert("series".into(), series_json(&self.series));
                doc.insert("euler_char".into(), big(&self.series.euler_characteristic()));
                doc.insert("top_degree".into(), self.series.top_degree().map_or(Value::Null, Value::from));
                doc.insert("metadata".into(), Value::Object(metadata));
                format!("{}\n", serde_json::to_string(&Value::Object(doc)).expect("json"))
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let mut header = vec!["degree", "dimension"];
                if self.second.is_some() {
                    header.push("sandwich_dimension");
                }
                w.write_record(&header).expect("csv");
                let top = self.series.top_degree().max(self.second.as_ref().and_then(|s| s.top_degree()));
                for degree in 0..=top.unwrap_or(0) {
                    let a = self.series.coefficient(degree);
                    let b = self.second.as_ref().map(|s| s.coefficient(degree));
                    if top.is_none() || (a == BigInt::from(0) && b.iter().all(|b| *b == BigInt::from(0))) {
                        continue;
                    }
                    let mut row = vec![degree.to_string(), a.to_string()];
                    row.extend(b.map(|b| b.to_string()));
                    w.write_record(&row).expect("csv");
                }
                String::from_utf8(w.into_inner().expect("csv")).expect("utf-8")
            }
            Format::Pretty => {
                let mut s = format!("{}\n  series:      {}\n", self.title, self.series);
                if let Some(b) = &self.second {
                    s.push_str(&format!("  sandwich:    {b}\n"));
                }
                for (k, v) in &self.extra {
                    if k != "series_sandwich" {
                        s.push_str(&format!("  {:<12} {v}\n", format!("{}:", k.replace('_', " "))));
                    }
                }
                s.push_str(&format!("  euler char:  {}\n", self.series.euler_characteristic()));
                match self.series.top_degree() {
                    Some(t) => s.push_str(&format!("  top degree:  {t}\n")),
                    None => s.push_str("  top degree:  none\n"),
                }
                if output.timing {
                    s.push_str(&format!("  elapsed:     {elapsed_ms} ms\n"));
                }
                s
            }
        };
        Outcome::ok(text)
    }
}

fn report_json(report: &Report) -> Value {
    let g = &report.grid;
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            let mut m = Map::new();
            m.insert("name".into(), Value::from(c.name));
            m.insert("passed".into(), Value::Bool(c.passed));
            m.insert("cases".into(), Value::from(c.cases));
            m.insert("counterexample".into(), c.counterexample.clone().map_or(Value::Null, Value::from));
            m.insert("note".into(), c.note.clone().map_or(Value::Null, Value::from));
            Value::Object(m)
        })
        .collect();
    let conventions: Vec<Value> = report
        .conventions
        .iter()
        .map(|c| {
            json!({
                "convention": c.convention.name(),
                "path_equivalence": c.path_equivalence,
                "in_use": c.convention == g.convention,
            })
        })
        .collect();
    json!({
        "passed": report.passed(),
        "grid": {
            "dmax": g.dmax,
            "primes": g.primes,
            "rmax": g.rmax,
            "naive_dmax": g.naive_dmax,
            "model_dmax": g.model_dmax,
            "lemma_dmax": g.lemma_dmax,
            "convention": g.convention.name(),
        },
        "checks": checks,
        "conventions": conventions,
    })
}

fn report_pretty(report: &Report) -> String {
    let g = &report.grid;
    let mut s = format!(
        "grid: d ≤ {}, p ∈ {:?}, r ≤ {}, enumeration d ≤ {}, model d ≤ {}, one-sided d ≤ {}, convention {}\n",
        g.dmax,
        g.primes,
        g.rmax,
        g.naive_dmax,
        g.model_dmax,
        g.lemma_dmax,
        g.convention.name()
    );
    for c in &report.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        s.push_str(&format!("{status}  {} ({} cases)\n", c.name, c.cases));
        if let Some(x) = &c.counterexample {
            s.push_str(&format!("      counterexample: {x}\n"));
        }
        if let Some(n) = &c.note {
            s.push_str(&format!("      note: {n}\n"));
        }
    }
    s.push_str("conventions (path equivalence):\n");
    for c in &report.conventions {
        let status = if c.path_equivalence { "pass" } else { "fail" };
        let mark = if c.convention == g.convention { " (in use)" } else { "" };
        s.push_str(&format!("  {:<22} {status}{mark}\n", c.convention.name()));
    }
    s.push_str(if report.passed() { "all checks passed\n" } else { "verification FAILED\n" });
    s
}
