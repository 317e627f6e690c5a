//! The `groebner-sat` command line.
//!
//! ```text
//! groebner-sat solve  [flags] <file.cnf | ->
//! groebner-sat encode [flags] <file.cnf | ->
//! groebner-sat gb     [flags] <polys.txt | ->
//! groebner-sat bench  [flags]
//! groebner-sat verify [flags] <file.cnf> <basis.txt>
//! ```
//!
//! `solve` exits 10 on SAT and 20 on UNSAT; every command exits 1 on error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::buchberger::{groebner_basis, BuchbergerConfig, Criteria, GroebnerBasis};
use crate::cnf::random::{random_3cnf, seeded_rng};
use crate::cnf::{brute_force_sat, parse_dimacs, CnfFormula, DEFAULT_ORACLE_LIMIT};
use crate::encoder::{encode_formula, EncodingMode};
use crate::polyring::{Ideal, MonomialOrder, PolySystem};
use crate::satdecide::{certifies, decide, DecideConfig, Decision, Status};

pub const EXIT_SAT: i32 = 10;
pub const EXIT_UNSAT: i32 = 20;
pub const EXIT_ERROR: i32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "groebner-sat",
    version,
    about = "3-SAT through Buchberger's algorithm"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Encoding: `boolean` adds z^2 - z per variable, `bare` uses clause products only
    #[arg(long, global = true)]
    mode: Option<EncodingMode>,
    /// Monomial order: lex, grlex or grevlex
    #[arg(long, global = true)]
    order: Option<MonomialOrder>,
    /// Disable the coprime and chain pair criteria
    #[arg(long, global = true)]
    no_criteria: bool,
    /// Always run Buchberger, even when the clause-count bounds decide
    #[arg(long, global = true)]
    no_precheck: bool,
    /// Do not compute a satisfying assignment
    #[arg(long, global = true)]
    no_extract: bool,
    /// Maximum number of S-polynomial reductions per Buchberger run
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Seed for `bench`
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Variables per bench instance: N or LO-HI
    #[arg(long, global = true, default_value = "3-6")]
    k: String,
    /// Clauses per bench instance: N or LO-HI
    #[arg(long, global = true, default_value = "0-10")]
    n: String,
    /// Number of bench instances
    #[arg(long, global = true, default_value_t = 100)]
    count: usize,
    /// Emit one JSON record per instance instead of human-readable text
    #[arg(long, global = true)]
    records: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide a DIMACS CNF formula
    Solve {
        #[arg(default_value = "-")]
        path: String,
    },
    /// Print the polynomial system of a DIMACS CNF formula
    Encode {
        #[arg(default_value = "-")]
        path: String,
    },
    /// Reduced Gröbner basis of a polynomial list, one per line
    Gb {
        #[arg(default_value = "-")]
        path: String,
    },
    /// Random 3-CNF instances checked against brute force
    Bench,
    /// Check a stored basis against a formula
    Verify {
        formula: String,
        certificate: String,
    },
}

impl Cli {
    fn criteria(&self) -> Criteria {
        if self.no_criteria {
            Criteria::NONE
        } else {
            Criteria::ALL
        }
    }

    fn decide_config(&self) -> DecideConfig {
        DecideConfig {
            mode: self.mode.unwrap_or_default(),
            order: self.order.unwrap_or_default(),
            criteria: self.criteria(),
            use_precheck: !self.no_precheck,
            extract_model: !self.no_extract,
            budget: self.budget,
            ..DecideConfig::default()
        }
    }
}

/// One line of machine-readable output per decided instance.
#[derive(Debug, Serialize)]
pub struct ResultRecord {
    pub status: Status,
    pub model: Option<Vec<i64>>,
    pub basis_size: usize,
    pub pairs: u64,
    pub ms: f64,
}

impl ResultRecord {
    pub fn from_decision(d: &Decision) -> Self {
        ResultRecord {
            status: d.status,
            model: d.model.as_ref().map(|m| m.to_dimacs()),
            basis_size: d.stats.basis_size,
            pairs: d.stats.pairs,
            ms: (d.stats.elapsed.as_secs_f64() * 1e6).round() / 1e3,
        }
    }
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Runs with the process's stdin, stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(
        args,
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

pub fn run_with<I, T>(
    args: I,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_ERROR
                }
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Solve { path } => read_input(path, stdin).and_then(|t| solve(&cli, &t)),
        Command::Encode { path } => read_input(path, stdin).and_then(|t| encode(&cli, &t)),
        Command::Gb { path } => read_input(path, stdin).and_then(|t| gb(&cli, &t)),
        Command::Bench => bench(&cli),
        Command::Verify {
            formula,
            certificate,
        } => read_input(formula, stdin).and_then(|f| {
            let cert = read_input(certificate, &mut io::empty())?;
            verify(&cli, &f, &cert)
        }),
    };
    match result {
        Ok((text, code)) => {
            if out
                .write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return EXIT_ERROR;
            }
            code
        }
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

type Outcome = Result<(String, i32), Failure>;

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn solve(cli: &Cli, text: &str) -> Outcome {
    let formula = parse_dimacs(text)?;
    let d = decide(&formula, &cli.decide_config())?;
    let mut out = String::new();
    if cli.records {
        out.push_str(&serde_json::to_string(&ResultRecord::from_decision(&d))?);
        out.push('\n');
    } else {
        let _ = writeln!(out, "{}", d.status);
        if let Some(model) = &d.model {
            out.push_str("model:");
            for lit in model.to_dimacs() {
                let _ = write!(out, " {lit}");
            }
            out.push('\n');
        }
        let decided_by = if d.certificate.is_some() {
            "groebner"
        } else {
            "precheck"
        };
        let _ = writeln!(
            out,
            "stats: decided_by={decided_by} pairs={} reductions={} basis_size={}",
            d.stats.pairs, d.stats.reductions, d.stats.basis_size
        );
    }
    let code = match d.status {
        Status::Sat => EXIT_SAT,
        Status::Unsat => EXIT_UNSAT,
    };
    Ok((out, code))
}

fn encode(cli: &Cli, text: &str) -> Outcome {
    let formula = parse_dimacs(text)?;
    let mode = cli.mode.unwrap_or_default();
    let ideal = encode_formula(&formula, mode, cli.order.unwrap_or_default())?;
    let basis =
        GroebnerBasis::from_polys(ideal.nvars(), ideal.order(), ideal.generators().to_vec());
    Ok((basis.to_system(Some(mode.to_string())).render(), 0))
}

fn gb(cli: &Cli, text: &str) -> Outcome {
    let system = PolySystem::parse(text, cli.order)?;
    let ideal = Ideal::new(system.header.nvars, system.header.order, system.polys)?;
    let config = BuchbergerConfig {
        criteria: cli.criteria(),
        budget: cli.budget,
        ..Default::default()
    };
    let (basis, _) = groebner_basis(&ideal, &config)?;
    Ok((basis.to_system(system.header.mode).render(), 0))
}

fn verify(cli: &Cli, formula_text: &str, cert_text: &str) -> Outcome {
    let formula = parse_dimacs(formula_text)?;
    let system = PolySystem::parse(cert_text, cli.order)?;
    let mode = match (cli.mode, &system.header.mode) {
        (Some(m), _) => m,
        (None, Some(name)) => name.parse()?,
        (None, None) => EncodingMode::default(),
    };
    let cert = GroebnerBasis::from_polys(system.header.nvars, system.header.order, system.polys);
    if !certifies(&formula, &cert, mode)? {
        return Ok(("INVALID\n".to_string(), EXIT_ERROR));
    }
    let text = if cert.is_unit() {
        "VALID unsat certificate\n"
    } else {
        "VALID groebner basis of an ideal containing the encoding\n"
    };
    Ok((text.to_string(), 0))
}

fn parse_range(flag: &str, value: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad = || Failure(format!("--{flag} expects N or LO-HI, got {value:?}"));
    let (lo, hi) = match value.split_once('-') {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let v = value.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

#[derive(Serialize)]
struct BenchRecord {
    instance: usize,
    k: usize,
    n: usize,
    oracle: Option<Status>,
    agree: bool,
    #[serde(flatten)]
    result: Option<ResultRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn bench(cli: &Cli) -> Outcome {
    let ks = parse_range("k", &cli.k)?;
    let ns = parse_range("n", &cli.n)?;
    if *ks.start() < 3 {
        return Err(Failure("--k must be at least 3 for random 3-CNF".into()));
    }
    let config = cli.decide_config();
    let mut rng = seeded_rng(cli.seed);
    let instances: Vec<CnfFormula> = (0..cli.count)
        .map(|_| {
            let k = rng.random_range(ks.clone());
            let n = rng.random_range(ns.clone());
            random_3cnf(&mut rng, k, n)
        })
        .collect::<Result<_, _>>()?;

    let records: Vec<BenchRecord> = instances
        .par_iter()
        .enumerate()
        .map(|(instance, formula)| {
            let oracle =
                (formula.num_vars() <= DEFAULT_ORACLE_LIMIT).then(|| {
                    match brute_force_sat(formula) {
                        Ok(Some(_)) => Status::Sat,
                        _ => Status::Unsat,
                    }
                });
            let (result, error, agree) = match decide(formula, &config) {
                Ok(d) => {
                    let model_ok = d
                        .model
                        .as_ref()
                        .is_none_or(|m| formula.evaluate(m).unwrap_or(false));
                    let agree = model_ok && oracle.is_none_or(|o| o == d.status);
                    (Some(ResultRecord::from_decision(&d)), None, agree)
                }
                Err(e) => (None, Some(e.to_string()), false),
            };
            BenchRecord {
                instance,
                k: formula.num_vars(),
                n: formula.clauses().len(),
                oracle,
                agree,
                result,
                error,
            }
        })
        .collect();

    let agreed = records.iter().filter(|r| r.agree).count();
    let mut out = String::new();
    if cli.records {
        #[derive(Serialize)]
        struct Header<'a> {
            seed: u64,
            k: &'a str,
            n: &'a str,
            count: usize,
            mode: EncodingMode,
            order: MonomialOrder,
        }
        out.push_str(&serde_json::to_string(&Header {
            seed: cli.seed,
            k: &cli.k,
            n: &cli.n,
            count: cli.count,
            mode: config.mode,
            order: config.order,
        })?);
        out.push('\n');
        for r in &records {
            out.push_str(&serde_json::to_string(r)?);
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{{\"agreement\":{agreed},\"total\":{}}}",
            records.len()
        );
    } else {
        let _ = writeln!(
            out,
            "bench seed={} k={} n={} count={} mode={} order={}",
            cli.seed, cli.k, cli.n, cli.count, config.mode, config.order
        );
        for r in &records {
            let oracle = r.oracle.map_or("-".to_string(), |s| s.to_string());
            let status = match (&r.result, &r.error) {
                (Some(res), _) => res.status.to_string(),
                (None, Some(e)) => format!("error({e})"),
                (None, None) => "-".to_string(),
            };
            let _ = writeln!(
                out,
                "#{} k={} n={} status={status} oracle={oracle} {}",
                r.instance,
                r.k,
                r.n,
                if r.agree { "agree" } else { "DISAGREE" }
            );
        }
        let _ = writeln!(out, "agreement {agreed}/{}", records.len());
    }
    let code = if agreed == records.len() {
        0
    } else {
        EXIT_ERROR
    };
    Ok((out, code))
}
