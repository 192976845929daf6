//! Command-line front end: `zdg`, `bs`, `md`, and `verify` subcommands.
//!
//! Exit codes: 0 when everything requested passed and no search budget ran
//! out, 1 otherwise; clap reports usage errors with its own code.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::construction::{bs_of_zdg, run_verification, BsPartition, CheckStatus, VerifyMode};
use crate::export;
use crate::graph::Graph;
use crate::resolving::{
    coverage_lower_bound, equidistant_family_bound, greedy_upper_bound, min_resolving_bnb_with,
    min_resolving_exhaustive, BnbOptions, DimensionReport, Method, ResolvingCertificate,
    DEFAULT_BUDGET,
};
use crate::ring::{zero_divisor_graph, Modulus};

#[derive(Parser, Debug)]
#[command(
    name = "zdmd",
    version,
    about = "Zero-divisor graphs of Z_n, barycentric subdivisions, and exact metric dimension"
)]
pub struct Cli {
    /// Seed for randomized corpora (reserved; the current commands are
    /// deterministic).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Construct and export the zero-divisor graph of Z_n.
    Zdg {
        /// Modulus n >= 2.
        #[arg(value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Construct and export the barycentric subdivision of the zero-divisor
    /// graph of Z_n, with canonical partition labels when n = p*q.
    Bs {
        /// Modulus n >= 2.
        #[arg(value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compute the metric dimension of BS(Γ(Z_n)) or of a JSON graph file.
    Md {
        /// Modulus n; the graph solved is BS(Γ(Z_n)).
        #[arg(long, conflicts_with = "file", required_unless_present = "file",
              value_parser = clap::value_parser!(u64).range(2..))]
        n: Option<u64>,
        /// JSON graph file to solve instead of a modulus.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SolveModeArg::Bnb)]
        mode: SolveModeArg,
        /// Candidate sets / nodes allowed; overrides the ZDMD_BUDGET
        /// environment variable.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        budget: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the verification checks over a grid of prime pairs (p, q).
    Verify {
        /// Prime p, or an inclusive range like 2..7.
        #[arg(long)]
        p: String,
        /// Prime q, or an inclusive range like 3..13.
        #[arg(long)]
        q: String,
        #[arg(long, value_enum, default_value_t = VerifyModeArg::Fast)]
        mode: VerifyModeArg,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this path instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveModeArg {
    /// Lexicographic subset scan; smallest witness, exact.
    Exhaustive,
    /// Branch and bound over the pair-cover formulation; exact.
    Bnb,
    /// Greedy upper bound and coverage lower bound only; no search.
    Bounds,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyModeArg {
    Fast,
    Full,
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Zdg { n, out } => cmd_zdg(n, &out),
        Command::Bs { n, out } => cmd_bs(n, &out),
        Command::Md {
            n,
            file,
            mode,
            budget,
            out,
        } => cmd_md(n, file, mode, budget, &out),
        Command::Verify { p, q, mode, out } => cmd_verify(&p, &q, mode, &out),
    }
}

fn write_output(out: &OutputArgs, content: &str) -> Result<()> {
    match &out.out {
        Some(path) => fs::write(path, content)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{content}"),
    }
    Ok(())
}

fn graph_summary(g: &Graph) -> String {
    let mut s = format!("{} vertices, {} edges\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {} -- {}", g.display_name(u), g.display_name(v));
    }
    for v in g.vertices() {
        if g.degree(v) == 0 {
            let _ = writeln!(s, "  {}", g.display_name(v));
        }
    }
    s
}

fn export_graph(g: &Graph, header: &str, out: &OutputArgs) -> Result<i32> {
    let content = match out.format {
        Format::Dot => export::to_dot(g),
        Format::Json => format!("{}\n", export::to_json(g)),
        Format::Text => format!("{header}: {}", graph_summary(g)),
        Format::Csv => bail!("csv output applies to the verify command"),
    };
    write_output(out, &content)?;
    Ok(0)
}

fn cmd_zdg(n: u64, out: &OutputArgs) -> Result<i32> {
    let m = Modulus::new(n).expect("clap enforces n >= 2");
    let g = zero_divisor_graph(m);
    if g.vertex_count() == 0 {
        eprintln!("note: Z_{n} has no zero divisors ({n} is prime); the graph is empty");
    }
    export_graph(&g, &format!("zero-divisor graph of Z_{n}"), out)
}

fn cmd_bs(n: u64, out: &OutputArgs) -> Result<i32> {
    let m = Modulus::new(n).expect("clap enforces n >= 2");
    let (g, part) = bs_of_zdg(m);
    if g.vertex_count() == 0 {
        eprintln!("note: Z_{n} has no zero divisors ({n} is prime); the graph is empty");
    }
    let header = match part {
        Some(_) => format!("BS of the zero-divisor graph of Z_{n} (canonical labels)"),
        None => format!("BS of the zero-divisor graph of Z_{n}"),
    };
    export_graph(&g, &header, out)
}

fn budget_or_default(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("ZDMD_BUDGET")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_BUDGET)
}

fn solve(
    g: &Graph,
    part: Option<&BsPartition>,
    mode: SolveModeArg,
    budget: u64,
) -> Result<DimensionReport> {
    // a labelled subdivision carries a free lower bound: the a-side family
    let hint = part
        .and_then(|p| equidistant_family_bound(g, &p.a_side()).ok())
        .unwrap_or(1);
    let report = match mode {
        SolveModeArg::Exhaustive => min_resolving_exhaustive(g, g.vertex_count(), budget)?,
        SolveModeArg::Bnb => min_resolving_bnb_with(
            g,
            &BnbOptions {
                budget,
                lower_bound_hint: hint,
                initial_incumbent: None,
            },
        )?,
        SolveModeArg::Bounds => {
            let witness = greedy_upper_bound(g)?;
            let lower = coverage_lower_bound(g)?.max(hint).min(witness.len());
            let upper = witness.len();
            DimensionReport {
                lower,
                upper,
                exact: lower == upper,
                witness: Some(witness),
                method: Method::BranchAndBound,
                tested: 0,
                budget_exhausted: false,
            }
        }
    };
    Ok(report)
}

fn cmd_md(
    n: Option<u64>,
    file: Option<PathBuf>,
    mode: SolveModeArg,
    budget: Option<u64>,
    out: &OutputArgs,
) -> Result<i32> {
    let budget = budget_or_default(budget);
    let (g, part, source) = match (n, file) {
        (Some(n), None) => {
            let (g, part) = bs_of_zdg(Modulus::new(n).expect("clap enforces n >= 2"));
            (g, part, format!("BS of the zero-divisor graph of Z_{n}"))
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(&path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            let g = export::from_json(&text)?;
            (g, None, path.display().to_string())
        }
        _ => unreachable!("clap enforces exactly one source"),
    };

    let started = Instant::now();
    let report = solve(&g, part.as_ref(), mode, budget)?;
    let elapsed = started.elapsed();

    let witness_labels: Option<Vec<String>> = report
        .witness
        .as_ref()
        .map(|w| w.iter().map(|&v| g.display_name(v)).collect());

    let content = match out.format {
        Format::Json => {
            let certificate = report.witness.as_ref().map(|w| {
                ResolvingCertificate::new(&g.distances(), w.clone())
                    .expect("witness resolves")
                    .to_json()
            });
            let doc = serde_json::json!({
                "source": source,
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "method": report.method.to_string(),
                "lower": report.lower,
                "upper": report.upper,
                "exact": report.exact,
                "witness": report.witness,
                "witness_labels": witness_labels,
                "tested": report.tested,
                "budget_exhausted": report.budget_exhausted,
                "elapsed_seconds": elapsed.as_secs_f64(),
                "certificate": certificate,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("plain data"))
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "graph: {source} ({} vertices, {} edges)",
                g.vertex_count(),
                g.edge_count()
            );
            let _ = writeln!(s, "method: {}", report.method);
            if report.exact {
                let _ = writeln!(s, "dimension: {} (exact)", report.upper);
            } else {
                let _ = writeln!(
                    s,
                    "dimension: in [{}, {}] (not exact)",
                    report.lower, report.upper
                );
            }
            if let Some(labels) = &witness_labels {
                let _ = writeln!(s, "witness: {{{}}}", labels.join(", "));
            }
            let _ = writeln!(s, "tested: {}", report.tested);
            let _ = writeln!(s, "budget exhausted: {}", report.budget_exhausted);
            let _ = writeln!(s, "elapsed: {:.3}s", elapsed.as_secs_f64());
            s
        }
        Format::Csv | Format::Dot => bail!("md supports text or json output"),
    };
    write_output(out, &content)?;
    Ok(if report.budget_exhausted { 1 } else { 0 })
}

/// Parses `7` or an inclusive range `2..7` into the primes it contains.
fn primes_in_spec(spec: &str) -> Result<Vec<u64>> {
    let (lo, hi) = match spec.split_once("..") {
        Some((a, b)) => {
            let lo: u64 = a.trim().parse().context("range start must be an integer")?;
            let hi: u64 = b.trim().parse().context("range end must be an integer")?;
            (lo, hi)
        }
        None => {
            let v: u64 = spec.trim().parse().context("expected a prime or a..b range")?;
            (v, v)
        }
    };
    if lo > hi {
        bail!("empty range {spec}");
    }
    Ok((lo..=hi).filter(|&v| crate::ring::is_prime(v)).collect())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

fn cmd_verify(p_spec: &str, q_spec: &str, mode: VerifyModeArg, out: &OutputArgs) -> Result<i32> {
    let ps = primes_in_spec(p_spec)?;
    let qs = primes_in_spec(q_spec)?;
    let pairs: Vec<(u64, u64)> = ps
        .iter()
        .flat_map(|&p| qs.iter().filter(move |&&q| q > p).map(move |&q| (p, q)))
        .collect();
    if pairs.is_empty() {
        bail!("no prime pairs with p < q in --p {p_spec} --q {q_spec}");
    }
    let mode = match mode {
        VerifyModeArg::Fast => VerifyMode::Fast,
        VerifyModeArg::Full => VerifyMode::Full,
    };

    let mut reports = Vec::new();
    for &(p, q) in &pairs {
        reports.push(run_verification(p, q, mode)?);
    }

    let all_passed = reports.iter().all(|r| r.all_passed());
    let content = match out.format {
        Format::Csv => {
            let mut s = String::from("p,q,check,status,detail\n");
            for r in &reports {
                for c in &r.checks {
                    let _ = writeln!(
                        s,
                        "{},{},{},{},{}",
                        r.p,
                        r.q,
                        c.name,
                        c.status,
                        csv_field(&c.detail)
                    );
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            let mut totals = (0usize, 0usize, 0usize);
            for r in &reports {
                let _ = writeln!(s, "(p, q) = ({}, {})   regime: {}", r.p, r.q, r.regime);
                for c in &r.checks {
                    match c.status {
                        CheckStatus::Pass => totals.0 += 1,
                        CheckStatus::Fail => totals.1 += 1,
                        CheckStatus::Skipped => totals.2 += 1,
                    }
                    let _ = writeln!(s, "  {:24} {:7} {}", c.name, c.status.to_string(), c.detail);
                }
            }
            let _ = writeln!(
                s,
                "summary: {} pairs, {} passed, {} failed, {} skipped",
                reports.len(),
                totals.0,
                totals.1,
                totals.2
            );
            s
        }
        Format::Json | Format::Dot => bail!("verify supports text or csv output"),
    };
    write_output(out, &content)?;
    Ok(if all_passed { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_spec_parsing() {
        assert_eq!(primes_in_spec("7").unwrap(), vec![7]);
        assert_eq!(primes_in_spec("2..5").unwrap(), vec![2, 3, 5]);
        assert_eq!(primes_in_spec("8..10").unwrap(), Vec::<u64>::new());
        assert!(primes_in_spec("5..2").is_err());
        assert!(primes_in_spec("x").is_err());
    }

    #[test]
    fn csv_escaping() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn cli_parses_the_documented_invocations() {
        for argv in [
            vec!["zdmd", "zdg", "6", "--format", "dot"],
            vec!["zdmd", "zdg", "7"],
            vec!["zdmd", "bs", "15", "--format", "json"],
            vec!["zdmd", "bs", "77", "--format", "dot"],
            vec!["zdmd", "md", "--n", "35", "--mode", "exhaustive"],
            vec!["zdmd", "md", "--n", "15", "--mode", "bnb"],
            vec!["zdmd", "md", "--file", "path.json"],
            vec!["zdmd", "verify", "--p", "7", "--q", "11", "--mode", "fast"],
            vec!["zdmd", "verify", "--p", "2..5", "--q", "3..13", "--mode", "full"],
            vec!["zdmd", "--seed", "3", "md", "--n", "15"],
        ] {
            Cli::try_parse_from(&argv).unwrap_or_else(|e| panic!("{argv:?}: {e}"));
        }
    }

    #[test]
    fn cli_rejects_bad_usage() {
        assert!(Cli::try_parse_from(["zdmd", "zdg", "1"]).is_err());
        assert!(Cli::try_parse_from(["zdmd", "md"]).is_err());
        assert!(Cli::try_parse_from(["zdmd", "md", "--n", "6", "--file", "x.json"]).is_err());
        assert!(Cli::try_parse_from(["zdmd", "md", "--n", "6", "--budget", "0"]).is_err());
    }
}
