use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use subres::parse::{parse_index_set, parse_instance, parse_multiset, parse_poly, Parsed};
use subres::schur::{schur_poly_x, schur_value, SchurSpec};
use subres::sylvester::{sres_det, syl_double, syl_single, sylm_bigd_unchecked, sylm_terms, SylmTerm};
use subres::verify::{replay_instances, run_instances, run_suite, FuzzConfig, Suite, SuiteReport};
use subres::{Error, RootMultiset, UPoly};

/// Exact subresultants from coefficients and from roots.
#[derive(Parser)]
#[command(name = "subres", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// List every term of the multiset sum (sylm).
    #[arg(long, global = true)]
    trace: bool,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 200)]
    count: usize,
    /// Re-run the instances in a report, failure or instance JSON file.
    #[arg(long, global = true, value_name = "FILE")]
    replay: Option<String>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Args)]
struct Pair {
    /// Roots of f: "1:2,3/2:1", "[1,1,3/2]" or multiset JSON.
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// Roots of g.
    #[arg(long, allow_hyphen_values = true)]
    b: String,
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 6)]
    max_deg: usize,
    #[arg(long, default_value_t = 9)]
    coeff_bound: u64,
    /// Keep the roots of f and g apart.
    #[arg(long)]
    no_shared_roots: bool,
    /// Let the auxiliary set E of prop21 overlap A and B.
    #[arg(long)]
    e_overlap: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Subresultant by the determinant definition.
    Sres {
        /// Coefficients of f, ascending ("1,0,-2") or polynomial JSON.
        #[arg(long, allow_hyphen_values = true, requires = "g", conflicts_with_all = ["a", "query"])]
        f: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "f")]
        g: Option<String>,
        /// Roots of f, used instead of coefficients.
        #[arg(long, allow_hyphen_values = true, requires = "b", conflicts_with = "query")]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "a")]
        b: Option<String>,
        /// JSON query {"f","g","d"} or {"a","b","d"}.
        #[arg(long)]
        query: Option<String>,
        #[arg(long, required_unless_present = "query")]
        d: Option<usize>,
    },
    /// Sylvester single sum over subsets of A (sets only).
    SylSingle {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        d: usize,
    },
    /// Sylvester double sum (sets only).
    SylDouble {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Multiset Sylvester sum.
    Sylm {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        d: usize,
        /// Apply the two-index formula even below its range (debugging only).
        #[arg(long)]
        force_bigd: bool,
    },
    /// Confluent Schur value, or polynomial in x with --with-x.
    Schur {
        #[arg(long)]
        k: usize,
        /// Removed rows, 1-based: "2,3". Empty for none.
        #[arg(long, default_value = "")]
        rows: String,
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        /// Append the symbol x to the points.
        #[arg(long)]
        with_x: bool,
    },
    /// Run one identity suite, or all of them.
    Verify {
        /// thm14, thm12, eq1, eq2, eq3, lemma24, prop21, prop23, lemma34,
        /// schur-consistency, examples, or all.
        #[arg(default_value = "all")]
        suite: String,
        #[command(flatten)]
        opts: FuzzArgs,
    },
    /// Run every seeded suite.
    Fuzz {
        #[command(flatten)]
        opts: FuzzArgs,
    },
}

enum Outcome {
    Ok,
    PropertyFailure,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::PropertyFailure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    if let Some(path) = &cli.replay {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Validation(format!("cannot read {path}: {e}")))?;
        let instances = replay_instances(&text)?;
        return Ok(emit_reports(cli, &[run_instances("replay", instances)]));
    }
    let Some(command) = &cli.command else {
        return Err(Error::Validation("a subcommand or --replay is required".into()));
    };
    match command {
        Command::Sres { f, g, a, b, query, d } => {
            let (f, g, d) = if let Some(q) = query {
                match parse_instance(q)? {
                    Parsed::Query(q) => (q.f, q.g, q.d),
                    _ => return Err(Error::Validation("--query must be an {f,g,d} or {a,b,d} object".into())),
                }
            } else if let (Some(f), Some(g)) = (f, g) {
                (parse_poly(f)?, parse_poly(g)?, d.unwrap_or_default())
            } else if let (Some(a), Some(b)) = (a, b) {
                let (a, b) = (parse_multiset(a)?, parse_multiset(b)?);
                (UPoly::from_roots(&a), UPoly::from_roots(&b), d.unwrap_or_default())
            } else {
                return Err(Error::Validation("give --f/--g, --a/--b or --query".into()));
            };
            print_poly(cli, &format!("Sres_{d}"), &sres_det(&f, &g, d)?);
        }
        Command::SylSingle { pair, d } => {
            let (a, b) = pair.parse()?;
            print_poly(cli, &format!("Syl_{d},0"), &syl_single(&a, &b, *d)?);
        }
        Command::SylDouble { pair, p, q } => {
            let (a, b) = pair.parse()?;
            print_poly(cli, &format!("Syl_{p},{q}"), &syl_double(&a, &b, *p, *q)?);
        }
        Command::Sylm { pair, d, force_bigd } => {
            let (a, b) = pair.parse()?;
            let label = format!("SylM_{d},0");
            if *force_bigd {
                subres::sylvester::check_degree_window(a.len(), b.len(), *d)?;
                eprintln!("warning: --force-bigd output carries no correctness claim");
                print_poly(cli, &label, &sylm_bigd_unchecked(&a, &b, *d));
            } else {
                let terms = sylm_terms(&a, &b, *d)?;
                let total: UPoly = terms.iter().map(|t| t.value.clone()).sum();
                if cli.trace {
                    print_trace(cli, &label, &total, &terms);
                } else {
                    print_poly(cli, &label, &total);
                }
            }
        }
        Command::Schur { k, rows, points, with_x } => {
            let spec = SchurSpec::new(*k, parse_index_set(rows)?, parse_multiset(points)?, *with_x)?;
            if *with_x {
                print_poly(cli, "S", &schur_poly_x(&spec)?);
            } else {
                let v = schur_value(&spec)?;
                if cli.json {
                    println!("{}", serde_json::json!({ "value": v.to_string() }));
                } else {
                    println!("S = {v}");
                }
            }
        }
        Command::Verify { suite, opts } => {
            let cfg = opts.config(cli);
            let suites: Vec<Suite> =
                if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
            let reports: Vec<SuiteReport> = suites.into_iter().map(|s| run_suite(s, &cfg)).collect();
            return Ok(emit_reports(cli, &reports));
        }
        Command::Fuzz { opts } => {
            let cfg = opts.config(cli);
            let reports: Vec<SuiteReport> = Suite::ALL
                .into_iter()
                .filter(|s| !s.is_fixed())
                .map(|s| run_suite(s, &cfg))
                .collect();
            return Ok(emit_reports(cli, &reports));
        }
    }
    Ok(Outcome::Ok)
}

impl Pair {
    fn parse(&self) -> Result<(RootMultiset, RootMultiset), Error> {
        Ok((parse_multiset(&self.a)?, parse_multiset(&self.b)?))
    }
}

impl FuzzArgs {
    fn config(&self, cli: &Cli) -> FuzzConfig {
        FuzzConfig {
            seed: cli.seed,
            count: cli.count,
            max_deg: self.max_deg,
            coeff_bound: self.coeff_bound,
            allow_shared_roots: !self.no_shared_roots,
            e_overlap: self.e_overlap,
        }
    }
}

fn print_poly(cli: &Cli, label: &str, p: &UPoly) {
    if cli.json {
        println!("{}", serde_json::to_string(p).expect("serializable"));
    } else {
        println!("{label} = {p}");
    }
}

#[derive(Serialize)]
struct Trace<'a> {
    result: &'a UPoly,
    terms: &'a [SylmTerm],
}

fn print_trace(cli: &Cli, label: &str, total: &UPoly, terms: &[SylmTerm]) {
    if cli.json {
        let t = Trace { result: total, terms };
        println!("{}", serde_json::to_string(&t).expect("serializable"));
        return;
    }
    for (i, t) in terms.iter().enumerate() {
        let [r1, r2, r3] = [0, 1, 2].map(|j| format!("{:?}", t.partition.block(j)));
        println!(
            "term {i}: R1={r1} R2={r2} R3={r3} A'={} B'={} sign={} value={}",
            t.a_prime.chosen(),
            t.b_prime.chosen(),
            t.sign,
            t.value
        );
    }
    println!("{label} = {total}");
}

fn emit_reports(cli: &Cli, reports: &[SuiteReport]) -> Outcome {
    for r in reports {
        eprintln!("{}: {:.3}s", r.suite, r.wall_time.as_secs_f64());
    }
    if cli.json {
        let body = if reports.len() == 1 {
            serde_json::to_string_pretty(&reports[0])
        } else {
            serde_json::to_string_pretty(reports)
        };
        println!("{}", body.expect("serializable"));
    } else {
        for r in reports {
            print!("{}", render(r));
        }
    }
    if reports.iter().all(SuiteReport::passed) {
        Outcome::Ok
    } else {
        Outcome::PropertyFailure
    }
}

fn render(r: &SuiteReport) -> String {
    let mut out = String::new();
    let status = if r.passed() { "PASS" } else { "FAIL" };
    let _ = writeln!(
        out,
        "{status} {}: {} instances, {} checks, {} failures",
        r.suite,
        r.instances,
        r.checks,
        r.failures.len()
    );
    if !r.coverage.is_empty() {
        let cov: Vec<String> = r.coverage.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "  coverage: {}", cov.join(" "));
    }
    if !r.missing_coverage.is_empty() {
        let _ = writeln!(out, "  never reached: {}", r.missing_coverage.join(", "));
    }
    for f in &r.failures {
        let _ = writeln!(out, "  #{} {}", f.seq, f.detail);
        let _ = writeln!(out, "    expected: {}", f.expected);
        let _ = writeln!(out, "    actual:   {}", f.actual);
        let inst = serde_json::to_string(&f.instance).expect("serializable");
        let _ = writeln!(out, "    replay:   {inst}");
    }
    out
}
