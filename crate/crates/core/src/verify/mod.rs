//! Identity-verification suites, seeded fuzzing and replay.

pub mod generate;
pub mod grid;
pub mod instances;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsets::RootMultiset;
use crate::scalar::{ratio, Rational};
use crate::sylvester::{degree_window, Shape};
use generate::Gen;
pub use instances::{Checked, ExampleKind, Instance, Mismatch, SymPoly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub count: usize,
    pub max_deg: usize,
    /// Roots are `p/q` with `|p| <= coeff_bound`, `1 <= q <= coeff_bound`.
    pub coeff_bound: u64,
    pub allow_shared_roots: bool,
    /// Let the auxiliary set of the three-block expansion overlap `A` and `B`.
    pub e_overlap: bool,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 42,
            count: 200,
            max_deg: 6,
            coeff_bound: 9,
            allow_shared_roots: true,
            e_overlap: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Thm14,
    Thm12,
    Eq1,
    Eq2,
    Eq3,
    Lemma24,
    Prop21,
    Prop23,
    Lemma34,
    SchurConsistency,
    Examples,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Thm14,
        Suite::Thm12,
        Suite::Eq1,
        Suite::Eq2,
        Suite::Eq3,
        Suite::Lemma24,
        Suite::Prop21,
        Suite::Prop23,
        Suite::Lemma34,
        Suite::SchurConsistency,
        Suite::Examples,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm14 => "thm14",
            Suite::Thm12 => "thm12",
            Suite::Eq1 => "eq1",
            Suite::Eq2 => "eq2",
            Suite::Eq3 => "eq3",
            Suite::Lemma24 => "lemma24",
            Suite::Prop21 => "prop21",
            Suite::Prop23 => "prop23",
            Suite::Lemma34 => "lemma34",
            Suite::SchurConsistency => "schur-consistency",
            Suite::Examples => "examples",
        }
    }

    fn salt(self) -> u64 {
        0x9e37_79b9_7f4a_7c15u64.wrapping_mul(self as u64 + 1)
    }

    /// Instances are fixed rather than drawn from the seed.
    pub fn is_fixed(self) -> bool {
        matches!(self, Suite::Lemma34 | Suite::Examples)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub seq: usize,
    pub instance: Instance,
    pub expected: String,
    pub actual: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub instances: usize,
    pub checks: usize,
    /// How many instances exercised each labelled regime or variant.
    pub coverage: BTreeMap<String, usize>,
    pub failures: Vec<Failure>,
    /// Required regimes the run never reached.
    pub missing_coverage: Vec<String>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.missing_coverage.is_empty()
    }
}

/// The `seq`-th instance of a suite under `cfg`.
pub fn generate_instance(suite: Suite, cfg: &FuzzConfig, seq: usize) -> Instance {
    let mut g = Gen::new(cfg.seed, suite.salt(), seq as u64, cfg.coeff_bound);
    let max_deg = cfg.max_deg.max(1);
    match suite {
        Suite::Thm14 => {
            let (a, b) = gen_pair(&mut g, cfg, max_deg, seq.is_multiple_of(2));
            Instance::Thm14 { a, b }
        }
        Suite::Thm12 => gen_thm12(&mut g, cfg, max_deg),
        Suite::Eq1 | Suite::Eq2 | Suite::Eq3 => {
            let (a, b) = gen_sets(&mut g, cfg, 1, max_deg);
            match suite {
                Suite::Eq1 => Instance::Eq1 { a, b },
                Suite::Eq2 => Instance::Eq2 { a, b },
                _ => Instance::Eq3 { a, b },
            }
        }
        Suite::Lemma24 => gen_lemma24(&mut g, cfg, max_deg, seq.is_multiple_of(2)),
        Suite::Prop21 => gen_prop21(&mut g, cfg, seq),
        Suite::Prop23 => gen_prop23(&mut g, seq),
        Suite::SchurConsistency => {
            let r = g.range(1, 5);
            let k = r + g.range(0, 3);
            let removed = g.subset(k, k - r);
            let points = g.set(r, &[]);
            Instance::SchurConsistency { k, removed, points }
        }
        Suite::Lemma34 => Instance::Lemma34 { r: seq },
        Suite::Examples => fixed_examples()[seq].clone(),
    }
}

fn values_of(s: &RootMultiset) -> Vec<Rational> {
    s.entries().iter().map(|(v, _)| v.clone()).collect()
}

/// Multiset pair; half of the calls force a repeated root on some side.
fn gen_pair(g: &mut Gen, cfg: &FuzzConfig, max_deg: usize, repeat: bool) -> (RootMultiset, RootMultiset) {
    let m = g.range(1, max_deg);
    let n = g.range(1, max_deg);
    let (ra, rb) = if repeat {
        match g.range(0, 2) {
            0 => (true, false),
            1 => (false, true),
            _ => (true, true),
        }
    } else {
        (false, false)
    };
    let a = g.multiset(m, ra, &[], &[], 0.0);
    let share = if cfg.allow_shared_roots && g.chance(0.5) { values_of(&a) } else { Vec::new() };
    let b = g.multiset(n, rb, &[], &share, 0.5);
    (a, b)
}

fn gen_sets(g: &mut Gen, cfg: &FuzzConfig, lo: usize, hi: usize) -> (RootMultiset, RootMultiset) {
    let m = g.range(lo, hi);
    let n = g.range(lo, hi);
    let a = g.set(m, &[]);
    let share = if cfg.allow_shared_roots && g.chance(0.3) { values_of(&a) } else { Vec::new() };
    let b = g.multiset(n, false, &[], &share, 0.5);
    let b = if b.is_set() { b } else { g.set(n, &[]) };
    (a, b)
}

fn gen_thm12(g: &mut Gen, cfg: &FuzzConfig, max_deg: usize) -> Instance {
    for _ in 0..64 {
        let repeat = g.chance(0.7);
        let (a, b) = gen_pair(g, cfg, max_deg, repeat);
        let shape = Shape::of(&a, &b);
        if degree_window(shape.m, shape.n).any(|d| shape.is_large_d(d)) {
            return Instance::Thm12 { a, b };
        }
    }
    let (a, b) = gen_sets(g, cfg, 1, max_deg);
    Instance::Thm12 { a, b }
}

fn gen_lemma24(g: &mut Gen, cfg: &FuzzConfig, max_deg: usize, part1: bool) -> Instance {
    let hi = max_deg.max(3);
    loop {
        let d = g.range(1, hi.min(4));
        let n = if part1 { g.range(d, hi) } else { g.range(0, d - 1) };
        let m = g.range(d, hi);
        if m + n < 2 * d + 1 {
            continue;
        }
        let nvars = g.range(1, (m + n - 2 * d).min(2));
        let a = g.set(m, &[]);
        let share = if cfg.allow_shared_roots && g.chance(0.3) { values_of(&a) } else { Vec::new() };
        let b = g.multiset(n, false, &[], &share, 0.5);
        let b = if b.is_set() { b } else { g.set(n, &[]) };
        return Instance::Lemma24 { a, b, d, nvars };
    }
}

fn gen_prop21(g: &mut Gen, cfg: &FuzzConfig, seq: usize) -> Instance {
    let total = g.range(2, 8);
    let m = g.range(1, total - 1);
    let n = total - m;
    let d = g.range(0, m);
    let nvars = g.range(1, 2);
    let a = g.set(m, &[]);
    let b = g.set(n, &[]);
    let bound = (nvars + d).max(m + n - d).max(m);
    let size = bound + seq % 3;
    let e = if cfg.e_overlap {
        g.set(size, &[])
    } else {
        let mut avoid = values_of(&a);
        avoid.extend(values_of(&b));
        g.set(size, &avoid)
    };
    Instance::Prop21 { a, b, d, e, nvars }
}

fn gen_prop23(g: &mut Gen, seq: usize) -> Instance {
    let size = g.range(2, 6);
    let d = g.range(1, size - 1).min(3);
    let e = g.set(size, &[]);
    let h = match seq % 4 {
        0 => SymPoly::Constant(g.rational()),
        1 => SymPoly::E1,
        2 => SymPoly::E2,
        _ => SymPoly::PowerSum(g.range(1, d)),
    };
    Instance::Prop23 { e, d, h }
}

/// `(alpha1, alpha2, beta1)` as `(numerator, denominator)` pairs.
const EXAMPLE_TRIPLES: [[(i64, i64); 3]; 3] = [
    [(0, 1), (1, 1), (2, 1)],
    [(-3, 2), (5, 1), (7, 3)],
    [(4, 1), (-1, 1), (-5, 2)],
];

fn triple(i: usize) -> (Rational, Rational, Rational) {
    let [a1, a2, b1] = EXAMPLE_TRIPLES[i];
    (ratio(a1.0, a1.1), ratio(a2.0, a2.1), ratio(b1.0, b1.1))
}

fn fixed_examples() -> Vec<Instance> {
    let mut out = Vec::new();
    for kind in [ExampleKind::SquareB, ExampleKind::CubeB, ExampleKind::CubeBForced] {
        for i in 0..EXAMPLE_TRIPLES.len() {
            let (alpha1, alpha2, beta1) = triple(i);
            out.push(Instance::Example { kind, alpha1, alpha2, beta1 });
        }
    }
    out
}

/// Largest `r` of the exhaustive sign-lemma suite.
pub const LEMMA34_MAX_R: usize = 6;

fn instance_count(suite: Suite, cfg: &FuzzConfig) -> usize {
    match suite {
        Suite::Lemma34 => LEMMA34_MAX_R + 1,
        Suite::Examples => fixed_examples().len(),
        _ => cfg.count,
    }
}

/// Runs already-built instances, in parallel, merging in sequence order.
pub fn run_instances(suite: &str, instances: Vec<(usize, Instance)>) -> SuiteReport {
    let start = Instant::now();
    let results: Vec<(usize, Instance, Checked)> = instances
        .into_par_iter()
        .map(|(seq, inst)| {
            let c = inst.check();
            (seq, inst, c)
        })
        .collect();
    let mut report = SuiteReport {
        suite: suite.to_string(),
        instances: results.len(),
        checks: 0,
        coverage: BTreeMap::new(),
        failures: Vec::new(),
        missing_coverage: Vec::new(),
        wall_time: Duration::ZERO,
    };
    for (seq, instance, c) in results {
        report.checks += c.checks;
        for t in c.tags {
            *report.coverage.entry(t).or_default() += 1;
        }
        if let Some(m) = c.mismatch {
            report.failures.push(Failure {
                seq,
                instance,
                expected: m.expected,
                actual: m.actual,
                detail: m.detail,
            });
        }
    }
    report.wall_time = start.elapsed();
    report
}

/// Runs one suite; deterministic given `cfg` apart from `wall_time`.
pub fn run_suite(suite: Suite, cfg: &FuzzConfig) -> SuiteReport {
    let n = instance_count(suite, cfg);
    let instances: Vec<(usize, Instance)> =
        (0..n).into_par_iter().map(|seq| (seq, generate_instance(suite, cfg, seq))).collect();
    let mut report = run_instances(suite.name(), instances);
    report.missing_coverage = coverage_gaps(suite, cfg, &report.coverage);
    report
}

/// Regimes a large enough run must have exercised.
fn coverage_gaps(suite: Suite, cfg: &FuzzConfig, coverage: &BTreeMap<String, usize>) -> Vec<String> {
    let required: &[&str] = match suite {
        Suite::Thm14 if cfg.count >= 20 => &["large-d", "small-d", "repeated-roots"],
        Suite::Lemma24 if cfg.count >= 2 => &["part1", "part2"],
        Suite::Prop21 if cfg.count >= 3 => &["|E|=bound+0", "|E|=bound+1", "|E|=bound+2"],
        Suite::Prop23 if cfg.count >= 4 => &["h=constant", "h=e1", "h=e2", "h=power-sum"],
        _ => &[],
    };
    required
        .iter()
        .filter(|t| !coverage.contains_key(**t))
        .map(|t| t.to_string())
        .collect()
}

/// Instances to re-run from a report, a single failure, or a bare instance.
pub fn replay_instances(json: &str) -> Result<Vec<(usize, Instance)>> {
    let value: serde_json::Value =
        serde_json::from_str(json).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
    let bad = |e: serde_json::Error| Error::Validation(format!("not a replayable instance: {e}"));
    if let Some(failures) = value.get("failures") {
        let failures: Vec<Failure> = serde_json::from_value(failures.clone()).map_err(bad)?;
        return Ok(failures.into_iter().map(|f| (f.seq, f.instance)).collect());
    }
    if let Some(inst) = value.get("instance") {
        let seq = value.get("seq").and_then(|s| s.as_u64()).unwrap_or(0) as usize;
        return Ok(vec![(seq, serde_json::from_value(inst.clone()).map_err(bad)?)]);
    }
    if let Some(items) = value.as_array() {
        return items
            .iter()
            .enumerate()
            .map(|(i, v)| Ok((i, serde_json::from_value(v.clone()).map_err(bad)?)))
            .collect();
    }
    Ok(vec![(0, serde_json::from_value(value).map_err(bad)?)])
}
