//! Replayable verification instances and the property each one checks.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::grid::grid_find_mismatch;
use crate::combinatorics::{check_sign_lemma, IndexPartition};
use crate::error::Result;
use crate::poly::UPoly;
use crate::rootsets::RootMultiset;
use crate::scalar::{rat, rational_str, Rational, Sign};
use crate::schur::{schur_consistency_check, schur_value, SchurSpec};
use crate::sylvester::{
    apery_jouanolou_rhs, binom_q, degree_window, exchange_rhs_eval, single_sum_eval, sres_det,
    sres_sign, sylm_bigd, sylm_bigd_unchecked, sylm_terms, sym_interp_eval, syl_double, syl_single,
    Shape,
};

/// Symmetric test polynomials for the interpolation suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymPoly {
    Constant(#[serde(with = "rational_str")] Rational),
    E1,
    E2,
    PowerSum(usize),
}

impl SymPoly {
    pub fn eval(&self, xs: &[Rational]) -> Rational {
        match self {
            SymPoly::Constant(c) => c.clone(),
            SymPoly::E1 => xs.iter().fold(Rational::zero(), |a, x| a + x),
            SymPoly::E2 => {
                let mut acc = Rational::zero();
                for i in 0..xs.len() {
                    for j in i + 1..xs.len() {
                        acc += &xs[i] * &xs[j];
                    }
                }
                acc
            }
            SymPoly::PowerSum(k) => {
                xs.iter().fold(Rational::zero(), |a, x| a + num_traits::pow(x.clone(), *k))
            }
        }
    }

    pub fn per_var_degree(&self) -> usize {
        match self {
            SymPoly::Constant(_) => 0,
            SymPoly::E1 | SymPoly::E2 => 1,
            SymPoly::PowerSum(k) => *k,
        }
    }

    fn tag(&self) -> &'static str {
        match self {
            SymPoly::Constant(_) => "h=constant",
            SymPoly::E1 => "h=e1",
            SymPoly::E2 => "h=e2",
            SymPoly::PowerSum(_) => "h=power-sum",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExampleKind {
    /// `f = (x-a1)(x-a2)^2`, `g = (x-b1)^2`, `d = 2`: `SylM = Sres = g`.
    SquareB,
    /// `f = (x-a1)(x-a2)^2`, `g = (x-b1)^3`, `d = 2`: `SylM = Sres = g - f`.
    CubeB,
    /// The second pair with the two-index formula forced below its range.
    CubeBForced,
}

/// One self-contained check. Serialized form is what `--replay` consumes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "suite", rename_all = "kebab-case")]
pub enum Instance {
    /// Determinant oracle against the multiset sum, every `d` in the window.
    Thm14 { a: RootMultiset, b: RootMultiset },
    /// Two-index regime: only the empty partition occurs and the result equals
    /// the independently computed two-index sum.
    Thm12 { a: RootMultiset, b: RootMultiset },
    Eq1 { a: RootMultiset, b: RootMultiset },
    Eq2 { a: RootMultiset, b: RootMultiset },
    Eq3 { a: RootMultiset, b: RootMultiset },
    Lemma24 { a: RootMultiset, b: RootMultiset, d: usize, nvars: usize },
    Prop21 { a: RootMultiset, b: RootMultiset, d: usize, e: RootMultiset, nvars: usize },
    Prop23 { e: RootMultiset, d: usize, h: SymPoly },
    Lemma34 { r: usize },
    SchurConsistency { k: usize, removed: Vec<usize>, points: RootMultiset },
    #[serde(rename = "examples")]
    Example {
        kind: ExampleKind,
        #[serde(with = "rational_str")]
        alpha1: Rational,
        #[serde(with = "rational_str")]
        alpha2: Rational,
        #[serde(with = "rational_str")]
        beta1: Rational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub expected: String,
    pub actual: String,
    pub detail: String,
}

impl Mismatch {
    fn new(expected: impl ToString, actual: impl ToString, detail: impl Into<String>) -> Self {
        Mismatch { expected: expected.to_string(), actual: actual.to_string(), detail: detail.into() }
    }

    fn error(detail: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Mismatch::new("a value", format!("error: {err}"), detail)
    }
}

/// Result of checking one instance.
#[derive(Debug, Clone, Default)]
pub struct Checked {
    pub mismatch: Option<Mismatch>,
    /// Coverage labels (regimes, variants) this instance exercised.
    pub tags: Vec<String>,
    /// Individual equalities verified.
    pub checks: usize,
}

impl Checked {
    fn fail(&mut self, m: Mismatch) {
        if self.mismatch.is_none() {
            self.mismatch = Some(m);
        }
    }

    fn tag(&mut self, t: &str) {
        if !self.tags.iter().any(|x| x == t) {
            self.tags.push(t.to_string());
        }
    }

    fn equal<T: PartialEq + std::fmt::Display>(&mut self, expected: &T, actual: &T, detail: impl Into<String>) {
        self.checks += 1;
        if expected != actual {
            self.fail(Mismatch::new(expected, actual, detail));
        }
    }

    fn result<T>(&mut self, r: Result<T>, detail: impl Into<String>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.fail(Mismatch::error(detail, e));
                None
            }
        }
    }
}

fn avoid_of(sets: &[&RootMultiset]) -> Vec<Rational> {
    sets.iter().flat_map(|s| s.entries().iter().map(|(v, _)| v.clone())).collect()
}

fn shares_roots(a: &RootMultiset, b: &RootMultiset) -> bool {
    a.entries().iter().any(|(v, _)| b.contains(v))
}

impl Instance {
    pub fn suite_name(&self) -> &'static str {
        match self {
            Instance::Thm14 { .. } => "thm14",
            Instance::Thm12 { .. } => "thm12",
            Instance::Eq1 { .. } => "eq1",
            Instance::Eq2 { .. } => "eq2",
            Instance::Eq3 { .. } => "eq3",
            Instance::Lemma24 { .. } => "lemma24",
            Instance::Prop21 { .. } => "prop21",
            Instance::Prop23 { .. } => "prop23",
            Instance::Lemma34 { .. } => "lemma34",
            Instance::SchurConsistency { .. } => "schur-consistency",
            Instance::Example { .. } => "examples",
        }
    }

    pub fn check(&self) -> Checked {
        let mut c = Checked::default();
        match self {
            Instance::Thm14 { a, b } => check_thm14(&mut c, a, b),
            Instance::Thm12 { a, b } => check_thm12(&mut c, a, b),
            Instance::Eq1 { a, b } => check_eq1(&mut c, a, b),
            Instance::Eq2 { a, b } => check_eq2(&mut c, a, b),
            Instance::Eq3 { a, b } => check_eq3(&mut c, a, b),
            Instance::Lemma24 { a, b, d, nvars } => check_lemma24(&mut c, a, b, *d, *nvars),
            Instance::Prop21 { a, b, d, e, nvars } => check_prop21(&mut c, a, b, *d, e, *nvars),
            Instance::Prop23 { e, d, h } => check_prop23(&mut c, e, *d, h),
            Instance::Lemma34 { r } => check_lemma34(&mut c, *r),
            Instance::SchurConsistency { k, removed, points } => {
                check_schur(&mut c, *k, removed, points)
            }
            Instance::Example { kind, alpha1, alpha2, beta1 } => {
                check_example(&mut c, *kind, alpha1, alpha2, beta1)
            }
        }
        c
    }
}

fn check_thm14(c: &mut Checked, a: &RootMultiset, b: &RootMultiset) {
    let shape = Shape::of(a, b);
    let (f, g) = (UPoly::from_roots(a), UPoly::from_roots(b));
    if shares_roots(a, b) {
        c.tag("shared-roots");
    }
    if a.max_mult() > 1 || b.max_mult() > 1 {
        c.tag("repeated-roots");
    }
    for d in degree_window(shape.m, shape.n) {
        if shape.is_large_d(d) {
            c.tag("large-d");
        } else {
            c.tag("small-d");
            if d >= shape.mbar + shape.nbar {
                c.tag("symbolic-schur");
            }
        }
        let Some(want) = c.result(sres_det(&f, &g, d), format!("Sres_{d}")) else { continue };
        let Some(terms) = c.result(sylm_terms(a, b, d), format!("SylM_{d},0")) else { continue };
        let sum: UPoly = terms.into_iter().map(|t| t.value).sum();
        c.equal(&want, &sres_sign(shape.m, d).apply(sum), format!("d={d}: Sres_d vs (-1)^(d(m-d)) SylM"));
    }
}

fn check_thm12(c: &mut Checked, a: &RootMultiset, b: &RootMultiset) {
    let shape = Shape::of(a, b);
    let (f, g) = (UPoly::from_roots(a), UPoly::from_roots(b));
    let mut any = false;
    for d in degree_window(shape.m, shape.n).filter(|&d| shape.is_large_d(d)) {
        any = true;
        let Some(terms) = c.result(sylm_terms(a, b, d), format!("SylM_{d},0")) else { continue };
        c.checks += 1;
        if let Some(t) = terms.iter().find(|t| !t.partition.is_all_empty()) {
            c.fail(Mismatch::new(
                "only the empty partition",
                format!("{:?}", t.partition.blocks()),
                format!("d={d}: nonempty partition in the two-index regime"),
            ));
        }
        let full: UPoly = terms.into_iter().map(|t| t.value).sum();
        let Some(two_index) = c.result(sylm_bigd(a, b, d), format!("two-index sum, d={d}")) else {
            continue;
        };
        c.equal(&two_index, &full, format!("d={d}: two-index sum vs full multiset sum"));
        let Some(want) = c.result(sres_det(&f, &g, d), format!("Sres_{d}")) else { continue };
        c.equal(&want, &sres_sign(shape.m, d).apply(two_index), format!("d={d}: Sres_d vs two-index sum"));
    }
    if !any {
        c.fail(Mismatch::new("some d with m'+n' <= d", "none", "instance has no two-index degree"));
    }
}

fn pq_pairs(m: usize, n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    degree_window(m, n).flat_map(move |d| {
        (0..=d).filter(move |&p| p <= m && d - p <= n).map(move |p| (p, d - p, d))
    })
}

fn check_eq1(c: &mut Checked, a: &RootMultiset, b: &RootMultiset) {
    let (m, n) = (a.len(), b.len());
    let (f, g) = (UPoly::from_roots(a), UPoly::from_roots(b));
    for (p, q, d) in pq_pairs(m, n) {
        let Some(lhs) = c.result(syl_double(a, b, p, q), format!("Syl_{p},{q}")) else { continue };
        let Some(sres) = c.result(sres_det(&f, &g, d), format!("Sres_{d}")) else { continue };
        let rhs = Sign::from_parity((p * (m - d)) as i64).apply(sres.scale(&binom_q(d, p)));
        c.equal(&rhs, &lhs, format!("p={p}, q={q}: Syl_pq vs (-1)^(p(m-d)) C(d,p) Sres_d"));
    }
}

fn check_eq2(c: &mut Checked, a: &RootMultiset, b: &RootMultiset) {
    let (m, n) = (a.len(), b.len());
    for (p, q, d) in pq_pairs(m, n) {
        let Some(lhs) = c.result(syl_double(a, b, p, q), format!("Syl_{p},{q}")) else { continue };
        let Some(single) = c.result(syl_single(a, b, d), format!("Syl_{d},0")) else { continue };
        let rhs = Sign::from_parity((q * (m - d)) as i64).apply(single.scale(&binom_q(d, p)));
        c.equal(&rhs, &lhs, format!("p={p}, q={q}: Syl_pq vs (-1)^(q(m-d)) C(d,p) Syl_d0"));
    }
}

fn check_eq3(c: &mut Checked, a: &RootMultiset, b: &RootMultiset) {
    let (m, n) = (a.len(), b.len());
    let (f, g) = (UPoly::from_roots(a), UPoly::from_roots(b));
    for d in degree_window(m, n) {
        let Some(sres) = c.result(sres_det(&f, &g, d), format!("Sres_{d}")) else { continue };
        let Some(single) = c.result(syl_single(a, b, d), format!("Syl_{d},0")) else { continue };
        c.equal(&sres, &sres_sign(m, d).apply(single), format!("d={d}: Sres_d vs (-1)^(d(m-d)) Syl_d0"));
    }
}

fn grid_compare(
    c: &mut Checked,
    lhs: &dyn Fn(&[Rational]) -> Result<Rational>,
    rhs: &dyn Fn(&[Rational]) -> Result<Rational>,
    nvars: usize,
    degree: usize,
    avoid: &[Rational],
    detail: &str,
) {
    let err = std::cell::RefCell::new(None);
    let wrap = |f: &dyn Fn(&[Rational]) -> Result<Rational>, xs: &[Rational]| match f(xs) {
        Ok(v) => v,
        Err(e) => {
            err.borrow_mut().get_or_insert(e);
            Rational::zero()
        }
    };
    let l = |xs: &[Rational]| wrap(lhs, xs);
    let r = |xs: &[Rational]| wrap(rhs, xs);
    let bad = grid_find_mismatch(&l, &r, nvars, degree, avoid)
        .map(|point| (wrap(rhs, &point), wrap(lhs, &point), point));
    c.checks += 1;
    let failed = err.borrow_mut().take();
    if let Some(e) = failed {
        c.fail(Mismatch::error(detail, e));
    } else if let Some((expected, actual, point)) = bad {
        let pt = point.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        c.fail(Mismatch::new(expected, actual, format!("{detail}: sides differ at X = ({pt})")));
    }
}

fn check_lemma24(c: &mut Checked, a: &RootMultiset, b: &RootMultiset, d: usize, nvars: usize) {
    let avoid = avoid_of(&[a, b]);
    let lhs = |xs: &[Rational]| single_sum_eval(a, b, d, xs);
    if b.len() >= d {
        c.tag("part1");
        let rhs = |xs: &[Rational]| exchange_rhs_eval(a, b, d, xs);
        grid_compare(c, &lhs, &rhs, nvars, d, &avoid, "exchange identity");
    } else {
        c.tag("part2");
        let zero = |_: &[Rational]| Ok(Rational::zero());
        grid_compare(c, &lhs, &zero, nvars, d, &avoid, "vanishing single sum");
    }
}

fn check_prop21(c: &mut Checked, a: &RootMultiset, b: &RootMultiset, d: usize, e: &RootMultiset, nvars: usize) {
    let bound = (nvars + d).max(a.len() + b.len() - d).max(a.len());
    c.tag(&format!("|E|=bound+{}", e.len().saturating_sub(bound)));
    let avoid = avoid_of(&[a, b, e]);
    let lhs = |xs: &[Rational]| single_sum_eval(a, b, d, xs);
    let rhs = |xs: &[Rational]| apery_jouanolou_rhs(a, b, d, e, xs);
    grid_compare(c, &lhs, &rhs, nvars, d, &avoid, "three-block expansion over E");
}

fn check_prop23(c: &mut Checked, e: &RootMultiset, d: usize, h: &SymPoly) {
    c.tag(h.tag());
    let nvars = e.len().saturating_sub(d);
    let avoid = avoid_of(&[e]);
    let lhs = |xs: &[Rational]| Ok(h.eval(xs));
    let hf = |xs: &[Rational]| h.eval(xs);
    let rhs = |xs: &[Rational]| sym_interp_eval(e, d, &hf, xs);
    grid_compare(c, &lhs, &rhs, nvars, d, &avoid, "symmetric interpolation");
}

fn check_lemma34(c: &mut Checked, r: usize) {
    for p in IndexPartition::all_three_block(r) {
        for s in 0..=r {
            match check_sign_lemma(r, s, &p) {
                Ok(true) => c.checks += 1,
                Ok(false) => {
                    c.checks += 1;
                    c.fail(Mismatch::new(
                        "identity holds",
                        "sign differs",
                        format!("r={r}, s={s}, blocks={:?}", p.blocks()),
                    ));
                }
                // Shift moves R1 outside 1..=r-s: not an admissible instance.
                Err(_) => {}
            }
        }
    }
}

fn check_schur(c: &mut Checked, k: usize, removed: &[usize], points: &RootMultiset) {
    c.checks += 1;
    if !schur_consistency_check(k, removed, points) {
        c.fail(Mismatch::new("confluent = classical", "differ", format!("k={k}, R={removed:?}")));
        return;
    }
    // Homogeneity: S(2X) = 2^w S(X), w = sum of kept exponents - r(r-1)/2.
    let r = points.len();
    let kept: usize = (1..=k).filter(|i| !removed.contains(i)).map(|i| k - i).sum();
    let w = kept - r * (r - 1) / 2;
    let base = SchurSpec::new(k, removed.to_vec(), points.clone(), false).and_then(|s| schur_value(&s));
    let scaled = SchurSpec::new(k, removed.to_vec(), points.scaled(&rat(2)), false).and_then(|s| schur_value(&s));
    if let (Some(base), Some(scaled)) = (c.result(base, "S(X)"), c.result(scaled, "S(2X)")) {
        c.equal(&(base * num_traits::pow(rat(2), w)), &scaled, format!("homogeneity of degree {w}"));
    }
}

fn ex_sets(a1: &Rational, a2: &Rational, b1: &Rational, b_mult: usize) -> (RootMultiset, RootMultiset) {
    let a = RootMultiset::from_pairs([(a1.clone(), 1), (a2.clone(), 2)]).expect("valid");
    let b = RootMultiset::from_pairs([(b1.clone(), b_mult)]).expect("valid");
    (a, b)
}

fn lin(v: &Rational) -> UPoly {
    UPoly::linear(v)
}

fn check_example(c: &mut Checked, kind: ExampleKind, a1: &Rational, a2: &Rational, b1: &Rational) {
    if a1 == a2 {
        c.fail(Mismatch::new("alpha1 != alpha2", "equal", "degenerate instantiation"));
        return;
    }
    let b_mult = if kind == ExampleKind::SquareB { 2 } else { 3 };
    let (a, b) = ex_sets(a1, a2, b1, b_mult);
    let (f, g) = (UPoly::from_roots(&a), UPoly::from_roots(&b));
    let Some(sres) = c.result(sres_det(&f, &g, 2), "Sres_2") else { return };
    match kind {
        ExampleKind::SquareB => {
            c.equal(&g, &sres, "Sres_2 = g");
            if let Some(s) = c.result(crate::sylvester::sylm(&a, &b, 2), "SylM_2,0") {
                c.equal(&g, &s, "SylM_2,0 = g");
            }
            // -( (a2-b1)(x-a1)(x-b1)/(a1-a2) + (a1-b1)(x-a2)(x-b1)/(a2-a1) )
            let t1 = (&lin(a1) * &lin(b1)).scale(&((a2 - b1) / (a1 - a2)));
            let t2 = (&lin(a2) * &lin(b1)).scale(&((a1 - b1) / (a2 - a1)));
            c.equal(&g, &-(t1 + t2), "displayed two-term expansion = g");
        }
        ExampleKind::CubeB => {
            let want = &g - &f;
            c.equal(&want, &sres, "Sres_2 = g - f");
            if let Some(s) = c.result(crate::sylvester::sylm(&a, &b, 2), "SylM_2,0") {
                c.equal(&want, &s, "SylM_2,0 = g - f");
            }
            // (a2-b1)(x-a1)(x-a2) - (a1-b1)^2 (x-a2)(x-b1)/(a2-a1)
            //   - (a2-b1)^2 (x-a1)(x-b1)/(a1-a2)
            let t1 = (&lin(a1) * &lin(a2)).scale(&(a2 - b1));
            let t2 = (&lin(a2) * &lin(b1)).scale(&((a1 - b1) * (a1 - b1) / (a2 - a1)));
            let t3 = (&lin(a1) * &lin(b1)).scale(&((a2 - b1) * (a2 - b1) / (a1 - a2)));
            c.equal(&want, &(t1 - t2 - t3), "displayed three-term expansion = g - f");
        }
        ExampleKind::CubeBForced => {
            let forced = sylm_bigd_unchecked(&a, &b, 2);
            c.checks += 2;
            match forced.div_rem(&lin(b1)) {
                Ok((_, rem)) if rem.is_zero() => {}
                _ => c.fail(Mismatch::new("multiple of (x - beta1)", &forced, "forced two-index formula")),
            }
            if forced == sres {
                c.fail(Mismatch::new("a value different from Sres_2", &forced, "forced two-index formula"));
            }
        }
    }
}
