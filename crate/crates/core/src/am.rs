//! Assmus-Mattson style checks: the classic weight-count criterion, the
//! generalized criterion that trades weight counts for verified designs,
//! and the shortened/punctured invariance characterization.
//!
//! Every hypothesis is verified by enumeration. When a budget runs out the
//! verdict is `Undecided`, never `Yes`.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::{LinearCode, WeightDistribution};
use crate::designs::{dual_support_design, simplicity_w, support_design, Design};
use crate::error::{Error, Result};
use crate::gf::FieldTable;
use crate::{DEFAULT_CODEWORD_BUDGET, DEFAULT_DESIGN_STEPS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budgets {
    /// Codewords visited per enumeration.
    pub codewords: u128,
    /// Elementary steps per design check.
    pub design_steps: u128,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { codewords: DEFAULT_CODEWORD_BUDGET, design_steps: DEFAULT_DESIGN_STEPS }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Classic,
    Generalized,
    Characterization,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    Undecided,
    Recorded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub kind: String,
    pub subject: String,
    pub status: Status,
    pub detail: String,
}

impl Fact {
    fn new(kind: &str, subject: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        Fact { kind: kind.into(), subject: subject.into(), status, detail: detail.into() }
    }
}

/// Weights `k` in `[d, w]` have simple support designs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Statement {
    pub number: u8,
    pub holds: Option<bool>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmReport {
    pub mode: Mode,
    pub t: usize,
    pub length: usize,
    pub dimension: usize,
    pub q: u64,
    pub d: Option<usize>,
    pub dual_d: Option<usize>,
    pub weights_in_range: Vec<usize>,
    pub s_set: Option<Vec<usize>>,
    /// `(t', S_t')` with `S_t' = S + {nu-t+1..nu-t'}` for `t' < t`.
    pub derived_sets: Vec<(usize, Vec<usize>)>,
    pub facts: Vec<Fact>,
    pub statements: Vec<Statement>,
    pub simple_primal: Option<Window>,
    pub simple_dual: Option<Window>,
    pub verdict: Verdict,
}

impl AmReport {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["schema"] = 1.into();
        v
    }

    fn push(&mut self, fact: Fact) {
        self.facts.push(fact);
    }
}

struct Basics {
    wd: WeightDistribution,
    d: Option<usize>,
    dual_d: Option<usize>,
}

fn basics(c: &LinearCode, t: usize, budgets: Budgets) -> Result<Basics> {
    let wd = c.weight_distribution_with_budget(budgets.codewords)?;
    let d = wd.minimum_distance();
    let dual_d = c.dual_distance(budgets.codewords)?;
    let nu = c.length();
    let bound = d.unwrap_or(nu + 1).min(dual_d.unwrap_or(nu + 1));
    if t >= bound {
        return Err(Error::Parameter(format!("need t < min(d, d^perp) = {bound}, got t = {t}")));
    }
    Ok(Basics { wd, d, dual_d })
}

fn empty_report(mode: Mode, c: &LinearCode, t: usize, b: &Basics) -> AmReport {
    let nu = c.length();
    let q = c.q();
    let window = |d: Option<usize>| {
        d.map(|d| Window { from: d, to: simplicity_w(q, d as u64, nu as u64) as usize })
    };
    AmReport {
        mode,
        t,
        length: nu,
        dimension: c.dimension(),
        q,
        d: b.d,
        dual_d: b.dual_d,
        weights_in_range: b.wd.nonzero_weights().into_iter().filter(|&w| w <= nu - t).collect(),
        s_set: None,
        derived_sets: Vec::new(),
        facts: Vec::new(),
        statements: Vec::new(),
        simple_primal: window(b.d),
        simple_dual: window(b.dual_d),
        verdict: Verdict::Undecided,
    }
}

/// Yes iff at most `d^perp - t` nonzero weights of `C` lie in `[1, nu - t]`.
pub fn classic_am(c: &LinearCode, t: usize, budgets: Budgets) -> Result<AmReport> {
    let b = basics(c, t, budgets)?;
    let mut r = empty_report(Mode::Classic, c, t, &b);
    let allowed = b.dual_d.unwrap_or(c.length() + 1) - t;
    let count = r.weights_in_range.len();
    let ok = count <= allowed;
    r.push(Fact::new(
        "weight_count",
        format!("weights of C in [1, {}]", c.length() - t),
        if ok { Status::Verified } else { Status::Failed },
        format!("{count} weights {:?}, allowed d^perp - t = {allowed}", r.weights_in_range),
    ));
    r.verdict = if ok { Verdict::Yes } else { Verdict::No };
    Ok(r)
}

/// Outcome of checking one support design.
enum Check {
    Design(u64),
    NotDesign,
    Budget(String),
}

fn check_design(design: Result<Design>, t: usize, steps: u128) -> Result<Check> {
    let design = match design {
        Ok(d) => d,
        Err(Error::BudgetExceeded { what, needed, limit }) => {
            return Ok(Check::Budget(format!("{what}: {needed} > {limit}")))
        }
        Err(e) => return Err(e),
    };
    match design.is_t_design_with(t, None, steps) {
        Ok((Some(l), _)) => Ok(Check::Design(l)),
        Ok((None, _)) => Ok(Check::NotDesign),
        Err(Error::BudgetExceeded { what, needed, limit }) => Ok(Check::Budget(format!("{what}: {needed} > {limit}"))),
        Err(e) => Err(e),
    }
}

fn design_fact(subject: String, t: usize, check: &Check) -> Fact {
    match check {
        Check::Design(l) => Fact::new("design", subject, Status::Verified, format!("{t}-design, lambda = {l}")),
        Check::NotDesign => Fact::new("design", subject, Status::Failed, format!("not a {t}-design")),
        Check::Budget(why) => Fact::new("design", subject, Status::Undecided, why.clone()),
    }
}

/// Verifies the generalized criterion for the weight set `s`: support
/// designs of every other weight of `C` in `[d, nu - t]`, and of every dual
/// weight up to `|S| + t - 1`. Weights of `s` outside `[d, nu - t]` are
/// accepted and recorded.
pub fn generalized_am(c: &LinearCode, t: usize, s: &[usize], budgets: Budgets) -> Result<AmReport> {
    let b = basics(c, t, budgets)?;
    let nu = c.length();
    let mut r = empty_report(Mode::Generalized, c, t, &b);
    let s_set: BTreeSet<usize> = s.iter().copied().collect();
    if s_set.is_empty() {
        return Err(Error::Parameter("S must be nonempty".into()));
    }
    if let Some(&w) = s_set.iter().find(|&&w| w > nu) {
        return Err(Error::Parameter(format!("weight {w} in S exceeds the length {nu}")));
    }
    let d = b.d.unwrap_or(nu + 1);
    let outside: Vec<usize> = s_set.iter().copied().filter(|&w| w < d || w > nu - t).collect();
    if !outside.is_empty() {
        r.push(Fact::new(
            "s_range",
            "S",
            Status::Recorded,
            format!("{outside:?} lie outside [{d}, {}]; the criterion only tightens", nu - t),
        ));
    }
    r.s_set = Some(s_set.iter().copied().collect());
    for tp in 0..t {
        let mut st: BTreeSet<usize> = s_set.clone();
        st.extend(nu - t + 1..=nu - tp);
        r.derived_sets.push((tp, st.into_iter().collect()));
    }

    let mut failed = false;
    let mut undecided = false;
    let mut tally = |check: &Check| match check {
        Check::Design(_) => {}
        Check::NotDesign => failed = true,
        Check::Budget(_) => undecided = true,
    };

    for w in d..=nu - t {
        if s_set.contains(&w) || b.wd.count(w) == 0 {
            continue;
        }
        let check = check_design(support_design(c, w, budgets.codewords), t, budgets.design_steps)?;
        tally(&check);
        r.push(design_fact(format!("B_{w}(C)"), t, &check));
    }
    let dual_top = s_set.len() + t - 1;
    let dual_d = b.dual_d.unwrap_or(nu + 1);
    if dual_top < dual_d {
        r.push(Fact::new(
            "design",
            format!("B_l(C^perp), l <= {dual_top}"),
            Status::Verified,
            format!("no dual words below d^perp = {dual_d}"),
        ));
    }
    for w in dual_d..=dual_top.min(nu) {
        let check = check_design(dual_support_design(c, w, budgets.codewords), t, budgets.design_steps)?;
        tally(&check);
        r.push(design_fact(format!("B_{w}(C^perp)"), t, &check));
    }

    r.verdict = if failed {
        Verdict::No
    } else if undecided {
        Verdict::Undecided
    } else {
        Verdict::Yes
    };
    if r.verdict == Verdict::Yes {
        // Conclusions, checked where affordable.
        for &w in s_set.iter().filter(|&&w| w <= nu && b.wd.count(w) > 0) {
            let check = check_design(support_design(c, w, budgets.codewords), t, budgets.design_steps)?;
            let mut fact = design_fact(format!("B_{w}(C)"), t, &check);
            fact.kind = "conclusion".into();
            r.push(fact);
        }
        let next = dual_top.max(dual_d - 1) + 1;
        if next <= nu {
            let check = check_design(dual_support_design(c, next, budgets.codewords), t, budgets.design_steps)?;
            let mut fact = design_fact(format!("B_{next}(C^perp)"), t, &check);
            fact.kind = "conclusion".into();
            r.push(fact);
        }
    }
    Ok(r)
}

fn subsets(nu: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    crate::designs::for_each_subset(&(0..nu as u32).collect::<Vec<_>>(), k, |s| {
        out.push(s.iter().map(|&x| x as usize).collect());
    });
    out
}

/// Whether all `T` of size `k` give the same distribution under `op`.
fn invariant_under(
    c: &LinearCode,
    k: usize,
    budget: u128,
    op: impl Fn(&LinearCode, &[usize]) -> Result<LinearCode> + Sync,
) -> Result<std::result::Result<WeightDistribution, (Vec<usize>, Vec<usize>)>> {
    let sets = subsets(c.length(), k);
    let dists: Vec<(Vec<usize>, WeightDistribution)> = sets
        .into_par_iter()
        .map(|t| Ok((t.clone(), op(c, &t)?.weight_distribution_with_budget(budget)?)))
        .collect::<Result<_>>()?;
    let (t0, first) = &dists[0];
    match dists.iter().find(|(_, d)| d != first) {
        None => Ok(Ok(first.clone())),
        Some((t1, _)) => Ok(Err((t0.clone(), t1.clone()))),
    }
}

/// Evaluates the equivalent statements for `t < min(d, d^perp)`:
/// (3) shortened distributions independent of `T` for `|T| <= t`,
/// (4) the same for punctured codes, then (1) every `B_w(C)` is a
/// `t`-design and (2) every `B_w(C^perp)` is, when affordable.
pub fn characterization(c: &LinearCode, t: usize, budgets: Budgets) -> Result<AmReport> {
    let b = basics(c, t, budgets)?;
    let nu = c.length();
    let mut r = empty_report(Mode::Characterization, c, t, &b);
    let per_set = c.size().unwrap_or(u128::MAX);
    let sets: u128 = (1..=t).map(|k| crate::binomial_u128(nu as u64, k as u64)).sum();
    let work = per_set.saturating_mul(sets).saturating_mul(2);
    if work > budgets.codewords.saturating_mul(64) {
        return Err(Error::budget("characterization", work, budgets.codewords.saturating_mul(64)));
    }

    for (number, punctured) in [(3u8, false), (4u8, true)] {
        let mut holds = true;
        let mut detail = String::from("vacuous for t = 0");
        for k in 1..=t {
            let outcome = if punctured {
                invariant_under(c, k, budgets.codewords, |c, t| c.puncture(t))?
            } else {
                invariant_under(c, k, budgets.codewords, |c, t| c.shorten(t))?
            };
            match outcome {
                Ok(wd) => detail = format!("|T| = {k}: {wd}"),
                Err((t0, t1)) => {
                    holds = false;
                    detail = format!("|T| = {k}: T = {t0:?} and T = {t1:?} differ");
                    break;
                }
            }
        }
        r.statements.push(Statement { number, holds: Some(holds), detail });
    }

    // (1): every support design of C.
    let mut verdict1 = Some(true);
    for w in b.wd.nonzero_weights() {
        if t == 0 {
            break;
        }
        let check = check_design(support_design(c, w, budgets.codewords), t, budgets.design_steps)?;
        match check {
            Check::Design(_) => {}
            Check::NotDesign => verdict1 = Some(false),
            Check::Budget(_) => {
                if verdict1 == Some(true) {
                    verdict1 = None;
                }
            }
        }
        r.push(design_fact(format!("B_{w}(C)"), t, &check));
    }
    r.statements.push(Statement { number: 1, holds: verdict1, detail: "support designs of C".into() });

    // (2): every support design of the dual, only when the dual is small.
    let dual_dim = nu - c.dimension();
    let dual_size = (c.q() as u128).checked_pow(dual_dim as u32).unwrap_or(u128::MAX);
    let verdict2 = if t > 0 && dual_size <= budgets.codewords {
        let dual = c.dual();
        let dwd = dual.weight_distribution_with_budget(budgets.codewords)?;
        let mut v = Some(true);
        for w in dwd.nonzero_weights() {
            let check = check_design(support_design(&dual, w, budgets.codewords), t, budgets.design_steps)?;
            match check {
                Check::Design(_) => {}
                Check::NotDesign => v = Some(false),
                Check::Budget(_) => v = v.and(None),
            }
            r.push(design_fact(format!("B_{w}(C^perp)"), t, &check));
        }
        v
    } else if t == 0 {
        Some(true)
    } else {
        None
    };
    r.statements.push(Statement {
        number: 2,
        holds: verdict2,
        detail: if verdict2.is_some() { "support designs of C^perp".into() } else { "dual too large".into() },
    });
    if t == 0 {
        for s in r.statements.iter_mut() {
            s.holds = Some(true);
            s.detail = "vacuous for t = 0".into();
        }
    }

    let evaluated: Vec<bool> = r.statements.iter().filter_map(|s| s.holds).collect();
    let agree = evaluated.windows(2).all(|w| w[0] == w[1]);
    r.push(Fact::new(
        "agreement",
        "statements",
        if agree { Status::Verified } else { Status::Failed },
        format!("{} statements evaluated", evaluated.len()),
    ));
    r.verdict = match (agree, evaluated.first()) {
        (true, Some(true)) => Verdict::Yes,
        (true, Some(false)) => Verdict::No,
        _ => Verdict::Undecided,
    };
    Ok(r)
}

/// Random binary `[nu, k]` code whose columns are distinct nonzero vectors,
/// so `d^perp >= 3`. Needs `nu < 2^k`.
pub fn random_projective_code(nu: usize, k: usize, rng: &mut impl Rng) -> Result<LinearCode> {
    if k == 0 || k > 20 || nu >= 1 << k {
        return Err(Error::Parameter(format!("need nu < 2^k, got nu={nu}, k={k}")));
    }
    let field = std::sync::Arc::new(FieldTable::binary(1)?);
    loop {
        let cols = rand::seq::index::sample(rng, (1 << k) - 1, nu);
        let cols: Vec<usize> = cols.into_iter().map(|c| c + 1).collect();
        let rows: Vec<Vec<u32>> = (0..k).map(|i| cols.iter().map(|&c| (c >> i) as u32 & 1).collect()).collect();
        let code = LinearCode::from_rows(field.clone(), rows)?;
        if code.dimension() == k {
            return Ok(code);
        }
    }
}

/// A seeded random binary `[nu, k]` code with `t < min(d, d^perp)` whose
/// shortened distributions depend on `T`, and a weight whose support
/// design fails the `t`-design test.
pub fn characterization_witness(
    nu: usize,
    k: usize,
    t: usize,
    seed: u64,
    max_tries: usize,
) -> Result<(LinearCode, usize, AmReport)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budgets = Budgets::default();
    for _ in 0..max_tries {
        let code = random_projective_code(nu, k, &mut rng)?;
        let report = match characterization(&code, t, budgets) {
            Ok(r) => r,
            Err(Error::Parameter(_)) => continue,
            Err(e) => return Err(e),
        };
        let s3 = report.statements.iter().find(|s| s.number == 3).and_then(|s| s.holds);
        if s3 != Some(false) {
            continue;
        }
        let bad = report
            .facts
            .iter()
            .find(|f| f.kind == "design" && f.status == Status::Failed && f.subject.ends_with("(C)"))
            .and_then(|f| f.subject.strip_prefix("B_")?.strip_suffix("(C)")?.parse().ok());
        if let Some(w) = bad {
            return Ok((code, w, report));
        }
    }
    Err(Error::budget("witness search", max_tries as u128 + 1, max_tries as u128))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::{kasami, VectorialFunction};
    use crate::constructions::{code_from_bent_support, code_from_vectorial, ternary_code};

    fn hamming8() -> LinearCode {
        let f = std::sync::Arc::new(FieldTable::binary(1).unwrap());
        let rows = vec![
            vec![1, 0, 0, 0, 0, 1, 1, 1],
            vec![0, 1, 0, 0, 1, 0, 1, 1],
            vec![0, 0, 1, 0, 1, 1, 0, 1],
            vec![0, 0, 0, 1, 1, 1, 1, 0],
        ];
        LinearCode::from_rows(f, rows).unwrap()
    }

    fn df6() -> LinearCode {
        let f = VectorialFunction::from_exponent(6, 3).unwrap().scale(1).with_trace_to(1).unwrap();
        code_from_bent_support(&f).unwrap().code
    }

    fn cf6() -> LinearCode {
        let f = VectorialFunction::from_exponent(6, 3).unwrap().scale(1).with_trace_to(3).unwrap();
        code_from_vectorial(&f).unwrap().code
    }

    #[test]
    fn classic_on_hamming_and_bent_codes() {
        let b = Budgets::default();
        let h = classic_am(&hamming8(), 3, b).unwrap();
        assert_eq!((h.verdict, h.d, h.dual_d), (Verdict::Yes, Some(4), Some(4)));
        assert!(classic_am(&hamming8(), 4, b).is_err());
        let r = classic_am(&df6(), 2, b).unwrap();
        assert_eq!(r.weights_in_range, vec![16, 20]);
        assert_eq!(r.verdict, Verdict::Yes);
        let r = classic_am(&cf6(), 2, b).unwrap();
        assert_eq!(r.weights_in_range, vec![28, 32, 36]);
        assert_eq!(r.verdict, Verdict::No);
    }

    #[test]
    fn generalized_on_vectorial_bent_code() {
        let r = generalized_am(&cf6(), 2, &[28, 36], Budgets::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Yes);
        assert!(r.facts.iter().any(|f| f.subject == "B_32(C)" && f.status == Status::Verified));
        assert!(r.facts.iter().filter(|f| f.kind == "conclusion").all(|f| f.status == Status::Verified));
        assert_eq!(r.derived_sets, vec![(0, vec![28, 36, 63, 64]), (1, vec![28, 36, 63])]);
    }

    #[test]
    fn generalized_on_ternary_and_kasami() {
        let t = ternary_code(3).unwrap().code;
        let r = generalized_am(&t, 2, &[6, 9, 12], Budgets::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Yes);
        assert!(r.facts.iter().any(|f| f.kind == "s_range"));
        assert!(r.facts.iter().any(|f| f.subject == "B_4(C^perp)" && f.status == Status::Verified));
        let k = code_from_vectorial(&kasami(5, 2).unwrap().function).unwrap().code;
        let r = generalized_am(&k, 2, &[12, 20], Budgets::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Yes);
    }

    #[test]
    fn generalized_hypothesis_failure_and_budget() {
        // Leaving the failing weight out of S breaks hypothesis (i).
        let (code, w, _) = characterization_witness(16, 5, 2, 0, 500).unwrap();
        let weights = code.weight_distribution().unwrap().nonzero_weights();
        let others: Vec<usize> = weights.iter().copied().filter(|&x| x != w).collect();
        let r = generalized_am(&code, 2, &others, Budgets::default()).unwrap();
        assert_eq!(r.verdict, Verdict::No);
        let tiny = Budgets { codewords: DEFAULT_CODEWORD_BUDGET, design_steps: 1 };
        let r = generalized_am(&cf6(), 2, &[28, 36], tiny).unwrap();
        assert_eq!(r.verdict, Verdict::Undecided);
    }

    #[test]
    fn classic_yes_implies_generalized_yes() {
        for (code, t) in [(hamming8(), 3), (df6(), 2), (hamming8(), 1)] {
            let b = Budgets::default();
            let c = classic_am(&code, t, b).unwrap();
            if c.verdict == Verdict::Yes {
                let g = generalized_am(&code, t, &c.weights_in_range, b).unwrap();
                assert_eq!(g.verdict, Verdict::Yes);
            }
        }
    }

    #[test]
    fn characterization_on_bent_code() {
        let r = characterization(&df6(), 2, Budgets::default()).unwrap();
        let holds = |n| r.statements.iter().find(|s| s.number == n).unwrap().holds;
        assert_eq!((holds(1), holds(3), holds(4)), (Some(true), Some(true), Some(true)));
        assert_eq!(holds(2), None);
        assert_eq!(r.verdict, Verdict::Yes);
    }

    #[test]
    fn characterization_t_zero_is_vacuous() {
        let r = characterization(&hamming8(), 0, Budgets::default()).unwrap();
        assert!(r.statements.iter().all(|s| s.holds == Some(true)));
    }

    #[test]
    fn characterization_on_hamming_evaluates_all_four() {
        let r = characterization(&hamming8(), 3, Budgets::default()).unwrap();
        assert!(r.statements.iter().all(|s| s.holds == Some(true)));
    }

    #[test]
    fn witness_is_reproducible() {
        let (c1, w1, r1) = characterization_witness(16, 5, 2, 7, 500).unwrap();
        let (c2, w2, r2) = characterization_witness(16, 5, 2, 7, 500).unwrap();
        assert_eq!(c1.rows(), c2.rows());
        assert_eq!(w1, w2);
        assert_eq!(r1.to_json().to_string(), r2.to_json().to_string());
        assert_eq!(r1.verdict, Verdict::No);
    }
}
