//! The worked examples as executable checks. Each criterion rebuilds its
//! objects from scratch, compares against literal expected values, and is
//! timed against its limit.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::am::{characterization, characterization_witness, classic_am, generalized_am, Budgets, Verdict};
use crate::boolfn::{kasami, VectorialFunction};
use crate::code::{LinearCode, WeightDistribution};
use crate::constructions::{code_from_bent_support, code_from_vectorial, pair_lambda_histogram, steiner_from_function, ternary_code};
use crate::designs::{dual_support_design, expected_lambda, support_design};
use crate::error::Error;
use crate::exact::binom;
use crate::moments::{a4_dual_from_two_valued, moment_check, solve_distribution};
use crate::predictor::{punctured_predict, shortened_predict, table_predict, two_valued_design_lambdas, Family, PredictedDistribution};
use crate::DEFAULT_CODEWORD_BUDGET;

#[derive(Debug)]
pub struct Failure(pub String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = std::result::Result<Vec<String>, Failure>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), Failure> {
    if cond {
        Ok(())
    } else {
        Err(Failure(msg()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub subset: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub elapsed_ms: u128,
    pub limit_ms: Option<u128>,
    pub details: Vec<String>,
}

pub struct Criterion {
    pub id: u8,
    pub subset: &'static str,
    pub title: &'static str,
    pub limit: Option<Duration>,
    check: fn() -> Outcome,
}

impl Criterion {
    pub fn run(&self) -> CriterionResult {
        let start = Instant::now();
        let outcome = (self.check)();
        let elapsed = start.elapsed();
        let (mut passed, mut details) = match outcome {
            Ok(d) => (true, d),
            Err(Failure(msg)) => (false, vec![msg]),
        };
        if let Some(limit) = self.limit {
            if elapsed >= limit {
                passed = false;
                details.push(format!("took {elapsed:?}, limit {limit:?}"));
            }
        }
        CriterionResult {
            id: self.id,
            subset: self.subset,
            title: self.title,
            passed,
            elapsed_ms: elapsed.as_millis(),
            limit_ms: self.limit.map(|l| l.as_millis()),
            details,
        }
    }
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

pub const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, subset: "bent-n6", title: "C(D_f) at n=6 and all its shortened/punctured codes", limit: secs(5), check: bent_n6 },
    Criterion { id: 2, subset: "vbent-n6", title: "C(F) at n=6 and all its shortened/punctured codes", limit: secs(10), check: vbent_n6 },
    Criterion { id: 3, subset: "predictor", title: "generic and tabulated predictions equal enumeration", limit: None, check: predictor },
    Criterion { id: 4, subset: "designs", title: "support designs of the n=6 codes", limit: secs(30), check: designs },
    Criterion { id: 5, subset: "moments", title: "power moments and the moment solver", limit: None, check: moments },
    Criterion { id: 6, subset: "ternary", title: "ternary code at m=3 and its Steiner system", limit: secs(5), check: ternary },
    Criterion { id: 7, subset: "kasami-n5", title: "Kasami n=5 spectra, code and designs", limit: secs(10), check: kasami_n5 },
    Criterion { id: 8, subset: "kasami-n10", title: "Kasami n=10 Steiner system S(2,4,1024)", limit: secs(180), check: kasami_n10 },
    Criterion { id: 9, subset: "am", title: "classic versus generalized Assmus-Mattson", limit: None, check: am },
    Criterion { id: 10, subset: "characterization", title: "shortened/punctured invariance characterization", limit: secs(60), check: characterize },
];

/// Runs the criteria whose subset name is in `subset` (all when `None`).
pub fn run(subset: Option<&str>) -> std::result::Result<Vec<CriterionResult>, Error> {
    let chosen: Vec<&Criterion> = CRITERIA.iter().filter(|c| subset.is_none_or(|s| s == c.subset || s == c.id.to_string())).collect();
    if chosen.is_empty() {
        let names: Vec<&str> = CRITERIA.iter().map(|c| c.subset).collect();
        return Err(Error::Parameter(format!("unknown subset; choose from {}", names.join(", "))));
    }
    Ok(chosen.into_iter().map(Criterion::run).collect())
}

/// `f(x) = Tr(alpha x^3)` over GF(2^6).
pub fn bent_example() -> VectorialFunction {
    VectorialFunction::from_exponent(6, 3).expect("GF(2^6)").scale(1).with_trace_to(1).expect("1 | 6")
}

/// `F(x) = Tr_{2^6/2^3}(alpha x^3)`.
pub fn vectorial_bent_example() -> VectorialFunction {
    VectorialFunction::from_exponent(6, 3).expect("GF(2^6)").scale(1).with_trace_to(3).expect("3 | 6")
}

/// Distinct weight distributions over every `T` of size `k`, with how many
/// `T` produced each.
pub fn distributions_over_all(c: &LinearCode, k: usize, punctured: bool) -> crate::Result<Vec<(WeightDistribution, usize)>> {
    let mut sets = Vec::new();
    crate::designs::for_each_subset(&(0..c.length() as u32).collect::<Vec<_>>(), k, |s| {
        sets.push(s.iter().map(|&x| x as usize).collect::<Vec<usize>>());
    });
    let dists: Vec<WeightDistribution> = sets
        .par_iter()
        .map(|t| {
            let derived = if punctured { c.puncture(t)? } else { c.shorten(t)? };
            derived.weight_distribution_with_budget(DEFAULT_CODEWORD_BUDGET)
        })
        .collect::<crate::Result<_>>()?;
    let mut distinct: Vec<(WeightDistribution, usize)> = Vec::new();
    for d in dists {
        match distinct.iter_mut().find(|(e, _)| *e == d) {
            Some((_, n)) => *n += 1,
            None => distinct.push((d, 1)),
        }
    }
    Ok(distinct)
}

fn params(wd: &WeightDistribution) -> String {
    format!("[{},{},{}]", wd.length(), wd.dimension, wd.minimum_distance().unwrap_or(0))
}

/// Every `T` of size `k` must give `expected` with parameters `dims`.
fn all_sets_give(c: &LinearCode, k: usize, punctured: bool, expected: &str, dims: &str) -> Outcome {
    let what = if punctured { "punctured" } else { "shortened" };
    let found = distributions_over_all(c, k, punctured)?;
    let total = binom(c.length() as i64, k as i64);
    ensure(found.len() == 1, || format!("{what} |T|={k}: {} distinct distributions", found.len()))?;
    let (wd, count) = &found[0];
    ensure(BigInt::from(*count) == total, || format!("{what} |T|={k}: covered {count} of {total} sets"))?;
    ensure(wd.to_string() == expected, || format!("{what} |T|={k}: got {wd}, expected {expected}"))?;
    ensure(params(wd) == dims, || format!("{what} |T|={k}: got {}, expected {dims}", params(wd)))?;
    Ok(vec![format!("{what} |T|={k}, all {total} sets: {dims} {wd}")])
}

fn bent_n6() -> Outcome {
    let report = code_from_bent_support(&bent_example())?;
    let c = &report.code;
    let wd = c.weight_distribution()?;
    let mut out = vec![format!("C(D_f): {} {wd}", params(&wd))];
    ensure(wd.to_string() == "1+63z^16+63z^20+z^36" && params(&wd) == "[36,7,16]", || format!("C(D_f) gave {} {wd}", params(&wd)))?;
    out.extend(all_sets_give(c, 1, false, "1+35z^16+28z^20", "[35,6,16]")?);
    out.extend(all_sets_give(c, 1, true, "1+28z^15+35z^16+35z^19+28z^20+z^35", "[35,7,15]")?);
    out.extend(all_sets_give(c, 2, false, "1+19z^16+12z^20", "[34,5,16]")?);
    out.extend(all_sets_give(c, 2, true, "1+12z^14+32z^15+19z^16+19z^18+32z^19+12z^20+z^34", "[34,7,14]")?);
    Ok(out)
}

fn vbent_n6() -> Outcome {
    let report = code_from_vectorial(&vectorial_bent_example())?;
    let c = &report.code;
    let wd = c.weight_distribution()?;
    let mut out = vec![format!("C(F): {} {wd}", params(&wd))];
    ensure(
        wd.to_string() == "1+448z^28+126z^32+448z^36+z^64" && params(&wd) == "[64,10,28]",
        || format!("C(F) gave {} {wd}", params(&wd)),
    )?;
    out.extend(all_sets_give(c, 1, false, "1+252z^28+63z^32+196z^36", "[63,9,28]")?);
    out.extend(all_sets_give(c, 1, true, "1+196z^27+252z^28+63z^31+63z^32+252z^35+196z^36+z^63", "[63,10,27]")?);
    out.extend(all_sets_give(c, 2, false, "1+140z^28+31z^32+84z^36", "[62,8,28]")?);
    out.extend(all_sets_give(
        c,
        2,
        true,
        "1+84z^26+224z^27+140z^28+31z^30+64z^31+31z^32+140z^34+224z^35+84z^36+z^62",
        "[62,10,26]",
    )?);
    Ok(out)
}

fn same(p: &PredictedDistribution, q: &PredictedDistribution) -> bool {
    p.q == q.q && p.counts == q.counts
}

fn predictor() -> Outcome {
    let mut out = Vec::new();
    let codes = [
        ("C(D_f)", code_from_bent_support(&bent_example())?.code),
        ("C(F)", code_from_vectorial(&vectorial_bent_example())?.code),
    ];
    for (name, c) in &codes {
        let wd = c.weight_distribution()?;
        for t in 1..=2 {
            for punctured in [false, true] {
                let predicted = if punctured { punctured_predict(&wd, t)? } else { shortened_predict(&wd, t)? };
                for (got, n) in distributions_over_all(c, t, punctured)? {
                    ensure(predicted.matches(&got), || {
                        format!("{name} t={t} punctured={punctured}: predicted {predicted}, enumerated {got} ({n} sets)")
                    })?;
                }
                out.push(format!("{name} t={t} {}: {predicted}", if punctured { "punctured" } else { "shortened" }));
            }
        }
    }
    let params = [(Family::BentCode, [(6u64, 36u64), (6, 28), (8, 136), (8, 120), (10, 528)]), (Family::VbentCode, [(3, 3), (3, 1), (4, 2), (4, 4), (5, 3)])];
    for family in Family::ALL {
        let Some((parent, t, short)) = family.parent() else { continue };
        for &(p1, p2) in &params.iter().find(|(f, _)| *f == parent).expect("parent listed").1 {
            let table = table_predict(family, p1, p2)?;
            let base = table_predict(parent, p1, p2)?;
            let signed = base.signed_counts();
            let generic = if short {
                crate::predictor::shortened_predict_counts(base.q, &signed, t)?
            } else {
                crate::predictor::punctured_predict_counts(base.q, &signed, t)?
            };
            ensure(same(&table, &generic), || format!("{family}({p1},{p2}): table {table} vs generic {generic}"))?;
        }
        out.push(format!("{family}: table equals generic prediction"));
    }
    Ok(out)
}

fn check_2_design(c: &LinearCode, w: usize, dual: bool) -> std::result::Result<(u64, String), Failure> {
    let design = if dual { dual_support_design(c, w, DEFAULT_CODEWORD_BUDGET)? } else { support_design(c, w, DEFAULT_CODEWORD_BUDGET)? };
    let name = if dual { format!("B_{w}(C^perp)") } else { format!("B_{w}(C)") };
    let lambda = design.is_t_design(2)?.ok_or_else(|| Failure(format!("{name} is not a 2-design")))?;
    let expected = expected_lambda(design.total_blocks(), c.length(), w, 2);
    ensure(expected.is_integer() && *expected.numer() == BigInt::from(lambda), || {
        format!("{name}: counted lambda {lambda}, b C(k,2)/C(nu,2) = {expected}")
    })?;
    Ok((lambda, format!("{name}: 2-({}, {w}, {lambda}) with {} blocks", c.length(), design.total_blocks())))
}

fn designs() -> Outcome {
    let mut out = Vec::new();
    let df = code_from_bent_support(&bent_example())?.code;
    for (w, lambda) in [(16, 12u64), (20, 19)] {
        let (l, line) = check_2_design(&df, w, false)?;
        ensure(l == lambda, || format!("B_{w}(C(D_f)): lambda {l}, expected {lambda}"))?;
        out.push(format!("C(D_f) {line}"));
    }
    let cf = code_from_vectorial(&vectorial_bent_example())?.code;
    for w in [28, 32, 36] {
        out.push(format!("C(F) {}", check_2_design(&cf, w, false)?.1));
    }
    out.push(format!("C(F) {}", check_2_design(&cf, 4, true)?.1));
    Ok(out)
}

fn moments() -> Outcome {
    let mut out = Vec::new();
    let codes = [
        ("C(D_f)", code_from_bent_support(&bent_example())?.code),
        ("C(F)", code_from_vectorial(&vectorial_bent_example())?.code),
    ];
    for (name, c) in &codes {
        let mut cases = vec![(format!("{name}"), c.clone())];
        let last = c.length() - 1;
        for t in [vec![0], vec![last], vec![0, 1], vec![last - 1, last]] {
            cases.push((format!("{name} shortened at {t:?}"), c.shorten(&t)?));
            cases.push((format!("{name} punctured at {t:?}"), c.puncture(&t)?));
        }
        for (label, code) in cases {
            let wd = code.weight_distribution()?;
            let dual = code.dual_weight_prefix(5, 1 << 32)?;
            let report = moment_check(&wd, &dual, 5)?;
            ensure(report.all_hold(), || format!("{label}: moment t={:?} fails", report.first_failure))?;
            out.push(format!("{label}: moments t<=5 hold, A^perp_0..5 = {dual:?}"));
        }
    }
    let mut known = vec![BigInt::zero(); 37];
    known[0] = BigInt::one();
    known[36] = BigInt::one();
    let solved = solve_distribution(36, 7, 2, &[16, 20], &known, &[BigInt::zero()])?;
    ensure(solved.counts[16] == BigInt::from(63) && solved.counts[20] == BigInt::from(63), || {
        format!("solver gave A_16 = {}, A_20 = {}", solved.counts[16], solved.counts[20])
    })?;
    out.push("solve S={16,20}: A_16 = A_20 = 63".into());
    Ok(out)
}

fn ternary() -> Outcome {
    let m = 3u32;
    let report = ternary_code(m)?;
    let c = &report.code;
    let wd = c.weight_distribution()?;
    let nu = (3usize.pow(m) - 1) / 2;
    let d = 3usize.pow(m - 1) - 3usize.pow((m - 1) / 2);
    ensure(params(&wd) == format!("[{nu},{},{d}]", 2 * m) && params(&wd) == "[13,6,6]", || format!("ternary code {}", params(&wd)))?;
    ensure(wd.nonzero_weights() == vec![6, 9, 12], || format!("weights {:?}", wd.nonzero_weights()))?;
    let dd = c.dual_distance(DEFAULT_CODEWORD_BUDGET)?;
    ensure(dd == Some(4), || format!("d^perp = {dd:?}"))?;
    let b4 = dual_support_design(c, 4, DEFAULT_CODEWORD_BUDGET)?;
    ensure(b4.total_blocks() == 13 && b4.is_simple(), || format!("B_4(C^perp) has {} blocks", b4.total_blocks()))?;
    let mut pairs = BTreeMap::new();
    for x in 0..13u32 {
        for y in x + 1..13 {
            *pairs.entry(b4.count_intersection(&[], &[x, y])).or_insert(0u32) += 1;
        }
    }
    ensure(pairs == BTreeMap::from([(1, 78)]), || format!("pair coverage {pairs:?}"))?;
    Ok(vec![format!("[13,6,6] {wd}"), "d^perp = 4; B_4(C^perp) = S(2,4,13), 13 blocks, 78 pairs each once".into()])
}

fn kasami_n5() -> Outcome {
    let f = kasami(5, 2)?.function;
    let diff = f.diff_spectrum()?.values();
    ensure(diff == [0, 2].into(), || format!("differential values {diff:?}"))?;
    let walsh = f.walsh_value_set();
    ensure(walsh == [-8, 0, 8].into(), || format!("Walsh values {walsh:?}"))?;
    let c = code_from_vectorial(&f)?.code;
    let wd = c.weight_distribution()?;
    ensure(
        wd.to_string() == "1+496z^12+1054z^16+496z^20+z^32" && params(&wd) == "[32,11,12]",
        || format!("C(F) {} {wd}", params(&wd)),
    )?;
    let predicted = table_predict(Family::TwoValuedCode, 5, 1)?;
    ensure(predicted.matches(&wd), || format!("two-valued table {predicted}"))?;
    let dd = c.dual_distance(DEFAULT_CODEWORD_BUDGET)?;
    ensure(dd == Some(6), || format!("d^perp = {dd:?}"))?;
    let mut out = vec![format!("C(F) [32,11,12] {wd}, d^perp = 6")];
    let formulas = two_valued_design_lambdas(5, 1)?;
    for ((w, lambda), (k, formula)) in [(12usize, 66u64), (16, 255), (20, 190)].into_iter().zip(formulas) {
        let (l, line) = check_2_design(&c, w, false)?;
        ensure(l == lambda && k == w as u64 && formula == BigInt::from(lambda), || {
            format!("B_{w}: counted {l}, expected {lambda}, formula ({k}, {formula})")
        })?;
        out.push(line);
    }
    Ok(out)
}

fn kasami_n10() -> Outcome {
    let f = kasami(10, 2)?.function;
    let diff = f.diff_spectrum()?.values();
    ensure(diff == [0, 4].into(), || format!("differential values {diff:?}"))?;
    let design = steiner_from_function(&f, 1 << 24)?;
    let a4 = a4_dual_from_two_valued(10, 2)?;
    ensure(BigInt::from(design.total_blocks()) == a4 && a4 == BigInt::from(87296), || {
        format!("{} blocks, A^perp_4 = {a4}", design.total_blocks())
    })?;
    ensure(design.is_simple(), || "repeated blocks".into())?;
    let hist = pair_lambda_histogram(&f, 1 << 22)?;
    let pairs = 1024u64 * 1023 / 2;
    ensure(hist == vec![(num_rational::BigRational::one(), pairs)], || format!("pair lambdas {hist:?}"))?;
    let lambda = design.is_t_design(2)?;
    ensure(lambda == Some(1), || format!("block count check gives {lambda:?}"))?;
    Ok(vec![format!("87296 blocks = A^perp_4; all {pairs} pairs have (delta-2)/2 = 1 and lie in one block")])
}

fn am() -> Outcome {
    let b = Budgets::default();
    let mut out = Vec::new();
    let cf = code_from_vectorial(&vectorial_bent_example())?.code;
    let classic = classic_am(&cf, 2, b)?;
    ensure(classic.verdict == Verdict::No, || format!("classic on C(F): {:?}", classic.verdict))?;
    out.push(format!("classic C(F) t=2: no, weights {:?}", classic.weights_in_range));
    let cases: [(&str, LinearCode, Vec<usize>); 3] = [
        ("C(F) n=6", cf, vec![28, 36]),
        ("ternary m=3", ternary_code(3)?.code, vec![6, 9, 12]),
        ("Kasami n=5", code_from_vectorial(&kasami(5, 2)?.function)?.code, vec![12, 20]),
    ];
    for (name, c, s) in cases {
        let r = generalized_am(&c, 2, &s, b)?;
        ensure(r.verdict == Verdict::Yes, || format!("generalized on {name}: {:?} {:?}", r.verdict, r.facts))?;
        out.push(format!("generalized {name} t=2 S={s:?}: yes"));
    }
    let h = hamming8();
    let r = classic_am(&h, 3, b)?;
    ensure(r.verdict == Verdict::Yes, || format!("classic on [8,4,4]: {:?}", r.verdict))?;
    for w in h.weight_distribution()?.nonzero_weights() {
        let design = support_design(&h, w, DEFAULT_CODEWORD_BUDGET)?;
        let l = design.is_t_design(3)?;
        ensure(l.is_some(), || format!("B_{w}([8,4,4]) is not a 3-design"))?;
        out.push(format!("[8,4,4] B_{w}: 3-design, lambda {}", l.unwrap()));
    }
    Ok(out)
}

/// The extended Hamming code `[8, 4, 4]`.
pub fn hamming8() -> LinearCode {
    let f = std::sync::Arc::new(crate::gf::FieldTable::binary(1).expect("GF(2)"));
    let rows = vec![
        vec![1, 0, 0, 0, 0, 1, 1, 1],
        vec![0, 1, 0, 0, 1, 0, 1, 1],
        vec![0, 0, 1, 0, 1, 1, 0, 1],
        vec![0, 0, 0, 1, 1, 1, 1, 0],
    ];
    LinearCode::from_rows(f, rows).expect("rows are valid")
}

fn characterize() -> Outcome {
    let df = code_from_bent_support(&bent_example())?.code;
    let r = characterization(&df, 2, Budgets::default())?;
    let holds = |n: u8| r.statements.iter().find(|s| s.number == n).and_then(|s| s.holds);
    ensure(holds(1) == Some(true) && holds(3) == Some(true) && holds(4) == Some(true), || {
        format!("C(D_f) statements {:?}", r.statements)
    })?;
    ensure(r.verdict == Verdict::Yes, || "statements disagree".into())?;
    let mut out = vec!["C(D_f) t=2: statements (1), (3), (4) true and agree".into()];
    let (code, w, report) = characterization_witness(16, 5, 2, 0, 500)?;
    let s3 = report.statements.iter().find(|s| s.number == 3).and_then(|s| s.holds);
    ensure(s3 == Some(false), || "witness satisfies (3)".into())?;
    let design = support_design(&code, w, DEFAULT_CODEWORD_BUDGET)?;
    ensure(design.is_t_design(2)?.is_none(), || format!("B_{w} of the witness is a 2-design"))?;
    out.push(format!("seed 0 [16,5] code: (3) false, B_{w} fails the 2-design test"));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_selection() {
        assert!(run(Some("nonexistent")).is_err());
        let r = run(Some("ternary")).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].passed, "{:?}", r[0].details);
    }
}
