//! Codes built from Boolean and vectorial functions, and Steiner systems
//! read off differentially two-valued maps.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::boolfn::{VectorialFunction, DEFAULT_DIFF_BUDGET};
use crate::code::{LinearCode, WeightDistribution};
use crate::designs::Design;
use crate::error::{Error, Result};
use crate::gf::FieldTable;
use crate::moments::solve_distribution;
use crate::predictor::{table_predict, Family, PredictedDistribution};

/// A constructed code with its coordinate labels and whatever closed-form
/// prediction applies to it.
#[derive(Clone, Debug)]
pub struct ConstructionReport {
    pub name: String,
    pub code: LinearCode,
    /// Label of each coordinate, strictly increasing.
    pub labels: Vec<u32>,
    /// Table the construction promises, when its hypothesis holds.
    pub family: Option<(Family, u64, u64)>,
    pub predicted: Option<PredictedDistribution>,
    /// `[length, dimension, d]` the construction claims.
    pub claimed: Option<[usize; 3]>,
    /// Facts established while building, such as `bent = true`.
    pub facts: Vec<(String, String)>,
}

/// Outcome of enumerating a report's code.
#[derive(Clone, Debug)]
pub struct Verification {
    pub distribution: WeightDistribution,
    pub predicted_match: Option<bool>,
    pub claimed_match: Option<bool>,
}

impl ConstructionReport {
    /// Enumerates the code and compares with the prediction and claim.
    pub fn verify(&self, budget: u128) -> Result<Verification> {
        let distribution = self.code.weight_distribution_with_budget(budget)?;
        let predicted_match = self.predicted.as_ref().map(|p| p.matches(&distribution));
        let claimed_match = self.claimed.map(|[nu, k, d]| {
            distribution.length() == nu
                && distribution.dimension == k
                && distribution.minimum_distance() == Some(d)
        });
        Ok(Verification { distribution, predicted_match, claimed_match })
    }

    fn fact(&mut self, key: &str, value: impl ToString) {
        self.facts.push((key.to_string(), value.to_string()));
    }
}

fn gf2() -> Arc<FieldTable> {
    Arc::new(FieldTable::binary(1).expect("GF(2)"))
}

/// `C(D_f)`: coordinates are the support of the Boolean function `f`,
/// rows are `d -> Tr(x d)` for `x` in the power basis, plus the all-one row.
pub fn code_from_bent_support(f: &VectorialFunction) -> Result<ConstructionReport> {
    if f.l() != 1 {
        return Err(Error::Parameter(format!("C(D_f) needs a Boolean function, got l = {}", f.l())));
    }
    let field = f.input_field();
    let n = f.n();
    let support = f.support();
    if support.is_empty() {
        return Err(Error::Parameter("f has empty support".into()));
    }
    let tr = field.trace_table(1)?;
    let mut rows: Vec<Vec<u32>> =
        (0..n).map(|i| support.iter().map(|&d| tr[field.mul(1 << i, d) as usize]).collect()).collect();
    rows.push(vec![1; support.len()]);
    let code = LinearCode::from_rows(gf2(), rows)?;
    let bent = f.is_bent();
    let nu = support.len() as u64;
    let family = (bent && n >= 6).then_some((Family::BentCode, n as u64, nu));
    let predicted = family.and_then(|(fam, a, b)| table_predict(fam, a, b).ok());
    let claimed = predicted.as_ref().map(|p| [p.length(), p.dimension.unwrap_or(0), p.min_distance.unwrap_or(0)]);
    let mut report = ConstructionReport {
        name: "bent-support".into(),
        code,
        labels: support,
        family,
        predicted,
        claimed,
        facts: Vec::new(),
    };
    report.fact("n", n);
    report.fact("nu_f", nu);
    report.fact("bent", bent);
    Ok(report)
}

/// `C(F)`: coordinates are all of GF(2^n); rows are `x -> Tr_l(a F(x))` and
/// `x -> Tr_n(b x)` over power bases, plus the all-one row.
pub fn code_from_vectorial(f: &VectorialFunction) -> Result<ConstructionReport> {
    let input = f.input_field();
    let output = f.output_field();
    let (n, l) = (f.n(), f.l());
    let tr_in = input.trace_table(1)?;
    let tr_out = output.trace_table(1)?;
    let mut rows: Vec<Vec<u32>> = (0..l)
        .into_par_iter()
        .map(|i| f.table().iter().map(|&y| tr_out[output.mul(1 << i, y) as usize]).collect())
        .collect();
    rows.extend((0..n).map(|i| input.elements().map(|x| tr_in[input.mul(1 << i, x) as usize]).collect()));
    rows.push(vec![1; input.size() as usize]);
    let code = LinearCode::from_rows(gf2(), rows)?;
    let mut report = ConstructionReport {
        name: "vectorial".into(),
        code,
        labels: input.elements().collect(),
        family: None,
        predicted: None,
        claimed: None,
        facts: Vec::new(),
    };
    report.fact("n", n);
    report.fact("l", l);
    let vbent = n % 2 == 0 && 2 * l <= n && f.is_bent_vectorial();
    report.fact("bent_vectorial", vbent);
    if vbent {
        report.family = Some((Family::VbentCode, (n / 2) as u64, l as u64));
    } else if l == n && (1u128 << (2 * n)) <= DEFAULT_DIFF_BUDGET {
        let s = f.two_valued_s()?;
        report.fact("two_valued_s", s.map_or("none".to_string(), |s| s.to_string()));
        if let Some(s) = s.filter(|&s| s < n && (n + s) % 2 == 0) {
            report.family = Some((Family::TwoValuedCode, n as u64, s as u64));
        }
    }
    report.predicted = report.family.and_then(|(fam, a, b)| table_predict(fam, a, b).ok());
    report.claimed = report.predicted.as_ref().map(|p| [p.length(), p.dimension.unwrap_or(0), p.min_distance.unwrap_or(0)]);
    Ok(report)
}

/// First-order Reed-Muller code `RM(1, n)` over the coordinate order `0..2^n`.
pub fn rm1(n: u32) -> Result<LinearCode> {
    if !(2..=24).contains(&n) {
        return Err(Error::Parameter(format!("rm1 needs 2 <= n <= 24, got {n}")));
    }
    let len = 1usize << n;
    let mut rows: Vec<Vec<u32>> = (0..n).map(|i| (0..len).map(|x| (x >> i) as u32 & 1).collect()).collect();
    rows.push(vec![1; len]);
    LinearCode::from_rows(gf2(), rows)
}

/// Ternary code with coordinates `i = 0..(3^m - 1)/2`, rows
/// `i -> Tr(a alpha^(4i))` and `i -> Tr(b alpha^(2i))` for `a, b` in the
/// power basis of GF(3^m). Requires odd `m`.
pub fn ternary_code(m: u32) -> Result<ConstructionReport> {
    if m % 2 == 0 {
        return Err(Error::Parameter(format!("ternary code needs odd m, got {m}")));
    }
    let field = Arc::new(FieldTable::new(3, m, None)?);
    let q = field.size() as u64;
    let nu = ((q - 1) / 2) as usize;
    let tr = field.trace_table(1)?;
    let basis: Vec<u32> = (0..m).map(|j| 3u32.pow(j)).collect();
    let row = |a: u32, step: u64| -> Vec<u32> {
        (0..nu as u64).map(|i| tr[field.mul(a, field.exp(step * i)) as usize]).collect()
    };
    let mut rows: Vec<Vec<u32>> = basis.iter().map(|&a| row(a, 4)).collect();
    rows.extend(basis.iter().map(|&b| row(b, 2)));
    let gf3 = Arc::new(FieldTable::new(3, 1, None)?);
    let code = LinearCode::from_rows(gf3, rows)?;

    let h = 3u64.pow((m - 1) / 2);
    let mid = 3u64.pow(m - 1);
    let weights = [(mid - h) as usize, mid as usize, (mid + h) as usize];
    let mut known = vec![BigInt::zero(); nu + 1];
    known[0] = BigInt::one();
    // Three unknown weights and d^perp >= 4 pin the distribution down.
    let predicted = solve_distribution(nu, 2 * m as usize, 3, &weights, &known, &[BigInt::zero(), BigInt::zero()])
        .ok()
        .and_then(|s| {
            let counts: Option<Vec<BigUint>> = s.counts.iter().map(|c| c.to_biguint()).collect();
            counts.map(|c| PredictedDistribution::from_counts(3, c, "three weights with d^perp >= 4"))
        });
    let mut report = ConstructionReport {
        name: "ternary".into(),
        code,
        labels: (0..nu as u32).collect(),
        family: None,
        predicted,
        claimed: Some([nu, 2 * m as usize, weights[0]]),
        facts: Vec::new(),
    };
    report.fact("m", m);
    report.fact("weights", format!("{:?}", weights));
    Ok(report)
}

/// `(delta(x1 + x2, F(x1) + F(x2)) - 2) / 2`: the number of weight-4 dual
/// supports of `C(F)` through the pair `{x1, x2}`.
pub fn pair_lambda(f: &VectorialFunction, x1: u32, x2: u32) -> BigRational {
    let a = x1 ^ x2;
    let b = f.eval(x1) ^ f.eval(x2);
    let delta = (0..f.input_field().size()).filter(|&x| f.eval(x) ^ f.eval(x ^ a) == b).count() as i64;
    BigRational::new(BigInt::from(delta - 2), BigInt::from(2))
}

/// Histogram of `pair_lambda` over all unordered pairs, read from the
/// difference table.
pub fn pair_lambda_histogram(f: &VectorialFunction, budget: u128) -> Result<Vec<(BigRational, u64)>> {
    let table = f.difference_table(budget)?;
    let size = f.input_field().size();
    let mut hist: HashMap<u32, u64> = HashMap::new();
    for x1 in 0..size {
        for x2 in x1 + 1..size {
            *hist.entry(table.delta(x1 ^ x2, f.eval(x1) ^ f.eval(x2))).or_insert(0) += 1;
        }
    }
    let mut out: Vec<(BigRational, u64)> = hist
        .into_iter()
        .map(|(d, c)| (BigRational::new(BigInt::from(d as i64 - 2), BigInt::from(2)), c))
        .collect();
    out.sort();
    Ok(out)
}

/// Blocks `{x, x+a, y, y+a}` with `F(x) + F(x+a) = F(y) + F(y+a)`: the
/// supports of weight-4 words of `C(F)^perp`. Each block is emitted once,
/// for the pairing that puts its two smallest points together.
pub fn steiner_from_function(f: &VectorialFunction, budget: u128) -> Result<Design> {
    let table = f.difference_table(budget.max(DEFAULT_DIFF_BUDGET))?;
    let size = f.input_field().size();
    let mut triple_count: u128 = 0;
    for a in 1..size {
        for &d in table.row(a) {
            let pairs = (d / 2) as u128;
            triple_count += pairs * pairs.saturating_sub(1) / 2;
        }
    }
    let blocks_needed = triple_count / 3;
    if blocks_needed > budget {
        return Err(Error::budget("Steiner block extraction", blocks_needed, budget));
    }
    let out_size = f.output_field().size() as usize;
    let blocks: Vec<Vec<u32>> = (1..size)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); out_size];
            for x in 0..size {
                if x < x ^ a {
                    buckets[(f.eval(x) ^ f.eval(x ^ a)) as usize].push(x);
                }
            }
            let mut found = Vec::new();
            for bucket in buckets.iter().filter(|b| b.len() > 1) {
                for (i, &x) in bucket.iter().enumerate() {
                    for &y in &bucket[i + 1..] {
                        // x < y; emit iff the pair of x holds the two smallest points.
                        if x ^ a < y {
                            let mut block = vec![x, x ^ a, y, y ^ a];
                            block.sort_unstable();
                            found.push(block);
                        }
                    }
                }
            }
            found
        })
        .collect();
    Design::new(size as usize, blocks.into_iter().map(|b| (b, 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::{bracken_tan_tan, gold, kasami};
    use crate::designs::{dual_support_design, support_design};
    use crate::DEFAULT_CODEWORD_BUDGET;

    fn bent6() -> VectorialFunction {
        VectorialFunction::from_exponent(6, 3).unwrap().scale(1).with_trace_to(1).unwrap()
    }

    fn vbent6() -> VectorialFunction {
        VectorialFunction::from_exponent(6, 3).unwrap().scale(1).with_trace_to(3).unwrap()
    }

    #[test]
    fn bent_support_code() {
        let r = code_from_bent_support(&bent6()).unwrap();
        assert_eq!(r.labels.len(), 36);
        assert!(r.labels.windows(2).all(|w| w[0] < w[1]));
        let v = r.verify(DEFAULT_CODEWORD_BUDGET).unwrap();
        assert_eq!(v.distribution.to_string(), "1+63z^16+63z^20+z^36");
        assert_eq!(v.predicted_match, Some(true));
        assert_eq!(v.claimed_match, Some(true));
        assert_eq!(r.code.dual_distance(DEFAULT_CODEWORD_BUDGET).unwrap(), Some(4));
        let total: u64 = v.distribution.counts.iter().sum();
        assert_eq!(total, 128);
    }

    #[test]
    fn non_bent_support_builds_without_prediction() {
        let f = VectorialFunction::from_exponent(5, 3).unwrap().with_trace_to(1).unwrap();
        let r = code_from_bent_support(&f).unwrap();
        assert!(r.predicted.is_none());
        assert!(r.facts.contains(&("bent".into(), "false".into())));
    }

    #[test]
    fn vectorial_bent_code() {
        let r = code_from_vectorial(&vbent6()).unwrap();
        assert_eq!(r.family, Some((Family::VbentCode, 3, 3)));
        let v = r.verify(DEFAULT_CODEWORD_BUDGET).unwrap();
        assert_eq!(v.distribution.to_string(), "1+448z^28+126z^32+448z^36+z^64");
        assert_eq!(v.predicted_match, Some(true));
        assert_eq!(r.code.dimension(), 10);
    }

    #[test]
    fn kasami_code() {
        let r = code_from_vectorial(&kasami(5, 2).unwrap().function).unwrap();
        assert_eq!(r.family, Some((Family::TwoValuedCode, 5, 1)));
        let v = r.verify(DEFAULT_CODEWORD_BUDGET).unwrap();
        assert_eq!(v.distribution.to_string(), "1+496z^12+1054z^16+496z^20+z^32");
        assert_eq!(v.predicted_match, Some(true));
        assert_eq!(r.code.dual_distance(DEFAULT_CODEWORD_BUDGET).unwrap(), Some(6));
    }

    #[test]
    fn zero_function_gives_rm1() {
        let z = VectorialFunction::from_table(4, 4, vec![0; 16]).unwrap();
        let r = code_from_vectorial(&z).unwrap();
        assert_eq!(r.code.dimension(), 5);
        assert!(r.code.same_row_space(&rm1(4).unwrap()));
    }

    #[test]
    fn rm1_parameters_and_weight_half_design() {
        let rm = rm1(6).unwrap();
        let wd = rm.weight_distribution().unwrap();
        assert_eq!(wd.to_string(), "1+126z^32+z^64");
        let c = code_from_vectorial(&vbent6()).unwrap().code;
        let a = support_design(&rm, 32, DEFAULT_CODEWORD_BUDGET).unwrap();
        let b = support_design(&c, 32, DEFAULT_CODEWORD_BUDGET).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn ternary_example() {
        let r = ternary_code(3).unwrap();
        let v = r.verify(DEFAULT_CODEWORD_BUDGET).unwrap();
        assert_eq!(v.claimed_match, Some(true));
        assert_eq!(v.predicted_match, Some(true));
        assert_eq!(v.distribution.nonzero_weights(), vec![6, 9, 12]);
        assert_eq!(r.code.dual_distance(DEFAULT_CODEWORD_BUDGET).unwrap(), Some(4));
        let b4 = dual_support_design(&r.code, 4, DEFAULT_CODEWORD_BUDGET).unwrap();
        assert_eq!(b4.total_blocks(), 13);
        assert!(b4.is_simple());
        assert_eq!(b4.is_t_design(2).unwrap(), Some(1));
        assert!(ternary_code(4).is_err());
    }

    #[test]
    fn steiner_matches_dual_enumeration_oracle() {
        let cases = [
            gold(6, 2).unwrap().function,
            bracken_tan_tan(2, 4).unwrap().function,
            VectorialFunction::from_exponent(6, 62).unwrap(),
            kasami(5, 2).unwrap().function,
        ];
        for f in cases {
            let s = steiner_from_function(&f, 1 << 24).unwrap();
            let c = code_from_vectorial(&f).unwrap().code;
            let oracle = dual_support_design(&c, 4, 1 << 30).unwrap();
            assert_eq!(s, oracle, "n={}", f.n());
        }
    }

    #[test]
    fn apn_has_no_blocks_and_zero_pair_lambda() {
        let f = kasami(5, 2).unwrap().function;
        assert!(steiner_from_function(&f, 1 << 20).unwrap().is_empty());
        for (x1, x2) in [(0, 1), (3, 17), (30, 31)] {
            assert!(pair_lambda(&f, x1, x2).is_zero());
        }
        let hist = pair_lambda_histogram(&f, 1 << 22).unwrap();
        assert_eq!(hist, vec![(BigRational::zero(), 496)]);
    }

    #[test]
    fn gold_six_two_is_a_steiner_system() {
        let f = gold(6, 2).unwrap().function;
        let d = steiner_from_function(&f, 1 << 20).unwrap();
        assert_eq!(BigInt::from(d.total_blocks()), crate::moments::a4_dual_from_two_valued(6, 2).unwrap());
        assert_eq!(d.is_t_design(2).unwrap(), Some(1));
    }
}
