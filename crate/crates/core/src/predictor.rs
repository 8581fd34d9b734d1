//! Closed-form weight distributions.
//!
//! The generic predictions assume the parent code holds `t`-designs in
//! every relevant weight; they are pure arithmetic and fail only when a
//! count comes out fractional. The family tables evaluate known
//! distributions for codes built from bent and differentially two-valued
//! functions. In the punctured vectorial-bent tables the all-one word
//! keeps weight `2^(2m) - 1` (one deletion) or `2^(2m) - 2` (two deletions).

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::code::WeightDistribution;
use crate::error::{Error, Result};
use crate::exact::{as_integer, binom, ratio};

/// A predicted distribution with its source and claimed parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredictedDistribution {
    pub q: u64,
    pub counts: Vec<BigUint>,
    pub provenance: String,
    pub dimension: Option<usize>,
    pub min_distance: Option<usize>,
}

impl PredictedDistribution {
    pub fn from_counts(q: u64, counts: Vec<BigUint>, provenance: impl Into<String>) -> Self {
        let dimension = log_exact(q, &counts.iter().sum());
        let min_distance = counts.iter().enumerate().skip(1).find(|(_, c)| !c.is_zero()).map(|(i, _)| i);
        PredictedDistribution { q, counts, provenance: provenance.into(), dimension, min_distance }
    }

    pub fn length(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, w: usize) -> BigUint {
        self.counts.get(w).cloned().unwrap_or_default()
    }

    /// `(length, dimension, min distance)`.
    pub fn parameters(&self) -> (usize, Option<usize>, Option<usize>) {
        (self.length(), self.dimension, self.min_distance)
    }

    /// Entrywise equality with an enumerated distribution.
    pub fn matches(&self, wd: &WeightDistribution) -> bool {
        wd.q == self.q
            && wd.counts.len() == self.counts.len()
            && wd.counts.iter().zip(&self.counts).all(|(&a, b)| BigUint::from(a) == *b)
    }

    /// Sparse `(weight, count)` terms including `A_0`.
    pub fn terms(&self) -> Vec<(usize, BigUint)> {
        self.counts.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
    }

    pub fn signed_counts(&self) -> Vec<BigInt> {
        self.counts.iter().map(|c| BigInt::from(c.clone())).collect()
    }
}

impl fmt::Display for PredictedDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(w, c)| match w {
                0 => c.to_string(),
                _ if c.is_one() => format!("z^{w}"),
                _ => format!("{c}z^{w}"),
            })
            .collect();
        f.write_str(&parts.join("+"))
    }
}

fn log_exact(q: u64, n: &BigUint) -> Option<usize> {
    let mut x = BigUint::one();
    for e in 0..=4096 {
        if &x == n {
            return Some(e);
        }
        if &x > n {
            return None;
        }
        x *= q;
    }
    None
}

fn to_count(r: BigRational, what: impl FnOnce() -> String) -> Result<BigUint> {
    as_integer(&r)
        .and_then(|v| v.to_biguint())
        .ok_or_else(|| Error::NonIntegral(format!("{} = {r}", what())))
}

fn big_counts(wd: &WeightDistribution) -> Vec<BigInt> {
    wd.counts.iter().map(|&c| BigInt::from(c)).collect()
}

/// Shortened distribution on any `t` coordinates:
/// `A_k(C_T) = C(k,t) C(nu-t,k) / (C(nu,t) C(nu-t,k-t)) * A_k(C)`.
/// Where `C(nu-t, k-t)` vanishes the equal form `C(nu-k,t)/C(nu,t) A_k` is used.
pub fn shortened_predict(a: &WeightDistribution, t: usize) -> Result<PredictedDistribution> {
    shortened_predict_counts(a.q, &big_counts(a), t)
}

pub fn shortened_predict_counts(q: u64, a: &[BigInt], t: usize) -> Result<PredictedDistribution> {
    let nu = a.len() - 1;
    if t > nu {
        return Err(Error::Parameter(format!("t = {t} exceeds length {nu}")));
    }
    let (n, t_) = (nu as i64, t as i64);
    let counts = (0..=nu - t)
        .map(|k| {
            let k_ = k as i64;
            let den = binom(n - t_, k_ - t_);
            let r = if den.is_zero() {
                ratio(binom(n - k_, t_) * &a[k], binom(n, t_))
            } else {
                ratio(binom(k_, t_) * binom(n - t_, k_) * &a[k], binom(n, t_) * den)
            };
            to_count(r, || format!("shortened A_{k}"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PredictedDistribution::from_counts(q, counts, format!("shortened, t={t}")))
}

/// Punctured distribution on any `t` coordinates:
/// `A_k(C^T) = sum_i C(nu-t,k) C(k+i,t) C(t,i) / (C(nu-t,k-t+i) C(nu,t)) * A_{k+i}(C)`.
/// Where `C(nu-t, k-t+i)` vanishes the equal form `C(t,i) C(nu-t,k) / C(nu,k+i)` is used.
pub fn punctured_predict(a: &WeightDistribution, t: usize) -> Result<PredictedDistribution> {
    punctured_predict_counts(a.q, &big_counts(a), t)
}

pub fn punctured_predict_counts(q: u64, a: &[BigInt], t: usize) -> Result<PredictedDistribution> {
    let nu = a.len() - 1;
    if t > nu {
        return Err(Error::Parameter(format!("t = {t} exceeds length {nu}")));
    }
    let (n, t_) = (nu as i64, t as i64);
    let counts = (0..=nu - t)
        .map(|k| {
            let k_ = k as i64;
            let mut sum = BigRational::zero();
            for i in 0..=t.min(nu - k) {
                let i_ = i as i64;
                let ak = &a[k + i];
                if ak.is_zero() {
                    continue;
                }
                let den = binom(n - t_, k_ - t_ + i_);
                sum += if den.is_zero() {
                    ratio(binom(t_, i_) * binom(n - t_, k_) * ak, binom(n, k_ + i_))
                } else {
                    ratio(binom(n - t_, k_) * binom(k_ + i_, t_) * binom(t_, i_) * ak, den * binom(n, t_))
                };
            }
            to_count(sum, || format!("punctured A_{k}"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PredictedDistribution::from_counts(q, counts, format!("punctured, t={t}")))
}

/// Named closed-form families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    BentCode,
    BentShort1,
    BentShort2,
    BentPunct1,
    BentPunct2,
    VbentCode,
    VbentShort1,
    VbentShort2,
    VbentPunct1,
    VbentPunct2,
    TwoValuedCode,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::BentCode,
        Family::BentShort1,
        Family::BentShort2,
        Family::BentPunct1,
        Family::BentPunct2,
        Family::VbentCode,
        Family::VbentShort1,
        Family::VbentShort2,
        Family::VbentPunct1,
        Family::VbentPunct2,
        Family::TwoValuedCode,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::BentCode => "bent_code",
            Family::BentShort1 => "bent_short1",
            Family::BentShort2 => "bent_short2",
            Family::BentPunct1 => "bent_punct1",
            Family::BentPunct2 => "bent_punct2",
            Family::VbentCode => "vbent_code",
            Family::VbentShort1 => "vbent_short1",
            Family::VbentShort2 => "vbent_short2",
            Family::VbentPunct1 => "vbent_punct1",
            Family::VbentPunct2 => "vbent_punct2",
            Family::TwoValuedCode => "two_valued_code",
        }
    }

    /// Names of the two integer parameters.
    pub fn parameter_names(self) -> (&'static str, &'static str) {
        match self {
            Family::BentCode | Family::BentShort1 | Family::BentShort2 | Family::BentPunct1 | Family::BentPunct2 => {
                ("n", "nu_f")
            }
            Family::TwoValuedCode => ("n", "s"),
            _ => ("m", "l"),
        }
    }

    /// The parent table and deletion count for derived families.
    pub fn parent(self) -> Option<(Family, usize, bool)> {
        match self {
            Family::BentShort1 => Some((Family::BentCode, 1, true)),
            Family::BentShort2 => Some((Family::BentCode, 2, true)),
            Family::BentPunct1 => Some((Family::BentCode, 1, false)),
            Family::BentPunct2 => Some((Family::BentCode, 2, false)),
            Family::VbentShort1 => Some((Family::VbentCode, 1, true)),
            Family::VbentShort2 => Some((Family::VbentCode, 2, true)),
            Family::VbentPunct1 => Some((Family::VbentCode, 1, false)),
            Family::VbentPunct2 => Some((Family::VbentCode, 2, false)),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown family `{s}`")))
    }
}

fn pow2(e: i64) -> BigRational {
    crate::exact::rational_pow(2, e)
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

/// Evaluates a family table. Parameters are `(n, nu_f)` for the bent
/// families, `(m, l)` for vectorial bent, `(n, s)` for two-valued.
pub fn table_predict(family: Family, p1: u64, p2: u64) -> Result<PredictedDistribution> {
    let (a, b) = (p1 as i64, p2 as i64);
    let (length, dimension, entries): (i64, usize, Vec<(i64, BigRational)>) = match family {
        Family::BentCode | Family::BentShort1 | Family::BentShort2 | Family::BentPunct1 | Family::BentPunct2 => {
            let (n, nu) = (a, b);
            if n < 6 || n % 2 != 0 {
                return Err(Error::Parameter(format!("bent tables need even n >= 6, got {n}")));
            }
            let h = 1i64 << ((n - 2) / 2);
            if nu != (1 << (n - 1)) + h && nu != (1 << (n - 1)) - h {
                return Err(Error::Parameter(format!("nu_f = {nu} is not 2^(n-1) +- 2^((n-2)/2)")));
            }
            let lo = nu / 2 - h / 2;
            let hi = nu / 2 + h / 2;
            let big = int((1 << n) - 1);
            let nuf = int(nu);
            let hh = int(h);
            let one = |sign: i64| (nuf.clone() + int(sign) * hh.clone()) / (int(2) * nuf.clone()) * big.clone();
            let two = |sign: i64| {
                let x = nuf.clone() + int(sign) * hh.clone();
                x.clone() * (x - int(2)) / (int(4) * nuf.clone() * (nuf.clone() - int(1))) * big.clone()
            };
            let mid = (nuf.clone() * nuf.clone() - pow2(n - 2)) / (int(2) * nuf.clone() * (nuf.clone() - int(1)))
                * big.clone();
            match family {
                Family::BentCode => (nu, (n + 1) as usize, vec![(lo, big.clone()), (hi, big.clone()), (nu, int(1))]),
                Family::BentShort1 => (nu - 1, n as usize, vec![(lo, one(1)), (hi, one(-1))]),
                Family::BentShort2 => (nu - 2, (n - 1) as usize, vec![(lo, two(1)), (hi, two(-1))]),
                Family::BentPunct1 => (
                    nu - 1,
                    (n + 1) as usize,
                    vec![(lo - 1, one(-1)), (lo, one(1)), (hi - 1, one(1)), (hi, one(-1)), (nu - 1, int(1))],
                ),
                _ => (
                    nu - 2,
                    (n + 1) as usize,
                    vec![
                        (lo - 2, two(-1)),
                        (lo - 1, mid.clone()),
                        (lo, two(1)),
                        (hi - 2, two(1)),
                        (hi - 1, mid),
                        (hi, two(-1)),
                        (nu - 2, int(1)),
                    ],
                ),
            }
        }
        Family::VbentCode | Family::VbentShort1 | Family::VbentShort2 | Family::VbentPunct1 | Family::VbentPunct2 => {
            let (m, l) = (a, b);
            if m < 3 || l < 1 || l > m {
                return Err(Error::Parameter(format!("vectorial bent tables need m >= 3, 1 <= l <= m; got m={m}, l={l}")));
            }
            let v = 1i64 << (2 * m);
            let c = int((1 << l) - 1);
            let (w_lo, w_mid, w_hi) = (v / 2 - (1 << (m - 1)), v / 2, v / 2 + (1 << (m - 1)));
            let plus = int(v / 2 + (1 << (m - 1)));
            let minus = int(v / 2 - (1 << (m - 1)));
            let q4 = pow2(m - 2);
            match family {
                Family::VbentCode => (
                    v,
                    (2 * m + l + 1) as usize,
                    vec![
                        (w_lo, c.clone() * int(v)),
                        (w_mid, int(2 * (v - 1))),
                        (w_hi, c.clone() * int(v)),
                        (v, int(1)),
                    ],
                ),
                Family::VbentShort1 => (
                    v - 1,
                    (2 * m + l) as usize,
                    vec![(w_lo, c.clone() * plus), (w_mid, int(v - 1)), (w_hi, c.clone() * minus)],
                ),
                Family::VbentShort2 => (
                    v - 2,
                    (2 * m + l - 1) as usize,
                    vec![
                        (w_lo, c.clone() * q4.clone() * int((1 << m) + 2)),
                        (w_mid, int(v / 2 - 1)),
                        (w_hi, c.clone() * q4 * int((1 << m) - 2)),
                    ],
                ),
                Family::VbentPunct1 => (
                    v - 1,
                    (2 * m + l + 1) as usize,
                    vec![
                        (w_lo - 1, c.clone() * minus.clone()),
                        (w_lo, c.clone() * plus.clone()),
                        (w_mid - 1, int(v - 1)),
                        (w_mid, int(v - 1)),
                        (w_hi - 1, c.clone() * plus),
                        (w_hi, c.clone() * minus),
                        (v - 1, int(1)),
                    ],
                ),
                _ => (
                    v - 2,
                    (2 * m + l + 1) as usize,
                    vec![
                        (w_lo - 2, q4.clone() * c.clone() * int((1 << m) - 2)),
                        (w_lo - 1, int(v / 2) * c.clone()),
                        (w_lo, c.clone() * q4.clone() * int((1 << m) + 2)),
                        (w_mid - 2, int(v / 2 - 1)),
                        (w_mid - 1, int(v)),
                        (w_mid, int(v / 2 - 1)),
                        (w_hi - 2, q4.clone() * c.clone() * int((1 << m) + 2)),
                        (w_hi - 1, int(v / 2) * c.clone()),
                        (w_hi, c * q4 * int((1 << m) - 2)),
                        (v - 2, int(1)),
                    ],
                ),
            }
        }
        Family::TwoValuedCode => {
            let (n, s) = (a, b);
            if s < 1 || s >= n || (n + s) % 2 != 0 {
                return Err(Error::Parameter(format!("need 1 <= s <= n - 1 and n + s even; got n={n}, s={s}")));
            }
            let v = 1i64 << n;
            let off = 1i64 << ((n + s - 2) / 2);
            let side = pow2(n - s) * int(v - 1);
            let mid = int(v - 1) * (pow2(n + 1) - pow2(n - s + 1) + int(2));
            (
                v,
                (2 * n + 1) as usize,
                vec![(v / 2 - off, side.clone()), (v / 2, mid), (v / 2 + off, side), (v, int(1))],
            )
        }
    };
    let mut counts = vec![BigUint::zero(); length as usize + 1];
    counts[0] = BigUint::one();
    for (w, r) in entries {
        counts[w as usize] += to_count(r, || format!("{family} A_{w}"))?;
    }
    let mut pd = PredictedDistribution::from_counts(2, counts, format!("{family}({p1},{p2})"));
    if pd.dimension != Some(dimension) {
        return Err(Error::Inconsistent(format!(
            "{family}({p1},{p2}) sums to {:?} codewords' worth, expected dimension {dimension}",
            pd.dimension
        )));
    }
    pd.dimension = Some(dimension);
    Ok(pd)
}

/// `A_k(C_T) = C(nu-t, k) / C(nu-t, k-t) * (q-1) * lambda_k` where
/// `lambda_k` belongs to the `t`-design `B_k(C)`.
pub fn design_count_from_lambda(nu: usize, k: usize, lambda: &BigRational, t: usize, q: u64) -> Result<BigInt> {
    if t > k || k > nu {
        return Err(Error::Parameter(format!("need t <= k <= nu, got t={t}, k={k}, nu={nu}")));
    }
    let (n, k_, t_) = (nu as i64, k as i64, t as i64);
    let r = ratio(binom(n - t_, k_), binom(n - t_, k_ - t_)) * BigRational::from_integer((q - 1).into()) * lambda;
    as_integer(&r).ok_or_else(|| Error::NonIntegral(format!("A_{k} = {r}")))
}

/// `A_k((C^perp)^T) = (q-1) sum_i C(t,i) lambda^perp_{k+i}(t-i, i)`; entry `i`
/// of `intersections` is the intersection number of `B_{k+i}(C^perp)` with
/// `t-i` avoided and `i` contained points.
pub fn dual_punctured_count(intersections: &[BigRational], t: usize, q: u64) -> Result<BigInt> {
    if intersections.len() != t + 1 {
        return Err(Error::MismatchedLengths(format!(
            "{} intersection numbers for t = {t}",
            intersections.len()
        )));
    }
    let mut sum = BigRational::zero();
    for (i, l) in intersections.iter().enumerate() {
        sum += BigRational::from_integer(binom(t as i64, i as i64)) * l;
    }
    let r = sum * BigRational::from_integer((q - 1).into());
    as_integer(&r).ok_or_else(|| Error::NonIntegral(format!("dual punctured count {r}")))
}

/// The three `(k, lambda)` pairs of 2-designs held by `C(F)` for a
/// differentially two-valued `F` with `{0, 2^s}` and Walsh values
/// `{0, +-2^((n+s)/2)}`, ordered minus, middle, plus.
pub fn two_valued_design_lambdas(n: u32, s: u32) -> Result<[(u64, BigInt); 3]> {
    if s < 1 || s >= n || (n + s) % 2 != 0 {
        return Err(Error::Parameter(format!("need 1 <= s <= n - 1 and n + s even; got n={n}, s={s}")));
    }
    let (n, s) = (n as i64, s as i64);
    let side = |sign: i64| {
        let k = pow2(n - 1) + int(sign) * pow2((n + s - 2) / 2);
        let lambda = (pow2(n - s - 1) + int(sign) * pow2((n - s - 2) / 2)) * (k.clone() - int(1));
        (k, lambda)
    };
    let mid = (pow2(n - 1), (pow2(n - 1) - int(1)) * (pow2(n) - pow2(n - s) + int(1)));
    let mut out = Vec::with_capacity(3);
    for (k, l) in [side(-1), mid, side(1)] {
        let k = as_integer(&k).and_then(|k| k.to_u64()).ok_or_else(|| Error::NonIntegral(format!("k = {k}")))?;
        let l = as_integer(&l).ok_or_else(|| Error::NonIntegral(format!("lambda = {l}")))?;
        out.push((k, l));
    }
    Ok(out.try_into().expect("three pairs"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wd(q: u64, m: usize, len: usize, terms: &[(usize, u64)]) -> WeightDistribution {
        WeightDistribution::from_terms(q, m, len, terms).unwrap()
    }

    fn terms(p: &PredictedDistribution) -> Vec<(usize, u64)> {
        p.terms().into_iter().map(|(w, c)| (w, c.try_into().unwrap())).collect()
    }

    fn bent36() -> WeightDistribution {
        wd(2, 7, 36, &[(0, 1), (16, 63), (20, 63), (36, 1)])
    }

    fn vbent64() -> WeightDistribution {
        wd(2, 10, 64, &[(0, 1), (28, 448), (32, 126), (36, 448), (64, 1)])
    }

    #[test]
    fn shortened_bent_example() {
        assert_eq!(terms(&shortened_predict(&bent36(), 1).unwrap()), vec![(0, 1), (16, 35), (20, 28)]);
        assert_eq!(terms(&shortened_predict(&bent36(), 2).unwrap()), vec![(0, 1), (16, 19), (20, 12)]);
        let p = shortened_predict(&bent36(), 1).unwrap();
        assert_eq!(p.parameters(), (35, Some(6), Some(16)));
    }

    #[test]
    fn punctured_bent_example() {
        assert_eq!(
            terms(&punctured_predict(&bent36(), 1).unwrap()),
            vec![(0, 1), (15, 28), (16, 35), (19, 35), (20, 28), (35, 1)]
        );
        assert_eq!(
            terms(&punctured_predict(&bent36(), 2).unwrap()),
            vec![(0, 1), (14, 12), (15, 32), (16, 19), (18, 19), (19, 32), (20, 12), (34, 1)]
        );
    }

    #[test]
    fn vbent_example_predictions() {
        let s2 = shortened_predict(&vbent64(), 2).unwrap();
        assert_eq!(terms(&s2), vec![(0, 1), (28, 140), (32, 31), (36, 84)]);
        let p2 = punctured_predict(&vbent64(), 2).unwrap();
        assert_eq!(p2.count(26), 84u32.into());
        assert_eq!(p2.parameters(), (62, Some(10), Some(26)));
    }

    #[test]
    fn trivial_cases() {
        let zero = wd(2, 0, 5, &[(0, 1)]);
        assert_eq!(terms(&shortened_predict(&zero, 2).unwrap()), vec![(0, 1)]);
        let p0 = punctured_predict(&bent36(), 0).unwrap();
        assert!(p0.matches(&bent36()));
    }

    #[test]
    fn non_integral_prediction_is_an_error() {
        // Not a design-supporting distribution: A_1 = 1 over length 3.
        let bogus = wd(2, 1, 3, &[(0, 1), (1, 1)]);
        assert!(matches!(shortened_predict(&bogus, 1), Err(Error::NonIntegral(_))));
    }

    #[test]
    fn table_examples() {
        let t1 = table_predict(Family::BentCode, 6, 36).unwrap();
        assert!(t1.matches(&bent36()));
        assert_eq!(t1.parameters(), (36, Some(7), Some(16)));
        let t8 = table_predict(Family::VbentShort2, 3, 3).unwrap();
        assert_eq!(terms(&t8), vec![(0, 1), (28, 140), (32, 31), (36, 84)]);
        let tv = table_predict(Family::TwoValuedCode, 5, 1).unwrap();
        assert_eq!(terms(&tv), vec![(0, 1), (12, 496), (16, 1054), (20, 496), (32, 1)]);
        assert_eq!(tv.parameters(), (32, Some(11), Some(12)));
        assert!(table_predict(Family::BentCode, 5, 36).is_err());
        assert!(table_predict(Family::BentCode, 6, 35).is_err());
        assert!(table_predict(Family::TwoValuedCode, 5, 2).is_err());
    }

    #[test]
    fn derived_tables_match_generic_predictions() {
        let params: [(Family, &[(u64, u64)]); 2] = [
            (Family::BentCode, &[(6, 36), (6, 28), (8, 136), (8, 120), (10, 528)]),
            (Family::VbentCode, &[(3, 1), (3, 2), (3, 3), (4, 2), (4, 4), (5, 3)]),
        ];
        for (parent, list) in params {
            for &(p1, p2) in list {
                let base = table_predict(parent, p1, p2).unwrap();
                let base_counts = base.signed_counts();
                for fam in Family::ALL.into_iter().filter(|f| f.parent().map(|p| p.0) == Some(parent)) {
                    let (_, t, short) = fam.parent().unwrap();
                    let generic = if short {
                        shortened_predict_counts(2, &base_counts, t).unwrap()
                    } else {
                        punctured_predict_counts(2, &base_counts, t).unwrap()
                    };
                    let table = table_predict(fam, p1, p2).unwrap();
                    assert_eq!(table.counts, generic.counts, "{fam}({p1},{p2})");
                }
            }
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("vbent-punct2".parse::<Family>().unwrap(), Family::VbentPunct2);
    }

    #[test]
    fn lambda_to_count() {
        let r = |x: i64| BigRational::from_integer(x.into());
        assert_eq!(design_count_from_lambda(36, 16, &r(28), 1, 2).unwrap(), BigInt::from(35));
        assert_eq!(design_count_from_lambda(36, 16, &r(12), 2, 2).unwrap(), BigInt::from(19));
        assert_eq!(design_count_from_lambda(36, 16, &r(0), 2, 2).unwrap(), BigInt::zero());
        assert_eq!(dual_punctured_count(&[r(0), r(0), r(0)], 2, 2).unwrap(), BigInt::zero());
    }

    #[test]
    fn two_valued_lambdas() {
        let got = two_valued_design_lambdas(5, 1).unwrap();
        assert_eq!(got, [(12, 66.into()), (16, 255.into()), (20, 190.into())]);
        // Cross-check against b C(k,2)/C(2^n,2) from the distribution.
        let tv = table_predict(Family::TwoValuedCode, 10, 2).unwrap();
        for (k, l) in two_valued_design_lambdas(10, 2).unwrap() {
            let b = BigInt::from(tv.count(k as usize));
            let expect = b * binom(k as i64, 2) / binom(1024, 2);
            assert_eq!(l, expect, "k = {k}");
        }
        assert!(two_valued_design_lambdas(6, 1).is_err());
    }
}
