//! Pless power moments over exact rationals.
//!
//! The `t`-th moment relates `sum_i i^t A_i` of a code to the first `t + 1`
//! dual counts `A^perp_0..A^perp_t`. Solving the first `s` moments for `s`
//! unknown primal counts recovers a distribution from partial knowledge.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::code::WeightDistribution;
use crate::error::{Error, Result};
use crate::exact::{as_integer, binom, factorial, rational_pow};

/// Stirling number of the second kind from the alternating sum
/// `S(t,j) = (1/j!) sum_i (-1)^(j-i) C(j,i) i^t`.
pub fn stirling2(t: u32, j: u32) -> BigInt {
    if j > t {
        return BigInt::zero();
    }
    let mut sum = BigInt::zero();
    for i in 0..=j {
        let term = binom(j as i64, i as i64) * num_traits::pow(BigInt::from(i), t as usize);
        if (j - i) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum / factorial(j as u64)
}

/// Left side `sum_i i^t A_i`.
pub fn moment_lhs(counts: &[BigInt], t: u32) -> BigInt {
    counts
        .iter()
        .enumerate()
        .map(|(i, a)| num_traits::pow(BigInt::from(i), t as usize) * a)
        .sum()
}

/// Right side built from `A^perp_0..A^perp_t`. Entries beyond the slice are
/// treated as an error by callers, not as zeros.
pub fn moment_rhs(nu: usize, m: usize, q: u64, dual: &[BigInt], t: u32) -> BigRational {
    let mut total = BigRational::zero();
    for i in 0..=t as usize {
        let mut inner = BigRational::zero();
        for j in i..=t as usize {
            let coeff = factorial(j as u64)
                * stirling2(t, j as u32)
                * num_traits::pow(BigInt::from(q - 1), j - i)
                * binom((nu - i) as i64, nu as i64 - j as i64);
            inner += rational_pow(q, m as i64 - j as i64) * BigRational::from_integer(coeff);
        }
        let term = inner * BigRational::from_integer(dual[i].clone());
        if i % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentResult {
    pub t: u32,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentReport {
    pub results: Vec<MomentResult>,
    pub first_failure: Option<u32>,
}

impl MomentReport {
    pub fn all_hold(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks moments `0..=t_max` for primal counts against a dual prefix
/// (or a full dual distribution) of at least `t_max + 1` entries.
pub fn moment_check_counts(
    nu: usize,
    m: usize,
    q: u64,
    primal: &[BigInt],
    dual: &[BigInt],
    t_max: u32,
) -> Result<MomentReport> {
    if primal.len() != nu + 1 {
        return Err(Error::MismatchedLengths(format!(
            "primal has {} entries for length {nu}",
            primal.len()
        )));
    }
    if dual.len() > nu + 1 {
        return Err(Error::MismatchedLengths(format!("dual has {} entries for length {nu}", dual.len())));
    }
    if t_max as usize > nu || dual.len() <= t_max as usize {
        return Err(Error::MismatchedLengths(format!(
            "moment {t_max} needs dual counts up to weight {t_max}, have {}",
            dual.len()
        )));
    }
    let mut results = Vec::new();
    let mut first_failure = None;
    for t in 0..=t_max {
        let lhs = moment_lhs(primal, t);
        let rhs = moment_rhs(nu, m, q, dual, t);
        let holds = rhs == BigRational::from_integer(lhs.clone());
        if !holds && first_failure.is_none() {
            first_failure = Some(t);
        }
        results.push(MomentResult { t, lhs: lhs.to_string(), rhs: rhs.to_string(), holds });
    }
    Ok(MomentReport { results, first_failure })
}

/// Moment check of an enumerated distribution against dual counts
/// `A^perp_0..` (full or prefix).
pub fn moment_check(a: &WeightDistribution, dual: &[u64], t_max: u32) -> Result<MomentReport> {
    let primal: Vec<BigInt> = a.counts.iter().map(|&c| BigInt::from(c)).collect();
    let dual: Vec<BigInt> = dual.iter().map(|&c| BigInt::from(c)).collect();
    moment_check_counts(a.length(), a.dimension, a.q, &primal, &dual, t_max)
}

/// Result of solving for unknown counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solved {
    pub counts: Vec<BigInt>,
    /// The dual distribution implied by the solved counts, when it is
    /// integral and nonnegative.
    pub dual: Option<Vec<BigInt>>,
}

/// Solves the first `|unknown|` moments for the counts `A_i, i in unknown`.
/// `known` has `nu + 1` entries (values at unknown positions are ignored);
/// `dual_prefix` holds `A^perp_1..A^perp_{s-1}`.
pub fn solve_distribution(
    nu: usize,
    m: usize,
    q: u64,
    unknown: &[usize],
    known: &[BigInt],
    dual_prefix: &[BigInt],
) -> Result<Solved> {
    if known.len() != nu + 1 {
        return Err(Error::MismatchedLengths(format!("known has {} entries for length {nu}", known.len())));
    }
    let mut s_set = unknown.to_vec();
    s_set.sort_unstable();
    s_set.dedup();
    if let Some(&bad) = s_set.iter().find(|&&i| i > nu) {
        return Err(Error::CoordinateOutOfRange { coord: bad, len: nu + 1 });
    }
    let s = s_set.len();
    let mut counts = known.to_vec();
    if s > 0 {
        if dual_prefix.len() + 1 < s {
            return Err(Error::MismatchedLengths(format!(
                "{s} unknowns need A^perp_1..A^perp_{}, have {}",
                s - 1,
                dual_prefix.len()
            )));
        }
        let mut dual = vec![BigInt::one()];
        dual.extend(dual_prefix.iter().take(s - 1).cloned());
        let mut matrix = Vec::with_capacity(s);
        for t in 0..s as u32 {
            let mut rhs = moment_rhs(nu, m, q, &dual, t);
            for (i, a) in known.iter().enumerate() {
                if !s_set.contains(&i) {
                    rhs -= BigRational::from_integer(num_traits::pow(BigInt::from(i), t as usize) * a);
                }
            }
            let mut row: Vec<BigRational> = s_set
                .iter()
                .map(|&i| BigRational::from_integer(num_traits::pow(BigInt::from(i), t as usize)))
                .collect();
            row.push(rhs);
            matrix.push(row);
        }
        let solution = gauss_solve(matrix)?;
        for (&i, v) in s_set.iter().zip(solution) {
            let Some(v) = as_integer(&v) else {
                return Err(Error::NonIntegral(format!("A_{i} = {v}")));
            };
            if v.is_negative() {
                return Err(Error::Inconsistent(format!("A_{i} = {v} is negative")));
            }
            counts[i] = v;
        }
    }
    let dual = macwilliams_dual(&counts, q).ok();
    Ok(Solved { counts, dual })
}

/// Gaussian elimination on an augmented `s x (s+1)` rational matrix.
pub fn gauss_solve(mut a: Vec<Vec<BigRational>>) -> Result<Vec<BigRational>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularSystem)?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
    }
    Ok(a.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Krawtchouk polynomial `K_j(i)` for length `nu` over GF(q).
pub fn krawtchouk(nu: usize, q: u64, j: usize, i: usize) -> BigInt {
    let mut sum = BigInt::zero();
    for h in 0..=j {
        let term = num_traits::pow(BigInt::from(q - 1), j - h)
            * binom(i as i64, h as i64)
            * binom((nu - i) as i64, (j - h) as i64);
        if h % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// Dual distribution by the MacWilliams transform. Fails unless the result
/// is a nonnegative integer vector.
pub fn macwilliams_dual(counts: &[BigInt], q: u64) -> Result<Vec<BigInt>> {
    let nu = counts.len() - 1;
    let size: BigInt = counts.iter().sum();
    if size.is_zero() {
        return Err(Error::Inconsistent("empty distribution".into()));
    }
    (0..=nu)
        .map(|j| {
            let num: BigInt = counts.iter().enumerate().map(|(i, a)| a * krawtchouk(nu, q, j, i)).sum();
            let r = BigRational::new(num, size.clone());
            match as_integer(&r) {
                Some(v) if !v.is_negative() => Ok(v),
                _ => Err(Error::NonIntegral(format!("A^perp_{j} = {r}"))),
            }
        })
        .collect()
}

/// `A^perp_4` of `C(F)` for a differentially two-valued `F` with `{0, 2^s}`:
/// `2^(n-2) (2^n - 1) (2^(s-1) - 1) / 3`.
pub fn a4_dual_from_two_valued(n: u32, s: u32) -> Result<BigInt> {
    if n < 2 || s < 1 || s >= n {
        return Err(Error::Parameter(format!("need 1 <= s <= n - 1, got n={n}, s={s}")));
    }
    let two = BigInt::from(2);
    let num: BigInt = num_traits::pow(two.clone(), (n - 2) as usize)
        * (num_traits::pow(two.clone(), n as usize) - 1u32)
        * (num_traits::pow(two, (s - 1) as usize) - 1u32);
    let three = BigInt::from(3);
    if !(&num % &three).is_zero() {
        return Err(Error::NonIntegral(format!("{num}/3")));
    }
    Ok(num / three)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &[u64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn stirling_rec(t: u32, j: u32) -> u64 {
        match (t, j) {
            (0, 0) => 1,
            (0, _) | (_, 0) => 0,
            _ => j as u64 * stirling_rec(t - 1, j) + stirling_rec(t - 1, j - 1),
        }
    }

    #[test]
    fn stirling_small_values() {
        assert_eq!(stirling2(0, 0), BigInt::from(1));
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        for t in 0..=12 {
            for j in 0..=t {
                assert_eq!(stirling2(t, j), BigInt::from(stirling_rec(t, j)), "S({t},{j})");
            }
        }
    }

    #[test]
    fn repetition_code_moments() {
        // [4,1] repetition code and its [4,3] dual (even-weight code).
        let a = WeightDistribution::new(2, 1, vec![1, 0, 0, 0, 1]).unwrap();
        let rep = moment_check(&a, &[1, 0, 6, 0, 1], 4).unwrap();
        assert!(rep.all_hold());
    }

    #[test]
    fn perturbation_breaks_first_moment() {
        let primal = big(&[1, 1, 0, 0, 1]);
        let rep = moment_check_counts(4, 1, 2, &primal, &big(&[1, 0, 6, 0, 1]), 4).unwrap();
        assert_eq!(rep.first_failure, Some(0));
        // Keep the size right but move mass: t=1 is the first to notice.
        let primal = big(&[1, 1, 0, 0, 0]);
        let rep = moment_check_counts(4, 1, 2, &primal, &big(&[1, 0, 6, 0, 1]), 4).unwrap();
        assert_eq!(rep.first_failure, Some(1));
    }

    #[test]
    fn moment_check_rejects_short_dual() {
        let a = WeightDistribution::new(2, 1, vec![1, 0, 0, 0, 1]).unwrap();
        assert!(moment_check(&a, &[1, 0], 3).is_err());
    }

    #[test]
    fn solve_bent_example() {
        let mut known = vec![BigInt::zero(); 37];
        known[0] = 1.into();
        known[36] = 1.into();
        let sol = solve_distribution(36, 7, 2, &[16, 20], &known, &big(&[0])).unwrap();
        assert_eq!(sol.counts[16], 63.into());
        assert_eq!(sol.counts[20], 63.into());
        let dual = sol.dual.unwrap();
        assert_eq!(&dual[..4], &big(&[1, 0, 0, 0])[..]);
    }

    #[test]
    fn solve_kasami_example() {
        let mut known = vec![BigInt::zero(); 33];
        known[0] = 1.into();
        known[32] = 1.into();
        let sol = solve_distribution(32, 11, 2, &[12, 16, 20], &known, &big(&[0, 0])).unwrap();
        assert_eq!(sol.counts[12], 496.into());
        assert_eq!(sol.counts[16], 1054.into());
        assert_eq!(sol.counts[20], 496.into());
    }

    #[test]
    fn solve_with_nothing_unknown_is_identity() {
        let known = big(&[1, 0, 0, 0, 1]);
        let sol = solve_distribution(4, 1, 2, &[], &known, &[]).unwrap();
        assert_eq!(sol.counts, known);
        assert_eq!(sol.dual.unwrap(), big(&[1, 0, 6, 0, 1]));
    }

    #[test]
    fn inconsistent_inputs_reported() {
        // A [4,1] code with only A_1, A_2 free forces A_1 = -2.
        let known = big(&[1, 0, 0, 0, 0]);
        let err = solve_distribution(4, 1, 2, &[1, 2], &known, &big(&[0])).unwrap_err();
        assert!(matches!(err, Error::NonIntegral(_) | Error::Inconsistent(_)));
    }

    #[test]
    fn a4_values() {
        assert_eq!(a4_dual_from_two_valued(5, 1).unwrap(), BigInt::zero());
        assert_eq!(a4_dual_from_two_valued(10, 2).unwrap(), BigInt::from(87296));
        assert_eq!(a4_dual_from_two_valued(4, 2).unwrap(), BigInt::from(20));
        assert!(a4_dual_from_two_valued(5, 5).is_err());
    }

    #[test]
    fn macwilliams_of_hamming_is_itself() {
        let h = big(&[1, 0, 0, 0, 14, 0, 0, 0, 1]);
        assert_eq!(macwilliams_dual(&h, 2).unwrap(), h);
    }

    fn random_code() -> impl Strategy<Value = crate::code::LinearCode> {
        (4usize..11, 2usize..6, any::<u64>()).prop_map(|(len, k, seed)| {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f = std::sync::Arc::new(crate::gf::FieldTable::new(2, 1, None).unwrap());
            let rows = (0..k.min(len)).map(|_| (0..len).map(|_| rng.gen_range(0..2)).collect()).collect();
            crate::code::LinearCode::from_rows(f, rows).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn enumerated_pairs_satisfy_moments(code in random_code()) {
            prop_assume!(code.dimension() > 0);
            let a = code.weight_distribution().unwrap();
            let b = code.dual().weight_distribution().unwrap();
            let t_max = 5.min(a.length() as u32);
            prop_assert!(moment_check(&a, &b.counts, t_max).unwrap().all_hold());
        }

        #[test]
        fn solve_inverts_deletion(code in random_code(), pick in proptest::collection::vec(any::<prop::sample::Index>(), 1..4)) {
            prop_assume!(code.dimension() > 0);
            let a = code.weight_distribution().unwrap();
            let b = code.dual().weight_distribution().unwrap();
            let nu = a.length();
            let mut s: Vec<usize> = pick.iter().map(|ix| 1 + ix.index(nu)).collect();
            s.sort_unstable();
            s.dedup();
            let known: Vec<BigInt> = a.counts.iter().enumerate()
                .map(|(i, &c)| if s.contains(&i) { BigInt::zero() } else { BigInt::from(c) })
                .collect();
            let prefix: Vec<BigInt> = b.counts[1..].iter().map(|&c| BigInt::from(c)).collect();
            let sol = solve_distribution(nu, a.dimension, 2, &s, &known, &prefix).unwrap();
            prop_assert_eq!(sol.counts, big(&a.counts));
            prop_assert_eq!(sol.dual.unwrap(), big(&b.counts));
        }
    }
}
