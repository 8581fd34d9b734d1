use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use codesign::am::{generalized_am, Budgets, Verdict};
use codesign::boolfn::kasami;
use codesign::code::LinearCode;
use codesign::constructions::{code_from_bent_support, code_from_vectorial, ternary_code};
use codesign::designs::{intersection_number, simplicity_w, support_design};
use codesign::moments::{moment_check, moment_check_counts};
use codesign::predictor::{punctured_predict, shortened_predict};
use codesign::repro::{bent_example, vectorial_bent_example};
use codesign::DEFAULT_CODEWORD_BUDGET;

fn constructed() -> Vec<(&'static str, LinearCode)> {
    vec![
        ("C(D_f)", code_from_bent_support(&bent_example()).unwrap().code),
        ("C(F)", code_from_vectorial(&vectorial_bent_example()).unwrap().code),
        ("ternary", ternary_code(3).unwrap().code),
        ("kasami5", code_from_vectorial(&kasami(5, 2).unwrap().function).unwrap().code),
    ]
}

fn all_subsets(nu: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    for a in 0..nu {
        out.push(vec![a]);
        if max >= 2 {
            for b in a + 1..nu {
                out.push(vec![a, b]);
                if max >= 3 {
                    for c in b + 1..nu {
                        out.push(vec![a, b, c]);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn shortening_and_puncturing_swap_under_duality() {
    for (name, c) in constructed() {
        let dual = c.dual();
        all_subsets(c.length(), 3).par_iter().for_each(|t| {
            let lhs = c.shorten(t).unwrap().dual();
            assert!(lhs.same_row_space(&dual.puncture(t).unwrap()), "{name} T={t:?}");
            let lhs = c.puncture(t).unwrap().dual();
            assert!(lhs.same_row_space(&dual.shorten(t).unwrap()), "{name} T={t:?}");
        });
    }
}

#[test]
fn distributions_sum_to_code_size() {
    for (name, c) in constructed() {
        let wd = c.weight_distribution().unwrap();
        let total: u128 = wd.counts.iter().map(|&x| x as u128).sum();
        assert_eq!(Some(total), c.size(), "{name}");
    }
}

/// Dual counts up to weight 5: full enumeration when the dual is small,
/// low-weight search otherwise.
fn dual_prefix(c: &LinearCode) -> Vec<u64> {
    let dual = c.dual();
    match dual.size() {
        Some(s) if s <= 1 << 22 => dual.weight_distribution().unwrap().counts[..6].to_vec(),
        _ => c.dual_weight_prefix(5, 1 << 32).unwrap(),
    }
}

#[test]
fn every_construction_passes_the_first_six_moments() {
    for (name, c) in constructed() {
        let wd = c.weight_distribution().unwrap();
        let report = moment_check(&wd, &dual_prefix(&c), 5).unwrap();
        assert!(report.all_hold(), "{name}: {:?}", report.first_failure);
    }
}

#[test]
fn predictions_pass_moments_against_enumerated_duals() {
    for (name, c) in constructed().into_iter().take(2) {
        let wd = c.weight_distribution().unwrap();
        for t in 1..=2 {
            let coords: Vec<usize> = (0..t).collect();
            for (pred, derived) in [
                (shortened_predict(&wd, t).unwrap(), c.shorten(&coords).unwrap()),
                (punctured_predict(&wd, t).unwrap(), c.puncture(&coords).unwrap()),
            ] {
                let primal: Vec<BigInt> = pred.signed_counts();
                let dual: Vec<BigInt> = dual_prefix(&derived).into_iter().map(BigInt::from).collect();
                let r = moment_check_counts(pred.length(), derived.dimension(), 2, &primal, &dual, 5).unwrap();
                assert!(r.all_hold(), "{name} t={t} {}", pred.provenance);
            }
        }
    }
}

#[test]
fn worked_example_support_designs_are_simple_2_designs() {
    let cases = [
        (code_from_bent_support(&bent_example()).unwrap().code, vec![16, 20, 36]),
        (code_from_vectorial(&vectorial_bent_example()).unwrap().code, vec![28, 32, 36, 64]),
    ];
    for (c, weights) in cases {
        assert_eq!(simplicity_w(2, 16, c.length() as u64), c.length() as u64);
        for w in weights {
            let d = support_design(&c, w, DEFAULT_CODEWORD_BUDGET).unwrap();
            assert!(d.is_simple(), "B_{w}");
            assert!(d.is_t_design(2).unwrap().is_some(), "B_{w}");
        }
    }
}

#[test]
fn intersection_numbers_match_counts() {
    let c = code_from_bent_support(&bent_example()).unwrap().code;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for w in [16, 20] {
        let d = support_design(&c, w, DEFAULT_CODEWORD_BUDGET).unwrap();
        let lambda = BigRational::from_integer(d.is_t_design(2).unwrap().unwrap().into());
        for _ in 0..20 {
            let t0 = rng.gen_range(0..=2usize);
            let t1 = rng.gen_range(0..=2 - t0);
            let picked = rand::seq::index::sample(&mut rng, 36, t0 + t1).into_vec();
            let mut p0: Vec<u32> = picked[..t0].iter().map(|&x| x as u32).collect();
            let mut p1: Vec<u32> = picked[t0..].iter().map(|&x| x as u32).collect();
            p0.sort_unstable();
            p1.sort_unstable();
            let predicted = intersection_number(36, w, &lambda, 2, t0, t1).unwrap();
            let counted = BigRational::from_integer(d.count_intersection(&p0, &p1).into());
            assert_eq!(predicted, counted, "w={w} T0={p0:?} T1={p1:?}");
        }
    }
}

#[test]
fn generalized_yes_agrees_with_direct_design_checks() {
    let cases = [
        ("C(F)", code_from_vectorial(&vectorial_bent_example()).unwrap().code, vec![28, 36]),
        ("ternary", ternary_code(3).unwrap().code, vec![6, 9, 12]),
        ("kasami5", code_from_vectorial(&kasami(5, 2).unwrap().function).unwrap().code, vec![12, 20]),
    ];
    for (name, c, s) in cases {
        let r = generalized_am(&c, 2, &s, Budgets::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Yes, "{name}");
        assert!(c.length() <= 64);
        for w in c.weight_distribution().unwrap().nonzero_weights() {
            let d = support_design(&c, w, DEFAULT_CODEWORD_BUDGET).unwrap();
            assert!(d.is_t_design(2).unwrap().is_some(), "{name} B_{w}");
        }
    }
}

fn permuted(c: &LinearCode, perm: &[usize]) -> LinearCode {
    let rows = c.rows().iter().map(|r| perm.iter().map(|&j| r[j]).collect()).collect();
    LinearCode::from_rows(c.field().clone(), rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn relabeling_coordinates_keeps_the_distribution(seed in any::<u64>()) {
        let report = code_from_bent_support(&bent_example()).unwrap();
        let labels: BTreeSet<u32> = report.labels.iter().copied().collect();
        prop_assert_eq!(labels.len(), report.labels.len());
        prop_assert_eq!(labels, bent_example().support().into_iter().collect::<BTreeSet<_>>());
        let mut perm: Vec<usize> = (0..report.code.length()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let p = permuted(&report.code, &perm);
        prop_assert_eq!(p.weight_distribution().unwrap(), report.code.weight_distribution().unwrap());
    }
}
