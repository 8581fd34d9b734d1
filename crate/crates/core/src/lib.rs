//! Linear codes from Boolean and trace functions, their weight
//! distributions, and the combinatorial designs their codewords support.

pub mod am;
pub mod boolfn;
pub mod cli;
pub mod code;
pub mod constructions;
pub mod designs;
pub mod exact;
pub mod moments;
pub mod predictor;
pub mod repro;
pub mod error;
pub mod gf;

pub use code::{LinearCode, WeightDistribution};
pub use error::{Error, Result};
pub use gf::{FieldElement, FieldTable};

/// Default cap on the number of codewords visited by one enumeration.
pub const DEFAULT_CODEWORD_BUDGET: u128 = 1 << 26;

/// Default cap on elementary steps for one design check.
pub const DEFAULT_DESIGN_STEPS: u128 = 1_000_000_000;

/// `C(n, k)` in u128, saturating on overflow; zero when `k > n`.
pub fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays exact because acc = C(n, i).
        let num = (n - i) as u128;
        acc = match acc.checked_mul(num) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
