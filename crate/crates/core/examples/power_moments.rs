//! Pless power moments: checking a primal/dual pair and recovering unknown
//! counts from a few known ones.

use num_bigint::BigInt;

use codesign::boolfn::kasami;
use codesign::constructions::code_from_vectorial;
use codesign::moments::{moment_check, solve_distribution};

fn main() -> codesign::Result<()> {
    let code = code_from_vectorial(&kasami(5, 2)?.function)?.code;
    let wd = code.weight_distribution()?;
    let dual = code.dual().weight_distribution()?;
    println!("C: {wd}");
    println!("dual: {dual}");
    let report = moment_check(&wd, &dual.counts, 5)?;
    for r in &report.results {
        println!("t={}: {} = {} ({})", r.t, r.lhs, r.rhs, r.holds);
    }

    // Three unknown weights; d^perp = 6 fixes A^perp_1 = A^perp_2 = 0.
    let mut known = vec![BigInt::from(0); 33];
    known[0] = 1.into();
    known[32] = 1.into();
    let solved = solve_distribution(32, 11, 2, &[12, 16, 20], &known, &[0.into(), 0.into()])?;
    println!("solved A_12, A_16, A_20 = {}, {}, {}", solved.counts[12], solved.counts[16], solved.counts[20]);
    if let Some(d) = solved.dual {
        println!("implied A^perp_6 = {}", d[6]);
    }
    Ok(())
}
