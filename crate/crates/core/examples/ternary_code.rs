//! The ternary code from alpha^(4i) and alpha^(2i) over GF(3^m), whose dual's
//! weight-4 supports form a Steiner system.

use codesign::constructions::ternary_code;
use codesign::designs::dual_support_design;

fn main() -> codesign::Result<()> {
    let m = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let report = ternary_code(m)?;
    let v = report.verify(1 << 26)?;
    println!("m={m}: {} claimed {:?} matches {:?}", v.distribution, report.claimed, v.claimed_match);
    println!("dual distance {:?}", report.code.dual_distance(1 << 26)?);
    let b4 = dual_support_design(&report.code, 4, 1 << 30)?;
    println!("B_4(dual): {} blocks on {} points, 2-design lambda {:?}", b4.total_blocks(), b4.nu(), b4.is_t_design(2)?);
    Ok(())
}
