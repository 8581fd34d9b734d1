//! Differential and Walsh spectra of Kasami power maps, and the Steiner
//! system S(2, 4, 2^n) read off a differentially two-valued map.
//!
//! Run with an argument to pick n (default 10) and i (default 2).

use codesign::boolfn::kasami;
use codesign::constructions::steiner_from_function;
use codesign::moments::a4_dual_from_two_valued;

fn main() -> codesign::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let n = args.first().copied().unwrap_or(10);
    let i = args.get(1).copied().unwrap_or(2);
    let member = kasami(n, i)?;
    let f = &member.function;
    let spectrum = f.diff_spectrum()?;
    println!("x^{} on GF(2^{n}): delta values {:?}, s = {:?}", member.exponent.unwrap(), spectrum.values(), spectrum.two_valued_s());
    println!("Walsh values {:?}", f.walsh_value_set());
    println!("fourth moment at its two-valued value: {}", f.fourth_moment_design_check()?);

    let start = std::time::Instant::now();
    let design = steiner_from_function(f, 1 << 26)?;
    println!(
        "{} blocks (A^perp_4 = {}), 2-design lambda {:?}, in {:?}",
        design.total_blocks(),
        a4_dual_from_two_valued(n, member.predicted_s)?,
        design.is_t_design(2)?,
        start.elapsed()
    );
    Ok(())
}
