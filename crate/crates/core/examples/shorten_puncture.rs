//! Shortened and punctured codes of a design-supporting code have
//! distributions that do not depend on which coordinates are removed.

use codesign::boolfn::VectorialFunction;
use codesign::constructions::code_from_bent_support;
use codesign::predictor::{punctured_predict, shortened_predict};
use codesign::repro::distributions_over_all;

fn main() -> codesign::Result<()> {
    let f = VectorialFunction::from_exponent(6, 3)?.scale(1).with_trace_to(1)?;
    let code = code_from_bent_support(&f)?.code;
    let wd = code.weight_distribution()?;
    println!("C: {wd}");
    for t in 1..=2 {
        for punctured in [false, true] {
            let predicted = if punctured { punctured_predict(&wd, t)? } else { shortened_predict(&wd, t)? };
            let seen = distributions_over_all(&code, t, punctured)?;
            let kind = if punctured { "punctured" } else { "shortened" };
            println!("{kind} |T|={t}: predicted {predicted}");
            for (d, n) in seen {
                println!("    {n} sets T give {d} (match: {})", predicted.matches(&d));
            }
        }
    }
    Ok(())
}
