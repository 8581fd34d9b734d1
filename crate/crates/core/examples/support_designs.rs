//! Support designs of a code: extraction, exhaustive lambda, intersection
//! numbers and complements.

use num_rational::BigRational;

use codesign::boolfn::VectorialFunction;
use codesign::constructions::code_from_bent_support;
use codesign::designs::{intersection_number, support_design};

fn main() -> codesign::Result<()> {
    let f = VectorialFunction::from_exponent(6, 3)?.scale(1).with_trace_to(1)?;
    let code = code_from_bent_support(&f)?.code;
    for w in [16, 20] {
        let d = support_design(&code, w, 1 << 26)?;
        let lambda = d.is_t_design(2)?;
        println!("B_{w}: {} blocks, simple {}, 2-design lambda {:?}", d.total_blocks(), d.is_simple(), lambda);
        let lambda = BigRational::from_integer(lambda.unwrap_or(0).into());
        let avoid = d.count_intersection(&[0, 1], &[]);
        let predicted = intersection_number(36, w, &lambda, 2, 2, 0)?;
        println!("    blocks missing points 0 and 1: counted {avoid}, predicted {predicted}");
        let (comp, comp_lambda) = d.complement_design(2, &lambda)?;
        println!("    complement: block size {:?}, lambda {comp_lambda}", comp.block_size());
    }
    Ok(())
}
