//! The four-weight code of the vectorial bent function Tr_(2^6/2^3)(alpha x^3)
//! and its weight-32 supports, which are exactly those of RM(1, 6).

use codesign::boolfn::VectorialFunction;
use codesign::constructions::{code_from_vectorial, rm1};
use codesign::designs::support_design;
use codesign::predictor::{table_predict, Family};

fn main() -> codesign::Result<()> {
    let f = VectorialFunction::from_exponent(6, 3)?.scale(1).with_trace_to(3)?;
    println!("bent vectorial: {}, Walsh values {:?}", f.is_bent_vectorial(), f.walsh_value_set());

    let report = code_from_vectorial(&f)?;
    let wd = report.code.weight_distribution()?;
    println!("C(F): [{}, {}, {:?}] {wd}", wd.length(), wd.dimension, wd.minimum_distance());
    for family in [Family::VbentCode, Family::VbentShort1, Family::VbentPunct2] {
        println!("{family}: {}", table_predict(family, 3, 3)?);
    }

    let rm = rm1(6)?;
    let a = support_design(&report.code, 32, 1 << 26)?;
    let b = support_design(&rm, 32, 1 << 26)?;
    println!("B_32(C(F)) == B_32(RM(1,6)): {} ({} blocks)", a == b, a.total_blocks());
    Ok(())
}
