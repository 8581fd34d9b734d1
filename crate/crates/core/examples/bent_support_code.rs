//! The binary code over the support of the bent function Tr(alpha x^3) on
//! GF(2^6), checked against its closed-form distribution.

use codesign::boolfn::VectorialFunction;
use codesign::constructions::code_from_bent_support;

fn main() -> codesign::Result<()> {
    let f = VectorialFunction::from_exponent(6, 3)?.scale(1).with_trace_to(1)?;
    println!("bent: {}, support size: {}", f.is_bent(), f.support().len());

    let report = code_from_bent_support(&f)?;
    let v = report.verify(1 << 26)?;
    println!("C(D_f) {}: {}", params(&v.distribution), v.distribution);
    if let Some(p) = &report.predicted {
        println!("table ({}): {p}", p.provenance);
    }
    println!("matches table: {:?}", v.predicted_match);
    println!("dual distance: {:?}", report.code.dual_distance(1 << 26)?);
    Ok(())
}

fn params(wd: &codesign::WeightDistribution) -> String {
    format!("[{}, {}, {}]", wd.length(), wd.dimension, wd.minimum_distance().unwrap_or(0))
}
