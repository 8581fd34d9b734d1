//! The classic weight-count criterion against the generalized one, and the
//! shortened-invariance characterization on a random code.

use codesign::am::{characterization_witness, classic_am, generalized_am, Budgets};
use codesign::boolfn::VectorialFunction;
use codesign::constructions::{code_from_vectorial, ternary_code};

fn main() -> codesign::Result<()> {
    let b = Budgets::default();
    let f = VectorialFunction::from_exponent(6, 3)?.scale(1).with_trace_to(3)?;
    let c = code_from_vectorial(&f)?.code;
    let classic = classic_am(&c, 2, b)?;
    println!("classic, C(F): {:?} (weights {:?}, d^perp {:?})", classic.verdict, classic.weights_in_range, classic.dual_d);
    let general = generalized_am(&c, 2, &[28, 36], b)?;
    println!("generalized S={{28,36}}: {:?}", general.verdict);
    for fact in &general.facts {
        println!("    {:?} {} {}: {}", fact.status, fact.kind, fact.subject, fact.detail);
    }

    let t = ternary_code(3)?.code;
    println!("generalized, ternary S={{6,9,12}}: {:?}", generalized_am(&t, 2, &[6, 9, 12], b)?.verdict);

    let (code, w, report) = characterization_witness(16, 5, 2, 0, 500)?;
    println!("random [16,5] witness (seed 0), verdict {:?}; B_{w} is not a 2-design", report.verdict);
    for s in &report.statements {
        println!("    statement {}: {:?} ({})", s.number, s.holds, s.detail);
    }
    print!("{}", code.to_file_string());
    Ok(())
}
