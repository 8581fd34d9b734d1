//! Arithmetic in GF(2^6) and GF(3^3): products, inverses, traces and the
//! embedding of a subfield.

use codesign::FieldTable;

fn main() -> codesign::Result<()> {
    let f = FieldTable::binary(6)?;
    println!("GF(2^6) modulus (p m c_m..c_0): {}", f.to_text());
    let alpha = f.generator();
    let x = f.exp(10);
    println!("alpha = {alpha}, alpha^10 = {x}, log(alpha^10) = {:?}", f.log(x));
    println!("alpha^10 * alpha^-10 = {}", f.mul(x, f.inv(x)?));
    println!("Tr(alpha^10) = {}, Tr_(2^6/2^3)(alpha^10) = {}", f.absolute_trace(x), f.trace(x, 3)?);

    let sub = FieldTable::binary(3)?;
    let embed = f.embedding_of(&sub)?;
    println!("GF(2^3) sits inside GF(2^6) as {embed:?}");

    let t = FieldTable::new(3, 3, None)?;
    let y = t.exp(5);
    println!("GF(3^3): alpha^5 = {y} (base-3 digits {}{}{}), Tr = {}", t.digit(y, 2), t.digit(y, 1), t.digit(y, 0), t.absolute_trace(y));
    Ok(())
}
