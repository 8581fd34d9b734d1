//! Weight distributions of a small code and of its dual, plus the dual
//! distance found by low-weight search.

use std::sync::Arc;

use codesign::{FieldTable, LinearCode};

fn main() -> codesign::Result<()> {
    let gf2 = Arc::new(FieldTable::binary(1)?);
    // Simplex code of dimension 4: every nonzero column of length 4.
    let rows: Vec<Vec<u32>> = (0..4).map(|i| (1..16u32).map(|c| (c >> i) & 1).collect()).collect();
    let simplex = LinearCode::from_rows(gf2, rows)?;
    let wd = simplex.weight_distribution()?;
    println!("simplex [15,4]: {wd}");

    let hamming = simplex.dual();
    println!("its dual [15,{}]: {}", hamming.dimension(), hamming.weight_distribution()?);
    println!("dual distance by search: {:?}", simplex.dual_distance(1 << 26)?);
    println!("dual words of weight <= 4: {:?}", simplex.dual_weight_prefix(4, 1 << 26)?);

    let gf4 = Arc::new(FieldTable::new(2, 2, None)?);
    let hexacode = LinearCode::from_rows(
        gf4,
        vec![vec![1, 0, 0, 1, 2, 2], vec![0, 1, 0, 2, 1, 2], vec![0, 0, 1, 2, 2, 1]],
    )?;
    println!("hexacode over GF(4): {}", hexacode.weight_distribution()?);
    print!("code file:\n{}", hexacode.to_file_string());
    Ok(())
}
