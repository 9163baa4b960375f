//! Reduces a group with a dependent row and reads off its monomial images.

use tropgroup::{monomialize, verify_group, TropMatrix};

fn main() {
    // Row 3 is row 1 ⊕ row 2 in every element.
    let e: TropMatrix = "0 -inf -inf; -inf 0 -inf; 0 0 -inf".parse().unwrap();
    let m: TropMatrix = "-inf 1 -inf; -1 -inf -inf; -1 1 -inf".parse().unwrap();
    let g = verify_group(vec![e, m]).unwrap();
    let rep = monomialize(&g).unwrap();
    for step in &rep.trace {
        println!(
            "dimension {}: removed row {} using element {}",
            step.source_dim,
            step.removed_row + 1,
            step.deficient_element + 1
        );
    }
    println!("target dimension {}", rep.target_dim);
    for (i, img) in rep.images.iter().enumerate() {
        println!("element {} ↦ {img}", i + 1);
    }
}
