//! Generates a finite group from weighted permutation matrices and verifies it.

use tropgroup::{closure, periodic_bound_check, verify_group, TropMatrix};

fn main() {
    // Diagonal conjugates of the transpositions (1 2) and (2 3).
    let s: TropMatrix = "-inf 1 -inf; -1 -inf -inf; -inf -inf 0".parse().unwrap();
    let t: TropMatrix = "0 -inf -inf; -inf -inf -2; -inf 2 -inf".parse().unwrap();
    let elements = closure(&[s, t], 100).unwrap();
    let g = verify_group(elements).unwrap();
    println!("closure has {} elements, neutral is element {}", g.order(), g.neutral_index() + 1);
    println!("{}", periodic_bound_check(&g));
    for (i, e) in g.elements().iter().enumerate() {
        println!("element {}:\n{e}", i + 1);
    }
}
