//! Wreath product elements and their dense realizations.

use num_rational::BigRational;
use tropgroup::{realize, verify_group, Permutation, WreathElement};

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

fn main() {
    let w = WreathElement::new(
        Permutation::from_one_line(&[2, 3, 1]).unwrap(),
        vec![q(1, 2), q(-1, 3), q(-1, 6)],
    )
    .unwrap();
    println!("w = {}", serde_json::to_string(&w).unwrap());
    println!("w as a matrix:\n{}", w.to_dense());

    let mut powers = vec![WreathElement::identity(3)];
    loop {
        let next = powers.last().unwrap().mul(&w).unwrap();
        if next.is_identity() {
            break;
        }
        powers.push(next);
    }
    let g = verify_group(realize(&powers).unwrap()).unwrap();
    println!("w generates a verified group of order {}", g.order());
}
