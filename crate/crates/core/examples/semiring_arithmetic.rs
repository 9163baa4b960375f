//! Exact max-plus arithmetic on scalars and matrices.
//!
//! ```text
//! cargo run --example semiring_arithmetic
//! ```

use tropgroup::{Scalar, TropMatrix};

fn main() {
    let a: Scalar = "3/2".parse().unwrap();
    let b = Scalar::from(-1);
    println!("{a} ⊕ {b} = {}", a.oplus(&b));
    println!("{a} ⊗ {b} = {}", a.otimes(&b));
    println!("{a} ⊗ -inf = {}", a.otimes(&Scalar::NegInf));

    let x: TropMatrix = "0 1; -inf 2".parse().unwrap();
    let y: TropMatrix = "-inf 3; 0 -1".parse().unwrap();
    let xy = x.otimes(&y).unwrap();
    println!("\nX =\n{x}\nY =\n{y}\nX ⊗ Y =\n{xy}");
    assert_eq!(TropMatrix::neutral(2).otimes(&xy).unwrap(), xy);
}
