//! Full row rank tests and combination witnesses.

use tropgroup::{full_row_rank, is_combination, RowRank, Scalar, TropMatrix};

fn main() {
    let a: TropMatrix = "0 -inf 2; -inf 1 0; 1 2 3".parse().unwrap();
    println!("A =\n{a}");
    match full_row_rank(&a) {
        RowRank::Full => println!("A has full row rank"),
        RowRank::Deficient(w) => {
            let lambdas: Vec<String> = w.lambdas.iter().map(Scalar::to_string).collect();
            println!(
                "row {} is a combination of the others with λ = [{}]",
                w.target_row + 1,
                lambdas.join(", ")
            );
        }
    }

    let rows = [a.row(0).to_vec(), a.row(1).to_vec()];
    let b: Vec<Scalar> = vec![0.into(), 0.into(), 0.into()];
    println!("\n[0 0 0] as a combination of rows 1, 2: {:?}", is_combination(&b, &rows).unwrap());
}
