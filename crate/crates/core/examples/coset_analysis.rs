//! Splits a group into cosets of its diagonal part.

use tropgroup::{analyze, closure, monomialize, verify_group, MonomialMatrix, Permutation};

fn main() {
    let gens: Vec<_> = [[2, 3, 1], [2, 1, 3]]
        .iter()
        .map(|p| MonomialMatrix::permutation(Permutation::from_one_line(p).unwrap()).to_dense())
        .collect();
    let g = verify_group(closure(&gens, 100).unwrap()).unwrap();
    let a = analyze(&monomialize(&g).unwrap());
    println!("index {} (bound {})", a.index, a.n_factorial_bound);
    for c in &a.cosets {
        let members: Vec<usize> = c.members.iter().map(|i| i + 1).collect();
        println!("σ = {}: elements {members:?}", c.sigma);
    }
    println!("diagonal part abelian: {}", a.diagonal_abelian_ok);
    println!("diagonal part torsion-free: {}", a.diagonal_torsion_free_ok);
}
