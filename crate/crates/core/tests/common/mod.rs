#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;
use tropgroup::{full_row_rank, MonomialMatrix, Permutation, Scalar, TropMatrix};

pub fn rational<R: Rng>(rng: &mut R) -> BigRational {
    let q: i64 = rng.gen_range(1..=8);
    let p: i64 = rng.gen_range(-24..=24);
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Random scalar with denominator at most 8, `-inf` with probability `p_inf`.
pub fn scalar<R: Rng>(rng: &mut R, p_inf: f64) -> Scalar {
    if rng.gen_bool(p_inf) {
        Scalar::NegInf
    } else {
        Scalar::Finite(rational(rng))
    }
}

pub fn matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, p_inf: f64) -> TropMatrix {
    let entries = (0..rows * cols).map(|_| scalar(rng, p_inf)).collect();
    TropMatrix::new(rows, cols, entries).unwrap()
}

pub fn permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

pub fn monomial<R: Rng>(rng: &mut R, n: usize) -> MonomialMatrix {
    let sigma = permutation(rng, n);
    let diag = (0..n).map(|_| rational(rng)).collect();
    MonomialMatrix::new(sigma, diag).unwrap()
}

/// Random `n x n` matrix of full row rank (rejection sampling).
pub fn full_rank_matrix<R: Rng>(rng: &mut R, n: usize) -> TropMatrix {
    loop {
        let m = matrix(rng, n, n, 0.2);
        if full_row_rank(&m).is_full() {
            return m;
        }
    }
}

/// `D ⊗ σ ⊗ D^-1` for a random diagonal `D`: a weighted monomial of finite order.
pub fn conjugated_permutation(sigma: &Permutation, conj: &[BigRational]) -> MonomialMatrix {
    let d = MonomialMatrix::diagonal(conj.to_vec());
    d.otimes(&MonomialMatrix::permutation(sigma.clone()))
        .unwrap()
        .otimes(&d.inverse())
        .unwrap()
}

/// Monomial whose weights sum to zero around every cycle of `sigma`.
pub fn cycle_balanced<R: Rng>(rng: &mut R, sigma: &Permutation) -> MonomialMatrix {
    let n = sigma.degree();
    let mut diag = vec![BigRational::from_integer(0.into()); n];
    for cycle in sigma.cycles() {
        let mut total = BigRational::from_integer(0.into());
        for &j in &cycle[..cycle.len() - 1] {
            let w = rational(rng);
            total += &w;
            diag[j] = w;
        }
        diag[*cycle.last().unwrap()] = -total;
    }
    MonomialMatrix::new(sigma.clone(), diag).unwrap()
}

/// Order of the permutation group generated by `gens`, by breadth-first search.
pub fn permutation_group_order(gens: &[Permutation]) -> usize {
    let n = gens[0].degree();
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::from([Permutation::identity(n)]);
    seen.insert(Permutation::identity(n));
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.compose(&p).unwrap();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen.len()
}

/// Independent max-plus product over `Option<BigRational>` (`None` is `-inf`).
pub fn naive_product(a: &TropMatrix, b: &TropMatrix) -> TropMatrix {
    let mut entries = Vec::new();
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let best: Option<BigRational> = (0..a.cols())
                .filter_map(|t| Some(a.get(i, t).as_finite()? + b.get(t, j).as_finite()?))
                .max();
            entries.push(best.map_or(Scalar::NegInf, Scalar::Finite));
        }
    }
    TropMatrix::new(a.rows(), b.cols(), entries).unwrap()
}

/// Entrywise `a <= b`.
pub fn row_le(a: &[Scalar], b: &[Scalar]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
