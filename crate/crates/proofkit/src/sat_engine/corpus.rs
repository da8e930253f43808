//! Seeded instance generators for tests and benchmarks.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use std::ops::RangeInclusive;

use crate::proof_core::{Clause, Literal, Var};
use crate::proof_io::CnfFormula;
use crate::sat_engine::solver::solve_with_proof;

/// A uniform random 3-CNF: each clause picks three distinct variables and
/// independent polarities.
pub fn random_3cnf(num_vars: u32, num_clauses: usize, rng: &mut impl Rng) -> CnfFormula {
    assert!(num_vars >= 3, "a 3-CNF needs at least three variables");
    let mut clauses = Vec::with_capacity(num_clauses);
    for _ in 0..num_clauses {
        let vars = sample(rng, num_vars as usize, 3);
        let lits = vars
            .iter()
            .map(|v| Literal::new(Var::new(v as u32 + 1), rng.gen()));
        clauses.push(Clause::new(lits).expect("distinct variables cannot clash"));
    }
    CnfFormula::new(num_vars, clauses)
}

/// A random 3-CNF whose variable count and clause/variable ratio are drawn
/// from the given ranges.
pub fn random_instance(
    rng: &mut impl Rng,
    vars: RangeInclusive<u32>,
    ratio: RangeInclusive<f64>,
) -> CnfFormula {
    let n = rng.gen_range(vars);
    let r = rng.gen_range(ratio);
    random_3cnf(n, (r * f64::from(n)).round() as usize, rng)
}

/// `count` random instances, reproducible from the seed.
pub fn random_corpus(
    count: usize,
    seed: u64,
    vars: RangeInclusive<u32>,
    ratio: RangeInclusive<f64>,
) -> Vec<CnfFormula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_instance(&mut rng, vars.clone(), ratio.clone()))
        .collect()
}

/// `count` unsatisfiable random instances, rejection-sampled with the
/// solver; reproducible from the seed.
pub fn unsat_corpus(
    count: usize,
    seed: u64,
    vars: RangeInclusive<u32>,
    ratio: RangeInclusive<f64>,
) -> Vec<CnfFormula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let f = random_instance(&mut rng, vars.clone(), ratio.clone());
        if solve_with_proof(&f).map(|r| r.is_unsat()).unwrap_or(false) {
            out.push(f);
        }
    }
    out
}

/// The pigeonhole principle PHP(pigeons, holes): variable `x_{ij}` — pigeon
/// `i` sits in hole `j` — numbered `(i - 1) · holes + j`. Unsatisfiable
/// whenever `pigeons > holes`.
pub fn pigeonhole(pigeons: u32, holes: u32) -> CnfFormula {
    let var = |i: u32, j: u32| Var::new((i - 1) * holes + j);
    let mut clauses = Vec::new();
    for i in 1..=pigeons {
        clauses.push(
            Clause::new((1..=holes).map(|j| Literal::positive(var(i, j))))
                .expect("distinct hole variables"),
        );
    }
    for j in 1..=holes {
        for i1 in 1..=pigeons {
            for i2 in (i1 + 1)..=pigeons {
                clauses.push(
                    Clause::new([
                        Literal::negative(var(i1, j)),
                        Literal::negative(var(i2, j)),
                    ])
                    .expect("distinct pigeon variables"),
                );
            }
        }
    }
    CnfFormula::new(pigeons * holes, clauses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat_engine::oracle::saturation_refute;

    #[test]
    fn generation_is_reproducible_from_the_seed() {
        let a = random_corpus(5, 42, 8..=14, 4.5..=6.0);
        let b = random_corpus(5, 42, 8..=14, 4.5..=6.0);
        assert_eq!(a, b);
        let c = random_corpus(5, 43, 8..=14, 4.5..=6.0);
        assert_ne!(a, c);
    }

    #[test]
    fn instances_respect_the_requested_shape() {
        for f in random_corpus(20, 1, 8..=14, 4.5..=6.0) {
            assert!((8..=14).contains(&f.num_vars()));
            let ratio = f.len() as f64 / f64::from(f.num_vars());
            assert!((4.4..=6.1).contains(&ratio), "ratio {ratio}");
            for c in f.iter() {
                assert_eq!(c.len(), 3, "every clause has three distinct variables");
            }
        }
    }

    #[test]
    fn the_unsat_corpus_is_really_unsatisfiable() {
        for f in unsat_corpus(6, 3, 5..=8, 4.5..=6.0) {
            assert!(saturation_refute(&f).unwrap().is_some());
        }
    }

    #[test]
    fn small_pigeonhole_instances_have_the_textbook_shape() {
        let f = pigeonhole(3, 2);
        assert_eq!(f.num_vars(), 6);
        assert_eq!(f.len(), 3 + 2 * 3);
        assert!(saturation_refute(&f).unwrap().is_some());
        assert!(saturation_refute(&pigeonhole(2, 2)).unwrap().is_none());
    }
}
