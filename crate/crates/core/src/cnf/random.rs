//! Seeded random 3-CNF instances for tests and the bench harness.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Clause, CnfError, CnfFormula, Literal, Polarity};

/// `n` clauses, each on 3 distinct variables chosen uniformly from `1..=k`
/// with independent fair signs.
pub fn random_3cnf<R: Rng + ?Sized>(
    rng: &mut R,
    k: usize,
    n: usize,
) -> Result<CnfFormula, CnfError> {
    if k < 3 {
        return Err(CnfError::TooFewVariables(k));
    }
    let clauses = (0..n)
        .map(|_| {
            let mut vars = sample(rng, k, 3).into_vec();
            vars.sort_unstable();
            Clause::new(
                vars.into_iter()
                    .map(|v| {
                        let polarity = if rng.random_bool(0.5) {
                            Polarity::Positive
                        } else {
                            Polarity::Negative
                        };
                        Literal::new(v + 1, polarity)
                    })
                    .collect(),
            )
        })
        .collect();
    CnfFormula::new(k, clauses)
}

/// Deterministic RNG for a recorded seed.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
