use std::collections::HashSet;

use num_bigint::BigUint;
use serde::Serialize;

use super::{Clause, CnfFormula, Polarity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Precheck {
    Sat,
    Unsat,
    Unknown,
}

/// Sorted `(var, polarity)` triple if the clause mentions exactly three
/// distinct variables.
fn canonical_triple(clause: &Clause) -> Option<[(usize, Polarity); 3]> {
    let [a, b, c] = clause.literals.as_slice() else {
        return None;
    };
    let mut lits = [
        (a.var, a.polarity),
        (b.var, b.polarity),
        (c.var, c.polarity),
    ];
    lits.sort();
    (lits[0].0 != lits[1].0 && lits[1].0 != lits[2].0).then_some(lits)
}

/// Clause-count shortcuts for 3-CNF over distinct variables.
///
/// Each clause on three distinct variables rules out exactly one eighth of
/// all assignments, so fewer than 8 such clauses always leave a model. In
/// the other direction, every assignment satisfies exactly
/// `7 * C(k, 3) = 7k(k-1)(k-2)/6` of the distinct clauses, so a formula with
/// more distinct clauses than that has no model. Any clause that does not
/// mention three distinct variables makes the result `Unknown`.
pub fn precheck(formula: &CnfFormula) -> Precheck {
    let mut distinct = HashSet::new();
    for clause in formula.clauses() {
        match canonical_triple(clause) {
            Some(key) => {
                distinct.insert(key);
            }
            None => return Precheck::Unknown,
        }
    }
    if formula.clauses().len() < 8 {
        return Precheck::Sat;
    }
    let k = BigUint::from(formula.num_vars());
    let bound = if formula.num_vars() < 3 {
        BigUint::from(0u8)
    } else {
        BigUint::from(7u8) * &k * (&k - 1u8) * (&k - 2u8) / 6u8
    };
    if BigUint::from(distinct.len()) > bound {
        Precheck::Unsat
    } else {
        Precheck::Unknown
    }
}
