//! CNF formulas, DIMACS I/O, clause-count pre-checks and a brute-force oracle.

mod dimacs;
mod oracle;
mod precheck;
pub mod random;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use dimacs::{emit_dimacs, parse_dimacs, DimacsError, DimacsErrorKind};
pub use oracle::{brute_force_sat, brute_force_sat_with_limit, DEFAULT_ORACLE_LIMIT};
pub use precheck::{precheck, Precheck};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("variable {var} out of range 1..={num_vars}")]
    VariableOutOfRange { var: usize, num_vars: usize },
    #[error("assignment has {got} values, formula has {expected} variables")]
    AssignmentLength { got: usize, expected: usize },
    #[error("brute-force oracle limited to {limit} variables, formula has {num_vars}")]
    OracleLimit { num_vars: usize, limit: usize },
    #[error("polarity must be +1 or -1, got {0}")]
    InvalidPolarity(i64),
    #[error("random 3-CNF needs at least 3 variables, got {0}")]
    TooFewVariables(usize),
}

/// Sign of a literal: `x^1 = x`, `x^-1 = ¬x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Polarity {
    Negative,
    Positive,
}

impl Polarity {
    pub fn from_sigma(sigma: i64) -> Result<Self, CnfError> {
        match sigma {
            1 => Ok(Polarity::Positive),
            -1 => Ok(Polarity::Negative),
            other => Err(CnfError::InvalidPolarity(other)),
        }
    }

    pub fn sigma(self) -> i64 {
        match self {
            Polarity::Positive => 1,
            Polarity::Negative => -1,
        }
    }

    /// The truth value that satisfies a literal with this polarity.
    pub fn satisfied_by(self) -> bool {
        self == Polarity::Positive
    }
}

/// Variable index (1-based) with a polarity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub polarity: Polarity,
}

impl Literal {
    pub fn new(var: usize, polarity: Polarity) -> Self {
        Literal { var, polarity }
    }

    pub fn positive(var: usize) -> Self {
        Literal::new(var, Polarity::Positive)
    }

    pub fn negative(var: usize) -> Self {
        Literal::new(var, Polarity::Negative)
    }

    /// From a nonzero DIMACS integer.
    pub fn from_dimacs(lit: i64) -> Option<Self> {
        if lit == 0 {
            return None;
        }
        let var = usize::try_from(lit.unsigned_abs()).ok()?;
        let polarity = if lit > 0 {
            Polarity::Positive
        } else {
            Polarity::Negative
        };
        Some(Literal { var, polarity })
    }

    pub fn to_dimacs(self) -> i64 {
        self.var as i64 * self.polarity.sigma()
    }

    pub fn is_satisfied(self, assignment: &Assignment) -> bool {
        assignment.value(self.var) == self.polarity.satisfied_by()
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

/// Disjunction of literals. Any width, repetitions allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Clause {
    pub literals: Vec<Literal>,
}

impl Clause {
    pub fn new(literals: Vec<Literal>) -> Self {
        Clause { literals }
    }

    pub fn from_dimacs(lits: &[i64]) -> Self {
        Clause::new(
            lits.iter()
                .filter_map(|&l| Literal::from_dimacs(l))
                .collect(),
        )
    }

    pub fn width(&self) -> usize {
        self.literals.len()
    }

    pub fn is_satisfied(&self, assignment: &Assignment) -> bool {
        self.literals.iter().any(|l| l.is_satisfied(assignment))
    }
}

/// Conjunction of clauses over variables `1..=num_vars`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<Self, CnfError> {
        for c in &clauses {
            for l in &c.literals {
                if l.var == 0 || l.var > num_vars {
                    return Err(CnfError::VariableOutOfRange {
                        var: l.var,
                        num_vars,
                    });
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// Convenience constructor from DIMACS-style signed integers.
    pub fn from_dimacs_clauses(num_vars: usize, clauses: &[&[i64]]) -> Result<Self, CnfError> {
        CnfFormula::new(
            num_vars,
            clauses.iter().map(|c| Clause::from_dimacs(c)).collect(),
        )
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// True iff every clause has a literal satisfied by `assignment`.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<bool, CnfError> {
        if assignment.len() != self.num_vars {
            return Err(CnfError::AssignmentLength {
                got: assignment.len(),
                expected: self.num_vars,
            });
        }
        Ok(self.clauses.iter().all(|c| c.is_satisfied(assignment)))
    }
}

/// Free-function form of [`CnfFormula::evaluate`].
pub fn evaluate_formula(formula: &CnfFormula, assignment: &Assignment) -> Result<bool, CnfError> {
    formula.evaluate(assignment)
}

/// Total truth assignment; `values[i]` is variable `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    pub fn all_false(num_vars: usize) -> Self {
        Assignment::new(vec![false; num_vars])
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    /// Value of 1-based variable `var`.
    pub fn value(&self, var: usize) -> bool {
        self.values[var - 1]
    }

    /// Signed literals `1 -2 3 ...`, one per variable.
    pub fn to_dimacs(&self) -> Vec<i64> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &v)| if v { i as i64 + 1 } else { -(i as i64 + 1) })
            .collect()
    }
}
