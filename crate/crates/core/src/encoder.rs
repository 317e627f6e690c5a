//! CNF to polynomial systems.
//!
//! A literal on variable `i` becomes the factor `z_i - c`, where `c` is 1
//! for a positive literal and 0 for a negated one, so the factor vanishes
//! exactly when the literal is true at a 0/1 point. A clause becomes the
//! product of its factors and the formula becomes the list of clause
//! products, each set equal to zero.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cnf::{Assignment, Clause, CnfError, CnfFormula, Polarity};
use crate::polyring::{Ideal, MonomialOrder, PolyError, Polynomial, Rational, MAX_VARIABLES};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EncodeError {
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("clause mentions variable {var} but the ring has {nvars} variables")]
    VariableOutOfRange { var: usize, nvars: usize },
    #[error("coordinate {index} is {value}, expected 0 or 1")]
    NotBinary { index: usize, value: Rational },
    #[error("unknown encoding mode {0:?} (expected bare or boolean)")]
    UnknownMode(String),
}

/// Which generators the encoding produces.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EncodingMode {
    /// Clause products only.
    Bare,
    /// Clause products plus `z_i^2 - z_i` for every variable. The extra
    /// generators vanish on every 0/1 point, so satisfiability is
    /// unchanged, but the ideal becomes zero-dimensional.
    #[default]
    Boolean,
}

impl EncodingMode {
    pub fn name(self) -> &'static str {
        match self {
            EncodingMode::Bare => "bare",
            EncodingMode::Boolean => "boolean",
        }
    }
}

impl fmt::Display for EncodingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EncodingMode {
    type Err = EncodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bare" => Ok(EncodingMode::Bare),
            "boolean" => Ok(EncodingMode::Boolean),
            other => Err(EncodeError::UnknownMode(other.to_string())),
        }
    }
}

/// The constant subtracted from `z` for a literal with sign `sigma`:
/// 1 for `+1`, 0 for `-1`.
pub fn literal_constant(sigma: i64) -> Result<Rational, EncodeError> {
    Ok(polarity_constant(Polarity::from_sigma(sigma)?))
}

fn polarity_constant(polarity: Polarity) -> Rational {
    match polarity {
        Polarity::Positive => Rational::one(),
        Polarity::Negative => Rational::zero(),
    }
}

/// Product of `(z_var - c)` over the clause's literals. The empty clause
/// gives the constant 1.
pub fn encode_clause(
    clause: &Clause,
    nvars: usize,
    order: MonomialOrder,
) -> Result<Polynomial, EncodeError> {
    let mut product = Polynomial::one(nvars, order);
    for lit in &clause.literals {
        if lit.var == 0 || lit.var > nvars {
            return Err(EncodeError::VariableOutOfRange {
                var: lit.var,
                nvars,
            });
        }
        let z = Polynomial::variable(nvars, order, lit.var - 1)?;
        let c = Polynomial::constant(nvars, order, polarity_constant(lit.polarity));
        product = product.mul(&z.sub(&c)?)?;
    }
    Ok(product)
}

/// `z_{index+1}^2 - z_{index+1}`.
pub fn field_polynomial(
    nvars: usize,
    order: MonomialOrder,
    index: usize,
) -> Result<Polynomial, EncodeError> {
    let z = Polynomial::variable(nvars, order, index)?;
    Ok(z.mul(&z)?.sub(&z)?)
}

/// Clause products in clause order, then (in boolean mode) the field
/// polynomials in variable order.
pub fn encode_formula(
    formula: &CnfFormula,
    mode: EncodingMode,
    order: MonomialOrder,
) -> Result<Ideal, EncodeError> {
    let k = formula.num_vars();
    if k > MAX_VARIABLES {
        return Err(PolyError::TooManyVariables { nvars: k }.into());
    }
    let mut generators = formula
        .clauses()
        .iter()
        .map(|c| encode_clause(c, k, order))
        .collect::<Result<Vec<_>, _>>()?;
    if mode == EncodingMode::Boolean {
        for i in 0..k {
            generators.push(field_polynomial(k, order, i)?);
        }
    }
    Ok(Ideal::new(k, order, generators)?)
}

/// A point of `{0, 1}^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point01 {
    coords: Vec<bool>,
}

impl Point01 {
    pub fn from_coords(coords: &[Rational]) -> Result<Self, EncodeError> {
        let bits = coords
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_zero() {
                    Ok(false)
                } else if c.is_one() {
                    Ok(true)
                } else {
                    Err(EncodeError::NotBinary {
                        index,
                        value: c.clone(),
                    })
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Point01 { coords: bits })
    }

    pub fn coords(&self) -> Vec<Rational> {
        self.coords
            .iter()
            .map(|&b| if b { Rational::one() } else { Rational::zero() })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

/// True ↦ 1, False ↦ 0.
pub fn assignment_to_point(assignment: &Assignment) -> Point01 {
    Point01 {
        coords: assignment.values().to_vec(),
    }
}

pub fn point_to_assignment(point: &Point01) -> Assignment {
    Assignment::new(point.coords.clone())
}

/// Whether every generator vanishes at `point`.
pub fn evaluate_system(ideal: &Ideal, point: &Point01) -> Result<bool, EncodeError> {
    let coords = point.coords();
    for g in ideal.generators() {
        if !g.eval(&coords)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
