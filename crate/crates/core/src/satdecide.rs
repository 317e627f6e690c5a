//! Deciding satisfiability through reduced Gröbner bases.
//!
//! A formula is unsatisfiable iff its encoded ideal has no common zero,
//! which holds iff the reduced Gröbner basis is exactly `{1}`. Strictly
//! that equivalence concerns complex zeros, but here it is exact for 0/1
//! points too: a complex zero makes one factor of every clause product
//! vanish, and that factor pins its variable to 0 or 1, so rounding the
//! remaining coordinates to Boolean values (any choice) satisfies every
//! clause.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::buchberger::{
    generates_ideal, groebner_basis, is_groebner, BuchbergerConfig, BuchbergerError, Criteria,
    GroebnerBasis, SelectionStrategy,
};
use crate::cnf::{precheck, Assignment, CnfError, CnfFormula, Precheck};
use crate::encoder::{encode_formula, EncodeError, EncodingMode};
use crate::polyring::{Ideal, MonomialOrder, PolyError, Polynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error(transparent)]
    Encode(#[from] EncodeError),
    #[error(transparent)]
    Buchberger(#[from] BuchbergerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error("formula is unsatisfiable; no assignment to extract")]
    Unsatisfiable,
    #[error("model extraction requires the boolean encoding mode")]
    ExtractionNeedsBooleanMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecideConfig {
    pub mode: EncodingMode,
    pub order: MonomialOrder,
    pub criteria: Criteria,
    pub strategy: SelectionStrategy,
    /// Answer from the clause-count bounds when they are conclusive.
    pub use_precheck: bool,
    pub extract_model: bool,
    /// Reduction budget per Buchberger run.
    pub budget: Option<u64>,
}

impl Default for DecideConfig {
    fn default() -> Self {
        DecideConfig {
            mode: EncodingMode::Boolean,
            order: MonomialOrder::Grevlex,
            criteria: Criteria::ALL,
            strategy: SelectionStrategy::Normal,
            use_precheck: true,
            extract_model: true,
            budget: None,
        }
    }
}

impl DecideConfig {
    fn buchberger(&self) -> BuchbergerConfig {
        BuchbergerConfig {
            criteria: self.criteria,
            strategy: self.strategy,
            budget: self.budget,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    #[serde(rename = "SAT")]
    Sat,
    #[serde(rename = "UNSAT")]
    Unsat,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Sat => "SAT",
            Status::Unsat => "UNSAT",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DecideStats {
    pub pairs: u64,
    pub reductions: u64,
    /// Size of the reduced basis; 0 when the basis was never computed.
    pub basis_size: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub status: Status,
    pub model: Option<Assignment>,
    /// Reduced basis of the encoded ideal; absent when the precheck
    /// answered without running Buchberger.
    pub certificate: Option<GroebnerBasis>,
    pub precheck: Option<Precheck>,
    pub stats: DecideStats,
}

/// Decides satisfiability of `formula`.
pub fn decide(formula: &CnfFormula, config: &DecideConfig) -> Result<Decision, DecideError> {
    let start = Instant::now();
    let pre = config.use_precheck.then(|| precheck(formula));
    let mut stats = DecideStats::default();

    let (status, certificate) = match pre {
        Some(Precheck::Sat) => (Status::Sat, None),
        Some(Precheck::Unsat) => (Status::Unsat, None),
        _ => {
            let ideal = encode_formula(formula, config.mode, config.order)?;
            let (basis, run) = groebner_basis(&ideal, &config.buchberger())?;
            stats.pairs = run.pairs;
            stats.reductions = run.reductions;
            stats.basis_size = basis.len();
            let status = if basis.is_unit() {
                Status::Unsat
            } else {
                Status::Sat
            };
            (status, Some(basis))
        }
    };

    let model = match status {
        Status::Sat if config.extract_model => {
            let boolean = DecideConfig {
                mode: EncodingMode::Boolean,
                ..*config
            };
            Some(match &certificate {
                Some(basis) if config.mode == EncodingMode::Boolean => {
                    extract_from_basis(formula, basis, &boolean)?
                }
                _ => extract_solution(formula, &boolean)?,
            })
        }
        _ => None,
    };

    stats.elapsed = start.elapsed();
    Ok(Decision {
        status,
        model,
        certificate,
        precheck: pre,
        stats,
    })
}

/// Finds a satisfying assignment by fixing variables one at a time.
///
/// For `i = 1..k`, the current ideal is augmented with `z_i` (that is,
/// `z_i = 0`). If the augmented basis is not `{1}` the choice is kept,
/// otherwise `z_i - 1` is adjoined instead. With the field polynomials
/// present each augmented ideal is consistent exactly when the formula
/// restricted by the choices so far is satisfiable, so the procedure never
/// has to backtrack. Without them a variable that appears in no vanishing
/// factor could be fixed to a value no later choice can repair, so the
/// bare encoding is rejected.
pub fn extract_solution(
    formula: &CnfFormula,
    config: &DecideConfig,
) -> Result<Assignment, DecideError> {
    if config.mode != EncodingMode::Boolean {
        return Err(DecideError::ExtractionNeedsBooleanMode);
    }
    let ideal = encode_formula(formula, EncodingMode::Boolean, config.order)?;
    let (basis, _) = groebner_basis(&ideal, &config.buchberger())?;
    extract_from_basis(formula, &basis, config)
}

fn extract_from_basis(
    formula: &CnfFormula,
    basis: &GroebnerBasis,
    config: &DecideConfig,
) -> Result<Assignment, DecideError> {
    if basis.is_unit() {
        return Err(DecideError::Unsatisfiable);
    }
    let k = formula.num_vars();
    let order = basis.order();
    let bb = config.buchberger();
    let mut current = basis.clone();
    let mut values = Vec::with_capacity(k);
    for i in 0..k {
        let z = Polynomial::variable(k, order, i)?;
        let mut with_zero = Ideal::new(k, order, current.polys().to_vec())?;
        with_zero.adjoin(z.clone())?;
        let (zero_basis, _) = groebner_basis(&with_zero, &bb)?;
        if !zero_basis.is_unit() {
            current = zero_basis;
            values.push(false);
            continue;
        }
        let mut with_one = Ideal::new(k, order, current.polys().to_vec())?;
        with_one.adjoin(z.sub(&Polynomial::constant(
            k,
            order,
            Rational::from_integer(1.into()),
        ))?)?;
        let (one_basis, _) = groebner_basis(&with_one, &bb)?;
        if one_basis.is_unit() {
            return Err(DecideError::Unsatisfiable);
        }
        current = one_basis;
        values.push(true);
    }
    let model = Assignment::new(values);
    debug_assert!(formula.evaluate(&model).unwrap_or(false));
    Ok(model)
}

/// Checks that `cert` is a Gröbner basis and that every generator of the
/// encoded ideal reduces to zero modulo it.
///
/// This only establishes `ideal(formula) ⊆ ideal(cert)`, which says nothing
/// when `cert = {1}`. Use [`certifies`] to also check the reverse inclusion.
pub fn verify_certificate(formula: &CnfFormula, cert: &GroebnerBasis, mode: EncodingMode) -> bool {
    if cert.nvars() != formula.num_vars()
        || cert
            .polys()
            .iter()
            .any(|p| p.nvars() != cert.nvars() || p.order() != cert.order())
    {
        return false;
    }
    let Ok(ideal) = encode_formula(formula, mode, cert.order()) else {
        return false;
    };
    matches!(is_groebner(cert.polys()), Ok(true))
        && matches!(generates_ideal(cert, &ideal), Ok(true))
}

/// [`verify_certificate`] plus the requirement that `cert` is exactly `{1}`.
pub fn verify_unsat_certificate(
    formula: &CnfFormula,
    cert: &GroebnerBasis,
    mode: EncodingMode,
) -> bool {
    cert.is_unit() && verify_certificate(formula, cert, mode)
}

/// Checks that `cert` and the encoded ideal are the same ideal: the
/// inclusion tested by [`verify_certificate`], plus every element of `cert`
/// reducing to zero modulo a freshly computed basis of the encoding.
pub fn certifies(
    formula: &CnfFormula,
    cert: &GroebnerBasis,
    mode: EncodingMode,
) -> Result<bool, DecideError> {
    if !verify_certificate(formula, cert, mode) {
        return Ok(false);
    }
    let ideal = encode_formula(formula, mode, cert.order())?;
    let (own, _) = groebner_basis(&ideal, &BuchbergerConfig::default())?;
    for p in cert.polys() {
        if !own.normal_form(p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
