use super::{Assignment, CnfError, CnfFormula};

pub const DEFAULT_ORACLE_LIMIT: usize = 24;

/// Exhaustive search with the default variable limit.
pub fn brute_force_sat(formula: &CnfFormula) -> Result<Option<Assignment>, CnfError> {
    brute_force_sat_with_limit(formula, DEFAULT_ORACLE_LIMIT)
}

/// Returns the first satisfying assignment in lexicographic order
/// (False < True, variable 1 most significant), or `None`.
///
/// Deliberately naive: it exists to check the algebraic decision
/// procedure, so it shares no code with it.
pub fn brute_force_sat_with_limit(
    formula: &CnfFormula,
    limit: usize,
) -> Result<Option<Assignment>, CnfError> {
    let k = formula.num_vars();
    if k > limit || k >= 64 {
        return Err(CnfError::OracleLimit { num_vars: k, limit });
    }
    for code in 0u64..(1u64 << k) {
        let values: Vec<bool> = (1..=k).map(|var| code >> (k - var) & 1 == 1).collect();
        let assignment = Assignment::new(values);
        if formula
            .clauses()
            .iter()
            .all(|c| c.is_satisfied(&assignment))
        {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}
