use std::fmt::Write as _;

use thiserror::Error;

use super::{Clause, CnfFormula, Literal};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DimacsErrorKind {
    #[error("clause data before the 'p cnf' header")]
    MissingHeader,
    #[error("duplicate 'p cnf' header")]
    DuplicateHeader,
    #[error("malformed header, expected 'p cnf <vars> <clauses>'")]
    MalformedHeader,
    #[error("literal {literal} exceeds declared variable count {num_vars}")]
    LiteralOutOfRange { literal: i64, num_vars: usize },
    #[error("last clause is not terminated by 0")]
    UnterminatedClause,
    #[error("invalid token {0:?}")]
    InvalidToken(String),
    #[error("header declares {declared} clauses, found {found}")]
    ClauseCountMismatch { declared: usize, found: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct DimacsError {
    pub line: usize,
    pub kind: DimacsErrorKind,
}

fn err(line: usize, kind: DimacsErrorKind) -> DimacsError {
    DimacsError { line, kind }
}

/// Parses DIMACS CNF. Clauses may span lines; `c` lines are comments.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Clause> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut open = false;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(err(line, DimacsErrorKind::DuplicateHeader));
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                ["p", "cnf", k, n] => k.parse::<usize>().ok().zip(n.parse::<usize>().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or_else(|| err(line, DimacsErrorKind::MalformedHeader))?);
            continue;
        }
        let (num_vars, _) = header.ok_or_else(|| err(line, DimacsErrorKind::MissingHeader))?;
        for token in trimmed.split_whitespace() {
            let value: i64 = token
                .parse()
                .map_err(|_| err(line, DimacsErrorKind::InvalidToken(token.to_string())))?;
            match Literal::from_dimacs(value) {
                None => {
                    clauses.push(Clause::new(std::mem::take(&mut current)));
                    open = false;
                }
                Some(lit) if lit.var > num_vars => {
                    return Err(err(
                        line,
                        DimacsErrorKind::LiteralOutOfRange {
                            literal: value,
                            num_vars,
                        },
                    ));
                }
                Some(lit) => {
                    current.push(lit);
                    open = true;
                }
            }
        }
    }

    let (num_vars, declared) =
        header.ok_or_else(|| err(last_line.max(1), DimacsErrorKind::MissingHeader))?;
    if open {
        return Err(err(last_line, DimacsErrorKind::UnterminatedClause));
    }
    if clauses.len() != declared {
        return Err(err(
            last_line,
            DimacsErrorKind::ClauseCountMismatch {
                declared,
                found: clauses.len(),
            },
        ));
    }
    Ok(CnfFormula::new(num_vars, clauses).expect("literal ranges checked while parsing"))
}

/// Canonical DIMACS: header line, then one 0-terminated clause per line.
pub fn emit_dimacs(formula: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", formula.num_vars(), formula.clauses().len());
    for clause in formula.clauses() {
        for lit in &clause.literals {
            let _ = write!(out, "{lit} ");
        }
        out.push_str("0\n");
    }
    out
}
