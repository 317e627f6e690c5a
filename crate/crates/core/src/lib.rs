//! Exact Gröbner bases over the rationals and a 3-SAT decision procedure
//! built on them.
//!
//! A CNF formula is encoded as a polynomial system whose 0/1 solutions are
//! exactly its models ([`encoder`]); the formula is unsatisfiable iff the
//! reduced Gröbner basis of that system is `{1}` ([`satdecide`]).

pub mod buchberger;
pub mod cli;
pub mod cnf;
pub mod encoder;
pub mod polyring;
pub mod satdecide;

pub use buchberger::{
    buchberger, groebner_basis, is_groebner, reduce_basis, s_polynomial, BuchbergerConfig,
    Criteria, GroebnerBasis, SelectionStrategy,
};
pub use cnf::{
    brute_force_sat, emit_dimacs, parse_dimacs, precheck, Assignment, CnfFormula, Precheck,
};
pub use encoder::{encode_clause, encode_formula, EncodingMode};
pub use polyring::{normal_form, Ideal, Monomial, MonomialOrder, Polynomial, Rational};
pub use satdecide::{certifies, decide, extract_solution, DecideConfig, Decision, Status};
