#![no_main]

use groebner_sat::cnf::{brute_force_sat, parse_dimacs};
use groebner_sat::satdecide::{decide, DecideConfig, Status};
use libfuzzer_sys::fuzz_target;

// Buchberger is exponential in the worst case; keep instances small enough
// that each run finishes quickly.
const MAX_VARS: usize = 5;
const MAX_CLAUSES: usize = 12;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(f) = parse_dimacs(text) else {
        return;
    };
    if f.num_vars() > MAX_VARS
        || f.clauses().len() > MAX_CLAUSES
        || f.clauses().iter().any(|c| c.width() > 4)
    {
        return;
    }
    let oracle = brute_force_sat(&f).unwrap();
    let d = decide(&f, &DecideConfig::default()).unwrap();
    assert_eq!(d.status == Status::Sat, oracle.is_some());
    if let Some(m) = d.model {
        assert!(f.evaluate(&m).unwrap());
    }
});
