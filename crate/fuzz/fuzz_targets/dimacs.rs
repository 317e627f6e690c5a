#![no_main]

use groebner_sat::cnf::{emit_dimacs, parse_dimacs};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(f) = parse_dimacs(text) {
        let emitted = emit_dimacs(&f);
        let back = parse_dimacs(&emitted).expect("emitted DIMACS must parse");
        assert_eq!(back, f);
    }
});
