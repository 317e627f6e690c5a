#![no_main]

use groebner_sat::polyring::{parse_polynomial, parse_raw_terms, MonomialOrder};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&sel, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let _ = parse_raw_terms(text);
    let order = MonomialOrder::ALL[sel as usize % 3];
    let nvars = (sel as usize / 3) % 8;
    if let Ok(p) = parse_polynomial(text, nvars, order) {
        let shown = p.to_string();
        let back = parse_polynomial(&shown, nvars, order).expect("displayed polynomial must parse");
        assert_eq!(back, p);
    }
});
