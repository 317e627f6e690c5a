#![no_main]

use groebner_sat::polyring::PolySystem;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(sys) = PolySystem::parse(text, None) {
        let rendered = sys.render();
        let back = PolySystem::parse(&rendered, None).expect("rendered system must parse");
        assert_eq!(back, sys);
    }
});
