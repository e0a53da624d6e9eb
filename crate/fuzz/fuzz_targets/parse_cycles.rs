#![no_main]

use libfuzzer_sys::fuzz_target;
use pullbacklab::perm::{parse_cycles, Permutation};

fuzz_target!(|text: &str| {
    let Ok(cycles) = parse_cycles(text) else { return };
    let degree = cycles.iter().flatten().copied().max().unwrap_or(1).max(1);
    if degree > 4096 {
        return;
    }
    if let Ok(p) = Permutation::from_cycles(degree, &cycles) {
        let again = Permutation::parse(&p.to_string(), degree).expect("display output parses");
        assert_eq!(again, p);
    }
});
