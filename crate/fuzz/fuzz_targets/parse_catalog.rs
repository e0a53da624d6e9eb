#![no_main]

use libfuzzer_sys::fuzz_target;
use pullbacklab_cli::catalog::{build_group, parse_catalog};

fuzz_target!(|text: &str| {
    let Ok(entries) = parse_catalog(text) else { return };
    let rendered: String = entries.iter().map(|e| e.to_string()).collect();
    let again = parse_catalog(&rendered).expect("display output parses");
    assert_eq!(again.len(), entries.len());
    for (a, b) in again.iter().zip(&entries) {
        assert_eq!((&a.name, a.degree, &a.generators, &a.subgroups), (&b.name, b.degree, &b.generators, &b.subgroups));
        if b.degree <= 64 {
            let _ = build_group(b, 64);
        }
    }
});
