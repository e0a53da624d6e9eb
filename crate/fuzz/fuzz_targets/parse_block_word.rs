#![no_main]

use libfuzzer_sys::fuzz_target;
use pullbacklab::free_cover::{cover_from_blocks, BlockSequence};

fuzz_target!(|text: &str| {
    let Ok(seq) = text.parse::<BlockSequence>() else { return };
    let again: BlockSequence = seq.to_string().parse().expect("display output parses");
    assert_eq!(again, seq);
    if seq.n() <= 64 {
        let cover = cover_from_blocks(&seq);
        assert_eq!(cover.n(), seq.n());
        assert!(cover.is_transitive());
    }
});
