#![no_main]

use libfuzzer_sys::fuzz_target;
use pullbacklab_cli::spec::{parse_generator_list, parse_group_spec, parse_gset_spec, parse_subgroup_spec};

fuzz_target!(|text: &str| {
    let _ = parse_generator_list(text);
    let _ = parse_subgroup_spec(text);
    let _ = parse_group_spec(text);
    let _ = parse_gset_spec(text);
});
