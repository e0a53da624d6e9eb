#![no_main]

use libfuzzer_sys::fuzz_target;
use pullbacklab_cli::report::Report;

fuzz_target!(|text: &str| {
    let Ok(report) = Report::from_json(text) else { return };
    let again = Report::from_json(&report.to_json()).expect("serialized report parses");
    assert_eq!(again, report);
    let _ = report.to_text();
    let _ = report.to_csv();
});
