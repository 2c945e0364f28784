#![no_main]

use libfuzzer_sys::fuzz_target;
use quasiroute::io::{distance_matrix_csv, parse_distance_matrix_csv};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(d) = parse_distance_matrix_csv(text) {
        let again = parse_distance_matrix_csv(&distance_matrix_csv(&d))
            .expect("written matrices parse");
        assert_eq!(again, d);
    }
});
