#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = gpm_color::format::parse_assignment(text);
        let _ = gpm_color::format::parse_kernel(text);
    }
});
