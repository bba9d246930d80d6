#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 16 * 1024 {
        return;
    }
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(butterfly) = crossmod_core::doc::butterfly_from_json(text) {
            let _ = butterfly.is_reversible();
            let _ = butterfly.find_sections(2_000);
        }
    }
});
