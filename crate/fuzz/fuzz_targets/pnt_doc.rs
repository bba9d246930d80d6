#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 16 * 1024 {
        return;
    }
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(pnt) = crossmod_core::doc::pnt_from_json(text) {
            let _ = pnt.invert();
        }
    }
});
