#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 4 * 1024 {
        return;
    }
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(doc) = serde_json::from_str::<crossmod_core::doc::CocycleDoc>(text) {
            if let Ok(grading) = doc.grading() {
                let _ = crossmod_core::graded::verify_tables(
                    &grading,
                    doc.phase_modulus,
                    &doc.f,
                    &doc.h,
                );
            }
            if let Ok(cocycle) = doc.build() {
                let _ = cocycle.is_symmetric();
                let _ = cocycle.quadratic_form();
            }
        }
    }
});
