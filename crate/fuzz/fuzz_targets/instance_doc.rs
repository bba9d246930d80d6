#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 8 * 1024 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = serde_json::from_str::<crossmod_core::doc::InstanceDoc>(text) else {
        return;
    };
    if doc.objects.len() > 4 {
        return;
    }
    if let Ok(instance) = doc.build(2_000) {
        let _ = crossmod_core::twocat::check_all(&instance);
    }
});
