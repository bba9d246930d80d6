#![no_main]

use crossmod_core::graded::{tensor_object, GradingGroup};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 8 * 1024 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = serde_json::from_str::<crossmod_core::doc::GradedObjectDoc>(text) else {
        return;
    };
    let grading = GradingGroup::new(vec![2, 3]).unwrap();
    if let Ok(object) = doc.build(&grading) {
        if object.total_dim() <= 64 {
            let _ = tensor_object(&object, &object);
        }
    }
});
