#![no_main]

use crossmod_core::doc::ComposeDoc;
use crossmod_core::xmod::PointedNaturalTransformation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 16 * 1024 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = serde_json::from_str::<ComposeDoc>(text) else {
        return;
    };
    match doc {
        ComposeDoc::Vertical(v) => {
            let (Ok(src), Ok(dst)) = (v.src.build(), v.dst.build()) else {
                return;
            };
            let (Ok(p1), Ok(p2)) = (v.p1.build(&src, &dst), v.p2.build(&src, &dst)) else {
                return;
            };
            let _ = PointedNaturalTransformation::vertical(&p1, &p2);
        }
        ComposeDoc::Horizontal(h) => {
            let (Ok(c1), Ok(c2), Ok(c3)) = (h.c1.build(), h.c2.build(), h.c3.build()) else {
                return;
            };
            let (Ok(p1), Ok(p2)) = (h.p1.build(&c1, &c2), h.p2.build(&c2, &c3)) else {
                return;
            };
            let _ = PointedNaturalTransformation::horizontal(&p1, &p2);
        }
    }
});
