#![no_main]

use dix::Rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(r) = Rational::parse(text) {
            assert_eq!(Rational::parse(&r.to_string()).unwrap(), r);
        }
    }
});
