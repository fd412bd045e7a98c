#![no_main]

use dix::inner::{format_configs, parse_config_text};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let n = usize::from(n % 8);
    if let Ok(text) = std::str::from_utf8(rest) {
        if let Ok(mut drafts) = parse_config_text(text, n) {
            let mut again = parse_config_text(&format_configs(&drafts), n).unwrap();
            drafts.iter_mut().chain(again.iter_mut()).for_each(|d| d.line = 0);
            assert_eq!(again, drafts);
        }
    }
});
