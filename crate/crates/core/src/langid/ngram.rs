//! Character n-gram extraction with packed integer keys.

use alloc::string::String;
use alloc::vec::Vec;

use crate::text;

/// Longest n-gram that fits a packed key: 6 code points of 21 bits each.
pub const MAX_NGRAM: usize = 6;

const BITS: u32 = 21;
const MASK: u128 = (1 << BITS) - 1;

/// Packs up to [`MAX_NGRAM`] chars into one key. Each digit stores the code
/// point plus one, so keys of different lengths never collide.
pub fn pack(chars: &[char]) -> u128 {
    debug_assert!(chars.len() <= MAX_NGRAM);
    chars.iter().fold(0u128, |key, &c| (key << BITS) | (c as u128 + 1))
}

pub fn unpack(mut key: u128) -> String {
    let mut chars = Vec::new();
    while key != 0 {
        let digit = (key & MASK) as u32;
        chars.push(char::from_u32(digit - 1).unwrap_or(char::REPLACEMENT_CHARACTER));
        key >>= BITS;
    }
    chars.iter().rev().collect()
}

/// Lowercased NFC text with whitespace runs collapsed to one space and a
/// space of padding on either side, as a char vector. Blank text yields an
/// empty vector.
pub fn prepare(input: &str) -> Vec<char> {
    let lowered = text::nfc_lower(input);
    let mut out = Vec::with_capacity(lowered.len() + 2);
    for word in lowered.split_whitespace() {
        out.push(' ');
        out.extend(word.chars());
    }
    if !out.is_empty() {
        out.push(' ');
    }
    out
}

/// Calls `f` with the packed key of every n-gram of `chars` for n in
/// `min..=max`.
pub fn for_each(chars: &[char], min: usize, max: usize, mut f: impl FnMut(u128)) {
    for n in min..=max {
        if n > chars.len() {
            break;
        }
        for window in chars.windows(n) {
            f(pack(window));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pack_round_trips() {
        for s in ["a", " d", "ção ", "ŀl", "\u{10FFFF}x"] {
            let chars: Vec<char> = s.chars().collect();
            assert_eq!(unpack(pack(&chars)), s);
        }
    }

    #[test]
    fn lengths_do_not_collide() {
        assert_ne!(pack(&['\0']), pack(&['\0', '\0']));
    }

    #[test]
    fn prepare_pads_and_collapses() {
        let chars: String = prepare("  Hola\t  MÓN ").into_iter().collect();
        assert_eq!(chars, " hola món ");
        assert!(prepare(" \t").is_empty());
    }

    #[test]
    fn counts_windows() {
        let chars: Vec<char> = "abc".chars().collect();
        let mut n = 0;
        for_each(&chars, 1, 4, |_| n += 1);
        assert_eq!(n, 3 + 2 + 1);
    }
}
