//! Small text helpers shared by the other modules.

use alloc::string::String;

use unicode_normalization::{is_nfc_quick, IsNormalized, UnicodeNormalization};

/// NFC form of `text`, skipping the rebuild when it is already normalized.
pub fn nfc(text: &str) -> String {
    match is_nfc_quick(text.chars()) {
        IsNormalized::Yes => String::from(text),
        _ => text.nfc().collect(),
    }
}

/// NFC followed by full Unicode lowercasing.
pub fn nfc_lower(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    match is_nfc_quick(text.chars()) {
        IsNormalized::Yes => out.extend(text.chars().flat_map(char::to_lowercase)),
        _ => out.extend(text.nfc().flat_map(char::to_lowercase)),
    }
    out
}

/// Whitespace-split words: any run of Unicode whitespace separates tokens.
pub fn words(text: &str) -> impl Iterator<Item = &str> {
    text.split_whitespace()
}

/// True when the text holds nothing but whitespace.
pub fn is_blank(text: &str) -> bool {
    text.chars().all(char::is_whitespace)
}

/// True when `c` ends a line in any of the encodings we read.
pub(crate) fn is_line_break(c: char) -> bool {
    matches!(c, '\n' | '\r' | '\u{0B}' | '\u{0C}' | '\u{85}' | '\u{2028}' | '\u{2029}')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nfc_composes() {
        assert_eq!(nfc("Re\u{0301}s"), "Rés");
        assert_eq!(nfc_lower("R\u{0101}WALPINDI"), "rāwalpindi");
    }

    #[test]
    fn blank_detection() {
        assert!(is_blank(""));
        assert!(is_blank(" \t\u{3000}"));
        assert!(!is_blank(" a "));
    }
}
