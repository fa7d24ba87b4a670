//! Character classes matching the Perl Unicode properties used by Moses.

use super::tables;

fn lookup(table: &[(u32, u32)], c: char) -> bool {
    let cp = c as u32;
    table
        .binary_search_by(|&(lo, hi)| {
            if hi < cp {
                core::cmp::Ordering::Less
            } else if lo > cp {
                core::cmp::Ordering::Greater
            } else {
                core::cmp::Ordering::Equal
            }
        })
        .is_ok()
}

pub(crate) fn is_alnum(c: char) -> bool {
    if c.is_ascii() {
        return c.is_ascii_alphanumeric();
    }
    lookup(tables::ALNUM, c)
}

pub(crate) fn is_alpha(c: char) -> bool {
    if c.is_ascii() {
        return c.is_ascii_alphabetic();
    }
    lookup(tables::ALPHA, c)
}

pub(crate) fn is_number(c: char) -> bool {
    if c.is_ascii() {
        return c.is_ascii_digit();
    }
    lookup(tables::NUMBER, c)
}

pub(crate) fn is_lower(c: char) -> bool {
    if c.is_ascii() {
        return c.is_ascii_lowercase();
    }
    lookup(tables::LOWER, c)
}

pub(crate) fn is_currency(c: char) -> bool {
    lookup(tables::CURRENCY, c)
}

#[allow(dead_code)]
pub(crate) fn is_symbol_other(c: char) -> bool {
    lookup(tables::SYMBOL_OTHER, c)
}

/// Whitespace as Python's `str.isspace` sees it: Unicode White_Space plus
/// the ASCII information separators.
pub(crate) fn is_space(c: char) -> bool {
    c.is_whitespace() || ('\u{1C}'..='\u{1F}').contains(&c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_sorted() {
        for t in [
            tables::ALNUM,
            tables::ALPHA,
            tables::NUMBER,
            tables::LOWER,
            tables::CURRENCY,
            tables::SYMBOL_OTHER,
        ] {
            for w in t.windows(2) {
                assert!(w[0].0 <= w[0].1 && w[0].1 < w[1].0);
            }
        }
    }

    #[test]
    fn latin_letters() {
        for c in ['a', 'Z', 'ç', 'ñ', 'è', 'ŀ', 'ã'] {
            assert!(is_alpha(c) && is_alnum(c), "{c}");
        }
        assert!(is_lower('é') && !is_lower('É'));
        assert!(is_number('7') && !is_alpha('7') && is_alnum('7'));
        for c in ['.', ',', '¿', '«', '\''] {
            assert!(!is_alnum(c), "{c}");
        }
        assert!(is_currency('€') && is_currency('$'));
        assert!(is_space('\u{1F}') && is_space('\u{3000}'));
    }
}
