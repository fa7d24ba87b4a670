//! Detokenization: undo the tokenizer's spacing conventions.

use alloc::collections::BTreeMap;
use alloc::string::String;

use super::classes::{is_alpha, is_currency};
use super::TokenizerRules;

const ENTITIES: [(&str, &str); 11] = [
    ("&bar;", "|"),
    ("&#124;", "|"),
    ("&lt;", "<"),
    ("&gt;", ">"),
    ("&bra;", "["),
    ("&ket;", "]"),
    ("&quot;", "\""),
    ("&apos;", "'"),
    ("&#91;", "["),
    ("&#93;", "]"),
    ("&amp;", "&"),
];

fn is_opening(token: &str) -> bool {
    token.chars().all(|c| is_currency(c) || matches!(c, '(' | '[' | '{' | '¿' | '¡'))
}

fn is_closing(token: &str) -> bool {
    token.chars().all(|c| matches!(c, ',' | '.' | '?' | '!' | ':' | ';' | '\\' | '%' | '}' | ']' | ')'))
}

fn is_quote(token: &str) -> bool {
    token.chars().all(|c| matches!(c, '\'' | '"' | '„' | '“' | '`'))
}

fn starts_with_alpha(token: &str) -> bool {
    token.chars().next().is_some_and(is_alpha)
}

fn ends_with_alpha(token: &str) -> bool {
    token.chars().next_back().is_some_and(is_alpha)
}

/// `'s`, `'re`: an apostrophe followed by a letter.
fn is_english_contraction(token: &str) -> bool {
    let mut cs = token.chars();
    cs.next() == Some('\'') && cs.next().is_some_and(is_alpha)
}

/// `l'`, `qu'`: a letter followed by a final apostrophe.
fn is_elision(token: &str) -> bool {
    let mut cs = token.chars().rev();
    cs.next() == Some('\'') && cs.next().is_some_and(is_alpha)
}

/// Joins tokens back into running text.
///
/// Closing punctuation attaches to the left, opening brackets and currency
/// signs to the right, straight quotes alternate between opening and
/// closing, English contractions attach left and French/Italian elisions
/// attach right. Catalan apostrophes and middle dots split as `l ' aigua` or
/// `pel · lícula` are rejoined.
pub fn detokenize<S: AsRef<str>>(tokens: &[S], rules: &TokenizerRules) -> String {
    let mut joined = String::from(" ");
    for t in tokens {
        joined.push_str(t.as_ref());
        joined.push(' ');
    }
    if rules.aggressive_hyphen {
        joined = joined.replace(" @-@ ", "-");
    }
    for (entity, plain) in ENTITIES {
        if joined.contains(entity) {
            joined = joined.replace(entity, plain);
        }
    }

    let lang = rules.lang.as_str();
    let tokens: alloc::vec::Vec<&str> = joined.split_whitespace().collect();
    let mut quotes: BTreeMap<&str, usize> = BTreeMap::new();
    let mut out = String::with_capacity(joined.len());
    let mut space = " ";
    for (i, &tok) in tokens.iter().enumerate() {
        let prev = i.checked_sub(1).map(|p| tokens[p]);
        let next = tokens.get(i + 1).copied();
        if is_opening(tok) {
            out.push_str(space);
            out.push_str(tok);
            space = "";
        } else if is_closing(tok) {
            if lang == "fr" && matches!(tok, "?" | "!" | ":" | ";" | "\\" | "%") {
                out.push(' ');
            }
            out.push_str(tok);
            space = " ";
        } else if lang == "en" && i > 0 && is_english_contraction(tok) {
            out.push_str(tok);
            space = " ";
        } else if matches!(lang, "fr" | "it" | "ga")
            && is_elision(tok)
            && next.is_some_and(starts_with_alpha)
        {
            out.push_str(space);
            out.push_str(tok);
            space = "";
        } else if lang == "ca"
            && matches!(tok, "'" | "·")
            && prev.is_some_and(ends_with_alpha)
            && next.is_some_and(starts_with_alpha)
        {
            out.push_str(tok);
            space = "";
        } else if is_quote(tok) {
            let key = if tok.chars().all(|c| matches!(c, '„' | '“')) { "\"" } else { tok };
            let count = quotes.entry(key).or_insert(0);
            if (*count).is_multiple_of(2) {
                if lang == "en" && tok == "'" && prev.is_some_and(|p| p.ends_with('s')) {
                    // possessive: "the Jones' house"
                    out.push_str(tok);
                    space = " ";
                } else {
                    out.push_str(space);
                    out.push_str(tok);
                    space = "";
                    *count += 1;
                }
            } else {
                out.push_str(tok);
                space = " ";
                *count += 1;
            }
        } else {
            out.push_str(space);
            out.push_str(tok);
            space = " ";
        }
    }
    let mut collapsed = String::with_capacity(out.len());
    for c in out.trim().chars() {
        if !(c == ' ' && collapsed.ends_with(' ')) {
            collapsed.push(c);
        }
    }
    collapsed
}

#[cfg(test)]
mod tests {
    use super::super::resolve_rules;
    use super::*;

    fn detok(lang: &str, s: &str) -> String {
        let tokens: alloc::vec::Vec<&str> = s.split(' ').filter(|t| !t.is_empty()).collect();
        detokenize(&tokens, &resolve_rules(lang, ""))
    }

    #[test]
    fn attaches_punctuation() {
        assert_eq!(detok("en", "Hello , world !"), "Hello, world!");
        assert_eq!(detok("en", "( a )"), "(a)");
        assert_eq!(detok("en", "x"), "x");
        assert_eq!(detok("es", "¿ Qué pasa ?"), "¿Qué pasa?");
        assert_eq!(detok("en", "costs $ 5 ."), "costs $5.");
    }

    #[test]
    fn quotes_alternate() {
        assert_eq!(detok("en", "he said \" hi \" ."), "he said \"hi\".");
    }

    #[test]
    fn contractions() {
        assert_eq!(detok("en", "don 't"), "don't");
        assert_eq!(detok("en", "the Jones ' house"), "the Jones' house");
        assert_eq!(detok("fr", "l' eau"), "l'eau");
        assert_eq!(detok("fr", "Quoi ?"), "Quoi ?");
        assert_eq!(detok("ca", "l ' aigua"), "l'aigua");
        assert_eq!(detok("ca", "pel · lícula"), "pel·lícula");
    }

    #[test]
    fn empty_input() {
        assert_eq!(detok("en", ""), "");
    }

    #[test]
    fn hyphen_rejoin() {
        let rules = resolve_rules("en", "").with_aggressive_hyphen(true);
        assert_eq!(detokenize(&["well", "@-@", "known"], &rules), "well-known");
    }
}
