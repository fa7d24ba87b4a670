//! The tokenization rule pipeline.
//!
//! Every pass below is one left-to-right rewrite over the whole line, in the
//! same order and with the same non-overlapping match semantics as the Moses
//! rule set, so quirks of the reference (the `DOT...MULTI` placeholders, the
//! two-step comma rule) are reproduced rather than smoothed over.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::classes::{is_alnum, is_alpha, is_lower, is_number, is_space};
use super::TokenizerRules;
use crate::text;

const MAX_PROTECTED: usize = 1000;

/// Splits one line into Moses tokens. Text is NFC-normalized first; case is
/// left alone.
pub fn tokenize(input: &str, rules: &TokenizerRules) -> Vec<String> {
    let normalized = text::nfc(input);
    let mut chars = collapse_space(&normalized);

    let protected = if rules.protected_patterns.is_empty() {
        None
    } else {
        let (replaced, p) = protect(chars.iter().collect(), rules);
        chars = replaced.chars().collect();
        Some(p)
    };

    let chars = strip(&chars);
    let chars = pad_special(chars);
    let chars = if rules.aggressive_hyphen { split_hyphens(&chars) } else { chars };
    let chars = replace_multidots(&chars);
    let chars = comma_pass_1(&chars);
    let chars = comma_pass_2(&chars);
    let chars = comma_pass_3(chars);
    let chars = match rules.lang.as_str() {
        "en" => english_apostrophes(chars),
        "fr" | "it" => french_apostrophes(chars),
        _ => split_all_apostrophes(&chars),
    };
    let line: String = chars.iter().collect();
    let mut line = nonbreaking_prefixes(&line, rules);
    if line.ends_with(".'") {
        line.truncate(line.len() - 2);
        line.push_str(" . ' ");
    }
    if let Some((marker, tokens)) = protected {
        for (i, tok) in tokens.iter().enumerate() {
            line = line.replace(&alloc::format!("{marker}{i:03}"), tok);
        }
    }
    let line = restore_multidots(&line);
    line.split(is_space).filter(|t| !t.is_empty()).map(ToString::to_string).collect()
}

/// Whitespace runs become one space; ASCII control characters vanish.
fn collapse_space(s: &str) -> Vec<char> {
    let mut out = Vec::with_capacity(s.len());
    let mut in_space = false;
    for c in s.chars() {
        if is_space(c) {
            if !in_space {
                out.push(' ');
            }
            in_space = true;
        } else {
            in_space = false;
            out.push(c);
        }
    }
    out.retain(|&c| !('\u{0}'..='\u{1F}').contains(&c));
    out
}

fn strip(chars: &[char]) -> Vec<char> {
    let start = chars.iter().position(|&c| !is_space(c)).unwrap_or(chars.len());
    let end = chars.iter().rposition(|&c| !is_space(c)).map_or(start, |e| e + 1);
    chars[start..end].to_vec()
}

/// Replaces protected spans with placeholders that survive tokenization.
fn protect(line: String, rules: &TokenizerRules) -> (String, (String, Vec<String>)) {
    let mut found: Vec<String> = Vec::new();
    for re in &rules.protected_patterns {
        for m in re.find_iter(line.as_str()) {
            if !m.is_empty() && found.len() < MAX_PROTECTED {
                found.push(line[m.range()].to_string());
            }
        }
    }
    let mut marker = String::from("THISISPROTECTED");
    while line.contains(marker.as_str()) {
        marker.push('X');
    }
    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by(|&a, &b| found[b].chars().count().cmp(&found[a].chars().count()));
    let mut line = line;
    for i in order {
        line = line.replace(found[i].as_str(), &alloc::format!("{marker}{i:03}"));
    }
    (line, (marker, found))
}

/// Pads everything that is not alphanumeric, whitespace, `.`, `'`, `` ` ``,
/// `,` or `-` with spaces.
fn pad_special(chars: Vec<char>) -> Vec<char> {
    let mut out = Vec::with_capacity(chars.len() + 8);
    for c in chars {
        if is_alnum(c) || is_space(c) || matches!(c, '.' | '\'' | '`' | ',' | '-') {
            out.push(c);
        } else {
            out.extend([' ', c, ' ']);
        }
    }
    out
}

fn split_hyphens(chars: &[char]) -> Vec<char> {
    let mut out = Vec::with_capacity(chars.len());
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if is_alnum(c)
            && chars.get(i + 1) == Some(&'-')
            && chars.get(i + 2).is_some_and(|&n| is_alnum(n))
        {
            out.push(c);
            out.extend(" @-@ ".chars());
            i += 2;
        } else {
            out.push(c);
            i += 1;
        }
    }
    out
}

/// A run of k >= 2 dots becomes `" " + "DOT" * k + "MULTI"`, followed by a
/// space unless it ends the line.
fn replace_multidots(chars: &[char]) -> Vec<char> {
    let mut out = Vec::with_capacity(chars.len());
    let mut i = 0;
    while i < chars.len() {
        if chars[i] == '.' {
            let run = chars[i..].iter().take_while(|&&c| c == '.').count();
            if run >= 2 {
                out.push(' ');
                for _ in 0..run {
                    out.extend(['D', 'O', 'T']);
                }
                out.extend("MULTI".chars());
                if i + run < chars.len() {
                    out.push(' ');
                }
                i += run;
                continue;
            }
        }
        out.push(chars[i]);
        i += 1;
    }
    out
}

fn restore_multidots(line: &str) -> String {
    let mut out = String::with_capacity(line.len());
    let mut rest = line;
    while let Some(at) = rest.find("DOT") {
        let mut dots = 0;
        let mut tail = &rest[at..];
        while let Some(t) = tail.strip_prefix("DOT") {
            dots += 1;
            tail = t;
        }
        if let Some(t) = tail.strip_prefix("MULTI") {
            out.push_str(&rest[..at]);
            out.extend(core::iter::repeat_n('.', dots));
            rest = t;
        } else {
            // Not a placeholder: keep the first "DOT" and rescan after it.
            out.push_str(&rest[..at + 3]);
            rest = &rest[at + 3..];
        }
    }
    out.push_str(rest);
    out
}

/// `([^N]),` -> `"\1 , "`
fn comma_pass_1(chars: &[char]) -> Vec<char> {
    let mut out = Vec::with_capacity(chars.len() + 8);
    let mut i = 0;
    while i < chars.len() {
        if !is_number(chars[i]) && chars.get(i + 1) == Some(&',') {
            out.extend([chars[i], ' ', ',', ' ']);
            i += 2;
        } else {
            out.push(chars[i]);
            i += 1;
        }
    }
    out
}

/// `,([^N])` -> `" , \1"`
fn comma_pass_2(chars: &[char]) -> Vec<char> {
    let mut out = Vec::with_capacity(chars.len() + 8);
    let mut i = 0;
    while i < chars.len() {
        match chars.get(i + 1) {
            Some(&next) if chars[i] == ',' && !is_number(next) => {
                out.extend([' ', ',', ' ', next]);
                i += 2;
            }
            _ => {
                out.push(chars[i]);
                i += 1;
            }
        }
    }
    out
}

/// `([N]),$` -> `"\1 , "`
fn comma_pass_3(mut chars: Vec<char>) -> Vec<char> {
    let n = chars.len();
    if n >= 2 && chars[n - 1] == ',' && is_number(chars[n - 2]) {
        chars.truncate(n - 1);
        chars.extend([' ', ',', ' ']);
    }
    chars
}

/// One pass of `(X)'(Y)` -> `"\1" + replacement + "\2"` where `X` and `Y`
/// are character predicates.
fn apostrophe_pass(
    chars: &[char],
    left: impl Fn(char) -> bool,
    right: impl Fn(char) -> bool,
    replacement: &str,
) -> Vec<char> {
    let mut out = Vec::with_capacity(chars.len() + 8);
    let mut i = 0;
    while i < chars.len() {
        if i + 2 < chars.len() && chars[i + 1] == '\'' && left(chars[i]) && right(chars[i + 2]) {
            out.push(chars[i]);
            out.extend(replacement.chars());
            out.push(chars[i + 2]);
            i += 3;
        } else {
            out.push(chars[i]);
            i += 1;
        }
    }
    out
}

fn english_apostrophes(chars: Vec<char>) -> Vec<char> {
    let not_alpha = |c: char| !is_alpha(c);
    let chars = apostrophe_pass(&chars, not_alpha, not_alpha, " ' ");
    let chars =
        apostrophe_pass(&chars, |c| !is_alpha(c) && !is_number(c), is_alpha, " ' ");
    let chars = apostrophe_pass(&chars, is_alpha, not_alpha, " ' ");
    let chars = apostrophe_pass(&chars, is_alpha, is_alpha, " '");
    apostrophe_pass(&chars, is_number, |c| c == 's', " '")
}

/// Elided articles keep their apostrophe: `l'eau` -> `l' eau`.
fn french_apostrophes(chars: Vec<char>) -> Vec<char> {
    let not_alpha = |c: char| !is_alpha(c);
    let chars = apostrophe_pass(&chars, not_alpha, not_alpha, " ' ");
    let chars = apostrophe_pass(&chars, not_alpha, is_alpha, " ' ");
    let chars = apostrophe_pass(&chars, is_alpha, not_alpha, " ' ");
    apostrophe_pass(&chars, is_alpha, is_alpha, "' ")
}

fn split_all_apostrophes(chars: &[char]) -> Vec<char> {
    let mut out = Vec::with_capacity(chars.len() + 8);
    for &c in chars {
        if c == '\'' {
            out.extend([' ', '\'', ' ']);
        } else {
            out.push(c);
        }
    }
    out
}

/// Splits the final period off a token unless the token is a known prefix,
/// an acronym-like word with inner periods, or is followed by a lowercase
/// word (or by a number, for numeric-only prefixes).
fn nonbreaking_prefixes(line: &str, rules: &TokenizerRules) -> String {
    let tokens: Vec<&str> = line.split(is_space).filter(|t| !t.is_empty()).collect();
    let mut out = String::with_capacity(line.len() + 8);
    for (i, tok) in tokens.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let prefix = match tok.strip_suffix('.') {
            Some(p) if !p.is_empty() => p,
            _ => {
                out.push_str(tok);
                continue;
            }
        };
        let next = tokens.get(i + 1);
        let keep = (prefix.contains('.') && prefix.chars().any(is_alpha))
            || rules.is_nonbreaking(prefix)
            || next.and_then(|n| n.chars().next()).is_some_and(is_lower)
            || (rules.is_numeric_only(prefix)
                && next.and_then(|n| n.chars().next()).is_some_and(|c| c.is_ascii_digit()));
        out.push_str(prefix);
        if keep {
            out.push('.');
        } else {
            out.push_str(" .");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::resolve_rules;
    use super::*;

    fn tok(lang: &str, s: &str) -> String {
        tokenize(s, &resolve_rules(lang, "")).join(" ")
    }

    #[test]
    fn punctuation_is_split() {
        assert_eq!(tok("en", "Hello, world!"), "Hello , world !");
        assert_eq!(tok("es", "¿Qué pasa?"), "¿ Qué pasa ?");
    }

    #[test]
    fn prefixes_keep_their_period() {
        assert_eq!(tok("en", "Dr. Smith"), "Dr. Smith");
        assert_eq!(tok("en", "I met Smith. He left."), "I met Smith . He left .");
        assert_eq!(tok("es", "El Sr. García llegó."), "El Sr. García llegó .");
    }

    #[test]
    fn numeric_only_prefix() {
        assert_eq!(tok("en", "See No. 5 now."), "See No. 5 now .");
        assert_eq!(tok("en", "He said No. Then left."), "He said No . Then left .");
    }

    #[test]
    fn multidots_and_numbers() {
        assert_eq!(tok("en", "Wait... what?"), "Wait ... what ?");
        assert_eq!(tok("en", "It costs 3.5 or 1,000 units."), "It costs 3.5 or 1,000 units .");
        assert_eq!(tok("en", "end.."), "end ..");
    }

    #[test]
    fn apostrophes_by_language() {
        assert_eq!(tok("fr", "l'eau"), "l' eau");
        assert_eq!(tok("ca", "l'aigua"), "l ' aigua");
        assert_eq!(tok("en", "don't"), "don 't");
        assert_eq!(tok("en", "the 1990's"), "the 1990 's");
    }

    #[test]
    fn empty_and_whitespace() {
        assert!(tokenize("", &resolve_rules("en", "")).is_empty());
        assert!(tokenize(" \t ", &resolve_rules("en", "")).is_empty());
    }

    #[test]
    fn aggressive_hyphens() {
        let rules = resolve_rules("en", "").with_aggressive_hyphen(true);
        assert_eq!(tokenize("a well-known fact", &rules).join(" "), "a well @-@ known fact");
        assert_eq!(tok("en", "a well-known fact"), "a well-known fact");
    }

    #[test]
    fn protected_spans_survive() {
        let rules = resolve_rules("en", "")
            .with_protected_patterns([r"https?://[^\s,]+"])
            .unwrap();
        assert_eq!(
            tokenize("see https://a.b/c?d=1, ok", &rules).join(" "),
            "see https://a.b/c?d=1 , ok"
        );
    }

    #[test]
    fn literal_dot_words_are_untouched() {
        assert_eq!(restore_multidots("DOTCOM DOTDOTMULTI x"), "DOTCOM .. x");
    }
}
