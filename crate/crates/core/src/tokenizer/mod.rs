//! Moses-style tokenizer and detokenizer.
//!
//! The rule pipeline follows the Moses `tokenizer.perl` conventions (as
//! ported by sacremoses, run without XML escaping): punctuation is split off
//! words, periods after nonbreaking prefixes stay attached, runs of dots are
//! kept together, and commas inside numbers are protected. Character classes
//! come from the same Perl Unicode property tables Moses uses.
//!
//! Prefix lists ship for en, es, ca, pt and fr. Any other language borrows
//! the rules of the other side of its pair (see [`resolve_rules`]).

mod classes;
mod detok;
mod moses;
mod tables;

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use regex_automata::meta::Regex;

use crate::corpus::LangCode;

pub use detok::detokenize;
pub use moses::tokenize;

/// Languages with bundled nonbreaking-prefix lists.
pub const SUPPORTED_LANGUAGES: [&str; 5] = ["en", "es", "ca", "pt", "fr"];

fn bundled_prefixes(lang: &str) -> Option<&'static str> {
    Some(match lang {
        "en" => include_str!("../../data/nonbreaking_prefix.en"),
        "es" => include_str!("../../data/nonbreaking_prefix.es"),
        "ca" => include_str!("../../data/nonbreaking_prefix.ca"),
        "pt" => include_str!("../../data/nonbreaking_prefix.pt"),
        "fr" => include_str!("../../data/nonbreaking_prefix.fr"),
        _ => return None,
    })
}

/// Per-language tokenizer settings.
#[derive(Debug, Clone)]
pub struct TokenizerRules {
    /// Language whose conventions (apostrophes, French punctuation spacing)
    /// apply. After a fallback this is the borrowed language.
    pub lang: LangCode,
    /// Prefixes that keep a following period attached.
    pub nonbreaking_prefixes: BTreeSet<String>,
    /// Prefixes that keep the period only when a number follows.
    pub numeric_only_prefixes: BTreeSet<String>,
    /// Split hyphens between alphanumerics as `@-@` (Moses `-a`).
    pub aggressive_hyphen: bool,
    /// Spans matching any of these are never split, tried in order.
    pub protected_patterns: Vec<Regex>,
}

impl TokenizerRules {
    /// Rules with no prefixes and no language-specific behaviour.
    pub fn neutral(lang: impl Into<LangCode>) -> Self {
        TokenizerRules {
            lang: lang.into(),
            nonbreaking_prefixes: BTreeSet::new(),
            numeric_only_prefixes: BTreeSet::new(),
            aggressive_hyphen: false,
            protected_patterns: Vec::new(),
        }
    }

    /// Bundled rules for one of [`SUPPORTED_LANGUAGES`].
    pub fn builtin(lang: &str) -> Option<Self> {
        bundled_prefixes(lang).map(|data| Self::from_prefix_file(lang, data))
    }

    /// Parses a Moses `nonbreaking_prefix.<lang>` file: one prefix per line,
    /// `#` starts a comment line, and a `#NUMERIC_ONLY#` annotation after the
    /// prefix restricts it to numeric continuations.
    pub fn from_prefix_file(lang: impl Into<LangCode>, contents: &str) -> Self {
        let mut rules = Self::neutral(lang);
        for line in contents.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match numeric_only_prefix(line) {
                Some(prefix) => {
                    rules.numeric_only_prefixes.insert(String::from(prefix));
                }
                None => {
                    rules.nonbreaking_prefixes.insert(String::from(line));
                }
            }
        }
        rules
    }

    pub fn with_aggressive_hyphen(mut self, on: bool) -> Self {
        self.aggressive_hyphen = on;
        self
    }

    /// Adds protected patterns; errors name the offending pattern.
    pub fn with_protected_patterns<'p>(
        mut self,
        patterns: impl IntoIterator<Item = &'p str>,
    ) -> Result<Self, String> {
        for p in patterns {
            let re = Regex::new(p).map_err(|e| alloc::format!("bad protected pattern `{p}`: {e}"))?;
            self.protected_patterns.push(re);
        }
        Ok(self)
    }

    pub(crate) fn is_nonbreaking(&self, prefix: &str) -> bool {
        self.nonbreaking_prefixes.contains(prefix) && !self.numeric_only_prefixes.contains(prefix)
    }

    pub(crate) fn is_numeric_only(&self, prefix: &str) -> bool {
        self.numeric_only_prefixes.contains(prefix)
    }
}

/// `"No #NUMERIC_ONLY#"` yields `Some("No")`: everything before the last
/// space, provided the marker follows some whitespace.
fn numeric_only_prefix(line: &str) -> Option<&str> {
    let at = line.find("#NUMERIC_ONLY#")?;
    if !line[..at].ends_with(char::is_whitespace) {
        return None;
    }
    Some(line.rsplit_once(' ').map_or("", |(head, _)| head))
}

/// Rules for `lang`, or for `pair_other_lang` when `lang` has no bundled
/// rules (a language translated into French tokenizes as French), or
/// neutral rules when neither is supported.
pub fn resolve_rules(lang: &str, pair_other_lang: &str) -> TokenizerRules {
    TokenizerRules::builtin(lang)
        .or_else(|| TokenizerRules::builtin(pair_other_lang))
        .unwrap_or_else(|| TokenizerRules::neutral(lang))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bambara_borrows_french() {
        let rules = resolve_rules("bm", "fr");
        assert_eq!(rules.lang, "fr");
        assert!(rules.is_nonbreaking("M"));
    }

    #[test]
    fn direct_hit_and_neutral_fallback() {
        assert_eq!(resolve_rules("es", "ca").lang, "es");
        let neutral = resolve_rules("xx", "yy");
        assert_eq!(neutral.lang, "xx");
        assert!(neutral.nonbreaking_prefixes.is_empty());
    }

    #[test]
    fn prefix_file_parsing() {
        let rules = TokenizerRules::from_prefix_file(
            "en",
            "# comment\n\nDr\nNo #NUMERIC_ONLY# \n  Mr \n",
        );
        assert!(rules.is_nonbreaking("Dr"));
        assert!(rules.is_nonbreaking("Mr"));
        assert!(!rules.is_nonbreaking("No"));
        assert!(rules.is_numeric_only("No"));
        for p in rules.nonbreaking_prefixes.iter().chain(&rules.numeric_only_prefixes) {
            assert!(!p.is_empty() && !p.contains(char::is_whitespace));
        }
    }

    #[test]
    fn bundled_lists_load() {
        for lang in SUPPORTED_LANGUAGES {
            let rules = TokenizerRules::builtin(lang).unwrap();
            assert!(!rules.nonbreaking_prefixes.is_empty(), "{lang}");
        }
        let pt = TokenizerRules::builtin("pt").unwrap();
        assert!(pt.is_numeric_only("Art") && pt.is_numeric_only("pp"));
    }

    #[test]
    fn bad_protected_pattern() {
        assert!(TokenizerRules::neutral("xx").with_protected_patterns(["("]).is_err());
    }
}
