use bitextkit_core::text::nfc;
use bitextkit_core::tokenizer::{detokenize, resolve_rules, tokenize, TokenizerRules, SUPPORTED_LANGUAGES};
use proptest::prelude::*;

const PIECES: [&str; 30] = [
    "a", "Dr", "Sr", "no", "3", "1,000", "3.5", "é", "ç", "l·l", " ", "  ", "\t", ".", "...", ",", "!", "?",
    "¿", "(", ")", "\"", "«", "»", "$", "€", "%", ":", ";", "-",
];

fn text(with_apostrophes: bool) -> impl Strategy<Value = String> {
    let mut pieces: Vec<&'static str> = PIECES.to_vec();
    if with_apostrophes {
        pieces.extend(["'", "l'", "'s", "d'"]);
    }
    prop::collection::vec(prop::sample::select(pieces), 0..24).prop_map(|v| v.concat())
}

fn prose() -> impl Strategy<Value = String> {
    let word = prop::sample::select(vec!["casa", "Dr.", "3.5", "1,000", "él", "Sr.", "(nota)", "¿qué", "U.S.A.", "e-mail"]);
    let punct = prop::sample::select(vec!["", "", ",", ".", "!", "?", ":", "...", "%"]);
    prop::collection::vec((word, punct), 1..12)
        .prop_map(|v| v.into_iter().map(|(w, p)| format!("{w}{p}")).collect::<Vec<_>>().join(" "))
}

fn lang() -> impl Strategy<Value = &'static str> {
    prop::sample::select(SUPPORTED_LANGUAGES.to_vec())
}

fn squeeze(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn tokens_are_nonempty_and_unspaced(s in text(true), lang in lang()) {
        for t in tokenize(&s, &resolve_rules(lang, "")) {
            prop_assert!(!t.is_empty());
            prop_assert!(!t.chars().any(char::is_whitespace), "{:?}", t);
        }
    }

    #[test]
    fn characters_are_conserved(s in text(true), lang in lang()) {
        let tokens = tokenize(&s, &resolve_rules(lang, ""));
        prop_assert_eq!(squeeze(&tokens.concat()), squeeze(&nfc(&s)));
    }

    #[test]
    fn aggressive_hyphen_only_adds_markers(s in text(false), lang in lang()) {
        let rules = resolve_rules(lang, "").with_aggressive_hyphen(true);
        let joined = tokenize(&s, &rules).join(" ").replace(" @-@ ", "-");
        prop_assert_eq!(squeeze(&joined), squeeze(&nfc(&s)));
    }

    // Holds for word-separated prose only: apostrophe splits ("l' eau") and
    // runs of adjacent punctuation (".,,3") split further on a second pass,
    // in the reference implementation too.
    #[test]
    fn idempotent_on_prose(s in prose(), lang in lang()) {
        let rules = resolve_rules(lang, "");
        let once = tokenize(&s, &rules);
        let twice = tokenize(&once.join(" "), &rules);
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn detokenize_never_panics(s in text(true), lang in lang()) {
        let rules = resolve_rules(lang, "");
        let _ = detokenize(&tokenize(&s, &rules), &rules);
    }
}

#[test]
fn examples() {
    let en = TokenizerRules::builtin("en").unwrap();
    assert_eq!(tokenize("Hello, world!", &en).join(" "), "Hello , world !");
    assert_eq!(tokenize("Dr. Smith arrived.", &en).join(" "), "Dr. Smith arrived .");
    assert_eq!(resolve_rules("bm", "fr").lang, "fr");
}
