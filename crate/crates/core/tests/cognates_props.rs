mod oracles;

use bitextkit_core::cognates::{extract_cognates, levenshtein, normalized_distance, CognateConfig};
use bitextkit_core::text::nfc_lower;
use proptest::prelude::*;

fn word(max: usize) -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(vec!['a', 'b', 'c', 'é', 'ç', 'A', 'ß']), 0..=max)
        .prop_map(|v| v.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn levenshtein_is_a_metric(a in word(12), b in word(12), c in word(12)) {
        let ab = levenshtein(&a, &b);
        prop_assert_eq!(ab, levenshtein(&b, &a));
        prop_assert_eq!(ab == 0, a == b);
        prop_assert!(levenshtein(&a, &c) <= ab + levenshtein(&b, &c));
    }

    #[test]
    fn levenshtein_matches_exhaustive(a in word(8), b in word(8)) {
        let ca: Vec<char> = a.chars().collect();
        let cb: Vec<char> = b.chars().collect();
        prop_assert_eq!(levenshtein(&a, &b), oracles::levenshtein_exhaustive(&ca, &cb));
    }

    #[test]
    fn normalized_distance_bounds(a in word(12), b in word(12)) {
        let d = normalized_distance(&a, &b);
        prop_assert!((0.0..=1.0).contains(&d));
        let (fa, fb) = (nfc_lower(&a), nfc_lower(&b));
        prop_assert_eq!(d == 0.0, fa == fb);
        let longest = fa.chars().count().max(fb.chars().count());
        if longest > 0 {
            prop_assert_eq!(d, levenshtein(&fa, &fb) as f64 / longest as f64);
        }
    }

    #[test]
    fn extraction_respects_threshold_and_is_one_to_one(
        src in prop::collection::vec(prop::collection::vec(word(7), 0..6), 1..4),
        reference in prop::collection::vec(prop::collection::vec(word(7), 0..6), 1..4),
        threshold in 0.05f64..=1.0,
    ) {
        let n = src.len().min(reference.len());
        let cfg = CognateConfig { threshold, min_len: 2 };
        let ex = extract_cognates(&src[..n], &reference[..n], &cfg).unwrap();
        prop_assert_eq!(&ex, &extract_cognates(&src[..n], &reference[..n], &cfg).unwrap());
        for p in &ex.pairs {
            prop_assert!(p.normalized_distance <= threshold);
            prop_assert!(p.source_word.chars().count() >= 2);
            let same: Vec<_> = ex.pairs.iter().filter(|q| q.source_sentence_index == p.source_sentence_index).collect();
            prop_assert_eq!(same.iter().filter(|q| q.target_position == p.target_position).count(), 1);
            prop_assert_eq!(same.iter().filter(|q| q.source_position == p.source_position).count(), 1);
        }
    }
}

#[test]
fn identical_sentences_are_all_cognates() {
    let s: Vec<Vec<String>> = vec!["el govern va aprovar la proposta".split(' ').map(String::from).collect()];
    let ex = extract_cognates(&s, &s, &CognateConfig::default()).unwrap();
    let long: Vec<&String> = s[0].iter().filter(|w| w.chars().count() >= 4).collect();
    assert_eq!(ex.pairs.len(), long.len());
    assert!(ex.pairs.iter().all(|p| p.distance == 0 && p.source_word == p.target_word));
}

#[test]
fn classic_cases() {
    assert_eq!(levenshtein("kitten", "sitting"), 3);
    assert_eq!(oracles::levenshtein_exhaustive(&['k', 'i', 't', 't', 'e', 'n'], &['s', 'i', 't', 't', 'i', 'n', 'g']), 3);
    assert_eq!(levenshtein("contribución", "contribució"), 1);
}
