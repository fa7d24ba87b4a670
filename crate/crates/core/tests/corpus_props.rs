use bitextkit_core::{corpus_stats, SentencePair, StatsAccumulator};
use proptest::prelude::*;

fn corpus() -> impl Strategy<Value = Vec<SentencePair>> {
    prop::collection::vec(("[a-e ]{0,16}", "[a-eé\u{3000} ]{0,16}"), 0..30).prop_map(|v| {
        v.into_iter().enumerate().map(|(i, (s, t))| SentencePair::new(i, s, t, "es", "ca")).collect()
    })
}

proptest! {
    #[test]
    fn permutation_invariant(pairs in corpus(), seed in any::<u64>()) {
        let mut shuffled = pairs.clone();
        if !shuffled.is_empty() {
            let k = seed as usize % shuffled.len();
            shuffled.rotate_left(k);
            shuffled.reverse();
        }
        prop_assert_eq!(corpus_stats(&pairs), corpus_stats(&shuffled));
    }

    #[test]
    fn sharded_merge_matches_single_pass(pairs in corpus(), cut in any::<prop::sample::Index>()) {
        let at = cut.index(pairs.len() + 1);
        let mut left = StatsAccumulator::new();
        let mut right = StatsAccumulator::new();
        pairs[..at].iter().for_each(|p| left.add(p));
        pairs[at..].iter().for_each(|p| right.add(p));
        left.merge(right);
        prop_assert_eq!(left.finish(), corpus_stats(&pairs));
    }

    #[test]
    fn ttr_bounds(pairs in corpus()) {
        let s = corpus_stats(&pairs);
        for (ttr, words) in [(s.ttr_source, s.word_count_source), (s.ttr_target, s.word_count_target)] {
            match ttr {
                Some(t) => prop_assert!(words > 0 && t > 0.0 && t <= 1.0),
                None => prop_assert_eq!(words, 0),
            }
        }
    }
}

#[test]
fn distinct_tokens_have_unit_ttr() {
    let pairs = vec![SentencePair::new(0, "a b c", "x y", "es", "ca"), SentencePair::new(1, "d e", "z", "es", "ca")];
    let s = corpus_stats(&pairs);
    assert_eq!((s.ttr_source, s.ttr_target), (Some(1.0), Some(1.0)));
    assert_eq!((s.word_count_source, s.word_count_target, s.sentence_count), (5, 3, 2));
}
