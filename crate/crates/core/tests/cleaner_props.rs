use std::sync::OnceLock;

use bitextkit_core::{clean, CleaningMode, LangCode, LangIdModel, SentencePair, TrainConfig};
use proptest::prelude::*;

fn model() -> &'static LangIdModel {
    static MODEL: OnceLock<LangIdModel> = OnceLock::new();
    MODEL.get_or_init(|| {
        let seeds: Vec<(LangCode, Vec<&str>)> = vec![
            ("aa".into(), vec!["abc abd bad", "cab dab acd", "bca dcb"]),
            ("xx".into(), vec!["xyz xyw wyx", "zyx yxw zwy", "wzx yzw"]),
            ("mm".into(), vec!["mno mnp pon", "onm nmp mpo", "pnm opm"]),
        ];
        LangIdModel::train(&seeds, &TrainConfig::default()).unwrap()
    })
}

fn side() -> impl Strategy<Value = String> {
    "[abcdxyzwmnop ]{0,20}"
}

fn corpus() -> impl Strategy<Value = Vec<SentencePair>> {
    prop::collection::vec((side(), side()), 0..40).prop_map(|v| {
        v.into_iter().enumerate().map(|(i, (s, t))| SentencePair::new(i, s, t, "aa", "xx")).collect()
    })
}

fn kept_indices(pairs: &[SentencePair], mode: CleaningMode) -> Vec<usize> {
    clean(pairs.to_vec(), model(), mode, false).unwrap().0.iter().map(|p| p.index).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conservation_and_order(pairs in corpus(), mode in prop::sample::select(vec![CleaningMode::PerSide, CleaningMode::Concat, CleaningMode::Both])) {
        let (kept, report) = clean(pairs.clone(), model(), mode, true).unwrap();
        prop_assert_eq!(report.total, pairs.len() as u64);
        prop_assert_eq!(report.kept + report.removed(), report.total);
        prop_assert_eq!(report.kept, kept.len() as u64);
        prop_assert!(kept.windows(2).all(|w| w[0].index < w[1].index));
        prop_assert_eq!(report.decisions.unwrap().len(), pairs.len());
    }

    #[test]
    fn idempotent(pairs in corpus()) {
        let (once, _) = clean(pairs, model(), CleaningMode::Both, false).unwrap();
        let (twice, _) = clean(once.clone(), model(), CleaningMode::Both, false).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn both_is_the_intersection(pairs in corpus()) {
        let both = kept_indices(&pairs, CleaningMode::Both);
        let per_side = kept_indices(&pairs, CleaningMode::PerSide);
        let concat = kept_indices(&pairs, CleaningMode::Concat);
        prop_assert!(both.iter().all(|i| per_side.contains(i) && concat.contains(i)));
    }
}
