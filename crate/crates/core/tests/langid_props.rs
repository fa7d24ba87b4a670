use std::sync::OnceLock;

use bitextkit_core::{LangCode, LangIdModel, TrainConfig};
use proptest::prelude::*;

fn model() -> &'static LangIdModel {
    static MODEL: OnceLock<LangIdModel> = OnceLock::new();
    MODEL.get_or_init(|| {
        let seeds: Vec<(LangCode, Vec<&str>)> = vec![
            ("es".into(), vec!["el perro come la comida", "los niños juegan en el parque", "que tengas un buen día"]),
            ("ca".into(), vec!["el gos menja el menjar", "els nens juguen al parc", "que tinguis un bon dia"]),
            ("pt".into(), vec!["o cão come a comida", "as crianças brincam no parque", "tenha um bom dia"]),
        ];
        let cfg = TrainConfig { vocab_size: 300, ..TrainConfig::default() };
        LangIdModel::train(&seeds, &cfg).unwrap()
    })
}

fn text() -> impl Strategy<Value = String> {
    "[a-zçãñà ]{0,40}"
}

/// The same model with languages (and their parameters) reordered.
fn permuted(m: &LangIdModel, perm: &[usize]) -> LangIdModel {
    let n = m.languages().len();
    let table = m.log_likelihood_table();
    let mut ll = Vec::with_capacity(table.len());
    for f in 0..m.vocabulary().len() {
        for &p in perm {
            ll.push(table[f * n + p]);
        }
    }
    LangIdModel::from_parts(
        perm.iter().map(|&p| m.languages()[p].clone()).collect(),
        m.ngram_range(),
        m.vocabulary().to_vec(),
        ll,
        perm.iter().map(|&p| m.log_prior()[p]).collect(),
        m.smoothing_alpha(),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn posteriors_sum_to_one(s in text()) {
        let total: f64 = model().posteriors(&s).iter().sum();
        prop_assert!((total - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn deterministic(s in text()) {
        prop_assert_eq!(model().classify(&s), model().classify(&s));
    }

    #[test]
    fn label_permutation_equivariance(s in text(), perm in Just(vec![0usize, 1, 2]).prop_shuffle()) {
        let m = model();
        let p = m.classify(&s);
        prop_assume!(p.margin > 0.0);
        let q = permuted(m, &perm).classify(&s);
        prop_assert_eq!(p.lang, q.lang);
    }

    #[test]
    fn evidence_for_a_language_never_hurts_it(s in text(), pick in any::<prop::sample::Index>(), k in 1u32..20) {
        let m = model();
        let n = m.languages().len();
        let f = pick.index(m.vocabulary().len());
        let best = (0..n)
            .max_by(|&a, &b| m.log_likelihood(a, f).total_cmp(&m.log_likelihood(b, f)))
            .unwrap();
        prop_assume!((0..n).all(|l| l == best || m.log_likelihood(l, f) < m.log_likelihood(best, f)));
        let mut feats = m.feature_counts(&s);
        let before = m.score_features(&feats);
        match feats.iter_mut().find(|(g, _)| *g == f) {
            Some(entry) => entry.1 += k,
            None => feats.push((f, k)),
        }
        let after = m.score_features(&feats);
        for l in 0..n {
            prop_assert!(after[best] - after[l] >= before[best] - before[l] - 1e-9);
        }
    }

    #[test]
    fn codec_round_trip(lines in prop::collection::vec(text(), 2..6), vocab in 1usize..200) {
        let seeds = vec![
            (LangCode::from("x1"), lines.clone()),
            (LangCode::from("x2"), lines.iter().map(|l| l.chars().rev().collect()).collect()),
        ];
        let cfg = TrainConfig { vocab_size: vocab, ..TrainConfig::default() };
        if let Ok(m) = LangIdModel::train(&seeds, &cfg) {
            let back = LangIdModel::from_bytes(&m.to_bytes()).unwrap();
            prop_assert_eq!(back, m);
        }
    }
}
