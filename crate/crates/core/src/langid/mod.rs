//! Character n-gram multinomial naive Bayes language identifier.
//!
//! Text is NFC-normalized, lowercased and whitespace-collapsed, then split
//! into overlapping character n-grams. Training keeps the most frequent
//! n-grams across all seed corpora as the vocabulary and fits add-alpha
//! smoothed multinomials per language; classification is the usual
//! log-prior plus count-weighted log-likelihood argmax.

mod codec;
pub mod ngram;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use thiserror::Error;

use crate::corpus::{LangCode, SentencePair};

pub use codec::{FORMAT_VERSION, MAGIC};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("at least two languages are required, got {0}")]
    InsufficientLanguages(usize),
    #[error("seed corpus for `{0}` has no non-empty line")]
    EmptySeed(LangCode),
    #[error("language `{0}` appears more than once")]
    DuplicateLanguage(LangCode),
    #[error("invalid training configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("unsupported model format version {found} (expected {expected})")]
    VersionMismatch { found: u8, expected: u8 },
    #[error("corrupt model file at byte {offset}: {reason}")]
    Corrupt { offset: usize, reason: &'static str },
}

/// Training hyper-parameters.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TrainConfig {
    pub ngram_min: usize,
    pub ngram_max: usize,
    pub vocab_size: usize,
    pub smoothing_alpha: f64,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig { ngram_min: 1, ngram_max: 4, vocab_size: 10_000, smoothing_alpha: 0.5 }
    }
}

impl TrainConfig {
    fn validate(&self) -> Result<(), ModelError> {
        if self.ngram_min == 0 || self.ngram_min > self.ngram_max {
            return Err(ModelError::InvalidConfig("n-gram range must satisfy 1 <= min <= max"));
        }
        if self.ngram_max > ngram::MAX_NGRAM {
            return Err(ModelError::InvalidConfig("n-grams longer than 6 are not supported"));
        }
        if self.vocab_size == 0 {
            return Err(ModelError::InvalidConfig("vocab_size must be positive"));
        }
        if !(self.smoothing_alpha > 0.0 && self.smoothing_alpha.is_finite()) {
            return Err(ModelError::InvalidConfig("smoothing_alpha must be positive and finite"));
        }
        Ok(())
    }
}

/// Classifier output for one text.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Prediction {
    pub lang: LangCode,
    /// Log posterior of `lang` after normalizing over the model's languages.
    pub log_posterior: f64,
    /// Score gap to the runner-up; zero on exact ties.
    pub margin: f64,
}

/// A trained model. Immutable once built.
#[derive(Debug, Clone)]
pub struct LangIdModel {
    languages: Vec<LangCode>,
    ngram_min: usize,
    ngram_max: usize,
    vocabulary: Vec<String>,
    index: HashMap<u128, u32>,
    // feature-major: entry `f * languages.len() + l`
    log_likelihood: Vec<f64>,
    log_prior: Vec<f64>,
    smoothing_alpha: f64,
}

impl PartialEq for LangIdModel {
    fn eq(&self, other: &Self) -> bool {
        let bits = |v: &[f64]| v.iter().map(|x| x.to_bits()).collect::<Vec<_>>();
        self.languages == other.languages
            && self.ngram_min == other.ngram_min
            && self.ngram_max == other.ngram_max
            && self.vocabulary == other.vocabulary
            && bits(&self.log_likelihood) == bits(&other.log_likelihood)
            && bits(&self.log_prior) == bits(&other.log_prior)
            && self.smoothing_alpha.to_bits() == other.smoothing_alpha.to_bits()
    }
}

impl LangIdModel {
    /// Fits a model on per-language seed lines. Language order is the order
    /// of `seeds` and decides ties at classification time.
    pub fn train<S: AsRef<str>>(
        seeds: &[(LangCode, Vec<S>)],
        config: &TrainConfig,
    ) -> Result<Self, ModelError> {
        config.validate()?;
        if seeds.len() < 2 {
            return Err(ModelError::InsufficientLanguages(seeds.len()));
        }
        for (i, (lang, _)) in seeds.iter().enumerate() {
            if seeds[..i].iter().any(|(l, _)| l == lang) {
                return Err(ModelError::DuplicateLanguage(lang.clone()));
            }
        }

        let n_langs = seeds.len();
        let mut counts: HashMap<u128, Vec<u64>> = HashMap::new();
        let mut lines = vec![0u64; n_langs];
        for (l, (lang, seed)) in seeds.iter().enumerate() {
            for line in seed {
                let chars = ngram::prepare(line.as_ref());
                if chars.is_empty() {
                    continue;
                }
                lines[l] += 1;
                ngram::for_each(&chars, config.ngram_min, config.ngram_max, |key| {
                    counts.entry(key).or_insert_with(|| vec![0; n_langs])[l] += 1;
                });
            }
            if lines[l] == 0 {
                return Err(ModelError::EmptySeed(lang.clone()));
            }
        }

        let mut ranked: Vec<(u64, String, u128)> = counts
            .iter()
            .map(|(&key, per_lang)| (per_lang.iter().sum(), ngram::unpack(key), key))
            .collect();
        ranked.sort_unstable_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
        ranked.truncate(config.vocab_size);

        let n_feats = ranked.len();
        let alpha = config.smoothing_alpha;
        let mut totals = vec![0u64; n_langs];
        for (_, _, key) in &ranked {
            for (t, c) in totals.iter_mut().zip(&counts[key]) {
                *t += c;
            }
        }
        let mut log_likelihood = vec![0.0; n_feats * n_langs];
        for (f, (_, _, key)) in ranked.iter().enumerate() {
            for l in 0..n_langs {
                let num = counts[key][l] as f64 + alpha;
                let den = totals[l] as f64 + alpha * n_feats as f64;
                log_likelihood[f * n_langs + l] = libm::log(num / den);
            }
        }
        let all_lines: u64 = lines.iter().sum();
        let log_prior = lines.iter().map(|&n| libm::log(n as f64 / all_lines as f64)).collect();

        let index = ranked.iter().enumerate().map(|(f, (_, _, key))| (*key, f as u32)).collect();
        Ok(LangIdModel {
            languages: seeds.iter().map(|(l, _)| l.clone()).collect(),
            ngram_min: config.ngram_min,
            ngram_max: config.ngram_max,
            vocabulary: ranked.into_iter().map(|(_, s, _)| s).collect(),
            index,
            log_likelihood,
            log_prior,
            smoothing_alpha: alpha,
        })
    }

    /// Reassembles a model from its raw parameters, checking shapes.
    pub fn from_parts(
        languages: Vec<LangCode>,
        ngram_range: (usize, usize),
        vocabulary: Vec<String>,
        log_likelihood: Vec<f64>,
        log_prior: Vec<f64>,
        smoothing_alpha: f64,
    ) -> Result<Self, ModelError> {
        let (ngram_min, ngram_max) = ngram_range;
        TrainConfig { ngram_min, ngram_max, vocab_size: vocabulary.len().max(1), smoothing_alpha }
            .validate()?;
        if languages.len() < 2 {
            return Err(ModelError::InsufficientLanguages(languages.len()));
        }
        for (i, lang) in languages.iter().enumerate() {
            if languages[..i].contains(lang) {
                return Err(ModelError::DuplicateLanguage(lang.clone()));
            }
        }
        if vocabulary.is_empty() {
            return Err(ModelError::InvalidConfig("vocabulary is empty"));
        }
        if log_prior.len() != languages.len()
            || log_likelihood.len() != vocabulary.len() * languages.len()
        {
            return Err(ModelError::InvalidConfig("parameter shapes do not match"));
        }
        let mut index = HashMap::with_capacity(vocabulary.len());
        for (f, gram) in vocabulary.iter().enumerate() {
            let chars: Vec<char> = gram.chars().collect();
            if chars.len() < ngram_min || chars.len() > ngram_max {
                return Err(ModelError::InvalidConfig("vocabulary entry outside n-gram range"));
            }
            if index.insert(ngram::pack(&chars), f as u32).is_some() {
                return Err(ModelError::InvalidConfig("duplicate vocabulary entry"));
            }
        }
        Ok(LangIdModel {
            languages,
            ngram_min,
            ngram_max,
            vocabulary,
            index,
            log_likelihood,
            log_prior,
            smoothing_alpha,
        })
    }

    pub fn languages(&self) -> &[LangCode] {
        &self.languages
    }

    pub fn ngram_range(&self) -> (usize, usize) {
        (self.ngram_min, self.ngram_max)
    }

    pub fn vocabulary(&self) -> &[String] {
        &self.vocabulary
    }

    pub fn smoothing_alpha(&self) -> f64 {
        self.smoothing_alpha
    }

    pub fn log_prior(&self) -> &[f64] {
        &self.log_prior
    }

    /// Feature-major log-likelihood table (`feature * n_languages + lang`).
    pub fn log_likelihood_table(&self) -> &[f64] {
        &self.log_likelihood
    }

    pub fn log_likelihood(&self, lang: usize, feature: usize) -> f64 {
        self.log_likelihood[feature * self.languages.len() + lang]
    }

    pub fn language_index(&self, lang: &str) -> Option<usize> {
        self.languages.iter().position(|l| l.as_str() == lang)
    }

    pub fn feature_index(&self, gram: &str) -> Option<usize> {
        let chars: Vec<char> = gram.chars().collect();
        if chars.is_empty() || chars.len() > ngram::MAX_NGRAM {
            return None;
        }
        self.index.get(&ngram::pack(&chars)).map(|&f| f as usize)
    }

    /// In-vocabulary n-gram counts of `text`, sorted by feature index.
    pub fn feature_counts(&self, text: &str) -> Vec<(usize, u32)> {
        let chars = ngram::prepare(text);
        let mut counts: HashMap<u32, u32> = HashMap::new();
        ngram::for_each(&chars, self.ngram_min, self.ngram_max, |key| {
            if let Some(&f) = self.index.get(&key) {
                *counts.entry(f).or_insert(0) += 1;
            }
        });
        let mut out: Vec<(usize, u32)> =
            counts.into_iter().map(|(f, c)| (f as usize, c)).collect();
        out.sort_unstable();
        out
    }

    /// Unnormalized per-language scores for a bag of features.
    pub fn score_features(&self, features: &[(usize, u32)]) -> Vec<f64> {
        let n = self.languages.len();
        let mut scores = self.log_prior.clone();
        for &(f, count) in features {
            let row = &self.log_likelihood[f * n..(f + 1) * n];
            for (s, ll) in scores.iter_mut().zip(row) {
                *s += count as f64 * ll;
            }
        }
        scores
    }

    /// Unnormalized per-language scores: log prior plus the count-weighted
    /// log-likelihood of every in-vocabulary n-gram.
    pub fn scores(&self, text: &str) -> Vec<f64> {
        // Summation in feature order keeps the result independent of how
        // the n-grams were encountered.
        self.score_features(&self.feature_counts(text))
    }

    /// Posterior distribution over `languages()`.
    pub fn posteriors(&self, text: &str) -> Vec<f64> {
        let scores = self.scores(text);
        let norm = log_sum_exp(&scores);
        scores.iter().map(|s| libm::exp(s - norm)).collect()
    }

    pub fn classify(&self, text: &str) -> Prediction {
        self.predict_from_scores(&self.scores(text))
    }

    /// Classifies `source + " " + target`.
    pub fn classify_pair_concat(&self, pair: &SentencePair) -> Prediction {
        let mut joined = String::with_capacity(pair.source.len() + pair.target.len() + 1);
        joined.push_str(&pair.source);
        joined.push(' ');
        joined.push_str(&pair.target);
        self.classify(&joined)
    }

    fn predict_from_scores(&self, scores: &[f64]) -> Prediction {
        let mut best = 0;
        for (l, &s) in scores.iter().enumerate().skip(1) {
            if s > scores[best] {
                best = l;
            }
        }
        let runner_up = scores
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != best)
            .map(|(_, &s)| s)
            .fold(f64::NEG_INFINITY, f64::max);
        Prediction {
            lang: self.languages[best].clone(),
            log_posterior: scores[best] - log_sum_exp(scores),
            margin: scores[best] - runner_up,
        }
    }
}

fn log_sum_exp(xs: &[f64]) -> f64 {
    let max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return max;
    }
    max + libm::log(xs.iter().map(|x| libm::exp(x - max)).sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::borrow::ToOwned;

    fn seeds(pairs: &[(&str, &[&str])]) -> Vec<(LangCode, Vec<String>)> {
        pairs
            .iter()
            .map(|(l, lines)| (LangCode::from(*l), lines.iter().map(|s| (*s).to_owned()).collect()))
            .collect()
    }

    fn disjoint() -> Vec<(LangCode, Vec<String>)> {
        let latin: Vec<String> = (0..10)
            .map(|i| ["abc def", "ghi jkl mno", "pqr stu", "vwx yz abc"][i % 4].to_owned())
            .collect();
        let greek: Vec<String> = (0..10)
            .map(|i| ["αβγ δεζ", "ηθι κλμ", "νξο πρσ τυ", "φχψ ω αβ"][i % 4].to_owned())
            .collect();
        vec![(LangCode::from("la"), latin), (LangCode::from("el"), greek)]
    }

    #[test]
    fn disjoint_alphabets_classify_training_lines() {
        let s = disjoint();
        let model = LangIdModel::train(&s, &TrainConfig::default()).unwrap();
        for (lang, lines) in &s {
            for line in lines {
                let p = model.classify(line);
                assert_eq!(&p.lang, lang, "{line}");
                assert!(p.margin > 0.0);
            }
        }
    }

    #[test]
    fn identical_seeds_tie_with_zero_margin() {
        let text: &[&str] = &["el gat menja peix", "la casa és gran"];
        let model =
            LangIdModel::train(&seeds(&[("ca", text), ("es", text)]), &TrainConfig::default())
                .unwrap();
        for probe in ["el gat", "", "zzz qqq", "la casa és gran"] {
            let p = model.classify(probe);
            assert_eq!(p.margin, 0.0);
            assert_eq!(p.lang, "ca");
        }
    }

    #[test]
    fn vocab_cap_of_one() {
        let cfg = TrainConfig { vocab_size: 1, ..TrainConfig::default() };
        let model = LangIdModel::train(&disjoint(), &cfg).unwrap();
        assert_eq!(model.vocabulary().len(), 1);
        // The padding space is the most frequent unigram.
        assert_eq!(model.vocabulary()[0], " ");
    }

    #[test]
    fn ties_in_frequency_break_lexicographically() {
        let cfg = TrainConfig { ngram_min: 1, ngram_max: 1, vocab_size: 3, ..Default::default() };
        let model = LangIdModel::train(&seeds(&[("x", &["ba"]), ("y", &["dc"])]), &cfg).unwrap();
        assert_eq!(model.vocabulary(), &[" ", "a", "b"]);
    }

    #[test]
    fn empty_text_falls_back_to_priors() {
        let model = LangIdModel::train(
            &seeds(&[("a", &["xx", "xx", "xx"]), ("b", &["yy"])]),
            &TrainConfig::default(),
        )
        .unwrap();
        let p = model.classify("");
        assert_eq!(p.lang, "a");
        let expected = libm::log(0.75) - libm::log(0.25);
        assert!((p.margin - expected).abs() < 1e-12);
        assert_eq!(model.classify(" \t ").margin, p.margin);
    }

    #[test]
    fn training_errors() {
        let cfg = TrainConfig::default();
        assert_eq!(
            LangIdModel::train(&seeds(&[("a", &["x"])]), &cfg).unwrap_err(),
            ModelError::InsufficientLanguages(1)
        );
        assert_eq!(
            LangIdModel::train(&seeds(&[("a", &["x"]), ("b", &["", "  "])]), &cfg).unwrap_err(),
            ModelError::EmptySeed("b".into())
        );
        assert_eq!(
            LangIdModel::train(&seeds(&[("a", &["x"]), ("a", &["y"])]), &cfg).unwrap_err(),
            ModelError::DuplicateLanguage("a".into())
        );
        let bad = TrainConfig { ngram_max: 7, ..TrainConfig::default() };
        assert!(matches!(
            LangIdModel::train(&disjoint(), &bad),
            Err(ModelError::InvalidConfig(_))
        ));
    }

    #[test]
    fn likelihoods_and_priors_normalize() {
        let model = LangIdModel::train(&disjoint(), &TrainConfig::default()).unwrap();
        for l in 0..2 {
            let total: f64 =
                (0..model.vocabulary().len()).map(|f| libm::exp(model.log_likelihood(l, f))).sum();
            assert!((total - 1.0).abs() < 1e-9);
        }
        let prior: f64 = model.log_prior().iter().map(|p| libm::exp(*p)).sum();
        assert!((prior - 1.0).abs() < 1e-12);
    }

    #[test]
    fn concat_joins_with_space() {
        let model = LangIdModel::train(&disjoint(), &TrainConfig::default()).unwrap();
        let pair = SentencePair::new(0, "", "αβγ δεζ", "la", "el");
        assert_eq!(model.classify_pair_concat(&pair), model.classify(" αβγ δεζ"));
    }
}
