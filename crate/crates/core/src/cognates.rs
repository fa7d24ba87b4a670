//! Levenshtein-based cognate detection between a source text and a
//! reference translation, and how many of those cognates a system output
//! keeps.
//!
//! Words are compared case-folded and NFC-normalized; diacritics are kept,
//! so `Grècia` and `Grecia` are one edit apart.

use alloc::string::String;
use alloc::vec::Vec;

use crate::text::nfc_lower;

/// Edit distance over Unicode scalar values.
pub fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    levenshtein_chars(&a, &b)
}

fn levenshtein_chars(a: &[char], b: &[char]) -> usize {
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = alloc::vec![0; b.len() + 1];
    for (i, ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(ca != cb);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

struct Folded {
    chars: Vec<char>,
}

impl Folded {
    fn new(word: &str) -> Self {
        Folded { chars: nfc_lower(word).chars().collect() }
    }

    /// `(distance, normalized)`; two empty words are identical.
    fn distance(&self, other: &Folded) -> (usize, f64) {
        let d = levenshtein_chars(&self.chars, &other.chars);
        let longest = self.chars.len().max(other.chars.len());
        (d, if longest == 0 { 0.0 } else { d as f64 / longest as f64 })
    }
}

/// Distance divided by the longer word's length, after folding. In [0, 1].
pub fn normalized_distance(a: &str, b: &str) -> f64 {
    Folded::new(a).distance(&Folded::new(b)).1
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CognateConfig {
    /// Maximum normalized distance, in (0, 1].
    pub threshold: f64,
    /// Source tokens shorter than this (in characters) are skipped.
    pub min_len: usize,
}

impl Default for CognateConfig {
    fn default() -> Self {
        CognateConfig { threshold: 0.3, min_len: 4 }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CognatePair {
    pub source_sentence_index: usize,
    pub source_position: usize,
    pub target_position: usize,
    pub source_word: String,
    pub target_word: String,
    pub distance: usize,
    pub normalized_distance: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CognateError {
    #[error("{expected} sentences expected but {found} given")]
    IndexMismatch { expected: usize, found: usize },
}

/// Cognates found over a run of sentences.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CognateExtraction {
    pub sentences: usize,
    /// Source tokens long enough to be considered.
    pub pairs_examined: u64,
    pub pairs: Vec<CognatePair>,
}

impl CognateExtraction {
    /// Appends a later run of sentences.
    pub fn extend(&mut self, other: CognateExtraction) {
        self.sentences += other.sentences;
        self.pairs_examined += other.pairs_examined;
        self.pairs.extend(other.pairs);
    }
}

/// Cognates of one sentence pair.
///
/// Every (source, reference) token pair within the threshold is a candidate;
/// candidates are taken greedily by ascending normalized distance, then
/// source position, then reference position, using each token at most once.
pub fn extract_sentence<S: AsRef<str>>(
    index: usize,
    source: &[S],
    reference: &[S],
    cfg: &CognateConfig,
) -> CognateExtraction {
    let folded_ref: Vec<Folded> = reference.iter().map(|t| Folded::new(t.as_ref())).collect();
    let mut examined = 0u64;
    let mut candidates: Vec<(f64, usize, usize, usize)> = Vec::new();
    for (si, token) in source.iter().enumerate() {
        if token.as_ref().chars().count() < cfg.min_len {
            continue;
        }
        examined += 1;
        let folded = Folded::new(token.as_ref());
        for (ri, r) in folded_ref.iter().enumerate() {
            let (d, norm) = folded.distance(r);
            if norm <= cfg.threshold {
                candidates.push((norm, si, ri, d));
            }
        }
    }
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));

    let mut source_used = alloc::vec![false; source.len()];
    let mut ref_used = alloc::vec![false; folded_ref.len()];
    let mut pairs = Vec::new();
    for (norm, si, ri, d) in candidates {
        if source_used[si] || ref_used[ri] {
            continue;
        }
        source_used[si] = true;
        ref_used[ri] = true;
        pairs.push(CognatePair {
            source_sentence_index: index,
            source_position: si,
            target_position: ri,
            source_word: String::from(source[si].as_ref()),
            target_word: String::from(reference[ri].as_ref()),
            distance: d,
            normalized_distance: norm,
        });
    }
    pairs.sort_by_key(|p| p.source_position);
    CognateExtraction { sentences: 1, pairs_examined: examined, pairs }
}

/// Cognates across aligned source and reference sentences.
pub fn extract_cognates<S: AsRef<str>>(
    source: &[Vec<S>],
    reference: &[Vec<S>],
    cfg: &CognateConfig,
) -> Result<CognateExtraction, CognateError> {
    if source.len() != reference.len() {
        return Err(CognateError::IndexMismatch { expected: source.len(), found: reference.len() });
    }
    let mut all = CognateExtraction::default();
    for (i, (s, r)) in source.iter().zip(reference).enumerate() {
        all.extend(extract_sentence(i, s, r, cfg));
    }
    Ok(all)
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CognateReport {
    pub pairs_examined: u64,
    pub cognate_pairs: u64,
    /// `cognate_pairs / pairs_examined`, 0 when nothing was examined.
    pub cognate_rate: f64,
    /// Absent without a system output.
    pub preserved: Option<u64>,
    /// `preserved / cognate_pairs`; absent without a system output or
    /// without cognates.
    pub preservation_rate: Option<f64>,
    pub threshold: f64,
    pub min_len: usize,
}

impl CognateReport {
    pub fn from_extraction(extraction: &CognateExtraction, cfg: &CognateConfig) -> Self {
        let cognate_pairs = extraction.pairs.len() as u64;
        CognateReport {
            pairs_examined: extraction.pairs_examined,
            cognate_pairs,
            cognate_rate: if extraction.pairs_examined == 0 {
                0.0
            } else {
                cognate_pairs as f64 / extraction.pairs_examined as f64
            },
            preserved: None,
            preservation_rate: None,
            threshold: cfg.threshold,
            min_len: cfg.min_len,
        }
    }
}

/// Counts cognates whose reference-side word survives in the system output:
/// some token of the system sentence lies within the threshold of it.
pub fn preservation<S: AsRef<str>>(
    extraction: &CognateExtraction,
    system: &[Vec<S>],
    cfg: &CognateConfig,
) -> Result<CognateReport, CognateError> {
    if system.len() != extraction.sentences {
        return Err(CognateError::IndexMismatch { expected: extraction.sentences, found: system.len() });
    }
    let mut report = CognateReport::from_extraction(extraction, cfg);
    let mut preserved = 0u64;
    let mut current: Option<(usize, Vec<Folded>)> = None;
    for p in &extraction.pairs {
        let sentence = match &current {
            Some((i, folded)) if *i == p.source_sentence_index => folded,
            _ => {
                let folded = system
                    .get(p.source_sentence_index)
                    .map(|s| s.iter().map(|t| Folded::new(t.as_ref())).collect())
                    .unwrap_or_default();
                &current.insert((p.source_sentence_index, folded)).1
            }
        };
        let target = Folded::new(&p.target_word);
        if sentence.iter().any(|t| target.distance(t).1 <= cfg.threshold) {
            preserved += 1;
        }
    }
    report.preserved = Some(preserved);
    report.preservation_rate =
        (report.cognate_pairs > 0).then(|| preserved as f64 / report.cognate_pairs as f64);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn toks(s: &str) -> Vec<&str> {
        s.split_whitespace().collect()
    }

    #[test]
    fn distances() {
        assert_eq!(levenshtein("kitten", "sitting"), 3);
        assert_eq!(levenshtein("", "abc"), 3);
        assert_eq!(levenshtein("contribución", "contribució"), 1);
        assert_eq!(normalized_distance("contribución", "contribució"), 1.0 / 12.0);
        assert_eq!(normalized_distance("Grècia", "grecia"), 1.0 / 6.0);
        assert_eq!(normalized_distance("", ""), 0.0);
    }

    #[test]
    fn table_example() {
        let src = vec![toks("la contribución financiera")];
        let reference = vec![toks("la contribució financera")];
        let ex = extract_cognates(&src, &reference, &CognateConfig::default()).unwrap();
        assert_eq!(ex.pairs_examined, 2);
        assert_eq!(ex.pairs.len(), 2);
        assert_eq!(ex.pairs[0].target_word, "contribució");
        assert_eq!(ex.pairs[0].distance, 1);
        assert_eq!(ex.pairs[1].target_word, "financera");
    }

    #[test]
    fn one_to_one_by_distance() {
        // both "casas" and "casa" fit "casa"; the exact match claims it
        let ex = extract_sentence(0, &toks("casas casa"), &toks("casa"), &CognateConfig::default());
        assert_eq!(ex.pairs.len(), 1);
        assert_eq!(ex.pairs[0].source_position, 1);
    }

    #[test]
    fn preservation_rates() {
        let cfg = CognateConfig::default();
        let src = vec![toks("la contribución financiera")];
        let reference = vec![toks("la contribució financera")];
        let ex = extract_cognates(&src, &reference, &cfg).unwrap();
        let r = preservation(&ex, &reference, &cfg).unwrap();
        assert_eq!(r.preservation_rate, Some(1.0));
        let r = preservation(&ex, &[toks("la contribució")], &cfg).unwrap();
        assert_eq!(r.preservation_rate, Some(0.5));
        let r = preservation(&ex, &[toks("la")], &cfg).unwrap();
        assert_eq!(r.preservation_rate, Some(0.0));
        assert!(preservation(&ex, &[toks("a"), toks("b")], &cfg).is_err());
    }

    #[test]
    fn disjoint_alphabets() {
        let ex = extract_sentence(0, &toks("привет мир"), &toks("hello world"), &CognateConfig {
            threshold: 0.99,
            min_len: 1,
        });
        assert!(ex.pairs.is_empty());
        assert_eq!(ex.pairs_examined, 2);
    }
}
