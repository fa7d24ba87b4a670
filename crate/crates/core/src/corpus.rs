//! Sentence pairs and corpus-side statistics.

use alloc::borrow::ToOwned;
use alloc::string::String;
use core::fmt;
use core::ops::Deref;

use hashbrown::HashSet;

use crate::text;

/// An ISO 639-1/3 language code such as `es` or `bm`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(transparent))]
pub struct LangCode(String);

impl LangCode {
    pub fn new(code: impl Into<String>) -> Self {
        LangCode(code.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Deref for LangCode {
    type Target = str;
    fn deref(&self) -> &str {
        &self.0
    }
}

impl From<&str> for LangCode {
    fn from(code: &str) -> Self {
        LangCode(code.to_owned())
    }
}

impl From<String> for LangCode {
    fn from(code: String) -> Self {
        LangCode(code)
    }
}

impl PartialEq<str> for LangCode {
    fn eq(&self, other: &str) -> bool {
        self.0 == other
    }
}

impl PartialEq<&str> for LangCode {
    fn eq(&self, other: &&str) -> bool {
        self.0 == *other
    }
}

impl fmt::Display for LangCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One line-aligned bitext unit.
///
/// `source` and `target` never contain line breaks; readers enforce this and
/// [`SentencePair::has_line_break`] lets callers check hand-built pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SentencePair {
    pub index: usize,
    pub source: String,
    pub target: String,
    pub src_lang: LangCode,
    pub tgt_lang: LangCode,
}

impl SentencePair {
    pub fn new(
        index: usize,
        source: impl Into<String>,
        target: impl Into<String>,
        src_lang: impl Into<LangCode>,
        tgt_lang: impl Into<LangCode>,
    ) -> Self {
        SentencePair {
            index,
            source: source.into(),
            target: target.into(),
            src_lang: src_lang.into(),
            tgt_lang: tgt_lang.into(),
        }
    }

    pub fn has_line_break(&self) -> bool {
        self.source.chars().chain(self.target.chars()).any(text::is_line_break)
    }
}

/// Sentence and word counts plus type-token ratios for both corpus sides.
///
/// A TTR is `None` when its side has no tokens at all.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CorpusStats {
    pub sentence_count: u64,
    pub word_count_source: u64,
    pub word_count_target: u64,
    pub ttr_source: Option<f64>,
    pub ttr_target: Option<f64>,
}

/// Mergeable accumulator behind [`corpus_stats`].
///
/// Words are whitespace-delimited and TTR is global over each side, so
/// partial accumulators built on disjoint shards merge to the same result
/// as a single pass.
#[derive(Debug, Default, Clone)]
pub struct StatsAccumulator {
    sentences: u64,
    source_words: u64,
    target_words: u64,
    source_types: HashSet<String>,
    target_types: HashSet<String>,
}

impl StatsAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, pair: &SentencePair) {
        self.sentences += 1;
        self.source_words += count_into(&pair.source, &mut self.source_types);
        self.target_words += count_into(&pair.target, &mut self.target_types);
    }

    pub fn merge(&mut self, other: StatsAccumulator) {
        self.sentences += other.sentences;
        self.source_words += other.source_words;
        self.target_words += other.target_words;
        self.source_types.extend(other.source_types);
        self.target_types.extend(other.target_types);
    }

    pub fn finish(&self) -> CorpusStats {
        CorpusStats {
            sentence_count: self.sentences,
            word_count_source: self.source_words,
            word_count_target: self.target_words,
            ttr_source: ratio(self.source_types.len(), self.source_words),
            ttr_target: ratio(self.target_types.len(), self.target_words),
        }
    }
}

fn count_into(line: &str, types: &mut HashSet<String>) -> u64 {
    let mut n = 0;
    for w in text::words(line) {
        n += 1;
        if !types.contains(w) {
            types.insert(w.to_owned());
        }
    }
    n
}

fn ratio(types: usize, tokens: u64) -> Option<f64> {
    (tokens > 0).then(|| types as f64 / tokens as f64)
}

/// Counts sentences, whitespace-delimited words and corpus-global TTR.
///
/// Input is counted as given: pre-tokenized text is split the same way, so
/// tokenize first to get post-tokenization figures.
pub fn corpus_stats<'a, I>(pairs: I) -> CorpusStats
where
    I: IntoIterator<Item = &'a SentencePair>,
{
    let mut acc = StatsAccumulator::new();
    for p in pairs {
        acc.add(p);
    }
    acc.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn pair(i: usize, s: &str, t: &str) -> SentencePair {
        SentencePair::new(i, s, t, "es", "ca")
    }

    #[test]
    fn ttr_by_definition() {
        let stats = corpus_stats(&[pair(0, "a b a", "x")]);
        assert_eq!(stats.word_count_source, 3);
        assert_eq!(stats.ttr_source, Some(2.0 / 3.0));
        assert_eq!(stats.ttr_target, Some(1.0));
    }

    #[test]
    fn two_single_word_sources() {
        let stats = corpus_stats(&[pair(0, "x", ""), pair(1, "y", "")]);
        assert_eq!(stats.sentence_count, 2);
        assert_eq!(stats.word_count_source, 2);
        assert_eq!(stats.ttr_source, Some(1.0));
        assert_eq!(stats.word_count_target, 0);
        assert_eq!(stats.ttr_target, None);
    }

    #[test]
    fn empty_corpus() {
        let stats = corpus_stats(&Vec::<SentencePair>::new());
        assert_eq!(stats.sentence_count, 0);
        assert_eq!(stats.ttr_source, None);
        assert_eq!(stats.ttr_target, None);
    }

    #[test]
    fn unicode_whitespace_separates_words() {
        let stats = corpus_stats(&[pair(0, "a\u{3000}b\u{a0}c\td", "e")]);
        assert_eq!(stats.word_count_source, 4);
    }

    #[test]
    fn merge_matches_single_pass() {
        let pairs = vec![pair(0, "a b", "c"), pair(1, "a d", "c c"), pair(2, "e", "f")];
        let mut left = StatsAccumulator::new();
        left.add(&pairs[0]);
        let mut right = StatsAccumulator::new();
        right.add(&pairs[1]);
        right.add(&pairs[2]);
        left.merge(right);
        assert_eq!(left.finish(), corpus_stats(&pairs));
    }

    #[test]
    fn line_break_detection() {
        assert!(!pair(0, "a\tb", "c").has_line_break());
        assert!(pair(0, "a\rb", "c").has_line_break());
    }
}
