//! Bitext cleaning and machine-translation evaluation primitives.
//!
//! Everything here is pure computation over in-memory text and needs only
//! `alloc`: corpus statistics, a character n-gram naive Bayes language
//! identifier, language-identification based bitext filtering, a Moses-style
//! tokenizer/detokenizer, BLEU/RIBES/TER, and Levenshtein cognate analysis.
//! File formats, reports and the command-line front end live in the
//! `bitextkit` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cleaner;
pub mod cognates;
pub mod corpus;
pub mod langid;
pub mod metrics;
pub mod text;
pub mod tokenizer;

pub use cleaner::{
    audit_table, clean, decide, AuditFormat, CleanError, CleaningDecision, CleaningMode,
    CleaningReport, Reason,
};
pub use cognates::{
    extract_cognates, extract_sentence, levenshtein, normalized_distance, preservation,
    CognateConfig, CognateError, CognateExtraction, CognatePair, CognateReport,
};
pub use corpus::{corpus_stats, CorpusStats, LangCode, SentencePair, StatsAccumulator};
pub use langid::{LangIdModel, ModelError, Prediction, TrainConfig};
pub use metrics::{
    bleu_corpus, bleu_sentence, ribes, score_corpus, ter, BleuScore, MetricConfig, MetricError,
    MetricReport, RibesScore, SegmentScores, Smoothing, TerConfig, TerEdits, TerScore,
};
pub use tokenizer::{detokenize, resolve_rules, tokenize, TokenizerRules};
