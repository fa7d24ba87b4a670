//! Data-parallel stage execution on a bounded worker pool.
//!
//! Every function here returns exactly what its sequential counterpart in
//! `bitextkit-core` returns: work is split per record (or per contiguous
//! chunk) and results are collected or merged in input order.

use bitextkit_core::cognates::{self, CognateConfig, CognateError, CognateExtraction};
use bitextkit_core::metrics::{self, MetricConfig, MetricError, MetricReport};
use bitextkit_core::{
    cleaner, tokenize, CleanError, CleaningMode, CleaningReport, CorpusStats, LangIdModel,
    SentencePair, StatsAccumulator, TokenizerRules,
};
use rayon::prelude::*;

pub struct Workers {
    pool: rayon::ThreadPool,
    count: usize,
}

impl Workers {
    /// `count` is clamped to at least 1.
    pub fn new(count: usize) -> Result<Self, rayon::ThreadPoolBuildError> {
        let count = count.max(1);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(count).build()?;
        Ok(Workers { pool, count })
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Order-preserving parallel map.
    pub fn map<T: Sync, U: Send>(&self, items: &[T], f: impl Fn(&T) -> U + Sync) -> Vec<U> {
        if self.count == 1 {
            return items.iter().map(f).collect();
        }
        self.pool.install(|| items.par_iter().map(&f).collect())
    }

    pub fn stats(&self, pairs: &[SentencePair]) -> CorpusStats {
        let chunk = pairs.len().div_ceil(self.count).max(1);
        let chunks: Vec<&[SentencePair]> = pairs.chunks(chunk).collect();
        let partial = self.map(&chunks, |c| {
            let mut acc = StatsAccumulator::new();
            c.iter().for_each(|p| acc.add(p));
            acc
        });
        let mut total = StatsAccumulator::new();
        for acc in partial {
            total.merge(acc);
        }
        total.finish()
    }

    pub fn clean(
        &self,
        pairs: Vec<SentencePair>,
        model: &LangIdModel,
        mode: CleaningMode,
        keep_decisions: bool,
    ) -> Result<(Vec<SentencePair>, CleaningReport), CleanError> {
        let decisions = self.map(&pairs, |p| cleaner::decide(p, model, mode));
        let mut report = CleaningReport::new(keep_decisions);
        let mut kept = Vec::new();
        for (pair, d) in pairs.into_iter().zip(decisions) {
            let d = d?;
            if d.keep {
                kept.push(pair);
            }
            report.record(d);
        }
        Ok((kept, report))
    }

    pub fn tokenize<S: AsRef<str> + Sync>(&self, lines: &[S], rules: &TokenizerRules) -> Vec<Vec<String>> {
        self.map(lines, |l| tokenize(l.as_ref(), rules))
    }

    pub fn score(
        &self,
        hypotheses: &[Vec<String>],
        references: &[Vec<Vec<String>>],
        cfg: &MetricConfig,
    ) -> Result<MetricReport, MetricError> {
        if hypotheses.len() != references.len() {
            return Err(MetricError::LengthMismatch { hypotheses: hypotheses.len(), references: references.len() });
        }
        if let Some(i) = references.iter().position(Vec::is_empty) {
            return Err(MetricError::NoReference(i));
        }
        let idx: Vec<usize> = (0..hypotheses.len()).collect();
        let segments = self.map(&idx, |&i| metrics::score_segment(&hypotheses[i], &references[i], cfg));
        metrics::aggregate(&segments, cfg)
    }

    pub fn cognates(
        &self,
        source: &[Vec<String>],
        reference: &[Vec<String>],
        cfg: &CognateConfig,
    ) -> Result<CognateExtraction, CognateError> {
        if source.len() != reference.len() {
            return Err(CognateError::IndexMismatch { expected: source.len(), found: reference.len() });
        }
        let idx: Vec<usize> = (0..source.len()).collect();
        let parts = self.map(&idx, |&i| cognates::extract_sentence(i, &source[i], &reference[i], cfg));
        let mut all = CognateExtraction::default();
        parts.into_iter().for_each(|p| all.extend(p));
        Ok(all)
    }
}
