//! Reference-based MT metrics over pre-tokenized text.
//!
//! `references[i]` holds every reference for segment `i`; all segments must
//! have at least one. Corpus scores are reduced from per-segment results
//! ([`SegmentScores`]) in segment order, so scoring segments in parallel and
//! reducing afterwards gives bit-identical output.

pub mod bleu;
pub mod ribes;
pub mod ter;

use alloc::vec::Vec;

pub use bleu::{bleu_corpus, bleu_sentence, BleuScore, BleuStats, Smoothing};
pub use ribes::{ribes, RibesScore};
pub use ter::{ter, ter_with, TerConfig, TerEdits, TerScore};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricError {
    #[error("empty corpus")]
    EmptyCorpus,
    #[error("{hypotheses} hypotheses but {references} reference sets")]
    LengthMismatch { hypotheses: usize, references: usize },
    #[error("segment {0} has no reference")]
    NoReference(usize),
}

pub(crate) fn check_shapes<R>(hypotheses: usize, references: &[Vec<R>]) -> Result<(), MetricError> {
    if hypotheses != references.len() {
        return Err(MetricError::LengthMismatch { hypotheses, references: references.len() });
    }
    if hypotheses == 0 {
        return Err(MetricError::EmptyCorpus);
    }
    match references.iter().position(Vec::is_empty) {
        Some(i) => Err(MetricError::NoReference(i)),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricConfig {
    pub ribes_alpha: f64,
    pub ribes_beta: f64,
    pub ter: TerConfig,
}

impl Default for MetricConfig {
    fn default() -> Self {
        MetricConfig {
            ribes_alpha: ribes::DEFAULT_ALPHA,
            ribes_beta: ribes::DEFAULT_BETA,
            ter: TerConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SegmentScores {
    pub bleu: BleuStats,
    pub ribes: RibesScore,
    pub ter: TerScore,
}

pub fn score_segment<T: AsRef<str>>(hyp: &[T], refs: &[Vec<T>], cfg: &MetricConfig) -> SegmentScores {
    SegmentScores {
        bleu: bleu::segment_stats(hyp, refs),
        ribes: ribes(hyp, refs, cfg.ribes_alpha, cfg.ribes_beta),
        ter: ter_with(hyp, refs, &cfg.ter),
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MetricReport {
    pub segments: usize,
    pub bleu: BleuScore,
    /// Mean of sentence scores.
    pub ribes: RibesScore,
    /// Total edits over total average reference length.
    pub ter: TerScore,
}

/// Reduces per-segment results in order.
pub fn aggregate(segments: &[SegmentScores], cfg: &MetricConfig) -> Result<MetricReport, MetricError> {
    if segments.is_empty() {
        return Err(MetricError::EmptyCorpus);
    }
    let mut stats = BleuStats::default();
    let mut edits = TerEdits::default();
    let mut ref_len = 0.0;
    for s in segments {
        stats.add(&s.bleu);
        edits.add(&s.ter.edits);
        ref_len += s.ter.ref_len;
    }
    let sentence_ribes: Vec<RibesScore> = segments.iter().map(|s| s.ribes.clone()).collect();
    Ok(MetricReport {
        segments: segments.len(),
        bleu: stats.score(Smoothing::None),
        ribes: ribes::mean(&sentence_ribes, cfg.ribes_alpha, cfg.ribes_beta),
        ter: TerScore::from_parts(edits, ref_len),
    })
}

/// BLEU, RIBES and TER over a corpus.
pub fn score_corpus<T: AsRef<str>>(
    hypotheses: &[Vec<T>],
    references: &[Vec<Vec<T>>],
    cfg: &MetricConfig,
) -> Result<MetricReport, MetricError> {
    check_shapes(hypotheses.len(), references)?;
    let segments: Vec<SegmentScores> = hypotheses
        .iter()
        .zip(references)
        .map(|(h, r)| score_segment(h, r, cfg))
        .collect();
    aggregate(&segments, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn identity_corpus() {
        let hyps = vec![vec!["a", "b", "c"], vec!["d", "e", "f", "g"]];
        let refs: Vec<Vec<Vec<&str>>> = hyps.iter().map(|h| vec![h.clone()]).collect();
        let r = score_corpus(&hyps, &refs, &MetricConfig::default()).unwrap();
        assert_eq!(r.bleu.bleu, 100.0);
        assert_eq!(r.ribes.ribes, 1.0);
        assert_eq!(r.ter.ter, 0.0);
        assert_eq!(r.segments, 2);
    }

    #[test]
    fn corpus_ter_pools_edits() {
        let hyps = vec![vec!["a", "b", "c"], vec!["a"]];
        let refs = vec![vec![vec!["a", "x", "c"]], vec![vec!["a"]]];
        let r = score_corpus(&hyps, &refs, &MetricConfig::default()).unwrap();
        assert_eq!(r.ter.ter, 0.25);
        assert_eq!(r.ter.ref_len, 4.0);
    }
}
