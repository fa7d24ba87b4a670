//! Corpus and sentence BLEU with clipped n-gram precision.

use alloc::vec::Vec;

use hashbrown::HashMap;

use super::MetricError;

pub const MAX_ORDER: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Smoothing {
    #[default]
    None,
    /// Orders n >= 2 with no matches score (0 + 1) / (total + 1).
    AddOneOnZero,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BleuScore {
    /// On the 0-100 scale.
    pub bleu: f64,
    pub precisions: [f64; MAX_ORDER],
    pub brevity_penalty: f64,
    pub hyp_len: u64,
    /// Effective reference length: per segment, the reference length
    /// closest to the hypothesis length, shorter on ties.
    pub ref_len: u64,
}

/// Integer sufficient statistics; adding them is exact, so corpus BLEU does
/// not depend on segment order or on how segments were sharded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BleuStats {
    pub matches: [u64; MAX_ORDER],
    pub totals: [u64; MAX_ORDER],
    pub hyp_len: u64,
    pub ref_len: u64,
}

impl BleuStats {
    pub fn add(&mut self, other: &BleuStats) {
        for n in 0..MAX_ORDER {
            self.matches[n] += other.matches[n];
            self.totals[n] += other.totals[n];
        }
        self.hyp_len += other.hyp_len;
        self.ref_len += other.ref_len;
    }

    pub fn score(&self, smoothing: Smoothing) -> BleuScore {
        let mut precisions = [0.0; MAX_ORDER];
        for n in 0..MAX_ORDER {
            let (m, t) = (self.matches[n], self.totals[n]);
            precisions[n] = if m == 0 && n > 0 && smoothing == Smoothing::AddOneOnZero {
                1.0 / (t as f64 + 1.0)
            } else if t == 0 {
                0.0
            } else {
                m as f64 / t as f64
            };
        }
        let brevity_penalty = brevity_penalty(self.hyp_len, self.ref_len);
        let bleu = if precisions.iter().any(|&p| p <= 0.0) {
            0.0
        } else {
            let log_mean: f64 =
                precisions.iter().map(|&p| libm::log(p)).sum::<f64>() / MAX_ORDER as f64;
            100.0 * brevity_penalty * libm::exp(log_mean)
        };
        BleuScore { bleu, precisions, brevity_penalty, hyp_len: self.hyp_len, ref_len: self.ref_len }
    }
}

/// 1 when the hypothesis is longer than the reference, otherwise
/// `exp(1 - ref/hyp)`; an empty hypothesis gets the limit value 0.
pub fn brevity_penalty(hyp_len: u64, ref_len: u64) -> f64 {
    if hyp_len > ref_len {
        1.0
    } else if hyp_len == 0 {
        if ref_len == 0 { 1.0 } else { 0.0 }
    } else {
        libm::exp(1.0 - ref_len as f64 / hyp_len as f64)
    }
}

fn ngram_counts<'t, 'a>(tokens: &'t [&'a str], n: usize) -> HashMap<&'t [&'a str], u64> {
    let mut counts = HashMap::new();
    if tokens.len() >= n {
        for gram in tokens.windows(n) {
            *counts.entry(gram).or_insert(0) += 1;
        }
    }
    counts
}

/// Statistics for one segment against one or more references.
pub fn segment_stats<T: AsRef<str>>(hyp: &[T], refs: &[Vec<T>]) -> BleuStats {
    let hyp: Vec<&str> = hyp.iter().map(AsRef::as_ref).collect();
    let refs: Vec<Vec<&str>> =
        refs.iter().map(|r| r.iter().map(AsRef::as_ref).collect()).collect();
    let mut stats = BleuStats { hyp_len: hyp.len() as u64, ..BleuStats::default() };
    for n in 1..=MAX_ORDER {
        let hyp_counts = ngram_counts(&hyp, n);
        let mut max_ref: HashMap<&[&str], u64> = HashMap::new();
        for r in &refs {
            for (gram, c) in ngram_counts(r, n) {
                let slot = max_ref.entry(gram).or_insert(0);
                *slot = (*slot).max(c);
            }
        }
        stats.totals[n - 1] = hyp.len().saturating_sub(n - 1) as u64;
        stats.matches[n - 1] = hyp_counts
            .iter()
            .map(|(gram, &c)| c.min(max_ref.get(gram).copied().unwrap_or(0)))
            .sum();
    }
    stats.ref_len = refs
        .iter()
        .map(|r| r.len() as u64)
        .min_by_key(|&len| (len.abs_diff(stats.hyp_len), len))
        .unwrap_or(0);
    stats
}

/// Unsmoothed corpus BLEU. `references[i]` holds every reference for
/// `hypotheses[i]`.
pub fn bleu_corpus<T: AsRef<str>>(
    hypotheses: &[Vec<T>],
    references: &[Vec<Vec<T>>],
) -> Result<BleuScore, MetricError> {
    super::check_shapes(hypotheses.len(), references)?;
    let mut total = BleuStats::default();
    for (h, r) in hypotheses.iter().zip(references) {
        total.add(&segment_stats(h, r));
    }
    Ok(total.score(Smoothing::None))
}

pub fn bleu_sentence<T: AsRef<str>>(
    hyp: &[T],
    refs: &[Vec<T>],
    smoothing: Smoothing,
) -> Result<BleuScore, MetricError> {
    if refs.is_empty() {
        return Err(MetricError::NoReference(0));
    }
    Ok(segment_stats(hyp, refs).score(smoothing))
}
