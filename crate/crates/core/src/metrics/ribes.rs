//! RIBES: rank correlation of aligned word positions, weighted by unigram
//! precision and a brevity penalty.

use alloc::vec::Vec;

pub const DEFAULT_ALPHA: f64 = 0.25;
pub const DEFAULT_BETA: f64 = 0.10;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RibesScore {
    /// In [0, 1].
    pub ribes: f64,
    /// Normalized Kendall's tau, `(tau + 1) / 2`.
    pub nkt: f64,
    pub unigram_precision: f64,
    #[cfg_attr(feature = "serde", serde(rename = "brevity_penalty"))]
    pub bp: f64,
    pub alpha: f64,
    pub beta: f64,
}

fn occurrences(haystack: &[&str], needle: &[&str]) -> usize {
    if needle.len() > haystack.len() {
        return 0;
    }
    haystack.windows(needle.len()).filter(|w| *w == needle).count()
}

fn first_position(haystack: &[&str], needle: &[&str]) -> Option<usize> {
    if needle.len() > haystack.len() {
        return None;
    }
    haystack.windows(needle.len()).position(|w| w == needle)
}

/// Reference positions of hypothesis words, in hypothesis order.
///
/// A word unique on both sides aligns directly. An ambiguous word is
/// disambiguated by the shortest right (then left) context that is unique on
/// both sides; words that stay ambiguous are dropped.
pub fn word_rank_alignment<T: AsRef<str>>(reference: &[T], hypothesis: &[T]) -> Vec<usize> {
    let r: Vec<&str> = reference.iter().map(AsRef::as_ref).collect();
    let h: Vec<&str> = hypothesis.iter().map(AsRef::as_ref).collect();
    let mut order = Vec::new();
    for (i, &word) in h.iter().enumerate() {
        let in_ref = occurrences(&r, &[word]);
        if in_ref == 0 {
            continue;
        }
        if in_ref == 1 && occurrences(&h, &[word]) == 1 {
            order.push(first_position(&r, &[word]).unwrap_or(0));
            continue;
        }
        let max_window = i.max(h.len() - i + 1);
        for window in 1..max_window {
            if i + window < h.len() {
                let right = &h[i..=i + window];
                if occurrences(&r, right) == 1 && occurrences(&h, right) == 1 {
                    if let Some(p) = first_position(&r, right) {
                        order.push(p);
                        break;
                    }
                }
            }
            if window <= i {
                let left = &h[i - window..=i];
                if occurrences(&r, left) == 1 && occurrences(&h, left) == 1 {
                    if let Some(p) = first_position(&r, left) {
                        order.push(p + window);
                        break;
                    }
                }
            }
        }
    }
    order
}

/// Fraction of ascending pairs; 0 for fewer than two aligned words.
pub fn normalized_kendall_tau(order: &[usize]) -> f64 {
    let n = order.len();
    if n < 2 {
        return 0.0;
    }
    let mut ascending = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            if order[i] < order[j] {
                ascending += 1;
            }
        }
    }
    let pairs = (n as u64) * (n as u64 - 1) / 2;
    ascending as f64 / pairs as f64
}

fn score_against<T: AsRef<str>>(hyp: &[T], reference: &[T], alpha: f64, beta: f64) -> RibesScore {
    let order = word_rank_alignment(reference, hyp);
    let nkt = normalized_kendall_tau(&order);
    let (unigram_precision, bp) = if hyp.is_empty() {
        (0.0, 0.0)
    } else {
        let bp = libm::exp(1.0 - reference.len() as f64 / hyp.len() as f64).min(1.0);
        (order.len() as f64 / hyp.len() as f64, bp)
    };
    let ribes = nkt * libm::pow(unigram_precision, alpha) * libm::pow(bp, beta);
    RibesScore { ribes, nkt, unigram_precision, bp, alpha, beta }
}

/// Sentence RIBES: the best score over all references, with the components
/// of that best reference. No references scores 0.
pub fn ribes<T: AsRef<str>>(hyp: &[T], refs: &[Vec<T>], alpha: f64, beta: f64) -> RibesScore {
    let mut best = RibesScore { ribes: 0.0, nkt: 0.0, unigram_precision: 0.0, bp: 0.0, alpha, beta };
    let mut first = true;
    for reference in refs {
        let s = score_against(hyp, reference, alpha, beta);
        if first || s.ribes > best.ribes {
            best = s;
            first = false;
        }
    }
    best
}

/// Corpus RIBES: the arithmetic mean of sentence scores and components.
pub fn mean(scores: &[RibesScore], alpha: f64, beta: f64) -> RibesScore {
    let n = scores.len().max(1) as f64;
    let sum = |f: fn(&RibesScore) -> f64| scores.iter().map(f).sum::<f64>() / n;
    RibesScore {
        ribes: sum(|s| s.ribes),
        nkt: sum(|s| s.nkt),
        unigram_precision: sum(|s| s.unigram_precision),
        bp: sum(|s| s.bp),
        alpha,
        beta,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn toks(s: &str) -> Vec<&str> {
        s.split_whitespace().collect()
    }

    fn nkt(r: &str, h: &str) -> f64 {
        normalized_kendall_tau(&word_rank_alignment(&toks(r), &toks(h)))
    }

    #[test]
    fn one_swap_of_four() {
        assert_eq!(word_rank_alignment(&toks("a b c d"), &toks("a c b d")), vec![0, 2, 1, 3]);
        assert_eq!(nkt("a b c d", "a c b d"), 5.0 / 6.0);
    }

    #[test]
    fn identity_and_reversal() {
        let s = toks("one two three four five");
        let r = ribes(&s, core::slice::from_ref(&s), DEFAULT_ALPHA, DEFAULT_BETA);
        assert_eq!((r.ribes, r.nkt, r.unigram_precision, r.bp), (1.0, 1.0, 1.0, 1.0));
        assert_eq!(nkt("a b c d e", "e d c b a"), 0.0);
    }

    #[test]
    fn repeated_words_use_context() {
        // "the" is ambiguous; its right neighbour resolves it.
        let order = word_rank_alignment(&toks("the cat and the dog"), &toks("the dog and the cat"));
        assert_eq!(order, vec![3, 4, 2, 0, 1]);
    }

    #[test]
    fn short_sentences_score_zero() {
        let r = ribes(&toks("a"), &[toks("a")], DEFAULT_ALPHA, DEFAULT_BETA);
        assert_eq!(r.ribes, 0.0);
        let empty: Vec<&str> = vec![];
        assert_eq!(ribes(&empty, &[toks("a b")], DEFAULT_ALPHA, DEFAULT_BETA).ribes, 0.0);
    }

    #[test]
    fn best_reference_wins() {
        let hyp = toks("a b c d");
        let r = ribes(&hyp, &[toks("d c b a"), toks("a b c d")], DEFAULT_ALPHA, DEFAULT_BETA);
        assert_eq!(r.ribes, 1.0);
    }
}
