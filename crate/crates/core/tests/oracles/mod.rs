//! Brute-force reference implementations used to check the optimized code.
//! Shared with the `bitextkit` acceptance suite via `#[path]`.

#![allow(dead_code)]

/// Clipped n-gram matches and totals by naive enumeration.
pub fn ngram_stats(hyp: &[String], refs: &[Vec<String>], n: usize) -> (u64, u64) {
    let grams = |s: &[String]| -> Vec<Vec<String>> {
        if s.len() < n {
            return Vec::new();
        }
        (0..=s.len() - n).map(|i| s[i..i + n].to_vec()).collect()
    };
    let hyp_grams = grams(hyp);
    let mut seen: Vec<Vec<String>> = Vec::new();
    let mut matches = 0u64;
    for g in &hyp_grams {
        if seen.contains(g) {
            continue;
        }
        seen.push(g.clone());
        let in_hyp = hyp_grams.iter().filter(|x| *x == g).count() as u64;
        let max_ref = refs
            .iter()
            .map(|r| grams(r).iter().filter(|x| *x == g).count() as u64)
            .max()
            .unwrap_or(0);
        matches += in_hyp.min(max_ref);
    }
    (matches, hyp_grams.len() as u64)
}

/// (bleu, precisions, brevity penalty) for unsmoothed corpus BLEU.
pub fn bleu(hyps: &[Vec<String>], refs: &[Vec<Vec<String>>]) -> (f64, [f64; 4], f64) {
    let mut m = [0u64; 4];
    let mut t = [0u64; 4];
    let (mut c, mut r) = (0u64, 0u64);
    for (h, rs) in hyps.iter().zip(refs) {
        for n in 1..=4 {
            let (a, b) = ngram_stats(h, rs, n);
            m[n - 1] += a;
            t[n - 1] += b;
        }
        c += h.len() as u64;
        let mut best = rs[0].len() as i64;
        for x in rs {
            let (d, bd) = ((x.len() as i64 - h.len() as i64).abs(), (best - h.len() as i64).abs());
            if d < bd || (d == bd && (x.len() as i64) < best) {
                best = x.len() as i64;
            }
        }
        r += best as u64;
    }
    let mut p = [0.0; 4];
    for n in 0..4 {
        p[n] = if t[n] == 0 { 0.0 } else { m[n] as f64 / t[n] as f64 };
    }
    let bp = if c > r {
        1.0
    } else if c == 0 {
        if r == 0 { 1.0 } else { 0.0 }
    } else {
        (1.0 - r as f64 / c as f64).exp()
    };
    let score = if p.contains(&0.0) {
        0.0
    } else {
        100.0 * bp * (p.iter().map(|x| x.ln()).sum::<f64>() / 4.0).exp()
    };
    (score, p, bp)
}

/// Word-level edit distance by memoized recursion over suffixes.
pub fn edit_distance<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    fn go<T: PartialEq>(a: &[T], b: &[T], i: usize, j: usize, memo: &mut Vec<Vec<Option<usize>>>) -> usize {
        if let Some(v) = memo[i][j] {
            return v;
        }
        let v = if i == a.len() {
            b.len() - j
        } else if j == b.len() {
            a.len() - i
        } else {
            let sub = go(a, b, i + 1, j + 1, memo) + usize::from(a[i] != b[j]);
            sub.min(go(a, b, i + 1, j, memo) + 1).min(go(a, b, i, j + 1, memo) + 1)
        };
        memo[i][j] = Some(v);
        v
    }
    let mut memo = vec![vec![None; b.len() + 1]; a.len() + 1];
    go(a, b, 0, 0, &mut memo)
}

/// Exponential edit distance over characters, for short strings only.
pub fn levenshtein_exhaustive(a: &[char], b: &[char]) -> usize {
    match (a.split_first(), b.split_first()) {
        (None, _) => b.len(),
        (_, None) => a.len(),
        (Some((x, ra)), Some((y, rb))) => {
            let sub = levenshtein_exhaustive(ra, rb) + usize::from(x != y);
            sub.min(levenshtein_exhaustive(ra, b) + 1).min(levenshtein_exhaustive(a, rb) + 1)
        }
    }
}

/// All-pairs ascending fraction; 0 for fewer than two items.
pub fn nkt_all_pairs(order: &[usize]) -> f64 {
    let n = order.len();
    if n < 2 {
        return 0.0;
    }
    let mut up = 0;
    let mut total = 0;
    for i in 0..n {
        for j in 0..n {
            if i < j {
                total += 1;
                if order[i] < order[j] {
                    up += 1;
                }
            }
        }
    }
    up as f64 / total as f64
}

/// Alignment for sentences whose words are distinct on each side: the
/// reference position of every hypothesis word found in the reference.
pub fn distinct_alignment(reference: &[String], hyp: &[String]) -> Vec<usize> {
    hyp.iter().filter_map(|w| reference.iter().position(|r| r == w)).collect()
}
