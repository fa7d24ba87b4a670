//! Translation edit rate: word-level edit distance plus block shifts.

use alloc::vec;
use alloc::vec::Vec;

/// Edits that turn the hypothesis into the reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TerEdits {
    /// Reference words missing from the hypothesis.
    pub ins: u64,
    /// Extra hypothesis words.
    pub del: u64,
    pub sub: u64,
    pub shift: u64,
}

impl TerEdits {
    pub fn total(&self) -> u64 {
        self.ins + self.del + self.sub + self.shift
    }

    pub fn add(&mut self, other: &TerEdits) {
        self.ins += other.ins;
        self.del += other.del;
        self.sub += other.sub;
        self.shift += other.shift;
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TerScore {
    /// Edits per reference word, as a fraction.
    pub ter: f64,
    pub edits: TerEdits,
    /// Average reference length.
    pub ref_len: f64,
}

impl TerScore {
    /// `edits / ref_len`; with an empty reference any edit scores 1.
    pub fn from_parts(edits: TerEdits, ref_len: f64) -> Self {
        let total = edits.total() as f64;
        let ter = if ref_len > 0.0 {
            total / ref_len
        } else if total > 0.0 {
            1.0
        } else {
            0.0
        };
        TerScore { ter, edits, ref_len }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TerConfig {
    pub shifts: bool,
    /// Longest block, in words, considered for a shift.
    pub max_shift_size: usize,
    /// Furthest a block may move, in words; `None` is unbounded.
    pub max_shift_distance: Option<usize>,
}

impl Default for TerConfig {
    fn default() -> Self {
        TerConfig { shifts: true, max_shift_size: 10, max_shift_distance: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Match,
    Sub,
    /// Hypothesis word with no reference counterpart.
    Del,
    /// Reference word with no hypothesis counterpart.
    Ins,
}

fn distance_table(h: &[&str], r: &[&str]) -> Vec<Vec<u32>> {
    let mut d = vec![vec![0u32; r.len() + 1]; h.len() + 1];
    for (i, row) in d.iter_mut().enumerate() {
        row[0] = i as u32;
    }
    for j in 0..=r.len() {
        d[0][j] = j as u32;
    }
    for i in 1..=h.len() {
        for j in 1..=r.len() {
            let diag = d[i - 1][j - 1] + u32::from(h[i - 1] != r[j - 1]);
            d[i][j] = diag.min(d[i - 1][j] + 1).min(d[i][j - 1] + 1);
        }
    }
    d
}

fn distance(h: &[&str], r: &[&str]) -> u32 {
    // two-row variant for the shift search
    let mut prev: Vec<u32> = (0..=r.len() as u32).collect();
    let mut cur = vec![0u32; r.len() + 1];
    for i in 1..=h.len() {
        cur[0] = i as u32;
        for j in 1..=r.len() {
            let diag = prev[j - 1] + u32::from(h[i - 1] != r[j - 1]);
            cur[j] = diag.min(prev[j] + 1).min(cur[j - 1] + 1);
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    prev[r.len()]
}

/// Minimal edit path, from the start of both sequences. Diagonal steps are
/// preferred, then deletions.
fn alignment(h: &[&str], r: &[&str]) -> Vec<Op> {
    let d = distance_table(h, r);
    let (mut i, mut j) = (h.len(), r.len());
    let mut ops = Vec::with_capacity(i.max(j));
    while i > 0 || j > 0 {
        if i > 0 && j > 0 {
            let same = h[i - 1] == r[j - 1];
            if d[i][j] == d[i - 1][j - 1] + u32::from(!same) {
                ops.push(if same { Op::Match } else { Op::Sub });
                i -= 1;
                j -= 1;
                continue;
            }
        }
        if i > 0 && d[i][j] == d[i - 1][j] + 1 {
            ops.push(Op::Del);
            i -= 1;
        } else {
            ops.push(Op::Ins);
            j -= 1;
        }
    }
    ops.reverse();
    ops
}

struct Shift {
    start: usize,
    len: usize,
    dest: usize,
    gain: u32,
}

/// Greedy block-shift search: repeatedly applies the shift that lowers the
/// edit distance the most, as long as the reduction exceeds the cost of the
/// shift itself. A candidate block must occur verbatim in the reference and
/// cover at least one misaligned word on both sides; it moves to where the
/// current alignment places the matching reference span.
fn best_shift(h: &[&str], r: &[&str], current: u32, cfg: &TerConfig) -> Option<Shift> {
    let ops = alignment(h, r);
    let mut herr = vec![false; h.len()];
    let mut rerr = vec![false; r.len()];
    let mut ralign = vec![0usize; r.len()];
    let (mut i, mut j) = (0, 0);
    for op in ops {
        match op {
            Op::Match | Op::Sub => {
                herr[i] = op == Op::Sub;
                rerr[j] = op == Op::Sub;
                ralign[j] = i;
                i += 1;
                j += 1;
            }
            Op::Del => {
                herr[i] = true;
                i += 1;
            }
            Op::Ins => {
                rerr[j] = true;
                ralign[j] = i;
                j += 1;
            }
        }
    }

    let mut best: Option<Shift> = None;
    let mut buf: Vec<&str> = Vec::with_capacity(h.len());
    for start in 0..h.len() {
        for len in 1..=cfg.max_shift_size.min(h.len() - start) {
            let block = &h[start..start + len];
            if !herr[start..start + len].iter().any(|&e| e) {
                continue;
            }
            if r.len() < len {
                break;
            }
            for rs in 0..=r.len() - len {
                if &r[rs..rs + len] != block || !rerr[rs..rs + len].iter().any(|&e| e) {
                    continue;
                }
                let dest = ralign[rs];
                if (start..=start + len).contains(&dest) {
                    continue;
                }
                if let Some(max) = cfg.max_shift_distance {
                    if dest.abs_diff(start) > max {
                        continue;
                    }
                }
                apply(h, start, len, dest, &mut buf);
                let after = distance(&buf, r);
                if after + 1 >= current {
                    continue;
                }
                let gain = current - after;
                let better = match &best {
                    None => true,
                    Some(b) => gain > b.gain || (gain == b.gain && len > b.len),
                };
                if better {
                    best = Some(Shift { start, len, dest, gain });
                }
            }
        }
    }
    best
}

/// Moves `h[start..start+len]` so it sits before original position `dest`.
fn apply<'a>(h: &[&'a str], start: usize, len: usize, dest: usize, out: &mut Vec<&'a str>) {
    out.clear();
    let block = &h[start..start + len];
    if dest < start {
        out.extend_from_slice(&h[..dest]);
        out.extend_from_slice(block);
        out.extend_from_slice(&h[dest..start]);
        out.extend_from_slice(&h[start + len..]);
    } else {
        out.extend_from_slice(&h[..start]);
        out.extend_from_slice(&h[start + len..dest]);
        out.extend_from_slice(block);
        out.extend_from_slice(&h[dest..]);
    }
}

/// Edits against a single reference.
pub fn edits_against<T: AsRef<str>>(hyp: &[T], reference: &[T], cfg: &TerConfig) -> TerEdits {
    let mut h: Vec<&str> = hyp.iter().map(AsRef::as_ref).collect();
    let r: Vec<&str> = reference.iter().map(AsRef::as_ref).collect();
    let mut edits = TerEdits::default();
    if cfg.shifts {
        let mut current = distance(&h, &r);
        let mut buf = Vec::with_capacity(h.len());
        while let Some(s) = best_shift(&h, &r, current, cfg) {
            apply(&h, s.start, s.len, s.dest, &mut buf);
            core::mem::swap(&mut h, &mut buf);
            current -= s.gain;
            edits.shift += 1;
        }
    }
    for op in alignment(&h, &r) {
        match op {
            Op::Match => {}
            Op::Sub => edits.sub += 1,
            Op::Del => edits.del += 1,
            Op::Ins => edits.ins += 1,
        }
    }
    edits
}

/// Sentence TER: edits against the closest reference, normalized by the
/// average reference length.
pub fn ter_with<T: AsRef<str>>(hyp: &[T], refs: &[Vec<T>], cfg: &TerConfig) -> TerScore {
    let mut best: Option<TerEdits> = None;
    for reference in refs {
        let e = edits_against(hyp, reference, cfg);
        if best.is_none_or(|b| e.total() < b.total()) {
            best = Some(e);
        }
    }
    let ref_len = if refs.is_empty() {
        0.0
    } else {
        refs.iter().map(|r| r.len() as f64).sum::<f64>() / refs.len() as f64
    };
    TerScore::from_parts(best.unwrap_or_default(), ref_len)
}

pub fn ter<T: AsRef<str>>(hyp: &[T], refs: &[Vec<T>]) -> TerScore {
    ter_with(hyp, refs, &TerConfig::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<&str> {
        s.split_whitespace().collect()
    }

    fn no_shift() -> TerConfig {
        TerConfig { shifts: false, ..TerConfig::default() }
    }

    #[test]
    fn one_substitution() {
        let t = ter_with(&toks("a b c"), &[toks("a x c")], &no_shift());
        assert_eq!(t.ter, 1.0 / 3.0);
        assert_eq!(t.edits, TerEdits { sub: 1, ..TerEdits::default() });
    }

    #[test]
    fn identity_is_zero() {
        let s = toks("this is a test");
        assert_eq!(ter(&s, core::slice::from_ref(&s)).ter, 0.0);
    }

    #[test]
    fn insertions_and_deletions() {
        let t = ter_with(&toks("a b"), &[toks("a b c d")], &no_shift());
        assert_eq!(t.edits, TerEdits { ins: 2, ..TerEdits::default() });
        let t = ter_with(&toks("a b c d"), &[toks("a b")], &no_shift());
        assert_eq!(t.edits, TerEdits { del: 2, ..TerEdits::default() });
        assert_eq!(t.ter, 1.0);
    }

    #[test]
    fn block_shift_beats_edits() {
        // moving "d e f" to the front costs one shift instead of six edits
        let hyp = toks("a b c d e f");
        let reference = toks("d e f a b c");
        let plain = ter_with(&hyp, core::slice::from_ref(&reference), &no_shift());
        assert_eq!(plain.edits.total(), 6);
        let shifted = ter(&hyp, &[reference]);
        assert_eq!(shifted.edits, TerEdits { shift: 1, ..TerEdits::default() });
    }

    #[test]
    fn swap_becomes_one_shift() {
        let t = ter(&toks("b a"), &[toks("a b")]);
        assert_eq!(t.edits, TerEdits { shift: 1, ..TerEdits::default() });
    }

    #[test]
    fn shift_needs_gain_above_its_cost() {
        // a lone deletion cannot be improved by moving words around
        let t = ter(&toks("b a c"), &[toks("a c")]);
        assert_eq!(t.edits, TerEdits { del: 1, ..TerEdits::default() });
    }

    #[test]
    fn empty_reference() {
        let empty: Vec<&str> = Vec::new();
        assert_eq!(ter(&toks("a"), core::slice::from_ref(&empty)).ter, 1.0);
        assert_eq!(ter(&empty, core::slice::from_ref(&empty)).ter, 0.0);
    }

    #[test]
    fn closest_reference_and_average_length() {
        let t = ter(&toks("a b c"), &[toks("x y z w v"), toks("a b c")]);
        assert_eq!(t.edits.total(), 0);
        assert_eq!(t.ref_len, 4.0);
    }
}
