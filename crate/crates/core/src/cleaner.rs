//! Language-identification based bitext filtering.
//!
//! A pair is removed when either side is blank, when the classifier finds
//! the concatenated pair to be in neither claimed language, when both sides
//! are predicted to be the same language, or when one side is predicted to
//! be something other than its claimed language. Which of these checks run
//! is chosen by [`CleaningMode`].

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use thiserror::Error;

use crate::corpus::{LangCode, SentencePair};
use crate::langid::LangIdModel;
use crate::text;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CleaningMode {
    /// Classify each side on its own.
    PerSide,
    /// Classify `source + " " + target` once.
    Concat,
    /// Concatenation check, then the per-side checks.
    #[default]
    Both,
}

impl CleaningMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CleaningMode::PerSide => "per_side",
            CleaningMode::Concat => "concat",
            CleaningMode::Both => "both",
        }
    }

    fn runs_concat(self) -> bool {
        matches!(self, CleaningMode::Concat | CleaningMode::Both)
    }

    fn runs_per_side(self) -> bool {
        matches!(self, CleaningMode::PerSide | CleaningMode::Both)
    }
}

impl core::str::FromStr for CleaningMode {
    type Err = CleanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "per_side" | "per-side" => Ok(CleaningMode::PerSide),
            "concat" => Ok(CleaningMode::Concat),
            "both" => Ok(CleaningMode::Both),
            _ => Err(CleanError::UnknownMode(String::from(s))),
        }
    }
}

impl fmt::Display for CleaningMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Why a pair was kept or removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Reason {
    Kept,
    SameLanguagePredicted,
    SourceLangMismatch,
    TargetLangMismatch,
    ConcatLangMismatch,
    EmptySide,
}

impl Reason {
    pub const REMOVALS: [Reason; 5] = [
        Reason::SameLanguagePredicted,
        Reason::SourceLangMismatch,
        Reason::TargetLangMismatch,
        Reason::ConcatLangMismatch,
        Reason::EmptySide,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Reason::Kept => "Kept",
            Reason::SameLanguagePredicted => "SameLanguagePredicted",
            Reason::SourceLangMismatch => "SourceLangMismatch",
            Reason::TargetLangMismatch => "TargetLangMismatch",
            Reason::ConcatLangMismatch => "ConcatLangMismatch",
            Reason::EmptySide => "EmptySide",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CleanError {
    #[error("pair {index}: language `{lang}` is not known to the model")]
    UnknownLanguage { index: usize, lang: LangCode },
    #[error("pair {index}: source and target both claim `{lang}`")]
    SameClaimedLanguage { index: usize, lang: LangCode },
    #[error("decision for pair {0} has no matching sentence pair")]
    IndexMismatch(usize),
    #[error("unknown cleaning mode `{0}` (expected per_side, concat or both)")]
    UnknownMode(String),
}

/// Verdict for one pair. Predictions are present exactly for the checks
/// that ran before the verdict was reached.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CleaningDecision {
    pub index: usize,
    pub keep: bool,
    pub reason: Reason,
    pub predicted_source: Option<LangCode>,
    pub predicted_target: Option<LangCode>,
    pub predicted_concat: Option<LangCode>,
}

/// Tally of a cleaning run.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CleaningReport {
    pub total: u64,
    pub kept: u64,
    pub removed_by_reason: BTreeMap<Reason, u64>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none", default))]
    pub decisions: Option<Vec<CleaningDecision>>,
}

impl CleaningReport {
    pub fn new(keep_decisions: bool) -> Self {
        CleaningReport {
            total: 0,
            kept: 0,
            removed_by_reason: Reason::REMOVALS.iter().map(|&r| (r, 0)).collect(),
            decisions: keep_decisions.then(Vec::new),
        }
    }

    pub fn record(&mut self, decision: CleaningDecision) {
        self.total += 1;
        if decision.keep {
            self.kept += 1;
        } else {
            *self.removed_by_reason.entry(decision.reason).or_insert(0) += 1;
        }
        if let Some(all) = &mut self.decisions {
            all.push(decision);
        }
    }

    pub fn removed(&self) -> u64 {
        self.removed_by_reason.values().sum()
    }
}

/// Decides a single pair. Pure given the model, so callers may fan pairs
/// out across threads as long as they restore input order afterwards.
pub fn decide(
    pair: &SentencePair,
    model: &LangIdModel,
    mode: CleaningMode,
) -> Result<CleaningDecision, CleanError> {
    for lang in [&pair.src_lang, &pair.tgt_lang] {
        if model.language_index(lang).is_none() {
            return Err(CleanError::UnknownLanguage { index: pair.index, lang: lang.clone() });
        }
    }
    if pair.src_lang == pair.tgt_lang {
        return Err(CleanError::SameClaimedLanguage {
            index: pair.index,
            lang: pair.src_lang.clone(),
        });
    }

    let mut d = CleaningDecision {
        index: pair.index,
        keep: false,
        reason: Reason::EmptySide,
        predicted_source: None,
        predicted_target: None,
        predicted_concat: None,
    };
    if text::is_blank(&pair.source) || text::is_blank(&pair.target) {
        return Ok(d);
    }

    if mode.runs_concat() {
        let concat = model.classify_pair_concat(pair).lang;
        let ok = concat == pair.src_lang || concat == pair.tgt_lang;
        d.predicted_concat = Some(concat);
        if !ok {
            d.reason = Reason::ConcatLangMismatch;
            return Ok(d);
        }
    }

    if mode.runs_per_side() {
        let src = model.classify(&pair.source).lang;
        let tgt = model.classify(&pair.target).lang;
        let reason = if src == tgt {
            Some(Reason::SameLanguagePredicted)
        } else if src != pair.src_lang {
            Some(Reason::SourceLangMismatch)
        } else if tgt != pair.tgt_lang {
            Some(Reason::TargetLangMismatch)
        } else {
            None
        };
        d.predicted_source = Some(src);
        d.predicted_target = Some(tgt);
        if let Some(r) = reason {
            d.reason = r;
            return Ok(d);
        }
    }

    d.keep = true;
    d.reason = Reason::Kept;
    Ok(d)
}

/// Sequential cleaning: kept pairs in input order plus the run's report.
pub fn clean<I>(
    pairs: I,
    model: &LangIdModel,
    mode: CleaningMode,
    keep_decisions: bool,
) -> Result<(Vec<SentencePair>, CleaningReport), CleanError>
where
    I: IntoIterator<Item = SentencePair>,
{
    let mut kept = Vec::new();
    let mut report = CleaningReport::new(keep_decisions);
    for pair in pairs {
        let d = decide(&pair, model, mode)?;
        if d.keep {
            kept.push(pair);
        }
        report.record(d);
    }
    Ok((kept, report))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AuditFormat {
    #[default]
    Tsv,
    Aligned,
}

/// One audit row: the offending text with its claimed and predicted language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditRow {
    pub index: usize,
    pub sentence: String,
    pub claimed: String,
    pub predicted: String,
    pub reason: Reason,
}

pub const AUDIT_HEADER: [&str; 5] = ["index", "sentence", "claimed", "predicted", "reason"];

fn side_row(index: usize, text: &str, claimed: &LangCode, predicted: Option<&LangCode>, reason: Reason) -> AuditRow {
    AuditRow {
        index,
        sentence: String::from(text),
        claimed: String::from(claimed.as_str()),
        predicted: predicted.map_or_else(|| String::from("-"), |p| String::from(p.as_str())),
        reason,
    }
}

/// Rows for removed pairs in index order.
pub fn audit_rows(
    decisions: &[CleaningDecision],
    pairs: &[SentencePair],
) -> Result<Vec<AuditRow>, CleanError> {
    let by_index: BTreeMap<usize, &SentencePair> = pairs.iter().map(|p| (p.index, p)).collect();
    let mut removed: Vec<&CleaningDecision> = decisions.iter().filter(|d| !d.keep).collect();
    removed.sort_by_key(|d| d.index);
    let mut rows = Vec::with_capacity(removed.len());
    for d in removed {
        let p = by_index.get(&d.index).ok_or(CleanError::IndexMismatch(d.index))?;
        let row = match d.reason {
            Reason::SourceLangMismatch => {
                side_row(d.index, &p.source, &p.src_lang, d.predicted_source.as_ref(), d.reason)
            }
            Reason::TargetLangMismatch => {
                side_row(d.index, &p.target, &p.tgt_lang, d.predicted_target.as_ref(), d.reason)
            }
            // The side whose prediction disagrees with its claim is the noise.
            Reason::SameLanguagePredicted if d.predicted_source.as_ref() == Some(&p.src_lang) => {
                side_row(d.index, &p.target, &p.tgt_lang, d.predicted_target.as_ref(), d.reason)
            }
            Reason::SameLanguagePredicted => {
                side_row(d.index, &p.source, &p.src_lang, d.predicted_source.as_ref(), d.reason)
            }
            Reason::ConcatLangMismatch | Reason::EmptySide | Reason::Kept => {
                let mut sentence = String::from(p.source.as_str());
                sentence.push_str(" ||| ");
                sentence.push_str(&p.target);
                let mut claimed = String::from(p.src_lang.as_str());
                claimed.push('-');
                claimed.push_str(&p.tgt_lang);
                AuditRow {
                    index: d.index,
                    sentence,
                    claimed,
                    predicted: d
                        .predicted_concat
                        .as_ref()
                        .map_or_else(|| String::from("-"), |l| String::from(l.as_str())),
                    reason: d.reason,
                }
            }
        };
        rows.push(row);
    }
    Ok(rows)
}

/// Renders removed pairs as a table: header first, then one row per removal.
pub fn audit_table(
    decisions: &[CleaningDecision],
    pairs: &[SentencePair],
    format: AuditFormat,
) -> Result<String, CleanError> {
    let rows = audit_rows(decisions, pairs)?;
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            [
                alloc::format!("{}", r.index),
                r.sentence.replace('\t', " "),
                r.claimed.clone(),
                r.predicted.clone(),
                String::from(r.reason.as_str()),
            ]
        })
        .collect();
    let mut out = String::new();
    match format {
        AuditFormat::Tsv => {
            out.push_str(&AUDIT_HEADER.join("\t"));
            out.push('\n');
            for row in &cells {
                out.push_str(&row.join("\t"));
                out.push('\n');
            }
        }
        AuditFormat::Aligned => {
            let mut widths: [usize; 5] = AUDIT_HEADER.map(|h| h.chars().count());
            for row in &cells {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let mut line = |row: &[&str]| {
                let mut l = String::new();
                for (i, (c, w)) in row.iter().zip(widths).enumerate() {
                    if i + 1 == row.len() {
                        l.push_str(c);
                    } else {
                        let _ = write!(l, "{}{:pad$}  ", c, "", pad = w - c.chars().count());
                    }
                }
                out.push_str(l.trim_end());
                out.push('\n');
            };
            line(&AUDIT_HEADER);
            for row in &cells {
                let refs: Vec<&str> = row.iter().map(String::as_str).collect();
                line(&refs);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::langid::TrainConfig;
    use alloc::borrow::ToOwned;
    use alloc::vec;

    // Three toy "languages" with disjoint alphabets keep verdicts obvious.
    fn model() -> LangIdModel {
        let seed = |words: &[&str]| -> Vec<String> {
            (0..12).map(|i| words[i % words.len()].to_owned()).collect()
        };
        LangIdModel::train(
            &[
                (LangCode::from("aa"), seed(&["abc abd", "bad cab", "dab acd"])),
                (LangCode::from("xx"), seed(&["xyz xyw", "wyx zyx", "yxw zwy"])),
                (LangCode::from("mm"), seed(&["mno mnp", "pon onm", "nmp mpo"])),
            ],
            &TrainConfig::default(),
        )
        .unwrap()
    }

    fn pair(i: usize, s: &str, t: &str) -> SentencePair {
        SentencePair::new(i, s, t, "aa", "xx")
    }

    #[test]
    fn clean_pair_is_kept_with_all_predictions() {
        let d = decide(&pair(0, "abc bad cab dab", "xyz wyx"), &model(), CleaningMode::Both).unwrap();
        assert!(d.keep);
        assert_eq!(d.reason, Reason::Kept);
        assert_eq!(d.predicted_concat.as_deref(), Some("aa"));
        assert_eq!(d.predicted_source.as_deref(), Some("aa"));
        assert_eq!(d.predicted_target.as_deref(), Some("xx"));
    }

    #[test]
    fn copied_source_is_same_language() {
        let d = decide(&pair(0, "abc bad", "abc bad"), &model(), CleaningMode::PerSide).unwrap();
        assert_eq!(d.reason, Reason::SameLanguagePredicted);
        assert_eq!(d.predicted_concat, None);
        // Concat alone cannot see this kind of noise.
        let d = decide(&pair(0, "abc bad", "abc bad"), &model(), CleaningMode::Concat).unwrap();
        assert!(d.keep);
    }

    #[test]
    fn mismatch_reasons() {
        let m = model();
        let d = decide(&pair(0, "mno pon", "xyz"), &m, CleaningMode::PerSide).unwrap();
        assert_eq!(d.reason, Reason::SourceLangMismatch);
        let d = decide(&pair(0, "abc", "mno pon"), &m, CleaningMode::PerSide).unwrap();
        assert_eq!(d.reason, Reason::TargetLangMismatch);
        let d = decide(&pair(0, "mno pon", "nmp mpo"), &m, CleaningMode::Both).unwrap();
        assert_eq!(d.reason, Reason::ConcatLangMismatch);
        assert_eq!(d.predicted_source, None);
    }

    #[test]
    fn blank_sides_are_empty() {
        let d = decide(&pair(3, " \t ", "xyz"), &model(), CleaningMode::Both).unwrap();
        assert_eq!(d.reason, Reason::EmptySide);
        assert!(!d.keep);
        assert_eq!(d.predicted_concat, None);
    }

    #[test]
    fn claimed_language_errors() {
        let m = model();
        let p = SentencePair::new(4, "a", "b", "aa", "zz");
        assert_eq!(
            decide(&p, &m, CleaningMode::Both).unwrap_err(),
            CleanError::UnknownLanguage { index: 4, lang: "zz".into() }
        );
        let p = SentencePair::new(5, "a", "b", "aa", "aa");
        assert!(matches!(
            decide(&p, &m, CleaningMode::Both),
            Err(CleanError::SameClaimedLanguage { index: 5, .. })
        ));
    }

    #[test]
    fn report_conserves_pairs() {
        let pairs = vec![
            pair(0, "abc", "xyz"),
            pair(1, "abc", "abc"),
            pair(2, "", "xyz"),
            pair(3, "bad", "wyx"),
        ];
        let (kept, report) = clean(pairs, &model(), CleaningMode::Both, true).unwrap();
        assert_eq!(kept.iter().map(|p| p.index).collect::<Vec<_>>(), vec![0, 3]);
        assert_eq!(report.total, 4);
        assert_eq!(report.kept + report.removed(), report.total);
        assert_eq!(report.removed_by_reason[&Reason::EmptySide], 1);
        assert_eq!(report.removed_by_reason[&Reason::SameLanguagePredicted], 1);
        assert_eq!(report.decisions.as_ref().unwrap().len(), 4);
    }

    #[test]
    fn audit_rows_follow_removals() {
        let pairs = vec![pair(0, "abc", "xyz"), pair(1, "abc bad", "abc bad")];
        let (_, report) = clean(pairs.clone(), &model(), CleaningMode::Both, true).unwrap();
        let table = audit_table(report.decisions.as_ref().unwrap(), &pairs, AuditFormat::Tsv).unwrap();
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines[0], "index\tsentence\tclaimed\tpredicted\treason");
        assert_eq!(lines[1], "1\tabc bad\txx\taa\tSameLanguagePredicted");
        assert_eq!(lines.len(), 2);
    }

    #[test]
    fn audit_without_removals_is_header_only() {
        let pairs = vec![pair(0, "abc", "xyz")];
        let (_, report) = clean(pairs.clone(), &model(), CleaningMode::Both, true).unwrap();
        let d = report.decisions.unwrap();
        assert_eq!(audit_table(&d, &pairs, AuditFormat::Tsv).unwrap().lines().count(), 1);
        assert_eq!(audit_table(&d, &pairs, AuditFormat::Aligned).unwrap().lines().count(), 1);
    }

    #[test]
    fn audit_index_mismatch() {
        let d = CleaningDecision {
            index: 9,
            keep: false,
            reason: Reason::EmptySide,
            predicted_source: None,
            predicted_target: None,
            predicted_concat: None,
        };
        assert_eq!(
            audit_table(&[d], &[pair(0, "a", "b")], AuditFormat::Tsv).unwrap_err(),
            CleanError::IndexMismatch(9)
        );
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("both".parse::<CleaningMode>().unwrap(), CleaningMode::Both);
        assert_eq!("per_side".parse::<CleaningMode>().unwrap(), CleaningMode::PerSide);
        assert!("all".parse::<CleaningMode>().is_err());
    }
}
