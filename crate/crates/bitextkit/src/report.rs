//! JSON reports. Every report carries the tool version and an echo of the
//! configuration that produced it.

use std::path::Path;

use bitextkit_core::metrics::{MetricReport, TerEdits};
use serde::Serialize;
use serde_json::Value;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
struct Envelope<'a, T> {
    tool_version: &'static str,
    command: &'a str,
    config_echo: &'a Value,
    #[serde(flatten)]
    body: &'a T,
}

/// Pretty JSON with a trailing newline. Key order is fixed by the types,
/// so equal inputs give byte-identical output.
pub fn render<T: Serialize>(command: &str, config_echo: &Value, body: &T) -> String {
    let env = Envelope { tool_version: TOOL_VERSION, command, config_echo, body };
    let mut s = serde_json::to_string_pretty(&env).expect("report types serialize");
    s.push('\n');
    s
}

pub fn write<T: Serialize>(path: &Path, command: &str, config_echo: &Value, body: &T) -> std::io::Result<()> {
    std::fs::write(path, render(command, config_echo, body))
}

/// Flat score report. Disabled metrics are omitted.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScoreBody {
    pub segments: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bleu: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precisions: Option<[f64; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brevity_penalty: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hyp_len: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ref_len: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ribes: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nkt: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unigram_precision: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ribes_brevity_penalty: Option<f64>,
    /// Fraction, not percent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ter: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edits: Option<TerEdits>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ter_ref_len: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MetricToggles {
    pub bleu: bool,
    pub ribes: bool,
    pub ter: bool,
}

impl Default for MetricToggles {
    fn default() -> Self {
        MetricToggles { bleu: true, ribes: true, ter: true }
    }
}

impl ScoreBody {
    pub fn new(r: &MetricReport, on: MetricToggles) -> Self {
        let b = on.bleu.then_some(&r.bleu);
        let ri = on.ribes.then_some(&r.ribes);
        let t = on.ter.then_some(&r.ter);
        ScoreBody {
            segments: r.segments,
            bleu: b.map(|b| b.bleu),
            precisions: b.map(|b| b.precisions),
            brevity_penalty: b.map(|b| b.brevity_penalty),
            hyp_len: b.map(|b| b.hyp_len),
            ref_len: b.map(|b| b.ref_len),
            ribes: ri.map(|r| r.ribes),
            nkt: ri.map(|r| r.nkt),
            unigram_precision: ri.map(|r| r.unigram_precision),
            ribes_brevity_penalty: ri.map(|r| r.bp),
            ter: t.map(|t| t.ter),
            edits: t.map(|t| t.edits),
            ter_ref_len: t.map(|t| t.ref_len),
        }
    }
}
