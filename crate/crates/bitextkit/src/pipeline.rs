//! End-to-end runs driven by a [`PipelineConfig`].
//!
//! `prep`: stats -> clean -> tokenize. `eval`: detokenize -> score ->
//! cognates (when a source file is configured). Each stage writes its
//! outputs and a JSON report into `out_dir`; `manifest.json` lists the
//! stages in order with SHA-256 hashes of every input and output.

use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::Context;
use bitextkit_core::cognates::{self, CognateConfig, CognateReport};
use bitextkit_core::metrics::{MetricConfig, TerConfig};
use bitextkit_core::{
    detokenize, resolve_rules, text, CleaningDecision, CleaningReport, Reason, SentencePair,
    TokenizerRules,
};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::{PipelineConfig, Run};
use crate::exec::Workers;
use crate::report::{self, MetricToggles, ScoreBody};
use crate::{io, model_file};

#[derive(Debug, thiserror::Error)]
#[error("stage `{stage}` failed: {source:#}")]
pub struct PipelineError {
    pub stage: &'static str,
    pub source: anyhow::Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct FileHash {
    pub path: PathBuf,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct StageRecord {
    pub name: &'static str,
    pub inputs: Vec<FileHash>,
    pub outputs: Vec<FileHash>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Manifest {
    pub tool_version: &'static str,
    pub run: Run,
    /// Seconds since the Unix epoch; the only field that varies between
    /// identical runs.
    pub created_unix: u64,
    pub stages: Vec<StageRecord>,
}

pub fn sha256_file(path: &Path) -> anyhow::Result<FileHash> {
    let bytes = std::fs::read(path).with_context(|| format!("hashing {}", path.display()))?;
    let digest = Sha256::digest(&bytes);
    let sha256 = digest.iter().map(|b| format!("{b:02x}")).collect();
    Ok(FileHash { path: path.to_path_buf(), sha256 })
}

fn hashes(paths: &[PathBuf]) -> anyhow::Result<Vec<FileHash>> {
    paths.iter().map(|p| sha256_file(p)).collect()
}

struct Runner<'a> {
    cfg: &'a PipelineConfig,
    echo: serde_json::Value,
    workers: Workers,
    stages: Vec<StageRecord>,
}

impl Runner<'_> {
    fn out(&self, name: &str) -> PathBuf {
        self.cfg.out_dir.join(name)
    }

    fn stage(
        &mut self,
        name: &'static str,
        body: impl FnOnce(&Self) -> anyhow::Result<(Vec<PathBuf>, Vec<PathBuf>)>,
    ) -> Result<(), PipelineError> {
        let fail = |source| PipelineError { stage: name, source };
        let (inputs, outputs) = body(self).map_err(fail)?;
        let record = StageRecord {
            name,
            inputs: hashes(&inputs).map_err(fail)?,
            outputs: hashes(&outputs).map_err(fail)?,
        };
        self.stages.push(record);
        Ok(())
    }

    fn rules(&self, lang: &str, other: &str) -> anyhow::Result<TokenizerRules> {
        resolve_rules(lang, other)
            .with_aggressive_hyphen(self.cfg.aggressive_hyphen)
            .with_protected_patterns(self.cfg.protected_patterns.iter().map(String::as_str))
            .map_err(anyhow::Error::msg)
    }

    fn corpus_inputs(&self) -> Vec<PathBuf> {
        match &self.cfg.corpus_tsv {
            Some(t) => vec![t.clone()],
            None => [&self.cfg.corpus_src, &self.cfg.corpus_tgt].into_iter().flatten().cloned().collect(),
        }
    }

    fn read_corpus(&self) -> anyhow::Result<Vec<SentencePair>> {
        let (s, t) = (&self.cfg.src_lang, &self.cfg.tgt_lang);
        Ok(match (&self.cfg.corpus_tsv, &self.cfg.corpus_src, &self.cfg.corpus_tgt) {
            (Some(tsv), _, _) => io::read_tsv_all(tsv, s.as_str(), t.as_str())?,
            (None, Some(src), Some(tgt)) => io::read_parallel_all(src, tgt, s.as_str(), t.as_str())?,
            _ => anyhow::bail!("no corpus configured"),
        })
    }
}

fn side_names(cfg: &PipelineConfig, prefix: &str) -> (String, String) {
    (format!("{prefix}.{}", cfg.src_lang), format!("{prefix}.{}", cfg.tgt_lang))
}

pub fn run_pipeline(cfg: &PipelineConfig) -> Result<Manifest, PipelineError> {
    let setup = |source| PipelineError { stage: "setup", source };
    std::fs::create_dir_all(&cfg.out_dir)
        .with_context(|| format!("creating {}", cfg.out_dir.display()))
        .map_err(setup)?;
    let mut runner = Runner {
        cfg,
        echo: serde_json::to_value(cfg).expect("config serializes"),
        workers: Workers::new(cfg.worker_count).map_err(|e| setup(e.into()))?,
        stages: Vec::new(),
    };
    match cfg.run {
        Run::Prep => prep(&mut runner)?,
        Run::Eval => eval(&mut runner)?,
    }
    let manifest = Manifest {
        tool_version: report::TOOL_VERSION,
        run: cfg.run,
        created_unix: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
        stages: runner.stages,
    };
    let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n";
    std::fs::write(cfg.out_dir.join("manifest.json"), json)
        .context("writing manifest")
        .map_err(|source| PipelineError { stage: "manifest", source })?;
    Ok(manifest)
}

fn prep(r: &mut Runner<'_>) -> Result<(), PipelineError> {
    r.stage("stats", |r| {
        let pairs = r.read_corpus()?;
        let out = r.out("stats.json");
        report::write(&out, "stats", &r.echo, &r.workers.stats(&pairs))?;
        Ok((r.corpus_inputs(), vec![out]))
    })?;

    r.stage("clean", |r| {
        let pairs = r.read_corpus()?;
        let (kept, report) = if r.cfg.no_clean {
            pass_through(pairs, r.cfg.full_report)
        } else {
            let model_path = r.cfg.model.as_ref().context("no model configured")?;
            let model = model_file::load_model(model_path)?;
            r.workers.clean(pairs, &model, r.cfg.cleaning_mode(), r.cfg.full_report)?
        };
        let (s, t) = side_names(r.cfg, "clean");
        let (s, t) = (r.out(&s), r.out(&t));
        io::write_parallel(&kept, &s, &t)?;
        let report_path = r.out("clean.json");
        report::write(&report_path, "clean", &r.echo, &report)?;
        let stats_path = r.out("stats.clean.json");
        report::write(&stats_path, "stats", &r.echo, &r.workers.stats(&kept))?;
        let mut inputs = r.corpus_inputs();
        inputs.extend(r.cfg.model.iter().filter(|_| !r.cfg.no_clean).cloned());
        Ok((inputs, vec![s, t, report_path, stats_path]))
    })?;

    r.stage("tokenize", |r| {
        let (cs, ct) = side_names(r.cfg, "clean");
        let (cs, ct) = (r.out(&cs), r.out(&ct));
        let pairs = io::read_parallel_all(&cs, &ct, r.cfg.src_lang.as_str(), r.cfg.tgt_lang.as_str())?;
        let src_rules = r.rules(&r.cfg.src_lang, &r.cfg.tgt_lang)?;
        let tgt_rules = r.rules(&r.cfg.tgt_lang, &r.cfg.src_lang)?;
        let tokenized = r.workers.map(&pairs, |p| {
            let mut q = p.clone();
            q.source = bitextkit_core::tokenize(&p.source, &src_rules).join(" ");
            q.target = bitextkit_core::tokenize(&p.target, &tgt_rules).join(" ");
            q
        });
        let (s, t) = side_names(r.cfg, "tok");
        let (s, t) = (r.out(&s), r.out(&t));
        io::write_parallel(&tokenized, &s, &t)?;
        let stats_path = r.out("stats.tok.json");
        report::write(&stats_path, "stats", &r.echo, &r.workers.stats(&tokenized))?;
        Ok((vec![cs, ct], vec![s, t, stats_path]))
    })
}

fn pass_through(pairs: Vec<SentencePair>, keep_decisions: bool) -> (Vec<SentencePair>, CleaningReport) {
    let mut report = CleaningReport::new(keep_decisions);
    for p in &pairs {
        report.record(CleaningDecision {
            index: p.index,
            keep: true,
            reason: Reason::Kept,
            predicted_source: None,
            predicted_target: None,
            predicted_concat: None,
        });
    }
    (pairs, report)
}

fn eval(r: &mut Runner<'_>) -> Result<(), PipelineError> {
    let detok_path = r.out("hyp.detok");
    r.stage("detokenize", |r| {
        let hyp = r.cfg.hyp.clone().context("no hypothesis configured")?;
        let rules = r.rules(&r.cfg.tgt_lang, &r.cfg.src_lang)?;
        let lines = io::read_lines(&hyp)?;
        let detok = r.workers.map(&lines, |l| detokenize(&text::words(l).collect::<Vec<_>>(), &rules));
        io::write_lines(&detok, &detok_path)?;
        Ok((vec![hyp], vec![detok_path.clone()]))
    })?;

    r.stage("score", |r| {
        let rules = r.rules(&r.cfg.tgt_lang, &r.cfg.src_lang)?;
        let hyp = r.workers.tokenize(&io::read_lines(&detok_path)?, &rules);
        let refs = read_references(r, &r.cfg.refs, &rules, hyp.len())?;
        let metric_cfg = MetricConfig {
            ter: TerConfig { shifts: r.cfg.ter_shifts, ..TerConfig::default() },
            ..MetricConfig::default()
        };
        let toggles = MetricToggles { bleu: r.cfg.bleu, ribes: r.cfg.ribes, ter: r.cfg.ter };
        let result = r.workers.score(&hyp, &refs, &metric_cfg)?;
        let out = r.out("score.json");
        report::write(&out, "score", &r.echo, &ScoreBody::new(&result, toggles))?;
        let mut inputs = vec![detok_path.clone()];
        inputs.extend(r.cfg.refs.iter().cloned());
        Ok((inputs, vec![out]))
    })?;

    if r.cfg.source.is_some() {
        r.stage("cognates", |r| {
            let source_path = r.cfg.source.clone().context("no source configured")?;
            let src_rules = r.rules(&r.cfg.src_lang, &r.cfg.tgt_lang)?;
            let tgt_rules = r.rules(&r.cfg.tgt_lang, &r.cfg.src_lang)?;
            let source = r.workers.tokenize(&io::read_lines(&source_path)?, &src_rules);
            let reference = r.workers.tokenize(&io::read_lines(&r.cfg.refs[0])?, &tgt_rules);
            let system = r.workers.tokenize(&io::read_lines(&detok_path)?, &tgt_rules);
            let cfg = CognateConfig { threshold: r.cfg.cognate_threshold, min_len: r.cfg.cognate_min_len };
            let extraction = r.workers.cognates(&source, &reference, &cfg)?;
            let report: CognateReport = cognates::preservation(&extraction, &system, &cfg)?;
            let out = r.out("cognates.json");
            report::write(&out, "cognates", &r.echo, &report)?;
            let dump = r.out("cognates.tsv");
            std::fs::write(&dump, crate::cognate_dump(&extraction.pairs))?;
            Ok((vec![source_path, r.cfg.refs[0].clone(), detok_path.clone()], vec![out, dump]))
        })?;
    }
    Ok(())
}

/// Tokenized references regrouped per segment: `[segment][reference]`.
fn read_references(
    r: &Runner<'_>,
    paths: &[PathBuf],
    rules: &TokenizerRules,
    segments: usize,
) -> anyhow::Result<Vec<Vec<Vec<String>>>> {
    let mut grouped: Vec<Vec<Vec<String>>> = vec![Vec::with_capacity(paths.len()); segments];
    for p in paths {
        let lines = io::read_lines(p)?;
        anyhow::ensure!(
            lines.len() == segments,
            "{} has {} lines but the hypothesis has {segments}",
            p.display(),
            lines.len()
        );
        for (seg, toks) in grouped.iter_mut().zip(r.workers.tokenize(&lines, rules)) {
            seg.push(toks);
        }
    }
    Ok(grouped)
}
