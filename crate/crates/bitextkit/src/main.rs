use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use bitextkit::config::{self, Layers};
use bitextkit::exec::Workers;
use bitextkit::io::{self as cio, LineReader};
use bitextkit::pipeline;
use bitextkit::report::{self, MetricToggles, ScoreBody};
use bitextkit::{cognate_dump, model_file};
use bitextkit_core::cognates::{self, CognateConfig};
use bitextkit_core::metrics::{MetricConfig, TerConfig};
use bitextkit_core::{
    audit_table, detokenize, resolve_rules, text, AuditFormat, CleaningMode, LangCode, LangIdModel,
    SentencePair, TokenizerRules, TrainConfig,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Bitext cleaning, Moses-style tokenization and MT evaluation.
///
/// Every flag can also be set through a BITEXTKIT_* environment variable
/// (shown per flag); explicit flags win.
#[derive(Parser)]
#[command(name = "bitextkit", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sentence, word and type-token-ratio counts of a parallel corpus.
    Stats(StatsArgs),
    /// Train a character n-gram language identifier from seed files.
    LangidTrain(TrainArgs),
    /// Print `text<TAB>lang<TAB>margin` for every input line.
    LangidClassify(ClassifyArgs),
    /// Remove pairs whose predicted languages contradict the claimed ones.
    Clean(CleanArgs),
    /// Moses-style tokenization, one sentence per line.
    Tokenize(TokenizeArgs),
    /// Undo tokenization, one space-separated sentence per line.
    Detokenize(TokenizeArgs),
    /// BLEU, RIBES and TER of a hypothesis file against references.
    Score(ScoreArgs),
    /// Cognates between source and reference, and how many a system keeps.
    Cognates(CognateArgs),
    /// Run the prep or eval pipeline from a configuration file.
    Pipeline(PipelineArgs),
}

#[derive(Args)]
struct CorpusArgs {
    /// Source side of a two-file corpus.
    #[arg(long, env = "BITEXTKIT_CORPUS_SRC", requires = "tgt", conflicts_with = "tsv")]
    src: Option<PathBuf>,
    /// Target side of a two-file corpus.
    #[arg(long, env = "BITEXTKIT_CORPUS_TGT", requires = "src")]
    tgt: Option<PathBuf>,
    /// TSV corpus (`source<TAB>target`) instead of --src/--tgt.
    #[arg(long, env = "BITEXTKIT_CORPUS_TSV")]
    tsv: Option<PathBuf>,
    /// Claimed source language.
    #[arg(long, env = "BITEXTKIT_SRC_LANG")]
    src_lang: String,
    /// Claimed target language.
    #[arg(long, env = "BITEXTKIT_TGT_LANG")]
    tgt_lang: String,
}

impl CorpusArgs {
    fn read(&self) -> anyhow::Result<Vec<SentencePair>> {
        let (s, t) = (self.src_lang.as_str(), self.tgt_lang.as_str());
        Ok(match (&self.tsv, &self.src, &self.tgt) {
            (Some(tsv), _, _) => cio::read_tsv_all(tsv, s, t)?,
            (None, Some(src), Some(tgt)) => cio::read_parallel_all(src, tgt, s, t)?,
            _ => bail!(Invalid("give --tsv or both --src and --tgt".into())),
        })
    }

    fn echo(&self) -> serde_json::Value {
        json!({ "src": self.src, "tgt": self.tgt, "tsv": self.tsv, "src_lang": self.src_lang, "tgt_lang": self.tgt_lang })
    }
}

#[derive(Args)]
struct WorkerArgs {
    /// Parallel workers; never changes results.
    #[arg(long, env = "BITEXTKIT_WORKER_COUNT", default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    workers: u16,
}

impl WorkerArgs {
    fn pool(&self) -> anyhow::Result<Workers> {
        Ok(Workers::new(self.workers as usize)?)
    }
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Tokenize both sides (Moses rules) before counting.
    #[arg(long, env = "BITEXTKIT_TOKENIZE")]
    tokenize: bool,
    /// Report path; stdout when absent.
    #[arg(long, env = "BITEXTKIT_STATS_OUT")]
    out: Option<PathBuf>,
    #[command(flatten)]
    workers: WorkerArgs,
}

#[derive(Args)]
struct TrainArgs {
    /// `lang=path` seed file, one sentence per line; repeat per language.
    #[arg(long = "seed", required = true, value_name = "LANG=FILE")]
    seeds: Vec<String>,
    /// Model file to write.
    #[arg(long, env = "BITEXTKIT_MODEL")]
    out: PathBuf,
    #[arg(long, env = "BITEXTKIT_NGRAM_MIN", default_value_t = 1)]
    ngram_min: usize,
    #[arg(long, env = "BITEXTKIT_NGRAM_MAX", default_value_t = 4)]
    ngram_max: usize,
    #[arg(long, env = "BITEXTKIT_VOCAB_SIZE", default_value_t = 10_000)]
    vocab_size: usize,
    /// Additive smoothing constant.
    #[arg(long, env = "BITEXTKIT_ALPHA", default_value_t = 0.5)]
    alpha: f64,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, env = "BITEXTKIT_MODEL")]
    model: PathBuf,
    /// Input file; stdin when absent.
    #[arg(long)]
    file: Option<PathBuf>,
    #[command(flatten)]
    workers: WorkerArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum AuditStyle {
    Tsv,
    Aligned,
}

#[derive(Args)]
struct CleanArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Language-identification model (see langid-train).
    #[arg(long, env = "BITEXTKIT_MODEL", required_unless_present = "no_clean")]
    model: Option<PathBuf>,
    /// per_side, concat or both.
    #[arg(long, env = "BITEXTKIT_CLEAN_MODE", default_value = "both")]
    mode: String,
    /// Kept pairs go to <prefix>.<src_lang> and <prefix>.<tgt_lang>.
    #[arg(long, env = "BITEXTKIT_OUT_PREFIX")]
    out_prefix: PathBuf,
    /// Report path; stdout when absent.
    #[arg(long, env = "BITEXTKIT_REPORT")]
    report: Option<PathBuf>,
    /// Include every per-pair decision in the report.
    #[arg(long, env = "BITEXTKIT_FULL_REPORT")]
    full_report: bool,
    /// Table of removed pairs (index, sentence, claimed, predicted, reason).
    #[arg(long)]
    audit: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "tsv")]
    audit_format: AuditStyle,
    /// Keep every pair (for corpora too small to filter).
    #[arg(long, env = "BITEXTKIT_NO_CLEAN")]
    no_clean: bool,
    #[command(flatten)]
    workers: WorkerArgs,
}

#[derive(Args)]
struct RuleArgs {
    /// Language whose rules apply.
    #[arg(long, env = "BITEXTKIT_LANG")]
    lang: String,
    /// Other language of the pair; its rules apply when --lang has none.
    #[arg(long, env = "BITEXTKIT_FALLBACK_OF", default_value = "")]
    fallback_of: String,
    /// Split (or, when detokenizing, rejoin) hyphens as @-@.
    #[arg(long, env = "BITEXTKIT_AGGRESSIVE_HYPHEN")]
    aggressive_hyphen: bool,
    /// Regex whose matches are never split; repeatable.
    #[arg(long = "protect", value_name = "REGEX")]
    protected: Vec<String>,
}

impl RuleArgs {
    fn rules(&self) -> anyhow::Result<TokenizerRules> {
        resolve_rules(&self.lang, &self.fallback_of)
            .with_aggressive_hyphen(self.aggressive_hyphen)
            .with_protected_patterns(self.protected.iter().map(String::as_str))
            .map_err(|e| Invalid(e).into())
    }
}

#[derive(Args)]
struct TokenizeArgs {
    #[command(flatten)]
    rules: RuleArgs,
    /// Input file; stdin when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    workers: WorkerArgs,
}

#[derive(Args)]
struct ScoreArgs {
    /// Hypothesis file, one segment per line.
    #[arg(long, env = "BITEXTKIT_HYP")]
    hyp: PathBuf,
    /// Reference file; repeat for multiple references.
    #[arg(long = "ref", required = true)]
    refs: Vec<PathBuf>,
    /// Target language, for tokenization.
    #[arg(long, env = "BITEXTKIT_LANG", default_value = "")]
    lang: String,
    /// Inputs are already tokenized; split on whitespace only.
    #[arg(long, env = "BITEXTKIT_TOKENIZED")]
    tokenized: bool,
    #[arg(long, env = "BITEXTKIT_NO_BLEU")]
    no_bleu: bool,
    #[arg(long, env = "BITEXTKIT_NO_RIBES")]
    no_ribes: bool,
    #[arg(long, env = "BITEXTKIT_NO_TER")]
    no_ter: bool,
    /// Plain edit distance instead of TER with block shifts.
    #[arg(long, env = "BITEXTKIT_NO_TER_SHIFTS")]
    no_ter_shifts: bool,
    /// Human-readable summary (TER as a percentage) instead of JSON.
    #[arg(long)]
    human: bool,
    #[command(flatten)]
    workers: WorkerArgs,
}

#[derive(Args)]
struct CognateArgs {
    /// Source-language file.
    #[arg(long)]
    src: PathBuf,
    /// Reference translation.
    #[arg(long = "ref")]
    reference: PathBuf,
    /// System output to check for preserved cognates.
    #[arg(long)]
    sys: Option<PathBuf>,
    #[arg(long, env = "BITEXTKIT_SRC_LANG", default_value = "")]
    src_lang: String,
    #[arg(long, env = "BITEXTKIT_TGT_LANG", default_value = "")]
    tgt_lang: String,
    /// Inputs are already tokenized.
    #[arg(long, env = "BITEXTKIT_TOKENIZED")]
    tokenized: bool,
    /// Maximum normalized edit distance, in (0, 1].
    #[arg(long, env = "BITEXTKIT_COGNATE_THRESHOLD", default_value_t = 0.3)]
    threshold: f64,
    /// Minimum source word length in characters.
    #[arg(long, env = "BITEXTKIT_COGNATE_MIN_LEN", default_value_t = 4)]
    min_len: usize,
    /// Write cognate pairs as TSV to this path.
    #[arg(long)]
    dump: Option<PathBuf>,
    #[command(flatten)]
    workers: WorkerArgs,
}

#[derive(Args)]
struct PipelineArgs {
    /// Flat TOML configuration file.
    #[arg(long, env = "BITEXTKIT_CONFIG")]
    config: PathBuf,
    /// `key=value` override, applied after the file and environment.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    overrides: Vec<String>,
    /// Parallel workers (same as --set worker_count=N).
    #[arg(long)]
    workers: Option<u16>,
    /// Validate the configuration and exit.
    #[arg(long)]
    check: bool,
    /// List configuration keys and exit.
    #[arg(long)]
    list_keys: bool,
}

/// Bad input or configuration (exit code 1).
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Invalid(String);

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Invalid>() { ExitCode::from(1) } else { ExitCode::from(2) }
        }
    }
}

fn run(command: Command) -> anyhow::Result<()> {
    match command {
        Command::Stats(a) => stats(a),
        Command::LangidTrain(a) => train(a),
        Command::LangidClassify(a) => classify(a),
        Command::Clean(a) => clean(a),
        Command::Tokenize(a) => tokenize_cmd(a, false),
        Command::Detokenize(a) => tokenize_cmd(a, true),
        Command::Score(a) => score(a),
        Command::Cognates(a) => cognates_cmd(a),
        Command::Pipeline(a) => pipeline_cmd(a),
    }
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn input_lines(path: Option<&Path>) -> anyhow::Result<Vec<String>> {
    Ok(match path {
        Some(p) => cio::read_lines(p)?,
        None => LineReader::new(BufReader::new(std::io::stdin().lock()), "<stdin>").collect::<Result<_, _>>()?,
    })
}

fn stats(a: StatsArgs) -> anyhow::Result<()> {
    let mut pairs = a.corpus.read()?;
    let workers = a.workers.pool()?;
    if a.tokenize {
        let src = resolve_rules(&a.corpus.src_lang, &a.corpus.tgt_lang);
        let tgt = resolve_rules(&a.corpus.tgt_lang, &a.corpus.src_lang);
        pairs = workers.map(&pairs, |p| {
            let mut q = p.clone();
            q.source = bitextkit_core::tokenize(&p.source, &src).join(" ");
            q.target = bitextkit_core::tokenize(&p.target, &tgt).join(" ");
            q
        });
    }
    let mut echo = a.corpus.echo();
    echo["tokenized"] = json!(a.tokenize);
    emit(a.out.as_deref(), &report::render("stats", &echo, &workers.stats(&pairs)))
}

fn train(a: TrainArgs) -> anyhow::Result<()> {
    let mut seeds: Vec<(LangCode, Vec<String>)> = Vec::new();
    for s in &a.seeds {
        let (lang, path) = s.split_once('=').ok_or_else(|| Invalid(format!("--seed `{s}` is not LANG=FILE")))?;
        seeds.push((LangCode::from(lang), cio::read_lines(Path::new(path))?));
    }
    let cfg = TrainConfig {
        ngram_min: a.ngram_min,
        ngram_max: a.ngram_max,
        vocab_size: a.vocab_size,
        smoothing_alpha: a.alpha,
    };
    let model = LangIdModel::train(&seeds, &cfg).map_err(|e| Invalid(e.to_string()))?;
    model_file::save_model(&model, &a.out)?;
    eprintln!(
        "trained {} languages, {} features -> {}",
        model.languages().len(),
        model.vocabulary().len(),
        a.out.display()
    );
    Ok(())
}

fn classify(a: ClassifyArgs) -> anyhow::Result<()> {
    let model = model_file::load_model(&a.model)?;
    let lines = input_lines(a.file.as_deref())?;
    let preds = a.workers.pool()?.map(&lines, |l| model.classify(l));
    let mut out = std::io::BufWriter::new(std::io::stdout().lock());
    for (line, p) in lines.iter().zip(preds) {
        writeln!(out, "{}\t{}\t{}", line.replace('\t', " "), p.lang, p.margin)?;
    }
    out.flush()?;
    Ok(())
}

fn clean(a: CleanArgs) -> anyhow::Result<()> {
    let mode: CleaningMode = a.mode.parse().map_err(|e: bitextkit_core::CleanError| Invalid(e.to_string()))?;
    if a.corpus.src_lang == a.corpus.tgt_lang {
        bail!(Invalid(format!("--src-lang and --tgt-lang are both `{}`", a.corpus.src_lang)));
    }
    let pairs = a.corpus.read()?;
    let workers = a.workers.pool()?;
    let keep_decisions = a.full_report || a.audit.is_some();
    let (kept, mut report) = match (&a.model, a.no_clean) {
        (Some(m), false) => {
            let model = model_file::load_model(m)?;
            workers
                .clean(pairs.clone(), &model, mode, keep_decisions)
                .map_err(|e| Invalid(e.to_string()))?
        }
        _ => {
            let mut r = bitextkit_core::CleaningReport::new(false);
            r.total = pairs.len() as u64;
            r.kept = r.total;
            (pairs.clone(), r)
        }
    };
    let prefix = a.out_prefix.to_string_lossy();
    let src_out = PathBuf::from(format!("{prefix}.{}", a.corpus.src_lang));
    let tgt_out = PathBuf::from(format!("{prefix}.{}", a.corpus.tgt_lang));
    cio::write_parallel(&kept, &src_out, &tgt_out)?;
    if let Some(audit) = &a.audit {
        let decisions = report.decisions.as_deref().unwrap_or_default();
        let format = match a.audit_format {
            AuditStyle::Tsv => AuditFormat::Tsv,
            AuditStyle::Aligned => AuditFormat::Aligned,
        };
        std::fs::write(audit, audit_table(decisions, &pairs, format)?)?;
    }
    if !a.full_report {
        report.decisions = None;
    }
    let mut echo = a.corpus.echo();
    echo["mode"] = json!(mode.as_str());
    echo["model"] = json!(a.model);
    echo["no_clean"] = json!(a.no_clean);
    emit(a.report.as_deref(), &report::render("clean", &echo, &report))
}

fn tokenize_cmd(a: TokenizeArgs, reverse: bool) -> anyhow::Result<()> {
    let rules = a.rules.rules()?;
    let lines = input_lines(a.input.as_deref())?;
    let workers = a.workers.pool()?;
    let out: Vec<String> = if reverse {
        workers.map(&lines, |l| detokenize(&text::words(l).collect::<Vec<_>>(), &rules))
    } else {
        workers.map(&lines, |l| bitextkit_core::tokenize(l, &rules).join(" "))
    };
    match &a.output {
        Some(p) => cio::write_lines(&out, p)?,
        None => cio::write_lines_to(&out, &mut std::io::BufWriter::new(std::io::stdout().lock()))?,
    }
    Ok(())
}

fn tokenized_lines(path: &Path, rules: Option<&TokenizerRules>, workers: &Workers) -> anyhow::Result<Vec<Vec<String>>> {
    let lines = cio::read_lines(path)?;
    Ok(match rules {
        Some(r) => workers.tokenize(&lines, r),
        None => workers.map(&lines, |l| text::words(l).map(str::to_owned).collect()),
    })
}

fn score(a: ScoreArgs) -> anyhow::Result<()> {
    let workers = a.workers.pool()?;
    let rules = (!a.tokenized).then(|| resolve_rules(&a.lang, ""));
    let hyp = tokenized_lines(&a.hyp, rules.as_ref(), &workers)?;
    let mut refs: Vec<Vec<Vec<String>>> = vec![Vec::new(); hyp.len()];
    for path in &a.refs {
        let r = tokenized_lines(path, rules.as_ref(), &workers)?;
        if r.len() != hyp.len() {
            bail!(Invalid(format!("{} has {} lines, hypothesis has {}", path.display(), r.len(), hyp.len())));
        }
        for (seg, toks) in refs.iter_mut().zip(r) {
            seg.push(toks);
        }
    }
    let cfg = MetricConfig { ter: TerConfig { shifts: !a.no_ter_shifts, ..TerConfig::default() }, ..MetricConfig::default() };
    let result = workers.score(&hyp, &refs, &cfg).map_err(|e| Invalid(e.to_string()))?;
    let toggles = MetricToggles { bleu: !a.no_bleu, ribes: !a.no_ribes, ter: !a.no_ter };
    let body = ScoreBody::new(&result, toggles);
    if a.human {
        let mut s = String::new();
        if let Some(b) = body.bleu {
            s += &format!("BLEU  {b:.2}  (BP {:.3}, {}/{})\n", result.bleu.brevity_penalty, result.bleu.hyp_len, result.bleu.ref_len);
        }
        if let Some(r) = body.ribes {
            s += &format!("RIBES {r:.4}\n");
        }
        if let Some(t) = body.ter {
            s += &format!("TER   {:.2}%\n", t * 100.0);
        }
        print!("{s}");
        return Ok(());
    }
    let echo = json!({
        "hyp": a.hyp, "refs": a.refs, "lang": a.lang, "tokenized": a.tokenized,
        "ter_shifts": !a.no_ter_shifts, "ribes_alpha": cfg.ribes_alpha, "ribes_beta": cfg.ribes_beta,
        "bleu_smoothing": "none",
    });
    emit(None, &report::render("score", &echo, &body))
}

fn cognates_cmd(a: CognateArgs) -> anyhow::Result<()> {
    if !(a.threshold > 0.0 && a.threshold <= 1.0) {
        bail!(Invalid("--threshold must be in (0, 1]".into()));
    }
    let workers = a.workers.pool()?;
    let (src_rules, tgt_rules) = if a.tokenized {
        (None, None)
    } else {
        (Some(resolve_rules(&a.src_lang, &a.tgt_lang)), Some(resolve_rules(&a.tgt_lang, &a.src_lang)))
    };
    let source = tokenized_lines(&a.src, src_rules.as_ref(), &workers)?;
    let reference = tokenized_lines(&a.reference, tgt_rules.as_ref(), &workers)?;
    let cfg = CognateConfig { threshold: a.threshold, min_len: a.min_len };
    let extraction = workers.cognates(&source, &reference, &cfg).map_err(|e| Invalid(e.to_string()))?;
    let report = match &a.sys {
        Some(sys) => {
            let system = tokenized_lines(sys, tgt_rules.as_ref(), &workers)?;
            cognates::preservation(&extraction, &system, &cfg).map_err(|e| Invalid(e.to_string()))?
        }
        None => cognates::CognateReport::from_extraction(&extraction, &cfg),
    };
    if let Some(dump) = &a.dump {
        std::fs::write(dump, cognate_dump(&extraction.pairs))?;
    }
    let echo = json!({
        "src": a.src, "ref": a.reference, "sys": a.sys, "src_lang": a.src_lang, "tgt_lang": a.tgt_lang,
        "tokenized": a.tokenized, "threshold": a.threshold, "min_len": a.min_len,
    });
    emit(None, &report::render("cognates", &echo, &report))
}

fn pipeline_cmd(a: PipelineArgs) -> anyhow::Result<()> {
    if a.list_keys {
        for (k, doc) in config::KEYS {
            println!("{k:<20} {doc}");
        }
        return Ok(());
    }
    let mut layers = Layers::new();
    layers.file(&a.config).env(std::env::vars());
    for s in &a.overrides {
        layers.set_pair(s);
    }
    if let Some(w) = a.workers {
        layers.set("worker_count", &w.to_string());
    }
    let cfg = match layers.build() {
        Ok(c) => c,
        Err(errors) => {
            let list: Vec<String> = errors.iter().map(|e| format!("  - {e}")).collect();
            bail!(Invalid(format!("invalid configuration ({} problems):\n{}", errors.len(), list.join("\n"))));
        }
    };
    if a.check {
        eprintln!("configuration is valid");
        return Ok(());
    }
    let manifest = pipeline::run_pipeline(&cfg)?;
    let names: Vec<&str> = manifest.stages.iter().map(|s| s.name).collect();
    eprintln!("ran {} -> {}", names.join(" -> "), cfg.out_dir.join("manifest.json").display());
    Ok(())
}
