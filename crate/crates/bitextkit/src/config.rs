//! Pipeline configuration: a flat TOML file, overridden by `BITEXTKIT_<KEY>`
//! environment variables, overridden in turn by command-line `key=value`
//! settings.
//!
//! Validation reports every problem at once.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use bitextkit_core::{CleaningMode, TokenizerRules};
use serde::Serialize;
use toml::Value;

pub const ENV_PREFIX: &str = "BITEXTKIT_";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Str,
    Path,
    Paths,
    Strs,
    Bool,
    Int,
    Float,
}

/// Every accepted key with its type and a one-line description.
pub const KEYS: &[(&str, &str)] = &[
    ("run", "prep (stats, clean, tokenize) or eval (detokenize, score, cognates); default prep"),
    ("src_lang", "source language code (required)"),
    ("tgt_lang", "target language code (required, differs from src_lang)"),
    ("corpus_src", "prep: source side of a two-file corpus"),
    ("corpus_tgt", "prep: target side of a two-file corpus"),
    ("corpus_tsv", "prep: TSV corpus, instead of corpus_src/corpus_tgt"),
    ("model", "prep: language-identification model file (required unless no_clean)"),
    ("out_dir", "directory for outputs, reports and manifest; default bitextkit-out"),
    ("clean_mode", "per_side, concat or both; default both"),
    ("no_clean", "prep: pass pairs through without cleaning; default false"),
    ("full_report", "prep: include per-pair decisions in the cleaning report; default false"),
    ("aggressive_hyphen", "split hyphens as @-@; default false"),
    ("protected_patterns", "regexes whose matches are never split; default []"),
    ("hyp", "eval: tokenized system output (required for eval)"),
    ("refs", "eval: reference files, one or more (required for eval)"),
    ("source", "eval: source-side file; enables the cognates stage"),
    ("bleu", "eval: report BLEU; default true"),
    ("ribes", "eval: report RIBES; default true"),
    ("ter", "eval: report TER; default true"),
    ("ter_shifts", "eval: allow TER block shifts; default true"),
    ("cognate_threshold", "eval: maximum normalized edit distance, in (0, 1]; default 0.3"),
    ("cognate_min_len", "eval: minimum source word length in characters; default 4"),
    ("worker_count", "parallel workers, at least 1; default 1"),
];

fn kind(key: &str) -> Option<Kind> {
    Some(match key {
        "run" | "src_lang" | "tgt_lang" | "clean_mode" => Kind::Str,
        "corpus_src" | "corpus_tgt" | "corpus_tsv" | "model" | "out_dir" | "hyp" | "source" => Kind::Path,
        "refs" => Kind::Paths,
        "protected_patterns" => Kind::Strs,
        "no_clean" | "full_report" | "aggressive_hyphen" | "bleu" | "ribes" | "ter" | "ter_shifts" => Kind::Bool,
        "cognate_min_len" | "worker_count" => Kind::Int,
        "cognate_threshold" => Kind::Float,
        _ => return None,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConfigError {
    Parse { line: usize, column: usize, message: String },
    Io { path: PathBuf, message: String },
    UnknownKey(String),
    Missing(&'static str),
    Type { key: String, expected: &'static str },
    Invalid { key: &'static str, message: String },
    NotFound { key: &'static str, path: PathBuf },
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Parse { line, column, message } => {
                write!(f, "parse error at line {line}, column {column}: {message}")
            }
            ConfigError::Io { path, message } => write!(f, "{}: {message}", path.display()),
            ConfigError::UnknownKey(k) => write!(f, "unknown key `{k}`"),
            ConfigError::Missing(k) => write!(f, "missing required key `{k}`"),
            ConfigError::Type { key, expected } => write!(f, "`{key}` must be {expected}"),
            ConfigError::Invalid { key, message } => write!(f, "`{key}`: {message}"),
            ConfigError::NotFound { key, path } => {
                write!(f, "`{key}`: input {} does not exist", path.display())
            }
        }
    }
}

impl std::error::Error for ConfigError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Run {
    Prep,
    Eval,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PipelineConfig {
    pub run: Run,
    pub src_lang: String,
    pub tgt_lang: String,
    pub corpus_src: Option<PathBuf>,
    pub corpus_tgt: Option<PathBuf>,
    pub corpus_tsv: Option<PathBuf>,
    pub model: Option<PathBuf>,
    pub out_dir: PathBuf,
    pub clean_mode: String,
    pub no_clean: bool,
    pub full_report: bool,
    pub aggressive_hyphen: bool,
    pub protected_patterns: Vec<String>,
    pub hyp: Option<PathBuf>,
    pub refs: Vec<PathBuf>,
    pub source: Option<PathBuf>,
    pub bleu: bool,
    pub ribes: bool,
    pub ter: bool,
    pub ter_shifts: bool,
    pub cognate_threshold: f64,
    pub cognate_min_len: usize,
    /// Never part of an output artifact's content.
    #[serde(skip)]
    pub worker_count: usize,
}

impl PipelineConfig {
    pub fn cleaning_mode(&self) -> CleaningMode {
        self.clean_mode.parse().unwrap_or_default()
    }
}

/// Raw key/value layers before typing.
#[derive(Debug, Clone, Default)]
pub struct Layers {
    values: BTreeMap<String, Value>,
    errors: Vec<ConfigError>,
}

fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

/// Parses an override value given as text, according to the key's type.
fn parse_text(key: &str, raw: &str) -> Result<Value, ConfigError> {
    let k = kind(key).ok_or_else(|| ConfigError::UnknownKey(key.to_owned()))?;
    let ty = |expected| ConfigError::Type { key: key.to_owned(), expected };
    let list = || -> Vec<Value> {
        raw.split(',').map(str::trim).filter(|s| !s.is_empty()).map(|s| Value::String(s.to_owned())).collect()
    };
    Ok(match k {
        Kind::Str | Kind::Path => Value::String(raw.to_owned()),
        Kind::Paths | Kind::Strs => Value::Array(list()),
        Kind::Bool => match raw.trim().to_ascii_lowercase().as_str() {
            "true" | "1" | "yes" => Value::Boolean(true),
            "false" | "0" | "no" => Value::Boolean(false),
            _ => return Err(ty("a boolean")),
        },
        Kind::Int => Value::Integer(raw.trim().parse().map_err(|_| ty("an integer"))?),
        Kind::Float => Value::Float(raw.trim().parse().map_err(|_| ty("a number"))?),
    })
}

impl Layers {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a TOML document. Parse errors carry line and column.
    pub fn file_text(&mut self, text: &str) -> &mut Self {
        match text.parse::<toml::Table>() {
            Ok(table) => {
                for (k, v) in table {
                    self.values.insert(k, v);
                }
            }
            Err(e) => {
                let (line, column) = e.span().map_or((1, 1), |s| position(text, s.start));
                self.errors.push(ConfigError::Parse { line, column, message: e.message().to_owned() });
            }
        }
        self
    }

    pub fn file(&mut self, path: &Path) -> &mut Self {
        match std::fs::read_to_string(path) {
            Ok(text) => self.file_text(&text),
            Err(e) => {
                self.errors.push(ConfigError::Io { path: path.to_path_buf(), message: e.to_string() });
                self
            }
        }
    }

    /// Applies `BITEXTKIT_<KEY>` variables from `vars`.
    pub fn env<I: IntoIterator<Item = (String, String)>>(&mut self, vars: I) -> &mut Self {
        for (name, value) in vars {
            let Some(key) = name.strip_prefix(ENV_PREFIX) else { continue };
            let key = key.to_ascii_lowercase();
            if kind(&key).is_none() {
                continue;
            }
            self.set(&key, &value);
        }
        self
    }

    /// One `key=value` override.
    pub fn set(&mut self, key: &str, raw: &str) -> &mut Self {
        match parse_text(key, raw) {
            Ok(v) => {
                self.values.insert(key.to_owned(), v);
            }
            Err(e) => self.errors.push(e),
        }
        self
    }

    pub fn set_pair(&mut self, assignment: &str) -> &mut Self {
        match assignment.split_once('=') {
            Some((k, v)) => self.set(k.trim(), v),
            None => {
                self.errors.push(ConfigError::Invalid {
                    key: "set",
                    message: format!("`{assignment}` is not of the form key=value"),
                });
                self
            }
        }
    }

    /// Types and validates the merged layers.
    pub fn build(&self) -> Result<PipelineConfig, Vec<ConfigError>> {
        let mut errors = self.errors.clone();
        for key in self.values.keys() {
            if kind(key).is_none() {
                errors.push(ConfigError::UnknownKey(key.clone()));
            }
        }
        let mut t = Typed { values: &self.values, errors: &mut errors };
        let run = match t.string("run").as_deref() {
            None | Some("prep") => Run::Prep,
            Some("eval") => Run::Eval,
            Some(other) => {
                t.invalid("run", format!("`{other}` is not prep or eval"));
                Run::Prep
            }
        };
        let cfg = PipelineConfig {
            run,
            src_lang: t.string("src_lang").unwrap_or_default(),
            tgt_lang: t.string("tgt_lang").unwrap_or_default(),
            corpus_src: t.path("corpus_src"),
            corpus_tgt: t.path("corpus_tgt"),
            corpus_tsv: t.path("corpus_tsv"),
            model: t.path("model"),
            out_dir: t.path("out_dir").unwrap_or_else(|| PathBuf::from("bitextkit-out")),
            clean_mode: t.string("clean_mode").unwrap_or_else(|| "both".to_owned()),
            no_clean: t.boolean("no_clean").unwrap_or(false),
            full_report: t.boolean("full_report").unwrap_or(false),
            aggressive_hyphen: t.boolean("aggressive_hyphen").unwrap_or(false),
            protected_patterns: t.strings("protected_patterns").unwrap_or_default(),
            hyp: t.path("hyp"),
            refs: t.strings("refs").unwrap_or_default().into_iter().map(PathBuf::from).collect(),
            source: t.path("source"),
            bleu: t.boolean("bleu").unwrap_or(true),
            ribes: t.boolean("ribes").unwrap_or(true),
            ter: t.boolean("ter").unwrap_or(true),
            ter_shifts: t.boolean("ter_shifts").unwrap_or(true),
            cognate_threshold: t.float("cognate_threshold").unwrap_or(0.3),
            cognate_min_len: t.int("cognate_min_len").unwrap_or(4),
            worker_count: t.int("worker_count").unwrap_or(1),
        };
        check(&cfg, &self.values, &mut errors);
        if errors.is_empty() {
            Ok(cfg)
        } else {
            Err(errors)
        }
    }
}

struct Typed<'a> {
    values: &'a BTreeMap<String, Value>,
    errors: &'a mut Vec<ConfigError>,
}

impl Typed<'_> {
    fn get(&mut self, key: &str, expected: &'static str, ok: impl Fn(&Value) -> bool) -> Option<&Value> {
        let v = self.values.get(key)?;
        if ok(v) {
            Some(v)
        } else {
            self.errors.push(ConfigError::Type { key: key.to_owned(), expected });
            None
        }
    }

    fn invalid(&mut self, key: &'static str, message: String) {
        self.errors.push(ConfigError::Invalid { key, message });
    }

    fn string(&mut self, key: &str) -> Option<String> {
        self.get(key, "a string", Value::is_str).and_then(|v| v.as_str().map(str::to_owned))
    }

    fn path(&mut self, key: &str) -> Option<PathBuf> {
        self.string(key).map(PathBuf::from)
    }

    fn boolean(&mut self, key: &str) -> Option<bool> {
        self.get(key, "a boolean", Value::is_bool).and_then(Value::as_bool)
    }

    fn int(&mut self, key: &str) -> Option<usize> {
        let v = self.get(key, "a non-negative integer", |v| v.as_integer().is_some_and(|i| i >= 0))?;
        v.as_integer().map(|i| i as usize)
    }

    fn float(&mut self, key: &str) -> Option<f64> {
        let v = self.get(key, "a number", |v| v.is_float() || v.is_integer())?;
        v.as_float().or_else(|| v.as_integer().map(|i| i as f64))
    }

    fn strings(&mut self, key: &str) -> Option<Vec<String>> {
        let v = self.get(key, "an array of strings", |v| {
            v.as_array().is_some_and(|a| a.iter().all(Value::is_str))
        })?;
        v.as_array().map(|a| a.iter().filter_map(|s| s.as_str().map(str::to_owned)).collect())
    }
}

fn check(cfg: &PipelineConfig, raw: &BTreeMap<String, Value>, errors: &mut Vec<ConfigError>) {
    let present = |k: &str| raw.contains_key(k);
    for key in ["src_lang", "tgt_lang"] {
        if !present(key) {
            errors.push(ConfigError::Missing(key));
        }
    }
    if present("src_lang") && present("tgt_lang") && cfg.src_lang == cfg.tgt_lang {
        errors.push(ConfigError::Invalid {
            key: "tgt_lang",
            message: format!("must differ from src_lang (both `{}`)", cfg.src_lang),
        });
    }
    if cfg.worker_count == 0 {
        errors.push(ConfigError::Invalid { key: "worker_count", message: "must be at least 1".into() });
    }
    if cfg.clean_mode.parse::<CleaningMode>().is_err() {
        errors.push(ConfigError::Invalid {
            key: "clean_mode",
            message: format!("`{}` is not per_side, concat or both", cfg.clean_mode),
        });
    }
    if !(cfg.cognate_threshold > 0.0 && cfg.cognate_threshold <= 1.0) {
        errors.push(ConfigError::Invalid { key: "cognate_threshold", message: "must be in (0, 1]".into() });
    }
    if let Err(e) = TokenizerRules::neutral("xx").with_protected_patterns(cfg.protected_patterns.iter().map(String::as_str)) {
        errors.push(ConfigError::Invalid { key: "protected_patterns", message: e });
    }

    let mut exists = |key: &'static str, path: &Option<PathBuf>| {
        if let Some(p) = path {
            if !p.exists() {
                errors.push(ConfigError::NotFound { key, path: p.clone() });
            }
        }
    };
    match cfg.run {
        Run::Prep => {
            exists("corpus_src", &cfg.corpus_src);
            exists("corpus_tgt", &cfg.corpus_tgt);
            exists("corpus_tsv", &cfg.corpus_tsv);
            if !cfg.no_clean {
                exists("model", &cfg.model);
            }
            let two_file = cfg.corpus_src.is_some() || cfg.corpus_tgt.is_some();
            if cfg.corpus_tsv.is_some() && two_file {
                errors.push(ConfigError::Invalid {
                    key: "corpus_tsv",
                    message: "give either corpus_tsv or corpus_src/corpus_tgt, not both".into(),
                });
            } else if cfg.corpus_tsv.is_none() {
                if cfg.corpus_src.is_none() {
                    errors.push(ConfigError::Missing("corpus_src"));
                }
                if cfg.corpus_tgt.is_none() {
                    errors.push(ConfigError::Missing("corpus_tgt"));
                }
            }
            if cfg.model.is_none() && !cfg.no_clean {
                errors.push(ConfigError::Missing("model"));
            }
        }
        Run::Eval => {
            exists("hyp", &cfg.hyp);
            exists("source", &cfg.source);
            if cfg.hyp.is_none() {
                errors.push(ConfigError::Missing("hyp"));
            }
            if cfg.refs.is_empty() {
                errors.push(ConfigError::Missing("refs"));
            }
            for r in &cfg.refs {
                if !r.exists() {
                    errors.push(ConfigError::NotFound { key: "refs", path: r.clone() });
                }
            }
        }
    }
}

/// Reads, overrides from the process environment, and validates.
pub fn validate_config(path: &Path) -> Result<PipelineConfig, Vec<ConfigError>> {
    Layers::new().file(path).env(std::env::vars()).build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(text: &str) -> Result<PipelineConfig, Vec<ConfigError>> {
        Layers::new().file_text(text).build()
    }

    #[test]
    fn defaults_fill_in() {
        let cfg = build("src_lang = \"es\"\ntgt_lang = \"ca\"\ncorpus_tsv = \"Cargo.toml\"\nno_clean = true\n").unwrap();
        assert_eq!(cfg.run, Run::Prep);
        assert_eq!(cfg.clean_mode, "both");
        assert_eq!(cfg.cognate_threshold, 0.3);
        assert_eq!(cfg.cognate_min_len, 4);
        assert_eq!(cfg.worker_count, 1);
        assert!(cfg.bleu && cfg.ribes && cfg.ter && cfg.ter_shifts);
    }

    #[test]
    fn parse_error_position() {
        let errs = build("src_lang = \"es\"\ntgt_lang = = 3\n").unwrap_err();
        match &errs[0] {
            ConfigError::Parse { line: 2, column, .. } => assert!(*column > 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn collects_every_violation() {
        let errs = build("src_lang = \"es\"\ntgt_lang = \"es\"\nworker_count = 0\nno_clean = true\ncorpus_tsv = \"Cargo.toml\"\n")
            .unwrap_err();
        assert_eq!(errs.len(), 2, "{errs:?}");
        let errs = build("src_lang = \"es\"\ntgt_lang = \"ca\"\nmodel = \"Cargo.toml\"\ncorpus_tgt = \"Cargo.toml\"\n").unwrap_err();
        assert_eq!(errs, vec![ConfigError::Missing("corpus_src")]);
    }

    #[test]
    fn precedence() {
        let cfg = Layers::new()
            .file_text("src_lang = \"es\"\ntgt_lang = \"ca\"\nno_clean = true\ncorpus_tsv = \"Cargo.toml\"\nworker_count = 2\n")
            .env([("BITEXTKIT_WORKER_COUNT".to_owned(), "3".to_owned()), ("BITEXTKIT_TGT_LANG".to_owned(), "pt".to_owned())])
            .set_pair("worker_count=4")
            .build()
            .unwrap();
        assert_eq!(cfg.worker_count, 4);
        assert_eq!(cfg.tgt_lang, "pt");
    }

    #[test]
    fn type_and_unknown_key_errors() {
        let errs = build("src_lang = 1\ntgt_lang = \"ca\"\nbogus = true\nno_clean = true\ncorpus_tsv = \"Cargo.toml\"\n").unwrap_err();
        assert!(errs.contains(&ConfigError::UnknownKey("bogus".into())));
        assert!(errs.iter().any(|e| matches!(e, ConfigError::Type { key, .. } if key == "src_lang")));
    }

    #[test]
    fn every_key_is_documented() {
        for (k, _) in KEYS {
            assert!(kind(k).is_some(), "{k}");
        }
    }
}
