use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bitextkit"));
    // Keep the caller's environment from leaking into flag defaults.
    for (k, _) in std::env::vars() {
        if k.starts_with("BITEXTKIT_") {
            cmd.env_remove(k);
        }
    }
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn help_succeeds_and_usage_errors_exit_1() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--no-such-flag"]).status.code(), Some(1));
    assert_eq!(run(&["score"]).status.code(), Some(1));
}

#[test]
fn tokenize_and_detokenize_stdin() {
    let o = run_stdin(&["tokenize", "--lang", "en"], "Hello, world!\nMr. Smith left.\n");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "Hello , world !\nMr. Smith left .\n");
    let o = run_stdin(&["detokenize", "--lang", "en"], "Hello , world !\n");
    assert_eq!(stdout(&o), "Hello, world!\n");
    let bm = run_stdin(&["tokenize", "--lang", "bm", "--fallback-of", "fr"], "L'eau ?\n");
    assert_eq!(stdout(&bm), "L' eau ?\n");
}

#[test]
fn score_emits_the_documented_fields() {
    let dir = tempfile::tempdir().unwrap();
    let hyp = write(dir.path(), "hyp", "el gato está en la alfombra .\nhola mundo\n");
    let r = write(dir.path(), "ref", "el gato está sobre la alfombra .\nhola mundo\n");
    let o = run(&["score", "--hyp", &hyp, "--ref", &r, "--lang", "es", "--tokenized"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for key in [
        "bleu", "precisions", "brevity_penalty", "hyp_len", "ref_len", "ribes", "nkt",
        "unigram_precision", "ter", "edits",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    for key in ["ins", "del", "sub", "shift"] {
        assert!(v["edits"].get(key).is_some(), "missing edits.{key}");
    }
    assert_eq!(v["precisions"].as_array().unwrap().len(), 4);
    assert_eq!(v["command"], "score");
    assert_eq!(v["edits"]["sub"], 1);
}

#[test]
fn score_identity_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let text = "a b c d e\nf g h i j\n";
    let hyp = write(dir.path(), "hyp", text);
    let o = run(&["score", "--hyp", &hyp, "--ref", &hyp, "--lang", "xx", "--tokenized"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["bleu"].as_f64(), v["ribes"].as_f64(), v["ter"].as_f64()), (Some(100.0), Some(1.0), Some(0.0)));

    let short = write(dir.path(), "short", "a b c d e\n");
    assert_eq!(run(&["score", "--hyp", &hyp, "--ref", &short, "--lang", "xx"]).status.code(), Some(1));
    let missing = dir.path().join("missing").to_str().unwrap().to_owned();
    assert_eq!(run(&["score", "--hyp", &missing, "--ref", &hyp, "--lang", "xx"]).status.code(), Some(2));
}

#[test]
fn langid_train_and_classify() {
    let dir = tempfile::tempdir().unwrap();
    let model = dir.path().join("m.lidm");
    let seeds = fixtures().join("langid");
    let mut args = vec!["langid-train".to_owned()];
    for l in ["es", "ca", "pt", "fr"] {
        args.push("--seed".into());
        args.push(format!("{l}={}", seeds.join(format!("seed.{l}")).display()));
    }
    args.extend(["--out".into(), model.to_str().unwrap().into()]);
    let o = bin().args(&args).output().unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));

    let o = run_stdin(
        &["langid-classify", "--model", model.to_str().unwrap()],
        "La sombra del caudillo\nLes ombres dels arbres.\n",
    );
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<Vec<&str>> = out.lines().map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0][..2], ["La sombra del caudillo", "es"]);
    assert!(rows[0][2].parse::<f64>().unwrap() > 0.0);

    let bad = write(dir.path(), "bad.lidm", "not a model");
    assert_ne!(run(&["langid-classify", "--model", &bad, "--file", &bad]).status.code(), Some(0));
    assert_eq!(run(&["langid-train", "--seed", "es", "--out", "x"]).status.code(), Some(1));
}

#[test]
fn cognates_command_reports_preservation() {
    let dir = tempfile::tempdir().unwrap();
    let src = write(dir.path(), "src", "la música clásica\nel presidente visitó la fábrica\n");
    let r = write(dir.path(), "ref", "la música clàssica\nel president va visitar la fàbrica\n");
    let dump = dir.path().join("pairs.tsv");
    let o = run(&[
        "cognates", "--src", &src, "--ref", &r, "--sys", &r, "--src-lang", "es", "--tgt-lang", "ca",
        "--dump", dump.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["preservation_rate"], 1.0);
    assert_eq!(v["cognate_pairs"], 5);
    assert_eq!(fs::read_to_string(dump).unwrap().lines().count(), 6);
    assert_eq!(run(&["cognates", "--src", &src, "--ref", &r, "--threshold", "1.5"]).status.code(), Some(1));
}

#[test]
fn clean_rejects_identical_languages() {
    let dir = tempfile::tempdir().unwrap();
    let tsv = write(dir.path(), "c.tsv", "hola\thola\n");
    let o = run(&["clean", "--tsv", &tsv, "--src-lang", "es", "--tgt-lang", "es", "--model", &tsv, "--out-prefix", "x"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn stats_counts_words() {
    let dir = tempfile::tempdir().unwrap();
    let tsv = write(dir.path(), "c.tsv", "a b a\tx y\nc\tz\n");
    let o = run(&["stats", "--tsv", &tsv, "--src-lang", "es", "--tgt-lang", "ca"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sentence_count"], 2);
    assert_eq!(v["word_count_source"], 4);
    assert_eq!(v["ttr_source"], 0.75);
    assert_eq!(v["ttr_target"], 1.0);
}
