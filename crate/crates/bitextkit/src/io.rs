//! Line-aligned corpus files: two-file (one side per file) and TSV.
//!
//! Reading strips a trailing `\n` and `\r\n`; writing always emits `\n`.
//! Empty lines are kept. Invalid UTF-8 is reported with its byte offset.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use bitextkit_core::{LangCode, SentencePair};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("line count mismatch: source has {source_lines} lines, target has {target_lines}")]
    LineCountMismatch { source_lines: u64, target_lines: u64 },
    #[error("{}: invalid UTF-8 at byte offset {offset}", path.display())]
    Encoding { path: PathBuf, offset: u64 },
    #[error("{}: row {index} does not contain exactly one TAB", path.display())]
    MalformedRow { path: PathBuf, index: usize },
    #[error("pair {index} contains a line break")]
    LineBreak { index: usize },
    #[error("pair {index} contains a TAB and cannot be written as TSV")]
    TabInField { index: usize },
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> IoError + '_ {
    move |source| IoError::Io { path: path.to_path_buf(), source }
}

fn open(path: &Path) -> Result<BufReader<File>, IoError> {
    File::open(path).map(BufReader::new).map_err(io_err(path))
}

fn create(path: &Path) -> Result<BufWriter<File>, IoError> {
    File::create(path).map(BufWriter::new).map_err(io_err(path))
}

/// Reads UTF-8 lines, tracking byte offsets for error reports.
pub struct LineReader<R> {
    inner: R,
    path: PathBuf,
    offset: u64,
    buf: Vec<u8>,
    done: bool,
}

impl LineReader<BufReader<File>> {
    pub fn open(path: &Path) -> Result<Self, IoError> {
        Ok(LineReader::new(open(path)?, path))
    }
}

impl<R: BufRead> LineReader<R> {
    /// `label` names the input in errors (a path or `<stdin>`).
    pub fn new(inner: R, label: impl Into<PathBuf>) -> Self {
        LineReader { inner, path: label.into(), offset: 0, buf: Vec::new(), done: false }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }
}

impl<R: BufRead> Iterator for LineReader<R> {
    type Item = Result<String, IoError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        self.buf.clear();
        let n = match self.inner.read_until(b'\n', &mut self.buf) {
            Ok(n) => n,
            Err(e) => {
                self.done = true;
                return Some(Err(IoError::Io { path: self.path.clone(), source: e }));
            }
        };
        if n == 0 {
            self.done = true;
            return None;
        }
        let start = self.offset;
        self.offset += n as u64;
        let mut line: &[u8] = &self.buf;
        if let Some(rest) = line.strip_suffix(b"\n") {
            line = rest.strip_suffix(b"\r").unwrap_or(rest);
        }
        match std::str::from_utf8(line) {
            Ok(s) => Some(Ok(s.to_owned())),
            Err(e) => {
                self.done = true;
                Some(Err(IoError::Encoding { path: self.path.clone(), offset: start + e.valid_up_to() as u64 }))
            }
        }
    }
}

/// Pairs from two line-aligned files, in file order.
pub struct ParallelReader {
    source: LineReader<BufReader<File>>,
    target: LineReader<BufReader<File>>,
    src_lang: LangCode,
    tgt_lang: LangCode,
    index: usize,
    failed: bool,
}

impl ParallelReader {
    /// Lines left in `rest` after one side ran out, or the first error.
    fn count_rest(rest: &mut LineReader<BufReader<File>>) -> Result<u64, IoError> {
        let mut n = 0;
        for line in rest {
            line?;
            n += 1;
        }
        Ok(n)
    }
}

impl Iterator for ParallelReader {
    type Item = Result<SentencePair, IoError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let read = self.index as u64;
        let item = match (self.source.next(), self.target.next()) {
            (None, None) => return None,
            (Some(Err(e)), _) | (_, Some(Err(e))) => Err(e),
            (Some(Ok(_)), None) => Self::count_rest(&mut self.source).and_then(|rest| {
                Err(IoError::LineCountMismatch { source_lines: read + 1 + rest, target_lines: read })
            }),
            (None, Some(Ok(_))) => Self::count_rest(&mut self.target).and_then(|rest| {
                Err(IoError::LineCountMismatch { source_lines: read, target_lines: read + 1 + rest })
            }),
            (Some(Ok(s)), Some(Ok(t))) => {
                let pair = SentencePair::new(self.index, s, t, self.src_lang.clone(), self.tgt_lang.clone());
                self.index += 1;
                return Some(Ok(pair));
            }
        };
        self.failed = true;
        Some(item)
    }
}

pub fn read_parallel(
    source: &Path,
    target: &Path,
    src_lang: impl Into<LangCode>,
    tgt_lang: impl Into<LangCode>,
) -> Result<ParallelReader, IoError> {
    Ok(ParallelReader {
        source: LineReader::open(source)?,
        target: LineReader::open(target)?,
        src_lang: src_lang.into(),
        tgt_lang: tgt_lang.into(),
        index: 0,
        failed: false,
    })
}

/// Pairs from a `source<TAB>target` file.
pub fn read_tsv(
    path: &Path,
    src_lang: impl Into<LangCode>,
    tgt_lang: impl Into<LangCode>,
) -> Result<impl Iterator<Item = Result<SentencePair, IoError>>, IoError> {
    let (src_lang, tgt_lang) = (src_lang.into(), tgt_lang.into());
    let path_buf = path.to_path_buf();
    let lines = LineReader::open(path)?;
    Ok(lines.enumerate().map(move |(index, line)| {
        let line = line?;
        let mut parts = line.split('\t');
        match (parts.next(), parts.next(), parts.next()) {
            (Some(s), Some(t), None) => {
                Ok(SentencePair::new(index, s, t, src_lang.clone(), tgt_lang.clone()))
            }
            _ => Err(IoError::MalformedRow { path: path_buf.clone(), index }),
        }
    }))
}

pub fn read_parallel_all(
    source: &Path,
    target: &Path,
    src_lang: impl Into<LangCode>,
    tgt_lang: impl Into<LangCode>,
) -> Result<Vec<SentencePair>, IoError> {
    read_parallel(source, target, src_lang, tgt_lang)?.collect()
}

pub fn read_tsv_all(
    path: &Path,
    src_lang: impl Into<LangCode>,
    tgt_lang: impl Into<LangCode>,
) -> Result<Vec<SentencePair>, IoError> {
    read_tsv(path, src_lang, tgt_lang)?.collect()
}

fn has_newline(s: &str) -> bool {
    s.contains(['\n', '\r'])
}

/// Writes each side to its own file. Fails before writing anything if a
/// pair contains `\n` or `\r`, which would break line alignment.
pub fn write_parallel<'a, I>(pairs: I, source: &Path, target: &Path) -> Result<(), IoError>
where
    I: IntoIterator<Item = &'a SentencePair>,
{
    let pairs: Vec<&SentencePair> = pairs.into_iter().collect();
    if let Some(p) = pairs.iter().find(|p| has_newline(&p.source) || has_newline(&p.target)) {
        return Err(IoError::LineBreak { index: p.index });
    }
    let mut s = create(source)?;
    let mut t = create(target)?;
    for p in pairs {
        writeln!(s, "{}", p.source).map_err(io_err(source))?;
        writeln!(t, "{}", p.target).map_err(io_err(target))?;
    }
    s.flush().map_err(io_err(source))?;
    t.flush().map_err(io_err(target))
}

pub fn write_tsv<'a, I>(pairs: I, path: &Path) -> Result<(), IoError>
where
    I: IntoIterator<Item = &'a SentencePair>,
{
    let pairs: Vec<&SentencePair> = pairs.into_iter().collect();
    for p in &pairs {
        if has_newline(&p.source) || has_newline(&p.target) {
            return Err(IoError::LineBreak { index: p.index });
        }
        if p.source.contains('\t') || p.target.contains('\t') {
            return Err(IoError::TabInField { index: p.index });
        }
    }
    let mut out = create(path)?;
    for p in pairs {
        writeln!(out, "{}\t{}", p.source, p.target).map_err(io_err(path))?;
    }
    out.flush().map_err(io_err(path))
}

pub fn read_lines(path: &Path) -> Result<Vec<String>, IoError> {
    LineReader::open(path)?.collect()
}

pub fn write_lines<S: AsRef<str>>(lines: &[S], path: &Path) -> Result<(), IoError> {
    let mut out = create(path)?;
    write_lines_to(lines, &mut out).map_err(io_err(path))
}

pub fn write_lines_to<S: AsRef<str>, W: Write>(lines: &[S], out: &mut W) -> io::Result<()> {
    for l in lines {
        out.write_all(l.as_ref().as_bytes())?;
        out.write_all(b"\n")?;
    }
    out.flush()
}
