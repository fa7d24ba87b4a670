//! Versioned binary model format.
//!
//! ```text
//! "LIDM" | version: u8 | n_langs: u32 | n_langs x (len: u32, utf8)
//!        | ngram_min: u8 | ngram_max: u8 | alpha: f64
//!        | n_feats: u32 | n_feats x (len: u32, utf8)
//!        | n_langs x log_prior: f64 | n_feats * n_langs x log_likelihood: f64
//! ```
//!
//! Integers and IEEE-754 bit patterns are little-endian. Log-likelihoods are
//! stored feature-major. Trailing bytes are rejected.

use alloc::string::String;
use alloc::vec::Vec;

use super::{LangIdModel, ModelError};
use crate::corpus::LangCode;

pub const MAGIC: &[u8; 4] = b"LIDM";
pub const FORMAT_VERSION: u8 = 1;

impl LangIdModel {
    pub fn to_bytes(&self) -> Vec<u8> {
        let n_langs = self.languages.len();
        let mut out = Vec::with_capacity(
            16 + self.vocabulary.len() * (8 + 8 * n_langs) + 8 * n_langs,
        );
        out.extend_from_slice(MAGIC);
        out.push(FORMAT_VERSION);
        put_u32(&mut out, n_langs as u32);
        for lang in &self.languages {
            put_str(&mut out, lang);
        }
        out.push(self.ngram_min as u8);
        out.push(self.ngram_max as u8);
        put_f64(&mut out, self.smoothing_alpha);
        put_u32(&mut out, self.vocabulary.len() as u32);
        for gram in &self.vocabulary {
            put_str(&mut out, gram);
        }
        for &p in &self.log_prior {
            put_f64(&mut out, p);
        }
        for &ll in &self.log_likelihood {
            put_f64(&mut out, ll);
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, ModelError> {
        let mut r = Reader { bytes, pos: 0 };
        if r.take(4, "missing magic")? != MAGIC {
            return Err(ModelError::Corrupt { offset: 0, reason: "bad magic" });
        }
        let version = r.u8("missing version")?;
        if version != FORMAT_VERSION {
            return Err(ModelError::VersionMismatch { found: version, expected: FORMAT_VERSION });
        }
        let n_langs = r.count("language count", 4)?;
        let mut languages = Vec::with_capacity(n_langs);
        for _ in 0..n_langs {
            languages.push(LangCode::from(r.string("language code")?));
        }
        let ngram_min = r.u8("n-gram range")? as usize;
        let ngram_max = r.u8("n-gram range")? as usize;
        let alpha = r.f64("smoothing alpha")?;
        let n_feats = r.count("vocabulary size", 4)?;
        let mut vocabulary = Vec::with_capacity(n_feats);
        for _ in 0..n_feats {
            vocabulary.push(r.string("vocabulary entry")?);
        }
        let mut log_prior = Vec::with_capacity(n_langs);
        for _ in 0..n_langs {
            log_prior.push(r.f64("log prior")?);
        }
        let cells = n_feats
            .checked_mul(n_langs)
            .ok_or(ModelError::Corrupt { offset: r.pos, reason: "table too large" })?;
        if r.remaining() / 8 < cells {
            return Err(ModelError::Corrupt { offset: bytes.len(), reason: "truncated likelihood table" });
        }
        let mut log_likelihood = Vec::with_capacity(cells);
        for _ in 0..cells {
            log_likelihood.push(r.f64("log likelihood")?);
        }
        if r.remaining() != 0 {
            return Err(ModelError::Corrupt { offset: r.pos, reason: "trailing bytes" });
        }
        let at = r.pos;
        LangIdModel::from_parts(
            languages,
            (ngram_min, ngram_max),
            vocabulary,
            log_likelihood,
            log_prior,
            alpha,
        )
        .map_err(|e| match e {
            ModelError::InvalidConfig(reason) => ModelError::Corrupt { offset: at, reason },
            other => other,
        })
    }
}

fn put_u32(out: &mut Vec<u8>, v: u32) {
    out.extend_from_slice(&v.to_le_bytes());
}

fn put_f64(out: &mut Vec<u8>, v: f64) {
    out.extend_from_slice(&v.to_bits().to_le_bytes());
}

fn put_str(out: &mut Vec<u8>, s: &str) {
    put_u32(out, s.len() as u32);
    out.extend_from_slice(s.as_bytes());
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn remaining(&self) -> usize {
        self.bytes.len() - self.pos
    }

    fn take(&mut self, n: usize, reason: &'static str) -> Result<&'a [u8], ModelError> {
        if self.remaining() < n {
            return Err(ModelError::Corrupt { offset: self.bytes.len(), reason });
        }
        let slice = &self.bytes[self.pos..self.pos + n];
        self.pos += n;
        Ok(slice)
    }

    fn u8(&mut self, reason: &'static str) -> Result<u8, ModelError> {
        Ok(self.take(1, reason)?[0])
    }

    fn u32(&mut self, reason: &'static str) -> Result<u32, ModelError> {
        let b = self.take(4, reason)?;
        Ok(u32::from_le_bytes([b[0], b[1], b[2], b[3]]))
    }

    /// A length prefix that must be satisfiable by the bytes left, given
    /// each element occupies at least `min_size` bytes.
    fn count(&mut self, reason: &'static str, min_size: usize) -> Result<usize, ModelError> {
        let at = self.pos;
        let n = self.u32(reason)? as usize;
        if n.saturating_mul(min_size) > self.remaining() {
            return Err(ModelError::Corrupt { offset: at, reason });
        }
        Ok(n)
    }

    fn f64(&mut self, reason: &'static str) -> Result<f64, ModelError> {
        let b = self.take(8, reason)?;
        let mut raw = [0u8; 8];
        raw.copy_from_slice(b);
        Ok(f64::from_bits(u64::from_le_bytes(raw)))
    }

    fn string(&mut self, reason: &'static str) -> Result<String, ModelError> {
        let len = self.count(reason, 1)?;
        let at = self.pos;
        let raw = self.take(len, reason)?;
        core::str::from_utf8(raw)
            .map(String::from)
            .map_err(|e| ModelError::Corrupt { offset: at + e.valid_up_to(), reason: "invalid UTF-8" })
    }
}
