//! File formats, reports, configuration and parallel execution around
//! [`bitextkit_core`].

pub mod config;
pub mod exec;
pub mod io;
pub mod model_file;
pub mod pipeline;
pub mod report;

use bitextkit_core::CognatePair;

pub use bitextkit_core as core;

pub const COGNATE_DUMP_HEADER: &str =
    "sentence\tsource_position\ttarget_position\tsource_word\ttarget_word\tdistance\tnormalized_distance";

/// TSV rows of cognate pairs, header first.
pub fn cognate_dump(pairs: &[CognatePair]) -> String {
    let mut out = String::from(COGNATE_DUMP_HEADER);
    out.push('\n');
    for p in pairs {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            p.source_sentence_index,
            p.source_position,
            p.target_position,
            p.source_word,
            p.target_word,
            p.distance,
            p.normalized_distance
        ));
    }
    out
}
