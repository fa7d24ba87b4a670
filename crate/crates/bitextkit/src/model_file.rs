//! Language-identification model files (`LIDM` binary format).

use std::path::{Path, PathBuf};

use bitextkit_core::{LangIdModel, ModelError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModelFileError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Model { path: PathBuf, source: ModelError },
}

pub fn save_model(model: &LangIdModel, path: &Path) -> Result<(), ModelFileError> {
    std::fs::write(path, model.to_bytes())
        .map_err(|source| ModelFileError::Io { path: path.to_path_buf(), source })
}

pub fn load_model(path: &Path) -> Result<LangIdModel, ModelFileError> {
    let bytes = std::fs::read(path)
        .map_err(|source| ModelFileError::Io { path: path.to_path_buf(), source })?;
    LangIdModel::from_bytes(&bytes)
        .map_err(|source| ModelFileError::Model { path: path.to_path_buf(), source })
}
