use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use super::{parse_bfile, BFile, SequenceId};
use crate::error::{DyckError, Result};

pub const DEFAULT_BASE_URL: &str = "https://oeis.org";

#[derive(Debug, Clone)]
pub struct FetchConfig {
    /// Host serving `/A036991/b036991.txt` style resources.
    pub base_url: String,
    pub cache_dir: PathBuf,
    /// Read the cache only; never touch the network.
    pub offline: bool,
    pub timeout: Duration,
}

impl Default for FetchConfig {
    fn default() -> Self {
        FetchConfig {
            base_url: DEFAULT_BASE_URL.to_string(),
            cache_dir: PathBuf::from(".oeis-cache"),
            offline: false,
            timeout: Duration::from_secs(30),
        }
    }
}

/// One file per sequence, holding the verbatim b-file bytes.
pub fn cache_path(cache_dir: &Path, id: SequenceId) -> PathBuf {
    cache_dir.join(id.bfile_name())
}

pub fn read_cached(cache_dir: &Path, id: SequenceId) -> Result<BFile> {
    let path = cache_path(cache_dir, id);
    match std::fs::read_to_string(&path) {
        Ok(text) => Ok(parse_bfile(&text)?.with_id(id)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            Err(DyckError::CacheMiss(id.to_string()))
        }
        Err(e) => Err(e.into()),
    }
}

/// Downloads the b-file for `id`, stores it in the cache and parses it.
/// In offline mode only the cache is consulted.
pub fn fetch_bfile(id: SequenceId, config: &FetchConfig) -> Result<BFile> {
    if config.offline {
        return read_cached(&config.cache_dir, id);
    }
    let url = format!(
        "{}/{}/{}",
        config.base_url.trim_end_matches('/'),
        id,
        id.bfile_name()
    );
    let agent: ureq::Agent = ureq::Agent::config_builder()
        .timeout_global(Some(config.timeout))
        .build()
        .into();
    let mut response = agent
        .get(&url)
        .call()
        .map_err(|e| DyckError::Network(format!("GET {url}: {e}")))?;
    let text = response
        .body_mut()
        .read_to_string()
        .map_err(|e| DyckError::Network(format!("reading {url}: {e}")))?;
    // Parse before caching so a bad payload never replaces a good file.
    let bfile = parse_bfile(&text)?.with_id(id);
    write_atomic(&cache_path(&config.cache_dir, id), text.as_bytes())?;
    Ok(bfile)
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    std::fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path)
        .map_err(|e| DyckError::Io(e.to_string()))?;
    Ok(())
}
