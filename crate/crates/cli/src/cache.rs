//! On-disk cache of computed levels and cores.
//!
//! One file per `(kind, n)`: a header line `# kind n count` followed by one
//! decimal term per line. The bytes depend only on `(kind, n)`.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheKind {
    Level,
    Core,
}

impl fmt::Display for CacheKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CacheKind::Level => "level",
            CacheKind::Core => "core",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheEntry {
    pub kind: CacheKind,
    pub n: u32,
    pub terms: Vec<u64>,
}

impl CacheEntry {
    pub fn file_name(kind: CacheKind, n: u32) -> String {
        format!("{kind}-{n}.txt")
    }

    pub fn render(&self) -> String {
        let mut out = format!("# {} {} {}\n", self.kind, self.n, self.terms.len());
        for t in &self.terms {
            out.push_str(&t.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses a file written by [`CacheEntry::render`] and checks it against
    /// the expected `(kind, n)`.
    pub fn parse(text: &str, kind: CacheKind, n: u32) -> Result<Self, String> {
        let mut lines = text.lines();
        let header = lines.next().ok_or("empty file")?;
        let fields: Vec<&str> = header.split(' ').collect();
        let expected_head = ["#".to_string(), kind.to_string(), n.to_string()];
        if fields.len() != 4 || fields[..3] != expected_head {
            return Err(format!("bad header {header:?}"));
        }
        let count: usize = fields[3]
            .parse()
            .map_err(|_| format!("bad count {:?}", fields[3]))?;
        let terms = lines
            .map(|l| l.parse::<u64>().map_err(|_| format!("bad term {l:?}")))
            .collect::<Result<Vec<_>, _>>()?;
        if terms.len() != count {
            return Err(format!(
                "header says {count} terms, file has {}",
                terms.len()
            ));
        }
        if !terms.windows(2).all(|w| w[0] < w[1]) {
            return Err("terms are not ascending".into());
        }
        Ok(CacheEntry { kind, n, terms })
    }
}

/// Cache rooted at a directory; `None` disables reads and writes.
pub struct TermCache {
    dir: Option<PathBuf>,
}

impl TermCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        TermCache { dir }
    }

    fn path(&self, kind: CacheKind, n: u32) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(CacheEntry::file_name(kind, n)))
    }

    /// Cached terms for `(kind, n)`, or `compute()` stored for next time.
    pub fn get_or_compute(
        &self,
        kind: CacheKind,
        n: u32,
        compute: impl FnOnce() -> Result<Vec<u64>, CliError>,
    ) -> Result<Vec<u64>, CliError> {
        let Some(path) = self.path(kind, n) else {
            return compute();
        };
        match fs::read_to_string(&path) {
            Ok(text) => {
                return CacheEntry::parse(&text, kind, n)
                    .map(|e| e.terms)
                    .map_err(|message| CliError::Cache { path, message });
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(source) => return Err(CliError::Io { path, source }),
        }
        let terms = compute()?;
        let entry = CacheEntry { kind, n, terms };
        write_atomic(&path, entry.render().as_bytes())?;
        Ok(entry.terms)
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(io)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, bytes).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}
