//! JSON-lines catalog files: one `CatalogEntry` per line.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use ldp_core::enumeration::CatalogEntry;
use serde::Serialize;

pub fn write_entries<W: Write>(mut out: W, entries: &[CatalogEntry]) -> Result<()> {
    for entry in entries {
        serde_json::to_writer(&mut out, entry)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn save(path: &Path, entries: &[CatalogEntry]) -> Result<()> {
    let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    write_entries(BufWriter::new(file), entries)
}

pub fn load(path: &Path) -> Result<Vec<CatalogEntry>> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    let mut entries = Vec::new();
    for (k, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let entry = serde_json::from_str(&line)
            .with_context(|| format!("{}:{}: malformed catalog line", path.display(), k + 1))?;
        entries.push(entry);
    }
    Ok(entries)
}

/// Run metadata kept next to a catalog so the catalog itself stays
/// byte-identical across runs.
#[derive(Serialize)]
pub struct Sidecar {
    pub box_n: i64,
    pub jobs: Option<usize>,
    pub classes: usize,
    pub elapsed_ms: u128,
}

pub fn sidecar_path(catalog: &Path) -> std::path::PathBuf {
    let mut name = catalog.as_os_str().to_owned();
    name.push(".meta.json");
    name.into()
}
