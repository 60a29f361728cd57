//! Output-file handling: render in memory, then write atomically so the
//! output path is never left half-written on failure.

use std::path::Path;

use crate::commands::CliError;

pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let mut builder = tempfile::Builder::new();
    builder.prefix(".dqft-");
    let file = match dir {
        Some(dir) => builder.tempfile_in(dir),
        None => builder.tempfile_in("."),
    }
    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    std::io::Write::write_all(&mut file.as_file(), bytes)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    file.persist(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(())
}
