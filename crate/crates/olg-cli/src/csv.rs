//! Deterministic CSV emission.
//!
//! RFC-4180-style quoting, `.` decimal separator, LF line endings, and a
//! schema-hash comment line ahead of the header so downstream tools can pin
//! the column layout. Numbers are written as shortest round-trip decimals.

use std::fs;
use std::io;
use std::path::Path;

/// Quotes a field when it contains a comma, quote, or newline.
pub fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Shortest decimal that round-trips to the same f64: positional when it is
/// no longer than scientific, scientific otherwise (so extreme magnitudes do
/// not degenerate into hundreds of zeros).
pub fn fmt_num(x: f64) -> String {
    let plain = format!("{x}");
    let sci = format!("{x:e}");
    if plain.len() <= sci.len() {
        plain
    } else {
        sci
    }
}

/// FNV-1a 64-bit hash of the header line.
pub fn schema_hash(header: &str) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    for byte in header.as_bytes() {
        hash ^= u64::from(*byte);
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

/// The `# schema-hash: ...` comment emitted above the header.
pub fn schema_line(header: &str) -> String {
    format!("# schema-hash: {:016x}", schema_hash(header))
}

/// Writes the file atomically: temp file in the same directory, then rename.
pub fn write_atomic(path: &Path, content: &str) -> io::Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, content)?;
    fs::rename(&tmp, path)
}
