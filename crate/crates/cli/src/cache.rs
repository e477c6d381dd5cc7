//! On-disk memo of path counts: a versioned header, then one
//! `kind<TAB>parts<TAB>value` record per line.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigUint;
use rock_core::partitions::{path_count_table, preload_path_counts};
use rock_core::{Kind, Partition};

pub const HEADER: &str = "rock-kcache v1";

fn kind_tag(k: Kind) -> &'static str {
    match k {
        Kind::Ordinary => "O",
        Kind::Strict => "S",
    }
}

/// Load the cache if the file exists. A missing file is not an error.
pub fn load(path: &Path) -> Result<usize, String> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(format!("cache {}: {e}", path.display())),
    };
    let mut lines = text.lines();
    if lines.next() != Some(HEADER) {
        return Err(format!("cache {}: missing or unknown header", path.display()));
    }
    let mut entries = Vec::new();
    for (n, line) in lines.enumerate().filter(|(_, l)| !l.is_empty()) {
        let bad = || format!("cache {} line {}: malformed record", path.display(), n + 2);
        let mut f = line.split('\t');
        let (Some(k), Some(parts), Some(v), None) = (f.next(), f.next(), f.next(), f.next()) else {
            return Err(bad());
        };
        let kind = match k {
            "O" => Kind::Ordinary,
            "S" => Kind::Strict,
            _ => return Err(bad()),
        };
        let lam = Partition::from_str(parts).map_err(|_| bad())?;
        if !lam.is_kind(kind) {
            return Err(bad());
        }
        let v = BigUint::from_str(v).map_err(|_| bad())?;
        entries.push((kind, lam, v));
    }
    let n = entries.len();
    preload_path_counts(entries);
    Ok(n)
}

pub fn save(path: &Path) -> Result<(), String> {
    let err = |e: std::io::Error| format!("cache {}: {e}", path.display());
    let table = path_count_table();
    let mut w = BufWriter::new(fs::File::create(path).map_err(err)?);
    writeln!(w, "{HEADER}").map_err(err)?;
    for (k, lam, v) in table {
        let parts: Vec<String> = lam.parts().iter().map(u32::to_string).collect();
        writeln!(w, "{}\t{}\t{v}", kind_tag(k), parts.join(",")).map_err(err)?;
    }
    w.flush().map_err(err)
}
