//! The JSON table format for structure functions and cocycles.
//!
//! A file carries a header (`format_version`, `role`, `field`, `window`)
//! and an entry array of `{m, n, value}` with values as canonical scalar
//! literals. Structure tables must cover the window square exactly;
//! cocycle tables may be sparse (solver outputs cover a constrained
//! region, not the full square). Output is deterministic: entries sorted
//! by `(m, n)`, canonical literals, atomic temp-file-rename writes.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use prelie_witt::central::Cocycle;
use prelie_witt::scalar::{FieldMode, Scalar};
use prelie_witt::witt::{GradedLSA, IndexWindow};

use crate::error::CliError;
use crate::literal::parse_scalar;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Structure,
    Omega,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldTag {
    Gaussian,
    Symbolic,
}

impl From<FieldTag> for FieldMode {
    fn from(tag: FieldTag) -> FieldMode {
        match tag {
            FieldTag::Gaussian => FieldMode::Gaussian,
            FieldTag::Symbolic => FieldMode::Symbolic,
        }
    }
}

impl From<FieldMode> for FieldTag {
    fn from(mode: FieldMode) -> FieldTag {
        match mode {
            FieldMode::Gaussian => FieldTag::Gaussian,
            FieldMode::Symbolic => FieldTag::Symbolic,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Entry {
    pub m: i64,
    pub n: i64,
    pub value: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableFile {
    pub format_version: u32,
    pub role: Role,
    pub field: FieldTag,
    pub window: i64,
    pub entries: Vec<Entry>,
}

impl TableFile {
    fn from_map(
        role: Role,
        mode: FieldMode,
        window: IndexWindow,
        map: &BTreeMap<(i64, i64), Scalar>,
    ) -> TableFile {
        let entries = map
            .iter()
            .map(|((m, n), value)| Entry {
                m: *m,
                n: *n,
                value: value.to_string(),
            })
            .collect();
        TableFile {
            format_version: FORMAT_VERSION,
            role,
            field: mode.into(),
            window: window.half_width(),
            entries,
        }
    }
}

/// Serialize a table-backed structure.
pub fn structure_to_file(algebra: &GradedLSA) -> Result<TableFile, CliError> {
    let window = algebra
        .window()
        .ok_or_else(|| CliError::InvalidParams("not a table-backed structure".into()))?;
    let entries = algebra.table_entries().expect("table");
    Ok(TableFile::from_map(
        Role::Structure,
        algebra.mode(),
        window,
        entries,
    ))
}

/// Serialize a cocycle table (sparse entries allowed).
pub fn omega_to_file(
    entries: &BTreeMap<(i64, i64), Scalar>,
    mode: FieldMode,
    window: IndexWindow,
) -> TableFile {
    TableFile::from_map(Role::Omega, mode, window, entries)
}

fn parse_entries(file: &TableFile) -> Result<BTreeMap<(i64, i64), Scalar>, CliError> {
    if file.format_version != FORMAT_VERSION {
        return Err(CliError::Parse(format!(
            "unsupported format_version {}",
            file.format_version
        )));
    }
    let mode: FieldMode = file.field.into();
    let mut map = BTreeMap::new();
    for entry in &file.entries {
        let value = parse_scalar(&entry.value, mode)
            .map_err(|e| CliError::Parse(format!("entry ({},{}): {e}", entry.m, entry.n)))?;
        if map.insert((entry.m, entry.n), value).is_some() {
            return Err(CliError::Parse(format!(
                "duplicate entry ({},{})",
                entry.m, entry.n
            )));
        }
    }
    Ok(map)
}

/// Interpret a file as a structure table (role and totality enforced).
pub fn file_to_structure(file: &TableFile) -> Result<GradedLSA, CliError> {
    if file.role != Role::Structure {
        return Err(CliError::Parse(
            "expected a table with role \"structure\"".into(),
        ));
    }
    let window = IndexWindow::new(file.window)
        .map_err(|e| CliError::Parse(format!("bad window: {e}")))?;
    let entries = parse_entries(file)?;
    GradedLSA::from_table(entries, window)
        .map_err(|e| CliError::Parse(format!("structure table: {e}")))
}

/// Interpret a file as a cocycle table.
pub fn file_to_cocycle(file: &TableFile) -> Result<Cocycle, CliError> {
    if file.role != Role::Omega {
        return Err(CliError::Parse("expected a table with role \"omega\"".into()));
    }
    let window = IndexWindow::new(file.window)
        .map_err(|e| CliError::Parse(format!("bad window: {e}")))?;
    let entries = parse_entries(file)?;
    Cocycle::table(entries, window).map_err(|e| CliError::Parse(format!("cocycle table: {e}")))
}

pub fn read_table_file(path: &Path) -> Result<TableFile, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

/// Atomic write: serialize to a sibling temp file, then rename over the
/// target.
pub fn write_table_file(path: &Path, file: &TableFile) -> Result<(), CliError> {
    let json = serde_json::to_string_pretty(file).expect("serializable");
    let mut tmp = path.to_path_buf();
    let mut name = path
        .file_name()
        .map(|n| n.to_os_string())
        .unwrap_or_else(|| "table.json".into());
    name.push(".tmp");
    tmp.set_file_name(name);
    fs::write(&tmp, json.as_bytes())
        .map_err(|e| CliError::Parse(format!("cannot write {}: {e}", tmp.display())))?;
    fs::rename(&tmp, path)
        .map_err(|e| CliError::Parse(format!("cannot rename into {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use prelie_witt::families::{make_family, FamilyParams};

    #[test]
    fn structure_round_trip() {
        let w = IndexWindow::new(3).unwrap();
        let algebra = make_family(&FamilyParams::VAlphaEps {
            alpha: Scalar::from_pair(0, 1, FieldMode::Gaussian),
            eps: Scalar::from_pair(2, 1, FieldMode::Gaussian),
        })
        .unwrap()
        .to_table(&w)
        .unwrap();
        let file = structure_to_file(&algebra).unwrap();
        let back = file_to_structure(&file).unwrap();
        assert_eq!(back.table_entries(), algebra.table_entries());
    }

    #[test]
    fn symbolic_round_trip() {
        let w = IndexWindow::new(2).unwrap();
        let algebra = make_family(&FamilyParams::VAlphaEps {
            alpha: Scalar::alpha(),
            eps: Scalar::eps(),
        })
        .unwrap()
        .to_table(&w)
        .unwrap();
        let file = structure_to_file(&algebra).unwrap();
        assert_eq!(file.field, FieldTag::Symbolic);
        let back = file_to_structure(&file).unwrap();
        assert_eq!(back.table_entries(), algebra.table_entries());
    }

    #[test]
    fn duplicate_entries_rejected() {
        let file = TableFile {
            format_version: 1,
            role: Role::Structure,
            field: FieldTag::Gaussian,
            window: 2,
            entries: vec![
                Entry {
                    m: 0,
                    n: 0,
                    value: "1".into(),
                },
                Entry {
                    m: 0,
                    n: 0,
                    value: "2".into(),
                },
            ],
        };
        assert!(matches!(
            file_to_structure(&file),
            Err(CliError::Parse(_))
        ));
    }
}
