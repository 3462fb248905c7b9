//! Line-oriented catalog files: `label TAB kind TAB hex(canonical form)`.

use std::path::Path;

use crate::canon::{skeleton_form, CanonicalForm};

use super::{CatalogEntry, CatalogError, EntryKind, Series, TableId};

pub const CATALOG_HEADER: &str = "# cluster-recog catalog v1";

pub fn render_catalog(entries: &[CatalogEntry]) -> String {
    let mut s = String::from(CATALOG_HEADER);
    s.push('\n');
    for e in entries {
        s.push_str(&format!("{}\t{}\t{}\n", e.label, e.kind, e.form.to_hex()));
    }
    s
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    let err = |line: usize, message: String| CatalogError::Format { line, message };
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim_end() == CATALOG_HEADER => {}
        _ => return Err(err(1, format!("expected header {CATALOG_HEADER:?}"))),
    }
    let mut out = Vec::new();
    for (i, line) in lines {
        let ln = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [label, kind, form] = fields[..] else {
            return Err(err(ln, format!("expected 3 tab-separated fields, found {}", fields.len())));
        };
        if label.is_empty() {
            return Err(err(ln, "empty label".into()));
        }
        let kind = parse_kind(kind).map_err(|m| err(ln, m))?;
        let form = CanonicalForm::from_hex(form).map_err(|e| err(ln, e.to_string()))?;
        let skeleton_form = skeleton_form(&form.to_diagram()).map_err(|e| err(ln, e.to_string()))?;
        out.push(CatalogEntry { label: label.to_string(), kind, form, skeleton_form });
    }
    Ok(out)
}

fn parse_kind(s: &str) -> Result<EntryKind, String> {
    if let Some(rest) = s.strip_prefix("series:") {
        let (family, params) = rest.rsplit_once(':').ok_or("series kind needs family:params")?;
        let ps: Vec<u64> = params
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|e| format!("parameter {p:?}: {e}")))
            .collect::<Result<_, _>>()?;
        return Series::from_family(family, &ps).map(EntryKind::Series).map_err(|e| e.to_string());
    }
    match s {
        "fixture:table2" => Ok(EntryKind::Fixture(TableId::Table2)),
        "fixture:table3" => Ok(EntryKind::Fixture(TableId::Table3)),
        _ => match s.strip_prefix("generated:").map(str::parse::<usize>) {
            Some(Ok(b)) => Ok(EntryKind::Generated(b)),
            _ => Err(format!("unknown kind {s:?}")),
        },
    }
}

pub fn save_catalog(entries: &[CatalogEntry], path: &Path) -> Result<(), CatalogError> {
    std::fs::write(path, render_catalog(entries))?;
    Ok(())
}

pub fn load_catalog(path: &Path) -> Result<Vec<CatalogEntry>, CatalogError> {
    parse_catalog(&std::fs::read_to_string(path)?)
}
