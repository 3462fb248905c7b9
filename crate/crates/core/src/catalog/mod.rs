//! Catalog of minimal 2-infinite diagrams: the infinite series, fixed tables,
//! generated tables, persistence and lookup.

mod fixtures;
mod generate;
mod io;
mod label;
mod series;

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::bm::BmError;
use crate::canon::{canonical_form_with_limit, skeleton_form, CanonError, CanonicalForm, SkeletonForm};
use crate::diagram::{Diagram, DiagramError, MAX_VERTICES};
use crate::dynkin::AffineType;
use crate::explorer::ExploreError;

pub use fixtures::{table2_entries, table3_f4_fixtures};
pub use generate::{
    generate_exceptional, generate_exceptional_diagrams, generate_minimal_by_extension, orient_all_cycles,
};
pub use io::{load_catalog, parse_catalog, render_catalog, save_catalog, CATALOG_HEADER};
pub use label::{assign_labels, shape_parts};
pub use series::{make_series, match_series, OrientationSpec, Series};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error(transparent)]
    Explore(#[from] ExploreError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Bm(#[from] BmError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableId {
    /// Non-oriented weighted cycles.
    Table2,
    /// The F4 family.
    Table3,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EntryKind {
    Series(Series),
    Fixture(TableId),
    /// Produced by one-vertex extension; the number is the rank of the base
    /// (`6..=8` for the simply-laced tables, `n - 1` for weighted ones).
    Generated(usize),
}

impl fmt::Display for EntryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntryKind::Series(s) => {
                let ps: Vec<String> = s.params().iter().map(|p| p.1.to_string()).collect();
                write!(f, "series:{}:{}", s.family(), ps.join(","))
            }
            EntryKind::Fixture(TableId::Table2) => f.write_str("fixture:table2"),
            EntryKind::Fixture(TableId::Table3) => f.write_str("fixture:table3"),
            EntryKind::Generated(b) => write!(f, "generated:{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CatalogEntry {
    pub label: String,
    pub kind: EntryKind,
    pub form: CanonicalForm,
    pub skeleton_form: SkeletonForm,
}

impl CatalogEntry {
    pub fn new(label: String, kind: EntryKind, d: &Diagram) -> Result<Self, CatalogError> {
        Ok(CatalogEntry {
            label,
            kind,
            form: canonical_form_with_limit(d, MAX_VERTICES)?,
            skeleton_form: skeleton_form(d)?,
        })
    }

    pub fn diagram(&self) -> Diagram {
        self.form.to_diagram()
    }

    pub fn has_non_oriented_cycle(&self) -> bool {
        self.diagram().has_non_oriented_cycle()
    }

    /// Family tag for series, the label otherwise.
    pub fn family(&self) -> &str {
        match &self.kind {
            EntryKind::Series(s) => s.family(),
            _ => &self.label,
        }
    }
}

/// Entries indexed by underlying weighted graph and non-oriented flag.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    index: HashMap<(SkeletonForm, bool), usize>,
}

impl Catalog {
    pub fn new(entries: Vec<CatalogEntry>) -> Self {
        let mut c = Catalog::default();
        for e in entries {
            c.push(e);
        }
        c
    }

    /// Adds an entry unless its shape is already present.
    pub fn push(&mut self, e: CatalogEntry) -> bool {
        let key = (e.skeleton_form.clone(), e.has_non_oriented_cycle());
        if self.index.contains_key(&key) {
            return false;
        }
        self.index.insert(key, self.entries.len());
        self.entries.push(e);
        true
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lookup(&self, sk: &SkeletonForm, non_oriented: bool) -> Option<&CatalogEntry> {
        self.index.get(&(sk.clone(), non_oriented)).map(|&i| &self.entries[i])
    }

    /// Fixed tables plus the shipped generated tables.
    pub fn builtin() -> &'static Catalog {
        static CAT: OnceLock<Catalog> = OnceLock::new();
        CAT.get_or_init(|| {
            let mut c = Catalog::default();
            for (label, d) in table2_entries() {
                c.push(CatalogEntry::new(label, EntryKind::Fixture(TableId::Table2), &d).unwrap());
            }
            for (label, d) in table3_f4_fixtures() {
                c.push(CatalogEntry::new(label, EntryKind::Fixture(TableId::Table3), &d).unwrap());
            }
            for text in GOLDEN {
                for e in parse_catalog(text).expect("shipped catalogs parse") {
                    c.push(e);
                }
            }
            c
        })
    }
}

/// Shipped generated tables.
pub const GOLDEN_BASE6: &str = include_str!("../../data/base6.catalog");
pub const GOLDEN_BASE7: &str = include_str!("../../data/base7.catalog");
pub const GOLDEN_BASE8: &str = include_str!("../../data/base8.catalog");
pub const GOLDEN_WEIGHTED: &str = include_str!("../../data/weighted.catalog");
const GOLDEN: [&str; 4] = [GOLDEN_WEIGHTED, GOLDEN_BASE6, GOLDEN_BASE7, GOLDEN_BASE8];

/// Catalog entry whose shape matches `d`.
///
/// Non-oriented cycles only occur in `A_n^(1)` and the weighted cycles; all
/// other entries have every cycle oriented. Series are recognized for any
/// size; everything else is a lookup by underlying weighted graph.
pub fn match_entry(d: &Diagram) -> Option<CatalogEntry> {
    if !d.is_connected() {
        return None;
    }
    if let Some(s) = match_series(d) {
        return CatalogEntry::new(s.label(), EntryKind::Series(s), d).ok();
    }
    let sk = skeleton_form(d).ok()?;
    Catalog::builtin().lookup(&sk, d.has_non_oriented_cycle()).cloned()
}

/// Labels weighted extension results: series and fixed tables keep their
/// names, the rest are named after the extended type of their class.
pub fn label_extension_results(
    n: usize,
    ds: &[Diagram],
    lim: crate::explorer::ExplorationLimits,
) -> Result<Vec<CatalogEntry>, CatalogError> {
    let fixed = {
        let mut c = Catalog::default();
        for (label, d) in table2_entries() {
            c.push(CatalogEntry::new(label, EntryKind::Fixture(TableId::Table2), &d)?);
        }
        for (label, d) in table3_f4_fixtures() {
            c.push(CatalogEntry::new(label, EntryKind::Fixture(TableId::Table3), &d)?);
        }
        c
    };
    let mut out: Vec<Option<CatalogEntry>> = vec![None; ds.len()];
    // family label -> (index, exact affine label if the diagram is one)
    let mut groups: std::collections::BTreeMap<String, Vec<(usize, Option<String>)>> = Default::default();
    for (i, d) in ds.iter().enumerate() {
        let sk = skeleton_form(d)?;
        if let Some(s) = match_series(d) {
            out[i] = Some(CatalogEntry::new(s.label(), EntryKind::Series(s), d)?);
        } else if let Some(e) = fixed.lookup(&sk, d.has_non_oriented_cycle()) {
            out[i] = Some(CatalogEntry { form: canonical_form_with_limit(d, MAX_VERTICES)?, ..e.clone() });
        } else {
            let exact = AffineType::all_with_vertices(d.n())
                .into_iter()
                .find(|t| skeleton_form(&t.diagram()).ok().as_ref() == Some(&sk))
                .map(|t| t.label());
            let x = crate::explorer::find_extended_dynkin_rep(d, lim)?
                .map(|(t, _)| t.family_label())
                .unwrap_or_else(|| "unlabeled".to_string());
            groups.entry(x).or_default().push((i, exact));
        }
    }
    for (x, idx) in groups {
        let members: Vec<Diagram> = idx.iter().map(|&(i, _)| ds[i].clone()).collect();
        for ((i, exact), l) in idx.into_iter().zip(assign_labels(&x, &members)) {
            out[i] = Some(CatalogEntry::new(exact.unwrap_or(l), EntryKind::Generated(n - 1), &ds[i])?);
        }
    }
    Ok(out.into_iter().map(|e| e.expect("every diagram labeled")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_basics() {
        let cyc = Diagram::new(5, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (0, 4, 1)]).unwrap();
        assert_eq!(match_entry(&cyc).unwrap().family(), "A_n^(1)");
        let c5 = Series::AffineC { n: 5 }.diagram().unwrap();
        assert_eq!(match_entry(&c5).unwrap().family(), "C_n^(1)");
        let tri = Diagram::new(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        assert!(match_entry(&tri).is_none());
        let oriented = Diagram::new(5, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 0, 1)]).unwrap();
        assert!(match_entry(&oriented).is_none());
    }

    #[test]
    fn fixtures_are_indexed() {
        for (label, d) in table2_entries().into_iter().chain(table3_f4_fixtures()) {
            assert_eq!(match_entry(&d).unwrap().label, label);
        }
    }
}
