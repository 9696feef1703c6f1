//! Persisted sets of isomorphism classes.
//!
//! Text format, LF line endings, `#` starts a comment line:
//!
//! ```text
//! order=4
//! 0,0,0,0,1,0,0,0,2,0,0,0,3,0,0,0;97
//! ```
//!
//! Each entry is the canonical table (row-major, comma separated) and its
//! [`PropertyMask`] in lowercase hex. Entries are written in ascending
//! order of their tables.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use crate::algebra::Algebra;
use crate::canonical::Canonicalizer;
use crate::error::{Error, Result};
use crate::mask::PropertyMask;
use crate::table::{self, CayleyTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoClassCatalog {
    order: usize,
    entries: BTreeMap<CayleyTable, PropertyMask>,
}

impl IsoClassCatalog {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            entries: BTreeMap::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in ascending order of their canonical tables.
    pub fn entries(&self) -> impl Iterator<Item = (&CayleyTable, PropertyMask)> {
        self.entries.iter().map(|(t, &m)| (t, m))
    }

    pub fn tables(&self) -> impl Iterator<Item = &CayleyTable> {
        self.entries.keys()
    }

    pub fn contains(&self, canonical: &CayleyTable) -> bool {
        self.entries.contains_key(canonical)
    }

    pub fn mask_of(&self, canonical: &CayleyTable) -> Option<PropertyMask> {
        self.entries.get(canonical).copied()
    }

    /// Classes whose mask contains all of `flags`.
    pub fn filtered(&self, flags: PropertyMask) -> Self {
        Self {
            order: self.order,
            entries: self
                .entries
                .iter()
                .filter(|(_, m)| m.contains(flags))
                .map(|(t, &m)| (t.clone(), m))
                .collect(),
        }
    }

    pub(crate) fn insert_canonical(&mut self, t: CayleyTable, mask: PropertyMask) {
        debug_assert_eq!(t.order(), self.order);
        self.entries.insert(t, mask);
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "order={}", self.order)?;
        for (t, mask) in self.entries() {
            let flat: Vec<String> = t.cells().iter().map(|v| v.to_string()).collect();
            writeln!(w, "{};{:x}", flat.join(","), mask)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("catalog text is ascii")
    }

    /// Reads and validates a catalog: every entry must be a weak
    /// BCC-algebra of the declared order, in canonical form, with the
    /// property mask recomputed from its table.
    pub fn read_from<R: BufRead>(r: R) -> Result<Self> {
        let mut catalog: Option<(IsoClassCatalog, Canonicalizer)> = None;
        for (i, line) in r.lines().enumerate() {
            let line = line?;
            let lineno = i + 1;
            let text = line.trim_end_matches('\r');
            if text.starts_with('#') || text.trim().is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line: lineno, message };
            let Some((cat, canon)) = catalog.as_mut() else {
                let n = text
                    .strip_prefix("order=")
                    .and_then(|v| v.trim().parse::<usize>().ok())
                    .filter(|&n| (1..=table::MAX_ORDER).contains(&n))
                    .ok_or_else(|| err(format!("expected header `order=<n>`, found `{text}`")))?;
                catalog = Some((IsoClassCatalog::new(n), Canonicalizer::new(n)));
                continue;
            };
            let n = cat.order;
            let (flat, hex) = text
                .split_once(';')
                .ok_or_else(|| err("expected `<table>;<mask>`".into()))?;
            let cells = flat
                .split(',')
                .map(|v| v.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| err(format!("bad table entry: {e}")))?;
            if cells.len() != n * n {
                return Err(err(format!(
                    "order mismatch: {} entries, order {n} needs {}",
                    cells.len(),
                    n * n
                )));
            }
            let t = CayleyTable::new(n, &cells).map_err(|e| err(e.to_string()))?;
            let stored = u32::from_str_radix(hex.trim(), 16)
                .map(PropertyMask)
                .map_err(|e| err(format!("bad mask `{hex}`: {e}")))?;
            let alg = Algebra::new(t).map_err(|e| err(e.to_string()))?;
            if canon.canonical_cells(alg.table().cells()) != alg.table().cells() {
                return Err(err("entry is not in canonical form".into()));
            }
            let computed = PropertyMask::of(&alg);
            if computed != stored {
                return Err(err(format!("mask {stored:x} does not match recomputed {computed:x}")));
            }
            if cat.entries.insert(alg.into_table(), stored).is_some() {
                return Err(err("duplicate entry".into()));
            }
        }
        catalog.map(|(c, _)| c).ok_or_else(|| Error::Parse {
            line: 0,
            message: "missing header `order=<n>`".into(),
        })
    }

    pub fn from_text(text: &str) -> Result<Self> {
        Self::read_from(text.as_bytes())
    }

    pub fn write_file(&self, path: impl AsRef<std::path::Path>) -> Result<()> {
        let f = std::fs::File::create(path)?;
        self.write_to(std::io::BufWriter::new(f))
    }

    pub fn read_file(path: impl AsRef<std::path::Path>) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        Self::read_from(std::io::BufReader::new(f))
    }
}
