//! Cayley tables with constant `0`, the weak BCC axioms and the basic
//! classification of an algebra.

use std::fmt;

use serde::Serialize;

use crate::error::Error;

/// An element of a finite algebra, named by its row/column index.
/// The constant `0` is always index `0`.
pub type Element = usize;

/// Largest order a table can have; entries are stored as bytes.
pub const MAX_ORDER: usize = u8::MAX as usize;

/// The operation table of a finite algebra `(X, *, 0)` with `X = {0, .., n-1}`.
///
/// Row `x` holds `x*0, x*1, .., x*(n-1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    n: usize,
    cells: Vec<u8>,
}

impl CayleyTable {
    /// Builds a table from a row-major list of `n*n` entries.
    pub fn new(n: usize, cells: &[usize]) -> Result<Self, Error> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        if cells.len() != n * n {
            return Err(Error::Shape {
                expected: n * n,
                found: cells.len(),
            });
        }
        if let Some(pos) = cells.iter().position(|&v| v >= n) {
            return Err(Error::EntryOutOfRange {
                row: pos / n,
                col: pos % n,
                value: cells[pos],
                order: n,
            });
        }
        Ok(Self {
            n,
            cells: cells.iter().map(|&v| v as u8).collect(),
        })
    }

    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self, Error> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::RowLength {
                    row: i,
                    expected: n,
                    found: row.len(),
                });
            }
            cells.extend_from_slice(row);
        }
        Self::new(n, &cells)
    }

    /// Internal constructor for bytes already known to be in range.
    pub(crate) fn from_bytes(n: usize, cells: Vec<u8>) -> Self {
        debug_assert_eq!(cells.len(), n * n);
        debug_assert!(cells.iter().all(|&v| (v as usize) < n));
        Self { n, cells }
    }

    /// The trivial one-element algebra.
    pub fn trivial() -> Self {
        Self::from_bytes(1, vec![0])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// `x * y`.
    #[inline]
    pub fn op(&self, x: Element, y: Element) -> Element {
        self.cells[x * self.n + y] as Element
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.n
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    /// Row-major entries as plain integers.
    pub fn flat(&self) -> Vec<usize> {
        self.cells.iter().map(|&v| v as usize).collect()
    }

    pub fn row(&self, x: Element) -> &[u8] {
        &self.cells[x * self.n..(x + 1) * self.n]
    }

    /// Returns a copy with cell `(x, y)` set to `v`.
    pub fn with_cell(&self, x: Element, y: Element, v: Element) -> Result<Self, Error> {
        if x >= self.n || y >= self.n || v >= self.n {
            return Err(Error::EntryOutOfRange {
                row: x,
                col: y,
                value: v,
                order: self.n,
            });
        }
        let mut cells = self.cells.clone();
        cells[x * self.n + y] = v as u8;
        Ok(Self { n: self.n, cells })
    }

    /// Applies the relabeling `old -> perm[old]`, giving the isomorphic
    /// table `t'` with `t'[perm x][perm y] = perm(t[x][y])`.
    ///
    /// `perm` must be a permutation of `0..n`; it need not fix `0`.
    pub fn relabel(&self, perm: &[Element]) -> Result<Self, Error> {
        let n = self.n;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::NotAPermutation(perm.to_vec()));
        }
        let mut cells = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                cells[perm[x] * n + perm[y]] = perm[self.op(x, y)] as u8;
            }
        }
        Ok(Self { n, cells })
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyTable({}; ", self.n)?;
        for x in 0..self.n {
            if x > 0 {
                f.write_str(" | ")?;
            }
            for (j, v) in self.row(x).iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        f.write_str(")")
    }
}

/// The four defining axioms of a weak BCC-algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    /// `((x*y)*(z*y))*(x*z) = 0`
    #[serde(rename = "i")]
    I,
    /// `x*x = 0`
    #[serde(rename = "ii")]
    II,
    /// `x*0 = x`
    #[serde(rename = "iii")]
    III,
    /// `x*y = y*x = 0` implies `x = y`
    #[serde(rename = "iv")]
    IV,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [Axiom::I, Axiom::II, Axiom::III, Axiom::IV];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::I => "i",
            Axiom::II => "ii",
            Axiom::III => "iii",
            Axiom::IV => "iv",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Axiom::I => "((x*y)*(z*y))*(x*z) = 0",
            Axiom::II => "x*x = 0",
            Axiom::III => "x*0 = x",
            Axiom::IV => "x*y = y*x = 0 => x = y",
        }
    }

    /// Re-evaluates the axiom at the given elements and reports whether
    /// they violate it. Arity: (i) takes three, (ii)/(iii) one, (iv) two.
    pub fn violated_by(self, t: &CayleyTable, elems: &[Element]) -> bool {
        match (self, elems) {
            (Axiom::I, &[x, y, z]) => t.op(t.op(t.op(x, y), t.op(z, y)), t.op(x, z)) != 0,
            (Axiom::II, &[x]) => t.op(x, x) != 0,
            (Axiom::III, &[x]) => t.op(x, 0) != x,
            (Axiom::IV, &[x, y]) => x != y && t.op(x, y) == 0 && t.op(y, x) == 0,
            _ => false,
        }
    }
}

/// Outcome of checking one axiom; a failure carries the first violating
/// tuple in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomOutcome {
    pub axiom: Axiom,
    pub witness: Option<Vec<Element>>,
}

impl AxiomOutcome {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub outcomes: [AxiomOutcome; 4],
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.outcomes.iter().all(AxiomOutcome::holds)
    }

    pub fn outcome(&self, axiom: Axiom) -> &AxiomOutcome {
        &self.outcomes[axiom as usize]
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomOutcome> {
        self.outcomes.iter().filter(|o| !o.holds())
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for o in self.failures() {
            if !first {
                f.write_str("; ")?;
            }
            first = false;
            write!(
                f,
                "axiom ({}) {} fails at {:?}",
                o.axiom.name(),
                o.axiom.statement(),
                o.witness.as_deref().unwrap_or_default()
            )?;
        }
        if first {
            f.write_str("all axioms hold")?;
        }
        Ok(())
    }
}

/// Checks axioms (i)-(iv) exhaustively: (i) over all `n^3` triples, (ii)
/// and (iii) over all elements, (iv) over all pairs `x < y`.
pub fn check_axioms(t: &CayleyTable) -> AxiomReport {
    let n = t.order();
    let first = |axiom: Axiom, mut tuples: Box<dyn Iterator<Item = Vec<Element>> + '_>| AxiomOutcome {
        axiom,
        witness: tuples.find(|e| axiom.violated_by(t, e)),
    };
    let triples = (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| vec![x, y, z])));
    let singles = || (0..n).map(|x| vec![x]);
    let pairs = (0..n).flat_map(move |x| (x + 1..n).map(move |y| vec![x, y]));
    AxiomReport {
        outcomes: [
            first(Axiom::I, Box::new(triples)),
            first(Axiom::II, Box::new(singles())),
            first(Axiom::III, Box::new(singles())),
            first(Axiom::IV, Box::new(pairs)),
        ],
    }
}

/// The variety an algebra falls into.
///
/// "Proper" is used in two senses: a proper weak BCC-algebra is neither
/// BCC nor BCI, while a proper BCC-algebra is BCC but not BCK.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Classification {
    pub is_weak_bcc: bool,
    pub is_bcc: bool,
    pub is_bci: bool,
    pub is_bck: bool,
    pub is_proper_weak: bool,
    pub is_proper_bcc: bool,
}

/// Classification together with the evidence against BCC and BCI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub flags: Classification,
    /// First `x` with `0*x != 0`.
    pub bcc_witness: Option<Element>,
    /// First `(x, y, z)` with `(x*y)*z != (x*z)*y`.
    pub bci_witness: Option<(Element, Element, Element)>,
}

pub fn bcc_violation(t: &CayleyTable) -> Option<Element> {
    t.elements().find(|&x| t.op(0, x) != 0)
}

pub fn bci_violation(t: &CayleyTable) -> Option<(Element, Element, Element)> {
    let n = t.order();
    for x in 0..n {
        for y in 0..n {
            let xy = t.op(x, y);
            for z in 0..n {
                if t.op(xy, z) != t.op(t.op(x, z), y) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Classifies `t`. A table failing the axioms gets every flag `false`.
pub fn classify(t: &CayleyTable) -> ClassificationReport {
    if !check_axioms(t).all_hold() {
        return ClassificationReport {
            flags: Classification::default(),
            bcc_witness: None,
            bci_witness: None,
        };
    }
    classify_valid(t)
}

/// Classification of a table already known to satisfy the axioms.
pub(crate) fn classify_valid(t: &CayleyTable) -> ClassificationReport {
    let bcc_witness = bcc_violation(t);
    let bci_witness = bci_violation(t);
    let is_bcc = bcc_witness.is_none();
    let is_bci = bci_witness.is_none();
    ClassificationReport {
        flags: Classification {
            is_weak_bcc: true,
            is_bcc,
            is_bci,
            is_bck: is_bcc && is_bci,
            is_proper_weak: !is_bcc && !is_bci,
            is_proper_bcc: is_bcc && !is_bci,
        },
        bcc_witness,
        bci_witness,
    }
}

/// `phi(x) = 0*x`.
#[inline]
pub fn phi(t: &CayleyTable, x: Element) -> Element {
    t.op(0, x)
}

/// `phi(phi(x)) = 0*(0*x)`.
#[inline]
pub fn phi_square(t: &CayleyTable, x: Element) -> Element {
    t.op(0, t.op(0, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables;

    #[test]
    fn table1_satisfies_all_axioms() {
        assert!(check_axioms(&tables::table1()).all_hold());
    }

    #[test]
    fn trivial_algebra_satisfies_all_axioms() {
        let report = check_axioms(&CayleyTable::trivial());
        assert!(report.all_hold());
        assert!(classify(&CayleyTable::trivial()).flags.is_bck);
    }

    #[test]
    fn antisymmetry_failure_has_pair_witness() {
        let broken = tables::table1().with_cell(1, 0, 0).unwrap();
        let report = check_axioms(&broken);
        let iv = report.outcome(Axiom::IV);
        assert_eq!(iv.witness.as_deref(), Some(&[0, 1][..]));
        assert!(Axiom::IV.violated_by(&broken, &[0, 1]));
        for o in report.failures() {
            assert!(o.axiom.violated_by(&broken, o.witness.as_ref().unwrap()));
        }
    }

    #[test]
    fn diagonal_and_unit_failures() {
        let t = CayleyTable::from_rows(&[[1, 0], [1, 1]]).unwrap();
        let report = check_axioms(&t);
        assert_eq!(report.outcome(Axiom::II).witness, Some(vec![0]));
        assert_eq!(report.outcome(Axiom::III).witness, Some(vec![0]));
        assert!(!classify(&t).flags.is_weak_bcc);
        assert_eq!(classify(&t).flags, Classification::default());
    }

    #[test]
    fn rejects_out_of_range_entries() {
        assert!(matches!(
            CayleyTable::new(2, &[0, 2, 1, 0]),
            Err(Error::EntryOutOfRange {
                row: 0,
                col: 1,
                value: 2,
                ..
            })
        ));
        assert!(CayleyTable::new(2, &[0, 0, 1]).is_err());
        assert!(CayleyTable::new(0, &[]).is_err());
        assert!(CayleyTable::from_rows(&[vec![0, 0], vec![1]]).is_err());
    }

    #[test]
    fn table3_is_proper_bcc() {
        let c = classify(&tables::table3()).flags;
        assert!(c.is_bcc && !c.is_bci && c.is_proper_bcc && !c.is_proper_weak);
    }

    #[test]
    fn table5_is_bci_not_bcc() {
        let c = classify(&tables::table5());
        assert!(c.flags.is_bci && !c.flags.is_bcc && !c.flags.is_bck);
        assert_eq!(c.bcc_witness, Some(2));
    }

    #[test]
    fn table4_is_proper_weak() {
        let t = tables::table4();
        let c = classify(&t);
        assert!(c.flags.is_proper_weak);
        let (x, y, z) = c.bci_witness.unwrap();
        assert_ne!(t.op(t.op(x, y), z), t.op(t.op(x, z), y));
        // the triple quoted for this table
        assert_ne!(t.op(t.op(5, 3), 2), t.op(t.op(5, 2), 3));
    }

    #[test]
    fn phi_values() {
        let t = tables::table4();
        assert_eq!(phi(&t, 3), 4);
        assert_eq!(phi_square(&t, 3), 2);
        for t in tables::all() {
            assert_eq!(phi(&t, 0), 0);
        }
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        let t = tables::table1();
        assert!(t.relabel(&[0, 1, 1, 3]).is_err());
        assert!(t.relabel(&[0, 1, 2]).is_err());
        assert_eq!(t.relabel(&[0, 1, 2, 3]).unwrap(), t);
    }
}
