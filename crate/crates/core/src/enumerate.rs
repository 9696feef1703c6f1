//! Enumeration of weak BCC-algebras of a fixed order up to isomorphism.
//!
//! Every cell of the Cayley table carries a set of candidate values. The
//! diagonal (`x*x = 0`) and column `0` (`x*0 = x`) are fixed up front.
//! After every assignment the candidate sets are narrowed to a fixpoint by
//! antisymmetry and by axiom (i) on every triple with at most one unknown
//! lookup. Cells are branched on in row-major order.
//! Complete tables are reduced to canonical form and collected in a
//! seen-set, so each isomorphism class is reported once.
//!
//! The tree is split on the assignments of row `0`; each subtree is
//! searched independently and the results are merged by canonical form,
//! which makes the output independent of the number of workers.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::canonical::Canonicalizer;
use crate::catalog::IsoClassCatalog;
use crate::error::{Error, Result};
use crate::mask::PropertyMask;
use crate::table::CayleyTable;

/// Orders above this need [`SearchConfig::allow_above_cap`].
pub const DEFAULT_ORDER_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub order: usize,
    /// Properties every reported class must have.
    pub require: PropertyMask,
    /// Properties no reported class may have.
    pub forbid: PropertyMask,
    pub count_only: bool,
    pub workers: usize,
    pub allow_above_cap: bool,
}

impl SearchConfig {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            require: PropertyMask::empty(),
            forbid: PropertyMask::empty(),
            count_only: false,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            allow_above_cap: false,
        }
    }

    pub fn require(mut self, flags: PropertyMask) -> Self {
        self.require |= flags;
        self
    }

    pub fn forbid(mut self, flags: PropertyMask) -> Self {
        self.forbid |= flags;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn count_only(mut self, on: bool) -> Self {
        self.count_only = on;
        self
    }

    pub fn allow_above_cap(mut self, on: bool) -> Self {
        self.allow_above_cap = on;
        self
    }

    /// Whether a class with property mask `m` passes the filters.
    pub fn accepts(&self, m: PropertyMask) -> bool {
        m.contains(self.require) && m.0 & self.forbid.0 == 0
    }

    fn validate(&self) -> Result<()> {
        if self.order == 0 || self.order > crate::table::MAX_ORDER {
            return Err(Error::InvalidOrder(self.order));
        }
        if self.order > DEFAULT_ORDER_CAP && !self.allow_above_cap {
            return Err(Error::OrderAboveCap {
                order: self.order,
                cap: DEFAULT_ORDER_CAP,
            });
        }
        Ok(())
    }

    /// Row `0` is `phi`; BCC-algebras are exactly those with row `0` all
    /// zero, so some filters can be decided on the first split.
    fn row_zero_admissible(&self, row: &[u8]) -> bool {
        let is_bcc = row.iter().all(|&v| v == 0);
        let wants_bcc = self.require.contains(PropertyMask::BCC) || self.require.contains(PropertyMask::BCK);
        let wants_not_bcc = self.require.contains(PropertyMask::PROPER_WEAK)
            || self.forbid.contains(PropertyMask::BCC)
            || (self.require.contains(PropertyMask::BCI) && self.forbid.contains(PropertyMask::BCK));
        !(wants_bcc && !is_bcc) && !(wants_not_bcc && is_bcc)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Partial tables accepted by the pruning checks.
    pub nodes: u64,
    /// Complete labeled weak BCC-algebras reached.
    pub labeled: u64,
}

impl SearchStats {
    fn merge(self, o: Self) -> Self {
        Self {
            nodes: self.nodes + o.nodes,
            labeled: self.labeled + o.labeled,
        }
    }
}

/// Either the full catalog or only its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Catalog(IsoClassCatalog),
    Count(usize),
}

/// Bit set of candidate values for one cell.
type Domain = u32;

/// Largest order the search supports (one domain bit per element).
pub const MAX_SEARCH_ORDER: usize = Domain::BITS as usize;

/// A partially filled table: every cell holds its set of candidate values;
/// a cell is assigned once its domain is a singleton.
#[derive(Clone)]
struct Partial {
    n: usize,
    dom: Vec<Domain>,
}

impl Partial {
    fn seeded(n: usize) -> Self {
        let full: Domain = if n == MAX_SEARCH_ORDER {
            Domain::MAX
        } else {
            (1 << n) - 1
        };
        let mut dom = vec![full; n * n];
        for x in 0..n {
            dom[x * n + x] = 1;
            dom[x * n] = 1 << x;
        }
        Self { n, dom }
    }

    #[inline]
    fn value(&self, idx: usize) -> Option<usize> {
        let d = self.dom[idx];
        d.is_power_of_two().then(|| d.trailing_zeros() as usize)
    }

    /// Intersects a domain with `allowed`; `None` on a wipe-out, otherwise
    /// whether the domain shrank.
    #[inline]
    fn restrict(&mut self, idx: usize, allowed: Domain) -> Option<bool> {
        let old = self.dom[idx];
        let new = old & allowed;
        if new == 0 {
            return None;
        }
        self.dom[idx] = new;
        Some(new != old)
    }

    /// Values `v` whose cell `(v, col)` can still be `0`.
    fn zero_in_column(&self, col: usize) -> Domain {
        (0..self.n).fold(0, |m, v| {
            if self.dom[v * self.n + col] & 1 != 0 {
                m | 1 << v
            } else {
                m
            }
        })
    }

    /// Values `v` whose cell `(row, v)` can still be `0`.
    fn zero_in_row(&self, row: usize) -> Domain {
        (0..self.n).fold(0, |m, v| {
            if self.dom[row * self.n + v] & 1 != 0 {
                m | 1 << v
            } else {
                m
            }
        })
    }

    /// Narrows domains to a fixpoint under antisymmetry and axiom (i).
    /// Returns `false` when some cell has no value left.
    fn propagate(&mut self) -> bool {
        let n = self.n;
        loop {
            let mut changed = false;
            for x in 0..n {
                for y in 0..n {
                    // x*y = 0 forbids y*x = 0
                    if x != y && self.dom[x * n + y] == 1 {
                        match self.restrict(y * n + x, !1) {
                            None => return false,
                            Some(c) => changed |= c,
                        }
                    }
                }
            }
            // ((x*y)*(z*y))*(x*z) = 0: once all but one lookup is known,
            // the remaining cell is narrowed
            for x in 0..n {
                for y in 0..n {
                    let Some(a) = self.value(x * n + y) else { continue };
                    for z in 0..n {
                        let Some(b) = self.value(z * n + y) else { continue };
                        let ab = a * n + b;
                        let step = match (self.value(x * n + z), self.value(ab)) {
                            (Some(d), Some(e)) => self.restrict(e * n + d, 1),
                            (Some(d), None) => self.restrict(ab, self.zero_in_column(d)),
                            (None, Some(e)) => self.restrict(x * n + z, self.zero_in_row(e)),
                            (None, None) => Some(false),
                        };
                        match step {
                            None => return false,
                            Some(c) => changed |= c,
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn is_complete(&self) -> bool {
        self.dom.iter().all(|d| d.is_power_of_two())
    }

    fn cells(&self) -> Vec<u8> {
        self.dom.iter().map(|d| d.trailing_zeros() as u8).collect()
    }

    fn row_zero(&self) -> Vec<u8> {
        self.dom[..self.n].iter().map(|d| d.trailing_zeros() as u8).collect()
    }

    /// The first unassigned cell in `cells`.
    fn branch_cell(&self, mut cells: std::ops::Range<usize>) -> Option<usize> {
        cells.find(|&i| !self.dom[i].is_power_of_two())
    }
}

struct Search<'a> {
    canon: &'a Canonicalizer,
    seen: HashSet<Vec<u8>>,
    stats: SearchStats,
}

impl<'a> Search<'a> {
    fn new(canon: &'a Canonicalizer) -> Self {
        Self {
            canon,
            seen: HashSet::new(),
            stats: SearchStats::default(),
        }
    }

    /// Branches on cells in `cells` until all of them are assigned, then
    /// hands each consistent state to `leaf`.
    fn descend(&mut self, p: Partial, cells: std::ops::Range<usize>, leaf: &mut dyn FnMut(&mut Self, Partial)) {
        let Some(idx) = p.branch_cell(cells.clone()) else {
            leaf(self, p);
            return;
        };
        let mut rest = p.dom[idx];
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let mut child = p.clone();
            child.dom[idx] = 1 << v;
            if child.propagate() {
                self.stats.nodes += 1;
                self.descend(child, cells.clone(), leaf);
            }
        }
    }

    fn record(&mut self, p: Partial) {
        debug_assert!(p.is_complete());
        let cells = p.cells();
        debug_assert!(crate::table::check_axioms(&CayleyTable::from_bytes(p.n, cells.clone())).all_hold());
        self.stats.labeled += 1;
        self.seen.insert(self.canon.canonical_cells(&cells));
    }
}

/// Canonical cells of every isomorphism class of order `cfg.order`,
/// ignoring the property filters.
fn search_classes(cfg: &SearchConfig) -> Result<(BTreeSet<Vec<u8>>, SearchStats)> {
    let n = cfg.order;
    if n > MAX_SEARCH_ORDER {
        return Err(Error::InvalidOrder(n));
    }
    let canon = Canonicalizer::new(n);
    let mut root = Partial::seeded(n);
    if !root.propagate() {
        return Ok((BTreeSet::new(), SearchStats::default()));
    }

    // split on the assignments of row 0
    let mut splitter = Search::new(&canon);
    let mut prefixes: Vec<Partial> = Vec::new();
    splitter.descend(root, 0..n, &mut |_, p| {
        if cfg.row_zero_admissible(&p.row_zero()) {
            prefixes.push(p);
        }
    });

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.max(1))
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    let parts: Vec<(HashSet<Vec<u8>>, SearchStats)> = pool.install(|| {
        prefixes
            .into_par_iter()
            .map(|p| {
                let mut s = Search::new(&canon);
                s.descend(p, 0..n * n, &mut Search::record);
                (s.seen, s.stats)
            })
            .collect()
    });

    let mut classes = BTreeSet::new();
    let mut stats = splitter.stats;
    for (seen, st) in parts {
        classes.extend(seen);
        stats = stats.merge(st);
    }
    Ok((classes, stats))
}

/// All isomorphism classes of weak BCC-algebras of order `cfg.order`
/// passing the filters, with search statistics.
pub fn enumerate_with_stats(cfg: &SearchConfig) -> Result<(IsoClassCatalog, SearchStats)> {
    cfg.validate()?;
    let (classes, stats) = search_classes(cfg)?;
    let n = cfg.order;
    let mut catalog = IsoClassCatalog::new(n);
    for cells in classes {
        let alg = Algebra::from_valid(CayleyTable::from_bytes(n, cells))?;
        let mask = PropertyMask::of(&alg);
        if cfg.accepts(mask) {
            catalog.insert_canonical(alg.into_table(), mask);
        }
    }
    Ok((catalog, stats))
}

pub fn enumerate_classes(cfg: &SearchConfig) -> Result<IsoClassCatalog> {
    enumerate_with_stats(cfg).map(|(c, _)| c)
}

/// Honors [`SearchConfig::count_only`].
pub fn enumerate(cfg: &SearchConfig) -> Result<Outcome> {
    let catalog = enumerate_classes(cfg)?;
    Ok(if cfg.count_only {
        Outcome::Count(catalog.len())
    } else {
        Outcome::Catalog(catalog)
    })
}
