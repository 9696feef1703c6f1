//! Canonical forms under relabelings that fix `0`.
//!
//! The canonical form of a table is the lexicographically least row-major
//! table among all `(n-1)!` relabelings by permutations of `{1, .., n-1}`.
//! Fixing `0` loses nothing: `0 = x*x` is definable, so every isomorphism
//! of these algebras fixes it.

use crate::table::{CayleyTable, Element};

/// A table in canonical form; two algebras are isomorphic iff their
/// canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(CayleyTable);

impl CanonicalForm {
    pub fn table(&self) -> &CayleyTable {
        &self.0
    }

    pub fn into_table(self) -> CayleyTable {
        self.0
    }
}

/// All permutations of `0..n` fixing `0`, in lexicographic order.
pub fn zero_fixing_permutations(n: usize) -> Vec<Vec<Element>> {
    let mut perm: Vec<Element> = (0..n).collect();
    let mut out = vec![perm.clone()];
    if n > 2 {
        while next_permutation(&mut perm[1..]) {
            out.push(perm.clone());
        }
    }
    out
}

/// Advances `v` to its lexicographic successor; `false` once it was the last.
fn next_permutation(v: &mut [Element]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&e| e > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Reusable canonicalizer for one order, holding the inverse permutations.
#[derive(Debug, Clone)]
pub struct Canonicalizer {
    n: usize,
    /// Pairs `(perm, inverse)`.
    perms: Vec<(Vec<u8>, Vec<u8>)>,
}

impl Canonicalizer {
    pub fn new(n: usize) -> Self {
        let perms = zero_fixing_permutations(n)
            .into_iter()
            .map(|p| {
                let mut inv = vec![0u8; n];
                for (old, &new) in p.iter().enumerate() {
                    inv[new] = old as u8;
                }
                (p.into_iter().map(|e| e as u8).collect(), inv)
            })
            .collect();
        Self { n, perms }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Canonical cells of a row-major table of this order.
    pub fn canonical_cells(&self, cells: &[u8]) -> Vec<u8> {
        let n = self.n;
        debug_assert_eq!(cells.len(), n * n);
        let mut best = cells.to_vec();
        let mut cand = vec![0u8; n * n];
        for (perm, inv) in &self.perms[1..] {
            // build the relabeled table cell by cell, giving up as soon as
            // it is known to be larger than the best so far
            let mut state = std::cmp::Ordering::Equal;
            'fill: for i in 0..n {
                let src = inv[i] as usize * n;
                for j in 0..n {
                    let v = perm[cells[src + inv[j] as usize] as usize];
                    let k = i * n + j;
                    cand[k] = v;
                    if state == std::cmp::Ordering::Equal {
                        state = v.cmp(&best[k]);
                        if state == std::cmp::Ordering::Greater {
                            break 'fill;
                        }
                    }
                }
            }
            if state == std::cmp::Ordering::Less {
                best.copy_from_slice(&cand);
            }
        }
        best
    }

    pub fn canonical_form(&self, t: &CayleyTable) -> CanonicalForm {
        assert_eq!(t.order(), self.n, "canonicalizer built for another order");
        CanonicalForm(CayleyTable::from_bytes(self.n, self.canonical_cells(t.cells())))
    }
}

/// Lexicographically least relabeling of `t` over permutations fixing `0`.
pub fn canonical_form(t: &CayleyTable) -> CanonicalForm {
    Canonicalizer::new(t.order()).canonical_form(t)
}

/// Whether `t` equals its own canonical form.
pub fn is_canonical(t: &CayleyTable) -> bool {
    canonical_form(t).table() == t
}

/// Isomorphism test by canonical forms; tables of different orders are
/// never isomorphic.
pub fn are_isomorphic(a: &CayleyTable, b: &CayleyTable) -> bool {
    a.order() == b.order() && canonical_form(a) == canonical_form(b)
}
