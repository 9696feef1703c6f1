//! The natural order `x <= y  <=>  x*y = 0`, minimal elements, initial
//! parts and the decomposition into branches.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::table::{CayleyTable, Element};

/// The relation `x <= y  <=>  x*y = 0` as a dense boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRelation {
    n: usize,
    leq: Vec<bool>,
}

impl OrderRelation {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.leq[x * self.n + y]
    }

    /// All pairs `x < y` (strict, row-major).
    pub fn strict_pairs(&self) -> Vec<(Element, Element)> {
        let n = self.n;
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && self.leq(x, y))
            .collect()
    }
}

/// Derives the natural order and verifies it is a partial order.
pub fn derive_order(t: &CayleyTable) -> Result<OrderRelation> {
    let n = t.order();
    let leq: Vec<bool> = t.cells().iter().map(|&v| v == 0).collect();
    let rel = OrderRelation { n, leq };
    for x in 0..n {
        if !rel.leq(x, x) {
            return Err(Error::Invariant(format!("order is not reflexive at {x}")));
        }
        for y in 0..n {
            if x != y && rel.leq(x, y) && rel.leq(y, x) {
                return Err(Error::Invariant(format!("order is not antisymmetric at ({x}, {y})")));
            }
            if !rel.leq(x, y) {
                continue;
            }
            for z in 0..n {
                if rel.leq(y, z) && !rel.leq(x, z) {
                    return Err(Error::Invariant(format!("order is not transitive at ({x}, {y}, {z})")));
                }
            }
        }
    }
    Ok(rel)
}

/// Elements with nothing strictly below them: no `y != a` with `y*a = 0`.
pub fn minimal_elements(t: &CayleyTable) -> Vec<Element> {
    t.elements()
        .filter(|&a| t.elements().all(|y| y == a || t.op(y, a) != 0))
        .collect()
}

/// The downward set `A(b) = { x | x <= b }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InitialPart {
    pub bound: Element,
    pub members: BTreeSet<Element>,
}

pub fn initial_part(t: &CayleyTable, b: Element) -> InitialPart {
    InitialPart {
        bound: b,
        members: t.elements().filter(|&x| t.op(x, b) == 0).collect(),
    }
}

/// Minimal elements and the branches `B(a) = { x | a <= x }` they generate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchDecomposition {
    /// `I(X)`, ascending.
    pub minimal: Vec<Element>,
    /// For every element, the minimal element of its branch.
    pub branch_of: Vec<Element>,
    /// `branches[i]` is the branch of `minimal[i]`, ascending.
    pub branches: Vec<Vec<Element>>,
}

impl BranchDecomposition {
    #[inline]
    pub fn same_branch(&self, x: Element, y: Element) -> bool {
        self.branch_of[x] == self.branch_of[y]
    }

    pub fn branch_count(&self) -> usize {
        self.minimal.len()
    }

    /// The branch initiated by the minimal element `a`.
    pub fn branch(&self, a: Element) -> Option<&[Element]> {
        self.minimal
            .iter()
            .position(|&m| m == a)
            .map(|i| self.branches[i].as_slice())
    }

    /// `B(0)`; `0` is always minimal.
    pub fn zero_branch(&self) -> &[Element] {
        &self.branches[0]
    }

    /// Same-branch pairs in row-major order.
    pub fn same_branch_pairs(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        let n = self.branch_of.len();
        (0..n)
            .flat_map(move |x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| self.same_branch(x, y))
    }
}

/// Computes the branches and checks that they partition the algebra.
pub fn branch_decomposition(t: &CayleyTable) -> Result<BranchDecomposition> {
    let n = t.order();
    let minimal = minimal_elements(t);
    let mut branch_of = vec![usize::MAX; n];
    let mut branches = Vec::with_capacity(minimal.len());
    for &a in &minimal {
        let members: Vec<Element> = t.elements().filter(|&x| t.op(a, x) == 0).collect();
        for &x in &members {
            if branch_of[x] != usize::MAX {
                return Err(Error::Invariant(format!(
                    "element {x} lies in the branches of both {} and {a}",
                    branch_of[x]
                )));
            }
            branch_of[x] = a;
        }
        branches.push(members);
    }
    if let Some(x) = branch_of.iter().position(|&b| b == usize::MAX) {
        return Err(Error::Invariant(format!("element {x} lies in no branch")));
    }
    if minimal.first() != Some(&0) {
        return Err(Error::Invariant("0 is not minimal".into()));
    }
    Ok(BranchDecomposition {
        minimal,
        branch_of,
        branches,
    })
}

/// Whether `x` and `y` share a branch, cross-checked against the criterion
/// `x*y` in `B(0)`.
pub fn same_branch(t: &CayleyTable, branches: &BranchDecomposition, x: Element, y: Element) -> Result<bool> {
    let n = t.order();
    for e in [x, y] {
        if e >= n {
            return Err(Error::NoSuchElement { x: e, order: n });
        }
    }
    let by_branch = branches.same_branch(x, y);
    let by_criterion = branches.branch_of[t.op(x, y)] == 0;
    if by_branch != by_criterion {
        return Err(Error::Invariant(format!(
            "same-branch criterion disagrees at ({x}, {y})"
        )));
    }
    Ok(by_branch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables;

    fn set(v: &[Element]) -> BTreeSet<Element> {
        v.iter().copied().collect()
    }

    #[test]
    fn order_of_table4() {
        let rel = derive_order(&tables::table4()).unwrap();
        assert!(rel.leq(2, 3));
        assert!(!rel.leq(3, 2));
        for x in 0..6 {
            assert!(rel.leq(x, x));
        }
    }

    #[test]
    fn table1_strict_pairs() {
        let rel = derive_order(&tables::table1()).unwrap();
        assert_eq!(rel.strict_pairs(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn intransitive_order_is_an_invariant_error() {
        // 0 < 1 < 2 but 0 * 2 != 0; this table is not a weak BCC-algebra
        let t = CayleyTable::from_rows(&[[0, 0, 1], [1, 0, 0], [2, 1, 0]]).unwrap();
        assert!(matches!(derive_order(&t), Err(Error::Invariant(_))));
    }

    #[test]
    fn minimal_elements_of_reference_tables() {
        assert_eq!(minimal_elements(&tables::table1()), vec![0, 2]);
        assert_eq!(minimal_elements(&tables::table2()), vec![0, 2]);
        assert_eq!(minimal_elements(&tables::table3()), vec![0]);
        assert_eq!(minimal_elements(&tables::table4()), vec![0, 2, 4]);
    }

    #[test]
    fn branches_of_reference_tables() {
        let b1 = branch_decomposition(&tables::table1()).unwrap();
        assert_eq!(b1.branches, vec![vec![0, 1], vec![2, 3]]);
        let b4 = branch_decomposition(&tables::table4()).unwrap();
        assert_eq!(b4.minimal, vec![0, 2, 4]);
        assert_eq!(b4.branches, vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
        assert_eq!(b4.branch(4), Some(&[4, 5][..]));
        assert_eq!(b4.branch(5), None);
        let b3 = branch_decomposition(&tables::table3()).unwrap();
        assert_eq!(b3.branches, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn initial_parts() {
        assert_eq!(initial_part(&tables::table4(), 3).members, set(&[2, 3]));
        assert_eq!(initial_part(&tables::table1(), 1).members, set(&[0, 1]));
        for t in tables::all() {
            assert_eq!(initial_part(&t, 0).members, set(&[0]));
        }
    }

    #[test]
    fn same_branch_queries() {
        let t = tables::table4();
        let b = branch_decomposition(&t).unwrap();
        assert!(same_branch(&t, &b, 2, 3).unwrap());
        assert!(!same_branch(&t, &b, 1, 2).unwrap());
        for x in 0..6 {
            assert!(same_branch(&t, &b, x, x).unwrap());
        }
        assert!(matches!(
            same_branch(&t, &b, 0, 6),
            Err(Error::NoSuchElement { x: 6, .. })
        ));
    }
}
