use crate::error::{Error, Result};
use crate::order::{self, BranchDecomposition, OrderRelation};
use crate::table::{self, CayleyTable, ClassificationReport, Element};

/// A Cayley table known to be a weak BCC-algebra, together with its order
/// and branch decomposition.
#[derive(Debug, Clone)]
pub struct Algebra {
    table: CayleyTable,
    order: OrderRelation,
    branches: BranchDecomposition,
}

impl Algebra {
    /// Validates the axioms and derives the order structure.
    ///
    /// Fails with [`Error::NotWeakBcc`] when an axiom is violated.
    pub fn new(table: CayleyTable) -> Result<Self> {
        let report = table::check_axioms(&table);
        if !report.all_hold() {
            return Err(Error::NotWeakBcc(Box::new(report)));
        }
        Self::from_valid(table)
    }

    /// Skips the axiom check; the order and partition invariants are still
    /// verified.
    pub(crate) fn from_valid(table: CayleyTable) -> Result<Self> {
        let order = order::derive_order(&table)?;
        let branches = order::branch_decomposition(&table)?;
        let alg = Self { table, order, branches };
        alg.cross_check_branch_criterion()?;
        Ok(alg)
    }

    fn cross_check_branch_criterion(&self) -> Result<()> {
        for x in self.elements() {
            for y in self.elements() {
                order::same_branch(&self.table, &self.branches, x, y)?;
            }
        }
        Ok(())
    }

    #[inline]
    pub fn op(&self, x: Element, y: Element) -> Element {
        self.table.op(x, y)
    }

    pub fn size(&self) -> usize {
        self.table.order()
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        self.table.elements()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn into_table(self) -> CayleyTable {
        self.table
    }

    pub fn order(&self) -> &OrderRelation {
        &self.order
    }

    #[inline]
    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.order.leq(x, y)
    }

    pub fn branches(&self) -> &BranchDecomposition {
        &self.branches
    }

    #[inline]
    pub fn same_branch(&self, x: Element, y: Element) -> bool {
        self.branches.same_branch(x, y)
    }

    pub fn classify(&self) -> ClassificationReport {
        table::classify_valid(&self.table)
    }

    #[inline]
    pub fn phi(&self, x: Element) -> Element {
        table::phi(&self.table, x)
    }

    #[inline]
    pub fn phi_square(&self, x: Element) -> Element {
        table::phi_square(&self.table, x)
    }
}

impl TryFrom<CayleyTable> for Algebra {
    type Error = Error;

    fn try_from(table: CayleyTable) -> Result<Self> {
        Self::new(table)
    }
}
