//! Reference algebras used throughout the tests and examples.

use crate::table::CayleyTable;

fn build(rows: &[&[usize]]) -> CayleyTable {
    CayleyTable::from_rows(rows).expect("reference table is well formed")
}

/// Proper weak BCC-algebra of order 4, right solid but not solid.
pub fn table1() -> CayleyTable {
    build(&[&[0, 0, 2, 2], &[1, 0, 2, 2], &[2, 2, 0, 0], &[3, 3, 1, 0]])
}

/// Proper weak BCC-algebra of order 4, neither solid nor right solid.
pub fn table2() -> CayleyTable {
    build(&[&[0, 0, 2, 2], &[1, 0, 3, 3], &[2, 2, 0, 0], &[3, 3, 1, 0]])
}

/// Proper BCC-algebra of order 4; positive implicative only.
pub fn table3() -> CayleyTable {
    build(&[&[0, 0, 0, 0], &[1, 0, 0, 1], &[2, 2, 0, 1], &[3, 3, 3, 0]])
}

/// Solid, not right solid, proper weak BCC-algebra of order 6 with three
/// branches.
pub fn table4() -> CayleyTable {
    build(&[
        &[0, 0, 4, 4, 2, 2],
        &[1, 0, 4, 4, 2, 2],
        &[2, 2, 0, 0, 4, 4],
        &[3, 2, 1, 0, 4, 4],
        &[4, 4, 2, 2, 0, 0],
        &[5, 4, 3, 3, 1, 0],
    ])
}

/// BCI-algebra of order 5 with three branches; phi-implicative.
pub fn table5() -> CayleyTable {
    build(&[
        &[0, 0, 4, 4, 2],
        &[1, 0, 4, 4, 2],
        &[2, 2, 0, 0, 4],
        &[3, 2, 1, 0, 4],
        &[4, 4, 2, 2, 0],
    ])
}

/// The five reference tables, in order.
pub fn all() -> [CayleyTable; 5] {
    [table1(), table2(), table3(), table4(), table5()]
}
