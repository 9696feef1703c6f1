//! Reference implementations written directly from the definitions, over
//! plain nested vectors. Used as oracles for the library.

#![allow(dead_code)]

use std::path::PathBuf;

use wbcc::{CayleyTable, PropertyMask};

pub type Rows = Vec<Vec<usize>>;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn rows(t: &CayleyTable) -> Rows {
    t.elements()
        .map(|x| t.row(x).iter().map(|&v| v as usize).collect())
        .collect()
}

pub fn table(r: &Rows) -> CayleyTable {
    CayleyTable::from_rows(r).unwrap()
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

pub fn is_weak_bcc(r: &Rows) -> bool {
    let n = r.len();
    triples(n).all(|(x, y, z)| r[r[r[x][y]][r[z][y]]][r[x][z]] == 0)
        && (0..n).all(|x| r[x][x] == 0 && r[x][0] == x)
        && pairs(n).all(|(x, y)| !(r[x][y] == 0 && r[y][x] == 0) || x == y)
}

/// All permutations of `0..n` that fix `0`.
pub fn zero_fixing_perms(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 1..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(&mut vec![0], n, &mut out);
    }
    out
}

/// The table with every element `x` renamed `p[x]`.
pub fn relabel(r: &Rows, p: &[usize]) -> Rows {
    let n = r.len();
    let mut out = vec![vec![0; n]; n];
    for (x, y) in pairs(n) {
        out[p[x]][p[y]] = p[r[x][y]];
    }
    out
}

/// Isomorphism by trying every bijection fixing `0`.
pub fn isomorphic_by_search(a: &Rows, b: &Rows) -> bool {
    a.len() == b.len()
        && zero_fixing_perms(a.len())
            .iter()
            .any(|p| pairs(a.len()).all(|(x, y)| p[a[x][y]] == b[p[x]][p[y]]))
}

pub fn leq(r: &Rows, x: usize, y: usize) -> bool {
    r[x][y] == 0
}

pub fn minimal(r: &Rows) -> Vec<usize> {
    let n = r.len();
    (0..n).filter(|&a| (0..n).all(|x| x == a || !leq(r, x, a))).collect()
}

/// The minimal element below each element.
pub fn branch_of(r: &Rows) -> Vec<usize> {
    let mins = minimal(r);
    (0..r.len())
        .map(|x| {
            let below: Vec<usize> = mins.iter().copied().filter(|&a| leq(r, a, x)).collect();
            assert_eq!(below.len(), 1, "element {x} lies above {below:?}");
            below[0]
        })
        .collect()
}

pub fn phi(r: &Rows, x: usize) -> usize {
    r[0][x]
}

pub fn phi2(r: &Rows, x: usize) -> usize {
    phi(r, phi(r, x))
}

pub fn is_bcc(r: &Rows) -> bool {
    r[0].iter().all(|&v| v == 0)
}

fn exchange(r: &Rows, x: usize, y: usize, z: usize) -> bool {
    r[r[x][y]][z] == r[r[x][z]][y]
}

pub fn is_bci(r: &Rows) -> bool {
    triples(r.len()).all(|(x, y, z)| exchange(r, x, y, z))
}

pub fn is_solid(r: &Rows) -> bool {
    let b = branch_of(r);
    triples(r.len()).all(|(x, y, z)| b[x] != b[y] || exchange(r, x, y, z))
}

pub fn is_right_solid(r: &Rows) -> bool {
    let b = branch_of(r);
    triples(r.len()).all(|(x, y, z)| b[y] != b[z] || exchange(r, x, y, z))
}

pub fn commutative(r: &Rows, x: usize, y: usize) -> bool {
    r[x][r[x][y]] == r[y][r[y][x]]
}

pub fn positive_implicative(r: &Rows, x: usize, y: usize) -> bool {
    r[r[x][y]][y] == r[x][y]
}

pub fn implicative(r: &Rows, x: usize, y: usize) -> bool {
    r[x][r[y][x]] == x
}

pub fn phi_implicative(r: &Rows, x: usize, y: usize) -> bool {
    r[x][y] == r[r[x][y]][r[y][phi2(r, y)]]
}

pub fn bci_positive_implicative(r: &Rows, x: usize, y: usize) -> bool {
    r[x][y] == r[r[r[x][y]][y]][r[0][y]]
}

pub fn holds_global(r: &Rows, law: fn(&Rows, usize, usize) -> bool) -> bool {
    pairs(r.len()).all(|(x, y)| law(r, x, y))
}

pub fn holds_branchwise(r: &Rows, law: fn(&Rows, usize, usize) -> bool) -> bool {
    let b = branch_of(r);
    pairs(r.len()).all(|(x, y)| b[x] != b[y] || law(r, x, y))
}

/// The property mask computed from the definitions.
pub fn mask(r: &Rows) -> PropertyMask {
    let bcc = is_bcc(r);
    let bci = is_bci(r);
    let solid = is_solid(r);
    let right = is_right_solid(r);
    let flags = [
        bcc,
        bci,
        bcc && bci,
        !bcc && !bci,
        solid,
        right,
        solid && right,
        holds_branchwise(r, commutative),
        holds_branchwise(r, positive_implicative),
        holds_branchwise(r, implicative),
        holds_branchwise(r, phi_implicative),
        holds_global(r, phi_implicative),
    ];
    PropertyMask(flags.iter().enumerate().fold(0, |m, (i, &f)| m | (f as u32) << i))
}

/// Every table of order `n` at all, filtered by the axioms and grouped by
/// direct isomorphism search.
pub fn naive_classes(n: usize) -> Vec<Rows> {
    let cells = n * n;
    let mut classes: Vec<Rows> = Vec::new();
    for code in 0..n.pow(cells as u32) {
        let mut c = code;
        let r: Rows = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let v = c % n;
                        c /= n;
                        v
                    })
                    .collect()
            })
            .collect();
        if is_weak_bcc(&r) && !classes.iter().any(|k| isomorphic_by_search(k, &r)) {
            classes.push(r);
        }
    }
    classes
}
