//! Solidity, the two-variable identities in their global and branchwise
//! forms, and the branch meet `x ^ y = y*(y*x)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::order::initial_part;
use crate::table::Element;

/// The two-variable identities an algebra may satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LawId {
    /// `x*(x*y) = y*(y*x)`
    Commutative,
    /// `(x*y)*y = x*y`
    PositiveImplicative,
    /// `x*(y*x) = x`
    Implicative,
    /// `x*y = (x*y)*(y*phi^2(y))`
    PhiImplicative,
    /// `x*y = ((x*y)*y)*(0*y)`, the BCI form of positive implicativity.
    BciPositiveImplicative,
}

impl LawId {
    pub const ALL: [LawId; 5] = [
        LawId::Commutative,
        LawId::PositiveImplicative,
        LawId::Implicative,
        LawId::PhiImplicative,
        LawId::BciPositiveImplicative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawId::Commutative => "commutative",
            LawId::PositiveImplicative => "positive_implicative",
            LawId::Implicative => "implicative",
            LawId::PhiImplicative => "phi_implicative",
            LawId::BciPositiveImplicative => "bci_positive_implicative",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            LawId::Commutative => "x*(x*y) = y*(y*x)",
            LawId::PositiveImplicative => "(x*y)*y = x*y",
            LawId::Implicative => "x*(y*x) = x",
            LawId::PhiImplicative => "x*y = (x*y)*(y*phi2(y))",
            LawId::BciPositiveImplicative => "x*y = ((x*y)*y)*(0*y)",
        }
    }

    /// Both sides of the identity at `(x, y)`.
    #[inline]
    pub fn sides(self, a: &Algebra, x: Element, y: Element) -> (Element, Element) {
        let xy = a.op(x, y);
        match self {
            LawId::Commutative => (a.op(x, xy), a.op(y, a.op(y, x))),
            LawId::PositiveImplicative => (a.op(xy, y), xy),
            LawId::Implicative => (a.op(x, a.op(y, x)), x),
            LawId::PhiImplicative => (xy, a.op(xy, a.op(y, a.phi_square(y)))),
            LawId::BciPositiveImplicative => (xy, a.op(a.op(xy, y), a.phi(y))),
        }
    }

    pub fn violated_by(self, a: &Algebra, x: Element, y: Element) -> bool {
        let (l, r) = self.sides(a, x, y);
        l != r
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LawId::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::UnknownLaw(s.to_string()))
    }
}

impl Serialize for LawId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Which pairs an identity quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Global,
    /// Only pairs lying in a common branch.
    Branchwise,
}

impl Scope {
    pub const ALL: [Scope; 2] = [Scope::Global, Scope::Branchwise];

    pub fn name(self) -> &'static str {
        match self {
            Scope::Global => "global",
            Scope::Branchwise => "branchwise",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityResult {
    pub law: LawId,
    pub scope: Scope,
    pub holds: bool,
    /// First violating pair in row-major order.
    pub witness: Option<(Element, Element)>,
}

/// Evaluates `law` over every pair in `scope`.
pub fn holds_identity(a: &Algebra, law: LawId, scope: Scope) -> IdentityResult {
    let witness = a
        .elements()
        .flat_map(|x| a.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| scope == Scope::Global || a.same_branch(x, y))
        .find(|&(x, y)| law.violated_by(a, x, y));
    IdentityResult {
        law,
        scope,
        holds: witness.is_none(),
        witness,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SolidityFlags {
    pub solid: bool,
    pub right_solid: bool,
    pub supersolid: bool,
    /// First `(x, y, z)` with `x`, `y` in one branch and `(x*y)*z != (x*z)*y`.
    pub solid_witness: Option<(Element, Element, Element)>,
    /// First `(x, y, z)` with `y`, `z` in one branch and `(x*y)*z != (x*z)*y`.
    pub right_solid_witness: Option<(Element, Element, Element)>,
}

#[inline]
fn exchange_fails(a: &Algebra, x: Element, y: Element, z: Element) -> bool {
    a.op(a.op(x, y), z) != a.op(a.op(x, z), y)
}

fn first_triple(a: &Algebra, keep: impl Fn(Element, Element, Element) -> bool) -> Option<(Element, Element, Element)> {
    for x in a.elements() {
        for y in a.elements() {
            for z in a.elements() {
                if keep(x, y, z) && exchange_fails(a, x, y, z) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

pub fn solidity(a: &Algebra) -> SolidityFlags {
    let solid_witness = first_triple(a, |x, y, _| a.same_branch(x, y));
    let right_solid_witness = first_triple(a, |_, y, z| a.same_branch(y, z));
    let solid = solid_witness.is_none();
    let right_solid = right_solid_witness.is_none();
    SolidityFlags {
        solid,
        right_solid,
        supersolid: solid && right_solid,
        solid_witness,
        right_solid_witness,
    }
}

/// `x ^ y = y*(y*x)` for `x`, `y` in one branch.
pub fn branch_meet(a: &Algebra, x: Element, y: Element) -> Result<Element> {
    for e in [x, y] {
        if e >= a.size() {
            return Err(Error::NoSuchElement { x: e, order: a.size() });
        }
    }
    if !a.same_branch(x, y) {
        return Err(Error::CrossBranch { x, y });
    }
    Ok(meet(a, x, y))
}

#[inline]
fn meet(a: &Algebra, x: Element, y: Element) -> Element {
    a.op(y, a.op(y, x))
}

/// The first way in which a branch fails to be a meet-semilattice under `^`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SemilatticeViolation {
    /// `x ^ y` leaves the branch of `x` and `y`.
    Escapes {
        x: Element,
        y: Element,
    },
    NotIdempotent {
        x: Element,
    },
    NotCommutative {
        x: Element,
        y: Element,
    },
    NotAssociative {
        x: Element,
        y: Element,
        z: Element,
    },
    /// `x ^ y` is not below both arguments.
    NotLowerBound {
        x: Element,
        y: Element,
    },
    /// `z` is below `x` and `y` but not below `x ^ y`.
    NotGreatest {
        x: Element,
        y: Element,
        z: Element,
    },
}

impl SemilatticeViolation {
    /// Re-evaluates the violation on `a`.
    pub fn confirmed_by(&self, a: &Algebra) -> bool {
        let m = |x, y| meet(a, x, y);
        match *self {
            SemilatticeViolation::Escapes { x, y } => a.same_branch(x, y) && !a.same_branch(x, m(x, y)),
            SemilatticeViolation::NotIdempotent { x } => m(x, x) != x,
            SemilatticeViolation::NotCommutative { x, y } => m(x, y) != m(y, x),
            SemilatticeViolation::NotAssociative { x, y, z } => m(m(x, y), z) != m(x, m(y, z)),
            SemilatticeViolation::NotLowerBound { x, y } => !(a.leq(m(x, y), x) && a.leq(m(x, y), y)),
            SemilatticeViolation::NotGreatest { x, y, z } => a.leq(z, x) && a.leq(z, y) && !a.leq(z, m(x, y)),
        }
    }
}

/// Checks that every branch is a meet-semilattice under `^`: closure,
/// idempotence, commutativity, associativity, and that `x ^ y` is the
/// greatest lower bound of `x` and `y` (lower bounds taken over the whole
/// algebra).
pub fn is_branch_semilattice(a: &Algebra) -> Option<SemilatticeViolation> {
    use SemilatticeViolation::*;
    let pairs: Vec<_> = a.branches().same_branch_pairs().collect();
    for &(x, y) in &pairs {
        if !a.same_branch(x, meet(a, x, y)) {
            return Some(Escapes { x, y });
        }
    }
    for x in a.elements() {
        if meet(a, x, x) != x {
            return Some(NotIdempotent { x });
        }
    }
    for &(x, y) in &pairs {
        if meet(a, x, y) != meet(a, y, x) {
            return Some(NotCommutative { x, y });
        }
    }
    for &(x, y) in &pairs {
        for z in a.elements().filter(|&z| a.same_branch(y, z)) {
            if meet(a, meet(a, x, y), z) != meet(a, x, meet(a, y, z)) {
                return Some(NotAssociative { x, y, z });
            }
        }
    }
    for &(x, y) in &pairs {
        let m = meet(a, x, y);
        if !(a.leq(m, x) && a.leq(m, y)) {
            return Some(NotLowerBound { x, y });
        }
        if let Some(z) = a.elements().find(|&z| a.leq(z, x) && a.leq(z, y) && !a.leq(z, m)) {
            return Some(NotGreatest { x, y, z });
        }
    }
    None
}

/// First same-branch pair with `A(x) & A(y) != A(x ^ y)`.
pub fn initial_part_meet_law(a: &Algebra) -> Option<(Element, Element)> {
    let parts: Vec<BTreeSet<Element>> = a.elements().map(|b| initial_part(a.table(), b).members).collect();
    a.branches().same_branch_pairs().find(|&(x, y)| {
        let common: BTreeSet<Element> = parts[x].intersection(&parts[y]).copied().collect();
        common != parts[meet(a, x, y)]
    })
}
