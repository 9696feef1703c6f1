//! Registry of machine-checkable structural statements about weak
//! BCC-algebras.
//!
//! Every law is evaluated exhaustively on a finite algebra. Conditional
//! laws first test their hypothesis and report [`Status::Vacuous`] when it
//! does not hold, so that statistics over a census only count algebras the
//! statement actually speaks about. Equivalences evaluate every listed
//! condition and fail on the first ordered pair of conditions whose truth
//! values differ.

use std::fmt;
use std::sync::LazyLock;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::properties::{self, LawId, Scope, SemilatticeViolation};
use crate::table::Element;

/// An exhaustively checkable condition on a finite algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition {
    /// `x <= y` implies `x*z <= y*z`.
    RightMonotone,
    /// `x <= y` implies `z*y <= z*x`.
    LeftAntitone,
    /// `phi^2(x*y) = phi^2(x) * phi^2(y)`.
    PhiSquareEndomorphism,
    /// `phi^2(x) <= x`.
    PhiSquareBelow,
    /// Every element lies above exactly one minimal element.
    BranchCover,
    /// `x`, `y` lie above a common minimal element iff `x*y` is in `B(0)`.
    BranchCriterion,
    /// `x <= y` implies `x`, `y` share a branch.
    ComparableShareBranch,
    /// `x`, `y` in `B(0)` implies `x*y` in `B(0)`.
    ZeroBranchClosed,
    /// `x*(x*y) <= y` for same-branch `x`, `y`.
    MeetBelowRight,
    /// `x*(x*y)` and `y*(y*x)` stay in the branch of same-branch `x`, `y`.
    MeetsStayInBranch,
    /// `x*(x*a) = a` for minimal `a` and `x` in `B(a)`; witness `(x, a)`.
    MinimalFixedByMeet,
    /// `x*(x*(x*y)) = x*y` for same-branch `x`, `y`.
    TripleReduction,
    /// `x*y = x*(y*(y*x))` for same-branch `x`, `y`.
    ReducedDifference,
    /// `x = y*(y*x)` whenever `x <= y`.
    ComparableMeet,
    /// `x*(x*y) = y*(y*(x*(x*y)))` for same-branch `x`, `y`.
    MeetAbsorption,
    /// Every branch is a meet-semilattice under `x ^ y = y*(y*x)`.
    BranchSemilattice,
    /// `A(x) & A(y) = A(x ^ y)` for same-branch `x`, `y`.
    InitialPartMeet,
    Identity(LawId, Scope),
    Solid,
    Bck,
    Both(Box<Condition>, Box<Condition>),
}

impl Condition {
    pub fn describe(&self) -> String {
        use Condition::*;
        match self {
            RightMonotone => "x <= y => x*z <= y*z".into(),
            LeftAntitone => "x <= y => z*y <= z*x".into(),
            PhiSquareEndomorphism => "phi2(x*y) = phi2(x)*phi2(y)".into(),
            PhiSquareBelow => "phi2(x) <= x".into(),
            BranchCover => "every element lies in exactly one branch".into(),
            BranchCriterion => "same branch <=> x*y in B(0)".into(),
            ComparableShareBranch => "x <= y => same branch".into(),
            ZeroBranchClosed => "B(0) closed under *".into(),
            MeetBelowRight => "x*(x*y) <= y on branches".into(),
            MeetsStayInBranch => "x*(x*y), y*(y*x) in B(a) for x, y in B(a)".into(),
            MinimalFixedByMeet => "x*(x*a) = a for a minimal, x in B(a)".into(),
            TripleReduction => "x*(x*(x*y)) = x*y on branches".into(),
            ReducedDifference => "x*y = x*(y*(y*x)) on branches".into(),
            ComparableMeet => "x <= y => x = y*(y*x)".into(),
            MeetAbsorption => "x*(x*y) = y*(y*(x*(x*y))) on branches".into(),
            BranchSemilattice => "branches are semilattices under y*(y*x)".into(),
            InitialPartMeet => "A(x) & A(y) = A(x ^ y) on branches".into(),
            Identity(law, scope) => format!("{} {} ({})", scope.name(), law.name(), law.statement()),
            Solid => "solid".into(),
            Bck => "BCK-algebra".into(),
            Both(p, q) => format!("{} and {}", p.describe(), q.describe()),
        }
    }

    /// First violating tuple, or `None` when the condition holds.
    pub fn violation(&self, a: &Algebra) -> Option<Vec<Element>> {
        use Condition::*;
        match self {
            RightMonotone | LeftAntitone => triples(a).find(|t| self.violated_at(a, t)),
            PhiSquareEndomorphism
            | BranchCriterion
            | ComparableShareBranch
            | ZeroBranchClosed
            | MeetBelowRight
            | MeetsStayInBranch
            | MinimalFixedByMeet
            | TripleReduction
            | ReducedDifference
            | ComparableMeet
            | MeetAbsorption
            | InitialPartMeet => pairs(a).find(|p| self.violated_at(a, p)),
            PhiSquareBelow | BranchCover => a.elements().map(|x| vec![x]).find(|s| self.violated_at(a, s)),
            BranchSemilattice => properties::is_branch_semilattice(a).map(semilattice_tuple),
            Identity(law, scope) => properties::holds_identity(a, *law, *scope)
                .witness
                .map(|(x, y)| vec![x, y]),
            Solid => properties::solidity(a).solid_witness.map(|(x, y, z)| vec![x, y, z]),
            Bck => {
                let c = a.classify();
                c.bcc_witness
                    .map(|x| vec![x])
                    .or_else(|| c.bci_witness.map(|(x, y, z)| vec![x, y, z]))
            }
            Both(p, q) => p.violation(a).or_else(|| q.violation(a)),
        }
    }

    pub fn holds(&self, a: &Algebra) -> bool {
        self.violation(a).is_none()
    }

    /// Re-evaluates the condition at a reported tuple.
    pub fn violated_at(&self, a: &Algebra, e: &[Element]) -> bool {
        use Condition::*;
        let n = a.size();
        if e.iter().any(|&x| x >= n) {
            return false;
        }
        let op = |x, y| a.op(x, y);
        let minimals = || a.elements().filter(|&m| a.elements().all(|y| y == m || op(y, m) != 0));
        let in_zero_branch = |x| op(0, x) == 0;
        match (self, e) {
            (RightMonotone, &[x, y, z]) => a.leq(x, y) && !a.leq(op(x, z), op(y, z)),
            (LeftAntitone, &[x, y, z]) => a.leq(x, y) && !a.leq(op(z, y), op(z, x)),
            (PhiSquareEndomorphism, &[x, y]) => a.phi_square(op(x, y)) != op(a.phi_square(x), a.phi_square(y)),
            (PhiSquareBelow, &[x]) => !a.leq(a.phi_square(x), x),
            (BranchCover, &[x]) => minimals().filter(|&m| a.leq(m, x)).count() != 1,
            (BranchCriterion, &[x, y]) => {
                let common = minimals().any(|m| a.leq(m, x) && a.leq(m, y));
                common != in_zero_branch(op(x, y))
            }
            (ComparableShareBranch, &[x, y]) => a.leq(x, y) && !a.same_branch(x, y),
            (ZeroBranchClosed, &[x, y]) => in_zero_branch(x) && in_zero_branch(y) && !in_zero_branch(op(x, y)),
            (MeetBelowRight, &[x, y]) => a.same_branch(x, y) && !a.leq(op(x, op(x, y)), y),
            (MeetsStayInBranch, &[x, y]) => {
                a.same_branch(x, y) && !(a.same_branch(x, op(x, op(x, y))) && a.same_branch(x, op(y, op(y, x))))
            }
            (MinimalFixedByMeet, &[x, m]) => a.branches().minimal.contains(&m) && a.leq(m, x) && op(x, op(x, m)) != m,
            (TripleReduction, &[x, y]) => a.same_branch(x, y) && op(x, op(x, op(x, y))) != op(x, y),
            (ReducedDifference, &[x, y]) => a.same_branch(x, y) && op(x, y) != op(x, op(y, op(y, x))),
            (ComparableMeet, &[x, y]) => a.leq(x, y) && x != op(y, op(y, x)),
            (MeetAbsorption, &[x, y]) => {
                let m = op(x, op(x, y));
                a.same_branch(x, y) && m != op(y, op(y, m))
            }
            (InitialPartMeet, &[x, y]) => {
                if !a.same_branch(x, y) {
                    return false;
                }
                let m = op(y, op(y, x));
                a.elements().any(|z| (a.leq(z, x) && a.leq(z, y)) != a.leq(z, m))
            }
            (BranchSemilattice, _) => semilattice_violated_at(a, e),
            (Identity(law, scope), &[x, y]) => {
                (*scope == Scope::Global || a.same_branch(x, y)) && law.violated_by(a, x, y)
            }
            (Solid, &[x, y, z]) => a.same_branch(x, y) && op(op(x, y), z) != op(op(x, z), y),
            (Bck, &[x]) => op(0, x) != 0,
            (Bck, &[x, y, z]) => op(op(x, y), z) != op(op(x, z), y),
            (Both(p, q), _) => p.violated_at(a, e) || q.violated_at(a, e),
            _ => false,
        }
    }
}

fn triples(a: &Algebra) -> impl Iterator<Item = Vec<Element>> + '_ {
    a.elements()
        .flat_map(move |x| a.elements().flat_map(move |y| a.elements().map(move |z| vec![x, y, z])))
}

fn pairs(a: &Algebra) -> impl Iterator<Item = Vec<Element>> + '_ {
    a.elements().flat_map(move |x| a.elements().map(move |y| vec![x, y]))
}

fn semilattice_tuple(v: SemilatticeViolation) -> Vec<Element> {
    use SemilatticeViolation::*;
    match v {
        NotIdempotent { x } => vec![x],
        Escapes { x, y } | NotCommutative { x, y } | NotLowerBound { x, y } => vec![x, y],
        NotAssociative { x, y, z } | NotGreatest { x, y, z } => vec![x, y, z],
    }
}

fn semilattice_violated_at(a: &Algebra, e: &[Element]) -> bool {
    use SemilatticeViolation::*;
    let candidates: Vec<SemilatticeViolation> = match *e {
        [x] => vec![NotIdempotent { x }],
        [x, y] => vec![Escapes { x, y }, NotCommutative { x, y }, NotLowerBound { x, y }],
        [x, y, z] => vec![NotAssociative { x, y, z }, NotGreatest { x, y, z }],
        _ => vec![],
    };
    let in_branch = e.windows(2).all(|w| a.same_branch(w[0], w[1]));
    let greatest_case = e.len() == 3 && a.same_branch(e[0], e[1]);
    candidates.iter().any(|c| match c {
        NotGreatest { .. } => greatest_case && c.confirmed_by(a),
        NotIdempotent { .. } => c.confirmed_by(a),
        _ => in_branch && c.confirmed_by(a),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    /// The law's hypothesis does not hold for this algebra.
    Vacuous,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Vacuous => "vacuous",
            Status::Fail => "fail",
        })
    }
}

/// Evidence for a failed law: which clause broke and where.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawWitness {
    pub clause: String,
    pub elements: Vec<Element>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawCheckResult {
    pub law_id: &'static str,
    pub status: Status,
    pub witness: Option<LawWitness>,
}

enum Shape {
    /// Every condition holds, given the hypotheses.
    Implies(Vec<Condition>),
    /// All conditions have the same truth value, given the hypotheses.
    Equivalent(Vec<(&'static str, Condition)>),
}

struct LawSpec {
    id: &'static str,
    summary: &'static str,
    hypotheses: Vec<Condition>,
    shape: Shape,
}

static REGISTRY: LazyLock<Vec<LawSpec>> = LazyLock::new(build_registry);

fn registry() -> &'static [LawSpec] {
    &REGISTRY
}

fn build_registry() -> Vec<LawSpec> {
    use Condition::*;
    let bw = |law| Identity(law, Scope::Branchwise);
    let global = |law| Identity(law, Scope::Global);
    vec![
        LawSpec {
            id: "monotonicity_2_3",
            summary: "x <= y implies x*z <= y*z and z*y <= z*x",
            hypotheses: vec![],
            shape: Shape::Implies(vec![RightMonotone, LeftAntitone]),
        },
        LawSpec {
            id: "phi_laws",
            summary: "phi^2 is an endomorphism and phi^2(x) <= x",
            hypotheses: vec![],
            shape: Shape::Implies(vec![PhiSquareEndomorphism, PhiSquareBelow]),
        },
        LawSpec {
            id: "branch_laws",
            summary: "branches partition X; same branch iff x*y in B(0)",
            hypotheses: vec![],
            shape: Shape::Implies(vec![
                BranchCover,
                BranchCriterion,
                ComparableShareBranch,
                ZeroBranchClosed,
            ]),
        },
        LawSpec {
            id: "lemma_3_2",
            summary: "solid: x*(x*y) <= y within a branch",
            hypotheses: vec![Solid],
            shape: Shape::Implies(vec![MeetBelowRight]),
        },
        LawSpec {
            id: "cor_3_3",
            summary: "solid: x*(x*y), y*(y*x) stay in the branch of x, y",
            hypotheses: vec![Solid],
            shape: Shape::Implies(vec![MeetsStayInBranch]),
        },
        LawSpec {
            id: "cor_3_4",
            summary: "solid: x*(x*a) = a for minimal a and x in B(a)",
            hypotheses: vec![Solid],
            shape: Shape::Implies(vec![MinimalFixedByMeet]),
        },
        LawSpec {
            id: "lemma_3_5",
            summary: "solid: x*(x*(x*y)) = x*y within a branch",
            hypotheses: vec![Solid],
            shape: Shape::Implies(vec![TripleReduction]),
        },
        LawSpec {
            id: "thm_3_6_equivalence",
            summary: "solid: branchwise commutative <=> (b) <=> (c) <=> (d)",
            hypotheses: vec![Solid],
            shape: Shape::Equivalent(vec![
                ("(a)", bw(LawId::Commutative)),
                ("(b)", ReducedDifference),
                ("(c)", ComparableMeet),
                ("(d)", MeetAbsorption),
            ]),
        },
        LawSpec {
            id: "thm_3_7_equivalence",
            summary: "solid: branchwise commutative <=> semilattice branches <=> A(x)&A(y) = A(x^y)",
            hypotheses: vec![Solid],
            shape: Shape::Equivalent(vec![
                ("branchwise commutative", bw(LawId::Commutative)),
                ("(a)", BranchSemilattice),
                ("(b)", InitialPartMeet),
            ]),
        },
        LawSpec {
            id: "thm_3_8",
            summary: "solid and branchwise implicative implies branchwise commutative",
            hypotheses: vec![Solid, bw(LawId::Implicative)],
            shape: Shape::Implies(vec![bw(LawId::Commutative)]),
        },
        LawSpec {
            id: "thm_3_9",
            summary: "solid, branchwise implicative: branchwise positive implicative <=> commutative BCK",
            hypotheses: vec![Solid, bw(LawId::Implicative)],
            shape: Shape::Equivalent(vec![
                ("branchwise positive implicative", bw(LawId::PositiveImplicative)),
                (
                    "commutative BCK-algebra",
                    Both(Box::new(Bck), Box::new(global(LawId::Commutative))),
                ),
            ]),
        },
        LawSpec {
            id: "thm_3_10",
            summary: "BCK: implicative <=> commutative and positive implicative",
            hypotheses: vec![Bck],
            shape: Shape::Equivalent(vec![
                ("implicative", global(LawId::Implicative)),
                (
                    "commutative and positive implicative",
                    Both(
                        Box::new(global(LawId::Commutative)),
                        Box::new(global(LawId::PositiveImplicative)),
                    ),
                ),
            ]),
        },
    ]
}

/// Registered law identifiers in their fixed order.
pub fn list_laws() -> Vec<&'static str> {
    registry().iter().map(|l| l.id).collect()
}

/// One-line description of a registered law.
pub fn describe(law_id: &str) -> Result<&'static str> {
    registry()
        .iter()
        .find(|l| l.id == law_id)
        .map(|l| l.summary)
        .ok_or_else(|| Error::UnknownLaw(law_id.to_string()))
}

fn evaluate(spec: &LawSpec, a: &Algebra) -> LawCheckResult {
    let result = |status, witness| LawCheckResult {
        law_id: spec.id,
        status,
        witness,
    };
    if spec.hypotheses.iter().any(|h| !h.holds(a)) {
        return result(Status::Vacuous, None);
    }
    match &spec.shape {
        Shape::Implies(conclusions) => {
            for c in conclusions {
                if let Some(elements) = c.violation(a) {
                    let w = LawWitness {
                        clause: c.describe(),
                        elements,
                    };
                    return result(Status::Fail, Some(w));
                }
            }
            result(Status::Pass, None)
        }
        Shape::Equivalent(conditions) => {
            let outcomes: Vec<Option<Vec<Element>>> = conditions.iter().map(|(_, c)| c.violation(a)).collect();
            for i in 0..conditions.len() {
                for j in i + 1..conditions.len() {
                    if outcomes[i].is_none() == outcomes[j].is_none() {
                        continue;
                    }
                    let (holding, failing) = if outcomes[i].is_none() { (i, j) } else { (j, i) };
                    let w = LawWitness {
                        clause: format!(
                            "{} holds but {} fails: {}",
                            conditions[holding].0,
                            conditions[failing].0,
                            conditions[failing].1.describe()
                        ),
                        elements: outcomes[failing].clone().unwrap_or_default(),
                    };
                    return result(Status::Fail, Some(w));
                }
            }
            result(Status::Pass, None)
        }
    }
}

/// Checks one registered law against `a`.
pub fn verify(a: &Algebra, law_id: &str) -> Result<LawCheckResult> {
    registry()
        .iter()
        .find(|l| l.id == law_id)
        .map(|spec| evaluate(spec, a))
        .ok_or_else(|| Error::UnknownLaw(law_id.to_string()))
}

/// Checks every registered law, in registry order.
pub fn verify_all(a: &Algebra) -> Vec<LawCheckResult> {
    registry().iter().map(|spec| evaluate(spec, a)).collect()
}
