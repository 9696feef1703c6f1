//! Full structural report for one table, rendered as text or JSON.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::laws::{self, LawCheckResult};
use crate::properties::{self, IdentityResult, LawId, Scope, SolidityFlags};
use crate::table::{self, AxiomReport, CayleyTable, Classification, Element};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchEntry {
    pub minimal: Element,
    pub members: Vec<Element>,
}

/// Everything derivable about a table. Sections past `axioms` are absent
/// when the table is not a weak BCC-algebra.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub order: usize,
    pub axioms: AxiomReport,
    pub classification: Classification,
    pub structure: Option<Structure>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Structure {
    /// Strict pairs `x < y`.
    pub order_relation: Vec<(Element, Element)>,
    pub minimal_elements: Vec<Element>,
    pub branches: Vec<BranchEntry>,
    pub solidity: SolidityFlags,
    pub identities: Vec<IdentityResult>,
    pub laws: Vec<LawCheckResult>,
}

impl Report {
    pub fn build(t: &CayleyTable) -> Result<Self> {
        let axioms = table::check_axioms(t);
        if !axioms.all_hold() {
            return Ok(Self {
                order: t.order(),
                axioms,
                classification: Classification::default(),
                structure: None,
            });
        }
        let a = Algebra::new(t.clone())?;
        let b = a.branches();
        let structure = Structure {
            order_relation: a.order().strict_pairs(),
            minimal_elements: b.minimal.clone(),
            branches: b
                .minimal
                .iter()
                .zip(&b.branches)
                .map(|(&minimal, members)| BranchEntry {
                    minimal,
                    members: members.clone(),
                })
                .collect(),
            solidity: properties::solidity(&a),
            identities: LawId::ALL
                .iter()
                .flat_map(|&law| Scope::ALL.map(|scope| properties::holds_identity(&a, law, scope)))
                .collect(),
            laws: laws::verify_all(&a),
        };
        Ok(Self {
            order: t.order(),
            axioms,
            classification: a.classify().flags,
            structure: Some(structure),
        })
    }

    pub fn is_weak_bcc(&self) -> bool {
        self.axioms.all_hold()
    }

    pub fn any_law_failed(&self) -> bool {
        self.structure
            .as_ref()
            .is_some_and(|s| s.laws.iter().any(|l| l.status == laws::Status::Fail))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "order: {}", self.order);
        let _ = writeln!(w, "axioms:");
        for o in &self.axioms.outcomes {
            let _ = match &o.witness {
                None => writeln!(w, "  ({}) {}: holds", o.axiom.name(), o.axiom.statement()),
                Some(e) => writeln!(
                    w,
                    "  ({}) {}: fails at {}",
                    o.axiom.name(),
                    o.axiom.statement(),
                    tuple(e)
                ),
            };
        }
        let c = &self.classification;
        let _ = writeln!(w, "classification:");
        for (name, v) in [
            ("weak_bcc", c.is_weak_bcc),
            ("bcc", c.is_bcc),
            ("bci", c.is_bci),
            ("bck", c.is_bck),
            ("proper_weak", c.is_proper_weak),
            ("proper_bcc", c.is_proper_bcc),
        ] {
            let _ = writeln!(w, "  {name}: {v}");
        }
        let Some(s) = &self.structure else {
            return out;
        };
        let pairs: Vec<String> = s.order_relation.iter().map(|(x, y)| format!("{x}<={y}")).collect();
        let _ = writeln!(w, "order relation: {}", pairs.join(" "));
        let _ = writeln!(w, "minimal elements: {}", set(&s.minimal_elements));
        let _ = writeln!(w, "branches: {}", s.branches.len());
        for b in &s.branches {
            let _ = writeln!(w, "  B({}) = {}", b.minimal, set(&b.members));
        }
        let _ = writeln!(w, "solidity:");
        let sol = &s.solidity;
        for (name, v, witness) in [
            ("solid", sol.solid, sol.solid_witness),
            ("right_solid", sol.right_solid, sol.right_solid_witness),
            ("supersolid", sol.supersolid, None),
        ] {
            let _ = match witness {
                Some((x, y, z)) => writeln!(w, "  {name}: {v} at {}", tuple(&[x, y, z])),
                None => writeln!(w, "  {name}: {v}"),
            };
        }
        let _ = writeln!(w, "identities:");
        for r in &s.identities {
            let _ = match r.witness {
                None => writeln!(w, "  {} {}: holds", r.law.name(), r.scope.name()),
                Some((x, y)) => writeln!(w, "  {} {}: fails at {}", r.law.name(), r.scope.name(), tuple(&[x, y])),
            };
        }
        let _ = writeln!(w, "laws:");
        for l in &s.laws {
            let _ = match &l.witness {
                None => writeln!(w, "  {}: {}", l.law_id, l.status),
                Some(wit) => writeln!(
                    w,
                    "  {}: {} at {} [{}]",
                    l.law_id,
                    l.status,
                    tuple(&wit.elements),
                    wit.clause
                ),
            };
        }
        out
    }
}

fn tuple(e: &[Element]) -> String {
    let parts: Vec<String> = e.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn set(e: &[Element]) -> String {
    let parts: Vec<String> = e.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}
