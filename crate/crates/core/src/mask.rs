use std::fmt;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::properties::{self, LawId, Scope};

/// 32-bit summary of the isomorphism-invariant properties of an algebra.
///
/// Bits, least significant first: 0 BCC, 1 BCI, 2 BCK, 3 proper weak BCC,
/// 4 solid, 5 right solid, 6 supersolid, 7 branchwise commutative,
/// 8 branchwise positive implicative, 9 branchwise implicative,
/// 10 branchwise phi-implicative, 11 phi-implicative. Bits 12-31 are zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct PropertyMask(pub u32);

impl PropertyMask {
    pub const BCC: Self = Self(1 << 0);
    pub const BCI: Self = Self(1 << 1);
    pub const BCK: Self = Self(1 << 2);
    pub const PROPER_WEAK: Self = Self(1 << 3);
    pub const SOLID: Self = Self(1 << 4);
    pub const RIGHT_SOLID: Self = Self(1 << 5);
    pub const SUPERSOLID: Self = Self(1 << 6);
    pub const BW_COMMUTATIVE: Self = Self(1 << 7);
    pub const BW_POSITIVE_IMPLICATIVE: Self = Self(1 << 8);
    pub const BW_IMPLICATIVE: Self = Self(1 << 9);
    pub const BW_PHI_IMPLICATIVE: Self = Self(1 << 10);
    pub const PHI_IMPLICATIVE: Self = Self(1 << 11);

    /// Every defined bit.
    pub const DEFINED: Self = Self((1 << 12) - 1);

    pub const NAMED: [(&'static str, PropertyMask); 12] = [
        ("bcc", Self::BCC),
        ("bci", Self::BCI),
        ("bck", Self::BCK),
        ("proper_weak", Self::PROPER_WEAK),
        ("solid", Self::SOLID),
        ("right_solid", Self::RIGHT_SOLID),
        ("supersolid", Self::SUPERSOLID),
        ("bw_commutative", Self::BW_COMMUTATIVE),
        ("bw_positive_implicative", Self::BW_POSITIVE_IMPLICATIVE),
        ("bw_implicative", Self::BW_IMPLICATIVE),
        ("bw_phi_implicative", Self::BW_PHI_IMPLICATIVE),
        ("phi_implicative_global", Self::PHI_IMPLICATIVE),
    ];

    pub const fn empty() -> Self {
        Self(0)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, other: Self) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn set(&mut self, flag: Self, on: bool) {
        if on {
            self.0 |= flag.0;
        } else {
            self.0 &= !flag.0;
        }
    }

    pub fn of(a: &Algebra) -> Self {
        let c = a.classify().flags;
        let s = properties::solidity(a);
        let bw = |law| properties::holds_identity(a, law, Scope::Branchwise).holds;
        let mut m = Self::empty();
        m.set(Self::BCC, c.is_bcc);
        m.set(Self::BCI, c.is_bci);
        m.set(Self::BCK, c.is_bck);
        m.set(Self::PROPER_WEAK, c.is_proper_weak);
        m.set(Self::SOLID, s.solid);
        m.set(Self::RIGHT_SOLID, s.right_solid);
        m.set(Self::SUPERSOLID, s.supersolid);
        m.set(Self::BW_COMMUTATIVE, bw(LawId::Commutative));
        m.set(Self::BW_POSITIVE_IMPLICATIVE, bw(LawId::PositiveImplicative));
        m.set(Self::BW_IMPLICATIVE, bw(LawId::Implicative));
        m.set(Self::BW_PHI_IMPLICATIVE, bw(LawId::PhiImplicative));
        m.set(
            Self::PHI_IMPLICATIVE,
            properties::holds_identity(a, LawId::PhiImplicative, Scope::Global).holds,
        );
        m
    }

    pub fn names(self) -> Vec<&'static str> {
        Self::NAMED
            .iter()
            .filter(|(_, f)| self.contains(*f))
            .map(|(name, _)| *name)
            .collect()
    }
}

impl std::ops::BitOr for PropertyMask {
    type Output = Self;

    fn bitor(self, rhs: Self) -> Self {
        Self(self.0 | rhs.0)
    }
}

impl std::ops::BitOrAssign for PropertyMask {
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl fmt::LowerHex for PropertyMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}
