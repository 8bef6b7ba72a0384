//! Orthogonal and symplectic groups acting on vector tuples.

pub mod action;
pub mod check;
pub mod family;
pub mod forms;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use action::{mat_mul, mat_vec, reflection, swap_x1_y1, torus_action, GroupAction};
pub use check::{
    check_under, invariance_check, random_element, random_symplectic, Certificate, CheckMode, CheckOptions,
    Status, Witness,
};
pub use family::{generator_family, symplectic_witness, GeneratorFamily, NamedAction};
pub use forms::{beta_poly, beta_value, q_poly, q_value};

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("vector is singular: q(u) = 0")]
    SingularVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("variable {var} does not fit dimension {n}")]
    VariableOutsideDimension { var: String, n: usize },
    #[error("no symbolic generator family for {0}")]
    UnsupportedGroup(String),
    #[error("cannot parse group `{0}`; expected e.g. O4, SO3, SP4")]
    BadGroupName(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    O,
    SO,
    Sp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupId {
    pub kind: GroupKind,
    pub n: usize,
}

impl GroupId {
    pub fn new(kind: GroupKind, n: usize) -> Result<GroupId, GroupError> {
        let g = GroupId { kind, n };
        if n == 0 || (kind == GroupKind::Sp && n % 2 == 1) {
            return Err(GroupError::BadGroupName(g.to_string()));
        }
        Ok(g)
    }

    pub fn orthogonal(n: usize) -> GroupId {
        GroupId { kind: GroupKind::O, n }
    }

    pub fn special(n: usize) -> GroupId {
        GroupId { kind: GroupKind::SO, n }
    }

    pub fn symplectic(n: usize) -> GroupId {
        GroupId { kind: GroupKind::Sp, n }
    }

    pub fn nu(&self) -> usize {
        self.n / 2
    }

    /// Whether an exact generator family exists.
    pub fn has_symbolic_family(&self) -> bool {
        family::generator_family(*self).is_ok()
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            GroupKind::O => "O",
            GroupKind::SO => "SO",
            GroupKind::Sp => "Sp",
        };
        write!(f, "{k}({})", self.n)
    }
}

impl FromStr for GroupId {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GroupError::BadGroupName(s.to_string());
        let t = s.trim().to_ascii_uppercase().replace(['(', ')'], "");
        let (kind, rest) = if let Some(r) = t.strip_prefix("SO") {
            (GroupKind::SO, r)
        } else if let Some(r) = t.strip_prefix("SP") {
            (GroupKind::Sp, r)
        } else if let Some(r) = t.strip_prefix('O') {
            (GroupKind::O, r)
        } else {
            return Err(bad());
        };
        let n: usize = rest.parse().map_err(|_| bad())?;
        GroupId::new(kind, n).map_err(|_| bad())
    }
}
