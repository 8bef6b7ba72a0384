use std::fmt;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::var::VariableId;
use super::AlgebraError;

/// Counts of `x_t` (first row) and `y_t` (second row) factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeMatrix {
    pub sigma: Vec<u32>,
    pub tau: Vec<u32>,
}

impl TypeMatrix {
    pub fn nu(&self) -> usize {
        self.sigma.len()
    }

    pub fn total(&self) -> u32 {
        self.sigma.iter().chain(self.tau.iter()).sum()
    }

    /// The type with the two rows of coordinate `t` exchanged.
    pub fn swapped(&self, t: usize) -> TypeMatrix {
        let mut out = self.clone();
        std::mem::swap(&mut out.sigma[t], &mut out.tau[t]);
        out
    }
}

pub fn type_of(m: &Monomial, nu: u32) -> Result<TypeMatrix, AlgebraError> {
    let mut ty = TypeMatrix { sigma: vec![0; nu as usize], tau: vec![0; nu as usize] };
    for &(v, e) in m.factors() {
        let (row, t) = match v.id() {
            VariableId::X { t, .. } => (&mut ty.sigma, t),
            VariableId::Y { t, .. } => (&mut ty.tau, t),
            VariableId::Z { .. } => return Err(AlgebraError::ZVariable(v.to_string())),
            _ => continue,
        };
        if t == 0 || t > nu {
            return Err(AlgebraError::OutOfRange { var: v.to_string(), nu });
        }
        row[t as usize - 1] += e;
    }
    Ok(ty)
}

impl fmt::Display for TypeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[u32]| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", row(&self.sigma), row(&self.tau))
    }
}
