//! Constructors for the named invariants and relation polynomials.

pub mod basic;
pub mod even;
pub mod relations;

use std::fmt;
use std::str::FromStr;

use crate::algebra::{AlgebraError, Gf2Poly, IntPoly};
use crate::groups::GroupId;

pub use basic::{
    b_int, b_ij, b_inv, b_product_expand, d_int, d_inv, f_inv, g_inv, gl2_matrix, p6, q_int, q_inv, tr_int, tr_inv,
};
pub use even::{
    delta_int, delta_inv, f_even, f_even_slots, f_even_term_count, match_sum, match_sum_abstract, perfect_matchings,
};
pub use relations::{gamma_relation, g_relation, g_relation_signed, gram_det, l_poly, substitute_gram};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("index error: {0}")]
    Index(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("cannot parse invariant `{0}`")]
    BadId(String),
    #[error("invariant {0} needs the dimension n")]
    MissingDimension(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum InvariantId {
    Q(u32),
    B(u32, u32),
    D(Vec<u32>),
    BIJ(Vec<u32>, Vec<u32>),
    Tr(Vec<u32>),
    F(Vec<u32>, Vec<u32>),
    G(Vec<u32>, Vec<u32>),
    P6,
    FEven { nu: u32, t: u32 },
    MatchSum { nu: u32 },
    Delta { nu: u32 },
    GramDet { n: usize },
    GRel { n: usize },
    LPoly { n: usize },
    GammaRel { n: usize },
}

/// A constructed polynomial, over GF(2) or the integers.
#[derive(Clone, Debug, PartialEq)]
pub enum InvariantPoly {
    Gf2(Gf2Poly),
    Int(IntPoly),
}

impl InvariantPoly {
    /// The polynomial over GF(2).
    pub fn to_gf2(&self) -> Gf2Poly {
        match self {
            InvariantPoly::Gf2(p) => p.clone(),
            InvariantPoly::Int(p) => p.reduce_mod2(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            InvariantPoly::Gf2(p) => p.len(),
            InvariantPoly::Int(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ring_name(&self) -> &'static str {
        match self {
            InvariantPoly::Gf2(_) => "GF(2)",
            InvariantPoly::Int(_) => "Z",
        }
    }
}

impl fmt::Display for InvariantPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantPoly::Gf2(p) => p.fmt(f),
            InvariantPoly::Int(p) => p.fmt(f),
        }
    }
}

impl InvariantId {
    /// The ambient dimension the invariant lives in, when fixed.
    pub fn natural_dimension(&self) -> Option<usize> {
        match self {
            InvariantId::Q(_) | InvariantId::B(..) => None,
            InvariantId::D(idx) => Some(idx.len()),
            InvariantId::BIJ(..) | InvariantId::P6 => Some(2),
            InvariantId::Tr(_) => Some(3),
            InvariantId::F(..) | InvariantId::G(..) => Some(4),
            InvariantId::FEven { nu, .. } | InvariantId::MatchSum { nu } | InvariantId::Delta { nu } => {
                Some(2 * *nu as usize)
            }
            InvariantId::GramDet { n } | InvariantId::GRel { n } | InvariantId::LPoly { n } | InvariantId::GammaRel { n } => {
                Some(*n)
            }
        }
    }

    /// Whether the polynomial is in abstract `Q`, `B`, `D`, `Delta` symbols.
    pub fn is_relation(&self) -> bool {
        matches!(
            self,
            InvariantId::GramDet { .. } | InvariantId::GRel { .. } | InvariantId::LPoly { .. } | InvariantId::GammaRel { .. }
        )
    }

    /// The group the invariant is stated for.
    pub fn natural_group(&self, n: usize) -> Option<GroupId> {
        Some(match self {
            InvariantId::Q(_) | InvariantId::B(..) | InvariantId::D(_) => GroupId::orthogonal(n),
            InvariantId::BIJ(..) => GroupId::orthogonal(2),
            InvariantId::Tr(_) => GroupId::orthogonal(3),
            InvariantId::F(..) => GroupId::special(4),
            InvariantId::G(..) => GroupId::orthogonal(4),
            InvariantId::P6 => GroupId::symplectic(2),
            InvariantId::FEven { nu, .. } | InvariantId::MatchSum { nu } => GroupId::orthogonal(2 * *nu as usize),
            InvariantId::Delta { nu } => GroupId::special(2 * *nu as usize),
            _ => return None,
        })
    }

    /// Builds the polynomial; `n` is needed for `Q` and `B` and must agree
    /// with the natural dimension otherwise.
    pub fn build(&self, n: Option<usize>) -> Result<InvariantPoly, InvariantError> {
        let dim = match (self.natural_dimension(), n) {
            (Some(d), Some(n)) if d != n => {
                return Err(InvariantError::Range(format!("{self} lives in dimension {d}, not {n}")));
            }
            (Some(d), _) => d,
            (None, Some(n)) => n,
            (None, None) => return Err(InvariantError::MissingDimension(self.to_string())),
        };
        if dim == 0 {
            return Err(InvariantError::Range("dimension must be positive".into()));
        }
        use InvariantPoly::{Gf2, Int};
        Ok(match self {
            InvariantId::Q(i) => Gf2(q_inv(*i, dim)?),
            InvariantId::B(i, j) => Gf2(b_inv(*i, *j, dim)?),
            InvariantId::D(idx) => Gf2(d_inv(idx, dim)?),
            InvariantId::BIJ(i, j) => Gf2(b_ij(i, j)?),
            InvariantId::Tr(idx) => Gf2(tr_inv(idx)?),
            InvariantId::F(i, j) => Gf2(f_inv(i, j)?),
            InvariantId::G(i, j) => Gf2(g_inv(i, j)?),
            InvariantId::P6 => Int(p6()),
            InvariantId::FEven { nu, t } => Gf2(f_even(*nu, *t)?),
            InvariantId::MatchSum { nu } => Int(match_sum(*nu)?),
            InvariantId::Delta { nu } => Gf2(delta_inv(*nu)?),
            InvariantId::GramDet { n } => Int(gram_det(*n)?),
            InvariantId::GRel { n } => Int(g_relation(*n)?),
            InvariantId::LPoly { n } => Int(l_poly(*n)?),
            InvariantId::GammaRel { n } => Int(gamma_relation(*n)?),
        })
    }
}

fn list(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for InvariantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantId::Q(i) => write!(f, "Q:{i}"),
            InvariantId::B(i, j) => write!(f, "B:{i},{j}"),
            InvariantId::D(idx) => write!(f, "D:{}", list(idx)),
            InvariantId::BIJ(i, j) => write!(f, "BIJ:{}|{}", list(i), list(j)),
            InvariantId::Tr(idx) => write!(f, "TR:{}", list(idx)),
            InvariantId::F(i, j) => write!(f, "F:{}|{}", list(i), list(j)),
            InvariantId::G(i, j) => write!(f, "G:{}|{}", list(i), list(j)),
            InvariantId::P6 => write!(f, "P6"),
            InvariantId::FEven { nu, t } => write!(f, "FEVEN:nu={nu},t={t}"),
            InvariantId::MatchSum { nu } => write!(f, "MS:nu={nu}"),
            InvariantId::Delta { nu } => write!(f, "DELTA:nu={nu}"),
            InvariantId::GramDet { n } => write!(f, "GRAMDET:n={n}"),
            InvariantId::GRel { n } => write!(f, "GREL:n={n}"),
            InvariantId::LPoly { n } => write!(f, "L:n={n}"),
            InvariantId::GammaRel { n } => write!(f, "GAMMA:n={n}"),
        }
    }
}

impl FromStr for InvariantId {
    type Err = InvariantError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || InvariantError::BadId(s.to_string());
        let s = s.trim();
        let (tag, args) = s.split_once(':').unwrap_or((s, ""));
        let nums = |a: &str| -> Result<Vec<u32>, InvariantError> {
            if a.trim().is_empty() {
                return Ok(Vec::new());
            }
            a.split(',').map(|x| x.trim().parse::<u32>().map_err(|_| bad())).collect()
        };
        let pair = |a: &str| -> Result<(Vec<u32>, Vec<u32>), InvariantError> {
            let (l, r) = a.split_once('|').ok_or_else(bad)?;
            Ok((nums(l)?, nums(r)?))
        };
        let keyed = |a: &str, key: &str| -> Result<u32, InvariantError> {
            a.split(',')
                .filter_map(|kv| kv.split_once('='))
                .find(|(k, _)| k.trim() == key)
                .and_then(|(_, v)| v.trim().parse().ok())
                .ok_or_else(bad)
        };
        Ok(match tag.to_ascii_uppercase().as_str() {
            "Q" => match nums(args)?.as_slice() {
                [i] => InvariantId::Q(*i),
                _ => return Err(bad()),
            },
            "B" => match nums(args)?.as_slice() {
                [i, j] => InvariantId::B(*i, *j),
                _ => return Err(bad()),
            },
            "D" => InvariantId::D(nums(args)?),
            "BIJ" => {
                let (i, j) = pair(args)?;
                InvariantId::BIJ(i, j)
            }
            "TR" => InvariantId::Tr(nums(args)?),
            "F" => {
                let (i, j) = pair(args)?;
                InvariantId::F(i, j)
            }
            "G" => {
                let (i, j) = pair(args)?;
                InvariantId::G(i, j)
            }
            "P6" if args.is_empty() => InvariantId::P6,
            "FEVEN" => InvariantId::FEven { nu: keyed(args, "nu")?, t: keyed(args, "t")? },
            "MS" => InvariantId::MatchSum { nu: keyed(args, "nu")? },
            "DELTA" => InvariantId::Delta { nu: keyed(args, "nu")? },
            "GRAMDET" => InvariantId::GramDet { n: keyed(args, "n")? as usize },
            "GREL" => InvariantId::GRel { n: keyed(args, "n")? as usize },
            "L" => InvariantId::LPoly { n: keyed(args, "n")? as usize },
            "GAMMA" => InvariantId::GammaRel { n: keyed(args, "n")? as usize },
            _ => return Err(bad()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn id_round_trip() {
        for s in [
            "Q:1",
            "B:1,2",
            "D:1,2,3",
            "BIJ:1,2|3,4",
            "TR:1,2,3",
            "F:1,2|3,4",
            "G:1,2|3,4",
            "P6",
            "FEVEN:nu=2,t=2",
            "MS:nu=2",
            "DELTA:nu=2",
            "GRAMDET:n=3",
            "GREL:n=3",
            "L:n=4",
            "GAMMA:n=4",
        ] {
            let id: InvariantId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert!("Q".parse::<InvariantId>().is_err());
        assert!("BIJ:1,2".parse::<InvariantId>().is_err());
        assert!("XYZ:1".parse::<InvariantId>().is_err());
    }

    #[test]
    fn build_needs_dimension() {
        assert!(matches!(InvariantId::Q(1).build(None), Err(InvariantError::MissingDimension(_))));
        assert_eq!(InvariantId::Q(1).build(Some(2)).unwrap().to_string(), "x1_1*y1_1");
        assert!(InvariantId::Tr(vec![1, 2]).build(Some(4)).is_err());
    }
}
