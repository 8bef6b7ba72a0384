//! Relation polynomials among `Q`, `B`, `D` and `Delta`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::algebra::{det, IntPoly, Integers, Var, VariableId};

use super::basic::{b_int, d_int, q_int};
use super::even::{delta_int, match_sum_abstract};
use super::InvariantError;

/// The symbolic `n x n` determinant with `2 Q^(i)` on the diagonal and
/// `B^(ij)` off it.
pub fn gram_det(n: usize) -> Result<IntPoly, InvariantError> {
    if n == 0 {
        return Err(InvariantError::Range("n must be positive".into()));
    }
    let rows: Vec<Vec<IntPoly>> = (1..=n as u32)
        .map(|i| {
            (1..=n as u32)
                .map(|j| {
                    if i == j {
                        IntPoly::var(Integers, Var::gram_q(i)).scale(&BigInt::from(2))
                    } else {
                        IntPoly::var(Integers, Var::gram_b(i, j))
                    }
                })
                .collect()
        })
        .collect();
    Ok(det(&Integers, &rows))
}

fn sign_nu(n: usize) -> BigInt {
    if (n / 2) % 2 == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

fn require_odd(n: usize) -> Result<(), InvariantError> {
    if n % 2 == 0 {
        return Err(InvariantError::Range(format!("the relation G needs odd n, got {n}")));
    }
    Ok(())
}

fn require_even(n: usize) -> Result<(), InvariantError> {
    if n % 2 == 1 || n == 0 {
        return Err(InvariantError::Range(format!("the relation Gamma needs even n, got {n}")));
    }
    Ok(())
}

/// `G = D^2 - det / 2` in the abstract symbols.
pub fn g_relation(n: usize) -> Result<IntPoly, InvariantError> {
    require_odd(n)?;
    let half = gram_det(n)?.divide_exact(&BigInt::from(2))?;
    Ok(IntPoly::var(Integers, Var::gram_d()).pow(2).sub(&half))
}

/// `(-1)^nu D^2 - det / 2`, the form that vanishes over the integers.
pub fn g_relation_signed(n: usize) -> Result<IntPoly, InvariantError> {
    require_odd(n)?;
    let half = gram_det(n)?.divide_exact(&BigInt::from(2))?;
    Ok(IntPoly::var(Integers, Var::gram_d()).pow(2).scale(&sign_nu(n)).sub(&half))
}

/// `L = (sum BB...B)^2 - (-1)^nu det`.
pub fn l_poly(n: usize) -> Result<IntPoly, InvariantError> {
    require_even(n)?;
    let ms = match_sum_abstract(n as u32);
    Ok(ms.mul(&ms).sub(&gram_det(n)?.scale(&sign_nu(n))))
}

/// `Gamma = Delta^2 - Delta sum BB...B + L / 4`.
pub fn gamma_relation(n: usize) -> Result<IntPoly, InvariantError> {
    let l4 = l_poly(n)?.divide_exact(&BigInt::from(4))?;
    let delta = IntPoly::var(Integers, Var::gram_delta());
    let ms = match_sum_abstract(n as u32);
    Ok(delta.pow(2).sub(&delta.mul(&ms)).add(&l4))
}

/// Replaces the abstract symbols by the concrete integer polynomials in
/// `n`-dimensional coordinates: `D` by `D^(1..n)` and `Delta` by the integer
/// `Delta` (even `n`).
pub fn substitute_gram(p: &IntPoly, n: usize) -> Result<IntPoly, InvariantError> {
    let mut map: HashMap<Var, IntPoly> = HashMap::new();
    for v in p.variables() {
        let img = match v.id() {
            VariableId::GramQ { i } => q_int(i, n)?,
            VariableId::GramB { i, j } => b_int(i, j, n)?,
            VariableId::GramD => d_int(&(1..=n as u32).collect::<Vec<_>>(), n)?,
            VariableId::GramDelta => {
                require_even(n)?;
                delta_int((n / 2) as u32)?
            }
            _ => continue,
        };
        map.insert(v, img);
    }
    Ok(p.substitute(&map)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_int_poly;

    #[test]
    fn small_gram_determinants() {
        assert_eq!(gram_det(1).unwrap(), parse_int_poly("2*Q1").unwrap());
        assert_eq!(gram_det(2).unwrap(), parse_int_poly("4*Q1*Q2 - B1_2^2").unwrap());
    }

    #[test]
    fn gamma_for_one_plane() {
        let g = gamma_relation(2).unwrap();
        assert_eq!(g, parse_int_poly("Delta^2 - Delta*B1_2 + Q1*Q2").unwrap());
        assert!(substitute_gram(&g, 2).unwrap().is_zero());
    }

    #[test]
    fn g_for_three() {
        assert!(substitute_gram(&g_relation_signed(3).unwrap(), 3).unwrap().is_zero());
        assert!(substitute_gram(&g_relation(3).unwrap(), 3).unwrap().reduce_mod2().is_zero());
        assert!(g_relation(4).is_err());
    }
}
