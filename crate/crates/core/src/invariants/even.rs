//! Multilinear invariants in even dimension: the type-sum `f`, the sum over
//! perfect matchings of `B` products, and `Delta`.

use num_bigint::BigInt;

use crate::algebra::{Gf2, Gf2Poly, IntPoly, Integers, Monomial, Var};

use super::basic::{b_int, d_int};
use super::InvariantError;

/// Largest term count `f_even` will build.
pub const F_EVEN_TERM_CAP: u128 = 1 << 22;

/// Number of vector slots of `f_even(nu, t)`.
pub fn f_even_slots(nu: u32, t: u32) -> Result<u32, InvariantError> {
    if nu < 2 || t == 0 || t > 6 {
        return Err(InvariantError::Range(format!("f needs nu >= 2 and 1 <= t <= 6, got nu={nu}, t={t}")));
    }
    Ok(2 * (((1u32 << t) - 1) * nu - 1))
}

fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

/// Term count of `f_even(nu, t)`: `nu` choices for the column carrying the
/// smaller entry, times the multinomial number of slot assignments.
pub fn f_even_term_count(nu: u32, t: u32) -> Result<u128, InvariantError> {
    let m = f_even_slots(nu, t)?;
    if m > 34 {
        return Err(InvariantError::Range(format!("f with {m} slots exceeds the term cap")));
    }
    let a = (1u32 << t) - 2;
    let b = (1u32 << t) - 1;
    let denom = factorial(a).pow(2) * factorial(b).pow(2 * (nu - 1));
    Ok(nu as u128 * (factorial(m) / denom))
}

/// Sum of all multilinear monomials in the first `m` vectors whose two type
/// rows coincide and are a permutation of `(2^t-2, 2^t-1, ..., 2^t-1)`.
pub fn f_even(nu: u32, t: u32) -> Result<Gf2Poly, InvariantError> {
    let m = f_even_slots(nu, t)?;
    let count = f_even_term_count(nu, t)?;
    if count > F_EVEN_TERM_CAP {
        return Err(InvariantError::Range(format!("f({nu},{t}) has {count} terms, above the cap {F_EVEN_TERM_CAP}")));
    }
    let small = (1u32 << t) - 2;
    let big = (1u32 << t) - 1;
    let mut p = Gf2Poly::zero(Gf2);
    let mut chosen = Vec::with_capacity(m as usize);
    for k in 0..nu {
        // remaining[2c] counts x_{c+1}, remaining[2c+1] counts y_{c+1}
        let mut remaining: Vec<u32> =
            (0..nu).flat_map(|c| if c == k { [small, small] } else { [big, big] }).collect();
        assign(1, m, nu, &mut remaining, &mut chosen, &mut p);
    }
    debug_assert_eq!(p.len() as u128, count);
    Ok(p)
}

fn assign(slot: u32, m: u32, nu: u32, remaining: &mut [u32], chosen: &mut Vec<Var>, out: &mut Gf2Poly) {
    if slot > m {
        out.add_term(Monomial::from_vars(chosen.iter().copied()), 1);
        return;
    }
    for c in 0..2 * nu as usize {
        if remaining[c] == 0 {
            continue;
        }
        remaining[c] -= 1;
        let t = c as u32 / 2 + 1;
        chosen.push(if c % 2 == 0 { Var::x(t, slot) } else { Var::y(t, slot) });
        assign(slot + 1, m, nu, remaining, chosen, out);
        chosen.pop();
        remaining[c] += 1;
    }
}

/// Perfect matchings of `1..=2k` as lists of pairs `(a, b)`, `a < b`, with
/// first elements increasing.
pub fn perfect_matchings(size: u32) -> Vec<Vec<(u32, u32)>> {
    fn go(free: &mut Vec<u32>, cur: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
        if free.is_empty() {
            out.push(cur.clone());
            return;
        }
        let a = free.remove(0);
        for idx in 0..free.len() {
            let b = free.remove(idx);
            cur.push((a, b));
            go(free, cur, out);
            cur.pop();
            free.insert(idx, b);
        }
        free.insert(0, a);
    }
    assert!(size % 2 == 0);
    let mut out = Vec::new();
    go(&mut (1..=size).collect(), &mut Vec::new(), &mut out);
    out
}

/// `sum B^(i1 i2) ... B^(i_{2nu-1} i_{2nu})` over perfect matchings, expanded
/// over the integers in `2 nu`-dimensional coordinates.
pub fn match_sum(nu: u32) -> Result<IntPoly, InvariantError> {
    if nu == 0 {
        return Err(InvariantError::Range("nu must be positive".into()));
    }
    let n = 2 * nu as usize;
    let mut out = IntPoly::zero(Integers);
    for matching in perfect_matchings(2 * nu) {
        let mut prod = IntPoly::one(Integers);
        for (a, b) in matching {
            prod = prod.mul(&b_int(a, b, n)?);
        }
        out.add_assign(&prod);
    }
    Ok(out)
}

/// The same sum with abstract `B` symbols.
pub fn match_sum_abstract(size: u32) -> IntPoly {
    let mut out = IntPoly::zero(Integers);
    for matching in perfect_matchings(size) {
        let m = Monomial::from_vars(matching.iter().map(|&(a, b)| Var::gram_b(a, b)));
        out.add_term(m, BigInt::from(1));
    }
    out
}

/// `Delta = (sum BB...B - D) / 2` over the integers.
pub fn delta_int(nu: u32) -> Result<IntPoly, InvariantError> {
    let n = 2 * nu as usize;
    let ms = match_sum(nu)?;
    let idx: Vec<u32> = (1..=n as u32).collect();
    let d = d_int(&idx, n)?;
    Ok(ms.sub(&d).divide_exact(&BigInt::from(2))?)
}

pub fn delta_inv(nu: u32) -> Result<Gf2Poly, InvariantError> {
    Ok(delta_int(nu)?.reduce_mod2())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_gf2_poly;

    #[test]
    fn slot_counts() {
        assert_eq!(f_even_slots(2, 2).unwrap(), 10);
        assert_eq!(f_even_slots(3, 2).unwrap(), 16);
        assert_eq!(f_even_term_count(2, 2).unwrap(), 50400);
        assert!(f_even(3, 2).is_err());
        assert!(f_even_slots(1, 2).is_err());
    }

    #[test]
    fn small_f_matches_count() {
        // t = 1: rows are permutations of (0, 1, ..., 1)
        let f = f_even(3, 1).unwrap();
        assert_eq!(f.len() as u128, f_even_term_count(3, 1).unwrap());
        assert_eq!(f.multidegree(), Some(vec![1; 4]));
    }

    #[test]
    fn matchings() {
        assert_eq!(perfect_matchings(2).len(), 1);
        assert_eq!(perfect_matchings(4).len(), 3);
        assert_eq!(perfect_matchings(6).len(), 15);
        assert_eq!(match_sum_abstract(4).to_string(), "B1_2*B3_4 + B1_3*B2_4 + B1_4*B2_3");
    }

    #[test]
    fn delta_for_one_plane() {
        assert_eq!(delta_inv(1).unwrap(), parse_gf2_poly("y1_1*x1_2").unwrap());
    }
}
