//! Determinants of small matrices with polynomial entries.

use super::monomial::Monomial;
use super::poly::Poly;
use super::ring::Ring;

/// Leibniz expansion of a square matrix of polynomials.
pub fn det<R: Ring>(ring: &R, rows: &[Vec<Poly<R>>]) -> Poly<R> {
    det_filtered(ring, rows, |_| true)
}

/// Determinant restricted to the terms whose partial products all satisfy
/// `keep`. The predicate must be closed under division (if a monomial is
/// kept, so are its divisors), which makes pruning exact; multidegree bounds
/// are the intended use.
pub fn det_filtered<R: Ring>(ring: &R, rows: &[Vec<Poly<R>>], keep: impl Fn(&Monomial) -> bool) -> Poly<R> {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix is not square");
    let mut used = vec![false; n];
    let start = Poly::one(ring.clone());
    let mut out = Poly::zero(ring.clone());
    expand(ring, rows, 0, &mut used, start, false, &keep, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn expand<R: Ring>(
    ring: &R,
    rows: &[Vec<Poly<R>>],
    r: usize,
    used: &mut [bool],
    acc: Poly<R>,
    odd: bool,
    keep: &impl Fn(&Monomial) -> bool,
    out: &mut Poly<R>,
) {
    if r == rows.len() {
        let signed = if odd { acc.neg() } else { acc };
        out.add_assign(&signed);
        return;
    }
    for c in 0..rows.len() {
        if used[c] || rows[r][c].is_zero() {
            continue;
        }
        // the sign flips once per already-used column to the right of c
        let inversions = used[c + 1..].iter().filter(|&&u| u).count();
        let next = acc.mul(&rows[r][c]).filter(keep);
        if next.is_zero() {
            continue;
        }
        used[c] = true;
        expand(ring, rows, r + 1, used, next, odd ^ (inversions % 2 == 1), keep, out);
        used[c] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::IntPoly;
    use crate::algebra::ring::Integers;
    use crate::algebra::var::Var;

    fn v(i: u32) -> IntPoly {
        IntPoly::var(Integers, Var::x(1, i))
    }

    #[test]
    fn two_by_two() {
        let m = vec![vec![v(1), v(2)], vec![v(3), v(4)]];
        let d = det(&Integers, &m);
        assert_eq!(d, v(1).mul(&v(4)).sub(&v(2).mul(&v(3))));
    }

    #[test]
    fn permutation_signs() {
        // det of a 3-cycle permutation matrix is +1, of a transposition -1
        let one = IntPoly::one(Integers);
        let zero = IntPoly::zero(Integers);
        let cyc = vec![
            vec![zero.clone(), one.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), one.clone()],
            vec![one.clone(), zero.clone(), zero.clone()],
        ];
        assert_eq!(det(&Integers, &cyc), one);
        let tr = vec![
            vec![zero.clone(), one.clone(), zero.clone()],
            vec![one.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), one.clone()],
        ];
        assert_eq!(det(&Integers, &tr), one.neg());
    }
}
