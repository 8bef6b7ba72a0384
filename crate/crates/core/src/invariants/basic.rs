//! The quadratic, polar and determinant invariants and the two- and
//! three-dimensional families built from 2x2 matrices.

use crate::algebra::{det, det_filtered, Gf2, Gf2Poly, IntPoly, Integers, Monomial, Var};

use super::InvariantError;

fn check_index(i: u32) -> Result<(), InvariantError> {
    if i == 0 {
        return Err(InvariantError::Index("vector indices start at 1".into()));
    }
    Ok(())
}

fn ivar(v: Var) -> IntPoly {
    IntPoly::var(Integers, v)
}

/// `Q^(i)` over the integers.
pub fn q_int(i: u32, n: usize) -> Result<IntPoly, InvariantError> {
    check_index(i)?;
    Ok(crate::groups::q_poly(n, i).lift_int())
}

/// `B^(ij)` over the integers.
pub fn b_int(i: u32, j: u32, n: usize) -> Result<IntPoly, InvariantError> {
    check_index(i)?;
    check_index(j)?;
    if i == j {
        return Err(InvariantError::Index(format!("B needs two different indices, got {i},{i}")));
    }
    let mut b = crate::groups::beta_poly(n, i, j).lift_int();
    if n % 2 == 1 {
        b.add_term(Monomial::from_vars([Var::z(i), Var::z(j)]), 2.into());
    }
    Ok(b)
}

pub fn q_inv(i: u32, n: usize) -> Result<Gf2Poly, InvariantError> {
    Ok(q_int(i, n)?.reduce_mod2())
}

pub fn b_inv(i: u32, j: u32, n: usize) -> Result<Gf2Poly, InvariantError> {
    Ok(b_int(i, j, n)?.reduce_mod2())
}

/// `det[v^(i_1), ..., v^(i_n)]` over the integers, rows in coordinate order
/// `x_1..x_nu, y_1..y_nu, z`.
pub fn d_int(indices: &[u32], n: usize) -> Result<IntPoly, InvariantError> {
    if indices.len() != n {
        return Err(InvariantError::Index(format!("D needs {n} indices, got {}", indices.len())));
    }
    for &i in indices {
        check_index(i)?;
    }
    let rows: Vec<Vec<IntPoly>> = (0..n)
        .map(|pos| indices.iter().map(|&i| ivar(Var::at_position(n, pos, i))).collect())
        .collect();
    Ok(det(&Integers, &rows))
}

pub fn d_inv(indices: &[u32], n: usize) -> Result<Gf2Poly, InvariantError> {
    Ok(d_int(indices, n)?.reduce_mod2())
}

fn xprod(idx: &[u32]) -> Monomial {
    Monomial::from_vars(idx.iter().map(|&i| Var::x(1, i)))
}

fn yprod(idx: &[u32]) -> Monomial {
    Monomial::from_vars(idx.iter().map(|&i| Var::y(1, i)))
}

/// `B^(I|J) = x^(I) y^(J) + y^(I) x^(J)` for two-dimensional vectors. `I` and
/// `J` may be multisets.
pub fn b_ij(i: &[u32], j: &[u32]) -> Result<Gf2Poly, InvariantError> {
    if i.len() != j.len() {
        return Err(InvariantError::Index(format!("|I| = {} but |J| = {}", i.len(), j.len())));
    }
    for &k in i.iter().chain(j.iter()) {
        check_index(k)?;
    }
    let mut p = Gf2Poly::zero(Gf2);
    p.add_term(xprod(i).mul(&yprod(j)), 1);
    p.add_term(yprod(i).mul(&xprod(j)), 1);
    Ok(p)
}

pub type IndexPair = (Vec<u32>, Vec<u32>);

/// `B^(E|F) B^(G|H) = B^(E+G|F+H) + B^(E+H|F+G)`: the index data of the two
/// summands, multisets sorted.
pub fn b_product_expand(e: &[u32], f: &[u32], g: &[u32], h: &[u32]) -> Result<(IndexPair, IndexPair), InvariantError> {
    if e.len() != f.len() || g.len() != h.len() {
        return Err(InvariantError::Index("each factor needs |I| = |J|".into()));
    }
    let cat = |a: &[u32], b: &[u32]| {
        let mut v: Vec<u32> = a.iter().chain(b.iter()).copied().collect();
        v.sort_unstable();
        v
    };
    Ok(((cat(e, g), cat(f, h)), (cat(e, h), cat(f, g))))
}

/// The 2x2 matrix `[[z, x], [y, z]]` of a three-dimensional vector.
fn sl2_matrix(i: u32) -> [[IntPoly; 2]; 2] {
    let (x, y, z) = (ivar(Var::x(1, i)), ivar(Var::y(1, i)), ivar(Var::z(i)));
    [[z.clone(), x], [y, z]]
}

fn mat2_mul(a: &[[IntPoly; 2]; 2], b: &[[IntPoly; 2]; 2]) -> [[IntPoly; 2]; 2] {
    let e = |r: usize, c: usize| a[r][0].mul(&b[0][c]).add(&a[r][1].mul(&b[1][c]));
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// `Tr(V^(i_1) ... V^(i_s))` over the integers.
pub fn tr_int(indices: &[u32]) -> Result<IntPoly, InvariantError> {
    if indices.is_empty() {
        return Err(InvariantError::Index("Tr needs at least one index".into()));
    }
    for &i in indices {
        check_index(i)?;
    }
    let mut acc = sl2_matrix(indices[0]);
    for &i in &indices[1..] {
        acc = mat2_mul(&acc, &sl2_matrix(i));
    }
    Ok(acc[0][0].add(&acc[1][1]))
}

pub fn tr_inv(indices: &[u32]) -> Result<Gf2Poly, InvariantError> {
    Ok(tr_int(indices)?.reduce_mod2())
}

fn check_fg_indices(i: &[u32], j: &[u32]) -> Result<(), InvariantError> {
    if i.len() != j.len() {
        return Err(InvariantError::Index(format!("|I| = {} but |J| = {}", i.len(), j.len())));
    }
    if i.len() < 2 {
        return Err(InvariantError::Index("the block pattern needs s >= 2".into()));
    }
    let mut all: Vec<u32> = i.iter().chain(j.iter()).copied().collect();
    for &k in &all {
        check_index(k)?;
    }
    all.sort_unstable();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Err(InvariantError::Index("indices must be all different".into()));
    }
    Ok(())
}

/// `[[x_1, x_2], [y_2, y_1]]`, the 2x2 matrix of a four-dimensional vector.
pub fn gl2_matrix(i: u32) -> [[Var; 2]; 2] {
    [[Var::x(1, i), Var::x(2, i)], [Var::y(2, i), Var::y(1, i)]]
}

/// `F^(I|J)`: the multilinear component of the block determinant with
/// `V^(i_t)` on the block diagonal, `V^(j_t)` right of it and `V^(j_s)` in
/// the lower left corner.
pub fn f_inv(i: &[u32], j: &[u32]) -> Result<Gf2Poly, InvariantError> {
    check_fg_indices(i, j)?;
    let s = i.len();
    let mut rows = vec![vec![Gf2Poly::zero(Gf2); 2 * s]; 2 * s];
    let mut place = |br: usize, bc: usize, idx: u32| {
        let v = gl2_matrix(idx);
        for (r, row) in v.iter().enumerate() {
            for (c, &var) in row.iter().enumerate() {
                rows[2 * br + r][2 * bc + c] = Gf2Poly::var(Gf2, var);
            }
        }
    };
    for t in 0..s {
        place(t, t, i[t]);
        place(t, (t + 1) % s, j[t]);
    }
    let linear = |m: &Monomial| m.multidegree().iter().all(|&d| d <= 1);
    Ok(det_filtered(&Gf2, &rows, linear))
}

/// `G^(I|J) = F^(I|J) + sigma F^(I|J)` with `sigma` the swap `x_1 <-> y_1`.
pub fn g_inv(i: &[u32], j: &[u32]) -> Result<Gf2Poly, InvariantError> {
    let f = f_inv(i, j)?;
    let sf = crate::groups::swap_x1_y1(4).apply(&f).expect("four-dimensional");
    Ok(f.add(&sf))
}

/// The sum of the twenty sextilinear monomials of type `(3;3)` in six
/// two-dimensional vectors.
pub fn p6() -> IntPoly {
    let mut p = IntPoly::zero(Integers);
    for mask in 0u32..64 {
        if mask.count_ones() != 3 {
            continue;
        }
        let m = Monomial::from_vars((1..=6).map(|i| if mask >> (i - 1) & 1 == 1 { Var::x(1, i) } else { Var::y(1, i) }));
        p.add_term(m, 1.into());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_gf2_poly;

    #[test]
    fn displayed_formulas() {
        assert_eq!(q_inv(1, 2).unwrap().to_string(), "x1_1*y1_1");
        assert_eq!(b_inv(1, 2, 2).unwrap().to_string(), "x1_1*y1_2 + y1_1*x1_2");
        assert_eq!(d_inv(&[1, 2], 2).unwrap(), b_inv(1, 2, 2).unwrap());
        assert_eq!(q_inv(1, 3).unwrap().to_string(), "x1_1*y1_1 + z_1^2");
    }

    #[test]
    fn two_dimensional_b() {
        assert_eq!(b_ij(&[1], &[2]).unwrap(), b_inv(1, 2, 2).unwrap());
        assert_eq!(b_ij(&[1, 2], &[3, 4]).unwrap().len(), 2);
        let lhs = b_ij(&[1, 2], &[1, 3]).unwrap();
        let rhs = q_inv(1, 2).unwrap().mul(&b_ij(&[2], &[3]).unwrap());
        assert_eq!(lhs, rhs);
        assert!(b_ij(&[1], &[2, 3]).is_err());
    }

    #[test]
    fn product_formula_indices() {
        let ((a, b), (c, d)) = b_product_expand(&[1], &[2], &[3], &[4]).unwrap();
        assert_eq!((a, b, c, d), (vec![1, 3], vec![2, 4], vec![1, 4], vec![2, 3]));
    }

    #[test]
    fn traces() {
        assert_eq!(tr_inv(&[1, 2]).unwrap(), parse_gf2_poly("x1_1*y1_2 + y1_1*x1_2").unwrap());
        assert!(tr_inv(&[1]).unwrap().is_zero());
        assert_eq!(tr_int(&[1]).unwrap().to_string(), "2*z_1");
    }

    #[test]
    fn f_restricts_to_b() {
        let f = f_inv(&[1, 2], &[3, 4]).unwrap();
        assert_eq!(f.multidegree(), Some(vec![1, 1, 1, 1]));
        let r = f.filter(|m| m.factors().iter().all(|(v, _)| !matches!(v.id(), crate::algebra::VariableId::X { t: 2, .. } | crate::algebra::VariableId::Y { t: 2, .. })));
        assert_eq!(r, b_ij(&[1, 2], &[3, 4]).unwrap());
        assert!(f_inv(&[1], &[2]).is_err());
        assert!(f_inv(&[1, 2], &[2, 3]).is_err());
    }

    #[test]
    fn p6_shape() {
        let p = p6();
        assert_eq!(p.len(), 20);
        assert!(p.monomials().all(|m| m.has_zero_torus_weight()));
    }
}
