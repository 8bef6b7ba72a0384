//! Quadratic and alternating forms on `GF(2^k)^d` given by coefficients.

use serde::{Deserialize, Serialize};

use crate::algebra::{Fe, FieldDesc};
use crate::invspace::{field_inverse, field_rank};

use super::WittError;

/// `q(x) = sum_i diag[i] x_i^2 + sum_{i<j} cross[i][j] x_i x_j`; entries
/// of `cross` on or below the diagonal are ignored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadForm {
    pub diag: Vec<Fe>,
    pub cross: Vec<Vec<Fe>>,
}

impl QuadForm {
    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// The standard hyperbolic form `x_1 y_1 + ... + x_s y_s` in the
    /// coordinate order `x_1..x_s, y_1..y_s`.
    pub fn hyperbolic(s: usize) -> QuadForm {
        let d = 2 * s;
        let mut cross = vec![vec![0; d]; d];
        for t in 0..s {
            cross[t][s + t] = 1;
        }
        QuadForm { diag: vec![0; d], cross }
    }

    pub fn eval(&self, field: &FieldDesc, x: &[Fe]) -> Fe {
        let d = self.dim();
        let mut acc = 0;
        for i in 0..d {
            if x[i] == 0 {
                continue;
            }
            acc ^= field.mul(self.diag[i], field.square(x[i]));
            for j in i + 1..d {
                acc ^= field.mul(self.cross[i][j], field.mul(x[i], x[j]));
            }
        }
        acc
    }

    /// Matrix of the polar form.
    pub fn polar_matrix(&self) -> Vec<Vec<Fe>> {
        let d = self.dim();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| match i.cmp(&j) {
                        std::cmp::Ordering::Less => self.cross[i][j],
                        std::cmp::Ordering::Greater => self.cross[j][i],
                        std::cmp::Ordering::Equal => 0,
                    })
                    .collect()
            })
            .collect()
    }

    /// The form `x -> q(A x)`.
    pub fn pull_back(&self, field: &FieldDesc, a: &[Vec<Fe>]) -> QuadForm {
        let d = self.dim();
        let col = |j: usize| -> Vec<Fe> { a.iter().map(|row| row[j]).collect() };
        let cols: Vec<Vec<Fe>> = (0..d).map(col).collect();
        let beta = self.polar_matrix();
        let mut cross = vec![vec![0; d]; d];
        let diag = cols.iter().map(|c| self.eval(field, c)).collect();
        for i in 0..d {
            for j in i + 1..d {
                cross[i][j] = bilinear(field, &beta, &cols[i], &cols[j]);
            }
        }
        QuadForm { diag, cross }
    }
}

/// `u^T M v`.
pub fn bilinear(field: &FieldDesc, m: &[Vec<Fe>], u: &[Fe], v: &[Fe]) -> Fe {
    let mut acc = 0;
    for (i, row) in m.iter().enumerate() {
        if u[i] == 0 {
            continue;
        }
        let mut s = 0;
        for (j, &e) in row.iter().enumerate() {
            s ^= field.mul(e, v[j]);
        }
        acc ^= field.mul(u[i], s);
    }
    acc
}

fn axpy(field: &FieldDesc, a: Fe, x: &[Fe], y: &mut [Fe]) {
    if a == 0 {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x.iter()) {
        *yi ^= field.mul(a, xi);
    }
}

fn scaled(field: &FieldDesc, a: Fe, x: &[Fe]) -> Vec<Fe> {
    x.iter().map(|&e| field.mul(a, e)).collect()
}

/// Symplectic Gram-Schmidt for the alternating form `m` on the span of
/// `vectors`: pairs `(a, b)` with `m(a, b) = 1`, mutually orthogonal, and the
/// leftover vectors, which lie in the radical of the span.
pub fn symplectic_pairs(
    field: &FieldDesc,
    m: &[Vec<Fe>],
    vectors: Vec<Vec<Fe>>,
) -> (Vec<(Vec<Fe>, Vec<Fe>)>, Vec<Vec<Fe>>) {
    let mut rest: std::collections::VecDeque<Vec<Fe>> =
        vectors.into_iter().filter(|v| v.iter().any(|&e| e != 0)).collect();
    let mut pairs = Vec::new();
    let mut radical = Vec::new();
    while let Some(a) = rest.pop_front() {
        let Some(k) = rest.iter().position(|b| bilinear(field, m, &a, b) != 0) else {
            radical.push(a);
            continue;
        };
        let b0 = rest.remove(k).expect("index in range");
        let inv = field.inv(bilinear(field, m, &a, &b0)).expect("nonzero");
        let b = scaled(field, inv, &b0);
        for w in rest.iter_mut() {
            let wb = bilinear(field, m, w, &b);
            let wa = bilinear(field, m, w, &a);
            axpy(field, wb, &a, w);
            axpy(field, wa, &b, w);
        }
        rest.retain(|v| v.iter().any(|&e| e != 0));
        pairs.push((a, b));
    }
    (pairs, radical)
}

/// Returns `(P, r)` with `P^T beta P = J (+) 0`, `J = [[0, I], [I, 0]]` of
/// size `r`.
pub fn alternating_normal_form(field: &FieldDesc, beta: &[Vec<Fe>]) -> Result<(Vec<Vec<Fe>>, usize), WittError> {
    let m = beta.len();
    check_alternating(beta)?;
    let units: Vec<Vec<Fe>> = (0..m).map(|i| (0..m).map(|j| Fe::from(i == j)).collect()).collect();
    let (pairs, leftover) = symplectic_pairs(field, beta, units);
    let r = 2 * pairs.len();
    let mut cols: Vec<Vec<Fe>> = pairs.iter().map(|p| p.0.clone()).chain(pairs.iter().map(|p| p.1.clone())).collect();
    for v in leftover {
        let mut trial = cols.clone();
        trial.push(v);
        if field_rank(field, &trial) == trial.len() {
            cols = trial;
        }
    }
    debug_assert_eq!(cols.len(), m);
    let p = (0..m).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    Ok((p, r))
}

pub(crate) fn check_alternating(beta: &[Vec<Fe>]) -> Result<(), WittError> {
    let m = beta.len();
    for (i, row) in beta.iter().enumerate() {
        if row.len() != m {
            return Err(WittError::NotAlternating("matrix is not square".into()));
        }
        if row[i] != 0 {
            return Err(WittError::NotAlternating(format!("diagonal entry {i} is nonzero")));
        }
        for j in 0..i {
            if row[j] != beta[j][i] {
                return Err(WittError::NotAlternating(format!("entries ({i},{j}) and ({j},{i}) differ")));
            }
        }
    }
    Ok(())
}

fn vanishing_vector(field: &FieldDesc, q: &QuadForm, pairs: &[(Vec<Fe>, Vec<Fe>)]) -> Option<Vec<Fe>> {
    for (a, b) in pairs {
        let (qa, qb) = (q.eval(field, a), q.eval(field, b));
        if qa == 0 {
            return Some(a.clone());
        }
        if qb == 0 {
            return Some(b.clone());
        }
        // q(l a + b) = l^2 qa + l + qb; with mu = l qa: mu^2 + mu = qa qb
        if let Some(mu) = field.artin_schreier_solve(field.mul(qa, qb)) {
            let l = field.div(mu, qa).expect("qa nonzero");
            let mut e = scaled(field, l, a);
            axpy(field, 1, b, &mut e);
            return Some(e);
        }
    }
    // two anisotropic planes: s a1 + a2 with s^2 q(a1) = q(a2)
    if pairs.len() >= 2 {
        let (a1, a2) = (&pairs[0].0, &pairs[1].0);
        let s = field.sqrt(field.div(q.eval(field, a2), q.eval(field, a1)).expect("anisotropic"));
        let mut e = scaled(field, s, a1);
        axpy(field, 1, a2, &mut e);
        debug_assert_eq!(q.eval(field, &e), 0);
        return Some(e);
    }
    None
}

/// A basis `e_1..e_s, f_1..f_s` with `q(e_t) = q(f_t) = 0`, polar values
/// `delta_{tu}` between `e_t` and `f_u` and zero otherwise. Fails with
/// [`WittError::ArfObstruction`] when `q` is not equivalent to the standard
/// hyperbolic form over `field`.
pub fn hyperbolic_basis(field: &FieldDesc, q: &QuadForm) -> Result<Vec<(Vec<Fe>, Vec<Fe>)>, WittError> {
    let d = q.dim();
    let beta = q.polar_matrix();
    let units: Vec<Vec<Fe>> = (0..d).map(|i| (0..d).map(|j| Fe::from(i == j)).collect()).collect();
    let (mut pairs, radical) = symplectic_pairs(field, &beta, units);
    if !radical.is_empty() {
        return Err(WittError::Degenerate);
    }
    let mut out = Vec::new();
    while !pairs.is_empty() {
        let e = vanishing_vector(field, q, &pairs).ok_or(WittError::ArfObstruction)?;
        let g = pairs
            .iter()
            .flat_map(|(a, b)| [a, b])
            .find_map(|w| {
                let c = bilinear(field, &beta, &e, w);
                (c != 0).then(|| scaled(field, field.inv(c).expect("nonzero"), w))
            })
            .expect("non-degenerate span");
        let mut f = g.clone();
        axpy(field, q.eval(field, &g), &e, &mut f);
        let span: Vec<Vec<Fe>> = pairs.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
        let projected: Vec<Vec<Fe>> = span
            .into_iter()
            .map(|mut w| {
                let wf = bilinear(field, &beta, &w, &f);
                let we = bilinear(field, &beta, &w, &e);
                axpy(field, wf, &e, &mut w);
                axpy(field, we, &f, &mut w);
                w
            })
            .collect();
        out.push((e, f));
        let (next, rad) = symplectic_pairs(field, &beta, projected);
        debug_assert!(rad.is_empty());
        pairs = next;
    }
    Ok(out)
}

/// A matrix `A` with `hyperbolic(A x) = q(x)`: the inverse of the matrix
/// whose columns are `e_1..e_s, f_1..f_s`.
pub fn to_standard(field: &FieldDesc, q: &QuadForm) -> Result<Vec<Vec<Fe>>, WittError> {
    let basis = hyperbolic_basis(field, q)?;
    let d = q.dim();
    let cols: Vec<&Vec<Fe>> = basis.iter().map(|p| &p.0).chain(basis.iter().map(|p| &p.1)).collect();
    let h: Vec<Vec<Fe>> = (0..d).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    field_inverse(field, &h).ok_or(WittError::Degenerate)
}

/// Arf class of a non-degenerate form of even dimension: `0` when it is
/// equivalent to the standard hyperbolic form, otherwise the smallest
/// element of absolute trace one.
pub fn arf_invariant(field: &FieldDesc, q: &QuadForm) -> Result<Fe, WittError> {
    if q.dim() % 2 == 1 {
        return Err(WittError::Degenerate);
    }
    let beta = q.polar_matrix();
    let units: Vec<Vec<Fe>> = (0..q.dim()).map(|i| (0..q.dim()).map(|j| Fe::from(i == j)).collect()).collect();
    let (pairs, radical) = symplectic_pairs(field, &beta, units);
    if !radical.is_empty() {
        return Err(WittError::Degenerate);
    }
    let mut acc = 0;
    for (a, b) in &pairs {
        acc ^= field.mul(q.eval(field, a), q.eval(field, b));
    }
    Ok(if field.trace(acc) == 0 { 0 } else { field.trace_one_element() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_field;
    use proptest::prelude::*;

    fn transpose(a: &[Vec<Fe>]) -> Vec<Vec<Fe>> {
        (0..a[0].len()).map(|j| a.iter().map(|r| r[j]).collect()).collect()
    }

    fn matmul(f: &FieldDesc, a: &[Vec<Fe>], b: &[Vec<Fe>]) -> Vec<Vec<Fe>> {
        crate::groups::mat_mul(f, a, b)
    }

    fn j_plus_zero(m: usize, r: usize) -> Vec<Vec<Fe>> {
        let h = r / 2;
        (0..m)
            .map(|i| (0..m).map(|j| Fe::from(i < r && j < r && (i + h == j || j + h == i))).collect())
            .collect()
    }

    #[test]
    fn normal_form_examples() {
        let f = make_field(4).unwrap();
        let (p, r) = alternating_normal_form(&f, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!((p, r), (vec![vec![1, 0], vec![0, 1]], 2));
        let (_, r) = alternating_normal_form(&f, &vec![vec![0; 3]; 3]).unwrap();
        assert_eq!(r, 0);
        assert!(alternating_normal_form(&f, &[vec![1, 0], vec![0, 0]]).is_err());
    }

    #[test]
    fn arf_examples() {
        let f2 = make_field(1).unwrap();
        assert_eq!(arf_invariant(&f2, &QuadForm::hyperbolic(2)).unwrap(), 0);
        let aniso = QuadForm { diag: vec![1, 1], cross: vec![vec![0, 1], vec![0, 0]] };
        assert_ne!(arf_invariant(&f2, &aniso).unwrap(), 0);
        assert!(matches!(hyperbolic_basis(&f2, &aniso), Err(WittError::ArfObstruction)));
        // exhaustive: no nonzero zero over GF(2)
        assert!((1..4u64).all(|x| aniso.eval(&f2, &[x & 1, x >> 1]) != 0));
        let ext = f2.quadratic_extension().unwrap();
        let emb = f2.embedding_into(&ext).unwrap();
        let lifted = QuadForm { diag: aniso.diag.iter().map(|&x| emb.apply(x)).collect(), cross: vec![vec![0, 1], vec![0, 0]] };
        assert_eq!(arf_invariant(&ext, &lifted).unwrap(), 0);
    }

    fn alternating(f: &FieldDesc, m: usize, seed: &[u64]) -> Vec<Vec<Fe>> {
        let mut b = vec![vec![0; m]; m];
        let mut k = 0;
        for i in 0..m {
            for j in i + 1..m {
                let v = seed[k % seed.len()].rotate_left(k as u32 * 7) % f.order();
                b[i][j] = v;
                b[j][i] = v;
                k += 1;
            }
        }
        b
    }

    proptest! {
        #[test]
        fn normal_form_holds(seed in prop::collection::vec(any::<u64>(), 1..12), m in 1usize..6) {
            let f = make_field(4).unwrap();
            let beta = alternating(&f, m, &seed);
            let (p, r) = alternating_normal_form(&f, &beta).unwrap();
            prop_assert_eq!(r % 2, 0);
            prop_assert_eq!(r, field_rank(&f, &beta));
            let lhs = matmul(&f, &matmul(&f, &transpose(&p), &beta), &p);
            prop_assert_eq!(lhs, j_plus_zero(m, r));
        }

        #[test]
        fn arf_is_invariant_under_substitution(diag in prop::collection::vec(0u64..16, 4), seed in any::<u64>()) {
            let f = make_field(4).unwrap();
            let mut q = QuadForm::hyperbolic(2);
            q.diag = diag;
            let a0 = arf_invariant(&f, &q).unwrap();
            let a: Vec<Vec<Fe>> = (0..4).map(|i| (0..4).map(|j| if i == j { 1 } else { (seed >> (4 * (4 * i + j))) & 15 }).collect()).collect();
            if field_inverse(&f, &a).is_some() {
                let moved = q.pull_back(&f, &a);
                prop_assert_eq!(arf_invariant(&f, &moved).unwrap(), a0);
            }
            if a0 == 0 {
                let h = to_standard(&f, &q).unwrap();
                prop_assert_eq!(QuadForm::hyperbolic(2).pull_back(&f, &h), q);
            }
        }
    }
}
