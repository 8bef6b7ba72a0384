use rustc_hash::FxHashMap;

use crate::algebra::{Fe, FieldDesc, Gf2, Gf2Poly, Monomial, Poly, Ring, Var};

use super::forms::{beta_poly, polar_partner, q_poly, q_value};
use super::GroupError;

/// A linear substitution `v -> A v` applied to every vector of a tuple.
///
/// Entries are polynomials so that generator families can carry formal
/// parameters. `inverse_pairs` lists parameter pairs `(c, d)` with `c d = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupAction<R: Ring> {
    n: usize,
    entries: Vec<Vec<Poly<R>>>,
    parity: Option<u8>,
    inverse_pairs: Vec<(Var, Var)>,
}

impl<R: Ring> GroupAction<R> {
    pub fn identity(ring: R, n: usize) -> Self {
        let entries = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { Poly::one(ring.clone()) } else { Poly::zero(ring.clone()) })
                    .collect()
            })
            .collect();
        GroupAction { n, entries, parity: Some(0), inverse_pairs: Vec::new() }
    }

    pub fn from_entries(n: usize, entries: Vec<Vec<Poly<R>>>, parity: Option<u8>) -> Result<Self, GroupError> {
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(GroupError::DimensionMismatch { expected: n, found: entries.len() });
        }
        Ok(GroupAction { n, entries, parity, inverse_pairs: Vec::new() })
    }

    /// Identity matrix with some coordinates replaced:
    /// `rows[(pos, image)]` sets row `pos` to the given combination.
    pub fn substitution(ring: R, n: usize, rows: &[(usize, Vec<(usize, Poly<R>)>)]) -> Self {
        let mut a = Self::identity(ring.clone(), n);
        a.parity = None;
        for (pos, image) in rows {
            let mut row = vec![Poly::zero(ring.clone()); n];
            for (c, coeff) in image {
                row[*c].add_assign(coeff);
            }
            a.entries[*pos] = row;
        }
        a
    }

    pub fn with_inverse_pair(mut self, c: Var, d: Var) -> Self {
        self.inverse_pairs.push((c, d));
        self
    }

    pub fn with_parity(mut self, parity: Option<u8>) -> Self {
        self.parity = parity;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, r: usize, c: usize) -> &Poly<R> {
        &self.entries[r][c]
    }

    pub fn entries(&self) -> &[Vec<Poly<R>>] {
        &self.entries
    }

    pub fn parity(&self) -> Option<u8> {
        self.parity
    }

    pub fn ring(&self) -> &R {
        self.entries[0][0].ring()
    }

    /// The action whose substitution is `other` followed by `self`:
    /// `apply(a.compose(b), p) == apply(a, apply(b, p))`.
    pub fn compose(&self, other: &Self) -> Result<Self, GroupError> {
        if self.n != other.n {
            return Err(GroupError::DimensionMismatch { expected: self.n, found: other.n });
        }
        let ring = self.ring().clone();
        let n = self.n;
        // p(A v) then p(B A v): the substitution matrix is B * A
        let mut entries = vec![vec![Poly::zero(ring.clone()); n]; n];
        for (r, row) in entries.iter_mut().enumerate() {
            for (c, e) in row.iter_mut().enumerate() {
                for k in 0..n {
                    let a = &other.entries[r][k];
                    let b = &self.entries[k][c];
                    if !a.is_zero() && !b.is_zero() {
                        e.add_assign(&a.mul(b));
                    }
                }
            }
        }
        let parity = match (self.parity, other.parity) {
            (Some(a), Some(b)) => Some((a + b) % 2),
            _ => None,
        };
        let mut inverse_pairs = self.inverse_pairs.clone();
        inverse_pairs.extend(other.inverse_pairs.iter().copied());
        Ok(GroupAction { n, entries, parity, inverse_pairs })
    }

    /// Image of each coordinate variable of vector `i`.
    fn images(&self, i: u32) -> Vec<(Var, Poly<R>)> {
        let ring = self.ring().clone();
        (0..self.n)
            .map(|r| {
                let mut img = Poly::zero(ring.clone());
                for c in 0..self.n {
                    let e = &self.entries[r][c];
                    if !e.is_zero() {
                        img.add_assign(&e.mul(&Poly::var(ring.clone(), Var::at_position(self.n, c, i))));
                    }
                }
                (Var::at_position(self.n, r, i), img)
            })
            .collect()
    }

    /// Simultaneous substitution `v^(i) -> A v^(i)` for every vector.
    pub fn apply(&self, p: &Poly<R>) -> Result<Poly<R>, GroupError> {
        if p.ring() != self.ring() {
            return Err(GroupError::Algebra(crate::algebra::AlgebraError::RingMismatch(
                format!("{:?}", p.ring().tag()),
                format!("{:?}", self.ring().tag()),
            )));
        }
        let mut vectors = Vec::new();
        for v in p.variables() {
            if v.is_coordinate() {
                if v.position(self.n).is_none() {
                    return Err(GroupError::VariableOutsideDimension { var: v.to_string(), n: self.n });
                }
                vectors.push(v.vector().expect("coordinate"));
            }
        }
        vectors.dedup();
        let mut map: FxHashMap<Var, Poly<R>> = FxHashMap::default();
        for i in vectors {
            for (v, img) in self.images(i) {
                if img != Poly::var(self.ring().clone(), v) {
                    map.insert(v, img);
                }
            }
        }
        Ok(self.reduce_pairs(&p.substitute_with(|v| map.get(&v))))
    }

    /// Cancels `c d` factors for the declared inverse pairs.
    pub fn reduce_pairs(&self, p: &Poly<R>) -> Poly<R> {
        if self.inverse_pairs.is_empty() {
            return p.clone();
        }
        let mut out = Poly::zero(p.ring().clone());
        for (m, c) in p.terms() {
            let mut pairs: Vec<(Var, u32)> = m.factors().to_vec();
            for &(a, b) in &self.inverse_pairs {
                let ea = m.exponent(a);
                let eb = m.exponent(b);
                let k = ea.min(eb);
                if k > 0 {
                    for f in pairs.iter_mut() {
                        if f.0 == a || f.0 == b {
                            f.1 -= k;
                        }
                    }
                }
            }
            out.add_term(Monomial::from_pairs(pairs), c.clone());
        }
        out
    }
}

impl GroupAction<Gf2> {
    /// Whether `q(A v) = q(v)` identically.
    pub fn is_orthogonal(&self) -> bool {
        let q = q_poly(self.n, 1);
        matches!(self.apply(&q), Ok(img) if img == q)
    }

    /// Whether `beta(A v, A w) = beta(v, w)` identically.
    pub fn preserves_polar(&self) -> bool {
        let b = beta_poly(self.n, 1, 2);
        matches!(self.apply(&b), Ok(img) if img == b)
    }
}

impl GroupAction<FieldDesc> {
    pub fn is_orthogonal(&self) -> bool {
        let field = *self.ring();
        let q = q_poly(self.n, 1).lift_field(field);
        matches!(self.apply(&q), Ok(img) if img == q)
    }

    /// Constant entries, if the action has no parameters.
    pub fn matrix(&self) -> Option<Vec<Vec<Fe>>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e.len() {
                        0 => Some(0),
                        1 => {
                            let (m, c) = e.terms().next().expect("one term");
                            m.is_one().then_some(*c)
                        }
                        _ => None,
                    })
                    .collect()
            })
            .collect()
    }

    pub fn from_matrix(field: FieldDesc, a: &[Vec<Fe>], parity: Option<u8>) -> Self {
        let n = a.len();
        let entries = a
            .iter()
            .map(|row| row.iter().map(|&x| Poly::constant(field, x)).collect())
            .collect();
        GroupAction { n, entries, parity, inverse_pairs: Vec::new() }
    }
}

/// The reflection `T_u v = v + beta(v, u) / q(u) * u`.
pub fn reflection(field: &FieldDesc, u: &[Fe]) -> Result<GroupAction<FieldDesc>, GroupError> {
    let n = u.len();
    let qu = q_value(field, u);
    let inv = field.inv(qu).ok_or(GroupError::SingularVector)?;
    let mut a = vec![vec![0 as Fe; n]; n];
    for (r, row) in a.iter_mut().enumerate() {
        row[r] = 1;
        let scale = field.mul(u[r], inv);
        for (c, e) in row.iter_mut().enumerate() {
            // beta(e_c, u) picks the partner coordinate of u
            if let Some(pc) = polar_partner(n, c) {
                *e ^= field.mul(scale, u[pc]);
            }
        }
    }
    Ok(GroupAction::from_matrix(*field, &a, Some(1)))
}

/// Matrix product `a * b` of constant matrices.
pub fn mat_mul(field: &FieldDesc, a: &[Vec<Fe>], b: &[Vec<Fe>]) -> Vec<Vec<Fe>> {
    let n = a.len();
    let m = b[0].len();
    let mut out = vec![vec![0; m]; n];
    for r in 0..n {
        for k in 0..b.len() {
            let x = a[r][k];
            if x == 0 {
                continue;
            }
            for c in 0..m {
                out[r][c] ^= field.mul(x, b[k][c]);
            }
        }
    }
    out
}

/// `diag` action scaling `x_t` by `c` and `y_t` by `d = 1/c`.
pub fn torus_action(n: usize, t: usize, c: Var, d: Var) -> GroupAction<Gf2> {
    let nu = n / 2;
    assert!(t >= 1 && t <= nu);
    let rows = vec![
        (t - 1, vec![(t - 1, Gf2Poly::var(Gf2, c))]),
        (nu + t - 1, vec![(nu + t - 1, Gf2Poly::var(Gf2, d))]),
    ];
    GroupAction::substitution(Gf2, n, &rows).with_inverse_pair(c, d)
}

/// Swap of `x_1` and `y_1`, itself the reflection in `e_{x_1} + e_{y_1}`.
pub fn swap_x1_y1(n: usize) -> GroupAction<Gf2> {
    let nu = n / 2;
    assert!(nu >= 1);
    let one = Gf2Poly::one(Gf2);
    let rows = vec![(0, vec![(nu, one.clone())]), (nu, vec![(0, one)])];
    GroupAction::substitution(Gf2, n, &rows).with_parity(Some(1))
}

/// Applies a constant matrix to a vector.
pub fn mat_vec(field: &FieldDesc, a: &[Vec<Fe>], v: &[Fe]) -> Vec<Fe> {
    a.iter()
        .map(|row| row.iter().zip(v.iter()).fold(0, |acc, (&x, &y)| acc ^ field.mul(x, y)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_gf2_poly;

    #[test]
    fn reflection_in_one_one_is_the_swap() {
        let f = FieldDesc::table(1);
        let t = reflection(&f, &[1, 1]).unwrap();
        assert_eq!(t.matrix().unwrap(), vec![vec![0, 1], vec![1, 0]]);
        assert!(matches!(reflection(&f, &[1, 0]), Err(GroupError::SingularVector)));
    }

    #[test]
    fn torus_is_orthogonal_with_inverse_pair() {
        let t = torus_action(2, 1, Var::param(0), Var::param(1));
        assert!(t.is_orthogonal());
        let bad = GroupAction::substitution(
            Gf2,
            2,
            &[(0, vec![(0, Gf2Poly::zero(Gf2))]), (1, vec![(1, Gf2Poly::zero(Gf2))])],
        );
        assert!(!bad.is_orthogonal());
    }

    #[test]
    fn swap_moves_the_one_dimensional_delta() {
        let s = swap_x1_y1(2);
        let q = parse_gf2_poly("x1_1*y1_1").unwrap();
        assert_eq!(s.apply(&q).unwrap(), q);
        let delta = parse_gf2_poly("y1_1*x1_2").unwrap();
        assert_eq!(s.apply(&delta).unwrap(), parse_gf2_poly("x1_1*y1_2").unwrap());
    }

    #[test]
    fn dimension_mismatch() {
        let s = swap_x1_y1(2);
        let p = parse_gf2_poly("x2_1").unwrap();
        assert!(matches!(s.apply(&p), Err(GroupError::VariableOutsideDimension { .. })));
    }

    #[test]
    fn compose_matches_sequential_application() {
        let f = FieldDesc::table(4);
        let a = reflection(&f, &[1, 2, 3, 4]).unwrap();
        let b = reflection(&f, &[5, 1, 7, 2]).unwrap();
        let p = parse_gf2_poly("x1_1*x2_2 + y1_1^2*y2_2").unwrap().lift_field(f);
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.apply(&p).unwrap(), a.apply(&b.apply(&p).unwrap()).unwrap());
        assert_eq!(ab.parity(), Some(0));
    }
}
