//! Rewriting invariants as polynomials in `Q` and `B`, and the Jacobian
//! rank of coordinate maps.

use std::collections::HashMap;

use crate::algebra::{Evaluator, Fe, FieldDesc, Gf2, Gf2Poly, Monomial, Var, VariableId};
use crate::groups::{invariance_check, CheckOptions, GroupId};
use crate::invariants::{b_inv, d_inv, q_inv};

use super::{to_bits, Echelon, InvSpaceError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{var} occurs with odd exponent {exponent}; only even z-exponents can be rewritten")]
pub struct OddZError {
    pub var: String,
    pub exponent: u32,
}

/// Edge multisets `{(i, j)}` with `i < j` whose degree at vertex `i` is
/// `alpha[i - 1]`, edges sorted.
fn b_multigraphs(alpha: &[u32]) -> Vec<Vec<(u32, u32)>> {
    fn go(left: &mut [u32], cur: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
        let Some(i) = left.iter().position(|&d| d > 0) else {
            out.push(cur.clone());
            return;
        };
        let lo = match cur.last() {
            Some(&(a, b)) if a as usize == i + 1 => b as usize - 1,
            _ => i + 1,
        };
        for j in lo.max(i + 1)..left.len() {
            if left[j] == 0 {
                continue;
            }
            left[i] -= 1;
            left[j] -= 1;
            cur.push((i as u32 + 1, j as u32 + 1));
            go(left, cur, out);
            cur.pop();
            left[i] += 1;
            left[j] += 1;
        }
    }
    let mut out = Vec::new();
    go(&mut alpha.to_vec(), &mut Vec::new(), &mut out);
    out
}

fn check_xy_only(p: &Gf2Poly, nu: u32) -> Result<(), InvSpaceError> {
    for v in p.variables() {
        match v.id() {
            VariableId::X { t, .. } | VariableId::Y { t, .. } if t <= nu => {}
            _ => return Err(InvSpaceError::BadInput(format!("{v} is not an x or y coordinate of k^{}", 2 * nu))),
        }
    }
    Ok(())
}

/// Writes `p` as a polynomial in the abstract `B^(ij)` by solving the
/// linear system over the products of matching multidegree. `None` when no
/// such expression exists.
pub fn express_in_b(p: &Gf2Poly, nu: u32) -> Result<Option<Gf2Poly>, InvSpaceError> {
    if nu == 0 {
        return Err(InvSpaceError::BadInput("nu must be positive".into()));
    }
    check_xy_only(p, nu)?;
    let n = 2 * nu as usize;
    let mut cache: HashMap<(u32, u32), Gf2Poly> = HashMap::new();
    let mut out = Gf2Poly::zero(Gf2);
    for (alpha, comp) in p.components() {
        let graphs = b_multigraphs(&alpha);
        let mut expanded = Vec::with_capacity(graphs.len());
        for g in &graphs {
            let mut prod = Gf2Poly::one(Gf2);
            for &(i, j) in g {
                if !cache.contains_key(&(i, j)) {
                    cache.insert((i, j), b_inv(i, j, n).map_err(|e| InvSpaceError::BadInput(e.to_string()))?);
                }
                prod = prod.mul(&cache[&(i, j)]);
            }
            expanded.push(prod);
        }
        let mut index: HashMap<Monomial, usize> = HashMap::new();
        for q in expanded.iter().chain([&comp]) {
            for m in q.monomials() {
                let k = index.len();
                index.entry(m.clone()).or_insert(k);
            }
        }
        let mut e = Echelon::with_history(index.len(), expanded.len());
        for q in &expanded {
            e.insert(&to_bits(q, &index));
        }
        let Some(used) = e.solve(&to_bits(&comp, &index)) else {
            return Ok(None);
        };
        for k in used {
            out.add_term(Monomial::from_vars(graphs[k].iter().map(|&(i, j)| Var::gram_b(i, j))), 1);
        }
    }
    Ok(Some(out))
}

fn z_exponents(m: &Monomial) -> Vec<u32> {
    let mut out = Vec::new();
    for &(v, e) in m.factors() {
        if let VariableId::Z { i } = v.id() {
            let i = i as usize;
            if out.len() < i {
                out.resize(i, 0);
            }
            out[i - 1] = e;
        }
    }
    out
}

/// Replaces abstract `Q^(i)` and `B^(ij)` by their expansions in `k^n`.
pub fn substitute_qb(p: &Gf2Poly, n: usize) -> Result<Gf2Poly, InvSpaceError> {
    let mut map: HashMap<Var, Gf2Poly> = HashMap::new();
    for v in p.variables() {
        let img = match v.id() {
            VariableId::GramQ { i } => q_inv(i, n),
            VariableId::GramB { i, j } => b_inv(i, j, n),
            _ => continue,
        }
        .map_err(|e| InvSpaceError::BadInput(e.to_string()))?;
        map.insert(v, img);
    }
    Ok(p.substitute(&map)?)
}

/// Writes an `O(n)`-invariant `f` (odd `n`) with only even `z`-exponents as
/// a polynomial in the abstract `Q^(i)` and `B^(ij)`, stripping the highest
/// `z`-part at each step. The result is verified by back-substitution.
pub fn express_qb(f: &Gf2Poly, n: usize, check: &CheckOptions) -> Result<Gf2Poly, InvSpaceError> {
    if n % 2 == 0 {
        return Err(InvSpaceError::BadInput(format!("n must be odd, got {n}")));
    }
    let nu = (n / 2) as u32;
    for m in f.monomials() {
        for &(v, e) in m.factors() {
            if matches!(v.id(), VariableId::Z { .. }) && e % 2 == 1 {
                return Err(OddZError { var: v.to_string(), exponent: e }.into());
            }
        }
    }
    let cert = invariance_check(f, GroupId::orthogonal(n), check)?;
    if !cert.passed() {
        let w = cert.witness.map(|w| w.generator).unwrap_or_default();
        return Err(InvSpaceError::NotInvariant(format!("fails under {w}")));
    }
    let mut rest = f.clone();
    let mut result = Gf2Poly::zero(Gf2);
    while let Some(top) = rest
        .monomials()
        .map(z_exponents)
        .max_by(|a, b| (a.iter().sum::<u32>(), a).cmp(&(b.iter().sum::<u32>(), b)))
    {
        let gamma: Vec<u32> = top.iter().map(|e| e / 2).collect();
        let zpart = Monomial::from_pairs(top.iter().enumerate().map(|(k, &e)| (Var::z(k as u32 + 1), e)));
        let coeff = Gf2Poly::from_monomials(
            rest.monomials().filter(|m| z_exponents(m) == top).map(|m| m.div(&zpart).expect("z-part divides")),
        );
        let Some(in_b) = express_in_b(&coeff, nu)? else {
            return Err(InvSpaceError::NotInvariant(format!(
                "the coefficient of {zpart} is not a polynomial in the B's"
            )));
        };
        let qpow = Monomial::from_pairs(gamma.iter().enumerate().map(|(k, &g)| (Var::gram_q(k as u32 + 1), g)));
        let term = in_b.mul_monomial(&qpow);
        rest.add_assign(&substitute_qb(&term, n)?);
        result.add_assign(&term);
    }
    if substitute_qb(&result, n)? != *f {
        return Err(InvSpaceError::BackSubstitution);
    }
    Ok(result)
}

/// Rank over `field` of the matrix of formal partial derivatives of
/// `coords` with respect to all coordinates, evaluated at `point`
/// (columns are the vectors).
pub fn jacobian_rank(coords: &[Gf2Poly], point: &[Vec<Fe>], field: &FieldDesc) -> usize {
    let n = point.first().map_or(0, |v| v.len());
    let vars: Vec<Var> =
        (1..=point.len() as u32).flat_map(|i| (0..n).map(move |pos| Var::at_position(n, pos, i))).collect();
    let value = |v: Var| match (v.vector(), v.position(n)) {
        (Some(i), Some(pos)) if (i as usize) <= point.len() => point[i as usize - 1][pos],
        _ => 0,
    };
    let rows: Vec<Vec<Fe>> = coords
        .iter()
        .map(|c| vars.iter().map(|&v| Evaluator::new(&c.derivative(v)).eval_with(field, value)).collect())
        .collect();
    super::field_rank(field, &rows)
}

/// The coordinates of the quotient map for `m` vectors in `k^n`: `Q^(i)` for
/// `i <= min(m, 2 nu)`, `B^(ij)` for `i < j`, `i <= 2 nu`, and for odd `n`
/// the determinants `D^(1..2nu, l)` with `l > 2 nu`.
pub fn field_coordinates(n: usize, m: usize) -> Result<Vec<(String, Gf2Poly)>, InvSpaceError> {
    let two_nu = 2 * (n / 2);
    let err = |e: crate::invariants::InvariantError| InvSpaceError::BadInput(e.to_string());
    let mut out = Vec::new();
    for i in 1..=m.min(two_nu) as u32 {
        out.push((format!("Q{i}"), q_inv(i, n).map_err(err)?));
    }
    for i in 1..=m.min(two_nu) as u32 {
        for j in i + 1..=m as u32 {
            out.push((format!("B{i}_{j}"), b_inv(i, j, n).map_err(err)?));
        }
    }
    if n % 2 == 1 {
        for l in two_nu as u32 + 1..=m as u32 {
            let idx: Vec<u32> = (1..=two_nu as u32).chain([l]).collect();
            out.push((format!("D{l}"), d_inv(&idx, n).map_err(err)?));
        }
    }
    Ok(out)
}

/// The first `min(m, 2 nu)` standard basis vectors of `k^n`, then zeros.
pub fn standard_point(n: usize, m: usize) -> Vec<Vec<Fe>> {
    let two_nu = 2 * (n / 2);
    (0..m).map(|i| (0..n).map(|pos| Fe::from(i < two_nu && pos == i)).collect()).collect()
}
