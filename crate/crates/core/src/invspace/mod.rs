//! Invariant spaces of fixed multidegree, decomposability, rewriting in
//! `Q` and `B`, and Jacobian ranks.

pub mod linalg;
mod rewrite;

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{make_field, AlgebraError, Fe, FieldDesc, Gf2, Gf2Poly, Monomial, Multidegree, Var};
use crate::groups::{
    generator_family, mat_vec, random_element, random_symplectic, CheckMode, GroupError, GroupId, GroupKind,
};

pub use linalg::{field_inverse, field_kernel, field_rank, field_solve, BitVec, Echelon};
pub use rewrite::{express_in_b, express_qb, field_coordinates, jacobian_rank, standard_point, OddZError};

/// Default bound on the number of monomials in a multidegree component.
pub const DEFAULT_CAP: usize = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvSpaceError {
    #[error("component has {size} monomials, above the cap {cap}")]
    ComponentTooLarge { size: u128, cap: usize },
    #[error("polynomial is zero or not multihomogeneous")]
    NotMultihomogeneous,
    #[error("polynomial is not invariant: {0}")]
    NotInvariant(String),
    #[error(transparent)]
    OddZ(#[from] OddZError),
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("back-substitution does not reproduce the input")]
    BackSubstitution,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceOptions {
    pub mode: CheckMode,
    pub seed: u64,
    pub field_k: u32,
    pub cap: usize,
}

impl Default for SpaceOptions {
    fn default() -> Self {
        SpaceOptions { mode: CheckMode::Auto, seed: 0, field_k: 8, cap: DEFAULT_CAP }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Symbolic,
    Randomized,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantSpace {
    pub group: GroupId,
    pub multidegree: Multidegree,
    pub basis: Vec<Gf2Poly>,
    pub provenance: Provenance,
    pub seed: Option<u64>,
    /// Monomials of zero torus weight in the component.
    pub columns: usize,
}

/// JSON form of an [`InvariantSpace`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceRecord {
    pub group: String,
    pub multidegree: Vec<u32>,
    pub dimension: usize,
    pub basis: Vec<String>,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl InvariantSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn record(&self) -> SpaceRecord {
        SpaceRecord {
            group: self.group.to_string(),
            multidegree: self.multidegree.clone(),
            dimension: self.dimension(),
            basis: self.basis.iter().map(|p| p.to_string()).collect(),
            provenance: self.provenance,
            seed: self.seed,
        }
    }

    /// Whether `p` lies in the span of the basis.
    pub fn contains(&self, p: &Gf2Poly) -> bool {
        let mut index: HashMap<Monomial, usize> = HashMap::new();
        for q in self.basis.iter().chain([p]) {
            for m in q.monomials() {
                let k = index.len();
                index.entry(m.clone()).or_insert(k);
            }
        }
        let mut e = Echelon::new(index.len());
        for q in &self.basis {
            e.insert(&to_bits(q, &index));
        }
        e.contains(&to_bits(p, &index))
    }
}

pub(crate) fn to_bits(p: &Gf2Poly, index: &HashMap<Monomial, usize>) -> BitVec {
    BitVec::from_indices(index.len(), p.monomials().map(|m| index[m]))
}

fn binomial(n: u128, k: u128) -> u128 {
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

/// Number of monomials of multidegree `alpha` in `n`-dimensional vectors.
pub fn component_size(n: usize, alpha: &[u32]) -> u128 {
    alpha
        .iter()
        .map(|&a| binomial(n as u128 + a as u128 - 1, a as u128))
        .fold(1u128, |acc, b| acc.saturating_mul(b))
}

fn vector_monomials(n: usize, i: u32, deg: u32) -> Vec<Monomial> {
    fn go(n: usize, i: u32, pos: usize, left: u32, cur: &mut Vec<(Var, u32)>, out: &mut Vec<Monomial>) {
        if pos + 1 == n {
            cur.push((Var::at_position(n, pos, i), left));
            out.push(Monomial::from_pairs(cur.iter().copied()));
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push((Var::at_position(n, pos, i), e));
            go(n, i, pos + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, i, 0, deg, &mut Vec::new(), &mut out);
    out
}

/// The monomials of multidegree `alpha` with zero torus weight, in print
/// order.
pub fn torus_columns(n: usize, alpha: &[u32], cap: usize) -> Result<Vec<Monomial>, InvSpaceError> {
    let size = component_size(n, alpha);
    if size > cap as u128 {
        return Err(InvSpaceError::ComponentTooLarge { size, cap });
    }
    let mut partial = vec![Monomial::one()];
    for (k, &a) in alpha.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let mons = vector_monomials(n, k as u32 + 1, a);
        partial = partial.iter().flat_map(|p| mons.iter().map(move |m| p.mul(m))).collect();
    }
    let mut cols: Vec<Monomial> = partial.into_iter().filter(|m| m.has_zero_torus_weight()).collect();
    cols.sort_by(|a, b| a.serial_cmp(b));
    Ok(cols)
}

fn use_symbolic(group: GroupId, mode: CheckMode) -> bool {
    match mode {
        CheckMode::Symbolic => true,
        CheckMode::Randomized => false,
        CheckMode::Auto => group.has_symbolic_family(),
    }
}

/// Basis of the invariants of multidegree `alpha` under `group`.
pub fn invariant_space(group: GroupId, alpha: &[u32], opts: &SpaceOptions) -> Result<InvariantSpace, InvSpaceError> {
    let n = group.n;
    let alpha = crate::algebra::trim_multidegree(alpha.to_vec());
    let cols = torus_columns(n, &alpha, opts.cap)?;
    let width = cols.len();
    let symbolic = use_symbolic(group, opts.mode);
    let echelon = if symbolic { symbolic_constraints(group, &cols)? } else { randomized_constraints(group, &cols, opts)? };
    let basis = echelon
        .kernel()
        .iter()
        .map(|v| Gf2Poly::from_monomials(v.ones().map(|c| cols[c].clone())))
        .collect();
    Ok(InvariantSpace {
        group,
        multidegree: alpha,
        basis,
        provenance: if symbolic { Provenance::Symbolic } else { Provenance::Randomized },
        seed: (!symbolic).then_some(opts.seed),
        columns: width,
    })
}

fn symbolic_constraints(group: GroupId, cols: &[Monomial]) -> Result<Echelon, InvSpaceError> {
    let fam = generator_family(group)?;
    let mut echelon = Echelon::new(cols.len());
    for g in fam.all_actions() {
        let mut rows: HashMap<Monomial, Vec<usize>> = HashMap::new();
        for (c, m) in cols.iter().enumerate() {
            let mono = Gf2Poly::monomial(Gf2, m.clone());
            let diff = g.action.apply(&mono)?.add(&mono);
            for key in diff.monomials() {
                rows.entry(key.clone()).or_default().push(c);
            }
        }
        let mut keys: Vec<&Monomial> = rows.keys().collect();
        keys.sort_by(|a, b| a.serial_cmp(b));
        for k in keys {
            if echelon.is_full() {
                return Ok(echelon);
            }
            echelon.insert(&BitVec::from_indices(cols.len(), rows[k].iter().copied()));
        }
    }
    Ok(echelon)
}

fn monomial_value(field: &FieldDesc, m: &Monomial, n: usize, point: &[Vec<Fe>]) -> Fe {
    let mut acc = 1;
    for &(v, e) in m.factors() {
        let (Some(i), Some(pos)) = (v.vector(), v.position(n)) else {
            return 0;
        };
        acc = field.mul(acc, field.pow(point[i as usize - 1][pos], e as u64));
        if acc == 0 {
            return 0;
        }
    }
    acc
}

const STALL_LIMIT: usize = 64;
const POINTS_PER_ELEMENT: usize = 4;

fn randomized_constraints(group: GroupId, cols: &[Monomial], opts: &SpaceOptions) -> Result<Echelon, InvSpaceError> {
    let field = make_field(opts.field_k)?;
    let n = group.n;
    let m = cols.iter().map(|c| c.multidegree().len()).max().unwrap_or(0);
    let k = field.degree() as usize;
    let mut echelon = Echelon::new(cols.len());
    let mut stall = 0;
    let mut e = 0u64;
    let mut point_rng = ChaCha8Rng::seed_from_u64(opts.seed);
    while stall < STALL_LIMIT && !echelon.is_full() {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        rng.set_stream(e + 1);
        e += 1;
        let r = rng.gen_range(1..=6);
        let g = match group.kind {
            GroupKind::Sp => random_symplectic(n, &field, r, &mut rng),
            _ => random_element(group, &field, r, &mut rng)?,
        };
        let a = g.matrix().expect("constant matrix");
        for _ in 0..POINTS_PER_ELEMENT {
            let point: Vec<Vec<Fe>> =
                (0..m).map(|_| (0..n).map(|_| point_rng.gen_range(0..field.order())).collect()).collect();
            let moved: Vec<Vec<Fe>> = point.iter().map(|v| mat_vec(&field, &a, v)).collect();
            let values: Vec<Fe> = cols
                .iter()
                .map(|c| monomial_value(&field, c, n, &moved) ^ monomial_value(&field, c, n, &point))
                .collect();
            let mut grew = false;
            for bit in 0..k {
                let row = BitVec::from_indices(cols.len(), (0..cols.len()).filter(|&c| values[c] >> bit & 1 == 1));
                grew |= echelon.insert(&row);
            }
            stall = if grew { 0 } else { stall + 1 };
        }
    }
    Ok(echelon)
}

/// All multidegrees `beta` with `0 < beta < alpha` componentwise and
/// `beta <= alpha - beta` lexicographically.
fn splittings(alpha: &[u32]) -> Vec<(Multidegree, Multidegree)> {
    let mut out = Vec::new();
    let mut beta = vec![0u32; alpha.len()];
    loop {
        let mut k = 0;
        while k < alpha.len() && beta[k] == alpha[k] {
            beta[k] = 0;
            k += 1;
        }
        if k == alpha.len() {
            break;
        }
        beta[k] += 1;
        let rest: Multidegree = alpha.iter().zip(beta.iter()).map(|(a, b)| a - b).collect();
        if rest.iter().all(|&r| r == 0) {
            continue;
        }
        if beta <= rest {
            out.push((beta.clone(), rest));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub enum DecompositionCertificate {
    /// The target equals the sum of these products.
    Combination(Vec<(Gf2Poly, Gf2Poly)>),
    /// After reduction by an echelon basis of all products, `residue` is
    /// nonzero; reading off the coefficient of `monomial` in the reduction
    /// is a functional vanishing on the products but not on the target.
    Separator { residue: Gf2Poly, monomial: Monomial },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub decomposable: bool,
    pub certificate: DecompositionCertificate,
    /// Number of products spanning the decomposable part.
    pub products: usize,
}

impl Decomposition {
    /// For a combination, whether the products re-expand to `target`.
    pub fn verify(&self, target: &Gf2Poly) -> bool {
        match &self.certificate {
            DecompositionCertificate::Combination(terms) => {
                let mut acc = Gf2Poly::zero(Gf2);
                for (a, b) in terms {
                    acc.add_assign(&a.mul(b));
                }
                acc == *target
            }
            DecompositionCertificate::Separator { residue, monomial } => {
                !self.decomposable && residue.coeff(monomial) == 1
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRecord {
    pub group: String,
    pub target: String,
    pub decomposable: bool,
    pub products_considered: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub combination: Option<Vec<[String; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separating_monomial: Option<String>,
}

impl Decomposition {
    pub fn record(&self, group: GroupId, target: &Gf2Poly) -> DecompositionRecord {
        let mut rec = DecompositionRecord {
            group: group.to_string(),
            target: target.to_string(),
            decomposable: self.decomposable,
            products_considered: self.products,
            combination: None,
            residue: None,
            separating_monomial: None,
        };
        match &self.certificate {
            DecompositionCertificate::Combination(terms) => {
                rec.combination = Some(terms.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect());
            }
            DecompositionCertificate::Separator { residue, monomial } => {
                rec.residue = Some(residue.to_string());
                rec.separating_monomial = Some(monomial.to_string());
            }
        }
        rec
    }
}

/// Whether `target` is a sum of products of invariants of lower nonzero
/// multidegree.
pub fn is_decomposable(target: &Gf2Poly, group: GroupId, opts: &SpaceOptions) -> Result<Decomposition, InvSpaceError> {
    let alpha = target.multidegree().ok_or(InvSpaceError::NotMultihomogeneous)?;
    let mut spaces: HashMap<Multidegree, InvariantSpace> = HashMap::new();
    let mut products: Vec<(Gf2Poly, Gf2Poly, Gf2Poly)> = Vec::new();
    for (beta, rest) in splittings(&alpha) {
        for d in [&beta, &rest] {
            if !spaces.contains_key(d) {
                spaces.insert(d.clone(), invariant_space(group, d, opts)?);
            }
        }
        let (left, right) = (&spaces[&beta].basis, &spaces[&rest].basis);
        for (a, p) in left.iter().enumerate() {
            for (b, q) in right.iter().enumerate() {
                if beta == rest && b < a {
                    continue;
                }
                products.push((p.clone(), q.clone(), p.mul(q)));
            }
        }
    }
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    for poly in products.iter().map(|t| &t.2).chain([target]) {
        for m in poly.monomials() {
            let k = index.len();
            index.entry(m.clone()).or_insert(k);
        }
    }
    let mut echelon = Echelon::with_history(index.len(), products.len());
    for (_, _, prod) in &products {
        echelon.insert(&to_bits(prod, &index));
    }
    let target_bits = to_bits(target, &index);
    if let Some(used) = echelon.solve(&target_bits) {
        let terms = used.into_iter().map(|k| (products[k].0.clone(), products[k].1.clone())).collect();
        return Ok(Decomposition {
            decomposable: true,
            certificate: DecompositionCertificate::Combination(terms),
            products: products.len(),
        });
    }
    let (residue_bits, _) = echelon.reduce(&target_bits);
    let mut by_index: Vec<Option<&Monomial>> = vec![None; index.len()];
    for (m, &k) in &index {
        by_index[k] = Some(m);
    }
    let residue = Gf2Poly::from_monomials(residue_bits.ones().map(|k| by_index[k].expect("indexed").clone()));
    let monomial = by_index[residue_bits.first_one().expect("nonzero residue")].expect("indexed").clone();
    Ok(Decomposition {
        decomposable: false,
        certificate: DecompositionCertificate::Separator { residue, monomial },
        products: products.len(),
    })
}
