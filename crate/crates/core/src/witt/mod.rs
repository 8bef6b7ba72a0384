//! Realizing prescribed Gram data by vectors, orbit fingerprints, generic
//! orbit comparison and the null-cone.

pub mod quadratic;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraError, Evaluator, Fe, FieldDesc, FieldEmbedding, Gf2Poly};
use crate::groups::{beta_value, mat_vec, q_value, random_element, GroupError, GroupId, GroupKind, Status};
use crate::invariants::{delta_inv, InvariantId};
use crate::invspace::{field_kernel, field_rank};

pub use quadratic::{
    alternating_normal_form, arf_invariant, bilinear, hyperbolic_basis, symplectic_pairs, to_standard, QuadForm,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WittError {
    #[error("matrix is not alternating: {0}")]
    NotAlternating(String),
    #[error("{m} vectors cannot be realized in dimension {n}")]
    TooManyVectors { m: usize, n: usize },
    #[error("rank {rank} exceeds {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("quadratic form is degenerate")]
    Degenerate,
    #[error("quadratic form is not equivalent to the standard one over this field")]
    ArfObstruction,
    #[error("GF(2^{0}) has no quadratic extension in the field table")]
    NoExtension(u32),
    #[error("prescribed data cannot be met: {0}")]
    Unrealizable(String),
    #[error("unsupported group {0}")]
    UnsupportedGroup(String),
    #[error("invariant error: {0}")]
    Invariant(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// JSON form of a field: just its degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub k: u32,
}

impl FieldSpec {
    pub fn of(field: &FieldDesc) -> FieldSpec {
        FieldSpec { k: field.degree() }
    }

    /// Public degrees and their quadratic extensions are accepted.
    pub fn field(&self) -> Result<FieldDesc, WittError> {
        if self.k == 0 || self.k > crate::algebra::field::MAX_TABLE_DEGREE {
            return Err(AlgebraError::UnsupportedDegree(self.k).into());
        }
        Ok(FieldDesc::table(self.k))
    }
}

fn check_elements(field: &FieldDesc, values: impl IntoIterator<Item = Fe>) -> Result<(), WittError> {
    for v in values {
        if !field.contains(v) {
            return Err(WittError::ShapeMismatch(format!("{v} is not an element of GF(2^{})", field.degree())));
        }
    }
    Ok(())
}

/// Prescribed values of `beta(v_i, v_j)`, `q(v_i)` and optionally the
/// determinants `D^(1..2nu, l)` and `Delta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GramDataJson", into = "GramDataJson")]
pub struct GramData {
    pub m: usize,
    pub beta: Vec<Vec<Fe>>,
    pub q: Vec<Fe>,
    pub d: Option<Vec<Fe>>,
    pub delta: Option<Fe>,
    pub field: FieldDesc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct GramDataJson {
    m: usize,
    beta: Vec<Vec<Fe>>,
    q: Vec<Fe>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    d: Option<Vec<Fe>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    delta: Option<Fe>,
    field: FieldSpec,
}

impl TryFrom<GramDataJson> for GramData {
    type Error = WittError;
    fn try_from(j: GramDataJson) -> Result<Self, WittError> {
        GramData::new(j.field.field()?, j.beta, j.q, j.d, j.delta)
    }
}

impl From<GramData> for GramDataJson {
    fn from(g: GramData) -> Self {
        GramDataJson { m: g.m, beta: g.beta, q: g.q, d: g.d, delta: g.delta, field: FieldSpec::of(&g.field) }
    }
}

impl GramData {
    pub fn new(
        field: FieldDesc,
        beta: Vec<Vec<Fe>>,
        q: Vec<Fe>,
        d: Option<Vec<Fe>>,
        delta: Option<Fe>,
    ) -> Result<GramData, WittError> {
        let m = q.len();
        if beta.len() != m {
            return Err(WittError::ShapeMismatch(format!("beta has {} rows but q has {m} values", beta.len())));
        }
        quadratic::check_alternating(&beta)?;
        check_elements(&field, beta.iter().flatten().copied().chain(q.iter().copied()))?;
        check_elements(&field, d.iter().flatten().copied().chain(delta))?;
        Ok(GramData { m, beta, q, d, delta, field })
    }

    pub fn rank(&self) -> usize {
        field_rank(&self.field, &self.beta)
    }

    /// The same data over a larger field.
    pub fn embed(&self, emb: &FieldEmbedding) -> GramData {
        let f = |x: &Fe| emb.apply(*x);
        GramData {
            m: self.m,
            beta: self.beta.iter().map(|r| r.iter().map(f).collect()).collect(),
            q: self.q.iter().map(f).collect(),
            d: self.d.as_ref().map(|d| d.iter().map(f).collect()),
            delta: self.delta.as_ref().map(f),
            field: emb.to,
        }
    }

    /// Equal `beta` and `q`, and equal `d`, `delta` wherever `self`
    /// prescribes them.
    pub fn agrees_with(&self, other: &GramData) -> bool {
        self.field == other.field
            && self.m == other.m
            && self.beta == other.beta
            && self.q == other.q
            && (self.d.is_none() || self.d == other.d)
            && (self.delta.is_none() || self.delta == other.delta)
    }
}

/// `m` vectors of `GF(2^k)^n`, stored as columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "VectorTupleJson", into = "VectorTupleJson")]
pub struct VectorTuple {
    pub n: usize,
    pub field: FieldDesc,
    pub columns: Vec<Vec<Fe>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct VectorTupleJson {
    n: usize,
    m: usize,
    field: FieldSpec,
    columns: Vec<Vec<Fe>>,
}

impl TryFrom<VectorTupleJson> for VectorTuple {
    type Error = WittError;
    fn try_from(j: VectorTupleJson) -> Result<Self, WittError> {
        if j.columns.len() != j.m {
            return Err(WittError::ShapeMismatch(format!("m = {} but {} columns", j.m, j.columns.len())));
        }
        VectorTuple::new(j.n, j.field.field()?, j.columns)
    }
}

impl From<VectorTuple> for VectorTupleJson {
    fn from(v: VectorTuple) -> Self {
        VectorTupleJson { n: v.n, m: v.columns.len(), field: FieldSpec::of(&v.field), columns: v.columns }
    }
}

impl VectorTuple {
    pub fn new(n: usize, field: FieldDesc, columns: Vec<Vec<Fe>>) -> Result<VectorTuple, WittError> {
        if let Some(c) = columns.iter().find(|c| c.len() != n) {
            return Err(WittError::ShapeMismatch(format!("column of length {} in dimension {n}", c.len())));
        }
        check_elements(&field, columns.iter().flatten().copied())?;
        Ok(VectorTuple { n, field, columns })
    }

    pub fn m(&self) -> usize {
        self.columns.len()
    }

    /// `A v^(i)` for every column.
    pub fn transform(&self, a: &[Vec<Fe>]) -> VectorTuple {
        VectorTuple {
            n: self.n,
            field: self.field,
            columns: self.columns.iter().map(|v| mat_vec(&self.field, a, v)).collect(),
        }
    }

    /// Value of a polynomial whose vector `i` is column `i`.
    pub fn eval(&self, p: &Gf2Poly) -> Fe {
        Evaluator::new(p).eval_with(&self.field, |v| match (v.vector(), v.position(self.n)) {
            (Some(i), Some(pos)) if (i as usize) <= self.m() => self.columns[i as usize - 1][pos],
            _ => 0,
        })
    }
}

/// Result of [`realize_gram`]; `extended` is set when the tuple lives over
/// the quadratic extension of the input field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Realization {
    pub tuple: VectorTuple,
    pub extended: bool,
}

fn nu(n: usize) -> usize {
    n / 2
}

/// Determinant over GF(2^k); signs do not matter in characteristic 2.
pub fn field_det(field: &FieldDesc, cols: &[Vec<Fe>]) -> Fe {
    let n = cols.len();
    let mut m: Vec<Vec<Fe>> = (0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    let mut det = 1;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| m[r][c] != 0) else {
            return 0;
        };
        m.swap(c, p);
        det = field.mul(det, m[c][c]);
        let inv = field.inv(m[c][c]).expect("nonzero pivot");
        for r in c + 1..n {
            if m[r][c] != 0 {
                let f = field.mul(m[r][c], inv);
                for k in c..n {
                    let sub = field.mul(f, m[c][k]);
                    m[r][k] ^= sub;
                }
            }
        }
    }
    det
}

fn delta_evaluator(nu: u32) -> Result<Arc<Evaluator>, WittError> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Evaluator>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(e) = cache.lock().expect("cache lock").get(&nu) {
        return Ok(e.clone());
    }
    let p = delta_inv(nu).map_err(|e| WittError::Invariant(e.to_string()))?;
    let e = Arc::new(Evaluator::new(&p));
    cache.lock().expect("cache lock").insert(nu, e.clone());
    Ok(e)
}

/// `Delta` of the first `n` vectors (even `n`, `m >= n`).
pub fn delta_value(v: &VectorTuple) -> Result<Option<Fe>, WittError> {
    let n = v.n;
    if n % 2 == 1 || v.m() < n {
        return Ok(None);
    }
    let ev = delta_evaluator(nu(n) as u32)?;
    Ok(Some(ev.eval_with(&v.field, |var| match (var.vector(), var.position(n)) {
        (Some(i), Some(pos)) => v.columns[i as usize - 1][pos],
        _ => 0,
    })))
}

/// The determinants `D^(1..2nu, l)` for `l > 2nu` (odd `n`).
pub fn d_values(v: &VectorTuple) -> Option<Vec<Fe>> {
    let two_nu = 2 * nu(v.n);
    if v.n % 2 == 0 || v.m() <= two_nu {
        return None;
    }
    Some(
        (two_nu..v.m())
            .map(|l| {
                let cols: Vec<Vec<Fe>> = v.columns[..two_nu].iter().chain([&v.columns[l]]).cloned().collect();
                field_det(&v.field, &cols)
            })
            .collect(),
    )
}

/// All values `beta(v_i, v_j)`, `q(v_i)`, and `D`, `Delta` where defined.
pub fn gram_data(v: &VectorTuple) -> Result<GramData, WittError> {
    let f = &v.field;
    let beta = v.columns.iter().map(|a| v.columns.iter().map(|b| beta_value(f, a, b)).collect()).collect();
    let q = v.columns.iter().map(|a| q_value(f, a)).collect();
    Ok(GramData { m: v.m(), beta, q, d: d_values(v), delta: delta_value(v)?, field: *f })
}

fn realize_over(g: &GramData, n: usize) -> Result<VectorTuple, WittError> {
    let f = g.field;
    let m = g.m;
    let nu = nu(n);
    let (p, r) = alternating_normal_form(&f, &g.beta)?;
    if r > 2 * nu {
        return Err(WittError::RankTooLarge { rank: r, max: 2 * nu });
    }
    let columns: Vec<Vec<Fe>> = if n % 2 == 0 && r == n {
        // the u's form a basis: move q* to the standard form
        let qstar = QuadForm { diag: g.q.clone(), cross: g.beta.clone() };
        let a = to_standard(&f, &qstar)?;
        (0..m).map(|i| a.iter().map(|row| row[i]).collect()).collect()
    } else {
        let pinv = crate::invspace::field_inverse(&f, &p).expect("invertible");
        let h = r / 2;
        let us: Vec<Vec<Fe>> = (0..m)
            .map(|i| {
                let mut u = vec![0; n];
                for c in 0..h {
                    u[c] = pinv[c][i];
                    u[nu + c] = pinv[h + c][i];
                }
                u
            })
            .collect();
        // a non-singular vector orthogonal to every u: z, or x_nu + y_nu
        let mut w = vec![0; n];
        if n % 2 == 1 {
            w[2 * nu] = 1;
        } else {
            w[nu - 1] = 1;
            w[2 * nu - 1] = 1;
        }
        let qw = q_value(&f, &w);
        us.into_iter()
            .zip(g.q.iter())
            .map(|(mut u, &qi)| {
                let t = f.sqrt(f.div(qi ^ q_value(&f, &u), qw).expect("q(w) nonzero"));
                for (x, &wx) in u.iter_mut().zip(w.iter()) {
                    *x ^= f.mul(t, wx);
                }
                u
            })
            .collect()
    };
    let mut tuple = VectorTuple { n, field: f, columns };
    if let Some(want) = g.delta {
        if delta_value(&tuple)? != Some(want) {
            // a reflection swaps the two values of Delta
            let mut u = vec![0; n];
            u[0] = 1;
            u[nu] = 1;
            let refl = crate::groups::reflection(&f, &u)?.matrix().expect("constant");
            tuple = tuple.transform(&refl);
            if delta_value(&tuple)? != Some(want) {
                return Err(WittError::Unrealizable("Delta is not a root of its quadratic relation".into()));
            }
        }
    }
    if let Some(want) = &g.d {
        if d_values(&tuple).as_ref() != Some(want) {
            return Err(WittError::Unrealizable("the determinant values are not consistent with beta and q".into()));
        }
    }
    Ok(tuple)
}

/// Vectors `v_1..v_m` in `k^n` with the prescribed `beta` and `q` (and `D`,
/// `Delta` if given). Moves once to the quadratic extension when the
/// required form is not split over the given field.
pub fn realize_gram(g: &GramData, n: usize) -> Result<Realization, WittError> {
    if g.m > n {
        return Err(WittError::TooManyVectors { m: g.m, n });
    }
    if n == 0 {
        return Err(WittError::ShapeMismatch("dimension must be positive".into()));
    }
    match realize_over(g, n) {
        Ok(tuple) => Ok(Realization { tuple, extended: false }),
        Err(WittError::ArfObstruction) => {
            let ext = g.field.quadratic_extension().ok_or(WittError::NoExtension(g.field.degree()))?;
            let emb = g.field.embedding_into(&ext).ok_or(WittError::NoExtension(g.field.degree()))?;
            let tuple = realize_over(&g.embed(&emb), n)?;
            Ok(Realization { tuple, extended: true })
        }
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexedValue {
    pub index: Vec<u32>,
    pub value: Fe,
}

/// The coordinates separating generic orbits: `Q^(i)` for
/// `i <= min(m, 2nu)`, `B^(ij)` for `i < j`, `i <= 2nu`, `D^(1..2nu, l)` for
/// odd `n`, and `Delta` for SO with even `n`, `m >= n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub group: String,
    pub field: FieldSpec,
    pub q: Vec<IndexedValue>,
    pub b: Vec<IndexedValue>,
    pub d: Vec<IndexedValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<Fe>,
}

fn orthogonal_kind(kind: GroupKind, n: usize) -> Result<GroupId, WittError> {
    match kind {
        GroupKind::O | GroupKind::SO => Ok(GroupId { kind, n }),
        GroupKind::Sp => Err(WittError::UnsupportedGroup(format!("Sp({n})"))),
    }
}

pub fn fingerprint(v: &VectorTuple, kind: GroupKind) -> Result<Fingerprint, WittError> {
    let group = orthogonal_kind(kind, v.n)?;
    let f = &v.field;
    let two_nu = 2 * nu(v.n);
    let m = v.m();
    let lim = m.min(two_nu);
    let q = (0..lim).map(|i| IndexedValue { index: vec![i as u32 + 1], value: q_value(f, &v.columns[i]) }).collect();
    let mut b = Vec::new();
    for i in 0..lim {
        for j in i + 1..m {
            b.push(IndexedValue {
                index: vec![i as u32 + 1, j as u32 + 1],
                value: beta_value(f, &v.columns[i], &v.columns[j]),
            });
        }
    }
    let d = d_values(v)
        .unwrap_or_default()
        .into_iter()
        .enumerate()
        .map(|(k, value)| IndexedValue { index: vec![(two_nu + k + 1) as u32], value })
        .collect();
    let delta = if kind == GroupKind::SO { delta_value(v)? } else { None };
    Ok(Fingerprint { group: group.to_string(), field: FieldSpec::of(f), q, b, d, delta })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Same,
    Different,
    NotGeneric,
}

/// Whether the perp of the span of the columns contains a non-singular
/// vector.
pub fn perp_has_nonsingular(v: &VectorTuple) -> bool {
    let f = &v.field;
    let n = v.n;
    let rows: Vec<Vec<Fe>> = v
        .columns
        .iter()
        .map(|c| {
            (0..n)
                .map(|pos| match crate::groups::forms::polar_partner(n, pos) {
                    Some(p) => c[p],
                    None => 0,
                })
                .collect()
        })
        .collect();
    let basis = if rows.is_empty() {
        (0..n).map(|i| (0..n).map(|j| Fe::from(i == j)).collect()).collect()
    } else {
        field_kernel(f, &rows, n)
    };
    basis.iter().any(|b| q_value(f, b) != 0)
        || basis.iter().enumerate().any(|(i, a)| basis[i + 1..].iter().any(|b| beta_value(f, a, b) != 0))
}

/// Membership in the open set where fingerprints separate orbits: the first
/// `min(m, 2nu)` vectors are independent modulo the radical of `beta`, and
/// for SO with even `n` and `m < n` the perp of the span contains a
/// non-singular vector.
pub fn is_generic(v: &VectorTuple, kind: GroupKind) -> bool {
    let two_nu = 2 * nu(v.n);
    let lim = v.m().min(two_nu);
    let rows: Vec<Vec<Fe>> = v.columns[..lim].iter().map(|c| c[..two_nu].to_vec()).collect();
    if field_rank(&v.field, &rows) < lim {
        return false;
    }
    if kind == GroupKind::SO && v.n % 2 == 0 && v.m() < v.n {
        return perp_has_nonsingular(v);
    }
    true
}

pub fn same_orbit_generic(v1: &VectorTuple, v2: &VectorTuple, kind: GroupKind) -> Result<Verdict, WittError> {
    if v1.n != v2.n || v1.m() != v2.m() || v1.field != v2.field {
        return Err(WittError::ShapeMismatch("tuples differ in n, m or field".into()));
    }
    orthogonal_kind(kind, v1.n)?;
    if !is_generic(v1, kind) || !is_generic(v2, kind) {
        return Ok(Verdict::NotGeneric);
    }
    Ok(if fingerprint(v1, kind)? == fingerprint(v2, kind)? { Verdict::Same } else { Verdict::Different })
}

/// All `Q^(i)` and `B^(ij)` vanish, i.e. the span is totally singular.
pub fn null_cone_test(v: &VectorTuple) -> bool {
    let f = &v.field;
    v.columns.iter().all(|a| q_value(f, a) == 0)
        && v.columns.iter().enumerate().all(|(i, a)| v.columns[i + 1..].iter().all(|b| beta_value(f, a, b) == 0))
}

/// A random tuple in a random maximal totally singular subspace: random
/// combinations of the `x` basis vectors moved by a random orthogonal
/// element.
pub fn random_singular_tuple(n: usize, m: usize, field: &FieldDesc, rng: &mut ChaCha8Rng) -> Result<VectorTuple, WittError> {
    let nu = nu(n);
    let r = rng.gen_range(1..=6);
    let g = random_element(GroupId::orthogonal(n), field, r, rng)?.matrix().expect("constant");
    let columns = (0..m)
        .map(|_| {
            let mut c = vec![0; n];
            for x in c.iter_mut().take(nu) {
                *x = rng.gen_range(0..field.order());
            }
            mat_vec(field, &g, &c)
        })
        .collect();
    Ok(VectorTuple { n, field: *field, columns })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NullConeCertificate {
    pub invariant: String,
    pub n: usize,
    pub status: Status,
    pub trials: usize,
    pub seed: u64,
    pub field: FieldSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<Fe>>>,
}

/// Evaluates a homogeneous invariant of positive degree at `trials` random
/// totally singular tuples; passes when every value is zero.
pub fn null_cone_vanishing(
    id: &InvariantId,
    n: Option<usize>,
    trials: usize,
    seed: u64,
    field: &FieldDesc,
) -> Result<NullConeCertificate, WittError> {
    if id.is_relation() {
        return Err(WittError::Invariant(format!("{id} is a relation, not an invariant")));
    }
    let n = id.natural_dimension().or(n);
    let p = id.build(n).map_err(|e| WittError::Invariant(e.to_string()))?.to_gf2();
    let n = n.expect("dimension known after build");
    if p.monomials().any(|m| m.degree() == 0) {
        return Err(WittError::Invariant(format!("{id} has a constant term")));
    }
    let m = p.variables().iter().filter_map(|v| v.vector()).max().unwrap_or(0) as usize;
    let ev = Evaluator::new(&p);
    let mut cert = NullConeCertificate {
        invariant: id.to_string(),
        n,
        status: Status::Pass,
        trials,
        seed,
        field: FieldSpec::of(field),
        witness: None,
    };
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t as u64 + 1);
        let v = random_singular_tuple(n, m, field, &mut rng)?;
        debug_assert!(null_cone_test(&v));
        let value = ev.eval_with(field, |var| match (var.vector(), var.position(n)) {
            (Some(i), Some(pos)) => v.columns[i as usize - 1][pos],
            _ => 0,
        });
        if value != 0 {
            cert.status = Status::Fail;
            cert.witness = Some(v.columns);
            break;
        }
    }
    Ok(cert)
}
