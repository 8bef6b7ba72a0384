use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Evaluator, Fe, FieldDesc, Gf2Poly, Var};

use super::action::{mat_mul, mat_vec, reflection, GroupAction};
use super::family::{generator_family, NamedAction};
use super::forms::{polar_partner, q_value};
use super::{GroupError, GroupId, GroupKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    Auto,
    Symbolic,
    Randomized,
}

impl FromStr for CheckMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(CheckMode::Auto),
            "symbolic" => Ok(CheckMode::Symbolic),
            "randomized" => Ok(CheckMode::Randomized),
            _ => Err(format!("unknown mode `{s}`; expected auto, symbolic or randomized")),
        }
    }
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckMode::Auto => "auto",
            CheckMode::Symbolic => "symbolic",
            CheckMode::Randomized => "randomized",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub mode: CheckMode,
    pub seed: u64,
    /// Random group elements drawn in randomized mode.
    pub elements: usize,
    pub max_reflections: usize,
    /// Random tuples each element is evaluated at.
    pub points: usize,
    pub field_k: u32,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { mode: CheckMode::Auto, seed: 0, elements: 64, max_reflections: 6, points: 64, field_k: 8 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub generator: String,
    /// A monomial of `g.p - p`, in the text format (symbolic mode).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomial: Option<String>,
    /// A tuple where `p(g v) != p(v)`, as columns (randomized mode).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<Vec<Fe>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub status: Status,
    pub mode: CheckMode,
    pub group: String,
    pub generators_checked: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points_checked: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field_k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn check_dimension(p: &Gf2Poly, n: usize) -> Result<(), GroupError> {
    for v in p.variables() {
        if v.is_coordinate() && v.position(n).is_none() {
            return Err(GroupError::VariableOutsideDimension { var: v.to_string(), n });
        }
    }
    Ok(())
}

/// Checks `apply(g, p) == p`; returns a witness monomial on failure.
pub fn check_under(p: &Gf2Poly, g: &NamedAction) -> Result<Option<Witness>, GroupError> {
    let img = g.action.apply(p)?;
    let diff = img.add(p);
    Ok(diff.leading_monomial().map(|m| Witness {
        generator: g.name.clone(),
        monomial: Some(m.to_string()),
        point: None,
    }))
}

fn torus_witness(p: &Gf2Poly) -> Option<Witness> {
    p.sorted_terms().into_iter().find(|(m, _)| !m.has_zero_torus_weight()).map(|(m, _)| Witness {
        generator: "torus".into(),
        monomial: Some(m.to_string()),
        point: None,
    })
}

pub fn invariance_check(p: &Gf2Poly, group: GroupId, opts: &CheckOptions) -> Result<Certificate, GroupError> {
    check_dimension(p, group.n)?;
    let symbolic = match opts.mode {
        CheckMode::Symbolic => true,
        CheckMode::Randomized => false,
        CheckMode::Auto => group.has_symbolic_family(),
    };
    if symbolic {
        symbolic_check(p, group, opts.seed)
    } else {
        randomized_check(p, group, opts)
    }
}

fn symbolic_check(p: &Gf2Poly, group: GroupId, seed: u64) -> Result<Certificate, GroupError> {
    let fam = generator_family(group)?;
    let mut cert = Certificate {
        status: Status::Pass,
        mode: CheckMode::Symbolic,
        group: group.to_string(),
        generators_checked: 0,
        seed,
        points_checked: None,
        field_k: None,
        witness: None,
    };
    if fam.torus {
        cert.generators_checked += 1;
        if let Some(w) = torus_witness(p) {
            cert.status = Status::Fail;
            cert.witness = Some(w);
            return Ok(cert);
        }
    }
    for g in fam.all_actions() {
        cert.generators_checked += 1;
        if let Some(w) = check_under(p, g)? {
            cert.status = Status::Fail;
            cert.witness = Some(w);
            return Ok(cert);
        }
    }
    Ok(cert)
}

fn random_vector(field: &FieldDesc, n: usize, rng: &mut ChaCha8Rng) -> Vec<Fe> {
    (0..n).map(|_| rng.gen_range(0..field.order())).collect()
}

fn random_nonsingular(field: &FieldDesc, n: usize, rng: &mut ChaCha8Rng) -> Vec<Fe> {
    loop {
        let u = random_vector(field, n, rng);
        if q_value(field, &u) != 0 {
            return u;
        }
    }
}

/// A product of `r` random reflections; for SO an odd `r` is raised by one.
pub fn random_element(
    group: GroupId,
    field: &FieldDesc,
    r: usize,
    rng: &mut ChaCha8Rng,
) -> Result<GroupAction<FieldDesc>, GroupError> {
    let n = group.n;
    let r = match group.kind {
        GroupKind::SO if r % 2 == 1 => r + 1,
        GroupKind::Sp => return Err(GroupError::UnsupportedGroup(group.to_string())),
        _ => r,
    };
    let mut a: Vec<Vec<Fe>> = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
    for _ in 0..r {
        let u = random_nonsingular(field, n, rng);
        let t = reflection(field, &u)?.matrix().expect("constant");
        a = mat_mul(field, &t, &a);
    }
    Ok(GroupAction::from_matrix(*field, &a, Some((r % 2) as u8)))
}

/// A product of `r` random symplectic transvections `v -> v + a beta(v, u) u`.
pub fn random_symplectic(n: usize, field: &FieldDesc, r: usize, rng: &mut ChaCha8Rng) -> GroupAction<FieldDesc> {
    let mut a: Vec<Vec<Fe>> = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
    for _ in 0..r {
        let u = random_vector(field, n, rng);
        let s = rng.gen_range(1..field.order());
        let mut t: Vec<Vec<Fe>> = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
        for (row, tr) in t.iter_mut().enumerate() {
            let scale = field.mul(s, u[row]);
            for (c, e) in tr.iter_mut().enumerate() {
                if let Some(pc) = polar_partner(n, c) {
                    *e ^= field.mul(scale, u[pc]);
                }
            }
        }
        a = mat_mul(field, &t, &a);
    }
    GroupAction::from_matrix(*field, &a, None)
}

fn randomized_check(p: &Gf2Poly, group: GroupId, opts: &CheckOptions) -> Result<Certificate, GroupError> {
    let field = crate::algebra::make_field(opts.field_k)?;
    let n = group.n;
    let ev = Evaluator::new(p);
    let m = ev.vars().iter().filter_map(|v| v.vector()).max().unwrap_or(0) as usize;
    let value = |cols: &[Vec<Fe>], v: Var| match (v.vector(), v.position(n)) {
        (Some(i), Some(pos)) => cols[i as usize - 1][pos],
        _ => 0,
    };
    let mut point_rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let points: Vec<Vec<Vec<Fe>>> = (0..opts.points)
        .map(|_| (0..m).map(|_| random_vector(&field, n, &mut point_rng)).collect())
        .collect();
    let base: Vec<Fe> = points.iter().map(|cols| ev.eval_with(&field, |v| value(cols, v))).collect();
    let mut cert = Certificate {
        status: Status::Pass,
        mode: CheckMode::Randomized,
        group: group.to_string(),
        generators_checked: 0,
        seed: opts.seed,
        points_checked: Some(opts.points),
        field_k: Some(opts.field_k),
        witness: None,
    };
    for e in 0..opts.elements {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        rng.set_stream(e as u64 + 1);
        let max = opts.max_reflections.max(1);
        let (g, r) = match group.kind {
            GroupKind::SO => {
                let r = 2 * rng.gen_range(1..=(max / 2).max(1));
                (random_element(group, &field, r, &mut rng)?, r)
            }
            GroupKind::O => {
                let r = rng.gen_range(1..=max);
                (random_element(group, &field, r, &mut rng)?, r)
            }
            GroupKind::Sp => {
                let r = rng.gen_range(1..=max);
                (random_symplectic(n, &field, r, &mut rng), r)
            }
        };
        let a = g.matrix().expect("constant");
        cert.generators_checked += 1;
        for (cols, &b) in points.iter().zip(base.iter()) {
            let moved: Vec<Vec<Fe>> = cols.iter().map(|v| mat_vec(&field, &a, v)).collect();
            if ev.eval_with(&field, |v| value(&moved, v)) != b {
                cert.status = Status::Fail;
                cert.witness = Some(Witness {
                    generator: format!("random element {e} ({r} factors)"),
                    monomial: None,
                    point: Some(cols.clone()),
                });
                return Ok(cert);
            }
        }
    }
    Ok(cert)
}
