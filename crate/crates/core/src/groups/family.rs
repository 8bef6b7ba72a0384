use crate::algebra::{Gf2, Gf2Poly, Var};

use super::action::{swap_x1_y1, GroupAction};
use super::{GroupError, GroupId, GroupKind};

/// A generator with a display name, used in certificates.
#[derive(Clone, Debug)]
pub struct NamedAction {
    pub name: String,
    pub action: GroupAction<Gf2>,
}

/// Generators sufficient for exact invariance certification: unipotent
/// actions in the formal parameter `c0`, the torus (checked through the
/// weight rule) and discrete elements.
#[derive(Clone, Debug)]
pub struct GeneratorFamily {
    pub group: GroupId,
    pub unipotents: Vec<NamedAction>,
    pub torus: bool,
    pub discrete: Vec<NamedAction>,
}

impl GeneratorFamily {
    pub fn generator_count(&self) -> usize {
        self.unipotents.len() + self.discrete.len() + usize::from(self.torus)
    }

    pub fn all_actions(&self) -> impl Iterator<Item = &NamedAction> {
        self.unipotents.iter().chain(self.discrete.iter())
    }
}

pub fn param() -> Var {
    Var::param(0)
}

fn c() -> Gf2Poly {
    Gf2Poly::var(Gf2, param())
}

fn one() -> Gf2Poly {
    Gf2Poly::one(Gf2)
}

/// Row for `target -> target + coeff * source` (positions in `k^n`).
fn shear(target: usize, source: usize, coeff: Gf2Poly) -> (usize, Vec<(usize, Gf2Poly)>) {
    (target, vec![(target, one()), (source, coeff)])
}

fn named(name: String, n: usize, rows: Vec<(usize, Vec<(usize, Gf2Poly)>)>) -> NamedAction {
    NamedAction { name, action: GroupAction::substitution(Gf2, n, &rows) }
}

/// `x_a -> x_a + c x_b`, `y_b -> y_b + c y_a` for every ordered pair `a != b`.
fn elementary_pairs(n: usize) -> Vec<NamedAction> {
    let nu = n / 2;
    let mut out = Vec::new();
    for a in 0..nu {
        for b in 0..nu {
            if a == b {
                continue;
            }
            out.push(named(
                format!("x{0}->x{0}+c*x{1}, y{1}->y{1}+c*y{0}", a + 1, b + 1),
                n,
                vec![shear(a, b, c()), shear(nu + b, nu + a, c())],
            ));
        }
    }
    out
}

pub fn generator_family(group: GroupId) -> Result<GeneratorFamily, GroupError> {
    let n = group.n;
    let nu = n / 2;
    let unsupported = || Err(GroupError::UnsupportedGroup(group.to_string()));
    let fam = |unipotents, discrete| GeneratorFamily { group, unipotents, torus: true, discrete };
    match group.kind {
        GroupKind::O if n % 2 == 0 && n >= 2 => {
            let swap = NamedAction { name: "swap x1<->y1".into(), action: swap_x1_y1(n) };
            Ok(fam(elementary_pairs(n), vec![swap]))
        }
        GroupKind::SO if n == 2 => Ok(fam(Vec::new(), Vec::new())),
        GroupKind::SO if n == 4 => {
            // V = [[x1, x2], [y2, y1]] under V -> S V T^-1 with S, T unipotent
            let (x1, x2, y1, y2) = (0, 1, 2, 3);
            let u = vec![
                named("S upper".into(), n, vec![shear(x1, y2, c()), shear(x2, y1, c())]),
                named("S lower".into(), n, vec![shear(y2, x1, c()), shear(y1, x2, c())]),
                named("T upper".into(), n, vec![shear(x2, x1, c()), shear(y1, y2, c())]),
                named("T lower".into(), n, vec![shear(x1, x2, c()), shear(y2, y1, c())]),
            ];
            Ok(fam(u, Vec::new()))
        }
        GroupKind::O | GroupKind::SO if n == 3 => {
            // V = [[z, x], [y, z]] under conjugation by unipotent S
            let (x, y, z) = (0, 1, 2);
            let c2 = c().pow(2);
            let u = vec![
                named("conjugation by [[1,c],[0,1]]".into(), n, vec![shear(x, y, c2.clone()), shear(z, y, c())]),
                named("conjugation by [[1,0],[c,1]]".into(), n, vec![shear(y, x, c2), shear(z, x, c())]),
            ];
            Ok(fam(u, Vec::new()))
        }
        GroupKind::Sp if n % 2 == 0 && n >= 2 => {
            let mut u = elementary_pairs(n);
            for t in 0..nu {
                u.push(named(format!("x{0}->x{0}+c*y{0}", t + 1), n, vec![shear(t, nu + t, c())]));
                u.push(named(format!("y{0}->y{0}+c*x{0}", t + 1), n, vec![shear(nu + t, t, c())]));
            }
            Ok(fam(u, Vec::new()))
        }
        _ => unsupported(),
    }
}

/// The symplectic transvection `x_1 -> x_1 + y_1`, which is not orthogonal.
pub fn symplectic_witness(n: usize) -> NamedAction {
    let nu = n / 2;
    named("x1->x1+y1".into(), n, vec![shear(0, nu, one())])
}
