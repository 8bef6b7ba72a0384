//! Fast repeated evaluation of a GF(2) polynomial over GF(2^k).

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use super::field::{Fe, FieldDesc};
use super::poly::Gf2Poly;
use super::var::Var;

/// A polynomial flattened into index form. Variables are numbered in
/// sorted order; [`Evaluator::vars`] gives the numbering.
#[derive(Clone, Debug)]
pub struct Evaluator {
    vars: Vec<Var>,
    terms: Vec<SmallVec<[(u32, u32); 12]>>,
}

impl Evaluator {
    pub fn new(p: &Gf2Poly) -> Evaluator {
        let vars = p.variables();
        let index: FxHashMap<Var, u32> = vars.iter().enumerate().map(|(k, v)| (*v, k as u32)).collect();
        let terms = p
            .terms()
            .map(|(m, _)| m.factors().iter().map(|&(v, e)| (index[&v], e)).collect())
            .collect();
        Evaluator { vars, terms }
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    /// `values[k]` is the value of `vars()[k]`.
    pub fn eval(&self, field: &FieldDesc, values: &[Fe]) -> Fe {
        let mut acc = 0;
        for t in &self.terms {
            let mut x: Fe = 1;
            for &(k, e) in t.iter() {
                let v = values[k as usize];
                x = if e == 1 { field.mul(x, v) } else { field.mul(x, field.pow(v, e as u64)) };
                if x == 0 {
                    break;
                }
            }
            acc ^= x;
        }
        acc
    }

    /// Evaluates with values read through `lookup`.
    pub fn eval_with(&self, field: &FieldDesc, lookup: impl Fn(Var) -> Fe) -> Fe {
        let values: Vec<Fe> = self.vars.iter().map(|&v| lookup(v)).collect();
        self.eval(field, &values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::Ring;
    use crate::algebra::text::parse_gf2_poly;

    #[test]
    fn agrees_with_generic_eval() {
        let f = FieldDesc::table(8);
        let p = parse_gf2_poly("x1_1^3*y1_2 + z_1^2 + x1_2 + 1").unwrap();
        let e = Evaluator::new(&p);
        let lift = p.lift_field(f);
        let val = |v: Var| (v.raw() as u64 * 37 + 11) % 256;
        assert_eq!(e.eval_with(&f, val), lift.eval(|v| val(v)));
        assert_eq!(f.zero(), 0);
    }
}
