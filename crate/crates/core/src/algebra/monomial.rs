use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::var::{CoordKind, Var};

/// A monomial: sorted `(variable, exponent)` pairs with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Var, u32); 12]>);

/// Per-vector total degree; entry `i - 1` belongs to vector `i`, trailing
/// zeros are trimmed.
pub type Multidegree = Vec<u32>;

/// Drops trailing zeros so multidegrees compare by value.
pub fn trim_multidegree(mut a: Multidegree) -> Multidegree {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::pow_of(v, 1)
    }

    pub fn pow_of(v: Var, e: u32) -> Monomial {
        let mut s = SmallVec::new();
        if e > 0 {
            s.push((v, e));
        }
        Monomial(s)
    }

    /// Builds a monomial from arbitrary pairs, merging repeats.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Monomial {
        let mut v: SmallVec<[(Var, u32); 12]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        v.sort_unstable_by_key(|p| p.0);
        let mut out: SmallVec<[(Var, u32); 12]> = SmallVec::with_capacity(v.len());
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        Monomial(out)
    }

    /// Product of variables (with repetition).
    pub fn from_vars<I: IntoIterator<Item = Var>>(vars: I) -> Monomial {
        Monomial::from_pairs(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by_key(&v, |p| p.0)
            .map(|idx| self.0[idx].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out: SmallVec<[(Var, u32); 12]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, x)| (v, x * e)).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.0.clone();
        for &(v, e) in other.0.iter() {
            let idx = out.binary_search_by_key(&v, |p| p.0).ok()?;
            if out[idx].1 < e {
                return None;
            }
            out[idx].1 -= e;
        }
        out.retain(|p| p.1 > 0);
        Some(Monomial(out))
    }

    /// Removes the variables matching `pred`, returning (kept, removed).
    pub fn split(&self, pred: impl Fn(Var) -> bool) -> (Monomial, Monomial) {
        let (mut kept, mut removed) = (SmallVec::new(), SmallVec::new());
        for &p in self.0.iter() {
            if pred(p.0) {
                removed.push(p);
            } else {
                kept.push(p);
            }
        }
        (Monomial(kept), Monomial(removed))
    }

    pub fn multidegree(&self) -> Multidegree {
        let mut out: Multidegree = Vec::new();
        for &(v, e) in self.0.iter() {
            if let Some(i) = v.vector() {
                let i = i as usize;
                if out.len() < i {
                    out.resize(i, 0);
                }
                out[i - 1] += e;
            }
        }
        out
    }

    /// Torus weights: for each coordinate index `t`, the x_t-degree minus the
    /// y_t-degree; `z` carries weight zero.
    pub fn torus_weights(&self) -> Vec<i64> {
        let mut w: Vec<i64> = Vec::new();
        for &(v, e) in self.0.iter() {
            let sign = match v.coord_kind() {
                Some(CoordKind::X) => 1,
                Some(CoordKind::Y) => -1,
                _ => continue,
            };
            if let super::var::VariableId::X { t, .. } | super::var::VariableId::Y { t, .. } = v.id() {
                let t = t as usize;
                if w.len() < t {
                    w.resize(t, 0);
                }
                w[t - 1] += sign * e as i64;
            }
        }
        w
    }

    pub fn has_zero_torus_weight(&self) -> bool {
        self.torus_weights().iter().all(|&x| x == 0)
    }

    /// Monomial with every variable renamed by `f`.
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }

    /// Order used for serialization: `Less` means `self` is printed first.
    /// Lexicographic on exponent vectors with variables ordered by [`Var`].
    pub fn serial_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        for (pa, pb) in a.iter().zip(b.iter()) {
            if pa.0 != pb.0 {
                return pa.0.cmp(&pb.0);
            }
            if pa.1 != pb.1 {
                return pb.1.cmp(&pa.1);
            }
        }
        b.len().cmp(&a.len())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serial_order_examples() {
        let a = Monomial::from_vars([Var::x(1, 1), Var::y(1, 2)]);
        let b = Monomial::from_vars([Var::y(1, 1), Var::x(1, 2)]);
        assert_eq!(a.serial_cmp(&b), Ordering::Less);
        let x2 = Monomial::pow_of(Var::x(1, 1), 2);
        let x = Monomial::var(Var::x(1, 1));
        assert_eq!(x2.serial_cmp(&x), Ordering::Less);
        assert_eq!(x.serial_cmp(&Monomial::one()), Ordering::Less);
        assert_eq!(a.serial_cmp(&a), Ordering::Equal);
    }

    #[test]
    fn multidegree_and_weights() {
        let m = Monomial::from_vars([Var::x(1, 1), Var::x(1, 2), Var::y(1, 3), Var::z(3)]);
        assert_eq!(m.multidegree(), vec![1, 1, 2]);
        assert_eq!(m.torus_weights(), vec![1]);
        let p = Monomial::from_vars([Var::x(1, 1), Var::param(0), Var::gram_q(1)]);
        assert_eq!(p.multidegree(), vec![1]);
    }

    #[test]
    fn mul_and_div() {
        let a = Monomial::from_vars([Var::x(1, 1), Var::y(1, 2)]);
        let b = Monomial::from_vars([Var::x(1, 1), Var::z(3)]);
        let ab = a.mul(&b);
        assert_eq!(ab.exponent(Var::x(1, 1)), 2);
        assert_eq!(ab.div(&b).unwrap(), a);
        assert!(a.div(&b).is_none());
        assert_eq!(ab.degree(), 4);
    }
}
