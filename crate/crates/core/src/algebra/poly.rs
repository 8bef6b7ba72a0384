//! Sparse multivariate polynomials over a [`Ring`].

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::field::FieldDesc;
use super::monomial::{trim_multidegree, Monomial, Multidegree};
use super::ring::{Gf2, Integers, Ring};
use super::var::Var;
use super::AlgebraError;

pub type Gf2Poly = Poly<Gf2>;
pub type IntPoly = Poly<Integers>;
pub type FieldPoly = Poly<FieldDesc>;

/// A polynomial in canonical form: no stored zero coefficients, so equal
/// polynomials have identical term maps.
#[derive(Clone)]
pub struct Poly<R: Ring> {
    ring: R,
    terms: FxHashMap<Monomial, R::Elem>,
}

impl<R: Ring> PartialEq for Poly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl<R: Ring> Poly<R> {
    pub fn zero(ring: R) -> Self {
        Poly { ring, terms: FxHashMap::default() }
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Self::term(ring, Monomial::one(), c)
    }

    pub fn one(ring: R) -> Self {
        let c = ring.one();
        Self::constant(ring, c)
    }

    pub fn var(ring: R, v: Var) -> Self {
        let c = ring.one();
        Self::term(ring, Monomial::var(v), c)
    }

    pub fn term(ring: R, m: Monomial, c: R::Elem) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(m, c);
        p
    }

    pub fn monomial(ring: R, m: Monomial) -> Self {
        let c = ring.one();
        Self::term(ring, m, c)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, R::Elem)>>(ring: R, terms: I) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R::Elem)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> R::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Terms in serialization order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &R::Elem)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.serial_cmp(b.0));
        v
    }

    /// First monomial in serialization order.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().min_by(|a, b| a.serial_cmp(b))
    }

    pub fn add_term(&mut self, m: Monomial, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                let s = self.ring.add(e.get(), &c);
                if self.ring.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.ring != other.ring {
            return Err(AlgebraError::RingMismatch(
                format!("{:?}", self.ring.tag()),
                format!("{:?}", other.ring.tag()),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_ring(other)?;
        let mut out = Self::zero(self.ring.clone());
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in other.terms.iter() {
                out.add_term(ma.mul(mb), self.ring.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("ring mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("ring mismatch")
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("ring mismatch")
    }

    pub fn neg(&self) -> Self {
        let r = self.ring.clone();
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), r.neg(c))).collect(),
            ring: r,
        }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let r = self.ring.clone();
        Self::from_terms(r.clone(), self.terms.iter().map(|(m, x)| (m.clone(), r.mul(x, c))))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.ring.clone());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Sum of the polynomials in `it`.
    pub fn sum<'a, I: IntoIterator<Item = &'a Self>>(ring: R, it: I) -> Self
    where
        R: 'a,
    {
        let mut out = Self::zero(ring);
        for p in it {
            for (m, c) in p.terms.iter() {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert!(self.ring == other.ring, "ring mismatch");
        for (m, c) in other.terms.iter() {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// Simultaneous substitution; variables absent from `map` are fixed.
    pub fn substitute(&self, map: &HashMap<Var, Self>) -> Result<Self, AlgebraError> {
        for img in map.values() {
            self.check_ring(img)?;
        }
        Ok(self.substitute_with(|v| map.get(&v)))
    }

    /// Substitution driven by a lookup closure. Images must share the ring.
    pub fn substitute_with<'a, F>(&self, lookup: F) -> Self
    where
        F: Fn(Var) -> Option<&'a Self>,
        R: 'a,
    {
        let ring = self.ring.clone();
        let mut out = Self::zero(ring.clone());
        let mut power_cache: FxHashMap<(Var, u32), Vec<(Monomial, R::Elem)>> = FxHashMap::default();
        let mut factors: Vec<(Var, u32)> = Vec::new();
        for (m, c) in self.terms.iter() {
            let mut base = Vec::new();
            factors.clear();
            for &(v, e) in m.factors() {
                if let Some(img) = lookup(v) {
                    if !power_cache.contains_key(&(v, e)) {
                        let pw: Vec<_> = img.pow(e).terms.into_iter().collect();
                        power_cache.insert((v, e), pw);
                    }
                    factors.push((v, e));
                } else {
                    base.push((v, e));
                }
            }
            let base = Monomial::from_pairs(base);
            let lists: Vec<&Vec<(Monomial, R::Elem)>> =
                factors.iter().map(|k| &power_cache[k]).collect();
            expand_product(&ring, &lists, 0, base, c.clone(), &mut out);
        }
        out
    }

    /// Sum of the terms of exactly multidegree `alpha`.
    pub fn component(&self, alpha: &[u32]) -> Self {
        let want = trim_multidegree(alpha.to_vec());
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| trim_multidegree(m.multidegree()) == want)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Decomposition into multihomogeneous components, keyed by trimmed
    /// multidegree.
    pub fn components(&self) -> Vec<(Multidegree, Self)> {
        let mut by: HashMap<Multidegree, Self> = HashMap::new();
        for (m, c) in self.terms.iter() {
            by.entry(trim_multidegree(m.multidegree()))
                .or_insert_with(|| Self::zero(self.ring.clone()))
                .terms
                .insert(m.clone(), c.clone());
        }
        let mut v: Vec<_> = by.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    /// The multidegree if the polynomial is multihomogeneous and nonzero.
    pub fn multidegree(&self) -> Option<Multidegree> {
        let mut it = self.terms.keys().map(|m| trim_multidegree(m.multidegree()));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// All variables occurring, sorted.
    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.factors().iter().map(|p| p.0)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> Self {
        let ring = self.ring.clone();
        let mut out = Self::zero(ring.clone());
        for (m, c) in self.terms.iter() {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let reduced = m.div(&Monomial::var(v)).expect("exponent checked");
            out.add_term(reduced, ring.mul_int(c, e as u64));
        }
        out
    }

    /// Evaluates under `value`, which must assign every occurring variable.
    pub fn eval<F: Fn(Var) -> R::Elem>(&self, value: F) -> R::Elem {
        let ring = &self.ring;
        let mut acc = ring.zero();
        for (m, c) in self.terms.iter() {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                let x = value(v);
                for _ in 0..e {
                    t = ring.mul(&t, &x);
                }
            }
            acc = ring.add(&acc, &t);
        }
        acc
    }

    /// Maps coefficients into another ring.
    pub fn map_ring<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> Poly<S> {
        Poly::from_terms(target, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Renames variables; the map must be injective on the variables present
    /// for the result to keep the term count.
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Self {
        Self::from_terms(self.ring.clone(), self.terms.iter().map(|(m, c)| (m.rename(&f), c.clone())))
    }

    /// Keeps only the terms whose monomial satisfies `pred`.
    pub fn filter(&self, pred: impl Fn(&Monomial) -> bool) -> Self {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| pred(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Sets the variables in `values` to constants.
    pub fn specialize(&self, values: &HashMap<Var, R::Elem>) -> Self {
        let consts: HashMap<Var, Self> = values
            .iter()
            .map(|(v, c)| (*v, Self::constant(self.ring.clone(), c.clone())))
            .collect();
        self.substitute_with(|v| consts.get(&v))
    }
}

fn expand_product<R: Ring>(
    ring: &R,
    lists: &[&Vec<(Monomial, R::Elem)>],
    depth: usize,
    acc: Monomial,
    coeff: R::Elem,
    out: &mut Poly<R>,
) {
    if depth == lists.len() {
        out.add_term(acc, coeff);
        return;
    }
    for (m, c) in lists[depth].iter() {
        let nc = ring.mul(&coeff, c);
        if ring.is_zero(&nc) {
            continue;
        }
        expand_product(ring, lists, depth + 1, acc.mul(m), nc, out);
    }
}

impl IntPoly {
    /// Exact division of every coefficient by `d`.
    pub fn divide_exact(&self, d: &BigInt) -> Result<IntPoly, AlgebraError> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut out = IntPoly::zero(Integers);
        for (m, c) in self.sorted_terms() {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(AlgebraError::NotDivisible { divisor: d.to_string(), monomial: m.to_string() });
            }
            out.terms.insert(m.clone(), q);
        }
        Ok(out)
    }

    /// Coefficients reduced modulo 2.
    pub fn reduce_mod2(&self) -> Gf2Poly {
        let two = BigInt::from(2);
        self.map_ring(Gf2, |c| if c.mod_floor(&two).is_one() { 1 } else { 0 })
    }

    pub fn from_i64_terms<I: IntoIterator<Item = (Monomial, i64)>>(terms: I) -> IntPoly {
        IntPoly::from_terms(Integers, terms.into_iter().map(|(m, c)| (m, BigInt::from(c))))
    }

    pub fn is_divisible_by(&self, d: u32) -> bool {
        let d = BigInt::from(d);
        self.terms.values().all(|c| c.mod_floor(&d).is_zero())
    }
}

impl Gf2Poly {
    /// Lift to the integers with every coefficient equal to 1.
    pub fn lift_int(&self) -> IntPoly {
        self.map_ring(Integers, |_| BigInt::one())
    }

    /// Lift into GF(2^k).
    pub fn lift_field(&self, field: FieldDesc) -> FieldPoly {
        self.map_ring(field, |c| *c as u64)
    }

    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(ms: I) -> Gf2Poly {
        Gf2Poly::from_terms(Gf2, ms.into_iter().map(|m| (m, 1u8)))
    }
}

impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_poly(self))
    }
}

impl<R: Ring> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gx(t: u32, i: u32) -> Gf2Poly {
        Gf2Poly::var(Gf2, Var::x(t, i))
    }
    fn gy(t: u32, i: u32) -> Gf2Poly {
        Gf2Poly::var(Gf2, Var::y(t, i))
    }

    #[test]
    fn characteristic_two_cancellation() {
        let s = gx(1, 1).add(&gy(1, 1));
        assert!(s.add(&s).is_zero());
        let sq = s.mul(&s);
        assert_eq!(sq, gx(1, 1).pow(2).add(&gy(1, 1).pow(2)));
    }

    #[test]
    fn integer_product() {
        let x = IntPoly::var(Integers, Var::x(1, 1));
        let y = IntPoly::var(Integers, Var::y(1, 1));
        let xy = x.mul(&y);
        assert_eq!(xy.len(), 1);
        assert_eq!(xy.coeff(&Monomial::from_vars([Var::x(1, 1), Var::y(1, 1)])), BigInt::one());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = FieldPoly::one(FieldDesc::table(4));
        let b = FieldPoly::one(FieldDesc::table(8));
        assert!(matches!(a.try_add(&b), Err(AlgebraError::RingMismatch(..))));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn substitution_example() {
        // x -> x + y in Q = x y  gives x y + y^2
        let q = gx(1, 1).mul(&gy(1, 1));
        let mut map = HashMap::new();
        map.insert(Var::x(1, 1), gx(1, 1).add(&gy(1, 1)));
        let got = q.substitute(&map).unwrap();
        assert_eq!(got, q.add(&gy(1, 1).pow(2)));
        assert_eq!(q.substitute(&HashMap::new()).unwrap(), q);
    }

    #[test]
    fn component_extraction() {
        let p = gx(1, 1).mul(&gy(1, 1)).add(&gx(1, 1).mul(&gy(1, 2)));
        assert_eq!(p.component(&[1, 1]), gx(1, 1).mul(&gy(1, 2)));
        let h = gx(1, 1).mul(&gy(1, 2));
        assert_eq!(h.component(&[1, 1, 0]), h);
    }

    #[test]
    fn exact_division() {
        let x = IntPoly::var(Integers, Var::x(1, 1));
        assert!(matches!(x.divide_exact(&BigInt::from(2)), Err(AlgebraError::NotDivisible { .. })));
        let two_x = x.scale(&BigInt::from(2));
        assert_eq!(two_x.divide_exact(&BigInt::from(2)).unwrap(), x);
        assert!(matches!(x.divide_exact(&BigInt::zero()), Err(AlgebraError::DivisionByZero)));
    }

    #[test]
    fn beta_minus_det_halves_for_one_hyperbolic_plane() {
        let x1 = IntPoly::var(Integers, Var::x(1, 1));
        let y1 = IntPoly::var(Integers, Var::y(1, 1));
        let x2 = IntPoly::var(Integers, Var::x(1, 2));
        let y2 = IntPoly::var(Integers, Var::y(1, 2));
        let b = x1.mul(&y2).add(&y1.mul(&x2));
        let d = x1.mul(&y2).sub(&y1.mul(&x2));
        let half = b.sub(&d).divide_exact(&BigInt::from(2)).unwrap();
        assert_eq!(half, y1.mul(&x2));
    }

    #[test]
    fn reduce_mod2_examples() {
        let x = IntPoly::var(Integers, Var::x(1, 1));
        let y = IntPoly::var(Integers, Var::y(1, 1));
        let p = x.scale(&BigInt::from(2)).add(&y);
        assert_eq!(p.reduce_mod2(), y.reduce_mod2());
        assert_eq!(x.scale(&BigInt::from(3)).reduce_mod2(), x.reduce_mod2());
        assert_eq!(x.scale(&BigInt::from(-3)).reduce_mod2(), x.reduce_mod2());
    }

    #[test]
    fn formal_derivative_in_characteristic_two() {
        let p = gx(1, 1).pow(2).add(&gx(1, 1).mul(&gy(1, 1)));
        assert_eq!(p.derivative(Var::x(1, 1)), gy(1, 1));
    }
}
