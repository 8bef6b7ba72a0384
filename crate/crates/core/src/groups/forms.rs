//! The standard quadratic form and its polar form.

use crate::algebra::{Fe, FieldDesc, Gf2, Gf2Poly, Monomial, Var};

/// `q(v^(i))` on `k^n` as a polynomial.
pub fn q_poly(n: usize, i: u32) -> Gf2Poly {
    let nu = (n / 2) as u32;
    let mut ms: Vec<Monomial> = (1..=nu).map(|t| Monomial::from_vars([Var::x(t, i), Var::y(t, i)])).collect();
    if n % 2 == 1 {
        ms.push(Monomial::pow_of(Var::z(i), 2));
    }
    Gf2Poly::from_monomials(ms)
}

/// `beta(v^(i), v^(j))` as a polynomial.
pub fn beta_poly(n: usize, i: u32, j: u32) -> Gf2Poly {
    let nu = (n / 2) as u32;
    let mut p = Gf2Poly::zero(Gf2);
    for t in 1..=nu {
        p.add_term(Monomial::from_vars([Var::x(t, i), Var::y(t, j)]), 1);
        p.add_term(Monomial::from_vars([Var::y(t, i), Var::x(t, j)]), 1);
    }
    p
}

pub fn q_value(field: &FieldDesc, u: &[Fe]) -> Fe {
    let n = u.len();
    let nu = n / 2;
    let mut acc = 0;
    for t in 0..nu {
        acc ^= field.mul(u[t], u[nu + t]);
    }
    if n % 2 == 1 {
        acc ^= field.square(u[2 * nu]);
    }
    acc
}

pub fn beta_value(field: &FieldDesc, u: &[Fe], v: &[Fe]) -> Fe {
    assert_eq!(u.len(), v.len());
    let nu = u.len() / 2;
    let mut acc = 0;
    for t in 0..nu {
        acc ^= field.mul(u[t], v[nu + t]) ^ field.mul(u[nu + t], v[t]);
    }
    acc
}

/// The coordinate index paired with `pos` by the polar form, if any.
pub fn polar_partner(n: usize, pos: usize) -> Option<usize> {
    let nu = n / 2;
    if pos < nu {
        Some(pos + nu)
    } else if pos < 2 * nu {
        Some(pos - nu)
    } else {
        None
    }
}
