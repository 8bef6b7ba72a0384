//! Text interchange format for polynomials.
//!
//! Terms are joined by ` + ` (or ` - ` for negative integer coefficients),
//! a coefficient of 1 is omitted, variables print as `x{t}_{i}`, `y{t}_{i}`,
//! `z_{i}`, `c{id}` and the abstract symbols `Q{i}`, `B{i}_{j}`, `D`,
//! `Delta`; exponents use `^`. The zero polynomial prints as `0`.

use num_bigint::BigInt;
use num_traits::One;

use super::monomial::Monomial;
use super::poly::{Gf2Poly, IntPoly, Poly};
use super::ring::{Integers, Ring, RingTag};
use super::var::Var;
use super::AlgebraError;

pub fn format_poly<R: Ring>(p: &Poly<R>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let ring = p.ring();
    let mut out = String::new();
    for (k, (m, c)) in p.sorted_terms().into_iter().enumerate() {
        let (negative, body) = match ring.tag() {
            RingTag::Int => {
                let s = ring.fmt_coeff(c);
                match s.strip_prefix("(-").and_then(|s| s.strip_suffix(')')) {
                    Some(abs) => (true, abs.to_string()),
                    None => (false, s),
                }
            }
            _ => (false, ring.fmt_coeff(c)),
        };
        if k > 0 {
            out.push_str(if negative { " - " } else { " + " });
        } else if negative {
            out.push('-');
        }
        let unit = body == "1" || body == "0x1";
        if m.is_one() {
            out.push_str(&body);
        } else if unit {
            out.push_str(&m.to_string());
        } else {
            out.push_str(&body);
            out.push('*');
            out.push_str(&m.to_string());
        }
    }
    out
}

/// A parsed term: sign, integer coefficient and monomial.
fn parse_terms(s: &str) -> Result<Vec<(BigInt, Monomial)>, AlgebraError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(AlgebraError::Parse("empty polynomial".into()));
    }
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut negative = false;
    let mut pending_sign = false;
    for ch in s.chars() {
        match ch {
            '+' | '-' => {
                if !cur.trim().is_empty() {
                    pieces.push((negative, std::mem::take(&mut cur)));
                } else if pending_sign || ch == '+' {
                    return Err(AlgebraError::Parse("misplaced sign".into()));
                }
                negative = ch == '-';
                pending_sign = true;
                cur.clear();
            }
            c if c.is_whitespace() => cur.push(' '),
            c => {
                pending_sign = false;
                cur.push(c);
            }
        }
    }
    if cur.trim().is_empty() {
        return Err(AlgebraError::Parse("dangling operator".into()));
    }
    pieces.push((negative, cur));

    let mut out = Vec::with_capacity(pieces.len());
    for (neg, body) in pieces {
        let mut coeff = BigInt::one();
        let mut pairs = Vec::new();
        for factor in body.split('*').map(str::trim) {
            if factor.is_empty() {
                return Err(AlgebraError::Parse(format!("empty factor in `{}`", body.trim())));
            }
            if factor.chars().all(|c| c.is_ascii_digit()) {
                coeff *= factor.parse::<BigInt>().map_err(|e| AlgebraError::Parse(e.to_string()))?;
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| AlgebraError::Parse(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            pairs.push((Var::parse(name)?, exp));
        }
        if neg {
            coeff = -coeff;
        }
        out.push((coeff, Monomial::from_pairs(pairs)));
    }
    Ok(out)
}

pub fn parse_int_poly(s: &str) -> Result<IntPoly, AlgebraError> {
    if s.trim() == "0" {
        return Ok(IntPoly::zero(Integers));
    }
    Ok(IntPoly::from_terms(Integers, parse_terms(s)?.into_iter().map(|(c, m)| (m, c))))
}

pub fn parse_gf2_poly(s: &str) -> Result<Gf2Poly, AlgebraError> {
    let p = parse_int_poly(s)?;
    Ok(p.reduce_mod2())
}

impl std::str::FromStr for Gf2Poly {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_gf2_poly(s)
    }
}

impl std::str::FromStr for IntPoly {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_int_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::Gf2;

    #[test]
    fn b12_prints_in_canonical_order() {
        let p = Gf2Poly::from_monomials([
            Monomial::from_vars([Var::y(1, 1), Var::x(1, 2)]),
            Monomial::from_vars([Var::x(1, 1), Var::y(1, 2)]),
        ]);
        assert_eq!(p.to_string(), "x1_1*y1_2 + y1_1*x1_2");
        assert_eq!(parse_gf2_poly("x1_1*y1_2 + y1_1*x1_2").unwrap(), p);
    }

    #[test]
    fn integer_signs_and_exponents() {
        let p = parse_int_poly("x1_1^2 - 3*y1_1 + 2").unwrap();
        assert_eq!(p.to_string(), "x1_1^2 - 3*y1_1 + 2");
        let q = parse_int_poly("-x1_1 + z_2").unwrap();
        assert_eq!(q.to_string(), "-x1_1 + z_2");
        assert_eq!(Gf2Poly::zero(Gf2).to_string(), "0");
        assert!(parse_int_poly("0").unwrap().is_zero());
    }

    #[test]
    fn parse_errors() {
        assert!(parse_int_poly("").is_err());
        assert!(parse_int_poly("x1_1 +").is_err());
        assert!(parse_int_poly("x1_1 * * y1_1").is_err());
        assert!(parse_int_poly("w").is_err());
    }

    #[test]
    fn reduction_on_parse() {
        let p = parse_gf2_poly("2*x1_1 + y1_1").unwrap();
        assert_eq!(p.to_string(), "y1_1");
    }
}
