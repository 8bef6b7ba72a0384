//! Variable identifiers packed into a `u32`.
//!
//! The packing realizes the serialization order directly: coordinate
//! variables sort by (vector index, kind X < Y < Z, coordinate index), then
//! the abstract Gram symbols, then formal parameters.

use std::fmt;

use super::AlgebraError;

const ABSTRACT_Q: u32 = 0xC000_0000;
const ABSTRACT_B: u32 = 0xD000_0000;
const ABSTRACT_OTHER: u32 = 0xE000_0000;
const PARAM: u32 = 0xF000_0000;
const MAX_VECTOR: u32 = 0x7FFF;
const MAX_COORD: u32 = 0x0FFF;

/// Decoded view of a [`Var`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VariableId {
    /// `x_t^(i)`
    X { t: u32, i: u32 },
    /// `y_t^(i)`
    Y { t: u32, i: u32 },
    /// `z^(i)`
    Z { i: u32 },
    /// Abstract `Q^(i)` used in relation polynomials.
    GramQ { i: u32 },
    /// Abstract `B^(ij)`, stored with `i < j`.
    GramB { i: u32, j: u32 },
    /// Abstract determinant symbol `D`.
    GramD,
    /// Abstract symbol `Delta`.
    GramDelta,
    /// Formal parameter; never carries a vector index.
    Param { id: u32 },
}

/// Coordinate kind of a coordinate variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoordKind {
    X = 0,
    Y = 1,
    Z = 2,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u32);

impl Var {
    pub fn x(t: u32, i: u32) -> Var {
        Var::coord(CoordKind::X, t, i)
    }

    pub fn y(t: u32, i: u32) -> Var {
        Var::coord(CoordKind::Y, t, i)
    }

    pub fn z(i: u32) -> Var {
        Var::coord(CoordKind::Z, 0, i)
    }

    pub fn coord(kind: CoordKind, t: u32, i: u32) -> Var {
        assert!(i >= 1 && i <= MAX_VECTOR, "vector index {i} out of range");
        assert!(t <= MAX_COORD, "coordinate index {t} out of range");
        Var((i << 16) | ((kind as u32) << 12) | t)
    }

    pub fn param(id: u32) -> Var {
        assert!(id < 0x0FFF_FFFF);
        Var(PARAM | id)
    }

    /// Abstract Gram variable `Q^(i)`.
    pub fn gram_q(i: u32) -> Var {
        assert!(i >= 1 && i < 0x1000);
        Var(ABSTRACT_Q | i)
    }

    /// Abstract Gram variable `B^(ij)`; the pair is stored sorted.
    pub fn gram_b(i: u32, j: u32) -> Var {
        assert!(i != j, "B^(ii) is not a Gram variable");
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        assert!(a >= 1 && b < 0x1000);
        Var(ABSTRACT_B | (a << 12) | b)
    }

    pub fn gram_d() -> Var {
        Var(ABSTRACT_OTHER)
    }

    pub fn gram_delta() -> Var {
        Var(ABSTRACT_OTHER | 1)
    }

    pub fn raw(self) -> u32 {
        self.0
    }

    pub fn id(self) -> VariableId {
        let v = self.0;
        if v >= PARAM {
            VariableId::Param { id: v & !PARAM }
        } else if v >= ABSTRACT_OTHER {
            if v & 1 == 0 {
                VariableId::GramD
            } else {
                VariableId::GramDelta
            }
        } else if v >= ABSTRACT_B {
            VariableId::GramB { i: (v >> 12) & 0xFFF, j: v & 0xFFF }
        } else if v >= ABSTRACT_Q {
            VariableId::GramQ { i: v & 0xFFF }
        } else {
            let i = v >> 16;
            let t = v & MAX_COORD;
            match (v >> 12) & 0xF {
                0 => VariableId::X { t, i },
                1 => VariableId::Y { t, i },
                _ => VariableId::Z { i },
            }
        }
    }

    /// Vector index for coordinate variables.
    pub fn vector(self) -> Option<u32> {
        (self.0 < ABSTRACT_Q).then_some(self.0 >> 16)
    }

    pub fn coord_kind(self) -> Option<CoordKind> {
        match self.id() {
            VariableId::X { .. } => Some(CoordKind::X),
            VariableId::Y { .. } => Some(CoordKind::Y),
            VariableId::Z { .. } => Some(CoordKind::Z),
            _ => None,
        }
    }

    pub fn is_param(self) -> bool {
        self.0 >= PARAM
    }

    pub fn is_coordinate(self) -> bool {
        self.0 < ABSTRACT_Q
    }

    /// Position of a coordinate variable inside a vector of dimension `n`,
    /// using the order `x_1..x_nu, y_1..y_nu, z`.
    pub fn position(self, n: usize) -> Option<usize> {
        let nu = n / 2;
        match self.id() {
            VariableId::X { t, .. } if t >= 1 && (t as usize) <= nu => Some(t as usize - 1),
            VariableId::Y { t, .. } if t >= 1 && (t as usize) <= nu => Some(nu + t as usize - 1),
            VariableId::Z { .. } if n % 2 == 1 => Some(2 * nu),
            _ => None,
        }
    }

    /// Inverse of [`Var::position`].
    pub fn at_position(n: usize, pos: usize, i: u32) -> Var {
        let nu = n / 2;
        assert!(pos < n);
        if pos < nu {
            Var::x(pos as u32 + 1, i)
        } else if pos < 2 * nu {
            Var::y((pos - nu) as u32 + 1, i)
        } else {
            Var::z(i)
        }
    }

    /// Parses the text form used by the polynomial serializer.
    pub fn parse(s: &str) -> Result<Var, AlgebraError> {
        let bad = || AlgebraError::Parse(format!("unknown variable `{s}`"));
        let num = |t: &str| t.parse::<u32>().map_err(|_| bad());
        if s == "D" {
            return Ok(Var::gram_d());
        }
        if s == "Delta" {
            return Ok(Var::gram_delta());
        }
        let (head, rest) = s.split_at(1);
        match head {
            "x" | "y" => {
                let (t, i) = rest.split_once('_').ok_or_else(bad)?;
                let (t, i) = (num(t)?, num(i)?);
                if t == 0 || i == 0 || i > MAX_VECTOR || t > MAX_COORD {
                    return Err(bad());
                }
                Ok(if head == "x" { Var::x(t, i) } else { Var::y(t, i) })
            }
            "z" => {
                let i = num(rest.strip_prefix('_').ok_or_else(bad)?)?;
                if i == 0 || i > MAX_VECTOR {
                    return Err(bad());
                }
                Ok(Var::z(i))
            }
            "c" => Ok(Var::param(num(rest)?)),
            "Q" => {
                let i = num(rest)?;
                if i == 0 || i >= 0x1000 {
                    return Err(bad());
                }
                Ok(Var::gram_q(i))
            }
            "B" => {
                let (i, j) = rest.split_once('_').ok_or_else(bad)?;
                let (i, j) = (num(i)?, num(j)?);
                if i == 0 || j == 0 || i == j || i.max(j) >= 0x1000 {
                    return Err(bad());
                }
                Ok(Var::gram_b(i, j))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.id() {
            VariableId::X { t, i } => write!(f, "x{t}_{i}"),
            VariableId::Y { t, i } => write!(f, "y{t}_{i}"),
            VariableId::Z { i } => write!(f, "z_{i}"),
            VariableId::GramQ { i } => write!(f, "Q{i}"),
            VariableId::GramB { i, j } => write!(f, "B{i}_{j}"),
            VariableId::GramD => write!(f, "D"),
            VariableId::GramDelta => write!(f, "Delta"),
            VariableId::Param { id } => write!(f, "c{id}"),
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
