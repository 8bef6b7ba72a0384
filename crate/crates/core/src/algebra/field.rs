//! Binary finite fields GF(2^k) with a fixed table of irreducible moduli.
//!
//! Elements are stored as `u64` bit patterns: bit `i` is the coefficient of
//! `x^i` in the residue modulo the table polynomial. Degrees up to 16 are
//! public; degrees up to 32 exist so that a single quadratic extension of any
//! public field is available.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// Largest extension degree accepted by [`make_field`].
pub const MAX_PUBLIC_DEGREE: u32 = 16;
/// Largest degree present in the modulus table.
pub const MAX_TABLE_DEGREE: u32 = 32;

/// Irreducible polynomials over GF(2), indexed by degree. Bit `i` is the
/// coefficient of `x^i`. Degree 1 uses `x + 1`.
const MODULI: [u64; 33] = [
    0,
    0x3,
    0x7,
    0xb,
    0x13,
    0x25,
    0x43,
    0x83,
    0x11b,
    0x211,
    0x409,
    0x805,
    0x1053,
    0x201b,
    0x4443,
    0x8003,
    0x1002b,
    0x20009,
    0x40009,
    0x80027,
    0x100009,
    0x200005,
    0x400003,
    0x800021,
    0x100001b,
    0x2000009,
    0x400001b,
    0x8000027,
    0x10000003,
    0x20000005,
    0x40000003,
    0x80000009,
    0x10000008d,
];

/// Descriptor of GF(2^k).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldDesc {
    k: u32,
    modulus: u64,
}

/// A field element, as a bit pattern of length `k`.
pub type Fe = u64;

/// Returns the descriptor of GF(2^k) for `1 <= k <= 16`.
pub fn make_field(k: u32) -> Result<FieldDesc, AlgebraError> {
    if k == 0 || k > MAX_PUBLIC_DEGREE {
        return Err(AlgebraError::UnsupportedDegree(k));
    }
    Ok(FieldDesc::table(k))
}

struct LogTables {
    log: Vec<u32>,
    exp: Vec<u64>,
}

static LOG_TABLES: [OnceLock<Option<LogTables>>; 17] = [const { OnceLock::new() }; 17];

impl FieldDesc {
    /// Table lookup without the public range restriction (1..=32).
    pub(crate) fn table(k: u32) -> FieldDesc {
        assert!((1..=MAX_TABLE_DEGREE).contains(&k), "no modulus for degree {k}");
        FieldDesc { k, modulus: MODULI[k as usize] }
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of elements, 2^k.
    pub fn order(&self) -> u64 {
        1u64 << self.k
    }

    pub fn contains(&self, a: Fe) -> bool {
        a >> self.k == 0
    }

    /// Descriptor of the quadratic extension GF(2^{2k}).
    pub fn quadratic_extension(&self) -> Option<FieldDesc> {
        (2 * self.k <= MAX_TABLE_DEGREE).then(|| FieldDesc::table(2 * self.k))
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a == 0 || b == 0 {
            return 0;
        }
        if let Some(t) = self.log_tables() {
            return t.exp[(t.log[a as usize] + t.log[b as usize]) as usize];
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: Fe, b: Fe) -> Fe {
        // carry-less product, then reduction
        let mut prod: u128 = 0;
        let mut x = a as u128;
        let mut y = b;
        while y != 0 {
            if y & 1 == 1 {
                prod ^= x;
            }
            y >>= 1;
            x <<= 1;
        }
        let m = self.modulus as u128;
        let k = self.k;
        let mut deg = 127 - prod.leading_zeros() as i32;
        while prod != 0 && deg >= k as i32 {
            prod ^= m << (deg as u32 - k);
            deg = 127 - prod.leading_zeros() as i32;
        }
        prod as u64
    }

    fn log_tables(&self) -> Option<&'static LogTables> {
        if self.k > MAX_PUBLIC_DEGREE {
            return None;
        }
        LOG_TABLES[self.k as usize]
            .get_or_init(|| {
                let order = (1u64 << self.k) - 1;
                let g = (2..=order.max(1))
                    .chain(std::iter::once(1))
                    .find(|&g| self.is_generator(g))?;
                let mut log = vec![0u32; (order + 1) as usize];
                let mut exp = vec![0u64; (2 * order) as usize];
                let mut v = 1u64;
                for i in 0..order {
                    exp[i as usize] = v;
                    exp[(i + order) as usize] = v;
                    log[v as usize] = i as u32;
                    v = self.mul_slow(v, g);
                }
                Some(LogTables { log, exp })
            })
            .as_ref()
    }

    fn is_generator(&self, g: Fe) -> bool {
        let order = (1u64 << self.k) - 1;
        if order == 1 {
            return g == 1;
        }
        prime_factors(order)
            .into_iter()
            .all(|p| self.pow_slow(g, order / p) != 1)
    }

    fn pow_slow(&self, mut a: Fe, mut e: u64) -> Fe {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul_slow(r, a);
            }
            a = self.mul_slow(a, a);
            e >>= 1;
        }
        r
    }

    pub fn square(&self, a: Fe) -> Fe {
        self.mul(a, a)
    }

    pub fn pow(&self, mut a: Fe, mut e: u64) -> Fe {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a == 0 {
            return None;
        }
        Some(self.pow(a, self.order() - 2))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Option<Fe> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// The unique square root: a^(2^(k-1)).
    pub fn sqrt(&self, a: Fe) -> Fe {
        let mut r = a;
        for _ in 1..self.k {
            r = self.square(r);
        }
        r
    }

    /// Absolute trace to GF(2): a + a^2 + ... + a^(2^(k-1)).
    pub fn trace(&self, a: Fe) -> u8 {
        let mut t = a;
        let mut s = a;
        for _ in 1..self.k {
            s = self.square(s);
            t ^= s;
        }
        debug_assert!(t <= 1);
        t as u8
    }

    /// Solves `x^2 + x = a`. Returns `None` when the absolute trace of `a` is 1.
    pub fn artin_schreier_solve(&self, a: Fe) -> Option<Fe> {
        if self.trace(a) != 0 {
            return None;
        }
        if self.k % 2 == 1 {
            // half-trace
            let mut x = a;
            let mut s = a;
            for _ in 0..(self.k - 1) / 2 {
                s = self.square(self.square(s));
                x ^= s;
            }
            return Some(x);
        }
        // Even degree: x = sum_{i<j} d^(2^i) a^(2^j) with Tr(d) = 1.
        let d = (1..self.order()).find(|&d| self.trace(d) == 1)?;
        let mut x = 0;
        let mut dpows = Vec::with_capacity(self.k as usize);
        let mut apows = Vec::with_capacity(self.k as usize);
        let (mut dp, mut ap) = (d, a);
        for _ in 0..self.k {
            dpows.push(dp);
            apows.push(ap);
            dp = self.square(dp);
            ap = self.square(ap);
        }
        let mut prefix = 0;
        for j in 1..self.k as usize {
            prefix ^= dpows[j - 1];
            x ^= self.mul(prefix, apows[j]);
        }
        debug_assert_eq!(self.square(x) ^ x, a);
        Some(x)
    }

    /// Smallest element (as an integer) of absolute trace 1.
    pub fn trace_one_element(&self) -> Fe {
        (1..self.order())
            .find(|&d| self.trace(d) == 1)
            .expect("every finite field of characteristic 2 has trace-one elements")
    }

    /// Embedding of this field into its quadratic extension, given by the
    /// image of the generator `x`. The image is the smallest-index root of the
    /// modulus inside the subfield.
    pub fn embedding_into(&self, ext: &FieldDesc) -> Option<FieldEmbedding> {
        if ext.k % self.k != 0 {
            return None;
        }
        let order = ext.order() - 1;
        let g = find_primitive(ext)?;
        let beta = ext.pow(g, order / (self.order() - 1));
        let mut cand = 1u64;
        for _ in 0..self.order() - 1 {
            if self.eval_modulus(ext, cand) == 0 {
                return Some(FieldEmbedding { from: *self, to: *ext, image_of_x: cand });
            }
            cand = ext.mul(cand, beta);
        }
        None
    }

    fn eval_modulus(&self, ext: &FieldDesc, at: Fe) -> Fe {
        let mut acc = 0;
        for i in (0..=self.k).rev() {
            acc = ext.mul(acc, at);
            if (self.modulus >> i) & 1 == 1 {
                acc ^= 1;
            }
        }
        acc
    }
}

fn find_primitive(f: &FieldDesc) -> Option<Fe> {
    let order = f.order() - 1;
    if order == 1 {
        return Some(1);
    }
    let ps = prime_factors(order);
    (2..f.order()).find(|&g| ps.iter().all(|&p| f.pow(g, order / p) != 1))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A field homomorphism GF(2^k) -> GF(2^{k'}).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldEmbedding {
    pub from: FieldDesc,
    pub to: FieldDesc,
    image_of_x: Fe,
}

impl FieldEmbedding {
    pub fn apply(&self, a: Fe) -> Fe {
        let mut acc = 0;
        for i in (0..self.from.k).rev() {
            acc = self.to.mul(acc, self.image_of_x);
            if (a >> i) & 1 == 1 {
                acc ^= 1;
            }
        }
        acc
    }
}
