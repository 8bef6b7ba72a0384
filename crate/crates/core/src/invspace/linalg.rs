//! Bit-packed elimination over GF(2) and dense elimination over GF(2^k).

use crate::algebra::{Fe, FieldDesc};

/// A GF(2) vector packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> BitVec {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> BitVec {
        let mut v = BitVec::zeros(len);
        for i in idx {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        if self.get(i) != b {
            self.flip(i);
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a ^= *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Incrementally maintained row space over GF(2). Every stored row has a
/// distinct pivot (its first set bit) and is zero at the pivots of the rows
/// stored before it. Optionally tracks which inserted rows each stored row
/// combines.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
    is_pivot: Vec<bool>,
    history: Option<Vec<BitVec>>,
    width_history: usize,
    inserted: usize,
}

impl Echelon {
    pub fn new(width: usize) -> Echelon {
        Echelon {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
            is_pivot: vec![false; width],
            history: None,
            width_history: 0,
            inserted: 0,
        }
    }

    /// Tracks combinations of up to `capacity` inserted rows.
    pub fn with_history(width: usize, capacity: usize) -> Echelon {
        let mut e = Echelon::new(width);
        e.history = Some(Vec::new());
        e.width_history = capacity;
        e
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    /// Reduces `v` against the stored rows; returns the residue and the
    /// stored-row combination used.
    pub fn reduce(&self, v: &BitVec) -> (BitVec, Vec<usize>) {
        let mut v = v.clone();
        let mut used = Vec::new();
        for (k, (row, &p)) in self.rows.iter().zip(self.pivots.iter()).enumerate() {
            if v.get(p) {
                v.xor_assign(row);
                used.push(k);
            }
        }
        (v, used)
    }

    /// Whether `v` lies in the row space.
    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Inserts a row; returns true if the rank grew.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.width);
        let idx = self.inserted;
        self.inserted += 1;
        let (r, used) = self.reduce(v);
        let Some(p) = r.first_one() else {
            return false;
        };
        if let Some(h) = self.history.as_mut() {
            let mut comb = BitVec::zeros(self.width_history);
            comb.flip(idx);
            for k in used {
                comb.xor_assign(&h[k]);
            }
            h.push(comb);
        }
        self.rows.push(r);
        self.pivots.push(p);
        self.is_pivot[p] = true;
        true
    }

    /// Expresses `v` as a sum of inserted rows (indices in insertion order),
    /// or `None` if it is outside the row space. Needs history tracking.
    pub fn solve(&self, v: &BitVec) -> Option<Vec<usize>> {
        let h = self.history.as_ref().expect("echelon built without history");
        let (r, used) = self.reduce(v);
        if !r.is_zero() {
            return None;
        }
        let mut comb = BitVec::zeros(self.width_history);
        for k in used {
            comb.xor_assign(&h[k]);
        }
        Some(comb.ones().collect())
    }

    /// Reduced row echelon form, rows sorted by pivot.
    pub fn rref(&self) -> Vec<BitVec> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| self.pivots[k]);
        let mut rows: Vec<BitVec> = order.iter().map(|&k| self.rows[k].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&k| self.pivots[k]).collect();
        for a in (0..rows.len()).rev() {
            for b in 0..rows.len() {
                if b != a && rows[b].get(pivots[a]) {
                    let ra = rows[a].clone();
                    rows[b].xor_assign(&ra);
                }
            }
        }
        rows
    }

    /// A basis of `{a : M a = 0}` where `M` has the stored rows, in reduced
    /// row echelon form.
    pub fn kernel(&self) -> Vec<BitVec> {
        let rref = self.rref();
        let mut pivots: Vec<usize> = self.pivots.clone();
        pivots.sort_unstable();
        let mut out = Echelon::new(self.width);
        for f in (0..self.width).filter(|&c| !self.is_pivot[c]) {
            let mut v = BitVec::zeros(self.width);
            v.flip(f);
            for (row, &p) in rref.iter().zip(pivots.iter()) {
                if row.get(f) {
                    v.flip(p);
                }
            }
            out.insert(&v);
        }
        out.rref()
    }
}

/// Rank of a dense matrix over GF(2^k).
pub fn field_rank(field: &FieldDesc, rows: &[Vec<Fe>]) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    field_rref(field, &mut rows.to_vec(), cols).len()
}

/// Solves `M a = b` over GF(2^k) for `a`; `None` if inconsistent. Free
/// unknowns are set to zero.
pub fn field_solve(field: &FieldDesc, rows: &[Vec<Fe>], rhs: &[Fe]) -> Option<Vec<Fe>> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Fe>> = rows.iter().zip(rhs.iter()).map(|(r, &b)| r.iter().copied().chain([b]).collect()).collect();
    let pivots = field_rref(field, &mut m, cols);
    if m[pivots.len()..].iter().any(|r| r[cols] != 0) {
        return None;
    }
    let mut a = vec![0; cols];
    for (r, &c) in pivots.iter().enumerate() {
        a[c] = m[r][cols];
    }
    Some(a)
}

/// Reduced row echelon form over GF(2^k) in place; returns pivot columns.
fn field_rref(field: &FieldDesc, m: &mut [Vec<Fe>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = field.inv(m[rank][c]).expect("nonzero pivot");
        let pivot_row: Vec<Fe> = m[rank].iter().map(|&e| field.mul(e, inv)).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (e, &pe) in row.iter_mut().zip(pivot_row.iter()) {
                    *e ^= field.mul(f, pe);
                }
            }
        }
        m[rank] = pivot_row;
        pivots.push(c);
        rank += 1;
    }
    pivots
}

/// Basis of `{a : M a = 0}` over GF(2^k) for an `r x cols` matrix.
pub fn field_kernel(field: &FieldDesc, rows: &[Vec<Fe>], cols: usize) -> Vec<Vec<Fe>> {
    let mut m = rows.to_vec();
    let pivots = field_rref(field, &mut m, cols);
    let mut out = Vec::new();
    for f in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0; cols];
        v[f] = 1;
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = m[r][f];
        }
        out.push(v);
    }
    out
}

/// Inverse of a square matrix over GF(2^k).
pub fn field_inverse(field: &FieldDesc, a: &[Vec<Fe>]) -> Option<Vec<Vec<Fe>>> {
    let n = a.len();
    let mut m: Vec<Vec<Fe>> =
        a.iter().enumerate().map(|(i, row)| row.iter().copied().chain((0..n).map(|j| Fe::from(i == j))).collect()).collect();
    let pivots = field_rref(field, &mut m, n);
    if pivots.len() < n {
        return None;
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}
