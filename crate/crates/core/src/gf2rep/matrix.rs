//! Bit-packed vectors and matrices over the two-element field.
//!
//! Rows are stored 64 entries to a word; all kernels (multiply, echelon,
//! nullspace) work a word at a time.  Everything here is plain dense
//! linear algebra — the module-theoretic meaning lives one layer up.

/// Hard dimension cap.  Large enough for the regular module of any group
/// this crate handles, small enough that cubic algorithms stay cheap.
pub const MAX_DIM: usize = 1024;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

/// A row vector over GF(2).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GF2Vector {
    len: usize,
    words: Vec<u64>,
}

impl GF2Vector {
    pub fn zero(len: usize) -> GF2Vector {
        assert!(len <= MAX_DIM, "vector length {len} exceeds {MAX_DIM}");
        GF2Vector { len, words: vec![0; words_for(len)] }
    }

    pub fn unit(len: usize, index: usize) -> GF2Vector {
        let mut v = GF2Vector::zero(len);
        v.set(index, true);
        v
    }

    pub fn from_support(len: usize, support: &[usize]) -> GF2Vector {
        let mut v = GF2Vector::zero(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len);
        self.words[index / 64] >> (index % 64) & 1 == 1
    }

    pub fn set(&mut self, index: usize, bit: bool) {
        assert!(index < self.len);
        let mask = 1u64 << (index % 64);
        if bit {
            self.words[index / 64] |= mask;
        } else {
            self.words[index / 64] &= !mask;
        }
    }

    pub fn xor_with(&mut self, other: &GF2Vector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit, if any.
    pub fn leading_bit(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Indices of all set bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    /// Number of set bits.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Standard dot product (parity of the AND).
    pub fn dot(&self, other: &GF2Vector) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut parity = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            parity ^= a & b;
        }
        parity.count_ones() % 2 == 1
    }
}

/// A dense matrix over GF(2) with bit-packed rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GF2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl GF2Matrix {
    pub fn zero(rows: usize, cols: usize) -> GF2Matrix {
        assert!(rows <= MAX_DIM && cols <= MAX_DIM, "{rows}x{cols} exceeds {MAX_DIM}");
        let words_per_row = words_for(cols).max(1);
        GF2Matrix { rows, cols, words_per_row, data: vec![0; rows * words_per_row] }
    }

    pub fn identity(n: usize) -> GF2Matrix {
        let mut m = GF2Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[GF2Vector], cols: usize) -> GF2Matrix {
        let mut m = GF2Matrix::zero(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            debug_assert_eq!(r.len(), cols);
            m.row_words_mut(i).copy_from_slice(&r.words);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols);
        self.row_words(i)[j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        assert!(i < self.rows && j < self.cols);
        let mask = 1u64 << (j % 64);
        if bit {
            self.row_words_mut(i)[j / 64] |= mask;
        } else {
            self.row_words_mut(i)[j / 64] &= !mask;
        }
    }

    pub fn row(&self, i: usize) -> GF2Vector {
        GF2Vector { len: self.cols, words: self.row_words(i).to_vec() }
    }

    pub fn set_row(&mut self, i: usize, v: &GF2Vector) {
        debug_assert_eq!(v.len(), self.cols);
        self.row_words_mut(i).copy_from_slice(&v.words);
    }

    fn xor_row_into(&mut self, dst: usize, src_words: &[u64]) {
        for (a, b) in self.row_words_mut(dst).iter_mut().zip(src_words) {
            *a ^= b;
        }
    }

    pub fn xor_with(&mut self, other: &GF2Matrix) {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &GF2Vector) -> GF2Vector {
        debug_assert_eq!(v.len(), self.rows);
        let mut acc = GF2Vector::zero(self.cols);
        for (k, &w) in v.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let i = k * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                for (a, b) in acc.words.iter_mut().zip(self.row_words(i)) {
                    *a ^= b;
                }
            }
        }
        acc
    }

    /// Matrix product: `self * rhs` acting on row vectors as v ↦ v·self·rhs.
    pub fn mul(&self, rhs: &GF2Matrix) -> GF2Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = GF2Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, &w) in self.row_words(i).iter().enumerate() {
                let mut bits = w;
                while bits != 0 {
                    let j = k * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let src = rhs.row_words(j).to_vec();
                    out.xor_row_into(i, &src);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> GF2Matrix {
        let mut out = GF2Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for (k, &w) in self.row_words(i).iter().enumerate() {
                let mut bits = w;
                while bits != 0 {
                    let j = k * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn row_echelon(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..self.cols {
            let Some(pivot_row) =
                (next_row..self.rows).find(|&r| self.get(r, col)) else { continue };
            if pivot_row != next_row {
                for k in 0..self.words_per_row {
                    self.data.swap(
                        pivot_row * self.words_per_row + k,
                        next_row * self.words_per_row + k,
                    );
                }
            }
            let src = self.row_words(next_row).to_vec();
            for r in 0..self.rows {
                if r != next_row && self.get(r, col) {
                    self.xor_row_into(r, &src);
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().row_echelon().len()
    }

    /// A basis (as row vectors of length `cols`) of {x : self · xᵀ = 0},
    /// ordered by free column.
    pub fn right_nullspace(&self) -> Vec<GF2Vector> {
        let mut reduced = self.clone();
        let pivots = reduced.row_echelon();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for &p in &pivots {
                s[p] = true;
            }
            s
        };
        let mut basis = Vec::new();
        for (free, _) in pivot_set.iter().enumerate().filter(|(_, &piv)| !piv) {
            let mut x = GF2Vector::zero(self.cols);
            x.set(free, true);
            for (row, &p) in pivots.iter().enumerate() {
                if reduced.get(row, free) {
                    x.set(p, true);
                }
            }
            basis.push(x);
        }
        basis
    }

    /// {x : x · self = 0}, the kernel of the row action.
    pub fn left_nullspace(&self) -> Vec<GF2Vector> {
        self.transpose().right_nullspace()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == GF2Matrix::identity(self.rows)
    }

    pub fn is_permutation_matrix(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let mut col_seen = vec![false; self.cols];
        for i in 0..self.rows {
            let row = self.row(i);
            if row.weight() != 1 {
                return false;
            }
            let j = row.leading_bit().unwrap();
            if col_seen[j] {
                return false;
            }
            col_seen[j] = true;
        }
        true
    }
}

/// An incrementally built row space in reduced echelon form.
///
/// Inserts keep every pivot column cleared in all other rows, so
/// membership and coordinates come straight from the pivot bits.
#[derive(Debug, Clone)]
pub struct RowBasis {
    cols: usize,
    rows: Vec<GF2Vector>,
    pivots: Vec<usize>,
}

impl RowBasis {
    pub fn new(cols: usize) -> RowBasis {
        RowBasis { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[GF2Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn reduce(&self, v: &mut GF2Vector) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_with(row);
            }
        }
    }

    /// Add `v` to the span.  Returns false if it was already inside.
    pub fn insert(&mut self, mut v: GF2Vector) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        self.reduce(&mut v);
        let Some(pivot) = v.leading_bit() else { return false };
        for row in &mut self.rows {
            if row.get(pivot) {
                row.xor_with(&v);
            }
        }
        self.rows.push(v);
        self.pivots.push(pivot);
        true
    }

    pub fn contains(&self, v: &GF2Vector) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    /// Coordinates of `v` in this basis (row order), if it lies in the span.
    pub fn express(&self, v: &GF2Vector) -> Option<Vec<bool>> {
        let coords: Vec<bool> = self.pivots.iter().map(|&p| v.get(p)).collect();
        let mut check = v.clone();
        for (row, &c) in self.rows.iter().zip(&coords) {
            if c {
                check.xor_with(row);
            }
        }
        check.is_zero().then_some(coords)
    }

    pub fn as_matrix(&self) -> GF2Matrix {
        GF2Matrix::from_rows(&self.rows, self.cols)
    }
}
