//! Linear algebra over F2 on packed 64-bit words.
//!
//! Used for code canonicalization, odd-dashing systems (one variable per
//! edge, one parity equation per bicolored 4-cycle), switching subspaces,
//! and mod-2 ranks of integer matrices.

/// A fixed-length vector over F2.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }
}

/// A matrix over F2, stored as a list of packed rows.
#[derive(Clone, Debug)]
pub struct BitMatrix {
    rows: Vec<BitVec>,
    ncols: usize,
}

impl BitMatrix {
    pub fn new(ncols: usize) -> Self {
        BitMatrix {
            rows: Vec::new(),
            ncols,
        }
    }

    pub fn push_row(&mut self, row: BitVec) {
        assert_eq!(row.len(), self.ncols);
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduced row echelon form; returns the reduced rows (zero rows dropped)
    /// and the pivot column of each.
    fn rref(&self) -> (Vec<BitVec>, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.ncols {
            let Some(i) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(r, i);
            let pivot_row = rows[r].clone();
            for (j, row) in rows.iter_mut().enumerate() {
                if j != r && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        (rows, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// One solution of `self * x = rhs` with free variables set to zero,
    /// or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &[bool]) -> Option<BitVec> {
        assert_eq!(rhs.len(), self.nrows());
        // Augment with the right-hand side as an extra column.
        let mut aug = BitMatrix::new(self.ncols + 1);
        for (row, &b) in self.rows.iter().zip(rhs) {
            let mut extended = BitVec::zeros(self.ncols + 1);
            for i in row.ones() {
                extended.set(i, true);
            }
            extended.set(self.ncols, b);
            aug.push_row(extended);
        }
        let (rows, pivots) = aug.rref();
        let mut solution = BitVec::zeros(self.ncols);
        for (row, &p) in rows.iter().zip(&pivots) {
            if p == self.ncols {
                return None; // row reads 0 = 1
            }
            solution.set(p, row.get(self.ncols));
        }
        Some(solution)
    }

    /// Basis of the kernel of `self`, one vector per free column, in
    /// ascending free-column order.
    pub fn nullspace(&self) -> Vec<BitVec> {
        let (rows, pivots) = self.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = BitVec::zeros(self.ncols);
            v.set(free, true);
            for (row, &p) in rows.iter().zip(&pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Incrementally maintained row echelon basis; supports reduction of new
/// vectors against the span collected so far.
#[derive(Clone, Debug)]
pub struct Echelon {
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
    ncols: usize,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            rows: Vec::new(),
            pivots: Vec::new(),
            ncols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` modulo the current span. The result is zero iff `v` lies
    /// in the span.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.ncols);
        let mut w = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w.get(p) {
                w.xor_assign(row);
            }
        }
        w
    }

    /// Insert `v` into the basis if independent; returns true if the rank grew.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        let w = self.reduce(v);
        match w.first_one() {
            Some(p) => {
                self.rows.push(w);
                self.pivots.push(p);
                true
            }
            None => false,
        }
    }
}
