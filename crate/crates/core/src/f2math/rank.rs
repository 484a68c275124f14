//! Square GF(2) matrices and their rank.

use std::fmt;

/// An `L × L` bit matrix, rows packed into `u64` words (column `j` of a row
/// is bit `j % 64` of word `j / 64`).
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    dim: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        let stride = dim.div_ceil(64);
        BitMatrix { dim, stride, data: vec![0; stride * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Self {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "row {i} has {} bits, expected {dim}", row.len());
            for (j, &b) in row.iter().enumerate() {
                m.set(i, j, b);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Words per packed row.
    pub fn stride(&self) -> usize {
        self.stride
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.dim && j < self.dim);
        (self.data[i * self.stride + j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        assert!(i < self.dim && j < self.dim);
        let w = &mut self.data[i * self.stride + j / 64];
        let mask = 1u64 << (j % 64);
        if v {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    /// Mutable packed row. Callers must leave bits past `dim` clear.
    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let s = self.stride;
        let (head, tail) = self.data.split_at_mut(hi * s);
        head[lo * s..(lo + 1) * s].swap_with_slice(&mut tail[..s]);
    }

    /// `row[dst] ^= row[src]`.
    pub fn add_row(&mut self, dst: usize, src: usize) {
        assert_ne!(dst, src);
        let s = self.stride;
        for w in 0..s {
            let v = self.data[src * s + w];
            self.data[dst * s + w] ^= v;
        }
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix({}x{})", self.dim, self.dim)?;
        for i in 0..self.dim.min(16) {
            let row: String = (0..self.dim.min(64)).map(|j| if self.get(i, j) { '1' } else { '0' }).collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

/// Rank over GF(2) by Gaussian elimination. Consumes the matrix.
pub fn gf2_rank(mut m: BitMatrix) -> usize {
    let (dim, stride) = (m.dim, m.stride);
    let mut rank = 0;
    for col in 0..dim {
        if rank == dim {
            break;
        }
        let w = col / 64;
        let mask = 1u64 << (col % 64);
        let Some(pivot) = (rank..dim).find(|&r| m.data[r * stride + w] & mask != 0) else {
            continue;
        };
        m.swap_rows(rank, pivot);
        let (head, tail) = m.data.split_at_mut((rank + 1) * stride);
        let pivot_row = &head[rank * stride..];
        for row in tail.chunks_exact_mut(stride) {
            if row[w] & mask != 0 {
                // Words left of w are already zero in the pivot row.
                for (d, &p) in row[w..].iter_mut().zip(&pivot_row[w..]) {
                    *d ^= p;
                }
            }
        }
        rank += 1;
    }
    rank
}
