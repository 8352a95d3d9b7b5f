//! Dense matrices over a [`Field`], row-major.
//!
//! All eliminations produce canonical results: `rref` is the unique reduced
//! row echelon form, `kernel_basis` puts a unit vector in each free column,
//! `solve` zeroes every free variable. Shape mismatches in arithmetic are
//! caller bugs and panic with a message; singular/inconsistent systems are
//! ordinary outcomes and come back as `None`.

use super::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<u64>,
}

impl Mat {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, field, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: Field, rows: &[Vec<u64>]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Mat::zero(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                assert!(field.is_valid(x), "entry {x} not in field");
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Mat {
        let mut m = Mat::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u64) {
        self.data[i * self.cols + j] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u64::from(i == j)))
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add shape mismatch");
        let mut m = self.clone();
        for (a, &b) in m.data.iter_mut().zip(&other.data) {
            *a = self.field.add(*a, b);
        }
        m
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sub shape mismatch");
        let mut m = self.clone();
        for (a, &b) in m.data.iter_mut().zip(&other.data) {
            *a = self.field.sub(*a, b);
        }
        m
    }

    pub fn scale(&self, c: u64) -> Mat {
        let mut m = self.clone();
        for a in m.data.iter_mut() {
            *a = self.field.mul(*a, c);
        }
        m
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "mul shape mismatch: {}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols);
        let f = self.field;
        let mut m = Mat::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let cur = m.get(i, j);
                        m.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        m
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Mat::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vstack col mismatch");
        Mat::from_fn(self.field, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j)
            } else {
                other.get(i - self.rows, j)
            }
        })
    }

    pub fn column(&self, j: usize) -> Mat {
        Mat::from_fn(self.field, self.rows, 1, |i, _| self.get(i, j))
    }

    pub fn select_columns(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j))
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let (a, b) = (m.get(r, j), m.get(pr, j));
                    m.set(r, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = f.inv(m.get(r, c));
            for j in c..m.cols {
                m.set(r, j, f.mul(m.get(r, j), inv));
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Canonical basis of the right null space, one column per free column of
    /// the RREF (unit coefficient on the free column, back-substituted pivot
    /// coefficients above). Returns `cols x nullity`.
    pub fn kernel_basis(&self) -> Mat {
        let f = self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Mat::zero(f, self.cols, free.len());
        for (out, &fc) in free.iter().enumerate() {
            k.set(fc, out, 1);
            for (row, &pc) in pivots.iter().enumerate() {
                let v = r.get(row, fc);
                if v != 0 {
                    k.set(pc, out, f.neg(v));
                }
            }
        }
        k
    }

    /// Solve `self * X = b` column by column. Returns the canonical solution
    /// (free variables zero), or `None` if any column is inconsistent.
    /// Panics if `b` has a different number of rows.
    pub fn solve(&self, b: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, b.rows, "solve rhs row mismatch");
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None; // a pivot in the rhs block: inconsistent
        }
        let mut x = Mat::zero(self.field, self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(row, self.cols + j));
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Mat::identity(self.field, self.rows))?;
        // solve() guarantees self * x = I; for square full-rank that is a
        // two-sided inverse.
        if self.rank() == self.rows {
            Some(x)
        } else {
            None
        }
    }

    /// Indices of a column subset forming a basis of the column space
    /// (the pivot columns), plus that basis as a matrix.
    pub fn column_basis(&self) -> (Vec<usize>, Mat) {
        let (_, pivots) = self.rref();
        let basis = self.select_columns(&pivots);
        (pivots, basis)
    }

    /// Data describing the quotient of the ambient space k^rows by the column
    /// space of `self`: a basis of the image, standard basis vectors
    /// completing it, and the projection onto the quotient coordinates.
    pub fn quotient_data(&self) -> QuotientData {
        let f = self.field;
        let n = self.rows;
        let (_, image_basis) = self.column_basis();
        let r = image_basis.cols();
        let g = image_basis.hstack(&Mat::identity(f, n));
        let (_, pivots) = g.rref();
        // The first r pivots are the (independent) image columns; the rest
        // pick standard basis vectors that complete the basis.
        debug_assert!(pivots.len() == n);
        let completion: Vec<usize> = pivots[r..].iter().map(|&c| c - r).collect();
        let section = Mat::from_fn(f, n, n - r, |i, j| u64::from(i == completion[j]));
        let t = image_basis.hstack(&section);
        let t_inv = t.inverse().expect("basis completion is invertible");
        let projection = t_inv.select_rows(&(r..n).collect::<Vec<_>>());
        QuotientData { image_basis, section, projection }
    }
}

/// See [`Mat::quotient_data`]. `projection * section = I` on the quotient and
/// `projection * image_basis = 0`.
pub struct QuotientData {
    pub image_basis: Mat,
    pub section: Mat,
    pub projection: Mat,
}
