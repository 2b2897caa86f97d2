use std::fmt;

use smallvec::SmallVec;

use super::field::{Field, FieldScalar};
use super::subspace::Subspace;
use super::vector::{Vector, MAX_LEN};
use super::LinalgError;

/// Dense matrix over GF(2) or GF(3), stored as packed rows.
///
/// Vectors are rows and matrices act on the right: the image of `v` under
/// `g` is `v * g`, and row `i` of `g` is the image of the `i`-th unit
/// vector. Column count is capped at 64; row count is unbounded.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    field: Field,
    cols: usize,
    rows: SmallVec<[Vector; 8]>,
}

impl FieldMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        assert!(cols <= MAX_LEN, "matrix has {cols} columns, at most {MAX_LEN} supported");
        FieldMatrix {
            field,
            cols,
            rows: (0..rows).map(|_| Vector::zero(field, cols)).collect(),
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        FieldMatrix {
            field,
            cols: n,
            rows: (0..n).map(|i| Vector::unit(field, n, i)).collect(),
        }
    }

    pub fn scalar(field: Field, n: usize, c: u8) -> Self {
        FieldMatrix::identity(field, n).scale(c)
    }

    pub fn from_rows(field: Field, cols: usize, rows: impl IntoIterator<Item = Vector>) -> Self {
        let rows: SmallVec<[Vector; 8]> = rows.into_iter().collect();
        for r in &rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            assert_eq!(r.field(), field, "row field mismatch");
        }
        FieldMatrix { field, cols, rows }
    }

    /// Build from integer entries (reduced mod q). All rows must have equal length.
    pub fn from_values<R: AsRef<[i64]>>(field: Field, rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        FieldMatrix::from_rows(
            field,
            cols,
            rows.iter().map(|r| {
                assert_eq!(r.as_ref().len(), cols);
                Vector::from_values(field, r.as_ref())
            }),
        )
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &Vector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.rows[i].get(j)
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldScalar {
        FieldScalar::new(self.field, self.get(i, j) as i64)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: u8) {
        self.rows[i].set(j, value)
    }

    pub fn push_row(&mut self, v: Vector) {
        assert_eq!(v.len(), self.cols);
        self.rows.push(v);
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, r)| r.planes() == (1u64 << i, 0))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vector::is_zero)
    }

    /// `v * self`.
    #[inline]
    pub fn apply(&self, v: &Vector) -> Vector {
        debug_assert_eq!(v.len(), self.nrows());
        let (mut p, mut n) = v.planes();
        let mut acc = Vector::zero(self.field, self.cols);
        while p != 0 {
            let j = p.trailing_zeros() as usize;
            acc = acc.add(&self.rows[j]);
            p &= p - 1;
        }
        while n != 0 {
            let j = n.trailing_zeros() as usize;
            acc = acc.sub(&self.rows[j]);
            n &= n - 1;
        }
        acc
    }

    pub fn checked_mul(&self, other: &FieldMatrix) -> Result<FieldMatrix, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.cols != other.nrows() {
            return Err(LinalgError::DimensionMismatch {
                left: (self.nrows(), self.cols),
                right: (other.nrows(), other.cols),
            });
        }
        Ok(self.mul(other))
    }

    /// Matrix product; panics on a dimension mismatch (see [`FieldMatrix::checked_mul`]).
    #[inline]
    pub fn mul(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.nrows(), "inner dimensions disagree");
        FieldMatrix {
            field: self.field,
            cols: other.cols,
            rows: self.rows.iter().map(|r| other.apply(r)).collect(),
        }
    }

    pub fn add(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!((self.nrows(), self.cols), (other.nrows(), other.cols));
        FieldMatrix {
            field: self.field,
            cols: self.cols,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &FieldMatrix) -> FieldMatrix {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn scale(&self, c: u8) -> FieldMatrix {
        FieldMatrix {
            field: self.field,
            cols: self.cols,
            rows: self.rows.iter().map(|r| r.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> FieldMatrix {
        self.scale(self.field.neg(1))
    }

    /// `self - I`; the operator whose kernel is the fixed space.
    pub fn minus_identity(&self) -> FieldMatrix {
        assert!(self.is_square());
        self.sub(&FieldMatrix::identity(self.field, self.cols))
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut t = FieldMatrix::zeros(self.field, self.cols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for j in 0..self.cols {
                let x = r.get(j);
                if x != 0 {
                    t.set(j, i, x);
                }
            }
        }
        t
    }

    /// Kronecker product; row index `(i, k)` of the result is `i * other.nrows() + k`.
    pub fn kron(&self, other: &FieldMatrix) -> FieldMatrix {
        let (r1, c1, r2, c2) = (self.nrows(), self.cols, other.nrows(), other.cols);
        let mut out = FieldMatrix::zeros(self.field, r1 * r2, c1 * c2);
        for i in 0..r1 {
            for j in 0..c1 {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(k, l);
                        if b != 0 {
                            out.set(i * r2 + k, j * c2 + l, self.field.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.cols);
        let mut out = self.clone();
        out.rows.extend(other.rows.iter().copied());
        out
    }

    /// Unique reduced row-echelon form together with the rank; zero rows are
    /// dropped from the returned matrix.
    pub fn rref(&self) -> (FieldMatrix, usize) {
        let mut rows: SmallVec<[Vector; 8]> = self.rows.iter().copied().filter(|r| !r.is_zero()).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let bit = 1u64 << col;
            let Some(p) = (rank..rows.len()).find(|&i| rows[i].support() & bit != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = if rows[rank].get(col) == 1 {
                rows[rank]
            } else {
                rows[rank].neg()
            };
            rows[rank] = pivot;
            for i in 0..rows.len() {
                if i != rank {
                    let c = rows[i].get(col);
                    if c != 0 {
                        rows[i] = rows[i].add_scaled(&pivot, self.field.neg(c));
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rows.truncate(rank);
        (
            FieldMatrix {
                field: self.field,
                cols: self.cols,
                rows,
            },
            rank,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Row space as a canonical subspace.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_echelon(self.field, self.cols, self.rref().0)
    }

    /// `{ v : v * self^T = 0 }`, i.e. the null space of `self` acting on column vectors.
    pub fn right_kernel(&self) -> Subspace {
        let (e, rank) = self.rref();
        let pivots: Vec<usize> = e.rows.iter().map(|r| r.leading().unwrap()).collect();
        let mut basis = Vec::with_capacity(self.cols - rank);
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = Vector::unit(self.field, self.cols, free);
            for (r, &pc) in e.rows.iter().zip(&pivots) {
                let c = r.get(free);
                if c != 0 {
                    v.set(pc, self.field.neg(c));
                }
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.field, self.cols, basis)
    }

    /// `{ v : v * self = 0 }`.
    pub fn left_kernel(&self) -> Subspace {
        self.transpose().right_kernel()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.cols
    }

    pub fn inverse(&self) -> Option<FieldMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.cols;
        let mut a: SmallVec<[Vector; 8]> = self.rows.clone();
        let mut b: SmallVec<[Vector; 8]> = (0..n).map(|i| Vector::unit(self.field, n, i)).collect();
        for col in 0..n {
            let bit = 1u64 << col;
            let p = (col..n).find(|&i| a[i].support() & bit != 0)?;
            a.swap(col, p);
            b.swap(col, p);
            if a[col].get(col) != 1 {
                a[col] = a[col].neg();
                b[col] = b[col].neg();
            }
            let (pa, pb) = (a[col], b[col]);
            for i in 0..n {
                if i != col {
                    let c = a[i].get(col);
                    if c != 0 {
                        let m = self.field.neg(c);
                        a[i] = a[i].add_scaled(&pa, m);
                        b[i] = b[i].add_scaled(&pb, m);
                    }
                }
            }
        }
        Some(FieldMatrix {
            field: self.field,
            cols: n,
            rows: b,
        })
    }

    pub fn determinant(&self) -> u8 {
        assert!(self.is_square());
        let n = self.cols;
        let mut a: SmallVec<[Vector; 8]> = self.rows.clone();
        let mut det = 1u8;
        for col in 0..n {
            let bit = 1u64 << col;
            let Some(p) = (col..n).find(|&i| a[i].support() & bit != 0) else {
                return 0;
            };
            if p != col {
                a.swap(col, p);
                det = self.field.neg(det);
            }
            let pivot = a[col];
            let pv = pivot.get(col);
            det = self.field.mul(det, pv);
            let pinv = self.field.inv(pv).unwrap();
            for i in col + 1..n {
                let c = a[i].get(col);
                if c != 0 {
                    a[i] = a[i].add_scaled(&pivot, self.field.neg(self.field.mul(c, pinv)));
                }
            }
        }
        det
    }

    pub fn pow(&self, mut e: u64) -> FieldMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = FieldMatrix::identity(self.field, self.cols);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of an invertible square matrix, searched up to `limit`.
    pub fn order_bounded(&self, limit: u64) -> Option<u64> {
        let mut g = self.clone();
        for k in 1..=limit {
            if g.is_identity() {
                return Some(k);
            }
            g = g.mul(self);
        }
        None
    }

    /// Multiplicative order; panics if it exceeds the order of GL(n, q) bound used here.
    pub fn order(&self) -> u64 {
        self.order_bounded(1 << 20).expect("matrix is singular or has enormous order")
    }

    /// Conjugate `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &FieldMatrix, other_inv: &FieldMatrix) -> FieldMatrix {
        other_inv.mul(self).mul(other)
    }

    /// Flatten row-major into a vector of length `rows * cols` (at most 64).
    pub fn flatten(&self) -> Vector {
        let mut v = Vector::zero(self.field, self.nrows() * self.cols);
        for (i, r) in self.rows.iter().enumerate() {
            for j in 0..self.cols {
                v.set(i * self.cols + j, r.get(j));
            }
        }
        v
    }

    pub fn unflatten(v: &Vector, rows: usize, cols: usize) -> FieldMatrix {
        assert_eq!(v.len(), rows * cols);
        FieldMatrix::from_rows(v.field(), cols, (0..rows).map(|i| v.slice(i * cols, cols)))
    }

    pub fn to_values(&self) -> Vec<Vec<u8>> {
        self.rows.iter().map(|r| r.values()).collect()
    }
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.field)?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{r:?}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m3(rows: &[&[i64]]) -> FieldMatrix {
        FieldMatrix::from_values(Field::GF3, rows)
    }

    #[test]
    fn rref_of_zero_and_identity() {
        let z = FieldMatrix::zeros(Field::GF3, 3, 3);
        assert_eq!(z.rank(), 0);
        let i = FieldMatrix::identity(Field::GF3, 8);
        let (e, r) = i.rref();
        assert_eq!(r, 8);
        assert_eq!(e, i);
    }

    #[test]
    fn kernels_of_extremes() {
        let i = FieldMatrix::identity(Field::GF3, 5);
        assert_eq!(i.right_kernel().dim(), 0);
        let z = FieldMatrix::zeros(Field::GF3, 5, 5);
        assert_eq!(z.right_kernel().dim(), 5);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = m3(&[&[1, 2, 0, 1], &[2, 1, 1, 0], &[0, 0, 1, 2]]);
        let k = a.right_kernel();
        assert_eq!(k.dim(), 4 - a.rank());
        for v in k.basis().rows() {
            for r in a.rows() {
                assert_eq!(r.dot(v), 0);
            }
        }
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m3(&[&[1, 1, 0], &[0, 1, 2], &[2, 0, 1]]);
        let inv = a.inverse().expect("invertible");
        assert!(a.mul(&inv).is_identity());
        assert!(inv.mul(&a).is_identity());
        assert_ne!(a.determinant(), 0);
        let s = m3(&[&[1, 2], &[2, 1]]);
        assert!(s.inverse().is_none());
        assert_eq!(s.determinant(), 0);
        assert_eq!(m3(&[&[0, 1], &[2, 0]]).determinant(), 1);
    }

    #[test]
    fn checked_mul_rejects_bad_shapes() {
        let a = FieldMatrix::zeros(Field::GF3, 2, 3);
        assert!(a.checked_mul(&a).is_err());
        assert!(a.checked_mul(&FieldMatrix::zeros(Field::GF2, 3, 2)).is_err());
        assert!(a.checked_mul(&a.transpose()).is_ok());
    }

    #[test]
    fn kron_is_multiplicative() {
        let a = m3(&[&[1, 0], &[1, 1]]);
        let b = m3(&[&[0, 1], &[2, 0]]);
        let c = m3(&[&[1, 1], &[1, 2]]);
        let d = m3(&[&[2, 0], &[0, 1]]);
        assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn flatten_round_trip() {
        let a = m3(&[&[1, 0, 2], &[2, 1, 1]]);
        assert_eq!(FieldMatrix::unflatten(&a.flatten(), 2, 3), a);
    }
}
