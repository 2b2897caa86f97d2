use std::fmt;

use super::field::Field;
use super::matrix::FieldMatrix;
use super::vector::Vector;
use super::LinalgError;

/// A subspace of GF(q)^n held by its reduced row-echelon basis.
///
/// The echelon basis is unique, so two subspaces are equal exactly when
/// their stored bases are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: FieldMatrix,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: FieldMatrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: FieldMatrix::identity(field, ambient),
        }
    }

    pub fn from_vectors(field: Field, ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Self {
        let m = FieldMatrix::from_rows(field, ambient, vectors);
        Subspace::from_echelon(field, ambient, m.rref().0)
    }

    /// Wrap an already reduced basis (as returned by [`FieldMatrix::rref`]).
    pub(crate) fn from_echelon(field: Field, ambient: usize, basis: FieldMatrix) -> Self {
        debug_assert_eq!(basis.ncols(), ambient);
        Subspace {
            field,
            ambient,
            basis,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis(&self) -> &FieldMatrix {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Number of vectors, `q^dim`.
    pub fn size(&self) -> u128 {
        (self.field.order() as u128).pow(self.dim() as u32)
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    /// Reduce `v` against the echelon basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut r = *v;
        for b in self.basis.rows() {
            let pc = b.leading().unwrap();
            let c = r.get(pc);
            if c != 0 {
                r = r.add_scaled(b, self.field.neg(c));
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(other.basis.rows().iter().all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        Ok(Subspace::from_vectors(
            self.field,
            self.ambient,
            self.basis.rows().iter().chain(other.basis.rows()).copied(),
        ))
    }

    /// `{ x : x . s = 0 for all s }` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.field, self.ambient);
        }
        self.basis.right_kernel()
    }

    /// Intersection as the annihilator of the sum of annihilators.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// Image under right multiplication by `g`.
    pub fn image(&self, g: &FieldMatrix) -> Subspace {
        Subspace::from_vectors(self.field, g.ncols(), self.basis.rows().iter().map(|v| g.apply(v)))
    }

    /// All vectors of the subspace; only sensible for small dimensions.
    pub fn elements(&self) -> Vec<Vector> {
        let q = self.field.order() as u128;
        let d = self.dim();
        (0..q.pow(d as u32))
            .map(|mut idx| {
                let mut v = Vector::zero(self.field, self.ambient);
                for b in self.basis.rows().iter().rev() {
                    v = v.add_scaled(b, (idx % q) as u8);
                    idx /= q;
                }
                v
            })
            .collect()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}^{}: {:?})", self.dim(), self.field, self.ambient, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(rows: &[&[i64]]) -> Subspace {
        let n = rows[0].len();
        Subspace::from_vectors(Field::GF3, n, rows.iter().map(|r| Vector::from_values(Field::GF3, r)))
    }

    #[test]
    fn idempotent_sum_and_intersection() {
        let a = span(&[&[1, 2, 0, 0], &[0, 1, 1, 2]]);
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.intersection(&a).unwrap(), a);
    }

    #[test]
    fn canonical_basis_is_unique() {
        let a = span(&[&[1, 2, 0, 0], &[0, 1, 1, 2]]);
        let b = span(&[&[1, 0, 1, 2], &[2, 1, 0, 0], &[1, 0, 1, 2]]);
        assert_eq!(a, b);
    }

    #[test]
    fn mismatched_ambient_is_an_error() {
        let a = Subspace::full(Field::GF3, 3);
        let b = Subspace::full(Field::GF3, 4);
        assert!(matches!(a.sum(&b), Err(LinalgError::AmbientMismatch(3, 4))));
        assert!(a.intersection(&b).is_err());
        assert!(a.contains(&b).is_err());
    }

    #[test]
    fn elements_enumerates_q_to_the_dim() {
        let a = span(&[&[1, 2, 0, 0], &[0, 1, 1, 2]]);
        let els = a.elements();
        assert_eq!(els.len(), 9);
        assert!(els.iter().all(|v| a.contains_vector(v)));
    }
}
