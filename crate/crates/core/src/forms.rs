//! Symplectic forms over GF(2)/GF(3) and quadratic forms over GF(2).

use serde::Serialize;
use thiserror::Error;

use crate::linalg::{Field, FieldMatrix, FieldScalar, Subspace, Vector};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormError {
    #[error("Gram matrix is not square")]
    NotSquare,
    #[error("Gram matrix is not alternating")]
    NotAlternating,
    #[error("form is degenerate (rank {rank} of {dim})")]
    Degenerate { rank: usize, dim: usize },
    #[error("vector length {got} does not match form dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("quadratic forms are only supported over GF(2)")]
    WrongField,
}

/// A non-degenerate alternating form `(v, w) = v G w^T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    gram: FieldMatrix,
}

impl SymplecticForm {
    pub fn new(gram: FieldMatrix) -> Result<Self, FormError> {
        if !gram.is_square() {
            return Err(FormError::NotSquare);
        }
        let n = gram.nrows();
        let field = gram.field();
        for i in 0..n {
            if gram.get(i, i) != 0 {
                return Err(FormError::NotAlternating);
            }
            for j in 0..i {
                if gram.get(i, j) != field.neg(gram.get(j, i)) {
                    return Err(FormError::NotAlternating);
                }
            }
        }
        let rank = gram.rank();
        if rank != n {
            return Err(FormError::Degenerate { rank, dim: n });
        }
        Ok(SymplecticForm { gram })
    }

    /// The standard form on a symplectic plane with basis `{e, f}` and `(e, f) = 1`.
    pub fn hyperbolic_plane(field: Field) -> Self {
        SymplecticForm::new(FieldMatrix::from_values(field, &[[0, 1], [-1, 0]])).unwrap()
    }

    pub fn gram(&self) -> &FieldMatrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.nrows()
    }

    pub fn field(&self) -> Field {
        self.gram.field()
    }

    #[inline]
    pub fn eval(&self, v: &Vector, w: &Vector) -> u8 {
        self.gram.apply(v).dot(w)
    }

    pub fn form_value(&self, v: &Vector, w: &Vector) -> Result<FieldScalar, FormError> {
        for x in [v, w] {
            if x.len() != self.dim() {
                return Err(FormError::DimensionMismatch {
                    expected: self.dim(),
                    got: x.len(),
                });
            }
        }
        Ok(FieldScalar::new(self.field(), self.eval(v, w) as i64))
    }

    pub fn is_totally_isotropic(&self, s: &Subspace) -> bool {
        let b = s.basis().rows();
        b.iter()
            .enumerate()
            .all(|(i, v)| b[i + 1..].iter().all(|w| self.eval(v, w) == 0))
    }

    /// `{ x : (x, s) = 0 for all s in S }`.
    pub fn perp(&self, s: &Subspace) -> Subspace {
        if s.is_zero() {
            return Subspace::full(self.field(), self.dim());
        }
        // (x, s) = x G s^T = s G^T x^T
        let constraints = s.basis().mul(&self.gram.transpose());
        constraints.right_kernel()
    }

    /// `S ∩ S^perp`.
    pub fn radical(&self, s: &Subspace) -> Subspace {
        s.intersection(&self.perp(s)).expect("same ambient")
    }

    /// The form restricted to `s` is non-degenerate.
    pub fn is_nondegenerate_on(&self, s: &Subspace) -> bool {
        self.radical(s).is_zero()
    }

    /// Similitude factor `λ` with `(vg, wg) = λ (v, w)`, if `g` is a similitude.
    pub fn preserves_form(&self, g: &FieldMatrix) -> Option<u8> {
        if !g.is_square() || g.nrows() != self.dim() {
            return None;
        }
        let image = g.mul(&self.gram).mul(&g.transpose());
        self.field()
            .units()
            .find(|&lambda| image == self.gram.scale(lambda))
    }

    pub fn is_isometry(&self, g: &FieldMatrix) -> bool {
        self.preserves_form(g) == Some(1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QuadType {
    Plus,
    Minus,
}

/// Quadratic form `q(v) = v U v^T` over GF(2) given by an upper-triangular `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm2 {
    upper: FieldMatrix,
}

impl QuadraticForm2 {
    /// Entries below the diagonal are folded onto the upper triangle, so any
    /// square matrix representing the form is accepted.
    pub fn new(m: &FieldMatrix) -> Result<Self, FormError> {
        if m.field() != Field::GF2 {
            return Err(FormError::WrongField);
        }
        if !m.is_square() {
            return Err(FormError::NotSquare);
        }
        let n = m.nrows();
        let mut upper = FieldMatrix::zeros(Field::GF2, n, n);
        for i in 0..n {
            for j in 0..n {
                let (a, b) = if i <= j { (i, j) } else { (j, i) };
                let x = m.get(i, j);
                if x != 0 {
                    upper.set(a, b, upper.get(a, b) ^ 1);
                }
            }
        }
        Ok(QuadraticForm2 { upper })
    }

    /// Build from values on a basis and the polar form on basis pairs.
    pub fn from_values_and_polar(values: &[u8], polar: impl Fn(usize, usize) -> u8) -> Self {
        let n = values.len();
        let mut upper = FieldMatrix::zeros(Field::GF2, n, n);
        for i in 0..n {
            upper.set(i, i, values[i] & 1);
            for j in i + 1..n {
                upper.set(i, j, polar(i, j) & 1);
            }
        }
        QuadraticForm2 { upper }
    }

    pub fn upper(&self) -> &FieldMatrix {
        &self.upper
    }

    pub fn dim(&self) -> usize {
        self.upper.nrows()
    }

    #[inline]
    pub fn eval(&self, v: &Vector) -> u8 {
        self.upper.apply(v).dot(v)
    }

    /// Gram matrix `U + U^T` of the polarization `q(v+w) + q(v) + q(w)`.
    pub fn polar_gram(&self) -> FieldMatrix {
        self.upper.add(&self.upper.transpose())
    }

    pub fn polar(&self, v: &Vector, w: &Vector) -> u8 {
        self.polar_gram().apply(v).dot(w)
    }

    pub fn polar_form(&self) -> Result<SymplecticForm, FormError> {
        SymplecticForm::new(self.polar_gram())
    }

    pub fn singular_count(&self) -> u64 {
        Vector::all(Field::GF2, self.dim())
            .filter(|v| self.eval(v) == 0)
            .count() as u64
    }

    pub fn is_isometry(&self, g: &FieldMatrix) -> bool {
        Vector::all(Field::GF2, self.dim()).all(|v| self.eval(&g.apply(&v)) == self.eval(&v))
    }

    /// Plus/minus type by exhaustive count of singular vectors.
    pub fn quad_type(&self) -> Result<QuadType, FormError> {
        self.polar_form()?;
        let n = (self.dim() / 2) as u32;
        let singular = self.singular_count();
        let base = 1u64 << (2 * n - 1);
        let half = 1u64 << (n - 1);
        if singular == base + half {
            Ok(QuadType::Plus)
        } else if singular == base - half {
            Ok(QuadType::Minus)
        } else {
            unreachable!("non-degenerate form with {singular} singular vectors")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_values() {
        let w = SymplecticForm::hyperbolic_plane(Field::GF3);
        let e = Vector::from_values(Field::GF3, &[1, 0]);
        let f = Vector::from_values(Field::GF3, &[0, 1]);
        assert_eq!(w.eval(&e, &f), 1);
        assert_eq!(w.eval(&f, &e), 2);
        for v in Vector::all(Field::GF3, 2) {
            assert_eq!(w.eval(&v, &v), 0);
        }
        assert!(w.form_value(&e, &Vector::zero(Field::GF3, 3)).is_err());
    }

    #[test]
    fn rejects_bad_gram() {
        let sym = FieldMatrix::from_values(Field::GF3, &[[0, 1], [1, 0]]);
        assert_eq!(SymplecticForm::new(sym), Err(FormError::NotAlternating));
        let zero = FieldMatrix::zeros(Field::GF3, 2, 2);
        assert!(matches!(SymplecticForm::new(zero), Err(FormError::Degenerate { .. })));
    }

    #[test]
    fn similitude_factor_of_plane_maps() {
        let w = SymplecticForm::hyperbolic_plane(Field::GF3);
        let m = FieldMatrix::from_values(Field::GF3, &[[1, 0], [0, -1]]);
        assert_eq!(w.preserves_form(&m), Some(2));
        assert_eq!(w.preserves_form(&FieldMatrix::identity(Field::GF3, 2)), Some(1));
        let sing = FieldMatrix::from_values(Field::GF3, &[[1, 0], [0, 0]]);
        assert_eq!(w.preserves_form(&sing), None);
    }

    #[test]
    fn plane_types() {
        let hyp = QuadraticForm2::new(&FieldMatrix::from_values(Field::GF2, &[[0, 1], [0, 0]])).unwrap();
        assert_eq!(hyp.singular_count(), 3);
        assert_eq!(hyp.quad_type(), Ok(QuadType::Plus));
        let aniso = QuadraticForm2::new(&FieldMatrix::from_values(Field::GF2, &[[1, 1], [0, 1]])).unwrap();
        assert_eq!(aniso.singular_count(), 1);
        assert_eq!(aniso.quad_type(), Ok(QuadType::Minus));
        let degenerate = QuadraticForm2::new(&FieldMatrix::from_values(Field::GF2, &[[1, 0], [0, 0]])).unwrap();
        assert!(degenerate.quad_type().is_err());
    }

    #[test]
    fn perp_of_extremes() {
        let w = SymplecticForm::hyperbolic_plane(Field::GF3);
        assert_eq!(w.perp(&Subspace::zero(Field::GF3, 2)), Subspace::full(Field::GF3, 2));
        assert!(w.perp(&Subspace::full(Field::GF3, 2)).is_zero());
    }
}
