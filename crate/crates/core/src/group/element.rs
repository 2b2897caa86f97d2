use std::fmt::Debug;
use std::hash::Hash;

use crate::linalg::FieldMatrix;

/// Minimal interface for concrete group elements.
pub trait GroupElement: Clone + Eq + Hash + Debug + Send + Sync {
    fn op(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn is_identity(&self) -> bool;
    /// The identity of the group this element lives in.
    fn identity_like(&self) -> Self;

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.identity_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.op(&base);
            }
            base = base.op(&base);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 self g`.
    fn conj(&self, g: &Self) -> Self {
        g.inverse().op(self).op(g)
    }

    /// `self^-1 other^-1 self other`.
    fn commutator(&self, other: &Self) -> Self {
        self.inverse().op(&other.inverse()).op(self).op(other)
    }

    fn element_order(&self) -> u64 {
        let mut g = self.clone();
        let mut k = 1;
        while !g.is_identity() {
            g = g.op(self);
            k += 1;
            assert!(k < 1 << 24, "element order out of range");
        }
        k
    }
}

impl GroupElement for FieldMatrix {
    #[inline]
    fn op(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn inverse(&self) -> Self {
        FieldMatrix::inverse(self).expect("group element must be invertible")
    }

    fn is_identity(&self) -> bool {
        FieldMatrix::is_identity(self)
    }

    fn identity_like(&self) -> Self {
        FieldMatrix::identity(self.field(), self.nrows())
    }
}
