//! Exact linear algebra over GF(2) and GF(3).

mod field;
mod intertwine;
mod matrix;
mod subspace;
mod vector;

pub use field::{Field, FieldScalar};
pub use intertwine::solve_conjugating_matrix;
pub use matrix::FieldMatrix;
pub use subspace::Subspace;
pub use vector::{Vector, MAX_LEN};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("field mismatch")]
    FieldMismatch,
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("matrix is not invertible")]
    Singular,
}

/// Kernel of `m` acting on column vectors: `{ v : v * m^T = 0 }`.
pub fn solve_right_kernel(m: &FieldMatrix) -> Subspace {
    m.right_kernel()
}

/// Fixed space `{ v : v g = v }` of the intersection over all given matrices.
pub fn fixed_space<'a>(mats: impl IntoIterator<Item = &'a FieldMatrix>) -> Subspace {
    let mut it = mats.into_iter().peekable();
    let first = it.peek().expect("at least one matrix");
    let (field, n) = (first.field(), first.nrows());
    let mut stacked = FieldMatrix::zeros(field, 0, n);
    for g in it {
        // v (g - I) = 0  <=>  (g - I)^T v^T = 0
        stacked = stacked.stack(&g.minus_identity().transpose());
    }
    stacked.right_kernel()
}

/// Commutator space `[V, g]` (depth 1) or `[V, g, g]` (depth 2): the row
/// space of `(g - I)^depth`.
pub fn commutator_space(g: &FieldMatrix, depth: u32) -> Subspace {
    let d = g.minus_identity();
    let mut m = FieldMatrix::identity(g.field(), g.nrows());
    for _ in 0..depth {
        m = m.mul(&d);
    }
    m.row_space()
}

/// `[V, G]`: sum of the commutator spaces of the generators.
pub fn commutator_space_of<'a>(gens: impl IntoIterator<Item = &'a FieldMatrix>) -> Subspace {
    let mut it = gens.into_iter().peekable();
    let first = it.peek().expect("at least one matrix");
    let (field, n) = (first.field(), first.nrows());
    let mut stacked = FieldMatrix::zeros(field, 0, n);
    for g in it {
        stacked = stacked.stack(&g.minus_identity());
    }
    stacked.row_space()
}
