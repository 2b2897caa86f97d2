//! Exact computations with the symplectic tensor module over GF(3), the
//! matrix groups acting on it, and extraspecial extensions of those groups.

pub mod extraspecial;
pub mod forms;
pub mod group;
pub mod linalg;
pub mod normalizer;
pub mod semidirect;
pub mod sylow3;
pub mod tensor;
pub mod verify;
