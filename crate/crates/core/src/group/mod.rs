//! Finite groups: matrix groups with stabilizer chains, explicitly enumerated
//! groups, and Cayley-table groups for invariant fingerprints.

mod bsgs;
mod element;
mod enumerated;
mod fingerprint;
mod handle;
mod small;

pub use bsgs::Bsgs;
pub use element::GroupElement;
pub use enumerated::{conjugacy_orbit, p_part, Enumerated};
pub use fingerprint::Fingerprint;
pub use handle::{GroupHandle, Transversal};
pub use small::{ElementSet, SmallGroup};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group has more than {0} elements")]
    TooLarge(usize),
    #[error("orbit has more than {0} points")]
    OrbitOverflow(usize),
    #[error("element is not in the group")]
    NotMember,
    #[error("generator {0} is not an invertible square matrix of the right size")]
    BadGenerator(usize),
    #[error("expected order {expected}, found {found}")]
    OrderMismatch { expected: u64, found: u64 },
    #[error("random Schreier-Sims reached order {reached} of {target} before the sample budget ran out")]
    RandomSchreierSimsStalled { reached: u64, target: u64 },
}
