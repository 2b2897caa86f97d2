use serde::Serialize;

use super::small::SmallGroup;

/// Isomorphism invariants used in place of explicit isomorphism tests.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub exponent: usize,
    pub abelian: bool,
    pub center_order: usize,
    pub derived_order: usize,
    pub involutions: usize,
    /// `(p, rank)` of the largest elementary abelian p-subgroup, reported
    /// for groups of prime-power order only.
    pub elementary_abelian_rank: Option<(usize, u32)>,
}

impl Fingerprint {
    pub fn of(g: &SmallGroup) -> Fingerprint {
        let n = g.order();
        let rank = prime_power_base(n).map(|p| (p, g.p_rank(p)));
        Fingerprint {
            order: n,
            exponent: g.exponent(),
            abelian: g.is_abelian(),
            center_order: g.center().count_ones(..),
            derived_order: g.derived_subgroup().count_ones(..),
            involutions: g.involution_count(),
            elementary_abelian_rank: rank,
        }
    }
}

fn prime_power_base(n: usize) -> Option<usize> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|p| n.is_multiple_of(*p))?;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p)
}
