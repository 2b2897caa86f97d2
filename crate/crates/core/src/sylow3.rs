//! The Sylow 3-subgroup `S = D⟨τ⟩` of `L` and its action on `Q/Z ≅ V`.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::extraspecial::{build_q39, ExtraspecialModel, SubgroupFingerprint};
use crate::group::{Enumerated, GroupElement, GroupHandle};
use crate::linalg::{commutator_space, fixed_space, Field, FieldMatrix, Subspace};
use crate::tensor::{self, Generators};

/// `Q ≅ 3^{1+8}_+` on the tensor form.
pub fn q_model() -> ExtraspecialModel {
    build_q39(tensor::v_form())
}

/// `S = ⟨d_1, d_2, d_3, τ⟩`, 81 matrices.
pub fn sylow_s() -> Enumerated<FieldMatrix> {
    let g = Generators::new();
    let gens = [g.d1, g.d2, g.d3, g.tau];
    Enumerated::closure(&FieldMatrix::identity(Field::GF3, 8), &gens, 1000).expect("S is small")
}

/// Preimage in `Q` of `C_{Q/Z}(x)` for one of the `d`-elements.
#[derive(Clone, Debug, Serialize)]
pub struct PreimageReport {
    pub element: String,
    pub fixed_order: u64,
    pub preimage: SubgroupFingerprint,
    /// `C_{Q/Z}(x) = [Q, x]/Z`.
    pub equals_commutator: bool,
    /// `C_{Q/Z}(x) ≤ [Q, x]/Z`.
    pub inside_commutator: bool,
}

pub fn preimage_report(model: &ExtraspecialModel, name: &str, x: &FieldMatrix) -> PreimageReport {
    let c = fixed_space([x]);
    let comm = commutator_space(x, 1);
    let data = model.preimage(c.clone());
    PreimageReport {
        element: name.to_string(),
        fixed_order: 3u64.pow(c.dim() as u32),
        preimage: data.fingerprint,
        equals_commutator: c == comm,
        inside_commutator: comm.contains(&c).unwrap_or(false),
    }
}

/// Remaining basic facts about `S` acting on `Q`.
#[derive(Clone, Debug, Serialize)]
pub struct BasicsReport {
    pub s_order: usize,
    pub s_is_sylow: bool,
    pub three_rank: u32,
    pub c_d_order: u64,
    pub c_d_centralized_by_pi: bool,
    pub c_t_order: u64,
    pub c_q_pi: SubgroupFingerprint,
}

pub fn basics_report(model: &ExtraspecialModel, l_order: u64) -> BasicsReport {
    let g = Generators::new();
    let (d, t) = tensor::d_and_t();
    let s = sylow_s();
    let c_d = fixed_space(d.iter());
    let c_t = fixed_space(t.iter());
    let pi_fixes = c_d.basis().rows().iter().all(|v| g.pi.apply(v) == *v);
    BasicsReport {
        s_order: s.order(),
        s_is_sylow: crate::group::p_part(l_order, 3) == s.order() as u64,
        three_rank: s.to_small().p_rank(3),
        c_d_order: 3u64.pow(c_d.dim() as u32),
        c_d_centralized_by_pi: pi_fixes,
        c_t_order: 3u64.pow(c_t.dim() as u32),
        c_q_pi: model.centralizer(std::slice::from_ref(&g.pi)).expect("isometry").fingerprint,
    }
}

/// Invariant separating the three `d`-types: `(dim C_V(x), C_V(x) totally isotropic, dim [V,x,x])`.
pub fn d_type_invariant(x: &FieldMatrix) -> (usize, bool, usize) {
    let c = fixed_space([x]);
    (c.dim(), tensor::v_form().is_totally_isotropic(&c), commutator_space(x, 2).dim())
}

#[derive(Clone, Debug, Serialize)]
pub struct OrderThreeReport {
    pub order_three_in_s: usize,
    pub class_lengths: Vec<usize>,
    /// Every element of order 3 in `S` lies in the `L`-class of `d_1`, `d_2` or `d_3`.
    pub all_conjugate_to_d: bool,
    /// Every cyclic subgroup of order 3 in `S` is conjugate to `⟨d_i⟩` for some `i`.
    pub all_cyclic_conjugate_to_d: bool,
    pub d_classes_distinct: bool,
}

/// Order-3 elements of `S` against the `L`-classes of `d_1, d_2, d_3`.
pub fn order_three_classes(l: &GroupHandle, gens: &[FieldMatrix]) -> OrderThreeReport {
    let g = Generators::new();
    let small = GroupHandle::new(Field::GF3, 8, gens.to_vec()).expect("members of L");
    let classes: Vec<Vec<FieldMatrix>> = [&g.d1, &g.d2, &g.d3]
        .iter()
        .map(|d| small.conjugacy_orbit(d, 1 << 20).expect("class fits").points().to_vec())
        .collect();
    let lookup: std::collections::HashSet<&FieldMatrix> = classes.iter().flatten().collect();
    let s = sylow_s();
    let threes: Vec<&FieldMatrix> = s.elements().iter().filter(|x| x.element_order() == 3).collect();
    let total: usize = classes.iter().map(Vec::len).sum();
    debug_assert!(classes.iter().all(|c| l.order().is_multiple_of(c.len() as u64)));
    OrderThreeReport {
        order_three_in_s: threes.len(),
        class_lengths: classes.iter().map(Vec::len).collect(),
        all_conjugate_to_d: threes.iter().all(|x| lookup.contains(x)),
        all_cyclic_conjugate_to_d: threes.iter().all(|x| lookup.contains(x) || lookup.contains(&x.pow(2))),
        d_classes_distinct: lookup.len() == total,
    }
}

fn subgroup_key(elements: &[FieldMatrix]) -> Vec<FieldMatrix> {
    let mut k = elements.to_vec();
    k.sort_by_key(|m| m.flatten().index());
    k
}

fn closure_of(gens: &[FieldMatrix]) -> Vec<FieldMatrix> {
    Enumerated::closure(&FieldMatrix::identity(Field::GF3, 8), gens, 1 << 12)
        .expect("small subgroup")
        .elements()
        .to_vec()
}

/// Conjugate the subgroup generated by `gens` into `target` by breadth-first
/// search over the conjugates under `ambient_gens`; returns the conjugating
/// element, or `None` if no conjugate lies in `target`.
pub fn conjugate_into(
    gens: &[FieldMatrix],
    ambient_gens: &[FieldMatrix],
    target: &Enumerated<FieldMatrix>,
    limit: usize,
) -> Option<FieldMatrix> {
    let id = FieldMatrix::identity(Field::GF3, 8);
    let inv: Vec<FieldMatrix> = ambient_gens.iter().map(|a| a.inverse().unwrap()).collect();
    let start = subgroup_key(&closure_of(gens));
    let mut seen: HashMap<Vec<FieldMatrix>, FieldMatrix> = HashMap::from([(start.clone(), id)]);
    let mut queue = VecDeque::from([start]);
    while let Some(h) = queue.pop_front() {
        let conj = seen[&h].clone();
        if h.iter().all(|x| target.contains(x)) {
            return Some(conj);
        }
        for (a, ai) in ambient_gens.iter().zip(&inv) {
            let next = subgroup_key(&h.iter().map(|x| ai.mul(x).mul(a)).collect::<Vec<_>>());
            if !seen.contains_key(&next) {
                if seen.len() >= limit {
                    return None;
                }
                seen.insert(next.clone(), conj.mul(a));
                queue.push_back(next);
            }
        }
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupsOfSReport {
    pub elementary_abelian_9: usize,
    pub inside_d: usize,
    pub conjugated_into_d: usize,
    /// Largest `dim C_{Q/Z}(E)` over all such `E`.
    pub max_fixed_dim: usize,
    pub exponent_3_order_27: usize,
    pub exponent_3_order_27_are_d_and_t: bool,
}

/// Elementary abelian subgroups of order 9 in `S`, conjugated into `D`,
/// and the exponent-3 subgroups of order 27.
pub fn subgroups_of_s(l_gens: &[FieldMatrix]) -> SubgroupsOfSReport {
    let s = sylow_s();
    let small = s.to_small();
    let (d_gens, t_gens) = tensor::d_and_t();
    let d = Enumerated::closure(&FieldMatrix::identity(Field::GF3, 8), &d_gens, 100).unwrap();
    let d_key = subgroup_key(d.elements());
    let t_key = subgroup_key(&closure_of(&t_gens));
    let mut e9 = 0;
    let mut inside = 0;
    let mut conjugated = 0;
    let mut max_fixed = 0;
    let mut e27 = Vec::new();
    for sub in small.all_subgroups() {
        let n = sub.count_ones(..);
        let elems: Vec<FieldMatrix> = sub.ones().map(|i| s.elements()[i].clone()).collect();
        let exp3 = elems.iter().all(|x| x.pow(3).is_identity());
        if n == 27 && exp3 {
            e27.push(subgroup_key(&elems));
        }
        if n != 9 || !exp3 {
            continue;
        }
        let abelian = elems.iter().all(|x| elems.iter().all(|y| x.mul(y) == y.mul(x)));
        if !abelian {
            continue;
        }
        e9 += 1;
        max_fixed = max_fixed.max(fixed_space(elems.iter()).dim());
        if elems.iter().all(|x| d.contains(x)) {
            inside += 1;
            conjugated += 1;
            continue;
        }
        if let Some(c) = conjugate_into(&elems, l_gens, &d, 1 << 20) {
            let ci = c.inverse().unwrap();
            if elems.iter().all(|x| d.contains(&ci.mul(x).mul(&c))) {
                conjugated += 1;
            }
        }
    }
    e27.sort_by_key(|k| k.iter().map(|m| m.flatten().index()).collect::<Vec<_>>());
    let mut expected = vec![d_key, t_key];
    expected.sort_by_key(|k| k.iter().map(|m| m.flatten().index()).collect::<Vec<_>>());
    SubgroupsOfSReport {
        elementary_abelian_9: e9,
        inside_d: inside,
        conjugated_into_d: conjugated,
        max_fixed_dim: max_fixed,
        exponent_3_order_27: e27.len(),
        exponent_3_order_27_are_d_and_t: e27 == expected,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PiActionReport {
    /// Number of `L`-conjugates `y` of `d_3` commuting with `π`.
    pub d3_type_commuting_with_pi: usize,
    /// Sizes of `[C_{Q/Z}(y), π]` over those `y`.
    pub commutator_orders: Vec<u64>,
    pub d2_d3_commutator_order: u64,
    pub t_commutator_order: u64,
}

fn pi_commutator(c: &Subspace, pi: &FieldMatrix) -> Subspace {
    let m = pi.minus_identity();
    Subspace::from_vectors(Field::GF3, 8, c.basis().rows().iter().map(|v| m.apply(v)))
}

/// `[C_{Q/Z}(y), π]` for `y` of type `d_3` commuting with `π`, and the
/// commutators for `⟨d_2, d_3⟩` and `T`.
pub fn pi_action(l_gens: &[FieldMatrix]) -> PiActionReport {
    let g = Generators::new();
    let small = GroupHandle::new(Field::GF3, 8, l_gens.to_vec()).expect("members of L");
    let class = small.conjugacy_orbit(&g.d3, 1 << 20).expect("class fits");
    let mut orders: Vec<u64> = class
        .points()
        .iter()
        .filter(|y| y.mul(&g.pi) == g.pi.mul(y))
        .map(|y| 3u64.pow(pi_commutator(&fixed_space([y]), &g.pi).dim() as u32))
        .collect();
    let count = orders.len();
    orders.sort_unstable();
    orders.dedup();
    let (_, t) = tensor::d_and_t();
    let a = fixed_space([&g.d2, &g.d3]);
    PiActionReport {
        d3_type_commuting_with_pi: count,
        commutator_orders: orders,
        d2_d3_commutator_order: 3u64.pow(pi_commutator(&a, &g.pi).dim() as u32),
        t_commutator_order: 3u64.pow(pi_commutator(&fixed_space(t.iter()), &g.pi).dim() as u32),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preimages_of_d_centralizers() {
        let q = q_model();
        let g = Generators::new();
        let r1 = preimage_report(&q, "d1", &g.d1);
        assert_eq!((r1.preimage.order, r1.preimage.elementary_abelian, r1.equals_commutator), (243, true, true));
        let r2 = preimage_report(&q, "d2", &g.d2);
        assert_eq!((r2.preimage.order, r2.preimage.abelian, r2.preimage.center_order), (243, false, 27));
        let r3 = preimage_report(&q, "d3", &g.d3);
        assert_eq!((r3.preimage.order, r3.preimage.elementary_abelian, r3.inside_commutator), (81, true, true));
    }

    #[test]
    fn preimage_fingerprint_against_elementwise_count() {
        let q = q_model();
        let g = Generators::new();
        let data = q.preimage(fixed_space([&g.d2]));
        let members: Vec<_> = q.elements().filter(|x| q.contains(&data, x)).collect();
        assert_eq!(members.len() as u64, data.order());
        let center = members
            .iter()
            .filter(|x| members.iter().all(|y| x.op(y) == y.op(x)))
            .count();
        assert_eq!(center as u64, data.fingerprint.center_order);
    }

    #[test]
    fn d_types_are_distinguished() {
        let g = Generators::new();
        let a = d_type_invariant(&g.d1);
        let b = d_type_invariant(&g.d2);
        let c = d_type_invariant(&g.d3);
        assert!(a != b && b != c && a != c);
    }

    #[test]
    fn s_structure() {
        let s = sylow_s();
        assert_eq!(s.order(), 81);
        let g = Generators::new();
        let center = s.center();
        assert_eq!(center.order(), 3);
        assert!(center.contains(&g.d3));
    }
}
