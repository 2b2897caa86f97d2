//! Centralizer orders from the form against elementwise enumeration.

use spgroups::group::GroupElement;
use spgroups::sylow3::q_model;
use spgroups::tensor::Generators;

#[test]
fn centralizers_in_q_match_enumeration() {
    let q = q_model();
    let g = Generators::new();
    for m in [&g.pi, &g.sigma, &g.d1, &g.d2, &g.d3, &g.pi.mul(&g.sigma)] {
        let fixed = q.elements().filter(|x| q.sp_action(m, x).unwrap() == *x).count() as u64;
        assert_eq!(fixed, q.centralizer(std::slice::from_ref(m)).unwrap().order());
    }
}

#[test]
fn similitude_of_factor_two_fixes_no_center() {
    let q = q_model();
    let g = Generators::new();
    let c = q.centralizer(std::slice::from_ref(&g.i_i_m)).unwrap();
    let fixed: Vec<_> = q.elements().filter(|x| q.sp_action(&g.i_i_m, x).unwrap() == *x).collect();
    assert_eq!(fixed.len() as u64, c.order());
    assert!(!c.with_center);
    assert!(fixed.iter().all(|x| x.a == 0));
}

#[test]
fn preimage_center_matches_enumeration() {
    let q = q_model();
    let g = Generators::new();
    let data = q.preimage(spgroups::linalg::fixed_space([&g.d2, &g.d3]));
    let members: Vec<_> = q.elements().filter(|x| q.contains(&data, x)).collect();
    let center = members.iter().filter(|x| members.iter().all(|y| x.op(y) == y.op(x))).count();
    assert_eq!(members.len() as u64, data.order());
    assert_eq!(center as u64, data.fingerprint.center_order);
}
