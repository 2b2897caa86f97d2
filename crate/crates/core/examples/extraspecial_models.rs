//! Cocycle models of extraspecial groups and their automorphisms.

use spgroups::extraspecial::{build_e2, perp_duality};
use spgroups::forms::QuadType;
use spgroups::group::{Fingerprint, GroupElement};
use spgroups::sylow3::q_model;
use spgroups::tensor::{pure, Generators};

fn main() {
    let q = q_model();
    let x = q.element(pure("eef"), 0);
    let y = q.element(pure("ffe"), 1);
    println!("|Q| = {}, [x,y] = {:?}", q.order(), x.commutator(&y).a);

    let g = Generators::new();
    for (name, m) in [("pi", &g.pi), ("sigma", &g.sigma), ("d3", &g.d3)] {
        let c = q.centralizer(std::slice::from_ref(m)).unwrap();
        let d = perp_duality(&q, m, false);
        println!(
            "C_Q({name}): order {} extraspecial {}  duality {} {}",
            c.order(),
            c.fingerprint.extraspecial,
            d.centralizer_of_f_is_commutator,
            d.centralizer_of_commutator_is_f
        );
    }

    for (n, ty) in [(1, QuadType::Minus), (2, QuadType::Minus), (2, QuadType::Plus), (3, QuadType::Minus)] {
        let e = build_e2(n, ty);
        let f = Fingerprint::of(&e.to_small());
        println!("2^(1+{}) {:?}: order {} involutions {} rank {:?}", 2 * n, ty, f.order, f.involutions, f.elementary_abelian_rank);
    }
}
