//! Centralizers in U = QL and M = QP.

use std::time::Instant;

use spgroups::normalizer::{construct_l, construct_p, enumerate_quotient};
use spgroups::semidirect::{
    build_m, build_u, centralizer_of_pi, centralizer_of_pi_in_m, centralizer_of_r, coset_involution_fusion,
    fingerprint_cr2_centralizer, involution_classes_in_cd3, structure_report, two_classes_in_q,
};
use spgroups::tensor::{build_r, build_x};

fn show<T: serde::Serialize>(label: &str, v: &T) {
    println!("{label}: {}", serde_json::to_string(v).unwrap());
}

fn main() {
    let t = Instant::now();
    let lc = construct_l(&build_x(), None).expect("L");
    let r = build_r();
    let u = build_u(&lc);
    show("U", &structure_report(&u, 200, 1));
    show("pi", &centralizer_of_pi(&u).unwrap());
    println!("  {:?}", t.elapsed());
    show("r", &centralizer_of_r(&u, &lc, &r).unwrap());
    println!("  {:?}", t.elapsed());
    let (classes, rho) = two_classes_in_q(&u).unwrap();
    show("Q classes", &classes);
    println!("  {:?}", t.elapsed());
    show("rho", &fingerprint_cr2_centralizer(&u, &rho, &r).unwrap());
    show("C(d3)", &involution_classes_in_cd3(&u, &r).unwrap());
    show("coset", &coset_involution_fusion(&r));
    println!("  {:?}", t.elapsed());
    let pc = construct_p(&lc, &enumerate_quotient(&lc)).expect("P");
    let m = build_m(&pc.p);
    show("M", &structure_report(&m, 200, 2));
    show("pi in M", &centralizer_of_pi_in_m(&m, &lc.l).unwrap());
    println!("elapsed {:?}", t.elapsed());
}
