//! Constructs L = N(R) in Sp(V) and the parabolic P.

use std::time::Instant;

use spgroups::normalizer::{construct_l, construct_p, enumerate_quotient, l_report, p_report};
use spgroups::tensor::build_x;

fn main() {
    let t = Instant::now();
    let x = build_x();
    let lc = construct_l(&x, None).expect("lifting succeeds");
    println!("{} generators", lc.l.generators().len());
    let report = l_report(&lc, &x);
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    println!("base orbits {:?}  ({:?})", lc.l.bsgs().basic_orbit_lengths(), t.elapsed());
    let quotient = enumerate_quotient(&lc);
    let pc = construct_p(&lc, &quotient).expect("P");
    println!("{}", serde_json::to_string_pretty(&p_report(&lc, &pc)).unwrap());
    println!("elapsed {:?}", t.elapsed());
}
