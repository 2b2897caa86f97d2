//! Builds X and X*, reports their orders and the centralizer of π.

use std::time::Instant;

use spgroups::tensor::{build_r, build_x, build_xstar, pi_centralizer_in_x, pi_cosets_in_xstar};

fn main() {
    let t = Instant::now();
    let x = build_x();
    let xs = build_xstar();
    println!("|X| = {}, |X*| = {}, base lengths {:?}", x.order(), xs.order(), x.bsgs().basic_orbit_lengths());
    let r = build_r();
    println!("|R| = {}", r.order());
    let c2 = pi_centralizer_in_x(&x, &r).expect("centralizer");
    println!("{}", serde_json::to_string_pretty(&c2).unwrap());
    let out = pi_cosets_in_xstar(&xs).expect("centralizer");
    println!("{}", serde_json::to_string_pretty(&out).unwrap());
    println!("elapsed {:?}", t.elapsed());
}
