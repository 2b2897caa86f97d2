//! The Sylow 3-subgroup of L and its centralizers in Q.

use std::time::Instant;

use spgroups::normalizer::construct_l;
use spgroups::sylow3::{
    basics_report, order_three_classes, pi_action, preimage_report, q_model, subgroups_of_s,
};
use spgroups::tensor::{build_x, Generators};

fn show<T: serde::Serialize>(label: &str, v: &T) {
    println!("{label}: {}", serde_json::to_string(v).unwrap());
}

fn main() {
    let t = Instant::now();
    let q = q_model();
    let g = Generators::new();
    let lc = construct_l(&build_x(), None).expect("L");
    let l_gens = lc.l.small_generating_set(7);
    println!("L generated by {} random elements", l_gens.len());
    for (name, x) in [("d1", &g.d1), ("d2", &g.d2), ("d3", &g.d3)] {
        show(name, &preimage_report(&q, name, x));
    }
    show("basics", &basics_report(&q, lc.l.order()));
    show("order three", &order_three_classes(&lc.l, &l_gens));
    show("subgroups", &subgroups_of_s(&l_gens));
    show("pi action", &pi_action(&l_gens));
    println!("elapsed {:?}", t.elapsed());
}
