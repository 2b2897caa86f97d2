//! Schreier-Sims, orbits and centralizers for matrix groups.

use spgroups::linalg::{Field, Vector};
use spgroups::tensor::{build_x, pure, Generators};

fn main() {
    let x = build_x();
    let g = Generators::new();
    println!("|X| = {}  base orbits {:?}", x.order(), x.bsgs().basic_orbit_lengths());
    println!("pi in X: {}   d1*tau in X: {}", x.contains(&g.pi), x.contains(&g.d1.mul(&g.tau)));

    let nonzero: Vec<Vector> = Vector::nonzero(Field::GF3, 8).collect();
    let mut sizes: Vec<usize> = x.orbit_partition(&nonzero).iter().map(Vec::len).collect();
    sizes.sort_unstable();
    println!("orbit lengths on V minus 0: {sizes:?}");

    let stab = x.stabilizer(&pure("eee")).unwrap();
    println!("|X_eee| = {}", stab.order());
    for (name, m) in [("pi", &g.pi), ("d3", &g.d3), ("sigma", &g.sigma)] {
        let c = x.centralizer(m, 1 << 16).unwrap();
        println!("|C_X({name})| = {}", c.order());
    }
}
