//! Vectors, matrices and subspaces over GF(3) on the tensor module.

use spgroups::linalg::{commutator_space, fixed_space, Field, FieldMatrix, Subspace, Vector};
use spgroups::tensor::{basis_label, pure, v_form, Generators};

fn show(name: &str, s: &Subspace) {
    let labels: Vec<String> = s
        .basis()
        .rows()
        .iter()
        .map(|v| {
            (0..8)
                .filter(|&i| v.get(i) != 0)
                .map(|i| format!("{}{}", if v.get(i) == 2 { "-" } else { "+" }, basis_label(i)))
                .collect::<String>()
        })
        .collect();
    println!("{name:<12} dim {}  {}", s.dim(), labels.join("  "));
}

fn main() {
    let m = FieldMatrix::from_values(Field::GF3, &[[1, 2, 0], [0, 1, 1], [1, 0, 2]]);
    println!("rank {} det {} order {:?}", m.rank(), m.determinant(), m.inverse().map(|_| m.order()));
    let v = Vector::from_values(Field::GF3, &[1, 1, 2]);
    println!("v·m = {:?}", m.apply(&v).values());

    let g = Generators::new();
    let form = v_form();
    for (name, x) in [("d1", &g.d1), ("d2", &g.d2), ("d3", &g.d3)] {
        let c = fixed_space([x]);
        show(&format!("C_V({name})"), &c);
        show(&format!("[V,{name}]"), &commutator_space(x, 1));
        println!("{:<12} totally isotropic: {}", "", form.is_totally_isotropic(&c));
    }
    let e = Subspace::from_vectors(Field::GF3, 8, [pure("eee")]);
    show("eee^perp", &form.perp(&e));
}
