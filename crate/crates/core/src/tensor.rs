//! The module `V = W ⊗ W ⊗ W` over GF(3), the wreath-product action on it,
//! and the groups `X ≤ X*` together with their named elements.
//!
//! Basis vectors of `V` are indexed by `4i + 2j + k` for `x_i ⊗ x_j ⊗ x_k`
//! with `x_0 = e`, `x_1 = f`, so `e⊗e⊗e` comes first.

use serde::Serialize;
use thiserror::Error;

use crate::extraspecial::build_e2;
use crate::forms::{QuadType, SymplecticForm};
use crate::group::{Enumerated, Fingerprint, GroupElement, GroupError, GroupHandle, SmallGroup};
use crate::linalg::{commutator_space, fixed_space, Field, FieldMatrix, Subspace, Vector};

const F3: Field = Field::GF3;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TensorError {
    #[error("tensor factor {0} is not an invertible 2x2 matrix over GF(3)")]
    NotInvertible(usize),
}

/// The form on `W` with `(e, f) = 1`.
pub fn w_form() -> SymplecticForm {
    SymplecticForm::hyperbolic_plane(F3)
}

/// The product form on `V`; its Gram matrix is the Kronecker cube of `W`'s.
pub fn v_form() -> SymplecticForm {
    let g = w_form().gram().clone();
    SymplecticForm::new(g.kron(&g).kron(&g)).expect("tensor cube of a symplectic form is symplectic")
}

/// Basis vector from a label such as `"efe"`.
pub fn pure(label: &str) -> Vector {
    let bytes = label.as_bytes();
    assert_eq!(bytes.len(), 3, "labels name three tensor factors");
    let idx = bytes.iter().fold(0, |acc, &c| {
        acc * 2
            + match c {
                b'e' => 0,
                b'f' => 1,
                _ => panic!("label letters are e and f"),
            }
    });
    Vector::unit(F3, 8, idx)
}

/// Linear combination of labelled basis vectors.
pub fn combo(terms: &[(i64, &str)]) -> Vector {
    terms
        .iter()
        .fold(Vector::zero(F3, 8), |acc, &(c, l)| acc.add_scaled(&pure(l), F3.reduce(c)))
}

pub fn span(vectors: &[Vector]) -> Subspace {
    Subspace::from_vectors(F3, 8, vectors.iter().copied())
}

/// Label of basis vector `i`.
pub fn basis_label(i: usize) -> String {
    (0..3).map(|s| if (i >> (2 - s)) & 1 == 0 { 'e' } else { 'f' }).collect()
}

fn m2(rows: [[i64; 2]; 2]) -> FieldMatrix {
    FieldMatrix::from_values(F3, &rows)
}

/// Elements of `GL(W) = GSp(W)` used in the construction.
pub mod w {
    use super::*;

    /// Fixes `e`, sends `f` to `e + f`.
    pub fn d() -> FieldMatrix {
        m2([[1, 0], [1, 1]])
    }

    pub fn identity() -> FieldMatrix {
        FieldMatrix::identity(F3, 2)
    }

    pub fn minus_identity() -> FieldMatrix {
        m2([[2, 0], [0, 2]])
    }

    /// The two generators of `O_2(GSp(W)) ≅ Q_8`.
    pub fn q8_generators() -> [FieldMatrix; 2] {
        [m2([[0, 1], [2, 0]]), m2([[1, 1], [1, 2]])]
    }

    /// Sends `e` to `-e`, fixes `f`; similitude factor `-1`.
    pub fn m_neg_e() -> FieldMatrix {
        m2([[2, 0], [0, 1]])
    }

    /// Fixes `e`, sends `f` to `-f`; similitude factor `-1`.
    pub fn m_neg_f() -> FieldMatrix {
        m2([[1, 0], [0, 2]])
    }
}

/// Matrix of the base-group element `(x, y, z)` on `V`.
pub fn lift_base_triple(x: &FieldMatrix, y: &FieldMatrix, z: &FieldMatrix) -> Result<FieldMatrix, TensorError> {
    for (i, m) in [x, y, z].into_iter().enumerate() {
        if m.field() != F3 || m.nrows() != 2 || !m.is_square() || !m.is_invertible() {
            return Err(TensorError::NotInvertible(i));
        }
    }
    Ok(x.kron(y).kron(z))
}

fn lift(x: &FieldMatrix, y: &FieldMatrix, z: &FieldMatrix) -> FieldMatrix {
    lift_base_triple(x, y, z).expect("invertible factors")
}

/// Matrix moving the tensor factor in slot `i` to slot `p[i]` (slots `0..3`).
pub fn lift_permutation(p: [usize; 3]) -> FieldMatrix {
    let mut sorted = p;
    sorted.sort();
    assert_eq!(sorted, [0, 1, 2], "not a permutation of the three slots");
    let rows = (0..8).map(|b| {
        let bits = [(b >> 2) & 1, (b >> 1) & 1, b & 1];
        let mut out = [0; 3];
        for i in 0..3 {
            out[p[i]] = bits[i];
        }
        Vector::unit(F3, 8, out[0] * 4 + out[1] * 2 + out[2])
    });
    FieldMatrix::from_rows(F3, 8, rows)
}

/// The named elements of `X` and `X*` as matrices on `V`.
#[derive(Clone, Debug)]
pub struct Generators {
    pub d1: FieldMatrix,
    pub d2: FieldMatrix,
    pub d3: FieldMatrix,
    pub sigma: FieldMatrix,
    /// Swaps the first two tensor factors.
    pub pi: FieldMatrix,
    /// Cycles the tensor factors.
    pub tau: FieldMatrix,
    /// `(m, m, I)` and `(I, m, m)` with `m` = [`w::m_neg_e`].
    pub mm_i: FieldMatrix,
    pub i_mm: FieldMatrix,
    /// `(I, I, m)`, which has similitude factor `-1`.
    pub i_i_m: FieldMatrix,
    /// Lifts of the `Q_8` generators into each factor.
    pub r: Vec<FieldMatrix>,
}

impl Generators {
    pub fn new() -> Self {
        let i = w::identity();
        let d = w::d();
        let di = d.inverse().unwrap();
        let m = w::m_neg_e();
        let mut r = Vec::new();
        for slot in 0..3 {
            for q in w::q8_generators() {
                let mut f = [i.clone(), i.clone(), i.clone()];
                f[slot] = q;
                r.push(lift(&f[0], &f[1], &f[2]));
            }
        }
        Generators {
            d1: lift(&d, &i, &i),
            d2: lift(&d, &di, &i),
            d3: lift(&d, &d, &d),
            sigma: lift(&w::minus_identity(), &w::minus_identity(), &w::minus_identity()),
            pi: lift_permutation([1, 0, 2]),
            tau: lift_permutation([1, 2, 0]),
            mm_i: lift(&m, &m, &i),
            i_mm: lift(&i, &m, &m),
            i_i_m: lift(&i, &i, &m),
            r,
        }
    }

    /// Generators of `X`: the `Q_8` lifts, `d_1, d_2, d_3`, `σ`, the two
    /// diagonal `m`-elements, `π` and `τ`.
    pub fn x(&self) -> Vec<FieldMatrix> {
        let mut g = self.r.clone();
        g.extend([
            self.d1.clone(),
            self.d2.clone(),
            self.d3.clone(),
            self.sigma.clone(),
            self.mm_i.clone(),
            self.i_mm.clone(),
            self.pi.clone(),
            self.tau.clone(),
        ]);
        g
    }

    pub fn xstar(&self) -> Vec<FieldMatrix> {
        let mut g = self.x();
        g.push(self.i_i_m.clone());
        g
    }

    /// Name/matrix pairs for reporting.
    pub fn named(&self) -> Vec<(String, FieldMatrix)> {
        let mut out: Vec<(String, FieldMatrix)> = vec![
            ("d1".into(), self.d1.clone()),
            ("d2".into(), self.d2.clone()),
            ("d3".into(), self.d3.clone()),
            ("sigma".into(), self.sigma.clone()),
            ("pi".into(), self.pi.clone()),
            ("tau".into(), self.tau.clone()),
            ("m_m_I".into(), self.mm_i.clone()),
            ("I_m_m".into(), self.i_mm.clone()),
            ("I_I_m".into(), self.i_i_m.clone()),
        ];
        for (k, r) in self.r.iter().enumerate() {
            out.push((format!("q8_{}_{}", k / 2 + 1, k % 2), r.clone()));
        }
        out
    }
}

impl Default for Generators {
    fn default() -> Self {
        Self::new()
    }
}

pub fn build_x() -> GroupHandle {
    GroupHandle::new(F3, 8, Generators::new().x()).expect("valid generators")
}

pub fn build_xstar() -> GroupHandle {
    GroupHandle::new(F3, 8, Generators::new().xstar()).expect("valid generators")
}

/// `R = O_2(X)`, generated by the `Q_8` lifts, as an explicit group of 128 matrices.
pub fn build_r() -> Enumerated<FieldMatrix> {
    Enumerated::closure(&FieldMatrix::identity(F3, 8), &Generators::new().r, 1 << 10).expect("R is small")
}

/// `D = ⟨d_1, d_2, d_3⟩` and `T = ⟨d_2, d_3, τ⟩`.
pub fn d_and_t() -> (Vec<FieldMatrix>, Vec<FieldMatrix>) {
    let g = Generators::new();
    (
        vec![g.d1.clone(), g.d2.clone(), g.d3.clone()],
        vec![g.d2.clone(), g.d3.clone(), g.tau.clone()],
    )
}

/// One subspace computed for the table of fixed and commutator spaces.
#[derive(Clone, Debug, Serialize)]
pub struct SpaceEntry {
    pub name: String,
    pub dim: usize,
    pub expected_dim: usize,
    /// Equal to the subspace spanned by the explicitly listed vectors.
    pub matches_span: bool,
}

/// A yes/no statement accompanying a table row.
#[derive(Clone, Debug, Serialize)]
pub struct Statement {
    pub name: String,
    pub expected: bool,
    pub computed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableClause {
    pub clause: &'static str,
    pub spaces: Vec<SpaceEntry>,
    pub statements: Vec<Statement>,
}

impl TableClause {
    pub fn holds(&self) -> bool {
        self.spaces.iter().all(|s| s.dim == s.expected_dim && s.matches_span)
            && self.statements.iter().all(|s| s.expected == s.computed)
    }
}

fn entry(name: &str, computed: &Subspace, expected: &[Vector], expected_dim: usize) -> SpaceEntry {
    SpaceEntry {
        name: name.to_string(),
        dim: computed.dim(),
        expected_dim,
        matches_span: *computed == span(expected),
    }
}

fn statement(name: &str, expected: bool, computed: bool) -> Statement {
    Statement {
        name: name.to_string(),
        expected,
        computed,
    }
}

/// Fixed spaces, commutator spaces and isotropy of `d_1, d_2, d_3`, their
/// pairs, `D` and `π`, against the listed spanning vectors.
pub fn fixed_space_table() -> Vec<TableClause> {
    let g = Generators::new();
    let form = v_form();
    let fix = |ms: &[&FieldMatrix]| fixed_space(ms.iter().copied());
    let p = pure;
    let mut out = Vec::new();

    let exy: Vec<Vector> = ["eee", "eef", "efe", "eff"].map(p).to_vec();
    let c = fix(&[&g.d1]);
    let comm = commutator_space(&g.d1, 1);
    out.push(TableClause {
        clause: "i",
        spaces: vec![entry("C_V(d1)", &c, &exy, 4), entry("[V,d1]", &comm, &exy, 4)],
        statements: vec![statement("C_V(d1) totally isotropic", true, form.is_totally_isotropic(&c))],
    });

    let c = fix(&[&g.d2]);
    let comm = commutator_space(&g.d2, 1);
    let comm2 = commutator_space(&g.d2, 2);
    let c_span = [p("eee"), p("eef"), combo(&[(1, "efe"), (1, "fee")]), combo(&[(1, "eff"), (1, "fef")])];
    let comm_span = [p("eee"), p("eef"), combo(&[(1, "efe"), (-1, "fee")]), combo(&[(1, "eff"), (-1, "fef")])];
    out.push(TableClause {
        clause: "ii",
        spaces: vec![
            entry("C_V(d2)", &c, &c_span, 4),
            entry("[V,d2]", &comm, &comm_span, 4),
            entry("[V,d2,d2]", &comm2, &[p("eee"), p("eef")], 2),
        ],
        statements: vec![
            statement("d2 quadratic", false, comm2.is_zero()),
            statement("C_V(d2) totally isotropic", false, form.is_totally_isotropic(&c)),
        ],
    });

    let c = fix(&[&g.d3]);
    let comm = commutator_space(&g.d3, 1);
    let comm2 = commutator_space(&g.d3, 2);
    let c_span = [p("eee"), combo(&[(1, "fee"), (-1, "efe")]), combo(&[(1, "fee"), (-1, "eef")])];
    let comm_span = [
        p("eee"),
        combo(&[(1, "eff"), (1, "ffe"), (1, "fef")]),
        combo(&[(1, "fee"), (1, "efe")]),
        combo(&[(1, "fee"), (1, "eef")]),
        combo(&[(1, "efe"), (1, "eef")]),
    ];
    let comm2_span = [p("eee"), combo(&[(1, "eef"), (1, "efe"), (1, "fee")])];
    let inside = c.contains(&comm).unwrap_or(false);
    let below = comm.contains(&c).unwrap_or(false) && !inside;
    out.push(TableClause {
        clause: "iii",
        spaces: vec![
            entry("C_V(d3)", &c, &c_span, 3),
            entry("[V,d3]", &comm, &comm_span, 5),
            entry("[V,d3,d3]", &comm2, &comm2_span, 2),
        ],
        statements: vec![
            statement("d3 quadratic", false, comm2.is_zero()),
            statement("C_V(d3) < [V,d3]", true, below),
            statement("C_V(d3) totally isotropic", true, form.is_totally_isotropic(&c)),
        ],
    });

    let pairs: [(&'static str, &str, [&FieldMatrix; 2], Vec<Vector>); 3] = [
        ("iv", "C_V(<d1,d2>)", [&g.d1, &g.d2], vec![p("eee"), p("eef")]),
        ("v", "C_V(<d1,d3>)", [&g.d1, &g.d3], vec![p("eee"), combo(&[(1, "eef"), (-1, "efe")])]),
        (
            "vi",
            "C_V(<d2,d3>)",
            [&g.d2, &g.d3],
            vec![p("eee"), combo(&[(1, "fee"), (1, "efe"), (1, "eef")])],
        ),
    ];
    for (clause, name, ms, spanning) in pairs {
        let c = fix(&ms);
        out.push(TableClause {
            clause,
            spaces: vec![entry(name, &c, &spanning, 2)],
            statements: vec![],
        });
    }

    let c = fix(&[&g.d1, &g.d2, &g.d3]);
    out.push(TableClause {
        clause: "vii",
        spaces: vec![entry("C_V(D)", &c, &[p("eee")], 1)],
        statements: vec![],
    });

    let c = fix(&[&g.pi]);
    let pi_span = [
        p("eee"),
        p("eef"),
        p("ffe"),
        p("fff"),
        combo(&[(1, "efe"), (1, "fee")]),
        combo(&[(1, "eff"), (1, "fef")]),
    ];
    out.push(TableClause {
        clause: "viii",
        spaces: vec![entry("C_V(pi)", &c, &pi_span, 6)],
        statements: vec![],
    });
    out
}

/// Abstract `2^2 × Q_8`, the reference for `C_R(π)`.
pub fn reference_2x2xq8() -> SmallGroup {
    let c2 = SmallGroup::cyclic(2);
    let q8 = build_e2(1, QuadType::Minus).to_small();
    SmallGroup::direct_product(&SmallGroup::direct_product(&c2, &c2), &q8)
}

/// Data for the centralizer of `π` in `X`.
#[derive(Clone, Debug, Serialize)]
pub struct PiCentralizerReport {
    pub centralizer_order: u64,
    pub class_length: usize,
    pub c_r_pi: Fingerprint,
    pub c_r_pi_matches_2x2xq8: bool,
    pub r_pi_order: usize,
    pub r_pi_exponent: u64,
    pub r_pi_in_c_r_pi: bool,
    pub quotient_order: usize,
}

/// `C_X(π)`, `C_R(π)` and `[R, π]`.
pub fn pi_centralizer_in_x(x: &GroupHandle, r: &Enumerated<FieldMatrix>) -> Result<PiCentralizerReport, GroupError> {
    let g = Generators::new();
    let class = x.conjugacy_orbit(&g.pi, 1 << 16)?;
    let c = x.centralizer(&g.pi, 1 << 16)?;
    let c_r = r.centralizer(std::slice::from_ref(&g.pi));
    let fp = Fingerprint::of(&c_r.to_small());
    let comms: Vec<FieldMatrix> = r.elements().iter().map(|y| y.commutator(&g.pi)).collect();
    let r_pi = r.subgroup(&comms);
    let exponent = r_pi.elements().iter().map(|y| y.element_order()).max().unwrap_or(1);
    Ok(PiCentralizerReport {
        centralizer_order: c.order(),
        class_length: class.len(),
        c_r_pi_matches_2x2xq8: fp == Fingerprint::of(&reference_2x2xq8()),
        c_r_pi: fp,
        r_pi_order: r_pi.order(),
        r_pi_exponent: exponent,
        r_pi_in_c_r_pi: r_pi.elements().iter().all(|y| c_r.contains(y)),
        quotient_order: c.order() as usize / (c_r.order() * 2),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetInvolutionReport {
    pub centralizer_order: usize,
    pub subgroup_order: usize,
    pub index: usize,
    pub cosets_with_involution: usize,
    /// A generator of `X*` with similitude factor other than 1 exists.
    pub has_proper_similitude: bool,
}

/// Cosets of `O^2(C_{X*}(π))⟨π⟩` in `C_{X*}(π)` and their involutions.
pub fn pi_cosets_in_xstar(xstar: &GroupHandle) -> Result<CosetInvolutionReport, GroupError> {
    let g = Generators::new();
    let c = xstar.centralizer(&g.pi, 1 << 16)?.enumerate(1 << 16)?;
    let odd: Vec<FieldMatrix> = c
        .elements()
        .iter()
        .filter(|y| y.element_order() % 2 == 1)
        .cloned()
        .collect();
    let mut gens = c.normal_closure(&odd).generators().to_vec();
    gens.push(g.pi.clone());
    let h = c.subgroup(&gens);
    let (reps, coset_of) = c.cosets(&h);
    let mut has_inv = vec![false; reps.len()];
    for (i, y) in c.elements().iter().enumerate() {
        if !y.is_identity() && y.mul(y).is_identity() {
            has_inv[coset_of[i]] = true;
        }
    }
    let form = v_form();
    Ok(CosetInvolutionReport {
        centralizer_order: c.order(),
        subgroup_order: h.order(),
        index: reps.len(),
        cosets_with_involution: has_inv.iter().filter(|&&b| b).count(),
        has_proper_similitude: xstar.generators().iter().any(|m| form.preserves_form(m) != Some(1)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_of_v_is_kronecker_cube() {
        let f = v_form();
        assert_eq!(f.eval(&pure("eee"), &pure("fff")), 1);
        assert_eq!(f.eval(&pure("fff"), &pure("eee")), 2);
        let a = combo(&[(1, "efe"), (1, "fee")]);
        let b = combo(&[(1, "eff"), (1, "fef")]);
        assert_eq!(f.eval(&a, &b), 1);
    }

    #[test]
    fn kernel_lifts_to_identity() {
        let i = w::identity();
        let m = w::minus_identity();
        assert!(lift(&m, &m, &i).is_identity());
        assert!(lift(&i, &m, &m).is_identity());
        assert_eq!(lift_base_triple(&i, &i, &i).unwrap(), FieldMatrix::identity(F3, 8));
        let singular = m2([[1, 1], [1, 1]]);
        assert_eq!(lift_base_triple(&i, &singular, &i), Err(TensorError::NotInvertible(1)));
    }

    #[test]
    fn lift_is_multiplicative() {
        let [a, b] = w::q8_generators();
        let d = w::d();
        let lhs = lift(&a, &b, &d).mul(&lift(&d, &a, &b));
        let rhs = lift(&a.mul(&d), &b.mul(&a), &d.mul(&b));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn permutation_lifts() {
        let g = Generators::new();
        assert!(lift_permutation([0, 1, 2]).is_identity());
        assert!(g.pi.mul(&g.pi).is_identity());
        assert_eq!(g.tau.order(), 3);
        let i = w::identity();
        let d = w::d();
        let ti = g.tau.inverse().unwrap();
        assert_eq!(ti.mul(&lift(&d, &i, &i)).mul(&g.tau), lift(&i, &d, &i));
        assert_eq!(fixed_space([&g.pi]).dim(), 6);
    }

    #[test]
    fn generator_orders_and_forms() {
        let g = Generators::new();
        let form = v_form();
        for m in [&g.d1, &g.d2, &g.d3, &g.tau] {
            assert_eq!(m.order(), 3);
        }
        for m in [&g.sigma, &g.pi] {
            assert_eq!(m.order(), 2);
        }
        for m in g.x() {
            assert_eq!(form.preserves_form(&m), Some(1));
        }
        assert_eq!(form.preserves_form(&g.i_i_m), Some(2));
        assert_eq!(w_form().preserves_form(&w::m_neg_e()), Some(2));
        assert_eq!(w_form().preserves_form(&w::m_neg_f()), Some(2));
    }

    #[test]
    fn table_holds() {
        for clause in fixed_space_table() {
            assert!(clause.holds(), "{clause:?}");
        }
    }

    #[test]
    fn r_has_order_128() {
        let r = build_r();
        assert_eq!(r.order(), 128);
        assert_eq!(r.center().order(), 2);
        assert!(r.center().contains(&Generators::new().sigma));
    }

    #[test]
    fn d1_fixes_e_first() {
        let d1 = Generators::new().d1;
        let c = fixed_space([&d1]);
        assert_eq!(c.dim(), 4);
        for l in ["eee", "eef", "efe", "eff"] {
            assert!(c.contains_vector(&pure(l)));
        }
        assert_eq!(basis_label(0), "eee");
        assert_eq!(basis_label(6), "ffe");
    }
}
