//! Cocycle models of extraspecial groups.
//!
//! Elements are pairs `(v, a)` with `v` in `GF(p)^{2n}` and `a` in `GF(p)`,
//! multiplied by `(v, a)(w, b) = (v + w, a + b + c(v, w))` for a bilinear
//! cocycle `c(v, w) = v C w^T`. For `p = 3` the cocycle is `2⟨v, w⟩`; for
//! `p = 2` it is the upper-triangular matrix of a quadratic form, so that
//! squaring recovers the form.

use serde::Serialize;
use thiserror::Error;

use crate::forms::{FormError, QuadType, QuadraticForm2, SymplecticForm};
use crate::group::{GroupElement, SmallGroup};
use crate::linalg::{commutator_space, fixed_space, Field, FieldMatrix, Subspace, Vector};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtraspecialError {
    #[error("matrix is not a similitude of the commutation form")]
    NotSimilitude,
    #[error("matrix does not preserve the quadratic form")]
    NotOrthogonal,
    #[error(transparent)]
    Form(#[from] FormError),
}

/// An element `(v, a)`. Carries its cocycle so that it can be used as a
/// [`GroupElement`]; equality and hashing look at `(v, a)` only.
#[derive(Clone, Debug)]
pub struct ExtraspecialElement {
    pub v: Vector,
    pub a: u8,
    cocycle: std::sync::Arc<FieldMatrix>,
}

impl PartialEq for ExtraspecialElement {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && self.a == other.a
    }
}

impl Eq for ExtraspecialElement {}

impl std::hash::Hash for ExtraspecialElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.v.hash(state);
        self.a.hash(state);
    }
}

impl GroupElement for ExtraspecialElement {
    fn op(&self, other: &Self) -> Self {
        let field = self.v.field();
        let c = self.cocycle.apply(&self.v).dot(&other.v);
        ExtraspecialElement {
            v: self.v.add(&other.v),
            a: field.add(field.add(self.a, other.a), c),
            cocycle: self.cocycle.clone(),
        }
    }

    fn inverse(&self) -> Self {
        let field = self.v.field();
        let c = self.cocycle.apply(&self.v).dot(&self.v);
        ExtraspecialElement {
            v: self.v.neg(),
            a: field.add(field.neg(self.a), c),
            cocycle: self.cocycle.clone(),
        }
    }

    fn is_identity(&self) -> bool {
        self.v.is_zero() && self.a == 0
    }

    fn identity_like(&self) -> Self {
        ExtraspecialElement {
            v: Vector::zero(self.v.field(), self.v.len()),
            a: 0,
            cocycle: self.cocycle.clone(),
        }
    }
}

/// `p^{1+2n}` as a cocycle model.
#[derive(Clone, Debug)]
pub struct ExtraspecialModel {
    field: Field,
    n: usize,
    cocycle: std::sync::Arc<FieldMatrix>,
    /// Commutation form on `E/Z`.
    form: SymplecticForm,
    /// Squaring form, `p = 2` only.
    quadratic: Option<QuadraticForm2>,
}

impl ExtraspecialModel {
    /// Exponent-3 model on a symplectic form over GF(3).
    pub fn odd(form: SymplecticForm) -> Self {
        assert_eq!(form.field(), Field::GF3);
        ExtraspecialModel {
            field: Field::GF3,
            n: form.dim() / 2,
            cocycle: std::sync::Arc::new(form.gram().scale(2)),
            form,
            quadratic: None,
        }
    }

    /// Model of `2^{1+2n}` whose squaring map is `q`.
    pub fn even(q: QuadraticForm2) -> Result<Self, ExtraspecialError> {
        let form = q.polar_form()?;
        Ok(ExtraspecialModel {
            field: Field::GF2,
            n: q.dim() / 2,
            cocycle: std::sync::Arc::new(q.upper().clone()),
            form,
            quadratic: Some(q),
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn prime(&self) -> u64 {
        self.field.order() as u64
    }

    pub fn half_rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn order(&self) -> u64 {
        self.prime().pow(2 * self.n as u32 + 1)
    }

    pub fn form(&self) -> &SymplecticForm {
        &self.form
    }

    pub fn quadratic(&self) -> Option<&QuadraticForm2> {
        self.quadratic.as_ref()
    }

    pub fn element(&self, v: Vector, a: u8) -> ExtraspecialElement {
        assert_eq!(v.len(), self.dim());
        ExtraspecialElement {
            v,
            a: self.field.reduce(a as i64),
            cocycle: self.cocycle.clone(),
        }
    }

    pub fn identity(&self) -> ExtraspecialElement {
        self.element(Vector::zero(self.field, self.dim()), 0)
    }

    /// Generator of the center.
    pub fn central(&self) -> ExtraspecialElement {
        self.element(Vector::zero(self.field, self.dim()), 1)
    }

    pub fn mul(&self, x: &ExtraspecialElement, y: &ExtraspecialElement) -> ExtraspecialElement {
        x.op(y)
    }

    /// Elements numbered as `index(v) * p + a`.
    pub fn element_at(&self, i: usize) -> ExtraspecialElement {
        let p = self.prime() as usize;
        self.element(Vector::from_index(self.field, self.dim(), (i / p) as u128), (i % p) as u8)
    }

    pub fn index_of(&self, x: &ExtraspecialElement) -> usize {
        x.v.index() as usize * self.prime() as usize + x.a as usize
    }

    pub fn elements(&self) -> impl Iterator<Item = ExtraspecialElement> + '_ {
        (0..self.order() as usize).map(|i| self.element_at(i))
    }

    /// Cayley table, for orders up to [`SmallGroup::MAX_ORDER`].
    pub fn to_small(&self) -> SmallGroup {
        SmallGroup::from_fn(self.order() as usize, |i, j| {
            self.index_of(&self.element_at(i).op(&self.element_at(j)))
        })
    }

    /// Image of `x` under the automorphism induced by `g`.
    ///
    /// For `p = 3`, `g` must be a similitude with factor `λ`, acting as
    /// `(v, a) ↦ (vg, λa)`. For `p = 2`, `g` must preserve the squaring form
    /// and acts as `(v, a) ↦ (vg, a + h(v))` with `h` the quadratic
    /// correction making this a homomorphism.
    pub fn sp_action(&self, g: &FieldMatrix, x: &ExtraspecialElement) -> Result<ExtraspecialElement, ExtraspecialError> {
        match self.field {
            Field::GF3 => {
                let lambda = self.form.preserves_form(g).ok_or(ExtraspecialError::NotSimilitude)?;
                Ok(self.element(g.apply(&x.v), self.field.mul(lambda, x.a)))
            }
            Field::GF2 => {
                let h = self.correction(g)?;
                let shift = h.apply(&x.v).dot(&x.v);
                Ok(self.element(g.apply(&x.v), x.a ^ shift))
            }
        }
    }

    /// Upper-triangular `H` with `h(v) = v H v^T` satisfying
    /// `h(v + w) + h(v) + h(w) = c(vg, wg) + c(v, w)`.
    fn correction(&self, g: &FieldMatrix) -> Result<FieldMatrix, ExtraspecialError> {
        let q = self.quadratic.as_ref().expect("p = 2 model has a quadratic form");
        if !q.is_isometry(g) {
            return Err(ExtraspecialError::NotOrthogonal);
        }
        let delta = g.mul(&self.cocycle).mul(&g.transpose()).add(&self.cocycle);
        let mut h = FieldMatrix::zeros(Field::GF2, self.dim(), self.dim());
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                h.set(i, j, delta.get(i, j));
            }
        }
        Ok(h)
    }

    /// The subgroup `C_E(g_1, ..., g_k)` for similitudes `g_i` (`p = 3`).
    pub fn centralizer(&self, gens: &[FieldMatrix]) -> Result<SubgroupData, ExtraspecialError> {
        let mut lambdas = Vec::new();
        for g in gens {
            lambdas.push(self.form.preserves_form(g).ok_or(ExtraspecialError::NotSimilitude)?);
        }
        let fixed = fixed_space(gens.iter());
        let with_center = lambdas.iter().all(|&l| l == 1);
        Ok(SubgroupData::new(self, fixed, with_center))
    }

    /// Preimage of a subspace of `E/Z`.
    pub fn preimage(&self, s: Subspace) -> SubgroupData {
        SubgroupData::new(self, s, true)
    }

    /// Elementwise membership test for a subgroup description.
    pub fn contains(&self, s: &SubgroupData, x: &ExtraspecialElement) -> bool {
        s.vectors.contains_vector(&x.v) && (s.with_center || x.a == 0)
    }
}

/// A subgroup of a `p = 3` model of the form `S̃` (full preimage of a
/// subspace `S` of `E/Z`) or `S × 0` for a totally isotropic `S`.
#[derive(Clone, Debug)]
pub struct SubgroupData {
    pub vectors: Subspace,
    pub with_center: bool,
    pub fingerprint: SubgroupFingerprint,
}

/// Structural data of a subgroup of an extraspecial group, read off from
/// the commutation form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupFingerprint {
    pub order: u64,
    pub exponent: u64,
    pub center_order: u64,
    pub derived_order: u64,
    pub abelian: bool,
    pub extraspecial: bool,
    pub elementary_abelian: bool,
}

impl SubgroupData {
    fn new(model: &ExtraspecialModel, vectors: Subspace, with_center: bool) -> Self {
        let p = model.prime();
        let dim = vectors.dim() as u32;
        let abelian = model.form.is_totally_isotropic(&vectors);
        debug_assert!(with_center || abelian, "a subgroup missing Z lies over a totally isotropic space");
        let z = if with_center { 1 } else { 0 };
        let order = p.pow(dim + z);
        let radical = model.form.radical(&vectors).dim() as u32;
        let fingerprint = SubgroupFingerprint {
            order,
            exponent: if order == 1 { 1 } else { p },
            center_order: if abelian { order } else { p.pow(radical + 1) },
            derived_order: if abelian { 1 } else { p },
            abelian,
            extraspecial: !abelian && radical == 0,
            elementary_abelian: abelian,
        };
        SubgroupData {
            vectors,
            with_center,
            fingerprint,
        }
    }

    pub fn order(&self) -> u64 {
        self.fingerprint.order
    }
}

/// The exponent-3 group `3^{1+8}_+` on a given 8-dimensional symplectic space.
pub fn build_q39(form: SymplecticForm) -> ExtraspecialModel {
    assert_eq!(form.dim(), 8);
    ExtraspecialModel::odd(form)
}

/// Quadratic form of type `ty` on `GF(2)^{2n}`: `n - 1` hyperbolic planes
/// plus a final plane that is hyperbolic or anisotropic.
pub fn standard_quadratic_form(n: usize, ty: QuadType) -> QuadraticForm2 {
    let mut u = FieldMatrix::zeros(Field::GF2, 2 * n, 2 * n);
    for k in 0..n {
        u.set(2 * k, 2 * k + 1, 1);
    }
    if ty == QuadType::Minus && n > 0 {
        u.set(2 * n - 2, 2 * n - 2, 1);
        u.set(2 * n - 1, 2 * n - 1, 1);
    }
    QuadraticForm2::new(&u).expect("GF(2) matrix")
}

/// `2^{1+2n}_±` as a cocycle model.
pub fn build_e2(n: usize, ty: QuadType) -> ExtraspecialModel {
    assert!((1..=11).contains(&n));
    ExtraspecialModel::even(standard_quadratic_form(n, ty)).expect("standard form is non-degenerate")
}

/// Outcome of the duality check for one automorphism `y`.
#[derive(Clone, Debug, Serialize)]
pub struct PerpDuality {
    /// `dim C_{E/Z}(y)`.
    pub fixed_dim: usize,
    /// `dim [E/Z, y]`.
    pub commutator_dim: usize,
    /// `C_E(F) = [E, y]` via the form.
    pub centralizer_of_f_is_commutator: bool,
    /// `C_E([E, y]) = F` via the form.
    pub centralizer_of_commutator_is_f: bool,
    /// Both equalities checked elementwise in the model.
    pub elementwise: Option<bool>,
}

/// Duality between `F` (preimage of `C_{E/Z}(y)`) and `[E, y]` for an
/// isometry `y` of the commutation form. `[E, y]` is taken together with
/// `Z`, i.e. as the preimage of `[E/Z, y]`; the two agree unless `y`
/// is trivial on `E/Z`.
pub fn perp_duality(model: &ExtraspecialModel, y: &FieldMatrix, elementwise: bool) -> PerpDuality {
    let form = model.form();
    let fixed = fixed_space(std::iter::once(y));
    let comm = commutator_space(y, 1);
    let a = form.perp(&fixed) == comm;
    let b = form.perp(&comm) == fixed;
    let elementwise = elementwise.then(|| elementwise_duality(model, y, &fixed));
    PerpDuality {
        fixed_dim: fixed.dim(),
        commutator_dim: comm.dim(),
        centralizer_of_f_is_commutator: a,
        centralizer_of_commutator_is_f: b,
        elementwise,
    }
}

fn elementwise_duality(model: &ExtraspecialModel, y: &FieldMatrix, fixed: &Subspace) -> bool {
    let all: Vec<ExtraspecialElement> = model.elements().collect();
    let commute = |x: &ExtraspecialElement, gens: &[ExtraspecialElement]| gens.iter().all(|g| x.op(g) == g.op(x));
    let lifts = |s: &Subspace| -> Vec<ExtraspecialElement> {
        let mut g: Vec<ExtraspecialElement> = s.basis().rows().iter().map(|v| model.element(*v, 0)).collect();
        g.push(model.central());
        g
    };
    // F as an explicit set: elements fixed by y modulo Z.
    let f_gens = lifts(fixed);
    let in_f = |x: &ExtraspecialElement| {
        let image = model.sp_action(y, x).expect("isometry");
        image.v == x.v
    };
    // [E, y] generated by commutators x^-1 x^y with basis lifts, together with Z.
    let mut comm_gens: Vec<ExtraspecialElement> = (0..model.dim())
        .map(|i| {
            let x = model.element(Vector::unit(model.field(), model.dim(), i), 0);
            x.inverse().op(&model.sp_action(y, &x).expect("isometry"))
        })
        .collect();
    comm_gens.push(model.central());
    let comm_set = crate::group::Enumerated::closure(&model.identity(), &comm_gens, usize::MAX).expect("no limit");
    let comm_list: Vec<ExtraspecialElement> = comm_set.elements().to_vec();
    all.iter().all(|x| {
        let c_f = commute(x, &f_gens);
        let c_comm = commute(x, &comm_list);
        c_f == comm_set.contains(x) && c_comm == in_f(x)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Fingerprint;

    fn q39() -> ExtraspecialModel {
        let w = SymplecticForm::hyperbolic_plane(Field::GF3);
        let g = w.gram().kron(w.gram()).kron(w.gram());
        build_q39(SymplecticForm::new(g).unwrap())
    }

    #[test]
    fn q39_exponent_and_center() {
        let q = q39();
        assert_eq!(q.order(), 19683);
        for x in q.elements().step_by(7) {
            assert!(x.pow(3).is_identity());
        }
        let basis: Vec<ExtraspecialElement> =
            (0..8).map(|i| q.element(Vector::unit(Field::GF3, 8, i), 0)).collect();
        let central = q
            .elements()
            .filter(|x| basis.iter().all(|b| x.op(b) == b.op(x)))
            .count();
        assert_eq!(central, 3);
        let e0 = q.element(Vector::unit(Field::GF3, 8, 0), 0);
        let e7 = q.element(Vector::unit(Field::GF3, 8, 7), 0);
        let c = e0.commutator(&e7);
        assert!(c.v.is_zero());
        assert_eq!(c.a, q.form().eval(&e0.v, &e7.v));
    }

    #[test]
    fn e2_involution_counts() {
        let q8 = build_e2(1, QuadType::Minus).to_small();
        assert_eq!(q8.involution_count(), 1);
        let d8 = build_e2(1, QuadType::Plus).to_small();
        assert_eq!(d8.involution_count(), 5);
        let minus4 = build_e2(2, QuadType::Minus).to_small();
        assert_eq!(minus4.involution_count(), 11);
        let plus4 = build_e2(2, QuadType::Plus).to_small();
        assert_eq!(plus4.involution_count(), 19);
        let minus6 = build_e2(3, QuadType::Minus).to_small();
        assert_eq!(minus6.involution_count(), 55);
        let fp = Fingerprint::of(&minus6);
        assert_eq!((fp.center_order, fp.derived_order), (2, 2));
    }

    #[test]
    fn e2_maximal_elementary_abelian() {
        for n in 1..=3 {
            let plus = build_e2(n, QuadType::Plus).to_small();
            let minus = build_e2(n, QuadType::Minus).to_small();
            assert_eq!(plus.p_rank(2), n as u32 + 1);
            assert_eq!(minus.p_rank(2), n as u32);
        }
    }

    #[test]
    fn e2_squares_realize_form() {
        let e = build_e2(2, QuadType::Minus);
        let q = e.quadratic().unwrap();
        for x in e.elements() {
            let sq = x.op(&x);
            assert!(sq.v.is_zero());
            assert_eq!(sq.a, q.eval(&x.v));
        }
    }

    #[test]
    fn e2_orthogonal_action_is_automorphism() {
        let e = build_e2(1, QuadType::Plus);
        // swapping the two basis vectors of a hyperbolic plane preserves xy
        let g = FieldMatrix::from_values(Field::GF2, &[[0, 1], [1, 0]]);
        for x in e.elements() {
            for y in e.elements() {
                let lhs = e.sp_action(&g, &x.op(&y)).unwrap();
                let rhs = e.sp_action(&g, &x).unwrap().op(&e.sp_action(&g, &y).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn centralizer_fingerprint_matches_brute_force() {
        let q = q39();
        let minus = FieldMatrix::scalar(Field::GF3, 8, 2);
        let c = q.centralizer(std::slice::from_ref(&minus)).unwrap();
        assert_eq!(c.order(), 3);
        let brute = q
            .elements()
            .filter(|x| q.sp_action(&minus, x).unwrap() == *x)
            .count();
        assert_eq!(brute, 3);
    }

    #[test]
    fn duality_for_identity() {
        let q = q39();
        let id = FieldMatrix::identity(Field::GF3, 8);
        let d = perp_duality(&q, &id, true);
        assert_eq!(d.fixed_dim, 8);
        assert_eq!(d.commutator_dim, 0);
        assert!(d.centralizer_of_f_is_commutator && d.centralizer_of_commutator_is_f);
        assert_eq!(d.elementwise, Some(true));
    }
}
