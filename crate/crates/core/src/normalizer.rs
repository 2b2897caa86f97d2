//! The normalizer `L` of `R` in `Sp(V)` and the parabolic `P ≤ L`.
//!
//! `L` is built by lifting isometries of the quadratic space `R/Z(R)` to
//! automorphisms of `R`, realizing each automorphism by an intertwining
//! matrix on `V`, and keeping the products with similitude factor 1.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::extraspecial::ExtraspecialModel;
use crate::forms::{QuadType, QuadraticForm2, SymplecticForm};
use crate::group::{Enumerated, Fingerprint, GroupElement, GroupError, GroupHandle, SmallGroup};
use crate::linalg::{solve_conjugating_matrix, Field, FieldMatrix, Vector};
use crate::tensor::{self, Generators};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("no intertwiner realizes the reflection in {0:?}")]
    NoIntertwiner(Vector),
    #[error("intertwiner for the reflection in {0:?} is not a similitude")]
    NotSimilitude(Vector),
    #[error("the given matrices do not generate an extraspecial group of order 128")]
    NotExtraspecial,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Coordinates on `R ≅ 2^{1+6}`: every element is `±r_1^{x_1} ⋯ r_6^{x_6}`.
#[derive(Clone, Debug)]
pub struct RCoordinates {
    gens: Vec<FieldMatrix>,
    central: FieldMatrix,
    /// `elements[index(x)]` is the normal-form word for `x`.
    elements: Vec<FieldMatrix>,
    table: HashMap<FieldMatrix, (Vector, bool)>,
    quadratic: QuadraticForm2,
}

impl RCoordinates {
    pub fn new(gens: &[FieldMatrix], central: &FieldMatrix) -> Result<Self, ConstructionError> {
        let n = gens.len();
        let id = FieldMatrix::identity(central.field(), central.nrows());
        let mut elements = Vec::with_capacity(1 << n);
        let mut table = HashMap::new();
        for x in Vector::all(Field::GF2, n) {
            let word = (0..n)
                .filter(|&i| x.get(i) == 1)
                .fold(id.clone(), |acc, i| acc.mul(&gens[i]));
            let neg = word.mul(central);
            if table.insert(word.clone(), (x, false)).is_some() || table.insert(neg, (x, true)).is_some() {
                return Err(ConstructionError::NotExtraspecial);
            }
            elements.push(word);
        }
        let square_is_central = |m: &FieldMatrix| {
            let s = m.mul(m);
            if s == *central {
                Ok(1)
            } else if s.is_identity() {
                Ok(0)
            } else {
                Err(ConstructionError::NotExtraspecial)
            }
        };
        let values: Vec<u8> = gens.iter().map(square_is_central).collect::<Result<_, _>>()?;
        let polar = |i: usize, j: usize| u8::from(gens[i].commutator(&gens[j]) == *central);
        let quadratic = QuadraticForm2::from_values_and_polar(&values, polar);
        let coords = RCoordinates {
            gens: gens.to_vec(),
            central: central.clone(),
            elements,
            table,
            quadratic,
        };
        for x in Vector::all(Field::GF2, n) {
            if square_is_central(coords.lift(&x))? != coords.quadratic.eval(&x) {
                return Err(ConstructionError::NotExtraspecial);
            }
        }
        Ok(coords)
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[FieldMatrix] {
        &self.gens
    }

    pub fn central(&self) -> &FieldMatrix {
        &self.central
    }

    /// Squaring form on `R/Z(R)`: `q(x) = 1` iff the lift of `x` squares to the central involution.
    pub fn quadratic(&self) -> &QuadraticForm2 {
        &self.quadratic
    }

    /// Normal-form lift of a coordinate vector.
    pub fn lift(&self, x: &Vector) -> &FieldMatrix {
        &self.elements[x.index() as usize]
    }

    /// Coordinates and sign of an element of `R`.
    pub fn coords(&self, m: &FieldMatrix) -> Option<(Vector, bool)> {
        self.table.get(m).copied()
    }

    /// Action of `ℓ` (normalizing `R`) on `R/Z(R)` by `r ↦ ℓ^-1 r ℓ`, as a
    /// 6×6 matrix over GF(2) acting on row vectors.
    pub fn induced_matrix(&self, l: &FieldMatrix) -> Option<FieldMatrix> {
        let li = l.inverse()?;
        let mut rows = Vec::with_capacity(self.rank());
        for r in &self.gens {
            rows.push(self.coords(&li.mul(r).mul(l))?.0);
        }
        Some(FieldMatrix::from_rows(Field::GF2, self.rank(), rows))
    }
}

/// Reflection `x ↦ x + b(x, v) v` in a non-singular vector `v`.
pub fn reflection(q: &QuadraticForm2, v: &Vector) -> FieldMatrix {
    let n = q.dim();
    let rows = (0..n).map(|i| {
        let e = Vector::unit(Field::GF2, n, i);
        if q.polar(&e, v) == 1 {
            e.add(v)
        } else {
            e
        }
    });
    FieldMatrix::from_rows(Field::GF2, n, rows)
}

/// Non-singular vectors of `q`, in index order.
pub fn nonsingular_vectors(q: &QuadraticForm2) -> Vec<Vector> {
    Vector::nonzero(Field::GF2, q.dim()).filter(|v| q.eval(v) == 1).collect()
}

/// A matrix on `V` realizing the automorphism of `R` over the isometry `t`.
#[derive(Clone, Debug)]
pub struct LiftedIsometry {
    pub vector: Vector,
    pub matrix: FieldMatrix,
    pub similitude: u8,
}

/// Realize the automorphism `r_i ↦ lift(t(e_i))` of `R` on `V`.
pub fn lift_isometry(
    coords: &RCoordinates,
    form: &SymplecticForm,
    vector: &Vector,
    t: &FieldMatrix,
) -> Result<LiftedIsometry, ConstructionError> {
    let images: Vec<FieldMatrix> = (0..coords.rank()).map(|i| coords.lift(t.row(i)).clone()).collect();
    let g = solve_conjugating_matrix(coords.generators(), &images).ok_or(ConstructionError::NoIntertwiner(*vector))?;
    let similitude = form.preserves_form(&g).ok_or(ConstructionError::NotSimilitude(*vector))?;
    Ok(LiftedIsometry {
        vector: *vector,
        matrix: g,
        similitude,
    })
}

/// Generators of the factor-1 subgroup of `⟨gens⟩`, by Schreier's lemma
/// with coset representatives `1` and the first generator of factor `-1`.
pub fn isometry_subgroup_generators(form: &SymplecticForm, gens: &[FieldMatrix]) -> Vec<FieldMatrix> {
    let lambda: Vec<u8> = gens.iter().map(|g| form.preserves_form(g).expect("similitudes")).collect();
    let Some(k) = lambda.iter().position(|&l| l != 1) else {
        return gens.to_vec();
    };
    let t = &gens[k];
    let ti = t.inverse().unwrap();
    let mut out = Vec::new();
    for (g, &l) in gens.iter().zip(&lambda) {
        if l == 1 {
            out.push(g.clone());
            out.push(t.mul(g).mul(&ti));
        } else {
            out.push(g.mul(&ti));
            out.push(t.mul(g));
        }
    }
    out.retain(|g| !g.is_identity());
    let mut dedup: Vec<FieldMatrix> = Vec::new();
    for g in out {
        if !dedup.contains(&g) {
            dedup.push(g);
        }
    }
    dedup
}

/// `L` together with the data used to build it.
#[derive(Debug)]
pub struct LConstruction {
    pub l: GroupHandle,
    pub coords: RCoordinates,
    pub lifts: Vec<LiftedIsometry>,
    /// `L/R` as a group of 6×6 matrices over GF(2).
    pub image: GroupHandle,
}

/// Build `L = ⟨X, lifted isometries of factor 1⟩`. `which` selects the
/// reflections (by position among the non-singular vectors) whose lifts
/// are used; `None` uses all of them.
pub fn construct_l(x: &GroupHandle, which: Option<&[usize]>) -> Result<LConstruction, ConstructionError> {
    let g = Generators::new();
    let form = tensor::v_form();
    let coords = RCoordinates::new(&g.r, &g.sigma)?;
    let q = coords.quadratic().clone();
    let vectors = nonsingular_vectors(&q);
    let chosen: Vec<usize> = match which {
        Some(w) => w.to_vec(),
        None => (0..vectors.len()).collect(),
    };
    let mut lifts = Vec::new();
    for &i in &chosen {
        let v = vectors[i];
        lifts.push(lift_isometry(&coords, &form, &v, &reflection(&q, &v))?);
    }
    let lift_mats: Vec<FieldMatrix> = lifts.iter().map(|l| l.matrix.clone()).collect();
    let mut gens = x.generators().to_vec();
    gens.extend(isometry_subgroup_generators(&form, &lift_mats));
    let l = GroupHandle::new(Field::GF3, 8, gens)?;
    let image_gens: Vec<FieldMatrix> = l
        .generators()
        .iter()
        .map(|m| coords.induced_matrix(m).expect("generator normalizes R"))
        .collect();
    let image = GroupHandle::new(Field::GF2, coords.rank(), image_gens)?;
    Ok(LConstruction { l, coords, lifts, image })
}

/// Sizes and structure of `L`.
#[derive(Clone, Debug, Serialize)]
pub struct LReport {
    pub order: u64,
    pub quotient_order: u64,
    pub r_normal: bool,
    pub quotient_preserves_form: bool,
    pub quad_type: QuadType,
    pub x_in_l: bool,
    pub index_of_x: u64,
    pub lifted: usize,
    pub lifted_with_factor_one: usize,
}

pub fn l_report(lc: &LConstruction, x: &GroupHandle) -> LReport {
    let q = lc.coords.quadratic();
    let r_normal = lc.l.generators().iter().all(|m| {
        let mi = m.inverse().unwrap();
        lc.coords.generators().iter().all(|r| lc.coords.coords(&mi.mul(r).mul(m)).is_some())
    });
    LReport {
        order: lc.l.order(),
        quotient_order: lc.image.order(),
        r_normal,
        quotient_preserves_form: lc.image.generators().iter().all(|m| q.is_isometry(m)),
        quad_type: q.quad_type().expect("non-degenerate"),
        x_in_l: x.is_subgroup_of(&lc.l),
        index_of_x: lc.l.order() / x.order(),
        lifted: lc.lifts.len(),
        lifted_with_factor_one: lc.lifts.iter().filter(|l| l.similitude == 1).count(),
    }
}

/// `L/R` listed element by element, each with one preimage in `L`.
#[derive(Debug)]
pub struct Quotient {
    pub images: Enumerated<FieldMatrix>,
    pub preimages: Vec<FieldMatrix>,
}

pub fn enumerate_quotient(lc: &LConstruction) -> Quotient {
    let gens = lc.l.generators();
    let images_of_gens: Vec<FieldMatrix> = gens.iter().map(|m| lc.coords.induced_matrix(m).unwrap()).collect();
    let id6 = FieldMatrix::identity(Field::GF2, lc.coords.rank());
    let mut list = vec![id6.clone()];
    let mut pre = vec![FieldMatrix::identity(Field::GF3, 8)];
    let mut seen: HashMap<FieldMatrix, usize> = HashMap::from([(id6.clone(), 0)]);
    let mut k = 0;
    while k < list.len() {
        for (g, ig) in gens.iter().zip(&images_of_gens) {
            let y = list[k].mul(ig);
            if !seen.contains_key(&y) {
                seen.insert(y.clone(), list.len());
                list.push(y);
                pre.push(pre[k].mul(g));
            }
        }
        k += 1;
    }
    let images = Enumerated::closure(&id6, &images_of_gens, usize::MAX).expect("no limit");
    let preimages = images
        .elements()
        .iter()
        .map(|m| pre[seen[m]].clone())
        .collect();
    Quotient { images, preimages }
}

/// `P` with its quotient `P/R` as an explicit group.
#[derive(Debug)]
pub struct PConstruction {
    pub p: GroupHandle,
    /// `P/R` as a subgroup of the matrix image of `L/R`.
    pub quotient: Enumerated<FieldMatrix>,
}

/// `P` = preimage of `N_{L/R}(⟨d_3 R⟩)`; `d_3 R` generates the center of
/// the Sylow 3-subgroup `DR⟨τ⟩/R`.
pub fn construct_p(lc: &LConstruction, quotient: &Quotient) -> Result<PConstruction, ConstructionError> {
    let g = Generators::new();
    let d3 = lc.coords.induced_matrix(&g.d3).expect("d3 normalizes R");
    let z: Vec<FieldMatrix> = vec![d3.clone(), d3.mul(&d3)];
    let n = quotient
        .images
        .filter_subgroup(|m| {
            let c = m.inverse().unwrap().mul(&d3).mul(m);
            z.contains(&c)
        });
    let mut gens: Vec<FieldMatrix> = lc.coords.generators().to_vec();
    gens.extend(
        n.generators()
            .iter()
            .map(|m| quotient.preimages[quotient.images.position(m).unwrap()].clone()),
    );
    let p = GroupHandle::new(Field::GF3, 8, gens)?;
    Ok(PConstruction { p, quotient: n })
}

/// Reference groups for the structure of `P/R`.
pub fn sl2_3() -> SmallGroup {
    let a = FieldMatrix::from_values(Field::GF3, &[[1, 1], [0, 1]]);
    let b = FieldMatrix::from_values(Field::GF3, &[[1, 0], [1, 1]]);
    Enumerated::closure(&FieldMatrix::identity(Field::GF3, 2), &[a, b], 100)
        .unwrap()
        .to_small()
}

pub fn extraspecial_27() -> SmallGroup {
    ExtraspecialModel::odd(SymplecticForm::hyperbolic_plane(Field::GF3)).to_small()
}

#[derive(Clone, Debug, Serialize)]
pub struct PReport {
    pub order: u64,
    pub quotient_order: usize,
    pub o3: Fingerprint,
    pub o3_is_3_1_2_plus: bool,
    pub top: Fingerprint,
    pub top_is_sl2_3: bool,
    pub contains_r_d_tau_pi: bool,
    pub pi_central_in_top: bool,
    pub pi_nontrivial_in_top: bool,
}

pub fn p_report(lc: &LConstruction, pc: &PConstruction) -> PReport {
    let g = Generators::new();
    let n = &pc.quotient;
    let small = n.to_small();
    let o3 = small.o_p(3);
    let o3_group = small.subgroup(&o3);
    let top = small.quotient(&o3);
    let o3_fp = Fingerprint::of(&o3_group);
    let top_fp = Fingerprint::of(&top);
    // image of π in P/O_{2,3}(P) = N/O_3(N)
    let pi_bar = lc.coords.induced_matrix(&g.pi).unwrap();
    let pi_idx = n.position(&pi_bar);
    let (central, nontrivial) = match pi_idx {
        Some(i) => {
            let in_o3 = |x: usize| o3.contains(x);
            let central = (0..small.order()).all(|y| in_o3(small.commutator(i, y)));
            (central, !in_o3(i))
        }
        None => (false, false),
    };
    let mut wanted = lc.coords.generators().to_vec();
    wanted.extend([g.d1.clone(), g.d2.clone(), g.d3.clone(), g.tau.clone(), g.pi.clone()]);
    PReport {
        order: pc.p.order(),
        quotient_order: n.order(),
        o3_is_3_1_2_plus: o3_fp == Fingerprint::of(&extraspecial_27()),
        o3: o3_fp,
        top_is_sl2_3: top_fp == Fingerprint::of(&sl2_3()),
        top: top_fp,
        contains_r_d_tau_pi: wanted.iter().all(|m| pc.p.contains(m)),
        pi_central_in_top: central,
        pi_nontrivial_in_top: nontrivial,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_coordinates_are_minus_type() {
        let g = Generators::new();
        let c = RCoordinates::new(&g.r, &g.sigma).unwrap();
        assert_eq!(c.quadratic().quad_type().unwrap(), QuadType::Minus);
        assert_eq!(nonsingular_vectors(c.quadratic()).len(), 36);
        let x = Vector::from_values(Field::GF2, &[1, 0, 1, 1, 0, 1]);
        assert_eq!(c.coords(c.lift(&x)), Some((x, false)));
        assert_eq!(c.coords(&c.lift(&x).mul(&g.sigma)), Some((x, true)));
    }

    #[test]
    fn reflections_are_isometries() {
        let g = Generators::new();
        let c = RCoordinates::new(&g.r, &g.sigma).unwrap();
        let q = c.quadratic();
        for v in nonsingular_vectors(q) {
            let t = reflection(q, &v);
            assert!(q.is_isometry(&t));
            assert!(t.mul(&t).is_identity());
            assert_eq!(t.apply(&v), v);
        }
    }

    #[test]
    fn lifted_reflection_realizes_automorphism() {
        let g = Generators::new();
        let c = RCoordinates::new(&g.r, &g.sigma).unwrap();
        let q = c.quadratic().clone();
        let v = nonsingular_vectors(&q)[0];
        let t = reflection(&q, &v);
        let l = lift_isometry(&c, &tensor::v_form(), &v, &t).unwrap();
        assert_eq!(c.induced_matrix(&l.matrix).unwrap(), t);
    }

    #[test]
    fn x_acts_on_r_mod_center() {
        let g = Generators::new();
        let c = RCoordinates::new(&g.r, &g.sigma).unwrap();
        for m in g.x() {
            let t = c.induced_matrix(&m).expect("X normalizes R");
            assert!(c.quadratic().is_isometry(&t));
        }
        let one = c.induced_matrix(&g.sigma).unwrap();
        assert!(one.is_identity());
    }

    #[test]
    fn reference_groups() {
        let s = sl2_3();
        assert_eq!((s.order(), s.involution_count(), s.derived_subgroup().count_ones(..)), (24, 1, 8));
        let e = extraspecial_27();
        assert_eq!((e.exponent(), e.center().count_ones(..)), (3, 3));
    }
}
