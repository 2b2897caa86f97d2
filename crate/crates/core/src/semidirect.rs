//! The split extensions `U = QL` and `M = QP` at element level, and
//! centralizers of involutions and of elements of `Q` inside them.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::extraspecial::{build_e2, ExtraspecialElement, ExtraspecialModel, SubgroupFingerprint};
use crate::forms::QuadType;
use crate::group::{conjugacy_orbit, p_part, Enumerated, Fingerprint, GroupElement, GroupError, GroupHandle, SmallGroup};
use crate::linalg::{commutator_space_of, fixed_space, Field, FieldMatrix, Subspace, Vector};
use crate::normalizer::LConstruction;
use crate::sylow3::q_model;
use crate::tensor::{self, Generators};

#[derive(Debug, Error)]
pub enum SemidirectError {
    #[error("matrix is not a similitude of the form")]
    NotSimilitude,
    #[error("element is not a non-central involution of R")]
    BadInvolution,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// `(q, ℓ)`, standing for the product `q·ℓ`. Multiplication is
/// `(q₁, ℓ₁)(q₂, ℓ₂) = (q₁·φ_{ℓ₁}(q₂), ℓ₁ℓ₂)` where `φ_ℓ` is the action of
/// `ℓ⁻¹` on `Q`, so that `φ_{ℓ₁ℓ₂} = φ_{ℓ₁}∘φ_{ℓ₂}`.
#[derive(Clone, Debug)]
pub struct SemidirectElement {
    pub q: ExtraspecialElement,
    pub l: FieldMatrix,
    l_inv: Arc<FieldMatrix>,
    lambda: u8,
}

impl PartialEq for SemidirectElement {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.l == other.l
    }
}

impl Eq for SemidirectElement {}

impl std::hash::Hash for SemidirectElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.q.hash(state);
        self.l.hash(state);
    }
}

impl SemidirectElement {
    pub fn new(q: ExtraspecialElement, l: FieldMatrix) -> Result<Self, SemidirectError> {
        let lambda = tensor::v_form().preserves_form(&l).ok_or(SemidirectError::NotSimilitude)?;
        let l_inv = Arc::new(l.inverse().ok_or(SemidirectError::NotSimilitude)?);
        Ok(SemidirectElement { q, l, l_inv, lambda })
    }

    pub fn similitude_factor(&self) -> u8 {
        self.lambda
    }

    /// `φ_ℓ(x) = (v ℓ⁻¹, λ a)`.
    fn act(&self, x: &ExtraspecialElement) -> ExtraspecialElement {
        let mut y = x.clone();
        y.v = self.l_inv.apply(&x.v);
        y.a = Field::GF3.mul(self.lambda, x.a);
        y
    }
}

impl GroupElement for SemidirectElement {
    fn op(&self, other: &Self) -> Self {
        SemidirectElement {
            q: self.q.op(&self.act(&other.q)),
            l: self.l.mul(&other.l),
            l_inv: Arc::new(other.l_inv.mul(&self.l_inv)),
            lambda: Field::GF3.mul(self.lambda, other.lambda),
        }
    }

    fn inverse(&self) -> Self {
        // (q, ℓ)⁻¹ = (φ_ℓ⁻¹(q⁻¹), ℓ⁻¹)
        let q_inv = self.q.inverse();
        let mut y = q_inv.clone();
        y.v = self.l.apply(&q_inv.v);
        y.a = Field::GF3.mul(self.lambda, q_inv.a);
        SemidirectElement {
            q: y,
            l: (*self.l_inv).clone(),
            l_inv: Arc::new(self.l.clone()),
            lambda: self.lambda,
        }
    }

    fn is_identity(&self) -> bool {
        self.q.is_identity() && self.l.is_identity()
    }

    fn identity_like(&self) -> Self {
        let id = FieldMatrix::identity(Field::GF3, self.l.nrows());
        SemidirectElement {
            q: self.q.identity_like(),
            l: id.clone(),
            l_inv: Arc::new(id),
            lambda: 1,
        }
    }
}

/// `Q ⋊ K` for a group `K` of similitudes of `Q/Z`.
#[derive(Clone, Debug)]
pub struct SemidirectGroup {
    pub model: ExtraspecialModel,
    pub complement: GroupHandle,
}

impl SemidirectGroup {
    pub fn new(model: ExtraspecialModel, complement: GroupHandle) -> Self {
        SemidirectGroup { model, complement }
    }

    pub fn order(&self) -> u64 {
        self.model.order() * self.complement.order()
    }

    pub fn identity(&self) -> SemidirectElement {
        self.from_l(&self.complement.identity())
    }

    pub fn from_q(&self, q: ExtraspecialElement) -> SemidirectElement {
        SemidirectElement::new(q, self.complement.identity()).expect("identity")
    }

    pub fn from_l(&self, l: &FieldMatrix) -> SemidirectElement {
        SemidirectElement::new(self.model.identity(), l.clone()).expect("member of the complement")
    }

    pub fn lift(&self, v: &Vector) -> SemidirectElement {
        self.from_q(self.model.element(*v, 0))
    }

    /// Basis lifts of `Q`, its centre, and the given generators of `K`.
    pub fn generators_with(&self, k_gens: &[FieldMatrix]) -> Vec<SemidirectElement> {
        let mut gens: Vec<SemidirectElement> = (0..self.model.dim())
            .map(|i| self.lift(&Vector::unit(Field::GF3, self.model.dim(), i)))
            .collect();
        gens.push(self.from_q(self.model.central()));
        gens.extend(k_gens.iter().map(|l| self.from_l(l)));
        gens
    }

    pub fn generators(&self) -> Vec<SemidirectElement> {
        self.generators_with(self.complement.generators())
    }

    pub fn random_element(&self, rng: &mut impl rand::Rng) -> SemidirectElement {
        let i = rng.gen_range(0..self.model.order() as usize);
        let q = self.model.element_at(i);
        SemidirectElement::new(q, self.complement.random_element(rng)).expect("member")
    }
}

pub fn build_u(lc: &LConstruction) -> SemidirectGroup {
    SemidirectGroup::new(q_model(), lc.l.clone())
}

pub fn build_m(p: &GroupHandle) -> SemidirectGroup {
    SemidirectGroup::new(q_model(), p.clone())
}

/// Orders and the centre of `U` or `M`.
#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub order: u64,
    /// Elements of the complement acting trivially on `Q/Z`.
    pub kernel_on_q: u64,
    pub c_q_q_order: u64,
    /// `|C(Q)|`, from the two factors above.
    pub centralizer_of_q_order: u64,
    /// All generators of the complement have similitude factor 1, so
    /// `Z` is central.
    pub z_central: bool,
    pub random_associativity: bool,
    pub projection_homomorphism: bool,
}

pub fn structure_report(u: &SemidirectGroup, samples: usize, seed: u64) -> StructureReport {
    use rand::SeedableRng;
    let basis: Vec<Vector> = (0..8).map(|i| Vector::unit(Field::GF3, 8, i)).collect();
    let kernel = u.complement.pointwise_stabilizer(&basis).map(|h| h.order()).unwrap_or(0);
    let zq = u.model.preimage(u.model.form().radical(&Subspace::full(Field::GF3, 8))).order();
    let z_central = u
        .complement
        .generators()
        .iter()
        .all(|l| u.model.form().preserves_form(l) == Some(1));
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut assoc = true;
    let mut proj = true;
    for _ in 0..samples {
        let a = u.random_element(&mut rng);
        let b = u.random_element(&mut rng);
        let c = u.random_element(&mut rng);
        assoc &= a.op(&b).op(&c) == a.op(&b.op(&c));
        assoc &= a.op(&a.inverse()).is_identity();
        proj &= a.op(&b).l == a.l.mul(&b.l);
    }
    StructureReport {
        order: u.order(),
        kernel_on_q: kernel,
        c_q_q_order: zq,
        centralizer_of_q_order: kernel * zq,
        z_central,
        random_associativity: assoc,
        projection_homomorphism: proj,
    }
}

/// Order of a centralizer together with its 2- and 3-parts.
#[derive(Clone, Debug, Serialize)]
pub struct CentralizerReport {
    pub subject: String,
    pub order: u64,
    pub o2_order: u64,
    pub o3_order: u64,
}

impl CentralizerReport {
    fn new(subject: &str, order: u64, o2_order: u64, o3_order: u64) -> Self {
        CentralizerReport {
            subject: subject.to_string(),
            order,
            o2_order,
            o3_order,
        }
    }
}

fn q8_cubed() -> SmallGroup {
    let q8 = build_e2(1, QuadType::Minus).to_small();
    SmallGroup::direct_product(&SmallGroup::direct_product(&q8, &q8), &q8)
}

/// Generators of the conjugation action of `U`, kept small.
fn conjugating_generators(u: &SemidirectGroup, seed: u64) -> Vec<SemidirectElement> {
    let small = u.complement.small_generating_set(seed);
    u.generators_with(&small)
}

#[derive(Clone, Debug, Serialize)]
pub struct PiReport {
    pub centralizer: CentralizerReport,
    pub c_q_pi: SubgroupFingerprint,
    pub c_l_pi_order: u64,
    /// `|C_U(π)/⟨π⟩|`.
    pub quotient_order: u64,
    /// `|U : C_U(π)|` from the conjugacy class of `π` in `U`.
    pub class_length: usize,
    pub class_matches_product: bool,
    pub o2_quotient: Fingerprint,
    pub o2_quotient_matches_q8_cubed: bool,
    pub pi_in_derived: bool,
}

/// `C_U(π) = C_Q(π) C_L(π)`.
pub fn centralizer_of_pi(u: &SemidirectGroup) -> Result<PiReport, SemidirectError> {
    let g = Generators::new();
    let c_q = u.model.centralizer(std::slice::from_ref(&g.pi)).map_err(|_| SemidirectError::NotSimilitude)?;
    let c_l = u.complement.centralizer(&g.pi, 1 << 20)?;
    let order = c_q.order() * c_l.order();
    let class = conjugacy_orbit(&u.from_l(&g.pi), &conjugating_generators(u, 11), 1 << 22)?;
    let c = c_l.enumerate(1 << 20)?;
    let o2 = c.o_p(2);
    let pi_group = o2.subgroup(std::slice::from_ref(&g.pi));
    let quotient = o2.quotient(&pi_group);
    let fp = Fingerprint::of(&quotient);
    let derived = c.derived_subgroup();
    Ok(PiReport {
        centralizer: CentralizerReport::new("pi", order, o2.order() as u64, p_part(order, 3)),
        c_q_pi: c_q.fingerprint,
        c_l_pi_order: c_l.order(),
        quotient_order: order / 2,
        class_length: class.len(),
        class_matches_product: u.order() == class.len() as u64 * order,
        o2_quotient_matches_q8_cubed: fp == Fingerprint::of(&q8_cubed()),
        o2_quotient: fp,
        pi_in_derived: derived.contains(&g.pi),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PiInMReport {
    pub centralizer: CentralizerReport,
    pub quotient_order: u64,
    /// `O₂(C_P(π)) ≤ O₂(C_L(π))`.
    pub o2_inside_l: bool,
    /// `O₂(C_P(π))` contains `Z(O₂(C_L(π)))`.
    pub contains_center: bool,
}

/// `C_M(π)` for `M = QP`, compared against `C_L(π)`.
pub fn centralizer_of_pi_in_m(m: &SemidirectGroup, l: &GroupHandle) -> Result<PiInMReport, SemidirectError> {
    let g = Generators::new();
    let c_q = m.model.centralizer(std::slice::from_ref(&g.pi)).map_err(|_| SemidirectError::NotSimilitude)?;
    let c_p = m.complement.centralizer(&g.pi, 1 << 20)?.enumerate(1 << 20)?;
    let c_l = l.centralizer(&g.pi, 1 << 20)?.enumerate(1 << 20)?;
    let o2_p = c_p.o_p(2);
    let o2_l = c_l.o_p(2);
    let z = o2_l.center();
    let order = c_q.order() * c_p.order() as u64;
    Ok(PiInMReport {
        centralizer: CentralizerReport::new("pi in M", order, o2_p.order() as u64, p_part(order, 3)),
        quotient_order: order / 2,
        o2_inside_l: o2_p.is_subgroup_of(&o2_l),
        contains_center: z.is_subgroup_of(&o2_p),
    })
}

/// Lift of the first singular vector of `R/⟨σ⟩` in index order; an
/// involution of `R` outside `Z(R)`.
pub fn choose_r(lc: &LConstruction) -> Result<FieldMatrix, SemidirectError> {
    let q = lc.coords.quadratic();
    let x = Vector::all(Field::GF2, lc.coords.rank())
        .find(|x| !x.is_zero() && q.eval(x) == 0)
        .ok_or(SemidirectError::BadInvolution)?;
    let r = lc.coords.lift(&x).clone();
    if !r.mul(&r).is_identity() || r == *lc.coords.central() {
        return Err(SemidirectError::BadInvolution);
    }
    Ok(r)
}

/// Abstract `2 × 2^{1+4}_-`.
pub fn reference_2x2_1_4_minus() -> SmallGroup {
    SmallGroup::direct_product(&SmallGroup::cyclic(2), &build_e2(2, QuadType::Minus).to_small())
}

#[derive(Clone, Debug, Serialize)]
pub struct RReport {
    pub centralizer: CentralizerReport,
    pub c_q_r: SubgroupFingerprint,
    pub c_r_r: Fingerprint,
    pub c_r_r_matches: bool,
    pub c_l_r_order: u64,
    pub image_order: u64,
    pub o2: Fingerprint,
    pub o2_matches_2_1_4_minus: bool,
    pub o2_normal: bool,
}

/// `C_U(r)` for the chosen involution `r ∈ R`.
pub fn centralizer_of_r(u: &SemidirectGroup, lc: &LConstruction, r_group: &Enumerated<FieldMatrix>) -> Result<RReport, SemidirectError> {
    let r = choose_r(lc)?;
    let c_q = u.model.centralizer(std::slice::from_ref(&r)).map_err(|_| SemidirectError::NotSimilitude)?;
    let c_r = r_group.centralizer(std::slice::from_ref(&r));
    let c_r_fp = Fingerprint::of(&c_r.to_small());
    let c_l = u.complement.centralizer(&r, 1 << 20)?;
    let image_gens: Vec<FieldMatrix> = c_l
        .generators()
        .iter()
        .map(|m| lc.coords.induced_matrix(m).expect("member of L"))
        .collect();
    let image = GroupHandle::new(Field::GF2, lc.coords.rank(), image_gens)?;
    let fixed = c_q.vectors.basis().rows().to_vec();
    let o2 = c_l.pointwise_stabilizer(&fixed)?;
    let o2_enum = o2.enumerate(1 << 12)?;
    let o2_fp = Fingerprint::of(&o2_enum.to_small());
    let o2_normal = c_l.generators().iter().all(|x| {
        let xi = x.inverse().unwrap();
        o2.generators().iter().all(|y| o2_enum.contains(&xi.mul(y).mul(x)))
    });
    let order = c_q.order() * c_l.order();
    Ok(RReport {
        centralizer: CentralizerReport::new("r", order, o2.order(), p_part(order, 3)),
        c_q_r: c_q.fingerprint,
        c_r_r_matches: c_r_fp == Fingerprint::of(&reference_2x2_1_4_minus()),
        c_r_r: c_r_fp,
        c_l_r_order: c_l.order(),
        image_order: image.order(),
        o2_matches_2_1_4_minus: o2_fp == Fingerprint::of(&build_e2(2, QuadType::Minus).to_small()),
        o2: o2_fp,
        o2_normal,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct QClassesReport {
    pub orbit_sizes: Vec<usize>,
    /// `ρ`, the least vector of the orbit of length 1440.
    pub rho: Vec<u8>,
    pub stabilizer_orders: Vec<u64>,
    pub stabilizer_three_parts: Vec<u64>,
    /// Lengths of the `U`-classes of `ρ̂` and of a lift from the other orbit.
    pub class_lengths: Vec<usize>,
    pub classes_cover_q_minus_z: bool,
    pub c_u_rho_order: u64,
}

/// Orbits of `L` on `Q/Z ∖ 0` and the two classes of `U` on `Q ∖ Z`.
pub fn two_classes_in_q(u: &SemidirectGroup) -> Result<(QClassesReport, Vector), SemidirectError> {
    let nonzero: Vec<Vector> = Vector::all(Field::GF3, 8).filter(|v| !v.is_zero()).collect();
    let mut orbits = u.complement.orbit_partition(&nonzero);
    orbits.sort_by_key(|o| o.len());
    let reps: Vec<Vector> = orbits
        .iter()
        .map(|o| *o.iter().min_by_key(|v| v.index()).expect("non-empty"))
        .collect();
    let rho = reps[0];
    let stabs: Vec<u64> = reps
        .iter()
        .map(|v| u.complement.stabilizer(v).map(|h| h.order()))
        .collect::<Result<_, _>>()?;
    let gens = conjugating_generators(u, 13);
    let classes: Vec<usize> = reps
        .iter()
        .map(|v| conjugacy_orbit(&u.lift(v), &gens, 1 << 20).map(|c| c.len()))
        .collect::<Result<_, _>>()?;
    let c_q_rho = u.model.preimage(u.model.form().perp(&Subspace::from_vectors(Field::GF3, 8, [rho]))).order();
    let report = QClassesReport {
        orbit_sizes: orbits.iter().map(Vec::len).collect(),
        rho: rho.values(),
        stabilizer_three_parts: stabs.iter().map(|&s| p_part(s, 3)).collect(),
        stabilizer_orders: stabs.clone(),
        classes_cover_q_minus_z: classes.iter().sum::<usize>() as u64 == u.model.order() - 3,
        class_lengths: classes,
        c_u_rho_order: c_q_rho * stabs[0],
    };
    Ok((report, rho))
}

#[derive(Clone, Debug, Serialize)]
pub struct RhoReport {
    pub c_u_rho_order: u64,
    pub quotient_order: u64,
    pub j_order: usize,
    pub q_j: SubgroupFingerprint,
    /// `ρ^⊥ = ⟨ρ⟩ ⊕ [V, J]`, i.e. `C_Q(ρ) = ⟨ρ̂⟩ × [Q, J]`.
    pub c_q_rho_splits: bool,
    /// `C_L(ρ)` normalizes `[Q, J]`, so `[Q, J] C_L(ρ)` is a complement to `⟨ρ̂⟩`.
    pub complement_normalized: bool,
    pub c_r_rho_order: usize,
    pub c_r_rho_elementary: bool,
}

/// Structure of `C_U(ρ)` for `ρ` from the orbit of length 1440.
pub fn fingerprint_cr2_centralizer(
    u: &SemidirectGroup,
    rho: &Vector,
    r_group: &Enumerated<FieldMatrix>,
) -> Result<RhoReport, SemidirectError> {
    let c_l = u.complement.stabilizer(rho)?;
    let c = c_l.enumerate(1 << 16)?;
    let j = c.o_p(2);
    let comm = commutator_space_of(j.generators());
    let q_j = u.model.preimage(comm.clone());
    let line = Subspace::from_vectors(Field::GF3, 8, [*rho]);
    let perp = u.model.form().perp(&line);
    let splits = !comm.contains_vector(rho) && line.sum(&comm).map(|s| s == perp).unwrap_or(false);
    let normalized = c_l.generators().iter().all(|x| {
        comm.basis().rows().iter().all(|v| comm.contains_vector(&x.apply(v)))
    });
    let c_r = r_group.filter_subgroup(|x| x.apply(rho) == *rho);
    let order = u.model.preimage(perp).order() * c_l.order();
    Ok(RhoReport {
        c_u_rho_order: order,
        quotient_order: order / 3,
        j_order: j.order(),
        q_j: q_j.fingerprint,
        c_q_rho_splits: splits,
        complement_normalized: normalized,
        c_r_rho_order: c_r.order(),
        c_r_rho_elementary: c_r.elements().iter().all(|x| x.mul(x).is_identity()),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Cd3Report {
    pub c_l_d3_order: u64,
    pub involution_classes: usize,
    /// `|C_Q(·)|` for `π`, `πσ`, `σ`.
    pub c_q_orders: Vec<u64>,
    /// `π`, `πσ`, `σ` lie in distinct classes and every class contains one of them.
    pub representatives_ok: bool,
    pub c_r_d3_is_sigma: bool,
}

/// Involution classes of `C_L(d_3)`.
pub fn involution_classes_in_cd3(u: &SemidirectGroup, r_group: &Enumerated<FieldMatrix>) -> Result<Cd3Report, SemidirectError> {
    let g = Generators::new();
    let c = u.complement.centralizer(&g.d3, 1 << 20)?.enumerate(1 << 16)?;
    let classes: Vec<Vec<usize>> = c
        .conjugacy_classes()
        .into_iter()
        .filter(|cl| {
            let x = &c.elements()[cl[0]];
            !x.is_identity() && x.mul(x).is_identity()
        })
        .collect();
    let reps = [g.pi.clone(), g.pi.mul(&g.sigma), g.sigma.clone()];
    let class_of = |x: &FieldMatrix| {
        let i = c.position(x)?;
        classes.iter().position(|cl| cl.contains(&i))
    };
    let idx: Vec<Option<usize>> = reps.iter().map(class_of).collect();
    let mut distinct: Vec<usize> = idx.iter().flatten().copied().collect();
    distinct.sort_unstable();
    distinct.dedup();
    let c_q_orders: Vec<u64> = reps
        .iter()
        .map(|x| u.model.centralizer(std::slice::from_ref(x)).map(|d| d.order()).unwrap_or(0))
        .collect();
    let c_r = r_group.centralizer(std::slice::from_ref(&g.d3));
    Ok(Cd3Report {
        c_l_d3_order: c.order() as u64,
        involution_classes: classes.len(),
        c_q_orders,
        representatives_ok: distinct.len() == 3 && classes.len() == 3,
        c_r_d3_is_sigma: c_r.order() == 2 && c_r.contains(&g.sigma),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetFusionReport {
    pub group_order: usize,
    pub involutions_in_coset: usize,
    pub conjugate_to_pi: usize,
    pub conjugate_to_sigma_pi: usize,
    pub pi_sigma_pi_fused: bool,
}

/// Involutions of the coset `Rπ` up to conjugation in `R⟨π⟩`.
pub fn coset_involution_fusion(r_group: &Enumerated<FieldMatrix>) -> CosetFusionReport {
    let g = Generators::new();
    let mut gens = r_group.generators().to_vec();
    gens.push(g.pi.clone());
    let h = r_group.subgroup(&gens);
    let coset: Vec<FieldMatrix> = r_group
        .elements()
        .iter()
        .map(|x| x.mul(&g.pi))
        .filter(|y| y.mul(y).is_identity())
        .collect();
    let class_pi = h.conjugacy_class(&g.pi);
    let sp = g.sigma.mul(&g.pi);
    let class_sp = h.conjugacy_class(&sp);
    CosetFusionReport {
        group_order: h.order(),
        involutions_in_coset: coset.len(),
        conjugate_to_pi: coset.iter().filter(|y| class_pi.contains(y)).count(),
        conjugate_to_sigma_pi: coset.iter().filter(|y| class_sp.contains(y)).count(),
        pi_sigma_pi_fused: class_pi.contains(&sp),
    }
}

/// `K ≤ C_L(r)` normalized by `C_Q(r)` (acting inside `U`).
pub fn normalized_by(u: &SemidirectGroup, k: &Enumerated<FieldMatrix>, c_q: &Subspace) -> bool {
    let lifts: Vec<SemidirectElement> = c_q.basis().rows().iter().map(|v| u.lift(v)).collect();
    k.generators().iter().all(|x| {
        let sx = u.from_l(x);
        lifts.iter().all(|y| {
            let c = sx.conj(y);
            c.q.is_identity() && k.contains(&c.l)
        })
    })
}

/// `K` centralizes `C_Q(r)`.
pub fn centralizes(k: &Enumerated<FieldMatrix>, c_q: &Subspace) -> bool {
    k.generators()
        .iter()
        .all(|x| c_q.basis().rows().iter().all(|v| x.apply(v) == *v))
}

/// `C_{Q/Z}(π)` and the like for a list of similitudes; convenience for reports.
pub fn fixed_order(gens: &[FieldMatrix]) -> u64 {
    3u64.pow(fixed_space(gens.iter()).dim() as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::build_x;

    fn small_u() -> SemidirectGroup {
        SemidirectGroup::new(q_model(), build_x())
    }

    #[test]
    fn multiplication_is_associative_with_inverses() {
        let u = small_u();
        let r = structure_report(&u, 200, 5);
        assert!(r.random_associativity && r.projection_homomorphism);
        assert_eq!(r.centralizer_of_q_order, 3);
    }

    #[test]
    fn action_matches_conjugation() {
        let u = small_u();
        let g = Generators::new();
        let x = u.lift(&tensor::pure("eef"));
        let l = u.from_l(&g.d1);
        // ℓ x ℓ⁻¹ = φ_ℓ(x)
        let c = l.op(&x).op(&l.inverse());
        assert!(c.l.is_identity());
        assert_eq!(c.q.v, g.d1.inverse().unwrap().apply(&x.q.v));
    }

    #[test]
    fn identity_and_inverse() {
        let u = small_u();
        let g = Generators::new();
        let e = u.identity();
        let x = u.lift(&tensor::pure("fef")).op(&u.from_l(&g.tau));
        assert_eq!(x.op(&e), x);
        assert!(x.op(&x.inverse()).is_identity());
        assert!(x.inverse().op(&x).is_identity());
    }

    #[test]
    fn coset_fusion() {
        let r = tensor::build_r();
        let rep = coset_involution_fusion(&r);
        assert_eq!(rep.group_order, 256);
        assert!(!rep.pi_sigma_pi_fused);
    }
}
