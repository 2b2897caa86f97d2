use std::sync::OnceLock;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{CheckEntry, Cost, Outcome, Provenance};
use crate::extraspecial::{build_e2, perp_duality, ExtraspecialModel};
use crate::forms::QuadType;
use crate::group::{Enumerated, Fingerprint, GroupElement, GroupHandle};
use crate::linalg::{Field, FieldMatrix, Vector};
use crate::normalizer::{
    construct_l, construct_p, enumerate_quotient, extraspecial_27, l_report, p_report, sl2_3, LConstruction,
    PConstruction,
};
use crate::semidirect::{self, SemidirectGroup};
use crate::sylow3::{self, SubgroupsOfSReport};
use crate::tensor::{self, Generators};

/// Groups shared between checks, each built on first use.
pub struct Context {
    seed: u64,
    x: OnceLock<GroupHandle>,
    xstar: OnceLock<GroupHandle>,
    r: OnceLock<Enumerated<FieldMatrix>>,
    l: OnceLock<Result<LConstruction, String>>,
    l_gens: OnceLock<Vec<FieldMatrix>>,
    p: OnceLock<Result<PConstruction, String>>,
    q: OnceLock<ExtraspecialModel>,
    subgroups: OnceLock<SubgroupsOfSReport>,
    classes: OnceLock<Result<(semidirect::QClassesReport, Vector), String>>,
}

impl Context {
    pub fn new(seed: u64) -> Self {
        Context {
            seed,
            x: OnceLock::new(),
            xstar: OnceLock::new(),
            r: OnceLock::new(),
            l: OnceLock::new(),
            l_gens: OnceLock::new(),
            p: OnceLock::new(),
            q: OnceLock::new(),
            subgroups: OnceLock::new(),
            classes: OnceLock::new(),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn x(&self) -> &GroupHandle {
        self.x.get_or_init(tensor::build_x)
    }

    fn xstar(&self) -> &GroupHandle {
        self.xstar.get_or_init(tensor::build_xstar)
    }

    fn r(&self) -> &Enumerated<FieldMatrix> {
        self.r.get_or_init(tensor::build_r)
    }

    fn l(&self) -> Result<&LConstruction, String> {
        self.l
            .get_or_init(|| construct_l(self.x(), None).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// A two- or three-element generating set of `L`, for searches.
    fn l_gens(&self) -> Result<&[FieldMatrix], String> {
        let l = self.l()?;
        Ok(self.l_gens.get_or_init(|| l.l.small_generating_set(7)))
    }

    fn p(&self) -> Result<&PConstruction, String> {
        let lc = self.l()?;
        self.p
            .get_or_init(|| construct_p(lc, &enumerate_quotient(lc)).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn q(&self) -> &ExtraspecialModel {
        self.q.get_or_init(sylow3::q_model)
    }

    fn u(&self) -> Result<SemidirectGroup, String> {
        Ok(SemidirectGroup::new(self.q().clone(), self.l()?.l.clone()))
    }

    fn subgroups(&self) -> Result<&SubgroupsOfSReport, String> {
        let gens = self.l_gens()?;
        Ok(self.subgroups.get_or_init(|| sylow3::subgroups_of_s(gens)))
    }

    fn classes(&self) -> Result<&(semidirect::QClassesReport, Vector), String> {
        let u = self.u()?;
        self.classes
            .get_or_init(|| semidirect::two_classes_in_q(&u).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(Clone::clone)
    }
}

fn eq(expected: Value, computed: Value) -> Outcome {
    let passed = expected == computed;
    Outcome { expected, computed, passed }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn fp(g: &Fingerprint) -> Value {
    json!({ "order": g.order, "involutions": g.involutions, "center": g.center_order, "derived": g.derived_order, "exponent": g.exponent })
}

fn table_clause(clause: &str) -> Result<Outcome, String> {
    let table = tensor::fixed_space_table();
    let c = table.iter().find(|c| c.clause == clause).ok_or("missing clause")?;
    let expected: Vec<Value> = c
        .spaces
        .iter()
        .map(|s| json!({ "space": s.name, "dim": s.expected_dim, "equals_listed_span": true }))
        .chain(c.statements.iter().map(|s| json!({ "statement": s.name, "holds": s.expected })))
        .collect();
    let computed: Vec<Value> = c
        .spaces
        .iter()
        .map(|s| json!({ "space": s.name, "dim": s.dim, "equals_listed_span": s.matches_span }))
        .chain(c.statements.iter().map(|s| json!({ "statement": s.name, "holds": s.computed })))
        .collect();
    Ok(eq(json!(expected), json!(computed)))
}

fn t31_i(_: &Context) -> Result<Outcome, String> {
    table_clause("i")
}
fn t31_ii(_: &Context) -> Result<Outcome, String> {
    table_clause("ii")
}
fn t31_iii(_: &Context) -> Result<Outcome, String> {
    table_clause("iii")
}
fn t31_iv(_: &Context) -> Result<Outcome, String> {
    table_clause("iv")
}
fn t31_v(_: &Context) -> Result<Outcome, String> {
    table_clause("v")
}
fn t31_vi(_: &Context) -> Result<Outcome, String> {
    table_clause("vi")
}
fn t31_vii(_: &Context) -> Result<Outcome, String> {
    table_clause("vii")
}
fn t31_viii(_: &Context) -> Result<Outcome, String> {
    table_clause("viii")
}

fn pi_in_x(ctx: &Context) -> Result<Outcome, String> {
    let rep = tensor::pi_centralizer_in_x(ctx.x(), ctx.r()).map_err(err)?;
    Ok(eq(
        json!({ "centralizer_order": 1152, "c_r_pi": fp(&Fingerprint::of(&tensor::reference_2x2xq8())),
                "r_pi_order": 8, "r_pi_exponent": 2, "r_pi_in_c_r_pi": true }),
        json!({ "centralizer_order": rep.centralizer_order, "c_r_pi": fp(&rep.c_r_pi),
                "r_pi_order": rep.r_pi_order, "r_pi_exponent": rep.r_pi_exponent, "r_pi_in_c_r_pi": rep.r_pi_in_c_r_pi }),
    ))
}

fn pi_cosets(ctx: &Context) -> Result<Outcome, String> {
    let rep = tensor::pi_cosets_in_xstar(ctx.xstar()).map_err(err)?;
    Ok(Outcome {
        expected: json!({ "cosets_with_involution": rep.index }),
        computed: json!({ "cosets_with_involution": rep.cosets_with_involution, "index": rep.index,
                          "centralizer_order": rep.centralizer_order }),
        passed: rep.cosets_with_involution == rep.index,
    })
}

fn construct_x(ctx: &Context) -> Result<Outcome, String> {
    Ok(eq(
        json!({ "X": 82944, "X*": 165888 }),
        json!({ "X": ctx.x().order(), "X*": ctx.xstar().order() }),
    ))
}

fn construct_r(ctx: &Context) -> Result<Outcome, String> {
    let g = Generators::new();
    let r = ctx.r();
    let coords = crate::normalizer::RCoordinates::new(&g.r, &g.sigma).map_err(err)?;
    let center = r.center();
    Ok(eq(
        json!({ "order": 128, "quad_type": "Minus", "center_is_sigma": true }),
        json!({ "order": r.order(), "quad_type": format!("{:?}", coords.quadratic().quad_type().map_err(err)?),
                "center_is_sigma": center.order() == 2 && center.contains(&g.sigma) }),
    ))
}

fn construct_l_check(ctx: &Context) -> Result<Outcome, String> {
    let lc = ctx.l()?;
    let rep = l_report(lc, ctx.x());
    Ok(eq(
        json!({ "order": 3317760u64, "r_normal": true, "quotient_order": 25920, "quad_type": "Minus", "x_in_l": true, "index_of_x": 40 }),
        json!({ "order": rep.order, "r_normal": rep.r_normal, "quotient_order": rep.quotient_order,
                "quad_type": format!("{:?}", rep.quad_type), "x_in_l": rep.x_in_l, "index_of_x": rep.index_of_x }),
    ))
}

fn construct_l_alt(ctx: &Context) -> Result<Outcome, String> {
    let lc = ctx.l()?;
    let which: Vec<usize> = (0..36).step_by(5).collect();
    let alt = construct_l(ctx.x(), Some(&which)).map_err(err)?;
    Ok(eq(
        json!({ "order": lc.l.order(), "same_group": true }),
        json!({ "order": alt.l.order(), "same_group": alt.l.is_subgroup_of(&lc.l) && lc.l.is_subgroup_of(&alt.l) }),
    ))
}

fn construct_p_check(ctx: &Context) -> Result<Outcome, String> {
    let rep = p_report(ctx.l()?, ctx.p()?);
    Ok(eq(
        json!({ "order": 82944, "o3": fp(&Fingerprint::of(&extraspecial_27())), "top": fp(&Fingerprint::of(&sl2_3())),
                "contains_r_d_tau_pi": true }),
        json!({ "order": rep.order, "o3": fp(&rep.o3), "top": fp(&rep.top), "contains_r_d_tau_pi": rep.contains_r_d_tau_pi }),
    ))
}

fn q_model_check(ctx: &Context) -> Result<Outcome, String> {
    let q = ctx.q();
    let exponent_three = q.elements().all(|x| x.pow(3).is_identity());
    let lifts: Vec<_> = (0..8).map(|i| q.element(Vector::unit(Field::GF3, 8, i), 0)).collect();
    let form = q.form();
    let mut matches = true;
    for (i, x) in lifts.iter().enumerate() {
        for (j, y) in lifts.iter().enumerate() {
            let c = x.commutator(y);
            let ei = Vector::unit(Field::GF3, 8, i);
            let ej = Vector::unit(Field::GF3, 8, j);
            matches &= c.v.is_zero() && c.a == form.eval(&ei, &ej);
        }
    }
    Ok(eq(
        json!({ "order": 19683, "exponent": 3, "commutators_equal_form": true }),
        json!({ "order": q.order(), "exponent": if exponent_three { 3 } else { 9 }, "commutators_equal_form": matches }),
    ))
}

fn duality(ctx: &Context) -> Result<Outcome, String> {
    let l = &ctx.l()?.l;
    let q = ctx.q();
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut holds = 0;
    for _ in 0..200 {
        let y = l.random_element(&mut rng);
        let d = perp_duality(q, &y, false);
        if d.centralizer_of_f_is_commutator && d.centralizer_of_commutator_is_f && d.fixed_dim + d.commutator_dim == 8 {
            holds += 1;
        }
    }
    Ok(eq(json!({ "automorphisms": 200, "duality_holds": 200 }), json!({ "automorphisms": 200, "duality_holds": holds })))
}

fn u_structure(ctx: &Context) -> Result<Outcome, String> {
    let u = ctx.u()?;
    let m = semidirect::build_m(&ctx.p()?.p);
    let ru = semidirect::structure_report(&u, 200, ctx.seed);
    let rm = semidirect::structure_report(&m, 200, ctx.seed ^ 1);
    let view = |r: &semidirect::StructureReport| {
        json!({ "order": r.order, "centralizer_of_q": r.centralizer_of_q_order, "z_central": r.z_central,
                "associative": r.random_associativity, "projection_homomorphism": r.projection_homomorphism })
    };
    Ok(eq(
        json!({ "U": { "order": 65303470080u64, "centralizer_of_q": 3, "z_central": true, "associative": true, "projection_homomorphism": true },
                "M": { "order": 1632586752u64, "centralizer_of_q": 3, "z_central": true, "associative": true, "projection_homomorphism": true } }),
        json!({ "U": view(&ru), "M": view(&rm) }),
    ))
}

fn l41_ii(ctx: &Context) -> Result<Outcome, String> {
    let rep = sylow3::basics_report(ctx.q(), ctx.l()?.l.order());
    Ok(eq(
        json!({ "s_order": 81, "s_is_sylow": true, "three_rank": 3 }),
        json!({ "s_order": rep.s_order, "s_is_sylow": rep.s_is_sylow, "three_rank": rep.three_rank }),
    ))
}

fn l41_iii(ctx: &Context) -> Result<Outcome, String> {
    let lc = ctx.l()?;
    let rep = sylow3::order_three_classes(&lc.l, ctx.l_gens()?);
    Ok(eq(
        json!({ "cyclic_subgroups_conjugate_to_d": true, "d_classes_distinct": true }),
        json!({ "cyclic_subgroups_conjugate_to_d": rep.all_cyclic_conjugate_to_d, "d_classes_distinct": rep.d_classes_distinct }),
    ))
    .map(|mut o| {
        o.computed["class_lengths"] = json!(rep.class_lengths);
        o.computed["elements_conjugate_to_d"] = json!(rep.all_conjugate_to_d);
        o
    })
}

fn preimage(ctx: &Context, name: &str, x: &FieldMatrix) -> Value {
    let r = sylow3::preimage_report(ctx.q(), name, x);
    json!({ "fixed_order": r.fixed_order, "preimage_order": r.preimage.order, "abelian": r.preimage.abelian,
            "elementary_abelian": r.preimage.elementary_abelian, "center_order": r.preimage.center_order,
            "equals_commutator": r.equals_commutator, "inside_commutator": r.inside_commutator })
}

fn l41_iv(ctx: &Context) -> Result<Outcome, String> {
    let c = preimage(ctx, "d1", &Generators::new().d1);
    Ok(eq(
        json!({ "fixed_order": 81, "preimage_order": 243, "elementary_abelian": true, "equals_commutator": true }),
        json!({ "fixed_order": c["fixed_order"], "preimage_order": c["preimage_order"],
                "elementary_abelian": c["elementary_abelian"], "equals_commutator": c["equals_commutator"] }),
    ))
}

fn l41_v(ctx: &Context) -> Result<Outcome, String> {
    let c = preimage(ctx, "d2", &Generators::new().d2);
    Ok(eq(
        json!({ "fixed_order": 81, "preimage_order": 243, "abelian": false, "center_order": 27 }),
        json!({ "fixed_order": c["fixed_order"], "preimage_order": c["preimage_order"], "abelian": c["abelian"], "center_order": c["center_order"] }),
    ))
}

fn l41_vi(ctx: &Context) -> Result<Outcome, String> {
    let c = preimage(ctx, "d3", &Generators::new().d3);
    Ok(eq(
        json!({ "fixed_order": 27, "preimage_order": 81, "elementary_abelian": true, "inside_commutator": true }),
        json!({ "fixed_order": c["fixed_order"], "preimage_order": c["preimage_order"],
                "elementary_abelian": c["elementary_abelian"], "inside_commutator": c["inside_commutator"] }),
    ))
}

fn l41_vii(ctx: &Context) -> Result<Outcome, String> {
    let rep = sylow3::basics_report(ctx.q(), 3317760);
    Ok(eq(
        json!({ "c_d_order": 3, "c_d_centralized_by_pi": true, "c_t_order": 9 }),
        json!({ "c_d_order": rep.c_d_order, "c_d_centralized_by_pi": rep.c_d_centralized_by_pi, "c_t_order": rep.c_t_order }),
    ))
}

fn l41_viii(ctx: &Context) -> Result<Outcome, String> {
    let rep = ctx.subgroups()?;
    Ok(eq(
        json!({ "count": 2, "are_d_and_t": true }),
        json!({ "count": rep.exponent_3_order_27, "are_d_and_t": rep.exponent_3_order_27_are_d_and_t }),
    ))
}

fn l41_ix(ctx: &Context) -> Result<Outcome, String> {
    let rep = sylow3::basics_report(ctx.q(), 3317760);
    Ok(eq(
        json!({ "order": 2187, "extraspecial": true, "exponent": 3 }),
        json!({ "order": rep.c_q_pi.order, "extraspecial": rep.c_q_pi.extraspecial, "exponent": rep.c_q_pi.exponent }),
    ))
}

fn l41_x(ctx: &Context) -> Result<Outcome, String> {
    let rep = semidirect::coset_involution_fusion(ctx.r());
    Ok(eq(
        json!({ "group_order": 256, "all_conjugate_to_pi_or_sigma_pi": true, "pi_and_sigma_pi_fused": false }),
        json!({ "group_order": rep.group_order,
                "all_conjugate_to_pi_or_sigma_pi": rep.conjugate_to_pi + rep.conjugate_to_sigma_pi == rep.involutions_in_coset,
                "pi_and_sigma_pi_fused": rep.pi_sigma_pi_fused }),
    ))
}

fn l42(ctx: &Context) -> Result<Outcome, String> {
    let rep = ctx.subgroups()?;
    Ok(eq(
        json!({ "conjugated_into_d": rep.elementary_abelian_9 }),
        json!({ "conjugated_into_d": rep.conjugated_into_d }),
    ))
    .map(|mut o| {
        o.computed["elementary_abelian_9"] = json!(rep.elementary_abelian_9);
        o.computed["inside_d"] = json!(rep.inside_d);
        o
    })
}

fn l43(ctx: &Context) -> Result<Outcome, String> {
    let rep = ctx.subgroups()?;
    let largest = 3u64.pow(rep.max_fixed_dim as u32);
    Ok(Outcome {
        expected: json!({ "max_fixed_order_at_most": 9 }),
        computed: json!({ "max_fixed_order": largest }),
        passed: largest <= 9,
    })
}

fn l44(ctx: &Context) -> Result<Outcome, String> {
    let rep = semidirect::involution_classes_in_cd3(&ctx.u()?, ctx.r()).map_err(err)?;
    Ok(eq(
        json!({ "involution_classes": 3, "representatives_pi_pisigma_sigma": true, "c_q_orders": [2187, 27, 3], "c_r_d3_is_sigma": true }),
        json!({ "involution_classes": rep.involution_classes, "representatives_pi_pisigma_sigma": rep.representatives_ok,
                "c_q_orders": rep.c_q_orders, "c_r_d3_is_sigma": rep.c_r_d3_is_sigma }),
    ))
    .map(|mut o| {
        o.computed["c_l_d3_order"] = json!(rep.c_l_d3_order);
        o
    })
}

fn l46(ctx: &Context) -> Result<Outcome, String> {
    let rep = sylow3::pi_action(ctx.l_gens()?);
    Ok(eq(
        json!({ "commutator_orders_for_d3_type": [3], "d2_d3_commutator_order": 1, "t_commutator_order": 1 }),
        json!({ "commutator_orders_for_d3_type": rep.commutator_orders, "d2_d3_commutator_order": rep.d2_d3_commutator_order,
                "t_commutator_order": rep.t_commutator_order }),
    ))
    .map(|mut o| {
        o.computed["d3_type_commuting_with_pi"] = json!(rep.d3_type_commuting_with_pi);
        o
    })
}

fn q8_cubed_fp() -> Value {
    let q8 = build_e2(1, QuadType::Minus).to_small();
    let g = crate::group::SmallGroup::direct_product(&crate::group::SmallGroup::direct_product(&q8, &q8), &q8);
    fp(&Fingerprint::of(&g))
}

fn l47_i(ctx: &Context) -> Result<Outcome, String> {
    let rep = semidirect::centralizer_of_pi(&ctx.u()?).map_err(err)?;
    Ok(eq(
        json!({ "quotient_order": 1024u64 * 19683, "c_q_pi_order": 2187, "c_q_pi_extraspecial": true,
                "o2_order": 1024, "o2_quotient": q8_cubed_fp(), "pi_in_derived": true, "class_matches_product": true }),
        json!({ "quotient_order": rep.quotient_order, "c_q_pi_order": rep.c_q_pi.order, "c_q_pi_extraspecial": rep.c_q_pi.extraspecial,
                "o2_order": rep.centralizer.o2_order, "o2_quotient": fp(&rep.o2_quotient), "pi_in_derived": rep.pi_in_derived,
                "class_matches_product": rep.class_matches_product }),
    ))
    .map(|mut o| {
        o.computed["class_length"] = json!(rep.class_length);
        o.computed["c_l_pi_order"] = json!(rep.c_l_pi_order);
        o
    })
}

fn l47_ii(ctx: &Context) -> Result<Outcome, String> {
    let m = semidirect::build_m(&ctx.p()?.p);
    let rep = semidirect::centralizer_of_pi_in_m(&m, &ctx.l()?.l).map_err(err)?;
    Ok(eq(
        json!({ "quotient_order": 128u64 * 19683, "o2_order": 256, "o2_inside_l": true, "contains_center": true }),
        json!({ "quotient_order": rep.quotient_order, "o2_order": rep.centralizer.o2_order,
                "o2_inside_l": rep.o2_inside_l, "contains_center": rep.contains_center }),
    ))
}

fn l48_i(ctx: &Context) -> Result<Outcome, String> {
    let lc = ctx.l()?;
    let rep = semidirect::centralizer_of_r(&ctx.u()?, lc, ctx.r()).map_err(err)?;
    let e2 = fp(&Fingerprint::of(&build_e2(2, QuadType::Minus).to_small()));
    Ok(eq(
        json!({ "c_q_r_order": 243, "c_q_r_extraspecial": true, "c_r_r": fp(&Fingerprint::of(&semidirect::reference_2x2_1_4_minus())),
                "image_order": 960, "o2": e2, "o2_normal": true }),
        json!({ "c_q_r_order": rep.c_q_r.order, "c_q_r_extraspecial": rep.c_q_r.extraspecial, "c_r_r": fp(&rep.c_r_r),
                "image_order": rep.image_order, "o2": fp(&rep.o2), "o2_normal": rep.o2_normal }),
    ))
}

fn l48_iii(ctx: &Context) -> Result<Outcome, String> {
    let lc = ctx.l()?;
    let u = ctx.u()?;
    let r = semidirect::choose_r(lc).map_err(err)?;
    let c_q = ctx.q().centralizer(std::slice::from_ref(&r)).map_err(err)?.vectors;
    let c_l = lc.l.centralizer(&r, 1 << 20).map_err(err)?;
    let o2 = c_l.pointwise_stabilizer(c_q.basis().rows()).map_err(err)?.enumerate(1 << 12).map_err(err)?;
    let id = FieldMatrix::identity(Field::GF3, 8);
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let (mut sampled, mut normalized, mut good) = (0, 0, 0);
    while sampled < 200 {
        // 2-part of a random element generates a candidate 2-subgroup; pairs give non-cyclic ones
        let mut gens = Vec::new();
        for _ in 0..2 {
            let g = c_l.random_element(&mut rng);
            let n = g.element_order();
            let odd = n >> n.trailing_zeros();
            gens.push(g.pow(odd));
        }
        let k = match Enumerated::closure(&id, &gens, 1 << 12) {
            Ok(k) if k.order().is_power_of_two() => k,
            _ => continue,
        };
        sampled += 1;
        if semidirect::normalized_by(&u, &k, &c_q) {
            normalized += 1;
            if semidirect::centralizes(&k, &c_q) && k.is_subgroup_of(&o2) {
                good += 1;
            }
        }
    }
    Ok(Outcome {
        expected: json!({ "normalized_implies_inside_o2": true }),
        computed: json!({ "sampled": sampled, "normalized": normalized, "inside_o2": good }),
        passed: normalized == good && normalized > 0,
    })
}

fn l49_orbits(ctx: &Context) -> Result<Outcome, String> {
    let (rep, _) = ctx.classes()?;
    Ok(eq(
        json!({ "orbit_sizes": [1440, 5120], "stabilizer_of_rho": 2304, "c_u_rho_order": 256u64 * 59049, "classes_cover_q_minus_z": true }),
        json!({ "orbit_sizes": rep.orbit_sizes, "stabilizer_of_rho": rep.stabilizer_orders[0], "c_u_rho_order": rep.c_u_rho_order,
                "classes_cover_q_minus_z": rep.classes_cover_q_minus_z }),
    ))
    .map(|mut o| {
        o.computed["class_lengths"] = json!(rep.class_lengths);
        o.computed["stabilizer_orders"] = json!(rep.stabilizer_orders);
        o
    })
}

fn l49_ii(ctx: &Context) -> Result<Outcome, String> {
    let (_, rho) = ctx.classes()?;
    let rep = semidirect::fingerprint_cr2_centralizer(&ctx.u()?, rho, ctx.r()).map_err(err)?;
    Ok(eq(
        json!({ "quotient_order": 256u64 * 19683, "j_order": 128, "q_j_order": 2187, "q_j_extraspecial": true,
                "c_q_rho_splits": true, "complement_normalized": true, "c_r_rho_order": 4, "c_r_rho_elementary": true }),
        json!({ "quotient_order": rep.quotient_order, "j_order": rep.j_order, "q_j_order": rep.q_j.order,
                "q_j_extraspecial": rep.q_j.extraspecial, "c_q_rho_splits": rep.c_q_rho_splits,
                "complement_normalized": rep.complement_normalized, "c_r_rho_order": rep.c_r_rho_order,
                "c_r_rho_elementary": rep.c_r_rho_elementary }),
    ))
}

fn coverage(_: &Context) -> Result<Outcome, String> {
    let (unknown, missing) = super::coverage_gaps();
    let ids: std::collections::BTreeSet<&str> = REGISTRY.iter().map(|e| e.id).collect();
    Ok(eq(
        json!({ "missing": [], "unknown": [], "ids_unique": true }),
        json!({ "missing": missing, "unknown": unknown, "ids_unique": ids.len() == REGISTRY.len() }),
    ))
}

macro_rules! entry {
    ($id:expr, $desc:expr, $prov:ident, $cost:ident, [$($c:expr),*], $f:expr) => {
        CheckEntry { id: $id, description: $desc, provenance: Provenance::$prov, cost: Cost::$cost, covers: &[$($c),*], run: $f }
    };
}

pub(super) static REGISTRY: &[CheckEntry] = &[
    entry!("lemma-3.1-i", "fixed and commutator space of d1, isotropy", Paper, Fast, ["3.1(i)"], t31_i),
    entry!("lemma-3.1-ii", "fixed, commutator and second commutator space of d2", Paper, Fast, ["3.1(ii)"], t31_ii),
    entry!("lemma-3.1-iii", "fixed, commutator and second commutator space of d3", Paper, Fast, ["3.1(iii)"], t31_iii),
    entry!("lemma-3.1-iv", "fixed space of <d1,d2>", Paper, Fast, ["3.1(iv)"], t31_iv),
    entry!("lemma-3.1-v", "fixed space of <d1,d3>", Paper, Fast, ["3.1(v)"], t31_v),
    entry!("lemma-3.1-vi", "fixed space of <d2,d3>", Paper, Fast, ["3.1(vi)"], t31_vi),
    entry!("lemma-3.1-vii", "fixed space of D", Paper, Fast, ["3.1(vii)"], t31_vii),
    entry!("lemma-3.1-viii", "fixed space of pi", Paper, Fast, ["3.1(viii)"], t31_viii),
    entry!("lemma-3.2", "centralizer of pi in X, C_R(pi) and [R,pi]", Paper, Fast, ["3.2"], pi_in_x),
    entry!("lemma-3.3", "involutions in the cosets of O^2(C)<pi> in C_{X*}(pi)", Paper, Fast, ["3.3"], pi_cosets),
    entry!("construct-x", "orders of X and X*", Paper, Fast, ["X"], construct_x),
    entry!("construct-r", "R of order 128 with minus-type quotient", Paper, Fast, ["R"], construct_r),
    entry!("construct-l", "L = N(R): order, normality, L/R, index of X", Paper, Slow, ["L"], construct_l_check),
    entry!("construct-l-alt", "L rebuilt from a subset of the reflections", Derived, Slow, ["L"], construct_l_alt),
    entry!("construct-p", "P: order and structure of P/R", Paper, Slow, ["P"], construct_p_check),
    entry!("q-model", "Q: order, exponent, commutation form", Paper, Fast, ["Q"], q_model_check),
    entry!("lemma-2.6-duality", "C_E(F) = [E,y] and C_E([E,y]) = F for random y in L", Paper, Medium, ["2.6"], duality),
    entry!("u-structure", "U and M: orders, centralizer of Q, associativity", Derived, Slow, ["U", "M"], u_structure),
    entry!("lemma-4.1-ii", "S is Sylow in L, 3-rank 3", Paper, Medium, ["4.1(ii)"], l41_ii),
    entry!("lemma-4.1-iii", "order-3 subgroups of S are conjugate to <d_i>", Paper, Medium, ["4.1(iii)"], l41_iii),
    entry!("lemma-4.1-iv", "preimage of C_{Q/Z}(d1)", Paper, Fast, ["4.1(iv)"], l41_iv),
    entry!("lemma-4.1-v", "preimage of C_{Q/Z}(d2)", Paper, Fast, ["4.1(v)"], l41_v),
    entry!("lemma-4.1-vi", "preimage of C_{Q/Z}(d3)", Paper, Fast, ["4.1(vi)"], l41_vi),
    entry!("lemma-4.1-vii", "C_{Q/Z}(D) and C_{Q/Z}(T)", Paper, Fast, ["4.1(vii)"], l41_vii),
    entry!("lemma-4.1-viii", "exponent-3 subgroups of order 27 in S", Paper, Medium, ["4.1(viii)"], l41_viii),
    entry!("lemma-4.1-ix", "C_Q(pi) extraspecial of order 3^7", Paper, Fast, ["4.1(ix)"], l41_ix),
    entry!("lemma-4.1-x", "involutions of the coset R pi up to R<pi>-conjugacy", Paper, Fast, ["4.1(x)"], l41_x),
    entry!("lemma-4.2", "elementary abelian 9-subgroups of S conjugate into D", Paper, Medium, ["4.2"], l42),
    entry!("lemma-4.3", "|C_{Q/Z}(E)| <= 9 for elementary abelian E of order 9", Paper, Medium, ["4.3"], l43),
    entry!("lemma-4.4", "involution classes of C_L(d3)", Paper, Medium, ["4.4"], l44),
    entry!("lemma-4.6", "[C_{Q/Z}(y), pi] for y of type d3 and for <d2,d3>, T", Paper, Medium, ["4.6"], l46),
    entry!("lemma-4.7-i", "C_U(pi)", Paper, Slow, ["4.7(i)"], l47_i),
    entry!("lemma-4.7-ii", "C_M(pi)", Paper, Slow, ["4.7(ii)"], l47_ii),
    entry!("lemma-4.8-i", "C_U(r) for an involution r in R", Paper, Slow, ["4.8(i)"], l48_i),
    entry!("lemma-4.8-iii", "2-subgroups of C_L(r) normalized by C_Q(r) lie in O_2(C_U(r))", Paper, Slow, ["4.8(iii)"], l48_iii),
    entry!("lemma-4.9-orbits", "L-orbits on Q/Z and the two classes in Q minus Z", Paper, Medium, ["4.9(i)"], l49_orbits),
    entry!("lemma-4.9-ii", "C_U(rho) for rho in the short orbit", Paper, Slow, ["4.9(ii)"], l49_ii),
    entry!("registry-coverage", "every manifest statement has a check", Trivial, Fast, [], coverage),
];
