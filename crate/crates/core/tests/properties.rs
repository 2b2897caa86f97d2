mod common;

use common::*;

const SEED: u64 = 0x5eed;

#[test]
fn rank_nullity_suite() {
    assert_eq!(rank_nullity(SEED), Ok(CASES));
}

#[test]
fn modular_law_suite() {
    assert_eq!(modular_law(SEED), Ok(CASES));
}

#[test]
fn perp_involution_suite() {
    assert_eq!(perp_involution(SEED), Ok(CASES));
}

#[test]
fn bsgs_matches_enumeration() {
    assert_eq!(bsgs_brute_force(SEED), Ok(CASES));
}

#[test]
fn bsgs_is_deterministic() {
    assert_eq!(bsgs_determinism(SEED), Ok(CASES));
}

#[test]
fn semidirect_product_is_associative() {
    assert_eq!(semidirect_associativity(SEED), Ok(CASES));
}

#[test]
fn quadratic_type_matches_arf() {
    assert_eq!(quad_type_vs_arf(SEED), Ok(CASES));
}

#[test]
fn arf_of_standard_planes() {
    let plus = spgroups::extraspecial::standard_quadratic_form(3, spgroups::forms::QuadType::Plus);
    let minus = spgroups::extraspecial::standard_quadratic_form(3, spgroups::forms::QuadType::Minus);
    assert_eq!((arf(&plus), arf(&minus)), (0, 1));
}
