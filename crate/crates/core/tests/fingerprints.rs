//! The invariant fingerprints used in place of isomorphism tests separate the
//! intended groups from the nearby candidates of the same order.

use spgroups::extraspecial::build_e2;
use spgroups::forms::QuadType;
use spgroups::group::{Fingerprint, SmallGroup};
use spgroups::normalizer::{extraspecial_27, sl2_3};
use spgroups::tensor::reference_2x2xq8;

fn e2(n: usize, ty: QuadType) -> SmallGroup {
    build_e2(n, ty).to_small()
}

fn c(n: usize) -> SmallGroup {
    SmallGroup::cyclic(n)
}

fn x(a: &SmallGroup, b: &SmallGroup) -> SmallGroup {
    SmallGroup::direct_product(a, b)
}

fn fp(g: &SmallGroup) -> Fingerprint {
    Fingerprint::of(g)
}

#[test]
fn involution_counts_of_extraspecial_2_groups() {
    assert_eq!(e2(1, QuadType::Minus).involution_count(), 1);
    assert_eq!(e2(1, QuadType::Plus).involution_count(), 5);
    assert_eq!(e2(2, QuadType::Minus).involution_count(), 11);
    assert_eq!(e2(2, QuadType::Plus).involution_count(), 19);
    assert_eq!(e2(3, QuadType::Minus).involution_count(), 55);
}

#[test]
fn order_32_minus_type_is_separated() {
    let minus = fp(&e2(2, QuadType::Minus));
    let others = [
        e2(2, QuadType::Plus),
        x(&c(4), &e2(1, QuadType::Minus)),
        x(&c(2), &x(&c(2), &e2(1, QuadType::Plus))),
        x(&c(2), &x(&c(2), &e2(1, QuadType::Minus))),
    ];
    for o in &others {
        assert_eq!(o.order(), 32);
        assert_ne!(minus, fp(o));
    }
}

#[test]
fn order_64_central_product_is_separated() {
    let target = fp(&x(&c(2), &e2(2, QuadType::Minus)));
    assert_eq!(target.involutions, 23);
    let others = [
        x(&c(2), &e2(2, QuadType::Plus)),
        x(&c(4), &x(&e2(1, QuadType::Minus), &c(2))),
        x(&e2(1, QuadType::Minus), &e2(1, QuadType::Minus)),
        x(&e2(1, QuadType::Minus), &e2(1, QuadType::Plus)),
        x(&c(2), &x(&c(2), &x(&c(2), &e2(1, QuadType::Minus)))),
    ];
    for o in &others {
        assert_eq!(o.order(), 64);
        assert_ne!(target, fp(o));
    }
}

#[test]
fn q8_cubed_is_separated() {
    let q8 = e2(1, QuadType::Minus);
    let d8 = e2(1, QuadType::Plus);
    let target = fp(&x(&x(&q8, &q8), &q8));
    assert_eq!((target.order, target.involutions, target.center_order, target.derived_order), (512, 7, 8, 8));
    for o in [x(&x(&q8, &q8), &d8), x(&x(&q8, &d8), &d8), x(&x(&q8, &q8), &x(&c(4), &c(2)))] {
        assert_ne!(target, fp(&o));
    }
}

#[test]
fn c2_squared_times_q8_is_separated() {
    let target = fp(&reference_2x2xq8());
    assert_eq!(target.involutions, 7);
    let q8 = e2(1, QuadType::Minus);
    let d8 = e2(1, QuadType::Plus);
    for o in [x(&x(&c(2), &c(2)), &d8), x(&c(4), &q8), x(&c(4), &d8), x(&x(&c(2), &c(4)), &c(4))] {
        assert_eq!(o.order(), 32);
        assert_ne!(target, fp(&o));
    }
}

#[test]
fn order_27_and_24_references() {
    let e27 = fp(&extraspecial_27());
    assert_eq!((e27.exponent, e27.center_order), (3, 3));
    assert_ne!(e27, fp(&x(&c(9), &c(3))));
    assert_ne!(e27, fp(&x(&c(3), &x(&c(3), &c(3)))));
    let s = fp(&sl2_3());
    assert_eq!((s.order, s.involutions, s.center_order), (24, 1, 2));
    assert_ne!(s, fp(&x(&c(3), &e2(1, QuadType::Minus))));
}
