//! Property suites shared by the property tests and the acceptance run.
#![allow(dead_code)]

use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestError, TestRng, TestRunner};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use spgroups::forms::{QuadType, QuadraticForm2};
use spgroups::group::{Bsgs, Enumerated, GroupElement, GroupHandle};
use spgroups::linalg::{Field, FieldMatrix, Subspace, Vector};
use spgroups::semidirect::SemidirectGroup;
use spgroups::sylow3::q_model;
use spgroups::tensor::{build_x, v_form};

pub const CASES: u32 = 200;

pub struct Suite {
    pub name: &'static str,
    pub run: fn(u64) -> Result<u32, String>,
}

pub const SUITES: &[Suite] = &[
    Suite { name: "rank-nullity", run: rank_nullity },
    Suite { name: "modular law", run: modular_law },
    Suite { name: "perp involution", run: perp_involution },
    Suite { name: "bsgs vs enumeration", run: bsgs_brute_force },
    Suite { name: "bsgs determinism", run: bsgs_determinism },
    Suite { name: "semidirect associativity", run: semidirect_associativity },
    Suite { name: "quadratic type vs Arf", run: quad_type_vs_arf },
];

fn runner(seed: u64) -> TestRunner {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    let config = Config { cases: CASES, failure_persistence: None, max_global_rejects: 20_000, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &bytes))
}

fn finish<T: std::fmt::Debug>(r: Result<(), TestError<T>>) -> Result<u32, String> {
    r.map(|_| CASES).map_err(|e| e.to_string())
}

fn field_of(b: bool) -> Field {
    if b {
        Field::GF3
    } else {
        Field::GF2
    }
}

fn matrix(field: Field, rows: usize, cols: usize, values: &[i64]) -> FieldMatrix {
    let rs: Vec<Vec<i64>> = values.chunks(cols).take(rows).map(|c| c.to_vec()).collect();
    FieldMatrix::from_values(field, &rs)
}

fn span(field: Field, n: usize, values: &[i64]) -> Subspace {
    Subspace::from_vectors(field, n, values.chunks(n).map(|c| Vector::from_values(field, c)))
}

pub fn rank_nullity(seed: u64) -> Result<u32, String> {
    let strat = (any::<bool>(), 1usize..=9, 1usize..=9, vec(0i64..3, 81));
    finish(runner(seed).run(&strat, |(f, r, c, vals)| {
        let m = matrix(field_of(f), r, c, &vals);
        let rank = m.rank();
        prop_assert_eq!(rank + m.right_kernel().dim(), c);
        prop_assert_eq!(rank + m.left_kernel().dim(), r);
        prop_assert_eq!(rank, m.transpose().rank());
        for v in m.left_kernel().basis().rows() {
            prop_assert!(m.apply(v).is_zero());
        }
        Ok(())
    }))
}

pub fn modular_law(seed: u64) -> Result<u32, String> {
    let strat = (any::<bool>(), 0usize..4, 0usize..4, 0usize..4, vec(0i64..3, 72));
    finish(runner(seed).run(&strat, |(f, ka, kb, kc, vals)| {
        let field = field_of(f);
        let n = 6;
        let a = span(field, n, &vals[..ka * n]);
        let b = span(field, n, &vals[24..24 + kb * n]);
        let c = a.sum(&span(field, n, &vals[48..48 + kc * n])).unwrap();
        let left = a.sum(&b.intersection(&c).unwrap()).unwrap();
        let right = a.sum(&b).unwrap().intersection(&c).unwrap();
        prop_assert_eq!(left, right);
        let dim_sum = a.sum(&b).unwrap().dim() + a.intersection(&b).unwrap().dim();
        prop_assert_eq!(dim_sum, a.dim() + b.dim());
        Ok(())
    }))
}

pub fn perp_involution(seed: u64) -> Result<u32, String> {
    let form = v_form();
    let strat = (0usize..=8, vec(0i64..3, 64));
    finish(runner(seed).run(&strat, |(k, vals)| {
        let s = span(Field::GF3, 8, &vals[..k * 8]);
        let p = form.perp(&s);
        prop_assert_eq!(s.dim() + p.dim(), 8);
        prop_assert_eq!(form.perp(&p), s.clone());
        for v in s.basis().rows() {
            for w in p.basis().rows() {
                prop_assert_eq!(form.eval(v, w), 0);
            }
        }
        Ok(())
    }))
}

fn random_invertible(field: Field, n: usize, seed: u64) -> FieldMatrix {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..3)).collect()).collect();
        let m = FieldMatrix::from_values(field, &rows);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Generators of a group of order at most 5000, when the two random
/// matrices generate one.
fn small_group(f: bool, n: usize, s1: u64, s2: u64) -> Option<(Field, Vec<FieldMatrix>, Enumerated<FieldMatrix>)> {
    let field = field_of(f);
    let gens = vec![random_invertible(field, n, s1), random_invertible(field, n, s2)];
    let e = Enumerated::closure(&FieldMatrix::identity(field, n), &gens, 5000).ok()?;
    Some((field, gens, e))
}

pub fn bsgs_brute_force(seed: u64) -> Result<u32, String> {
    let strat = (any::<bool>(), 2usize..=4, any::<u64>(), any::<u64>(), any::<u64>());
    finish(runner(seed).run(&strat, |(f, n, s1, s2, s3)| {
        let group = small_group(f, n, s1, s2);
        prop_assume!(group.is_some());
        let (field, gens, e) = group.unwrap();
        let h = GroupHandle::new(field, n, gens).unwrap();
        prop_assert_eq!(h.order(), e.order() as u64);
        for x in e.elements().iter().step_by(7) {
            prop_assert!(h.contains(x));
        }
        let probe = random_invertible(field, n, s3);
        prop_assert_eq!(h.contains(&probe), e.contains(&probe));
        Ok(())
    }))
}

pub fn bsgs_determinism(seed: u64) -> Result<u32, String> {
    let strat = (any::<bool>(), 2usize..=4, any::<u64>(), any::<u64>());
    finish(runner(seed).run(&strat, |(f, n, s1, s2)| {
        let group = small_group(f, n, s1, s2);
        prop_assume!(group.is_some());
        let (field, gens, e) = group.unwrap();
        let a = Bsgs::build(field, n, &gens, &[]);
        let b = Bsgs::build(field, n, &gens, &[]);
        prop_assert_eq!(a.base(), b.base());
        prop_assert_eq!(a.basic_orbit_lengths(), b.basic_orbit_lengths());
        prop_assert_eq!(a.strong_generators(), b.strong_generators());
        prop_assert_eq!(a.order(), e.order() as u64);
        Ok(())
    }))
}

pub fn semidirect_associativity(seed: u64) -> Result<u32, String> {
    let u = SemidirectGroup::new(q_model(), build_x());
    let strat = any::<u64>();
    finish(runner(seed).run(&strat, |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let a = u.random_element(&mut rng);
        let b = u.random_element(&mut rng);
        let c = u.random_element(&mut rng);
        prop_assert_eq!(a.op(&b).op(&c), a.op(&b.op(&c)));
        prop_assert!(a.op(&a.inverse()).is_identity());
        prop_assert_eq!(a.op(&b).l, a.l.mul(&b.l));
        Ok(())
    }))
}

/// Arf invariant through a symplectic basis of the polar form.
pub fn arf(q: &QuadraticForm2) -> u8 {
    let n = q.dim();
    let mut rest: Vec<Vector> = (0..n).map(|i| Vector::unit(Field::GF2, n, i)).collect();
    let mut total = 0;
    while let Some(e) = rest.pop() {
        let Some(pos) = rest.iter().position(|w| q.polar(&e, w) == 1) else {
            continue;
        };
        let f = rest.swap_remove(pos);
        total ^= q.eval(&e) & q.eval(&f);
        rest = rest
            .into_iter()
            .map(|w| {
                // project w onto the complement of <e, f>
                let mut w = w;
                if q.polar(&w, &f) == 1 {
                    w = w.add(&e);
                }
                if q.polar(&w, &e) == 1 {
                    w = w.add(&f);
                }
                w
            })
            .collect();
    }
    total
}

pub fn quad_type_vs_arf(seed: u64) -> Result<u32, String> {
    let strat = (1usize..=4, vec(0i64..2, 64));
    finish(runner(seed).run(&strat, |(h, vals)| {
        let n = 2 * h;
        let m = matrix(Field::GF2, n, n, &vals);
        let q = QuadraticForm2::new(&m).unwrap();
        prop_assume!(q.polar_form().is_ok());
        let expected = if arf(&q) == 0 { QuadType::Plus } else { QuadType::Minus };
        prop_assert_eq!(q.quad_type().unwrap(), expected);
        Ok(())
    }))
}
