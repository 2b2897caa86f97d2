use std::collections::HashMap;
use std::hash::Hash;
use std::sync::OnceLock;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::bsgs::Bsgs;
use super::element::GroupElement;
use super::enumerated::Enumerated;
use super::GroupError;
use crate::linalg::{Field, FieldMatrix, Vector};

const SAMPLE_SEED: u64 = 0x5eed_0003;
const MAX_SAMPLES: usize = 20_000;

/// Orbit of a point with, for every orbit point, a group element carrying
/// the start point to it.
#[derive(Clone, Debug)]
pub struct Transversal<P, E> {
    points: Vec<P>,
    index: HashMap<P, usize>,
    reps: Vec<E>,
}

impl<P: Clone + Eq + Hash, E: GroupElement> Transversal<P, E> {
    /// Breadth-first orbit. `act(p, i)` is the image of `p` under `gens[i]`.
    pub fn build(
        start: P,
        identity: E,
        gens: &[E],
        act: impl Fn(&P, usize) -> P,
        limit: usize,
    ) -> Result<Self, GroupError> {
        let mut t = Transversal {
            points: vec![start.clone()],
            index: HashMap::from([(start, 0)]),
            reps: vec![identity],
        };
        let mut k = 0;
        while k < t.points.len() {
            for i in 0..gens.len() {
                let img = act(&t.points[k], i);
                if !t.index.contains_key(&img) {
                    if t.points.len() >= limit {
                        return Err(GroupError::OrbitOverflow(limit));
                    }
                    t.index.insert(img.clone(), t.points.len());
                    t.points.push(img);
                    let rep = t.reps[k].op(&gens[i]);
                    t.reps.push(rep);
                }
            }
            k += 1;
        }
        Ok(t)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[P] {
        &self.points
    }

    pub fn position(&self, p: &P) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn rep(&self, i: usize) -> &E {
        &self.reps[i]
    }
}

/// A matrix group acting on the nonzero row vectors of its module, with a
/// stabilizer chain built on first use.
#[derive(Debug)]
pub struct GroupHandle {
    field: Field,
    dim: usize,
    generators: Vec<FieldMatrix>,
    bsgs: OnceLock<Bsgs>,
}

impl Clone for GroupHandle {
    fn clone(&self) -> Self {
        let bsgs = OnceLock::new();
        if let Some(b) = self.bsgs.get() {
            let _ = bsgs.set(b.clone());
        }
        GroupHandle {
            field: self.field,
            dim: self.dim,
            generators: self.generators.clone(),
            bsgs,
        }
    }
}

impl GroupHandle {
    pub fn new(field: Field, dim: usize, generators: Vec<FieldMatrix>) -> Result<Self, GroupError> {
        for (i, g) in generators.iter().enumerate() {
            if g.field() != field || g.nrows() != dim || !g.is_square() || !g.is_invertible() {
                return Err(GroupError::BadGenerator(i));
            }
        }
        Ok(GroupHandle {
            field,
            dim,
            generators,
            bsgs: OnceLock::new(),
        })
    }

    fn with_bsgs(field: Field, dim: usize, bsgs: Bsgs) -> Self {
        let generators = bsgs.strong_generators();
        let cell = OnceLock::new();
        let _ = cell.set(bsgs);
        GroupHandle {
            field,
            dim,
            generators,
            bsgs: cell,
        }
    }

    /// The group generated by samples from `sample`, which must all lie in a
    /// subgroup of order `order`; succeeds once they generate all of it.
    pub fn from_samples(
        field: Field,
        dim: usize,
        order: u64,
        sample: impl FnMut() -> FieldMatrix,
    ) -> Result<Self, GroupError> {
        let b = Bsgs::build_with_known_order(field, dim, &[], order, MAX_SAMPLES, sample)?;
        Ok(GroupHandle::with_bsgs(field, dim, b))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[FieldMatrix] {
        &self.generators
    }

    pub fn identity(&self) -> FieldMatrix {
        FieldMatrix::identity(self.field, self.dim)
    }

    pub fn bsgs(&self) -> &Bsgs {
        self.bsgs
            .get_or_init(|| Bsgs::build(self.field, self.dim, &self.generators, &[]))
    }

    pub fn order(&self) -> u64 {
        self.bsgs().order()
    }

    pub fn contains(&self, g: &FieldMatrix) -> bool {
        self.bsgs().contains(g)
    }

    pub fn is_subgroup_of(&self, other: &GroupHandle) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    pub fn random_element(&self, rng: &mut impl rand::Rng) -> FieldMatrix {
        self.bsgs().random_element(rng)
    }

    /// Explicit list of elements; fails beyond `limit`.
    pub fn enumerate(&self, limit: usize) -> Result<Enumerated<FieldMatrix>, GroupError> {
        Enumerated::closure(&self.identity(), &self.generators, limit)
    }

    pub fn orbit(&self, v: &Vector) -> Transversal<Vector, FieldMatrix> {
        let gens = &self.generators;
        Transversal::build(*v, self.identity(), gens, |p, i| gens[i].apply(p), usize::MAX)
            .expect("no limit")
    }

    /// Orbits on `points` (which must be a union of orbits), each sorted,
    /// listed by smallest member.
    pub fn orbit_partition(&self, points: &[Vector]) -> Vec<Vec<Vector>> {
        let mut sorted = points.to_vec();
        sorted.sort();
        let mut seen: std::collections::HashSet<Vector> = std::collections::HashSet::new();
        let mut out = Vec::new();
        for p in sorted {
            if seen.contains(&p) {
                continue;
            }
            let mut orbit = self.orbit(&p).points().to_vec();
            orbit.sort();
            seen.extend(orbit.iter().copied());
            out.push(orbit);
        }
        out
    }

    /// Orbit sizes on all nonzero vectors, by smallest member.
    pub fn nonzero_orbit_sizes(&self) -> Vec<usize> {
        let points: Vec<Vector> = Vector::nonzero(self.field, self.dim).collect();
        self.orbit_partition(&points).iter().map(Vec::len).collect()
    }

    /// Stabilizer of a vector. Built from uniformly random elements pushed
    /// into the stabilizer with the orbit transversal; the order is known
    /// from orbit–stabilizer, so the result is exact.
    pub fn stabilizer(&self, v: &Vector) -> Result<GroupHandle, GroupError> {
        let orbit = self.orbit(v);
        let order = self.order();
        assert_eq!(order % orbit.len() as u64, 0, "orbit length divides the group order");
        let target = order / orbit.len() as u64;
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        let stab = GroupHandle::from_samples(self.field, self.dim, target, || {
            let g = self.random_element(&mut rng);
            let k = orbit.position(&g.apply(v)).expect("orbit is closed");
            g.mul(&orbit.rep(k).inverse().unwrap())
        })?;
        debug_assert!(stab.generators.iter().all(|g| g.apply(v) == *v));
        Ok(stab)
    }

    /// Pointwise stabilizer of several vectors, one at a time.
    pub fn pointwise_stabilizer(&self, vs: &[Vector]) -> Result<GroupHandle, GroupError> {
        let mut g = self.clone();
        for v in vs {
            g = g.stabilizer(v)?;
        }
        Ok(g)
    }

    /// Conjugacy orbit of `x` under the generators, with transversal.
    pub fn conjugacy_orbit(
        &self,
        x: &FieldMatrix,
        limit: usize,
    ) -> Result<Transversal<FieldMatrix, FieldMatrix>, GroupError> {
        let gens = &self.generators;
        let inv: Vec<FieldMatrix> = gens.iter().map(|g| g.inverse().unwrap()).collect();
        Transversal::build(x.clone(), self.identity(), gens, |p, i| inv[i].mul(p).mul(&gens[i]), limit)
    }

    /// Centralizer of `x`, found by orbit–stabilizer on the conjugacy orbit.
    pub fn centralizer(&self, x: &FieldMatrix, limit: usize) -> Result<GroupHandle, GroupError> {
        if !self.contains(x) {
            return Err(GroupError::NotMember);
        }
        let orbit = self.conjugacy_orbit(x, limit)?;
        let order = self.order();
        assert_eq!(order % orbit.len() as u64, 0, "class length divides the group order");
        let target = order / orbit.len() as u64;
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        GroupHandle::from_samples(self.field, self.dim, target, || {
            let g = self.random_element(&mut rng);
            let y = g.inverse().unwrap().mul(x).mul(&g);
            let k = orbit.position(&y).expect("class is closed");
            g.mul(&orbit.rep(k).inverse().unwrap())
        })
    }

    /// A short generating set of random elements, with the same order as
    /// `self` (and hence the same group).
    pub fn small_generating_set(&self, seed: u64) -> Vec<FieldMatrix> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let order = self.order();
        let mut gens = vec![self.random_element(&mut rng)];
        loop {
            gens.push(self.random_element(&mut rng));
            let h = GroupHandle::new(self.field, self.dim, gens.clone()).expect("members are invertible");
            if h.order() == order {
                return gens;
            }
        }
    }

    /// Subgroup of elements satisfying `pred`, which must define a subgroup
    /// of the known order `order`. Uses rejection sampling, so only for
    /// subgroups of small index.
    pub fn filter_subgroup(
        &self,
        order: u64,
        pred: impl Fn(&FieldMatrix) -> bool,
    ) -> Result<GroupHandle, GroupError> {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        let id = self.identity();
        let mut attempts = 0usize;
        GroupHandle::from_samples(self.field, self.dim, order, || loop {
            attempts += 1;
            if attempts > 1 << 22 {
                return id.clone();
            }
            let g = self.random_element(&mut rng);
            if pred(&g) {
                return g;
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2_3() -> GroupHandle {
        let a = FieldMatrix::from_values(Field::GF3, &[[1, 1], [0, 1]]);
        let b = FieldMatrix::from_values(Field::GF3, &[[1, 0], [1, 1]]);
        GroupHandle::new(Field::GF3, 2, vec![a, b]).unwrap()
    }

    #[test]
    fn sl2_3_order_and_orbits() {
        let g = sl2_3();
        assert_eq!(g.order(), 24);
        assert_eq!(g.nonzero_orbit_sizes(), vec![8]);
        let brute = g.enumerate(100).unwrap();
        assert_eq!(brute.order(), 24);
        for m in brute.elements() {
            assert!(g.contains(m));
        }
        let not_in = FieldMatrix::from_values(Field::GF3, &[[2, 0], [0, 1]]);
        assert!(!g.contains(&not_in));
    }

    #[test]
    fn stabilizer_and_centralizer_orders() {
        let g = sl2_3();
        let v = Vector::from_values(Field::GF3, &[1, 0]);
        let s = g.stabilizer(&v).unwrap();
        assert_eq!(s.order(), 3);
        assert!(s.generators().iter().all(|h| h.apply(&v) == v));
        let minus = FieldMatrix::scalar(Field::GF3, 2, 2);
        assert_eq!(g.centralizer(&minus, 100).unwrap().order(), 24);
        let u = FieldMatrix::from_values(Field::GF3, &[[1, 1], [0, 1]]);
        assert_eq!(g.centralizer(&u, 100).unwrap().order(), 6);
    }

    #[test]
    fn trivial_group() {
        let g = GroupHandle::new(Field::GF2, 3, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.nonzero_orbit_sizes(), vec![1; 7]);
    }
}
