//! Schreier–Sims for matrix groups acting on nonzero row vectors.

use std::collections::HashMap;

use rand::Rng;

use super::GroupError;
use crate::linalg::{Field, FieldMatrix, Vector};

/// Above this many nonzero vectors the greedy base rule only looks at unit
/// vectors and the rows of the new generator.
const FULL_SCAN_LIMIT: u128 = 1 << 16;

/// Orbit of a base point with coset representatives.
#[derive(Clone, Debug)]
struct Orbit {
    points: Vec<Vector>,
    index: HashMap<Vector, usize>,
    /// `reps[k]` maps the base point to `points[k]`.
    reps: Vec<FieldMatrix>,
    inv_reps: Vec<FieldMatrix>,
}

impl Orbit {
    fn build(base: Vector, gens: &[FieldMatrix]) -> Orbit {
        let id = FieldMatrix::identity(base.field(), base.len());
        let mut t = Orbit {
            points: vec![base],
            index: HashMap::from([(base, 0)]),
            reps: vec![id.clone()],
            inv_reps: vec![id],
        };
        let inv_gens: Vec<FieldMatrix> = gens.iter().map(|g| g.inverse().unwrap()).collect();
        let mut k = 0;
        while k < t.points.len() {
            for (g, gi) in gens.iter().zip(&inv_gens) {
                let img = g.apply(&t.points[k]);
                if !t.index.contains_key(&img) {
                    t.index.insert(img, t.points.len());
                    t.points.push(img);
                    t.reps.push(t.reps[k].mul(g));
                    t.inv_reps.push(gi.mul(&t.inv_reps[k]));
                }
            }
            k += 1;
        }
        t
    }

    fn len(&self) -> usize {
        self.points.len()
    }
}

/// Base and strong generating set with explicit transversals.
///
/// `gens[i]` are the strong generators fixing `base[..i]` pointwise.
#[derive(Clone, Debug)]
pub struct Bsgs {
    field: Field,
    dim: usize,
    base: Vec<Vector>,
    gens: Vec<Vec<FieldMatrix>>,
    orbits: Vec<Orbit>,
}

impl Bsgs {
    fn empty(field: Field, dim: usize) -> Bsgs {
        Bsgs {
            field,
            dim,
            base: Vec::new(),
            gens: Vec::new(),
            orbits: Vec::new(),
        }
    }

    /// Deterministic Schreier–Sims. `base_prefix` points are used first, in
    /// order; further base points follow the greedy largest-orbit rule.
    pub fn build(field: Field, dim: usize, generators: &[FieldMatrix], base_prefix: &[Vector]) -> Bsgs {
        let mut b = Bsgs::empty(field, dim);
        let gens: Vec<FieldMatrix> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        for &p in base_prefix {
            b.push_level(p);
        }
        for g in &gens {
            if b.base.iter().all(|p| g.apply(p) == *p) {
                let p = b.choose_base_point(g, &gens);
                b.push_level(p);
            }
        }
        for (l, level_gens) in b.gens.iter_mut().enumerate() {
            *level_gens = gens
                .iter()
                .filter(|g| b.base[..l].iter().all(|p| g.apply(p) == *p))
                .cloned()
                .collect();
        }
        for l in 0..b.levels() {
            b.rebuild_orbit(l);
        }
        b.schreier_sims();
        b
    }

    /// Randomized Schreier–Sims for a group whose order is known in advance.
    ///
    /// `sample` must produce elements of the group (uniform or close to it).
    /// The structure is complete exactly when the product of the basic orbit
    /// lengths reaches `target_order`, so the result is exact.
    pub fn build_with_known_order(
        field: Field,
        dim: usize,
        base_prefix: &[Vector],
        target_order: u64,
        max_samples: usize,
        mut sample: impl FnMut() -> FieldMatrix,
    ) -> Result<Bsgs, GroupError> {
        let mut b = Bsgs::empty(field, dim);
        for &p in base_prefix {
            b.push_level(p);
        }
        for l in 0..b.levels() {
            b.rebuild_orbit(l);
        }
        let mut samples = 0;
        while b.order() < target_order {
            if samples >= max_samples {
                return Err(GroupError::RandomSchreierSimsStalled {
                    reached: b.order(),
                    target: target_order,
                });
            }
            samples += 1;
            let g = sample();
            let (h, j) = b.strip(&g, 0);
            if h.is_identity() {
                continue;
            }
            if j == b.levels() {
                let p = b.choose_base_point(&h, std::slice::from_ref(&h));
                b.push_level(p);
            }
            for l in 0..=j {
                b.gens[l].push(h.clone());
                b.rebuild_orbit(l);
            }
        }
        if b.order() != target_order {
            return Err(GroupError::OrderMismatch {
                expected: target_order,
                found: b.order(),
            });
        }
        Ok(b)
    }

    fn levels(&self) -> usize {
        self.base.len()
    }

    fn push_level(&mut self, p: Vector) {
        self.base.push(p);
        self.gens.push(Vec::new());
        self.orbits.push(Orbit::build(p, &[]));
    }

    fn rebuild_orbit(&mut self, l: usize) {
        self.orbits[l] = Orbit::build(self.base[l], &self.gens[l]);
    }

    /// Greedy base rule: among points moved by `h`, take the one with the
    /// largest orbit under `gens`; ties go to the smallest index.
    fn choose_base_point(&self, h: &FieldMatrix, gens: &[FieldMatrix]) -> Vector {
        let total = (self.field.order() as u128).pow(self.dim as u32);
        let candidates: Vec<Vector> = if total <= FULL_SCAN_LIMIT {
            Vector::nonzero(self.field, self.dim).collect()
        } else {
            let mut c: Vec<Vector> = (0..self.dim).map(|i| Vector::unit(self.field, self.dim, i)).collect();
            c.extend(h.rows().iter().filter(|r| !r.is_zero()).copied());
            c.sort();
            c.dedup();
            c
        };
        let moved: Vec<Vector> = candidates.into_iter().filter(|p| h.apply(p) != *p).collect();
        assert!(!moved.is_empty(), "non-identity matrix moves some vector");
        let mut size_of: HashMap<Vector, usize> = HashMap::new();
        let mut best: Option<(usize, Vector)> = None;
        for p in moved {
            let size = match size_of.get(&p) {
                Some(&s) => s,
                None => {
                    let orbit = Orbit::build(p, gens).points;
                    let s = orbit.len();
                    for q in orbit {
                        size_of.insert(q, s);
                    }
                    s
                }
            };
            if best.is_none_or(|(bs, _)| size > bs) {
                best = Some((size, p));
            }
        }
        best.unwrap().1
    }

    /// Sift `g` starting at level `from`; returns the residue and the level
    /// where sifting stopped (`levels()` when it went all the way through).
    fn strip(&self, g: &FieldMatrix, from: usize) -> (FieldMatrix, usize) {
        let mut h = g.clone();
        for l in from..self.levels() {
            let beta = h.apply(&self.base[l]);
            match self.orbits[l].index.get(&beta) {
                Some(&k) => h = h.mul(&self.orbits[l].inv_reps[k]),
                None => return (h, l),
            }
        }
        (h, self.levels())
    }

    fn schreier_sims(&mut self) {
        let mut i = self.levels() as isize - 1;
        'outer: while i >= 0 {
            let l = i as usize;
            for k in 0..self.orbits[l].len() {
                for s_idx in 0..self.gens[l].len() {
                    let s = &self.gens[l][s_idx];
                    let gamma = s.apply(&self.orbits[l].points[k]);
                    let g_idx = self.orbits[l].index[&gamma];
                    let schreier = self.orbits[l].reps[k].mul(s).mul(&self.orbits[l].inv_reps[g_idx]);
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, j) = self.strip(&schreier, l + 1);
                    if j < self.levels() || !h.is_identity() {
                        if j == self.levels() {
                            let p = self.choose_base_point(&h, std::slice::from_ref(&h));
                            self.push_level(p);
                        }
                        for m in l + 1..=j {
                            self.gens[m].push(h.clone());
                            self.rebuild_orbit(m);
                        }
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    pub fn order(&self) -> u64 {
        self.orbits.iter().map(|t| t.len() as u64).product()
    }

    pub fn base(&self) -> &[Vector] {
        &self.base
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.orbits.iter().map(Orbit::len).collect()
    }

    /// Strong generators fixing the first `level` base points.
    pub fn level_generators(&self, level: usize) -> &[FieldMatrix] {
        if level < self.levels() {
            &self.gens[level]
        } else {
            &[]
        }
    }

    /// All strong generators, deduplicated.
    pub fn strong_generators(&self) -> Vec<FieldMatrix> {
        let mut out: Vec<FieldMatrix> = Vec::new();
        for g in self.gens.iter().flatten() {
            if !out.contains(g) {
                out.push(g.clone());
            }
        }
        out
    }

    pub fn contains(&self, g: &FieldMatrix) -> bool {
        if g.field() != self.field || g.nrows() != self.dim || !g.is_square() {
            return false;
        }
        let (h, j) = self.strip(g, 0);
        j == self.levels() && h.is_identity()
    }

    /// Uniformly random element: one random coset representative per level.
    pub fn random_element(&self, rng: &mut impl Rng) -> FieldMatrix {
        let mut g = FieldMatrix::identity(self.field, self.dim);
        for t in &self.orbits {
            let k = rng.gen_range(0..t.len());
            g = t.reps[k].mul(&g);
        }
        g
    }

    /// Order of the stabilizer of the first `level` base points.
    pub fn stabilizer_order(&self, level: usize) -> u64 {
        self.orbits.iter().skip(level).map(|t| t.len() as u64).product()
    }
}
