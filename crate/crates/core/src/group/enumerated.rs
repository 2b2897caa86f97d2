use std::collections::{HashMap, HashSet, VecDeque};

use super::element::GroupElement;
use super::small::SmallGroup;
use super::GroupError;

/// A finite group given by the explicit list of its elements.
///
/// Suitable up to a few times 10^4 elements. Element 0 is always the
/// identity. Generators are kept alongside, and every derived subgroup
/// comes with its own generating set.
#[derive(Clone, Debug)]
pub struct Enumerated<E: GroupElement> {
    elements: Vec<E>,
    index: HashMap<E, usize>,
    generators: Vec<E>,
}

impl<E: GroupElement> Enumerated<E> {
    /// Closure of `gens` by breadth-first search.
    pub fn closure(identity: &E, gens: &[E], limit: usize) -> Result<Self, GroupError> {
        let mut g = Enumerated {
            elements: vec![identity.clone()],
            index: HashMap::from([(identity.clone(), 0)]),
            generators: Vec::new(),
        };
        g.extend(gens, limit)?;
        Ok(g)
    }

    /// Enlarge the group by further generators.
    fn extend(&mut self, gens: &[E], limit: usize) -> Result<(), GroupError> {
        let new_gens: Vec<E> = gens
            .iter()
            .filter(|x| !x.is_identity())
            .cloned()
            .collect();
        if new_gens.iter().all(|x| self.index.contains_key(x)) {
            for x in new_gens {
                if !self.generators.contains(&x) {
                    self.generators.push(x);
                }
            }
            return Ok(());
        }
        self.generators.extend(new_gens);
        // Every product of old elements with the full generating set must be
        // revisited once, since old elements were only closed under old gens.
        let mut queue: VecDeque<usize> = (0..self.elements.len()).collect();
        while let Some(i) = queue.pop_front() {
            for s in &self.generators {
                let y = self.elements[i].op(s);
                if !self.index.contains_key(&y) {
                    if self.elements.len() >= limit {
                        return Err(GroupError::TooLarge(limit));
                    }
                    self.index.insert(y.clone(), self.elements.len());
                    queue.push_back(self.elements.len());
                    self.elements.push(y);
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn identity(&self) -> &E {
        &self.elements[0]
    }

    pub fn contains(&self, x: &E) -> bool {
        self.index.contains_key(x)
    }

    pub fn position(&self, x: &E) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn is_subgroup_of(&self, other: &Enumerated<E>) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    /// Subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[E]) -> Self {
        Enumerated::closure(self.identity(), gens, usize::MAX).expect("no limit")
    }

    /// Subgroup formed by the elements satisfying `pred`; the predicate must
    /// cut out a subgroup. A generating set is picked greedily.
    pub fn filter_subgroup(&self, pred: impl Fn(&E) -> bool) -> Self {
        let members: Vec<&E> = self.elements.iter().filter(|x| pred(x)).collect();
        let mut sub = Enumerated::closure(self.identity(), &[], usize::MAX).unwrap();
        for x in members.iter() {
            if !sub.contains(x) {
                sub.extend(&[(*x).clone()], usize::MAX).unwrap();
            }
        }
        debug_assert_eq!(sub.order(), members.len(), "predicate does not define a subgroup");
        sub
    }

    pub fn centralizer(&self, xs: &[E]) -> Self {
        self.filter_subgroup(|g| xs.iter().all(|x| g.op(x) == x.op(g)))
    }

    pub fn center(&self) -> Self {
        let gens = self.generators.clone();
        self.centralizer(&gens)
    }

    /// Orbit of `x` under conjugation by the generators.
    pub fn conjugacy_class(&self, x: &E) -> Vec<E> {
        conjugacy_orbit(x, &self.generators, usize::MAX).expect("no limit")
    }

    /// Conjugacy classes as sorted lists of element positions, ordered by
    /// their smallest position.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let inv: Vec<E> = self.generators.iter().map(|g| g.inverse()).collect();
        let mut seen = vec![false; self.order()];
        let mut classes = Vec::new();
        for start in 0..self.order() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut class = vec![start];
            let mut k = 0;
            while k < class.len() {
                let x = &self.elements[class[k]];
                for (g, gi) in self.generators.iter().zip(&inv) {
                    let y = gi.op(x).op(g);
                    let j = self.index[&y];
                    if !seen[j] {
                        seen[j] = true;
                        class.push(j);
                    }
                }
                k += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    pub fn is_normal(&self, sub: &Enumerated<E>) -> bool {
        sub.generators
            .iter()
            .all(|s| self.generators.iter().all(|g| sub.contains(&s.conj(g))))
    }

    /// Smallest normal subgroup containing `xs`.
    pub fn normal_closure(&self, xs: &[E]) -> Self {
        let mut sub = self.subgroup(xs);
        loop {
            let mut added = false;
            let sgens = sub.generators.clone();
            for s in &sgens {
                for g in &self.generators {
                    let c = s.conj(g);
                    if !sub.contains(&c) {
                        sub.extend(&[c], usize::MAX).unwrap();
                        added = true;
                    }
                }
            }
            if !added {
                return sub;
            }
        }
    }

    pub fn derived_subgroup(&self) -> Self {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                comms.push(a.commutator(b));
            }
        }
        self.normal_closure(&comms)
    }

    /// A Sylow `p`-subgroup, grown one factor of `p` at a time inside
    /// normalizers.
    pub fn sylow(&self, p: u64) -> Self {
        let target = p_part(self.order() as u64, p);
        let mut sub = self.subgroup(&[]);
        while (sub.order() as u64) < target {
            let x = self
                .elements
                .iter()
                .find(|x| {
                    !sub.contains(x)
                        && sub.contains(&x.pow(p))
                        && sub.generators.iter().all(|s| sub.contains(&s.conj(x)))
                })
                .expect("Sylow theorem guarantees an extension")
                .clone();
            sub.extend(&[x], usize::MAX).unwrap();
        }
        sub
    }

    /// Largest normal subgroup of `self` contained in `sub`.
    pub fn core(&self, sub: &Enumerated<E>) -> Self {
        let inv: Vec<E> = self.generators.iter().map(|g| g.inverse()).collect();
        let mut alive: HashSet<E> = sub.elements.iter().cloned().collect();
        loop {
            let before = alive.len();
            let snapshot: Vec<E> = alive.iter().cloned().collect();
            for x in snapshot {
                let ok = self
                    .generators
                    .iter()
                    .zip(&inv)
                    .all(|(g, gi)| alive.contains(&gi.op(&x).op(g)) && alive.contains(&g.op(&x).op(gi)));
                if !ok {
                    alive.remove(&x);
                }
            }
            if alive.len() == before {
                break;
            }
        }
        self.filter_subgroup(|x| alive.contains(x))
    }

    /// Largest normal `p`-subgroup.
    pub fn o_p(&self, p: u64) -> Self {
        let s = self.sylow(p);
        self.core(&s)
    }

    /// Cayley-table copy, for fingerprinting small groups.
    pub fn to_small(&self) -> SmallGroup {
        let n = self.order();
        SmallGroup::from_fn(n, |i, j| self.index[&self.elements[i].op(&self.elements[j])])
    }

    /// Quotient by a normal subgroup, materialized on coset representatives.
    pub fn quotient(&self, normal: &Enumerated<E>) -> SmallGroup {
        let (reps, coset_of) = self.cosets(normal);
        SmallGroup::from_fn(reps.len(), |i, j| {
            let prod = self.elements[reps[i]].op(&self.elements[reps[j]]);
            coset_of[self.index[&prod]]
        })
    }

    /// Right cosets `N x` of `sub` (a subgroup, not necessarily normal):
    /// representative positions and the coset number of every element.
    pub fn cosets(&self, sub: &Enumerated<E>) -> (Vec<usize>, Vec<usize>) {
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for i in 0..self.order() {
            if coset_of[i] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(i);
            for n in &sub.elements {
                let y = n.op(&self.elements[i]);
                coset_of[self.index[&y]] = c;
            }
        }
        (reps, coset_of)
    }

    /// Number of elements of order exactly 2.
    pub fn involution_count(&self) -> usize {
        self.elements
            .iter()
            .filter(|x| !x.is_identity() && x.op(x).is_identity())
            .count()
    }

    pub fn involutions(&self) -> Vec<E> {
        self.elements
            .iter()
            .filter(|x| !x.is_identity() && x.op(x).is_identity())
            .cloned()
            .collect()
    }
}

/// `p`-part of `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// Orbit of `x` under conjugation by `gens`, in discovery order.
pub fn conjugacy_orbit<E: GroupElement>(x: &E, gens: &[E], limit: usize) -> Result<Vec<E>, GroupError> {
    let inv: Vec<E> = gens.iter().map(|g| g.inverse()).collect();
    let mut seen: HashSet<E> = HashSet::from([x.clone()]);
    let mut orbit = vec![x.clone()];
    let mut k = 0;
    while k < orbit.len() {
        for (g, gi) in gens.iter().zip(&inv) {
            let y = gi.op(&orbit[k]).op(g);
            if seen.insert(y.clone()) {
                if orbit.len() >= limit {
                    return Err(GroupError::OrbitOverflow(limit));
                }
                orbit.push(y);
            }
        }
        k += 1;
    }
    Ok(orbit)
}
