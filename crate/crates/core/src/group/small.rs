use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::fingerprint::Fingerprint;

/// A small abstract group given by its Cayley table. Element 0 is the identity.
#[derive(Clone, Debug)]
pub struct SmallGroup {
    n: usize,
    table: Vec<u16>,
    inv: Vec<u16>,
}

/// Subsets of a [`SmallGroup`], one bit per element.
pub type ElementSet = FixedBitSet;

impl SmallGroup {
    pub const MAX_ORDER: usize = 4096;

    /// Build from a multiplication function on `0..n`; `0` must be the identity.
    pub fn from_fn(n: usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        assert!(n <= Self::MAX_ORDER, "group of order {n} is too large for a Cayley table");
        let mut table = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = mul(i, j) as u16;
            }
        }
        let mut inv = vec![0u16; n];
        for i in 0..n {
            inv[i] = (0..n).find(|&j| table[i * n + j] == 0).expect("not a group") as u16;
        }
        debug_assert!((0..n).all(|i| table[i] as usize == i && table[i * n] as usize == i));
        SmallGroup { n, table, inv }
    }

    pub fn direct_product(a: &SmallGroup, b: &SmallGroup) -> SmallGroup {
        let m = b.n;
        SmallGroup::from_fn(a.n * m, |x, y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m))
    }

    pub fn cyclic(n: usize) -> SmallGroup {
        SmallGroup::from_fn(n, |a, b| (a + b) % n)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.n).map(|a| self.element_order(a)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn full(&self) -> ElementSet {
        let mut s = FixedBitSet::with_capacity(self.n);
        s.insert_range(..);
        s
    }

    pub fn singleton_identity(&self) -> ElementSet {
        let mut s = FixedBitSet::with_capacity(self.n);
        s.insert(0);
        s
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> ElementSet {
        let mut set = self.singleton_identity();
        let mut list = vec![0usize];
        let mut k = 0;
        while k < list.len() {
            let x = list[k];
            for &g in gens {
                let y = self.mul(x, g);
                if !set.contains(y) {
                    set.insert(y);
                    list.push(y);
                }
            }
            k += 1;
        }
        set
    }

    /// Subgroup generated by a subgroup and one further element.
    pub fn join(&self, sub: &ElementSet, x: usize) -> ElementSet {
        let mut gens: Vec<usize> = sub.ones().collect();
        gens.push(x);
        self.closure(&gens)
    }

    pub fn center(&self) -> ElementSet {
        let mut s = FixedBitSet::with_capacity(self.n);
        for a in 0..self.n {
            if (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)) {
                s.insert(a);
            }
        }
        s
    }

    pub fn centralizer(&self, xs: &[usize]) -> ElementSet {
        let mut s = FixedBitSet::with_capacity(self.n);
        for a in 0..self.n {
            if xs.iter().all(|&b| self.mul(a, b) == self.mul(b, a)) {
                s.insert(a);
            }
        }
        s
    }

    pub fn derived_subgroup(&self) -> ElementSet {
        let mut comms = HashSet::new();
        for a in 0..self.n {
            for b in 0..a {
                comms.insert(self.commutator(a, b));
            }
        }
        let mut gens: Vec<usize> = comms.into_iter().collect();
        gens.sort_unstable();
        self.closure(&gens)
    }

    pub fn is_normal(&self, sub: &ElementSet) -> bool {
        sub.ones().all(|a| (0..self.n).all(|g| sub.contains(self.conj(a, g))))
    }

    pub fn count_of_order(&self, k: usize) -> usize {
        (0..self.n).filter(|&a| self.element_order(a) == k).count()
    }

    pub fn involution_count(&self) -> usize {
        (1..self.n).filter(|&a| self.mul(a, a) == 0).count()
    }

    /// Orbits of the conjugation action, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut classes = Vec::new();
        for a in 0..self.n {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.n).map(|g| self.conj(a, g)).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Largest rank of an elementary abelian `p`-subgroup.
    ///
    /// Depth-first search adding generators in increasing element order,
    /// which reaches every elementary abelian subgroup through its
    /// lexicographically least basis.
    pub fn p_rank(&self, p: usize) -> u32 {
        let of_order_p: Vec<usize> = (1..self.n).filter(|&a| self.element_order(a) == p).collect();
        let mut best = 0;
        self.rank_search(&of_order_p, &self.singleton_identity(), &[], 0, 0, &mut best);
        best
    }

    fn rank_search(
        &self,
        cands: &[usize],
        current: &ElementSet,
        chosen: &[usize],
        start: usize,
        depth: u32,
        best: &mut u32,
    ) {
        *best = (*best).max(depth);
        for (k, &x) in cands.iter().enumerate().skip(start) {
            if current.contains(x) || !chosen.iter().all(|&c| self.mul(c, x) == self.mul(x, c)) {
                continue;
            }
            let mut next_chosen = chosen.to_vec();
            next_chosen.push(x);
            let next = self.closure(&next_chosen);
            self.rank_search(cands, &next, &next_chosen, k + 1, depth + 1, best);
        }
    }

    /// Every subgroup, found by repeatedly joining single elements onto
    /// known subgroups. Intended for groups of order at most a few hundred.
    pub fn all_subgroups(&self) -> Vec<ElementSet> {
        let mut seen: HashSet<ElementSet> = HashSet::new();
        let trivial = self.singleton_identity();
        seen.insert(trivial.clone());
        let mut list = vec![trivial];
        let mut k = 0;
        while k < list.len() {
            let h = list[k].clone();
            for x in 0..self.n {
                if h.contains(x) {
                    continue;
                }
                let j = self.join(&h, x);
                if seen.insert(j.clone()) {
                    list.push(j);
                }
            }
            k += 1;
        }
        list.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
        list
    }

    /// Restriction to a subgroup, renumbered so the identity stays at 0.
    pub fn subgroup(&self, sub: &ElementSet) -> SmallGroup {
        let elems: Vec<usize> = sub.ones().collect();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i;
        }
        SmallGroup::from_fn(elems.len(), |i, j| pos[self.mul(elems[i], elems[j])])
    }

    /// Quotient by a normal subgroup.
    pub fn quotient(&self, normal: &ElementSet) -> SmallGroup {
        debug_assert!(self.is_normal(normal));
        let mut coset = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for a in 0..self.n {
            if coset[a] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(a);
            for x in normal.ones() {
                coset[self.mul(x, a)] = c;
            }
        }
        SmallGroup::from_fn(reps.len(), |i, j| coset[self.mul(reps[i], reps[j])])
    }

    /// A Sylow `p`-subgroup, grown inside normalizers.
    pub fn sylow(&self, p: usize) -> ElementSet {
        let mut target = 1;
        let mut m = self.n;
        while m.is_multiple_of(p) {
            m /= p;
            target *= p;
        }
        let mut sub = self.singleton_identity();
        while sub.count_ones(..) < target {
            let x = (0..self.n)
                .find(|&x| {
                    !sub.contains(x)
                        && sub.contains(power(self, x, p))
                        && sub.ones().all(|s| sub.contains(self.conj(s, x)))
                })
                .expect("Sylow extension exists");
            sub = self.join(&sub, x);
        }
        sub
    }

    /// Largest normal subgroup inside `sub`.
    pub fn core(&self, sub: &ElementSet) -> ElementSet {
        let mut out = FixedBitSet::with_capacity(self.n);
        for a in sub.ones() {
            if (0..self.n).all(|g| sub.contains(self.conj(a, g))) {
                out.insert(a);
            }
        }
        out
    }

    pub fn o_p(&self, p: usize) -> ElementSet {
        self.core(&self.sylow(p))
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint::of(self)
    }
}

fn power(g: &SmallGroup, a: usize, e: usize) -> usize {
    (0..e).fold(0, |acc, _| g.mul(acc, a))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let c6 = SmallGroup::cyclic(6);
        assert!(c6.is_abelian());
        assert_eq!(c6.exponent(), 6);
        assert_eq!(c6.involution_count(), 1);
        assert_eq!(c6.p_rank(2), 1);
        assert_eq!(c6.all_subgroups().len(), 4);
        let v4 = SmallGroup::direct_product(&SmallGroup::cyclic(2), &SmallGroup::cyclic(2));
        assert_eq!(v4.p_rank(2), 2);
        assert_eq!(v4.all_subgroups().len(), 5);
        let q = c6.quotient(&c6.closure(&[2]));
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn sylow_and_core_in_cyclic() {
        let c12 = SmallGroup::cyclic(12);
        assert_eq!(c12.sylow(2).count_ones(..), 4);
        assert_eq!(c12.o_p(3).count_ones(..), 3);
    }
}
