use std::cmp::Ordering;
use std::fmt;

use super::field::{Field, FieldScalar};

/// Maximum length of a packed vector (one machine word per bit plane).
pub const MAX_LEN: usize = 64;

/// A row vector over GF(2) or GF(3), at most 64 coordinates, packed into
/// machine words.
///
/// Coordinate `i` lives in bit `i`. Over GF(3) each coordinate uses two
/// bits, split across two planes: `pos` marks coordinates equal to 1 and
/// `neg` marks coordinates equal to 2 = -1. Over GF(2) only `pos` is used
/// and `neg` is always zero. Addition is a handful of word operations.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    len: u8,
    pos: u64,
    neg: u64,
}

#[inline]
fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl Vector {
    pub fn zero(field: Field, len: usize) -> Self {
        assert!(len <= MAX_LEN, "vector length {len} exceeds {MAX_LEN}");
        Vector {
            field,
            len: len as u8,
            pos: 0,
            neg: 0,
        }
    }

    /// Raw constructor from the two bit planes; bits above `len` are masked.
    pub fn from_planes(field: Field, len: usize, pos: u64, neg: u64) -> Self {
        assert!(len <= MAX_LEN);
        let m = mask(len);
        let (pos, neg) = match field {
            Field::GF2 => ((pos ^ neg) & m, 0),
            Field::GF3 => {
                let both = pos & neg;
                ((pos & !both) & m, (neg & !both) & m)
            }
        };
        Vector {
            field,
            len: len as u8,
            pos,
            neg,
        }
    }

    pub fn unit(field: Field, len: usize, i: usize) -> Self {
        assert!(i < len);
        let mut v = Vector::zero(field, len);
        v.pos = 1 << i;
        v
    }

    pub fn from_values(field: Field, values: &[i64]) -> Self {
        let mut v = Vector::zero(field, values.len());
        for (i, &x) in values.iter().enumerate() {
            v.set(i, field.reduce(x));
        }
        v
    }

    /// Inverse of [`Vector::index`].
    pub fn from_index(field: Field, len: usize, mut index: u128) -> Self {
        let q = field.order() as u128;
        let mut v = Vector::zero(field, len);
        for i in (0..len).rev() {
            v.set(i, (index % q) as u8);
            index /= q;
        }
        v
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn planes(&self) -> (u64, u64) {
        (self.pos, self.neg)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.pos == 0 && self.neg == 0
    }

    /// Bitmask of the nonzero coordinates.
    #[inline]
    pub fn support(&self) -> u64 {
        self.pos | self.neg
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        debug_assert!(i < self.len());
        if self.pos >> i & 1 == 1 {
            1
        } else if self.neg >> i & 1 == 1 {
            2
        } else {
            0
        }
    }

    pub fn scalar(&self, i: usize) -> FieldScalar {
        FieldScalar::new(self.field, self.get(i) as i64)
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: u8) {
        debug_assert!(i < self.len());
        let bit = 1u64 << i;
        self.pos &= !bit;
        self.neg &= !bit;
        match self.field.reduce(value as i64) {
            0 => {}
            1 => self.pos |= bit,
            _ => self.neg |= bit,
        }
    }

    pub fn values(&self) -> Vec<u8> {
        (0..self.len()).map(|i| self.get(i)).collect()
    }

    /// Position of the first nonzero coordinate.
    #[inline]
    pub fn leading(&self) -> Option<usize> {
        let s = self.support();
        (s != 0).then(|| s.trailing_zeros() as usize)
    }

    #[inline]
    pub fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.field, other.field);
        debug_assert_eq!(self.len, other.len);
        match self.field {
            Field::GF2 => Vector {
                pos: self.pos ^ other.pos,
                ..*self
            },
            Field::GF3 => {
                let (ap, an, bp, bn) = (self.pos, self.neg, other.pos, other.neg);
                let a0 = !(ap | an);
                let b0 = !(bp | bn);
                Vector {
                    pos: (ap & b0) | (bp & a0) | (an & bn),
                    neg: (an & b0) | (bn & a0) | (ap & bp),
                    ..*self
                }
            }
        }
    }

    #[inline]
    pub fn neg(&self) -> Vector {
        match self.field {
            Field::GF2 => *self,
            Field::GF3 => Vector {
                pos: self.neg,
                neg: self.pos,
                ..*self
            },
        }
    }

    #[inline]
    pub fn sub(&self, other: &Vector) -> Vector {
        self.add(&other.neg())
    }

    #[inline]
    pub fn scale(&self, c: u8) -> Vector {
        match self.field.reduce(c as i64) {
            0 => Vector::zero(self.field, self.len()),
            1 => *self,
            _ => self.neg(),
        }
    }

    /// `self + c * other`.
    #[inline]
    pub fn add_scaled(&self, other: &Vector, c: u8) -> Vector {
        match self.field.reduce(c as i64) {
            0 => *self,
            1 => self.add(other),
            _ => self.sub(other),
        }
    }

    /// Standard dot product `sum_i a_i b_i`.
    #[inline]
    pub fn dot(&self, other: &Vector) -> u8 {
        debug_assert_eq!(self.field, other.field);
        match self.field {
            Field::GF2 => ((self.pos & other.pos).count_ones() & 1) as u8,
            Field::GF3 => {
                let p = (self.pos & other.pos) | (self.neg & other.neg);
                let n = (self.pos & other.neg) | (self.neg & other.pos);
                self.field
                    .reduce(p.count_ones() as i64 - n.count_ones() as i64)
            }
        }
    }

    /// Concatenation `(self | other)`; total length must stay within 64.
    pub fn concat(&self, other: &Vector) -> Vector {
        let len = self.len() + other.len();
        assert!(len <= MAX_LEN);
        Vector {
            field: self.field,
            len: len as u8,
            pos: self.pos | (other.pos << self.len),
            neg: self.neg | (other.neg << self.len),
        }
    }

    /// Coordinates `start..start+len` as a new vector.
    pub fn slice(&self, start: usize, len: usize) -> Vector {
        assert!(start + len <= self.len());
        let m = mask(len);
        Vector {
            field: self.field,
            len: len as u8,
            pos: (self.pos >> start) & m,
            neg: (self.neg >> start) & m,
        }
    }

    /// Base-q integer with coordinate 0 as the most significant digit, so
    /// index order is lexicographic order on coordinates.
    pub fn index(&self) -> u128 {
        let q = self.field.order() as u128;
        (0..self.len()).fold(0u128, |acc, i| acc * q + self.get(i) as u128)
    }

    /// Every vector of the given length, in index order.
    pub fn all(field: Field, len: usize) -> impl Iterator<Item = Vector> {
        let count = (field.order() as u128).pow(len as u32);
        (0..count).map(move |i| Vector::from_index(field, len, i))
    }

    /// Every nonzero vector of the given length, in index order.
    pub fn nonzero(field: Field, len: usize) -> impl Iterator<Item = Vector> {
        Vector::all(field, len).skip(1)
    }
}

impl Ord for Vector {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field, self.len)
            .cmp(&(other.field, other.len))
            .then_with(|| {
                for i in 0..self.len() {
                    match self.get(i).cmp(&other.get(i)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Vector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.len() {
            write!(f, "{}", self.get(i))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packed_addition_matches_scalar_addition() {
        for field in [Field::GF2, Field::GF3] {
            let vs: Vec<Vector> = Vector::all(field, 4).collect();
            for a in &vs {
                for b in &vs {
                    let s = a.add(b);
                    for i in 0..4 {
                        assert_eq!(s.get(i), field.add(a.get(i), b.get(i)));
                    }
                    let d = a.sub(b);
                    for i in 0..4 {
                        assert_eq!(d.get(i), field.sub(a.get(i), b.get(i)));
                    }
                    let naive = (0..4).fold(0u8, |acc, i| {
                        field.add(acc, field.mul(a.get(i), b.get(i)))
                    });
                    assert_eq!(a.dot(b), naive);
                }
            }
        }
    }

    #[test]
    fn index_round_trip_and_order() {
        let v = Vector::from_values(Field::GF3, &[2, 0, 1]);
        assert_eq!(v.index(), 2 * 9 + 1);
        assert_eq!(Vector::from_index(Field::GF3, 3, v.index()), v);
        let w = Vector::from_values(Field::GF3, &[2, 1, 0]);
        assert!(v < w);
        assert_eq!(Vector::nonzero(Field::GF3, 8).count(), 6560);
    }

    #[test]
    fn concat_and_slice() {
        let a = Vector::from_values(Field::GF3, &[1, 2]);
        let b = Vector::from_values(Field::GF3, &[0, 2, 1]);
        let c = a.concat(&b);
        assert_eq!(c.values(), vec![1, 2, 0, 2, 1]);
        assert_eq!(c.slice(2, 3), b);
    }
}
