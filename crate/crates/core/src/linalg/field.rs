use std::fmt;

use serde::{Deserialize, Serialize};

/// The two prime fields this crate works over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    GF2,
    GF3,
}

impl Field {
    pub const fn order(self) -> u8 {
        match self {
            Field::GF2 => 2,
            Field::GF3 => 3,
        }
    }

    #[inline]
    pub fn reduce(self, value: i64) -> u8 {
        value.rem_euclid(self.order() as i64) as u8
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        (a + b) % self.order()
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        (a + self.order() - b) % self.order()
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        (a * b) % self.order()
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        (self.order() - a) % self.order()
    }

    /// Multiplicative inverse; both fields are tiny enough that every nonzero
    /// element is its own inverse.
    #[inline]
    pub fn inv(self, a: u8) -> Option<u8> {
        match a % self.order() {
            0 => None,
            x => Some(x),
        }
    }

    /// The nonzero scalars in increasing order.
    pub fn units(self) -> impl Iterator<Item = u8> {
        1..self.order()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order())
    }
}

/// A reduced element of GF(2) or GF(3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    value: u8,
    field: Field,
}

impl FieldScalar {
    pub fn new(field: Field, value: i64) -> Self {
        FieldScalar {
            value: field.reduce(value),
            field,
        }
    }

    pub fn zero(field: Field) -> Self {
        FieldScalar { value: 0, field }
    }

    pub fn one(field: Field) -> Self {
        FieldScalar { value: 1, field }
    }

    pub fn value(self) -> u8 {
        self.value
    }

    pub fn field(self) -> Field {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<Self> {
        self.field.inv(self.value).map(|value| FieldScalar {
            value,
            field: self.field,
        })
    }
}

impl std::ops::Add for FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.field, rhs.field);
        FieldScalar {
            value: self.field.add(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl std::ops::Sub for FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: Self) -> Self {
        debug_assert_eq!(self.field, rhs.field);
        FieldScalar {
            value: self.field.sub(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl std::ops::Mul for FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.field, rhs.field);
        FieldScalar {
            value: self.field.mul(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl std::ops::Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> Self {
        FieldScalar {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_reduced() {
        let two = FieldScalar::new(Field::GF3, -1);
        assert_eq!(two.value(), 2);
        assert_eq!((two + two).value(), 1);
        assert_eq!((two * two).value(), 1);
        assert_eq!((-two).value(), 1);
        assert_eq!(two.inv().unwrap().value(), 2);
        assert!(FieldScalar::zero(Field::GF2).inv().is_none());
        let one = FieldScalar::one(Field::GF2);
        assert!((one + one).is_zero());
    }
}
