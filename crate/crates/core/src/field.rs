//! Arithmetic in prime fields `F_p` for odd primes `p`.
//!
//! Elements are stored as canonical residues in `[0, p)`. The order is capped
//! at `u32::MAX` so that every product of two residues fits in a `u64`; the
//! geometry code relies on this for its unchecked inner loops.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A validated odd prime field order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    p: u64,
}

impl FieldSpec {
    /// Largest accepted field order.
    pub const MAX_ORDER: u64 = u32::MAX as u64;

    /// Validates `p` as an odd prime. Primality is decided by trial division.
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if p > Self::MAX_ORDER {
            return Err(Error::OrderTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec { p })
    }

    /// The field order `q = p`.
    #[inline]
    pub fn order(self) -> u64 {
        self.p
    }

    /// The element congruent to `value`.
    pub fn elem(self, value: u64) -> FieldElement {
        FieldElement {
            value: value % self.p,
            field: self,
        }
    }

    /// The element congruent to a signed integer.
    pub fn elem_i64(self, value: i64) -> FieldElement {
        let r = value.rem_euclid(self.p as i64);
        self.elem(r as u64)
    }

    /// Wraps an already canonical residue, rejecting anything `>= p`.
    pub fn canonical(self, value: u64) -> Result<FieldElement> {
        if value >= self.p {
            return Err(Error::CoordinateOutOfRange { value, q: self.p });
        }
        Ok(FieldElement { value, field: self })
    }

    pub fn zero(self) -> FieldElement {
        self.elem(0)
    }

    pub fn one(self) -> FieldElement {
        self.elem(1)
    }

    /// All `p` elements in increasing residue order.
    pub fn elements(self) -> impl Iterator<Item = FieldElement> {
        (0..self.p).map(move |v| FieldElement { value: v, field: self })
    }

    // Raw residue arithmetic. Inputs must already be canonical.

    #[inline]
    pub(crate) fn add_raw(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub(crate) fn sub_raw(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub(crate) fn neg_raw(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub(crate) fn mul_raw(self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    /// Inverse by the extended Euclidean algorithm.
    pub(crate) fn inv_raw(self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let quot = r0 / r1;
            (r0, r1) = (r1, r0 - quot * r1);
            (t0, t1) = (t1, t0 - quot * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(t0.rem_euclid(self.p as i64) as u64)
    }

    pub(crate) fn pow_raw(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of `F_p`.
///
/// Two elements are equal only if both the residue and the field agree. The
/// operator impls panic on mixed fields; use the `try_*` methods when the
/// operands come from untrusted sources.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    field: FieldSpec,
    value: u64,
}

impl FieldElement {
    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn field(self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: FieldElement) -> Result<FieldSpec> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.p,
                right: other.field.p,
            });
        }
        Ok(self.field)
    }

    pub fn try_add(self, rhs: FieldElement) -> Result<FieldElement> {
        let f = self.same_field(rhs)?;
        Ok(f.elem(f.add_raw(self.value, rhs.value)))
    }

    pub fn try_sub(self, rhs: FieldElement) -> Result<FieldElement> {
        let f = self.same_field(rhs)?;
        Ok(f.elem(f.sub_raw(self.value, rhs.value)))
    }

    pub fn try_mul(self, rhs: FieldElement) -> Result<FieldElement> {
        let f = self.same_field(rhs)?;
        Ok(f.elem(f.mul_raw(self.value, rhs.value)))
    }

    pub fn inv(self) -> Result<FieldElement> {
        self.field
            .inv_raw(self.value)
            .map(|v| self.field.elem(v))
            .ok_or(Error::ZeroInverse)
    }

    pub fn pow(self, exp: u64) -> FieldElement {
        self.field.elem(self.field.pow_raw(self.value, exp))
    }

    pub fn square(self) -> FieldElement {
        self * self
    }

    /// Quadratic character: `0` for zero, `1` for nonzero squares, `-1` otherwise.
    ///
    /// Computed by Euler's criterion `a^((p-1)/2)`.
    pub fn legendre(self) -> i8 {
        if self.value == 0 {
            return 0;
        }
        let p = self.field.p;
        match self.field.pow_raw(self.value, (p - 1) / 2) {
            1 => 1,
            r => {
                debug_assert_eq!(r, p - 1);
                -1
            }
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for FieldElement {
            type Output = FieldElement;

            fn $method(self, rhs: FieldElement) -> FieldElement {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        self.field.elem(self.field.neg_raw(self.value))
    }
}
