//! Prime-field scalars.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// A validated odd prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Characteristic 2 is rejected along with every composite modulus.
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::BadModulus(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, value: i64) -> FieldElement {
        FieldElement::reduce(value, self.p)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { value: 0, p: self.p }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { value: 1, p: self.p }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.p).map(move |value| FieldElement { value, p: self.p })
    }
}

/// A residue modulo an odd prime; `0 <= value < p`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement {
    value: u64,
    p: u64,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl FieldElement {
    fn reduce(value: i64, p: u64) -> Self {
        Self {
            value: value.rem_euclid(p as i64) as u64,
            p,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    /// Signed representative in `(-p/2, p/2]`.
    pub fn centered(&self) -> i64 {
        if self.value > self.p / 2 {
            self.value as i64 - self.p as i64
        } else {
            self.value as i64
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Self { value: 1, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    /// Fermat inverse `a^(p-2)`; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(self.p - 2))
        }
    }

    pub fn checked_div(&self, rhs: Self) -> Result<Self> {
        let inv = rhs.inv().ok_or(Error::DivisionByZero)?;
        Ok(*self * inv)
    }

    /// Euler's criterion; zero counts as a square.
    pub fn is_square(&self) -> bool {
        self.is_zero() || self.pow((self.p - 1) / 2).is_one()
    }

    /// Tonelli-Shanks. Returns the root with the smaller representative, or
    /// `None` for a non-residue.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(*self);
        }
        if !self.is_square() {
            return None;
        }
        let p = self.p;
        let mut q = p - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let mut z = Self { value: 2, p };
        while z.is_square() {
            z.value += 1;
        }
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow(q.div_ceil(2));
        while !t.is_one() {
            let mut i = 0u32;
            let mut t2 = t;
            while !t2.is_one() {
                t2 *= t2;
                i += 1;
            }
            let b = c.pow(1u64 << (m - i - 1));
            m = i;
            c = b * b;
            t *= c;
            r *= b;
        }
        let other = -r;
        Some(if other.value < r.value { other } else { r })
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(&rhs);
        let s = self.value + rhs.value;
        Self {
            value: if s >= self.p { s - self.p } else { s },
            p: self.p,
        }
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check(&rhs);
        Self {
            value: if self.value >= rhs.value {
                self.value - rhs.value
            } else {
                self.value + self.p - rhs.value
            },
            p: self.p,
        }
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(&rhs);
        Self {
            value: self.value * rhs.value % self.p,
            p: self.p,
        }
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            value: if self.value == 0 { 0 } else { self.p - self.value },
            p: self.p,
        }
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldElement {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}
