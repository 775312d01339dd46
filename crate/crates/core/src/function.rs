//! Elements `(a(x) + y b(x)) / c(x)` of the function field.

use std::fmt;

use crate::algebra::{FieldElement, LaurentSeries, Polynomial, PrimeField};
use crate::curve::{Curve, Place};
use crate::error::{Error, Result};

/// A function `(a + y*b) / c` kept with `c` monic and `gcd(a, b, c) = 1`,
/// which makes the representation unique.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FunctionElement {
    a: Polynomial,
    b: Polynomial,
    c: Polynomial,
}

impl fmt::Display for FunctionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |p: &Polynomial| {
            let v: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
            format!("[{}]", v.join(", "))
        };
        write!(
            f,
            "({}) + y*({}) / ({})",
            list(&self.a),
            list(&self.b),
            list(&self.c)
        )
    }
}

impl FunctionElement {
    pub fn new(a: Polynomial, b: Polynomial, c: Polynomial) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut h = Self { a, b, c };
        h.normalize();
        Ok(h)
    }

    fn normalize(&mut self) {
        let field = self.c.field();
        if self.a.is_zero() && self.b.is_zero() {
            self.c = Polynomial::one(field);
            return;
        }
        let g = Polynomial::xgcd(&Polynomial::xgcd(&self.a, &self.b).expect("same field").0, &self.c)
            .expect("same field")
            .0;
        let lead = self.c.leading().expect("nonzero denominator");
        let unit = Polynomial::constant(lead);
        let g = &g * &unit;
        self.a = self.a.exact_div(&g).expect("gcd divides");
        self.b = self.b.exact_div(&g).expect("gcd divides");
        self.c = self.c.exact_div(&g).expect("gcd divides");
    }

    pub fn from_poly(a: Polynomial) -> Self {
        let field = a.field();
        Self {
            a,
            b: Polynomial::zero(field),
            c: Polynomial::one(field),
        }
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn zero(field: PrimeField) -> Self {
        Self::from_poly(Polynomial::zero(field))
    }

    pub fn one(field: PrimeField) -> Self {
        Self::from_poly(Polynomial::one(field))
    }

    pub fn x(field: PrimeField) -> Self {
        Self::from_poly(Polynomial::x(field))
    }

    pub fn y(field: PrimeField) -> Self {
        Self {
            a: Polynomial::zero(field),
            b: Polynomial::one(field),
            c: Polynomial::one(field),
        }
    }

    pub fn a(&self) -> &Polynomial {
        &self.a
    }

    pub fn b(&self) -> &Polynomial {
        &self.b
    }

    pub fn c(&self) -> &Polynomial {
        &self.c
    }

    pub fn field(&self) -> PrimeField {
        self.c.field()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn scale(&self, k: FieldElement) -> Self {
        Self::new(self.a.scale(k), self.b.scale(k), self.c.clone()).expect("nonzero denominator")
    }

    pub fn neg(&self) -> Self {
        self.scale(-self.field().one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let a = &(&self.a * &other.c) + &(&other.a * &self.c);
        let b = &(&self.b * &other.c) + &(&other.b * &self.c);
        Self::new(a, b, &self.c * &other.c).expect("nonzero denominator")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self, curve: &Curve) -> Self {
        let f = curve.f();
        let a = &(&self.a * &other.a) + &(&(f * &self.b) * &other.b);
        let b = &(&self.a * &other.b) + &(&self.b * &other.a);
        Self::new(a, b, &self.c * &other.c).expect("nonzero denominator")
    }

    /// `a^2 - f b^2`, the norm of the numerator down to `F(x)`.
    pub fn numerator_norm(&self, curve: &Curve) -> Polynomial {
        &(&self.a * &self.a) - &(&(curve.f() * &self.b) * &self.b)
    }

    pub fn inv(&self, curve: &Curve) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        // 1/(a + yb) = (a - yb) / (a^2 - f b^2)
        let n = self.numerator_norm(curve);
        Self::new(&self.c * &self.a, -&(&self.c * &self.b), n)
    }

    pub fn div(&self, other: &Self, curve: &Curve) -> Result<Self> {
        Ok(self.mul(&other.inv(curve)?, curve))
    }

    pub fn pow(&self, e: u32, curve: &Curve) -> Self {
        let mut acc = Self::one(self.field());
        for _ in 0..e {
            acc = acc.mul(self, curve);
        }
        acc
    }

    /// Image under the hyperelliptic involution `y -> -y`.
    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -&self.b,
            c: self.c.clone(),
        }
    }

    /// Expansion of the numerator `a + y b` at a place.
    pub fn numerator_series(&self, curve: &Curve, place: &Place, precision: i64) -> Result<LaurentSeries> {
        let e = curve.local_expansion(place, precision)?;
        Ok(e.x.compose_poly(&self.a).add(&e.y.mul(&e.x.compose_poly(&self.b))))
    }

    /// Expansion of the whole function; precision as propagated.
    pub fn series(&self, curve: &Curve, place: &Place, precision: i64) -> Result<LaurentSeries> {
        let e = curve.local_expansion(place, precision)?;
        let num = e.x.compose_poly(&self.a).add(&e.y.mul(&e.x.compose_poly(&self.b)));
        let den = e.x.compose_poly(&self.c);
        if den.is_zero() {
            return Err(Error::InsufficientPrecision(format!(
                "denominator vanishes to precision {precision} at {place}"
            )));
        }
        num.div(&den)
    }
}
