//! Graded Picard classes: a reduced Mumford pair `(u, v)` for the degree-zero
//! part taken against the point at infinity, plus the total degree.
//!
//! The class of a divisor `D` is `[D - deg(D) inf]` in Mumford form together
//! with `deg D`. Tensoring by `H = O(2 inf)` is therefore a degree shift.

use std::fmt;

use crate::algebra::Polynomial;
use crate::curve::{Curve, Divisor, Place};
use crate::error::{Error, Result};
use crate::function::FunctionElement;
use crate::sampling;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    u: Polynomial,
    v: Polynomial,
    degree: i64,
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[u = {}, v = {}; degree {}]", self.u, self.v, self.degree)
    }
}

impl DivisorClass {
    /// Validates `u` monic with `deg u <= g`, `deg v < deg u` and
    /// `u | v^2 - f`.
    pub fn new(curve: &Curve, u: Polynomial, v: Polynomial, degree: i64) -> Result<Self> {
        let class = Self { u, v, degree };
        curve.check_class(&class)?;
        Ok(class)
    }

    /// `k * H`, represented by `(1, 0)` in degree `2k`.
    pub fn h_power(curve: &Curve, k: i64) -> Self {
        Self::trivial_part(curve, 2 * k)
    }

    /// The canonical class `H^(g-1)`.
    pub fn canonical(curve: &Curve) -> Self {
        Self::h_power(curve, curve.genus() - 1)
    }

    /// Class of `degree * inf`.
    pub fn trivial_part(curve: &Curve, degree: i64) -> Self {
        let field = curve.field();
        Self {
            u: Polynomial::one(field),
            v: Polynomial::zero(field),
            degree,
        }
    }

    pub fn u(&self) -> &Polynomial {
        &self.u
    }

    pub fn v(&self) -> &Polynomial {
        &self.v
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Whether the degree-zero part vanishes, i.e. the class is `degree * inf`.
    pub fn is_multiple_of_infinity(&self) -> bool {
        self.u.is_one()
    }

    /// `Some(k)` exactly when the class is `H^k` with `k >= 0`.
    pub fn is_power_of_h(&self) -> Option<i64> {
        (self.degree >= 0 && self.degree % 2 == 0 && self.u.is_one()).then_some(self.degree / 2)
    }

    /// Affine divisor of `(u, v)` plus `(degree - deg u) * inf`; errors when
    /// `u` does not split over the base field.
    pub fn representative(&self, curve: &Curve) -> Result<Divisor> {
        let roots = self.u.split().ok_or(Error::IrrationalSupport)?;
        let mut d = Divisor::zero();
        for (x0, m) in roots {
            let p = Place::affine(x0, self.v.eval(x0));
            curve.check_place(&p)?;
            d.add_term(p, m as i64);
        }
        d.add_term(Place::Infinity, self.degree - self.u.deg());
        Ok(d)
    }
}

impl Curve {
    pub fn check_class(&self, a: &DivisorClass) -> Result<()> {
        let g = self.genus();
        let ok = a.u.field() == self.field()
            && a.v.field() == self.field()
            && a.u.is_monic()
            && a.u.deg() <= g
            && a.v.deg() < a.u.deg()
            && a.u.divides(&(self.f() - &(&a.v * &a.v)));
        if ok {
            Ok(())
        } else {
            Err(Error::CurveMismatch)
        }
    }

    fn reduce(&self, mut u: Polynomial, mut v: Polynomial) -> Result<(Polynomial, Polynomial)> {
        let g = self.genus();
        u = u.monic();
        v = v.rem(&u)?;
        while u.deg() > g {
            let u2 = (self.f() - &(&v * &v)).exact_div(&u)?.monic();
            let v2 = (-&v).rem(&u2)?;
            u = u2;
            v = v2;
        }
        Ok((u, v))
    }

    /// Cantor composition followed by reduction.
    pub fn class_add(&self, a: &DivisorClass, b: &DivisorClass) -> Result<DivisorClass> {
        self.check_class(a)?;
        self.check_class(b)?;
        let (d1, e1, e2) = Polynomial::xgcd(&a.u, &b.u)?;
        let (d, c1, c2) = Polynomial::xgcd(&d1, &(&a.v + &b.v))?;
        let s1 = &c1 * &e1;
        let s2 = &c1 * &e2;
        let s3 = c2;
        let u = (&a.u * &b.u).exact_div(&(&d * &d))?;
        let num = &(&(&(&s1 * &a.u) * &b.v) + &(&(&s2 * &b.u) * &a.v))
            + &(&s3 * &(&(&a.v * &b.v) + self.f()));
        let v = num.exact_div(&d)?;
        let (u, v) = self.reduce(u, v)?;
        Ok(DivisorClass {
            u,
            v,
            degree: a.degree + b.degree,
        })
    }

    pub fn class_neg(&self, a: &DivisorClass) -> Result<DivisorClass> {
        self.check_class(a)?;
        Ok(DivisorClass {
            u: a.u.clone(),
            v: (-&a.v).rem(&a.u)?,
            degree: -a.degree,
        })
    }

    pub fn class_sub(&self, a: &DivisorClass, b: &DivisorClass) -> Result<DivisorClass> {
        self.class_add(a, &self.class_neg(b)?)
    }

    /// `n * a` by double-and-add.
    pub fn class_mul(&self, a: &DivisorClass, n: i64) -> Result<DivisorClass> {
        let mut base = if n < 0 { self.class_neg(a)? } else { a.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = DivisorClass::trivial_part(self, 0);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.class_add(&acc, &base)?;
            }
            base = self.class_add(&base, &base)?;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Class of `P` in degree one: `(x - x0, y0)`, or the trivial pair at infinity.
    pub fn point_class(&self, place: &Place) -> Result<DivisorClass> {
        self.check_place(place)?;
        Ok(match *place {
            Place::Infinity => DivisorClass::trivial_part(self, 1),
            Place::Affine { x, y } => DivisorClass {
                u: Polynomial::linear(x),
                v: Polynomial::constant(y),
                degree: 1,
            },
        })
    }

    pub fn class_of(&self, d: &Divisor) -> Result<DivisorClass> {
        let mut acc = DivisorClass::trivial_part(self, 0);
        for (p, &m) in d.terms() {
            let pc = self.point_class(p)?;
            acc = self.class_add(&acc, &self.class_mul(&pc, m)?)?;
        }
        Ok(acc)
    }
}

/// Reduced class of a divisor; linearly equivalent divisors give equal classes.
pub fn class_of(curve: &Curve, d: &Divisor) -> Result<DivisorClass> {
    curve.class_of(d)
}

/// `h^0` of a class from its Mumford form, without any rational splitting.
///
/// With `J = (u, y - v)` the ideal of the affine part, `L(D)` for the
/// representative `D = div(J) + (degree - deg u) inf` is
/// `{ alpha + beta (y + v)/u }` with polynomial `alpha`, `beta` under the
/// pole budget at infinity.
pub fn h0_of_class(curve: &Curve, a: &DivisorClass) -> Result<i64> {
    let (na, nb) = class_space_shape(curve, a)?;
    Ok(na + nb)
}

fn class_space_shape(curve: &Curve, a: &DivisorClass) -> Result<(i64, i64)> {
    curve.check_class(a)?;
    let g = curve.genus();
    let du = a.u.deg();
    let s = a.degree + du;
    let na = (s.div_euclid(2) - du + 1).max(0);
    let nb = ((s - 2 * g - 1).div_euclid(2) + 1).max(0);
    Ok((na, nb))
}

/// Basis of the Riemann-Roch space of the Mumford representative of `a`.
pub fn class_space_basis(curve: &Curve, a: &DivisorClass) -> Result<Vec<FunctionElement>> {
    let (na, nb) = class_space_shape(curve, a)?;
    let field = curve.field();
    let mut out = Vec::with_capacity((na + nb) as usize);
    for i in 0..na {
        out.push(FunctionElement::from_poly(Polynomial::monomial(field.one(), i as usize)));
    }
    for j in 0..nb {
        let xj = Polynomial::monomial(field.one(), j as usize);
        out.push(FunctionElement::new(&xj * &a.v, xj, a.u.clone())?);
    }
    Ok(out)
}

/// Reproducible pseudo-random class of the given degree.
pub fn random_class(curve: &Curve, degree: i64, seed: u64) -> Result<DivisorClass> {
    let mut rng = sampling::rng(seed, 0);
    let d = sampling::random_divisor(curve, degree, &mut rng)?;
    curve.class_of(&d)
}

/// `Some(k)` when `a = H^k`, `k >= 0`.
pub fn is_power_of_h(a: &DivisorClass) -> Option<i64> {
    a.is_power_of_h()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::riemann_roch::h0;

    fn c7() -> Curve {
        Curve::new(7, &[0, -1, 0, 0, 0, 1]).unwrap()
    }

    #[test]
    fn fiber_sum_is_h() {
        let c = c7();
        let p = c.place(3, 3).unwrap();
        let q = c.involution(&p).unwrap();
        let d = &Divisor::point(p) + &Divisor::point(q);
        assert_eq!(class_of(&c, &d).unwrap(), DivisorClass::h_power(&c, 1));
        let w = c.place(1, 0).unwrap();
        assert_eq!(
            class_of(&c, &Divisor::from_terms([(w, 2)])).unwrap(),
            DivisorClass::h_power(&c, 1)
        );
        assert_eq!(class_of(&c, &Divisor::zero()).unwrap(), DivisorClass::trivial_part(&c, 0));
    }

    #[test]
    fn inverses_and_h_powers() {
        let c = Curve::new(101, &[1, 3, 0, 5, 0, 0, 0, 1]).unwrap();
        for seed in 0..20 {
            let a = random_class(&c, 0, seed).unwrap();
            let z = c.class_add(&a, &c.class_neg(&a).unwrap()).unwrap();
            assert_eq!(z, DivisorClass::trivial_part(&c, 0));
        }
        let h = DivisorClass::h_power(&c, 1);
        let hh = c.class_add(&h, &h).unwrap();
        assert_eq!(hh.degree(), 4);
        assert!(hh.u().is_one() && hh.v().is_zero());
    }

    #[test]
    fn power_of_h_detection() {
        let c = c7();
        for k in 0..=2 {
            assert_eq!(DivisorClass::h_power(&c, k).is_power_of_h(), Some(k));
        }
        let p = c.place(3, 3).unwrap();
        let q = c.place(2, 3).unwrap(); // f(2) = 30 = 2 = 3^2 mod 7
        let d = &Divisor::point(p) + &Divisor::point(q);
        assert_eq!(class_of(&c, &d).unwrap().is_power_of_h(), None);
        assert_eq!(h0(&c, &d).unwrap(), 1);
        assert_eq!(class_of(&c, &Divisor::point(p)).unwrap().is_power_of_h(), None);
    }

    #[test]
    fn random_class_is_deterministic() {
        let c = Curve::new(101, &[1, 3, 0, 5, 0, 0, 0, 1]).unwrap();
        let a = random_class(&c, 3, 42).unwrap();
        assert_eq!(a, random_class(&c, 3, 42).unwrap());
        assert_eq!(a.degree(), 3);
    }

    #[test]
    fn degree_zero_classes_are_rarely_trivial() {
        // the Jacobian has roughly p^g points, so almost no sample is trivial
        let c = Curve::new(101, &[1, 3, 0, 5, 0, 1]).unwrap();
        let trivial = (0..200)
            .filter(|&s| random_class(&c, 0, s).unwrap().is_multiple_of_infinity())
            .count();
        assert!(trivial <= 2, "{trivial} trivial samples");
    }

    #[test]
    fn rejects_foreign_class() {
        let c = c7();
        let other = Curve::new(7, &[3, 1, 0, 0, 0, 1]).unwrap();
        let p = c.place(3, 3).unwrap();
        let a = c.point_class(&p).unwrap();
        assert_eq!(other.class_add(&a, &a), Err(Error::CurveMismatch));
    }

    #[test]
    fn class_h0_agrees_with_solver_on_small_cases() {
        let c = c7();
        for d in -2..=7 {
            let a = DivisorClass::trivial_part(&c, d);
            assert_eq!(h0_of_class(&c, &a).unwrap(), h0(&c, &Divisor::infinity(d)).unwrap());
        }
    }
}
