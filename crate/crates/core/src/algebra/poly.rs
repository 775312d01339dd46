//! Dense univariate polynomials over a prime field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{FieldElement, PrimeField};
use crate::error::{Error, Result};

/// Coefficients are stored low degree first with no trailing zeros, so the
/// zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: PrimeField,
    coeffs: Vec<FieldElement>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{c}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Polynomial {
    pub fn new(field: PrimeField, coeffs: Vec<FieldElement>) -> Self {
        for c in &coeffs {
            assert_eq!(c.modulus(), field.modulus(), "modulus mismatch");
        }
        let mut p = Self { field, coeffs };
        p.trim();
        p
    }

    pub fn from_i64(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.elem(c)).collect())
    }

    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::new(c.field(), vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: PrimeField) -> Self {
        Self::monomial(field.one(), 1)
    }

    pub fn monomial(c: FieldElement, degree: usize) -> Self {
        let mut coeffs = vec![c.field().zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(c.field(), coeffs)
    }

    /// `x - root`.
    pub fn linear(root: FieldElement) -> Self {
        Self::new(root.field(), vec![-root, root.field().one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(self.field.zero())
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, &c| acc * x + c)
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Scales to leading coefficient one; the zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(l.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * self.field.elem(i as i64))
            .collect();
        Self::new(self.field, coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self(x + shift)`, via Horner on the shifted variable.
    pub fn taylor_shift(&self, shift: FieldElement) -> Self {
        let lin = Self::new(self.field, vec![shift, self.field.one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(self.field), |acc, &c| &(&acc * &lin) + &Self::constant(c))
    }

    /// Euclidean division `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.same_field(divisor)?;
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let lead_inv = lead.inv().ok_or(Error::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd] * lead_inv;
            quot[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
        rem.truncate(dd);
        Ok((Self::new(self.field, quot), Self::new(self.field, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact quotient; errors when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!("{divisor} does not divide {self}")));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Extended Euclid: `(g, s, t)` with `g = s*a + t*b` and `g` monic
    /// (or zero when both inputs are zero).
    pub fn xgcd(a: &Self, b: &Self) -> Result<(Self, Self, Self)> {
        a.same_field(b)?;
        let field = a.field;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(field), Self::zero(field));
        let (mut t0, mut t1) = (Self::zero(field), Self::one(field));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            None => Ok((r0, s0, t0)),
            Some(l) => {
                let li = l.inv().expect("nonzero");
                Ok((r0.scale(li), s0.scale(li), t0.scale(li)))
            }
        }
    }

    /// Multiplicity of `root` as a zero.
    pub fn root_multiplicity(&self, root: FieldElement) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = Self::linear(root);
        let mut cur = self.clone();
        let mut m = 0;
        loop {
            let (q, r) = cur.div_rem(&lin).expect("linear divisor");
            if !r.is_zero() {
                return m;
            }
            cur = q;
            m += 1;
        }
    }

    /// Rational roots with multiplicities together with the cofactor that has
    /// no rational roots. Exhaustive search over the field.
    pub fn rational_roots(&self) -> (Vec<(FieldElement, usize)>, Self) {
        assert!(!self.is_zero(), "roots of the zero polynomial");
        let mut rest = self.clone();
        let mut roots = Vec::new();
        if rest.degree() == Some(0) {
            return (roots, rest);
        }
        for x in self.field.elements() {
            if !rest.eval(x).is_zero() {
                continue;
            }
            let m = rest.root_multiplicity(x);
            rest = rest
                .exact_div(&Self::linear(x).pow(m as u32))
                .expect("root divides");
            roots.push((x, m));
            if rest.degree() == Some(0) {
                break;
            }
        }
        (roots, rest)
    }

    /// Roots with multiplicity if the polynomial splits into linear factors.
    pub fn split(&self) -> Option<Vec<(FieldElement, usize)>> {
        let (roots, rest) = self.rational_roots();
        if rest.is_constant() {
            Some(roots)
        } else {
            None
        }
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero()
            && Self::xgcd(self, &self.derivative())
                .map(|(g, _, _)| g.is_one())
                .unwrap_or(false)
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch(
                self.field.modulus(),
                other.field.modulus(),
            ));
        }
        Ok(())
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    Ok(Polynomial::xgcd(a, b)?.0)
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(self.field, coeffs)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(self.field, coeffs)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(self.field, coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.field, self.coeffs.iter().map(|&c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn gcd_shared_root() {
        let f = f7();
        let a = Polynomial::from_i64(f, &[-1, 0, 1]);
        let b = Polynomial::from_i64(f, &[-1, 1]);
        assert_eq!(poly_gcd(&a, &b).unwrap(), b);
    }

    #[test]
    fn gcd_with_zero_is_monic() {
        let f = f7();
        let a = Polynomial::from_i64(f, &[1, 2, 3]);
        let g = poly_gcd(&a, &Polynomial::zero(f)).unwrap();
        assert_eq!(g, a.monic());
        assert!(poly_gcd(&Polynomial::zero(f), &Polynomial::zero(f))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn gcd_of_squarefree_and_derivative() {
        // x^5 - x and 5x^4 - 1 over F7; Euclid by hand:
        // x^5 - x = (3x)(5x^4 - 1) + (-x + 3x) = (3x)(5x^4-1) + 2x
        // 5x^4 - 1 = (6x^3)(2x) - 1, so the gcd is a unit.
        let f = f7();
        let a = Polynomial::from_i64(f, &[0, -1, 0, 0, 0, 1]);
        let b = Polynomial::from_i64(f, &[-1, 0, 0, 0, 5]);
        assert_eq!(a.derivative(), b);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, Polynomial::from_i64(f, &[0, 3]));
        assert_eq!(r, Polynomial::from_i64(f, &[0, 2]));
        assert!(poly_gcd(&a, &b).unwrap().is_one());
    }

    #[test]
    fn gcd_rejects_mixed_moduli() {
        let a = Polynomial::from_i64(f7(), &[1, 1]);
        let b = Polynomial::from_i64(PrimeField::new(11).unwrap(), &[1, 1]);
        assert_eq!(poly_gcd(&a, &b), Err(Error::ModulusMismatch(7, 11)));
    }

    #[test]
    fn roots_of_x5_minus_x_mod_7() {
        let f = f7();
        let a = Polynomial::from_i64(f, &[0, -1, 0, 0, 0, 1]);
        let (roots, rest) = a.rational_roots();
        let xs: Vec<u64> = roots.iter().map(|(r, _)| r.value()).collect();
        assert_eq!(xs, vec![0, 1, 6]);
        assert_eq!(rest, Polynomial::from_i64(f, &[1, 0, 1]));
        assert!(a.split().is_none());
    }

    #[test]
    fn taylor_shift_matches_eval() {
        let f = f7();
        let a = Polynomial::from_i64(f, &[3, 0, 2, 5, 1]);
        let s = a.taylor_shift(f.elem(4));
        for x in f.elements() {
            assert_eq!(s.eval(x), a.eval(x + f.elem(4)));
        }
    }

    fn poly_strategy() -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(0i64..101, 0..8)
    }

    proptest! {
        #[test]
        fn divmod_identity(a in poly_strategy(), b in poly_strategy()) {
            let f = PrimeField::new(101).unwrap();
            let a = Polynomial::from_i64(f, &a);
            let b = Polynomial::from_i64(f, &b);
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.deg() < b.deg());
        }

        #[test]
        fn xgcd_bezout(a in poly_strategy(), b in poly_strategy()) {
            let f = PrimeField::new(101).unwrap();
            let a = Polynomial::from_i64(f, &a);
            let b = Polynomial::from_i64(f, &b);
            let (g, s, t) = Polynomial::xgcd(&a, &b).unwrap();
            prop_assert_eq!(&(&s * &a) + &(&t * &b), g.clone());
            if !g.is_zero() {
                prop_assert!(g.divides(&a) && g.divides(&b));
            }
        }
    }
}
