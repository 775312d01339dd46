//! Truncated Laurent series with explicit absolute precision.
//!
//! A series stores its known coefficients starting at the valuation `lead`.
//! Every coefficient at an exponent `< precision` is known; stored
//! coefficients stop at the last nonzero one, the rest up to `precision` are
//! zero. `precision == EXACT` marks a finite Laurent polynomial known to all
//! orders. Arithmetic propagates precision so that a result never claims a
//! coefficient its inputs do not determine.

use std::fmt;

use super::field::{FieldElement, PrimeField};
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Sentinel precision of an exact (finite) Laurent polynomial.
pub const EXACT: i64 = i64::MAX;

fn shift_prec(prec: i64, by: i64) -> i64 {
    if prec == EXACT {
        EXACT
    } else {
        prec + by
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    field: PrimeField,
    lead: i64,
    coeffs: Vec<FieldElement>,
    precision: i64,
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                write!(f, "{}*t^{} + ", c, self.lead + i as i64)?;
            }
        }
        if self.precision == EXACT {
            write!(f, "(exact)")
        } else {
            write!(f, "O(t^{})", self.precision)
        }
    }
}

impl LaurentSeries {
    /// Builds `sum coeffs[i] t^(lead+i) + O(t^precision)`. Coefficients at or
    /// beyond `precision` are discarded.
    pub fn new(field: PrimeField, lead: i64, mut coeffs: Vec<FieldElement>, precision: i64) -> Self {
        if precision != EXACT {
            let keep = (precision - lead).max(0) as usize;
            coeffs.truncate(keep);
        }
        let mut s = Self {
            field,
            lead,
            coeffs,
            precision,
        };
        s.normalize();
        s
    }

    pub fn from_i64(field: PrimeField, lead: i64, coeffs: &[i64], precision: i64) -> Self {
        Self::new(field, lead, coeffs.iter().map(|&c| field.elem(c)).collect(), precision)
    }

    pub fn exact_constant(c: FieldElement) -> Self {
        Self::new(c.field(), 0, vec![c], EXACT)
    }

    /// `c * t^e`, exact.
    pub fn exact_monomial(c: FieldElement, e: i64) -> Self {
        Self::new(c.field(), e, vec![c], EXACT)
    }

    pub fn zero(field: PrimeField, precision: i64) -> Self {
        Self::new(field, precision.min(0), Vec::new(), precision)
    }

    /// A polynomial in `t` viewed as an exact series.
    pub fn from_poly(p: &Polynomial) -> Self {
        Self::new(p.field(), 0, p.coeffs().to_vec(), EXACT)
    }

    fn normalize(&mut self) {
        let nz = self.coeffs.iter().position(|c| !c.is_zero());
        match nz {
            None => {
                self.coeffs.clear();
                self.lead = if self.precision == EXACT { 0 } else { self.precision };
            }
            Some(k) => {
                self.coeffs.drain(..k);
                self.lead += k as i64;
                while self.coeffs.last().is_some_and(|c| c.is_zero()) {
                    self.coeffs.pop();
                }
            }
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.precision == EXACT
    }

    /// Zero to the known precision.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Valuation, or `None` when every known coefficient vanishes.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.lead)
    }

    pub fn leading_coeff(&self) -> Option<FieldElement> {
        self.coeffs.first().copied()
    }

    /// Number of known coefficients from the valuation on.
    pub fn relative_precision(&self) -> i64 {
        if self.precision == EXACT {
            EXACT
        } else {
            self.precision - self.lead
        }
    }

    /// Coefficient of `t^e`; `None` when `e` is beyond the known precision.
    pub fn coeff(&self, e: i64) -> Option<FieldElement> {
        if e >= self.precision {
            return None;
        }
        if e < self.lead {
            return Some(self.field.zero());
        }
        Some(
            self.coeffs
                .get((e - self.lead) as usize)
                .copied()
                .unwrap_or(self.field.zero()),
        )
    }

    pub fn truncate(&self, precision: i64) -> Self {
        Self::new(self.field, self.lead, self.coeffs.clone(), precision.min(self.precision))
    }

    /// Multiply by `t^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self::new(self.field, self.lead + e, self.coeffs.clone(), shift_prec(self.precision, e))
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        Self::new(
            self.field,
            self.lead,
            self.coeffs.iter().map(|&a| a * c).collect(),
            self.precision,
        )
    }

    pub fn neg(&self) -> Self {
        self.scale(-self.field.one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let precision = self.precision.min(other.precision);
        let lead = if self.is_zero() {
            other.lead.min(precision)
        } else if other.is_zero() {
            self.lead.min(precision)
        } else {
            self.lead.min(other.lead)
        };
        let end_a = self.lead + self.coeffs.len() as i64;
        let end_b = other.lead + other.coeffs.len() as i64;
        let end = end_a.max(end_b).min(precision).max(lead);
        let coeffs = (lead..end)
            .map(|e| self.stored(e) + other.stored(e))
            .collect();
        Self::new(self.field, lead, coeffs, precision)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn stored(&self, e: i64) -> FieldElement {
        if e < self.lead {
            return self.field.zero();
        }
        self.coeffs
            .get((e - self.lead) as usize)
            .copied()
            .unwrap_or(self.field.zero())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if (self.is_exact() && self.is_zero()) || (other.is_exact() && other.is_zero()) {
            return Self::exact_constant(self.field.zero());
        }
        let precision = shift_prec(other.precision, self.lead).min(shift_prec(self.precision, other.lead));
        let lead = self.lead + other.lead;
        let mut n = self.coeffs.len() + other.coeffs.len();
        n = n.saturating_sub(1);
        if precision != EXACT {
            n = n.min((precision - lead).max(0) as usize);
        }
        let mut coeffs = vec![self.field.zero(); n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if i >= n {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self::new(self.field, lead, coeffs, precision)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::exact_constant(self.field.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal derivative in `t`.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| c * self.field.elem(self.lead + i as i64))
            .collect();
        Self::new(self.field, self.lead - 1, coeffs, shift_prec(self.precision, -1))
    }

    /// Multiplicative inverse to the relative precision of `self`.
    pub fn invert(&self) -> Result<Self> {
        let a0 = self.leading_coeff().ok_or(Error::ZeroSeries)?;
        if self.is_exact() && self.coeffs.len() > 1 {
            return Err(Error::InsufficientPrecision(
                "inverse of an exact multi-term series needs a precision bound; truncate first".into(),
            ));
        }
        let n = if self.is_exact() { 1 } else { self.relative_precision() as usize };
        let a0_inv = a0.inv().expect("nonzero leading coefficient");
        let mut inv = vec![self.field.zero(); n];
        inv[0] = a0_inv;
        for k in 1..n {
            let mut acc = self.field.zero();
            for j in 1..=k.min(self.coeffs.len().saturating_sub(1)) {
                acc += self.coeffs[j] * inv[k - j];
            }
            inv[k] = -acc * a0_inv;
        }
        let precision = if self.is_exact() { EXACT } else { -self.lead + n as i64 };
        Ok(Self::new(self.field, -self.lead, inv, precision))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.invert()?))
    }

    /// Square root with the leading coefficient `branch` when given, otherwise
    /// the smaller residue root.
    pub fn sqrt(&self, branch: Option<FieldElement>) -> Result<Self> {
        let a0 = match self.leading_coeff() {
            Some(a0) => a0,
            None => {
                if self.is_exact() {
                    return Ok(self.clone());
                }
                let half = self.precision.div_euclid(2);
                return Ok(Self::zero(self.field, half));
            }
        };
        if self.lead % 2 != 0 {
            return Err(Error::OddValuation(self.lead));
        }
        let mut r0 = a0
            .sqrt()
            .ok_or(Error::NonResidue(a0.value(), self.field.modulus()))?;
        if let Some(b) = branch {
            if b * b != a0 {
                return Err(Error::InvalidInput(format!(
                    "branch {b} is not a square root of the leading coefficient {a0}"
                )));
            }
            r0 = b;
        }
        if self.is_exact() && self.coeffs.len() > 1 {
            return Err(Error::InsufficientPrecision(
                "square root of an exact multi-term series needs a precision bound; truncate first".into(),
            ));
        }
        let n = if self.is_exact() { 1 } else { self.relative_precision() as usize };
        let two_r0_inv = (r0 + r0).inv().expect("odd characteristic");
        let mut r = vec![self.field.zero(); n];
        r[0] = r0;
        // r^2 = a: a_k = 2 r0 r_k + sum_{0<j<k} r_j r_{k-j}
        for k in 1..n {
            let mut acc = self.coeffs.get(k).copied().unwrap_or(self.field.zero());
            for j in 1..k {
                acc -= r[j] * r[k - j];
            }
            r[k] = acc * two_r0_inv;
        }
        let half = self.lead / 2;
        let precision = if self.is_exact() { EXACT } else { half + n as i64 };
        Ok(Self::new(self.field, half, r, precision))
    }

    /// `poly(self)` by Horner's rule.
    pub fn compose_poly(&self, poly: &Polynomial) -> Self {
        let mut acc = Self::exact_constant(self.field.zero());
        for &c in poly.coeffs().iter().rev() {
            acc = acc.mul(self).add(&Self::exact_constant(c));
        }
        acc
    }
}

/// Public entry points mirroring the operation names used in the docs.
pub fn series_sqrt(s: &LaurentSeries) -> Result<LaurentSeries> {
    s.sqrt(None)
}

pub fn series_invert(s: &LaurentSeries) -> Result<LaurentSeries> {
    s.invert()
}
