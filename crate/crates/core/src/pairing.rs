//! Residues of differentials `h dx/y` and the Serre-duality pairings built
//! from them.
//!
//! Sections of `O(D)` are functions `h` in `L(D)`; the section has divisor
//! `div(h) + D`. The Koszul extension `0 -> L^-1 -> O^2 -> L -> 0` of two
//! sections `s, t` without common zero has Cech class `-1/(st)` on the cover
//! `{s != 0}, {t != 0}`, and its pairing with `w` in `H^0(K L^2)` is the sum of
//! the residues of `-w/(st) dx/y` over the zeros of `s`.

use serde::Serialize;

use crate::algebra::{FieldElement, Matrix};
use crate::curve::{Curve, Divisor, Place};
use crate::error::{Error, Result};
use crate::function::FunctionElement;
use crate::riemann_roch::{
    canonical_divisor, common_zero_degree, contains, function_divisor, h0, rr_space, section_zeros,
};

const MAX_PRECISION: i64 = 1 << 14;

/// The differential `h dx/y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Differential {
    pub h: FunctionElement,
}

impl Differential {
    pub fn new(h: FunctionElement) -> Self {
        Self { h }
    }

    /// `div(h) + (2g - 2) inf`.
    pub fn divisor(&self, curve: &Curve) -> Result<Divisor> {
        Ok(&function_divisor(curve, &self.h)? + &canonical_divisor(curve))
    }
}

/// Pairing values against a dual basis; `splits` when all vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingReport {
    pub values: Vec<u64>,
    pub splits: bool,
}

impl PairingReport {
    fn from_values(values: Vec<FieldElement>) -> Self {
        let splits = values.iter().all(|v| v.is_zero());
        Self {
            values: values.iter().map(|v| v.value()).collect(),
            splits,
        }
    }
}

/// `h^1(D) = h^0(K - D)`.
pub fn h1(curve: &Curve, d: &Divisor) -> Result<i64> {
    h0(curve, &(&canonical_divisor(curve) - d))
}

fn try_residue(curve: &Curve, w: &Differential, place: &Place, n: i64) -> Result<Option<FieldElement>> {
    let e = curve.local_expansion(place, n)?;
    let h = &w.h;
    let num = e.x.compose_poly(h.a()).add(&e.y.mul(&e.x.compose_poly(h.b())));
    let den = e.x.compose_poly(h.c());
    if den.is_zero() {
        return Ok(None);
    }
    let dx_over_y = e.x.derivative().div(&e.y)?;
    let series = num.div(&den)?.mul(&dx_over_y);
    Ok(series.coeff(-1))
}

/// Coefficient of `dt/t` in `w` at a place, in the uniformizer of its local
/// expansion. Precision is doubled until the coefficient is determined.
pub fn residue_at(curve: &Curve, w: &Differential, place: &Place) -> Result<FieldElement> {
    curve.check_place(place)?;
    if w.h.is_zero() {
        return Ok(curve.field().zero());
    }
    let mut n = 8;
    loop {
        match try_residue(curve, w, place, n) {
            Ok(Some(r)) => return Ok(r),
            Ok(None) | Err(Error::InsufficientPrecision(_)) | Err(Error::ZeroSeries) => {}
            Err(e) => return Err(e),
        }
        if n >= MAX_PRECISION {
            return Err(Error::InsufficientPrecision(format!(
                "residue of {} at {place} undetermined at {n} terms",
                w.h
            )));
        }
        n *= 2;
    }
}

/// Places where `w` may have poles: over the roots of the denominator, and
/// infinity.
pub fn polar_places(curve: &Curve, w: &Differential) -> Result<Vec<Place>> {
    let roots = w.h.c().split().ok_or(Error::IrrationalSupport)?;
    let mut out = Vec::new();
    for (x0, _) in roots {
        let over = curve.places_over(x0);
        if over.is_empty() {
            return Err(Error::IrrationalSupport);
        }
        out.extend(over);
    }
    out.push(Place::Infinity);
    Ok(out)
}

/// Sum of all residues of `w`; zero by the residue theorem.
pub fn residue_sum(curve: &Curve, w: &Differential) -> Result<FieldElement> {
    let mut acc = curve.field().zero();
    for p in polar_places(curve, w)? {
        acc += residue_at(curve, w, &p)?;
    }
    Ok(acc)
}

/// Which chart's complement the Koszul residue sum runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chart {
    /// Sum over the zeros of `s`.
    S,
    /// Minus the sum over the zeros of `t`.
    T,
}

fn check_koszul_inputs(
    curve: &Curve,
    d_l: &Divisor,
    s: &FunctionElement,
    t: &FunctionElement,
) -> Result<()> {
    if s.is_zero() || t.is_zero() {
        return Err(Error::ZeroFunction);
    }
    if common_zero_degree(curve, d_l, &[s.clone(), t.clone()])? > 0 {
        return Err(Error::CommonZero);
    }
    Ok(())
}

fn koszul_sum(
    curve: &Curve,
    d_l: &Divisor,
    s: &FunctionElement,
    t: &FunctionElement,
    w: &Differential,
    chart: Chart,
) -> Result<FieldElement> {
    let st = s.mul(t, curve);
    let form = Differential::new(w.h.div(&st, curve)?.neg());
    let (zeros, sign) = match chart {
        Chart::S => (section_zeros(curve, d_l, s)?, curve.field().one()),
        Chart::T => (section_zeros(curve, d_l, t)?, -curve.field().one()),
    };
    let mut acc = curve.field().zero();
    for p in zeros.support() {
        acc += residue_at(curve, &form, p)?;
    }
    Ok(sign * acc)
}

/// `<e, w>` on one chart, without falling back to the other.
pub fn koszul_pair_on(
    curve: &Curve,
    d_l: &Divisor,
    s: &FunctionElement,
    t: &FunctionElement,
    w: &Differential,
    chart: Chart,
) -> Result<FieldElement> {
    check_koszul_inputs(curve, d_l, s, t)?;
    check_dual(curve, d_l, w)?;
    koszul_sum(curve, d_l, s, t, w, chart)
}

fn check_dual(curve: &Curve, d_l: &Divisor, w: &Differential) -> Result<()> {
    let target = &canonical_divisor(curve) + &d_l.scale(2);
    if !contains(curve, &target, &w.h)? {
        return Err(Error::NotInSpace(format!("{} is not in L({target})", w.h)));
    }
    Ok(())
}

/// Pairing of the Koszul class `e` of `(s, t)` in `H^1(L^-2)` with `w` in
/// `H^0(K L^2)`. Uses the zeros of `t` when those of `s` are not rational.
pub fn koszul_pair(
    curve: &Curve,
    d_l: &Divisor,
    s: &FunctionElement,
    t: &FunctionElement,
    w: &Differential,
) -> Result<FieldElement> {
    check_koszul_inputs(curve, d_l, s, t)?;
    check_dual(curve, d_l, w)?;
    match koszul_sum(curve, d_l, s, t, w, Chart::S) {
        Err(Error::IrrationalSupport) => koszul_sum(curve, d_l, s, t, w, Chart::T),
        other => other,
    }
}

/// The functional `u^2 e` against a basis of `H^0(K L^-2)`.
pub fn u2e_functional(
    curve: &Curve,
    d_l: &Divisor,
    s: &FunctionElement,
    t: &FunctionElement,
    u: &FunctionElement,
) -> Result<PairingReport> {
    if u.is_zero() {
        return Err(Error::ZeroFunction);
    }
    if !contains(curve, &d_l.scale(2), u)? {
        return Err(Error::NotInSpace(format!("{u} is not in L({})", d_l.scale(2))));
    }
    check_koszul_inputs(curve, d_l, s, t)?;
    let dual = &canonical_divisor(curve) - &d_l.scale(2);
    let u2 = u.mul(u, curve);
    let values = if dual.degree() < 0 {
        Vec::new()
    } else {
        rr_space(curve, &dual)?
            .elements
            .iter()
            .map(|w| koszul_pair(curve, d_l, s, t, &Differential::new(u2.mul(w, curve))))
            .collect::<Result<Vec<_>>>()?
    };
    Ok(PairingReport::from_values(values))
}

/// Rank of `S^2 H^0(K) -> H^0(K^2)`; on a hyperelliptic curve this is
/// `2g - 1`, short of `3g - 3` once `g >= 3`.
pub fn canonical_multiplication_rank(curve: &Curve) -> Result<usize> {
    let field = curve.field();
    let k = canonical_divisor(curve);
    let basis = rr_space(curve, &k)?.elements;
    let target = rr_space(curve, &k.scale(2))?;
    // products of elements of L(K) are polynomials in x and y over c = 1
    let width = target
        .elements
        .iter()
        .map(|h| h.a().coeffs().len().max(h.b().coeffs().len()))
        .max()
        .unwrap_or(0);
    let mut rows = Vec::new();
    for i in 0..basis.len() {
        for j in i..basis.len() {
            let h = basis[i].mul(&basis[j], curve);
            if !h.c().is_one() {
                return Err(Error::Internal(format!("product {h} is not integral")));
            }
            let mut row = vec![field.zero(); 2 * width];
            for (e, &c) in h.a().coeffs().iter().enumerate() {
                row[e] = c;
            }
            for (e, &c) in h.b().coeffs().iter().enumerate() {
                row[width + e] = c;
            }
            rows.push(row);
        }
    }
    Ok(Matrix::from_rows(field, 2 * width, &rows).rank())
}
