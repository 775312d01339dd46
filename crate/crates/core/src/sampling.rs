//! Seeded random divisors and functions for sweeps and property checks.
//!
//! Every generator takes an explicit seed and stream; there is no global state.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{FieldElement, Polynomial};
use crate::curve::{Curve, Divisor, Place};
use crate::error::{Error, Result};
use crate::function::FunctionElement;
use crate::pairing::Differential;
use crate::riemann_roch::{function_divisor, rr_space, RRBasis};

/// ChaCha8 keyed by `seed`, on an independent `stream`.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn affine_places(curve: &Curve) -> Result<Vec<Place>> {
    let places = curve.affine_places();
    if places.is_empty() {
        return Err(Error::NotEnoughPoints(format!(
            "y^2 = {} has no affine rational points over F_{}",
            curve.f(),
            curve.p()
        )));
    }
    Ok(places)
}

/// A divisor of the given degree: up to `g + 1` random affine places with
/// multiplicities in `{-2, -1, 1, 2}`, the balance at infinity.
pub fn random_divisor<R: Rng>(curve: &Curve, degree: i64, rng: &mut R) -> Result<Divisor> {
    let places = affine_places(curve)?;
    let n = rng.gen_range(1..=curve.genus() as usize + 1);
    let mut d = Divisor::zero();
    for _ in 0..n {
        let p = *places.choose(rng).expect("nonempty");
        let m = *[-2i64, -1, 1, 2].choose(rng).expect("nonempty");
        d.add_term(p, m);
    }
    let rest = degree - d.degree();
    d.add_term(Place::Infinity, rest);
    Ok(d)
}

/// An effective affine divisor of the given degree.
pub fn random_effective_divisor<R: Rng>(curve: &Curve, degree: i64, rng: &mut R) -> Result<Divisor> {
    let places = affine_places(curve)?;
    let mut d = Divisor::zero();
    for _ in 0..degree.max(0) {
        d.add_term(*places.choose(rng).expect("nonempty"), 1);
    }
    Ok(d)
}

/// A simple effective divisor of the given degree: at most one place per
/// fiber, Weierstrass places (infinity included) with multiplicity at most one.
pub fn random_simple_divisor<R: Rng>(curve: &Curve, degree: i64, rng: &mut R) -> Result<Divisor> {
    let mut fibers: Vec<Vec<Place>> = Vec::new();
    for x in curve.field().elements() {
        let over = curve.places_over(x);
        if !over.is_empty() {
            fibers.push(over);
        }
    }
    fibers.push(vec![Place::Infinity]);
    let need = degree.max(0) as usize;
    if fibers.len() < need {
        return Err(Error::NotEnoughPoints(format!(
            "only {} rational fibers for a simple divisor of degree {degree}",
            fibers.len()
        )));
    }
    let mut d = Divisor::zero();
    // a non-Weierstrass place may repeat; each repeat still avoids its conjugate
    let mut chosen: Vec<Place> = Vec::new();
    while d.degree() < degree {
        let fib = fibers.choose(rng).expect("nonempty");
        let p = *fib.choose(rng).expect("nonempty");
        let conj_taken = fib.iter().any(|q| *q != p && chosen.contains(q));
        let repeat_w = curve.is_weierstrass(&p) && chosen.contains(&p);
        if conj_taken || repeat_w {
            continue;
        }
        chosen.push(p);
        d.add_term(p, 1);
    }
    Ok(d)
}

pub fn random_element<R: Rng>(curve: &Curve, rng: &mut R) -> FieldElement {
    curve.field().elem(rng.gen_range(0..curve.p() as i64))
}

/// A random nonzero combination of a nonempty basis.
pub fn random_nonzero_section<R: Rng>(curve: &Curve, basis: &RRBasis, rng: &mut R) -> Option<FunctionElement> {
    if basis.dim() == 0 {
        return None;
    }
    loop {
        let coeffs: Vec<FieldElement> = (0..basis.dim()).map(|_| random_element(curve, rng)).collect();
        let h = basis.combination(&coeffs);
        if !h.is_zero() {
            return Some(h);
        }
    }
}

/// `y - v(x)` with `v` interpolating up to `g + 1` places over distinct
/// `x`-values, possibly times `(x - a)^(+-1)` and possibly inverted.
fn interpolation_function<R: Rng>(curve: &Curve, rng: &mut R) -> Result<FunctionElement> {
    let field = curve.field();
    let mut places = affine_places(curve)?;
    places.shuffle(rng);
    let mut nodes: Vec<(FieldElement, FieldElement)> = Vec::new();
    let m = rng.gen_range(1..=curve.genus() as usize + 1);
    for p in places {
        if let Place::Affine { x, y } = p {
            if nodes.len() < m && nodes.iter().all(|(x0, _)| *x0 != x) {
                nodes.push((x, y));
            }
        }
    }
    let mut v = Polynomial::zero(field);
    for (i, &(xi, yi)) in nodes.iter().enumerate() {
        let mut term = Polynomial::constant(yi);
        for (j, &(xj, _)) in nodes.iter().enumerate() {
            if i != j {
                let scale = (xi - xj).inv().expect("distinct nodes");
                term = &term * &Polynomial::linear(xj).scale(scale);
            }
        }
        v = &v + &term;
    }
    let mut h = FunctionElement::new(-&v, Polynomial::one(field), Polynomial::one(field))?;
    let a = FunctionElement::from_poly(Polynomial::linear(random_element(curve, rng)));
    match rng.gen_range(0..3) {
        0 => h = h.mul(&a, curve),
        1 => h = h.div(&a, curve)?,
        _ => {}
    }
    if rng.gen_bool(0.5) {
        h = h.inv(curve)?;
    }
    Ok(h)
}

/// A nonzero function with rational divisor, with that divisor. Draws either
/// a random section of a random `L(E)` or an interpolation function, retrying
/// while the divisor has irrational support.
pub fn random_principal_divisor<R: Rng>(curve: &Curve, rng: &mut R) -> Result<Option<(FunctionElement, Divisor)>> {
    for _ in 0..64 {
        let h = if rng.gen_bool(0.3) {
            let e = &random_divisor(curve, 0, rng)? + &Divisor::infinity(curve.genus() + 1);
            match random_nonzero_section(curve, &rr_space(curve, &e)?, rng) {
                Some(h) => h,
                None => continue,
            }
        } else {
            interpolation_function(curve, rng)?
        };
        match function_divisor(curve, &h) {
            Ok(d) => return Ok(Some((h, d))),
            Err(Error::IrrationalSupport) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// A random `h dx/y` whose poles lie over rational split fibers or at infinity.
pub fn random_differential<R: Rng>(curve: &Curve, rng: &mut R) -> Result<Differential> {
    let field = curve.field();
    let places = affine_places(curve)?;
    let mut den = Polynomial::one(field);
    for _ in 0..rng.gen_range(0..=3) {
        let p = places[rng.gen_range(0..places.len())];
        den = &den * &Polynomial::linear(p.x().expect("affine"));
    }
    let coeffs = |n: usize, rng: &mut R| Polynomial::new(field, (0..n).map(|_| random_element(curve, rng)).collect());
    let a = coeffs(rng.gen_range(0..6), rng);
    let b = coeffs(rng.gen_range(0..4), rng);
    if a.is_zero() && b.is_zero() {
        return Ok(Differential::new(FunctionElement::one(field)));
    }
    Ok(Differential::new(FunctionElement::new(a, b, den)?))
}

/// Sections `s, t` of `O(2m inf)` without common zero, as products of
/// linear factors over rational fibers; fewer than `m` factors puts zeros at
/// infinity. At least one of the two has exactly `m` factors.
pub fn random_koszul_sections<R: Rng>(curve: &Curve, m: i64, rng: &mut R) -> Result<(FunctionElement, FunctionElement)> {
    let xs: Vec<_> = affine_places(curve)?.iter().filter_map(Place::x).collect();
    let section = |rng: &mut R| {
        let n = rng.gen_range(0..=m);
        let roots: Vec<_> = (0..n).map(|_| xs[rng.gen_range(0..xs.len())]).collect();
        let mut p = Polynomial::constant(curve.field().elem(rng.gen_range(1..curve.p() as i64)));
        for &r in &roots {
            p = &p * &Polynomial::linear(r);
        }
        (n, roots, FunctionElement::from_poly(p))
    };
    loop {
        let (ns, rs, s) = section(rng);
        let (nt, rt, t) = section(rng);
        if (ns == m || nt == m) && !rs.iter().any(|r| rt.contains(r)) {
            return Ok((s, t));
        }
    }
}
