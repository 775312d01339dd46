//! Riemann-Roch spaces `L(D)`, divisors of functions, valuations and fixed
//! parts of linear systems.
//!
//! `L(D)` is solved by an ansatz `h = (a(x) + y b(x)) / c(x)`: `c` clears the
//! poles permitted at affine places, the pole budget at infinity bounds the
//! degrees of `a` and `b` (the monomials `x^i` and `y x^j` have distinct pole
//! orders `2i` and `2j + 2g + 1` there), and the remaining affine conditions
//! are linear equations on Taylor coefficients at the places over the roots
//! of `c` and over the support of `D`.

use crate::algebra::{FieldElement, LaurentSeries, Matrix, Polynomial};
use crate::curve::{Curve, Divisor, Fiber, Place};
use crate::error::{Error, Result};
use crate::function::FunctionElement;

/// A basis of `L(D)`, echelonized by pole order at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RRBasis {
    pub divisor: Divisor,
    pub elements: Vec<FunctionElement>,
}

impl RRBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// The linear combination `sum coeffs[i] * elements[i]`.
    pub fn combination(&self, coeffs: &[FieldElement]) -> FunctionElement {
        assert_eq!(coeffs.len(), self.elements.len());
        let field = self.elements.first().map(|h| h.field());
        match field {
            None => panic!("combination over an empty basis"),
            Some(field) => coeffs
                .iter()
                .zip(&self.elements)
                .fold(FunctionElement::zero(field), |acc, (&k, h)| acc.add(&h.scale(k))),
        }
    }
}

/// `(2g - 2) * Infinity`, the divisor of `dx/y`.
pub fn canonical_divisor(c: &Curve) -> Divisor {
    Divisor::infinity(2 * c.genus() - 2)
}

/// `k * (2 * Infinity)`, a divisor of `H^k`.
pub fn hyperelliptic_divisor(k: i64) -> Divisor {
    Divisor::infinity(2 * k)
}

/// Divisor of `c(x)` restricted to affine places; errors if a root lies
/// under a non-rational place.
fn affine_divisor_of_poly(curve: &Curve, p: &Polynomial) -> Result<Divisor> {
    let roots = p.split().ok_or(Error::IrrationalSupport)?;
    let mut d = Divisor::zero();
    for (x0, m) in roots {
        match curve.fiber(x0) {
            Fiber::Split(a, b) => {
                d.add_term(a, m as i64);
                d.add_term(b, m as i64);
            }
            Fiber::Ramified(w) => d.add_term(w, 2 * m as i64),
            Fiber::Inert => return Err(Error::IrrationalSupport),
        }
    }
    Ok(d)
}

/// `v_P(h)` for a nonzero function.
pub fn valuation(curve: &Curve, h: &FunctionElement, place: &Place) -> Result<i64> {
    curve.check_place(place)?;
    if h.is_zero() {
        return Err(Error::ZeroFunction);
    }
    match place {
        Place::Infinity => Ok(valuation_at_infinity(curve, h)),
        Place::Affine { x: x0, .. } => {
            let e = curve.ramification(place);
            let norm = h.numerator_norm(curve);
            // v_P(num) <= v_P(norm) = e * ord_x0(norm)
            let bound = e * norm.root_multiplicity(*x0) as i64;
            let num = h.numerator_series(curve, place, bound + 1)?;
            let v_num = num.valuation().ok_or_else(|| {
                Error::Internal(format!("numerator of {h} vanishes beyond its norm bound at {place}"))
            })?;
            let v_den = e * h.c().root_multiplicity(*x0) as i64;
            Ok(v_num - v_den)
        }
    }
}

fn valuation_at_infinity(curve: &Curve, h: &FunctionElement) -> i64 {
    let g = curve.genus();
    let mut v = i64::MAX;
    if !h.a().is_zero() {
        v = v.min(-2 * h.a().deg());
    }
    if !h.b().is_zero() {
        v = v.min(-(2 * g + 1) - 2 * h.b().deg());
    }
    v + 2 * h.c().deg()
}

/// `div(h) = sum v_P(h) P`; errors when a zero or pole is not rational.
pub fn function_divisor(curve: &Curve, h: &FunctionElement) -> Result<Divisor> {
    if h.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let norm = h.numerator_norm(curve);
    let mut xs: Vec<FieldElement> = Vec::new();
    for p in [&norm, h.c()] {
        let roots = p.split().ok_or(Error::IrrationalSupport)?;
        xs.extend(roots.into_iter().map(|(x, _)| x));
    }
    xs.sort();
    xs.dedup();
    let mut d = Divisor::zero();
    for x0 in xs {
        let places = curve.places_over(x0);
        if places.is_empty() {
            return Err(Error::IrrationalSupport);
        }
        for p in places {
            d.add_term(p, valuation(curve, h, &p)?);
        }
    }
    d.add_term(Place::Infinity, valuation_at_infinity(curve, h));
    if d.degree() != 0 {
        return Err(Error::Internal(format!("div({h}) = {d} has nonzero degree")));
    }
    Ok(d)
}

/// Whether `div(h) + D >= 0`.
pub fn contains(curve: &Curve, d: &Divisor, h: &FunctionElement) -> Result<bool> {
    d.check_on(curve)?;
    if h.is_zero() {
        return Ok(true);
    }
    // a normalized h has a pole over every root of its denominator
    let Some(roots) = h.c().split() else {
        return Ok(false);
    };
    let mut places: Vec<Place> = Vec::new();
    for (x0, _) in roots {
        let over = curve.places_over(x0);
        if over.is_empty() {
            return Ok(false);
        }
        places.extend(over);
    }
    places.extend(d.terms().filter(|(_, &m)| m < 0).map(|(p, _)| *p));
    places.push(Place::Infinity);
    places.sort();
    places.dedup();
    for p in places {
        if valuation(curve, h, &p)? < -d.multiplicity(&p) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Raw solver output: numerators `(a_i, b_i)` over a shared denominator.
struct Numerators {
    denom: Polynomial,
    elems: Vec<(Polynomial, Polynomial)>,
}

fn solve(curve: &Curve, d: &Divisor) -> Result<Numerators> {
    d.check_on(curve)?;
    let field = curve.field();
    let g = curve.genus();
    let mut denom = Polynomial::one(field);
    // (place, required order of vanishing of a + yb at it)
    let mut conditions: Vec<(Place, i64)> = Vec::new();
    for x0 in d.x_values() {
        let places = curve.places_over(x0);
        let e_x0 = match curve.fiber(x0) {
            Fiber::Ramified(w) => (d.multiplicity(&w).max(0) + 1) / 2,
            Fiber::Split(a, b) => d.multiplicity(&a).max(d.multiplicity(&b)).max(0),
            Fiber::Inert => unreachable!("divisor places are rational"),
        };
        denom = &denom * &Polynomial::linear(x0).pow(e_x0 as u32);
        for p in places {
            let order = curve.ramification(&p) * e_x0 - d.multiplicity(&p);
            if order > 0 {
                conditions.push((p, order));
            }
        }
    }
    let budget = d.multiplicity(&Place::Infinity) + 2 * denom.deg();
    let max_a = budget.div_euclid(2);
    let max_b = (budget - 2 * g - 1).div_euclid(2);
    let na = (max_a + 1).max(0) as usize;
    let nb = (max_b + 1).max(0) as usize;
    let n = na + nb;
    if n == 0 {
        return Ok(Numerators {
            denom,
            elems: Vec::new(),
        });
    }

    let mut rows: Vec<Vec<FieldElement>> = Vec::new();
    for (p, order) in &conditions {
        let e = curve.local_expansion(p, *order)?;
        let mut monomials: Vec<LaurentSeries> = Vec::with_capacity(n);
        let mut xi = LaurentSeries::exact_constant(field.one());
        let mut powers = Vec::with_capacity(na.max(nb));
        for _ in 0..na.max(nb) {
            powers.push(xi.clone());
            xi = xi.mul(&e.x);
        }
        monomials.extend(powers.iter().take(na).cloned());
        monomials.extend(powers.iter().take(nb).map(|s| e.y.mul(s)));
        for k in 0..*order {
            let row = monomials
                .iter()
                .map(|s| {
                    s.coeff(k).ok_or_else(|| {
                        Error::InsufficientPrecision(format!("coefficient t^{k} at {p}"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
    }
    let kernel = if rows.is_empty() {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
            .collect()
    } else {
        Matrix::from_rows(field, n, &rows).kernel()
    };
    if kernel.is_empty() {
        return Ok(Numerators {
            denom,
            elems: Vec::new(),
        });
    }

    // columns in order of decreasing pole order at infinity
    let mut order: Vec<(i64, usize)> = (0..na)
        .map(|i| (2 * i as i64, i))
        .chain((0..nb).map(|j| (2 * j as i64 + 2 * g + 1, na + j)))
        .collect();
    order.sort_by_key(|&(pole, _)| std::cmp::Reverse(pole));
    let permuted: Vec<Vec<FieldElement>> = kernel
        .iter()
        .map(|v| order.iter().map(|&(_, col)| v[col]).collect())
        .collect();
    let mut m = Matrix::from_rows(field, n, &permuted);
    let rank = m.rref().len();
    let mut elems = Vec::with_capacity(rank);
    for r in 0..rank {
        let mut a = vec![field.zero(); na];
        let mut b = vec![field.zero(); nb];
        for (pos, &(_, col)) in order.iter().enumerate() {
            let v = m[(r, pos)];
            if col < na {
                a[col] = v;
            } else {
                b[col - na] = v;
            }
        }
        elems.push((Polynomial::new(field, a), Polynomial::new(field, b)));
    }
    Ok(Numerators { denom, elems })
}

/// Basis of `L(D) = { h : div(h) + D >= 0 }`.
pub fn rr_space(curve: &Curve, d: &Divisor) -> Result<RRBasis> {
    let sol = solve(curve, d)?;
    let elements = sol
        .elems
        .into_iter()
        .map(|(a, b)| FunctionElement::new(a, b, sol.denom.clone()))
        .collect::<Result<Vec<_>>>()?;
    for h in &elements {
        if !contains(curve, d, h)? {
            return Err(Error::Internal(format!("basis element {h} is not in L({d})")));
        }
    }
    Ok(RRBasis {
        divisor: d.clone(),
        elements,
    })
}

/// `h^0(D) = dim L(D)`.
pub fn h0(curve: &Curve, d: &Divisor) -> Result<i64> {
    d.check_on(curve)?;
    if d.degree() < 0 {
        return Ok(0);
    }
    Ok(rr_space(curve, d)?.dim() as i64)
}

/// Hermite form `{A, B + yC}` of the ideal of `F[x, y]/(y^2 - f)` generated
/// by the given numerators, returned as `(C, u, v)` where the ideal is
/// `C * (u, y - v)` with `(u, v)` a semi-reduced Mumford pair.
fn ideal_factorization(
    curve: &Curve,
    gens: &[(Polynomial, Polynomial)],
) -> Result<(Polynomial, Polynomial, Polynomial)> {
    let field = curve.field();
    let f = curve.f();
    let mut pivot: Option<(Polynomial, Polynomial)> = None;
    let mut pure = Polynomial::zero(field);
    let mut rows: Vec<(Polynomial, Polynomial)> = Vec::with_capacity(2 * gens.len());
    for (a, b) in gens {
        rows.push((a.clone(), b.clone()));
        rows.push((f * b, a.clone())); // y * (a + yb)
    }
    for row in rows {
        if row.1.is_zero() {
            pure = Polynomial::xgcd(&pure, &row.0)?.0;
            continue;
        }
        match pivot.take() {
            None => pivot = Some(row),
            Some(pv) => {
                let (g, s, t) = Polynomial::xgcd(&pv.1, &row.1)?;
                let new_first = &(&s * &pv.0) + &(&t * &row.0);
                let k1 = row.1.exact_div(&g)?;
                let k2 = pv.1.exact_div(&g)?;
                let other = &(&k1 * &pv.0) - &(&k2 * &row.0);
                pure = Polynomial::xgcd(&pure, &other)?.0;
                pivot = Some((new_first, g));
            }
        }
    }
    let (b_poly, c_poly) = pivot.ok_or(Error::ZeroFunction)?;
    if pure.is_zero() {
        return Err(Error::Internal("ideal has no nonzero polynomial".into()));
    }
    let u = pure.exact_div(&c_poly)?.monic();
    let v = (-&b_poly.exact_div(&c_poly)?).rem(&u)?;
    if !u.divides(&(f - &(&v * &v))) {
        return Err(Error::Internal("ideal factor is not a Mumford pair".into()));
    }
    Ok((c_poly, u, v))
}

/// Base locus `min_i (div(h_i) + D)` of functions `h_i` in `L(D)`, as its
/// degree (always computable) and, when its support is rational, as a divisor.
struct BaseLocus {
    degree: i64,
    divisor: Result<Divisor>,
}

fn base_locus(curve: &Curve, d: &Divisor, funcs: &[FunctionElement]) -> Result<BaseLocus> {
    let field = curve.field();
    let funcs: Vec<&FunctionElement> = funcs.iter().filter(|h| !h.is_zero()).collect();
    if funcs.is_empty() {
        return Err(Error::EmptyLinearSystem);
    }
    let mut denom = Polynomial::one(field);
    for h in &funcs {
        let g = Polynomial::xgcd(&denom, h.c())?.0;
        denom = (&denom * h.c()).exact_div(&g)?;
    }
    let mut gens = Vec::with_capacity(funcs.len());
    for h in &funcs {
        let k = denom.exact_div(h.c())?;
        gens.push((h.a() * &k, h.b() * &k));
    }
    let inf = funcs
        .iter()
        .map(|h| valuation_at_infinity(curve, h))
        .min()
        .expect("nonempty")
        + d.multiplicity(&Place::Infinity);
    let (c_poly, u, v) = ideal_factorization(curve, &gens)?;
    let affine = d.affine_part();
    let degree = 2 * c_poly.deg() + u.deg() - 2 * denom.deg() + affine.degree() + inf;

    let divisor = (|| -> Result<Divisor> {
        let mut out = &affine_divisor_of_poly(curve, &c_poly)? - &affine_divisor_of_poly(curve, &denom)?;
        out = &out + &affine;
        let roots = u.split().ok_or(Error::IrrationalSupport)?;
        for (x0, m) in roots {
            let p = Place::affine(x0, v.eval(x0));
            curve.check_place(&p)?;
            out.add_term(p, m as i64);
        }
        out.add_term(Place::Infinity, inf);
        Ok(out)
    })();
    if let Ok(div) = &divisor {
        if !div.is_effective() || div.degree() != degree {
            return Err(Error::Internal(format!("base locus {div} inconsistent")));
        }
    }
    Ok(BaseLocus { degree, divisor })
}

/// Fixed part of `|D|`: the place-wise minimum of `div(h) + D` over `L(D)`.
pub fn fixed_part(curve: &Curve, d: &Divisor) -> Result<Divisor> {
    let basis = rr_space(curve, d)?;
    base_locus(curve, d, &basis.elements)?.divisor
}

/// Degree of the fixed part of `|D|`; needs no rationality of its support.
pub fn fixed_part_degree(curve: &Curve, d: &Divisor) -> Result<i64> {
    let basis = rr_space(curve, d)?;
    Ok(base_locus(curve, d, &basis.elements)?.degree)
}

/// Degree of the common zero divisor of sections `h_i` of `O(D)`.
pub fn common_zero_degree(curve: &Curve, d: &Divisor, funcs: &[FunctionElement]) -> Result<i64> {
    for h in funcs {
        if !contains(curve, d, h)? {
            return Err(Error::NotInSpace(format!("{h} is not a section of O({d})")));
        }
    }
    Ok(base_locus(curve, d, funcs)?.degree)
}

/// The zero divisor `div(s) + D` of a section `s` of `O(D)`.
pub fn section_zeros(curve: &Curve, d: &Divisor, s: &FunctionElement) -> Result<Divisor> {
    if s.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let z = &function_divisor(curve, s)? + d;
    if !z.is_zero() && !z.is_effective() {
        return Err(Error::NotInSpace(format!("{s} is not a section of O({d})")));
    }
    Ok(z)
}
