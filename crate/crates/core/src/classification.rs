//! Decision procedures for line bundles of small degree and for which split
//! bundles `L + L^-1` arise as limits of the trivial rank-2 bundle.

use serde::{Deserialize, Serialize};

use crate::curve::{Curve, Divisor};
use crate::error::{Error, Result};
use crate::picard::{h0_of_class, DivisorClass};
use crate::riemann_roch::{fixed_part_degree, function_divisor, h0, hyperelliptic_divisor, rr_space};

/// `L = H^k (D)` with `D` effective and simple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub k: i64,
    pub d: Divisor,
    pub class: DivisorClass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LimitReason {
    DegreeAtLeastGPlus1,
    PowerOfH,
    NotClassified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitVerdict {
    pub is_limit: bool,
    pub reason: LimitReason,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<i64>,
}

/// Effective, with no full fiber `P + iota(P)` and no Weierstrass place
/// (infinity included) of multiplicity above one.
pub fn is_simple(curve: &Curve, d: &Divisor) -> Result<bool> {
    d.check_on(curve)?;
    if !d.is_zero() && !d.is_effective() {
        return Err(Error::NotEffective);
    }
    for (p, &m) in d.terms() {
        if curve.is_weierstrass(p) {
            if m > 1 {
                return Ok(false);
            }
        } else if d.multiplicity(&curve.involution(p)?) > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Writes `L` as `k H + D`, `D` simple, for `deg L <= g`.
pub fn simple_decomposition(curve: &Curve, l: &Divisor) -> Result<Decomposition> {
    l.check_on(curve)?;
    let g = curve.genus();
    if l.degree() > g {
        return Err(Error::Hypothesis(format!("deg L = {} exceeds g = {g}", l.degree())));
    }
    if h0(curve, l)? == 0 {
        return Err(Error::Hypothesis(format!("h0({l}) = 0, so L is not effective")));
    }
    let mut k = 0;
    while h0(curve, &(l - &hyperelliptic_divisor(k + 1)))? > 0 {
        k += 1;
    }
    let rest = l - &hyperelliptic_divisor(k);
    let basis = rr_space(curve, &rest)?;
    let h = basis.elements.first().ok_or_else(|| Error::Internal("empty basis".into()))?;
    let d = &function_divisor(curve, h)? + &rest;
    if !is_simple(curve, &d)? {
        return Err(Error::Internal(format!("{d} is not simple")));
    }
    let class = curve.class_of(l)?;
    let recomposed = curve.class_of(&(&hyperelliptic_divisor(k) + &d))?;
    if recomposed != class {
        return Err(Error::Internal(format!("{k} H + {d} is not equivalent to {l}")));
    }
    Ok(Decomposition { k, d, class })
}

/// `h^0(k H + D) = k + 1` for simple `D` with `deg D + k <= g`.
pub fn lemma1_h0_formula(curve: &Curve, k: i64, d: &Divisor) -> Result<i64> {
    if k < 0 {
        return Err(Error::Hypothesis(format!("k = {k} < 0")));
    }
    if !is_simple(curve, d)? {
        return Err(Error::Hypothesis(format!("{d} is not simple")));
    }
    if d.degree() + k > curve.genus() {
        return Err(Error::Hypothesis(format!(
            "deg D + k = {} exceeds g = {}",
            d.degree() + k,
            curve.genus()
        )));
    }
    Ok(k + 1)
}

/// `h^0(L) >= 1` and `|L|` has no base points.
pub fn is_globally_generated(curve: &Curve, l: &Divisor) -> Result<bool> {
    if h0(curve, l)? == 0 {
        return Ok(false);
    }
    Ok(fixed_part_degree(curve, l)? == 0)
}

/// Whether `L + L^-1` is a limit of the trivial bundle: `deg L >= g + 1` or
/// `L = H^k`, `k >= 0`. The bundle is symmetric in `L` and `L^-1`, so a
/// negative-degree class is judged through its inverse.
pub fn is_limit_of_trivial(curve: &Curve, l: &DivisorClass) -> Result<LimitVerdict> {
    let l = if l.degree() < 0 { curve.class_neg(l)? } else { l.clone() };
    curve.check_class(&l)?;
    if let Some(k) = l.is_power_of_h() {
        return Ok(LimitVerdict {
            is_limit: true,
            reason: LimitReason::PowerOfH,
            k: Some(k),
        });
    }
    let (is_limit, reason) = if l.degree() > curve.genus() {
        (true, LimitReason::DegreeAtLeastGPlus1)
    } else {
        (false, LimitReason::NotClassified)
    };
    Ok(LimitVerdict { is_limit, reason, k: None })
}

/// `h^1(L^2) = h^0(K - 2L) = 0`; then every extension of `L^-1` by `L` splits.
pub fn split_criterion(curve: &Curve, l: &DivisorClass) -> Result<bool> {
    let two_l = curve.class_add(l, l)?;
    let dual = curve.class_sub(&DivisorClass::canonical(curve), &two_l)?;
    Ok(h0_of_class(curve, &dual)? == 0)
}

/// Expected dimension `g - (r+1)(r+g-d)` of `W^r_d`.
pub fn brill_noether_rho(g: i64, r: i64, d: i64) -> i64 {
    g - (r + 1) * (r + g - d)
}

/// For a general curve: `L + L^-1` is a limit iff `h^0(L) >= 2` or `L` trivial.
pub fn generic_limit_rule(_g: i64, deg_l: i64, h0_l: i64) -> bool {
    h0_l >= 2 || (deg_l, h0_l) == (0, 1)
}

/// `h^0(K - 2L)` for a divisor `L`, via the solver.
pub fn h1_of_square(curve: &Curve, l: &Divisor) -> Result<i64> {
    let k = Divisor::infinity(2 * curve.genus() - 2);
    h0(curve, &(&k - &l.scale(2)))
}
