//! Odd-degree hyperelliptic models `y^2 = f(x)`, their rational places,
//! divisors, and local expansions at places.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::algebra::{FieldElement, LaurentSeries, Polynomial, PrimeField};
use crate::error::{Error, Result};

/// `y^2 = f(x)` with `f` monic, squarefree, of odd degree `2g + 1 >= 5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    field: PrimeField,
    f: Polynomial,
    genus: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Affine { x: FieldElement, y: FieldElement },
    Infinity,
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Affine { x, y } => write!(f, "({x}, {y})"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

impl Place {
    pub fn affine(x: FieldElement, y: FieldElement) -> Self {
        Place::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    pub fn x(&self) -> Option<FieldElement> {
        match self {
            Place::Affine { x, .. } => Some(*x),
            Place::Infinity => None,
        }
    }
}

/// What lies over an `x`-value under the double cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fiber {
    /// Two rational places, swapped by the involution.
    Split(Place, Place),
    /// A single Weierstrass place.
    Ramified(Place),
    /// One place of degree two; not representable with rational support.
    Inert,
}

/// Local parametrization `x(t), y(t)` at a place, `t` a uniformizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalExpansion {
    pub x: LaurentSeries,
    pub y: LaurentSeries,
}

impl Curve {
    pub fn new(p: u64, f: &[i64]) -> Result<Self> {
        let field = PrimeField::new(p)?;
        Self::from_poly(Polynomial::from_i64(field, f))
    }

    pub fn from_poly(f: Polynomial) -> Result<Self> {
        let field = f.field();
        let deg = f.deg();
        if !f.is_monic() {
            return Err(Error::InvalidCurve(format!("f = {f} is not monic")));
        }
        if deg % 2 == 0 {
            return Err(Error::InvalidCurve(format!(
                "deg f = {deg} is even; only odd-degree models are supported"
            )));
        }
        if deg < 5 {
            return Err(Error::InvalidCurve(format!(
                "deg f = {deg} gives genus < 2"
            )));
        }
        if !f.is_squarefree() {
            return Err(Error::InvalidCurve(format!("f = {f} is not squarefree")));
        }
        Ok(Self {
            field,
            f,
            genus: (deg - 1) / 2,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u64 {
        self.field.modulus()
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn contains(&self, place: &Place) -> bool {
        match place {
            Place::Infinity => true,
            Place::Affine { x, y } => {
                x.modulus() == self.p() && y.modulus() == self.p() && *y * *y == self.f.eval(*x)
            }
        }
    }

    pub fn check_place(&self, place: &Place) -> Result<()> {
        if self.contains(place) {
            Ok(())
        } else {
            Err(Error::NotOnCurve(place.to_string()))
        }
    }

    pub fn place(&self, x: i64, y: i64) -> Result<Place> {
        let p = Place::affine(self.field.elem(x), self.field.elem(y));
        self.check_place(&p)?;
        Ok(p)
    }

    pub fn involution(&self, place: &Place) -> Result<Place> {
        self.check_place(place)?;
        Ok(match *place {
            Place::Affine { x, y } => Place::Affine { x, y: -y },
            Place::Infinity => Place::Infinity,
        })
    }

    pub fn is_weierstrass(&self, place: &Place) -> bool {
        match place {
            Place::Infinity => true,
            Place::Affine { y, .. } => y.is_zero(),
        }
    }

    pub fn fiber(&self, x: FieldElement) -> Fiber {
        let fx = self.f.eval(x);
        if fx.is_zero() {
            return Fiber::Ramified(Place::affine(x, fx));
        }
        match fx.sqrt() {
            Some(y) => Fiber::Split(Place::affine(x, y), Place::affine(x, -y)),
            None => Fiber::Inert,
        }
    }

    /// Rational places over `x`, empty for an inert fiber.
    pub fn places_over(&self, x: FieldElement) -> Vec<Place> {
        match self.fiber(x) {
            Fiber::Split(a, b) => vec![a, b],
            Fiber::Ramified(a) => vec![a],
            Fiber::Inert => vec![],
        }
    }

    /// All rational affine places, ordered by `x` then `y`.
    pub fn affine_places(&self) -> Vec<Place> {
        let mut out: Vec<Place> = self
            .field
            .elements()
            .flat_map(|x| self.places_over(x))
            .collect();
        out.sort();
        out
    }

    pub fn weierstrass_places(&self) -> Vec<Place> {
        let (roots, _) = self.f.rational_roots();
        let mut out: Vec<Place> = roots
            .into_iter()
            .map(|(x, _)| Place::affine(x, self.field.zero()))
            .collect();
        out.push(Place::Infinity);
        out
    }

    /// Ramification index of the place over the `x`-line.
    pub fn ramification(&self, place: &Place) -> i64 {
        if self.is_weierstrass(place) {
            2
        } else {
            1
        }
    }

    /// Expansions with `precision` known coefficients: at affine places both
    /// series are known modulo `t^precision`; at infinity `x = t^-2` and `y`
    /// is known to `precision` terms past its leading `t^-(2g+1)`.
    pub fn local_expansion(&self, place: &Place, precision: i64) -> Result<LocalExpansion> {
        self.check_place(place)?;
        if precision < 1 {
            return Err(Error::InsufficientPrecision(format!(
                "requested precision {precision} < 1"
            )));
        }
        let field = self.field;
        match *place {
            Place::Affine { x: x0, y: y0 } if !y0.is_zero() => {
                // t = x - x0
                let x = LaurentSeries::new(field, 0, vec![x0, field.one()], precision);
                let fx = LaurentSeries::from_poly(&self.f.taylor_shift(x0)).truncate(precision);
                let y = fx.sqrt(Some(y0))?;
                Ok(LocalExpansion { x, y })
            }
            Place::Affine { x: x0, .. } => {
                // t = y, x = x0 + z with z g(z) = t^2 where f(x0 + z) = z g(z)
                let shifted = self.f.taylor_shift(x0);
                let g_poly = Polynomial::new(field, shifted.coeffs()[1..].to_vec());
                let t2 = LaurentSeries::exact_monomial(field.one(), 2);
                let mut z = LaurentSeries::zero(field, precision);
                for _ in 0..(precision / 2 + 2) {
                    let gz = z.compose_poly(&g_poly).truncate(precision);
                    z = t2.mul(&gz.invert()?).truncate(precision);
                }
                let x = z.add(&LaurentSeries::exact_constant(x0));
                let y = LaurentSeries::exact_monomial(field.one(), 1);
                Ok(LocalExpansion { x, y })
            }
            Place::Infinity => {
                let g = self.genus;
                let x = LaurentSeries::exact_monomial(field.one(), -2).truncate(-2 + precision);
                // t^(4g+2) f(t^-2) = sum f_i t^(4g+2-2i), constant term 1
                let deg = self.f.deg() as usize;
                let mut rev = vec![field.zero(); 2 * deg + 1];
                for (i, &c) in self.f.coeffs().iter().enumerate() {
                    rev[2 * (deg - i)] = c;
                }
                let r = LaurentSeries::new(field, 0, rev, precision);
                let s = r.sqrt(Some(field.one()))?;
                let y = s.shift(-(2 * g + 1));
                Ok(LocalExpansion { x, y })
            }
        }
    }
}

/// Formal sum of rational places with nonzero integer multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Divisor {
    terms: BTreeMap<Place, i64>,
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(p, m)| format!("{m}*{p}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Divisor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Place, i64)>) -> Self {
        let mut d = Self::zero();
        for (p, m) in terms {
            d.add_term(p, m);
        }
        d
    }

    pub fn point(place: Place) -> Self {
        Self::from_terms([(place, 1)])
    }

    pub fn infinity(m: i64) -> Self {
        Self::from_terms([(Place::Infinity, m)])
    }

    pub fn add_term(&mut self, place: Place, m: i64) {
        let e = self.terms.entry(place).or_insert(0);
        *e += m;
        if *e == 0 {
            self.terms.remove(&place);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Place, &i64)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Place> {
        self.terms.keys()
    }

    pub fn multiplicity(&self, place: &Place) -> i64 {
        self.terms.get(place).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(&p, &m)| (p, m * k)))
    }

    /// The part supported away from infinity.
    pub fn affine_part(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(p, _)| !p.is_infinity())
                .map(|(&p, &m)| (p, m)),
        )
    }

    /// Distinct `x`-values of the affine support.
    pub fn x_values(&self) -> Vec<FieldElement> {
        let mut xs: Vec<FieldElement> = self.terms.keys().filter_map(|p| p.x()).collect();
        xs.dedup();
        xs
    }

    /// Place-wise minimum.
    pub fn min(&self, other: &Self) -> Self {
        let places: std::collections::BTreeSet<Place> =
            self.terms.keys().chain(other.terms.keys()).copied().collect();
        Self::from_terms(
            places
                .into_iter()
                .map(|p| (p, self.multiplicity(&p).min(other.multiplicity(&p)))),
        )
    }

    pub fn check_on(&self, curve: &Curve) -> Result<()> {
        self.terms.keys().try_for_each(|p| curve.check_place(p))
    }
}

impl Add<&Divisor> for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        let mut d = self.clone();
        for (&p, &m) in &rhs.terms {
            d.add_term(p, m);
        }
        d
    }
}

impl Sub<&Divisor> for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        self + &(-rhs)
    }
}

impl Neg for &Divisor {
    type Output = Divisor;
    fn neg(self) -> Divisor {
        self.scale(-1)
    }
}
