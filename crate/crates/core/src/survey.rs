//! Randomized sweep of the structural invariants over fixed curves.
//!
//! Trial `i` of invariant `j` draws from its own ChaCha stream derived from
//! the root seed, so reports do not depend on scheduling or worker count.

use std::fmt;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Polynomial;
use crate::classification::{
    h1_of_square, is_globally_generated, is_limit_of_trivial, simple_decomposition, split_criterion,
};
use crate::curve::{Curve, Divisor, Place};
use crate::error::{Error, Result};
use crate::function::FunctionElement;
use crate::pairing::{koszul_pair_on, residue_sum, u2e_functional, Chart, Differential};
use crate::picard::DivisorClass;
use crate::riemann_roch::{canonical_divisor, function_divisor, h0, hyperelliptic_divisor, rr_space};
use crate::sampling::{
    self, random_differential, random_divisor, random_koszul_sections, random_nonzero_section, random_simple_divisor,
};

pub const DEFAULT_P: u64 = 101;
pub const DEFAULT_GENERA: [i64; 3] = [2, 3, 4];
pub const DEFAULT_TRIALS: usize = 200;

/// `y^2 = x^(2g+1) + 3x + 1`, squarefree over `F_101` for `g = 2, 3, 4`.
pub fn default_curve(p: u64, g: i64) -> Result<Curve> {
    let mut f = vec![0i64; 2 * g as usize + 2];
    f[0] = 1;
    f[1] = 3;
    f[2 * g as usize + 1] = 1;
    Curve::new(p, &f)
}

#[derive(Clone, Debug)]
pub struct SurveyConfig {
    pub seed: u64,
    pub p: u64,
    pub genera: Vec<i64>,
    pub trials: usize,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for SurveyConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            p: DEFAULT_P,
            genera: DEFAULT_GENERA.to_vec(),
            trials: DEFAULT_TRIALS,
            workers: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub name: &'static str,
    pub trials: usize,
    pub passed: usize,
    pub violated: usize,
    pub skipped: usize,
    /// The first few violations, for diagnosis.
    pub examples: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyReport {
    pub seed: u64,
    pub p: u64,
    pub genera: Vec<i64>,
    pub invariants: Vec<InvariantReport>,
}

impl SurveyReport {
    pub fn total_violations(&self) -> usize {
        self.invariants.iter().map(|i| i.violated).sum()
    }
}

impl fmt::Display for SurveyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "survey seed={} p={} genera={:?}", self.seed, self.p, self.genera)?;
        for inv in &self.invariants {
            writeln!(
                f,
                "{:<28} trials={:<4} passed={:<4} violated={:<3} skipped={}",
                inv.name, inv.trials, inv.passed, inv.violated, inv.skipped
            )?;
            for e in &inv.examples {
                writeln!(f, "    {e}")?;
            }
        }
        write!(f, "violations: {}", self.total_violations())
    }
}

enum Outcome {
    Pass,
    Violation(String),
    Skip,
}

type Trial = fn(&Curve, &mut rand_chacha::ChaCha8Rng) -> Result<Outcome>;

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<Outcome> {
    Ok(if ok { Outcome::Pass } else { Outcome::Violation(msg()) })
}

const INVARIANTS: [(&str, Trial); 11] = [
    ("riemann_roch_identity", riemann_roch_identity),
    ("simple_twist_h0", simple_twist_h0),
    ("decomposition_round_trip", decomposition_round_trip),
    ("gg_implies_power_of_h", gg_implies_power_of_h),
    ("limit_verdict_invariance", limit_verdict_invariance),
    ("class_group_axioms", class_group_axioms),
    ("linear_equivalence", linear_equivalence),
    ("split_criterion", split_criterion_check),
    ("residue_theorem", residue_theorem),
    ("cover_antisymmetry", cover_antisymmetry),
    ("hyperelliptic_u2e_vanishing", u2e_vanishing),
];

/// Runs every invariant `trials` times, cycling through the curves.
pub fn run_survey(config: &SurveyConfig) -> Result<SurveyReport> {
    let curves = config
        .genera
        .iter()
        .map(|&g| default_curve(config.p, g))
        .collect::<Result<Vec<_>>>()?;
    if curves.is_empty() {
        return Err(Error::InvalidInput("no curves to survey".into()));
    }
    let work = || -> Vec<InvariantReport> {
        INVARIANTS
            .iter()
            .enumerate()
            .map(|(j, (name, trial))| {
                let outcomes: Vec<Outcome> = (0..config.trials)
                    .into_par_iter()
                    .map(|i| {
                        let curve = &curves[i % curves.len()];
                        let mut rng = sampling::rng(config.seed, ((j as u64) << 32) | i as u64);
                        match trial(curve, &mut rng) {
                            Ok(o) => o,
                            Err(Error::IrrationalSupport) => Outcome::Skip,
                            Err(e) => Outcome::Violation(format!("trial {i} (g = {}): error {e}", curve.genus())),
                        }
                    })
                    .collect();
                let mut rep = InvariantReport {
                    name,
                    trials: config.trials,
                    passed: 0,
                    violated: 0,
                    skipped: 0,
                    examples: Vec::new(),
                };
                for o in outcomes {
                    match o {
                        Outcome::Pass => rep.passed += 1,
                        Outcome::Skip => rep.skipped += 1,
                        Outcome::Violation(m) => {
                            rep.violated += 1;
                            if rep.examples.len() < 3 {
                                rep.examples.push(m);
                            }
                        }
                    }
                }
                rep
            })
            .collect()
    };
    let invariants = match config.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?
            .install(work),
        None => work(),
    };
    Ok(SurveyReport {
        seed: config.seed,
        p: config.p,
        genera: config.genera.clone(),
        invariants,
    })
}

type Rng8 = rand_chacha::ChaCha8Rng;

fn riemann_roch_identity(c: &Curve, rng: &mut Rng8) -> Result<Outcome> {
    let g = c.genus();
    let deg = rng.gen_range(-2..=2 * g + 1);
    let d = random_divisor(c, deg, rng)?;
    let lhs = h0(c, &d)? - h0(c, &(&canonical_divisor(c) - &d))?;
    check(lhs == deg - g + 1, || format!("h0 - h0(K - D) = {lhs} for D = {d}"))
}

fn simple_twist_h0(c: &Curve, rng: &mut Rng8) -> Result<Outcome> {
    let g = c.genus();
    let k = rng.gen_range(0..=g);
    let d = random_simple_divisor(c, rng.gen_range(0..=g - k), rng)?;
    let l = &hyperelliptic_divisor(k) + &d;
    let got = h0(c, &l)?;
    check(got == k + 1, || format!("h0({l}) = {got}, expected {}", k + 1))
}

fn effective_class_divisor(c: &Curve, rng: &mut Rng8) -> Result<Divisor> {
    let deg = rng.gen_range(0..=c.genus());
    sampling::random_effective_divisor(c, deg, rng)
}

fn decomposition_round_trip(c: &Curve, rng: &mut Rng8) -> Result<Outcome> {
    let l = effective_class_divisor(c, rng)?;
    let dec = simple_decomposition(c, &l)?;
    let again = simple_decomposition(c, &(&hyperelliptic_divisor(dec.k) + &dec.d))?;
    check(
        again.k == dec.k && again.class == dec.class && dec.class == c.class_of(&l)?,
        || format!("{l} decomposes as ({}, {}) then ({}, {})", dec.k, dec.d, again.k, again.d),
    )
}

fn gg_implies_power_of_h(c: &Curve, rng: &mut Rng8) -> Result<Outcome> {
    let g = c.genus();
    let deg = rng.gen_range(0..=g);
    // half the samples are forced into multiples of H
    let l = if rng.gen_bool(0.5) {
        random_divisor(c, deg, rng)?
    } else {
        // zeros of a product of k linear factors over rational fibers
        let k = deg / 2;
        let xs: Vec<_> = c.affine_places().iter().filter_map(Place::x).collect();
        let mut q = Polynomial::one(c.field());
        for _ in 0..rng.gen_range(0..=k) {
            q = &q * &Polynomial::linear(xs[rng.gen_range(0..xs.len())]);
        }
        &function_divisor(c, &FunctionElement::from_poly(q))? + &hyperelliptic_divisor(k)
    };
    let gg = is_globally_generated(c, &l)?;
    let power = c.class_of(&l)?.is_power_of_h().is_some();
    let verdict = is_limit_of_trivial(c, &c.class_of(&l)?)?;
    check((!gg || power) && (!verdict.is_limit || power), || {
        format!("L = {l}: gg = {gg}, power = {power}, limit = {}", verdict.is_limit)
    })
}

fn random_equivalent(c: &Curve, d: &Divisor, rng: &mut Rng8) -> Result<Option<Divisor>> {
    Ok(sampling::random_principal_divisor(c, rng)?.map(|(_, div)| d + &div))
}

fn limit_verdict_invariance(c: &Curve, rng: &mut Rng8) -> Result<Outcome> {
    let deg = rng.gen_range(-c.genus() - 2..=c.genus() + 2);
    let d = random_divisor(c, deg, rng)?;
    let Some(e) = random_equivalent(c, &d, rng)? else {
        return Ok(Outcome::Skip);
    };
    let a = is_limit_of_trivial(c, &c.class_of(&d)?)?;
    let b = is_limit_of_trivial(c, &c.class_of(&e)?)?;
    check(a == b, || format!("{d} and {e} disagree"))
}

fn class_group_axioms(c: &Curve, rng: &mut Rng8) -> Result<Outcome> {
    let draw = |rng: &mut Rng8| -> Result<DivisorClass> {
        let deg = rng.gen_range(-3..=3);
        c.class_of(&random_divisor(c, deg, rng)?)
    };
    let (a, b, e) = (draw(rng)?, draw(rng)?, draw(rng)?);
    let left = c.class_add(&c.class_add(&a, &b)?, &e)?;
    let right = c.class_add(&a, &c.class_add(&b, &e)?)?;
    let id = DivisorClass::trivial_part(c, 0);
    let comm = c.class_add(&a, &b)? == c.class_add(&b, &a)?;
    let inv = c.class_add(&a, &c.class_neg(&a)?)? == id;
    let unit = c.class_add(&a, &id)? == a;
    check(left == right && comm && inv && unit, || format!("axioms fail for {a}, {b}, {e}"))
}

fn linear_equivalence(c: &Curve, rng: &mut Rng8) -> Result<Outcome> {
    let deg = rng.gen_range(-3..=2 * c.genus());
    let d = random_divisor(c, deg, rng)?;
    let Some(e) = random_equivalent(c, &d, rng)? else {
        return Ok(Outcome::Skip);
    };
    let (a, b) = (c.class_of(&d)?, c.class_of(&e)?);
    let h0_agrees = crate::picard::h0_of_class(c, &a)? == h0(c, &d)?;
    check(a == b && h0_agrees, || format!("{d} ~ {e} but classes {a} vs {b}"))
}

fn split_criterion_check(c: &Curve, rng: &mut Rng8) -> Result<Outcome> {
    let g = c.genus();
    let deg = rng.gen_range(0..=2 * g);
    let d = random_divisor(c, deg, rng)?;
    let crit = split_criterion(c, &c.class_of(&d)?)?;
    let independent = h1_of_square(c, &d)? == 0;
    check(crit == independent && (deg < g || crit), || {
        format!("split_criterion({d}) = {crit}, h0(K - 2D) == 0 is {independent}")
    })
}


fn residue_theorem(c: &Curve, rng: &mut Rng8) -> Result<Outcome> {
    let w = random_differential(c, rng)?;
    let s = residue_sum(c, &w)?;
    check(s.is_zero(), || format!("residues of {} sum to {s}", w.h))
}


fn cover_antisymmetry(c: &Curve, rng: &mut Rng8) -> Result<Outcome> {
    let m = rng.gen_range(1..=c.genus() + 1);
    let d_l = hyperelliptic_divisor(m);
    let (s, t) = random_koszul_sections(c, m, rng)?;
    let dual = rr_space(c, &(&canonical_divisor(c) + &d_l.scale(2)))?;
    let w = Differential::new(random_nonzero_section(c, &dual, rng).expect("dual space is nonzero"));
    let a = koszul_pair_on(c, &d_l, &s, &t, &w, Chart::S)?;
    let b = koszul_pair_on(c, &d_l, &s, &t, &w, Chart::T)?;
    check(a == b, || format!("charts give {a} and {b} for s = {s}, t = {t}"))
}

fn u2e_vanishing(c: &Curve, rng: &mut Rng8) -> Result<Outcome> {
    let k = rng.gen_range(1..=c.genus() / 2);
    let d_l = hyperelliptic_divisor(k);
    let (s, t) = random_koszul_sections(c, k, rng)?;
    let u = random_nonzero_section(c, &rr_space(c, &d_l.scale(2))?, rng).expect("h0(L^2) > 0");
    let r = u2e_functional(c, &d_l, &s, &t, &u)?;
    check(r.splits, || format!("u2e nonzero {:?} for k = {k}, s = {s}, t = {t}, u = {u}", r.values))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_curves_are_valid() {
        for g in DEFAULT_GENERA {
            assert_eq!(default_curve(DEFAULT_P, g).unwrap().genus(), g);
        }
    }

    #[test]
    fn small_survey_is_clean_and_deterministic() {
        let cfg = SurveyConfig {
            seed: 5,
            trials: 12,
            ..SurveyConfig::default()
        };
        let a = run_survey(&cfg).unwrap();
        assert_eq!(a.total_violations(), 0, "{a}");
        let b = run_survey(&SurveyConfig { workers: Some(1), ..cfg }).unwrap();
        assert_eq!(a, b);
    }
}
