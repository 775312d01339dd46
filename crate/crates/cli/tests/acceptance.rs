//! Runs the acceptance criteria in order and prints one line per criterion.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::Rng;
use trivlim_core::classification::{
    brill_noether_rho, h1_of_square, is_globally_generated, is_limit_of_trivial, is_simple, lemma1_h0_formula,
    split_criterion,
};
use trivlim_core::pairing::{koszul_pair, koszul_pair_on, residue_sum, u2e_functional, Chart, Differential};
use trivlim_core::picard::random_class;
use trivlim_core::plane::prop4_certificate;
use trivlim_core::riemann_roch::{canonical_divisor, fixed_part_degree, hyperelliptic_divisor};
use trivlim_core::sampling::{
    random_differential, random_divisor, random_koszul_sections, random_nonzero_section, random_principal_divisor,
    random_simple_divisor, rng,
};
use trivlim_core::{h0, rr_space, Curve, Divisor, DivisorClass, FunctionElement};

type Check = std::result::Result<String, String>;

/// Name, check and time limit in seconds.
type Criterion = (&'static str, fn() -> Check, Option<u64>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: std::result::Result<T, E>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Smallest `y^2 = x^(2g+1) + a x + b` with at least `2g + 2` rational affine places.
fn test_curve(p: u64, g: usize) -> Curve {
    for b in 1..p as i64 {
        for a in 1..p as i64 {
            let mut f = vec![0i64; 2 * g + 2];
            f[0] = b;
            f[1] = a;
            f[2 * g + 1] = 1;
            if let Ok(c) = Curve::new(p, &f) {
                if c.affine_places().len() >= 2 * g + 2 {
                    return c;
                }
            }
        }
    }
    panic!("no curve of genus {g} over F_{p}");
}

fn curves() -> Vec<Curve> {
    [7, 101].iter().flat_map(|&p| (2..=4).map(move |g| test_curve(p, g))).collect()
}

fn simple_twist() -> Check {
    let mut n = 0;
    for (ci, c) in curves().iter().enumerate() {
        let g = c.genus();
        let mut r = rng(1, ci as u64);
        for _ in 0..40 {
            let k = r.gen_range(0..=g);
            let d = ok(random_simple_divisor(c, r.gen_range(0..=g - k), &mut r))?;
            ensure!(ok(is_simple(c, &d))?, "sampled {d} is not simple");
            let dim = ok(rr_space(c, &(&hyperelliptic_divisor(k) + &d)))?.dim() as i64;
            ensure!(dim == k + 1, "p = {}, g = {g}, k = {k}, D = {d}: dim {dim}", c.p());
            ensure!(ok(lemma1_h0_formula(c, k, &d))? == k + 1, "formula disagrees at k = {k}, D = {d}");
            n += 1;
        }
    }
    Ok(format!("{n} cases"))
}

fn riemann_roch() -> Check {
    let mut n = 0;
    for (ci, c) in curves().iter().enumerate() {
        let g = c.genus();
        let k = canonical_divisor(c);
        let mut r = rng(2, ci as u64);
        for i in 0..200 {
            let deg = -4 + (i % (2 * g + 8));
            let d = ok(random_divisor(c, deg, &mut r))?;
            let lhs = ok(h0(c, &d))? - ok(h0(c, &(&k - &d)))?;
            ensure!(lhs == deg - g + 1, "p = {}, g = {g}, D = {d}: {lhs}", c.p());
            n += 1;
        }
    }
    Ok(format!("{n} divisors"))
}

fn classification() -> Check {
    let (mut gg_count, mut limits, mut resampled) = (0, 0, 0);
    for (ci, c) in curves().iter().enumerate() {
        let g = c.genus();
        let mut r = rng(3, ci as u64);
        let places = c.affine_places();
        for i in 0..60 {
            let deg = r.gen_range(0..=g);
            // mix in pencils of fibers so that gg divisors occur
            let l = if i % 4 == 0 {
                let mut d = Divisor::zero();
                for _ in 0..deg / 2 {
                    let p = places[r.gen_range(0..places.len())];
                    d = &(&d + &Divisor::point(p)) + &Divisor::point(ok(c.involution(&p))?);
                }
                d
            } else {
                ok(random_divisor(c, deg, &mut r))?
            };
            let class = ok(c.class_of(&l))?;
            if ok(is_globally_generated(c, &l))? {
                gg_count += 1;
                ensure!(class.is_power_of_h().is_some(), "{l} is gg of degree {deg} but not a power of H");
            }
        }
        let mut classes: Vec<DivisorClass> = (0..=g / 2).map(|k| DivisorClass::h_power(c, k)).collect();
        for i in 0..40 {
            classes.push(ok(random_class(c, i % (g + 1), 100 * ci as u64 + i as u64))?);
        }
        for a in &classes {
            let v = ok(is_limit_of_trivial(c, a))?;
            if v.is_limit {
                limits += 1;
                ensure!(a.is_power_of_h().is_some(), "{a} flagged as limit without being a power of H");
            }
        }
    }
    let c = test_curve(101, 3);
    let mut r = rng(3, 99);
    while resampled < 100 {
        let d = ok(random_divisor(&c, r.gen_range(-4..=8), &mut r))?;
        let Some((_, div)) = ok(random_principal_divisor(&c, &mut r))? else { continue };
        let e = &d + &div;
        let (a, b) = (ok(c.class_of(&d))?, ok(c.class_of(&e))?);
        ensure!(ok(is_limit_of_trivial(&c, &a))? == ok(is_limit_of_trivial(&c, &b))?, "verdict moved from {d} to {e}");
        ensure!(ok(h0(&c, &d))? == ok(h0(&c, &e))?, "h0 moved from {d} to {e}");
        if ok(h0(&c, &d))? > 0 {
            ensure!(
                ok(fixed_part_degree(&c, &d))? == ok(fixed_part_degree(&c, &e))?,
                "fixed part moved from {d} to {e}"
            );
        }
        resampled += 1;
    }
    Ok(format!("{gg_count} gg divisors, {limits} limit classes, {resampled} resampled representatives"))
}

fn split() -> Check {
    let mut n = 0;
    for (ci, c) in curves().iter().enumerate() {
        let g = c.genus();
        let mut r = rng(4, ci as u64);
        for _ in 0..30 {
            let l = ok(random_divisor(c, r.gen_range(g..=2 * g + 2), &mut r))?;
            ensure!(ok(split_criterion(c, &ok(c.class_of(&l))?))?, "deg L >= g but no split for {l}");
            ensure!(ok(h1_of_square(c, &l))? == 0, "h1(L^2) != 0 for {l}");
            n += 1;
        }
        for k in 1..g {
            let crit = ok(split_criterion(c, &DivisorClass::h_power(c, k)))?;
            let rest = &canonical_divisor(c) - &hyperelliptic_divisor(2 * k);
            let effective = ok(rr_space(c, &rest))?.dim() > 0;
            ensure!(crit != effective, "g = {g}, k = {k}: criterion {crit}, h0(K - 2L) > 0 is {effective}");
            n += 1;
        }
    }
    Ok(format!("{n} cases"))
}

fn residues() -> Check {
    let (mut diffs, mut pairs) = (0, 0);
    for (ci, c) in curves().iter().enumerate() {
        let mut r = rng(5, ci as u64);
        for _ in 0..20 {
            let w = ok(random_differential(c, &mut r))?;
            let s = ok(residue_sum(c, &w))?;
            ensure!(s.is_zero(), "residues of {} sum to {s}", w.h);
            diffs += 1;
        }
        for _ in 0..20 {
            let m = r.gen_range(1..=c.genus() + 1);
            let d_l = hyperelliptic_divisor(m);
            let (s, t) = ok(random_koszul_sections(c, m, &mut r))?;
            let dual = ok(rr_space(c, &(&canonical_divisor(c) + &d_l.scale(2))))?;
            let w = Differential::new(random_nonzero_section(c, &dual, &mut r).expect("nonzero dual"));
            let a = ok(koszul_pair_on(c, &d_l, &s, &t, &w, Chart::S))?;
            let b = ok(koszul_pair_on(c, &d_l, &s, &t, &w, Chart::T))?;
            ensure!(a == b, "charts give {a} and {b} for s = {s}, t = {t}");
            ensure!(ok(koszul_pair(c, &d_l, &t, &s, &w))? == -a, "swap of {s}, {t} is not antisymmetric");
            pairs += 1;
        }
    }
    for p in [7, 101] {
        let c = test_curve(p, 2);
        let field = c.field();
        let d_l = Divisor::infinity(2);
        let (s, t) = (FunctionElement::one(field), FunctionElement::x(field));
        let dual = ok(rr_space(&c, &(&canonical_divisor(&c) + &d_l.scale(2))))?;
        let mut hit = false;
        for w in &dual.elements {
            hit |= !ok(koszul_pair(&c, &d_l, &s, &t, &Differential::new(w.clone())))?.is_zero();
        }
        ensure!(hit, "Koszul functional of (1, x) vanishes on the dual basis over F_{p}");
    }
    Ok(format!("{diffs} differentials, {pairs} pairings, Koszul functional nonzero"))
}

fn u2e() -> Check {
    let (mut n, mut vacuous) = (0, 0);
    for (ci, c) in curves().iter().enumerate() {
        let g = c.genus();
        let mut r = rng(6, ci as u64);
        for k in 1..=g / 2 {
            let d_l = hyperelliptic_divisor(k);
            let sq = ok(rr_space(c, &d_l.scale(2)))?;
            for _ in 0..20 {
                let (s, t) = ok(random_koszul_sections(c, k, &mut r))?;
                let u = random_nonzero_section(c, &sq, &mut r).expect("h0(L^2) > 0");
                let rep = ok(u2e_functional(c, &d_l, &s, &t, &u))?;
                ensure!(
                    rep.splits && rep.values.iter().all(|&v| v == 0),
                    "g = {g}, k = {k}, s = {s}, t = {t}, u = {u}: {:?}",
                    rep.values
                );
                vacuous += rep.values.is_empty() as usize;
                n += 1;
            }
        }
    }
    Ok(format!("{n} triples, {vacuous} with H^0(K L^-2) = 0"))
}

fn prop4() -> Check {
    for k in 1..=5 {
        for d in 1..=20 {
            let cert = ok(prop4_certificate(d, k))?;
            ensure!(cert.verdict == (0 < k && 4 * k < d), "d = {d}, k = {k}: verdict {}", cert.verdict);
            if d == 4 * k {
                let first = cert.first_failing_chain_step();
                ensure!(first == Some(2), "d = {d}, k = {k}: first failing step {first:?}");
            }
        }
    }
    Ok("100 grid points".into())
}

fn rho() -> Check {
    let mut zeros = 0;
    let mut n = 0;
    for g in 0..5i64 {
        for r in 0..2i64 {
            for d in g..g + 5 {
                // expected dimension: g minus the codimension (r + 1)(g - d + r)
                let want = g - (r + 1) * (g - d + r);
                let got = brill_noether_rho(g, r, d);
                ensure!(got == want, "g = {g}, r = {r}, d = {d}: {got} != {want}");
                zeros += (got == 0) as usize;
                n += 1;
            }
        }
    }
    ensure!(brill_noether_rho(4, 1, 3) == 0 && brill_noether_rho(6, 2, 6) == 0, "boundary cases");
    ensure!(brill_noether_rho(3, 1, 2) == -1, "hyperelliptic g^1_2 in genus 3");
    ensure!(zeros > 0, "grid missed rho = 0");
    Ok(format!("{n} triples, {zeros} with rho = 0"))
}

fn determinism() -> Check {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_trivlim"))
            .args(["survey", "--seed", "42"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure!(a.status.success(), "survey exited with {:?}: {}", a.status.code(), String::from_utf8_lossy(&a.stderr));
    ensure!(!a.stdout.is_empty() && a.stdout == b.stdout, "reports differ");
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("h0 of kH + D for simple D", simple_twist, Some(30)),
        ("Riemann-Roch identity", riemann_roch, Some(30)),
        ("classification coherence", classification, None),
        ("split criterion", split, None),
        ("residue calculus", residues, Some(60)),
        ("hyperelliptic u^2 e vanishing", u2e, Some(120)),
        ("plane window sharpness", prop4, Some(1)),
        ("Brill-Noether number", rho, None),
        ("survey determinism", determinism, None),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut result = check();
        let took = start.elapsed();
        if let (Ok(_), Some(s)) = (&result, limit) {
            if took > Duration::from_secs(*s) {
                result = Err(format!("took {:.2?}, limit {s} s", took));
            }
        }
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("acceptance {} {tag} {name}: {detail} [{:.2?}]", i + 1, took);
    }
    if failed > 0 {
        println!("acceptance: {failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    } else {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    }
}
