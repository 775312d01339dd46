//! Cohomology of `O(n)` on the projective plane, and the dimension chase
//! showing that restrictions of limits of the trivial bundle on `P^2` give
//! indecomposable limits on smooth plane curves of degree `d > 4k`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// `h^i(P^2, O(n))`.
pub fn hi_p2(i: i64, n: i64) -> Result<i64> {
    match i {
        0 => Ok(if n >= 0 { (n + 1) * (n + 2) / 2 } else { 0 }),
        1 => Ok(0),
        2 => hi_p2(0, -n - 3),
        _ => Err(Error::InvalidInput(format!("cohomological degree {i} not in 0..=2"))),
    }
}

/// Genus of a smooth plane curve of degree `d`.
pub fn plane_genus(d: i64) -> Result<i64> {
    if d < 1 {
        return Err(Error::InvalidInput(format!("degree {d} < 1")));
    }
    Ok((d - 1) * (d - 2) / 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
}

impl Relation {
    fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Le => "<=",
            Relation::Lt => "<",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub index: usize,
    pub statement: String,
    pub lhs: i64,
    pub relation: Relation,
    pub required: i64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub d: i64,
    pub k: i64,
    pub genus: i64,
    pub steps: Vec<Step>,
    pub verdict: bool,
    pub assumptions: Vec<String>,
}

impl Certificate {
    /// First failing step after the parameter window, which is a hypothesis
    /// rather than a link of the chain.
    pub fn first_failing_chain_step(&self) -> Option<usize> {
        self.steps.iter().skip(1).find(|s| !s.pass).map(|s| s.index)
    }

    pub fn first_failing_step(&self) -> Option<usize> {
        self.steps.iter().find(|s| !s.pass).map(|s| s.index)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "plane curve of degree {}, k = {}, genus {}", self.d, self.k, self.genus)?;
        for s in &self.steps {
            writeln!(
                f,
                "  ({}) [{}] {}: {} {} {}",
                s.index,
                if s.pass { "ok" } else { "FAIL" },
                s.statement,
                s.lhs,
                s.relation.symbol(),
                s.required
            )?;
        }
        for a in &self.assumptions {
            writeln!(f, "  assumed: {a}")?;
        }
        write!(f, "verdict: {}", self.verdict)
    }
}

/// The certificate for `(d, k)`; verdict true exactly on `0 < k < d/4`.
pub fn prop4_certificate(d: i64, k: i64) -> Result<Certificate> {
    if d < 1 || k < 1 {
        return Err(Error::InvalidInput(format!("need d >= 1 and k >= 1, got d = {d}, k = {k}")));
    }
    let genus = plane_genus(d)?;
    let mut steps = Vec::with_capacity(6);
    let mut push = |statement: String, lhs: i64, relation: Relation, required: i64, extra: bool| {
        let pass = extra && relation.holds(lhs, required);
        steps.push(Step {
            index: steps.len() + 1,
            statement,
            lhs,
            relation,
            required,
            pass,
        });
        pass
    };

    push("parameter window: 4k < d".into(), 4 * k, Relation::Lt, d, true);

    let h2 = hi_p2(2, d - 4 * k - 3)?;
    let ok2 = push(format!("h2(O_P2({}))", d - 4 * k - 3), h2, Relation::Eq, 0, true);

    // 0 -> O(d-4k-3) -> O(d-3k-3)^2 -> I_Z(d-2k-3) -> 0
    let iz = 2 * hi_p2(1, d - 3 * k - 3)? + h2;
    let ok3 = push(
        format!("h1(I_Z({})) <= 2 h1(O_P2({})) + h2(O_P2({}))", d - 2 * k - 3, d - 3 * k - 3, d - 4 * k - 3),
        iz,
        Relation::Eq,
        0,
        ok2,
    );

    // 0 -> O(d-3) -> E(d-k-3) -> I_Z(d-2k-3) -> 0
    let e_bound = hi_p2(1, d - 3)? + iz;
    let ok4 = push(
        format!("h1(E({})) <= h1(O_P2({})) + h1(I_Z({}))", d - k - 3, d - 3, d - 2 * k - 3),
        e_bound,
        Relation::Eq,
        0,
        ok3,
    );

    // h0(E(k)) = h0(O(2k)) since I_Z has no sections; h0(E(k-d)) = h0(O(2k-d));
    // the defect of restriction is at most h1(E(k-d)) = h1(E(d-k-3))
    let upper = hi_p2(0, 2 * k)? - hi_p2(0, 2 * k - d)? + e_bound;
    let h0_c = hi_p2(0, 2 * k)? - hi_p2(0, 2 * k - d)? + hi_p2(1, 2 * k - d)?;
    push(
        format!(
            "h0(E|C({k})) <= h0(O_P2({})) - h0(O_P2({})) + h1(E({})) against h0(O_C({}))",
            2 * k,
            2 * k - d,
            d - k - 3,
            2 * k
        ),
        upper,
        Relation::Le,
        h0_c,
        ok4,
    );

    let all = steps.iter().all(|s| s.pass);
    steps.push(Step {
        index: 6,
        statement: format!(
            "indecomposable limit of O_C^2 with destabilizing degree {} on a curve of genus {genus}",
            d * k
        ),
        lhs: d * k,
        relation: Relation::Eq,
        required: d * k,
        pass: all,
    });
    let verdict = steps.iter().all(|s| s.pass);
    Ok(Certificate {
        d,
        k,
        genus,
        steps,
        verdict,
        assumptions: vec![
            "Z is a complete intersection of two curves of degree k with C and Z disjoint".into(),
            "the extension 0 -> O(k) -> E -> I_Z(-k) -> 0 is general, so E is a limit of O_P2^2".into(),
        ],
    })
}
