//! Reference checks on the published numbers, with the sweep sizes used by
//! the acceptance suite.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use anyhow::Result;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use torus_contact::arith::{
    complementary_split, eval_cf, honda_count, neg_cf, ratio, torus_knot_params,
};
use torus_contact::classify::{
    nonvanishing_condition, positive_stab_looseness, transverse_classes, Classifier,
};
use torus_contact::diagram::{enumerate_presentations, is_ambient_tight, Sign};
use torus_contact::floer::{
    alexander, euler_matches_alexander, hfk_minus, hfk_minus_closed_form, match_invariants,
    StaircaseComplex,
};
use torus_contact::invariants::{validate_smooth_topology, InvariantEngine};
use torus_contact::lens::surjectivity_check;

use crate::commands::Report;
use crate::table;

#[derive(Serialize)]
struct Check {
    id: usize,
    name: &'static str,
    passed: bool,
    detail: String,
}

/// Failures collected by one check, with a short description of the sweep.
struct Findings {
    failures: Vec<String>,
    scope: String,
}

impl Findings {
    fn new(failures: Vec<String>, scope: impl Into<String>) -> Self {
        Findings {
            failures,
            scope: scope.into(),
        }
    }
}

fn pairs(max_q: i64, max_pq: i64) -> Vec<(i64, i64)> {
    (3..=max_q)
        .flat_map(|q| (2..q).map(move |p| (p, q)))
        .filter(|&(p, q)| p.gcd(&q) == 1 && p * q <= max_pq)
        .collect()
}

fn sweep<F>(pairs: &[(i64, i64)], f: F) -> Result<Vec<String>>
where
    F: Fn(i64, i64) -> Result<Vec<String>> + Sync,
{
    let found: Vec<Vec<String>> = pairs
        .par_iter()
        .map(|&(p, q)| f(p, q))
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

fn complementarity() -> Result<Findings> {
    let all = pairs(200, i64::MAX);
    let failures = sweep(&all, |p, q| {
        let t = torus_knot_params(p, q)?;
        let split = complementary_split(&t)?;
        let ok = split.second.last() == t.ceil_ratio
            && &split.witness.0 + &split.witness.1 == ratio(1, 1);
        Ok(if ok {
            vec![]
        } else {
            vec![format!("({p},{q})")]
        })
    })?;
    Ok(Findings::new(
        failures,
        format!("{} pairs with q <= 200", all.len()),
    ))
}

fn tb_contract() -> Result<Findings> {
    let all = pairs(60, 120);
    let failures = sweep(&all, |p, q| {
        let engine = InvariantEngine::new(&torus_knot_params(p, q)?)?;
        let mut bad = Vec::new();
        for ell in 0..=5u32 {
            for x in enumerate_presentations(&engine.params, ell)? {
                let tb = engine.tb(&x)?;
                if tb != -p * q - i64::from(ell) {
                    bad.push(format!("tb {tb} at ({p},{q}) ell {ell}"));
                }
            }
        }
        Ok(bad)
    })?;
    Ok(Findings::new(failures, "pq <= 120, ell <= 5"))
}

fn smooth_topology() -> Result<Findings> {
    let all = pairs(60, 120);
    let failures = sweep(&all, |p, q| {
        let t = torus_knot_params(p, q)?;
        let x = &enumerate_presentations(&t, 0)?[0];
        let report = validate_smooth_topology(x)?;
        let ok = report.is_consistent(&t, 0) && report.lens_form_matches == Some(true);
        Ok(if ok {
            vec![]
        } else {
            vec![format!("({p},{q}) {report:?}")]
        })
    })?;
    Ok(Findings::new(
        failures,
        format!("{} pairs with pq <= 120", all.len()),
    ))
}

fn transverse_counts() -> Result<Findings> {
    let mut cases: Vec<(i64, i64, usize)> =
        (2..=10).map(|n| (2, 2 * n - 1, n as usize - 1)).collect();
    cases.extend((2..=8).map(|n| (n, n + 1, n as usize - 1)));
    cases.push((5, 8, 4));
    let found: Vec<Option<String>> = cases
        .par_iter()
        .map(|&(p, q, expected)| {
            let classes = transverse_classes(&torus_knot_params(p, q)?)?;
            let count = classes.iter().filter(|c| c.strongly_nonloose).count();
            Ok((count != expected || classes.len() != expected)
                .then(|| format!("T({p},{q}) gave {count}, expected {expected}")))
        })
        .collect::<Result<_>>()?;
    Ok(Findings::new(
        found.into_iter().flatten().collect(),
        format!("{} knots", cases.len()),
    ))
}

fn five_eight_locations() -> Result<Findings> {
    let got: BTreeSet<(i64, i64)> = transverse_classes(&torus_knot_params(5, 8)?)?
        .iter()
        .map(|c| (c.invariants.alexander, c.invariants.maslov))
        .collect();
    let expected: BTreeSet<(i64, i64)> = [(-12, -26), (-2, -12), (4, -6), (14, 0)]
        .into_iter()
        .collect();
    let shown: Vec<String> = got.iter().map(|&g| table::grading(g)).collect();
    let failures = if got == expected {
        vec![]
    } else {
        vec![format!("got {}", shown.join(" "))]
    };
    Ok(Findings::new(failures, shown.join(" ")))
}

fn hfk_structure() -> Result<Findings> {
    let mut anchored: Vec<(i64, i64, Vec<i64>)> = (2..=10)
        .map(|n| (2, 2 * n - 1, vec![1; n as usize - 1]))
        .collect();
    anchored.extend((2..=8).map(|n| (n, n + 1, (1..n).rev().collect())));
    anchored.push((5, 8, vec![4, 2, 2, 1, 1, 1, 1, 1, 1]));
    let mut failures = Vec::new();
    for (p, q, orders) in &anchored {
        let m = hfk_minus(*p, *q)?;
        if m.free_rank() != 1 || &m.torsion_orders() != orders {
            failures.push(format!("T({p},{q}) orders {:?}", m.torsion_orders()));
        }
    }
    let all = pairs(30, i64::MAX);
    failures.extend(sweep(&all, |p, q| {
        Ok(if hfk_minus(p, q)? == hfk_minus_closed_form(p, q)? {
            vec![]
        } else {
            vec![format!("T({p},{q})")]
        })
    })?);
    Ok(Findings::new(
        failures,
        format!(
            "{} anchored knots, {} pairs with q <= 30",
            anchored.len(),
            all.len()
        ),
    ))
}

fn d3_range() -> Result<Findings> {
    let all = pairs(60, 120);
    let failures = sweep(&all, |p, q| {
        let engine = InvariantEngine::new(&torus_knot_params(p, q)?)?;
        let top = (p - 1) * (q - 1);
        let mut bad = Vec::new();
        let mut attained = false;
        for x in enumerate_presentations(&engine.params, 0)? {
            let d3 = engine.d3(&x)?;
            if is_ambient_tight(&x) {
                if d3 != 0 {
                    bad.push(format!("balanced d3 {d3} at ({p},{q})"));
                }
                continue;
            }
            if x.chains.iter().all(|c| c.all_fully_positive()) {
                attained |= d3 == top;
            }
            if nonvanishing_condition(&x) && (d3 % 2 != 0 || d3 <= 0 || d3 > top) {
                bad.push(format!("d3 {d3} at ({p},{q})"));
            }
        }
        if !attained {
            bad.push(format!("({p},{q}) maximum {top} not attained"));
        }
        Ok(bad)
    })?;
    Ok(Findings::new(failures, "pq <= 120"))
}

fn lens_surjectivity() -> Result<Findings> {
    let all = pairs(12, i64::MAX);
    let failures = sweep(&all, |p, q| {
        let report = surjectivity_check(&torus_knot_params(p, q)?)?;
        let n = p * q + 1;
        let expected = honda_count(n, p * p % n)?;
        let ok = report.passed() && expected == report.image_size.into();
        Ok(if ok {
            vec![]
        } else {
            vec![format!(
                "({p},{q}) image {} of {expected}",
                report.image_size
            )]
        })
    })?;
    Ok(Findings::new(
        failures,
        format!("{} pairs with q <= 12", all.len()),
    ))
}

fn count_increments() -> Result<Findings> {
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 5)] {
        let classifier = Classifier::new(&torus_knot_params(p, q)?)?;
        let counts: Vec<usize> = (0..=6)
            .map(|ell| Ok(classifier.classify(ell)?.fillable_count()))
            .collect::<Result<_>>()?;
        if counts.windows(2).any(|w| w[1] != w[0] + 1) {
            failures.push(format!("({p},{q}) counts {counts:?}"));
        }
        rows.push(format!("({p},{q}) {counts:?}"));
    }
    Ok(Findings::new(
        failures,
        format!("fillable counts for ell 0..6: {}", rows.join(" ")),
    ))
}

fn u_torsion() -> Result<Findings> {
    let all = pairs(30, 60);
    let failures = sweep(&all, |p, q| {
        let mut bad = Vec::new();
        let report = match_invariants(p, q)?;
        if !(report.all_at_bottoms && report.all_u_torsion_one) {
            bad.push(format!("({p},{q}) invariants off the finite-tower bottoms"));
        }
        let t = torus_knot_params(p, q)?;
        let level = Classifier::new(&t)?.classify(1)?;
        let relevant: Vec<_> = enumerate_presentations(&t, 0)?
            .into_iter()
            .filter(|x| !is_ambient_tight(x) && nonvanishing_condition(x))
            .collect();
        for (i, x) in relevant.iter().enumerate() {
            let loose = if i == 0 {
                positive_stab_looseness(x)?
            } else {
                level
                    .class_of(&x.stabilize(Sign::Positive))
                    .is_some_and(|c| c.flags.loose)
            };
            if !loose {
                bad.push(format!("({p},{q}) positive stabilization not loose"));
            }
        }
        Ok(bad)
    })?;
    Ok(Findings::new(failures, "pq <= 60"))
}

/// Exhaustive sweeps standing in for randomized property runs.
fn properties() -> Result<Findings> {
    let mut failures = Vec::new();
    let mut instances = 0usize;
    for num in 2..=300i64 {
        for den in (1..num).filter(|d| d.gcd(&num) == 1) {
            instances += 1;
            if eval_cf(&neg_cf(num, den)?) != ratio(num, den) {
                failures.push(format!("cf {num}/{den}"));
            }
        }
    }
    for (p, q) in pairs(20, 40) {
        let engine = InvariantEngine::new(&torus_knot_params(p, q)?)?;
        for ell in 0..3 {
            for x in enumerate_presentations(&engine.params, ell)? {
                instances += 1;
                let (a, b) = (engine.evaluate(&x)?, engine.evaluate(&x.conjugate())?);
                if (b.tb, b.rot, b.d3) != (a.tb, -a.rot, a.d3) {
                    failures.push(format!("conjugation at {x:?}"));
                }
            }
        }
    }
    for (p, q) in pairs(40, i64::MAX) {
        instances += 1;
        let c = StaircaseComplex::for_torus_knot(p, q)?;
        if !c.d_squared(&c.arrows).is_empty() || !c.gradings_consistent() {
            failures.push(format!("d^2 on T({p},{q})"));
        }
        if !euler_matches_alexander(&c.knot_homology()?, &alexander(p, q)?) {
            failures.push(format!("Euler characteristic of T({p},{q})"));
        }
    }
    Ok(Findings::new(failures, format!("{instances} instances")))
}

type CheckFn = fn() -> Result<Findings>;

const CHECKS: [(&str, Option<u64>, CheckFn); 11] = [
    (
        "continued fraction complementarity",
        Some(1),
        complementarity,
    ),
    ("tb = -pq - ell", Some(10), tb_contract),
    ("smooth topology of the diagrams", None, smooth_topology),
    ("transverse class counts", None, transverse_counts),
    ("T(5,8) invariant locations", None, five_eight_locations),
    ("HFK^- tower structure", Some(30), hfk_structure),
    ("d3 range", None, d3_range),
    ("lens space surjectivity", None, lens_surjectivity),
    ("fillable count increments", None, count_increments),
    ("U-torsion order one", None, u_torsion),
    ("property sweeps", None, properties),
];

pub fn run() -> Result<Report> {
    let mut checks = Vec::new();
    for (i, (name, budget, check)) in CHECKS.into_iter().enumerate() {
        let start = Instant::now();
        let found = check()?;
        let elapsed = start.elapsed();
        let over = budget.map(Duration::from_secs).filter(|&b| elapsed > b);
        let mut detail = found.scope;
        if !found.failures.is_empty() {
            let shown: Vec<&str> = found.failures.iter().take(5).map(String::as_str).collect();
            detail = format!(
                "{detail}; {} failure(s): {}",
                found.failures.len(),
                shown.join("; ")
            );
        }
        if let Some(b) = over {
            detail = format!("{detail}; over the {}s budget", b.as_secs());
        }
        checks.push(Check {
            id: i + 1,
            name,
            passed: found.failures.is_empty() && over.is_none(),
            detail,
        });
    }
    let passed = checks.iter().all(|c| c.passed);
    let body: String = checks
        .iter()
        .map(|c| {
            format!(
                "{} {:>2} {}: {}\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.id,
                c.name,
                c.detail
            )
        })
        .collect();
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut report =
        Report::new(body, json!({"passed": passed, "checks": checks})).summary(format!(
            "{} of {} checks passed",
            checks.len() - failed,
            checks.len()
        ));
    report.passed = passed;
    Ok(report)
}
