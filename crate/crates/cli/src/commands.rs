use std::fmt;

use anyhow::Result;
use serde::Serialize;
use serde_json::{json, Value};
use torus_contact::arith::{
    complementary_split, neg_cf, torus_knot_params, Rational, TorusKnotParams,
};
use torus_contact::classify::{nonvanishing_condition, transverse_classes, Classifier, EquivClass};
use torus_contact::diagram::{enumerate_presentations, is_ambient_tight, Presentation};
use torus_contact::floer::{alexander, hfk_minus, match_invariants};
use torus_contact::invariants::InvariantEngine;
use torus_contact::lens::surjectivity_check;

use crate::table;

/// Bad command-line input; exits with status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub struct Report {
    pub heading: Option<String>,
    pub body: String,
    pub summary: Option<String>,
    pub json: Value,
    pub passed: bool,
}

impl Report {
    pub fn new(body: String, json: Value) -> Self {
        Report {
            heading: None,
            body,
            summary: None,
            json,
            passed: true,
        }
    }

    fn heading(mut self, h: String) -> Self {
        self.heading = Some(h);
        self
    }

    pub fn summary(mut self, s: String) -> Self {
        self.summary = Some(s);
        self
    }
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("library types serialize")
}

fn knot(p: i64, q: i64) -> Result<TorusKnotParams> {
    torus_knot_params(p, q)
        .map_err(|e| UsageError(format!("invalid value for '<P> <Q>': {e}")).into())
}

fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn rotations(x: &Presentation) -> (String, String) {
    (
        table::list(&x.chains[0].rots),
        table::list(&x.chains[1].rots),
    )
}

pub fn cf(num: i64, den: i64) -> Result<Report> {
    let cf = neg_cf(num, den)
        .map_err(|e| UsageError(format!("invalid value for '<NUM> <DEN>': {e}")))?;
    let body = format!("{num}/{den} = {}\n", table::list(cf.coefficients()));
    Ok(Report::new(
        body,
        json!({"num": num, "den": den, "coefficients": cf}),
    ))
}

pub fn params(p: i64, q: i64) -> Result<Report> {
    let t = knot(p, q)?;
    let split = complementary_split(&t)?;
    let (s1, s2) = t.seifert_constants();
    let (c1, c2) = t.chain_coefficients();
    let rows = vec![
        vec!["p'".into(), t.p_dual.to_string()],
        vec!["q'".into(), t.q_dual.to_string()],
        vec!["n".into(), t.ceil_ratio.to_string()],
        vec!["k".into(), t.deficit.to_string()],
        vec!["C".into(), t.c.to_string()],
        vec!["D".into(), t.d.to_string()],
        vec![
            "Seifert constants".into(),
            format!("{}, {}", fraction(&s1), fraction(&s2)),
        ],
        vec![
            "chain 1".into(),
            format!(
                "{} = {}",
                fraction(&c1),
                table::list(split.first.coefficients())
            ),
        ],
        vec![
            "chain 2".into(),
            format!(
                "{} = {}",
                fraction(&c2),
                table::list(split.second.coefficients())
            ),
        ],
        vec!["genus".into(), t.genus().to_string()],
    ];
    let json = json!({
        "params": t,
        "seifert_constants": [fraction(&s1), fraction(&s2)],
        "chains": [split.first, split.second],
        "genus": t.genus(),
    });
    Ok(
        Report::new(table::render(&["quantity", "value"], rows), json)
            .heading(format!("T({p},{q})")),
    )
}

pub fn enumerate(p: i64, q: i64, ell: u32) -> Result<Report> {
    let t = knot(p, q)?;
    let engine = InvariantEngine::new(&t)?;
    let all = enumerate_presentations(&t, ell)?;
    let mut rows = Vec::with_capacity(all.len());
    let mut entries = Vec::with_capacity(all.len());
    for (i, x) in all.iter().enumerate() {
        let inv = engine.evaluate(x)?;
        let (r1, r2) = rotations(x);
        let tight = is_ambient_tight(x);
        let nonvanishing = nonvanishing_condition(x);
        rows.push(vec![
            i.to_string(),
            r1,
            r2,
            format!("+{} -{}", x.stab_pos, x.stab_neg),
            inv.tb.to_string(),
            inv.rot.to_string(),
            inv.d3.to_string(),
            table::grading((inv.alexander, inv.maslov)),
            if tight { "tight" } else { "overtwisted" }.into(),
            if nonvanishing { "yes" } else { "no" }.into(),
        ]);
        entries.push(json!({
            "presentation": x,
            "invariants": inv,
            "ambient_tight": tight,
            "nonvanishing": nonvanishing,
        }));
    }
    let header = [
        "#",
        "chain 1 rot",
        "chain 2 rot",
        "stab",
        "tb",
        "rot",
        "d3",
        "(A, M)",
        "ambient",
        "nonvanishing",
    ];
    let json = json!({"p": p, "q": q, "ell": ell, "count": all.len(), "presentations": entries});
    Ok(Report::new(table::render(&header, rows), json)
        .heading(format!("T({p},{q}), {ell} stabilizations"))
        .summary(format!("{} presentations", all.len())))
}

fn status(c: &EquivClass) -> &'static str {
    if c.flags.tight_ambient {
        "tight ambient"
    } else if c.flags.loose {
        "loose"
    } else {
        "strongly non-loose"
    }
}

pub fn classify(p: i64, q: i64, ell: u32) -> Result<Report> {
    let t = knot(p, q)?;
    let level = Classifier::new(&t)?.classify(ell)?;
    let rows = level.classes.iter().enumerate().map(|(i, c)| {
        let (r1, r2) = rotations(&c.representative);
        let mut notes = Vec::new();
        if c.flags.transverse {
            notes.push("transverse");
        }
        if c.degenerate {
            notes.push("degenerate");
        }
        if c.conflicting {
            notes.push("conflicting");
        }
        vec![
            i.to_string(),
            c.size.to_string(),
            r1,
            r2,
            format!(
                "+{} -{}",
                c.representative.stab_pos, c.representative.stab_neg
            ),
            c.invariants.rot.to_string(),
            c.invariants.d3.to_string(),
            table::grading((c.invariants.alexander, c.invariants.maslov)),
            status(c).into(),
            to_json(&c.basis)
                .as_str()
                .unwrap_or_default()
                .replace('_', " "),
            notes.join(", "),
        ]
    });
    let header = [
        "class",
        "size",
        "chain 1 rot",
        "chain 2 rot",
        "stab",
        "rot",
        "d3",
        "(A, M)",
        "status",
        "basis",
        "notes",
    ];
    let body = table::render(&header, rows);
    let summary = format!(
        "{} classes, {} with tight ambient structure, {} rejected moves",
        level.classes.len(),
        level.fillable_count(),
        level.rejected_moves
    );
    Ok(Report::new(body, to_json(&level))
        .heading(format!(
            "T({p},{q}), {ell} stabilizations, tb = {}",
            -p * q - i64::from(ell)
        ))
        .summary(summary))
}

pub fn transverse(p: i64, q: i64) -> Result<Report> {
    let t = knot(p, q)?;
    let classes = transverse_classes(&t)?;
    let rows = classes.iter().enumerate().map(|(i, c)| {
        let reps: Vec<String> = c
            .presentations
            .iter()
            .map(|x| {
                let (r1, r2) = rotations(x);
                format!("{r1} {r2}")
            })
            .collect();
        vec![
            i.to_string(),
            table::grading((c.invariants.alexander, c.invariants.maslov)),
            c.invariants.tb.to_string(),
            c.invariants.rot.to_string(),
            c.invariants.d3.to_string(),
            reps.join("; "),
        ]
    });
    let body = table::render(&["#", "(A, M)", "tb", "rot", "d3", "presentations"], rows);
    Ok(
        Report::new(body, json!({"p": p, "q": q, "classes": classes})).heading(format!(
            "T({p},{q}): {} strongly non-loose transverse classes",
            classes.len()
        )),
    )
}

pub fn hfk(p: i64, q: i64) -> Result<Report> {
    knot(p, q)?;
    let poly = alexander(p, q)?;
    let module = hfk_minus(p, q)?;
    // free tower first, then finite towers by decreasing order
    let mut towers = module.towers.clone();
    towers.sort_by_key(|t| (t.order.map_or(0, |h| -h), std::cmp::Reverse(t.grading)));
    let rows = towers.iter().map(|t| {
        vec![
            table::tower(t.order),
            table::grading(t.top()),
            table::grading(t.grading),
        ]
    });
    let body = table::render(&["tower", "top (A, M)", "bottom (A, M)"], rows);
    let blocks: Vec<String> = towers.iter().map(|t| table::tower(t.order)).collect();
    Ok(Report::new(
        body,
        json!({"p": p, "q": q, "alexander": poly.exponents, "module": module}),
    )
    .heading(format!("HFK^-(T({p},{q})) = {}", blocks.join(" + "))))
}

pub fn match_report(p: i64, q: i64) -> Result<Report> {
    knot(p, q)?;
    let report = match_invariants(p, q)?;
    let mut rows: Vec<Vec<String>> = report
        .realized
        .iter()
        .map(|&g| vec![table::grading(g), "realized".into()])
        .collect();
    rows.extend(
        report
            .unrealized_bottoms
            .iter()
            .map(|&g| vec![table::grading(g), "unrealized".into()]),
    );
    let body = table::render(&["bottom (A, M)", "transverse invariant"], rows);
    let summary = format!(
        "{} of {} transverse classes at distinct finite-tower bottoms; U-torsion order one: {}",
        report.realized.len(),
        report.transverse_count,
        report.all_u_torsion_one
    );
    Ok(Report::new(body, to_json(&report))
        .heading(format!("T({p},{q})"))
        .summary(summary))
}

pub fn lens(p: i64, q: i64) -> Result<Report> {
    let t = knot(p, q)?;
    let report = surjectivity_check(&t)?;
    let rows = vec![
        vec!["target".into(), format!("L({}, {})", p * q + 1, p * p)],
        vec!["tight structures".into(), report.honda_count.to_string()],
        vec!["image size".into(), report.image_size.to_string()],
        vec!["chain matches".into(), report.chain_matches.to_string()],
        vec!["rotations legal".into(), report.rotations_legal.to_string()],
        vec![
            "fibers share d3".into(),
            report.fibers_d3_consistent.to_string(),
        ],
    ];
    Ok(Report::new(
        table::render(&["quantity", "value"], rows),
        to_json(&report),
    )
    .heading(format!("T({p},{q}) with Legendrian surgery")))
}
