//! Coarse classification of stabilized presentations.
//!
//! Presentations at a fixed stabilization level are closed under two
//! rewrite moves; connected components are the equivalence classes. A class
//! is then marked loose or non-loose from the rotation data of its members.
//!
//! Both moves and the looseness rule read a presentation through a
//! [`PatternForm`]: one chain (line 1) with a fully positive leader and a
//! fully positive prefix, the other (line 2) with a fully negative leader and
//! a fully negative prefix. Either chain may play line 1.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{convergent, inverse_value, ratio, Rational, TorusKnotParams};
use crate::diagram::{
    chain_specs, enumerate_presentations, is_ambient_tight, stabilization_slots, ChainSpec,
    Presentation, Sign,
};
use crate::error::{Error, Result};
use crate::floer::{surgery_d_invariant, v_sequence};
use crate::invariants::{ClassicalInvariants, InvariantEngine};

/// Whether neither chain leader is fully negative. For an unstabilized knot
/// this is exactly the nonvanishing of its Legendrian invariant.
pub fn nonvanishing_condition(pres: &Presentation) -> bool {
    !pres.chains[0].fully_negative(0) && !pres.chains[1].fully_negative(0)
}

/// One reading of a presentation as line 1 / line 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternForm {
    /// Line 1 is the second chain.
    pub swapped: bool,
    /// Line 1 entries `0..=positive_prefix` are fully positive.
    pub positive_prefix: usize,
    /// Line 2 entries `0..=negative_prefix` are fully negative.
    pub negative_prefix: usize,
    /// Positive stabilizations on each unknot of line 1.
    pub positive_counts: Vec<i64>,
    /// Negative stabilizations on each unknot of line 2.
    pub negative_counts: Vec<i64>,
}

impl PatternForm {
    /// Positive stabilizations of line-1 entry `positive_prefix + 1`, or 0
    /// when the line is exhausted.
    pub fn next_positive(&self) -> i64 {
        self.positive_counts
            .get(self.positive_prefix + 1)
            .copied()
            .unwrap_or(0)
    }

    pub fn next_negative(&self) -> i64 {
        self.negative_counts
            .get(self.negative_prefix + 1)
            .copied()
            .unwrap_or(0)
    }

    /// Rebuilds the rotation arrays of a presentation from the counts.
    pub fn encode(&self, template: &Presentation) -> Presentation {
        let mut out = template.clone();
        let (pos, neg) = if self.swapped { (1, 0) } else { (0, 1) };
        for (j, &count) in self.positive_counts.iter().enumerate() {
            let tb = out.chains[pos].tbs[j];
            out.chains[pos].rots[j] = 2 * count - stabilization_slots(tb);
        }
        for (j, &count) in self.negative_counts.iter().enumerate() {
            let tb = out.chains[neg].tbs[j];
            out.chains[neg].rots[j] = stabilization_slots(tb) - 2 * count;
        }
        out
    }
}

/// All readings of `pres`: both line assignments, every admissible pair of
/// prefix lengths.
pub fn decode(pres: &Presentation) -> Vec<PatternForm> {
    let mut out = Vec::new();
    for swapped in [false, true] {
        let (a, b) = if swapped {
            (&pres.chains[1], &pres.chains[0])
        } else {
            (&pres.chains[0], &pres.chains[1])
        };
        if !a.fully_positive(0) || !b.fully_negative(0) {
            continue;
        }
        let max_j = (1..a.tbs.len())
            .take_while(|&j| a.fully_positive(j))
            .count();
        let max_k = (1..b.tbs.len())
            .take_while(|&k| b.fully_negative(k))
            .count();
        let positive_counts: Vec<i64> = (0..a.tbs.len()).map(|j| a.positive_count(j)).collect();
        let negative_counts: Vec<i64> = (0..b.tbs.len()).map(|k| b.negative_count(k)).collect();
        for j in 0..=max_j {
            for k in 0..=max_k {
                out.push(PatternForm {
                    swapped,
                    positive_prefix: j,
                    negative_prefix: k,
                    positive_counts: positive_counts.clone(),
                    negative_counts: negative_counts.clone(),
                });
            }
        }
    }
    out
}

/// Why a class received its looseness verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictBasis {
    /// The ambient structure is tight.
    TightAmbient,
    /// Unstabilized knots: every diagram knot has tight complement.
    Unstabilized,
    /// Neither chain leader nor the knot is fully positive or negative.
    NoExtremeLeader,
    /// Extreme data present but no line 1 / line 2 reading exists.
    NoPatternForm,
    /// The knot is fully positive (negative) and no leader is.
    ExtremeKnot,
    /// Decided by the prefix rule on pattern readings.
    PrefixRule,
    /// Non-loose by the prefix rule, but the d-invariant of the surgered
    /// manifold rules out a tight surgery, so the class is loose.
    ContactInvariant,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ClassFlags {
    pub tight_ambient: bool,
    pub loose: bool,
    pub strongly_nonloose: bool,
    /// Contains a fully negative stabilization of an unstabilized knot
    /// satisfying the nonvanishing condition.
    pub transverse: bool,
}

/// A coarse equivalence class of presentations at one stabilization level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivClass {
    pub representative: Presentation,
    pub size: usize,
    pub flags: ClassFlags,
    pub invariants: ClassicalInvariants,
    pub basis: VerdictBasis,
    /// The verdict rests on an empty prefix or a zero parameter.
    pub degenerate: bool,
    /// Members disagree between a loose clause and the extreme-knot clause.
    pub conflicting: bool,
    #[serde(skip)]
    pub members: Vec<Presentation>,
}

/// Classes at one level, with bookkeeping on the move system.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub p: i64,
    pub q: i64,
    pub ell: u32,
    pub classes: Vec<EquivClass>,
    /// Moves whose endpoints had different invariants or ambient tightness.
    pub rejected_moves: usize,
}

impl Classification {
    pub fn class_of(&self, pres: &Presentation) -> Option<&EquivClass> {
        self.classes.iter().find(|c| c.members.contains(pres))
    }

    /// Classes containing an ambient-tight presentation.
    pub fn fillable_count(&self) -> usize {
        self.classes
            .iter()
            .filter(|c| c.flags.tight_ambient)
            .count()
    }
}

/// Per-knot data shared by the moves and the looseness tests.
pub struct Classifier {
    params: TorusKnotParams,
    specs: [ChainSpec; 2],
    engine: InvariantEngine,
    v_sequence: Vec<i64>,
}

impl Classifier {
    pub fn new(params: &TorusKnotParams) -> Result<Self> {
        Ok(Classifier {
            params: *params,
            specs: chain_specs(params)?,
            engine: InvariantEngine::new(params)?,
            v_sequence: v_sequence(params.p, params.q)?,
        })
    }

    pub fn engine(&self) -> &InvariantEngine {
        &self.engine
    }

    /// Continued fraction coefficients of line 1 and line 2 for a reading.
    fn lines(&self, form: &PatternForm) -> (&[i64], &[i64]) {
        let (a, b) = if form.swapped { (1, 0) } else { (0, 1) };
        (
            self.specs[a].expansion.coefficients(),
            self.specs[b].expansion.coefficients(),
        )
    }

    /// Presentations reachable by one move.
    pub fn moves(&self, pres: &Presentation) -> Vec<Presentation> {
        let mut out = Vec::new();
        let knot_pos = i64::from(pres.stab_pos);
        let knot_neg = i64::from(pres.stab_neg);
        for form in decode(pres) {
            let (a, b) = self.lines(&form);
            let (j, k) = (form.positive_prefix, form.negative_prefix);
            let slots_a =
                |i: usize| stabilization_slots(pres.chains[usize::from(form.swapped)].tbs[i]);
            let slots_b =
                |i: usize| stabilization_slots(pres.chains[usize::from(!form.swapped)].tbs[i]);
            // Move one: positive stabilizations of the knot traded for negative ones.
            if j + 1 < a.len() {
                let mut prefix = a[..=j].to_vec();
                prefix.push(form.next_positive() + 1);
                if let Some(shift) = move_shift(&prefix, &b[..k], knot_pos) {
                    let mut pos = form.positive_counts.clone();
                    let mut neg = form.negative_counts.clone();
                    let mut ok = true;
                    pos[..=j + 1].iter_mut().for_each(|x| *x = 0);
                    if j + 2 < a.len() {
                        ok &= pos[j + 2] >= 1;
                        pos[j + 2] -= 1;
                    }
                    neg[..=k].iter_mut().for_each(|x| *x = 0);
                    if k + 1 < b.len() {
                        ok &= neg[k + 1] < slots_b(k + 1);
                        neg[k + 1] += 1;
                    }
                    if ok {
                        out.push(rebuild(
                            pres,
                            &form,
                            &pos,
                            &neg,
                            knot_pos - shift,
                            knot_neg + shift,
                        ));
                    }
                }
            }
            // Move two: the mirror image.
            if k + 1 < b.len() {
                let mut prefix = b[..=k].to_vec();
                prefix.push(form.next_negative() + 1);
                if let Some(shift) = move_shift(&prefix, &a[..j], knot_neg) {
                    let mut pos = form.positive_counts.clone();
                    let mut neg = form.negative_counts.clone();
                    let mut ok = true;
                    pos[..=j].iter_mut().for_each(|x| *x = 0);
                    if j + 1 < a.len() {
                        ok &= pos[j + 1] < slots_a(j + 1);
                        pos[j + 1] += 1;
                    }
                    neg[..=k + 1].iter_mut().for_each(|x| *x = 0);
                    if k + 2 < b.len() {
                        ok &= neg[k + 2] >= 1;
                        neg[k + 2] -= 1;
                    }
                    if ok {
                        out.push(rebuild(
                            pres,
                            &form,
                            &pos,
                            &neg,
                            knot_pos + shift,
                            knot_neg - shift,
                        ));
                    }
                }
            }
        }
        out
    }

    /// Evidence from the prefix rule: `Some(degenerate)` when some reading
    /// certifies looseness, `None` otherwise.
    fn prefix_rule(&self, pres: &Presentation) -> Option<bool> {
        let knot_pos = BigInt::from(pres.stab_pos);
        let knot_neg = BigInt::from(pres.stab_neg);
        for form in decode(pres) {
            let (a, b) = self.lines(&form);
            let (j, k) = (form.positive_prefix, form.negative_prefix);
            let candidates = [
                (a, j, form.next_positive(), &knot_neg, &b[..k]),
                (b, k, form.next_negative(), &knot_pos, &a[..j]),
            ];
            for (line, prefix, limit, bound, other) in candidates {
                let Some((pos, value)) = largest_below(line, prefix + 1, limit, bound) else {
                    continue;
                };
                let mut coefficients = line[..pos].to_vec();
                coefficients.push(value);
                let (Some(x), Some(y)) = (inverse_value(&coefficients), inverse_value(other))
                else {
                    continue;
                };
                if x + y < Rational::one() {
                    return Some(value == 0 || other.is_empty());
                }
            }
        }
        None
    }

    /// Whether the d-invariant of the contact structure obtained by
    /// Legendrian surgery on the knot is the one a tight structure on that
    /// L-space must have in its spin-c structure. Failure proves the knot is
    /// not strongly non-loose.
    pub fn contact_invariant_consistent(&self, pres: &Presentation) -> Result<bool> {
        let n = self.params.p * self.params.q + i64::from(pres.ell()) + 1;
        let rot = self.engine.rot(pres)?;
        let label = ((rot + n) / 2).rem_euclid(n);
        let expected = -surgery_d_invariant(&self.v_sequence, n, label) - ratio(1, 2);
        Ok(self.engine.surgered_d3(pres)? == expected)
    }

    /// Closes the presentations of level `ell` under the moves. In the tight
    /// ambient structure torus knots are Legendrian simple, so presentations
    /// there with equal invariants are identified as well.
    pub fn classify(&self, ell: u32) -> Result<Classification> {
        let all = enumerate_presentations(&self.params, ell)?;
        let invariants: Vec<ClassicalInvariants> = all
            .par_iter()
            .map(|p| self.engine.evaluate(p))
            .collect::<Result<_>>()?;
        let index: HashMap<&Presentation, usize> =
            all.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let tight: Vec<bool> = all.iter().map(is_ambient_tight).collect();
        let edges: Vec<Vec<Presentation>> = all.par_iter().map(|p| self.moves(p)).collect();
        let mut dsu = DisjointSets::new(all.len());
        let mut rejected = 0;
        for (i, targets) in edges.iter().enumerate() {
            for target in targets {
                let t = *index.get(target).ok_or_else(|| {
                    Error::Verification(format!("move left the presentation set: {target:?}"))
                })?;
                if invariants[t] != invariants[i] || tight[t] != tight[i] {
                    rejected += 1;
                    continue;
                }
                dsu.union(i, t);
            }
        }
        let mut simple: HashMap<ClassicalInvariants, usize> = HashMap::new();
        for i in (0..all.len()).filter(|&i| tight[i]) {
            let first = *simple.entry(invariants[i]).or_insert(i);
            dsu.union(first, i);
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for i in 0..all.len() {
            groups.entry(dsu.find(i)).or_default().push(i);
        }
        let mut groups: Vec<Vec<usize>> = groups.into_values().collect();
        groups.sort_by_key(|g| g[0]);
        let mut classes: Vec<EquivClass> = groups
            .par_iter()
            .map(|g| {
                self.judge(
                    g.iter().map(|&i| all[i].clone()).collect(),
                    invariants[g[0]],
                )
            })
            .collect::<Result<_>>()?;
        classes.sort_by(|x, y| x.representative.cmp(&y.representative));
        Ok(Classification {
            p: self.params.p,
            q: self.params.q,
            ell,
            classes,
            rejected_moves: rejected,
        })
    }

    fn judge(
        &self,
        mut members: Vec<Presentation>,
        invariants: ClassicalInvariants,
    ) -> Result<EquivClass> {
        members.sort();
        let representative = members[0].clone();
        let tight_ambient = members.iter().any(is_ambient_tight);
        let transverse = members
            .iter()
            .any(|m| m.stab_pos == 0 && nonvanishing_condition(m) && !is_ambient_tight(m));
        let clauses: Vec<Clause> = members.iter().map(clause).collect();
        let loose_clause = clauses
            .iter()
            .find(|c| matches!(c, Clause::NoExtremeLeader | Clause::NoPatternForm));
        let extreme_knot = clauses.contains(&Clause::ExtremeKnot);
        let mut degenerate = false;
        let (mut loose, mut basis) = if tight_ambient {
            (false, VerdictBasis::TightAmbient)
        } else if representative.ell() == 0 {
            (false, VerdictBasis::Unstabilized)
        } else if let Some(c) = loose_clause {
            let basis = match c {
                Clause::NoExtremeLeader => VerdictBasis::NoExtremeLeader,
                _ => VerdictBasis::NoPatternForm,
            };
            (true, basis)
        } else if extreme_knot {
            (false, VerdictBasis::ExtremeKnot)
        } else {
            let evidence = members.iter().find_map(|m| self.prefix_rule(m));
            match evidence {
                Some(d) => {
                    degenerate = d;
                    (true, VerdictBasis::PrefixRule)
                }
                None => {
                    degenerate = members.iter().flat_map(decode).any(|f| {
                        f.positive_prefix == 0
                            || f.negative_prefix == 0
                            || f.next_positive() == 0
                            || f.next_negative() == 0
                    });
                    (false, VerdictBasis::PrefixRule)
                }
            }
        };
        if !loose
            && basis == VerdictBasis::PrefixRule
            && !self.contact_invariant_consistent(&representative)?
        {
            loose = true;
            basis = VerdictBasis::ContactInvariant;
        }
        let conflicting = loose_clause.is_some() && extreme_knot;
        let flags = ClassFlags {
            tight_ambient,
            loose,
            strongly_nonloose: !tight_ambient && !loose,
            transverse,
        };
        Ok(EquivClass {
            size: members.len(),
            representative,
            flags,
            invariants,
            basis,
            degenerate,
            conflicting,
            members,
        })
    }
}

/// Per-presentation reading of the classification clauses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Clause {
    NoExtremeLeader,
    ExtremeKnot,
    NoPatternForm,
    Pattern,
}

fn clause(pres: &Presentation) -> Clause {
    let [a, b] = &pres.chains;
    let (ap, an, bp, bn) = (
        a.fully_positive(0),
        a.fully_negative(0),
        b.fully_positive(0),
        b.fully_negative(0),
    );
    let (kp, kn) = (pres.knot_fully_positive(), pres.knot_fully_negative());
    if !(ap || an || bp || bn || kp || kn) {
        Clause::NoExtremeLeader
    } else if (kp && !(ap || bp)) || (kn && !(an || bn)) {
        Clause::ExtremeKnot
    } else if (ap && bn) || (an && bp) {
        Clause::Pattern
    } else {
        Clause::NoPatternForm
    }
}

/// If `prefix` has inverse `x` with `x + 1/[other] = 1` and denominator at
/// most `budget`, the number of knot stabilizations the move transfers.
fn move_shift(prefix: &[i64], other: &[i64], budget: i64) -> Option<i64> {
    let (num, den) = convergent(prefix);
    if num <= BigInt::from(0) || num > BigInt::from(budget) {
        return None;
    }
    let x = Rational::new(den, num.clone());
    let y = inverse_value(other)?;
    (x + y == Rational::one()).then(|| i64::try_from(num).expect("bounded by budget"))
}

/// The largest `(pos, value)` in the order `(pos, value) < (pos', value')`
/// iff `pos < pos'` or `pos = pos'` and `value < value'`, among
/// `1 <= pos <= limit_pos`, `value >= 0`, strictly below `(limit_pos,
/// limit_value)`, with `[line_0, ..., line_(pos-1), value]^{-1}` having
/// denominator less than `bound`.
fn largest_below(
    line: &[i64],
    limit_pos: usize,
    limit_value: i64,
    bound: &BigInt,
) -> Option<(usize, i64)> {
    let mut best = None;
    for pos in 1..=limit_pos {
        let mut value = 0;
        loop {
            if pos == limit_pos && value >= limit_value {
                break;
            }
            let mut coefficients = line[..pos].to_vec();
            coefficients.push(value);
            let (num, _) = convergent(&coefficients);
            if num.magnitude() >= bound.magnitude() || bound <= &BigInt::from(0) {
                break;
            }
            best = Some((pos, value));
            value += 1;
        }
    }
    best
}

fn rebuild(
    template: &Presentation,
    form: &PatternForm,
    positive_counts: &[i64],
    negative_counts: &[i64],
    knot_pos: i64,
    knot_neg: i64,
) -> Presentation {
    let form = PatternForm {
        positive_counts: positive_counts.to_vec(),
        negative_counts: negative_counts.to_vec(),
        ..form.clone()
    };
    let mut out = form.encode(template);
    out.stab_pos = u32::try_from(knot_pos).expect("nonnegative by construction");
    out.stab_neg = u32::try_from(knot_neg).expect("nonnegative by construction");
    out
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Classes of all presentations with `ell` stabilizations.
pub fn classify_stabilized(params: &TorusKnotParams, ell: u32) -> Result<Classification> {
    Classifier::new(params)?.classify(ell)
}

/// A strongly non-loose transverse knot, given by the unstabilized
/// Legendrian presentations whose negative stabilizations it is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransverseClass {
    pub presentations: Vec<Presentation>,
    /// Invariants of the unstabilized Legendrian approximation; `A` and `M`
    /// are unchanged by negative stabilization.
    pub invariants: ClassicalInvariants,
    pub overtwisted: bool,
    /// Verdict on the class of the `q`-fold negative stabilization.
    pub strongly_nonloose: bool,
}

/// Transverse classes: unstabilized presentations passing the nonvanishing
/// condition, identified when their `q`-fold negative stabilizations are
/// equivalent.
pub fn transverse_classes(params: &TorusKnotParams) -> Result<Vec<TransverseClass>> {
    let classifier = Classifier::new(params)?;
    let depth = u32::try_from(params.q).map_err(|_| Error::Overflow("stabilization depth"))?;
    let deep = classifier.classify(depth)?;
    let mut slot: HashMap<Presentation, usize> = HashMap::new();
    for (i, class) in deep.classes.iter().enumerate() {
        for m in &class.members {
            slot.insert(m.clone(), i);
        }
    }
    let mut grouped: Vec<(usize, Vec<Presentation>)> = Vec::new();
    for pres in enumerate_presentations(params, 0)? {
        if !nonvanishing_condition(&pres) || is_ambient_tight(&pres) {
            continue;
        }
        let i = slot[&pres.with_stabilizations(0, depth)];
        match grouped.iter_mut().find(|(j, _)| *j == i) {
            Some((_, v)) => v.push(pres),
            None => grouped.push((i, vec![pres])),
        }
    }
    grouped
        .into_iter()
        .map(|(i, presentations)| {
            let invariants = classifier.engine.evaluate(&presentations[0])?;
            Ok(TransverseClass {
                overtwisted: !is_ambient_tight(&presentations[0]),
                strongly_nonloose: deep.classes[i].flags.strongly_nonloose,
                presentations,
                invariants,
            })
        })
        .collect()
}

/// Whether the single positive stabilization of an unstabilized presentation
/// is loose.
pub fn positive_stab_looseness(pres: &Presentation) -> Result<bool> {
    if pres.ell() != 0 || is_ambient_tight(pres) || !nonvanishing_condition(pres) {
        return Err(Error::InvalidPresentation(
            "expected an unstabilized overtwisted presentation with nonvanishing invariant".into(),
        ));
    }
    let classification = classify_stabilized(&pres.params, 1)?;
    let target = pres.stabilize(Sign::Positive);
    classification
        .class_of(&target)
        .map(|c| c.flags.loose)
        .ok_or_else(|| Error::Verification("stabilized presentation missing from its level".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::torus_knot_params;

    fn params(p: i64, q: i64) -> TorusKnotParams {
        torus_knot_params(p, q).unwrap()
    }

    fn pres(p: i64, q: i64, r0: &[i64], r1: &[i64], sp: u32, sn: u32) -> Presentation {
        Presentation::new(params(p, q), [r0.to_vec(), r1.to_vec()], sp, sn).unwrap()
    }

    fn nonvanishing(p: i64, q: i64) -> Vec<Presentation> {
        enumerate_presentations(&params(p, q), 0)
            .unwrap()
            .into_iter()
            .filter(nonvanishing_condition)
            .collect()
    }

    #[test]
    fn nonvanishing_counts() {
        assert_eq!(nonvanishing(2, 3), vec![pres(2, 3, &[1], &[1, 0], 0, 0)]);
        assert_eq!(nonvanishing(5, 8).len(), 4);
        for n in 2..7 {
            assert_eq!(nonvanishing(n, n + 1).len() as i64, n - 1);
        }
    }

    #[test]
    fn decodings_roundtrip() {
        for x in enumerate_presentations(&params(5, 8), 1).unwrap() {
            for form in decode(&x) {
                assert_eq!(form.encode(&x), x);
            }
        }
    }

    #[test]
    fn trefoil_stabilizations() {
        let x = pres(2, 3, &[1], &[1, 0], 0, 0);
        assert!(positive_stab_looseness(&x).unwrap());
        let c = classify_stabilized(&params(2, 3), 1).unwrap();
        let neg = c.class_of(&x.stabilize(Sign::Negative)).unwrap();
        assert!(!neg.flags.loose && neg.flags.strongly_nonloose && neg.flags.transverse);
    }

    #[test]
    fn some_leader_is_always_extreme() {
        // One of the two leading coefficients is 2, so that leader has tb -2
        // and is fully positive or fully negative whatever its rotation.
        for (p, q) in [(2, 3), (3, 5), (5, 8), (4, 7), (5, 9), (7, 12)] {
            for x in enumerate_presentations(&params(p, q), 1).unwrap() {
                assert_ne!(clause(&x), Clause::NoExtremeLeader);
            }
        }
    }

    #[test]
    fn missing_pattern_form_is_loose() {
        let x = pres(5, 8, &[0, 0], &[-1, -1, 0], 1, 1);
        assert_eq!(clause(&x), Clause::NoPatternForm);
        let c = classify_stabilized(&params(5, 8), 2).unwrap();
        let class = c.class_of(&x).unwrap();
        assert!(class.flags.loose);
        assert_eq!(class.basis, VerdictBasis::NoPatternForm);
    }

    #[test]
    fn classes_have_constant_invariants() {
        for (p, q) in [(2, 3), (3, 4), (2, 5), (3, 5), (5, 8)] {
            let t = params(p, q);
            let engine = InvariantEngine::new(&t).unwrap();
            for ell in 1..4 {
                let c = classify_stabilized(&t, ell).unwrap();
                for class in &c.classes {
                    for m in &class.members {
                        assert_eq!(engine.evaluate(m).unwrap(), class.invariants);
                    }
                    assert_eq!(class.invariants.tb, -p * q - i64::from(ell));
                }
            }
        }
    }

    #[test]
    fn fillable_counts_grow_for_trefoil() {
        let t = params(2, 3);
        let counts: Vec<usize> = (0..6)
            .map(|l| classify_stabilized(&t, l).unwrap().fillable_count())
            .collect();
        assert_eq!(counts, vec![2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn five_eight_transverse_locations() {
        let classes = transverse_classes(&params(5, 8)).unwrap();
        let mut found: Vec<(i64, i64)> = classes
            .iter()
            .map(|c| (c.invariants.alexander, c.invariants.maslov))
            .collect();
        found.sort_unstable();
        assert_eq!(found, vec![(-12, -26), (-2, -12), (4, -6), (14, 0)]);
    }

    #[test]
    fn largest_candidate_order() {
        // Line [2, 3, 2]: candidates below (2, 1) with denominator < 4.
        // [2, 0] has denominator 1; (1, b) has denominator b.
        let best = largest_below(&[2, 3, 2], 2, 1, &BigInt::from(4));
        assert_eq!(best, Some((2, 0)));
        let best = largest_below(&[2, 3, 2], 1, 3, &BigInt::from(10));
        assert_eq!(best, Some((1, 2)));
        assert_eq!(largest_below(&[2], 1, 0, &BigInt::from(5)), None);
    }
}
