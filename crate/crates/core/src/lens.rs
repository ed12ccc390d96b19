//! Reduction of the surgered two-chain diagram to a lens space chain.
//!
//! With Legendrian surgery on the unstabilized knot, blowing up the point
//! where the knot meets the two (+1)-curves and blowing down merges the two
//! chain leaders into one unknot with framing `-(a_1 + a_2)` and rotation
//! `rot_1 - rot_2`; the chain tails are carried over. The result is the
//! Legendrian chain of `L(pq+1, p^2)` up to reversal.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::{honda_count, mod_inverse, neg_cf, TorusKnotParams};
use crate::diagram::{chain_specs, enumerate_presentations, Presentation};
use crate::error::{Error, Result};
use crate::invariants::InvariantEngine;

/// A Legendrian chain presenting a lens space: smooth framings and rotation
/// numbers, which label the spin-c structure of the tight structure.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LensChain {
    pub framings: Vec<i64>,
    pub rots: Vec<i64>,
}

impl LensChain {
    /// Chain reversal, the `v <-> v^{-1}` symmetry of `L(u, v)`.
    pub fn reversed(&self) -> LensChain {
        LensChain {
            framings: self.framings.iter().rev().copied().collect(),
            rots: self.rots.iter().rev().copied().collect(),
        }
    }

    /// Orientation with the lexicographically smaller framing sequence.
    pub fn normalized(self) -> LensChain {
        let rev = self.reversed();
        if rev.framings < self.framings {
            rev
        } else {
            self
        }
    }

    pub fn coefficients(&self) -> Vec<i64> {
        self.framings.iter().map(|f| -f).collect()
    }

    /// Every rotation is legal for an unknot with `tb = framing + 1`.
    pub fn is_legal(&self) -> bool {
        self.framings.len() == self.rots.len()
            && self.framings.iter().zip(&self.rots).all(|(&f, &r)| {
                let slots = -f - 2;
                f <= -2 && r.abs() <= slots && (r + slots) % 2 == 0
            })
    }
}

/// Lens chain of an unstabilized presentation with Legendrian surgery on
/// the knot.
pub fn figure3_reduce(pres: &Presentation) -> Result<LensChain> {
    if pres.ell() != 0 {
        return Err(Error::InvalidPresentation(
            "lens reduction needs an unstabilized knot".into(),
        ));
    }
    let specs = chain_specs(&pres.params)?;
    let first = specs[0].expansion.coefficients();
    let second = specs[1].expansion.coefficients();
    let [r1, r2] = [&pres.chains[0].rots, &pres.chains[1].rots];
    let mut framings = Vec::new();
    let mut rots = Vec::new();
    for j in (1..first.len()).rev() {
        framings.push(-first[j]);
        rots.push(r1[j]);
    }
    framings.push(-(first[0] + second[0]));
    rots.push(r1[0] - r2[0]);
    for j in 1..second.len() {
        framings.push(-second[j]);
        rots.push(r2[j]);
    }
    Ok(LensChain { framings, rots }.normalized())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LensReport {
    pub p: i64,
    pub q: i64,
    pub honda_count: u64,
    pub image_size: usize,
    /// Indices into the unstabilized presentations, grouped by image.
    pub fibers: Vec<Vec<usize>>,
    /// The reduced framings expand `(pq+1)/p^2` or its inverse-normalized form.
    pub chain_matches: bool,
    /// Every image rotation array is legal.
    pub rotations_legal: bool,
    /// Presentations in one fiber give surgered structures with equal `d3`.
    pub fibers_d3_consistent: bool,
}

impl LensReport {
    pub fn passed(&self) -> bool {
        self.image_size as u64 == self.honda_count
            && self.chain_matches
            && self.rotations_legal
            && self.fibers_d3_consistent
    }
}

/// Compares the image of the reduction with the tight structures on
/// `L(pq+1, p^2)`.
pub fn surjectivity_check(params: &TorusKnotParams) -> Result<LensReport> {
    let u = params.p * params.q + 1;
    let v = params.p * params.p;
    let count = honda_count(u, v)?
        .to_u64()
        .ok_or(Error::Overflow("honda count"))?;
    let all = enumerate_presentations(params, 0)?;
    let engine = InvariantEngine::new(params)?;
    let mut fibers: BTreeMap<LensChain, Vec<usize>> = BTreeMap::new();
    for (i, pres) in all.iter().enumerate() {
        fibers.entry(figure3_reduce(pres)?).or_default().push(i);
    }
    let direct = neg_cf(u, v)?;
    let inverse = mod_inverse(v, u).map(|w| neg_cf(u, w)).transpose()?;
    let chain_matches = fibers.keys().all(|chain| {
        let c = chain.coefficients();
        c == direct.coefficients() || inverse.as_ref().is_some_and(|w| c == w.coefficients())
    });
    let rotations_legal = fibers.keys().all(LensChain::is_legal);
    let mut fibers_d3_consistent = true;
    for members in fibers.values() {
        let first = engine.surgered_d3(&all[members[0]])?;
        for &m in &members[1..] {
            fibers_d3_consistent &= engine.surgered_d3(&all[m])? == first;
        }
    }
    Ok(LensReport {
        p: params.p,
        q: params.q,
        honda_count: count,
        image_size: fibers.len(),
        fibers: fibers.into_values().collect(),
        chain_matches,
        rotations_legal,
        fibers_d3_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::torus_knot_params;

    fn params(p: i64, q: i64) -> TorusKnotParams {
        torus_knot_params(p, q).unwrap()
    }

    #[test]
    fn trefoil_reduction() {
        let t = params(2, 3);
        let x = Presentation::new(t, [vec![1], vec![-1, 0]], 0, 0).unwrap();
        let chain = figure3_reduce(&x).unwrap();
        assert_eq!(
            chain,
            LensChain {
                framings: vec![-4, -2],
                rots: vec![2, 0]
            }
        );
        let merged: Vec<i64> = enumerate_presentations(&t, 0)
            .unwrap()
            .iter()
            .map(|p| figure3_reduce(p).unwrap().rots[0])
            .collect();
        let mut sorted = merged.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![-2, 0, 0, 2]);
    }

    #[test]
    fn surjective_small_cases() {
        for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 5), (5, 8)] {
            let r = surjectivity_check(&params(p, q)).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        assert_eq!(surjectivity_check(&params(2, 3)).unwrap().image_size, 3);
    }

    #[test]
    fn merged_range_with_two_leader() {
        // (2, 5): first chain [2], second [2, 3]; merged framing -4.
        let t = params(2, 5);
        let mut seen: Vec<i64> = enumerate_presentations(&t, 0)
            .unwrap()
            .iter()
            .map(|p| p.chains[0].rots[0] - p.chains[1].rots[0])
            .collect();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen, vec![-2, 0, 2]);
    }

    #[test]
    fn rejects_stabilized() {
        let t = params(2, 3);
        let x = Presentation::new(t, [vec![1], vec![-1, 0]], 1, 0).unwrap();
        assert!(figure3_reduce(&x).is_err());
    }
}
