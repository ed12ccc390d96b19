//! The two-chain contact surgery diagram of a Legendrian negative torus knot.
//!
//! Two Legendrian unknots with `tb = -1` carry contact (+1)-surgery. Each
//! singular fiber contributes a chain of Legendrian unknots with Legendrian
//! surgery: the chain of `[a_0, ..., a_m]` has `tb = -a_0` on its leading
//! unknot and `tb = -a_j + 1` further along. The knot itself is a `tb = -1`
//! unknot, possibly stabilized.

use serde::{Deserialize, Serialize};

use crate::arith::{neg_cf, torus_knot_params, NegCf, Rational, TorusKnotParams};
use crate::error::{Error, Result};

/// Thurston-Bennequin invariants of the unknots of one chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainSpec {
    pub expansion: NegCf,
    pub tbs: Vec<i64>,
}

impl ChainSpec {
    pub fn from_expansion(expansion: NegCf) -> Self {
        let tbs = expansion
            .coefficients()
            .iter()
            .enumerate()
            .map(|(j, &a)| if j == 0 { -a } else { -a + 1 })
            .collect();
        ChainSpec { expansion, tbs }
    }

    /// All legal rotation arrays, in lexicographic order.
    pub fn rotation_assignments(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for &tb in &self.tbs {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    rotation_range(tb).map(move |r| {
                        let mut v = prefix.clone();
                        v.push(r);
                        v
                    })
                })
                .collect();
        }
        out
    }
}

/// Legal rotation numbers of a Legendrian unknot: `tb+1, tb+3, ..., -tb-1`.
pub fn rotation_range(tb: i64) -> impl Iterator<Item = i64> {
    (tb + 1..=-tb - 1).step_by(2)
}

/// Number of stabilizations of a chain unknot, `-tb - 1`.
pub fn stabilization_slots(tb: i64) -> i64 {
    -tb - 1
}

/// Number of positive stabilizations of an unknot with the given invariants.
pub fn positive_stabilizations(tb: i64, rot: i64) -> i64 {
    (rot + stabilization_slots(tb)) / 2
}

/// Rotation number of an unknot with `positive` positive stabilizations.
pub fn rotation_from_positive(tb: i64, positive: i64) -> i64 {
    2 * positive - stabilization_slots(tb)
}

/// Expands a contact surgery coefficient below -1 into a Legendrian chain.
pub fn expand_contact_surgery(coefficient: &Rational) -> Result<ChainSpec> {
    let bad = || Error::InvalidSurgeryCoefficient(coefficient.to_string());
    if *coefficient >= Rational::from_integer((-1).into()) {
        return Err(bad());
    }
    let num: i64 = (-coefficient.numer()).try_into().map_err(|_| bad())?;
    let den: i64 = coefficient.denom().try_into().map_err(|_| bad())?;
    Ok(ChainSpec::from_expansion(neg_cf(num, den)?))
}

/// The two chains of the diagram, in fixed order: the `-p/(p-p')` chain,
/// then the `-q/q'` chain.
pub fn chain_specs(params: &TorusKnotParams) -> Result<[ChainSpec; 2]> {
    let (first, second) = params.chain_coefficients();
    Ok([
        expand_contact_surgery(&first)?,
        expand_contact_surgery(&second)?,
    ])
}

pub fn is_fully_positive(tb: i64, rot: i64) -> bool {
    rot == -(tb + 1)
}

pub fn is_fully_negative(tb: i64, rot: i64) -> bool {
    rot == tb + 1
}

/// One chain with its rotation numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DecoratedChain {
    #[serde(rename = "tb")]
    pub tbs: Vec<i64>,
    #[serde(rename = "rot")]
    pub rots: Vec<i64>,
}

impl DecoratedChain {
    pub fn fully_positive(&self, j: usize) -> bool {
        is_fully_positive(self.tbs[j], self.rots[j])
    }

    pub fn fully_negative(&self, j: usize) -> bool {
        is_fully_negative(self.tbs[j], self.rots[j])
    }

    pub fn all_fully_positive(&self) -> bool {
        (0..self.tbs.len()).all(|j| self.fully_positive(j))
    }

    pub fn all_fully_negative(&self) -> bool {
        (0..self.tbs.len()).all(|j| self.fully_negative(j))
    }

    pub fn positive_count(&self, j: usize) -> i64 {
        positive_stabilizations(self.tbs[j], self.rots[j])
    }

    pub fn negative_count(&self, j: usize) -> i64 {
        stabilization_slots(self.tbs[j]) - self.positive_count(j)
    }

    fn is_legal(&self) -> bool {
        self.tbs.len() == self.rots.len()
            && self
                .tbs
                .iter()
                .zip(&self.rots)
                .all(|(&tb, &r)| tb < 0 && r.abs() < -tb && (r + tb + 1) % 2 == 0)
    }
}

/// Stabilization sign. A positive stabilization adds 1 to the rotation number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

/// A Legendrian representative candidate: rotation numbers on both chains
/// and the stabilizations of the knot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Presentation {
    pub params: TorusKnotParams,
    pub chains: [DecoratedChain; 2],
    pub stab_pos: u32,
    pub stab_neg: u32,
}

impl Presentation {
    /// Builds and validates a presentation from rotation arrays.
    pub fn new(
        params: TorusKnotParams,
        rots: [Vec<i64>; 2],
        stab_pos: u32,
        stab_neg: u32,
    ) -> Result<Self> {
        let specs = chain_specs(&params)?;
        let [r0, r1] = rots;
        let chains = [
            DecoratedChain {
                tbs: specs[0].tbs.clone(),
                rots: r0,
            },
            DecoratedChain {
                tbs: specs[1].tbs.clone(),
                rots: r1,
            },
        ];
        let pres = Presentation {
            params,
            chains,
            stab_pos,
            stab_neg,
        };
        pres.validate()?;
        Ok(pres)
    }

    pub fn validate(&self) -> Result<()> {
        let specs = chain_specs(&self.params)?;
        for (chain, spec) in self.chains.iter().zip(&specs) {
            if chain.tbs != spec.tbs {
                return Err(Error::InvalidPresentation(format!(
                    "chain tbs {:?} differ from {:?}",
                    chain.tbs, spec.tbs
                )));
            }
            if !chain.is_legal() {
                return Err(Error::InvalidPresentation(format!(
                    "illegal rotation numbers {:?} for tbs {:?}",
                    chain.rots, chain.tbs
                )));
            }
        }
        if self.chains[1].tbs.last() != Some(&(1 - self.params.ceil_ratio)) {
            return Err(Error::InvalidPresentation(
                "second chain must end in tb = 1 - n".into(),
            ));
        }
        Ok(())
    }

    /// Total number of stabilizations of the knot.
    pub fn ell(&self) -> u32 {
        self.stab_pos + self.stab_neg
    }

    pub fn stabilize(&self, sign: Sign) -> Presentation {
        let mut out = self.clone();
        match sign {
            Sign::Positive => out.stab_pos += 1,
            Sign::Negative => out.stab_neg += 1,
        }
        out
    }

    /// Negates every rotation number and exchanges the stabilization signs.
    pub fn conjugate(&self) -> Presentation {
        let mut out = self.clone();
        for chain in &mut out.chains {
            for r in &mut chain.rots {
                *r = -*r;
            }
        }
        std::mem::swap(&mut out.stab_pos, &mut out.stab_neg);
        out
    }

    /// The same knot with `stab_pos` and `stab_neg` replaced.
    pub fn with_stabilizations(&self, stab_pos: u32, stab_neg: u32) -> Presentation {
        Presentation {
            stab_pos,
            stab_neg,
            ..self.clone()
        }
    }

    /// Knot fully positive: all its stabilizations are positive.
    pub fn knot_fully_positive(&self) -> bool {
        self.stab_neg == 0
    }

    pub fn knot_fully_negative(&self) -> bool {
        self.stab_pos == 0
    }
}

/// All presentations with `ell` knot stabilizations.
pub fn enumerate_presentations(params: &TorusKnotParams, ell: u32) -> Result<Vec<Presentation>> {
    let specs = chain_specs(params)?;
    let first = specs[0].rotation_assignments();
    let second = specs[1].rotation_assignments();
    let mut out = Vec::with_capacity(first.len() * second.len() * (ell as usize + 1));
    for r0 in &first {
        for r1 in &second {
            for stab_pos in 0..=ell {
                out.push(Presentation {
                    params: *params,
                    chains: [
                        DecoratedChain {
                            tbs: specs[0].tbs.clone(),
                            rots: r0.clone(),
                        },
                        DecoratedChain {
                            tbs: specs[1].tbs.clone(),
                            rots: r1.clone(),
                        },
                    ],
                    stab_pos,
                    stab_neg: ell - stab_pos,
                });
            }
        }
    }
    Ok(out)
}

/// Predicted number of presentations: product of `|tb|` over all chain
/// unknots, times `ell + 1`.
pub fn presentation_count(params: &TorusKnotParams, ell: u32) -> Result<u64> {
    let specs = chain_specs(params)?;
    let slots: u64 = specs
        .iter()
        .flat_map(|s| s.tbs.iter())
        .map(|&tb| tb.unsigned_abs())
        .product();
    Ok(slots * (u64::from(ell) + 1))
}

/// Whether the ambient contact structure is tight: one chain entirely fully
/// positive and the other entirely fully negative.
pub fn is_ambient_tight(pres: &Presentation) -> bool {
    let [a, b] = &pres.chains;
    (a.all_fully_positive() && b.all_fully_negative())
        || (a.all_fully_negative() && b.all_fully_positive())
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    p: i64,
    q: i64,
    chains: [DecoratedChain; 2],
    stab_pos: u32,
    stab_neg: u32,
}

impl Serialize for Presentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PresentationJson {
            p: self.params.p,
            q: self.params.q,
            chains: self.chains.clone(),
            stab_pos: self.stab_pos,
            stab_neg: self.stab_neg,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Presentation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PresentationJson::deserialize(d)?;
        let params = torus_knot_params(raw.p, raw.q).map_err(D::Error::custom)?;
        let pres = Presentation {
            params,
            chains: raw.chains,
            stab_pos: raw.stab_pos,
            stab_neg: raw.stab_neg,
        };
        pres.validate().map_err(D::Error::custom)?;
        Ok(pres)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn params(p: i64, q: i64) -> TorusKnotParams {
        torus_knot_params(p, q).unwrap()
    }

    #[test]
    fn expansion_rules() {
        assert_eq!(expand_contact_surgery(&ratio(-2, 1)).unwrap().tbs, vec![-2]);
        assert_eq!(
            expand_contact_surgery(&ratio(-3, 2)).unwrap().tbs,
            vec![-2, -1]
        );
        assert_eq!(
            expand_contact_surgery(&ratio(-8, 5)).unwrap().tbs,
            vec![-2, -2, -1]
        );
        assert!(expand_contact_surgery(&ratio(-1, 1)).is_err());
        assert!(expand_contact_surgery(&ratio(1, 2)).is_err());
    }

    #[test]
    fn chains_of_five_eight() {
        let [a, b] = chain_specs(&params(5, 8)).unwrap();
        assert_eq!(a.tbs, vec![-3, -1]);
        assert_eq!(b.tbs, vec![-2, -2, -1]);
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_presentations(&params(2, 3), 0).unwrap().len(), 4);
        assert_eq!(enumerate_presentations(&params(2, 3), 1).unwrap().len(), 8);
        assert_eq!(enumerate_presentations(&params(5, 8), 0).unwrap().len(), 12);
        assert_eq!(presentation_count(&params(5, 8), 3).unwrap(), 48);
    }

    #[test]
    fn extremality() {
        assert!(is_fully_positive(-2, 1));
        assert!(is_fully_negative(-3, -2));
        assert!(is_fully_positive(-1, 0) && is_fully_negative(-1, 0));
        assert!(!is_fully_positive(-3, 0));
    }

    #[test]
    fn tightness() {
        let t = params(2, 3);
        let tight = Presentation::new(t, [vec![1], vec![-1, 0]], 0, 0).unwrap();
        let ot = Presentation::new(t, [vec![1], vec![1, 0]], 0, 0).unwrap();
        let mirror = Presentation::new(t, [vec![-1], vec![1, 0]], 0, 0).unwrap();
        assert!(is_ambient_tight(&tight));
        assert!(!is_ambient_tight(&ot));
        assert!(is_ambient_tight(&mirror));
        let tight_count = enumerate_presentations(&t, 0)
            .unwrap()
            .iter()
            .filter(|p| is_ambient_tight(p))
            .count();
        assert_eq!(tight_count, 2);
    }

    #[test]
    fn stabilization_bookkeeping() {
        let t = params(2, 3);
        let pres = Presentation::new(t, [vec![1], vec![1, 0]], 0, 0).unwrap();
        let s = pres.stabilize(Sign::Negative);
        assert_eq!((s.stab_pos, s.stab_neg), (0, 1));
        let s = pres.stabilize(Sign::Positive).stabilize(Sign::Negative);
        assert_eq!((s.stab_pos, s.stab_neg, s.ell()), (1, 1, 2));
    }

    #[test]
    fn conjugation_is_involution() {
        let t = params(5, 8);
        for pres in enumerate_presentations(&t, 2).unwrap() {
            let c = pres.conjugate();
            assert_eq!(c.conjugate(), pres);
            assert_eq!(is_ambient_tight(&c), is_ambient_tight(&pres));
            c.validate().unwrap();
        }
    }

    #[test]
    fn rejects_illegal_rotations() {
        let t = params(2, 3);
        assert!(Presentation::new(t, [vec![0], vec![1, 0]], 0, 0).is_err());
        assert!(Presentation::new(t, [vec![3], vec![1, 0]], 0, 0).is_err());
        assert!(Presentation::new(t, [vec![1], vec![1]], 0, 0).is_err());
    }

    #[test]
    fn stabilization_counts() {
        assert_eq!(positive_stabilizations(-3, 2), 2);
        assert_eq!(positive_stabilizations(-3, -2), 0);
        assert_eq!(rotation_from_positive(-3, 1), 0);
        assert_eq!(rotation_range(-3).collect::<Vec<_>>(), vec![-2, 0, 2]);
    }
}
