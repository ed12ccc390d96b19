//! Exact rational arithmetic, negative continued fractions and the
//! number-theoretic data of a torus knot complement.
//!
//! Continued fractions use the negative convention
//! `[c_0, ..., c_m] = c_0 - 1/(c_1 - 1/(... - 1/c_m))`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact fraction over arbitrary-precision integers, always kept reduced.
pub type Rational = BigRational;

/// Builds the rational `num/den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Converts an integral rational to `i64`.
pub fn to_i64(value: &Rational) -> Result<i64> {
    if !value.is_integer() {
        return Err(Error::NonIntegral(value.to_string()));
    }
    value
        .to_integer()
        .to_i64()
        .ok_or(Error::Overflow("rational to i64"))
}

/// A negative continued fraction whose coefficients are all at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct NegCf(Vec<i64>);

impl NegCf {
    pub fn new(coefficients: Vec<i64>) -> Result<Self> {
        if coefficients.is_empty() || coefficients.iter().any(|&c| c < 2) {
            return Err(Error::InvalidCoefficients(coefficients));
        }
        Ok(NegCf(coefficients))
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn last(&self) -> i64 {
        *self.0.last().expect("NegCf is nonempty")
    }

    pub fn reversed(&self) -> NegCf {
        NegCf(self.0.iter().rev().copied().collect())
    }

    pub fn value(&self) -> Rational {
        let (num, den) = convergent(&self.0);
        Rational::new(num, den)
    }
}

impl TryFrom<Vec<i64>> for NegCf {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        NegCf::new(v)
    }
}

impl From<NegCf> for Vec<i64> {
    fn from(cf: NegCf) -> Vec<i64> {
        cf.0
    }
}

impl fmt::Display for NegCf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Numerator and denominator of `[c_0, ..., c_m]` from the three-term
/// recursion. Coefficients may be arbitrary integers; the pair is not reduced
/// and the denominator may vanish. The empty sequence gives `(1, 0)`.
pub fn convergent(coefficients: &[i64]) -> (BigInt, BigInt) {
    let (mut num_prev, mut num) = (BigInt::zero(), BigInt::one());
    let (mut den_prev, mut den) = (-BigInt::one(), BigInt::zero());
    for &c in coefficients {
        let c = BigInt::from(c);
        let next_num = &c * &num - &num_prev;
        let next_den = &c * &den - &den_prev;
        num_prev = std::mem::replace(&mut num, next_num);
        den_prev = std::mem::replace(&mut den, next_den);
    }
    (num, den)
}

/// Value of `[c_0, ..., c_m]^{-1}`. The empty sequence has inverse 0;
/// `None` when the fraction itself is 0.
pub fn inverse_value(coefficients: &[i64]) -> Option<Rational> {
    if coefficients.is_empty() {
        return Some(Rational::zero());
    }
    let (num, den) = convergent(coefficients);
    if num.is_zero() {
        None
    } else {
        Some(Rational::new(den, num))
    }
}

/// Denominator of `[c_0, ..., c_m]^{-1}`, i.e. the absolute numerator of
/// the fraction itself.
pub fn inverse_denominator(coefficients: &[i64]) -> BigInt {
    convergent(coefficients).0.abs()
}

/// The all-at-least-2 negative continued fraction of `num/den`.
pub fn neg_cf(num: i64, den: i64) -> Result<NegCf> {
    let invalid = |reason| Error::InvalidFraction { num, den, reason };
    if den < 1 {
        return Err(invalid("denominator must be positive"));
    }
    if num <= den {
        return Err(invalid("numerator must exceed denominator"));
    }
    if num.gcd(&den) != 1 {
        return Err(invalid("numerator and denominator must be coprime"));
    }
    let (mut a, mut b) = (num, den);
    let mut coefficients = Vec::new();
    while b != 0 {
        let c = (a + b - 1) / b;
        coefficients.push(c);
        (a, b) = (b, c * b - a);
    }
    NegCf::new(coefficients)
}

/// Exact value of a negative continued fraction.
pub fn eval_cf(cf: &NegCf) -> Rational {
    cf.value()
}

/// Number-theoretic data of the complement of `T(p,q)`.
///
/// `p_dual` and `q_dual` satisfy `p*q_dual - q*p_dual = 1` with
/// `0 < p_dual < p`; `q = n*p - k`, and `c*k = d*p + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorusKnotParams {
    pub p: i64,
    pub q: i64,
    #[serde(rename = "p_prime")]
    pub p_dual: i64,
    #[serde(rename = "q_prime")]
    pub q_dual: i64,
    #[serde(rename = "n")]
    pub ceil_ratio: i64,
    #[serde(rename = "k")]
    pub deficit: i64,
    #[serde(rename = "C")]
    pub c: i64,
    #[serde(rename = "D")]
    pub d: i64,
}

/// Largest `q` accepted, keeping `p*q` and every derived machine integer far
/// from overflow.
pub const MAX_Q: i64 = 1 << 20;

pub fn torus_knot_params(p: i64, q: i64) -> Result<TorusKnotParams> {
    let invalid = |reason| Error::InvalidKnot { p, q, reason };
    if p < 2 {
        return Err(invalid("p must be at least 2"));
    }
    if q <= p {
        return Err(invalid("q must exceed p"));
    }
    if q > MAX_Q {
        return Err(invalid("q is too large"));
    }
    if p.gcd(&q) != 1 {
        return Err(invalid("p and q must be coprime"));
    }
    let inverse = p.extended_gcd(&q).x;
    let q_dual = inverse.rem_euclid(q);
    let p_dual = (p * q_dual - 1) / q;
    let ceil_ratio = (q + p - 1) / p;
    let deficit = ceil_ratio * p - q;
    let c = p_dual;
    let d = c * ceil_ratio - q_dual;
    let params = TorusKnotParams {
        p,
        q,
        p_dual,
        q_dual,
        ceil_ratio,
        deficit,
        c,
        d,
    };
    params.check()?;
    Ok(params)
}

impl TorusKnotParams {
    fn check(&self) -> Result<()> {
        let ok = self.p * self.q_dual - self.q * self.p_dual == 1
            && 0 < self.p_dual
            && self.p_dual < self.p
            && self.q_dual > 0
            && self.q == self.ceil_ratio * self.p - self.deficit
            && self.ceil_ratio >= 2
            && 0 < self.deficit
            && self.deficit < self.p
            && self.p.gcd(&self.deficit) == 1
            && self.c * self.deficit == self.d * self.p + 1
            && self.c > 0
            && self.d >= 0
            && self.p_dual == self.c
            && self.q_dual == self.c * self.ceil_ratio - self.d;
        if ok {
            Ok(())
        } else {
            Err(Error::Verification(format!(
                "inconsistent parameters {self:?}"
            )))
        }
    }

    /// Seifert constants `(p - p_dual)/p` and `q_dual/q` of the complement.
    pub fn seifert_constants(&self) -> (Rational, Rational) {
        (
            ratio(self.p - self.p_dual, self.p),
            ratio(self.q_dual, self.q),
        )
    }

    /// Contact surgery coefficients of the two singular-fiber chains.
    pub fn chain_coefficients(&self) -> (Rational, Rational) {
        (
            ratio(-self.p, self.p - self.p_dual),
            ratio(-self.q, self.q_dual),
        )
    }

    /// Genus of `T(p,q)`, which is also its top Alexander grading.
    pub fn genus(&self) -> i64 {
        (self.p - 1) * (self.q - 1) / 2
    }
}

/// The two chain expansions with their complementarity witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementarySplit {
    pub first: NegCf,
    pub second: NegCf,
    /// `1/[first]` and `1/[second without its last coefficient]`, summing to 1.
    pub witness: (Rational, Rational),
}

/// Expands both singular-fiber coefficients and checks that the second
/// expansion ends in `n` and that the first expansion and the truncated second
/// one have inverses summing to 1.
pub fn complementary_split(params: &TorusKnotParams) -> Result<ComplementarySplit> {
    let first = neg_cf(params.p, params.p - params.p_dual)?;
    let second = neg_cf(params.q, params.q_dual)?;
    if second.last() != params.ceil_ratio {
        return Err(Error::Verification(format!(
            "{second} does not end in {}",
            params.ceil_ratio
        )));
    }
    let truncated = &second.coefficients()[..second.len() - 1];
    let left = inverse_value(first.coefficients())
        .ok_or_else(|| Error::Verification(format!("{first} evaluates to 0")))?;
    let right = inverse_value(truncated)
        .ok_or_else(|| Error::Verification(format!("{truncated:?} evaluates to 0")))?;
    if &left + &right != Rational::one() {
        return Err(Error::Verification(format!(
            "1/{first} + 1/{truncated:?} = {} is not 1",
            &left + &right
        )));
    }
    Ok(ComplementarySplit {
        first,
        second,
        witness: (left, right),
    })
}

/// Number of rotation assignments on the Legendrian chain of `L(u,v)`, the
/// product of `a_i - 1` over the expansion of `u/v`.
pub fn honda_count(u: i64, v: i64) -> Result<BigUint> {
    let cf = neg_cf(u, v)?;
    Ok(cf
        .coefficients()
        .iter()
        .map(|&a| BigUint::from((a - 1) as u64))
        .product())
}

/// Inverse of `v` modulo `u`, in `0..u`.
pub fn mod_inverse(v: i64, u: i64) -> Option<i64> {
    let e = v.extended_gcd(&u);
    (e.gcd == 1).then(|| e.x.rem_euclid(u))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(v: &[i64]) -> NegCf {
        NegCf::new(v.to_vec()).unwrap()
    }

    #[test]
    fn expansions() {
        assert_eq!(neg_cf(8, 5).unwrap(), cf(&[2, 3, 2]));
        assert_eq!(neg_cf(2, 1).unwrap(), cf(&[2]));
        assert_eq!(neg_cf(6, 5).unwrap(), cf(&[2; 5]));
        assert_eq!(neg_cf(5, 2).unwrap(), cf(&[3, 2]));
        assert_eq!(neg_cf(7, 4).unwrap(), cf(&[2, 4]));
    }

    #[test]
    fn rejects_bad_fractions() {
        assert!(neg_cf(3, 3).is_err());
        assert!(neg_cf(2, 3).is_err());
        assert!(neg_cf(6, 4).is_err());
        assert!(neg_cf(5, 0).is_err());
        assert!(NegCf::new(vec![2, 1]).is_err());
        assert!(NegCf::new(vec![]).is_err());
    }

    #[test]
    fn evaluation() {
        assert_eq!(eval_cf(&cf(&[2, 3, 2])), ratio(8, 5));
        assert_eq!(eval_cf(&cf(&[2])), ratio(2, 1));
        assert_eq!(eval_cf(&cf(&[3, 2])), ratio(5, 2));
    }

    #[test]
    fn convergent_edge_cases() {
        assert_eq!(convergent(&[]), (BigInt::one(), BigInt::zero()));
        assert_eq!(inverse_value(&[]), Some(Rational::zero()));
        // [2, 0] is infinite, so its inverse vanishes with denominator 1.
        assert_eq!(inverse_value(&[2, 0]), Some(Rational::zero()));
        assert_eq!(inverse_denominator(&[2, 0]), BigInt::one());
        // [1] = 1, [1, 1] = 0.
        assert_eq!(inverse_value(&[1, 1]), None);
    }

    #[test]
    fn knot_params() {
        let t = torus_knot_params(2, 3).unwrap();
        assert_eq!(
            (t.p_dual, t.q_dual, t.ceil_ratio, t.deficit, t.c, t.d),
            (1, 2, 2, 1, 1, 0)
        );
        assert_eq!(t.seifert_constants(), (ratio(1, 2), ratio(2, 3)));
        let t = torus_knot_params(5, 8).unwrap();
        assert_eq!(
            (t.p_dual, t.q_dual, t.ceil_ratio, t.deficit, t.c, t.d),
            (3, 5, 2, 2, 3, 1)
        );
        assert_eq!(t.seifert_constants(), (ratio(2, 5), ratio(5, 8)));
        for n in 2..20 {
            let t = torus_knot_params(n, n + 1).unwrap();
            assert_eq!(t.seifert_constants(), (ratio(1, n), ratio(n, n + 1)));
        }
        assert!(torus_knot_params(4, 6).is_err());
        assert!(torus_knot_params(1, 3).is_err());
        assert!(torus_knot_params(5, 3).is_err());
    }

    #[test]
    fn splits() {
        let cases = [
            ((5, 8), (&[3, 2][..], &[2, 3, 2][..])),
            ((2, 3), (&[2], &[2, 2])),
            ((3, 4), (&[3], &[2, 2, 2])),
        ];
        for ((p, q), (first, second)) in cases {
            let s = complementary_split(&torus_knot_params(p, q).unwrap()).unwrap();
            assert_eq!(s.first.coefficients(), first);
            assert_eq!(s.second.coefficients(), second);
        }
        let s = complementary_split(&torus_knot_params(5, 8).unwrap()).unwrap();
        assert_eq!(s.witness, (ratio(2, 5), ratio(3, 5)));
    }

    #[test]
    fn honda() {
        assert_eq!(honda_count(7, 4).unwrap(), BigUint::from(3u32));
        assert_eq!(honda_count(3, 1).unwrap(), BigUint::from(2u32));
        assert_eq!(honda_count(11, 1).unwrap(), BigUint::from(10u32));
        assert!(honda_count(6, 4).is_err());
    }

    #[test]
    fn inverse_mod() {
        assert_eq!(mod_inverse(4, 7), Some(2));
        assert_eq!(mod_inverse(2, 4), None);
    }
}
