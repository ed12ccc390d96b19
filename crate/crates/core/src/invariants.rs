//! Classical invariants of presentations, computed from the smooth surgery
//! description, together with the knot Floer bigrading.
//!
//! Curves are ordered as: the two (+1)-curves, the first chain, the second
//! chain. The two (+1)-curves and the two chain leaders are parallel push-offs
//! of one another and pairwise link `-1`; consecutive unknots of a chain
//! link `+1`. The knot links each push-off `-1` and nothing else.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{mod_inverse, neg_cf, ratio, to_i64, Rational, TorusKnotParams};
use crate::diagram::{chain_specs, Presentation};
use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};

/// Role of a surgery curve in the diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CurveRole {
    /// One of the two contact (+1)-surgery unknots.
    PlusOne(usize),
    /// Unknot `index` of chain `chain`.
    ChainUnknot { chain: usize, index: usize },
}

impl CurveRole {
    fn is_pushoff(self) -> bool {
        matches!(
            self,
            CurveRole::PlusOne(_) | CurveRole::ChainUnknot { index: 0, .. }
        )
    }
}

/// Smooth linking data of the diagram, without the knot's own surgery.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkingMatrix {
    pub roles: Vec<CurveRole>,
    /// Symmetric; the diagonal holds the smooth framings.
    pub entries: Vec<Vec<i64>>,
    /// Linking numbers of the knot with each curve.
    pub knot_links: Vec<i64>,
}

impl LinkingMatrix {
    pub fn new(params: &TorusKnotParams) -> Result<Self> {
        let specs = chain_specs(params)?;
        let mut roles = vec![CurveRole::PlusOne(0), CurveRole::PlusOne(1)];
        let mut framings = vec![0, 0];
        for (chain, spec) in specs.iter().enumerate() {
            for (index, &tb) in spec.tbs.iter().enumerate() {
                roles.push(CurveRole::ChainUnknot { chain, index });
                framings.push(tb - 1);
            }
        }
        let n = roles.len();
        let mut entries = vec![vec![0; n]; n];
        for i in 0..n {
            entries[i][i] = framings[i];
            for j in 0..n {
                if i == j {
                    continue;
                }
                entries[i][j] = match (roles[i], roles[j]) {
                    (a, b) if a.is_pushoff() && b.is_pushoff() => -1,
                    (
                        CurveRole::ChainUnknot {
                            chain: c1,
                            index: i1,
                        },
                        CurveRole::ChainUnknot {
                            chain: c2,
                            index: i2,
                        },
                    ) if c1 == c2 && i1.abs_diff(i2) == 1 => 1,
                    _ => 0,
                };
            }
        }
        let knot_links = roles
            .iter()
            .map(|r| if r.is_pushoff() { -1 } else { 0 })
            .collect();
        Ok(LinkingMatrix {
            roles,
            entries,
            knot_links,
        })
    }

    pub fn size(&self) -> usize {
        self.roles.len()
    }

    pub fn framings(&self) -> Vec<i64> {
        (0..self.size()).map(|i| self.entries[i][i]).collect()
    }

    fn int_matrix(&self) -> IntMatrix {
        linalg::int_matrix(&self.entries)
    }

    /// Rotation numbers of the surgery curves for a presentation.
    pub fn rotation_vector(&self, pres: &Presentation) -> Vec<i64> {
        self.roles
            .iter()
            .map(|role| match *role {
                CurveRole::PlusOne(_) => 0,
                CurveRole::ChainUnknot { chain, index } => pres.chains[chain].rots[index],
            })
            .collect()
    }

    /// The matrix with the knot appended as a Legendrian surgery curve.
    pub fn surgered(&self, ell: u32) -> IntMatrix {
        let mut rows = self.entries.clone();
        for (row, &lk) in rows.iter_mut().zip(&self.knot_links) {
            row.push(lk);
        }
        let mut last = self.knot_links.clone();
        last.push(-(i64::from(ell)) - 2);
        rows.push(last);
        linalg::int_matrix(&rows)
    }
}

/// `tb`, `rot`, `d3` and the bigrading `(A, M)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassicalInvariants {
    pub tb: i64,
    pub rot: i64,
    /// Normalized to vanish on the standard tight contact structure.
    pub d3: i64,
    #[serde(rename = "A")]
    pub alexander: i64,
    #[serde(rename = "M")]
    pub maslov: i64,
}

impl ClassicalInvariants {
    pub fn from_classical(tb: i64, rot: i64, d3: i64) -> Result<Self> {
        let (alexander, maslov) = bigrading(tb, rot, d3)?;
        Ok(ClassicalInvariants {
            tb,
            rot,
            d3,
            alexander,
            maslov,
        })
    }
}

/// `A = (tb - rot + 1)/2` and `M = 2A - d3`.
pub fn bigrading(tb: i64, rot: i64, d3: i64) -> Result<(i64, i64)> {
    let twice = tb - rot + 1;
    if twice % 2 != 0 {
        return Err(Error::NonIntegral(format!("({twice})/2")));
    }
    let a = twice / 2;
    Ok((a, 2 * a - d3))
}

/// Precomputed linear algebra for one knot type; evaluation of a
/// presentation is then a few dot products.
#[derive(Clone, Debug)]
pub struct InvariantEngine {
    pub params: TorusKnotParams,
    pub linking: LinkingMatrix,
    det: BigInt,
    det_with_knot: BigInt,
    knot_solution: Vec<Rational>,
    inverse: Vec<Vec<Rational>>,
    signature: i64,
}

impl InvariantEngine {
    pub fn new(params: &TorusKnotParams) -> Result<Self> {
        let linking = LinkingMatrix::new(params)?;
        let q = linking.int_matrix();
        let det = linalg::determinant(&q);
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let n = linking.size();
        let mut bordered = vec![vec![BigInt::zero(); n + 1]; n + 1];
        for i in 0..n {
            bordered[0][i + 1] = linking.knot_links[i].into();
            bordered[i + 1][0] = linking.knot_links[i].into();
            for j in 0..n {
                bordered[i + 1][j + 1] = q[i][j].clone();
            }
        }
        let det_with_knot = linalg::determinant(&bordered);
        let inverse = linalg::inverse(&q)?;
        let lk: Vec<Rational> = linking.knot_links.iter().map(|&x| ratio(x, 1)).collect();
        let knot_solution = inverse.iter().map(|row| linalg::dot(row, &lk)).collect();
        let signature = linalg::signature(&q);
        Ok(InvariantEngine {
            params: *params,
            linking,
            det,
            det_with_knot,
            knot_solution,
            inverse,
            signature,
        })
    }

    pub fn ambient_determinant(&self) -> &BigInt {
        &self.det
    }

    pub fn tb(&self, pres: &Presentation) -> Result<i64> {
        let base = Rational::from_integer((-1 - i64::from(pres.ell())).into());
        to_i64(&(base + Rational::new(self.det_with_knot.clone(), self.det.clone())))
    }

    pub fn rot(&self, pres: &Presentation) -> Result<i64> {
        let r = self.rational_rotations(pres);
        let base = i64::from(pres.stab_pos) - i64::from(pres.stab_neg);
        to_i64(&(Rational::from_integer(base.into()) - linalg::dot(&r, &self.knot_solution)))
    }

    pub fn d3(&self, pres: &Presentation) -> Result<i64> {
        let r = self.rational_rotations(pres);
        let c2 = linalg::bilinear(&r, &self.inverse, &r);
        let n = self.linking.size() as i64;
        let half = d3_from_surgery(&c2, self.signature, n, 2);
        to_i64(&(half + ratio(1, 2)))
    }

    pub fn evaluate(&self, pres: &Presentation) -> Result<ClassicalInvariants> {
        ClassicalInvariants::from_classical(self.tb(pres)?, self.rot(pres)?, self.d3(pres)?)
    }

    fn rational_rotations(&self, pres: &Presentation) -> Vec<Rational> {
        self.linking
            .rotation_vector(pres)
            .into_iter()
            .map(|x| ratio(x, 1))
            .collect()
    }

    /// `d3` (half-integer convention) of the contact structure obtained by
    /// Legendrian surgery on the knot.
    pub fn surgered_d3(&self, pres: &Presentation) -> Result<Rational> {
        let m = self.linking.surgered(pres.ell());
        let mut r = self.rational_rotations(pres);
        r.push(ratio(
            i64::from(pres.stab_pos) - i64::from(pres.stab_neg),
            1,
        ));
        let y = linalg::solve(&m, &r)?;
        let c2 = linalg::dot(&r, &y);
        let sigma = linalg::signature(&m);
        Ok(d3_from_surgery(&c2, sigma, m.len() as i64, 2))
    }
}

/// `(c^2 - 3 sigma - 2 chi)/4 + plus_ones` with `chi = curves + 1`.
fn d3_from_surgery(c2: &Rational, sigma: i64, curves: i64, plus_ones: i64) -> Rational {
    (c2 - ratio(3 * sigma + 2 * (curves + 1), 1)) / ratio(4, 1) + ratio(plus_ones, 1)
}

pub fn compute_tb(pres: &Presentation) -> Result<i64> {
    InvariantEngine::new(&pres.params)?.tb(pres)
}

pub fn compute_rot(pres: &Presentation) -> Result<i64> {
    InvariantEngine::new(&pres.params)?.rot(pres)
}

pub fn compute_d3(pres: &Presentation) -> Result<i64> {
    InvariantEngine::new(&pres.params)?.d3(pres)
}

pub fn classical_invariants(pres: &Presentation) -> Result<ClassicalInvariants> {
    InvariantEngine::new(&pres.params)?.evaluate(pres)
}

/// Smooth checks on a presentation's diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothReport {
    /// `|det|` of the diagram without the knot; 1 for the 3-sphere.
    pub ambient_order: u64,
    /// `|H_1|` after Legendrian surgery on the knot.
    pub surgered_order: u64,
    pub surgered_cyclic: bool,
    /// For unstabilized knots: whether the linking form matches `L(pq+1, p^2)`.
    pub lens_form_matches: Option<bool>,
}

impl SmoothReport {
    pub fn is_consistent(&self, params: &TorusKnotParams, ell: u32) -> bool {
        let expected = (params.p * params.q + 1 + i64::from(ell)) as u64;
        self.ambient_order == 1
            && self.surgered_order == expected
            && self.surgered_cyclic
            && self.lens_form_matches != Some(false)
    }
}

pub fn validate_smooth_topology(pres: &Presentation) -> Result<SmoothReport> {
    let linking = LinkingMatrix::new(&pres.params)?;
    let ambient = linalg::determinant(&linking.int_matrix()).abs();
    let surgered = linking.surgered(pres.ell());
    let order = linalg::determinant(&surgered).abs();
    let factors = linalg::smith_invariants(&surgered);
    let cyclic = factors.iter().filter(|f| !f.is_one()).count() <= 1;
    let lens_form_matches = if pres.ell() == 0 {
        let n = pres.params.p * pres.params.q + 1;
        let v = (pres.params.p * pres.params.p) % n;
        Some(same_linking_form(&surgered, &lens_chain_matrix(n, v)?)?)
    } else {
        None
    };
    let to_u64 = |x: &BigInt| x.to_u64().ok_or(Error::Overflow("matrix order"));
    Ok(SmoothReport {
        ambient_order: to_u64(&ambient)?,
        surgered_order: to_u64(&order)?,
        surgered_cyclic: cyclic,
        lens_form_matches,
    })
}

/// Linking matrix of the Legendrian chain presenting `L(u, v)`.
pub fn lens_chain_matrix(u: i64, v: i64) -> Result<IntMatrix> {
    let cf = neg_cf(u, v)?;
    Ok(chain_matrix(cf.coefficients()))
}

/// Plumbing matrix of a linear chain with framings `-a_i`.
pub fn chain_matrix(coefficients: &[i64]) -> IntMatrix {
    let n = coefficients.len();
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        rows[i][i] = -coefficients[i];
        if i + 1 < n {
            rows[i][i + 1] = 1;
            rows[i + 1][i] = 1;
        }
    }
    linalg::int_matrix(&rows)
}

/// For a matrix presenting a cyclic group of order `n`, the self-linking
/// `a/n` of some generator, returned as `(n, a mod n)`.
pub fn cyclic_linking_form(m: &[Vec<BigInt>]) -> Result<(i64, i64)> {
    let n = to_i64(&Rational::from_integer(linalg::determinant(m).abs()))?;
    if n == 0 {
        return Err(Error::SingularMatrix);
    }
    let inv = linalg::inverse(m)?;
    let size = m.len();
    let self_link = |x: &[Rational]| linalg::bilinear(x, &inv, x);
    let mut candidates: Vec<Vec<Rational>> = Vec::new();
    for i in 0..size {
        for j in i..size {
            for k in 0..n.min(8) {
                let mut x = vec![Rational::zero(); size];
                x[i] += Rational::one();
                if j != i {
                    x[j] += ratio(k, 1);
                }
                candidates.push(x);
            }
        }
    }
    for x in candidates {
        let value = self_link(&x);
        let den = to_i64(&Rational::from_integer(value.denom().clone()))?;
        if den == n {
            let num = to_i64(&Rational::from_integer(value.numer().clone()))?;
            return Ok((n, num.rem_euclid(n)));
        }
    }
    Err(Error::Verification(
        "no generator of the linking form found".into(),
    ))
}

/// Whether two matrices presenting cyclic groups have isomorphic linking forms.
pub fn same_linking_form(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Result<bool> {
    let (n, x) = cyclic_linking_form(a)?;
    let (m, y) = cyclic_linking_form(b)?;
    if n != m {
        return Ok(false);
    }
    Ok((1..=n).any(|s| mod_inverse(s, n).is_some() && (y * s % n * s % n - x).rem_euclid(n) == 0))
}
