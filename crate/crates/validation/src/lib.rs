//! Independent reference computations used to check the library: exact
//! rational linear algebra, a push-off linking model of the surgery diagrams,
//! the semigroup form of the Alexander polynomial and plain continued
//! fraction arithmetic. Nothing here depends on the library.
#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Frac = BigRational;

pub fn frac(n: i64) -> Frac {
    Frac::from_integer(BigInt::from(n))
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn coprime_pairs(max_q: i64, max_pq: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for q in 3..=max_q {
        for p in 2..q {
            if gcd(p, q) == 1 && p * q <= max_pq {
                out.push((p, q));
            }
        }
    }
    out
}

/// `(p', q')` with `p q' - q p' = 1`, `0 < p' < p`, by search.
pub fn dual_pair(p: i64, q: i64) -> (i64, i64) {
    let pp = (1..p)
        .find(|pp| (1 + q * pp) % p == 0)
        .expect("coprime input");
    (pp, (1 + q * pp) / p)
}

/// Expansion by `c = ceil(num/den)` with plain recursion.
pub fn expand(num: i64, den: i64) -> Vec<i64> {
    if den == 0 {
        return vec![];
    }
    let c = -((-num).div_euclid(den));
    let mut rest = expand(den, c * den - num);
    rest.insert(0, c);
    rest
}

/// Right fold `c_0 - 1/(c_1 - ...)`; `None` on division by zero.
pub fn evaluate(cf: &[i64]) -> Option<Frac> {
    let mut acc: Option<Frac> = None;
    for &c in cf.iter().rev() {
        acc = Some(match acc {
            None => frac(c),
            Some(x) if x.is_zero() => return None,
            Some(x) => frac(c) - x.recip(),
        });
    }
    acc
}

pub fn chains(p: i64, q: i64) -> (Vec<i64>, Vec<i64>) {
    let (pp, qq) = dual_pair(p, q);
    (expand(p, p - pp), expand(q, qq))
}

/// Exponents of the Alexander polynomial of `T(p,q)` from the semigroup
/// `S = <p, q>`: `Delta = (1 - t) * sum_{s in S} t^s`, symmetrized.
pub fn semigroup_alexander(p: i64, q: i64) -> Vec<i64> {
    let top = (p - 1) * (q - 1);
    let in_s = |s: i64| (0..=s / p).any(|a| (s - a * p) % q == 0);
    let mut coeff = vec![0i64; (top + 1) as usize];
    for s in 0..=top {
        if in_s(s) {
            coeff[s as usize] += 1;
            if s < top {
                coeff[(s + 1) as usize] -= 1;
            }
        }
    }
    let g = top / 2;
    (0..=top)
        .rev()
        .filter(|&d| coeff[d as usize] != 0)
        .map(|d| d - g)
        .collect()
}

/// Torsion orders of `HFK^-` from the exponent gaps, largest first.
pub fn gap_orders(exponents: &[i64]) -> Vec<i64> {
    let mut v: Vec<i64> = exponents
        .chunks(2)
        .filter(|c| c.len() == 2)
        .map(|c| c[0] - c[1])
        .collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

pub fn determinant(m: &[Vec<Frac>]) -> Frac {
    let mut a = m.to_vec();
    let n = a.len();
    let mut d = Frac::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Frac::zero();
        };
        if piv != c {
            a.swap(piv, c);
            d = -d;
        }
        d *= a[c][c].clone();
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let v = &f * &a[c][k];
                a[r][k] -= v;
            }
        }
    }
    d
}

pub fn solve(m: &[Vec<Frac>], b: &[Frac]) -> Vec<Frac> {
    let n = m.len();
    let mut a: Vec<Vec<Frac>> = m
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&r| !a[r][c].is_zero()).expect("nonsingular");
        a.swap(piv, c);
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = &a[r][c] / &a[c][c];
                for k in c..=n {
                    let v = &f * &a[c][k];
                    a[r][k] -= v;
                }
            }
        }
    }
    (0..n).map(|i| &a[i][n] / &a[i][i]).collect()
}

/// Signature by repeatedly pivoting on the first nonzero diagonal entry.
pub fn signature(m: &[Vec<Frac>]) -> i64 {
    let mut a = m.to_vec();
    let n = a.len();
    let mut live: Vec<usize> = (0..n).collect();
    let mut sig = 0;
    while !live.is_empty() {
        let piv = live.iter().copied().find(|&i| !a[i][i].is_zero());
        let Some(piv) = piv else {
            let pair = live
                .iter()
                .flat_map(|&i| live.iter().map(move |&k| (i, k)))
                .find(|&(i, k)| i != k && !a[i][k].is_zero());
            let Some((i, k)) = pair else { break };
            for t in 0..n {
                let v = a[k][t].clone();
                a[i][t] += v;
            }
            for t in 0..n {
                let v = a[t][k].clone();
                a[t][i] += v;
            }
            continue;
        };
        let d = a[piv][piv].clone();
        sig += if d.is_positive() { 1 } else { -1 };
        live.retain(|&i| i != piv);
        for &i in &live {
            let f = &a[i][piv] / &d;
            for t in 0..n {
                let v = &f * &a[piv][t];
                a[i][t] -= v;
            }
        }
        for &i in &live {
            a[piv][i] = Frac::zero();
            a[i][piv] = Frac::zero();
        }
    }
    sig
}

/// Invariants from the push-off model: each chain unknot is a push-off of
/// the previous one, so within a chain the linking number of two unknots is
/// the absolute tb of the earlier one; unknots of different families link -1.
/// Rotation numbers are cumulative along a chain. Returns
/// `(det, tb, rot, d3)` with `d3` integer-normalized.
pub fn pushoff_model(
    p: i64,
    q: i64,
    rots: [&[i64]; 2],
    stab_pos: i64,
    stab_neg: i64,
) -> (Frac, Frac, Frac, Frac) {
    let (c1, c2) = chains(p, q);
    // (family, framing, rot, absolute tb, index)
    let mut curves: Vec<(usize, i64, i64, i64, usize)> = vec![(0, 0, 0, -1, 0), (1, 0, 0, -1, 0)];
    for (fam, (cf, rr)) in [(2, (&c1, rots[0])), (3, (&c2, rots[1]))] {
        let (mut tb, mut rot) = (0, 0);
        for (j, (&a, &r)) in cf.iter().zip(rr).enumerate() {
            if j == 0 {
                tb = -a;
                rot = r;
            } else {
                tb -= a - 2;
                rot += r;
            }
            curves.push((fam, tb - 1, rot, tb, j));
        }
    }
    let n = curves.len();
    let mut qm = vec![vec![Frac::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            qm[i][k] = if i == k {
                frac(curves[i].1)
            } else if curves[i].0 == curves[k].0 {
                frac(if curves[i].4 < curves[k].4 {
                    curves[i].3
                } else {
                    curves[k].3
                })
            } else {
                frac(-1)
            };
        }
    }
    let lk = vec![frac(-1); n];
    let r: Vec<Frac> = curves.iter().map(|c| frac(c.2)).collect();
    let mut bordered = vec![vec![Frac::zero(); n + 1]; n + 1];
    for i in 0..n {
        bordered[0][i + 1] = lk[i].clone();
        bordered[i + 1][0] = lk[i].clone();
        for k in 0..n {
            bordered[i + 1][k + 1] = qm[i][k].clone();
        }
    }
    let det = determinant(&qm);
    let tb = frac(-1 - stab_pos - stab_neg) + determinant(&bordered) / &det;
    let x = solve(&qm, &lk);
    let rx: Frac = r.iter().zip(&x).map(|(a, b)| a * b).sum();
    let rot = frac(stab_pos - stab_neg) - rx;
    let y = solve(&qm, &r);
    let c2: Frac = r.iter().zip(&y).map(|(a, b)| a * b).sum();
    let sig = signature(&qm);
    let d3 = (c2 - frac(3 * sig + 2 * (n as i64 + 1))) / frac(4)
        + frac(2)
        + Frac::new(BigInt::one(), BigInt::from(2));
    (det, tb, rot, d3)
}

/// Numerator of `[c_0, ..., c_m]`, 1 for the empty sequence.
pub fn numerator(cf: &[i64]) -> i64 {
    let (mut prev, mut cur) = (0i64, 1i64);
    for &c in cf {
        (prev, cur) = (cur, c * cur - prev);
    }
    cur
}

/// Rotation number in closed form: the knot's pairing with chain unknot `i`
/// is `q` times the numerator of the first chain's tail after `i`, and `p`
/// times the tail numerator on the second chain.
pub fn closed_form_rot(p: i64, q: i64, rots: [&[i64]; 2], stab_pos: i64, stab_neg: i64) -> i64 {
    let (c1, c2) = chains(p, q);
    let mut pairing = 0;
    for (i, &r) in rots[0].iter().enumerate() {
        pairing += r * q * numerator(&c1[i + 1..]);
    }
    for (i, &r) in rots[1].iter().enumerate() {
        pairing += r * p * numerator(&c2[i + 1..]);
    }
    stab_pos - stab_neg - pairing
}

/// Rotation count on the chain of `L(u, v)`.
pub fn honda(u: i64, v: i64) -> i64 {
    expand(u, v).iter().map(|a| a - 1).product()
}
