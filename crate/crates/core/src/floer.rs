//! `HFK^-` of the positive torus knot `T(p,q)`, computed from its staircase
//! complex as a bigraded module over `F[U]` with `F` the two-element field.
//!
//! Gradings: the top generator sits at Maslov grading 0. Going down the
//! staircase, a horizontal step of length `h` lowers the Maslov grading by
//! `2h - 1` and a vertical step lowers it by 1. Multiplication by `U` shifts
//! `(A, M)` by `(-1, -2)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{ratio, torus_knot_params, Rational};
use crate::classify::transverse_classes;
use crate::error::{Error, Result};

/// Symmetrized Alexander polynomial of an L-space knot: exponents
/// `n_0 > n_1 > ... > n_2m` with coefficients `+1, -1, +1, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderPolynomial {
    pub exponents: Vec<i64>,
}

impl AlexanderPolynomial {
    /// Coefficient of `t^e`.
    pub fn coefficient(&self, e: i64) -> i64 {
        match self.exponents.iter().position(|&x| x == e) {
            Some(i) if i % 2 == 0 => 1,
            Some(_) => -1,
            None => 0,
        }
    }

    pub fn top(&self) -> i64 {
        self.exponents[0]
    }

    /// Number of finite towers, half the number of sign changes.
    pub fn torsion_count(&self) -> usize {
        self.exponents.len() / 2
    }
}

/// Integer polynomial coefficients of `(t^{pq}-1)(t-1)/((t^p-1)(t^q-1))`,
/// lowest degree first.
pub fn alexander_coefficients(p: i64, q: i64) -> Result<Vec<i64>> {
    torus_knot_params(p, q)?;
    let pq = (p * q) as usize;
    let mut num = vec![0i64; pq + 2];
    // (t^{pq} - 1)(t - 1) = t^{pq+1} - t^{pq} - t + 1
    num[pq + 1] += 1;
    num[pq] -= 1;
    num[1] -= 1;
    num[0] += 1;
    let quotient = divide_by_binomial(&num, p as usize)?;
    divide_by_binomial(&quotient, q as usize)
}

/// Exact division by `t^k - 1`.
fn divide_by_binomial(poly: &[i64], k: usize) -> Result<Vec<i64>> {
    let mut rem = poly.to_vec();
    let deg = rem.len() - 1;
    let mut quotient = vec![0i64; deg - k + 1];
    for i in (k..=deg).rev() {
        let c = rem[i];
        if c != 0 {
            quotient[i - k] = c;
            rem[i] = 0;
            rem[i - k] += c;
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return Err(Error::Verification(format!(
            "t^{k} - 1 does not divide the polynomial"
        )));
    }
    Ok(quotient)
}

pub fn alexander(p: i64, q: i64) -> Result<AlexanderPolynomial> {
    let coefficients = alexander_coefficients(p, q)?;
    let g = (p - 1) * (q - 1) / 2;
    let mut exponents = Vec::new();
    for (deg, &c) in coefficients.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let expected = if exponents.len() % 2 == 0 { 1 } else { -1 };
        if c != expected {
            return Err(Error::Verification(format!(
                "coefficient {c} of t^{deg} breaks the alternating pattern"
            )));
        }
        exponents.push(deg as i64 - g);
    }
    Ok(AlexanderPolynomial { exponents })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Grading {
    #[serde(rename = "A")]
    pub alexander: i64,
    #[serde(rename = "M")]
    pub maslov: i64,
}

impl Grading {
    pub fn new(alexander: i64, maslov: i64) -> Self {
        Grading { alexander, maslov }
    }

    /// Grading of `U^k` times an element of this grading.
    pub fn times_u(self, k: i64) -> Grading {
        Grading::new(self.alexander - k, self.maslov - 2 * k)
    }
}

/// `source -> U^u_power target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub u_power: i64,
}

/// Staircase complex of an L-space knot. Odd generators map to both
/// neighbors: horizontally to the previous one with a `U` power equal to the
/// exponent gap (Alexander grading preserved), vertically to the next one
/// with no `U` power (Alexander grading lowered).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StaircaseComplex {
    pub generators: Vec<Grading>,
    pub arrows: Vec<Arrow>,
}

impl StaircaseComplex {
    pub fn from_alexander(poly: &AlexanderPolynomial) -> Self {
        let e = &poly.exponents;
        let mut generators = Vec::with_capacity(e.len());
        let mut maslov = 0;
        for (i, &a) in e.iter().enumerate() {
            if i > 0 {
                maslov -= if i % 2 == 1 {
                    2 * (e[i - 1] - a) - 1
                } else {
                    1
                };
            }
            generators.push(Grading::new(a, maslov));
        }
        let mut arrows = Vec::new();
        for i in (1..e.len()).step_by(2) {
            arrows.push(Arrow {
                source: i,
                target: i - 1,
                u_power: e[i - 1] - e[i],
            });
            if i + 1 < e.len() {
                arrows.push(Arrow {
                    source: i,
                    target: i + 1,
                    u_power: 0,
                });
            }
        }
        StaircaseComplex { generators, arrows }
    }

    pub fn for_torus_knot(p: i64, q: i64) -> Result<Self> {
        Ok(Self::from_alexander(&alexander(p, q)?))
    }

    /// Arrows preserving the Alexander grading: the associated graded complex.
    pub fn associated_graded(&self) -> Vec<Arrow> {
        self.arrows
            .iter()
            .copied()
            .filter(|a| self.shifted(a).alexander == self.generators[a.source].alexander)
            .collect()
    }

    fn shifted(&self, a: &Arrow) -> Grading {
        self.generators[a.target].times_u(a.u_power)
    }

    /// Every arrow lowers the Maslov grading by exactly 1 and does not raise
    /// the Alexander grading.
    pub fn gradings_consistent(&self) -> bool {
        self.arrows.iter().all(|a| {
            let from = self.generators[a.source];
            let to = self.shifted(a);
            a.u_power >= 0 && to.maslov == from.maslov - 1 && to.alexander <= from.alexander
        })
    }

    /// `d∘d` over `F[U]`, as a map from (source, target, U power) to parity;
    /// empty when the differential squares to zero.
    pub fn d_squared(&self, arrows: &[Arrow]) -> Vec<(usize, usize, i64)> {
        let mut acc: BTreeMap<(usize, usize, i64), bool> = BTreeMap::new();
        for a in arrows {
            for b in arrows.iter().filter(|b| b.source == a.target) {
                let slot = acc
                    .entry((a.source, b.target, a.u_power + b.u_power))
                    .or_insert(false);
                *slot = !*slot;
            }
        }
        acc.into_iter()
            .filter(|&(_, odd)| odd)
            .map(|(k, _)| k)
            .collect()
    }

    /// Homology of the associated graded complex, i.e. `HFK^-`.
    pub fn knot_homology(&self) -> Result<GradedModule> {
        homology(&self.generators, &self.associated_graded())
    }

    /// Homology of the full complex, which should be a single free tower.
    pub fn total_homology(&self) -> Result<GradedModule> {
        homology(&self.generators, &self.arrows)
    }
}

/// Homology over `F[U]` of a two-step complex whose arrows are homogeneous
/// in the Maslov grading. Arrows must go from a set of sources to a disjoint
/// set of targets.
///
/// Graded elimination: always pivot on an entry of least `U` degree, so the
/// pivot divides every other entry of its row and column. Row and column
/// operations then keep every basis element homogeneous.
pub fn homology(generators: &[Grading], arrows: &[Arrow]) -> Result<GradedModule> {
    let sources: Vec<usize> = dedup(arrows.iter().map(|a| a.source));
    let targets: Vec<usize> = dedup(arrows.iter().map(|a| a.target));
    if sources.iter().any(|s| targets.contains(s)) {
        return Err(Error::Verification("complex is not two-step".into()));
    }
    for a in arrows {
        let to = generators[a.target].times_u(a.u_power);
        if to.maslov != generators[a.source].maslov - 1 || a.u_power < 0 {
            return Err(Error::Verification(format!(
                "arrow {a:?} is not homogeneous"
            )));
        }
    }
    let degree = |r: usize, c: usize| (generators[r].maslov - generators[c].maslov + 1) / 2;
    let mut rows: Vec<usize> = targets.clone();
    let mut cols: Vec<usize> = sources.clone();
    // Over F_2 with homogeneous entries an entry is determined by its support.
    let mut entry: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    for a in arrows {
        let slot = entry.entry((a.target, a.source)).or_insert(false);
        *slot = !*slot;
    }
    entry.retain(|_, v| *v);
    let mut towers = Vec::new();
    loop {
        let pivot = entry
            .keys()
            .copied()
            .min_by_key(|&(r, c)| (degree(r, c), r, c));
        let Some((r, c)) = pivot else { break };
        let pivot_row: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&c2| entry.contains_key(&(r, c2)))
            .collect();
        let others: Vec<usize> = rows
            .iter()
            .copied()
            .filter(|&r2| r2 != r && entry.contains_key(&(r2, c)))
            .collect();
        for r2 in others {
            for &c2 in &pivot_row {
                toggle(&mut entry, (r2, c2));
            }
        }
        for c2 in pivot_row {
            entry.remove(&(r, c2));
        }
        let d = degree(r, c);
        if d > 0 {
            towers.push(Tower::finite(d, generators[r].times_u(d - 1)));
        }
        rows.retain(|&x| x != r);
        cols.retain(|&x| x != c);
    }
    let paired: Vec<usize> = sources.iter().chain(&targets).copied().collect();
    for (i, g) in generators.iter().enumerate() {
        let free = rows.contains(&i) || cols.contains(&i) || !paired.contains(&i);
        if free {
            towers.push(Tower::free(*g));
        }
    }
    Ok(GradedModule::new(towers))
}

fn dedup(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = it.collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn toggle(entry: &mut BTreeMap<(usize, usize), bool>, key: (usize, usize)) {
    if entry.remove(&key).is_none() {
        entry.insert(key, true);
    }
}

/// One summand `F[U]/(U^order)` or `F[U]`.
///
/// For a finite tower `grading` is its bottom, the element killed by `U`;
/// for the free tower it is the generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tower {
    /// `None` for the free tower.
    pub order: Option<i64>,
    pub grading: (i64, i64),
}

impl Tower {
    pub fn finite(order: i64, bottom: Grading) -> Self {
        Tower {
            order: Some(order),
            grading: (bottom.alexander, bottom.maslov),
        }
    }

    pub fn free(generator: Grading) -> Self {
        Tower {
            order: None,
            grading: (generator.alexander, generator.maslov),
        }
    }

    /// Grading of the tower's top element.
    pub fn top(&self) -> (i64, i64) {
        let (a, m) = self.grading;
        match self.order {
            Some(h) => (a + h - 1, m + 2 * (h - 1)),
            None => (a, m),
        }
    }

    /// Whether the tower has a nonzero element in grading `(a, m)`.
    pub fn contains(&self, (a, m): (i64, i64)) -> bool {
        let (ta, tm) = self.top();
        let k = ta - a;
        k >= 0 && tm - m == 2 * k && self.order.is_none_or(|h| k < h)
    }
}

#[derive(Serialize, Deserialize)]
#[allow(non_snake_case)]
struct TowerJson {
    order: Option<i64>,
    bottom_A: i64,
    bottom_M: i64,
}

impl Serialize for Tower {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TowerJson {
            order: self.order,
            bottom_A: self.grading.0,
            bottom_M: self.grading.1,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tower {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let t = TowerJson::deserialize(d)?;
        Ok(Tower {
            order: t.order,
            grading: (t.bottom_A, t.bottom_M),
        })
    }
}

/// A finitely generated bigraded `F[U]`-module as a sorted multiset of towers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedModule {
    pub towers: Vec<Tower>,
}

impl GradedModule {
    pub fn new(mut towers: Vec<Tower>) -> Self {
        towers.sort_by(|a, b| b.cmp(a));
        GradedModule { towers }
    }

    pub fn free_rank(&self) -> usize {
        self.towers.iter().filter(|t| t.order.is_none()).count()
    }

    /// Orders of finite towers, largest first.
    pub fn torsion_orders(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.towers.iter().filter_map(|t| t.order).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn top_alexander(&self) -> Option<i64> {
        self.towers.iter().map(|t| t.top().0).max()
    }

    /// Whether `U` kills every element of the module in grading `g`.
    pub fn u_annihilates(&self, g: (i64, i64)) -> bool {
        self.towers
            .iter()
            .filter(|t| t.contains(g))
            .all(|t| t.order.is_some() && t.grading == g)
    }

    /// Graded Euler characteristic of the module's reduction mod `U`, by
    /// Alexander grading: a finite tower of order `h` with top in `(a, m)`
    /// contributes `(-1)^m (t^a - t^(a-h))`, a free tower `(-1)^m t^a`.
    pub fn euler_characteristic(&self) -> BTreeMap<i64, i64> {
        let mut chi = BTreeMap::new();
        for t in &self.towers {
            let (a, m) = t.top();
            let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
            *chi.entry(a).or_insert(0) += sign;
            if let Some(h) = t.order {
                *chi.entry(a - h).or_insert(0) -= sign;
            }
        }
        chi.retain(|_, v| *v != 0);
        chi
    }
}

/// `HFK^-(T(p,q))` from the staircase.
pub fn hfk_minus(p: i64, q: i64) -> Result<GradedModule> {
    StaircaseComplex::for_torus_knot(p, q)?.knot_homology()
}

/// `HFK^-(T(p,q))` read off the exponents directly: generator `2j-2` carries
/// a tower of order `n_(2j-2) - n_(2j-1)`, the last generator the free tower.
pub fn hfk_minus_closed_form(p: i64, q: i64) -> Result<GradedModule> {
    let poly = alexander(p, q)?;
    let staircase = StaircaseComplex::from_alexander(&poly);
    let e = &poly.exponents;
    let mut towers = Vec::new();
    for j in (0..e.len() - 1).step_by(2) {
        let h = e[j] - e[j + 1];
        towers.push(Tower::finite(h, staircase.generators[j].times_u(h - 1)));
    }
    towers.push(Tower::free(
        *staircase.generators.last().expect("nonempty staircase"),
    ));
    Ok(GradedModule::new(towers))
}

/// Bigradings of the bottoms of the finite towers, with multiplicity.
pub fn tower_bottoms(module: &GradedModule) -> Vec<(i64, i64)> {
    module
        .towers
        .iter()
        .filter(|t| t.order.is_some())
        .map(|t| t.grading)
        .collect()
}

/// `V_i` for `i >= 0`, from the Alexander coefficients of an L-space knot.
/// Zero from the genus on.
pub fn v_sequence(p: i64, q: i64) -> Result<Vec<i64>> {
    let poly = alexander(p, q)?;
    let g = poly.top();
    Ok((0..=g)
        .map(|i| (1..=g).map(|j| j * poly.coefficient(i + j)).sum())
        .collect())
}

/// d-invariant of `n`-surgery on `T(p,q)` in the spin-c structure labelled
/// `i` in `0..n`:
/// `((n - 2i)^2 - n)/(4n) - 2 max(V_i, V_(n-i))`.
pub fn surgery_d_invariant(vs: &[i64], n: i64, i: i64) -> Rational {
    let v = |k: i64| {
        usize::try_from(k)
            .ok()
            .and_then(|k| vs.get(k))
            .copied()
            .unwrap_or(0)
    };
    let lens = ratio((n - 2 * i) * (n - 2 * i) - n, 4 * n);
    lens - ratio(2 * v(i).max(v(n - i)), 1)
}

/// Placement of the transverse invariants inside `HFK^-`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchReport {
    pub p: i64,
    pub q: i64,
    pub realized: Vec<(i64, i64)>,
    pub unrealized_bottoms: Vec<(i64, i64)>,
    pub transverse_count: usize,
    pub all_at_bottoms: bool,
    pub all_u_torsion_one: bool,
}

impl MatchReport {
    pub fn passed(&self) -> bool {
        self.all_at_bottoms
            && self.all_u_torsion_one
            && self.realized.len() == self.transverse_count
    }
}

/// Checks that each strongly non-loose transverse class has its invariant at
/// a distinct finite-tower bottom of `HFK^-`.
pub fn match_invariants(p: i64, q: i64) -> Result<MatchReport> {
    let params = torus_knot_params(p, q)?;
    let module = hfk_minus(p, q)?;
    let mut bottoms = tower_bottoms(&module);
    let classes = transverse_classes(&params)?;
    let mut realized = Vec::new();
    let mut all_at_bottoms = true;
    let mut all_u_torsion_one = true;
    for class in &classes {
        let g = (class.invariants.alexander, class.invariants.maslov);
        all_u_torsion_one &= module.u_annihilates(g);
        match bottoms.iter().position(|&b| b == g) {
            Some(i) => {
                bottoms.remove(i);
                realized.push(g);
            }
            None => all_at_bottoms = false,
        }
    }
    realized.sort_unstable();
    bottoms.sort_unstable();
    Ok(MatchReport {
        p,
        q,
        realized,
        unrealized_bottoms: bottoms,
        transverse_count: classes.len(),
        all_at_bottoms,
        all_u_torsion_one,
    })
}

/// Whether the Euler characteristic of `module` is the Alexander polynomial.
pub fn euler_matches_alexander(module: &GradedModule, poly: &AlexanderPolynomial) -> bool {
    let chi = module.euler_characteristic();
    let expected: BTreeMap<i64, i64> = poly
        .exponents
        .iter()
        .map(|&e| (e, poly.coefficient(e)))
        .collect();
    chi == expected
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders(m: &GradedModule) -> (usize, Vec<i64>) {
        (m.free_rank(), m.torsion_orders())
    }

    #[test]
    fn alexander_exponents() {
        assert_eq!(alexander(2, 3).unwrap().exponents, vec![1, 0, -1]);
        assert_eq!(alexander(3, 4).unwrap().exponents, vec![3, 2, 0, -2, -3]);
        assert_eq!(
            alexander(5, 8).unwrap().exponents,
            vec![14, 13, 9, 8, 6, 5, 4, 3, 1, 0, -1, -3, -4, -5, -6, -8, -9, -13, -14]
        );
    }

    #[test]
    fn staircase_gradings() {
        let s = StaircaseComplex::for_torus_knot(2, 3).unwrap();
        assert_eq!(
            s.generators,
            vec![
                Grading::new(1, 0),
                Grading::new(0, -1),
                Grading::new(-1, -2)
            ]
        );
        assert!(s.gradings_consistent());
        assert!(s.d_squared(&s.arrows).is_empty());
    }

    #[test]
    fn known_modules() {
        assert_eq!(orders(&hfk_minus(2, 7).unwrap()), (1, vec![1, 1, 1]));
        assert_eq!(orders(&hfk_minus(3, 4).unwrap()), (1, vec![2, 1]));
        assert_eq!(
            orders(&hfk_minus(5, 8).unwrap()),
            (1, vec![4, 2, 2, 1, 1, 1, 1, 1, 1])
        );
    }

    #[test]
    fn five_eight_bottoms() {
        let bottoms = tower_bottoms(&hfk_minus(5, 8).unwrap());
        for b in [(-12, -26), (-2, -12), (4, -6), (14, 0)] {
            assert!(bottoms.contains(&b), "{b:?} missing from {bottoms:?}");
        }
        assert_eq!(bottoms.len(), 9);
    }

    #[test]
    fn closed_form_agrees() {
        for (p, q) in [(2, 3), (3, 5), (4, 7), (5, 8), (7, 10)] {
            assert_eq!(
                hfk_minus(p, q).unwrap(),
                hfk_minus_closed_form(p, q).unwrap()
            );
        }
    }

    #[test]
    fn total_homology_is_one_tower() {
        for (p, q) in [(2, 3), (3, 4), (5, 8)] {
            let m = StaircaseComplex::for_torus_knot(p, q)
                .unwrap()
                .total_homology()
                .unwrap();
            assert_eq!(orders(&m), (1, vec![]));
        }
    }

    #[test]
    fn euler_characteristic() {
        for (p, q) in [(2, 3), (3, 7), (5, 8)] {
            assert!(euler_matches_alexander(
                &hfk_minus(p, q).unwrap(),
                &alexander(p, q).unwrap()
            ));
        }
    }

    #[test]
    fn tower_membership() {
        let t = Tower::finite(2, Grading::new(-2, -12));
        assert!(t.contains((-2, -12)) && t.contains((-1, -10)));
        assert!(!t.contains((0, -8)));
        let free = Tower::free(Grading::new(-1, -2));
        assert!(free.contains((-3, -6)) && !free.contains((0, 0)));
        let m = hfk_minus(2, 3).unwrap();
        assert!(m.u_annihilates((1, 0)));
        assert!(!m.u_annihilates((-1, -2)));
        assert_eq!(m.top_alexander(), Some(1));
    }

    #[test]
    fn d_invariants_of_trefoil_surgery() {
        // +1 surgery on the right-handed trefoil is the Poincare sphere with d = -2.
        let vs = v_sequence(2, 3).unwrap();
        assert_eq!(vs, vec![1, 0]);
        assert_eq!(surgery_d_invariant(&vs, 1, 0), ratio(-2, 1));
    }
}
