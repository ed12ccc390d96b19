use torus_contact_validation as common;

use std::collections::BTreeSet;

use torus_contact::floer::{
    alexander, alexander_coefficients, euler_matches_alexander, hfk_minus, hfk_minus_closed_form,
    match_invariants, tower_bottoms, v_sequence, StaircaseComplex,
};

fn shape(p: i64, q: i64) -> (usize, Vec<i64>) {
    let m = hfk_minus(p, q).unwrap();
    (m.free_rank(), m.torsion_orders())
}

#[test]
fn alexander_examples() {
    assert_eq!(alexander(2, 3).unwrap().exponents, vec![1, 0, -1]);
    assert_eq!(alexander(3, 4).unwrap().exponents, vec![3, 2, 0, -2, -3]);
    assert_eq!(alexander(5, 8).unwrap().top(), 14);
}

#[test]
fn alexander_matches_semigroup() {
    for (p, q) in common::coprime_pairs(40, i64::MAX) {
        assert_eq!(
            alexander(p, q).unwrap().exponents,
            common::semigroup_alexander(p, q),
            "({p},{q})"
        );
        let coeffs = alexander_coefficients(p, q).unwrap();
        assert_eq!(coeffs.iter().sum::<i64>(), 1);
    }
}

#[test]
fn tower_examples() {
    for n in 2..=10 {
        assert_eq!(shape(2, 2 * n - 1), (1, vec![1; n as usize - 1]));
    }
    for n in 2..=8 {
        assert_eq!(shape(n, n + 1), (1, (1..n).rev().collect()));
    }
    assert_eq!(shape(5, 8), (1, vec![4, 2, 2, 1, 1, 1, 1, 1, 1]));
}

#[test]
fn five_eight_bottoms() {
    let bottoms: BTreeSet<(i64, i64)> = tower_bottoms(&hfk_minus(5, 8).unwrap())
        .into_iter()
        .collect();
    for g in [(-12, -26), (-2, -12), (4, -6), (14, 0)] {
        assert!(bottoms.contains(&g), "{g:?}");
    }
    assert_eq!(tower_bottoms(&hfk_minus(2, 3).unwrap()).len(), 1);
}

#[test]
fn staircase_matches_closed_form() {
    for (p, q) in common::coprime_pairs(30, i64::MAX) {
        let m = hfk_minus(p, q).unwrap();
        assert_eq!(m, hfk_minus_closed_form(p, q).unwrap(), "({p},{q})");
        assert_eq!(
            m.torsion_orders(),
            common::gap_orders(&common::semigroup_alexander(p, q))
        );
    }
}

#[test]
fn complex_structure() {
    for (p, q) in common::coprime_pairs(25, i64::MAX) {
        let c = StaircaseComplex::for_torus_knot(p, q).unwrap();
        assert!(c.gradings_consistent());
        assert!(c.d_squared(&c.arrows).is_empty());
        let total = c.total_homology().unwrap();
        assert_eq!((total.free_rank(), total.towers.len()), (1, 1));
        // the full complex computes HF^- of the sphere: a tower topped at M = 0
        assert_eq!(total.towers[0].top().1, 0);
        let m = c.knot_homology().unwrap();
        assert!(euler_matches_alexander(&m, &alexander(p, q).unwrap()));
        let g = (p - 1) * (q - 1) / 2;
        assert_eq!(m.top_alexander(), Some(g));
        for t in m.towers.iter().filter(|t| t.order.is_some()) {
            assert!(m.u_annihilates(t.grading));
        }
    }
}

#[test]
fn match_examples() {
    for n in 2..=6 {
        let r = match_invariants(2, 2 * n - 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.realized.len() as i64, n - 1);
        assert!(r.unrealized_bottoms.is_empty());
    }
    let r = match_invariants(5, 8).unwrap();
    assert!(r.passed());
    assert_eq!((r.realized.len(), r.unrealized_bottoms.len()), (4, 5));
    for (p, q) in common::coprime_pairs(12, 60) {
        let r = match_invariants(p, q).unwrap();
        assert!(r.passed(), "({p},{q})");
        let g = (p - 1) * (q - 1) / 2;
        assert!(
            r.realized.contains(&(g, 0)),
            "top bottom unrealized at ({p},{q})"
        );
    }
}

#[test]
fn v_sequence_is_monotone() {
    for (p, q) in common::coprime_pairs(20, i64::MAX) {
        let v = v_sequence(p, q).unwrap();
        assert!(v.windows(2).all(|w| w[0] >= w[1] && w[0] - w[1] <= 1));
        assert_eq!(*v.last().unwrap(), 0);
    }
}
