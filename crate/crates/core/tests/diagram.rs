use torus_contact_validation as common;

use std::collections::HashSet;

use torus_contact::arith::{complementary_split, ratio, torus_knot_params};
use torus_contact::diagram::{
    enumerate_presentations, expand_contact_surgery, is_ambient_tight, is_fully_negative,
    is_fully_positive, presentation_count, Presentation, Sign,
};

fn pres(p: i64, q: i64, r0: &[i64], r1: &[i64]) -> Presentation {
    Presentation::new(
        torus_knot_params(p, q).unwrap(),
        [r0.to_vec(), r1.to_vec()],
        0,
        0,
    )
    .unwrap()
}

#[test]
fn surgery_expansions() {
    assert_eq!(expand_contact_surgery(&ratio(-2, 1)).unwrap().tbs, vec![-2]);
    assert_eq!(
        expand_contact_surgery(&ratio(-3, 2)).unwrap().tbs,
        vec![-2, -1]
    );
    assert_eq!(
        expand_contact_surgery(&ratio(-8, 5)).unwrap().tbs,
        vec![-2, -2, -1]
    );
}

#[test]
fn trefoil_counts() {
    let t = torus_knot_params(2, 3).unwrap();
    assert_eq!(enumerate_presentations(&t, 0).unwrap().len(), 4);
    assert_eq!(enumerate_presentations(&t, 1).unwrap().len(), 8);
}

#[test]
fn five_eight_count_follows_product_rule() {
    // |tb| product over the chains (3*1)*(2*2*1), times ell + 1
    let t = torus_knot_params(5, 8).unwrap();
    assert_eq!(enumerate_presentations(&t, 0).unwrap().len(), 12);
    assert_eq!(enumerate_presentations(&t, 1).unwrap().len(), 24);
}

#[test]
fn counts_match_formula_and_are_distinct() {
    for (p, q) in common::coprime_pairs(100, 200) {
        let t = torus_knot_params(p, q).unwrap();
        for ell in 0..2 {
            let all = enumerate_presentations(&t, ell).unwrap();
            assert_eq!(
                all.len() as u64,
                presentation_count(&t, ell).unwrap(),
                "({p},{q})"
            );
            let set: HashSet<_> = all.iter().collect();
            assert_eq!(set.len(), all.len());
        }
    }
}

#[test]
fn fully_extreme_predicates() {
    assert!(is_fully_positive(-1, 0) && is_fully_negative(-1, 0));
    assert!(is_fully_positive(-3, 2) && !is_fully_negative(-3, 2));
    assert!(!is_fully_positive(-3, 0) && !is_fully_negative(-3, 0));
}

#[test]
fn trefoil_tightness() {
    assert!(is_ambient_tight(&pres(2, 3, &[1], &[-1, 0])));
    assert!(!is_ambient_tight(&pres(2, 3, &[1], &[1, 0])));
    assert!(is_ambient_tight(&pres(2, 3, &[-1], &[1, 0])));
}

#[test]
fn exactly_two_balanced() {
    for (p, q) in common::coprime_pairs(100, 200) {
        let all = enumerate_presentations(&torus_knot_params(p, q).unwrap(), 0).unwrap();
        assert_eq!(
            all.iter().filter(|x| is_ambient_tight(x)).count(),
            2,
            "({p},{q})"
        );
    }
}

#[test]
fn chain_lengths_follow_split() {
    for (p, q) in common::coprime_pairs(40, 200) {
        let t = torus_knot_params(p, q).unwrap();
        let split = complementary_split(&t).unwrap();
        let x = &enumerate_presentations(&t, 0).unwrap()[0];
        assert_eq!(x.chains[0].tbs.len(), split.first.len());
        assert_eq!(x.chains[1].tbs.len(), split.second.len());
    }
}

#[test]
fn conjugation_is_an_involution() {
    for (p, q) in common::coprime_pairs(20, 60) {
        for x in enumerate_presentations(&torus_knot_params(p, q).unwrap(), 2).unwrap() {
            let c = x.conjugate();
            assert_eq!(c.conjugate(), x);
            assert_eq!(is_ambient_tight(&c), is_ambient_tight(&x));
            assert!(c.validate().is_ok());
        }
    }
}

#[test]
fn stabilization_records_sign() {
    let x = pres(2, 3, &[1], &[1, 0]);
    let y = x
        .stabilize(Sign::Positive)
        .stabilize(Sign::Negative)
        .stabilize(Sign::Negative);
    assert_eq!((y.stab_pos, y.stab_neg, y.ell()), (1, 2, 3));
    assert!(!y.knot_fully_positive() && !y.knot_fully_negative());
}

#[test]
fn rejects_illegal_rotations() {
    let t = torus_knot_params(2, 3).unwrap();
    assert!(Presentation::new(t, [vec![0], vec![1, 0]], 0, 0).is_err());
    assert!(Presentation::new(t, [vec![3], vec![1, 0]], 0, 0).is_err());
    assert!(Presentation::new(t, [vec![1], vec![1]], 0, 0).is_err());
}
