use torus_contact_validation as common;

use std::collections::BTreeSet;

use torus_contact::arith::torus_knot_params;
use torus_contact::diagram::{enumerate_presentations, Presentation};
use torus_contact::lens::{figure3_reduce, surjectivity_check, LensChain};

#[test]
fn trefoil_reduction() {
    let t = torus_knot_params(2, 3).unwrap();
    let x = Presentation::new(t, [vec![1], vec![-1, 0]], 0, 0).unwrap();
    assert_eq!(
        figure3_reduce(&x).unwrap(),
        LensChain {
            framings: vec![-4, -2],
            rots: vec![2, 0]
        }
    );
    let images: BTreeSet<LensChain> = enumerate_presentations(&t, 0)
        .unwrap()
        .iter()
        .map(|x| figure3_reduce(x).unwrap())
        .collect();
    assert_eq!(images.len(), 3);
    let merged: Vec<i64> = images.iter().map(|c| c.rots[0]).collect();
    assert_eq!(merged, vec![-2, 0, 2]);
}

#[test]
fn surjective_for_small_knots() {
    for (p, q) in common::coprime_pairs(12, i64::MAX) {
        let report = surjectivity_check(&torus_knot_params(p, q).unwrap()).unwrap();
        assert!(report.passed(), "{report:?}");
        let n = p * q + 1;
        assert_eq!(report.honda_count as i64, common::honda(n, p * p % n));
    }
}

#[test]
fn reduction_drops_one_unknot() {
    for (p, q) in common::coprime_pairs(15, i64::MAX) {
        let t = torus_knot_params(p, q).unwrap();
        let x = &enumerate_presentations(&t, 0).unwrap()[0];
        let chain = figure3_reduce(x).unwrap();
        assert_eq!(
            chain.framings.len(),
            x.chains[0].tbs.len() + x.chains[1].tbs.len() - 1
        );
        assert!(chain.is_legal());
    }
}

#[test]
fn reduction_requires_unstabilized_knot() {
    let t = torus_knot_params(2, 3).unwrap();
    let x = &enumerate_presentations(&t, 1).unwrap()[0];
    assert!(figure3_reduce(x).is_err());
}
