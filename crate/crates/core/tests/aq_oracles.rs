mod common;

use proptest::prelude::*;
use ssalg::aq::{aq_one, derivations, CoefficientModule, GradedCommutativePresentation, Polynomial};

use common::aq::{at, brute_force_derivations, build, gens, identity_images, minimal_relations, q, random_relation};

fn presentation() -> impl Strategy<Value = (Vec<u32>, Vec<(u32, Vec<i64>)>)> {
    (
        prop::collection::vec(1u32..=4, 1..=3),
        prop::collection::vec((2u32..=6, prop::collection::vec(-2i64..=2, 1..=4)), 0..=2),
    )
}

const BOUND: u32 = 8;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn derivations_match_leibniz_brute_force((degrees, rels) in presentation(), t in 0i64..=2, to_self: bool) {
        let p = build(&degrees, &rels, false);
        let m = if to_self {
            CoefficientModule::new(&p, p.clone(), identity_images(&p), t).unwrap()
        } else {
            CoefficientModule::zero_map(&p, GradedCommutativePresentation::rationals(), t).unwrap()
        };
        for entry in derivations(&p, &m, BOUND).unwrap() {
            prop_assert_eq!(entry.dim, brute_force_derivations(&p, &m, entry.internal_degree, BOUND as i64),
                "internal degree {}", entry.internal_degree);
        }
    }

    #[test]
    fn aq_one_counts_minimal_relations((degrees, rels) in presentation()) {
        let p = build(&degrees, &rels, true);
        let m = CoefficientModule::zero_map(&p, GradedCommutativePresentation::rationals(), 0).unwrap();
        for entry in aq_one(&p, &m, BOUND).unwrap() {
            let expected = if entry.internal_degree > 0 { minimal_relations(&p, entry.internal_degree as u32) } else { 0 };
            prop_assert_eq!(entry.dim, expected, "internal degree {}", entry.internal_degree);
        }
    }

    #[test]
    fn presentation_independence((degrees, rels) in presentation(), extra in prop::collection::vec(-2i64..=2, 1..=3), t in 0i64..=2) {
        let p = build(&degrees, &rels, false);
        prop_assume!(!p.relations().is_empty());
        // a redundant relation: a combination of multiples of existing ones
        let r0 = &p.relations()[0];
        let mult = random_relation(&p, degrees[0], &extra);
        let mut redundant = p.multiply(&mult, r0);
        if p.homogeneous_degree(&redundant).unwrap() > BOUND || redundant.is_zero() {
            redundant = r0.clone();
        }
        let mut relations = p.relations().to_vec();
        relations.push(redundant);
        let p2 = GradedCommutativePresentation::new(p.generators().to_vec(), relations).unwrap();
        let m1 = CoefficientModule::new(&p, p.clone(), identity_images(&p), t).unwrap();
        let m2 = CoefficientModule::new(&p2, p.clone(), identity_images(&p), t).unwrap();
        let bound = BOUND + 2;
        let (d1, d2) = (derivations(&p, &m1, bound).unwrap(), derivations(&p2, &m2, bound).unwrap());
        let (a1, a2) = (aq_one(&p, &m1, bound).unwrap(), aq_one(&p2, &m2, bound).unwrap());
        for e in -(bound as i64)..=(bound as i64 + 4) {
            prop_assert_eq!(at(&d1, e), at(&d2, e), "AQ0 in internal degree {}", e);
            let reliable = a2.iter().find(|x| x.internal_degree == e).map_or(true, |x| x.reliable)
                && a1.iter().find(|x| x.internal_degree == e).map_or(true, |x| x.reliable);
            if reliable {
                prop_assert_eq!(at(&a1, e), at(&a2, e), "AQ1 in internal degree {}", e);
            }
        }
    }

    #[test]
    fn free_algebras_have_no_aq_one(degrees in prop::collection::vec(1u32..=5, 1..=3), t in 0i64..=3, to_self: bool) {
        let p = GradedCommutativePresentation::free(gens(&degrees)).unwrap();
        let m = if to_self {
            CoefficientModule::new(&p, p.clone(), identity_images(&p), t).unwrap()
        } else {
            CoefficientModule::zero_map(&p, GradedCommutativePresentation::rationals(), t).unwrap()
        };
        prop_assert!(aq_one(&p, &m, BOUND).unwrap().iter().all(|x| x.dim == 0));
    }
}

#[test]
fn truncated_polynomial_and_product() {
    let x = GradedCommutativePresentation::new(gens(&[2]), vec![Polynomial::term(vec![2], q(1))]).unwrap();
    let mx = CoefficientModule::zero_map(&x, GradedCommutativePresentation::rationals(), 0).unwrap();
    let one = aq_one(&x, &mx, BOUND).unwrap();
    assert_eq!(at(&one, 4), 1);
    assert_eq!(one.iter().map(|e| e.dim).sum::<usize>(), 1);
    let xy = GradedCommutativePresentation::new(gens(&[2, 2]), vec![Polynomial::term(vec![1, 1], q(1))]).unwrap();
    let mxy = CoefficientModule::zero_map(&xy, GradedCommutativePresentation::rationals(), 0).unwrap();
    let one = aq_one(&xy, &mxy, BOUND).unwrap();
    assert_eq!(at(&one, 4), 1);
    assert_eq!(one.iter().map(|e| e.dim).sum::<usize>(), 1);
}

#[test]
fn exterior_generator_in_relation() {
    // odd generators: x² = 0 is automatic, so the square of a degree-3 class adds nothing
    let p = GradedCommutativePresentation::new(gens(&[3]), vec![Polynomial::term(vec![2], q(1))]).unwrap();
    assert!(p.relations().is_empty());
    let m = CoefficientModule::zero_map(&p, GradedCommutativePresentation::rationals(), 0).unwrap();
    assert!(aq_one(&p, &m, BOUND).unwrap().iter().all(|x| x.dim == 0));
    assert_eq!(at(&derivations(&p, &m, BOUND).unwrap(), 3), 1);
}
