mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ssalg::cosimplicial::trials::{ez_trial, pi00_trial, totalization_check};
use ssalg::cosimplicial::{random, BicosimplicialVectorSpace, CosimplicialVectorSpace, FiniteCosimplicialSet};
use ssalg::{Fp, Rationals};

use common::bookkeeping;

fn field(p: u32) -> Fp {
    Fp::new(p).unwrap()
}

fn convolve(a: &[usize], b: &[usize], len: usize) -> Vec<usize> {
    (0..len)
        .map(|n| (0..=n).map(|i| a.get(i).unwrap_or(&0) * b.get(n - i).unwrap_or(&0)).sum())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dold_kan_roundtrip(p in prop::sample::select(vec![2u32, 3]), top in 1usize..=4, seed: u64) {
        let f = field(p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random::cochain_complex(&f, &mut rng, top, 4);
        prop_assume!(c.dims().iter().all(|&d| d <= 3));
        let x = CosimplicialVectorSpace::from_cochain_complex(&c, top);
        let n = x.conormalize();
        prop_assert_eq!(n.dims(), c.dims());
        prop_assert_eq!(n.cohomology_dims(), c.cohomology_dims());
        prop_assert_eq!(x.cohomotopy_dims(), c.cohomology_dims()[..top].to_vec());
    }

    #[test]
    fn dold_kan_roundtrip_over_q(top in 1usize..=3, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random::cochain_complex(&Rationals, &mut rng, top, 3);
        let x = CosimplicialVectorSpace::from_cochain_complex(&c, top);
        prop_assert_eq!(x.conormalize().cohomology_dims(), c.cohomology_dims());
    }

    #[test]
    fn equalizer_is_cohomotopy_zero(p in prop::sample::select(vec![2u32, 3, 5]), seed: u64) {
        let f = field(p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random::cosimplicial(&f, &mut rng, 3);
        prop_assert_eq!(x.pi0_equalizer().unwrap().cols(), x.cohomotopy(0).unwrap());
    }

    #[test]
    fn diagonal_of_external_product_is_kunneth(seed: u64) {
        let f = field(2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random::cosimplicial(&f, &mut rng, 3);
        let d = random::cosimplicial(&f, &mut rng, 3);
        let x = BicosimplicialVectorSpace::external_product(&c, &d).unwrap();
        let expected = convolve(&c.cohomotopy_dims(), &d.cohomotopy_dims(), 3);
        prop_assert_eq!(x.diagonal().cohomotopy_dims(), expected);
    }

    #[test]
    fn totalization_converges_to_total_cohomology(
        p in prop::sample::select(vec![2u32, 3]),
        width in 0usize..=3,
        height in 0usize..=3,
        seed: u64,
    ) {
        let f = field(p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random::double_complex(&f, &mut rng, width, height, 5);
        let report = totalization_check(&d);
        prop_assert!(report.agree, "{:?}", report);
        prop_assert_eq!(bookkeeping(&d.totalization_ss()), Ok(()));
    }

    #[test]
    fn eilenberg_zilber_trials(p in prop::sample::select(vec![2u32, 3]), seed: u64) {
        let t = ez_trial(p, seed).unwrap();
        prop_assert!(t.passed(), "{:?}", t);
    }

    #[test]
    fn pi00_trials(seed: u64) {
        let t = pi00_trial(seed, 5).unwrap();
        prop_assert!(t.report.holds, "{:?}", t);
    }
}

#[test]
fn linearized_constant_set_has_cohomotopy_in_degree_zero() {
    for size in 0..=4 {
        let x = CosimplicialVectorSpace::linearize(field(3), &FiniteCosimplicialSet::constant(size, 3));
        assert_eq!(x.cohomotopy_dims(), vec![size, 0, 0]);
    }
}
