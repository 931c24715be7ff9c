mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ssalg::integer::{Cyclic, GradedAbelianGroup};
use ssalg::specseq::{
    bockstein_from_chain_complex, bockstein_pages, compare_bockstein_uass, uass_em_chart, HomotopySummand,
};
use ssalg::steenrod::Prime;

use common::{bookkeeping, lattice_page_dim, presentation_complex, random_complex, random_group, stable_page};

fn prime(p: u32) -> Prime {
    Prime::new(p).unwrap()
}

fn primes() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chain_level_pages_match_homology_pages(p in primes(), seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_group(&mut rng, p, 0..=8, 1..=4, true);
        let c = presentation_complex(&g, &mut rng);
        let via_chain = bockstein_from_chain_complex(prime(p), &c, 6).unwrap();
        let direct = bockstein_pages(prime(p), &g, 6);
        prop_assert_eq!(via_chain.pages.len(), direct.pages.len());
        for ((a, _), (b, _)) in via_chain.pages.iter().zip(&direct.pages) {
            prop_assert!(a.same_dims(b), "page {}", a.r);
        }
        prop_assert!(via_chain.infinity.same_dims(&direct.infinity));
    }

    #[test]
    fn pages_match_the_lattice_description(p in primes(), seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_complex(&mut rng);
        let ss = bockstein_from_chain_complex(prime(p), &c, 6).unwrap();
        for (page, _) in &ss.pages {
            for n in -1..=4 {
                prop_assert_eq!(page.dim((0, n)), lattice_page_dim(p, &c, n, page.r), "E_{} degree {}", page.r, n);
            }
        }
        let r = stable_page(p, &c);
        for n in -1..=4 {
            prop_assert_eq!(ss.infinity.dim((0, n)), lattice_page_dim(p, &c, n, r), "E_inf degree {}", n);
        }
        prop_assert_eq!(bookkeeping(&ss), Ok(()));
    }

    #[test]
    fn bockstein_dimensions_are_accounted_for(p in primes(), seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_group(&mut rng, p, 0..=8, 1..=4, true);
        let ss = bockstein_pages(prime(p), &g, 5);
        prop_assert_eq!(bookkeeping(&ss), Ok(()));
        let e1 = &ss.pages[0].0;
        for m in -1..=10 {
            let killed: usize = ss
                .pages
                .iter()
                .map(|(_, d)| {
                    let out = d.get((0, m)).map_or(0, |x| x.rank(&ss.field));
                    let inc = d.get((0, m + 1)).map_or(0, |x| x.rank(&ss.field));
                    out + inc
                })
                .sum();
            prop_assert_eq!(e1.dim((0, m)), killed + ss.infinity.dim((0, m)), "degree {}", m);
        }
    }

    #[test]
    fn charts_agree_with_bockstein(p in primes(), seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_group(&mut rng, p, 1..=8, 2..=4, false);
        let report = compare_bockstein_uass(prime(p), &g, 6).unwrap();
        prop_assert!(report.agree, "{:?}", report.mismatches);
    }
}

#[test]
fn torsion_charts_have_the_forced_shape() {
    for p in [2u32, 3] {
        for k in 2..=3u32 {
            for n in 2..=3i64 {
                let h = [HomotopySummand {
                    degree: n,
                    group: Cyclic::Torsion((p as u64).pow(k)),
                }];
                let s_max = 8;
                let ss = uass_em_chart(prime(p), &h, s_max, k + 1).unwrap();
                assert_eq!(bookkeeping(&ss), Ok(()));
                for (page, d) in &ss.pages {
                    for (src, m) in d.maps() {
                        if m.rank(&ss.field) > 0 {
                            assert_eq!(page.r, k, "only d_{k} is nonzero");
                            let tgt = d.target(src);
                            assert_eq!((src.1 - src.0, tgt.1 - tgt.0), (n + 1, n));
                        }
                    }
                }
                let tower: Vec<i64> = ss
                    .infinity
                    .spots()
                    .filter(|((s, t), _)| t - s == n)
                    .map(|((s, _), _)| s)
                    .collect();
                assert_eq!(tower, (0..k as i64).collect::<Vec<_>>(), "p = {p}, k = {k}, n = {n}");
            }
        }
    }
}

#[test]
fn integral_factors_are_full_towers() {
    let g = GradedAbelianGroup::new().with(3, Cyclic::Free);
    let report = compare_bockstein_uass(prime(2), &g, 6).unwrap();
    assert!(report.agree);
    let ss = uass_em_chart(prime(2), &[HomotopySummand { degree: 3, group: Cyclic::Free }], 6, 3).unwrap();
    for s in 0..=6 {
        assert_eq!(ss.infinity.dim((s, 3 + s)), 1);
    }
}
