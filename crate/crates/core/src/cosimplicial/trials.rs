//! Seeded randomized checks shared by the command line and the test suites.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::random;
use super::{DoubleCochainComplex, EilenbergZilberReport, Pi00Report};
use crate::error::Result;
use crate::field::{Field, Fp};

/// Levels kept in random bicosimplicial objects.
pub const TOP: usize = 3;

/// Totalization spectral sequence against the total complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TotalizationReport {
    pub agree: bool,
    /// `Σ_{a+b=n} dim E_∞^{a,b}`
    pub infinity_totals: Vec<usize>,
    pub total: Vec<usize>,
    /// Whether the input is concentrated in column 0.
    pub column: bool,
    /// For column inputs: `E_2 = E_∞` and nothing outside column 0.
    pub collapses: Option<bool>,
}

pub fn totalization_check<F: Field>(d: &DoubleCochainComplex<F>) -> TotalizationReport {
    let ss = d.totalization_ss();
    let total = d.total_cohomology();
    let mut infinity_totals = vec![0; total.len()];
    for ((a, b), dim) in ss.infinity.spots() {
        infinity_totals[(a + b) as usize] += dim;
    }
    let column = (1..=d.width()).all(|a| (0..=d.height()).all(|b| d.dim(a, b) == 0));
    let collapses = column.then(|| {
        let e2 = ss.page(2).expect("pages start at 1");
        e2.same_dims(&ss.infinity) && ss.infinity.spots().all(|((a, _), _)| a == 0)
    });
    TotalizationReport {
        agree: infinity_totals == total && collapses != Some(false),
        infinity_totals,
        total,
        column,
        collapses,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EzTrial {
    pub seed: u64,
    pub prime: u32,
    pub eilenberg_zilber: EilenbergZilberReport,
    pub totalization: TotalizationReport,
    pub column: TotalizationReport,
}

impl EzTrial {
    pub fn passed(&self) -> bool {
        self.eilenberg_zilber.agree && self.totalization.agree && self.column.agree
    }
}

/// One seeded instance: a random bicosimplicial vector space over `F_p`, its
/// binormalization, and a random single-column double complex.
pub fn ez_trial(prime: u32, seed: u64) -> Result<EzTrial> {
    let f = Fp::new(prime)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = random::bicosimplicial(&f, &mut rng, TOP);
    let eilenberg_zilber = x.eilenberg_zilber_check(TOP - 1)?;
    let totalization = totalization_check(&x.binormalize());
    let c = random::cochain_complex(&f, &mut rng, TOP, 4);
    let column = totalization_check(&DoubleCochainComplex::column(&c));
    Ok(EzTrial {
        seed,
        prime,
        eilenberg_zilber,
        totalization,
        column,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pi00Trial {
    pub seed: u64,
    pub sizes: Vec<Vec<usize>>,
    pub report: Pi00Report,
}

/// One seeded finite bicosimplicial set with at most `max_size` elements in
/// each low bidegree.
pub fn pi00_trial(seed: u64, max_size: usize) -> Result<Pi00Trial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = random::bicosimplicial_set(&mut rng, max_size);
    let sizes = (0..=x.top()).map(|a| (0..=x.top()).map(|b| x.size(a, b)).collect()).collect();
    Ok(Pi00Trial {
        seed,
        sizes,
        report: x.check_pi00_lemma()?,
    })
}
