use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Deserialize;
use serde_json::json;
use ssalg::aq::{self, CoefficientModule, GradedCommutativePresentation, Polynomial, PresentationSpec, TermSpec};
use ssalg::cosimplicial::trials::{self, totalization_check};
use ssalg::cosimplicial::BicosimplicialVectorSpace;
use ssalg::specseq::{
    bockstein_from_chain_complex, bockstein_pages, compare_bockstein_uass, render_chart, uass_em_chart, BigradedPage,
    ChartFormat, PageSelector, Provenance, SpectralSequence,
};
use ssalg::steenrod::Prime;
use ssalg::unstable::{ext_chart, verify_resolution_exactness, TrivialCoefficients};
use ssalg::Fp;

use crate::input;
use crate::output::{chart, pretty, spectral_sequence, spots};
use crate::{ChartArgs, CosimpCheck, Outcome};

fn positive(name: &str, v: i64) -> Result<()> {
    if v < 1 {
        bail!("--{name} must be positive, got {v}");
    }
    Ok(())
}

/// `E_2 = E_∞` as a sequence with a single page and no differentials.
fn ext_sequence(p: Prime, page: BigradedPage) -> SpectralSequence<Fp> {
    let mut ss = SpectralSequence::empty(p.field(), Provenance::Ext, 2);
    let mut infinity = page.clone();
    infinity.r = u32::MAX;
    ss.pages[0].0 = page;
    ss.infinity = infinity;
    ss
}

fn ext_page(p: Prime, n: u32, coeffs: &TrivialCoefficients, smax: u32, tmax: i64) -> Result<SpectralSequence<Fp>> {
    Ok(ext_sequence(p, ext_chart(p, n, coeffs, smax, tmax)?))
}

pub fn ext(prime: u32, n: u32, smax: u32, tmax: i64, coeff: Option<&str>, args: &ChartArgs) -> Result<Outcome> {
    let p = Prime::new(prime)?;
    if n < 1 {
        bail!("--n must be at least 1, got {n}");
    }
    positive("tmax", tmax)?;
    let coeffs = match coeff {
        Some(c) => TrivialCoefficients::new(input::trivial_coefficients(c)?),
        None => TrivialCoefficients::unit(),
    };
    let ss = ext_page(p, n, &coeffs, smax, tmax)?;
    let text = chart(&ss, args, || {
        let dims: BTreeMap<String, usize> = coeffs.dims().iter().map(|(d, n)| (d.to_string(), *n)).collect();
        json!({
            "kind": "ext-chart",
            "prime": prime,
            "n": n,
            "s_max": smax,
            "t_max": tmax,
            "coefficients": dims,
            "spots": spots(ss.page(2).expect("single page")),
        })
    })?;
    Ok(Outcome::ok(text))
}

pub fn resolve_check(prime: u32, n: u32, bound: i64) -> Result<Outcome> {
    let p = Prime::new(prime)?;
    positive("bound", bound)?;
    let report = verify_resolution_exactness(p, n, bound)?;
    let mut v = serde_json::to_value(&report)?;
    v["kind"] = json!("exactness-report");
    Ok(Outcome::check(report.exact, pretty(&v)))
}

pub fn bockstein(prime: u32, groups: Option<&str>, pages: u32, chain: Option<&str>, args: &ChartArgs) -> Result<Outcome> {
    let p = Prime::new(prime)?;
    positive("pages", pages as i64)?;
    let (ss, consistent) = match (groups, chain) {
        (None, None) => bail!("give --groups, --chain, or both"),
        (Some(g), None) => (bockstein_pages(p, &input::groups(g)?, pages), None),
        (g, Some(c)) => {
            let complex = input::chain_complex(c)?;
            let ss = bockstein_from_chain_complex(p, &complex, pages)?;
            let consistent = match g {
                Some(g) => Some(input::groups(g)? == complex.homology()),
                None => None,
            };
            (ss, consistent)
        }
    };
    let text = chart(&ss, args, || {
        let mut v = spectral_sequence(&ss, prime);
        if let Some(c) = consistent {
            v["homology_matches_groups"] = json!(c);
        }
        v
    })?;
    Ok(Outcome::check(consistent != Some(false), text))
}

pub fn uass_em(prime: u32, homotopy: &str, smax: i64, pages: u32, args: &ChartArgs) -> Result<Outcome> {
    let p = Prime::new(prime)?;
    positive("smax", smax)?;
    positive("pages", pages as i64)?;
    let ss = uass_em_chart(p, &input::homotopy(homotopy)?, smax, pages)?;
    let text = chart(&ss, args, || spectral_sequence(&ss, prime))?;
    Ok(Outcome::ok(text))
}

pub fn compare(prime: u32, groups: &str, pages: u32) -> Result<Outcome> {
    let p = Prime::new(prime)?;
    positive("pages", pages as i64)?;
    let report = compare_bockstein_uass(p, &input::groups(groups)?, pages)?;
    let mut v = serde_json::to_value(&report)?;
    v["kind"] = json!("agreement-report");
    Ok(Outcome::check(report.agree, pretty(&v)))
}

pub fn cosimp(
    check: CosimpCheck,
    input_arg: Option<&str>,
    trials_count: Option<u64>,
    seed: Option<u64>,
    prime: u32,
    top: usize,
) -> Result<Outcome> {
    match (input_arg, trials_count, seed) {
        (Some(doc), None, None) => single(check, doc, top),
        (None, Some(k), Some(seed)) => randomized(check, k, seed, prime),
        (None, Some(_), None) => bail!("randomized checks need --seed"),
        (Some(_), _, _) => bail!("--input cannot be combined with --trials or --seed"),
        (None, _, _) => bail!("give --input, or --trials with --seed"),
    }
}

fn single(check: CosimpCheck, doc: &str, top: usize) -> Result<Outcome> {
    match check {
        CosimpCheck::Ez => {
            if top < 1 {
                bail!("--top must be at least 1");
            }
            let d = input::double_complex(doc)?;
            let x = BicosimplicialVectorSpace::from_double_complex(&d, top);
            let ez = x.eilenberg_zilber_check(top - 1)?;
            let tot = totalization_check(&x.binormalize());
            let passed = ez.agree && tot.agree;
            let v = json!({
                "kind": "cosimp-ez",
                "top": top,
                "eilenberg_zilber": ez,
                "totalization": tot,
                "passed": passed,
            });
            Ok(Outcome::check(passed, pretty(&v)))
        }
        CosimpCheck::Totss => {
            let d = input::double_complex(doc)?;
            let tot = totalization_check(&d);
            let ss = d.totalization_ss();
            let prime = ss.field.p();
            let v = json!({
                "kind": "cosimp-totss",
                "check": tot,
                "spectral_sequence": spectral_sequence(&ss, prime),
            });
            Ok(Outcome::check(tot.agree, pretty(&v)))
        }
        CosimpCheck::Pi00 => {
            let x = input::bicosimplicial_set(doc)?;
            let report = x.check_pi00_lemma()?;
            let v = json!({ "kind": "cosimp-pi00", "report": report });
            Ok(Outcome::check(report.holds, pretty(&v)))
        }
    }
}

fn randomized(check: CosimpCheck, k: u64, seed: u64, prime: u32) -> Result<Outcome> {
    positive("trials", k as i64)?;
    let mut failures = Vec::new();
    for i in 0..k {
        let s = seed.wrapping_add(i);
        let ok = match check {
            CosimpCheck::Ez | CosimpCheck::Totss => trials::ez_trial(prime, s)?.passed(),
            CosimpCheck::Pi00 => trials::pi00_trial(s, 5)?.report.holds,
        };
        if !ok {
            failures.push(s);
        }
    }
    let name = match check {
        CosimpCheck::Ez => "ez",
        CosimpCheck::Totss => "totss",
        CosimpCheck::Pi00 => "pi00",
    };
    let v = json!({
        "kind": "cosimp-trials",
        "check": name,
        "prime": prime,
        "seed": seed,
        "trials": k,
        "passed": k - failures.len() as u64,
        "failed_seeds": failures,
    });
    Ok(Outcome::check(failures.is_empty(), pretty(&v)))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CoefficientSpec {
    target: PresentationSpec,
    #[serde(default)]
    images: BTreeMap<String, Vec<TermSpec>>,
    #[serde(default)]
    shift: i64,
}

fn images(
    source: &GradedCommutativePresentation,
    target: &GradedCommutativePresentation,
    given: &BTreeMap<String, Vec<TermSpec>>,
) -> Result<Vec<Polynomial>> {
    for name in given.keys() {
        if !source.generators().iter().any(|g| &g.name == name) {
            bail!("image given for unknown generator {name}");
        }
    }
    source
        .generators()
        .iter()
        .map(|g| match given.get(&g.name) {
            Some(terms) => Ok(target.polynomial(terms)?),
            None => Ok(Polynomial::zero()),
        })
        .collect()
}

pub fn aq(presentation: &str, coeff: &str, bound: u32) -> Result<Outcome> {
    positive("bound", bound as i64)?;
    let spec: PresentationSpec = input::document(presentation)?;
    let source = GradedCommutativePresentation::try_from(&spec)?;
    let c: CoefficientSpec = input::document(coeff)?;
    let target = GradedCommutativePresentation::try_from(&c.target)?;
    let f = images(&source, &target, &c.images)?;
    let m = CoefficientModule::new(&source, target, f, c.shift)?;
    let v = json!({
        "kind": "aq",
        "bound": bound,
        "shift": c.shift,
        "derivations": aq::derivations(&source, &m, bound)?,
        "aq_one": aq::aq_one(&source, &m, bound)?,
    });
    Ok(Outcome::ok(pretty(&v)))
}

pub fn genus(source: &str, target: &str, assign: &str, bound: u32) -> Result<Outcome> {
    positive("bound", bound as i64)?;
    let s = GradedCommutativePresentation::try_from(&input::document::<PresentationSpec>(source)?)?;
    let t = GradedCommutativePresentation::try_from(&input::document::<PresentationSpec>(target)?)?;
    let given: BTreeMap<String, Vec<TermSpec>> = input::document(assign)?;
    let phi = images(&s, &t, &given)?;
    let report = aq::genus_lift_report(&s, &t, &phi, bound)?;
    let mut v = serde_json::to_value(&report)?;
    v["kind"] = json!("genus-report");
    Ok(Outcome::ok(pretty(&v)))
}

/// The figure files written by `figures`, in order.
fn figure_set() -> Result<Vec<(&'static str, String)>> {
    let p2 = Prime::new(2)?;
    let unit = TrivialCoefficients::unit();
    let two = TrivialCoefficients::new(BTreeMap::from([(0, 1), (2, 1)]));
    let left = ext_page(p2, 2, &unit, 6, 8)?;
    let right = ext_page(p2, 2, &two, 6, 8)?;
    let z4 = input::homotopy(r#"[{"degree": 2, "group": "Z/4"}]"#)?;
    let fig2 = uass_em_chart(p2, &z4, 6, 2)?;
    Ok(vec![
        ("fig1-left.svg", render_chart(&left, PageSelector::Page(2), ChartFormat::Svg)?),
        ("fig1-right.svg", render_chart(&right, PageSelector::Page(2), ChartFormat::Svg)?),
        ("fig2-e2.svg", render_chart(&fig2, PageSelector::Page(2), ChartFormat::Svg)?),
        ("fig2-einf.svg", render_chart(&fig2, PageSelector::Infinity, ChartFormat::Svg)?),
    ])
}

pub fn figures(out: &str) -> Result<Outcome> {
    let dir = Path::new(out);
    std::fs::create_dir_all(dir).with_context(|| format!("cannot create {out}"))?;
    let mut listing = String::new();
    for (name, svg) in figure_set()? {
        let path = dir.join(name);
        std::fs::write(&path, svg).with_context(|| format!("cannot write {}", path.display()))?;
        listing.push_str(&format!("{}\n", path.display()));
    }
    Ok(Outcome::ok(listing))
}
