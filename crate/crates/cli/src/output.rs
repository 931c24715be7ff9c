//! JSON forms of charts and spectral sequences.

use anyhow::{bail, Result};
use serde_json::{json, Value};
use ssalg::specseq::{render_chart, BigradedPage, ChartFormat, DifferentialData, PageSelector, SpectralSequence};
use ssalg::Field;

use crate::{ChartArgs, Format};

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn spots(page: &BigradedPage) -> Value {
    Value::Array(
        page.spots()
            .map(|((s, t), dim)| json!({ "s": s, "t": t, "dim": dim }))
            .collect(),
    )
}

fn differentials<F: Field>(f: &F, d: &DifferentialData<F::Elem>) -> Value {
    Value::Array(
        d.maps()
            .filter_map(|(src, m)| {
                let rank = m.rank(f);
                let tgt = d.target(src);
                (rank > 0).then(|| json!({ "source": [src.0, src.1], "target": [tgt.0, tgt.1], "rank": rank }))
            })
            .collect(),
    )
}

pub fn spectral_sequence<F: Field>(ss: &SpectralSequence<F>, prime: u32) -> Value {
    let pages: Vec<Value> = ss
        .pages
        .iter()
        .map(|(page, d)| {
            json!({
                "r": page.r,
                "spots": spots(page),
                "differentials": differentials(&ss.field, d),
            })
        })
        .collect();
    json!({
        "kind": "spectral-sequence",
        "provenance": ss.provenance,
        "prime": prime,
        "pages": pages,
        "infinity": spots(&ss.infinity),
        "reliable_s_max": ss.reliable_s_max,
        "annotations": ss.annotations,
    })
}

fn selector<F: Field>(ss: &SpectralSequence<F>, page: Option<&str>) -> Result<PageSelector> {
    match page {
        None => Ok(PageSelector::Page(ss.first_page())),
        Some("inf" | "infinity") => Ok(PageSelector::Infinity),
        Some(r) => match r.parse::<u32>() {
            Ok(r) => Ok(PageSelector::Page(r)),
            Err(_) => bail!("--page must be a number or `inf`, got {r:?}"),
        },
    }
}

/// Emits `json` for JSON output, or draws the selected page.
pub fn chart<F: Field>(ss: &SpectralSequence<F>, args: &ChartArgs, json: impl FnOnce() -> Value) -> Result<String> {
    let format = match args.format {
        Format::Json => {
            if args.page.is_some() {
                bail!("--page applies to ascii and svg output");
            }
            return Ok(pretty(&json()));
        }
        Format::Ascii => ChartFormat::Ascii,
        Format::Svg => ChartFormat::Svg,
    };
    Ok(render_chart(ss, selector(ss, args.page.as_deref())?, format)?)
}
