//! Reading JSON documents given as paths or inline text.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use ssalg::cosimplicial::{DoubleCochainComplex, FiniteBicosimplicialSet, FiniteCosimplicialSet};
use ssalg::integer::{Cyclic, GradedAbelianGroup, IntegralChainComplex};
use ssalg::specseq::HomotopySummand;
use ssalg::{Field, Fp, Matrix};

/// An argument starting with `{` or `[` is JSON text; anything else a path.
pub fn document<T: DeserializeOwned>(arg: &str) -> Result<T> {
    let text = if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).with_context(|| format!("cannot read {arg}"))?
    };
    serde_json::from_str(&text).with_context(|| format!("malformed JSON in {}", short(arg)))
}

fn short(arg: &str) -> String {
    if arg.len() > 40 {
        format!("{}…", &arg[..arg.char_indices().nth(40).map_or(arg.len(), |(i, _)| i)])
    } else {
        arg.to_string()
    }
}

fn degree(key: &str) -> Result<i64> {
    key.trim().parse().map_err(|_| anyhow!("degree keys must be integers, got {key:?}"))
}

/// `{"degree": ["Z", "Z/m", ...]}`
pub fn groups(arg: &str) -> Result<GradedAbelianGroup> {
    let raw: BTreeMap<String, Vec<String>> = document(arg)?;
    let mut g = GradedAbelianGroup::new();
    for (d, summands) in raw {
        let d = degree(&d)?;
        for s in summands {
            g.push(d, Cyclic::parse(&s)?);
        }
    }
    Ok(g)
}

/// `{"degree": dim}`
pub fn trivial_coefficients(arg: &str) -> Result<BTreeMap<i64, usize>> {
    let raw: BTreeMap<String, usize> = document(arg)?;
    raw.into_iter().map(|(d, n)| Ok((degree(&d)?, n))).collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SummandSpec {
    degree: i64,
    group: String,
}

/// `[{"degree": n, "group": "Z" | "Z/m"}, ...]`
pub fn homotopy(arg: &str) -> Result<Vec<HomotopySummand>> {
    let raw: Vec<SummandSpec> = document(arg)?;
    raw.into_iter()
        .map(|s| {
            Ok(HomotopySummand {
                degree: s.degree,
                group: Cyclic::parse(&s.group)?,
            })
        })
        .collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ChainSpec {
    ranks: BTreeMap<String, usize>,
    #[serde(default)]
    boundaries: BTreeMap<String, Vec<Vec<i64>>>,
}

/// `{"ranks": {"m": rank}, "boundaries": {"m": rows of ∂_m}}`
pub fn chain_complex(arg: &str) -> Result<IntegralChainComplex> {
    let raw: ChainSpec = document(arg)?;
    let ranks: BTreeMap<i64, usize> = raw.ranks.into_iter().map(|(d, r)| Ok((degree(&d)?, r))).collect::<Result<_>>()?;
    let mut boundaries = BTreeMap::new();
    for (d, rows) in raw.boundaries {
        let m = degree(&d)?;
        let cols = ranks.get(&m).copied().unwrap_or(0);
        if rows.iter().any(|r| r.len() != cols) {
            bail!("rows of the boundary out of degree {m} must have length {cols}");
        }
        let matrix = if rows.is_empty() {
            Matrix::filled(ranks.get(&(m - 1)).copied().unwrap_or(0), cols, 0)
        } else {
            Matrix::from_rows(rows, cols)
        };
        boundaries.insert(m, matrix);
    }
    Ok(IntegralChainComplex::new(ranks, boundaries)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DoubleSpec {
    prime: u32,
    dims: Vec<Vec<usize>>,
    horizontal: Vec<Vec<Vec<Vec<i64>>>>,
    vertical: Vec<Vec<Vec<Vec<i64>>>>,
}

/// `[]` stands for the zero map.
fn matrix(f: &Fp, rows: Vec<Vec<i64>>, shape: (usize, usize), what: &str) -> Result<Matrix<u32>> {
    if rows.is_empty() {
        return Ok(Matrix::zeros(f, shape.0, shape.1));
    }
    if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
        bail!("{what} must be {} x {}", shape.0, shape.1);
    }
    Ok(Matrix::from_rows(
        rows.into_iter().map(|r| r.into_iter().map(|x| f.from_i64(x)).collect()).collect(),
        shape.1,
    ))
}

/// Double complex over `F_p`: `dims[a][b]`, `horizontal[a][b]` for all but
/// the last column, `vertical[a][b]` for all but the last row; matrices as rows.
pub fn double_complex(arg: &str) -> Result<DoubleCochainComplex<Fp>> {
    let raw: DoubleSpec = document(arg)?;
    let f = Fp::new(raw.prime)?;
    let dims = raw.dims;
    let dim = |a: usize, b: usize| dims.get(a).and_then(|c| c.get(b)).copied().unwrap_or(0);
    let mut horizontal = Vec::new();
    for (a, col) in raw.horizontal.into_iter().enumerate() {
        let mut out = Vec::new();
        for (b, rows) in col.into_iter().enumerate() {
            out.push(matrix(&f, rows, (dim(a + 1, b), dim(a, b)), &format!("horizontal[{a}][{b}]"))?);
        }
        horizontal.push(out);
    }
    let mut vertical = Vec::new();
    for (a, col) in raw.vertical.into_iter().enumerate() {
        let mut out = Vec::new();
        for (b, rows) in col.into_iter().enumerate() {
            out.push(matrix(&f, rows, (dim(a, b + 1), dim(a, b)), &format!("vertical[{a}][{b}]"))?);
        }
        vertical.push(out);
    }
    Ok(DoubleCochainComplex::new(f, dims, horizontal, vertical)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SetSpec {
    sizes: Vec<usize>,
    cofaces: Vec<Vec<Vec<usize>>>,
    codegeneracies: Vec<Vec<Vec<usize>>>,
}

impl SetSpec {
    fn build(self) -> Result<FiniteCosimplicialSet> {
        Ok(FiniteCosimplicialSet::new(self.sizes, self.cofaces, self.codegeneracies)?)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BisetSpec {
    rows: Vec<SetSpec>,
    columns: Vec<SetSpec>,
}

/// `{"rows": [...], "columns": [...]}`, each a cosimplicial set given by
/// `sizes`, `cofaces[s][i]` and `codegeneracies[s][i]` as index maps.
pub fn bicosimplicial_set(arg: &str) -> Result<FiniteBicosimplicialSet> {
    let raw: BisetSpec = document(arg)?;
    let rows = raw.rows.into_iter().map(SetSpec::build).collect::<Result<_>>()?;
    let columns = raw.columns.into_iter().map(SetSpec::build).collect::<Result<_>>()?;
    Ok(FiniteBicosimplicialSet::new(rows, columns)?)
}
