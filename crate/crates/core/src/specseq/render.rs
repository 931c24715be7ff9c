//! ASCII and SVG charts in Adams coordinates `x = t − s`, `y = s`.
//!
//! The ASCII format has a title line, one row per filtration from the top
//! down (`•` for a one-dimensional spot, the dimension otherwise, `.` for
//! zero), an x-axis, and then one line per nonzero differential:
//!
//! ```text
//! \ d_2: (3, 0) -> (2, 2) rank 1
//! ```
//!
//! Every page of a sequence is drawn on the same window, so charts of
//! different pages line up.

use std::fmt::Write;

use super::{BigradedPage, DifferentialData, SpectralSequence, Spot};
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChartFormat {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PageSelector {
    Page(u32),
    Infinity,
}

struct Window {
    x: (i64, i64),
    y: (i64, i64),
}

fn adams((s, t): Spot) -> (i64, i64) {
    (t - s, s)
}

fn window<F: Field>(ss: &SpectralSequence<F>) -> Window {
    let mut points: Vec<(i64, i64)> = Vec::new();
    for (page, diff) in &ss.pages {
        points.extend(page.spots().map(|(spot, _)| adams(spot)));
        for (src, _) in diff.maps() {
            points.push(adams(src));
            points.push(adams(diff.target(src)));
        }
    }
    points.extend(ss.infinity.spots().map(|(spot, _)| adams(spot)));
    let fold = |f: fn(&(i64, i64)) -> i64| {
        points.iter().map(f).fold((0, 0), |(lo, hi), v| (lo.min(v), hi.max(v)))
    };
    Window {
        x: fold(|p| p.0),
        y: fold(|p| p.1),
    }
}

struct Arrow {
    r: u32,
    from: (i64, i64),
    to: (i64, i64),
    rank: usize,
}

fn arrows<F: Field>(f: &F, diff: Option<&DifferentialData<F::Elem>>) -> Vec<Arrow> {
    let Some(diff) = diff else {
        return Vec::new();
    };
    diff.maps()
        .filter(|(_, m)| m.rows() > 0 && m.cols() > 0)
        .filter_map(|(src, m)| {
            let rank = m.rank(f);
            (rank > 0).then(|| Arrow {
                r: diff.r,
                from: adams(src),
                to: adams(diff.target(src)),
                rank,
            })
        })
        .collect()
}

/// Renders one page of `ss`.
pub fn render_chart<F: Field>(ss: &SpectralSequence<F>, page: PageSelector, format: ChartFormat) -> Result<String> {
    let (chosen, diff, title) = match page {
        PageSelector::Page(r) => {
            let p = ss
                .page(r)
                .ok_or_else(|| Error::OutOfRange(format!("no page E_{r}; pages run {}..={}", ss.first_page(), ss.last_page())))?;
            (p, ss.differential(r), format!("E_{r}"))
        }
        PageSelector::Infinity => (&ss.infinity, None, "E_inf".to_string()),
    };
    let win = window(ss);
    let arrows = arrows(&ss.field, diff);
    Ok(match format {
        ChartFormat::Ascii => ascii(chosen, &arrows, &win, &title),
        ChartFormat::Svg => svg(chosen, &arrows, &win, &title),
    })
}

fn dim_at(page: &BigradedPage, x: i64, y: i64) -> usize {
    page.dim((y, x + y))
}

fn ascii(page: &BigradedPage, arrows: &[Arrow], win: &Window, title: &str) -> String {
    let mut out = String::new();
    let width = 3;
    let label_width = win.y.1.to_string().len().max(win.y.0.to_string().len());
    writeln!(out, "{title}  (x = t - s, y = s)").unwrap();
    for y in (win.y.0..=win.y.1).rev() {
        let mut row = format!("{y:>label_width$} |");
        for x in win.x.0..=win.x.1 {
            let cell = match dim_at(page, x, y) {
                0 => ".".to_string(),
                1 => "•".to_string(),
                d => d.to_string(),
            };
            row.push_str(&format!("{cell:>width$}"));
        }
        writeln!(out, "{}", row.trim_end()).unwrap();
    }
    let columns = (win.x.1 - win.x.0 + 1) as usize;
    writeln!(out, "{} +{}", " ".repeat(label_width), "-".repeat(columns * width)).unwrap();
    let mut axis = format!("{} ", " ".repeat(label_width + 1));
    for x in win.x.0..=win.x.1 {
        axis.push_str(&format!("{x:>width$}"));
    }
    writeln!(out, "{}", axis.trim_end()).unwrap();
    for a in arrows {
        writeln!(
            out,
            "\\ d_{}: ({}, {}) -> ({}, {}) rank {}",
            a.r, a.from.0, a.from.1, a.to.0, a.to.1, a.rank
        )
        .unwrap();
    }
    out
}

const CELL: i64 = 40;
const MARGIN: i64 = 40;

fn svg(page: &BigradedPage, arrows: &[Arrow], win: &Window, title: &str) -> String {
    let cols = win.x.1 - win.x.0 + 1;
    let rows = win.y.1 - win.y.0 + 1;
    let width = 2 * MARGIN + cols * CELL;
    let height = 2 * MARGIN + rows * CELL;
    let px = |x: i64| MARGIN + (x - win.x.0) * CELL + CELL / 2;
    let py = |y: i64| MARGIN + (win.y.1 - y) * CELL + CELL / 2;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    out.push_str("<!DOCTYPE svg PUBLIC \"-//W3C//DTD SVG 1.1//EN\" \"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd\">\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    )
    .unwrap();
    out.push_str("<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#b22222\"/></marker></defs>\n");
    writeln!(out, "<rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"white\"/>").unwrap();
    writeln!(
        out,
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">{title}</text>",
        width / 2,
        MARGIN / 2
    )
    .unwrap();
    out.push_str("<g stroke=\"#dddddd\" stroke-width=\"1\">\n");
    for x in win.x.0..=win.x.1 {
        writeln!(out, "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>", px(x), MARGIN, height - MARGIN).unwrap();
    }
    for y in win.y.0..=win.y.1 {
        writeln!(out, "<line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\"/>", py(y), MARGIN, width - MARGIN).unwrap();
    }
    out.push_str("</g>\n");
    let axis_y = height - MARGIN;
    writeln!(
        out,
        "<line x1=\"{MARGIN}\" y1=\"{axis_y}\" x2=\"{}\" y2=\"{axis_y}\" stroke=\"black\"/>",
        width - MARGIN
    )
    .unwrap();
    writeln!(out, "<line x1=\"{MARGIN}\" y1=\"{MARGIN}\" x2=\"{MARGIN}\" y2=\"{axis_y}\" stroke=\"black\"/>").unwrap();
    out.push_str("<g font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n");
    for x in win.x.0..=win.x.1 {
        writeln!(out, "<text x=\"{}\" y=\"{}\">{x}</text>", px(x), axis_y + 16).unwrap();
    }
    for y in win.y.0..=win.y.1 {
        writeln!(out, "<text x=\"{}\" y=\"{}\">{y}</text>", MARGIN - 12, py(y) + 4).unwrap();
    }
    writeln!(out, "<text x=\"{}\" y=\"{}\">t - s</text>", width / 2, height - 6).unwrap();
    writeln!(out, "<text x=\"12\" y=\"{}\">s</text>", height / 2).unwrap();
    out.push_str("</g>\n");
    out.push_str("<g stroke=\"#b22222\" stroke-width=\"1.5\" marker-end=\"url(#head)\">\n");
    for a in arrows {
        writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"><title>d_{} rank {}</title></line>",
            px(a.from.0),
            py(a.from.1),
            px(a.to.0),
            py(a.to.1),
            a.r,
            a.rank
        )
        .unwrap();
    }
    out.push_str("</g>\n");
    out.push_str("<g font-family=\"sans-serif\" font-size=\"10\">\n");
    for (spot, dim) in page.spots() {
        let (x, y) = adams(spot);
        let radius = 3 + dim.min(4);
        writeln!(out, "<circle cx=\"{}\" cy=\"{}\" r=\"{radius}\" fill=\"black\"/>", px(x), py(y)).unwrap();
        if dim > 1 {
            writeln!(out, "<text x=\"{}\" y=\"{}\">{dim}</text>", px(x) + radius as i64 + 2, py(y) - radius as i64).unwrap();
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::integer::Cyclic;
    use crate::specseq::{uass_em_chart, HomotopySummand, Provenance};
    use crate::steenrod::Prime;

    #[test]
    fn empty_sequence() {
        let ss = SpectralSequence::empty(Fp::new(2).unwrap(), Provenance::Custom, 2);
        let text = render_chart(&ss, PageSelector::Page(2), ChartFormat::Ascii).unwrap();
        assert_eq!(text, "E_2  (x = t - s, y = s)\n0 |  .\n  +---\n     0\n");
        assert!(render_chart(&ss, PageSelector::Page(7), ChartFormat::Ascii).is_err());
        assert!(render_chart(&ss, PageSelector::Infinity, ChartFormat::Svg).unwrap().ends_with("</svg>\n"));
    }

    #[test]
    fn integral_tower_is_one_column() {
        let ss = uass_em_chart(Prime::new(2).unwrap(), &[HomotopySummand { degree: 2, group: Cyclic::Free }], 4, 4).unwrap();
        let text = render_chart(&ss, PageSelector::Page(2), ChartFormat::Ascii).unwrap();
        for line in text.lines().skip(1).take(5) {
            let cells: Vec<&str> = line.split('|').nth(1).unwrap().split_whitespace().collect();
            let dots: Vec<usize> = cells.iter().enumerate().filter(|(_, c)| **c == "•").map(|(i, _)| i).collect();
            assert_eq!(dots.len(), 1, "{line}");
            assert_eq!(dots[0], 2);
        }
        assert!(!text.contains('\\'));
    }

    #[test]
    fn torsion_has_two_towers_and_arrows() {
        let g = HomotopySummand { degree: 2, group: Cyclic::Torsion(4) };
        let ss = uass_em_chart(Prime::new(2).unwrap(), &[g], 4, 4).unwrap();
        let text = render_chart(&ss, PageSelector::Page(2), ChartFormat::Ascii).unwrap();
        assert!(text.contains("\\ d_2: (3, 0) -> (2, 2) rank 1"), "{text}");
        let svg = render_chart(&ss, PageSelector::Page(2), ChartFormat::Svg).unwrap();
        assert!(svg.contains("<title>d_2 rank 1</title>"));
        assert_eq!(render_chart(&ss, PageSelector::Page(2), ChartFormat::Svg).unwrap(), svg);
    }
}
