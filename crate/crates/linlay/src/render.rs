//! Arc-diagram rendering: vertices on a horizontal baseline in layout order,
//! edges as semicircular arcs. With exactly two pages the first page goes
//! above the baseline and the second below; otherwise all arcs go above,
//! distinguished by colour. Output is plain SVG 1.1 text and is byte
//! identical for identical inputs.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::layout::{verify_layout, LinearLayout};

const SPACING: i64 = 48;
const MARGIN: i64 = 40;
const VERTEX_RADIUS: i64 = 4;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
];

const HIGHLIGHT: &str = "#e6007e";

fn page_colour(page: usize) -> &'static str {
    PALETTE[(page - 1) % PALETTE.len()]
}

/// Render the layout of `g` as an SVG arc diagram. `highlight` marks edges
/// to emphasize (certificate mode); without it the layout must verify
/// cleanly.
pub fn render(g: &Graph, layout: &LinearLayout, highlight: &[Edge]) -> Result<String> {
    layout.covers(g)?;
    if highlight.is_empty() {
        let violations = verify_layout(g, layout)?;
        if let Some(v) = violations.first() {
            return Err(Error::InvalidLayout(format!(
                "layout has violations, e.g. ({}, {}) vs ({}, {}) on page {}",
                v.first.0, v.first.1, v.second.0, v.second.1, v.page
            )));
        }
    }
    for &e in highlight {
        if layout.page_of(e).is_none() {
            return Err(Error::Precondition(format!(
                "highlighted edge ({}, {}) is not in the layout",
                e.0, e.1
            )));
        }
    }

    let n = layout.order.len();
    let two_sided = layout.page_count == 2;
    let max_span = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            (layout.order.position(u) as i64 - layout.order.position(v) as i64).abs()
        })
        .max()
        .unwrap_or(0);
    let max_radius = max_span * SPACING / 2;
    let baseline = MARGIN + max_radius;
    let width = MARGIN * 2 + (n.max(1) as i64 - 1) * SPACING;
    let height = baseline + if two_sided { max_radius } else { VERTEX_RADIUS * 4 } + MARGIN;

    let x_of = |v: usize| MARGIN + layout.order.position(v) as i64 * SPACING;

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    )
    .unwrap();
    writeln!(
        out,
        "  <line x1=\"{MARGIN}\" y1=\"{baseline}\" x2=\"{}\" y2=\"{baseline}\" \
         stroke=\"#bbbbbb\" stroke-width=\"1\"/>",
        width - MARGIN
    )
    .unwrap();
    // arcs sorted by (page, edge) for stable output
    let mut arcs: Vec<(usize, Edge)> = layout.pages().map(|(e, p)| (p, e)).collect();
    arcs.sort_unstable();
    for (page, e) in arcs {
        let (mut x1, mut x2) = (x_of(e.0), x_of(e.1));
        if x1 > x2 {
            std::mem::swap(&mut x1, &mut x2);
        }
        let r = (x2 - x1) / 2;
        let below = two_sided && page == 2;
        let marked = highlight.contains(&e);
        let colour = if marked {
            HIGHLIGHT
        } else if two_sided {
            "#333333"
        } else {
            page_colour(page)
        };
        let stroke_width = if marked { 3 } else { 1 };
        // sweep 1 bulges the semicircle above the baseline, 0 below
        let sweep = if below { 0 } else { 1 };
        writeln!(
            out,
            "  <path d=\"M {x1} {baseline} A {r} {r} 0 0 {sweep} {x2} {baseline}\" \
             fill=\"none\" stroke=\"{colour}\" stroke-width=\"{stroke_width}\"/>"
        )
        .unwrap();
    }
    for pos in 0..n {
        let v = layout.order.at(pos);
        let x = MARGIN + pos as i64 * SPACING;
        writeln!(
            out,
            "  <circle cx=\"{x}\" cy=\"{baseline}\" r=\"{VERTEX_RADIUS}\" fill=\"#000000\"/>"
        )
        .unwrap();
        writeln!(
            out,
            "  <text x=\"{x}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\" \
             font-family=\"monospace\">{v}</text>",
            baseline + VERTEX_RADIUS * 4
        )
        .unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{edge, make_path};
    use crate::layout::{LayoutKind, LinearLayout, VertexOrder};
    use std::collections::BTreeMap;

    fn single_edge_layout() -> (Graph, LinearLayout) {
        let g = make_path(2);
        let pages = BTreeMap::from([(edge(0, 1), 1)]);
        let l = LinearLayout::new(LayoutKind::Stack, VertexOrder::identity(2), pages, 1).unwrap();
        (g, l)
    }

    #[test]
    fn single_edge_single_arc() {
        let (g, l) = single_edge_layout();
        let svg = render(&g, &l, &[]).unwrap();
        assert_eq!(svg.matches("<path").count(), 1);
        assert_eq!(svg.matches("<line").count(), 1);
        assert_eq!(svg.matches("<circle").count(), 2);
    }

    #[test]
    fn deterministic_output() {
        let (g, l) = single_edge_layout();
        assert_eq!(render(&g, &l, &[]).unwrap(), render(&g, &l, &[]).unwrap());
    }

    #[test]
    fn two_pages_split_above_and_below() {
        let g = crate::graph::make_cycle(4).unwrap();
        let pages = BTreeMap::from([
            (edge(0, 1), 1),
            (edge(1, 2), 1),
            (edge(2, 3), 1),
            (edge(0, 3), 2),
        ]);
        let l = LinearLayout::new(LayoutKind::Stack, VertexOrder::identity(4), pages, 2).unwrap();
        let svg = render(&g, &l, &[]).unwrap();
        assert!(svg.contains("A 72 72 0 0 0")); // the page-2 arc bulges down
        assert!(svg.contains("A 24 24 0 0 1"));
    }

    #[test]
    fn invalid_layout_rejected_without_highlight() {
        // two crossing stack edges on one page
        let g = Graph::new(4, vec![edge(0, 2), edge(1, 3)]).unwrap();
        let pages = BTreeMap::from([(edge(0, 2), 1), (edge(1, 3), 1)]);
        let l = LinearLayout::new(LayoutKind::Stack, VertexOrder::identity(4), pages, 1).unwrap();
        assert!(render(&g, &l, &[]).is_err());
        // certificate mode renders anyway, with the pair emphasized
        let svg = render(&g, &l, &[edge(0, 2), edge(1, 3)]).unwrap();
        assert_eq!(svg.matches(HIGHLIGHT).count(), 2);
    }

    #[test]
    fn highlight_must_exist() {
        let (g, l) = single_edge_layout();
        assert!(render(&g, &l, &[edge(0, 5)]).is_err());
    }
}
