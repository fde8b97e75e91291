//! Deterministic SVG drawings: two-row matching diagrams and convex polygons.

use std::f64::consts::PI;
use std::fmt::Write;

use matchtile::matching::color_of;
use matchtile::{Edge, Matching};

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];
const SPACING: f64 = 40.0;
const MARGIN: f64 = 40.0;
const ROW_GAP: f64 = 160.0;
const RADIUS: f64 = 200.0;

fn header(out: &mut String, width: f64, height: f64, comment: &str) {
    let comment = comment.replace("--", "- -");
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    )
    .unwrap();
    writeln!(out, "<!-- {comment} -->").unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
}

fn stroke(k: Option<usize>, v: usize) -> &'static str {
    match k {
        Some(k) => PALETTE[(color_of(v, k) - 1) % PALETTE.len()],
        None => "black",
    }
}

/// Draws `2n` vertices as two rows, `v_1..v_n` on top left to right and
/// `v_{2n}..v_{n+1}` below them, so `v_{2n+1-j}` sits under `v_j`.
///
/// With `lines` set, edges between the rows are straight (diagram style);
/// otherwise every edge is a circular arc.
pub fn two_rows(m: &Matching, k: Option<usize>, lines: bool, comment: &str) -> String {
    let n = m.n();
    let width = 2.0 * MARGIN + SPACING * (n.max(1) - 1) as f64;
    let height = 2.0 * MARGIN + ROW_GAP;
    let top = MARGIN;
    let bottom = MARGIN + ROW_GAP;
    let x = |j: usize| MARGIN + SPACING * (j - 1) as f64;
    let place = |v: usize| {
        if v <= n {
            (x(v), top)
        } else {
            (x(2 * n + 1 - v), bottom)
        }
    };
    // Arcs on one row are half ellipses of a common aspect ratio, so nested
    // arcs never touch.
    let widest = m
        .edges()
        .iter()
        .filter(|&&(a, b)| (a <= n) == (b <= n))
        .map(|&(a, b)| (place(a).0 - place(b).0).abs())
        .fold(0.0_f64, f64::max);
    let aspect = if widest > 0.0 {
        (0.8 * ROW_GAP / widest).min(1.0)
    } else {
        1.0
    };

    let mut out = String::new();
    header(&mut out, width, height, comment);
    for &(a, b) in m.edges() {
        let (xa, ya) = place(a);
        let (xb, yb) = place(b);
        let color = stroke(k, a);
        if (a <= n) == (b <= n) {
            let rx = (xa - xb).abs() / 2.0;
            let ry = rx * aspect;
            // Top arcs bulge down, bottom arcs up.
            let sweep = if a <= n {
                u8::from(xa > xb)
            } else {
                u8::from(xa < xb)
            };
            writeln!(
                out,
                r#"<path class="arc" d="M {xa:.2} {ya:.2} A {rx:.2} {ry:.2} 0 0 {sweep} {xb:.2} {yb:.2}" fill="none" stroke="{color}" stroke-width="2"/>"#
            )
            .unwrap();
        } else if !lines {
            let r = ((xa - xb).powi(2) + (ya - yb).powi(2)).sqrt();
            writeln!(
                out,
                r#"<path class="arc" d="M {xa:.2} {ya:.2} A {r:.2} {r:.2} 0 0 1 {xb:.2} {yb:.2}" fill="none" stroke="{color}" stroke-width="2"/>"#
            )
            .unwrap();
        } else {
            writeln!(
                out,
                r#"<line class="line" x1="{xa:.2}" y1="{ya:.2}" x2="{xb:.2}" y2="{yb:.2}" stroke="{color}" stroke-width="2"/>"#
            )
            .unwrap();
        }
    }
    for v in 1..=2 * n {
        let (cx, cy) = place(v);
        let ty = if v <= n { cy - 12.0 } else { cy + 20.0 };
        let label = match k {
            Some(k) => format!("c{}", color_of(v, k)),
            None => format!("v{v}"),
        };
        writeln!(
            out,
            r#"<circle class="vertex" cx="{cx:.2}" cy="{cy:.2}" r="5" fill="{}"/>"#,
            stroke(k, v)
        )
        .unwrap();
        writeln!(
            out,
            r#"<text x="{cx:.2}" y="{ty:.2}" font-family="sans-serif" font-size="11" text-anchor="middle">{label}</text>"#
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// Draws a regular polygon with points `p_1..p_N` clockwise from the top and
/// the given diagonals as straight chords.
pub fn polygon(npoints: usize, diagonals: &[Edge], comment: &str) -> String {
    let size = 2.0 * (RADIUS + MARGIN);
    let center = RADIUS + MARGIN;
    let point = |p: usize| {
        let angle = 2.0 * PI * (p - 1) as f64 / npoints as f64 - PI / 2.0;
        (center + RADIUS * angle.cos(), center + RADIUS * angle.sin())
    };
    let mut out = String::new();
    header(&mut out, size, size, comment);
    for p in 1..=npoints {
        let (x1, y1) = point(p);
        let (x2, y2) = point(p % npoints + 1);
        writeln!(
            out,
            r#"<line class="hull" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="2"/>"#
        )
        .unwrap();
    }
    for &(a, b) in diagonals {
        let (x1, y1) = point(a);
        let (x2, y2) = point(b);
        writeln!(
            out,
            r##"<line class="diagonal" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#1f77b4" stroke-width="2"/>"##
        )
        .unwrap();
    }
    for p in 1..=npoints {
        let (x, y) = point(p);
        let (lx, ly) = (
            center + (x - center) * (RADIUS + 18.0) / RADIUS,
            center + (y - center) * (RADIUS + 18.0) / RADIUS + 4.0,
        );
        writeln!(
            out,
            r#"<circle class="vertex" cx="{x:.2}" cy="{y:.2}" r="4" fill="black"/>"#
        )
        .unwrap();
        writeln!(
            out,
            r#"<text x="{lx:.2}" y="{ly:.2}" font-family="sans-serif" font-size="12" text-anchor="middle">p{p}</text>"#
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(svg: &str, class: &str) -> usize {
        svg.matches(&format!(r#"class="{class}""#)).count()
    }

    #[test]
    fn nested_arcs() {
        let m = Matching::new(3, vec![(1, 6), (2, 5), (3, 4)]).unwrap();
        assert_eq!(count(&two_rows(&m, None, true, ""), "line"), 3);
        assert_eq!(count(&two_rows(&m, None, false, ""), "arc"), 3);
        let m = Matching::new(3, vec![(1, 2), (3, 4), (5, 6)]).unwrap();
        let svg = two_rows(&m, None, true, "");
        assert_eq!((count(&svg, "arc"), count(&svg, "line")), (2, 1));
    }

    #[test]
    fn polygon_chords() {
        let svg = polygon(6, &[(2, 5)], "tiling");
        assert_eq!(count(&svg, "diagonal"), 1);
        assert_eq!(count(&svg, "hull"), 6);
        assert_eq!(count(&svg, "vertex"), 6);
    }

    #[test]
    fn comments_stay_well_formed() {
        let m = Matching::new(1, vec![(1, 2)]).unwrap();
        let svg = two_rows(&m, Some(1), true, "a--b");
        assert!(svg.contains("<!-- a- -b -->"));
        assert_eq!(svg, two_rows(&m, Some(1), true, "a--b"));
    }
}
