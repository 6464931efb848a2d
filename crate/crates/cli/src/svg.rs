//! SVG 1.1 pictures of periodic tilings.

use std::fmt::Write;

use lozenge_core::lattice::Point;
use lozenge_core::{Orientation, Tiling};

#[derive(Debug, Clone, PartialEq)]
pub struct Style {
    /// Length of `u` in user units.
    pub unit: f64,
    pub fill_l: String,
    pub fill_d: String,
    pub fill_r: String,
    pub stroke: String,
    /// Draw the fundamental domain at the origin.
    pub outline: bool,
}

impl Default for Style {
    fn default() -> Self {
        Style {
            unit: 40.0,
            fill_l: "#e9c46a".into(),
            fill_d: "#2a9d8f".into(),
            fill_r: "#e76f51".into(),
            stroke: "#264653".into(),
            outline: false,
        }
    }
}

impl Style {
    fn fill(&self, o: Orientation) -> &str {
        match o {
            Orientation::L => &self.fill_l,
            Orientation::D => &self.fill_d,
            Orientation::R => &self.fill_r,
        }
    }
}

/// Corners of the lozenge covering the up-triangle at `x`.
pub fn lozenge(x: Point, o: Orientation) -> [Point; 4] {
    let (u, v) = (Point::U, Point::V);
    match o {
        Orientation::D => [x, x + u - v, x + u, x + v],
        Orientation::R => [x, x + u, x + u + v, x + v],
        Orientation::L => [x, x + u, x + v, x + v - u],
    }
}

// u = (1, 0), v = (1/2, √3/2), y pointing down
fn embed(p: Point, unit: f64) -> (f64, f64) {
    let x = p.0 as f64 + p.1 as f64 / 2.0;
    let y = p.1 as f64 * 3f64.sqrt() / 2.0;
    (x * unit, -y * unit)
}

fn path(points: &[Point], unit: f64) -> String {
    let mut d = String::new();
    for (k, p) in points.iter().enumerate() {
        let (x, y) = embed(*p, unit);
        let _ = write!(d, "{}{:.3} {:.3} ", if k == 0 { "M" } else { "L" }, x, y);
    }
    d.push('Z');
    d
}

/// `reps × reps` copies of the fundamental domain of the HNF, one `<path>`
/// per lozenge.
pub fn render(tiling: &Tiling, reps: u32, style: &Style) -> String {
    let h = *tiling.hnf();
    let (ga, gb) = (Point(h.a, 0), Point(h.c, h.b));
    let mut shapes = Vec::new();
    for k2 in 0..reps as i64 {
        for k1 in 0..reps as i64 {
            let offset = k1 * ga + k2 * gb;
            for (cell, &o) in h.cells().zip(tiling.cells()) {
                shapes.push((o, lozenge(cell.point() + offset, o)));
            }
        }
    }
    let outline = [Point(0, 0), ga, ga + gb, gb];

    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in shapes.iter().flat_map(|(_, q)| q.iter()).chain(&outline) {
        let (x, y) = embed(*p, style.unit);
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let pad = style.unit / 4.0;
    let (w, ht) = (x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.3}" height="{ht:.3}" viewBox="{:.3} {:.3} {w:.3} {ht:.3}">"#,
        x0 - pad,
        y0 - pad
    );
    let _ = writeln!(
        out,
        r#"<g stroke="{}" stroke-width="{:.3}" stroke-linejoin="round">"#,
        style.stroke,
        style.unit / 40.0
    );
    for (o, corners) in &shapes {
        let _ = writeln!(
            out,
            r#"<path class="lozenge {}" fill="{}" d="{}"/>"#,
            o.as_char(),
            style.fill(*o),
            path(corners, style.unit)
        );
    }
    let _ = writeln!(out, "</g>");
    if style.outline {
        let _ = writeln!(
            out,
            r#"<path class="domain" fill="none" stroke="black" stroke-width="{:.3}" stroke-dasharray="{:.3}" d="{}"/>"#,
            style.unit / 20.0,
            style.unit / 8.0,
            path(&outline, style.unit)
        );
    }
    out.push_str("</svg>\n");
    out
}
