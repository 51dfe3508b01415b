//! SVG figures. Every geometric object is computed exactly and converted to
//! `f64` only when written out.

use std::fmt::Write as _;

use crate::circles::Circle;
use crate::config::{circle_chain, derive_points, DerivedData};
use crate::error::{GeomError, Result};
use crate::kernel::{pencil_of, Field, ProjLine, ProjPoint, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct Palette {
    pub points: String,
    pub sides: String,
    pub circles: String,
    pub axes: String,
    pub center: String,
    pub construction: String,
}

impl Default for Palette {
    fn default() -> Self {
        Palette {
            points: "#c0392b".into(),
            sides: "#222222".into(),
            circles: "#2e86c1".into(),
            axes: "#1e8449".into(),
            center: "#7d3c98".into(),
            construction: "#999999".into(),
        }
    }
}

/// Explicit view box `(min_x, min_y, width, height)` in model coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ViewBox {
    pub min_x: f64,
    pub min_y: f64,
    pub width: f64,
    pub height: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    pub show_circles: bool,
    pub show_axes: bool,
    pub show_parallel_construction: bool,
    /// `None` fits all finite drawn points with a 5% margin.
    pub viewbox: Option<ViewBox>,
    pub palette: Palette,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            show_circles: true,
            show_axes: true,
            show_parallel_construction: false,
            viewbox: None,
            palette: Palette::default(),
        }
    }
}

fn f(s: &Scalar) -> f64 {
    s.to_f64().expect("rational scalar")
}

fn xy(p: &ProjPoint) -> Option<(f64, f64)> {
    p.to_affine().map(|(x, y)| (f(&x), f(&y)))
}

/// Bounding box of the points with a 5% margin on every side.
pub fn auto_viewbox(points: &[(f64, f64)]) -> ViewBox {
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in points {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    if points.is_empty() {
        (x0, y0, x1, y1) = (-1.0, -1.0, 1.0, 1.0);
    }
    let w = (x1 - x0).max(1e-9);
    let h = (y1 - y0).max(1e-9);
    let (mx, my) = (0.05 * w, 0.05 * h);
    ViewBox { min_x: x0 - mx, min_y: y0 - my, width: w + 2.0 * mx, height: h + 2.0 * my }
}

/// The part of a line inside the view box, as two endpoints.
fn clip(l: &ProjLine, vb: &ViewBox) -> Option<((f64, f64), (f64, f64))> {
    let [u, v, w] = l.coeffs().clone().map(|s| f(&s));
    let (x0, x1, y0, y1) = (vb.min_x, vb.min_x + vb.width, vb.min_y, vb.min_y + vb.height);
    let mut hits: Vec<(f64, f64)> = Vec::new();
    if v != 0.0 {
        for x in [x0, x1] {
            let y = -(u * x + w) / v;
            if (y0..=y1).contains(&y) {
                hits.push((x, y));
            }
        }
    }
    if u != 0.0 {
        for y in [y0, y1] {
            let x = -(v * y + w) / u;
            if (x0..=x1).contains(&x) {
                hits.push((x, y));
            }
        }
    }
    hits.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    hits.dedup();
    match hits.as_slice() {
        [a, .., b] => Some((*a, *b)),
        _ => None,
    }
}

fn line_el(out: &mut String, class: &str, color: &str, width: f64, dash: bool, a: (f64, f64), b: (f64, f64)) {
    let dash = if dash { " stroke-dasharray=\"4 3\" vector-effect=\"non-scaling-stroke\"" } else { " vector-effect=\"non-scaling-stroke\"" };
    let _ = writeln!(
        out,
        r#"  <line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="{width}"{dash}/>"#,
        a.0, -a.1, b.0, -b.1
    );
}

fn dot_el(out: &mut String, class: &str, color: &str, r: f64, p: (f64, f64), label: Option<&str>) {
    let _ = writeln!(out, r#"  <circle class="{class}" cx="{}" cy="{}" r="{r}" fill="{color}"/>"#, p.0, -p.1);
    if let Some(t) = label {
        let _ = writeln!(
            out,
            r#"  <text class="label" x="{}" y="{}" font-size="{}" fill="{color}">{t}</text>"#,
            p.0 + 1.5 * r,
            -p.1 - 1.5 * r,
            4.0 * r
        );
    }
}

/// Renders a configuration given as points over the rationals. Derived objects
/// that cannot be constructed are omitted.
pub fn render_svg(points: &[ProjPoint], opts: &RenderOptions) -> Result<String> {
    if points.iter().any(|p| p.field() != Field::Rational) {
        return Err(GeomError::InvalidArgument("rendering requires rational field".into()));
    }
    let derived: Option<DerivedData> = derive_points(points).ok();
    let center = derived.as_ref().and_then(|d| pencil_of(d.axes()).ok()).and_then(|p| p.center);
    let circles: Vec<Circle> = match (&derived, opts.show_circles) {
        (Some(d), true) => circle_chain(points, d).unwrap_or_default(),
        _ => Vec::new(),
    };

    let mut fit: Vec<(f64, f64)> = points.iter().filter_map(xy).collect();
    if let Some(d) = &derived {
        fit.extend(d.b_points().iter().filter_map(xy));
        if opts.show_parallel_construction {
            fit.extend(d.e_points().iter().filter_map(xy));
        }
    }
    if let Some(m) = center.as_ref().and_then(xy) {
        fit.push(m);
    }
    let vb = opts.viewbox.unwrap_or_else(|| auto_viewbox(&fit));
    let scale = vb.width.max(vb.height);
    let (stroke, dot) = (1.0, scale / 150.0);
    let pal = &opts.palette;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="800" height="{}">"#,
        vb.min_x,
        -(vb.min_y + vb.height),
        vb.width,
        vb.height,
        (800.0 * vb.height / vb.width).round()
    );
    let _ = writeln!(out, r#"  <rect class="background" x="{}" y="{}" width="{}" height="{}" fill="white"/>"#, vb.min_x, -(vb.min_y + vb.height), vb.width, vb.height);

    if let Some(d) = &derived {
        for l in d.sides() {
            if let Some((a, b)) = clip(l, &vb) {
                line_el(&mut out, "side", &pal.sides, stroke, false, a, b);
            }
        }
        for c in &circles {
            let (cx, cy) = c.center();
            let r2 = f(&c.radius_squared());
            if r2 > 0.0 {
                let _ = writeln!(
                    out,
                    r#"  <circle class="circle" cx="{}" cy="{}" r="{}" fill="none" stroke="{}" stroke-width="{stroke}" vector-effect="non-scaling-stroke"/>"#,
                    f(&cx),
                    -f(&cy),
                    r2.sqrt(),
                    pal.circles
                );
            }
        }
        if opts.show_axes {
            for g in d.axes() {
                if let Some((a, b)) = clip(g, &vb) {
                    line_el(&mut out, "axis", &pal.axes, stroke, false, a, b);
                }
            }
        }
        if opts.show_parallel_construction {
            let n = points.len() as i64;
            for i in 1..=n {
                let Some(e) = xy(d.e(i)) else { continue };
                for k in [i - 1, i + 1] {
                    if let Some(a) = xy(&points[crate::config::cyc(k, points.len())]) {
                        line_el(&mut out, "construction", &pal.construction, stroke, true, a, e);
                    }
                }
                dot_el(&mut out, "e-point", &pal.construction, dot * 0.7, e, None);
            }
        }
        for b in d.b_points().iter().filter_map(xy) {
            dot_el(&mut out, "b-point", &pal.sides, dot * 0.6, b, None);
        }
    }
    for (i, p) in points.iter().filter_map(xy).enumerate() {
        dot_el(&mut out, "vertex", &pal.points, dot, p, Some(&format!("A{}", i + 1)));
    }
    if let Some(m) = center.as_ref().and_then(xy) {
        dot_el(&mut out, "center", &pal.center, dot * 1.2, m, Some("M"));
    }
    out.push_str("</svg>\n");
    Ok(out)
}
