//! Minimal SVG rendering of colorings and gadgets.
//!
//! The annulus is centered in a 1000×1000 viewBox with its outer circle at
//! radius 400. The plane's y axis points up, so counter-clockwise angles stay
//! counter-clockwise on screen.

use std::fmt::Write;

use annulus_chroma::{Annulus64, GadgetEmbedding64, RadialColoring64};

pub const SIZE: f64 = 1000.0;
pub const CENTER: f64 = 500.0;
pub const OUTER: f64 = 400.0;

pub const PALETTE: [&str; 7] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#bfa600",
];

fn color(c: u32) -> &'static str {
    PALETTE[c as usize % PALETTE.len()]
}

/// Plane point to viewBox coordinates for an annulus with outer radius `outer`.
pub fn to_view(outer: f64, x: f64, y: f64) -> (f64, f64) {
    let s = OUTER / outer;
    (CENTER + s * x, CENTER - s * y)
}

fn polar(a: &Annulus64, rho: f64, phi: f64) -> (f64, f64) {
    to_view(a.outer_radius(), rho * phi.cos(), rho * phi.sin())
}

fn header(out: &mut String) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
}

fn annulus_outline(out: &mut String, a: &Annulus64) {
    let s = OUTER / a.outer_radius();
    for rho in [a.inner_radius(), a.outer_radius()] {
        let _ = writeln!(
            out,
            r#"<circle class="rim" cx="{CENTER}" cy="{CENTER}" r="{:.9}" fill="none" stroke="black" stroke-width="1"/>"#,
            s * rho
        );
    }
}

/// Annular sector path: outer arc counter-clockwise through its midpoint,
/// then the inner arc back. Splitting at the midpoint keeps each arc at most a
/// half turn, so full-width sectors render too.
fn sector_path(a: &Annulus64, start: f64, width: f64) -> String {
    let (ri, ro) = (a.inner_radius(), a.outer_radius());
    let s = OUTER / ro;
    let mid = start + width / 2.0;
    let end = start + width;
    let p = |rho, phi| polar(a, rho, phi);
    let (o0, om, o1) = (p(ro, start), p(ro, mid), p(ro, end));
    let (i1, im, i0) = (p(ri, end), p(ri, mid), p(ri, start));
    let (so, si) = (s * ro, s * ri);
    format!(
        "M {:.9} {:.9} A {so:.9} {so:.9} 0 0 0 {:.9} {:.9} A {so:.9} {so:.9} 0 0 0 {:.9} {:.9} \
         L {:.9} {:.9} A {si:.9} {si:.9} 0 0 1 {:.9} {:.9} A {si:.9} {si:.9} 0 0 1 {:.9} {:.9} Z",
        o0.0, o0.1, om.0, om.1, o1.0, o1.1, i1.0, i1.1, im.0, im.1, i0.0, i0.1
    )
}

pub fn render_coloring(c: &RadialColoring64) -> String {
    let a = c.annulus();
    let mut out = String::new();
    header(&mut out);
    for i in 0..c.len() {
        let _ = writeln!(
            out,
            r#"<path class="sector" data-index="{i}" d="{}" fill="{}" fill-opacity="0.8" stroke="none"/>"#,
            sector_path(a, c.boundaries()[i], c.sector_width(i)),
            color(c.sector_colors()[i])
        );
    }
    for (i, (&b, &col)) in c.boundaries().iter().zip(c.boundary_colors()).enumerate() {
        let (x1, y1) = polar(a, a.inner_radius(), b);
        let (x2, y2) = polar(a, a.outer_radius(), b);
        let _ = writeln!(
            out,
            r#"<line class="boundary" data-index="{i}" x1="{x1:.9}" y1="{y1:.9}" x2="{x2:.9}" y2="{y2:.9}" stroke="{}" stroke-width="1"/>"#,
            color(col)
        );
    }
    annulus_outline(&mut out, a);
    out.push_str("</svg>\n");
    out
}

pub fn render_gadget(e: &GadgetEmbedding64) -> String {
    let a = &e.annulus;
    let ro = a.outer_radius();
    let mut out = String::new();
    header(&mut out);
    annulus_outline(&mut out, a);
    for &(i, j) in &e.unit_edges {
        let (x1, y1) = to_view(ro, e.vertices[i].x, e.vertices[i].y);
        let (x2, y2) = to_view(ro, e.vertices[j].x, e.vertices[j].y);
        let _ = writeln!(
            out,
            r#"<line class="edge" x1="{x1:.9}" y1="{y1:.9}" x2="{x2:.9}" y2="{y2:.9}" stroke="black" stroke-width="2"/>"#
        );
    }
    for (i, v) in e.vertices.iter().enumerate() {
        let (cx, cy) = to_view(ro, v.x, v.y);
        let _ = writeln!(
            out,
            r#"<circle class="vertex" data-index="{i}" cx="{cx:.9}" cy="{cy:.9}" r="6" fill="{}"/>"#,
            PALETTE[2]
        );
    }
    out.push_str("</svg>\n");
    out
}
