//! Deterministic SVG figures: fixed precision, no timestamps.

use ordkit_core::circular::{first_generation, CircularConfig, PingPongData};
use ordkit_core::realization::{GapReport, Realization};
use std::f64::consts::PI;
use std::fmt::Write;
use std::hash::Hash;

const HEADER: &str = r#"<?xml version="1.0" encoding="UTF-8"?>"#;

/// Orbit points on a line, the gap around x₀ shaded.
pub fn orbit<E: Clone + Eq + Hash>(r: &Realization<E>, report: &GapReport) -> String {
    let (width, height, margin) = (900.0, 160.0, 30.0);
    let (lo, hi) = r.hull();
    let (lo, hi) = (lo.to_f64(), hi.to_f64());
    let span = if hi > lo { hi - lo } else { 1.0 };
    let x = |v: f64| margin + (v - lo) / span * (width - 2.0 * margin);
    let axis = height / 2.0;
    let mut s = String::new();
    writeln!(s, "{HEADER}").ok();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .ok();
    let gap = &report.base_gap;
    let gap_lo = gap.left.as_ref().map_or(lo, |v| v.to_f64());
    let gap_hi = gap.right.as_ref().map_or(hi, |v| v.to_f64());
    writeln!(
        s,
        r##"<rect x="{:.3}" y="{:.3}" width="{:.3}" height="40" fill="#fde68a"/>"##,
        x(gap_lo),
        axis - 20.0,
        x(gap_hi) - x(gap_lo)
    )
    .ok();
    writeln!(
        s,
        r#"<line x1="{margin}" y1="{axis}" x2="{:.3}" y2="{axis}" stroke="black"/>"#,
        width - margin
    )
    .ok();
    for e in r.sorted() {
        let px = x(e.value.to_f64());
        writeln!(
            s,
            r#"<line x1="{px:.3}" y1="{:.3}" x2="{px:.3}" y2="{:.3}" stroke="black" stroke-width="0.5"/>"#,
            axis - 8.0,
            axis + 8.0
        )
        .ok();
    }
    let px = x(r.x0.to_f64());
    writeln!(s, r##"<circle cx="{px:.3}" cy="{axis}" r="3" fill="#dc2626"/>"##).ok();
    writeln!(
        s,
        r#"<text x="{px:.3}" y="{:.3}" font-size="12" text-anchor="middle">x0</text>"#,
        axis + 30.0
    )
    .ok();
    s.push_str("</svg>\n");
    s
}

fn polar(theta: f64, radius: f64) -> (f64, f64) {
    (250.0 + radius * theta.cos(), 250.0 - radius * theta.sin())
}

/// The boundary circle with the orbit points, the first generation
/// labelled and the ping-pong intervals drawn as arcs when available.
pub fn circle(cfg: &CircularConfig, data: Option<&PingPongData>) -> String {
    let radius = 180.0;
    let mut s = String::new();
    writeln!(s, "{HEADER}").ok();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="500" height="500" viewBox="0 0 500 500">"#
    )
    .ok();
    writeln!(s, r#"<circle cx="250" cy="250" r="{radius}" fill="none" stroke="black"/>"#).ok();
    if let Some(data) = data {
        let colors = ["#2563eb", "#dc2626", "#16a34a", "#9333ea"];
        for (j, color) in data.intervals().iter().zip(colors) {
            let (a, b) = (j.interval.left.angle(), j.interval.right.angle());
            let sweep = (b - a).rem_euclid(2.0 * PI);
            let (x1, y1) = polar(a, radius + 8.0);
            let (x2, y2) = polar(b, radius + 8.0);
            let large = u8::from(sweep > PI);
            writeln!(
                s,
                r#"<path d="M {x1:.3} {y1:.3} A {r:.3} {r:.3} 0 {large} 0 {x2:.3} {y2:.3}" fill="none" stroke="{color}" stroke-width="3"><title>{}</title></path>"#,
                j.name,
                r = radius + 8.0
            )
            .ok();
        }
    }
    let labelled = first_generation();
    for e in &cfg.entries {
        let theta = e.point.angle();
        let (px, py) = polar(theta, radius);
        writeln!(s, r#"<circle cx="{px:.3}" cy="{py:.3}" r="2" fill="black"/>"#).ok();
        if labelled.contains(&e.element) {
            let (lx, ly) = polar(theta, radius + 28.0);
            writeln!(
                s,
                r#"<text x="{lx:.3}" y="{ly:.3}" font-size="11" text-anchor="middle">{}</text>"#,
                e.element
            )
            .ok();
        }
    }
    s.push_str("</svg>\n");
    s
}
