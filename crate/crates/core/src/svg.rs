//! SVG 1.1 drawings of rooted arrangements.
//!
//! The root line is a dashed `<line class="root">`, every arrangement line
//! a `<line class="line">` with an arrowhead pointing forward in time, and
//! each distinct crossing a labelled dot. The envelope, when requested, is
//! a `<polyline class="envelope">`.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::arrangement::{upper_envelope, Arrangement};
use crate::geometry::Point2;
use crate::rational::to_f64;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    pub width: f64,
    pub height: f64,
    pub envelope: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width: 640.0,
            height: 420.0,
            envelope: false,
        }
    }
}

struct Frame {
    q_min: f64,
    t_max: f64,
    scale_q: f64,
    scale_t: f64,
    margin: f64,
    height: f64,
}

impl Frame {
    fn x(&self, q: f64) -> f64 {
        self.margin + (q - self.q_min) * self.scale_q
    }

    fn y(&self, t: f64) -> f64 {
        self.height - self.margin - t * self.scale_t
    }
}

pub fn render_svg(p: &Arrangement, opts: &RenderOptions) -> String {
    let r = p.rank();
    let mut crossings: BTreeMap<Point2, Vec<usize>> = BTreeMap::new();
    for i in 1..=r {
        for j in i + 1..=r {
            let lines = crossings.entry(p.crossing(i, j)).or_default();
            for k in [i, j] {
                if !lines.contains(&k) {
                    lines.push(k);
                }
            }
        }
    }
    let t_top = crossings.keys().map(|x| to_f64(&x.t)).fold(0.0, f64::max) * 1.25;
    let t_top = if t_top > 0.0 { t_top } else { 1.0 };
    let ends: Vec<(f64, f64)> = p
        .lines()
        .iter()
        .map(|l| (to_f64(&l.q), to_f64(&l.q) + to_f64(&l.p) * t_top))
        .collect();
    let q_min = ends.iter().map(|e| e.0.min(e.1)).fold(f64::INFINITY, f64::min);
    let q_max = ends.iter().map(|e| e.0.max(e.1)).fold(f64::NEG_INFINITY, f64::max);
    let margin = 30.0;
    let frame = Frame {
        q_min,
        t_max: t_top,
        scale_q: (opts.width - 2.0 * margin) / (q_max - q_min).max(1e-9),
        scale_t: (opts.height - 2.0 * margin) / t_top,
        margin,
        height: opts.height,
    };

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = opts.width,
        h = opts.height
    );
    let _ = writeln!(
        s,
        r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="black"/></marker></defs>"#
    );
    let _ = writeln!(
        s,
        r#"<line class="root" x1="{:.3}" y1="{y:.3}" x2="{:.3}" y2="{y:.3}" stroke="gray" stroke-dasharray="6,4"/>"#,
        frame.x(q_min) - margin / 2.0,
        frame.x(q_max) + margin / 2.0,
        y = frame.y(0.0)
    );
    for (k, (q0, q1)) in ends.iter().enumerate() {
        let _ = writeln!(
            s,
            r#"<line class="line" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="black" marker-end="url(#arrow)"/>"#,
            frame.x(*q0),
            frame.y(0.0),
            frame.x(*q1),
            frame.y(frame.t_max)
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.3}" y="{:.3}" font-size="12" text-anchor="middle">{}</text>"#,
            frame.x(*q0),
            frame.y(0.0) + 16.0,
            k + 1
        );
    }
    for (x, lines) in &crossings {
        let (cx, cy) = (frame.x(to_f64(&x.q)), frame.y(to_f64(&x.t)));
        let label: Vec<String> = lines.iter().map(|k| k.to_string()).collect();
        let _ = writeln!(
            s,
            r#"<circle cx="{cx:.3}" cy="{cy:.3}" r="3" fill="crimson"/><text x="{:.3}" y="{:.3}" font-size="10" fill="crimson">{}</text>"#,
            cx + 5.0,
            cy - 5.0,
            label.join(",")
        );
    }
    if opts.envelope {
        let pts: Vec<String> = upper_envelope(p)
            .iter()
            .map(|v| format!("{:.3},{:.3}", frame.x(to_f64(&v.q)), frame.y(to_f64(&v.t))))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline class="envelope" points="{}" fill="none" stroke="royalblue" stroke-width="3" stroke-opacity="0.6"/>"#,
            pts.join(" ")
        );
    }
    s.push_str("</svg>\n");
    s
}
