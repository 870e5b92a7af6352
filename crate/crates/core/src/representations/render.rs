//! Deterministic text renderings: SVG and ASCII interval tracks, DOT Hasse
//! diagrams and SVG function curves.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use super::{FunctionRep, IntervalKRep, Q};
use crate::order::Poset;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Ascii,
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

fn f(x: Q) -> f64 {
    x.to_f64().unwrap_or(0.0)
}

fn span(rep: &IntervalKRep) -> (Q, Q) {
    let lo = rep.intervals().iter().map(|iv| iv.0).min().unwrap_or_default();
    let hi = rep.intervals().iter().map(|iv| iv.1).max().unwrap_or_default();
    (lo, hi)
}

/// Vertices of each class in order of left endpoint, then index.
fn tracks(rep: &IntervalKRep) -> Vec<Vec<usize>> {
    let mut t = vec![Vec::new(); rep.k()];
    for v in 0..rep.n() {
        t[rep.class(v)].push(v);
    }
    for vs in &mut t {
        vs.sort_by_key(|&v| (rep.left(v), v));
    }
    t
}

pub fn render_intervals(rep: &IntervalKRep, format: RenderFormat) -> String {
    match format {
        RenderFormat::Svg => intervals_svg(rep),
        RenderFormat::Ascii => intervals_ascii(rep),
    }
}

fn intervals_svg(rep: &IntervalKRep) -> String {
    let (lo, hi) = span(rep);
    let width = 640.0;
    let margin = 80.0;
    let scale = if hi > lo { (width - margin - 20.0) / f(hi - lo) } else { 1.0 };
    let x = |q: Q| margin + f(q - lo) * scale;
    let tracks = if rep.n() == 0 { Vec::new() } else { tracks(rep) };
    let row_h = 18.0;
    let mut y = 10.0;
    let mut body = String::new();
    for (c, vs) in tracks.iter().enumerate() {
        if vs.is_empty() {
            continue;
        }
        let colour = PALETTE[c % PALETTE.len()];
        let _ = writeln!(
            body,
            "  <text x=\"4\" y=\"{:.1}\" font-size=\"12\" fill=\"{colour}\">class {c}</text>",
            y + 12.0
        );
        for &v in vs {
            y += row_h;
            let (l, r) = rep.interval(v);
            let _ = writeln!(
                body,
                "  <line x1=\"{:.2}\" y1=\"{y:.1}\" x2=\"{:.2}\" y2=\"{y:.1}\" stroke=\"{colour}\" stroke-width=\"3\" stroke-linecap=\"round\"/>",
                x(l),
                x(r)
            );
            let _ = writeln!(
                body,
                "  <text x=\"{:.2}\" y=\"{:.1}\" font-size=\"11\">{}</text>",
                x(r) + 4.0,
                y + 4.0,
                escape(&rep.label(v))
            );
        }
        y += row_h;
    }
    let height = y + 10.0;
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n{body}</svg>\n"
    )
}

fn intervals_ascii(rep: &IntervalKRep) -> String {
    if rep.n() == 0 {
        return String::new();
    }
    let (lo, hi) = span(rep);
    let cols = 60.0;
    let col = |q: Q| {
        if hi > lo {
            (f(q - lo) / f(hi - lo) * cols).round() as usize
        } else {
            0
        }
    };
    let name_w = (0..rep.n()).map(|v| rep.label(v).len()).max().unwrap_or(1);
    let mut out = String::new();
    for (c, vs) in tracks(rep).iter().enumerate() {
        if vs.is_empty() {
            continue;
        }
        let _ = writeln!(out, "class {c}");
        for &v in vs {
            let (l, r) = rep.interval(v);
            let (a, b) = (col(l), col(r));
            let bar = if a == b { "|".to_string() } else { format!("[{}]", "-".repeat(b - a - 1)) };
            let _ = writeln!(
                out,
                "  {:>name_w$} {}{}  {} .. {}",
                rep.label(v),
                " ".repeat(a),
                bar,
                l,
                r
            );
        }
    }
    out
}

pub fn render_hasse(p: &Poset) -> String {
    p.to_dot()
}

/// Curves as polylines; level `t` is drawn at height `t` from the bottom.
pub fn render_curves(rep: &FunctionRep) -> String {
    let (width, height, margin) = (640.0, 80.0 * rep.k() as f64 + 40.0, 20.0);
    let all: Vec<Q> = (0..rep.n()).flat_map(|v| rep.curve(v).to_vec()).collect();
    let lo = all.iter().copied().min().unwrap_or_default();
    let hi = all.iter().copied().max().unwrap_or_default();
    let sx = if hi > lo { (width - 2.0 * margin) / f(hi - lo) } else { 1.0 };
    let sy = (height - 2.0 * margin) / rep.k() as f64;
    let mut body = String::new();
    for t in 0..=rep.k() {
        let y = height - margin - t as f64 * sy;
        let _ = writeln!(
            body,
            "  <line x1=\"0\" y1=\"{y:.1}\" x2=\"{width}\" y2=\"{y:.1}\" stroke=\"#bbbbbb\"/>"
        );
    }
    for v in 0..rep.n() {
        let points: Vec<String> = rep
            .curve(v)
            .iter()
            .enumerate()
            .map(|(t, &x)| {
                format!(
                    "{:.2},{:.1}",
                    margin + f(x - lo) * sx,
                    height - margin - t as f64 * sy
                )
            })
            .collect();
        let _ = writeln!(
            body,
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>",
            points.join(" "),
            PALETTE[v % PALETTE.len()]
        );
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n{body}</svg>\n"
    )
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> IntervalKRep {
        IntervalKRep::new(
            2,
            vec![(Q::new(0, 1), Q::new(1, 1)), (Q::new(1, 2), Q::new(5, 2)), (Q::new(2, 1), Q::new(3, 1))],
            vec![0, 1, 0],
        )
        .unwrap()
    }

    #[test]
    fn empty_documents() {
        let empty = IntervalKRep::new(1, vec![], vec![]).unwrap();
        let svg = render_intervals(&empty, RenderFormat::Svg);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert_eq!(render_intervals(&empty, RenderFormat::Ascii), "");
    }

    #[test]
    fn p3_structure() {
        let svg = render_intervals(&p3(), RenderFormat::Svg);
        assert_eq!(svg.matches("<line").count(), 3);
        assert_eq!(svg.matches(">class ").count(), 2);
        let ascii = render_intervals(&p3(), RenderFormat::Ascii);
        assert_eq!(ascii.matches("class ").count(), 2);
        assert_eq!(ascii.lines().count(), 5);
        assert_eq!(svg, render_intervals(&p3(), RenderFormat::Svg));
    }

    #[test]
    fn curves_and_hasse() {
        let rep = FunctionRep::new(3, vec![vec![Q::from(0); 4], vec![Q::from(1); 4]]).unwrap();
        let svg = render_curves(&rep);
        assert_eq!(svg.matches("<polyline").count(), 2);
        let dot = render_hasse(&Poset::crown3());
        assert_eq!(dot.matches("arrowhead=none").count(), 6);
    }
}
