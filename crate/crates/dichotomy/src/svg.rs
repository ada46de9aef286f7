//! SVG rendering of planar embeddings and unit-circle arrangements.

use std::fmt::Write;

use dichotomy_core::arrangement::{ArrangementSummary, UnitDiskFamily};
use dichotomy_core::{DichotomousGraph, EdgeKind, Embedding, Space};

const SHORT_STYLE: &str = r##"stroke="#1f4fd8" stroke-width="1.5""##;
const LONG_STYLE: &str = r##"stroke="#d81f2a" stroke-width="1.5" stroke-dasharray="6 4""##;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderOptions {
    pub width: u32,
    pub height: u32,
    /// Circles of radius `threshold` around every vertex.
    pub show_unit_circles: bool,
    pub label_vertices: bool,
}

impl Default for RenderOptions {
    fn default() -> RenderOptions {
        RenderOptions { width: 800, height: 800, show_unit_circles: false, label_vertices: true }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("SVG output needs a planar Euclidean embedding, got {0:?}")]
pub struct NotPlanar(pub Space);

struct Frame {
    x0: f64,
    y1: f64,
    scale: f64,
    pad: f64,
}

impl Frame {
    fn fit(points: impl Iterator<Item = [f64; 2]>, extra: f64, opts: &RenderOptions) -> Frame {
        let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
        for p in points {
            for k in 0..2 {
                lo[k] = lo[k].min(p[k] - extra);
                hi[k] = hi[k].max(p[k] + extra);
            }
        }
        if !lo[0].is_finite() {
            lo = [-1.0, -1.0];
            hi = [1.0, 1.0];
        }
        let pad = 20.0;
        let span = ((hi[0] - lo[0]).max(hi[1] - lo[1])).max(1e-9);
        let scale = (f64::from(opts.width.min(opts.height)) - 2.0 * pad) / span;
        Frame { x0: lo[0], y1: hi[1], scale, pad }
    }

    fn map(&self, p: [f64; 2]) -> (f64, f64) {
        (self.pad + (p[0] - self.x0) * self.scale, self.pad + (self.y1 - p[1]) * self.scale)
    }
}

fn header(opts: &RenderOptions) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
        w = opts.width,
        h = opts.height
    )
}

/// Points, solid short edges and dashed long edges.
pub fn render_embedding(
    g: &DichotomousGraph,
    emb: &Embedding,
    threshold: f64,
    opts: &RenderOptions,
) -> Result<String, NotPlanar> {
    if emb.space() != Space::Euclidean(2) {
        return Err(NotPlanar(emb.space()));
    }
    let pts: Vec<[f64; 2]> = emb.coords().iter().map(|p| [p.0[0], p.0[1]]).collect();
    let extra = if opts.show_unit_circles { threshold } else { 0.0 };
    let frame = Frame::fit(pts.iter().copied(), extra, opts);
    let mut s = header(opts);
    if opts.show_unit_circles {
        for &p in &pts {
            let (x, y) = frame.map(p);
            let _ = writeln!(
                s,
                "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"{:.3}\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.5\"/>",
                threshold * frame.scale
            );
        }
    }
    for e in g.edges() {
        let (a, b) = (frame.map(pts[e.u.0]), frame.map(pts[e.v.0]));
        let style = if e.kind == EdgeKind::Short { SHORT_STYLE } else { LONG_STYLE };
        let _ = writeln!(s, "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" {style}/>", a.0, a.1, b.0, b.1);
    }
    for (i, &p) in pts.iter().enumerate() {
        let (x, y) = frame.map(p);
        let _ = writeln!(s, "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"4\" fill=\"black\"/>");
        if opts.label_vertices {
            let _ = writeln!(s, "<text x=\"{:.3}\" y=\"{:.3}\" font-size=\"12\">{i}</text>", x + 5.0, y - 5.0);
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// Unit circles with one witness point per realized label.
pub fn render_arrangement(family: &UnitDiskFamily, summary: &ArrangementSummary, opts: &RenderOptions) -> String {
    let frame = Frame::fit(family.centers().iter().copied(), 1.0, opts);
    let mut s = header(opts);
    for &c in family.centers() {
        let (x, y) = frame.map(c);
        let _ = writeln!(
            s,
            "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"{:.3}\" fill=\"none\" stroke=\"#1f4fd8\" stroke-width=\"1\"/>",
            frame.scale
        );
    }
    let n = family.len();
    for (label, &w) in summary.labels.iter().zip(&summary.witnesses) {
        let (x, y) = frame.map(w);
        if !(0.0..=f64::from(opts.width)).contains(&x) || !(0.0..=f64::from(opts.height)).contains(&y) {
            continue;
        }
        let _ = writeln!(s, "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"2\" fill=\"#d81f2a\"/>");
        if opts.label_vertices {
            let _ = writeln!(s, "<text x=\"{:.3}\" y=\"{:.3}\" font-size=\"9\">{}</text>", x + 3.0, y - 3.0, label.to_bitstring(n));
        }
    }
    s.push_str("</svg>\n");
    s
}
