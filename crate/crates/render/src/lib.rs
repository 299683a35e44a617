//! SVG figures of convex polygons in the usual visual convention:
//! sides in one color, diameter-graph chords in another, vertices as
//! dots, an optional caption underneath.

use geom_core::ConvexPolygon;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

/// Appearance knobs. The drawing area is a square of `canvas_px`
/// pixels; a caption adds a band below it.
#[derive(Debug, Clone)]
pub struct RenderOptions {
    pub canvas_px: u32,
    pub margin_frac: f64,
    pub side_color: String,
    pub diameter_color: String,
    pub show_labels: bool,
    pub caption: String,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            canvas_px: 600,
            margin_frac: 0.08,
            side_color: "blue".to_string(),
            diameter_color: "black".to_string(),
            show_labels: false,
            caption: String::new(),
        }
    }
}

impl RenderOptions {
    fn validate(&self) -> Result<(), RenderError> {
        if self.canvas_px < 100 {
            return Err(RenderError::Parameter(format!(
                "canvas must be at least 100 px, got {}",
                self.canvas_px
            )));
        }
        if !(0.0..=0.45).contains(&self.margin_frac) {
            return Err(RenderError::Parameter(format!(
                "margin fraction must lie in [0, 0.45], got {}",
                self.margin_frac
            )));
        }
        if self.side_color.is_empty() || self.diameter_color.is_empty() {
            return Err(RenderError::Parameter("colors must be nonempty".to_string()));
        }
        Ok(())
    }
}

fn escape_xml(raw: &str) -> String {
    let mut out = String::with_capacity(raw.len());
    for ch in raw.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(ch),
        }
    }
    out
}

fn px(v: f64) -> String {
    format!("{v:.4}")
}

/// Emit a standalone SVG 1.1 document. The y-axis is flipped at
/// emission so the figure appears in mathematical orientation, and the
/// scale is uniform in x and y. Equal inputs produce identical bytes.
pub fn render_svg(poly: &ConvexPolygon, opts: &RenderOptions) -> Result<String, RenderError> {
    opts.validate()?;
    let canvas = f64::from(opts.canvas_px);
    let caption_band = if opts.caption.is_empty() {
        0.0
    } else {
        canvas / 10.0
    };
    let height = canvas + caption_band;

    let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
    for v in &poly.vertices {
        min_x = min_x.min(v.x);
        max_x = max_x.max(v.x);
        min_y = min_y.min(v.y);
        max_y = max_y.max(v.y);
    }
    let extent = (max_x - min_x).max(max_y - min_y);
    if !(extent.is_finite() && extent > 0.0) {
        return Err(RenderError::Parameter(format!(
            "polygon extent {extent} cannot be scaled onto a canvas"
        )));
    }
    let scale = canvas * (1.0 - 2.0 * opts.margin_frac) / extent;
    let center_x = (min_x + max_x) / 2.0;
    let center_y = (min_y + max_y) / 2.0;
    let map = |v: &geom_core::Point2| {
        (
            canvas / 2.0 + (v.x - center_x) * scale,
            canvas / 2.0 - (v.y - center_y) * scale,
        )
    };

    let side_width = canvas / 300.0;
    let chord_width = canvas / 500.0;
    let dot_radius = canvas / 150.0;
    let side_color = escape_xml(&opts.side_color);
    let chord_color = escape_xml(&opts.diameter_color);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        px(canvas),
        px(height),
        px(canvas),
        px(height)
    ));

    for &(a, b) in &poly.diameter_pairs {
        let (x1, y1) = map(&poly.vertices[a]);
        let (x2, y2) = map(&poly.vertices[b]);
        out.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{chord_color}\" stroke-width=\"{}\"/>\n",
            px(x1),
            px(y1),
            px(x2),
            px(y2),
            px(chord_width)
        ));
    }
    let n = poly.vertices.len();
    for i in 0..n {
        let (x1, y1) = map(&poly.vertices[i]);
        let (x2, y2) = map(&poly.vertices[(i + 1) % n]);
        out.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{side_color}\" stroke-width=\"{}\"/>\n",
            px(x1),
            px(y1),
            px(x2),
            px(y2),
            px(side_width)
        ));
    }
    for v in &poly.vertices {
        let (cx, cy) = map(v);
        out.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{side_color}\"/>\n",
            px(cx),
            px(cy),
            px(dot_radius)
        ));
    }
    if opts.show_labels {
        let font = canvas / 40.0;
        for (i, v) in poly.vertices.iter().enumerate() {
            let (x, y) = map(v);
            out.push_str(&format!(
                "  <text x=\"{}\" y=\"{}\" font-size=\"{}\">{i}</text>\n",
                px(x + dot_radius * 1.5),
                px(y - dot_radius * 1.5),
                px(font)
            ));
        }
    }
    if !opts.caption.is_empty() {
        out.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"{}\">{}</text>\n",
            px(canvas / 2.0),
            px(canvas + caption_band * 0.7),
            px(canvas / 30.0),
            escape_xml(&opts.caption)
        ));
    }
    out.push_str("</svg>\n");
    Ok(out)
}
